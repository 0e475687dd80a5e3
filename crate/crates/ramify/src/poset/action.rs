//! Symmetric-group actions on posets by relabeling, orbit decompositions,
//! invariant cohomology, and the stabilization table.

use super::build::{build_poset, MoveKind};
use super::graded::GradedPoset;
use super::homology::{bareiss_rank, chains_in};
use super::label::StratumLabel;
use super::set_partition::SetPartition;
use crate::types::{admissibility, enumerate_types, RamificationType};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

/// Permutations of {1..n}; `perm[i]` is the 1-based image of i + 1.
#[derive(Debug, Clone)]
pub struct GroupAction {
    n: usize,
    generators: Vec<Vec<u32>>,
    elements: Vec<Vec<u32>>,
}

impl GroupAction {
    /// The full symmetric group on {1..n}.
    pub fn symmetric(n: usize) -> Self {
        let gens: Vec<Vec<u32>> = if n < 2 {
            Vec::new()
        } else {
            let transposition: Vec<u32> = (1..=n as u32)
                .map(|i| match i {
                    1 => 2,
                    2 => 1,
                    other => other,
                })
                .collect();
            let cycle: Vec<u32> = (1..=n as u32).map(|i| i % n as u32 + 1).collect();
            vec![transposition, cycle]
        };
        Self::from_generators(n, gens)
    }

    /// Closure of a generating set.
    pub fn from_generators(n: usize, generators: Vec<Vec<u32>>) -> Self {
        let identity: Vec<u32> = (1..=n as u32).collect();
        let mut elements = vec![identity.clone()];
        let mut seen: HashMap<Vec<u32>, ()> = HashMap::new();
        seen.insert(identity, ());
        let mut frontier = vec![0usize];
        while let Some(i) = frontier.pop() {
            let current = elements[i].clone();
            for g in &generators {
                let composed: Vec<u32> = current.iter().map(|&v| g[v as usize - 1]).collect();
                if !seen.contains_key(&composed) {
                    seen.insert(composed.clone(), ());
                    elements.push(composed);
                    frontier.push(elements.len() - 1);
                }
            }
        }
        Self {
            n,
            generators,
            elements,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    /// Every group element (the closure of the generators).
    pub fn elements(&self) -> &[Vec<u32>] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Labels a permutation can act on by relabeling the ground set.
pub trait Relabel {
    fn relabel(&self, perm: &[u32]) -> Self;
}

impl Relabel for SetPartition {
    fn relabel(&self, perm: &[u32]) -> Self {
        SetPartition::relabel(self, perm)
    }
}

impl Relabel for StratumLabel {
    fn relabel(&self, perm: &[u32]) -> Self {
        StratumLabel::relabel(self, perm)
    }
}

/// The index permutation a group element induces on the poset; panics if the
/// poset is not closed under the action.
pub fn element_map<L: Relabel + Clone + Eq + Hash>(
    poset: &GradedPoset<L>,
    perm: &[u32],
) -> Vec<usize> {
    (0..poset.len())
        .map(|i| {
            let image = poset.element(i).relabel(perm);
            poset
                .index_of(&image)
                .expect("the action must preserve the poset")
        })
        .collect()
}

/// Checks that the action permutes elements preserving covers and rank.
pub fn action_preserves_structure<L: Relabel + Clone + Eq + Hash>(
    poset: &GradedPoset<L>,
    action: &GroupAction,
) -> bool {
    action.generators().iter().all(|perm| {
        let map = element_map(poset, perm);
        (0..poset.len()).all(|i| poset.rank(map[i]) == poset.rank(i))
            && poset
                .cover_pairs()
                .iter()
                .all(|&(u, v)| poset.covers_up(map[u]).contains(&map[v]))
    })
}

#[derive(Debug, Clone)]
pub struct Orbit {
    pub representative: usize,
    pub members: Vec<usize>,
    pub length: u32,
}

/// Orbits of poset elements under the action, sorted by
/// (length, representative). Orbit closure needs only the generators.
pub fn orbits<L: Relabel + Clone + Eq + Hash>(
    poset: &GradedPoset<L>,
    action: &GroupAction,
) -> Vec<Orbit> {
    let generator_maps: Vec<Vec<usize>> = action
        .generators()
        .iter()
        .map(|perm| element_map(poset, perm))
        .collect();
    let mut seen = vec![false; poset.len()];
    let mut out = Vec::new();
    for start in 0..poset.len() {
        if seen[start] {
            continue;
        }
        let mut members = vec![start];
        seen[start] = true;
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            for map in &generator_maps {
                let w = map[v];
                if !seen[w] {
                    seen[w] = true;
                    members.push(w);
                    frontier.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(Orbit {
            representative: members[0],
            members,
            length: poset.rank(start),
        });
    }
    out.sort_by_key(|o| (o.length, o.representative));
    out
}

/// Orbit decomposition of a stratum-poset model, with each orbit's
/// ramification type.
pub fn orbit_decomposition(
    poset: &GradedPoset<StratumLabel>,
    action: &GroupAction,
) -> Vec<(Orbit, RamificationType)> {
    orbits(poset, action)
        .into_iter()
        .map(|orbit| {
            let ty = poset.element(orbit.representative).ramification_type();
            (orbit, ty)
        })
        .collect()
}

/// Dimensions of the invariant subspace of H̃^*(0̂, λ) under the stabilizer
/// of λ, computed on the invariant subcomplex (orbit sums of chains; exact
/// integer ranks). Invariants commute with cohomology in characteristic 0.
pub fn invariant_cohomology<L: Relabel + Clone + Eq + Hash>(
    poset: &GradedPoset<L>,
    lambda: usize,
    action: &GroupAction,
) -> BTreeMap<i32, usize> {
    let bottom = poset.bottom();
    assert!(poset.le(bottom, lambda));
    let mut out = BTreeMap::new();
    if lambda == bottom {
        out.insert(-2, 1);
        return out;
    }
    let interior = poset.open_interval(bottom, lambda);
    if interior.is_empty() {
        out.insert(-1, 1);
        return out;
    }

    // Stabilizer of λ, as index maps of the whole poset.
    let stabilizer_maps: Vec<Vec<usize>> = action
        .elements()
        .iter()
        .filter(|perm| &poset.element(lambda).relabel(perm) == poset.element(lambda))
        .map(|perm| element_map(poset, perm))
        .collect();

    let chains = chains_in(poset, &interior);
    // Orbit id per chain, per dimension.
    let mut orbit_ids: Vec<HashMap<Vec<usize>, usize>> = Vec::new();
    let mut orbit_reps: Vec<Vec<Vec<usize>>> = Vec::new();
    for level in &chains {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut reps: Vec<Vec<usize>> = Vec::new();
        for chain in level {
            if ids.contains_key(chain) {
                continue;
            }
            let id = reps.len();
            // The orbit of this chain under the stabilizer.
            for map in &stabilizer_maps {
                let image: Vec<usize> = chain.iter().map(|&e| map[e]).collect();
                ids.entry(image).or_insert(id);
            }
            reps.push(chain.clone());
        }
        orbit_ids.push(ids);
        orbit_reps.push(reps);
    }

    // Boundary ranks on the invariant subcomplex. Row space: orbits one
    // dimension down; the augmentation row has rank 1.
    let mut ranks = Vec::with_capacity(chains.len() + 1);
    ranks.push(usize::from(!orbit_reps[0].is_empty()));
    for k in 1..chains.len() {
        let rows = orbit_reps[k - 1].len();
        let cols = orbit_reps[k].len();
        let mut matrix = vec![vec![BigInt::zero(); cols]; rows];
        for (col, rep) in orbit_reps[k].iter().enumerate() {
            // ∂ of the full orbit sum of `rep`; sum face coefficients over
            // the orbit by pushing every stabilizer image of every face.
            for map in &stabilizer_maps {
                let image: Vec<usize> = rep.iter().map(|&e| map[e]).collect();
                for omit in 0..image.len() {
                    let face: Vec<usize> = image
                        .iter()
                        .enumerate()
                        .filter_map(|(i, &e)| (i != omit).then_some(e))
                        .collect();
                    let row = orbit_ids[k - 1][&face];
                    let sign = if omit % 2 == 0 { 1 } else { -1 };
                    matrix[row][col] += sign;
                }
            }
        }
        // Each chain orbit was summed |stabilizer| / |orbit| ... in fact each
        // image of `rep` was visited once per stabilizer element mapping to
        // it; the overcount is a uniform positive scalar per column, which
        // does not change the rank.
        ranks.push(bareiss_rank(matrix));
    }

    for k in 0..chains.len() {
        let dim = orbit_reps[k].len();
        let rank_in = ranks[k];
        let rank_out = ranks.get(k + 1).copied().unwrap_or(0);
        let betti = dim - rank_in - rank_out;
        if betti > 0 {
            out.insert(k as i32, betti);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Stabilization of orbit counts across n
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizationRow {
    pub n: u32,
    /// Length-m orbits of the model under the symmetric group.
    pub model_orbits: usize,
    /// Length-m types passing the combinatorial gate at this n.
    pub combinatorially_admissible: usize,
    /// Length-m types passing both gates at this n.
    pub fully_admissible: usize,
}

#[derive(Debug, Clone)]
pub struct StabilizationTable {
    pub m: u32,
    pub rows: Vec<StabilizationRow>,
    /// First n in range from which the model orbit count stays constant.
    pub stabilized_at: Option<u32>,
}

/// Builds the model (truncated at length m) for each n in the range and
/// tabulates length-m orbit counts against the admissibility-filtered type
/// counts.
pub fn stabilization_check(m: u32, n_range: std::ops::RangeInclusive<u32>) -> StabilizationTable {
    let types = enumerate_types(m);
    let mut rows = Vec::new();
    for n in n_range {
        let result = build_poset(n as usize, Some(m));
        let action = GroupAction::symmetric(n as usize);
        let model_orbits = orbits(&result.poset, &action)
            .into_iter()
            .filter(|o| o.length == m)
            .count();
        let combinatorially_admissible = types
            .iter()
            .filter(|t| admissibility(t, n).combinatorial)
            .count();
        let fully_admissible = types
            .iter()
            .filter(|t| {
                let report = admissibility(t, n);
                report.combinatorial && report.affine
            })
            .count();
        rows.push(StabilizationRow {
            n,
            model_orbits,
            combinatorially_admissible,
            fully_admissible,
        });
    }
    let stabilized_at = rows
        .last()
        .map(|last| last.model_orbits)
        .and_then(|final_count| {
            let mut at = None;
            for row in rows.iter().rev() {
                if row.model_orbits == final_count {
                    at = Some(row.n);
                } else {
                    break;
                }
            }
            at
        });
    StabilizationTable {
        m,
        rows,
        stabilized_at,
    }
}

/// The moves annotate covers; re-exported here so reports can show them.
pub fn move_names(kinds: &[MoveKind]) -> Vec<&'static str> {
    kinds.iter().map(MoveKind::as_str).collect()
}
