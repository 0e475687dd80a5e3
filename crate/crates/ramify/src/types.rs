//! Ramification types and the counting function `c(m)`.
//!
//! A degree-(n+1) polynomial map of the affine line ramifies over finitely
//! many branch points; over each branch point the local picture is a
//! [`BranchProfile`] (the multiset of ramification indices), and the whole map
//! is summarized by a [`RamificationType`] (the multiset of profiles). Types
//! are graded by their *length*: each profile contributes Σ(e−1) − 1, and the
//! length of a type is the sum of contributions. Simple branch points (profile
//! `{2}`) contribute 0 and are dropped by [`RamificationType::essential`].
//!
//! The counting function is exposed under two conventions that disagree from
//! m = 2 on:
//!
//! * [`Convention::Eq12`] — sum over weakly increasing compositions
//!   n₁ ≤ … ≤ n_k of m of the products p(n₁+1)⋯p(n_k+1). Equal-contribution
//!   slots are filled independently, so unordered collections with repeated
//!   contributions are counted more than once.
//! * [`Convention::Multiset`] — the number of multisets of profiles with total
//!   contribution m, i.e. the literal number of length-m types.
//!
//! Neither is hard-coded as "the" count anywhere downstream: the finite-field
//! census adjudicates which one the point count follows.

use crate::partitions::{enumerate_partitions, partition_table};
use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TypeError {
    #[error("branch profile must be nonempty")]
    EmptyProfile,
    #[error("ramification index {0} is below 2")]
    IndexTooSmall(u32),
    #[error("m = 0 rejected: the length-0 type is unique and not counted")]
    ZeroLength,
}

/// Multiset of ramification indices over a single branch point.
///
/// Indices are stored sorted ascending; every index is at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BranchProfile {
    indices: Vec<u32>,
}

impl BranchProfile {
    pub fn new(mut indices: Vec<u32>) -> Result<Self, TypeError> {
        if indices.is_empty() {
            return Err(TypeError::EmptyProfile);
        }
        if let Some(&bad) = indices.iter().find(|&&e| e < 2) {
            return Err(TypeError::IndexTooSmall(bad));
        }
        indices.sort_unstable();
        Ok(Self { indices })
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    /// Number of ramification points over the branch point.
    pub fn point_count(&self) -> usize {
        self.indices.len()
    }

    /// Ramification length over the branch point: Σ(e − 1) ≥ 1.
    pub fn local_ram_length(&self) -> u32 {
        self.indices.iter().map(|&e| e - 1).sum()
    }

    /// Contribution to the type length: Σ(e − 1) − 1 ≥ 0.
    pub fn contribution(&self) -> u32 {
        self.local_ram_length() - 1
    }

    /// Total fiber multiplicity Σe; a degree-(n+1) map needs Σe ≤ n + 1.
    pub fn fiber_multiplicity(&self) -> u32 {
        self.indices.iter().sum()
    }

    /// A profile is simple when it is exactly `{2}`; simple profiles are the
    /// ones dropped when a type is reduced to its essential part.
    pub fn is_simple(&self) -> bool {
        self.indices == [2]
    }
}

impl PartialOrd for BranchProfile {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BranchProfile {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.contribution(), &self.indices).cmp(&(other.contribution(), &other.indices))
    }
}

impl fmt::Display for BranchProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.indices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Multiset of branch profiles; profiles are kept sorted by
/// (contribution, indices), which makes equality multiset equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RamificationType {
    profiles: Vec<BranchProfile>,
}

impl RamificationType {
    pub fn new(mut profiles: Vec<BranchProfile>) -> Self {
        profiles.sort();
        Self { profiles }
    }

    /// The unique type of length 0 with no recorded branch points.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn profiles(&self) -> &[BranchProfile] {
        &self.profiles
    }

    pub fn is_empty(&self) -> bool {
        self.profiles.is_empty()
    }

    /// Type length Σ_j (Σ_i (e_j^i − 1) − 1). See also [`type_length`].
    pub fn length(&self) -> u32 {
        self.profiles.iter().map(|p| p.contribution()).sum()
    }

    /// Σ over all profiles of Σ(e − 1): the total differential length, which
    /// equals n for a type realized in degree n + 1.
    pub fn total_differential_length(&self) -> u32 {
        self.profiles.iter().map(|p| p.local_ram_length()).sum()
    }

    /// Σ_j (k_j − 1), the excess of ramification points over branch points.
    pub fn sibling_excess(&self) -> u32 {
        self.profiles.iter().map(|p| p.point_count() as u32 - 1).sum()
    }

    /// Drops simple (`{2}`) profiles, leaving the part of the type that the
    /// stabilized family of types records.
    pub fn essential(&self) -> RamificationType {
        RamificationType {
            profiles: self
                .profiles
                .iter()
                .filter(|p| !p.is_simple())
                .cloned()
                .collect(),
        }
    }

    /// Nested-array form used for JSON: a sorted list of sorted index lists,
    /// e.g. `[[2,2],[3]]`.
    pub fn to_nested(&self) -> Vec<Vec<u32>> {
        self.profiles.iter().map(|p| p.indices.clone()).collect()
    }

    pub fn from_nested(nested: Vec<Vec<u32>>) -> Result<Self, TypeError> {
        let profiles = nested
            .into_iter()
            .map(BranchProfile::new)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(profiles))
    }
}

impl fmt::Display for RamificationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.profiles.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Type length computed along both printed routes,
/// Σ_j (Σ_i (e_j^i − 1) − 1) and Σ_{i,j} (e_j^i − 2) + Σ_j (k_j − 1),
/// asserting they agree.
pub fn type_length(ty: &RamificationType) -> u32 {
    let direct: u32 = ty.profiles().iter().map(|p| p.contribution()).sum();
    let split: u32 = ty
        .profiles()
        .iter()
        .map(|p| p.indices().iter().map(|&e| e - 2).sum::<u32>() + (p.point_count() as u32 - 1))
        .sum();
    assert_eq!(direct, split, "the two length formulas disagree on {ty}");
    direct
}

/// Which reading of the counting function to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// Literal formula: Σ over n₁ ≤ … ≤ n_k = m of Π p(n_j + 1).
    Eq12,
    /// Number of multisets of profiles of total contribution m.
    Multiset,
}

/// The counting function c(m) under the requested convention. `m = 0` is
/// rejected; the unique length-0 type is not part of the count.
pub fn c_of_m(m: u32, convention: Convention) -> Result<BigUint, TypeError> {
    if m == 0 {
        return Err(TypeError::ZeroLength);
    }
    let m = m as usize;
    Ok(match convention {
        Convention::Eq12 => {
            let p = partition_table(m + 1);
            let mut total = BigUint::zero();
            for parts in enumerate_partitions(m) {
                let mut product = BigUint::one();
                for &n_j in &parts {
                    product *= &p[n_j as usize + 1];
                }
                total += product;
            }
            total
        }
        Convention::Multiset => {
            // Generating function Π_{c ≥ 1} (1 − x^c)^{-p(c+1)}: there are
            // p(c+1) profile shapes of contribution c, chosen with repetition.
            let p = partition_table(m + 1);
            let mut ways = vec![BigUint::zero(); m + 1];
            ways[0] = BigUint::one();
            for c in 1..=m {
                let kinds = &p[c + 1];
                let mut next = vec![BigUint::zero(); m + 1];
                for w in 0..=m {
                    if ways[w].is_zero() {
                        continue;
                    }
                    let mut j = 0usize;
                    while w + j * c <= m {
                        let picks = multichoose(kinds, j);
                        next[w + j * c] += &ways[w] * picks;
                        j += 1;
                    }
                }
                ways = next;
            }
            ways[m].clone()
        }
    })
}

/// Multisets of size `take` from `kinds` distinguishable kinds:
/// C(kinds + take − 1, take).
fn multichoose(kinds: &BigUint, take: usize) -> BigUint {
    if take == 0 {
        return BigUint::one();
    }
    binomial(kinds + BigUint::from(take - 1), BigUint::from(take))
}

/// All branch profiles of a given contribution, sorted ascending. A profile
/// of contribution c is a partition of c + 1 shifted up by one in every part,
/// so there are p(c + 1) of them.
pub fn profiles_of_contribution(c: u32) -> Vec<BranchProfile> {
    let mut out: Vec<BranchProfile> = enumerate_partitions(c as usize + 1)
        .into_iter()
        .map(|parts| {
            BranchProfile::new(parts.into_iter().map(|d| d + 1).collect())
                .expect("parts are positive")
        })
        .collect();
    out.sort();
    out
}

/// All ramification types of length exactly `m`, in canonical order.
/// `m = 0` yields only the empty type.
pub fn enumerate_types(m: u32) -> Vec<RamificationType> {
    if m == 0 {
        return vec![RamificationType::empty()];
    }
    let mut pool: Vec<BranchProfile> = (1..=m).flat_map(profiles_of_contribution).collect();
    pool.sort();
    let mut out = Vec::new();
    let mut current: Vec<BranchProfile> = Vec::new();
    pick(&pool, 0, m, &mut current, &mut out);
    out
}

fn pick(
    pool: &[BranchProfile],
    from: usize,
    remaining: u32,
    current: &mut Vec<BranchProfile>,
    out: &mut Vec<RamificationType>,
) {
    if remaining == 0 {
        out.push(RamificationType {
            profiles: current.clone(),
        });
        return;
    }
    for i in from..pool.len() {
        let c = pool[i].contribution();
        if c > remaining {
            // Pool is sorted by contribution first; nothing later fits.
            break;
        }
        current.push(pool[i].clone());
        pick(pool, i, remaining - c, current, out);
        current.pop();
    }
}

/// Admissibility of a type in degree n + 1, under both criteria at once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub ty: RamificationType,
    pub n: u32,
    pub combinatorial: bool,
    pub affine: bool,
    pub reasons: Vec<String>,
}

/// Checks both admissibility predicates for `ty` at a given n.
///
/// Combinatorial: Σ(e − 1) ≤ n and every fiber fits, Σ_i e_j^i ≤ n + 1.
/// Affine: n − Σ(e − 1) ≥ Σ(k_j − 1).
pub fn admissibility(ty: &RamificationType, n: u32) -> AdmissibilityReport {
    let mut reasons = Vec::new();
    let total = ty.total_differential_length();
    let mut combinatorial = true;
    if total > n {
        combinatorial = false;
        reasons.push(format!(
            "total differential length {total} exceeds n = {n}"
        ));
    }
    for p in ty.profiles() {
        let need = p.fiber_multiplicity();
        if need > n + 1 {
            combinatorial = false;
            reasons.push(format!(
                "fiber capacity: profile {p} occupies {need} points of a degree-{} fiber",
                n + 1
            ));
        }
    }
    let excess = ty.sibling_excess();
    let affine = n >= total && n - total >= excess;
    if !affine {
        reasons.push(format!(
            "affine inequality: n - Σ(e-1) = {} < Σ(k-1) = {excess}",
            n as i64 - total as i64
        ));
    }
    debug_assert!(!affine || combinatorial, "affine admissibility must imply combinatorial");
    AdmissibilityReport {
        ty: ty.clone(),
        n,
        combinatorial,
        affine,
        reasons,
    }
}

pub fn is_combinatorially_admissible(ty: &RamificationType, n: u32) -> bool {
    admissibility(ty, n).combinatorial
}

pub fn is_affine_admissible(ty: &RamificationType, n: u32) -> bool {
    admissibility(ty, n).affine
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdmissibilityKind {
    Combinatorial,
    Affine,
}

/// Smallest n for which *every* type of length m passes the predicate,
/// found by scanning n upward over the enumerated types. The closed forms
/// 2m + 1 and 3m are things to verify against this, not inputs to it.
pub fn minimal_admissible_n(m: u32, kind: AdmissibilityKind) -> u32 {
    assert!(m >= 1, "minimal_admissible_n needs m >= 1");
    let types = enumerate_types(m);
    let mut n = 1;
    loop {
        let all_pass = types.iter().all(|ty| {
            let report = admissibility(ty, n);
            match kind {
                AdmissibilityKind::Combinatorial => report.combinatorial,
                AdmissibilityKind::Affine => report.affine,
            }
        });
        if all_pass {
            return n;
        }
        n += 1;
    }
}
