//! Finite bounded-below posets given by cover relations, with reachability,
//! rank, Möbius function and the local semimodularity check.

use std::collections::HashMap;
use std::hash::Hash;

/// Dense bitset row sized for poset reachability matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn new(bits: usize) -> Self {
        Self {
            words: vec![0; bits.div_ceil(64)],
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn or_assign(&mut self, other: &BitRow) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    /// self := self & other.
    pub fn and_assign(&mut self, other: &BitRow) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
    }

    /// self := self & !other.
    pub fn and_not_assign(&mut self, other: &BitRow) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_set(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(k * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }
}

/// A failed semimodularity instance: α and β cover x inside [x, y] but have
/// no common cover below y.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemimodularityFailure {
    pub x: usize,
    pub alpha: usize,
    pub beta: usize,
    pub y: usize,
}

/// Finite poset presented by covers, with a bottom element and an optional
/// top. Ranks are taken from the builder (or longest-path defaults); whether
/// covers raise rank by exactly one is a *checkable* property
/// ([`GradedPoset::check_graded`]), since quotient length functions
/// intentionally violate it at the bottom.
#[derive(Debug, Clone)]
pub struct GradedPoset<L> {
    elements: Vec<L>,
    index: HashMap<L, usize>,
    rank: Vec<u32>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    bottom: usize,
    top: Option<usize>,
    reach: Vec<BitRow>,
}

impl<L: Clone + Eq + Hash> GradedPoset<L> {
    /// Builds from elements and cover pairs (lower, upper). Ranks default to
    /// longest-chain-from-bottom. Panics on cycles or a bottom that is not
    /// below everything.
    pub fn from_parts(
        elements: Vec<L>,
        covers: &[(usize, usize)],
        bottom: usize,
        top: Option<usize>,
        ranks: Option<Vec<u32>>,
    ) -> Self {
        let n = elements.len();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(lo, hi) in covers {
            up[lo].push(hi);
            down[hi].push(lo);
        }
        for list in up.iter_mut().chain(down.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }

        // Topological order by Kahn; also detects cycles.
        let mut indegree: Vec<usize> = down.iter().map(Vec::len).collect();
        let mut queue: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(v) = queue.pop() {
            topo.push(v);
            for &w in &up[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    queue.push(w);
                }
            }
        }
        assert_eq!(topo.len(), n, "cover relation contains a cycle");

        // Reachability, processed top-down so successors are complete.
        let mut reach = vec![BitRow::new(n); n];
        for &v in topo.iter().rev() {
            let mut row = BitRow::new(n);
            row.set(v);
            for &w in &up[v] {
                row.or_assign(&reach[w]);
            }
            reach[v] = row;
        }
        assert!(
            (0..n).all(|i| reach[bottom].get(i)),
            "bottom must lie below every element"
        );

        let rank = ranks.unwrap_or_else(|| {
            let mut r = vec![0u32; n];
            for &v in &topo {
                for &w in &up[v] {
                    r[w] = r[w].max(r[v] + 1);
                }
            }
            r
        });

        let index = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        Self {
            elements,
            index,
            rank,
            up,
            down,
            bottom,
            top,
            reach,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[L] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &L {
        &self.elements[i]
    }

    pub fn index_of(&self, label: &L) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn rank(&self, i: usize) -> u32 {
        self.rank[i]
    }

    pub fn max_rank(&self) -> u32 {
        self.rank.iter().copied().max().unwrap_or(0)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> Option<usize> {
        self.top
    }

    pub fn covers_up(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn covers_down(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    /// All cover pairs (lower, upper), sorted.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for (lo, ups) in self.up.iter().enumerate() {
            for &hi in ups {
                pairs.push((lo, hi));
            }
        }
        pairs
    }

    #[inline]
    pub fn le(&self, u: usize, v: usize) -> bool {
        self.reach[u].get(v)
    }

    pub fn lt(&self, u: usize, v: usize) -> bool {
        u != v && self.le(u, v)
    }

    /// Elements strictly between u and v, ascending by (rank, index).
    pub fn open_interval(&self, u: usize, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.len())
            .filter(|&t| t != u && t != v && self.le(u, t) && self.le(t, v))
            .collect();
        out.sort_by_key(|&t| (self.rank[t], t));
        out
    }

    /// Every cover must raise rank by exactly 1; returns the first violation.
    pub fn check_graded(&self) -> Result<(), (usize, usize)> {
        for (lo, hi) in self.cover_pairs() {
            if self.rank[hi] != self.rank[lo] + 1 {
                return Err((lo, hi));
            }
        }
        Ok(())
    }

    /// Möbius values μ(u, v) for all v, by the standard recursion over
    /// [u, v]; entries for v not above u are 0.
    pub fn mobius_from(&self, u: usize) -> Vec<i128> {
        let mut mu = vec![0i128; self.len()];
        let mut order: Vec<usize> = (0..self.len()).filter(|&v| self.le(u, v)).collect();
        order.sort_by_key(|&v| (self.rank[v], v));
        for &v in &order {
            if v == u {
                mu[u] = 1;
                continue;
            }
            let mut below = 0i128;
            for &t in &order {
                if t != v && self.le(t, v) {
                    below += mu[t];
                }
            }
            mu[v] = -below;
        }
        mu
    }

    pub fn mobius(&self, u: usize, v: usize) -> i128 {
        assert!(self.le(u, v), "mobius needs u <= v");
        self.mobius_from(u)[v]
    }

    /// Local semimodularity: for every interval [x, y], any two distinct
    /// covers of x inside the interval must have a common cover inside it.
    /// Returns the first failure found, if any.
    pub fn is_locally_semimodular(&self) -> Option<SemimodularityFailure> {
        for x in 0..self.len() {
            let ups = &self.up[x];
            for (i, &alpha) in ups.iter().enumerate() {
                for &beta in &ups[i + 1..] {
                    // y candidates: everything above both alpha and beta.
                    let mut above_both = self.reach[alpha].clone();
                    above_both.and_assign(&self.reach[beta]);
                    if above_both.is_empty() {
                        continue;
                    }
                    // Common covers t of alpha and beta.
                    let common: Vec<usize> = self.up[alpha]
                        .iter()
                        .copied()
                        .filter(|t| self.up[beta].contains(t))
                        .collect();
                    // Bad y: above both, but above no common cover.
                    let mut bad = above_both;
                    for &t in &common {
                        bad.and_not_assign(&self.reach[t]);
                    }
                    if let Some(y) = bad.first_set() {
                        return Some(SemimodularityFailure {
                            x,
                            alpha,
                            beta,
                            y,
                        });
                    }
                }
            }
        }
        None
    }
}
