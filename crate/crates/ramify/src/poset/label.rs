//! Stratum labels: pairs of set partitions recording root collisions and
//! sibling patterns of the ordered-root cover.
//!
//! A point (a₁, …, aₙ) of the root cover determines ρ₁ (which roots
//! coincide) and ρ₂ (which roots are siblings, i.e. share their value under
//! the antiderivative). ρ₁ always refines ρ₂. The derived data N/R/F and the
//! length follow the stratification bookkeeping:
//!
//! * N(λ): indices whose ρ₁- and ρ₂-blocks are both singletons — the simple
//!   part.
//! * R(λ): the remaining ρ₁-blocks — one per non-simply-branched ramification
//!   point, of size = differential length.
//! * F(λ): the ρ₂-blocks of the non-simple indices — one per non-simple
//!   branch point. In the length formula a fiber counts its ramification
//!   *points*, i.e. the number of ρ₁-blocks inside it (k_j), not its index
//!   cardinality.
//!
//! Length is computed two ways and asserted equal:
//! Σ(|R_i| + 1) − Σ k_j − |F| and n − #(ρ₂-blocks).

use super::set_partition::SetPartition;
use super::PosetError;
use crate::types::{BranchProfile, RamificationType};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StratumLabel {
    rho1: SetPartition,
    rho2: SetPartition,
}

/// The N/R/F views of a label plus its length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumInvariants {
    /// Simple indices (1-based), ascending.
    pub simple: Vec<u32>,
    /// Non-simple ρ₁-blocks, each sorted, ordered by minimum element.
    pub ram_blocks: Vec<Vec<u32>>,
    /// Non-simple ρ₂-blocks (fibers), each sorted, ordered by minimum element.
    pub fibers: Vec<Vec<u32>>,
    pub length: u32,
}

impl StratumLabel {
    pub fn new(rho1: SetPartition, rho2: SetPartition) -> Result<Self, PosetError> {
        if rho1.n() != rho2.n() {
            return Err(PosetError::SizeMismatch);
        }
        if !rho1.refines(&rho2) {
            return Err(PosetError::RefinementViolation);
        }
        Ok(Self { rho1, rho2 })
    }

    /// The generic stratum: all roots distinct, all values distinct.
    pub fn bottom(n: usize) -> Self {
        Self {
            rho1: SetPartition::discrete(n),
            rho2: SetPartition::discrete(n),
        }
    }

    /// Maximal branching: all roots equal.
    pub fn top(n: usize) -> Self {
        Self {
            rho1: SetPartition::single_block(n),
            rho2: SetPartition::single_block(n),
        }
    }

    pub fn n(&self) -> usize {
        self.rho1.n()
    }

    pub fn rho1(&self) -> &SetPartition {
        &self.rho1
    }

    pub fn rho2(&self) -> &SetPartition {
        &self.rho2
    }

    /// Length as codimension: n − #(ρ₂-blocks). The full formula is
    /// cross-checked in [`StratumLabel::invariants`].
    pub fn length(&self) -> u32 {
        (self.n() - self.rho2.block_count()) as u32
    }

    /// N/R/F and the length, with both length formulas evaluated.
    pub fn invariants(&self) -> StratumInvariants {
        let n = self.n();
        let mut simple = Vec::new();
        let mut fiber_ids = Vec::new();
        for e in 1..=n as u32 {
            let rho1_singleton = self.rho1.block_size(self.rho1.block_of(e)) == 1;
            let rho2_singleton = self.rho2.block_size(self.rho2.block_of(e)) == 1;
            if rho1_singleton && rho2_singleton {
                simple.push(e);
            }
        }
        let mut ram_blocks = Vec::new();
        for block in self.rho1.blocks() {
            if block.len() == 1 && simple.binary_search(&block[0]).is_ok() {
                continue;
            }
            ram_blocks.push(block);
        }
        let mut fibers = Vec::new();
        for (id, block) in self.rho2.blocks().into_iter().enumerate() {
            if block.len() == 1 && simple.binary_search(&block[0]).is_ok() {
                continue;
            }
            fiber_ids.push(id as u32);
            fibers.push(block);
        }
        // Σ(|R_i| + 1) − Σ k_j − |F|, k_j = number of ρ₁-blocks in fiber j.
        let sum_r: usize = ram_blocks.iter().map(|b| b.len() + 1).sum();
        let sum_k: usize = fibers
            .iter()
            .map(|fiber| {
                let mut ids: Vec<u32> = fiber.iter().map(|&e| self.rho1.block_of(e)).collect();
                ids.sort_unstable();
                ids.dedup();
                ids.len()
            })
            .sum();
        let by_formula = sum_r - sum_k - fibers.len();
        let by_blocks = n - self.rho2.block_count();
        assert_eq!(
            by_formula, by_blocks,
            "the two length formulas disagree on {self:?}"
        );
        StratumInvariants {
            simple,
            ram_blocks,
            fibers,
            length: by_formula as u32,
        }
    }

    /// The (essential) ramification type: per fiber, the multiset of
    /// (ρ₁-block size + 1) over the ρ₁-blocks inside it.
    pub fn ramification_type(&self) -> RamificationType {
        let mut profiles = Vec::new();
        for fiber in self.rho2.blocks() {
            if fiber.len() == 1 {
                let e = fiber[0];
                if self.rho1.block_size(self.rho1.block_of(e)) == 1 {
                    continue; // simple index
                }
            }
            let mut ids: Vec<u32> = fiber.iter().map(|&e| self.rho1.block_of(e)).collect();
            ids.sort_unstable();
            ids.dedup();
            let indices: Vec<u32> = ids
                .iter()
                .map(|&id| self.rho1.block_size(id) as u32 + 1)
                .collect();
            profiles.push(BranchProfile::new(indices).expect("indices >= 2"));
        }
        RamificationType::new(profiles)
    }

    pub fn relabel(&self, perm: &[u32]) -> Self {
        Self {
            rho1: self.rho1.relabel(perm),
            rho2: self.rho2.relabel(perm),
        }
    }
}

impl std::fmt::Display for StratumLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.rho1, self.rho2)
    }
}
