//! Set partitions of {1..n} in canonical form.
//!
//! The canonical form is the restricted-growth assignment: element i is
//! mapped to a block id, ids numbered in order of first appearance. Blocks
//! listed from this form come out sorted by minimum element.

use super::PosetError;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    /// assignment[i] = block id of element i + 1 (restricted growth string).
    assignment: Vec<u32>,
}

impl SetPartition {
    /// All singletons.
    pub fn discrete(n: usize) -> Self {
        Self {
            assignment: (0..n as u32).collect(),
        }
    }

    /// One block.
    pub fn single_block(n: usize) -> Self {
        Self {
            assignment: vec![0; n],
        }
    }

    /// Canonicalizes an arbitrary block-id assignment.
    pub fn from_assignment(raw: &[u32]) -> Self {
        let mut relabel = vec![u32::MAX; raw.len()];
        let mut next = 0u32;
        let mut assignment = Vec::with_capacity(raw.len());
        for &id in raw {
            let slot = &mut relabel[id as usize];
            if *slot == u32::MAX {
                *slot = next;
                next += 1;
            }
            assignment.push(*slot);
        }
        Self { assignment }
    }

    /// Builds from explicit blocks over 1-based elements.
    pub fn from_blocks(n: usize, blocks: &[Vec<u32>]) -> Result<Self, PosetError> {
        let mut raw = vec![u32::MAX; n];
        for (id, block) in blocks.iter().enumerate() {
            for &e in block {
                if e == 0 || e as usize > n || raw[e as usize - 1] != u32::MAX {
                    return Err(PosetError::NotAPartition);
                }
                raw[e as usize - 1] = id as u32;
            }
        }
        if raw.contains(&u32::MAX) {
            return Err(PosetError::NotAPartition);
        }
        Ok(Self::from_assignment(&raw))
    }

    pub fn n(&self) -> usize {
        self.assignment.len()
    }

    pub fn block_count(&self) -> usize {
        self.assignment.iter().map(|&b| b + 1).max().unwrap_or(0) as usize
    }

    /// Block id of a 1-based element.
    pub fn block_of(&self, element: u32) -> u32 {
        self.assignment[element as usize - 1]
    }

    pub fn block_size(&self, id: u32) -> usize {
        self.assignment.iter().filter(|&&b| b == id).count()
    }

    /// Blocks as sorted 1-based element lists, ordered by minimum element.
    pub fn blocks(&self) -> Vec<Vec<u32>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (i, &b) in self.assignment.iter().enumerate() {
            blocks[b as usize].push(i as u32 + 1);
        }
        blocks
    }

    /// True when every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Self) -> bool {
        if self.n() != other.n() {
            return false;
        }
        // Two elements in one self-block must share their other-block.
        let mut seen: Vec<Option<u32>> = vec![None; self.block_count()];
        for (i, &b) in self.assignment.iter().enumerate() {
            match seen[b as usize] {
                None => seen[b as usize] = Some(other.assignment[i]),
                Some(expected) => {
                    if other.assignment[i] != expected {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Merges the blocks with ids `a` and `b`.
    pub fn merge_blocks(&self, a: u32, b: u32) -> Self {
        debug_assert_ne!(a, b);
        let raw: Vec<u32> = self
            .assignment
            .iter()
            .map(|&id| if id == b { a } else { id })
            .collect();
        Self::from_assignment(&raw)
    }

    /// Applies a permutation of the ground set; `perm[i]` is the 1-based
    /// image of element i + 1.
    pub fn relabel(&self, perm: &[u32]) -> Self {
        let mut raw = vec![0u32; self.n()];
        for (i, &b) in self.assignment.iter().enumerate() {
            raw[perm[i] as usize - 1] = b;
        }
        Self::from_assignment(&raw)
    }

    /// All set partitions of {1..n}, in lexicographic order of the canonical
    /// assignment (restricted growth strings).
    pub fn enumerate_all(n: usize) -> Vec<SetPartition> {
        let mut out = Vec::new();
        let mut rgs = vec![0u32; n];
        fn recurse(rgs: &mut Vec<u32>, pos: usize, max_used: u32, out: &mut Vec<SetPartition>) {
            if pos == rgs.len() {
                out.push(SetPartition {
                    assignment: rgs.clone(),
                });
                return;
            }
            for b in 0..=max_used + 1 {
                rgs[pos] = b;
                recurse(rgs, pos + 1, max_used.max(b), out);
            }
        }
        if n == 0 {
            return vec![SetPartition { assignment: rgs }];
        }
        // First element always opens block 0.
        rgs[0] = 0;
        recurse(&mut rgs, 1, 0, &mut out);
        out
    }
}

impl std::fmt::Display for SetPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let blocks = self.blocks();
        for (i, block) in blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for e in block {
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let p = SetPartition::from_assignment(&[2, 2, 0, 1]);
        assert_eq!(p, SetPartition::from_blocks(4, &[vec![1, 2], vec![3], vec![4]]).unwrap());
        assert_eq!(p.to_string(), "12|3|4");
        assert_eq!(p.block_count(), 3);
    }

    #[test]
    fn refinement() {
        let fine = SetPartition::from_blocks(4, &[vec![1, 2], vec![3], vec![4]]).unwrap();
        let coarse = SetPartition::from_blocks(4, &[vec![1, 2, 3], vec![4]]).unwrap();
        assert!(fine.refines(&coarse));
        assert!(!coarse.refines(&fine));
        assert!(fine.refines(&fine));
        assert!(SetPartition::discrete(4).refines(&fine));
        assert!(fine.refines(&SetPartition::single_block(4)));
    }

    #[test]
    fn merge_and_relabel() {
        let p = SetPartition::discrete(3);
        let merged = p.merge_blocks(0, 2);
        assert_eq!(merged.to_string(), "13|2");
        // Swap 1 and 2.
        let relabeled = merged.relabel(&[2, 1, 3]);
        assert_eq!(relabeled.to_string(), "1|23");
    }

    #[test]
    fn enumerate_counts_are_bell_numbers() {
        let bell = [1usize, 1, 2, 5, 15, 52, 203];
        for (n, &expected) in bell.iter().enumerate() {
            let all = SetPartition::enumerate_all(n);
            assert_eq!(all.len(), expected, "n = {n}");
            let mut dedup = all.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), all.len());
        }
    }

    #[test]
    fn invalid_blocks_rejected() {
        assert_eq!(
            SetPartition::from_blocks(3, &[vec![1, 2]]),
            Err(PosetError::NotAPartition)
        );
        assert_eq!(
            SetPartition::from_blocks(3, &[vec![1, 2], vec![2, 3]]),
            Err(PosetError::NotAPartition)
        );
    }
}
