//! Reduced (co)homology of order complexes of open intervals, over the
//! rationals, with exact integer linear algebra.
//!
//! A chain with k interior elements is a (k−1)-simplex of the order complex.
//! Closed-interval conventions: the interval (u, u) contributes a single rank
//! in degree −2, and a cover pair contributes a single rank in degree −1.
//! Over ℚ the cohomology and homology ranks agree, so ranks are computed from
//! boundary matrices; all ranks come from fraction-free (Bareiss) elimination
//! over arbitrary-precision integers — no floating point anywhere.

use super::graded::GradedPoset;
use super::PosetError;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::collections::HashMap;
use std::hash::Hash;

/// Reduced cohomology ranks of one open interval, indexed by degree.
/// Only nonzero ranks are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalCohomology {
    pub ranks: BTreeMap<i32, usize>,
}

impl IntervalCohomology {
    pub fn rank(&self, degree: i32) -> usize {
        self.ranks.get(&degree).copied().unwrap_or(0)
    }

    /// Reduced Euler characteristic Σ (−1)^i rank H̃^i, with the degree −2
    /// convention contributing +1.
    pub fn euler_characteristic(&self) -> i128 {
        self.ranks
            .iter()
            .map(|(&deg, &rank)| {
                let sign = if deg.rem_euclid(2) == 0 { 1 } else { -1 };
                sign * rank as i128
            })
            .sum()
    }

    fn single(degree: i32) -> Self {
        let mut ranks = BTreeMap::new();
        ranks.insert(degree, 1);
        Self { ranks }
    }
}

/// All chains of the subposet `interior`, grouped by simplex dimension:
/// result[k] lists the (k+1)-element chains ascending in poset order.
pub(crate) fn chains_in<L: Clone + Eq + Hash>(
    poset: &GradedPoset<L>,
    interior: &[usize],
) -> Vec<Vec<Vec<usize>>> {
    let mut by_dim: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();

    fn extend<L: Clone + Eq + Hash>(
        poset: &GradedPoset<L>,
        interior: &[usize],
        stack: &mut Vec<usize>,
        by_dim: &mut Vec<Vec<Vec<usize>>>,
    ) {
        let dim = stack.len() - 1;
        if by_dim.len() <= dim {
            by_dim.push(Vec::new());
        }
        by_dim[dim].push(stack.clone());
        let last = *stack.last().unwrap();
        for &t in interior {
            if t != last && poset.le(last, t) {
                stack.push(t);
                extend(poset, interior, stack, by_dim);
                stack.pop();
            }
        }
    }

    for &s in interior {
        stack.push(s);
        extend(poset, interior, &mut stack, &mut by_dim);
        stack.pop();
    }
    by_dim
}

/// Rank of an integer matrix by fraction-free Gaussian elimination.
pub(crate) fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0usize;
    let mut row = 0usize;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let pivot = (row..rows).find(|&r| !m[r][col].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => continue,
        };
        m.swap(row, pivot);
        for r in row + 1..rows {
            for c in col + 1..cols {
                let numerator = &m[row][col] * &m[r][c] - &m[r][col] * &m[row][c];
                m[r][c] = numerator / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[row][col].clone();
        rank += 1;
        row += 1;
    }
    rank
}

/// Reduced cohomology ranks of the order complex of the open interval
/// (u, v); rejects incomparable endpoints.
pub fn interval_cohomology<L: Clone + Eq + Hash>(
    poset: &GradedPoset<L>,
    u: usize,
    v: usize,
) -> Result<IntervalCohomology, PosetError> {
    if !poset.le(u, v) {
        return Err(PosetError::Incomparable);
    }
    if u == v {
        return Ok(IntervalCohomology::single(-2));
    }
    let interior = poset.open_interval(u, v);
    if interior.is_empty() {
        return Ok(IntervalCohomology::single(-1));
    }
    let chains = chains_in(poset, &interior);
    let boundary_ranks = boundary_ranks(&chains);
    let mut ranks = BTreeMap::new();
    let top = chains.len() - 1;
    for k in 0..=top {
        let dim_ck = chains[k].len();
        let rank_in = boundary_ranks[k]; // ∂_k : C_k -> C_{k-1}
        let rank_out = boundary_ranks.get(k + 1).copied().unwrap_or(0);
        let betti = dim_ck - rank_in - rank_out;
        if betti > 0 {
            ranks.insert(k as i32, betti);
        }
    }
    Ok(IntervalCohomology { ranks })
}

/// boundary_ranks[k] = rank of ∂_k : C_k → C_{k−1}, with ∂_0 the
/// augmentation onto C_{−1} = ℚ.
fn boundary_ranks(chains: &[Vec<Vec<usize>>]) -> Vec<usize> {
    let mut out = Vec::with_capacity(chains.len() + 1);
    // Augmentation has rank 1 as soon as there is a vertex.
    out.push(usize::from(!chains[0].is_empty()));
    for k in 1..chains.len() {
        let index: HashMap<&[usize], usize> = chains[k - 1]
            .iter()
            .enumerate()
            .map(|(i, c)| (c.as_slice(), i))
            .collect();
        let mut matrix = Vec::with_capacity(chains[k].len());
        for chain in &chains[k] {
            let mut row = vec![BigInt::zero(); chains[k - 1].len()];
            let mut face = Vec::with_capacity(chain.len() - 1);
            for omit in 0..chain.len() {
                face.clear();
                face.extend(chain.iter().enumerate().filter_map(|(i, &e)| {
                    if i == omit {
                        None
                    } else {
                        Some(e)
                    }
                }));
                let col = index[face.as_slice()];
                let sign = if omit % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                row[col] += sign;
            }
            matrix.push(row);
        }
        out.push(bareiss_rank(matrix));
    }
    out
}

/// One interval where the reduced Euler characteristic disagrees with the
/// Möbius function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerMobiusViolation {
    pub u: usize,
    pub v: usize,
    pub euler: i128,
    pub mobius: i128,
}

/// Philip Hall cross-check over every interval of the poset: the Möbius
/// recursion against the linear-algebra Euler characteristic.
pub fn euler_mobius_check<L: Clone + Eq + Hash>(
    poset: &GradedPoset<L>,
) -> Result<(), EulerMobiusViolation> {
    for u in 0..poset.len() {
        let mu = poset.mobius_from(u);
        for (v, &mobius) in mu.iter().enumerate() {
            if !poset.le(u, v) {
                continue;
            }
            let coh = interval_cohomology(poset, u, v).expect("comparable");
            let euler = coh.euler_characteristic();
            if euler != mobius {
                return Err(EulerMobiusViolation {
                    u,
                    v,
                    euler,
                    mobius,
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn diamond() -> GradedPoset<usize> {
        GradedPoset::from_parts(
            vec![0usize, 1, 2, 3],
            &[(0, 1), (0, 2), (1, 3), (2, 3)],
            0,
            Some(3),
            None,
        )
    }

    #[test]
    fn conventions() {
        let d = diamond();
        assert_eq!(
            interval_cohomology(&d, 0, 0).unwrap(),
            IntervalCohomology::single(-2)
        );
        assert_eq!(
            interval_cohomology(&d, 0, 1).unwrap(),
            IntervalCohomology::single(-1)
        );
        // Open interval of the diamond: 2 incomparable points.
        let coh = interval_cohomology(&d, 0, 3).unwrap();
        assert_eq!(coh.rank(0), 1);
        assert_eq!(coh.euler_characteristic(), 1);
        assert_eq!(
            interval_cohomology(&d, 1, 2),
            Err(PosetError::Incomparable)
        );
    }

    #[test]
    fn antichain_of_k_points() {
        // Bottom, top, k middle points: H̃^0 has rank k - 1.
        for k in 2..6 {
            let mut covers = Vec::new();
            for i in 1..=k {
                covers.push((0, i));
                covers.push((i, k + 1));
            }
            let p = GradedPoset::from_parts(
                (0..=k + 1).collect::<Vec<usize>>(),
                &covers,
                0,
                Some(k + 1),
                None,
            );
            let coh = interval_cohomology(&p, 0, k + 1).unwrap();
            assert_eq!(coh.rank(0), k - 1);
            assert_eq!(coh.euler_characteristic(), k as i128 - 1);
            assert_eq!(p.mobius(0, k + 1), k as i128 - 1);
        }
    }

    #[test]
    fn hollow_square_is_a_circle() {
        // Bottom, top, and a 4-cycle a < x, a < y, b < x, b < y in between:
        // the order complex of {a, b, x, y} is a square boundary ≃ S¹.
        let covers = vec![
            (0, 1),
            (0, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (3, 5),
            (4, 5),
        ];
        let p = GradedPoset::from_parts(
            (0..6).collect::<Vec<usize>>(),
            &covers,
            0,
            Some(5),
            None,
        );
        let coh = interval_cohomology(&p, 0, 5).unwrap();
        assert_eq!(coh.rank(0), 0);
        assert_eq!(coh.rank(1), 1);
        assert_eq!(coh.euler_characteristic(), -1);
        assert_eq!(p.mobius(0, 5), -1);
    }

    #[test]
    fn euler_mobius_holds_on_small_posets() {
        assert!(euler_mobius_check(&diamond()).is_ok());
    }

    #[test]
    fn degrees_stay_in_the_interval_window() {
        // Reduced cohomology of (u, v) lives in [-2, rank(v) - rank(u) - 2].
        let d = diamond();
        for u in 0..d.len() {
            for v in 0..d.len() {
                if !d.le(u, v) {
                    continue;
                }
                let coh = interval_cohomology(&d, u, v).unwrap();
                let upper = d.rank(v) as i32 - d.rank(u) as i32 - 2;
                for &deg in coh.ranks.keys() {
                    assert!(deg >= -2 && deg <= upper, "({u},{v}) degree {deg}");
                }
            }
        }
    }

    #[test]
    fn bareiss_rank_small() {
        let m = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> {
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect()
        };
        assert_eq!(bareiss_rank(m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(bareiss_rank(m(&[&[1, 2], &[3, 4]])), 2);
        assert_eq!(bareiss_rank(m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(
            bareiss_rank(m(&[&[2, 3, 5], &[4, 6, 10], &[1, 0, 1]])),
            2
        );
    }
}
