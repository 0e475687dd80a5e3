//! Integer partitions: the counting function p(N) and partition enumeration.
//!
//! Everything downstream that counts ramification types reduces to these two
//! primitives, so both are exact: p(N) is computed with arbitrary-precision
//! integers via the pentagonal-number recurrence, and enumeration produces
//! each partition exactly once in a canonical order.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Number of partitions of `n`, with `p(0) = 1`.
///
/// Uses Euler's pentagonal-number recurrence
/// `p(i) = Σ_k (-1)^{k+1} [p(i - k(3k-1)/2) + p(i - k(3k+1)/2)]`,
/// which needs O(n √n) big-integer additions.
pub fn partition_count(n: usize) -> BigUint {
    partition_table(n).pop().unwrap()
}

/// Table `[p(0), p(1), …, p(n)]`.
pub fn partition_table(n: usize) -> Vec<BigUint> {
    let mut table: Vec<BigUint> = Vec::with_capacity(n + 1);
    table.push(BigUint::one());
    for i in 1..=n {
        let mut acc = BigUint::zero();
        let mut sub = BigUint::zero();
        let mut k = 1usize;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let positive = k % 2 == 1;
            if positive {
                acc += &table[i - g1];
            } else {
                sub += &table[i - g1];
            }
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= i {
                if positive {
                    acc += &table[i - g2];
                } else {
                    sub += &table[i - g2];
                }
            }
            k += 1;
        }
        // The recurrence never goes negative on a full prefix sum.
        table.push(acc - sub);
    }
    table
}

/// All partitions of `n` into positive parts, each written with parts in
/// descending order, listed in descending lexicographic order.
///
/// `n = 0` yields the single empty partition.
pub fn enumerate_partitions(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n as u32, n as u32, &mut current, &mut out);
    out
}

fn descend(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    let mut part = max_part.min(remaining);
    while part >= 1 {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
        part -= 1;
    }
}
