//! Shared test support: an independent census oracle.
//!
//! Counts monic degree-n polynomials g over F_p by Frobenius cycle type
//! (Burnside on the ordered-root cover, where the symmetric group acts
//! freely off the diagonals): a point fixed by σ∘Frob assigns to each
//! σ-cycle of length ℓ an element of F_{p^ℓ} with a full-size Frobenius
//! orbit. Squarefreeness of g and of the critical-value polynomial are read
//! off with plain gcds. No resultants, no interpolation, no branch
//! polynomials — independent of the production census path.
//!
//! Because the group action is only free off the diagonals, the oracle
//! covers exactly the squarefree-derivative locus; its histogram column k
//! counts monic f (degree n+1, vanishing at 0) with squarefree f′ and
//! ramification length k. In particular column 0 is the full simply-branched
//! count.

use ramify::field::Field;
use ramify::poly::{self, DensePoly};
use std::collections::HashMap;

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn class_size(n: u64, parts: &[u32]) -> u64 {
    let mut denom = 1u64;
    let mut mult: HashMap<u32, u64> = HashMap::new();
    for &l in parts {
        denom *= l as u64;
        *mult.entry(l).or_insert(0) += 1;
    }
    for (_, m) in mult {
        denom *= factorial(m);
    }
    factorial(n) / denom
}

fn fixed_histogram(p: u64, n: u32, parts: &[u32]) -> Vec<u64> {
    let mut fields: HashMap<u32, Field> = HashMap::new();
    for &l in parts {
        fields.entry(l).or_insert_with(|| Field::new(p, l).unwrap());
    }
    let fp = Field::prime(p).unwrap();
    let sizes: Vec<u64> = parts.iter().map(|&l| p.pow(l)).collect();
    let total: u64 = sizes.iter().product();
    let mut hist = vec![0u64; n as usize];

    'outer: for key in 0..total {
        let mut k = key;
        let mut cycle_data: Vec<(u32, Vec<u64>)> = Vec::new();
        for (ci, &l) in parts.iter().enumerate() {
            let field = &fields[&l];
            let a = k % sizes[ci];
            k /= sizes[ci];
            let mut orbit = Vec::with_capacity(l as usize);
            let mut x = a;
            for _ in 0..l {
                orbit.push(x);
                x = field.pow(x, p);
            }
            let mut dedup = orbit.clone();
            dedup.sort_unstable();
            dedup.dedup();
            if x != a || dedup.len() != l as usize {
                continue 'outer;
            }
            cycle_data.push((l, orbit));
        }
        // g = product of the cycles' norm forms; the coefficients descend to
        // F_p (constants encode identically in every extension).
        let mut g = DensePoly::constant(1);
        for (l, orbit) in &cycle_data {
            let field = &fields[l];
            let mut cp = DensePoly::constant(1);
            for &root in orbit {
                cp = poly::mul(field, &cp, &DensePoly::from_coeffs(vec![field.neg(root), 1]));
            }
            assert!(cp.coeffs().iter().all(|&c| c < p), "norm form must descend");
            g = poly::mul(&fp, &g, &cp);
        }
        let gp = g.derivative(&fp);
        if gp.is_zero() || poly::gcd_monic(&fp, &g, &gp).unwrap().degree() != Some(0) {
            continue; // repeated roots: outside the free locus
        }
        // f = (n+1) × the antiderivative of g that vanishes at 0.
        let mut fc = vec![0u64; g.coeffs().len() + 1];
        for (i, &c) in g.coeffs().iter().enumerate() {
            let v = fp.mul(fp.from_int(n as i64 + 1), c);
            fc[i + 1] = fp.mul(v, fp.inv(fp.from_int(i as i64 + 1)));
        }
        let f = DensePoly::from_coeffs(fc);
        // Critical-value polynomial: Π over all roots of (y − f(root)).
        let mut vpoly = DensePoly::constant(1);
        for (l, orbit) in &cycle_data {
            let field = &fields[l];
            let mut vp = DensePoly::constant(1);
            for &root in orbit {
                let value = f.eval(field, root);
                vp = poly::mul(field, &vp, &DensePoly::from_coeffs(vec![field.neg(value), 1]));
            }
            assert!(vp.coeffs().iter().all(|&c| c < p), "norm form must descend");
            vpoly = poly::mul(&fp, &vpoly, &vp);
        }
        // length = n − #distinct critical values = deg gcd(V, V′).
        let vd = vpoly.derivative(&fp);
        assert!(!vd.is_zero(), "tame: every multiplicity is below p");
        let length = poly::gcd_monic(&fp, &vpoly, &vd).unwrap().degree().unwrap();
        hist[length] += 1;
    }
    hist
}

/// Histogram over the squarefree-derivative locus, by ramification length.
pub fn burnside_histogram(p: u64, n: u32) -> Vec<u64> {
    let nf = factorial(n as u64);
    let mut totals = vec![0u64; n as usize];
    for parts in ramify::partitions::enumerate_partitions(n as usize) {
        let size = class_size(n as u64, &parts);
        let hist = fixed_histogram(p, n, &parts);
        for (t, h) in totals.iter_mut().zip(hist) {
            *t += size * h;
        }
    }
    for t in totals.iter_mut() {
        assert_eq!(*t % nf, 0, "Burnside total must divide the group order");
        *t /= nf;
    }
    totals
}

/// Simply-branched count over F_p: column 0 of the Burnside histogram
/// (simple branching forces a squarefree derivative, so the restriction to
/// the free locus loses nothing).
pub fn burnside_simple_count(p: u64, n: u32) -> u64 {
    burnside_histogram(p, n)[0]
}
