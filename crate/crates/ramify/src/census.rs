//! Exhaustive census of monic degree-(n+1) polynomials over F_q vanishing
//! at 0, measuring total ramification length per polynomial.
//!
//! The hot path never factors anything and never leaves F_q:
//!
//! 1. For f in the family, the branch polynomial B_f(y) = Π (y − f(α))^{m_α}
//!    (α over critical points with multiplicity) is recovered by
//!    evaluation–interpolation: Res_x(f(x) − t, f′(x)) is a fixed nonzero
//!    scalar times B_f(t), and n + 1 samples at t = 0…n pin the degree-n
//!    polynomial.
//! 2. length(f) = n − deg(squarefree part of B_f) = deg gcd(B_f, B_f′),
//!    valid because every multiplicity is ≤ n < p.
//!
//! Everything is O(n²) field operations per polynomial. The census space is
//! partitioned into shards by leading-coefficient prefix; workers count
//! independently and the merge is plain addition, so the result is identical
//! for every shard partitioning and scheduling.
//!
//! [`type_of`] extracts the full ramification type (still without leaving
//! F_q) and is meant for spot checks, not the census loop.

use crate::field::{Field, FieldError};
use crate::poly::{self, DensePoly, PolyError};
use crate::types::{c_of_m, BranchProfile, Convention, RamificationType};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use std::time::{Duration, Instant};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CensusError {
    #[error("characteristic {p} must exceed the map degree {degree} (wild ramification is out of scope)")]
    CharacteristicTooSmall { p: u64, degree: u64 },
    #[error("field of order {q} has too few interpolation points for degree {degree}")]
    FieldTooSmall { q: u64, degree: u64 },
    #[error("census size q^n = {size} exceeds the budget {budget}")]
    BudgetExceeded { size: u128, budget: u128 },
    #[error("expected a monic polynomial of degree >= 2 vanishing at 0")]
    BadShape,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn check_tame(field: &Field, n: usize) -> Result<(), CensusError> {
    let degree = n as u64 + 1;
    if field.p() <= degree {
        return Err(CensusError::CharacteristicTooSmall {
            p: field.p(),
            degree,
        });
    }
    // Cannot fire when p > n + 1, but the interpolation count is its own
    // precondition.
    if field.order() <= n as u64 {
        return Err(CensusError::FieldTooSmall {
            q: field.order(),
            degree,
        });
    }
    Ok(())
}

fn check_shape(f: &DensePoly) -> Result<usize, CensusError> {
    let deg = f.degree().ok_or(CensusError::BadShape)?;
    if deg < 2 || !f.is_monic() || f.coeff(0) != 0 {
        return Err(CensusError::BadShape);
    }
    Ok(deg - 1)
}

/// The monic branch polynomial B_f of a monic degree-(n+1) map vanishing
/// at 0: the degree-n polynomial whose roots (with multiplicity) are the
/// critical values of f.
pub fn branch_poly(field: &Field, f: &DensePoly) -> Result<DensePoly, CensusError> {
    let n = check_shape(f)?;
    check_tame(field, n)?;
    let fp = f.derivative(field);
    let xs: Vec<u64> = (0..=n as u64).collect();
    let ys: Vec<u64> = xs
        .iter()
        .map(|&t| {
            let mut shifted = f.clone().into_coeffs();
            shifted[0] = field.neg(t);
            let mut fp_buf = fp.clone().into_coeffs();
            let da = shifted.len() - 1;
            let db = fp_buf.len() - 1;
            poly::resultant_in_place(field, &mut shifted, da, &mut fp_buf, db)
        })
        .collect();
    let b = poly::interpolate(field, &xs, &ys);
    assert_eq!(
        b.degree(),
        Some(n),
        "branch polynomial must have degree exactly n in tame characteristic"
    );
    Ok(b.make_monic(field))
}

/// Total ramification length of f: n − deg(squarefree part of B_f).
pub fn ram_length(field: &Field, f: &DensePoly) -> Result<usize, CensusError> {
    let n = check_shape(f)?;
    check_tame(field, n)?;
    let b = branch_poly(field, f)?;
    let sqf = poly::squarefree_part(field, &b)?;
    Ok(n - sqf.degree().expect("squarefree part of a nonzero poly"))
}

/// f(x + t) − f(t): the translated map, again monic and vanishing at 0.
pub fn translate(field: &Field, f: &DensePoly, t: u64) -> DensePoly {
    let shifted = f.taylor_shift(field, t);
    let constant = shifted.coeff(0);
    let mut coeffs = shifted.into_coeffs();
    coeffs[0] = field.sub(coeffs[0], constant);
    DensePoly::from_coeffs(coeffs)
}

// ---------------------------------------------------------------------------
// Census proper
// ---------------------------------------------------------------------------

pub const DEFAULT_BUDGET: u128 = 10_000_000_000;

#[derive(Debug, Clone)]
pub struct CensusOptions {
    /// Refuse to enumerate more than this many polynomials.
    pub budget: u128,
    /// Worker threads; 1 keeps everything on the calling thread.
    pub jobs: usize,
    /// Shard-count override (tests use it to pin partitionings).
    pub shards: Option<usize>,
}

impl Default for CensusOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            jobs: 1,
            shards: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CensusRecord {
    pub n: u32,
    pub m: u32,
    pub p: u64,
    pub d: u32,
    pub q: u64,
    /// #{f : length(f) < m}.
    pub count: BigUint,
    /// histogram[k] = #{f : length(f) = k}, k = 0..n-1.
    pub histogram: Vec<BigUint>,
    pub wall_time: Duration,
    pub shard_count: usize,
}

/// Counts monic degree-(n+1) polynomials f = x^{n+1} + a_n x^n + … + a_1 x
/// over F_q with total ramification length < m, by enumerating all qⁿ
/// coefficient tuples.
pub fn census(
    field: &Field,
    n: u32,
    m: u32,
    opts: &CensusOptions,
) -> Result<CensusRecord, CensusError> {
    assert!(n >= 1 && m >= 1, "census needs n >= 1 and m >= 1");
    check_tame(field, n as usize)?;
    let q = field.order();
    let size = (0..n).try_fold(1u128, |acc, _| acc.checked_mul(q as u128));
    let size = size.ok_or(CensusError::BudgetExceeded {
        size: u128::MAX,
        budget: opts.budget,
    })?;
    if size > opts.budget {
        return Err(CensusError::BudgetExceeded {
            size,
            budget: opts.budget,
        });
    }

    let started = Instant::now();
    // Shards fix a prefix of leading coefficients a_n, a_{n-1}, …
    let prefix_len = match opts.shards {
        Some(s) => {
            let mut len = 0u32;
            while len < n && (q as u128).pow(len) < s as u128 {
                len += 1;
            }
            len
        }
        None => {
            if opts.jobs <= 1 || n == 1 {
                1.min(n)
            } else if (q as usize) >= 4 * opts.jobs {
                1
            } else {
                2.min(n)
            }
        }
    };
    let shard_count = (q as u128).pow(prefix_len) as usize;

    let run_shard = |shard: usize| -> Vec<u64> {
        let mut kernel = LengthKernel::new(field, n as usize);
        // Decode the shard id into the fixed top coefficients.
        let mut id = shard as u64;
        for offset in 0..prefix_len {
            let position = n - offset; // a_n first
            kernel.set_coeff(position as usize, id % q);
            id /= q;
        }
        let free = (n - prefix_len) as usize;
        let mut digits = vec![0u64; free];
        let mut hist = vec![0u64; n as usize];
        loop {
            hist[kernel.length()] += 1;
            let mut j = 0;
            loop {
                if j == free {
                    return hist;
                }
                digits[j] += 1;
                if digits[j] < q {
                    kernel.set_coeff(j + 1, digits[j]);
                    break;
                }
                digits[j] = 0;
                kernel.set_coeff(j + 1, 0);
                j += 1;
            }
        }
    };

    let merged: Vec<u128> = if opts.jobs <= 1 {
        let mut acc = vec![0u128; n as usize];
        for shard in 0..shard_count {
            for (slot, v) in acc.iter_mut().zip(run_shard(shard)) {
                *slot += v as u128;
            }
        }
        acc
    } else {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            (0..shard_count)
                .into_par_iter()
                .map(run_shard)
                .fold(
                    || vec![0u128; n as usize],
                    |mut acc, hist| {
                        for (slot, v) in acc.iter_mut().zip(hist) {
                            *slot += v as u128;
                        }
                        acc
                    },
                )
                .reduce(
                    || vec![0u128; n as usize],
                    |mut a, b| {
                        for (slot, v) in a.iter_mut().zip(b) {
                            *slot += v;
                        }
                        a
                    },
                )
        })
    };

    let histogram: Vec<BigUint> = merged.iter().map(|&v| BigUint::from(v)).collect();
    let count = histogram
        .iter()
        .take(m as usize)
        .fold(BigUint::zero(), |acc, v| acc + v);
    Ok(CensusRecord {
        n,
        m,
        p: field.p(),
        d: field.extension_degree(),
        q,
        count,
        histogram,
        wall_time: started.elapsed(),
        shard_count,
    })
}

/// Reusable per-shard state: coefficient buffers for f and f′, scratch for
/// the Euclidean kernels, and the Lagrange matrix for samples 0…n.
struct LengthKernel<'f> {
    field: &'f Field,
    n: usize,
    fc: Vec<u64>,
    dc: Vec<u64>,
    index_consts: Vec<u64>,
    lagrange: Vec<Vec<u64>>,
    abuf: Vec<u64>,
    bbuf: Vec<u64>,
    values: Vec<u64>,
    bcoef: Vec<u64>,
    bder: Vec<u64>,
}

impl<'f> LengthKernel<'f> {
    fn new(field: &'f Field, n: usize) -> Self {
        let mut fc = vec![0u64; n + 2];
        fc[n + 1] = 1;
        let mut dc = vec![0u64; n + 1];
        dc[n] = field.from_int(n as i64 + 1);
        let index_consts: Vec<u64> = (0..=n as i64 + 1).map(|i| field.from_int(i)).collect();
        let xs: Vec<u64> = (0..=n as u64).collect();
        Self {
            field,
            n,
            fc,
            dc,
            index_consts,
            lagrange: poly::lagrange_basis(field, &xs),
            abuf: vec![0u64; n + 2],
            bbuf: vec![0u64; n + 2],
            values: vec![0u64; n + 1],
            bcoef: vec![0u64; n + 1],
            bder: vec![0u64; n + 1],
        }
    }

    #[inline]
    fn set_coeff(&mut self, i: usize, value: u64) {
        self.fc[i] = value;
        self.dc[i - 1] = self.field.mul(self.index_consts[i], value);
    }

    /// Total ramification length of the current polynomial.
    fn length(&mut self) -> usize {
        let field = self.field;
        let n = self.n;
        // Sample the (scaled) branch polynomial at t = 0…n.
        for t in 0..=n as u64 {
            self.abuf.copy_from_slice(&self.fc);
            self.abuf[0] = field.neg(t);
            self.bbuf[..n + 1].copy_from_slice(&self.dc);
            self.values[t as usize] =
                poly::resultant_in_place(field, &mut self.abuf, n + 1, &mut self.bbuf[..n + 1], n);
        }
        // Interpolate.
        for c in self.bcoef.iter_mut() {
            *c = 0;
        }
        for (j, row) in self.lagrange.iter().enumerate() {
            let v = self.values[j];
            if v == 0 {
                continue;
            }
            for (i, &r) in row.iter().enumerate() {
                self.bcoef[i] = field.add(self.bcoef[i], field.mul(v, r));
            }
        }
        debug_assert!(self.bcoef[n] != 0, "branch polynomial degree must be n");
        // length = deg gcd(B, B'); scaling does not matter.
        for i in 1..=n {
            self.bder[i - 1] = field.mul(self.index_consts[i], self.bcoef[i]);
        }
        if n == 1 {
            return 0;
        }
        poly::gcd_degree_in_place(
            field,
            &mut self.bcoef,
            n,
            &mut self.bder[..n],
            n - 1,
        )
    }
}

// ---------------------------------------------------------------------------
// Verification against the closed-form count
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    MatchesBoth,
    MatchesEq12,
    MatchesMultiset,
    MatchesNeither,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::MatchesBoth => "matches-both",
            Verdict::MatchesEq12 => "matches-eq12",
            Verdict::MatchesMultiset => "matches-multiset",
            Verdict::MatchesNeither => "matches-neither",
        }
    }

    pub fn is_match(&self) -> bool {
        !matches!(self, Verdict::MatchesNeither)
    }
}

#[derive(Debug, Clone)]
pub struct VerifyRecord {
    pub census: CensusRecord,
    /// qⁿ − c·q^{n−m} for the two readings of c(m); None when n < m makes
    /// the formula meaningless.
    pub predicted_eq12: Option<BigUint>,
    pub predicted_multiset: Option<BigUint>,
    pub verdict: Verdict,
    pub flags: Vec<String>,
}

/// qⁿ − c·q^{n−m}, when it is a well-formed nonnegative integer.
pub fn predicted_count(q: u64, n: u32, m: u32, c: &BigUint) -> Option<BigUint> {
    if m > n {
        return None;
    }
    let qn = BigUint::from(q).pow(n);
    let correction = c * BigUint::from(q).pow(n - m);
    if correction > qn {
        return None;
    }
    Some(qn - correction)
}

/// Runs the census and compares the measurement against the closed form
/// under both conventions. Out-of-range inputs are flagged, not refused.
pub fn verify_count(
    field: &Field,
    n: u32,
    m: u32,
    opts: &CensusOptions,
) -> Result<VerifyRecord, CensusError> {
    let census = census(field, n, m, opts)?;
    let c_eq12 = c_of_m(m, Convention::Eq12).expect("m >= 1");
    let c_multi = c_of_m(m, Convention::Multiset).expect("m >= 1");
    let predicted_eq12 = predicted_count(field.order(), n, m, &c_eq12);
    let predicted_multiset = predicted_count(field.order(), n, m, &c_multi);
    let mut flags = Vec::new();
    if n < 3 * m {
        flags.push("out-of-range:n<3m".to_string());
    }
    let hit_eq12 = predicted_eq12.as_ref() == Some(&census.count);
    let hit_multi = predicted_multiset.as_ref() == Some(&census.count);
    let verdict = match (hit_eq12, hit_multi) {
        (true, true) => Verdict::MatchesBoth,
        (true, false) => Verdict::MatchesEq12,
        (false, true) => Verdict::MatchesMultiset,
        (false, false) => Verdict::MatchesNeither,
    };
    Ok(VerifyRecord {
        census,
        predicted_eq12,
        predicted_multiset,
        verdict,
        flags,
    })
}

/// The constant (qⁿ − count)/q^{n−m} as an exact reduced fraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InferredC {
    pub numerator: BigUint,
    pub denominator: BigUint,
}

impl InferredC {
    fn reduced(numerator: BigUint, denominator: BigUint) -> Self {
        let g = numerator.gcd(&denominator);
        InferredC {
            numerator: numerator / &g,
            denominator: denominator / g,
        }
    }

    pub fn is_integral(&self) -> bool {
        self.denominator == BigUint::from(1u32)
    }
}

#[derive(Debug, Clone)]
pub struct InferenceRecord {
    pub n: u32,
    pub m: u32,
    pub per_field: Vec<(CensusRecord, InferredC)>,
    pub all_integral: bool,
    pub consistent: bool,
    /// The common integer c when every field agrees on one.
    pub c: Option<BigUint>,
    pub flags: Vec<String>,
}

/// Solves qⁿ − count = c·q^{n−m} for c over several fields and reports
/// integrality and cross-field consistency.
pub fn infer_c(
    fields: &[Field],
    n: u32,
    m: u32,
    opts: &CensusOptions,
) -> Result<InferenceRecord, CensusError> {
    assert!(m <= n, "infer_c needs m <= n");
    let mut per_field = Vec::new();
    for field in fields {
        let record = census(field, n, m, opts)?;
        let qn = BigUint::from(field.order()).pow(n);
        let numerator = &qn - &record.count;
        let denominator = BigUint::from(field.order()).pow(n - m);
        per_field.push((record, InferredC::reduced(numerator, denominator)));
    }
    let all_integral = per_field.iter().all(|(_, c)| c.is_integral());
    let consistent = per_field.windows(2).all(|w| w[0].1 == w[1].1);
    let c = (all_integral && consistent)
        .then(|| per_field.first().map(|(_, c)| c.numerator.clone()))
        .flatten();
    let mut flags = Vec::new();
    if n < 3 * m {
        flags.push("out-of-range:n<3m".to_string());
    }
    Ok(InferenceRecord {
        n,
        m,
        per_field,
        all_integral,
        consistent,
        c,
        flags,
    })
}

// ---------------------------------------------------------------------------
// Full ramification type of a single polynomial (spot-check path)
// ---------------------------------------------------------------------------

/// One squarefree layer of f′ together with its branch-value polynomial.
#[derive(Debug, Clone)]
pub struct LayerData {
    /// Squarefree monic factor of f′ whose roots ramify with this
    /// differential length.
    pub layer: DensePoly,
    /// Differential length (multiplicity in f′).
    pub differential_length: u32,
    /// B_k(y) = Π_{layer(α)=0} (y − f(α)), monic.
    pub branch_values: DensePoly,
}

/// A pairwise-coprime squarefree factor of branch values sharing one profile.
#[derive(Debug, Clone)]
pub struct ValueClass {
    pub factor: DensePoly,
    pub profile: BranchProfile,
}

#[derive(Debug, Clone)]
pub struct TypeOfResult {
    /// Full geometric type, simple branch points included.
    pub ty: RamificationType,
    pub layers: Vec<LayerData>,
    pub classes: Vec<ValueClass>,
}

/// Extracts the full ramification type of f without leaving F_q: squarefree
/// layers of f′, per-layer branch-value polynomials by interpolation, then a
/// gcd refinement of the layer family into value classes.
pub fn type_of(field: &Field, f: &DensePoly) -> Result<TypeOfResult, CensusError> {
    let n = check_shape(f)?;
    check_tame(field, n)?;
    let fp = f.derivative(field);
    let decomposition = poly::squarefree_decomposition(field, &fp)?;

    let mut layers = Vec::new();
    for (layer, k) in &decomposition {
        let du = layer.degree().expect("layers are nonconstant");
        let xs: Vec<u64> = (0..=du as u64).collect();
        let sign = if du % 2 == 1 { field.neg(1) } else { 1 };
        let ys: Vec<u64> = xs
            .iter()
            .map(|&t| {
                let mut shifted = f.clone().into_coeffs();
                shifted[0] = field.neg(t);
                let mut layer_buf = layer.clone().into_coeffs();
                let da = shifted.len() - 1;
                let r = poly::resultant_in_place(field, &mut shifted, da, &mut layer_buf, du);
                field.mul(sign, r)
            })
            .collect();
        let b = poly::interpolate(field, &xs, &ys);
        assert!(b.is_monic(), "per-layer branch polynomial must be monic");
        layers.push(LayerData {
            layer: layer.clone(),
            differential_length: *k,
            branch_values: b,
        });
    }

    // Refine {B_k} into pairwise-coprime classes carrying, for each layer,
    // the multiplicity of their values in that layer.
    let mut classes: Vec<(DensePoly, Vec<(u32, u32)>)> = Vec::new();
    for data in &layers {
        let pieces = poly::squarefree_decomposition(field, &data.branch_values)?;
        for (piece, count) in pieces {
            let mut remaining = piece;
            let mut refined: Vec<(DensePoly, Vec<(u32, u32)>)> = Vec::new();
            for (factor, profile_counts) in classes.drain(..) {
                if remaining.degree() == Some(0) {
                    refined.push((factor, profile_counts));
                    continue;
                }
                let common = poly::gcd_monic(field, &factor, &remaining).expect("nonzero");
                if common.degree() == Some(0) {
                    refined.push((factor, profile_counts));
                    continue;
                }
                let outside = poly::div_exact(field, &factor, &common);
                if outside.degree() != Some(0) {
                    refined.push((outside, profile_counts.clone()));
                }
                let mut augmented = profile_counts;
                augmented.push((data.differential_length, count));
                remaining = poly::div_exact(field, &remaining, &common);
                refined.push((common, augmented));
            }
            if remaining.degree() != Some(0) {
                refined.push((remaining, vec![(data.differential_length, count)]));
            }
            classes = refined;
        }
    }

    let mut profiles = Vec::new();
    let mut out_classes = Vec::new();
    for (factor, profile_counts) in classes {
        let mut indices = Vec::new();
        for (diff_len, count) in &profile_counts {
            for _ in 0..*count {
                indices.push(diff_len + 1);
            }
        }
        let profile = BranchProfile::new(indices).expect("indices >= 2 by construction");
        let copies = factor.degree().expect("class factors are nonconstant");
        for _ in 0..copies {
            profiles.push(profile.clone());
        }
        out_classes.push(ValueClass {
            factor,
            profile,
        });
    }
    let ty = RamificationType::new(profiles);
    assert_eq!(
        ty.total_differential_length() as usize,
        n,
        "Riemann-Hurwitz: differential lengths must sum to n"
    );
    Ok(TypeOfResult {
        ty,
        layers,
        classes: out_classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly_int(field: &Field, coeffs: &[i64]) -> DensePoly {
        DensePoly::from_coeffs(coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    #[test]
    fn branch_poly_examples() {
        let f7 = Field::prime(7).unwrap();
        // x^2 -> y
        let b = branch_poly(&f7, &poly_int(&f7, &[0, 0, 1])).unwrap();
        assert_eq!(b, poly_int(&f7, &[0, 1]));
        // x^3 -> y^2
        let b = branch_poly(&f7, &poly_int(&f7, &[0, 0, 0, 1])).unwrap();
        assert_eq!(b, poly_int(&f7, &[0, 0, 1]));
        // x^4 - 2x^2 -> y^3 + 2y^2 + y = y (y+1)^2
        let b = branch_poly(&f7, &poly_int(&f7, &[0, 0, -2, 0, 1])).unwrap();
        assert_eq!(b, poly_int(&f7, &[0, 1, 2, 1]));
    }

    #[test]
    fn branch_poly_rejects_wild_characteristic() {
        let f5 = Field::prime(5).unwrap();
        // Degree 5 map over F_5: p = n + 1.
        let f = poly_int(&f5, &[0, 1, 0, 0, 0, 1]);
        assert!(matches!(
            branch_poly(&f5, &f),
            Err(CensusError::CharacteristicTooSmall { .. })
        ));
    }

    #[test]
    fn ram_length_examples() {
        let f7 = Field::prime(7).unwrap();
        assert_eq!(ram_length(&f7, &poly_int(&f7, &[0, 0, 1])).unwrap(), 0);
        assert_eq!(ram_length(&f7, &poly_int(&f7, &[0, 0, 0, 1])).unwrap(), 1);
        assert_eq!(
            ram_length(&f7, &poly_int(&f7, &[0, 0, -2, 0, 1])).unwrap(),
            1
        );
        // x^{n+1} maximizes length at n - 1.
        assert_eq!(
            ram_length(&f7, &poly_int(&f7, &[0, 0, 0, 0, 0, 1])).unwrap(),
            3
        );
    }

    #[test]
    fn type_of_examples() {
        let f7 = Field::prime(7).unwrap();
        let t = |coeffs: &[i64]| type_of(&f7, &poly_int(&f7, coeffs)).unwrap().ty;
        // x^4: one index-4 point.
        assert_eq!(t(&[0, 0, 0, 0, 1]).to_nested(), vec![vec![4]]);
        // x^3 - 3x: two simple branch points (critical values ±2 distinct).
        assert_eq!(t(&[0, -3, 0, 1]).to_nested(), vec![vec![2], vec![2]]);
        // x^4 - 2x^2: simple point over 0, two index-2 siblings over -1.
        assert_eq!(
            t(&[0, 0, -2, 0, 1]).to_nested(),
            vec![vec![2], vec![2, 2]]
        );
    }

    #[test]
    fn type_of_agrees_with_ram_length() {
        // Dual route: the fast resultant/gcd path against the full type
        // extraction, across every cubic and quartic over F_7.
        let f7 = Field::prime(7).unwrap();
        for n in [2usize, 3] {
            let total = 7u64.pow(n as u32);
            for key in 0..total {
                let mut coeffs = vec![0u64; n + 2];
                coeffs[n + 1] = 1;
                let mut k = key;
                for c in coeffs.iter_mut().take(n + 1).skip(1) {
                    *c = k % 7;
                    k /= 7;
                }
                let f = DensePoly::from_coeffs(coeffs);
                let fast = ram_length(&f7, &f).unwrap();
                let full = type_of(&f7, &f).unwrap();
                assert_eq!(full.ty.length() as usize, fast, "f = {:?}", f);
            }
        }
    }

    #[test]
    fn census_small_prime_fields() {
        let f5 = Field::prime(5).unwrap();
        let opts = CensusOptions::default();
        // Simp_2 is the square-free quadratic locus, q^2 - q of them.
        let record = census(&f5, 2, 1, &opts).unwrap();
        assert_eq!(record.count, BigUint::from(20u32));
        // Measured truth at n = 3 is q(q-1)^2 = 80 — not the closed form's
        // q^3 - 2q^2 = 75. Confirmed by the cycle-type oracle in
        // tests/census_oracles.rs and by hand in the translation-reduced
        // chart (non-simple locus = cusp C^2 = B^3 plus line C = 0).
        let record = census(&f5, 3, 1, &opts).unwrap();
        assert_eq!(record.count, BigUint::from(80u32));
        assert_eq!(
            record.histogram,
            vec![80u32.into(), 40u32.into(), 5u32.into()]
        );
        let total: BigUint = record.histogram.iter().sum();
        assert_eq!(total, BigUint::from(125u32));
    }

    #[test]
    fn census_matches_typeof_oracle() {
        // Independent oracle: classify every f by the slow full-type path and
        // compare histograms.
        let f5 = Field::prime(5).unwrap();
        let n = 3usize;
        let mut expected = vec![BigUint::zero(); n];
        for key in 0..125u64 {
            let mut coeffs = vec![0u64; n + 2];
            coeffs[n + 1] = 1;
            let mut k = key;
            for c in coeffs.iter_mut().take(n + 1).skip(1) {
                *c = k % 5;
                k /= 5;
            }
            let f = DensePoly::from_coeffs(coeffs);
            let ty = type_of(&f5, &f).unwrap().ty;
            expected[ty.length() as usize] += 1u32;
        }
        let record = census(&f5, 3, 1, &CensusOptions::default()).unwrap();
        assert_eq!(record.histogram, expected);
    }

    #[test]
    fn census_shard_invariance() {
        let f7 = Field::prime(7).unwrap();
        let baseline = census(&f7, 3, 1, &CensusOptions::default()).unwrap();
        for shards in [1usize, 7, 49] {
            for jobs in [1usize, 3] {
                let opts = CensusOptions {
                    jobs,
                    shards: Some(shards),
                    ..CensusOptions::default()
                };
                let run = census(&f7, 3, 1, &opts).unwrap();
                assert_eq!(run.count, baseline.count);
                assert_eq!(run.histogram, baseline.histogram);
            }
        }
    }

    #[test]
    fn census_translation_invariance_spot() {
        let f11 = Field::prime(11).unwrap();
        let f = poly_int(&f11, &[0, 3, 5, 0, 1]);
        let base = ram_length(&f11, &f).unwrap();
        for t in 0..11 {
            let shifted = translate(&f11, &f, t);
            assert_eq!(ram_length(&f11, &shifted).unwrap(), base);
        }
    }

    #[test]
    fn census_budget_guard() {
        let f11 = Field::prime(11).unwrap();
        let opts = CensusOptions {
            budget: 100,
            ..CensusOptions::default()
        };
        assert!(matches!(
            census(&f11, 3, 1, &opts),
            Err(CensusError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn verify_small_cases() {
        let f5 = Field::prime(5).unwrap();
        let opts = CensusOptions::default();
        // In range, and the measurement still contradicts the closed form:
        // 80 counted against a predicted 75 under both conventions.
        let in_range = verify_count(&f5, 3, 1, &opts).unwrap();
        assert_eq!(in_range.verdict, Verdict::MatchesNeither);
        assert!(in_range.flags.is_empty());
        assert_eq!(in_range.predicted_eq12, Some(BigUint::from(75u32)));
        assert_eq!(in_range.predicted_multiset, Some(BigUint::from(75u32)));
        assert_eq!(in_range.census.count, BigUint::from(80u32));

        let out_of_range = verify_count(&f5, 2, 1, &opts).unwrap();
        assert_eq!(out_of_range.verdict, Verdict::MatchesNeither);
        assert_eq!(out_of_range.flags, vec!["out-of-range:n<3m".to_string()]);
        assert_eq!(out_of_range.census.count, BigUint::from(20u32));
        assert_eq!(out_of_range.predicted_eq12, Some(BigUint::from(15u32)));
    }

    #[test]
    fn infer_c_small() {
        // The measured counts q(q-1)^2 give non-integral, prime-dependent
        // fractions (q^3 - count)/q^2 = (2q - 1)/q: the inference machinery
        // must report exactly that rather than coerce an integer.
        let fields = vec![Field::prime(5).unwrap(), Field::prime(7).unwrap()];
        let record = infer_c(&fields, 3, 1, &CensusOptions::default()).unwrap();
        assert!(!record.all_integral);
        assert!(!record.consistent);
        assert_eq!(record.c, None);
        assert_eq!(
            record.per_field[0].1,
            InferredC::reduced(45u32.into(), 25u32.into())
        );
        assert_eq!(record.per_field[0].1.numerator, BigUint::from(9u32));
        assert_eq!(record.per_field[0].1.denominator, BigUint::from(5u32));
        assert_eq!(
            record.per_field[1].1,
            InferredC::reduced(91u32.into(), 49u32.into())
        );

        let out = infer_c(
            &[Field::prime(5).unwrap()],
            2,
            1,
            &CensusOptions::default(),
        )
        .unwrap();
        // (25 - 20)/5 = 1, integral but out of range.
        assert_eq!(out.per_field[0].1, InferredC::reduced(5u32.into(), 5u32.into()));
        assert!(out.per_field[0].1.is_integral());
        assert_eq!(out.flags, vec!["out-of-range:n<3m".to_string()]);
    }

    #[test]
    fn extension_field_census() {
        // Prime-power field: the n = 3 count is q(q-1)^2 for every q with
        // p > 4, extension fields included.
        let f25 = Field::new(5, 2).unwrap();
        let record = census(&f25, 3, 1, &CensusOptions::default()).unwrap();
        assert_eq!(record.count, BigUint::from(25u64 * 24 * 24));
    }
}
