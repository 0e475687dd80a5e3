//! Dense univariate polynomials over a [`Field`].
//!
//! Coefficients are stored ascending with trailing zeros stripped, so the
//! zero polynomial is the empty vector. All operations take the field as an
//! explicit context argument. The Euclidean kernels (`resultant`, gcd) also
//! exist as in-place slice routines so the census inner loop can run them on
//! reusable buffers.
//!
//! The resultant here is pinned to the product formula
//! `res(a, b) = lc(b)^{deg a} · Π_{b(β)=0} a(β)` (roots of b counted with
//! multiplicity, over the algebraic closure); the Euclidean recurrence keeps
//! that normalization, and the tests check it against a Sylvester-determinant
//! oracle up to the sign relating the two conventions.

use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("resultant requires nonzero inputs")]
    ZeroInput,
    #[error("root multiplicity >= field characteristic")]
    MultiplicityOverflow,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DensePoly {
    coeffs: Vec<u64>,
}

impl DensePoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// Builds from an ascending coefficient vector, stripping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: u64) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn x() -> Self {
        Self {
            coeffs: vec![0, 1],
        }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u64> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(1)
    }

    pub fn eval(&self, field: &Field, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = field.add(field.mul(acc, x), c);
        }
        acc
    }

    pub fn derivative(&self, field: &Field) -> DensePoly {
        if self.coeffs.len() <= 1 {
            return DensePoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| field.mul(field.from_int(i as i64), c))
            .collect();
        DensePoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, field: &Field, c: u64) -> DensePoly {
        DensePoly::from_coeffs(self.coeffs.iter().map(|&a| field.mul(a, c)).collect())
    }

    pub fn make_monic(&self, field: &Field) -> DensePoly {
        match self.leading() {
            None | Some(1) => self.clone(),
            Some(lc) => self.scale(field, field.inv(lc)),
        }
    }

    /// f(x + t) by repeated synthetic division (Taylor shift), O(deg²).
    pub fn taylor_shift(&self, field: &Field, t: u64) -> DensePoly {
        let mut work = self.coeffs.clone();
        let n = work.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let (hi, lo) = (work[j + 1], work[j]);
                work[j] = field.add(lo, field.mul(hi, t));
            }
        }
        DensePoly::from_coeffs(work)
    }
}

pub fn add(field: &Field, a: &DensePoly, b: &DensePoly) -> DensePoly {
    let len = a.coeffs.len().max(b.coeffs.len());
    let coeffs = (0..len)
        .map(|i| field.add(a.coeff(i), b.coeff(i)))
        .collect();
    DensePoly::from_coeffs(coeffs)
}

pub fn sub(field: &Field, a: &DensePoly, b: &DensePoly) -> DensePoly {
    let len = a.coeffs.len().max(b.coeffs.len());
    let coeffs = (0..len)
        .map(|i| field.sub(a.coeff(i), b.coeff(i)))
        .collect();
    DensePoly::from_coeffs(coeffs)
}

pub fn mul(field: &Field, a: &DensePoly, b: &DensePoly) -> DensePoly {
    if a.is_zero() || b.is_zero() {
        return DensePoly::zero();
    }
    let mut coeffs = vec![0u64; a.coeffs.len() + b.coeffs.len() - 1];
    for (i, &ca) in a.coeffs.iter().enumerate() {
        if ca == 0 {
            continue;
        }
        for (j, &cb) in b.coeffs.iter().enumerate() {
            coeffs[i + j] = field.add(coeffs[i + j], field.mul(ca, cb));
        }
    }
    DensePoly::from_coeffs(coeffs)
}

/// Quotient and remainder; panics on a zero divisor.
pub fn div_rem(field: &Field, a: &DensePoly, b: &DensePoly) -> (DensePoly, DensePoly) {
    let db = b.degree().expect("division by the zero polynomial");
    let da = match a.degree() {
        Some(da) if da >= db => da,
        _ => return (DensePoly::zero(), a.clone()),
    };
    let inv_lc = field.inv(b.leading().unwrap());
    let mut rem = a.coeffs.clone();
    let mut quot = vec![0u64; da - db + 1];
    for k in (db..=da).rev() {
        let c = field.mul(rem[k], inv_lc);
        quot[k - db] = c;
        rem[k] = 0;
        if c != 0 {
            for i in 0..db {
                rem[k - db + i] = field.sub(rem[k - db + i], field.mul(c, b.coeffs[i]));
            }
        }
    }
    (DensePoly::from_coeffs(quot), DensePoly::from_coeffs(rem))
}

/// Exact division; panics if the division leaves a remainder.
pub fn div_exact(field: &Field, a: &DensePoly, b: &DensePoly) -> DensePoly {
    let (q, r) = div_rem(field, a, b);
    assert!(r.is_zero(), "inexact polynomial division");
    q
}

/// Monic gcd by Euclidean remainders; gcd(f, 0) is the monic scaling of f.
pub fn gcd_monic(field: &Field, a: &DensePoly, b: &DensePoly) -> Result<DensePoly, PolyError> {
    if a.is_zero() && b.is_zero() {
        return Err(PolyError::BothZero);
    }
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = div_rem(field, &x, &y);
        x = y;
        y = r;
    }
    Ok(x.make_monic(field))
}

/// `res(a, b) = lc(b)^{deg a} · Π_{b(β)=0} a(β)`.
pub fn resultant(field: &Field, a: &DensePoly, b: &DensePoly) -> Result<u64, PolyError> {
    if a.is_zero() || b.is_zero() {
        return Err(PolyError::ZeroInput);
    }
    let mut abuf = a.coeffs.clone();
    let mut bbuf = b.coeffs.clone();
    let da = abuf.len() - 1;
    let db = bbuf.len() - 1;
    Ok(resultant_in_place(field, &mut abuf, da, &mut bbuf, db))
}

/// In-place Euclidean resultant on coefficient buffers; `a[..=da]` and
/// `b[..=db]` hold the inputs with nonzero leading entries. The buffers are
/// clobbered.
pub(crate) fn resultant_in_place(
    field: &Field,
    a: &mut [u64],
    mut da: usize,
    b: &mut [u64],
    mut db: usize,
) -> u64 {
    let mut acc = 1u64;
    let mut x: &mut [u64] = a;
    let mut y: &mut [u64] = b;
    loop {
        if db == 0 {
            return field.mul(acc, field.pow(y[0], da as u64));
        }
        if da == 0 {
            return field.mul(acc, field.pow(x[0], db as u64));
        }
        if da < db {
            std::mem::swap(&mut x, &mut y);
            std::mem::swap(&mut da, &mut db);
            if da & db & 1 == 1 {
                acc = field.neg(acc);
            }
        }
        // Reduce x modulo y, in place.
        let inv_lc = field.inv(y[db]);
        for k in (db..=da).rev() {
            let c = field.mul(x[k], inv_lc);
            x[k] = 0;
            if c != 0 {
                for i in 0..db {
                    x[k - db + i] = field.sub(x[k - db + i], field.mul(c, y[i]));
                }
            }
        }
        let mut dr = db;
        loop {
            if dr == 0 {
                return 0; // remainder vanished: shared root
            }
            dr -= 1;
            if x[dr] != 0 {
                break;
            }
            if dr == 0 {
                return 0;
            }
        }
        acc = field.mul(acc, field.pow(y[db], (da - dr) as u64));
        da = dr;
    }
}

/// Degree of gcd(a, b) on reusable buffers; both inputs nonzero.
pub(crate) fn gcd_degree_in_place(
    field: &Field,
    a: &mut [u64],
    mut da: usize,
    b: &mut [u64],
    mut db: usize,
) -> usize {
    let mut x: &mut [u64] = a;
    let mut y: &mut [u64] = b;
    if da < db {
        std::mem::swap(&mut x, &mut y);
        std::mem::swap(&mut da, &mut db);
    }
    loop {
        // Reduce x modulo y; if nothing is left, deg gcd = db.
        let inv_lc = field.inv(y[db]);
        for k in (db..=da).rev() {
            let c = field.mul(x[k], inv_lc);
            x[k] = 0;
            if c != 0 {
                for i in 0..db {
                    x[k - db + i] = field.sub(x[k - db + i], field.mul(c, y[i]));
                }
            }
        }
        let mut dr = db;
        let mut found = false;
        while dr > 0 {
            dr -= 1;
            if x[dr] != 0 {
                found = true;
                break;
            }
        }
        if !found {
            return db;
        }
        if dr == 0 {
            return 0; // gcd is a nonzero constant
        }
        std::mem::swap(&mut x, &mut y);
        da = db;
        db = dr;
    }
}

/// Squarefree decomposition h = lc · Π layer^multiplicity with squarefree,
/// pairwise coprime layers, listed by ascending multiplicity (gcd cascade).
/// Rejects inputs with a root multiplicity at or above the characteristic.
pub fn squarefree_decomposition(
    field: &Field,
    h: &DensePoly,
) -> Result<Vec<(DensePoly, u32)>, PolyError> {
    assert!(!h.is_zero(), "squarefree decomposition of zero");
    let h = h.make_monic(field);
    if h.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let hp = h.derivative(field);
    if hp.is_zero() {
        // h is a polynomial in x^p.
        return Err(PolyError::MultiplicityOverflow);
    }
    let mut c = gcd_monic(field, &h, &hp).expect("h nonzero");
    let mut w = div_exact(field, &h, &c);
    let mut layers = Vec::new();
    let mut multiplicity = 1u32;
    while w.degree() != Some(0) {
        if multiplicity as u64 >= field.p() {
            return Err(PolyError::MultiplicityOverflow);
        }
        let y = gcd_monic(field, &w, &c).expect("w nonzero");
        let layer = div_exact(field, &w, &y);
        if layer.degree() != Some(0) {
            layers.push((layer, multiplicity));
        }
        c = div_exact(field, &c, &y);
        w = y;
        multiplicity += 1;
    }
    if c.degree() != Some(0) {
        // A p-th power survived the cascade.
        return Err(PolyError::MultiplicityOverflow);
    }
    // Reconstruction check: catches any characteristic-p artifact the cascade
    // missed.
    let mut rebuilt = DensePoly::constant(1);
    for (layer, k) in &layers {
        for _ in 0..*k {
            rebuilt = mul(field, &rebuilt, layer);
        }
    }
    if rebuilt != h {
        return Err(PolyError::MultiplicityOverflow);
    }
    Ok(layers)
}

/// Product of the distinct-root parts: h / gcd(h, h′), monic.
pub fn squarefree_part(field: &Field, h: &DensePoly) -> Result<DensePoly, PolyError> {
    assert!(!h.is_zero(), "squarefree part of zero");
    let h = h.make_monic(field);
    if h.degree() == Some(0) {
        return Ok(DensePoly::constant(1));
    }
    let hp = h.derivative(field);
    if hp.is_zero() {
        return Err(PolyError::MultiplicityOverflow);
    }
    let g = gcd_monic(field, &h, &hp).expect("h nonzero");
    Ok(div_exact(field, &h, &g))
}

/// Lagrange basis polynomials for the sample points `xs` (distinct):
/// row j holds the coefficients of L_j with L_j(x_i) = δ_ij.
pub fn lagrange_basis(field: &Field, xs: &[u64]) -> Vec<Vec<u64>> {
    let n = xs.len();
    let mut rows = Vec::with_capacity(n);
    for j in 0..n {
        let mut numerator = DensePoly::constant(1);
        let mut denom = 1u64;
        for (i, &xi) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            numerator = mul(
                field,
                &numerator,
                &DensePoly::from_coeffs(vec![field.neg(xi), 1]),
            );
            denom = field.mul(denom, field.sub(xs[j], xi));
        }
        let mut row = numerator.scale(field, field.inv(denom)).into_coeffs();
        row.resize(n, 0);
        rows.push(row);
    }
    rows
}

/// Interpolates the unique polynomial of degree < xs.len() through the
/// points (xs[i], ys[i]).
pub fn interpolate(field: &Field, xs: &[u64], ys: &[u64]) -> DensePoly {
    assert_eq!(xs.len(), ys.len());
    let basis = lagrange_basis(field, xs);
    let mut coeffs = vec![0u64; xs.len()];
    for (j, row) in basis.iter().enumerate() {
        if ys[j] == 0 {
            continue;
        }
        for (i, &c) in row.iter().enumerate() {
            coeffs[i] = field.add(coeffs[i], field.mul(ys[j], c));
        }
    }
    DensePoly::from_coeffs(coeffs)
}

pub fn mul_mod(field: &Field, a: &DensePoly, b: &DensePoly, m: &DensePoly) -> DensePoly {
    let (_, r) = div_rem(field, &mul(field, a, b), m);
    r
}

/// base^exp mod m, with the exponent given as little-endian u64 limbs.
pub fn pow_mod(field: &Field, base: &DensePoly, exp_limbs: &[u64], m: &DensePoly) -> DensePoly {
    let mut acc = DensePoly::constant(1);
    let (_, mut sq) = div_rem(field, base, m);
    for &limb in exp_limbs {
        let mut bits = limb;
        for _ in 0..64 {
            if bits & 1 == 1 {
                acc = mul_mod(field, &acc, &sq, m);
            }
            sq = mul_mod(field, &sq, &sq, m);
            bits >>= 1;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64], field: &Field) -> DensePoly {
        DensePoly::from_coeffs(coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    /// Expand a product of linear factors Π (x - roots[i]); test oracle.
    fn from_roots(field: &Field, roots: &[u64]) -> DensePoly {
        let mut acc = DensePoly::constant(1);
        for &r in roots {
            acc = mul(field, &acc, &DensePoly::from_coeffs(vec![field.neg(r), 1]));
        }
        acc
    }

    /// Sylvester-matrix resultant, used only as an independent oracle.
    /// Returns the classical determinant convention.
    fn sylvester_resultant(field: &Field, a: &DensePoly, b: &DensePoly) -> u64 {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        if da == 0 {
            return field.pow(a.coeff(0), db as u64);
        }
        if db == 0 {
            return field.pow(b.coeff(0), da as u64);
        }
        let size = da + db;
        let mut m = vec![vec![0u64; size]; size];
        for row in 0..db {
            for (k, &c) in a.coeffs().iter().enumerate() {
                m[row][row + (da - k)] = c;
            }
        }
        for row in 0..da {
            for (k, &c) in b.coeffs().iter().enumerate() {
                m[db + row][row + (db - k)] = c;
            }
        }
        // Gaussian elimination over the field.
        let mut det = 1u64;
        for col in 0..size {
            let pivot = (col..size).find(|&r| m[r][col] != 0);
            let pivot = match pivot {
                Some(p) => p,
                None => return 0,
            };
            if pivot != col {
                m.swap(pivot, col);
                det = field.neg(det);
            }
            det = field.mul(det, m[col][col]);
            let inv = field.inv(m[col][col]);
            let pivot_row = m[col].clone();
            for row in m.iter_mut().skip(col + 1) {
                let factor = field.mul(row[col], inv);
                if factor == 0 {
                    continue;
                }
                for (entry, &pivot) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    let t = field.mul(factor, pivot);
                    *entry = field.sub(*entry, t);
                }
            }
        }
        det
    }

    #[test]
    fn division_identity() {
        let f = Field::prime(13).unwrap();
        let a = poly(&[3, 0, 7, 1, 9], &f);
        let b = poly(&[5, 1, 2], &f);
        let (q, r) = div_rem(&f, &a, &b);
        let back = add(&f, &mul(&f, &q, &b), &r);
        assert_eq!(back, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_examples() {
        let f5 = Field::prime(5).unwrap();
        let a = poly(&[-1, 0, 1], &f5); // x^2 - 1
        let b = poly(&[-1, 1], &f5); // x - 1
        assert_eq!(gcd_monic(&f5, &a, &b).unwrap(), b);

        let g = poly(&[2, 3, 1], &f5);
        assert_eq!(
            gcd_monic(&f5, &g, &DensePoly::zero()).unwrap(),
            g.make_monic(&f5)
        );
        assert_eq!(
            gcd_monic(&f5, &DensePoly::zero(), &DensePoly::zero()),
            Err(PolyError::BothZero)
        );

        // ((x-2)^2 (x-3), (x-2)(x-4)) over F_7, both sides built by expansion.
        let f7 = Field::prime(7).unwrap();
        let lhs = from_roots(&f7, &[2, 2, 3]);
        let rhs = from_roots(&f7, &[2, 4]);
        assert_eq!(gcd_monic(&f7, &lhs, &rhs).unwrap(), from_roots(&f7, &[2]));
    }

    #[test]
    fn resultant_examples() {
        let f5 = Field::prime(5).unwrap();
        // res(x^2+1, x+1) = (x^2+1) evaluated at -1, since x+1 is monic.
        let a = poly(&[1, 0, 1], &f5);
        let b = poly(&[1, 1], &f5);
        assert_eq!(resultant(&f5, &a, &b).unwrap(), 2);

        // Constant second argument: c^{deg a}.
        let c = DensePoly::constant(3);
        assert_eq!(resultant(&f5, &a, &c).unwrap(), f5.pow(3, 2));

        // Shared root iff zero.
        let f7 = Field::prime(7).unwrap();
        let p1 = from_roots(&f7, &[1, 2]);
        let p2 = from_roots(&f7, &[2, 5]);
        assert_eq!(resultant(&f7, &p1, &p2).unwrap(), 0);
        let p3 = from_roots(&f7, &[3, 5]);
        assert_ne!(resultant(&f7, &p1, &p3).unwrap(), 0);

        assert_eq!(
            resultant(&f5, &DensePoly::zero(), &b),
            Err(PolyError::ZeroInput)
        );
    }

    #[test]
    fn resultant_matches_product_formula_on_split_inputs() {
        let f = Field::prime(11).unwrap();
        let cases: &[(&[i64], &[u64], i64)] = &[
            (&[4, 1, 0, 2], &[1, 5, 5, 9], 3),
            (&[1, 1], &[0, 0, 7], 2),
            (&[3], &[1, 2, 8], 1),
        ];
        for (a_coeffs, roots, scale) in cases {
            let a = poly(a_coeffs, &f);
            let b = from_roots(&f, roots).scale(&f, f.from_int(*scale));
            let lc = b.leading().unwrap();
            let mut expected = f.pow(lc, a.degree().unwrap() as u64);
            for &r in *roots {
                expected = f.mul(expected, a.eval(&f, r));
            }
            assert_eq!(resultant(&f, &a, &b).unwrap(), expected);
        }
    }

    #[test]
    fn resultant_matches_sylvester_oracle_up_to_convention() {
        // res_here(a,b) = (-1)^{deg a · deg b} · det Sylvester(a, b).
        for p in [5u64, 11, 13] {
            let f = Field::prime(p).unwrap();
            let polys = [
                poly(&[1, 2, 3], &f),
                poly(&[4, 0, 0, 1], &f),
                poly(&[2, 1], &f),
                poly(&[3, 3, 1, 0, 2], &f),
            ];
            for a in &polys {
                for b in &polys {
                    let da = a.degree().unwrap();
                    let db = b.degree().unwrap();
                    let mut expected = sylvester_resultant(&f, a, b);
                    if da * db % 2 == 1 {
                        expected = f.neg(expected);
                    }
                    assert_eq!(resultant(&f, a, b).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn squarefree_decomposition_examples() {
        let f7 = Field::prime(7).unwrap();
        // (x-1)^2 (x-2)
        let h = from_roots(&f7, &[1, 1, 2]);
        let layers = squarefree_decomposition(&f7, &h).unwrap();
        assert_eq!(
            layers,
            vec![(from_roots(&f7, &[2]), 1), (from_roots(&f7, &[1]), 2)]
        );

        // Squarefree input: one layer with multiplicity 1.
        let s = from_roots(&f7, &[1, 2, 4]);
        assert_eq!(squarefree_decomposition(&f7, &s).unwrap(), vec![(s.clone(), 1)]);

        // x^3 (x^2 - 1)^2 over F_7 -> [(x^2-1, 2), (x, 3)].
        let h2 = mul(
            &f7,
            &from_roots(&f7, &[0, 0, 0]),
            &mul(
                &f7,
                &poly(&[-1, 0, 1], &f7),
                &poly(&[-1, 0, 1], &f7),
            ),
        );
        let layers2 = squarefree_decomposition(&f7, &h2).unwrap();
        assert_eq!(
            layers2,
            vec![(poly(&[-1, 0, 1], &f7), 2), (poly(&[0, 1], &f7), 3)]
        );
    }

    #[test]
    fn squarefree_rejects_wild_multiplicities() {
        let f3 = Field::prime(3).unwrap();
        // x^3 has derivative 0 in characteristic 3.
        let cube = from_roots(&f3, &[0, 0, 0]);
        assert_eq!(
            squarefree_decomposition(&f3, &cube),
            Err(PolyError::MultiplicityOverflow)
        );
        // x^4 = x * x^3: the derivative is x^3, gcd leaves a cube behind.
        let fourth = from_roots(&f3, &[0, 0, 0, 0]);
        assert_eq!(
            squarefree_decomposition(&f3, &fourth),
            Err(PolyError::MultiplicityOverflow)
        );
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        let f7 = Field::prime(7).unwrap();
        let h = from_roots(&f7, &[1, 1, 2, 5, 5, 5]);
        assert_eq!(
            squarefree_part(&f7, &h).unwrap(),
            from_roots(&f7, &[1, 2, 5])
        );
    }

    #[test]
    fn interpolation_roundtrip() {
        let f = Field::new(5, 2).unwrap();
        let target = DensePoly::from_coeffs(vec![7, 3, 0, 24]);
        let xs: Vec<u64> = (0..4).collect();
        let ys: Vec<u64> = xs.iter().map(|&x| target.eval(&f, x)).collect();
        assert_eq!(interpolate(&f, &xs, &ys), target);
    }

    #[test]
    fn taylor_shift_matches_eval() {
        let f = Field::prime(13).unwrap();
        let a = poly(&[3, 1, 0, 5, 2], &f);
        for t in 0..13 {
            let shifted = a.taylor_shift(&f, t);
            for x in 0..13 {
                assert_eq!(shifted.eval(&f, x), a.eval(&f, f.add(x, t)));
            }
        }
    }

    #[test]
    fn extension_field_gcd() {
        let f9 = Field::new(3, 2).unwrap();
        // (x - g)(x - 1) and (x - g)(x - 2) share exactly x - g for g = the
        // generator digit encoding 3.
        let g = 3u64;
        let a = mul(
            &f9,
            &DensePoly::from_coeffs(vec![f9.neg(g), 1]),
            &DensePoly::from_coeffs(vec![f9.neg(1), 1]),
        );
        let b = mul(
            &f9,
            &DensePoly::from_coeffs(vec![f9.neg(g), 1]),
            &DensePoly::from_coeffs(vec![f9.neg(2), 1]),
        );
        let d = gcd_monic(&f9, &a, &b).unwrap();
        assert_eq!(d, DensePoly::from_coeffs(vec![f9.neg(g), 1]));
    }

    #[test]
    fn pow_mod_matches_naive() {
        let f = Field::prime(7).unwrap();
        let base = poly(&[2, 1], &f);
        let modulus = poly(&[1, 0, 1, 1], &f);
        let mut naive = DensePoly::constant(1);
        for e in 0..40u64 {
            let fast = pow_mod(&f, &base, &[e], &modulus);
            assert_eq!(fast, naive, "exponent {e}");
            naive = mul_mod(&f, &naive, &base, &modulus);
        }
    }
}
