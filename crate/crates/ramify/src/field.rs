//! Arithmetic in F_q, q = p^d, with a canonical element enumeration.
//!
//! Elements are packed into `u64`: a residue for d = 1, base-p digits of the
//! representative polynomial for d > 1 (digit i is the coefficient of x^i).
//! The packing doubles as the canonical enumeration of the field: element k
//! of the enumeration is the encoding k, and for 0 ≤ k < p it is the constant
//! k, so sample points "0, 1, …, n" make sense in any F_q with p > n.
//!
//! The modulus of an extension field is pinned deterministically: the
//! lexicographically smallest monic irreducible, scanning coefficient tuples
//! (c_{d−1}, …, c₀) in ascending numeric order.

use crate::poly::{self, DensePoly};

const MAX_EXT_DEGREE: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    DegreeZero,
    #[error("extension degree {0} exceeds the supported maximum {MAX_EXT_DEGREE}")]
    DegreeTooLarge(u32),
    #[error("field size p^d overflows u64")]
    SizeOverflow,
}

/// A concrete F_{p^d} with all derived data needed for arithmetic.
#[derive(Debug, Clone)]
pub struct Field {
    p: u64,
    d: u32,
    q: u64,
    /// Monic modulus coefficients (ascending, length d + 1); empty for d = 1.
    modulus: Vec<u64>,
    /// x^{d+k} mod modulus for k = 0..d-1, each row of length d.
    reduce_rows: Vec<Vec<u64>>,
    /// inv_table[a] = a^{-1} for 1 <= a < q, when q is small enough to afford it.
    inv_table: Vec<u64>,
}

const INV_TABLE_MAX: u64 = 1 << 20;

impl Field {
    /// The prime field F_p.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        Self::new(p, 1)
    }

    /// F_{p^d} with the deterministic modulus. This is the `field_make`
    /// entry point.
    pub fn new(p: u64, d: u32) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if d == 0 {
            return Err(FieldError::DegreeZero);
        }
        if d > MAX_EXT_DEGREE {
            return Err(FieldError::DegreeTooLarge(d));
        }
        let q = (0..d).try_fold(1u64, |acc, _| acc.checked_mul(p)).ok_or(FieldError::SizeOverflow)?;
        let mut field = Field {
            p,
            d,
            q,
            modulus: Vec::new(),
            reduce_rows: Vec::new(),
            inv_table: Vec::new(),
        };
        if d > 1 {
            field.modulus = smallest_irreducible(p, d);
            field.reduce_rows = reduction_rows(p, &field.modulus);
        }
        if q <= INV_TABLE_MAX {
            field.inv_table = build_inverse_table(&field);
        }
        Ok(field)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.d
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients (ascending, monic); empty slice for a prime field.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Element k of the canonical enumeration, 0 ≤ k < q.
    pub fn element(&self, k: u64) -> u64 {
        debug_assert!(k < self.q);
        k
    }

    /// The constant k·1, for any integer k.
    pub fn from_int(&self, k: i64) -> u64 {
        let p = self.p as i64;
        (k.rem_euclid(p)) as u64
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        1
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.d == 1 {
            let s = a + b;
            if s >= self.p {
                s - self.p
            } else {
                s
            }
        } else {
            self.zip_digits(a, b, |x, y| {
                let s = x + y;
                if s >= self.p {
                    s - self.p
                } else {
                    s
                }
            })
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if self.d == 1 {
            if a >= b {
                a - b
            } else {
                a + self.p - b
            }
        } else {
            self.zip_digits(a, b, |x, y| if x >= y { x - y } else { x + self.p - y })
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        self.sub(0, a)
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.d == 1 {
            if self.p <= u32::MAX as u64 {
                a * b % self.p
            } else {
                ((a as u128 * b as u128) % self.p as u128) as u64
            }
        } else {
            self.mul_ext(a, b)
        }
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        if !self.inv_table.is_empty() {
            return self.inv_table[a as usize];
        }
        self.pow(a, self.q - 2)
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// The p-power Frobenius.
    pub fn frobenius(&self, a: u64) -> u64 {
        self.pow(a, self.p)
    }

    /// Base-p digits of an element (low degree first), d entries.
    pub fn digits(&self, mut a: u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.d as usize);
        for _ in 0..self.d {
            out.push(a % self.p);
            a /= self.p;
        }
        out
    }

    pub fn from_digits(&self, digits: &[u64]) -> u64 {
        let mut acc = 0u64;
        for &c in digits.iter().rev() {
            debug_assert!(c < self.p);
            acc = acc * self.p + c;
        }
        acc
    }

    #[inline]
    fn zip_digits(&self, mut a: u64, mut b: u64, op: impl Fn(u64, u64) -> u64) -> u64 {
        let mut out = 0u64;
        let mut shift = 1u64;
        for _ in 0..self.d {
            out += op(a % self.p, b % self.p) * shift;
            shift *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    fn mul_ext(&self, a: u64, b: u64) -> u64 {
        let d = self.d as usize;
        let mut da = [0u64; MAX_EXT_DEGREE as usize];
        let mut db = [0u64; MAX_EXT_DEGREE as usize];
        let mut aa = a;
        let mut bb = b;
        for i in 0..d {
            da[i] = aa % self.p;
            db[i] = bb % self.p;
            aa /= self.p;
            bb /= self.p;
        }
        let mut prod = [0u128; 2 * MAX_EXT_DEGREE as usize];
        for i in 0..d {
            if da[i] == 0 {
                continue;
            }
            for j in 0..d {
                prod[i + j] += da[i] as u128 * db[j] as u128;
            }
        }
        // Fold degrees >= d back down via the precomputed rows.
        for k in (d..2 * d - 1).rev() {
            let c = (prod[k] % self.p as u128) as u64;
            prod[k] = 0;
            if c == 0 {
                continue;
            }
            let row = &self.reduce_rows[k - d];
            for (i, &r) in row.iter().enumerate() {
                prod[i] += c as u128 * r as u128;
            }
        }
        let mut out = 0u64;
        let mut shift = 1u64;
        for item in prod.iter().take(d) {
            out += ((item % self.p as u128) as u64) * shift;
            shift *= self.p;
        }
        out
    }
}

fn build_inverse_table(field: &Field) -> Vec<u64> {
    let q = field.q;
    let mut table = vec![0u64; q as usize];
    // a^{q-2} per entry is fine at table-building sizes.
    for a in 1..q {
        table[a as usize] = field.pow(a, q - 2);
    }
    table
}

fn reduction_rows(p: u64, modulus: &[u64]) -> Vec<Vec<u64>> {
    let d = modulus.len() - 1;
    // x^d = -(low part of modulus); later rows fold one power at a time.
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(d - 1);
    let first: Vec<u64> = modulus[..d].iter().map(|&c| (p - c % p) % p).collect();
    rows.push(first);
    for k in 1..d - 1 {
        let prev = rows[k - 1].clone();
        let mut next = vec![0u64; d];
        next[1..d].copy_from_slice(&prev[..d - 1]);
        let carry = prev[d - 1];
        if carry != 0 {
            for i in 0..d {
                next[i] =
                    ((next[i] as u128 + carry as u128 * rows[0][i] as u128) % p as u128) as u64;
            }
        }
        rows.push(next);
    }
    rows
}

/// Scans monic degree-d polynomials over F_p in ascending numeric order of
/// (c_{d-1}, …, c_0) and returns the first irreducible one.
fn smallest_irreducible(p: u64, d: u32) -> Vec<u64> {
    let fp = Field::prime(p).expect("p was checked prime");
    let d = d as usize;
    let count = p.pow(d as u32);
    for key in 0..count {
        // key encodes (c_{d-1}, ..., c_0) as a base-p number, c_{d-1} most
        // significant, so ascending key is the required scan order.
        let mut coeffs = vec![0u64; d + 1];
        coeffs[d] = 1;
        let mut k = key;
        for c in coeffs.iter_mut().take(d) {
            *c = k % p;
            k /= p;
        }
        let candidate = DensePoly::from_coeffs(coeffs);
        if is_irreducible(&fp, &candidate) {
            return candidate.into_coeffs();
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over F_p")
}

/// Irreducibility over F_p: x^{p^d} ≡ x (mod g), and x^{p^{d/r}} − x is
/// coprime to g for every prime r dividing d.
fn is_irreducible(fp: &Field, g: &DensePoly) -> bool {
    let d = g.degree().expect("candidate is nonzero") as u32;
    if d == 0 {
        return false;
    }
    let x = DensePoly::from_coeffs(vec![0, 1]);
    let frob_d = poly::pow_mod(fp, &x, &pow_u128(fp.p(), d), g);
    if frob_d != x {
        return false;
    }
    for r in prime_divisors(d) {
        let e = d / r;
        let frob_e = poly::pow_mod(fp, &x, &pow_u128(fp.p(), e), g);
        let diff = poly::sub(fp, &frob_e, &x);
        if diff.is_zero() {
            return false;
        }
        let common = poly::gcd_monic(fp, &diff, g).expect("g is nonzero");
        if common.degree() != Some(0) {
            return false;
        }
    }
    true
}

fn pow_u128(base: u64, exp: u32) -> Vec<u64> {
    // p^e as base-2^64 limbs, little endian, for use as a pow_mod exponent.
    let mut limbs = vec![1u64];
    for _ in 0..exp {
        let mut carry = 0u128;
        for limb in limbs.iter_mut() {
            let v = *limb as u128 * base as u128 + carry;
            *limb = v as u64;
            carry = v >> 64;
        }
        if carry > 0 {
            limbs.push(carry as u64);
        }
    }
    limbs
}

fn prime_divisors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Deterministic Miller–Rabin, valid for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mod_pow_u64(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % modulus as u128) as u64;
        }
        base = ((base as u128 * base as u128) % modulus as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Splits q into (p, d) if q is a prime power, for the CLI's `--q` shorthand.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    if is_prime(q) {
        return Some((q, 1));
    }
    // q = p^d with d >= 2 means p <= q^(1/2).
    let mut p = 2u64;
    while p.checked_mul(p).is_some_and(|sq| sq <= q) {
        if q.is_multiple_of(p) {
            let mut rest = q;
            let mut d = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                d += 1;
            }
            return if rest == 1 && is_prime(p) {
                Some((p, d))
            } else {
                None
            };
        }
        p += 1;
    }
    None
}
