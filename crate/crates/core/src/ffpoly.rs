//! Finite fields `F_{p^e}`, polynomials over them, and the number-theoretic
//! counts that feed the generating functions.
//!
//! Field elements are indices `0..q`: the base-`p` digits of an index are the
//! coefficients of the element's polynomial representative, constant term in
//! the least significant digit. So `0` and `1` are the field's zero and one,
//! and the prime subfield is `0..p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Zero};
use thiserror::Error;

use crate::prime_power::{is_prime, PrimePower};

/// Largest field the table representation supports.
pub const MAX_FIELD_ORDER: u64 = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: u64, b: u64 },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field order {0} exceeds the supported maximum of {MAX_FIELD_ORDER}")]
    FieldTooLarge(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
}

pub fn moebius(n: u64) -> i8 {
    assert!(n >= 1, "moebius is defined for n >= 1");
    let mut n = n;
    let mut sign = 1i8;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    let mut n = n;
    let mut result = n;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            while n.is_multiple_of(d) {
                n /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Number of monic irreducible polynomials of degree `d` over `F_q`:
/// `(1/d) * sum_{e | d} mu(d/e) q^e`.
pub fn nu_irreducible(q: u64, d: u32) -> BigInt {
    assert!(d >= 1, "degree must be positive");
    let qb = BigInt::from(q);
    let total: BigInt = divisors(u64::from(d))
        .into_iter()
        .map(|e| BigInt::from(moebius(u64::from(d) / e)) * Pow::pow(&qb, e as u32))
        .sum();
    let (quot, rem) = total.div_rem(&BigInt::from(d));
    debug_assert!(rem.is_zero());
    quot
}

/// Least `t >= 1` with `q^t = 1 (mod m)`.
pub fn mult_order(q: u64, m: u64) -> Result<u64, FieldError> {
    assert!(m >= 1);
    if q.gcd(&m) != 1 {
        return Err(FieldError::NotCoprime { a: q, b: m });
    }
    if m == 1 {
        return Ok(1);
    }
    let m128 = u128::from(m);
    let base = u128::from(q) % m128;
    let mut acc = base;
    let mut t = 1;
    while acc != 1 {
        acc = acc * base % m128;
        t += 1;
    }
    Ok(t)
}

/// Degrees of the irreducible factors of `z^k - 1` over `F_q`, ascending.
///
/// Each cyclotomic polynomial `Phi_m` with `m | k` splits into
/// `phi(m)/ord_m(q)` factors of degree `ord_m(q)`.
pub fn cyclotomic_factor_type(q: PrimePower, k: u64) -> Result<Vec<u64>, FieldError> {
    assert!(k >= 1);
    if k.is_multiple_of(q.characteristic()) {
        return Err(FieldError::NotCoprime {
            a: q.characteristic(),
            b: k,
        });
    }
    let mut degrees = Vec::new();
    for m in divisors(k) {
        let t = mult_order(q.q(), m)?;
        let copies = euler_phi(m) / t;
        degrees.extend(std::iter::repeat_n(t, copies as usize));
    }
    degrees.sort_unstable();
    Ok(degrees)
}

/// A concrete finite field with dense operation tables.
#[derive(Clone)]
pub struct FieldSpec {
    q: PrimePower,
    /// Monic irreducible over `F_p`, constant term first; `[0, 1]` for prime fields.
    modulus: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl std::fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FieldSpec")
            .field("q", &self.q.q())
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

fn prime_field_tables(p: usize) -> (Vec<u8>, Vec<u8>) {
    let mut add = vec![0u8; p * p];
    let mut mul = vec![0u8; p * p];
    for a in 0..p {
        for b in 0..p {
            add[a * p + b] = ((a + b) % p) as u8;
            mul[a * p + b] = ((a * b) % p) as u8;
        }
    }
    (add, mul)
}

/// Coefficient vector (constant first) of the polynomial with base-`p` index `idx`.
fn digits(mut idx: usize, p: usize, len: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((idx % p) as u8);
        idx /= p;
    }
    out
}

fn undigits(coeffs: &[u8], p: usize) -> usize {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c as usize)
}

impl FieldSpec {
    /// The field with `q` elements.
    pub fn of_order(q: PrimePower) -> Result<Self, FieldError> {
        Self::build(q.characteristic(), q.degree())
    }

    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        Self::build(p, 1)
    }

    /// `F_{p^e}` modulo the lexicographically smallest monic irreducible of
    /// degree `e` (coefficient tuples compared constant term first).
    pub fn build(p: u64, e: u32) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if e == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = p
            .checked_pow(e)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or(FieldError::FieldTooLarge(p.saturating_pow(e)))?;
        let pu = p as usize;
        let qu = q as usize;
        let (padd, pmul) = prime_field_tables(pu);

        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            let base = Self::from_tables(PrimePower::from_parts(p, 1).unwrap(), vec![0, 1], padd.clone(), pmul.clone());
            smallest_irreducible(&base, e as usize)
        };

        let mut add = vec![0u8; qu * qu];
        let mut mul = vec![0u8; qu * qu];
        let e = e as usize;
        for a in 0..qu {
            let da = digits(a, pu, e);
            for b in 0..qu {
                let db = digits(b, pu, e);
                let sum: Vec<u8> = da.iter().zip(&db).map(|(&x, &y)| padd[x as usize * pu + y as usize]).collect();
                add[a * qu + b] = undigits(&sum, pu) as u8;
                // schoolbook product, then reduce by the monic modulus
                let mut prod = vec![0u8; 2 * e - 1];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        let t = pmul[x as usize * pu + y as usize];
                        prod[i + j] = padd[prod[i + j] as usize * pu + t as usize];
                    }
                }
                for top in (e..prod.len()).rev() {
                    let c = prod[top];
                    if c == 0 {
                        continue;
                    }
                    prod[top] = 0;
                    for (k, &m) in modulus.iter().enumerate().take(e) {
                        // subtract c * m_k z^{top-e+k}
                        let t = pmul[c as usize * pu + m as usize];
                        let idx = top - e + k;
                        prod[idx] = padd[prod[idx] as usize * pu + (pu - t as usize) % pu];
                    }
                }
                mul[a * qu + b] = undigits(&prod[..e], pu) as u8;
            }
        }
        Ok(Self::from_tables(PrimePower::from_parts(p, e as u32).unwrap(), modulus, add, mul))
    }

    fn from_tables(q: PrimePower, modulus: Vec<u8>, add: Vec<u8>, mul: Vec<u8>) -> Self {
        let n = q.q() as usize;
        let mut neg = vec![0u8; n];
        let mut inv = vec![0u8; n];
        for a in 0..n {
            for b in 0..n {
                if add[a * n + b] == 0 {
                    neg[a] = b as u8;
                }
                if mul[a * n + b] == 1 {
                    inv[a] = b as u8;
                }
            }
        }
        Self { q, modulus, add, mul, neg, inv }
    }

    pub fn order(&self) -> PrimePower {
        self.q
    }

    pub fn size(&self) -> usize {
        self.q.q() as usize
    }

    pub fn characteristic(&self) -> u64 {
        self.q.characteristic()
    }

    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.size() + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.size() + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `inv(0)` is reported as 0.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        self.inv[a as usize]
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> u8 {
        n.rem_euclid(self.characteristic() as i64) as u8
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        (0..self.size()).map(|a| a as u8)
    }
}

/// Smallest monic irreducible of degree `e` over the prime field `base`.
fn smallest_irreducible(base: &FieldSpec, e: usize) -> Vec<u8> {
    let p = base.size();
    let count = p.pow(e as u32);
    for idx in 0..count {
        // c_0 is the most significant position of the tuple order
        let mut coeffs: Vec<u8> = digits(idx, p, e);
        coeffs.reverse();
        coeffs.push(1);
        let poly = FqPoly::new(coeffs.clone());
        if is_irreducible_by_trial_division(&poly, base) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Monic polynomials of exact degree `deg` over `field`, in index order.
pub fn monic_polys(field: &FieldSpec, deg: usize) -> impl Iterator<Item = FqPoly> + '_ {
    let q = field.size();
    (0..q.pow(deg as u32)).map(move |idx| {
        let mut c = digits(idx, q, deg);
        c.push(1);
        FqPoly::new(c)
    })
}

/// No monic divisor of degree `1..=deg/2`. Constant polynomials are not irreducible.
pub fn is_irreducible_by_trial_division(f: &FqPoly, field: &FieldSpec) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    for d in 1..=n / 2 {
        for g in monic_polys(field, d) {
            if f.rem(&g, field).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Polynomial over a [`FieldSpec`], constant term first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FqPoly {
    coeffs: Vec<u8>,
}

impl FqPoly {
    pub fn new(mut coeffs: Vec<u8>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    /// `z - a`.
    pub fn linear(a: u8, field: &FieldSpec) -> Self {
        Self::new(vec![field.neg(a), 1])
    }

    /// `z^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        Self { coeffs: c }
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u8 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Self, field: &FieldSpec) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).copied().unwrap_or(0);
                    let b = other.coeffs.get(i).copied().unwrap_or(0);
                    field.add(a, b)
                })
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self, field: &FieldSpec) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).copied().unwrap_or(0);
                    let b = other.coeffs.get(i).copied().unwrap_or(0);
                    field.sub(a, b)
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self, field: &FieldSpec) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0u8; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(a, b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: u8, field: &FieldSpec) -> Self {
        Self::new(self.coeffs.iter().map(|&a| field.mul(a, c)).collect())
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &Self, field: &FieldSpec) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = field.inv(divisor.leading());
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![0u8; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = field.mul(rem[top], lead_inv);
            if c == 0 {
                continue;
            }
            quot[top - dd] = c;
            for (k, &m) in divisor.coeffs.iter().enumerate() {
                let idx = top - dd + k;
                rem[idx] = field.sub(rem[idx], field.mul(c, m));
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, divisor: &Self, field: &FieldSpec) -> Self {
        self.div_rem(divisor, field).1
    }

    pub fn monic(&self, field: &FieldSpec) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(field.inv(self.leading()), field)
    }

    /// Formal derivative; the coefficient `i * a_i` is taken in characteristic `p`.
    pub fn derivative(&self, field: &FieldSpec) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &a)| field.mul(field.from_int(i as i64), a))
                .collect(),
        )
    }

    pub fn eval(&self, x: u8, field: &FieldSpec) -> u8 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| field.add(field.mul(acc, x), c))
    }

    pub fn has_root_in_field(&self, field: &FieldSpec) -> bool {
        field.elements().any(|x| self.eval(x, field) == 0)
    }
}

/// Monic gcd by Euclid's algorithm.
pub fn poly_gcd(a: &FqPoly, b: &FqPoly, field: &FieldSpec) -> Result<FqPoly, FieldError> {
    if a.is_zero() && b.is_zero() {
        return Err(FieldError::ZeroPolynomial);
    }
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let r = x.rem(&y, field);
        x = y;
        y = r;
    }
    Ok(x.monic(field))
}

pub fn poly_derivative(a: &FqPoly, field: &FieldSpec) -> FqPoly {
    a.derivative(field)
}

/// `gcd(a, a') = 1`. Over a perfect field this is exactly square-freeness.
pub fn squarefree_test(a: &FqPoly, field: &FieldSpec) -> Result<bool, FieldError> {
    if a.is_zero() {
        return Err(FieldError::ZeroPolynomial);
    }
    let g = poly_gcd(a, &a.derivative(field), field)?;
    Ok(g == FqPoly::one())
}

pub fn build_field(p: u64, e: u32) -> Result<FieldSpec, FieldError> {
    FieldSpec::build(p, e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(q: u64) -> PrimePower {
        PrimePower::new(q).unwrap()
    }

    fn poly(c: &[u8]) -> FqPoly {
        FqPoly::new(c.to_vec())
    }

    #[test]
    fn moebius_values() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(4), 0);
        assert_eq!(moebius(30), -1);
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(7), -1);
    }

    /// Brute-force count of monic irreducibles by trial division.
    fn nu_by_enumeration(field: &FieldSpec, d: usize) -> usize {
        monic_polys(field, d)
            .filter(|f| is_irreducible_by_trial_division(f, field))
            .count()
    }

    #[test]
    fn nu_examples() {
        for q in [2, 3, 4, 5, 7] {
            assert_eq!(nu_irreducible(q, 1), BigInt::from(q));
        }
        let f2 = FieldSpec::prime(2).unwrap();
        assert_eq!(nu_by_enumeration(&f2, 2), 1);
        assert_eq!(nu_by_enumeration(&f2, 4), 3);
        assert_eq!(nu_irreducible(2, 2), BigInt::from(1));
        assert_eq!(nu_irreducible(2, 4), BigInt::from(3));
    }

    #[test]
    fn nu_matches_enumeration_small() {
        for (p, e, dmax) in [(2, 1, 6), (3, 1, 4), (2, 2, 3), (5, 1, 3)] {
            let field = FieldSpec::build(p, e).unwrap();
            let q = field.size() as u64;
            for d in 1..=dmax {
                assert_eq!(
                    nu_irreducible(q, d as u32),
                    BigInt::from(nu_by_enumeration(&field, d)),
                    "q={q} d={d}"
                );
            }
        }
    }

    #[test]
    fn degree_weighted_nu_sum_counts_monics() {
        for q in [2u64, 3, 4] {
            for n in 1..=10u64 {
                let s: BigInt = divisors(n)
                    .into_iter()
                    .map(|d| BigInt::from(d) * nu_irreducible(q, d as u32))
                    .sum();
                assert_eq!(s, Pow::pow(BigInt::from(q), n as u32));
            }
        }
    }

    #[test]
    fn mult_order_examples() {
        assert_eq!(mult_order(5, 1), Ok(1));
        assert_eq!(mult_order(2, 3), Ok(2));
        assert_eq!(mult_order(3, 8), Ok(2));
        assert_eq!(mult_order(2, 7), Ok(3));
        assert_eq!(mult_order(4, 6), Err(FieldError::NotCoprime { a: 4, b: 6 }));
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic_factor_type(pp(2), 3), Ok(vec![1, 2]));
        assert_eq!(cyclotomic_factor_type(pp(3), 8), Ok(vec![1, 1, 2, 2, 2]));
        assert_eq!(cyclotomic_factor_type(pp(7), 1), Ok(vec![1]));
        // z^3 - 1 splits over F_4
        assert_eq!(cyclotomic_factor_type(pp(4), 3), Ok(vec![1, 1, 1]));
        assert!(cyclotomic_factor_type(pp(4), 6).is_err());
        assert!(cyclotomic_factor_type(pp(9), 3).is_err());
    }

    #[test]
    fn cyclotomic_degree_sums() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let q = pp(q);
            for k in 1..=30u64 {
                if k % q.characteristic() == 0 {
                    continue;
                }
                let degs = cyclotomic_factor_type(q, k).unwrap();
                assert_eq!(degs.iter().sum::<u64>(), k);
                let linear = degs.iter().filter(|&&d| d == 1).count() as u64;
                assert_eq!(linear, k.gcd(&(q.q() - 1)));
            }
        }
    }

    #[test]
    fn build_field_moduli() {
        assert_eq!(build_field(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(build_field(3, 2).unwrap().modulus(), &[1, 0, 1]);
        let f5 = build_field(5, 1).unwrap();
        assert_eq!(f5.size(), 5);
        assert_eq!(f5.mul(3, 4), 2);
        assert_eq!(f5.add(3, 4), 2);
    }

    /// Oracle: scan every monic of degree e in tuple order (constant term
    /// most significant) and take the first without a root or small factor.
    #[test]
    fn build_field_matches_lexicographic_scan() {
        for (p, e) in [(2u64, 2u32), (2, 3), (2, 4), (3, 2), (5, 2), (3, 3)] {
            let base = FieldSpec::prime(p).unwrap();
            let mut tuples: Vec<Vec<u8>> = monic_polys(&base, e as usize)
                .map(|f| f.coeffs()[..e as usize].to_vec())
                .collect();
            tuples.sort();
            let first = tuples
                .into_iter()
                .find(|t| {
                    let mut c = t.clone();
                    c.push(1);
                    is_irreducible_by_trial_division(&FqPoly::new(c), &base)
                })
                .unwrap();
            let field = build_field(p, e).unwrap();
            assert_eq!(&field.modulus()[..e as usize], first.as_slice());
            assert!(is_irreducible_by_trial_division(&FqPoly::new(field.modulus().to_vec()), &base));
        }
    }

    #[test]
    fn field_axioms() {
        for (p, e) in [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2), (5, 1), (7, 1)] {
            let f = build_field(p, e).unwrap();
            let els: Vec<u8> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, f.neg(a)), 0);
                assert_eq!(f.mul(a, 1), a);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for &b in &els {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
            }
            // multiplicative group is cyclic of order q-1: a^(q-1) = 1
            let q = f.size();
            for &a in &els[1..] {
                let mut x = 1u8;
                for _ in 0..q - 1 {
                    x = f.mul(x, a);
                }
                assert_eq!(x, 1);
            }
        }
    }

    #[test]
    fn gcd_derivative_squarefree() {
        let f3 = build_field(3, 1).unwrap();
        // gcd(z^2 - 1, z - 1) = z + 2
        let g = poly_gcd(&poly(&[2, 0, 1]), &poly(&[2, 1]), &f3).unwrap();
        assert_eq!(g, poly(&[2, 1]));
        assert_eq!(poly_gcd(&FqPoly::zero(), &FqPoly::zero(), &f3), Err(FieldError::ZeroPolynomial));

        let f2 = build_field(2, 1).unwrap();
        assert_eq!(squarefree_test(&poly(&[0, 0, 1]), &f2), Ok(false));
        assert_eq!(squarefree_test(&poly(&[1, 1, 1]), &f2), Ok(true));
        assert_eq!(squarefree_test(&FqPoly::zero(), &f2), Err(FieldError::ZeroPolynomial));
        assert_eq!(squarefree_test(&FqPoly::one(), &f2), Ok(true));
    }

    #[test]
    fn derivative_of_pth_power_vanishes() {
        for (p, e) in [(2u64, 1u32), (3, 1), (2, 2), (3, 2), (5, 1)] {
            let f = build_field(p, e).unwrap();
            let g = FqPoly::new(vec![1, f.from_int(2), 1, (f.size() - 1) as u8]);
            let mut pow = FqPoly::one();
            for _ in 0..p {
                pow = pow.mul(&g, &f);
            }
            assert!(poly_derivative(&pow, &f).is_zero(), "p={p} e={e}");
        }
    }

    #[test]
    fn irreducible_implies_squarefree() {
        for (p, e) in [(2u64, 1u32), (3, 1), (2, 2)] {
            let f = build_field(p, e).unwrap();
            for d in 1..=3 {
                for g in monic_polys(&f, d) {
                    if is_irreducible_by_trial_division(&g, &f) {
                        assert_eq!(squarefree_test(&g, &f), Ok(true));
                    }
                }
            }
        }
    }

    #[test]
    fn squarefree_monic_count() {
        // q^n - q^{n-1} squarefree monics of degree n >= 2
        for (p, e) in [(2u64, 1u32), (3, 1), (2, 2)] {
            let f = build_field(p, e).unwrap();
            let q = f.size();
            for n in 2..=4usize {
                let c = monic_polys(&f, n)
                    .filter(|g| squarefree_test(g, &f).unwrap())
                    .count();
                assert_eq!(c, q.pow(n as u32) - q.pow(n as u32 - 1));
            }
        }
    }

    #[test]
    fn div_rem_reconstructs() {
        let f = build_field(2, 2).unwrap();
        let a = poly(&[3, 1, 2, 0, 1]);
        let b = poly(&[2, 3, 1]);
        let (qt, r) = a.div_rem(&b, &f);
        assert_eq!(qt.mul(&b, &f).add(&r, &f), a);
        assert!(r.degree().unwrap_or(0) < b.degree().unwrap());
    }

    #[test]
    fn large_fields_rejected() {
        assert_eq!(build_field(2, 9).unwrap_err(), FieldError::FieldTooLarge(512));
        assert_eq!(build_field(4, 1).unwrap_err(), FieldError::NotPrime(4));
    }
}
