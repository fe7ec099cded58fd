//! Closed-form counts: `|GL_n(q)|`, q-analogs, the subspace, rank and
//! splitting triangles, and every sequence with a direct summation or
//! recursion.
//!
//! Every function takes the field order as a validated [`PrimePower`] and
//! returns exact integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use thiserror::Error;

use crate::exact_series::ExactRational;
use crate::partition::partitions_of;
use crate::prime_power::PrimePower;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("formula requires characteristic 2, got characteristic {0}")]
    CharNotTwo(u64),
    #[error("{what} requires {constraint}")]
    Domain {
        what: &'static str,
        constraint: &'static str,
    },
}

fn big(q: PrimePower) -> BigInt {
    BigInt::from(q.q())
}

fn qpow(q: PrimePower, e: usize) -> BigInt {
    Pow::pow(big(q), e)
}

fn to_integer(r: ExactRational) -> BigInt {
    assert!(r.is_integer(), "non-integral intermediate count {r}");
    r.to_integer()
}

/// `gamma_n(q) = prod_{i=0}^{n-1} (q^n - q^i)`, with `gamma_0 = 1`.
pub fn gamma(q: PrimePower, n: usize) -> BigInt {
    let qn = qpow(q, n);
    (0..n).map(|i| &qn - qpow(q, i)).product()
}

/// Memoized `gamma_0 ..= gamma_max` for one field.
#[derive(Debug, Clone)]
pub struct GammaTable {
    q: PrimePower,
    values: Vec<BigInt>,
}

impl GammaTable {
    pub fn new(q: PrimePower, max_n: usize) -> Self {
        let mut values = Vec::with_capacity(max_n + 1);
        values.push(BigInt::one());
        // gamma_n = gamma_{n-1} * q^{n-1} * (q^n - 1)
        for n in 1..=max_n {
            let next = &values[n - 1] * qpow(q, n - 1) * (qpow(q, n) - 1);
            values.push(next);
        }
        Self { q, values }
    }

    pub fn q(&self) -> PrimePower {
        self.q
    }

    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> &BigInt {
        &self.values[n]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// `[i]_q = 1 + q + ... + q^{i-1}`.
pub fn q_int(q: PrimePower, i: usize) -> BigInt {
    (qpow(q, i) - 1) / (big(q) - 1)
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`, with `[0]_q! = 1`.
pub fn q_factorial(q: PrimePower, n: usize) -> BigInt {
    (1..=n).map(|i| q_int(q, i)).product()
}

fn falling_q_product(q: PrimePower, top: usize, k: usize) -> BigInt {
    let qt = qpow(q, top);
    (0..k).map(|i| &qt - qpow(q, i)).product()
}

/// Number of `k`-dimensional subspaces of `F_q^n`; zero outside `0..=n`.
pub fn gaussian_binomial(q: PrimePower, n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let (n, k) = (n as usize, k as usize);
    let num = falling_q_product(q, n, k);
    let den = falling_q_product(q, k, k);
    let (quot, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero());
    quot
}

/// `[n]_q! / prod [n_i]_q!` with `n = sum n_i`.
pub fn q_multinomial(q: PrimePower, parts: &[usize]) -> BigInt {
    assert!(!parts.is_empty(), "q_multinomial needs at least one part");
    let n: usize = parts.iter().sum();
    let den: BigInt = parts.iter().map(|&p| q_factorial(q, p)).product();
    q_factorial(q, n) / den
}

/// Total number of subspaces of `F_q^n`.
pub fn subspace_total(q: PrimePower, n: usize) -> BigInt {
    (0..=n as i64).map(|k| gaussian_binomial(q, n as i64, k)).sum()
}

/// Number of `m x n` matrices of rank `k`; zero if `k > min(m, n)`.
pub fn rank_count(q: PrimePower, m: usize, n: usize, k: usize) -> BigInt {
    if k > m.min(n) {
        return BigInt::zero();
    }
    gaussian_binomial(q, m as i64, k as i64) * falling_q_product(q, n, k)
}

/// Calls `visit` on every composition of `n` into exactly `k` positive parts.
fn for_each_composition(n: usize, k: usize, visit: &mut impl FnMut(&[usize])) {
    fn go(remaining: usize, slots: usize, cur: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
        if slots == 0 {
            if remaining == 0 {
                visit(cur);
            }
            return;
        }
        // leave at least one for each later slot
        for part in 1..=remaining.saturating_sub(slots - 1) {
            cur.push(part);
            go(remaining - part, slots - 1, cur, visit);
            cur.pop();
        }
    }
    go(n, k, &mut Vec::with_capacity(k), visit);
}

/// q-Stirling number of the second kind: unordered splittings of `F_q^n`
/// into `k` nonzero subspaces.
pub fn q_stirling(q: PrimePower, n: usize, k: usize) -> BigInt {
    if k == 0 || k > n {
        return BigInt::from(u8::from(n == 0 && k == 0));
    }
    let table = GammaTable::new(q, n);
    let mut ordered = ExactRational::zero();
    for_each_composition(n, k, &mut |parts| {
        let den: BigInt = parts.iter().map(|&p| table.get(p)).product();
        ordered += ExactRational::new(table.get(n).clone(), den);
    });
    let k_fact: BigInt = (1..=k).map(BigInt::from).product();
    to_integer(ordered / ExactRational::from_integer(k_fact))
}

/// q-Bell number: all splittings of `F_q^n` into nonzero subspaces.
pub fn q_bell(q: PrimePower, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    (1..=n).map(|k| q_stirling(q, n, k)).sum()
}

/// Number of `n x n` projections `P^2 = P`.
pub fn projection_count(q: PrimePower, n: usize) -> BigInt {
    let g = GammaTable::new(q, n);
    (0..=n)
        .map(|i| g.get(n) / (g.get(i) * g.get(n - i)))
        .sum()
}

/// Number of matrices diagonalizable over `F_q`: the sum over weak
/// compositions of `n` into `q` eigenvalue multiplicities of
/// `gamma_n / prod gamma_{n_i}`.
///
/// Weak compositions with the same multiset of nonzero parts contribute
/// equally, so the sum runs over partitions of `n` with at most `q` parts,
/// weighted by the number of ways to place the parts on `q` eigenvalues.
pub fn diagonalizable_count(q: PrimePower, n: usize) -> BigInt {
    let g = GammaTable::new(q, n);
    let qv = q.q();
    let mut total = BigInt::zero();
    for lam in partitions_of(n) {
        if lam.len() as u64 > qv {
            continue;
        }
        // q! / ((q - len)! prod mult_i!)
        let mut placements = BigInt::one();
        for j in 0..lam.len() as u64 {
            placements *= BigInt::from(qv - j);
        }
        for &m in lam.multiplicities().iter().skip(1) {
            let m_fact: BigInt = (1..=m).map(BigInt::from).product();
            placements /= m_fact;
        }
        let den: BigInt = lam.parts().iter().map(|&p| g.get(p)).product();
        total += placements * (g.get(n) / den);
    }
    total
}

/// Solutions of `A^2 = I` in characteristic 2.
pub fn involution_count_char2(q: PrimePower, n: usize) -> Result<BigInt, CountError> {
    if q.characteristic() != 2 {
        return Err(CountError::CharNotTwo(q.characteristic()));
    }
    let g = GammaTable::new(q, n);
    let mut total = ExactRational::zero();
    for i in 0..=n / 2 {
        let den = qpow(q, i * (2 * n - 3 * i)) * g.get(i) * g.get(n - 2 * i);
        total += ExactRational::new(g.get(n).clone(), den);
    }
    Ok(to_integer(total))
}

/// Fine–Herstein: `q^{n(n-1)}` nilpotent `n x n` matrices.
pub fn nilpotent_count(q: PrimePower, n: usize) -> BigInt {
    qpow(q, n * n.saturating_sub(1))
}

/// Linear derangements (no eigenvalue 0 or 1) by
/// `e_n = e_{n-1} (q^n - 1) q^{n-1} + (-1)^n q^{n(n-1)/2}`, `e_0 = 1`.
pub fn linear_derangement_recursive(q: PrimePower, n: usize) -> BigInt {
    let mut e = BigInt::one();
    for m in 1..=n {
        let sign = if m % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        e = e * (qpow(q, m) - 1) * qpow(q, m - 1) + sign * qpow(q, m * (m - 1) / 2);
    }
    e
}

/// Reduced form `a_n = e_n / q^{n(n-1)/2}` with `a_n = a_{n-1}(q^n - 1) + (-1)^n`.
pub fn linear_derangement_reduced(q: PrimePower, n: usize) -> BigInt {
    let mut a = BigInt::one();
    for m in 1..=n {
        let sign = if m % 2 == 0 { 1 } else { -1 };
        a = a * (qpow(q, m) - 1) + sign;
    }
    a
}

/// Linear derangements via the reduced recursion, scaled back up.
pub fn linear_derangement_from_reduced(q: PrimePower, n: usize) -> BigInt {
    linear_derangement_reduced(q, n) * qpow(q, n * n.saturating_sub(1) / 2)
}

/// Conjugacy classes of separable `n x n` matrices, i.e. squarefree monic
/// polynomials of degree `n`.
pub fn separable_class_count(q: PrimePower, n: usize) -> Result<BigInt, CountError> {
    match n {
        0 => Err(CountError::Domain {
            what: "separable_class_count",
            constraint: "n >= 1",
        }),
        1 => Ok(big(q)),
        _ => Ok(qpow(q, n) - qpow(q, n - 1)),
    }
}

/// Total number of `n x n` matrices, `q^{n^2}`.
pub fn all_count(q: PrimePower, n: usize) -> BigInt {
    qpow(q, n * n)
}

/// `(q^4 - q^2 + 2q) / 2`, the closed form for `d_2`.
pub fn diagonalizable_two_closed_form(q: PrimePower) -> BigInt {
    let qb = big(q);
    let v: BigInt = Pow::pow(&qb, 4u32) - Pow::pow(&qb, 2u32) + 2 * &qb;
    debug_assert!(!v.is_negative());
    v / 2
}
