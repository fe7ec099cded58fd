//! Cycle-index generating functions for classes of matrices over `F_q`.
//!
//! Most series here have the normalized shape `1 + sum_{n>=1} a_n u^n / gamma_n`,
//! so the count is recovered as `gamma_n * [u^n]`. The conjugacy-class series
//! are ordinary generating functions and are read off directly.
//!
//! Products over monic irreducibles are grouped by degree `d` and raised to
//! `nu_d`. Such a product is exact at truncation order `N` once `d > N`,
//! because every factor is `1 + O(u^d)`. Products over `r` of
//! `(1 - u^d/q^{rd})^{±1}` are different: every factor touches the `u^d`
//! coefficient, so they are evaluated with Euler's closed forms instead of
//! being cut off.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exact_series::{ExactRational, SeriesError, TruncSeries};
use crate::ffpoly::{cyclotomic_factor_type, nu_irreducible};
use crate::prime_power::PrimePower;
use crate::qcount::GammaTable;

pub use crate::partition::{partitions_of, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("bad parameters for {kind}: {reason}")]
    BadKindParams { kind: &'static str, reason: String },
    #[error("gamma_{n} * [u^{n}] = {value} is not a non-negative integer")]
    NonIntegralCount { n: usize, value: String },
    #[error("coefficient {n} requested from a series of order {order}")]
    OrderTooSmall { n: usize, order: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

fn rat(n: impl Into<BigInt>, d: impl Into<BigInt>) -> ExactRational {
    ExactRational::new(n.into(), d.into())
}

fn qpow(q: PrimePower, e: usize) -> BigInt {
    Pow::pow(BigInt::from(q.q()), e)
}

/// Kung's formula for the order of the automorphism group of
/// `⊕_j F_q[z]/(phi^{lambda_j})`, where `qd = q^{deg phi}`.
///
/// With `b_i` the number of parts equal to `i` and
/// `d_i = b_1 + 2 b_2 + ... + i b_i + i (b_{i+1} + ...)`, the order is
/// `prod_i prod_{k=1}^{b_i} (qd^{d_i} - qd^{d_i - k})`.
pub fn kung_centralizer_order(qd: &BigInt, lam: &Partition) -> BigInt {
    let mult = lam.multiplicities();
    let mut order = BigInt::one();
    for (i, &b) in mult.iter().enumerate().skip(1) {
        if b == 0 {
            continue;
        }
        let d: usize = lam.parts().iter().map(|&p| p.min(i)).sum();
        let top = Pow::pow(qd, d);
        for k in 1..=b {
            order *= &top - Pow::pow(qd, d - k);
        }
    }
    order
}

/// `sum_{m>=0} u^{md} / gamma_m(q^d)`, the contribution of a degree-`d`
/// polynomial whose partitions are restricted to all-ones.
pub fn inverse_gamma_series(q: PrimePower, d: usize, order: usize) -> TruncSeries {
    let qd = q.pow(d as u32);
    let gammas = GammaTable::new(qd, order / d);
    let base = TruncSeries::from_coeffs(
        gammas.values().iter().map(|g| rat(1, g.clone())),
        order,
    );
    base.dilate(d)
}

/// `prod_{r>=1} (1 - u^d/q^{rd})^{-1}`; the coefficient of `u^{dn}` is
/// `q^{d n(n-1)/2} / prod_{i=1}^n (q^{di} - 1)`.
pub fn euler_inverse_factor(q: PrimePower, d: usize, order: usize) -> TruncSeries {
    euler_series(q, d, order, false)
}

/// `prod_{r>=1} (1 - u^d/q^{rd})`; the coefficient of `u^{dn}` is
/// `(-1)^n / prod_{i=1}^n (q^{di} - 1)`.
pub fn euler_factor(q: PrimePower, d: usize, order: usize) -> TruncSeries {
    euler_series(q, d, order, true)
}

fn euler_series(q: PrimePower, d: usize, order: usize, alternating: bool) -> TruncSeries {
    assert!(d >= 1);
    let mut out = TruncSeries::zero(order);
    let mut den = BigInt::one();
    let mut n = 0;
    while n * d <= order {
        if n > 0 {
            den *= qpow(q, d * n) - 1;
        }
        let num = if alternating {
            BigInt::from(if n % 2 == 1 { -1 } else { 1 })
        } else {
            qpow(q, d * n * n.saturating_sub(1) / 2)
        };
        out.set_coeff(n * d, rat(num, den.clone()));
        n += 1;
    }
    out
}

/// `prod_{d=1}^{order} factor(d)^{nu_d}`.
///
/// `factor(d)` must be `1 + O(u^d)`; degrees above the order contribute 1.
pub fn nu_weighted_product<F>(q: PrimePower, factor: F, order: usize) -> TruncSeries
where
    F: Fn(usize) -> TruncSeries,
{
    let mut acc = TruncSeries::one(order);
    for d in 1..=order {
        let f = factor(d);
        debug_assert!(f.coeff(0).is_one());
        debug_assert!((1..d.min(order + 1)).all(|i| f.coeff(i).is_zero()));
        let nu = nu_irreducible(q.q(), d as u32)
            .to_u64()
            .expect("nu_d fits in u64 at supported orders");
        acc = acc.mul(&f.pow(nu));
    }
    acc
}

/// Which matrix class a generating function counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GfKind {
    /// Product over monic irreducibles `phi != z`; equals `1/(1-u)`.
    InvertibleCheck,
    LinearDerangement,
    ProjectiveDerangement,
    Diagonalizable,
    Projection,
    /// Solutions of `A^k = I`, `p ∤ k`.
    PowerIdentity(u64),
    Cyclic,
    CyclicAlt,
    Semisimple,
    Separable,
    SeparableAlt,
    /// Ordinary gf of conjugacy classes of `M_n(q)`.
    ConjclassesAll,
    /// Ordinary gf of conjugacy classes of `GL_n(q)`.
    ConjclassesGl,
    /// q-Bell numbers.
    Bell,
}

impl GfKind {
    pub fn name(&self) -> &'static str {
        match self {
            GfKind::InvertibleCheck => "invertible_check",
            GfKind::LinearDerangement => "linear_derangement",
            GfKind::ProjectiveDerangement => "projective_derangement",
            GfKind::Diagonalizable => "diagonalizable",
            GfKind::Projection => "projection",
            GfKind::PowerIdentity(_) => "power_identity",
            GfKind::Cyclic => "cyclic",
            GfKind::CyclicAlt => "cyclic_alt",
            GfKind::Semisimple => "semisimple",
            GfKind::Separable => "separable",
            GfKind::SeparableAlt => "separable_alt",
            GfKind::ConjclassesAll => "conjclasses_all",
            GfKind::ConjclassesGl => "conjclasses_gl",
            GfKind::Bell => "bell",
        }
    }

    /// Whether counts are `gamma_n * [u^n]` rather than `[u^n]`.
    pub fn is_normalized(&self) -> bool {
        !matches!(self, GfKind::ConjclassesAll | GfKind::ConjclassesGl)
    }
}

/// `1 + c u^d (1 + s u^d)` style factor helper: `1 + sum (coef, exp)`.
fn one_plus(terms: &[(ExactRational, usize)], order: usize) -> TruncSeries {
    let mut s = TruncSeries::one(order);
    for (c, e) in terms {
        if *e <= order {
            let cur = s.coeff(*e);
            s.set_coeff(*e, cur + c);
        }
    }
    s
}

pub fn gf_build(kind: GfKind, q: PrimePower, order: usize) -> Result<TruncSeries, GfError> {
    if order == 0 {
        return Err(GfError::BadKindParams {
            kind: kind.name(),
            reason: "truncation order must be at least 1".into(),
        });
    }
    let n = order;
    let qv = q.q();
    let series = match kind {
        GfKind::InvertibleCheck => {
            // z - a for a != 0 gives q - 1 linear factors
            let linear = euler_inverse_factor(q, 1, n).pow(qv - 1);
            let higher = nu_weighted_product(
                q,
                |d| {
                    if d == 1 {
                        TruncSeries::one(n)
                    } else {
                        euler_inverse_factor(q, d, n)
                    }
                },
                n,
            );
            linear.mul(&higher)
        }
        GfKind::LinearDerangement => TruncSeries::geometric(n).mul(&euler_factor(q, 1, n)),
        GfKind::ProjectiveDerangement => {
            TruncSeries::geometric(n).mul(&euler_factor(q, 1, n).pow(qv - 1))
        }
        GfKind::Diagonalizable => inverse_gamma_series(q, 1, n).pow(qv),
        GfKind::Projection => inverse_gamma_series(q, 1, n).pow(2),
        GfKind::PowerIdentity(k) => {
            if k == 0 {
                return Err(GfError::BadKindParams {
                    kind: kind.name(),
                    reason: "k must be positive".into(),
                });
            }
            let degrees =
                cyclotomic_factor_type(q, k).map_err(|e| GfError::BadKindParams {
                    kind: kind.name(),
                    reason: e.to_string(),
                })?;
            degrees
                .into_iter()
                .map(|d| inverse_gamma_series(q, d as usize, n))
                .fold(TruncSeries::one(n), |acc, f| acc.mul(&f))
        }
        GfKind::Cyclic => nu_weighted_product(
            q,
            |d| {
                // 1 + (1/(q^d - 1)) u^d / (1 - (u/q)^d)
                let qd = qpow(q, d);
                let tail = one_plus(&[(-rat(1, qd.clone()), d)], n)
                    .recip()
                    .expect("unit constant term");
                let lead = TruncSeries::monomial(rat(1, qd - 1), d, n);
                TruncSeries::one(n).add(&lead.mul(&tail))
            },
            n,
        ),
        GfKind::CyclicAlt => {
            let prod = nu_weighted_product(
                q,
                |d| {
                    let qd = qpow(q, d);
                    one_plus(&[(rat(1, &qd * (&qd - 1)), d)], n)
                },
                n,
            );
            TruncSeries::geometric(n).mul(&prod)
        }
        GfKind::Semisimple => nu_weighted_product(q, |d| inverse_gamma_series(q, d, n), n),
        GfKind::Separable => nu_weighted_product(
            q,
            |d| one_plus(&[(rat(1, qpow(q, d) - 1), d)], n),
            n,
        ),
        GfKind::SeparableAlt => {
            // 1 + u^d (1 - u^d) / (q^d (q^d - 1))
            let prod = nu_weighted_product(
                q,
                |d| {
                    let qd = qpow(q, d);
                    let c = rat(1, &qd * (&qd - 1));
                    one_plus(&[(c.clone(), d), (-c, 2 * d)], n)
                },
                n,
            );
            TruncSeries::geometric(n).mul(&prod)
        }
        GfKind::ConjclassesAll | GfKind::ConjclassesGl => {
            let mut acc = TruncSeries::one(n);
            for r in 1..=n {
                let den = one_plus(&[(rat(-(qv as i64), 1), r)], n);
                acc = acc.mul(&den.recip()?);
                if kind == GfKind::ConjclassesGl {
                    acc = acc.mul(&one_plus(&[(rat(-1, 1), r)], n));
                }
            }
            acc
        }
        GfKind::Bell => {
            let mut s = inverse_gamma_series(q, 1, n);
            s.set_coeff(0, ExactRational::zero());
            s.exp()?
        }
    };
    Ok(series)
}

/// Reads the count of `n x n` matrices off a generating function.
pub fn extract_count(
    gf: &TruncSeries,
    n: usize,
    q: PrimePower,
    normalized: bool,
) -> Result<BigInt, GfError> {
    if n > gf.order() {
        return Err(GfError::OrderTooSmall {
            n,
            order: gf.order(),
        });
    }
    let c = gf.coeff(n);
    let value = if normalized {
        c * ExactRational::from_integer(crate::qcount::gamma(q, n))
    } else {
        c
    };
    if !value.is_integer() || value.is_negative() {
        return Err(GfError::NonIntegralCount {
            n,
            value: value.to_string(),
        });
    }
    Ok(value.to_integer())
}

/// Counts for `n = 0..=max_n` from one series build.
pub fn counts_via_gf(kind: GfKind, q: PrimePower, max_n: usize) -> Result<Vec<BigInt>, GfError> {
    let gf = gf_build(kind, q, max_n.max(1))?;
    (0..=max_n)
        .map(|n| extract_count(&gf, n, q, kind.is_normalized()))
        .collect()
}

/// `gamma_n [u^n t^k] exp(t sum_{r>=1} u^r/gamma_r)`, taken as
/// `gamma_n [u^n] (sum_{r>=1} u^r/gamma_r)^k / k!`.
pub fn q_stirling_via_gf(q: PrimePower, n: usize, k: usize) -> Result<BigInt, GfError> {
    if k == 0 || k > n {
        return Err(GfError::BadKindParams {
            kind: "q_stirling",
            reason: format!("need 1 <= k <= n, got n={n} k={k}"),
        });
    }
    let mut s = inverse_gamma_series(q, 1, n);
    s.set_coeff(0, ExactRational::zero());
    let k_fact: BigInt = (1..=k).map(BigInt::from).product();
    let term = s.pow(k as u64).scale(&rat(1, k_fact));
    extract_count(&term, n, q, true)
}

/// Infinite products evaluated by [`limit_eval`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LimitKind {
    /// `lim gamma_n / q^{n^2} = prod (1 - q^{-r})`.
    Invertible,
    /// `lim e_n / q^{n^2} = prod (1 - q^{-r})^2`.
    LinearDerangementFrac,
    /// `lim d_n / q^{n^2} = prod (1 - q^{-r})^q`.
    ProjectiveFrac,
    /// Wall: `(1 - q^{-5}) prod_{r>=3} (1 - q^{-r})`.
    Cyclic,
    /// `lim b_n / a_n = prod (1 - q^{-r})`.
    ConjRatio,
}

impl LimitKind {
    pub fn name(&self) -> &'static str {
        match self {
            LimitKind::Invertible => "invertible",
            LimitKind::LinearDerangementFrac => "linear_derangement_frac",
            LimitKind::ProjectiveFrac => "projective_frac",
            LimitKind::Cyclic => "cyclic",
            LimitKind::ConjRatio => "conj_ratio",
        }
    }

    /// Exponent of `(1 - q^{-r})` in the product.
    fn exponent(&self, q: u64, r: usize) -> u64 {
        match self {
            LimitKind::Invertible | LimitKind::ConjRatio => 1,
            LimitKind::LinearDerangementFrac => 2,
            LimitKind::ProjectiveFrac => q,
            LimitKind::Cyclic => match r {
                1 | 2 => 0,
                5 => 2,
                _ => 1,
            },
        }
    }

    /// Bound on the exponent for all large `r`.
    fn tail_exponent(&self, q: u64) -> u64 {
        self.exponent(q, usize::MAX)
    }
}

pub const MAX_LIMIT_DIGITS: usize = 50;

/// Decimal expansion of the limit, truncated (not rounded) to `digits` places.
///
/// The partial product `P_R` over `r <= R` is exact. With tail exponent `M`,
/// the true value lies in `[P_R (1 - M q^{-R}/(q-1)), P_R]`; `R` grows until
/// both ends truncate to the same digits.
pub fn limit_eval(kind: LimitKind, q: PrimePower, digits: usize) -> Result<String, GfError> {
    if digits == 0 || digits > MAX_LIMIT_DIGITS {
        return Err(GfError::BadKindParams {
            kind: kind.name(),
            reason: format!("digits must be in 1..={MAX_LIMIT_DIGITS}"),
        });
    }
    let qv = q.q();
    let m = kind.tail_exponent(qv);
    let scale: BigInt = Pow::pow(BigInt::from(10u32), digits);
    let target = rat(1, &scale * 100);
    let tail = |r: usize| rat(m, qpow(q, r) * (qv - 1));

    let mut r_max = 1;
    while tail(r_max) >= target {
        r_max += 1;
    }
    let mut partial = ExactRational::one();
    let mut r_done = 0;
    loop {
        for r in r_done + 1..=r_max {
            let factor = ExactRational::one() - rat(1, qpow(q, r));
            let e = kind.exponent(qv, r);
            if e > 0 {
                partial *= Pow::pow(factor, e as u32);
            }
        }
        r_done = r_max;
        let lo = &partial * (ExactRational::one() - tail(r_max));
        let hi_digits = (&partial * &scale).floor().to_integer();
        let lo_digits = (lo * &scale).floor().to_integer();
        if hi_digits == lo_digits || r_max > 64 * (digits + 8) {
            return Ok(render_fixed(&hi_digits, digits));
        }
        r_max += 8;
    }
}

fn render_fixed(scaled: &BigInt, digits: usize) -> String {
    let ten_d: BigInt = Pow::pow(BigInt::from(10u32), digits);
    let (int_part, frac) = scaled.div_mod_floor(&ten_d);
    format!("{int_part}.{:0>width$}", frac.to_string(), width = digits)
}
