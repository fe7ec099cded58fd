use std::fmt;

use clap::ValueEnum;
use num_bigint::BigInt;
use thiserror::Error;

use qmc_core::gfengine::{self, GfError, GfKind};
use qmc_core::oracle::{self, OracleConfig, OracleError};
use qmc_core::qcount::{self, CountError};
use qmc_core::{FieldError, FieldSpec, PrimePower};

/// Largest `n` accepted by `seq` and `table`.
pub const MAX_N: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum SeqName {
    All,
    Invertible,
    SubspacesTotal,
    QbinomRow,
    QstirlingRow,
    Qbell,
    Qfactorial,
    RankRow,
    LinDerangement,
    ProjDerangement,
    Diagonalizable,
    Projection,
    PowerIdentity,
    Nilpotent,
    Cyclic,
    Semisimple,
    Separable,
    SeparableClasses,
    ConjclassesAll,
    ConjclassesGl,
    MinCentralizer,
    MaxClass,
}

impl SeqName {
    pub fn as_str(&self) -> &'static str {
        match self {
            SeqName::All => "all",
            SeqName::Invertible => "invertible",
            SeqName::SubspacesTotal => "subspaces_total",
            SeqName::QbinomRow => "qbinom_row",
            SeqName::QstirlingRow => "qstirling_row",
            SeqName::Qbell => "qbell",
            SeqName::Qfactorial => "qfactorial",
            SeqName::RankRow => "rank_row",
            SeqName::LinDerangement => "lin_derangement",
            SeqName::ProjDerangement => "proj_derangement",
            SeqName::Diagonalizable => "diagonalizable",
            SeqName::Projection => "projection",
            SeqName::PowerIdentity => "power_identity",
            SeqName::Nilpotent => "nilpotent",
            SeqName::Cyclic => "cyclic",
            SeqName::Semisimple => "semisimple",
            SeqName::Separable => "separable",
            SeqName::SeparableClasses => "separable_classes",
            SeqName::ConjclassesAll => "conjclasses_all",
            SeqName::ConjclassesGl => "conjclasses_gl",
            SeqName::MinCentralizer => "min_centralizer",
            SeqName::MaxClass => "max_class",
        }
    }

    /// Triangle rows indexed by `k` rather than sequences indexed by `n`.
    pub fn is_row(&self) -> bool {
        matches!(self, SeqName::QbinomRow | SeqName::QstirlingRow | SeqName::RankRow)
    }

    /// Smallest `n` the sequence is defined at.
    pub fn first_n(&self) -> usize {
        match self {
            SeqName::SeparableClasses | SeqName::MinCentralizer | SeqName::MaxClass => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for SeqName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("{0} requires --k")]
    MissingK(SeqName),
    #[error("--k is out of range for {name}: {reason}")]
    BadK { name: SeqName, reason: String },
    #[error("range {min}..={max} is invalid for {name} (defined from n = {first}, at most n = {limit})")]
    BadRange {
        name: SeqName,
        min: usize,
        max: usize,
        first: usize,
        limit: usize,
    },
    #[error("--order {order} is below --max-n {max_n}")]
    OrderTooSmall { order: usize, max_n: usize },
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Count(#[from] CountError),
}

/// One computed term; `index` is `n` for sequences and `k` for triangle rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub index: u64,
    pub value: BigInt,
}

/// A fully resolved request.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceSpec {
    pub name: SeqName,
    pub q: PrimePower,
    pub k: Option<u64>,
    pub min_n: usize,
    pub max_n: usize,
    pub oeis_id: Option<String>,
    pub oeis_offset: u64,
}

impl SequenceSpec {
    /// Fills in the OEIS id; `min_n` defaults to the OEIS offset when one is known.
    pub fn new(
        name: SeqName,
        q: PrimePower,
        k: Option<u64>,
        min_n: Option<usize>,
        max_n: usize,
    ) -> Self {
        let oeis = crate::oeis::lookup(name, q.q(), k);
        let default_min = oeis
            .as_ref()
            .map(|e| e.offset as usize)
            .unwrap_or(0)
            .max(name.first_n());
        let min_n = if name.is_row() { max_n } else { min_n.unwrap_or(default_min) };
        Self {
            name,
            q,
            k,
            min_n,
            max_n,
            oeis_id: oeis.as_ref().map(|e| e.id.clone()),
            oeis_offset: oeis.map(|e| e.offset).unwrap_or(name.first_n() as u64),
        }
    }
}

/// Knobs that affect how (not what) values are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[derive(Default)]
pub struct ComputeOptions {
    /// Series truncation; must cover `max_n` when given.
    pub order: Option<usize>,
    pub oracle: OracleConfig,
}


/// Smallest centralizer orders in `GL_n(2)`, `n = 1..=10`, used past the
/// oracle budget.
pub const MIN_CENTRALIZER_Q2: [u64; 10] = [1, 2, 3, 6, 12, 21, 42, 84, 147, 294];

pub fn compute(spec: &SequenceSpec, opts: &ComputeOptions) -> Result<Vec<Term>, SeqError> {
    let name = spec.name;
    let bad_range = || SeqError::BadRange {
        name,
        min: spec.min_n,
        max: spec.max_n,
        first: name.first_n(),
        limit: MAX_N,
    };
    if spec.max_n > MAX_N || spec.min_n < name.first_n() {
        return Err(bad_range());
    }
    if name.is_row() {
        return compute_row(spec);
    }
    if spec.min_n > spec.max_n {
        return Ok(Vec::new());
    }
    if name != SeqName::PowerIdentity && spec.k.is_some() {
        return Err(SeqError::BadK {
            name,
            reason: "this sequence takes no k".into(),
        });
    }
    if let Some(order) = opts.order {
        if order < spec.max_n {
            return Err(SeqError::OrderTooSmall {
                order,
                max_n: spec.max_n,
            });
        }
    }
    let q = spec.q;
    let range = spec.min_n..=spec.max_n;
    let per_n = |f: &dyn Fn(usize) -> Result<BigInt, SeqError>| -> Result<Vec<Term>, SeqError> {
        range
            .clone()
            .map(|n| Ok(Term { index: n as u64, value: f(n)? }))
            .collect()
    };
    let via_gf = |kind: GfKind| -> Result<Vec<Term>, SeqError> {
        let order = opts.order.unwrap_or(spec.max_n).max(1);
        let gf = gfengine::gf_build(kind, q, order)?;
        per_n(&|n| Ok(gfengine::extract_count(&gf, n, q, kind.is_normalized())?))
    };
    match name {
        SeqName::All => per_n(&|n| Ok(qcount::all_count(q, n))),
        SeqName::Invertible => per_n(&|n| Ok(qcount::gamma(q, n))),
        SeqName::SubspacesTotal => per_n(&|n| Ok(qcount::subspace_total(q, n))),
        SeqName::Qbell => per_n(&|n| Ok(qcount::q_bell(q, n))),
        SeqName::Qfactorial => per_n(&|n| Ok(qcount::q_factorial(q, n))),
        SeqName::LinDerangement => per_n(&|n| Ok(qcount::linear_derangement_recursive(q, n))),
        SeqName::ProjDerangement => via_gf(GfKind::ProjectiveDerangement),
        SeqName::Diagonalizable => per_n(&|n| Ok(qcount::diagonalizable_count(q, n))),
        SeqName::Projection => per_n(&|n| Ok(qcount::projection_count(q, n))),
        SeqName::PowerIdentity => {
            let k = spec.k.ok_or(SeqError::MissingK(name))?;
            if k == 0 {
                return Err(SeqError::BadK {
                    name,
                    reason: "k must be positive".into(),
                });
            }
            let p = q.characteristic();
            if k % p != 0 {
                via_gf(GfKind::PowerIdentity(k))
            } else if k == 2 && p == 2 {
                per_n(&|n| Ok(qcount::involution_count_char2(q, n)?))
            } else {
                Err(SeqError::Unsupported(format!(
                    "A^{k} = I over F_{q} is only implemented for k coprime to {p}, or k = 2 in characteristic 2"
                )))
            }
        }
        SeqName::Nilpotent => per_n(&|n| Ok(qcount::nilpotent_count(q, n))),
        SeqName::Cyclic => via_gf(GfKind::Cyclic),
        SeqName::Semisimple => via_gf(GfKind::Semisimple),
        SeqName::Separable => via_gf(GfKind::Separable),
        SeqName::SeparableClasses => per_n(&|n| Ok(qcount::separable_class_count(q, n)?)),
        SeqName::ConjclassesAll => via_gf(GfKind::ConjclassesAll),
        SeqName::ConjclassesGl => via_gf(GfKind::ConjclassesGl),
        SeqName::MinCentralizer => per_n(&|n| min_centralizer(q, n, &opts.oracle)),
        SeqName::MaxClass => per_n(&|n| {
            Ok(qcount::gamma(q, n) / min_centralizer(q, n, &opts.oracle)?)
        }),
        SeqName::QbinomRow | SeqName::QstirlingRow | SeqName::RankRow => unreachable!(),
    }
}

/// Exhaustive orbit sweep within budget; the tabulated values beyond it at `q = 2`.
pub fn min_centralizer(q: PrimePower, n: usize, config: &OracleConfig) -> Result<BigInt, SeqError> {
    let field = FieldSpec::of_order(q)?;
    match oracle::min_centralizer_order(&field, n, config) {
        Ok(v) => Ok(BigInt::from(v)),
        Err(OracleError::BudgetExceeded { .. }) if q.q() == 2 && n <= MIN_CENTRALIZER_Q2.len() => {
            Ok(BigInt::from(MIN_CENTRALIZER_Q2[n - 1]))
        }
        Err(e) => Err(e.into()),
    }
}

/// Row `n = max_n` of a triangle, or the single cell `T(n, k)` when `k` is set.
fn compute_row(spec: &SequenceSpec) -> Result<Vec<Term>, SeqError> {
    let (q, n) = (spec.q, spec.max_n);
    let first_k = match spec.name {
        SeqName::QstirlingRow if n > 0 => 1,
        _ => 0,
    };
    let cell = |k: usize| match spec.name {
        SeqName::QbinomRow => qcount::gaussian_binomial(q, n as i64, k as i64),
        SeqName::QstirlingRow => qcount::q_stirling(q, n, k),
        SeqName::RankRow => qcount::rank_count(q, n, n, k),
        _ => unreachable!(),
    };
    let ks: Vec<usize> = match spec.k {
        Some(k) if (k as usize) < first_k || k as usize > n => {
            return Err(SeqError::BadK {
                name: spec.name,
                reason: format!("row {n} has k in {first_k}..={n}"),
            })
        }
        Some(k) => vec![k as usize],
        None => (first_k..=n).collect(),
    };
    Ok(ks
        .into_iter()
        .map(|k| Term {
            index: k as u64,
            value: cell(k),
        })
        .collect())
}

/// Rows `min_n..=max_n` of a triangle, for the `table` subcommand.
pub fn triangle(name: SeqName, q: PrimePower, min_n: usize, max_n: usize) -> Result<Vec<Vec<Term>>, SeqError> {
    if !name.is_row() {
        return Err(SeqError::Unsupported(format!("{name} is not a triangle")));
    }
    if max_n > MAX_N {
        return Err(SeqError::BadRange {
            name,
            min: min_n,
            max: max_n,
            first: 0,
            limit: MAX_N,
        });
    }
    (min_n..=max_n)
        .map(|n| compute(&SequenceSpec::new(name, q, None, None, n), &ComputeOptions::default()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(q: u64) -> PrimePower {
        PrimePower::new(q).unwrap()
    }

    fn values(name: SeqName, q: u64, k: Option<u64>, max_n: usize) -> Vec<String> {
        let spec = SequenceSpec::new(name, pp(q), k, None, max_n);
        compute(&spec, &ComputeOptions::default())
            .unwrap()
            .into_iter()
            .map(|t| t.value.to_string())
            .collect()
    }

    #[test]
    fn default_offsets() {
        assert_eq!(values(SeqName::LinDerangement, 2, None, 4), ["2", "48", "5824"]);
        assert_eq!(values(SeqName::Invertible, 2, None, 3), ["1", "1", "6", "168"]);
        assert_eq!(values(SeqName::MinCentralizer, 2, None, 4), ["1", "2", "3", "6"]);
        assert_eq!(values(SeqName::MaxClass, 2, None, 5), ["1", "3", "56", "3360", "833280"]);
    }

    #[test]
    fn rows_and_cells() {
        assert_eq!(values(SeqName::QbinomRow, 2, None, 4), ["1", "15", "35", "15", "1"]);
        assert_eq!(values(SeqName::QbinomRow, 2, Some(2), 4), ["35"]);
        assert_eq!(values(SeqName::QstirlingRow, 2, None, 3), ["1", "28", "28"]);
        assert_eq!(values(SeqName::RankRow, 2, None, 2), ["1", "9", "6"]);
        let spec = SequenceSpec::new(SeqName::QstirlingRow, pp(2), Some(0), None, 3);
        assert!(compute(&spec, &ComputeOptions::default()).is_err());
    }

    #[test]
    fn power_identity_routes() {
        assert_eq!(values(SeqName::PowerIdentity, 2, Some(2), 3), ["1", "1", "4", "22"]);
        assert_eq!(values(SeqName::PowerIdentity, 2, Some(3), 2), ["1", "1", "3"]);
        let spec = SequenceSpec::new(SeqName::PowerIdentity, pp(2), Some(4), None, 3);
        assert!(matches!(
            compute(&spec, &ComputeOptions::default()),
            Err(SeqError::Unsupported(_))
        ));
        let spec = SequenceSpec::new(SeqName::PowerIdentity, pp(2), None, None, 3);
        assert_eq!(
            compute(&spec, &ComputeOptions::default()),
            Err(SeqError::MissingK(SeqName::PowerIdentity))
        );
    }

    #[test]
    fn order_must_cover_range() {
        let spec = SequenceSpec::new(SeqName::Cyclic, pp(2), None, None, 6);
        let opts = ComputeOptions {
            order: Some(4),
            ..ComputeOptions::default()
        };
        assert!(matches!(compute(&spec, &opts), Err(SeqError::OrderTooSmall { .. })));
        let opts = ComputeOptions {
            order: Some(9),
            ..ComputeOptions::default()
        };
        assert_eq!(compute(&spec, &opts).unwrap().len(), 7);
    }

    #[test]
    fn empty_and_invalid_ranges() {
        let spec = SequenceSpec::new(SeqName::Invertible, pp(2), None, Some(5), 3);
        assert!(compute(&spec, &ComputeOptions::default()).unwrap().is_empty());
        let spec = SequenceSpec::new(SeqName::SeparableClasses, pp(2), None, Some(0), 3);
        assert!(compute(&spec, &ComputeOptions::default()).is_err());
    }

    #[test]
    fn tabulated_centralizers_need_q2() {
        let cfg = OracleConfig::default();
        assert_eq!(min_centralizer(pp(2), 10, &cfg).unwrap(), BigInt::from(294));
        assert!(min_centralizer(pp(3), 4, &cfg).is_err());
    }
}
