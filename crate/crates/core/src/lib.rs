//! Exact counting of matrix classes over finite fields.

pub mod exact_series;
pub mod ffpoly;
pub mod gfengine;
pub mod oracle;
pub mod partition;
pub mod prime_power;
pub mod qcount;

pub use exact_series::{ExactRational, SeriesError, TruncSeries};
pub use ffpoly::{FieldError, FieldSpec, FqPoly};
pub use gfengine::{GfError, GfKind, LimitKind};
pub use oracle::{Census, Classification, FqMatrix, OracleConfig, OracleError, Predicate};
pub use partition::Partition;
pub use prime_power::{PrimePower, PrimePowerError};
pub use qcount::{CountError, GammaTable};
