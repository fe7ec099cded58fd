use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrimePowerError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("invalid field order {0:?}")]
    Parse(String),
}

/// Field order `q = p^e` with `p` prime and `e >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimePower {
    p: u64,
    e: u32,
    q: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimePower {
    pub fn new(q: u64) -> Result<Self, PrimePowerError> {
        if q < 2 {
            return Err(PrimePowerError::NotPrimePower(q));
        }
        let p = (2..=q)
            .find(|d| q.is_multiple_of(*d))
            .expect("q >= 2 has a smallest divisor");
        let mut rest = q;
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        if rest != 1 {
            return Err(PrimePowerError::NotPrimePower(q));
        }
        debug_assert!(is_prime(p));
        Ok(Self { p, e, q })
    }

    pub fn from_parts(p: u64, e: u32) -> Result<Self, PrimePowerError> {
        let q = p
            .checked_pow(e)
            .ok_or(PrimePowerError::NotPrimePower(u64::MAX))?;
        if e == 0 || !is_prime(p) {
            return Err(PrimePowerError::NotPrimePower(q));
        }
        Ok(Self { p, e, q })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    /// `q^d`, the order of the degree-`d` extension.
    pub fn pow(&self, d: u32) -> Self {
        Self::from_parts(self.p, self.e * d).expect("extension order overflows u64")
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.q)
    }
}

impl FromStr for PrimePower {
    type Err = PrimePowerError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let q: u64 = s
            .trim()
            .parse()
            .map_err(|_| PrimePowerError::Parse(s.to_string()))?;
        Self::new(q)
    }
}
