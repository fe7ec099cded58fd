//! Brute-force ground truth over small fields.
//!
//! Every `n x n` matrix over `F_q` is visited in code order and classified by
//! its defining predicate. Nothing here uses the counting formulas, so the
//! results can check them.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::ffpoly::{squarefree_test, FieldSpec, FqPoly};

pub const DEFAULT_BUDGET: u64 = 1 << 24;
pub const DEFAULT_PAIR_BUDGET: u64 = 1 << 28;
pub const MAX_POLY_DIM: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration needs {required} steps, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("dimension must be at least 1")]
    ZeroDimension,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Maximum number of matrices a sweep may visit.
    pub budget: u64,
    /// Maximum `|GL_n| * q^{n^2}` for orbit sweeps.
    pub pair_budget: u64,
    /// Worker threads for census sweeps; results do not depend on it.
    pub jobs: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            pair_budget: DEFAULT_PAIR_BUDGET,
            jobs: 1,
        }
    }
}

impl OracleConfig {
    pub fn with_budget(budget: u64) -> Self {
        Self {
            budget,
            ..Self::default()
        }
    }
}

/// `q^{n^2}`, saturating.
pub fn matrix_count(q: usize, n: usize) -> u128 {
    (q as u128).checked_pow((n * n) as u32).unwrap_or(u128::MAX)
}

fn check_budget(required: u128, budget: u64) -> Result<(), OracleError> {
    if required > budget as u128 {
        return Err(OracleError::BudgetExceeded { required, budget });
    }
    Ok(())
}

/// Row-major `n x n` matrix of field-element indices.
#[derive(Clone, PartialEq, Eq)]
pub struct FqMatrix<'f> {
    n: usize,
    field: &'f FieldSpec,
    entries: Vec<u8>,
}

impl fmt::Debug for FqMatrix<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<_> = self.entries.chunks(self.n).collect();
        write!(f, "{rows:?}")
    }
}

impl<'f> FqMatrix<'f> {
    pub fn new(field: &'f FieldSpec, n: usize, entries: Vec<u8>) -> Self {
        assert!(n >= 1, "dimension must be at least 1");
        assert_eq!(entries.len(), n * n);
        assert!(entries.iter().all(|&e| (e as usize) < field.size()));
        Self { n, field, entries }
    }

    pub fn zero(field: &'f FieldSpec, n: usize) -> Self {
        Self::new(field, n, vec![0; n * n])
    }

    pub fn identity(field: &'f FieldSpec, n: usize) -> Self {
        let mut m = Self::zero(field, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    /// Inverse of [`FqMatrix::code`]: base-`q` digits, entry `(0,0)` least significant.
    pub fn from_code(field: &'f FieldSpec, n: usize, mut code: u64) -> Self {
        let q = field.size() as u64;
        let mut entries = Vec::with_capacity(n * n);
        for _ in 0..n * n {
            entries.push((code % q) as u8);
            code /= q;
        }
        debug_assert_eq!(code, 0, "code out of range");
        Self { n, field, entries }
    }

    pub fn code(&self) -> u64 {
        let q = self.field.size() as u64;
        self.entries
            .iter()
            .rev()
            .fold(0, |acc, &e| acc * q + e as u64)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &'f FieldSpec {
        self.field
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.n + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == u8::from(i == j)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = self.field;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Self { entries, ..*self }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = self.field;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Self { entries, ..*self }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (n, f) = (self.n, self.field);
        let mut entries = vec![0u8; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    entries[idx] = f.add(entries[idx], f.mul(a, other.entries[k * n + j]));
                }
            }
        }
        Self { entries, ..*self }
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.field, self.n);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        row_reduce(self.entries.clone(), self.n, self.n, self.field)
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }

    /// Inverse by Gauss–Jordan on `[A | I]`.
    pub fn inverse(&self) -> Option<Self> {
        let (n, f) = (self.n, self.field);
        let w = 2 * n;
        let mut m = vec![0u8; n * w];
        for i in 0..n {
            m[i * w..i * w + n].copy_from_slice(&self.entries[i * n..i * n + n]);
            m[i * w + n + i] = 1;
        }
        for col in 0..n {
            let pivot = (col..n).find(|&r| m[r * w + col] != 0)?;
            for j in 0..w {
                m.swap(col * w + j, pivot * w + j);
            }
            let inv = f.inv(m[col * w + col]);
            for j in 0..w {
                m[col * w + j] = f.mul(m[col * w + j], inv);
            }
            for r in 0..n {
                let c = m[r * w + col];
                if r != col && c != 0 {
                    for j in 0..w {
                        m[r * w + j] = f.sub(m[r * w + j], f.mul(c, m[col * w + j]));
                    }
                }
            }
        }
        let entries = (0..n)
            .flat_map(|i| m[i * w + n..i * w + w].to_vec())
            .collect();
        Some(Self { entries, ..*self })
    }

    /// `det(zI - A)` by cofactor expansion over `F_q[z]`.
    pub fn char_poly(&self) -> FqPoly {
        assert!(self.n <= MAX_POLY_DIM, "char_poly limited to n <= {MAX_POLY_DIM}");
        let f = self.field;
        let n = self.n;
        let mut m = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let c = f.neg(self.get(i, j));
                m.push(if i == j { FqPoly::new(vec![c, 1]) } else { FqPoly::new(vec![c]) });
            }
        }
        let rows: Vec<usize> = (0..n).collect();
        cofactor_det(&m, n, &rows, 0, f)
    }

    /// Lowest-degree monic `g` with `g(A) = 0`, by elimination on `I, A, A^2, ...`.
    pub fn min_poly(&self) -> FqPoly {
        let f = self.field;
        let len = self.n * self.n;
        // reduced rows: (vector, pivot, polynomial it represents)
        let mut basis: Vec<(Vec<u8>, usize, FqPoly)> = Vec::new();
        let mut power = Self::identity(f, self.n);
        for j in 0.. {
            let mut v = power.entries.clone();
            let mut comb = FqPoly::monomial(j);
            for (row, pivot, poly) in &basis {
                let c = v[*pivot];
                if c != 0 {
                    for t in 0..len {
                        v[t] = f.sub(v[t], f.mul(c, row[t]));
                    }
                    comb = comb.sub(&poly.scale(c, f), f);
                }
            }
            match v.iter().position(|&x| x != 0) {
                None => return comb,
                Some(p) => {
                    let inv = f.inv(v[p]);
                    for x in v.iter_mut() {
                        *x = f.mul(*x, inv);
                    }
                    basis.push((v, p, comb.scale(inv, f)));
                }
            }
            power = power.mul(self);
        }
        unreachable!()
    }

    /// Smallest `k >= 1` with `A^k = I`, for invertible `A`.
    pub fn multiplicative_order(&self) -> Option<u64> {
        if !self.is_invertible() {
            return None;
        }
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.mul(self);
            k += 1;
        }
        Some(k)
    }
}

fn row_reduce(mut m: Vec<u8>, rows: usize, cols: usize, f: &FieldSpec) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r * cols + col] != 0) else {
            continue;
        };
        for j in 0..cols {
            m.swap(rank * cols + j, pivot * cols + j);
        }
        let inv = f.inv(m[rank * cols + col]);
        for r in rank + 1..rows {
            let c = f.mul(m[r * cols + col], inv);
            if c != 0 {
                for j in col..cols {
                    m[r * cols + j] = f.sub(m[r * cols + j], f.mul(c, m[rank * cols + j]));
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant of the minor on `rows` x columns `col..n`, expanding along column `col`.
fn cofactor_det(m: &[FqPoly], n: usize, rows: &[usize], col: usize, f: &FieldSpec) -> FqPoly {
    if rows.len() == 1 {
        return m[rows[0] * n + col].clone();
    }
    let mut acc = FqPoly::zero();
    for (idx, &r) in rows.iter().enumerate() {
        let entry = &m[r * n + col];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
        let term = entry.mul(&cofactor_det(m, n, &rest, col + 1, f), f);
        acc = if idx % 2 == 0 { acc.add(&term, f) } else { acc.sub(&term, f) };
    }
    acc
}

/// Every defining predicate of a matrix, computed independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub rank: usize,
    pub invertible: bool,
    /// `A^n = 0`.
    pub nilpotent: bool,
    /// `A^2 = A`.
    pub projection: bool,
    /// Multiplicative order when invertible; `A^k = I` iff it divides `k`.
    pub order: Option<u64>,
    /// Invertible with no eigenvalue 1.
    pub linear_derangement: bool,
    /// No eigenvalue in `F_q`.
    pub projective_derangement: bool,
    /// `A^q = A`.
    pub diagonalizable: bool,
    /// Minimal polynomial has degree `n`.
    pub cyclic: bool,
    /// Squarefree minimal polynomial.
    pub semisimple: bool,
    /// Squarefree characteristic polynomial.
    pub separable: bool,
}

impl Classification {
    pub fn power_identity(&self, k: u64) -> bool {
        self.order.is_some_and(|o| k.is_multiple_of(o))
    }
}

pub fn classify(a: &FqMatrix<'_>) -> Classification {
    let f = a.field;
    let n = a.n;
    let q = f.size() as u64;
    let rank = a.rank();
    let invertible = rank == n;
    let chi = a.char_poly();
    let mu = a.min_poly();
    Classification {
        rank,
        invertible,
        nilpotent: a.pow(n as u64).is_zero(),
        projection: a.mul(a) == *a,
        order: if invertible { a.multiplicative_order() } else { None },
        linear_derangement: invertible && chi.eval(1, f) != 0,
        projective_derangement: !chi.has_root_in_field(f),
        diagonalizable: a.pow(q) == *a,
        cyclic: mu.degree() == Some(n),
        semisimple: squarefree_test(&mu, f).expect("min poly is nonzero"),
        separable: squarefree_test(&chi, f).expect("char poly is nonzero"),
    }
}

/// Predicates accepted by [`count_matching`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Predicate {
    All,
    Invertible,
    Rank(usize),
    Nilpotent,
    Projection,
    PowerIdentity(u64),
    LinearDerangement,
    ProjectiveDerangement,
    Diagonalizable,
    Cyclic,
    Semisimple,
    Separable,
}

impl Predicate {
    pub fn holds(&self, c: &Classification) -> bool {
        match *self {
            Predicate::All => true,
            Predicate::Invertible => c.invertible,
            Predicate::Rank(k) => c.rank == k,
            Predicate::Nilpotent => c.nilpotent,
            Predicate::Projection => c.projection,
            Predicate::PowerIdentity(k) => c.power_identity(k),
            Predicate::LinearDerangement => c.linear_derangement,
            Predicate::ProjectiveDerangement => c.projective_derangement,
            Predicate::Diagonalizable => c.diagonalizable,
            Predicate::Cyclic => c.cyclic,
            Predicate::Semisimple => c.semisimple,
            Predicate::Separable => c.separable,
        }
    }
}

/// All `n x n` matrices over `field` in code order.
pub fn enumerate<'f>(
    field: &'f FieldSpec,
    n: usize,
    config: &OracleConfig,
) -> Result<impl Iterator<Item = FqMatrix<'f>> + 'f, OracleError> {
    if n == 0 {
        return Err(OracleError::ZeroDimension);
    }
    let total = matrix_count(field.size(), n);
    check_budget(total, config.budget)?;
    Ok((0..total as u64).map(move |code| FqMatrix::from_code(field, n, code)))
}

/// Tallies of every predicate from one sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Census {
    pub total: u64,
    pub invertible: u64,
    /// `ranks[k]` = number of rank-`k` matrices.
    pub ranks: Vec<u64>,
    pub nilpotent: u64,
    pub projection: u64,
    /// Multiplicative order -> number of invertible matrices with that order.
    pub orders: BTreeMap<u64, u64>,
    pub linear_derangement: u64,
    pub projective_derangement: u64,
    pub diagonalizable: u64,
    pub cyclic: u64,
    pub semisimple: u64,
    pub separable: u64,
}

impl Census {
    fn new(n: usize) -> Self {
        Self {
            ranks: vec![0; n + 1],
            ..Self::default()
        }
    }

    fn record(&mut self, c: &Classification) {
        self.total += 1;
        self.ranks[c.rank] += 1;
        if let Some(o) = c.order {
            *self.orders.entry(o).or_default() += 1;
        }
        for (flag, slot) in [
            (c.invertible, &mut self.invertible),
            (c.nilpotent, &mut self.nilpotent),
            (c.projection, &mut self.projection),
            (c.linear_derangement, &mut self.linear_derangement),
            (c.projective_derangement, &mut self.projective_derangement),
            (c.diagonalizable, &mut self.diagonalizable),
            (c.cyclic, &mut self.cyclic),
            (c.semisimple, &mut self.semisimple),
            (c.separable, &mut self.separable),
        ] {
            *slot += u64::from(flag);
        }
    }

    fn merge(&mut self, other: Census) {
        self.total += other.total;
        for (a, b) in self.ranks.iter_mut().zip(other.ranks) {
            *a += b;
        }
        for (o, c) in other.orders {
            *self.orders.entry(o).or_default() += c;
        }
        self.invertible += other.invertible;
        self.nilpotent += other.nilpotent;
        self.projection += other.projection;
        self.linear_derangement += other.linear_derangement;
        self.projective_derangement += other.projective_derangement;
        self.diagonalizable += other.diagonalizable;
        self.cyclic += other.cyclic;
        self.semisimple += other.semisimple;
        self.separable += other.separable;
    }

    /// Number of solutions of `A^k = I`.
    pub fn power_identity(&self, k: u64) -> u64 {
        self.orders
            .iter()
            .filter(|(&o, _)| k.is_multiple_of(o))
            .map(|(_, &c)| c)
            .sum()
    }

    pub fn count(&self, pred: Predicate) -> u64 {
        match pred {
            Predicate::All => self.total,
            Predicate::Invertible => self.invertible,
            Predicate::Rank(k) => self.ranks.get(k).copied().unwrap_or(0),
            Predicate::Nilpotent => self.nilpotent,
            Predicate::Projection => self.projection,
            Predicate::PowerIdentity(k) => self.power_identity(k),
            Predicate::LinearDerangement => self.linear_derangement,
            Predicate::ProjectiveDerangement => self.projective_derangement,
            Predicate::Diagonalizable => self.diagonalizable,
            Predicate::Cyclic => self.cyclic,
            Predicate::Semisimple => self.semisimple,
            Predicate::Separable => self.separable,
        }
    }
}

/// Classifies every matrix once, splitting the code range across `config.jobs` threads.
pub fn census(field: &FieldSpec, n: usize, config: &OracleConfig) -> Result<Census, OracleError> {
    if n == 0 {
        return Err(OracleError::ZeroDimension);
    }
    let total = matrix_count(field.size(), n);
    check_budget(total, config.budget)?;
    let total = total as u64;
    let sweep = |lo: u64, hi: u64| {
        let mut c = Census::new(n);
        for code in lo..hi {
            c.record(&classify(&FqMatrix::from_code(field, n, code)));
        }
        c
    };
    let jobs = config.jobs.max(1) as u64;
    if jobs == 1 || total < 1024 {
        return Ok(sweep(0, total));
    }
    let chunk = total.div_ceil(jobs);
    let parts: Vec<Census> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|j| {
                let (lo, hi) = (j * chunk, ((j + 1) * chunk).min(total));
                s.spawn(move || sweep(lo, hi))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut out = Census::new(n);
    for p in parts {
        out.merge(p);
    }
    Ok(out)
}

pub fn count_matching(
    field: &FieldSpec,
    n: usize,
    pred: Predicate,
    config: &OracleConfig,
) -> Result<u64, OracleError> {
    Ok(enumerate(field, n, config)?
        .filter(|a| pred.holds(&classify(a)))
        .count() as u64)
}

/// One conjugacy orbit: its smallest code and its size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Orbit {
    pub representative: u64,
    pub size: u64,
}

/// Invertible matrices paired with their inverses, in code order.
fn general_linear<'f>(field: &'f FieldSpec, n: usize) -> Vec<(FqMatrix<'f>, FqMatrix<'f>)> {
    let total = matrix_count(field.size(), n) as u64;
    (0..total)
        .filter_map(|code| {
            let g = FqMatrix::from_code(field, n, code);
            g.inverse().map(|inv| (g, inv))
        })
        .collect()
}

/// Orbits of `M_n(q)` (or of `GL_n(q)` when `restrict_gl`) under conjugation,
/// found by sweeping codes upward and marking each orbit as it is found.
pub fn conjugacy_orbits(
    field: &FieldSpec,
    n: usize,
    restrict_gl: bool,
    config: &OracleConfig,
) -> Result<Vec<Orbit>, OracleError> {
    if n == 0 {
        return Err(OracleError::ZeroDimension);
    }
    let total = matrix_count(field.size(), n);
    check_budget(total, config.budget)?;
    // |GL_n| < q^{n^2}, so this bounds the pair count before GL is built
    let gl_bound = total.saturating_mul(total);
    if gl_bound > config.pair_budget as u128 {
        let gl_size = crate::qcount::gamma(field.order(), n);
        let required = gl_size.to_string().parse::<u128>().unwrap_or(u128::MAX) * total;
        check_budget(required, config.pair_budget)?;
    }
    let gl = general_linear(field, n);
    let mut visited = vec![false; total as usize];
    let mut orbits = Vec::new();
    for code in 0..total as u64 {
        if visited[code as usize] {
            continue;
        }
        let a = FqMatrix::from_code(field, n, code);
        if restrict_gl && !a.is_invertible() {
            continue;
        }
        let mut size = 0;
        for (g, g_inv) in &gl {
            let b = g.mul(&a).mul(g_inv).code() as usize;
            if !visited[b] {
                visited[b] = true;
                size += 1;
            }
        }
        orbits.push(Orbit {
            representative: code,
            size,
        });
    }
    Ok(orbits)
}

pub fn conjugacy_class_count(
    field: &FieldSpec,
    n: usize,
    restrict_gl: bool,
    config: &OracleConfig,
) -> Result<u64, OracleError> {
    Ok(conjugacy_orbits(field, n, restrict_gl, config)?.len() as u64)
}

/// Size of the largest conjugacy class of `GL_n(q)`.
pub fn max_class_size(field: &FieldSpec, n: usize, config: &OracleConfig) -> Result<u64, OracleError> {
    Ok(conjugacy_orbits(field, n, true, config)?
        .iter()
        .map(|o| o.size)
        .max()
        .expect("GL_n is nonempty"))
}

/// Smallest centralizer order in `GL_n(q)`, i.e. `|GL_n| / max_class_size`.
pub fn min_centralizer_order(
    field: &FieldSpec,
    n: usize,
    config: &OracleConfig,
) -> Result<u64, OracleError> {
    let orbits = conjugacy_orbits(field, n, true, config)?;
    let group: u64 = orbits.iter().map(|o| o.size).sum();
    let largest = orbits.iter().map(|o| o.size).max().expect("GL_n is nonempty");
    Ok(group / largest)
}

/// `|{g in GL_n : gA = Ag}|` by direct search.
pub fn centralizer_order(a: &FqMatrix<'_>) -> u64 {
    general_linear(a.field, a.n)
        .iter()
        .filter(|(g, _)| g.mul(a) == a.mul(g))
        .count() as u64
}
