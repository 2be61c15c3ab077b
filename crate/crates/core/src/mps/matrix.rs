//! Matrices over multivariate series: determinants by the Leibniz formula,
//! adjugates, permanents, Jacobi matrices and the determinant of a matrix
//! exponential.

use super::MSeries;
use crate::coeffring::Ring;
use crate::error::{Error, Result};
use crate::qseries::{IdentityReport, Mismatch};
use num_rational::BigRational;

/// A rectangular matrix with uniform ring, variable count and cap.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesMatrix<R: Ring> {
    rows: usize,
    cols: usize,
    entries: Vec<MSeries<R>>,
}

/// All permutations of `0..n` with their signs.
pub(crate) fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    fn rec(k: usize, perm: &mut Vec<usize>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if k == 1 {
            out.push((perm.clone(), sign));
            return;
        }
        for i in 0..k {
            perm.swap(i, k - 1);
            let s = if i == k - 1 { sign } else { -sign };
            rec(k - 1, perm, s, out);
            perm.swap(i, k - 1);
        }
    }
    if n == 0 {
        out.push((vec![], 1));
    } else {
        rec(n, &mut perm, 1, &mut out);
    }
    out
}

impl<R: Ring> SeriesMatrix<R> {
    pub fn new(rows: usize, cols: usize, entries: Vec<MSeries<R>>) -> Result<Self> {
        if entries.len() != rows * cols || entries.is_empty() {
            return Err(Error::Domain("matrix shape does not match entries".into()));
        }
        let first = &entries[0];
        for e in &entries {
            if e.ring() != first.ring() || e.nvars() != first.nvars() || e.cap() != first.cap() {
                return Err(Error::Domain(
                    "matrix entries must share ring, variables and cap".into(),
                ));
            }
        }
        Ok(SeriesMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn identity(ring: R, nvars: usize, cap: usize, n: usize) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    entries.push(MSeries::one(ring.clone(), nvars, cap));
                } else {
                    entries.push(MSeries::zero(ring.clone(), nvars, cap));
                }
            }
        }
        SeriesMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    /// Embeds a scalar integer matrix as constant series.
    pub fn from_i64_matrix(ring: R, nvars: usize, cap: usize, m: &[Vec<i64>]) -> Result<Self> {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows * cols);
        for row in m {
            if row.len() != cols {
                return Err(Error::Domain("ragged scalar matrix".into()));
            }
            for &v in row {
                let c = ring.from_i64(v);
                entries.push(MSeries::constant(ring.clone(), nvars, cap, &c));
            }
        }
        Self::new(rows, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &MSeries<R> {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: MSeries<R>) {
        self.entries[i * self.cols + j] = v;
    }

    fn ring(&self) -> &R {
        self.entries[0].ring()
    }

    fn nvars(&self) -> usize {
        self.entries[0].nvars()
    }

    fn cap(&self) -> usize {
        self.entries[0].cap()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Domain("matrix shape mismatch".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.rows, self.cols, entries)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Domain("matrix shape mismatch".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.rows, self.cols, entries)
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Domain("matrix shape mismatch".into()));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = MSeries::zero(self.ring().clone(), self.nvars(), self.cap());
                for k in 0..self.cols {
                    acc = acc.add(&self.at(i, k).mul(other.at(k, j))?)?;
                }
                entries.push(acc);
            }
        }
        Self::new(self.rows, other.cols, entries)
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        SeriesMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
        }
    }

    pub fn trace(&self) -> Result<MSeries<R>> {
        if self.rows != self.cols {
            return Err(Error::Domain("trace of a non-square matrix".into()));
        }
        let mut acc = MSeries::zero(self.ring().clone(), self.nvars(), self.cap());
        for i in 0..self.rows {
            acc = acc.add(self.at(i, i))?;
        }
        Ok(acc)
    }

    /// Determinant: Leibniz sum for n <= 4, expansion by minors above.
    pub fn det(&self) -> Result<MSeries<R>> {
        if self.rows != self.cols {
            return Err(Error::Domain("determinant of a non-square matrix".into()));
        }
        if self.rows <= 4 {
            self.det_leibniz()
        } else {
            self.det_minors()
        }
    }

    /// Determinant through the Leibniz permutation sum.
    pub fn det_leibniz(&self) -> Result<MSeries<R>> {
        let n = self.rows;
        let ring = self.ring().clone();
        let mut acc = MSeries::zero(ring.clone(), self.nvars(), self.cap());
        for (perm, sign) in permutations_with_sign(n) {
            let mut term = MSeries::constant(ring.clone(), self.nvars(), self.cap(), &ring.from_i64(sign));
            for (i, &j) in perm.iter().enumerate() {
                term = term.mul(self.at(i, j))?;
                if term.is_zero() {
                    break;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Determinant by first-column expansion into minors.
    pub fn det_minors(&self) -> Result<MSeries<R>> {
        let n = self.rows;
        if n == 1 {
            return Ok(self.at(0, 0).clone());
        }
        let ring = self.ring().clone();
        let mut acc = MSeries::zero(ring.clone(), self.nvars(), self.cap());
        for i in 0..n {
            if self.at(i, 0).is_zero() {
                continue;
            }
            let minor = self.minor(i, 0)?.det_minors()?;
            let mut term = self.at(i, 0).mul(&minor)?;
            if i % 2 == 1 {
                term = term.neg();
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// The matrix with row `i` and column `j` removed.
    pub fn minor(&self, i: usize, j: usize) -> Result<Self> {
        let mut entries = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for r in 0..self.rows {
            if r == i {
                continue;
            }
            for c in 0..self.cols {
                if c == j {
                    continue;
                }
                entries.push(self.at(r, c).clone());
            }
        }
        Self::new(self.rows - 1, self.cols - 1, entries)
    }

    /// Adjugate: `adj(A)_(i,j) = (-1)^(i+j) det(A with row j, column i removed)`.
    pub fn adjugate(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::Domain("adjugate of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 1 {
            return Ok(SeriesMatrix::identity(
                self.ring().clone(),
                self.nvars(),
                self.cap(),
                1,
            ));
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut cof = self.minor(j, i)?.det()?;
                if (i + j) % 2 == 1 {
                    cof = cof.neg();
                }
                entries.push(cof);
            }
        }
        Self::new(n, n, entries)
    }

    /// Permanent: the Leibniz sum without signs.
    pub fn permanent(&self) -> Result<MSeries<R>> {
        if self.rows != self.cols {
            return Err(Error::Domain("permanent of a non-square matrix".into()));
        }
        let ring = self.ring().clone();
        let mut acc = MSeries::zero(ring.clone(), self.nvars(), self.cap());
        for (perm, _) in permutations_with_sign(self.rows) {
            let mut term = MSeries::one(ring.clone(), self.nvars(), self.cap());
            for (i, &j) in perm.iter().enumerate() {
                term = term.mul(self.at(i, j))?;
                if term.is_zero() {
                    break;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// `exp(A) = sum A^k / k!` for a matrix whose entries all vanish at 0.
    pub fn exp(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::Domain("exponential of a non-square matrix".into()));
        }
        let ring = self.ring().clone();
        for e in &self.entries {
            if !ring.is_zero(&e.constant_term()) {
                return Err(Error::Domain(
                    "matrix exponential needs zero constant terms".into(),
                ));
            }
        }
        let cap = self.cap();
        let mut acc = SeriesMatrix::identity(ring.clone(), self.nvars(), cap, self.rows);
        let mut power = acc.clone();
        let mut factorial = BigRational::from(num_bigint::BigInt::from(1));
        for k in 1..cap {
            power = power.matmul(self)?;
            factorial *= BigRational::from(num_bigint::BigInt::from(k as i64));
            let inv = ring.from_rational(&factorial.recip())?;
            acc = acc.add(&power.scale(&inv))?;
        }
        Ok(acc)
    }
}

/// The Jacobi matrix `(d f_i / d X_j)` of a tuple of series.
pub fn jacobi_matrix<R: Ring>(f: &[MSeries<R>]) -> Result<SeriesMatrix<R>> {
    if f.is_empty() {
        return Err(Error::Domain("empty tuple".into()));
    }
    let n = f[0].nvars();
    let mut entries = Vec::with_capacity(f.len() * n);
    for fi in f {
        for j in 0..n {
            entries.push(fi.partial(j)?);
        }
    }
    SeriesMatrix::new(f.len(), n, entries)
}

/// Determinant of the Jacobi matrix; vanishing at the origin is what makes
/// a tuple non-reversible.
pub fn jacobian_det<R: Ring>(f: &[MSeries<R>]) -> Result<MSeries<R>> {
    jacobi_matrix(f)?.det()
}

impl<R: Ring> SeriesMatrix<R> {
    /// JSON form: nested arrays of multivariate-series objects.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.at(i, j).to_json())
                    .collect::<Vec<_>>()
                    .into()
            })
            .collect();
        serde_json::Value::Array(rows)
    }

    pub fn from_json(ring: R, value: &serde_json::Value) -> Result<Self> {
        let rows = value
            .as_array()
            .ok_or_else(|| Error::Domain("matrix JSON must be an array of rows".into()))?;
        let mut entries = Vec::new();
        let mut cols = None;
        for row in rows {
            let row = row
                .as_array()
                .ok_or_else(|| Error::Domain("matrix rows must be arrays".into()))?;
            match cols {
                None => cols = Some(row.len()),
                Some(c) if c != row.len() => {
                    return Err(Error::Domain("ragged matrix JSON".into()))
                }
                _ => {}
            }
            for entry in row {
                entries.push(MSeries::from_json(ring.clone(), entry)?);
            }
        }
        SeriesMatrix::new(rows.len(), cols.unwrap_or(0), entries)
    }
}

/// Multivariate exponential of a series with zero constant term.
pub fn m_exp<R: Ring>(a: &MSeries<R>) -> Result<MSeries<R>> {
    let ring = a.ring().clone();
    if !ring.is_zero(&a.constant_term()) {
        return Err(Error::Domain("exp needs a zero constant term".into()));
    }
    let mut acc = MSeries::one(ring.clone(), a.nvars(), a.cap());
    let mut power = acc.clone();
    let mut factorial = BigRational::from(num_bigint::BigInt::from(1));
    for k in 1..a.cap() {
        power = power.mul(a)?;
        if power.is_zero() {
            break;
        }
        factorial *= BigRational::from(num_bigint::BigInt::from(k as i64));
        let inv = ring.from_rational(&factorial.recip())?;
        acc = acc.add(&power.scale(&inv))?;
    }
    Ok(acc)
}

/// Checks `det(exp(A)) = exp(tr(A))` for a matrix with zero constant terms.
pub fn matrix_exp_det_check<R: Ring>(a: &SeriesMatrix<R>) -> Result<IdentityReport> {
    let lhs = a.exp()?.det()?;
    let rhs = m_exp(&a.trace()?)?;
    let id = format!("det-exp({}x{})", a.rows(), a.cols());
    Ok(match lhs.first_difference(&rhs) {
        None => IdentityReport::pass(id, lhs.cap()),
        Some((e, x, y)) => IdentityReport::fail(
            id,
            lhs.cap(),
            Mismatch {
                index: e.total_degree() as usize,
                lhs: format!("{:?}: {}", e.0, lhs.ring().render(&x)),
                rhs: format!("{:?}: {}", e.0, rhs.ring().render(&y)),
            },
        ),
    })
}
