//! Dense matrices over the Grassmann algebra.

use std::fmt;

use crate::error::AlgebraError;
use crate::grassmann::{Grassmann, Parity};
use crate::scalar::Scalar;
use crate::RatFunc;

/// Rectangular matrix of Grassmann elements, row-major.
///
/// Parity is not part of the type: even-only operations check it at the
/// boundary, so odd blocks can still be built and multiplied.
#[derive(Clone, Debug, PartialEq)]
pub struct SuperMatrix<C> {
    rows: usize,
    cols: usize,
    entries: Vec<Grassmann<C>>,
}

fn mismatch(what: &str, a: (usize, usize), b: (usize, usize)) -> AlgebraError {
    AlgebraError::DimensionMismatch(format!("{what}: {}x{} vs {}x{}", a.0, a.1, b.0, b.1))
}

impl<C: Scalar> SuperMatrix<C> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![Grassmann::default(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Grassmann::one() } else { Grassmann::default() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Grassmann<C>) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    /// Purely bosonic matrix from rows of coefficients.
    pub fn from_rows(rows: Vec<Vec<C>>) -> Result<Self, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgebraError::DimensionMismatch("ragged rows".into()));
        }
        let entries = rows.into_iter().flatten().map(Grassmann::scalar).collect();
        Ok(Self { rows: r, cols: c, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Grassmann<C> {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Grassmann<C>) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = &Grassmann<C>> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Grassmann::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_even(&self) -> bool {
        self.entries.iter().all(|e| e.parity() == Parity::Even)
    }

    pub fn is_bosonic(&self) -> bool {
        self.entries.iter().all(Grassmann::is_scalar)
    }

    pub fn map(&self, f: impl Fn(&Grassmann<C>) -> Grassmann<C>) -> Self {
        Self { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> SuperMatrix<D> {
        SuperMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.map_coeffs(&f)).collect(),
        }
    }

    pub fn try_map_coeffs<D: Scalar, E>(
        &self,
        f: impl Fn(&C) -> Result<D, E>,
    ) -> Result<SuperMatrix<D>, E> {
        let entries = self.entries.iter().map(|e| e.try_map_coeffs(&f)).collect::<Result<_, _>>()?;
        Ok(SuperMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if self.cols != rhs.rows {
            return Err(mismatch("matmul", self.shape(), rhs.shape()));
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = Grassmann::default();
            for k in 0..self.cols {
                let a = self.get(i, k);
                let b = rhs.get(k, j);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = &acc + &a.wedge(b);
            }
            acc
        }))
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.zip(rhs, "add", |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.zip(rhs, "sub", |a, b| a - b)
    }

    fn zip(
        &self,
        rhs: &Self,
        what: &str,
        f: impl Fn(&Grassmann<C>, &Grassmann<C>) -> Grassmann<C>,
    ) -> Result<Self, AlgebraError> {
        if self.shape() != rhs.shape() {
            return Err(mismatch(what, self.shape(), rhs.shape()));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        self.map(|e| -e)
    }

    /// `g · self`, multiplying every entry from the left.
    pub fn left_mul(&self, g: &Grassmann<C>) -> Self {
        self.map(|e| g.wedge(e))
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|e| e.scale(c))
    }

    /// Conjugate transpose with the Grassmann adjoint on entries.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).dagger())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Grade-0 part of every entry.
    pub fn body(&self) -> Self {
        self.map(|e| Grassmann::scalar(e.body()))
    }

    pub fn soul(&self) -> Self {
        self.map(Grassmann::soul)
    }

    /// Bosonic matrix of the coefficients of one basis monomial.
    pub fn component(&self, mask: u8) -> Self {
        self.map(|e| Grassmann::scalar(e.component(mask)))
    }

    pub fn trace(&self) -> Result<Grassmann<C>, AlgebraError> {
        if !self.is_square() {
            return Err(mismatch("trace", self.shape(), self.shape()));
        }
        Ok((0..self.rows).fold(Grassmann::default(), |acc, i| &acc + self.get(i, i)))
    }

    /// Rows `[start, end)`.
    pub fn row_block(&self, start: usize, end: usize) -> Self {
        Self::from_fn(end - start, self.cols, |i, j| self.get(start + i, j).clone())
    }

    pub fn vstack(top: &Self, bottom: &Self) -> Result<Self, AlgebraError> {
        if top.cols != bottom.cols {
            return Err(mismatch("vstack", top.shape(), bottom.shape()));
        }
        let mut entries = top.entries.clone();
        entries.extend(bottom.entries.iter().cloned());
        Ok(Self { rows: top.rows + bottom.rows, cols: top.cols, entries })
    }

    fn bosonic_entry(&self, i: usize, j: usize) -> C {
        self.get(i, j).body()
    }

    fn require_bosonic_square(&self) -> Result<(), AlgebraError> {
        if !self.is_square() {
            return Err(mismatch("square matrix required", self.shape(), self.shape()));
        }
        if !self.is_bosonic() {
            return Err(AlgebraError::NotBosonic);
        }
        Ok(())
    }

    /// Determinant of a bosonic square matrix by cofactor expansion.
    pub fn det_bosonic(&self) -> Result<C, AlgebraError> {
        self.require_bosonic_square()?;
        let n = self.rows;
        let m: Vec<Vec<C>> =
            (0..n).map(|i| (0..n).map(|j| self.bosonic_entry(i, j)).collect()).collect();
        let idx: Vec<usize> = (0..n).collect();
        Ok(cofactor_det(&m, &idx, &idx))
    }

    /// Adjugate of a bosonic square matrix.
    pub fn adjugate(&self) -> Result<Self, AlgebraError> {
        self.require_bosonic_square()?;
        let n = self.rows;
        let m: Vec<Vec<C>> =
            (0..n).map(|i| (0..n).map(|j| self.bosonic_entry(i, j)).collect()).collect();
        if n == 1 {
            return Ok(Self::identity(1));
        }
        Ok(Self::from_fn(n, n, |i, j| {
            // adj[i][j] = (-1)^{i+j} minor(j, i)
            let rows: Vec<usize> = (0..n).filter(|r| *r != j).collect();
            let cols: Vec<usize> = (0..n).filter(|c| *c != i).collect();
            let minor = cofactor_det(&m, &rows, &cols);
            Grassmann::scalar(if (i + j) % 2 == 0 { minor } else { -minor })
        }))
    }

    /// Exact inverse of an even square matrix `B + S` (body `B`, nilpotent
    /// soul `S`): `B⁻¹ Σ_k (-S B⁻¹)^k`, stopping at the first vanishing term.
    /// The body is inverted as `adj(B) / det(B)`.
    pub fn invert_even(&self) -> Result<Self, AlgebraError> {
        if !self.is_square() {
            return Err(mismatch("invert_even", self.shape(), self.shape()));
        }
        if !self.is_even() {
            return Err(AlgebraError::NotEven);
        }
        let body = self.body();
        let det = body.det_bosonic()?;
        if det.is_zero() {
            return Err(AlgebraError::SingularBody);
        }
        let inv_det = det.try_inv()?;
        let body_inv = body.adjugate()?.scale(&inv_det);
        let step = self.soul().neg().matmul(&body_inv)?;
        let mut term = Self::identity(self.rows);
        let mut sum = term.clone();
        // grades add up by at least 2 per step; over 4 generators the series
        // has at most 3 non-zero terms
        for _ in 0..4 {
            term = term.matmul(&step)?;
            if term.is_zero() {
                break;
            }
            sum = sum.add(&term)?;
        }
        body_inv.matmul(&sum)
    }
}

/// Determinant of the submatrix on the given rows and columns, expanded
/// along the first row.
fn cofactor_det<C: Scalar>(m: &[Vec<C>], rows: &[usize], cols: &[usize]) -> C {
    match rows.len() {
        0 => C::one(),
        1 => m[rows[0]][cols[0]].clone(),
        2 => {
            let a = m[rows[0]][cols[0]].clone() * m[rows[1]][cols[1]].clone();
            let b = m[rows[0]][cols[1]].clone() * m[rows[1]][cols[0]].clone();
            a - b
        }
        _ => {
            let r0 = rows[0];
            let rest = &rows[1..];
            let mut acc = C::zero();
            for (k, &c) in cols.iter().enumerate() {
                let a = &m[r0][c];
                if a.is_zero() {
                    continue;
                }
                let sub: Vec<usize> = cols.iter().copied().filter(|x| *x != c).collect();
                let t = a.clone() * cofactor_det(m, rest, &sub);
                acc = if k % 2 == 0 { acc + t } else { acc - t };
            }
            acc
        }
    }
}

/// Row-major bracketed rendering, one row per line:
///
/// ```text
/// [[1, 0],
///  [x+, 0]]
/// ```
impl fmt::Display for SuperMatrix<RatFunc> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",\n ")?;
            }
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
