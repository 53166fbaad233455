use std::fmt;

use num_traits::{One, Zero};

use super::scalar::GaussianRational;
use crate::error::{Error, Result};

pub type Vector = Vec<GaussianRational>;

/// Conjugate-linear in the first argument: `<a, b> = sum conj(a_i) b_i`.
pub fn inner(a: &[GaussianRational], b: &[GaussianRational]) -> GaussianRational {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(GaussianRational::zero(), |mut acc, (x, y)| {
            acc += &(&x.conj() * y);
            acc
        })
}

/// Kronecker product of two vectors; the left factor varies slowest.
pub fn kron_vec(a: &[GaussianRational], b: &[GaussianRational]) -> Vector {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| x * y))
        .collect()
}

pub fn is_zero_vec(v: &[GaussianRational]) -> bool {
    v.iter().all(GaussianRational::is_zero)
}

pub fn format_vec(v: &[GaussianRational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Dense row-major matrix over the Gaussian rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

/// Reduced row-echelon form with zero rows dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub rows: Vec<Vector>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the null space: one vector per non-pivot column.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let mut basis = Vec::with_capacity(self.cols - self.rank());
        let mut pivot_iter = self.pivots.iter().peekable();
        for free in 0..self.cols {
            if pivot_iter.peek() == Some(&&free) {
                pivot_iter.next();
                continue;
            }
            let mut v = vec![GaussianRational::zero(); self.cols];
            v[free] = GaussianRational::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                v[p] = -&row[free];
            }
            basis.push(v);
        }
        basis
    }
}

/// Gauss-Jordan elimination on a list of rows, each of length `cols`.
pub fn rref_rows(mut rows: Vec<Vector>, cols: usize) -> Echelon {
    debug_assert!(rows.iter().all(|r| r.len() == cols));
    let mut pivots = Vec::new();
    let mut lead = 0;
    for col in 0..cols {
        if lead == rows.len() {
            break;
        }
        let Some(found) = (lead..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(lead, found);
        let inv = rows[lead][col].inverse().expect("pivot entry is nonzero");
        for x in rows[lead].iter_mut().skip(col) {
            *x = &*x * &inv;
        }
        let pivot_row = rows[lead].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == lead || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x -= &(&factor * p);
            }
        }
        pivots.push(col);
        lead += 1;
    }
    rows.truncate(lead);
    Echelon { rows, pivots, cols }
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<GaussianRational>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vector>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != n_cols) {
            return Err(Error::Shape(format!(
                "ragged rows: expected length {n_cols}, found {}",
                bad.len()
            )));
        }
        Self::new(n_rows, n_cols, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from integer entries.
    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| GaussianRational::from(x)).collect())
                .collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            data: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = GaussianRational::one();
        }
        m
    }

    /// `v v^H / <v, v>`: the orthogonal projection onto the line through `v`.
    pub fn line_projector(v: &[GaussianRational]) -> Result<Self> {
        let norm = inner(v, v);
        if norm.is_zero() {
            return Err(Error::ZeroState);
        }
        let n = v.len();
        let mut data = Vec::with_capacity(n * n);
        for a in v {
            for b in v {
                data.push((a * &b.conj()).checked_div(&norm)?);
            }
        }
        Self::new(n, n, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussianRational {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[GaussianRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        self.data.chunks(self.cols).map(<[_]>::to_vec).collect()
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GaussianRational::is_zero)
    }

    pub fn conjugate_transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).conj());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = GaussianRational::zero();
                for k in 0..self.cols {
                    let a = self.get(r, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc += &(a * rhs.get(k, c));
                }
                data.push(acc);
            }
        }
        Ok(Self {
            rows: self.rows,
            cols: rhs.cols,
            data,
        })
    }

    pub fn apply(&self, v: &[GaussianRational]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "cannot apply {}x{} matrix to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(GaussianRational::zero(), |mut acc, (a, b)| {
                        acc += &(a * b);
                        acc
                    })
            })
            .collect())
    }

    fn zip_with(
        &self,
        rhs: &Self,
        what: &str,
        f: impl Fn(&GaussianRational, &GaussianRational) -> GaussianRational,
    ) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Shape(format!(
                "cannot {what} {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, "add", |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, "subtract", |a, b| a - b)
    }

    pub fn scale(&self, k: &GaussianRational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    pub fn trace(&self) -> GaussianRational {
        (0..self.rows.min(self.cols)).fold(GaussianRational::zero(), |mut acc, i| {
            acc += self.get(i, i);
            acc
        })
    }

    /// Kronecker product, row-major: the left factor's indices vary slowest.
    pub fn kron(&self, rhs: &Self) -> Self {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let (ar, br) = (r / rhs.rows, r % rhs.rows);
            for c in 0..cols {
                let (ac, bc) = (c / rhs.cols, c % rhs.cols);
                data.push(self.get(ar, ac) * rhs.get(br, bc));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rref(&self) -> Echelon {
        rref_rows(self.to_rows(), self.cols)
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    pub fn kernel_basis(&self) -> Vec<Vector> {
        self.rref().kernel_basis()
    }

    /// Exact inverse by Gauss-Jordan on `[A | I]`.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let augmented: Vec<Vector> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend((0..n).map(|c| {
                    if c == r {
                        GaussianRational::one()
                    } else {
                        GaussianRational::zero()
                    }
                }));
                row
            })
            .collect();
        let ech = rref_rows(augmented, 2 * n);
        if ech.rank() < n || ech.pivots[n - 1] != n - 1 {
            return Err(Error::SingularGram);
        }
        let data = ech
            .rows
            .into_iter()
            .flat_map(|row| row.into_iter().skip(n))
            .collect();
        Self::new(n, n, data)
    }

    /// `(B B^H)^-1` for a matrix `B` with linearly independent rows.
    pub fn gram_inverse(&self) -> Result<Self> {
        let gram = self.matmul(&self.conjugate_transpose())?;
        gram.inverse()
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows).map(|r| format_vec(self.row(r))).collect();
        write!(f, "[{}]", rows.join(", "))
    }
}
