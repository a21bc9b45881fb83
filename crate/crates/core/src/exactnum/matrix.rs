use std::fmt;
use std::ops::{Add, Index, IndexMut, Sub};

use super::scalar::GaussianRational;
use super::subspace::Subspace;
use crate::{Error, Result};

type Gq = GaussianRational;

/// Column vector over ℚ(i). The length is fixed at construction.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Vector(Vec<Gq>);

impl Vector {
    pub fn new(entries: Vec<Gq>) -> Self {
        Self(entries)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![Gq::zero(); n])
    }

    /// Standard basis vector `e_i` of length `n`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Gq::one();
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Self(xs.iter().map(|&x| Gq::from_int(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Gq] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Gq> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Gq> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Gq::is_zero)
    }

    pub fn scale(&self, c: &Gq) -> Self {
        Self(self.0.iter().map(|x| x * c).collect())
    }

    pub fn conj(&self) -> Self {
        Self(self.0.iter().map(Gq::conj).collect())
    }

    pub fn is_real(&self) -> bool {
        self.0.iter().all(Gq::is_real)
    }

    /// `self += c · other`.
    pub fn axpy(&mut self, c: &Gq, other: &Vector) {
        debug_assert_eq!(self.len(), other.len());
        if c.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(other.0.iter()) {
            if !b.is_zero() {
                *a += &(c * b);
            }
        }
    }

    pub fn check_len(&self, n: usize) -> Result<()> {
        if self.len() == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: n, found: self.len() })
        }
    }

    /// Real coordinates `(Re x₁, …, Re xₙ, Im x₁, …, Im xₙ)`.
    pub fn realify(&self) -> Vector {
        let mut out: Vec<Gq> = self.0.iter().map(Gq::real_part).collect();
        out.extend(self.0.iter().map(Gq::imag_part));
        Vector(out)
    }

    /// Inverse of [`Vector::realify`]; the input must have even length.
    pub fn complexify(&self) -> Vector {
        let n = self.len() / 2;
        Vector((0..n).map(|j| &self.0[j] + &self.0[n + j].mul_i()).collect())
    }

    /// Linear combination `Σ cᵢ vᵢ`; `vectors` must be nonempty or `n` given.
    pub fn combination(n: usize, coeffs: &[Gq], vectors: &[Vector]) -> Vector {
        let mut out = Vector::zeros(n);
        for (c, v) in coeffs.iter().zip(vectors) {
            out.axpy(c, v);
        }
        out
    }
}

impl Index<usize> for Vector {
    type Output = Gq;
    fn index(&self, i: usize) -> &Gq {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Gq {
        &mut self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl From<Vec<Gq>> for Vector {
    fn from(v: Vec<Gq>) -> Self {
        Self(v)
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Dense row-major matrix over ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Gq>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Gq>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: data.len() });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Gq::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Gq::one());
        }
        m
    }

    /// Builds a matrix whose rows are the given vectors. With no rows the
    /// column count is taken from `cols`.
    pub fn from_rows(cols: usize, rows: &[Vector]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            r.check_len(cols)?;
            data.extend(r.iter().cloned());
        }
        Ok(Self { rows: rows.len(), cols, data })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[Vector]) -> Result<Self> {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            c.check_len(rows)?;
            for i in 0..rows {
                m.set(i, j, c[i].clone());
            }
        }
        Ok(m)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&x| Gq::from_int(x))
            })
            .collect();
        Self { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Gq {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Gq) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector::new(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Gq::is_zero)
    }

    pub fn conj(&self) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(Gq::conj).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, c: &Gq) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: other.rows });
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.cols });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &Vector) -> Result<Vector> {
        v.check_len(self.cols)?;
        Ok(Vector::new(
            (0..self.rows)
                .map(|i| {
                    let mut acc = Gq::zero();
                    for j in 0..self.cols {
                        let a = self.get(i, j);
                        if !a.is_zero() && !v[j].is_zero() {
                            acc += &(a * &v[j]);
                        }
                    }
                    acc
                })
                .collect(),
        ))
    }

    /// Commutator `AB − BA` of square matrices.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Gauss–Jordan elimination. The first nonzero entry in each column is
    /// taken as pivot, which keeps the output independent of entry sizes.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let x = m.get(r, j) * &inv;
                m.set(r, j, x);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let sub = &factor * m.get(r, j);
                    if !sub.is_zero() {
                        let idx = i * m.cols + j;
                        m.data[idx] -= &sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let rank = pivots.len();
        Rref { matrix: m, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Right null space `{x : self · x = 0}`.
    pub fn kernel(&self) -> Subspace {
        let Rref { matrix, pivots, .. } = self.rref();
        let mut basis = Vec::new();
        let mut pivot_iter = pivots.iter().peekable();
        for free in 0..self.cols {
            if pivot_iter.peek() == Some(&&free) {
                pivot_iter.next();
                continue;
            }
            let mut v = Vector::unit(self.cols, free);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -matrix.get(row, free);
            }
            basis.push(v);
        }
        Subspace::span(self.cols, &basis).expect("kernel vectors have ambient length")
    }

    /// One solution of `self · x = b` (free variables set to zero), or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, b: &Vector) -> Result<Option<Vector>> {
        b.check_len(self.rows)?;
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = Vector::zeros(self.cols);
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = matrix.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}
