use super::matrix::{Matrix, Vector};
use crate::{Error, Result};

/// Linear subspace of ℚ(i)ⁿ held in reduced row-echelon canonical form.
///
/// Basis rows are nonzero, pivots strictly increase, pivot entries are 1 and
/// every other entry in a pivot column is 0. Two subspaces are equal exactly
/// when their canonical bases agree entry-wise.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim).map(|i| Vector::unit(ambient_dim, i)).collect();
        Self { ambient_dim, basis, pivots: (0..ambient_dim).collect() }
    }

    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Result<Self> {
        let m = Matrix::from_rows(ambient_dim, vectors)?;
        let r = m.rref();
        let basis = (0..r.rank).map(|i| r.matrix.row(i)).collect();
        Ok(Self { ambient_dim, basis, pivots: r.pivots })
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Result<Self> {
        let vs: Vec<Vector> = indices
            .iter()
            .map(|&i| {
                if i < ambient_dim {
                    Ok(Vector::unit(ambient_dim, i))
                } else {
                    Err(Error::IndexOutOfRange { index: i, dim: ambient_dim })
                }
            })
            .collect::<Result<_>>()?;
        Self::span(ambient_dim, &vs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: other.ambient_dim });
        }
        Ok(())
    }

    /// Eliminates the pivot coordinates of `v` against the basis. The result
    /// is the canonical representative of `v + self`.
    pub fn reduce(&self, v: &Vector) -> Result<Vector> {
        v.check_len(self.ambient_dim)?;
        let mut out = v.clone();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if !c.is_zero() {
                out.axpy(&-c, row);
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &Vector) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        for v in &other.basis {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coordinates of the class of `v` in `ambient / self`, read off the
    /// non-pivot coordinates of the reduced representative.
    pub fn quotient_coords(&self, v: &Vector) -> Result<Vector> {
        let r = self.reduce(v)?;
        let mut piv = self.pivots.iter().peekable();
        let mut out = Vec::with_capacity(self.ambient_dim - self.dim());
        for (j, x) in r.into_entries().into_iter().enumerate() {
            if piv.peek() == Some(&&j) {
                piv.next();
                continue;
            }
            out.push(x);
        }
        Ok(Vector::new(out))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient_dim, &vs)
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        // x = Σ αᵢ aᵢ lies in `other` iff its class modulo `other` vanishes
        let classes: Vec<Vector> = self.basis.iter().map(|a| other.quotient_coords(a)).collect::<Result<_>>()?;
        let m = Matrix::from_columns(self.ambient_dim - other.dim(), &classes)?;
        let ker = m.kernel();
        let vs: Vec<Vector> = ker
            .basis()
            .iter()
            .map(|alpha| Vector::combination(self.ambient_dim, alpha.entries(), &self.basis))
            .collect();
        Subspace::span(self.ambient_dim, &vs)
    }

    /// Greedy complement of `self` inside `larger`: the basis vectors of
    /// `larger`, in canonical order, that are independent modulo `self` and
    /// the previously chosen ones.
    pub fn complement_in(&self, larger: &Subspace) -> Result<Vec<Vector>> {
        self.check_ambient(larger)?;
        if !larger.contains_subspace(self)? {
            return Err(Error::Precondition("subspace is not contained in the larger space".into()));
        }
        let mut acc = self.clone();
        let mut chosen = Vec::new();
        for v in &larger.basis {
            if !acc.contains(v)? {
                chosen.push(v.clone());
                let mut vs = acc.basis.clone();
                vs.push(v.clone());
                acc = Subspace::span(self.ambient_dim, &vs)?;
            }
        }
        Ok(chosen)
    }

    /// Coordinates of `v` with respect to `complement`, where `complement`
    /// spans a complement of `self` and `v ∈ self ⊕ span(complement)`.
    pub fn coords_modulo(&self, v: &Vector, complement: &[Vector]) -> Result<Option<Vector>> {
        let q = self.quotient_coords(v)?;
        let cols: Vec<Vector> = complement.iter().map(|c| self.quotient_coords(c)).collect::<Result<_>>()?;
        Matrix::from_columns(q.len(), &cols)?.solve(&q)
    }

    /// Image under a linear map given by its matrix.
    pub fn image(&self, m: &Matrix) -> Result<Subspace> {
        let vs: Vec<Vector> = self.basis.iter().map(|b| m.mul_vec(b)).collect::<Result<_>>()?;
        Subspace::span(m.rows(), &vs)
    }
}

/// Renders `v` as a combination of labelled basis vectors, e.g. `H + 2·X↑`.
pub fn format_combination(v: &Vector, labels: &[String]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (c, label) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let term = if c.is_one() {
            label.clone()
        } else if (-c).is_one() {
            format!("-{label}")
        } else if c.is_real() || c.real_part().is_zero() {
            format!("{c}·{label}")
        } else {
            format!("({c})·{label}")
        };
        parts.push(term);
    }
    if parts.is_empty() {
        return "0".to_string();
    }
    let mut out = parts[0].clone();
    for p in &parts[1..] {
        match p.strip_prefix('-') {
            Some(rest) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            None => {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
    }
    out
}
