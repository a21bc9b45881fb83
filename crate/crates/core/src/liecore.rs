//! Finite-dimensional complex Lie algebras given by structure constants,
//! optional integer gradings, and antilinear involutions.

use crate::exactnum::{GaussianRational, Matrix, Subspace, Vector};
use crate::{Error, Result};

/// Lie algebra over ℂ (with structure constants in ℚ(i)) on a fixed basis.
///
/// Only the brackets `[eᵢ, eⱼ]` with `i < j` are stored; the rest of the
/// table follows from antisymmetry. The Jacobi identity is *not* enforced at
/// construction so that user input can be inspected with
/// [`LieAlgebra::check_jacobi`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    // row-major upper triangle, pair (i, j) with i < j
    table: Vec<Vector>,
    grades: Option<Vec<i64>>,
}

/// Result of [`LieAlgebra::check_jacobi`]; lists every violating triple
/// `i < j < l` with its nonzero Jacobiator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiReport {
    pub violations: Vec<((usize, usize, usize), Vector)>,
}

impl JacobiReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Result of [`LieAlgebra::check_grading`]; each violation names a basis
/// pair whose bracket has a component outside grade `grade(i) + grade(j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingReport {
    pub graded: bool,
    pub violations: Vec<(usize, usize)>,
}

impl GradingReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

impl LieAlgebra {
    /// Builds an algebra from the brackets `[eᵢ, eⱼ]`, `i < j`. Omitted pairs
    /// bracket to zero.
    pub fn new(
        labels: Vec<String>,
        brackets: impl IntoIterator<Item = ((usize, usize), Vector)>,
        grades: Option<Vec<i64>>,
    ) -> Result<Self> {
        let n = labels.len();
        let mut table = vec![Vector::zeros(n); n * n.saturating_sub(1) / 2];
        for ((i, j), v) in brackets {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, dim: n });
            }
            if j >= n {
                return Err(Error::IndexOutOfRange { index: j, dim: n });
            }
            if i >= j {
                return Err(Error::InvalidStructure(format!("brackets must be given for i < j only, got ({i}, {j})")));
            }
            v.check_len(n)?;
            table[pair_index(n, i, j)] = v;
        }
        if let Some(g) = &grades {
            if g.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: g.len() });
            }
        }
        Ok(Self { labels, table, grades })
    }

    /// The abelian algebra of dimension `n`.
    pub fn abelian(labels: Vec<String>) -> Self {
        Self::new(labels, std::iter::empty(), None).expect("empty table is valid")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn grades(&self) -> Option<&[i64]> {
        self.grades.as_deref()
    }

    pub fn grade(&self, i: usize) -> Option<i64> {
        self.grades.as_ref().map(|g| g[i])
    }

    /// `[eᵢ, eⱼ]` with the antisymmetric completion applied.
    pub fn structure(&self, i: usize, j: usize) -> Vector {
        let n = self.dim();
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.table[pair_index(n, i, j)].clone(),
            std::cmp::Ordering::Equal => Vector::zeros(n),
            std::cmp::Ordering::Greater => self.table[pair_index(n, j, i)].scale(&GaussianRational::from_int(-1)),
        }
    }

    /// Stored brackets `((i, j), [eᵢ, eⱼ])` for `i < j`, skipping zeros.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = ((usize, usize), &Vector)> {
        let n = self.dim();
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .map(move |(i, j)| ((i, j), &self.table[pair_index(n, i, j)]))
            .filter(|(_, v)| !v.is_zero())
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        let n = self.dim();
        x.check_len(n)?;
        y.check_len(n)?;
        let mut out = Vector::zeros(n);
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if i == j || y[j].is_zero() {
                    continue;
                }
                let (a, b, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
                let c = &self.table[pair_index(n, a, b)];
                if c.is_zero() {
                    continue;
                }
                let mut coeff = &x[i] * &y[j];
                if sign < 0 {
                    coeff = -coeff;
                }
                out.axpy(&coeff, c);
            }
        }
        Ok(out)
    }

    pub fn unit(&self, i: usize) -> Vector {
        Vector::unit(self.dim(), i)
    }

    /// Matrix of `ad(x)` acting on column coordinate vectors.
    pub fn ad(&self, x: &Vector) -> Result<Matrix> {
        let cols: Vec<Vector> = (0..self.dim()).map(|j| self.bracket(x, &self.unit(j))).collect::<Result<_>>()?;
        Matrix::from_columns(self.dim(), &cols)
    }

    pub fn check_jacobi(&self) -> JacobiReport {
        let n = self.dim();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for l in j + 1..n {
                    let (a, b, c) = (self.unit(i), self.unit(j), self.unit(l));
                    let br = |x: &Vector, y: &Vector| self.bracket(x, y).expect("same dimension");
                    let t1 = br(&a, &br(&b, &c));
                    let t2 = br(&b, &br(&c, &a));
                    let t3 = br(&c, &br(&a, &b));
                    let sum = &(&t1 + &t2) + &t3;
                    if !sum.is_zero() {
                        violations.push(((i, j, l), sum));
                    }
                }
            }
        }
        JacobiReport { violations }
    }

    /// Checks `[𝔤ₚ, 𝔤_q] ⊆ 𝔤_{p+q}` on basis pairs. Without grades the
    /// report is trivially valid with `graded == false`.
    pub fn check_grading(&self) -> GradingReport {
        let Some(grades) = &self.grades else {
            return GradingReport { graded: false, violations: Vec::new() };
        };
        let violations = self
            .nonzero_brackets()
            .filter(|((i, j), v)| {
                let target = grades[*i] + grades[*j];
                v.iter().enumerate().any(|(l, c)| !c.is_zero() && grades[l] != target)
            })
            .map(|(p, _)| p)
            .collect();
        GradingReport { graded: true, violations }
    }

    /// `[s, s] ⊆ s`.
    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: s.ambient_dim() });
        }
        let b = s.basis();
        for (p, x) in b.iter().enumerate() {
            for y in &b[p + 1..] {
                if !s.contains(&self.bracket(x, y)?)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Antilinear map `x ↦ T · conj(x)` in the fixed basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntilinearMap {
    matrix: Matrix,
}

/// Result of [`check_involution`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionReport {
    /// `T · conj(T) = 1`.
    pub involutive: bool,
    /// Basis pairs with `τ[eᵢ, eⱼ] ≠ [τeᵢ, τeⱼ]`.
    pub automorphism_violations: Vec<(usize, usize)>,
    /// Real dimension of the fixed-point set.
    pub real_form_dim: usize,
    pub dim: usize,
}

impl InvolutionReport {
    pub fn is_valid(&self) -> bool {
        self.involutive && self.automorphism_violations.is_empty() && self.real_form_dim == self.dim
    }
}

impl AntilinearMap {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::DimensionMismatch { expected: matrix.rows(), found: matrix.cols() });
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, x: &Vector) -> Result<Vector> {
        self.matrix.mul_vec(&x.conj())
    }

    /// `τ(s)`, again a complex subspace.
    pub fn image(&self, s: &Subspace) -> Result<Subspace> {
        let vs: Vec<Vector> = s.basis().iter().map(|b| self.apply(b)).collect::<Result<_>>()?;
        Subspace::span(self.dim(), &vs)
    }

    /// The fixed-point condition `T·conj(x) = x` as a real linear system in
    /// the realified coordinates `(Re x, Im x)`.
    fn fixed_point_system(&self) -> Matrix {
        let n = self.dim();
        let mut sys = Matrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                let t = self.matrix.get(i, j);
                let p = t.real_part();
                let q = t.imag_part();
                let d = if i == j { GaussianRational::one() } else { GaussianRational::zero() };
                // Re: P a + Q b − a ; Im: Q a − P b − b
                sys.set(i, j, &p - &d);
                sys.set(i, n + j, q.clone());
                sys.set(n + i, j, q);
                sys.set(n + i, n + j, -(&p + &d));
            }
        }
        sys
    }

    /// A real basis of `{x : τx = x}`, returned as complex coordinate vectors.
    pub fn fixed_real_basis(&self) -> Vec<Vector> {
        self.fixed_real_subspace().basis().iter().map(Vector::complexify).collect()
    }

    /// The fixed-point set as a subspace of the realified space ℚ²ⁿ.
    pub fn fixed_real_subspace(&self) -> Subspace {
        self.fixed_point_system().kernel()
    }

    pub fn real_form_dim(&self) -> usize {
        self.fixed_real_subspace().dim()
    }
}

pub fn apply_antilinear(t: &AntilinearMap, x: &Vector) -> Result<Vector> {
    t.apply(x)
}

/// Checks that `t` is an involutive antilinear automorphism of `g` and
/// reports the real dimension of its fixed-point set.
pub fn check_involution(g: &LieAlgebra, t: &AntilinearMap) -> Result<InvolutionReport> {
    let n = g.dim();
    if t.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: t.dim() });
    }
    let involutive = t.matrix.mul(&t.matrix.conj())? == Matrix::identity(n);
    let images: Vec<Vector> = (0..n).map(|i| t.apply(&g.unit(i))).collect::<Result<_>>()?;
    let mut automorphism_violations = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = t.apply(&g.structure(i, j))?;
            let rhs = g.bracket(&images[i], &images[j])?;
            if lhs != rhs {
                automorphism_violations.push((i, j));
            }
        }
    }
    Ok(InvolutionReport { involutive, automorphism_violations, real_form_dim: t.real_form_dim(), dim: n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::su2family::build_sl2;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("e{i}")).collect()
    }

    #[test]
    fn pair_index_is_dense() {
        let n = 5;
        let mut seen = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                seen.push(pair_index(n, i, j));
            }
        }
        assert_eq!(seen, (0..n * (n - 1) / 2).collect::<Vec<_>>());
    }

    #[test]
    fn bracket_is_antisymmetric_on_basis() {
        let g = build_sl2();
        for i in 0..3 {
            assert!(g.bracket(&g.unit(i), &g.unit(i)).unwrap().is_zero());
            for j in 0..3 {
                let a = g.bracket(&g.unit(i), &g.unit(j)).unwrap();
                let b = g.bracket(&g.unit(j), &g.unit(i)).unwrap();
                assert_eq!(a, b.scale(&GaussianRational::from_int(-1)));
            }
        }
    }

    #[test]
    fn rejects_malformed_tables() {
        assert!(LieAlgebra::new(labels(2), [((1, 0), Vector::zeros(2))], None).is_err());
        assert!(LieAlgebra::new(labels(2), [((0, 2), Vector::zeros(2))], None).is_err());
        assert!(LieAlgebra::new(labels(2), [((0, 1), Vector::zeros(3))], None).is_err());
        assert!(LieAlgebra::new(labels(2), [], Some(vec![0])).is_err());
    }

    #[test]
    fn abelian_algebra_is_valid() {
        let g = LieAlgebra::abelian(labels(4));
        assert!(g.check_jacobi().is_valid());
        assert!(g.is_subalgebra(&Subspace::coordinate(4, &[1, 3]).unwrap()).unwrap());
    }

    #[test]
    fn tampered_sl2_violates_jacobi_at_the_only_triple() {
        let g = build_sl2();
        // scale [X↓, H] by 2
        let brackets: Vec<_> = g
            .nonzero_brackets()
            .map(|((i, j), v)| {
                let v = if (i, j) == (0, 1) { v.scale(&GaussianRational::from_int(2)) } else { v.clone() };
                ((i, j), v)
            })
            .collect();
        let bad = LieAlgebra::new(g.labels().to_vec(), brackets, None).unwrap();
        let report = bad.check_jacobi();
        assert_eq!(report.violations.len(), 1);
        let ((i, j, l), jac) = &report.violations[0];
        assert_eq!((*i, *j, *l), (0, 1, 2));
        // by hand: [X↓,[H,X↑]] + [H,[X↑,X↓]] + [X↑,[X↓,H]] = −2H + 0 + 4H = 2H
        assert_eq!(jac, &Vector::from_ints(&[0, 2, 0]));
    }

    #[test]
    fn subalgebra_checks_in_sl2() {
        let g = build_sl2();
        let borel = Subspace::coordinate(3, &[1, 2]).unwrap();
        assert!(g.is_subalgebra(&borel).unwrap());
        let raise_lower = Subspace::coordinate(3, &[0, 2]).unwrap();
        assert!(!g.is_subalgebra(&raise_lower).unwrap());
        assert!(g.is_subalgebra(&Subspace::zero(3)).unwrap());
        assert!(g.is_subalgebra(&Subspace::zero(4)).is_err());
    }

    #[test]
    fn coordinate_swap_on_abelian_plane() {
        let g = LieAlgebra::abelian(labels(2));
        let t = AntilinearMap::new(Matrix::from_ints(&[&[0, 1], &[1, 0]])).unwrap();
        let rep = check_involution(&g, &t).unwrap();
        assert!(rep.is_valid());
        assert_eq!(rep.real_form_dim, 2);
        // T = 2·1 squares to 4
        let t2 = AntilinearMap::new(Matrix::identity(2).scale(&GaussianRational::from_int(2))).unwrap();
        let rep = check_involution(&g, &t2).unwrap();
        assert!(!rep.involutive);
        assert!(!rep.is_valid());
    }

    #[test]
    fn grading_violation_is_reported() {
        // [e0, e1] = e2 with grades 1, 1, 1 is not graded
        let g = LieAlgebra::new(labels(3), [((0, 1), Vector::from_ints(&[0, 0, 1]))], Some(vec![1, 1, 1])).unwrap();
        assert_eq!(g.check_grading().violations, vec![(0, 1)]);
        let g = LieAlgebra::new(labels(3), [((0, 1), Vector::from_ints(&[0, 0, 1]))], Some(vec![1, 1, 2])).unwrap();
        assert!(g.check_grading().is_valid());
    }
}
