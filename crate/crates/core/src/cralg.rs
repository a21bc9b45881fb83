//! CR algebras `(𝔤, τ, 𝔣)`: CR dimensions, the Freeman sequence, Levi forms
//! of every order and the partial complex structure at the base point.

use serde::{Deserialize, Serialize};

use crate::exactnum::{format_combination, GaussianRational, Matrix, Subspace, Vector};
use crate::liecore::{check_involution, AntilinearMap, LieAlgebra};
use crate::{Error, Result};

type Gq = GaussianRational;

#[derive(Clone, Debug)]
pub struct CrAlgebra {
    g: LieAlgebra,
    tau: AntilinearMap,
    f: Subspace,
    tau_f: Subspace,
    isotropy: Subspace,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "order")]
pub enum Verdict {
    NondegenerateOfOrder(usize),
    HolomorphicallyDegenerate,
    TotallyComplex,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::NondegenerateOfOrder(k) => write!(f, "{k}-nondegenerate"),
            Verdict::HolomorphicallyDegenerate => write!(f, "holomorphically degenerate"),
            Verdict::TotallyComplex => write!(f, "totally complex"),
        }
    }
}

/// `𝔣 = 𝔣⁰ ⊇ 𝔣¹ ⊇ …`, ending with one repeated term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreemanSequence {
    pub steps: Vec<Subspace>,
    pub verdict: Verdict,
    /// First index `s` with `𝔣ˢ = 𝔣ˢ⁺¹`.
    pub stabilization_index: usize,
}

impl FreemanSequence {
    pub fn dims(&self) -> Vec<usize> {
        self.steps.iter().map(Subspace::dim).collect()
    }

    pub fn stabilized(&self) -> &Subspace {
        &self.steps[self.stabilization_index]
    }
}

/// Levi form of order `h+1`: `𝔣ʰ/𝔱 × τ𝔣/𝔱 → (𝔣^{h−1} + τ𝔣)/(𝔣ʰ + τ𝔣)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviMatrix {
    pub order: usize,
    pub rows: Vec<Vector>,
    /// `Wⱼ ∈ 𝔣`; column `j` pairs against `τ(Wⱼ)`.
    pub cols: Vec<Vector>,
    pub targets: Vec<Vector>,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub target_labels: Vec<String>,
    /// One `rows × cols` matrix per target vector.
    pub entries: Vec<Matrix>,
}

impl LeviMatrix {
    /// Rows side by side: `[M₁ | M₂ | …]`.
    fn stacked(&self) -> Matrix {
        let r = self.rows.len();
        let c = self.cols.len();
        let mut m = Matrix::zeros(r, c * self.entries.len());
        for (t, e) in self.entries.iter().enumerate() {
            for i in 0..r {
                for j in 0..c {
                    m.set(i, t * c + j, e.get(i, j).clone());
                }
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        self.stacked().rank()
    }

    /// Nonzero positions `(target, row, col)`.
    pub fn support(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (t, e) in self.entries.iter().enumerate() {
            for i in 0..e.rows() {
                for j in 0..e.cols() {
                    if !e.get(i, j).is_zero() {
                        out.push((t, i, j));
                    }
                }
            }
        }
        out
    }

    /// Coefficient vectors `α` (on the row basis) with `Σ αᵢ rowᵢ` pairing to
    /// zero against every column and target.
    pub fn left_kernel(&self) -> Subspace {
        self.stacked().transpose().kernel()
    }
}

/// Partial complex structure on `D = ((𝔣 + τ𝔣) ∩ 𝔤^τ)/𝔱^τ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialComplexStructure {
    /// Representatives of a basis of `D`, as complex coordinate vectors
    /// fixed by τ.
    pub basis: Vec<Vector>,
    /// Real matrix of `J` in that basis, acting on columns.
    pub matrix: Matrix,
}

impl PartialComplexStructure {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `J` applied to a combination of the basis.
    pub fn apply(&self, coeffs: &Vector) -> Result<Vector> {
        self.matrix.mul_vec(coeffs)
    }

    pub fn squares_to_minus_one(&self) -> bool {
        let n = self.dim();
        self.matrix.mul(&self.matrix).map(|m| m == Matrix::identity(n).scale(&Gq::from_int(-1))).unwrap_or(false)
    }
}

impl CrAlgebra {
    pub fn new(g: LieAlgebra, tau: AntilinearMap, f: Subspace) -> Result<Self> {
        let jac = g.check_jacobi();
        if let Some(((i, j, l), _)) = jac.violations.first() {
            return Err(Error::InvalidStructure(format!(
                "Jacobi identity fails on ({}, {}, {})",
                g.labels()[*i],
                g.labels()[*j],
                g.labels()[*l]
            )));
        }
        let inv = check_involution(&g, &tau)?;
        if !inv.involutive {
            return Err(Error::InvalidStructure("τ is not involutive".into()));
        }
        if let Some((i, j)) = inv.automorphism_violations.first() {
            return Err(Error::InvalidStructure(format!(
                "τ is not an automorphism on ({}, {})",
                g.labels()[*i],
                g.labels()[*j]
            )));
        }
        if !g.is_subalgebra(&f)? {
            return Err(Error::InvalidStructure("f is not a subalgebra".into()));
        }
        let tau_f = tau.image(&f)?;
        let isotropy = f.intersection(&tau_f)?;
        Ok(Self { g, tau, f, tau_f, isotropy })
    }

    pub fn g(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn tau(&self) -> &AntilinearMap {
        &self.tau
    }

    pub fn f(&self) -> &Subspace {
        &self.f
    }

    pub fn tau_f(&self) -> &Subspace {
        &self.tau_f
    }

    /// `𝔱 = 𝔣 ∩ τ𝔣`.
    pub fn isotropy(&self) -> &Subspace {
        &self.isotropy
    }

    pub fn label(&self, v: &Vector) -> String {
        format_combination(v, self.g.labels())
    }

    /// `(crdim, crcodim)` with the codimension measured in complex dimension.
    pub fn cr_dimensions(&self) -> Result<(usize, usize)> {
        let sum = self.f.sum(&self.tau_f)?;
        Ok((self.f.dim() - self.isotropy.dim(), self.g.dim() - sum.dim()))
    }

    /// `{Z ∈ s : [Z, τ𝔣] ⊆ s + τ𝔣}`.
    pub fn freeman_step(&self, s: &Subspace) -> Result<Subspace> {
        if !self.f.contains_subspace(s)? {
            return Err(Error::Precondition("freeman_step: s is not contained in f".into()));
        }
        if !s.contains_subspace(&self.isotropy)? {
            return Err(Error::Precondition("freeman_step: s does not contain f ∩ τ(f)".into()));
        }
        let q = s.sum(&self.tau_f)?;
        let mut cols = Vec::with_capacity(s.dim());
        for z in s.basis() {
            let mut stacked = Vec::new();
            for w in self.tau_f.basis() {
                stacked.extend(q.quotient_coords(&self.g.bracket(z, w)?)?.into_entries());
            }
            cols.push(Vector::new(stacked));
        }
        let rows = cols.first().map_or(0, Vector::len);
        if rows == 0 {
            return Ok(s.clone());
        }
        let ker = Matrix::from_columns(rows, &cols)?.kernel();
        let vs: Vec<Vector> =
            ker.basis().iter().map(|a| Vector::combination(self.g.dim(), a.entries(), s.basis())).collect();
        Subspace::span(self.g.dim(), &vs)
    }

    /// Iterates [`Self::freeman_step`] until two consecutive terms agree,
    /// calling it at most `max_steps` times.
    pub fn freeman_sequence(&self, max_steps: usize) -> Result<FreemanSequence> {
        if max_steps == 0 {
            return Err(Error::Precondition("max_steps must be at least 1".into()));
        }
        let mut steps = vec![self.f.clone()];
        for _ in 0..max_steps {
            let next = self.freeman_step(steps.last().expect("nonempty"))?;
            let done = &next == steps.last().expect("nonempty");
            steps.push(next);
            if done {
                let stabilization_index = steps.len() - 2;
                let verdict = if self.cr_dimensions()?.1 == 0 {
                    Verdict::TotallyComplex
                } else if steps[stabilization_index] == self.isotropy {
                    Verdict::NondegenerateOfOrder(stabilization_index)
                } else {
                    Verdict::HolomorphicallyDegenerate
                };
                return Ok(FreemanSequence { steps, verdict, stabilization_index });
            }
        }
        Err(Error::NotStabilized { max_steps })
    }

    /// `𝔣′ = 𝔣 + τ(⋂ 𝔣ᵏ)` equals `𝔣`.
    pub fn weak_nondegeneracy(&self, max_steps: usize) -> Result<bool> {
        let seq = self.freeman_sequence(max_steps)?;
        let f_prime = self.f.sum(&self.tau.image(seq.stabilized())?)?;
        Ok(f_prime == self.f)
    }

    /// Levi form of order `order = h + 1`, valid for
    /// `1 ≤ order ≤ stabilization index + 1`.
    pub fn levi_matrix(&self, order: usize, max_steps: usize) -> Result<LeviMatrix> {
        let seq = self.freeman_sequence(max_steps)?;
        let max = seq.stabilization_index + 1;
        if order == 0 || order > max {
            return Err(Error::OrderOutOfRange { order, max });
        }
        let h = order - 1;
        let fh = &seq.steps[h];
        let rows = self.isotropy.complement_in(fh)?;
        let cols = self.isotropy.complement_in(&self.f)?;
        let modulus = fh.sum(&self.tau_f)?;
        let outer = if h == 0 { Subspace::full(self.g.dim()) } else { seq.steps[h - 1].sum(&self.tau_f)? };
        let targets = modulus.complement_in(&outer)?;
        let tau_cols: Vec<Vector> = cols.iter().map(|w| self.tau.apply(w)).collect::<Result<_>>()?;
        let mut entries = vec![Matrix::zeros(rows.len(), cols.len()); targets.len()];
        for (i, z) in rows.iter().enumerate() {
            for (j, w) in tau_cols.iter().enumerate() {
                let b = self.g.bracket(z, w)?;
                let c = modulus.coords_modulo(&b, &targets)?.ok_or_else(|| {
                    Error::InvalidStructure(format!(
                        "[{}, {}] leaves the order-{order} target space",
                        self.label(z),
                        self.label(w)
                    ))
                })?;
                for (t, m) in entries.iter_mut().enumerate() {
                    m.set(i, j, c[t].clone());
                }
            }
        }
        Ok(LeviMatrix {
            order,
            row_labels: rows.iter().map(|v| self.label(v)).collect(),
            col_labels: cols.iter().map(|v| format!("τ({})", self.label(v))).collect(),
            target_labels: targets.iter().map(|v| self.label(v)).collect(),
            rows,
            cols,
            targets,
            entries,
        })
    }

    /// `𝔱` plus the left kernel of `levi`, as a subspace of 𝔤.
    pub fn levi_kernel(&self, levi: &LeviMatrix) -> Result<Subspace> {
        let mut vs = self.isotropy.basis().to_vec();
        for a in levi.left_kernel().basis() {
            vs.push(Vector::combination(self.g.dim(), a.entries(), &levi.rows));
        }
        Subspace::span(self.g.dim(), &vs)
    }

    /// Realification of a complex subspace: spanned by `b` and `i·b`.
    fn realify(&self, s: &Subspace) -> Result<Subspace> {
        let vs: Vec<Vector> = s.basis().iter().flat_map(|b| [b.realify(), b.scale(&Gq::i()).realify()]).collect();
        Subspace::span(2 * self.g.dim(), &vs)
    }

    /// `J` with `J X = Y ⟺ X + iY ∈ 𝔣` on `D = ((𝔣+τ𝔣) ∩ 𝔤^τ)/𝔱^τ`.
    pub fn partial_complex_structure(&self) -> Result<PartialComplexStructure> {
        let fixed = self.tau.fixed_real_subspace();
        let e = self.realify(&self.f.sum(&self.tau_f)?)?.intersection(&fixed)?;
        let t_real = self.realify(&self.isotropy)?.intersection(&fixed)?;
        let basis: Vec<Vector> = t_real.complement_in(&e)?.iter().map(Vector::complexify).collect();
        let d = basis.len();
        // unknowns y ∈ ℚᵈ: Σ yⱼ q(iXⱼ) = −q(Xᵢ), split into real and imaginary parts
        let iq: Vec<Vector> = basis
            .iter()
            .map(|x| self.f.quotient_coords(&x.scale(&Gq::i())).map(|v| v.realify()))
            .collect::<Result<_>>()?;
        let rows = 2 * (self.g.dim() - self.f.dim());
        let a = Matrix::from_columns(rows, &iq)?;
        if a.rank() != d {
            return Err(Error::ComplexStructure("solution is not unique".into()));
        }
        let mut j = Matrix::zeros(d, d);
        for (col, x) in basis.iter().enumerate() {
            let rhs = self.f.quotient_coords(x)?.realify().scale(&Gq::from_int(-1));
            let y = a
                .solve(&rhs)?
                .ok_or_else(|| Error::ComplexStructure(format!("no Y with {} + iY in f", self.label(x))))?;
            for r in 0..d {
                j.set(r, col, y[r].clone());
            }
        }
        let pcs = PartialComplexStructure { basis, matrix: j };
        if !pcs.squares_to_minus_one() {
            return Err(Error::ComplexStructure("J² ≠ −1".into()));
        }
        Ok(pcs)
    }
}
