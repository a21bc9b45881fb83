//! The family 𝔤 = 𝔰𝔩₂(ℂ) ⊕ V with V the (2k+1)-dimensional irreducible
//! module, its compact real form 𝔰𝔲(2) ⊕ V^τ, and the CR subalgebra
//! 𝔣 = 𝔟 ⊕ V⁺.
//!
//! Basis order is `(X↓, H, X↑, v₋ₖ, …, vₖ)` with grades `(−1, 0, 1, −k, …, k)`;
//! `vₕ` stands for the monomial `z^{k+h} z̄^{k−h}`.

use crate::cralg::CrAlgebra;
use crate::exactnum::{GaussianRational, Matrix, Subspace, Vector};
use crate::liecore::{check_involution, AntilinearMap, LieAlgebra};
use crate::{Error, Result};

type Gq = GaussianRational;

pub const X_DOWN: usize = 0;
pub const H: usize = 1;
pub const X_UP: usize = 2;

/// Index of `vₕ` in the family basis.
pub fn v_index(k: usize, h: i64) -> usize {
    debug_assert!(h.unsigned_abs() as usize <= k);
    (3 + k as i64 + h) as usize
}

fn check_k(k: i64) -> Result<usize> {
    if k < 1 {
        Err(Error::InvalidK(k))
    } else {
        Ok(k as usize)
    }
}

fn sl2_labels() -> Vec<String> {
    vec!["X↓".into(), "H".into(), "X↑".into()]
}

/// 𝔰𝔩₂(ℂ) on `(X↓, H, X↑)` with grades `(−1, 0, 1)`.
pub fn build_sl2() -> LieAlgebra {
    let e = |i| Vector::unit(3, i);
    let s = |v: Vector, c: i64| v.scale(&Gq::from_int(c));
    LieAlgebra::new(
        sl2_labels(),
        [
            // [X↓, H] = −[H, X↓] = 2X↓
            ((X_DOWN, H), s(e(X_DOWN), 2)),
            // [X↓, X↑] = −H
            ((X_DOWN, X_UP), s(e(H), -1)),
            // [H, X↑] = 2X↑
            ((H, X_UP), s(e(X_UP), 2)),
        ],
        Some(vec![-1, 0, 1]),
    )
    .expect("static table")
}

/// `ρ(H)`, `ρ(X↑)`, `ρ(X↓)` on the basis `(v₋ₖ, …, vₖ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Action {
    pub h: Matrix,
    pub up: Matrix,
    pub down: Matrix,
}

impl Sl2Action {
    pub fn by_index(&self, i: usize) -> &Matrix {
        match i {
            X_DOWN => &self.down,
            H => &self.h,
            X_UP => &self.up,
            _ => panic!("sl2 index out of range: {i}"),
        }
    }

    /// `ρ(x)` for `x` in 𝔰𝔩₂ coordinates.
    pub fn of(&self, x: &Vector) -> Result<Matrix> {
        x.check_len(3)?;
        let n = self.h.rows();
        let mut m = Matrix::zeros(n, n);
        for i in 0..3 {
            if !x[i].is_zero() {
                m = m.add(&self.by_index(i).scale(&x[i]))?;
            }
        }
        Ok(m)
    }
}

/// The irreducible action on degree-2k polynomials:
/// `Hvₕ = 2h·vₕ`, `X↑vₕ = (k−h)·vₕ₊₁`, `X↓vₕ = (k+h)·vₕ₋₁`.
pub fn irrep_action(k: i64) -> Result<Sl2Action> {
    let k = check_k(k)?;
    let n = 2 * k + 1;
    let col = |h: i64| (k as i64 + h) as usize;
    let (mut hm, mut up, mut down) = (Matrix::zeros(n, n), Matrix::zeros(n, n), Matrix::zeros(n, n));
    let ki = k as i64;
    for h in -ki..=ki {
        hm.set(col(h), col(h), Gq::from_int(2 * h));
        if h < ki {
            up.set(col(h + 1), col(h), Gq::from_int(ki - h));
        }
        if h > -ki {
            down.set(col(h - 1), col(h), Gq::from_int(ki + h));
        }
    }
    Ok(Sl2Action { h: hm, up, down })
}

/// The semidirect product 𝔤 with its real structure τ and CR subalgebra 𝔣.
#[derive(Clone, Debug)]
pub struct FamilyInstance {
    pub k: usize,
    pub g: LieAlgebra,
    pub tau: AntilinearMap,
    pub f: Subspace,
}

pub fn family_labels(k: usize) -> Vec<String> {
    let mut labels = sl2_labels();
    labels.extend((-(k as i64)..=k as i64).map(|h| format!("v{h}")));
    labels
}

fn build_algebra(k: usize) -> Result<LieAlgebra> {
    let n = 2 * k + 4;
    let rho = irrep_action(k as i64)?;
    let sl2 = build_sl2();
    let mut brackets = Vec::new();
    for ((i, j), v) in sl2.nonzero_brackets() {
        let mut w = Vector::zeros(n);
        for l in 0..3 {
            w[l] = v[l].clone();
        }
        brackets.push(((i, j), w));
    }
    // [X, vₕ] = ρ(X)vₕ for X in 𝔰𝔩₂, [V, V] = 0
    for x in 0..3 {
        let m = rho.by_index(x);
        for c in 0..2 * k + 1 {
            let mut w = Vector::zeros(n);
            for r in 0..2 * k + 1 {
                w[3 + r] = m.get(r, c).clone();
            }
            if !w.is_zero() {
                brackets.push(((x, 3 + c), w));
            }
        }
    }
    let mut grades = vec![-1, 0, 1];
    grades.extend(-(k as i64)..=k as i64);
    LieAlgebra::new(family_labels(k), brackets, Some(grades))
}

/// τ with `τH = −H`, `τX↑ = −X↓`, `τX↓ = −X↑` and `τvₕ = (−1)ʰ v₋ₕ`.
///
/// The alternating sign on V is forced by `τ[X↑, vₕ] = [τX↑, τvₕ]`
/// together with `τv₀ = v₀`.
pub fn build_tau(k: i64) -> Result<AntilinearMap> {
    let k = check_k(k)?;
    let n = 2 * k + 4;
    let mut t = Matrix::zeros(n, n);
    let m1 = Gq::from_int(-1);
    t.set(H, H, m1.clone());
    t.set(X_DOWN, X_UP, m1.clone());
    t.set(X_UP, X_DOWN, m1);
    let ki = k as i64;
    for h in -ki..=ki {
        let sign = if h.rem_euclid(2) == 0 { 1 } else { -1 };
        t.set(v_index(k, -h), v_index(k, h), Gq::from_int(sign));
    }
    AntilinearMap::new(t)
}

/// The Pauli elements `σ₁ = (X↑−X↓)/2`, `σ₂ = i(X↑+X↓)/2`, `σ₃ = iH/2` in
/// 𝔰𝔩₂ coordinates.
pub fn pauli_basis() -> [Vector; 3] {
    let half = Gq::ratio(1, 2);
    let ihalf = Gq::complex(0, 1, 1, 2);
    let mut s1 = Vector::zeros(3);
    s1[X_UP] = half.clone();
    s1[X_DOWN] = -half;
    let mut s2 = Vector::zeros(3);
    s2[X_UP] = ihalf.clone();
    s2[X_DOWN] = ihalf.clone();
    let mut s3 = Vector::zeros(3);
    s3[H] = ihalf;
    [s1, s2, s3]
}

/// Builds the family member for `k ≥ 1` and checks every structural
/// invariant (Jacobi, grading, τ, subalgebra) before returning it.
pub fn build_family(k: i64) -> Result<FamilyInstance> {
    let ku = check_k(k)?;
    let g = build_algebra(ku)?;
    let tau = build_tau(k)?;
    let mut f_idx = vec![H, X_UP];
    f_idx.extend((1..=ku as i64).map(|h| v_index(ku, h)));
    let f = Subspace::coordinate(g.dim(), &f_idx)?;
    let fam = FamilyInstance { k: ku, g, tau, f };
    fam.validate()?;
    Ok(fam)
}

impl FamilyInstance {
    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    pub fn v(&self, h: i64) -> usize {
        v_index(self.k, h)
    }

    /// Embeds an 𝔰𝔩₂ coordinate vector into 𝔤.
    pub fn embed_sl2(&self, x: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim());
        for i in 0..3 {
            out[i] = x[i].clone();
        }
        out
    }

    /// The h-th Freeman term: `𝔣` for `h = 0`, else `span{H, v_{h+1}, …, vₖ}`.
    pub fn freeman_closed_form(&self, h: usize) -> Subspace {
        if h == 0 {
            return self.f.clone();
        }
        let mut idx = vec![H];
        idx.extend((h as i64 + 1..=self.k as i64).map(|j| self.v(j)));
        Subspace::coordinate(self.dim(), &idx).expect("indices in range")
    }

    pub fn validate(&self) -> Result<()> {
        let jac = self.g.check_jacobi();
        if !jac.is_valid() {
            return Err(Error::InvalidStructure(format!("Jacobi fails at {:?}", jac.violations[0].0)));
        }
        let gr = self.g.check_grading();
        if !gr.is_valid() {
            return Err(Error::InvalidStructure(format!("grading fails at {:?}", gr.violations)));
        }
        let inv = check_involution(&self.g, &self.tau)?;
        if !inv.is_valid() {
            return Err(Error::InvalidStructure(format!("invalid involution: {inv:?}")));
        }
        if !self.g.is_subalgebra(&self.f)? {
            return Err(Error::InvalidStructure("f is not a subalgebra".into()));
        }
        Ok(())
    }

    pub fn cr_algebra(&self) -> Result<CrAlgebra> {
        CrAlgebra::new(self.g.clone(), self.tau.clone(), self.f.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: the operators z∂_z − z̄∂_z̄, z∂_z̄, z̄∂_z applied to
    /// a monomial `z^a z̄^b`, returned as `(coefficient, a', b')`.
    fn apply_derivation(op: usize, a: i64, b: i64) -> (i64, i64, i64) {
        match op {
            H => (a - b, a, b),
            X_UP => (b, a + 1, b - 1),
            X_DOWN => (a, a - 1, b + 1),
            _ => unreachable!(),
        }
    }

    /// ρ(op) as a matrix, computed from the monomial derivations alone.
    fn oracle_matrix(k: i64, op: usize) -> Matrix {
        let n = (2 * k + 1) as usize;
        let mut m = Matrix::zeros(n, n);
        for h in -k..=k {
            let (c, a, _b) = apply_derivation(op, k + h, k - h);
            if c != 0 {
                let h2 = a - k;
                m.set((h2 + k) as usize, (h + k) as usize, Gq::from_int(c));
            }
        }
        m
    }

    #[test]
    fn sl2_relations() {
        let g = build_sl2();
        assert_eq!(g.bracket(&g.unit(X_UP), &g.unit(X_DOWN)).unwrap(), g.unit(H));
        assert_eq!(g.bracket(&g.unit(H), &g.unit(X_UP)).unwrap(), Vector::from_ints(&[0, 0, 2]));
        assert_eq!(g.bracket(&g.unit(H), &g.unit(X_DOWN)).unwrap(), Vector::from_ints(&[-2, 0, 0]));
        assert!(g.bracket(&g.unit(H), &g.unit(H)).unwrap().is_zero());
        assert!(g.check_jacobi().is_valid());
        assert!(g.check_grading().is_valid());
    }

    #[test]
    fn irrep_matches_derivation_oracle() {
        for k in 1..=5 {
            let rho = irrep_action(k).unwrap();
            assert_eq!(rho.h, oracle_matrix(k, H), "k={k}");
            assert_eq!(rho.up, oracle_matrix(k, X_UP), "k={k}");
            assert_eq!(rho.down, oracle_matrix(k, X_DOWN), "k={k}");
        }
    }

    #[test]
    fn irrep_small_cases() {
        let rho = irrep_action(1).unwrap();
        assert_eq!(rho.h, Matrix::from_ints(&[&[-2, 0, 0], &[0, 0, 0], &[0, 0, 2]]));
        // X↑ v₋₁ = 2 v₀
        assert_eq!(rho.up.column(0), Vector::from_ints(&[0, 2, 0]));
        for k in 1..=4 {
            let rho = irrep_action(k).unwrap();
            assert!(rho.up.column(2 * k as usize).is_zero());
        }
        assert_eq!(irrep_action(0), Err(Error::InvalidK(0)));
    }

    #[test]
    fn family_dimensions_and_grades() {
        let f1 = build_family(1).unwrap();
        assert_eq!(f1.dim(), 6);
        assert_eq!(f1.f.dim(), 3);
        // [X↑, v₀] = v₁ for k = 1
        let g = &f1.g;
        assert_eq!(g.bracket(&g.unit(X_UP), &g.unit(f1.v(0))).unwrap(), g.unit(f1.v(1)));

        let f2 = build_family(2).unwrap();
        assert_eq!(f2.g.grade(f2.v(2)), Some(2));
        assert_eq!(f2.g.grade(X_DOWN), Some(-1));
        assert!(f2.g.bracket(&f2.g.unit(f2.v(1)), &f2.g.unit(f2.v(2))).unwrap().is_zero());

        assert!(matches!(build_family(0), Err(Error::InvalidK(0))));
        assert!(matches!(build_family(-3), Err(Error::InvalidK(-3))));
    }

    /// Oracle for τ on 𝔰𝔩₂: σ∘θ with θ(X) = −Xᵗ on 2×2 matrices.
    #[test]
    fn tau_on_sl2_matches_matrix_oracle() {
        // 2×2 matrices of X↓, H, X↑ as [[a, b], [c, d]]
        let mats: [[i64; 4]; 3] = [[0, 0, 1, 0], [1, 0, 0, -1], [0, 1, 0, 0]];
        let to_coords = |m: [i64; 4]| -> Vector {
            // m = c·X↓ + a·H + b·X↑ (traceless)
            Vector::from_ints(&[m[2], m[0], m[1]])
        };
        let tau = build_tau(1).unwrap();
        for (i, m) in mats.iter().enumerate() {
            // −conj(m)ᵗ with real entries
            let t = [-m[0], -m[2], -m[1], -m[3]];
            let expected = to_coords(t);
            let fam_vec = tau.apply(&Vector::unit(6, i)).unwrap();
            let got = Vector::new(fam_vec.entries()[..3].to_vec());
            assert_eq!(got, expected, "basis {i}");
        }
        // τ(X↑) = −X↓
        assert_eq!(tau.apply(&Vector::unit(6, X_UP)).unwrap(), Vector::from_ints(&[-1, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn tau_signs_on_module_match_recursion_oracle() {
        for k in 1..=5i64 {
            // ε₀ = 1, ε_{h+1} = −ε_h
            let mut eps = std::collections::BTreeMap::new();
            eps.insert(0i64, 1i64);
            for h in 0..k {
                let e = -eps[&h];
                eps.insert(h + 1, e);
            }
            for h in (-k..0).rev() {
                let e = -eps[&(h + 1)];
                eps.insert(h, e);
            }
            let fam = build_family(k).unwrap();
            for h in -k..=k {
                let img = fam.tau.apply(&fam.g.unit(fam.v(h))).unwrap();
                assert_eq!(img, fam.g.unit(fam.v(-h)).scale(&Gq::from_int(eps[&h])), "k={k} h={h}");
            }
        }
        let fam = build_family(2).unwrap();
        let t = |h| fam.tau.apply(&fam.g.unit(fam.v(h))).unwrap();
        assert_eq!(t(2), fam.g.unit(fam.v(-2)));
        assert_eq!(t(1), fam.g.unit(fam.v(-1)).scale(&Gq::from_int(-1)));
        assert_eq!(t(0), fam.g.unit(fam.v(0)));
    }

    #[test]
    fn isotropy_direction_is_fixed() {
        let fam = build_family(3).unwrap();
        let ih = fam.g.unit(H).scale(&Gq::i());
        assert_eq!(fam.tau.apply(&ih).unwrap(), ih);
    }

    #[test]
    fn pauli_relations() {
        let g = build_sl2();
        let [s1, s2, s3] = pauli_basis();
        assert_eq!(g.bracket(&s1, &s2).unwrap(), s3);
        assert_eq!(g.bracket(&s3, &s1).unwrap(), s2);
        assert_eq!(g.bracket(&s3, &s2).unwrap(), s1.scale(&Gq::from_int(-1)));
        let fam = build_family(1).unwrap();
        for s in [&s1, &s2, &s3] {
            let x = fam.embed_sl2(s);
            assert_eq!(fam.tau.apply(&x).unwrap(), x);
        }
    }

    #[test]
    fn tau_of_f_and_lattice_dimensions() {
        for k in 1..=5i64 {
            let fam = build_family(k).unwrap();
            let tf = fam.tau.image(&fam.f).unwrap();
            let mut idx = vec![H, X_DOWN];
            idx.extend((1..=k).map(|h| fam.v(-h)));
            assert_eq!(tf, Subspace::coordinate(fam.dim(), &idx).unwrap());
            assert_eq!(fam.f.sum(&tf).unwrap().dim(), 2 * k as usize + 3);
            assert_eq!(fam.f.intersection(&tf).unwrap(), Subspace::coordinate(fam.dim(), &[H]).unwrap());
        }
    }
}
