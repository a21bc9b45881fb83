use std::fmt;

use super::poly::{Poly, Variables};
use crate::exactnum::GaussianRational;
use crate::{Error, Result};

type Gq = GaussianRational;

/// Largest coefficient degree accepted by the verification suites.
pub const MAX_DEGREE: u32 = 8;

/// `b ∂/∂w + Σ aⱼ ∂/∂zⱼ` with holomorphic polynomial coefficients.
/// Direction 0 is `∂w`, direction `1 + j` is `∂zⱼ`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HoloField {
    k: usize,
    coeffs: Vec<Poly>,
}

/// A field in all directions `∂w, ∂w̄, ∂z₀…∂zₖ, ∂z̄₀…∂z̄ₖ`; direction `d`
/// differentiates variable `d + 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RealField {
    k: usize,
    coeffs: Vec<Poly>,
}

fn check_k(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::KMismatch(a, b))
    }
}

impl HoloField {
    pub fn zero(k: usize) -> Self {
        let n = Variables::new(k).count();
        Self { k, coeffs: vec![Poly::zero(n); k + 2] }
    }

    /// From `(direction, coefficient)` pairs; errors on non-holomorphic input.
    pub fn new(k: usize, parts: impl IntoIterator<Item = (usize, Poly)>) -> Result<Self> {
        let vars = Variables::new(k);
        let mut f = Self::zero(k);
        for (d, p) in parts {
            if d >= k + 2 {
                return Err(Error::IndexOutOfRange { index: d, dim: k + 2 });
            }
            if p.nvars() != vars.count() {
                return Err(Error::DimensionMismatch { expected: vars.count(), found: p.nvars() });
            }
            if !p.uses_only(|v| vars.is_holomorphic(v)) {
                return Err(Error::InvalidStructure("holomorphic field with barred variable or t".into()));
            }
            f.coeffs[d] = &f.coeffs[d] + &p;
        }
        Ok(f)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vars(&self) -> Variables {
        Variables::new(self.k)
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// Variable differentiated by direction `d`.
    pub fn direction_var(&self, d: usize) -> usize {
        let v = self.vars();
        if d == 0 {
            v.w()
        } else {
            v.z(d - 1)
        }
    }

    pub fn direction_name(&self, d: usize) -> String {
        format!("∂{}", self.vars().name(self.direction_var(d)))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.iter().filter_map(Poly::degree).max()
    }

    /// `Z(p) = Σ coeff_d · ∂p/∂var(d)`.
    pub fn apply(&self, p: &Poly) -> Poly {
        let mut out = Poly::zero(p.nvars());
        for (d, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &(c * &p.derivative(self.direction_var(d)));
            }
        }
        out
    }

    pub fn scale(&self, c: &Gq) -> Self {
        Self { k: self.k, coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_k(self.k, other.k)?;
        Ok(Self { k: self.k, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&Gq::from_int(-1)))
    }

    /// `Σ cᵢ Fᵢ`.
    pub fn combination(k: usize, terms: &[(Gq, &HoloField)]) -> Result<Self> {
        let mut out = Self::zero(k);
        for (c, f) in terms {
            out = out.add(&f.scale(c))?;
        }
        Ok(out)
    }

    /// Values of the coefficients at the origin.
    pub fn value_at_origin(&self) -> Vec<Gq> {
        self.coeffs.iter().map(Poly::constant_term).collect()
    }

    /// `𝔢(Z) = Z + Z̄`.
    pub fn real_part(&self) -> RealField {
        let vars = self.vars();
        let n = vars.count();
        let mut coeffs = vec![Poly::zero(n); 2 * self.k + 4];
        for (d, c) in self.coeffs.iter().enumerate() {
            let var = self.direction_var(d);
            coeffs[var - 1] = c.clone();
            coeffs[vars.conj(var) - 1] = c.bar(&vars);
        }
        RealField { k: self.k, coeffs }
    }
}

impl fmt::Display for HoloField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = self.vars();
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| format!("({})·{}", c.display(&vars), self.direction_name(d)))
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// `[a, b]ⱼ = a(bⱼ) − b(aⱼ)`.
pub fn field_bracket(a: &HoloField, b: &HoloField) -> Result<HoloField> {
    check_k(a.k, b.k)?;
    let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(ac, bc)| &a.apply(bc) - &b.apply(ac)).collect();
    Ok(HoloField { k: a.k, coeffs })
}

impl RealField {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn vars(&self) -> Variables {
        Variables::new(self.k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.iter().filter_map(Poly::degree).max()
    }

    pub fn apply(&self, p: &Poly) -> Poly {
        let mut out = Poly::zero(p.nvars());
        for (d, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &(c * &p.derivative(d + 1));
            }
        }
        out
    }

    /// Complex-linear scaling of every coefficient.
    pub fn scale(&self, c: &Gq) -> Self {
        Self { k: self.k, coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_k(self.k, other.k)?;
        Ok(Self { k: self.k, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&Gq::from_int(-1)))
    }

    /// The coefficient of each barred direction is the conjugate of the
    /// unbarred one.
    pub fn is_real(&self) -> bool {
        let vars = self.vars();
        (0..self.coeffs.len()).all(|d| self.coeffs[vars.conj(d + 1) - 1] == self.coeffs[d].bar(&vars))
    }

    pub fn display(&self) -> String {
        let vars = self.vars();
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| format!("({})·∂{}", c.display(&vars), vars.name(d + 1)))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for RealField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

pub fn real_bracket(a: &RealField, b: &RealField) -> Result<RealField> {
    check_k(a.k, b.k)?;
    let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(ac, bc)| &a.apply(bc) - &b.apply(ac)).collect();
    Ok(RealField { k: a.k, coeffs })
}

/// `ρ = (w + w̄)/2 − Σ_{h=1}^{k} (z₀ʰ z̄ₕ + z̄₀ʰ zₕ)`.
pub fn defining_function(k: i64) -> Result<Poly> {
    if k < 1 {
        return Err(Error::InvalidK(k));
    }
    let vars = Variables::new(k as usize);
    let n = vars.count();
    let half = Gq::ratio(1, 2);
    let mut rho = &Poly::var(n, vars.w()).scale(&half) + &Poly::var(n, vars.w_bar()).scale(&half);
    rho = &rho - &levi_sum(&vars);
    Ok(rho)
}

/// `s = Σ (z₀ʰ z̄ₕ + z̄₀ʰ zₕ)`, the value of `Re w` on the hypersurface.
fn levi_sum(vars: &Variables) -> Poly {
    let n = vars.count();
    let mut s = Poly::zero(n);
    for h in 1..=vars.k {
        let a = &Poly::var(n, vars.z(0)).pow(h as u32) * &Poly::var(n, vars.z_bar(h));
        let b = &Poly::var(n, vars.z_bar(0)).pow(h as u32) * &Poly::var(n, vars.z(h));
        s = &(&s + &a) + &b;
    }
    s
}

/// Substitutes `w = s + it`, `w̄ = s − it`.
fn restrict_to_hypersurface(g: &Poly, vars: &Variables) -> Poly {
    let n = vars.count();
    let s = levi_sum(vars);
    let it = Poly::var(n, vars.t()).scale(&Gq::i());
    g.substitute(vars.w(), &(&s + &it)).substitute(vars.w_bar(), &(&s - &it))
}

fn guard(k_field: usize, k: usize, degree: Option<u32>) -> Result<()> {
    check_k(k_field, k)?;
    match degree {
        Some(d) if d > MAX_DEGREE => {
            Err(Error::Precondition(format!("field degree {d} exceeds the bound {MAX_DEGREE}")))
        }
        _ => Ok(()),
    }
}

/// `Z(ρ) + conj(Z(ρ))` before restriction, as a polynomial in all variables.
pub fn tangency_form(z: &HoloField) -> Result<Poly> {
    let vars = z.vars();
    let p = z.apply(&defining_function(z.k as i64)?);
    Ok(&p + &p.bar(&vars))
}

/// `Z(ρ) + conj(Z(ρ))` restricted to the hypersurface; zero iff `𝔢(Z)` is
/// tangent.
pub fn tangency_residual(z: &HoloField) -> Result<Poly> {
    guard(z.k, z.k, z.degree())?;
    Ok(restrict_to_hypersurface(&tangency_form(z)?, &z.vars()))
}

pub fn tangency(z: &HoloField, k: usize) -> Result<bool> {
    guard(z.k, k, z.degree())?;
    Ok(tangency_residual(z)?.is_zero())
}

/// `X(ρ)` restricted to the hypersurface vanishes.
pub fn real_tangency(x: &RealField) -> Result<bool> {
    guard(x.k, x.k, x.degree())?;
    let p = x.apply(&defining_function(x.k as i64)?);
    Ok(restrict_to_hypersurface(&p, &x.vars()).is_zero())
}
