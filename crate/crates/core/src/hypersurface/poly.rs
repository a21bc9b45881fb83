use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::exactnum::GaussianRational;

type Gq = GaussianRational;

/// Variable layout on ℂ^{k+2} and its conjugate:
/// `t, w, w̄, z₀, …, zₖ, z̄₀, …, z̄ₖ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Variables {
    pub k: usize,
}

impl Variables {
    pub fn new(k: usize) -> Self {
        Self { k }
    }

    pub fn count(&self) -> usize {
        2 * self.k + 5
    }

    pub fn t(&self) -> usize {
        0
    }

    pub fn w(&self) -> usize {
        1
    }

    pub fn w_bar(&self) -> usize {
        2
    }

    pub fn z(&self, j: usize) -> usize {
        debug_assert!(j <= self.k);
        3 + j
    }

    pub fn z_bar(&self, j: usize) -> usize {
        debug_assert!(j <= self.k);
        4 + self.k + j
    }

    pub fn is_holomorphic(&self, var: usize) -> bool {
        var == self.w() || (self.z(0)..=self.z(self.k)).contains(&var)
    }

    /// Index of the conjugate variable; `t` is real.
    pub fn conj(&self, var: usize) -> usize {
        match var {
            0 => 0,
            1 => 2,
            2 => 1,
            v if v <= self.z(self.k) => v + self.k + 1,
            v => v - self.k - 1,
        }
    }

    pub fn name(&self, var: usize) -> String {
        match var {
            0 => "t".into(),
            1 => "w".into(),
            2 => "w̄".into(),
            v if v <= self.z(self.k) => format!("z{}", v - 3),
            v => format!("z̄{}", v - 4 - self.k),
        }
    }
}

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over ℚ(i) with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Gq>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Gq) -> Self {
        Self::term(nvars, Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(nvars, Monomial::var(nvars, i), Gq::one())
    }

    pub fn term(nvars: usize, m: Monomial, c: Gq) -> Self {
        assert_eq!(m.0.len(), nvars, "monomial arity");
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Gq)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn constant_term(&self) -> Gq {
        self.terms.get(&Monomial::one(self.nvars)).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, m: Monomial, c: Gq) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Gq) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::constant(self.nvars, Gq::one());
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn derivative(&self, var: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[var] -= 1;
            out.add_term(m2, c * &Gq::from_int(e as i64));
        }
        out
    }

    /// Replaces `var` by `p` everywhere.
    pub fn substitute(&self, var: usize, p: &Poly) -> Poly {
        let mut powers: Vec<Poly> = vec![Poly::constant(self.nvars, Gq::one())];
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            while powers.len() <= e {
                let next = &powers[powers.len() - 1] * p;
                powers.push(next);
            }
            let mut rest = m.clone();
            rest.0[var] = 0;
            for (m2, c2) in &powers[e].terms {
                out.add_term(rest.mul(m2), c * c2);
            }
        }
        out
    }

    /// Conjugation: conjugates coefficients and swaps each variable with its
    /// conjugate according to `vars`.
    pub fn bar(&self, vars: &Variables) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; self.nvars];
            for (i, x) in m.0.iter().enumerate() {
                e[vars.conj(i)] = *x;
            }
            out.add_term(Monomial(e), c.conj());
        }
        out
    }

    pub fn eval(&self, point: &[Gq]) -> Gq {
        assert_eq!(point.len(), self.nvars, "point arity");
        let mut acc = Gq::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, e) in point.iter().zip(&m.0) {
                if *e > 0 {
                    t *= &x.pow(*e);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Uses only variables accepted by `allowed`.
    pub fn uses_only(&self, allowed: impl Fn(usize) -> bool) -> bool {
        self.terms.keys().all(|m| m.0.iter().enumerate().all(|(i, e)| *e == 0 || allowed(i)))
    }

    pub fn display(&self, vars: &Variables) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<(bool, String)> = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mono: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, e)| **e > 0)
                    .map(|(i, e)| if *e == 1 { vars.name(i) } else { format!("{}^{}", vars.name(i), e) })
                    .collect();
            let mono = mono.join("·");
            let (neg, mag) = if (c.im().is_zero() && c.re().is_negative()) || (c.re().is_zero() && c.im().is_negative())
            {
                (true, -c)
            } else {
                (false, c.clone())
            };
            let coeff = if mag.is_real() || mag.real_part().is_zero() { mag.to_string() } else { format!("({mag})") };
            let s = match (mono.is_empty(), mag.is_one()) {
                (true, _) => coeff,
                (false, true) => mono,
                (false, false) => format!("{coeff}·{mono}"),
            };
            parts.push((neg, s));
        }
        let mut out = String::new();
        for (i, (neg, s)) in parts.into_iter().enumerate() {
            match (i, neg) {
                (0, true) => out.push_str(&format!("-{s}")),
                (0, false) => out.push_str(&s),
                (_, true) => out.push_str(&format!(" - {s}")),
                (_, false) => out.push_str(&format!(" + {s}")),
            }
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&Gq::from_int(-1))
    }
}
