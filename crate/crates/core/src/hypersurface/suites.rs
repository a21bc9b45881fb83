use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::catalogue::{catalogue, Catalogue};
use super::field::{field_bracket, real_bracket, real_tangency, tangency, HoloField, RealField};
use super::poly::Monomial;
use crate::exactnum::{format_combination, GaussianRational, Matrix, Vector};
use crate::su2family::{build_family, H};
use crate::{Error, Result};

type Gq = GaussianRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Abelian,
    Cpx,
    Ascdes,
    Sl2,
    Su2,
    Irrep,
    Iso,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Abelian, Suite::Cpx, Suite::Ascdes, Suite::Sl2, Suite::Su2, Suite::Irrep, Suite::Iso];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Abelian => "abelian",
            Suite::Cpx => "cpx",
            Suite::Ascdes => "ascdes",
            Suite::Sl2 => "sl2",
            Suite::Su2 => "su2",
            Suite::Irrep => "irrep",
            Suite::Iso => "iso",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown suite '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub k: usize,
    pub checks: Vec<CheckResult>,
    /// Observations that are recorded but do not affect `passed`.
    pub notes: Vec<String>,
    /// Number of basis pairs whose brackets were compared (iso only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bracket_pairs: Option<usize>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

struct Ctx {
    k: usize,
    cat: Catalogue,
    report: SuiteReport,
}

impl Ctx {
    fn new(suite: Suite, k: i64) -> Result<Self> {
        let cat = catalogue(k)?;
        let k = cat.k();
        Ok(Self {
            k,
            cat,
            report: SuiteReport { suite, k, checks: Vec::new(), notes: Vec::new(), bracket_pairs: None },
        })
    }

    fn f(&self, name: &str) -> &HoloField {
        self.cat.field(name)
    }

    fn br(&self, a: &HoloField, b: &HoloField) -> HoloField {
        field_bracket(a, b).expect("same k")
    }

    fn brn(&self, a: &str, b: &str) -> HoloField {
        self.br(self.f(a), self.f(b))
    }

    fn scaled(&self, c: i64, name: &str) -> HoloField {
        self.f(name).scale(&Gq::from_int(c))
    }

    fn zero(&self) -> HoloField {
        HoloField::zero(self.k)
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: Option<String>) {
        self.report.checks.push(CheckResult { name: name.into(), passed, detail });
    }

    fn identity(&mut self, name: impl Into<String>, got: &HoloField, expected: &HoloField) {
        let passed = got == expected;
        let detail = (!passed).then(|| format!("expected {expected}, got {got}"));
        self.push(name, passed, detail);
    }

    fn tangent(&mut self, name: &str, field: &HoloField) -> Result<()> {
        let ok = tangency(field, self.k)?;
        self.push(format!("tangent {name}"), ok, None);
        Ok(())
    }

    fn finish(self) -> SuiteReport {
        self.report
    }
}

fn abelian_names(cat: &Catalogue) -> Vec<String> {
    cat.abelian().map(|(n, _)| n.to_string()).collect()
}

/// Rank over ℝ of the coefficient tuples, split into real and imaginary parts.
fn real_rank(fields: &[&HoloField]) -> usize {
    let mut keys: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
    for f in fields {
        for (d, p) in f.coeffs().iter().enumerate() {
            for (m, _) in p.terms() {
                let next = keys.len();
                keys.entry((d, m.clone())).or_insert(next);
            }
        }
    }
    let rows = 2 * keys.len();
    let cols: Vec<Vector> = fields
        .iter()
        .map(|f| {
            let mut v = Vector::zeros(keys.len());
            for (d, p) in f.coeffs().iter().enumerate() {
                for (m, c) in p.terms() {
                    v[keys[&(d, m.clone())]] = c.clone();
                }
            }
            v.realify()
        })
        .collect();
    if rows == 0 {
        return 0;
    }
    Matrix::from_columns(rows, &cols).map(|m| m.rank()).unwrap_or(0)
}

/// The `(k+1)²` abelian fields: tangency, vanishing brackets, independence.
pub fn verify_abelian(k: i64) -> Result<SuiteReport> {
    let mut cx = Ctx::new(Suite::Abelian, k)?;
    let names = abelian_names(&cx.cat);
    for n in &names {
        let f = cx.f(n).clone();
        cx.tangent(n, &f)?;
    }
    let mut bad = Vec::new();
    let mut pairs = 0;
    for (i, a) in names.iter().enumerate() {
        for b in &names[i + 1..] {
            pairs += 1;
            if !cx.brn(a, b).is_zero() {
                bad.push(format!("[{a}, {b}]"));
            }
        }
    }
    cx.push(format!("all {pairs} pairwise brackets vanish"), bad.is_empty(), (!bad.is_empty()).then(|| bad.join(", ")));
    let fields: Vec<&HoloField> = names.iter().map(|n| cx.f(n)).collect();
    let rank = real_rank(&fields);
    let expected = (cx.k + 1) * (cx.k + 1);
    cx.push(
        format!("{expected} fields linearly independent over R"),
        rank == expected,
        (rank != expected).then(|| format!("rank {rank}")),
    );
    Ok(cx.finish())
}

/// The fields `𝓔, 𝓙, 𝓚` and their action on the abelian part.
pub fn verify_cpx(k: i64) -> Result<SuiteReport> {
    let mut cx = Ctx::new(Suite::Cpx, k)?;
    let ku = cx.k;
    for n in ["E", "J", "K"] {
        let f = cx.f(n).clone();
        cx.tangent(n, &f)?;
    }
    let zero = cx.zero();
    for (a, b) in [("J", "E"), ("K", "E"), ("J", "K")] {
        let got = cx.brn(a, b);
        cx.identity(format!("[{a}, {b}] = 0"), &got, &zero);
    }
    for h in 1..=ku {
        let hi = h as i64;
        let got = cx.brn("J", &format!("Z{h}"));
        let exp = cx.scaled(hi, &format!("Z'{h}"));
        cx.identity(format!("[J, Z{h}] = {h}·Z'{h}"), &got, &exp);
        let got = cx.brn("J", &format!("Z'{h}"));
        let exp = cx.scaled(-hi, &format!("Z{h}"));
        cx.identity(format!("[J, Z'{h}] = -{h}·Z{h}"), &got, &exp);
    }
    let got = cx.brn("J", "W");
    cx.identity("[J, W] = 0", &got, &zero);
    for h in 1..=ku {
        for j in h + 1..=ku {
            let d = h as i64 - j as i64;
            let got = cx.brn("J", &format!("A{h},{j}"));
            let exp = cx.scaled(d, &format!("A'{h},{j}"));
            cx.identity(format!("[J, A{h},{j}] = {d}·A'{h},{j}"), &got, &exp);
            let got = cx.brn("J", &format!("A'{h},{j}"));
            let exp = cx.scaled(-d, &format!("A{h},{j}"));
            cx.identity(format!("[J, A'{h},{j}] = {}·A{h},{j}", -d), &got, &exp);
        }
    }
    for h in 1..=ku {
        let got = cx.brn("J", &format!("A'{h}"));
        cx.identity(format!("[J, A'{h}] = 0"), &got, &zero);
    }
    let ke = cx.f("K").add(cx.f("E"))?;
    let m = -(ku as i64 + 1);
    for n in abelian_names(&cx.cat) {
        let got = cx.br(&ke, cx.f(&n));
        let exp = cx.scaled(m, &n);
        cx.identity(format!("[K + E, {n}] = {m}·{n}"), &got, &exp);
    }
    Ok(cx.finish())
}

/// The ascending and descending fields `Z±`, `Z′±`.
pub fn verify_ascdes(k: i64) -> Result<SuiteReport> {
    let mut cx = Ctx::new(Suite::Ascdes, k)?;
    for n in ["Z-", "Z'-", "Z+", "Z'+"] {
        let f = cx.f(n).clone();
        cx.tangent(n, &f)?;
    }
    let zero = cx.zero();
    for (a, b) in [("Z-", "Z'-"), ("Z+", "Z'+")] {
        let got = cx.brn(a, b);
        cx.identity(format!("[{a}, {b}] = 0"), &got, &zero);
    }
    for (a, b) in [("Z-", "Z'-"), ("Z+", "Z'+")] {
        let got = cx.brn("J", a);
        let exp = cx.f(b).clone();
        cx.identity(format!("[J, {a}] = {b}"), &got, &exp);
        let got = cx.brn("J", b);
        let exp = cx.scaled(-1, a);
        cx.identity(format!("[J, {b}] = -{a}"), &got, &exp);
    }
    let half_j = cx.f("J").scale(&Gq::ratio(1, 2));
    let got = cx.brn("Z+", "Z'-");
    cx.identity("[Z+, Z'-] = 1/2·J", &got, &half_j);
    let got = cx.brn("Z'+", "Z-");
    let exp = half_j.scale(&Gq::from_int(-1));
    cx.identity("[Z'+, Z-] = -1/2·J", &got, &exp);
    let ke = cx.f("K").add(cx.f("E"))?;
    for n in ["Z+", "Z-", "Z'+", "Z'-"] {
        let got = cx.br(&ke, cx.f(n));
        cx.identity(format!("[K + E, {n}] = 0"), &got, &zero);
    }
    Ok(cx.finish())
}

/// `𝓗 = [Z₊, −Z₋]`, the 𝔰𝔩₂ relations and the grading of the abelian part.
pub fn verify_sl2(k: i64) -> Result<SuiteReport> {
    let mut cx = Ctx::new(Suite::Sl2, k)?;
    let ku = cx.k as i64;
    let h = cx.f("H").clone();
    let zp = cx.f("Z+").clone();
    let mzm = cx.scaled(-1, "Z-");
    let got = cx.br(&zp, &mzm);
    cx.identity("H = [Z+, -Z-]", &got, &h);
    let got = cx.br(cx.f("Z'+"), &cx.scaled(-1, "Z'-"));
    cx.identity("H = [Z'+, -Z'-]", &got, &h);
    let got = cx.br(&h, &zp);
    cx.identity("[H, Z+] = 2·Z+", &got, &zp.scale(&Gq::from_int(2)));
    let got = cx.br(&h, &mzm);
    cx.identity("[H, -Z-] = -2·(-Z-)", &got, &mzm.scale(&Gq::from_int(-2)));
    let tangent_h = h.clone();
    cx.tangent("H", &tangent_h)?;
    for j in 1..=ku {
        let g = -2 * (ku - j);
        for n in [format!("Z{j}"), format!("Z'{j}")] {
            let got = cx.br(&h, cx.f(&n));
            let exp = cx.scaled(g, &n);
            cx.identity(format!("[H, {n}] = {g}·{n}"), &got, &exp);
        }
    }
    let got = cx.brn("H", "W");
    let exp = cx.scaled(-2 * ku, "W");
    cx.identity(format!("[H, W] = {}·W", -2 * ku), &got, &exp);
    for a in 1..=ku {
        for b in a + 1..=ku {
            let g = 2 * (a + b - ku);
            for n in [format!("A{a},{b}"), format!("A'{a},{b}")] {
                let got = cx.br(&h, cx.f(&n));
                let exp = cx.scaled(g, &n);
                cx.identity(format!("[H, {n}] = {g}·{n}"), &got, &exp);
            }
        }
    }
    for a in 1..=ku {
        let g = 2 * (2 * a - ku);
        let n = format!("A'{a}");
        let got = cx.br(&h, cx.f(&n));
        let exp = cx.scaled(g, &n);
        cx.identity(format!("[H, {n}] = {g}·{n}"), &got, &exp);
    }
    Ok(cx.finish())
}

/// The 𝔰𝔲(2) copy `Σ̃₁ = ½(𝔢Z₊ − 𝔢(−Z₋))`, `Σ̃₂ = (i/2)(𝔢Z₊ + 𝔢(−Z₋))`,
/// `Σ̃₃ = [Σ̃₁, Σ̃₂]` with `𝔢Z = Z + Z̄` and complex-linear scalars.
pub fn verify_su2(k: i64) -> Result<SuiteReport> {
    let mut cx = Ctx::new(Suite::Su2, k)?;
    let ep = cx.f("Z+").real_part();
    let em = cx.scaled(-1, "Z-").real_part();
    let s1 = ep.sub(&em)?.scale(&Gq::ratio(1, 2));
    let s2 = ep.add(&em)?.scale(&Gq::complex(0, 1, 1, 2));
    let s3 = real_bracket(&s1, &s2)?;
    let rb = |a: &RealField, b: &RealField| real_bracket(a, b).expect("same k");
    let mut rel = |name: &str, got: RealField, exp: &RealField| {
        let passed = &got == exp;
        let detail = (!passed).then(|| format!("expected {exp}, got {got}"));
        cx.push(name, passed, detail);
    };
    rel("[S1, S2] = S3", rb(&s1, &s2), &s3);
    rel("[S3, S1] = S2", rb(&s3, &s1), &s2);
    rel("[S3, S2] = -S1", rb(&s3, &s2), &s1.scale(&Gq::from_int(-1)));
    let zero = s1.sub(&s1)?;
    rel("[S1, S1] = 0", rb(&s1, &s1), &zero);
    for (n, s) in [("S1", &s1), ("S2", &s2), ("S3", &s3)] {
        let ok = real_tangency(s)?;
        cx.push(format!("tangent {n}"), ok, None);
    }
    let printed = cx.f("H").real_part().scale(&Gq::complex(0, 1, 1, 2));
    cx.report.notes.push(format!(
        "S3 {} (i/2)·Re(H) with Re(Z) = Z + conj(Z)",
        if s3 == printed { "equals" } else { "differs from" }
    ));
    for (n, s) in [("S1", &s1), ("S2", &s2), ("S3", &s3)] {
        cx.report.notes.push(format!(
            "{n} {}",
            if s.is_real() {
                "is a real field"
            } else if s.scale(&-Gq::i()).is_real() {
                "is i times a real field"
            } else {
                "is not real"
            }
        ));
    }
    Ok(cx.finish())
}

/// The `ad(Z₊)`-orbit of `W`.
pub fn verify_irrep(k: i64) -> Result<SuiteReport> {
    let mut cx = Ctx::new(Suite::Irrep, k)?;
    let ku = cx.k;
    let u = ad_orbit(&cx.cat);
    for (j, uj) in u.iter().enumerate().take(2 * ku + 1) {
        cx.push(format!("u{j} = ad(Z+)^{j} W is nonzero"), !uj.is_zero(), None);
    }
    let last = 2 * ku + 1;
    cx.push(format!("u{last} = 0"), u[last].is_zero(), (!u[last].is_zero()).then(|| u[last].to_string()));
    let h = cx.f("H").clone();
    for (j, uj) in u.iter().enumerate().take(2 * ku + 1) {
        let ev = 2 * (j as i64 - ku as i64);
        let got = cx.br(&h, uj);
        cx.identity(format!("[H, u{j}] = {ev}·u{j}"), &got, &uj.scale(&Gq::from_int(ev)));
    }
    let mut bad = Vec::new();
    for i in 0..=2 * ku {
        for j in i + 1..=2 * ku {
            if !cx.br(&u[i], &u[j]).is_zero() {
                bad.push(format!("[u{i}, u{j}]"));
            }
        }
    }
    cx.push("the orbit spans an abelian subalgebra", bad.is_empty(), (!bad.is_empty()).then(|| bad.join(", ")));
    let zero = cx.zero();
    let top = format!("A'{ku}");
    for (a, b) in [("Z-", "W"), ("Z'-", "W"), ("Z+", top.as_str()), ("Z'+", top.as_str())] {
        let got = cx.brn(a, b);
        cx.identity(format!("[{a}, {b}] = 0"), &got, &zero);
    }
    Ok(cx.finish())
}

/// `uⱼ = ad(Z₊)ʲ W` for `j = 0, …, 2k+1`.
fn ad_orbit(cat: &Catalogue) -> Vec<HoloField> {
    let zp = cat.field("Z+");
    let mut u = vec![cat.field("W").clone()];
    for _ in 0..2 * cat.k() + 1 {
        let next = field_bracket(zp, u.last().expect("nonempty")).expect("same k");
        u.push(next);
    }
    u
}

/// The images `φ(eᵢ)` of the family basis `(X↓, H, X↑, v₋ₖ, …, vₖ)`.
pub fn iso_images(k: i64) -> Result<Vec<HoloField>> {
    let cat = catalogue(k)?;
    let ku = cat.k() as i64;
    let mut out = vec![cat.field("Z-").scale(&Gq::from_int(-1)), cat.field("H").clone(), cat.field("Z+").clone()];
    let mut v = cat.field("W").clone();
    out.push(v.clone());
    for h in -ku..ku {
        v = field_bracket(cat.field("Z+"), &v)?.scale(&Gq::ratio(1, ku - h));
        out.push(v.clone());
    }
    Ok(out)
}

fn phi(images: &[HoloField], x: &Vector, k: usize) -> HoloField {
    let mut out = HoloField::zero(k);
    for (c, f) in x.iter().zip(images) {
        if !c.is_zero() {
            out = out.add(&f.scale(c)).expect("same k");
        }
    }
    out
}

/// Bracket preservation of `φ` on all basis pairs, tangency of `φ` on a real
/// basis of `𝔤^τ`, and `φ(iH)(0) = 0`.
pub fn iso_certificate(k: i64) -> Result<SuiteReport> {
    let mut cx = Ctx::new(Suite::Iso, k)?;
    let fam = build_family(k)?;
    let ku = cx.k;
    let images = iso_images(k)?;
    let labels = fam.g.labels().to_vec();
    let n = fam.dim();
    let mut pairs = 0;
    for i in 0..n {
        for j in i + 1..n {
            pairs += 1;
            let lhs = phi(&images, &fam.g.structure(i, j), ku);
            let rhs = cx.br(&images[i], &images[j]);
            cx.identity(
                format!("phi([{}, {}]) = [phi({}), phi({})]", labels[i], labels[j], labels[i], labels[j]),
                &rhs,
                &lhs,
            );
        }
    }
    cx.report.bracket_pairs = Some(pairs);
    for x in fam.tau.fixed_real_basis() {
        let name = format!("Re(phi({}))", format_combination(&x, &labels));
        let f = phi(&images, &x, ku);
        cx.tangent(&name, &f)?;
    }
    let mut split_ok = true;
    for f in &images {
        split_ok &= tangency(f, ku)?;
    }
    cx.report.notes.push(format!(
        "phi {} every basis element (X↓, H, X↑, v-k, …, vk) to a tangent field",
        if split_ok { "sends" } else { "does not send" }
    ));
    let ih = fam.g.unit(H).scale(&Gq::i());
    let at0 = phi(&images, &ih, ku).value_at_origin();
    cx.push("phi(iH) vanishes at the origin", at0.iter().all(Gq::is_zero), None);
    Ok(cx.finish())
}

pub fn run_suite(suite: Suite, k: i64) -> Result<SuiteReport> {
    match suite {
        Suite::Abelian => verify_abelian(k),
        Suite::Cpx => verify_cpx(k),
        Suite::Ascdes => verify_ascdes(k),
        Suite::Sl2 => verify_sl2(k),
        Suite::Su2 => verify_su2(k),
        Suite::Irrep => verify_irrep(k),
        Suite::Iso => iso_certificate(k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn failing(r: &SuiteReport) -> Vec<String> {
        r.failures().map(|c| c.name.clone()).collect()
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
        assert_eq!(serde_json::to_string(&Suite::Sl2).unwrap(), "\"sl2\"");
    }

    #[test]
    fn abelian_suite() {
        let r = verify_abelian(1).unwrap();
        assert!(r.passed(), "{:?}", failing(&r));
        assert_eq!(r.checks.iter().filter(|c| c.name.starts_with("tangent")).count(), 4);
        assert!(verify_abelian(3).unwrap().passed());
    }

    #[test]
    fn real_rank_detects_dependence() {
        let cat = catalogue(1).unwrap();
        let w = cat.field("W");
        let iw = w.scale(&Gq::i());
        // W and iW are independent over R, W and 2W are not
        assert_eq!(real_rank(&[w, &iw]), 2);
        assert_eq!(real_rank(&[w, &w.scale(&Gq::from_int(2))]), 1);
    }

    #[test]
    fn cpx_and_sl2_and_irrep_pass() {
        for k in 1..=3 {
            for r in [verify_cpx(k).unwrap(), verify_sl2(k).unwrap(), verify_irrep(k).unwrap()] {
                assert!(r.passed(), "k={k} {}: {:?}", r.suite, failing(&r));
            }
        }
    }

    #[test]
    fn cpx_spot_values() {
        let cat = catalogue(2).unwrap();
        let got = field_bracket(cat.field("J"), cat.field("Z2")).unwrap();
        assert_eq!(got, cat.field("Z'2").scale(&Gq::from_int(2)));
        let ke = cat.field("K").add(cat.field("E")).unwrap();
        assert_eq!(field_bracket(&ke, cat.field("W")).unwrap(), cat.field("W").scale(&Gq::from_int(-3)));
    }

    #[test]
    fn ascdes_reports_the_half_j_identities() {
        for k in 1..=3 {
            let r = verify_ascdes(k).unwrap();
            assert_eq!(failing(&r), vec!["[Z+, Z'-] = 1/2·J", "[Z'+, Z-] = -1/2·J"]);
            // the observed value is 2J
            let cat = catalogue(k).unwrap();
            let got = field_bracket(cat.field("Z+"), cat.field("Z'-")).unwrap();
            assert_eq!(got, cat.field("J").scale(&Gq::from_int(2)));
        }
    }

    #[test]
    fn su2_relations_hold() {
        for k in 1..=3 {
            let r = verify_su2(k).unwrap();
            assert!(r.passed(), "k={k}: {:?}", failing(&r));
            assert!(r.notes[0].contains("equals"));
        }
    }

    #[test]
    fn sl2_spot_values() {
        let cat = catalogue(1).unwrap();
        let h = cat.field("H");
        assert_eq!(h.to_string(), "(2·w)·∂w + (2·z0)·∂z0");
        assert_eq!(field_bracket(h, cat.field("W")).unwrap(), cat.field("W").scale(&Gq::from_int(-2)));
        let cat3 = catalogue(3).unwrap();
        let a2 = cat3.field("A'2");
        assert_eq!(field_bracket(cat3.field("H"), a2).unwrap(), a2.scale(&Gq::from_int(2)));
    }

    #[test]
    fn iso_brackets_are_preserved() {
        for k in 1..=3 {
            let r = iso_certificate(k).unwrap();
            let n = 2 * k as usize + 4;
            assert_eq!(r.bracket_pairs, Some(n * (n - 1) / 2));
            let bracket_failures: Vec<_> = r.failures().filter(|c| c.name.starts_with("phi([")).collect();
            assert!(bracket_failures.is_empty(), "k={k}: {bracket_failures:?}");
            assert!(r.checks.iter().any(|c| c.name == "phi(iH) vanishes at the origin" && c.passed));
            assert!(r.notes[0].contains("sends every basis element"));
            // exactly the i-multiples in the real basis fail tangency
            let tangent_failures: Vec<_> = r.failures().map(|c| c.name.as_str()).collect();
            assert_eq!(tangent_failures.len(), k as usize + 2, "{tangent_failures:?}");
            assert!(tangent_failures.iter().all(|n| n.starts_with("tangent Re(phi(i·")));
        }
        assert_eq!(iso_certificate(1).unwrap().bracket_pairs, Some(15));
    }

    #[test]
    fn orbit_of_w() {
        let cat = catalogue(1).unwrap();
        let u = ad_orbit(&cat);
        assert_eq!(u.len(), 4);
        assert_eq!(u[0], *cat.field("W"));
        assert!(u[3].is_zero());
    }
}
