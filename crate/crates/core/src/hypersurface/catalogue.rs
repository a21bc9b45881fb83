use super::field::HoloField;
use super::poly::{Poly, Variables};
use crate::exactnum::GaussianRational;
use crate::{Error, Result};

type Gq = GaussianRational;

/// The named holomorphic fields on the model hypersurface, in a fixed order.
///
/// Names: `Z1…Zk`, `Z'1…Z'k`, `W`, `A'1…A'k`, `A1,2…`, `A'1,2…` (the
/// abelian part, `(k+1)²` fields), then `E`, `J`, `K`, `Z-`, `Z'-`, `Z+`,
/// `Z'+` and `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalogue {
    k: usize,
    fields: Vec<(String, HoloField)>,
    abelian_len: usize,
}

impl Catalogue {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.fields.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fields.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.fields.iter().map(|(n, _)| n.as_str())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &HoloField)> {
        self.fields.iter().map(|(n, f)| (n.as_str(), f))
    }

    /// The `(k+1)²` fields of the abelian part.
    pub fn abelian(&self) -> impl Iterator<Item = (&str, &HoloField)> {
        self.iter().take(self.abelian_len)
    }

    pub fn get(&self, name: &str) -> Option<&HoloField> {
        self.fields.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }

    /// Like [`Catalogue::get`] for names known to exist.
    pub fn field(&self, name: &str) -> &HoloField {
        self.get(name).unwrap_or_else(|| panic!("no field named {name}"))
    }
}

struct Builder {
    k: usize,
    vars: Variables,
}

impl Builder {
    fn n(&self) -> usize {
        self.vars.count()
    }

    fn c(&self, x: Gq) -> Poly {
        Poly::constant(self.n(), x)
    }

    fn z(&self, j: usize) -> Poly {
        Poly::var(self.n(), self.vars.z(j))
    }

    fn w(&self) -> Poly {
        Poly::var(self.n(), self.vars.w())
    }

    fn z0_pow(&self, h: usize) -> Poly {
        self.z(0).pow(h as u32)
    }

    fn field(&self, parts: Vec<(usize, Poly)>) -> HoloField {
        HoloField::new(self.k, parts).expect("catalogue fields are holomorphic")
    }
}

// direction indices
const DW: usize = 0;
fn dz(j: usize) -> usize {
    1 + j
}

pub fn catalogue(k: i64) -> Result<Catalogue> {
    if k < 1 {
        return Err(Error::InvalidK(k));
    }
    let k = k as usize;
    let b = Builder { k, vars: Variables::new(k) };
    let i = Gq::i;
    let q = Gq::ratio;
    let ci = |x: i64| Gq::from_int(x);
    let mut fields: Vec<(String, HoloField)> = Vec::new();

    for h in 1..=k {
        fields.push((format!("Z{h}"), b.field(vec![(dz(h), b.c(q(1, 2))), (DW, b.z0_pow(h))])));
    }
    for h in 1..=k {
        fields.push((
            format!("Z'{h}"),
            b.field(vec![(dz(h), b.c(Gq::complex(0, 1, 1, 2))), (DW, b.z0_pow(h).scale(&-i()))]),
        ));
    }
    fields.push(("W".into(), b.field(vec![(DW, b.c(i()))])));
    for h in 1..=k {
        fields.push((format!("A'{h}"), b.field(vec![(dz(h), b.z0_pow(h).scale(&i()))])));
    }
    for h in 1..=k {
        for j in h + 1..=k {
            fields.push((
                format!("A{h},{j}"),
                b.field(vec![(dz(j), b.z0_pow(h).scale(&q(1, 2))), (dz(h), b.z0_pow(j).scale(&q(-1, 2)))]),
            ));
        }
    }
    for h in 1..=k {
        for j in h + 1..=k {
            let mi2 = Gq::complex(0, 1, -1, 2);
            fields.push((
                format!("A'{h},{j}"),
                b.field(vec![(dz(j), b.z0_pow(h).scale(&mi2)), (dz(h), b.z0_pow(j).scale(&mi2))]),
            ));
        }
    }
    let abelian_len = fields.len();
    let kk = k as i64;

    // 𝓔 = (k+1)w∂w + z₀∂z₀ + Σ(k+1−h)zₕ∂zₕ
    let mut e = vec![(DW, b.w().scale(&ci(kk + 1))), (dz(0), b.z(0))];
    // 𝓙 = −i(z₀∂z₀ + Σ h zₕ∂zₕ)
    let mut jf = vec![(dz(0), b.z(0).scale(&-i()))];
    // 𝓚 = −z₀∂z₀ + Σ h zₕ∂zₕ
    let mut kf = vec![(dz(0), b.z(0).scale(&ci(-1)))];
    for h in 1..=k {
        let hh = h as i64;
        e.push((dz(h), b.z(h).scale(&ci(kk + 1 - hh))));
        jf.push((dz(h), b.z(h).scale(&Gq::complex(0, 1, -hh, 1))));
        kf.push((dz(h), b.z(h).scale(&ci(hh))));
    }
    fields.push(("E".into(), b.field(e)));
    fields.push(("J".into(), b.field(jf)));
    fields.push(("K".into(), b.field(kf)));

    // Z₋ = k(∂z₀ + 2z₁∂w − Σ_{h<k} (h+1) z_{h+1} ∂zₕ), Z′₋ = i k(∂z₀ − 2z₁∂w + Σ …)
    let mut zm = vec![(dz(0), b.c(ci(kk))), (DW, b.z(1).scale(&ci(2 * kk)))];
    let mut zpm = vec![(dz(0), b.c(Gq::complex(0, 1, kk, 1))), (DW, b.z(1).scale(&Gq::complex(0, 1, -2 * kk, 1)))];
    for h in 1..k {
        let c = kk * (h as i64 + 1);
        zm.push((dz(h), b.z(h + 1).scale(&ci(-c))));
        zpm.push((dz(h), b.z(h + 1).scale(&Gq::complex(0, 1, c, 1))));
    }
    fields.push(("Z-".into(), b.field(zm)));
    fields.push(("Z'-".into(), b.field(zpm)));

    // Z₊ = (1/k)z₀²∂z₀ + z₀w∂w + (z₁z₀ − w/2)∂z₁ + Σ (z_{h+1}z₀ + (1 − h/k)zₕ)∂z_{h+1}
    let z0sq = b.z0_pow(2);
    let z0w = &b.z(0) * &b.w();
    let mut zp =
        vec![(dz(0), z0sq.scale(&q(1, kk))), (DW, z0w.clone()), (dz(1), &(&b.z(1) * &b.z(0)) - &b.w().scale(&q(1, 2)))];
    let mi = -i();
    let mut zpp = vec![
        (dz(0), z0sq.scale(&Gq::complex(0, 1, -1, kk))),
        (DW, z0w.scale(&mi)),
        (dz(1), &(&b.z(1) * &b.z(0)).scale(&mi) - &b.w().scale(&Gq::complex(0, 1, 1, 2))),
    ];
    for h in 1..k {
        let lin = q(kk - h as i64, kk);
        zp.push((dz(h + 1), &(&b.z(h + 1) * &b.z(0)) + &b.z(h).scale(&lin)));
        zpp.push((dz(h + 1), &(&b.z(h + 1) * &b.z(0)).scale(&mi) + &b.z(h).scale(&(&lin * &i()))));
    }
    fields.push(("Z+".into(), b.field(zp)));
    fields.push(("Z'+".into(), b.field(zpp)));

    // 𝓗 = 2(kw∂w + z₀∂z₀ + Σ(k−h)zₕ∂zₕ)
    let mut hf = vec![(DW, b.w().scale(&ci(2 * kk))), (dz(0), b.z(0).scale(&ci(2)))];
    for h in 1..=k {
        hf.push((dz(h), b.z(h).scale(&ci(2 * (kk - h as i64)))));
    }
    fields.push(("H".into(), b.field(hf)));

    Ok(Catalogue { k, fields, abelian_len })
}
