use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Element `re + im·i` of the Gaussian rationals ℚ(i).
///
/// Both parts are arbitrary precision rationals kept in lowest terms with a
/// positive denominator, so `==` is structural equality of canonical forms.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// `p/q` as a real Gaussian rational. Panics when `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Self {
        Self::new(BigRational::new(p.into(), q.into()), BigRational::zero())
    }

    /// `(a/b) + (c/d)·i`. Panics when a denominator is zero.
    pub fn complex(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(BigRational::new(a.into(), b.into()), BigRational::new(c.into(), d.into()))
    }

    pub fn from_real(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn real_part(&self) -> Self {
        Self::from_real(self.re.clone())
    }

    pub fn imag_part(&self) -> Self {
        Self::from_real(self.im.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// `|a|²`, always a nonnegative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Self::new(&self.re / &n, -&self.im / &n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn mul_i(&self) -> Self {
        Self::new(-&self.im, self.re.clone())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re * &rhs.re - &self.im * &rhs.im, &self.re * &rhs.im + &self.im * &rhs.re)
    }
}

/// Panics on division by zero; use [`GaussianRational::checked_div`] where
/// the divisor may vanish.
impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self.checked_div(rhs).expect("division by zero in Q(i)")
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for GaussianRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

/// Wire form of a rational: always `"p/q"` with `q > 0` and `gcd(|p|, q) = 1`.
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`; the result is canonicalized.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
    let q: BigInt = q.parse().map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
    if q.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(p, q))
}

fn fmt_real(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Human-readable form: `3/2`, `-i`, `1/2 - 1/4i`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re = &self.re;
        let im = &self.im;
        let im_str = |x: &BigRational| -> String {
            if x.is_one() {
                "i".to_string()
            } else {
                format!("{}i", fmt_real(x))
            }
        };
        match (re.is_zero(), im.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", fmt_real(re)),
            (true, false) => {
                if im.is_negative() {
                    write!(f, "-{}", im_str(&-im))
                } else {
                    write!(f, "{}", im_str(im))
                }
            }
            (false, false) => {
                if im.is_negative() {
                    write!(f, "{} - {}", fmt_real(re), im_str(&-im))
                } else {
                    write!(f, "{} + {}", fmt_real(re), im_str(im))
                }
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Accepts `"a"`, `"a/b"`, `"a + bi"`, `"a - b/ci"`, `"i"`, `"-2i"`.
impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        if !compact.ends_with('i') {
            return Ok(Self::from_real(parse_rational(&compact)?));
        }
        let body = &compact[..compact.len() - 1];
        // split at the last sign that is not the leading one
        let split = body.char_indices().skip(1).filter(|(_, c)| *c == '+' || *c == '-').map(|(i, _)| i).last();
        let (re_str, im_str) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("", body),
        };
        let im = match im_str {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other.trim_start_matches('+'))?,
        };
        let re = if re_str.is_empty() { BigRational::zero() } else { parse_rational(re_str)? };
        Ok(Self::new(re, im))
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("GaussianRational", 2)?;
        st.serialize_field("re", &format_rational(&self.re))?;
        st.serialize_field("im", &format_rational(&self.im))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct GqVisitor;

        impl<'de> Visitor<'de> for GqVisitor {
            type Value = GaussianRational;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str(r#"an object {"re":"p/q","im":"p/q"}"#)
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<Self::Value, A::Error> {
                let mut re: Option<String> = None;
                let mut im: Option<String> = None;
                while let Some(key) = map.next_key::<String>()? {
                    match key.as_str() {
                        "re" => re = Some(map.next_value()?),
                        "im" => im = Some(map.next_value()?),
                        other => return Err(de::Error::unknown_field(other, &["re", "im"])),
                    }
                }
                let re = re.ok_or_else(|| de::Error::missing_field("re"))?;
                let im = im.ok_or_else(|| de::Error::missing_field("im"))?;
                let re = parse_rational(&re).map_err(de::Error::custom)?;
                let im = parse_rational(&im).map_err(de::Error::custom)?;
                Ok(GaussianRational::new(re, im))
            }
        }

        deserializer.deserialize_struct("GaussianRational", &["re", "im"], GqVisitor)
    }
}
