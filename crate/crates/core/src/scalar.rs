//! Exact scalars: Gaussian rationals and the monomial ring `q·exp(2πi·c)`.
//!
//! Every matrix entry that shows up in the parameter tables is a single
//! monomial `q·exp(2πi·c)` with `q` and `c` Gaussian rational, so equality
//! stays decidable once the exponent is put in normal form.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `n/d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub(crate) fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` with optional leading sign. No whitespace.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let (neg, body) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |t: &str| -> Result<BigInt> {
        if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("malformed rational `{s}`")));
        }
        t.parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("malformed rational `{s}`")))
    };
    let n = digits(num)?;
    let d = match den {
        Some(d) => digits(d)?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    let r = Rational::new(n, d);
    Ok(if neg { -r } else { r })
}

/// A complex number with rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self {
            re,
            im: Rational::zero(),
        }
    }

    pub fn imag(im: Rational) -> Self {
        Self {
            re: Rational::zero(),
            im,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(rat_int(n))
    }

    /// `n/d` on the real axis.
    pub fn ratio(n: i64, d: i64) -> Self {
        Self::real(rat(n, d))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        Self::imag(rat_int(1))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.re.is_integer() && self.im.is_integer()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(&self.re * r, &self.im * r)
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self::new(&self.re / &n, -&self.im / &n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    /// `i^k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::one(),
            1 => Self::i(),
            2 => Self::from_int(-1),
            _ => -Self::i(),
        }
    }

    /// Orders by real part then imaginary part; used for canonical sorting.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_part = |im: &Rational| -> String {
            if im.is_one() {
                "i".to_string()
            } else if *im == -Rational::one() {
                "-i".to_string()
            } else {
                format!("{}i", fmt_rational(im))
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => write!(f, "{}", im_part(&self.im)),
            (false, false) => {
                let im = im_part(&self.im);
                if im.starts_with('-') {
                    write!(f, "{}{}", fmt_rational(&self.re), im)
                } else {
                    write!(f, "{}+{}", fmt_rational(&self.re), im)
                }
            }
        }
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    /// Accepts the rendering produced by `Display`: `1/2`, `-i`, `3/4i`,
    /// `1/2+3/4i`, `2-i`. At most one real and one imaginary term.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed complex rational `{s}`"));
        if s.is_empty() || !s.is_ascii() {
            return Err(bad());
        }
        let bytes = s.as_bytes();
        let mut cuts = vec![0];
        for (k, b) in bytes.iter().enumerate().skip(1) {
            if *b == b'+' || *b == b'-' {
                cuts.push(k);
            }
        }
        if cuts.len() > 2 {
            return Err(bad());
        }
        cuts.push(s.len());
        let mut re: Option<Rational> = None;
        let mut im: Option<Rational> = None;
        for w in cuts.windows(2) {
            let term = &s[w[0]..w[1]];
            if let Some(body) = term.strip_suffix('i') {
                if im.is_some() {
                    return Err(bad());
                }
                let coef = match body {
                    "" | "+" => Rational::one(),
                    "-" => -Rational::one(),
                    b => parse_rational(b).map_err(|_| bad())?,
                };
                im = Some(coef);
            } else {
                // a real term may only come first
                if re.is_some() || im.is_some() {
                    return Err(bad());
                }
                re = Some(parse_rational(term).map_err(|_| bad())?);
            }
        }
        Ok(Self::new(
            re.unwrap_or_else(Rational::zero),
            im.unwrap_or_else(Rational::zero),
        ))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$m(rhs)
            }
        }
    };
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -self.clone()
    }
}

/// `coef · exp(2πi · exponent)` in normal form.
///
/// Normal form: the real part of the exponent lies in `[0, 1/4)`, the
/// multiple of `1/4` removed from it is absorbed into `coef` as a power of
/// `i`, and a zero coefficient carries a zero exponent. Since the only roots
/// of unity in `ℚ(i)` are powers of `i` and `e^{πr}` is transcendental for
/// rational `r ≠ 0`, equal values have equal normal forms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExpScalar {
    coef: GaussianRational,
    exponent: GaussianRational,
}

impl ExpScalar {
    pub fn new(coef: GaussianRational, exponent: GaussianRational) -> Self {
        let mut s = Self { coef, exponent };
        s.normalize();
        s
    }

    /// `exp(2πi · x)`.
    pub fn exp(x: GaussianRational) -> Self {
        Self::new(GaussianRational::one(), x)
    }

    pub fn scalar(coef: GaussianRational) -> Self {
        Self::new(coef, GaussianRational::zero())
    }

    pub fn one() -> Self {
        Self::scalar(GaussianRational::one())
    }

    pub fn zero() -> Self {
        Self::scalar(GaussianRational::zero())
    }

    pub fn coef(&self) -> &GaussianRational {
        &self.coef
    }

    pub fn exponent(&self) -> &GaussianRational {
        &self.exponent
    }

    fn normalize(&mut self) {
        if self.coef.is_zero() {
            self.exponent = GaussianRational::zero();
            return;
        }
        let re = &self.exponent.re;
        let frac = re - re.floor();
        let quarters = (&frac * rat_int(4)).floor();
        let k: i64 = quarters.to_integer().try_into().expect("0 ≤ k < 4");
        self.coef = &self.coef * &GaussianRational::i_pow(k);
        self.exponent.re = frac - quarters / rat_int(4);
    }

    pub fn is_zero(&self) -> bool {
        self.coef.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.coef == GaussianRational::one() && self.exponent.is_zero()
    }

    pub fn inv(&self) -> Option<Self> {
        self.coef
            .inv()
            .map(|c| Self::new(c, -self.exponent.clone()))
    }

    pub fn pow(&self, k: i64) -> Self {
        if k < 0 {
            return self.inv().expect("negative power of zero").pow(-k);
        }
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl Mul<&ExpScalar> for &ExpScalar {
    type Output = ExpScalar;
    fn mul(self, rhs: &ExpScalar) -> ExpScalar {
        ExpScalar::new(&self.coef * &rhs.coef, &self.exponent + &rhs.exponent)
    }
}

impl Mul for ExpScalar {
    type Output = ExpScalar;
    fn mul(self, rhs: ExpScalar) -> ExpScalar {
        &self * &rhs
    }
}

impl Neg for &ExpScalar {
    type Output = ExpScalar;
    fn neg(self) -> ExpScalar {
        ExpScalar::new(-&self.coef, self.exponent.clone())
    }
}

/// `c = r·i^k` with `r > 0` rational and `0 ≤ k < 4`.
fn unit_split(c: &GaussianRational) -> Option<(Rational, i64)> {
    let (r, k) = if c.im.is_zero() && c.re.is_positive() {
        (c.re.clone(), 0)
    } else if c.re.is_zero() && c.im.is_positive() {
        (c.im.clone(), 1)
    } else if c.im.is_zero() && c.re.is_negative() {
        (-c.re.clone(), 2)
    } else if c.re.is_zero() && c.im.is_negative() {
        (-c.im.clone(), 3)
    } else {
        return None;
    };
    Some((r, k))
}

impl fmt::Display for ExpScalar {
    /// A coefficient `r·i^k` is shown as `r·exp(2πi·(x + k/4))`, so that
    /// `exp(2πi·5/6)` reads as written rather than as `-i·exp(2πi·1/12)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent.is_zero() {
            return write!(f, "{}", self.coef);
        }
        let (coef, e) = match unit_split(&self.coef) {
            Some((r, k)) if !self.exponent.re.is_zero() => {
                let mut e = self.exponent.clone();
                e.re += rat(k, 4);
                (GaussianRational::real(r), e)
            }
            _ => (self.coef.clone(), self.exponent.clone()),
        };
        let plain = e.im.is_zero() || (e.re.is_zero() && !e.im.is_negative());
        let exp = if plain {
            format!("exp(2πi·{e})")
        } else {
            format!("exp(2πi·({e}))")
        };
        if coef == GaussianRational::one() {
            write!(f, "{exp}")
        } else if coef == GaussianRational::from_int(-1) {
            write!(f, "-{exp}")
        } else if coef.is_real() && !coef.re.is_negative() || coef.re.is_zero() {
            write!(f, "{coef}·{exp}")
        } else {
            write!(f, "({coef})·{exp}")
        }
    }
}
