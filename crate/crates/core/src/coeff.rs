//! Exact coefficients: arbitrary-precision rationals and Gaussian rationals.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always in lowest terms with positive denominator.
pub type ExactRational = BigRational;

/// Builds `num/den` as an exact rational.
pub fn rat(num: i64, den: i64) -> ExactRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds an integer-valued exact rational.
pub fn int(n: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `p`, `-p`, or `p/q`.
pub fn parse_rational(s: &str) -> Result<ExactRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
    }
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(r: &ExactRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Returns the integer value of `r` if it is integral.
pub fn as_integer(r: &ExactRational) -> Option<i64> {
    if r.is_integer() {
        i64::try_from(r.numer().clone()).ok()
    } else {
        None
    }
}

/// Exact complex number `re + im·i` with rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: ExactRational,
    pub im: ExactRational,
}

impl GaussianRational {
    pub fn new(re: ExactRational, im: ExactRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: ExactRational) -> Self {
        GaussianRational { re, im: BigRational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(int(n))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -&self.im }
    }

    /// `|z|²`
    pub fn norm_sqr(&self) -> ExactRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.is_real() {
            return Some(Self::real(self.re.recip()));
        }
        let n = self.norm_sqr();
        Some(GaussianRational { re: &self.re / &n, im: -&self.im / &n })
    }

    /// The real part, failing if the imaginary part is nonzero.
    pub fn to_real(&self) -> Result<ExactRational> {
        if self.is_real() {
            Ok(self.re.clone())
        } else {
            Err(Error::NotReal)
        }
    }

    pub fn mul_rational(&self, r: &ExactRational) -> Self {
        if self.is_real() {
            Self::real(&self.re * r)
        } else {
            GaussianRational { re: &self.re * r, im: &self.im * r }
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// True if the value is a negative real number; used to fold signs into
    /// term separators when printing.
    pub(crate) fn is_negative_real(&self) -> bool {
        self.is_real() && self.re.is_negative()
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational { re: BigRational::zero(), im: BigRational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::real(BigRational::one())
    }
}

impl From<ExactRational> for GaussianRational {
    fn from(r: ExactRational) -> Self {
        Self::real(r)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        let im = if self.im.is_zero() && o.im.is_zero() {
            BigRational::zero()
        } else {
            &self.im + &o.im
        };
        GaussianRational { re: &self.re + &o.re, im }
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &GaussianRational) -> GaussianRational {
        let im = if self.im.is_zero() && o.im.is_zero() {
            BigRational::zero()
        } else {
            &self.im - &o.im
        };
        GaussianRational { re: &self.re - &o.re, im }
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        match (self.im.is_zero(), o.im.is_zero()) {
            (true, true) => GaussianRational::real(&self.re * &o.re),
            (true, false) => GaussianRational { re: &self.re * &o.re, im: &self.re * &o.im },
            (false, true) => GaussianRational { re: &self.re * &o.re, im: &self.im * &o.re },
            (false, false) => GaussianRational {
                re: &self.re * &o.re - &self.im * &o.im,
                im: &self.re * &o.im + &self.im * &o.re,
            },
        }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    /// Panics on division by zero, like the rational division it wraps.
    fn div(self, o: &GaussianRational) -> GaussianRational {
        let inv = o.inv().expect("division by zero");
        self * &inv
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -&self.re, im: -&self.im }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: GaussianRational) -> GaussianRational {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: &GaussianRational) -> GaussianRational {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, o: &GaussianRational) {
        self.re += &o.re;
        if !o.im.is_zero() {
            self.im += &o.im;
        }
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, o: &GaussianRational) {
        self.re -= &o.re;
        if !o.im.is_zero() {
            self.im -= &o.im;
        }
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, o: &GaussianRational) {
        *self = &*self * o;
    }
}

impl fmt::Display for GaussianRational {
    /// `p/q` for real values, `a+bi` (with signed rational parts) otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_real() {
            write!(f, "{}", format_rational(&self.re))
        } else {
            write!(f, "{}+{}i", format_rational(&self.re), format_rational(&self.im))
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(body) = s.strip_suffix('i') {
            // `re+imi`; the separating plus is the first one after position 0.
            let split = body[1..]
                .find('+')
                .map(|p| p + 1)
                .ok_or_else(|| Error::Parse(format!("invalid complex coefficient `{s}`")))?;
            let re = parse_rational(&body[..split])?;
            let im = parse_rational(&body[split + 1..])?;
            Ok(GaussianRational::new(re, im))
        } else {
            parse_rational(s).map(GaussianRational::real)
        }
    }
}
