use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An element `re + im*i` of the Gaussian integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussianInteger {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInteger {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        Self { re: re.into(), im: im.into() }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    /// The primitive fourth root of unity.
    pub fn i() -> Self {
        Self::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    /// True for the four units `1, -1, i, -i`.
    pub fn is_unit(&self) -> bool {
        (self.re.abs().is_one() && self.im.is_zero()) || (self.re.is_zero() && self.im.abs().is_one())
    }

    /// Sign used when printing: a value "reads negative" when its leading
    /// nonzero part is negative and it has a single nonzero part.
    pub(crate) fn reads_negative(&self) -> bool {
        if self.im.is_zero() {
            self.re.is_negative()
        } else if self.re.is_zero() {
            self.im.is_negative()
        } else {
            false
        }
    }
}

impl From<i64> for GaussianInteger {
    fn from(v: i64) -> Self {
        Self::new(v, 0)
    }
}

impl Add for &GaussianInteger {
    type Output = GaussianInteger;
    fn add(self, rhs: &GaussianInteger) -> GaussianInteger {
        GaussianInteger { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Add for GaussianInteger {
    type Output = GaussianInteger;
    fn add(self, rhs: GaussianInteger) -> GaussianInteger {
        &self + &rhs
    }
}

impl AddAssign<&GaussianInteger> for GaussianInteger {
    fn add_assign(&mut self, rhs: &GaussianInteger) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for &GaussianInteger {
    type Output = GaussianInteger;
    fn sub(self, rhs: &GaussianInteger) -> GaussianInteger {
        GaussianInteger { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &GaussianInteger {
    type Output = GaussianInteger;
    fn mul(self, rhs: &GaussianInteger) -> GaussianInteger {
        GaussianInteger {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Mul for GaussianInteger {
    type Output = GaussianInteger;
    fn mul(self, rhs: GaussianInteger) -> GaussianInteger {
        &self * &rhs
    }
}

impl Neg for &GaussianInteger {
    type Output = GaussianInteger;
    fn neg(self) -> GaussianInteger {
        GaussianInteger { re: -&self.re, im: -&self.im }
    }
}

impl Neg for GaussianInteger {
    type Output = GaussianInteger;
    fn neg(self) -> GaussianInteger {
        -&self
    }
}

impl fmt::Display for GaussianInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => fmt_imag(f, &self.im),
            (false, false) => {
                write!(f, "{}", self.re)?;
                if self.im.is_negative() {
                    f.write_str(" - ")?;
                    fmt_imag(f, &-&self.im)
                } else {
                    f.write_str(" + ")?;
                    fmt_imag(f, &self.im)
                }
            }
        }
    }
}

fn fmt_imag(f: &mut fmt::Formatter<'_>, im: &BigInt) -> fmt::Result {
    if im.is_one() {
        f.write_str("i")
    } else if (-im).is_one() {
        f.write_str("-i")
    } else {
        write!(f, "{}*i", im)
    }
}
