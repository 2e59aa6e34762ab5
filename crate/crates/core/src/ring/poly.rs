use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use super::GaussianInteger;

/// Exponent pair `(deg_a, deg_h)` of a monomial `a^deg_a * h^deg_h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub deg_a: u32,
    pub deg_h: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { deg_a: 0, deg_h: 0 };

    pub fn new(deg_a: u32, deg_h: u32) -> Self {
        Self { deg_a, deg_h }
    }

    pub fn total_degree(&self) -> u32 {
        self.deg_a + self.deg_h
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.deg_a + other.deg_a, self.deg_h + other.deg_h)
    }
}

// Graded lexicographic with `a > h`: higher total degree first, then higher
// power of `a`. Maps iterate from the leading monomial down.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .total_degree()
            .cmp(&self.total_degree())
            .then(other.deg_a.cmp(&self.deg_a))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (sym, deg) in [("a", self.deg_a), ("h", self.deg_h)] {
            match deg {
                0 => {}
                1 => parts.push(sym.to_string()),
                d => parts.push(format!("{sym}^{d}")),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// A polynomial in `a` and `h` with Gaussian-integer coefficients.
///
/// The term map never stores a zero coefficient, so structural equality of
/// two values is equality of the polynomials they denote.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RingPoly {
    terms: BTreeMap<Monomial, GaussianInteger>,
}

impl RingPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianInteger::one())
    }

    pub fn i() -> Self {
        Self::constant(GaussianInteger::i())
    }

    pub fn a() -> Self {
        Self::monomial(GaussianInteger::one(), Monomial::new(1, 0))
    }

    pub fn h() -> Self {
        Self::monomial(GaussianInteger::one(), Monomial::new(0, 1))
    }

    pub fn from_int(v: i64) -> Self {
        Self::constant(GaussianInteger::from(v))
    }

    pub fn constant(c: GaussianInteger) -> Self {
        Self::monomial(c, Monomial::ONE)
    }

    pub fn monomial(c: GaussianInteger, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(GaussianInteger::is_one)
    }

    /// The constant Gaussian integer this polynomial equals, if it is constant.
    pub fn as_constant(&self) -> Option<GaussianInteger> {
        match self.terms.len() {
            0 => Some(GaussianInteger::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    /// True for `1, -1, i, -i`.
    pub fn is_unit(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_unit())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianInteger)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> GaussianInteger {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, m: Monomial, c: &GaussianInteger) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: &GaussianInteger) -> RingPoly {
        if c.is_zero() {
            return RingPoly::zero();
        }
        RingPoly { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    pub fn pow(&self, mut exp: u32) -> RingPoly {
        let mut base = self.clone();
        let mut acc = RingPoly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Complex conjugation `i -> -i` applied coefficientwise.
    pub fn conj(&self) -> RingPoly {
        RingPoly { terms: self.terms.iter().map(|(m, v)| (*m, v.conj())).collect() }
    }

    /// Canonical text form, graded lexicographic in `(deg_a, deg_h)`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let term = format_term(m, c);
            if k == 0 {
                out.push_str(&term);
            } else if let Some(rest) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&term);
            }
        }
        out
    }

    /// Whether the canonical text starts with a minus sign.
    pub fn reads_negative(&self) -> bool {
        self.to_text().starts_with('-')
    }
}

fn format_term(m: &Monomial, c: &GaussianInteger) -> String {
    if *m == Monomial::ONE {
        return c.to_string();
    }
    let one = GaussianInteger::one();
    let i = GaussianInteger::i();
    if *c == one {
        m.to_string()
    } else if *c == -&one {
        format!("-{m}")
    } else if *c == i {
        format!("i*{m}")
    } else if *c == -&i {
        format!("-i*{m}")
    } else if c.reads_negative() || c.im == 0.into() || c.re == 0.into() {
        format!("{c}*{m}")
    } else {
        format!("({c})*{m}")
    }
}

impl fmt::Display for RingPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl From<GaussianInteger> for RingPoly {
    fn from(c: GaussianInteger) -> Self {
        RingPoly::constant(c)
    }
}

impl From<i64> for RingPoly {
    fn from(v: i64) -> Self {
        RingPoly::from_int(v)
    }
}

impl Add for &RingPoly {
    type Output = RingPoly;
    fn add(self, rhs: &RingPoly) -> RingPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for RingPoly {
    type Output = RingPoly;
    fn add(mut self, rhs: RingPoly) -> RingPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&RingPoly> for RingPoly {
    fn add_assign(&mut self, rhs: &RingPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c);
        }
    }
}

impl Sub for &RingPoly {
    type Output = RingPoly;
    fn sub(self, rhs: &RingPoly) -> RingPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Sub for RingPoly {
    type Output = RingPoly;
    fn sub(self, rhs: RingPoly) -> RingPoly {
        &self - &rhs
    }
}

impl Mul for &RingPoly {
    type Output = RingPoly;
    fn mul(self, rhs: &RingPoly) -> RingPoly {
        let mut out = RingPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.times(m2), &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for RingPoly {
    type Output = RingPoly;
    fn mul(self, rhs: RingPoly) -> RingPoly {
        &self * &rhs
    }
}

impl Neg for &RingPoly {
    type Output = RingPoly;
    fn neg(self) -> RingPoly {
        RingPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for RingPoly {
    type Output = RingPoly;
    fn neg(self) -> RingPoly {
        -&self
    }
}

/// The four units of the ground ring, in the order `1, i, -1, -i`.
/// Serialized as ring text, e.g. `"2*a - i*h"`.
impl serde::Serialize for RingPoly {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_text())
    }
}

pub fn units() -> [RingPoly; 4] {
    [RingPoly::one(), RingPoly::i(), RingPoly::from_int(-1), -RingPoly::i()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sums_cancel() {
        let a = RingPoly::a();
        let h = RingPoly::h();
        assert_eq!(&(&a + &h) + &(&a - &h), RingPoly::from_int(2) * a.clone());
        assert_eq!(&a + &RingPoly::zero(), a);
        assert_eq!(RingPoly::i() + RingPoly::i(), RingPoly::constant(GaussianInteger::new(0, 2)));
    }

    #[test]
    fn products() {
        let a = RingPoly::a();
        let h = RingPoly::h();
        assert_eq!(RingPoly::i() * RingPoly::i(), RingPoly::from_int(-1));
        assert_eq!(&(&a + &h) * &(&a - &h), &(&a * &a) - &(&h * &h));
        let s = &(&h * &h) + &(&RingPoly::from_int(4) * &a);
        assert_eq!(s.to_text(), "h^2 + 4*a");
        assert_eq!(h.pow(2), &h * &h);
        assert!(RingPoly::i().pow(4).is_one());
    }

    #[test]
    fn negation_and_equality() {
        assert_eq!(-RingPoly::i(), RingPoly::constant(GaussianInteger::new(0, -1)));
        assert_eq!(RingPoly::a() + RingPoly::h(), RingPoly::h() + RingPoly::a());
    }

    #[test]
    fn text_form() {
        assert_eq!(RingPoly::zero().to_text(), "0");
        assert_eq!((-RingPoly::i()).to_text(), "-i");
        assert_eq!(RingPoly::constant(GaussianInteger::new(0, -2)).to_text(), "-2*i");
        let p = &(&RingPoly::h() * &RingPoly::i()) - &RingPoly::from_int(3);
        assert_eq!(p.to_text(), "i*h - 3");
        let q = RingPoly::monomial(GaussianInteger::new(1, 2), Monomial::new(1, 1));
        assert_eq!(q.to_text(), "(1 + 2*i)*a*h");
    }
}
