use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::{Rational, Ring};
use crate::error::ParseError;

/// Element of Q(i).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn i() -> Self {
        GaussianRational { re: Rational::zero(), im: Rational::one() }
    }

    /// `i * x` for rational `x`.
    pub fn imaginary(im: Rational) -> Self {
        GaussianRational { re: Rational::zero(), im }
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn recip(&self) -> Option<Self> {
        let n = self.norm_sqr();
        let inv = n.recip()?;
        Some(GaussianRational { re: &self.re * &inv, im: -(&self.im * &inv) })
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => GaussianRational::real(Rational::one()),
            1 => GaussianRational::i(),
            2 => GaussianRational::real(Rational::from(-1)),
            _ => GaussianRational::imaginary(Rational::from(-1)),
        }
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        GaussianRational::real(r)
    }
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -&self.re, im: -&self.im }
    }
}

impl Ring for GaussianRational {
    fn zero() -> Self {
        GaussianRational::default()
    }
    fn one() -> Self {
        GaussianRational::real(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &Rational) -> Self {
        GaussianRational { re: &self.re * c, im: &self.im * c }
    }
}

impl fmt::Display for GaussianRational {
    /// Renders as `re+im*i` (or `re-|im|*i`); both parts are always present.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}*i", self.re, sign, self.im.abs())
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GaussianRational {
    type Err = ParseError;

    /// Parses sums of signed rational terms, each optionally multiplied by `i`:
    /// `1/2+3/4*i`, `-i`, `2*i`, `5`, `1-i`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: Vec<(usize, char)> =
            s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ParseError::new(0, "empty gaussian rational"));
        }
        let mut acc = GaussianRational::default();
        let mut idx = 0;
        while idx < compact.len() {
            let start = compact[idx].0;
            let mut negative = false;
            if compact[idx].1 == '+' || compact[idx].1 == '-' {
                negative = compact[idx].1 == '-';
                idx += 1;
            }
            let body_start = idx;
            while idx < compact.len() && compact[idx].1 != '+' && compact[idx].1 != '-' {
                idx += 1;
            }
            let body: String = compact[body_start..idx].iter().map(|(_, c)| *c).collect();
            if body.is_empty() {
                return Err(ParseError::new(start, "dangling sign"));
            }
            let (coeff, imag) = if body == "i" {
                (Rational::one(), true)
            } else if let Some(num) = body.strip_suffix("*i") {
                (num.parse::<Rational>().map_err(|e| e.shifted(start))?, true)
            } else if let Some(num) = body.strip_suffix('i') {
                (num.parse::<Rational>().map_err(|e| e.shifted(start))?, true)
            } else {
                (body.parse::<Rational>().map_err(|e| e.shifted(start))?, false)
            };
            let coeff = if negative { -coeff } else { coeff };
            if imag {
                acc.im = &acc.im + &coeff;
            } else {
                acc.re = &acc.re + &coeff;
            }
        }
        Ok(acc)
    }
}
