use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::Rational;

/// Finite formal linear combination of basis objects with rational
/// coefficients. Zero coefficients are never stored, so equality is
/// coefficient-wise equality on canonical basis objects.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Rational>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        LinComb::default()
    }

    pub fn basis(b: B) -> Self {
        let mut out = LinComb::zero();
        out.add_term(b, Rational::one());
        out
    }

    /// Combines like terms and drops zeros.
    pub fn normalize(raw: impl IntoIterator<Item = (B, Rational)>) -> Self {
        let mut out = LinComb::zero();
        for (b, c) in raw {
            out.add_term(b, c);
        }
        out
    }

    pub fn add_term(&mut self, b: B, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(slot) => {
                *slot = &*slot + &c;
                if slot.is_zero() {
                    self.terms.remove(&b);
                }
            }
            None => {
                self.terms.insert(b, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb<B>, c: &Rational) {
        for (b, k) in &other.terms {
            self.add_term(b.clone(), k * c);
        }
    }

    pub fn coeff(&self, b: &B) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Rational)> {
        self.terms.iter()
    }

    pub fn basis_elements(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return LinComb::zero();
        }
        LinComb { terms: self.terms.iter().map(|(b, k)| (b.clone(), k * c)).collect() }
    }

    /// Linear extension of a basis map (terms that collide are merged).
    pub fn map_basis<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> C) -> LinComb<C> {
        LinComb::normalize(self.terms.iter().map(|(b, k)| (f(b), k.clone())))
    }

    /// Linear extension of a map from basis objects to combinations.
    pub fn flat_map<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, k) in &self.terms {
            out.add_scaled(&f(b), k);
        }
        out
    }

    /// Bilinear extension of a basis-level binary operation.
    pub fn bilinear<C: Ord + Clone, D: Ord + Clone>(
        &self,
        other: &LinComb<C>,
        mut f: impl FnMut(&B, &C) -> LinComb<D>,
    ) -> LinComb<D> {
        let mut out = LinComb::zero();
        for (b, k) in &self.terms {
            for (c, l) in &other.terms {
                out.add_scaled(&f(b, c), &(k * l));
            }
        }
        out
    }

    pub fn tensor<C: Ord + Clone>(&self, other: &LinComb<C>) -> LinComb<Tensor<B, C>> {
        self.bilinear(other, |b, c| LinComb::basis(Tensor(b.clone(), c.clone())))
    }
}

impl<B: Ord + Clone> FromIterator<(B, Rational)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, Rational)>>(iter: I) -> Self {
        LinComb::normalize(iter)
    }
}

impl<B: Ord + Clone> Add<&LinComb<B>> for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl<B: Ord + Clone> Sub<&LinComb<B>> for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::from(-1));
        out
    }
}

impl<B: Ord + Clone> Neg for &LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        self.scale(&Rational::from(-1))
    }
}

impl<B: Ord + fmt::Display> fmt::Display for LinComb<B> {
    /// Signed term list without spaces: `(12)+(21)`, `2*(11)`, `-(cba)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (b, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if negative {
                f.write_str("-")?;
            } else if n > 0 {
                f.write_str("+")?;
            }
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "{}", b)?;
            } else {
                write!(f, "{}*{}", mag, b)?;
            }
        }
        Ok(())
    }
}

impl<B: Ord + fmt::Display> fmt::Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Basis tensor `a ⊗ b`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tensor<A, B>(pub A, pub B);

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Tensor<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗{}", self.0, self.1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn cancellation() {
        let l = LinComb::normalize([("b", q(1)), ("b", q(-1))]);
        assert!(l.is_zero());
    }

    #[test]
    fn like_term_merge() {
        let l = LinComb::normalize([("b", q(1)), ("b", q(2))]);
        assert_eq!(l.len(), 1);
        assert_eq!(l.coeff(&"b"), q(3));
    }

    #[test]
    fn zero_drop() {
        let l = LinComb::normalize([("b", q(1)), ("c", q(1)), ("b", q(0))]);
        assert_eq!(l, LinComb::normalize([("c", q(1)), ("b", q(1))]));
        assert_eq!(l.to_string(), "b+c");
    }

    #[test]
    fn rendering() {
        let l = LinComb::normalize([("x", q(-1)), ("y", Rational::new(3, 2))]);
        assert_eq!(l.to_string(), "-x+3/2*y");
        assert_eq!(LinComb::<&str>::zero().to_string(), "0");
    }
}
