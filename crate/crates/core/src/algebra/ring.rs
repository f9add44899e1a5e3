use super::Rational;

/// Commutative unital algebra over the rationals, as needed for character values.
///
/// Method names avoid clashing with the `std::ops` traits, which the concrete
/// types also implement.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn scaled(&self, c: &Rational) -> Self;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
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
        self * c
    }
}
