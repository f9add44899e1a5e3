//! Exact coefficient algebras and formal linear combinations.

mod freq;
mod gaussian;
mod lincomb;
mod poly;
mod rational;
mod ring;

pub use freq::{FreqExpValue, Frequencies};
pub use gaussian::GaussianRational;
pub use lincomb::{LinComb, Tensor};
pub use poly::{Exponents, MultiPoly, Var};
pub use rational::Rational;
pub use ring::Ring;
