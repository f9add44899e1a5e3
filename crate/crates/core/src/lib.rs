//! Exact combinatorial Hopf algebras of decorated rooted forests, ordered and
//! heap-ordered forests, permutations (FQSym) and words (the shuffle algebra),
//! together with the morphism `Θ` from ordered forests to permutations, its
//! inverse elements `T^σ`, and characters built from iterated integrals and
//! Fourier normal ordering.
//!
//! All arithmetic is exact. Identities are checked by equality of canonical
//! linear combinations, never up to a tolerance.

pub mod algebra;
pub mod characters;
pub mod error;
pub mod fno;
pub mod fqsym;
pub mod hopf;
pub mod morphisms;
pub mod perm;
pub mod report;
pub mod trees;
pub mod words;

pub use algebra::{FreqExpValue, GaussianRational, LinComb, MultiPoly, Rational, Ring, Tensor, Var};
pub use perm::{DecoratedPermutation, Permutation};
pub use trees::{HeapOrderedForest, OrderedForest, PlainForest};
pub use words::{Letter, Word};
pub use error::{BoundError, Error, FnoError, ParseError, TreeError};
