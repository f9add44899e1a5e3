//! Graded connected Hopf algebras on explicit bases.

mod checks;
mod ck;
mod fq;
mod ordered;
mod shuffle;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Mutex;

use crate::algebra::{LinComb, Rational, Tensor};

pub use checks::{
    check_antipode, check_coassociativity, check_counit, check_heap_closure, check_hopf_axioms,
    check_multiplicativity, Triple,
};
pub use ck::{ck_antipode, ck_coproduct, ck_product, ConnesKreimer};
pub use fq::Fqsym;
pub use ordered::{ho_coproduct, ho_product, OrderedForests};
pub use shuffle::{sh_antipode, sh_coproduct, sh_product, Shuffle};

/// A graded connected Hopf algebra given on a basis. Products, coproducts
/// and antipodes of basis elements are finite linear combinations.
pub trait HopfAlgebra: Send + Sync {
    type Basis: Ord + Clone + fmt::Display + Send + Sync;

    fn name(&self) -> String;
    fn unit(&self) -> Self::Basis;
    fn degree(&self, x: &Self::Basis) -> usize;
    fn product(&self, x: &Self::Basis, y: &Self::Basis) -> LinComb<Self::Basis>;
    fn coproduct(&self, x: &Self::Basis) -> LinComb<Tensor<Self::Basis, Self::Basis>>;
    fn antipode(&self, x: &Self::Basis) -> LinComb<Self::Basis>;
    /// All basis elements of the given degree.
    fn basis(&self, degree: usize) -> Vec<Self::Basis>;

    fn counit(&self, x: &Self::Basis) -> Rational {
        if self.degree(x) == 0 {
            Rational::one()
        } else {
            Rational::zero()
        }
    }

    fn mul(&self, a: &LinComb<Self::Basis>, b: &LinComb<Self::Basis>) -> LinComb<Self::Basis> {
        a.bilinear(b, |x, y| self.product(x, y))
    }

    fn delta(&self, a: &LinComb<Self::Basis>) -> LinComb<Tensor<Self::Basis, Self::Basis>> {
        a.flat_map(|x| self.coproduct(x))
    }

    fn antipode_lin(&self, a: &LinComb<Self::Basis>) -> LinComb<Self::Basis> {
        a.flat_map(|x| self.antipode(x))
    }

    /// Basis elements of every degree up to `max_degree`.
    fn basis_up_to(&self, max_degree: usize) -> Vec<Self::Basis> {
        (0..=max_degree).flat_map(|n| self.basis(n)).collect()
    }
}

/// Shareable cache for recursively computed antipodes.
pub struct AntipodeMemo<B: Ord> {
    cache: Mutex<BTreeMap<B, LinComb<B>>>,
}

impl<B: Ord + Clone> Default for AntipodeMemo<B> {
    fn default() -> Self {
        AntipodeMemo { cache: Mutex::new(BTreeMap::new()) }
    }
}

impl<B: Ord + Clone> AntipodeMemo<B> {
    pub fn get(&self, x: &B) -> Option<LinComb<B>> {
        self.cache.lock().expect("antipode cache poisoned").get(x).cloned()
    }

    pub fn insert(&self, x: B, s: LinComb<B>) {
        self.cache.lock().expect("antipode cache poisoned").insert(x, s);
    }
}

/// Antipode from `m ∘ (id ⊗ S) ∘ Δ = ηε`: `S(x) = -Σ x′ S(x″)` over the terms
/// of `Δ(x)` whose right factor has lower degree than `x`.
pub fn recursive_antipode<H: HopfAlgebra + ?Sized>(
    h: &H,
    x: &H::Basis,
    memo: &AntipodeMemo<H::Basis>,
) -> LinComb<H::Basis> {
    let n = h.degree(x);
    if n == 0 {
        return LinComb::basis(x.clone());
    }
    if let Some(s) = memo.get(x) {
        return s;
    }
    let mut out = LinComb::zero();
    for (Tensor(a, b), c) in h.coproduct(x).iter() {
        if h.degree(b) < n {
            let sb = recursive_antipode(h, b, memo);
            out.add_scaled(&h.mul(&LinComb::basis(a.clone()), &sb), &-c);
        }
    }
    memo.insert(x.clone(), out.clone());
    out
}
