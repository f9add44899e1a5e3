//! Characters of the Hopf algebras into commutative coefficient algebras,
//! iterated integrals of polynomial paths and their tree extension.

mod fubini;
mod path;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::algebra::{LinComb, Ring};
use crate::error::Error;
use crate::hopf::HopfAlgebra;
use crate::report::Check;

pub use fubini::fubini_tsigma;
pub use path::{iter_int_tree, iter_int_word, PolyPath};

type Eval<B, A> = dyn Fn(&B) -> Result<A, Error> + Send + Sync;

/// A linear map from a Hopf algebra into a commutative algebra `A`, given by
/// its values on basis elements. Multiplicativity is checked by
/// [`validate_character`], not assumed. Values are cached.
pub struct Character<H: HopfAlgebra, A: Ring> {
    hopf: Arc<H>,
    eval: Arc<Eval<H::Basis, A>>,
    memo: Arc<Mutex<BTreeMap<H::Basis, A>>>,
}

impl<H: HopfAlgebra, A: Ring> Clone for Character<H, A> {
    fn clone(&self) -> Self {
        Character { hopf: self.hopf.clone(), eval: self.eval.clone(), memo: self.memo.clone() }
    }
}

impl<H: HopfAlgebra + 'static, A: Ring + Send + 'static> Character<H, A> {
    pub fn new(hopf: Arc<H>, eval: impl Fn(&H::Basis) -> Result<A, Error> + Send + Sync + 'static) -> Self {
        Character { hopf, eval: Arc::new(eval), memo: Arc::new(Mutex::new(BTreeMap::new())) }
    }

    /// Infallible variant of [`Character::new`].
    pub fn from_fn(hopf: Arc<H>, eval: impl Fn(&H::Basis) -> A + Send + Sync + 'static) -> Self {
        Character::new(hopf, move |b| Ok(eval(b)))
    }

    /// The convolution unit `x ↦ ε(x)·1`.
    pub fn unit(hopf: Arc<H>) -> Self {
        let h = hopf.clone();
        Character::from_fn(hopf, move |b| A::one().scaled(&h.counit(b)))
    }

    pub fn hopf(&self) -> &Arc<H> {
        &self.hopf
    }

    pub fn value(&self, b: &H::Basis) -> Result<A, Error> {
        if let Some(v) = self.memo.lock().expect("memo poisoned").get(b) {
            return Ok(v.clone());
        }
        let v = (self.eval)(b)?;
        self.memo.lock().expect("memo poisoned").insert(b.clone(), v.clone());
        Ok(v)
    }

    pub fn value_lin(&self, x: &LinComb<H::Basis>) -> Result<A, Error> {
        let mut acc = A::zero();
        for (b, c) in x.iter() {
            acc = acc.plus(&self.value(b)?.scaled(c));
        }
        Ok(acc)
    }

    fn same_structure(&self, other: &Self) -> Result<(), Error> {
        let (a, b) = (self.hopf.name(), other.hopf.name());
        if a == b {
            Ok(())
        } else {
            Err(Error::StructureMismatch(a, b))
        }
    }

    /// `φ * ψ = m ∘ (φ ⊗ ψ) ∘ Δ`.
    pub fn convolve(&self, other: &Self) -> Result<Self, Error> {
        self.same_structure(other)?;
        let (phi, psi) = (self.clone(), other.clone());
        let hopf = self.hopf.clone();
        Ok(Character::new(self.hopf.clone(), move |b| {
            let mut acc = A::zero();
            for (t, c) in hopf.coproduct(b).iter() {
                acc = acc.plus(&phi.value(&t.0)?.times(&psi.value(&t.1)?).scaled(c));
            }
            Ok(acc)
        }))
    }

    /// `φ ∘ S`, the convolution inverse of a character.
    pub fn inverse(&self) -> Self {
        let phi = self.clone();
        let hopf = self.hopf.clone();
        Character::new(self.hopf.clone(), move |b| phi.value_lin(&hopf.antipode(b)))
    }

    /// `φ ∘ f` for a linear map `f` from another Hopf algebra into this one.
    pub fn pull_back<G: HopfAlgebra + 'static>(
        &self,
        source: Arc<G>,
        f: impl Fn(&G::Basis) -> LinComb<H::Basis> + Send + Sync + 'static,
    ) -> Character<G, A> {
        let phi = self.clone();
        Character::new(source, move |b| phi.value_lin(&f(b)))
    }
}

/// Multiplicativity on every pair of basis elements with total degree at most
/// `max_degree`, plus `φ(1) = 1`.
pub fn validate_character<H, A>(phi: &Character<H, A>, max_degree: usize) -> Result<Check, Error>
where
    H: HopfAlgebra + 'static,
    A: Ring + Send + fmt::Display + 'static,
{
    let h = phi.hopf().clone();
    let mut check = Check::new(format!("character on {}", h.name()));
    check.record("unit", &phi.value(&h.unit())?, &A::one());
    let by_degree: Vec<Vec<H::Basis>> = (0..=max_degree).map(|n| h.basis(n)).collect();
    for a in 0..=max_degree {
        for b in 0..=(max_degree - a) {
            for x in &by_degree[a] {
                let px = phi.value(x)?;
                for y in &by_degree[b] {
                    let lhs = phi.value_lin(&h.product(x, y))?;
                    let rhs = px.times(&phi.value(y)?);
                    check.record(format!("{} · {}", x, y), &lhs, &rhs);
                }
            }
        }
    }
    Ok(check)
}

/// Pointwise equality of two characters on all basis elements up to `max_degree`.
pub fn compare_characters<H, A>(
    name: &str,
    phi: &Character<H, A>,
    psi: &Character<H, A>,
    max_degree: usize,
) -> Result<Check, Error>
where
    H: HopfAlgebra + 'static,
    A: Ring + Send + fmt::Display + 'static,
{
    let mut check = Check::new(name);
    for b in phi.hopf().basis_up_to(max_degree) {
        check.record(&b, &phi.value(&b)?, &psi.value(&b)?);
    }
    Ok(check)
}

/// A character of `H^d` from its values on trees, extended multiplicatively.
pub fn multiplicative_ck<A: Ring + Send + 'static>(
    hopf: Arc<crate::hopf::ConnesKreimer>,
    on_tree: impl Fn(&crate::trees::PlainTree) -> A + Send + Sync + 'static,
) -> Character<crate::hopf::ConnesKreimer, A> {
    Character::from_fn(hopf, move |f| f.trees().iter().fold(A::one(), |acc, t| acc.times(&on_tree(t))))
}

/// The extension `φ̄ = φ ∘ θ^d` of a shuffle character to `H^d`.
pub fn extend_shuffle_char<A: Ring + Send + 'static>(
    phi: &Character<crate::hopf::Shuffle, A>,
    target: Arc<crate::hopf::ConnesKreimer>,
) -> Character<crate::hopf::ConnesKreimer, A> {
    phi.pull_back(target, crate::morphisms::theta_small)
}
