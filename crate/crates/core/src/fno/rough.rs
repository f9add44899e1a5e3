use std::sync::Arc;

use crate::algebra::{FreqExpValue, GaussianRational, Ring, Var};
use crate::characters::Character;
use crate::error::{Error, FnoError};
use crate::hopf::Shuffle;
use crate::morphisms::{theta, TSigma};
use crate::perm::Permutation;
use crate::trees::{antichain_masks, OrderedForest};
use crate::words::{Letter, Word};

use super::measure::{split_measure_with, AtomMeasure, FourierAtom, TiePolicy};
use super::path::TrigPath;
use super::skeleton::{labelled_antipode, skeleton_atom, skeleton_lin};

/// Fourier normal ordering for one trigonometric path: `χ^t`, and the formal
/// rough path built from it in two ways.
pub struct Fno {
    path: TrigPath,
    tables: Arc<TSigma>,
    policy: TiePolicy,
}

/// `J^{ts}(w)` from the per-sector convolution and `J'^{ts}(w)` from the
/// shuffle convolution of `χ^t` with `χ^s∘S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoughPathValue {
    pub j: FreqExpValue,
    pub j_prime: FreqExpValue,
}

impl RoughPathValue {
    pub fn agree(&self) -> bool {
        self.j == self.j_prime
    }
}

fn restrict_freq(freq: &[crate::algebra::Rational], mask: u64) -> Vec<crate::algebra::Rational> {
    freq.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, x)| x.clone()).collect()
}

impl Fno {
    pub fn new(path: TrigPath, policy: TiePolicy) -> Self {
        Fno::with_tables(path, Arc::new(TSigma::default()), policy)
    }

    pub fn with_tables(path: TrigPath, tables: Arc<TSigma>, policy: TiePolicy) -> Self {
        Fno { path, tables, policy }
    }

    pub fn path(&self) -> &TrigPath {
        &self.path
    }

    pub fn tables(&self) -> &TSigma {
        &self.tables
    }

    pub fn policy(&self) -> TiePolicy {
        self.policy
    }

    /// `χ^v_μ = Σ_σ φ^v_{μ^σ}(T^σ)` for an arbitrary atom measure.
    pub fn chi_measure(&self, mu: &AtomMeasure, v: Var) -> Result<FreqExpValue, Error> {
        let split = split_measure_with(mu, self.policy)?;
        let mut acc = FreqExpValue::zero();
        for (sigma, piece) in split.iter() {
            acc = &acc + &skeleton_lin(&self.tables.t_sigma(sigma)?, piece, v)?;
        }
        Ok(acc)
    }

    /// `χ^v_Γ(w)` with `μ = μ_{(Γ,w)}`.
    pub fn chi(&self, w: &Word, v: Var) -> Result<FreqExpValue, Error> {
        self.chi_measure(&self.path.tensor_measure(w)?, v)
    }

    fn shuffle_hopf(&self) -> Arc<Shuffle> {
        Arc::new(Shuffle::new(self.path.d() as Letter))
    }

    pub fn chi_character(self: &Arc<Self>, v: Var) -> Character<Shuffle, FreqExpValue> {
        let me = self.clone();
        Character::new(self.shuffle_hopf(), move |w| me.chi(w, v))
    }

    /// `J' = χ^upper * (χ^lower ∘ S)`.
    pub fn j_prime_character(self: &Arc<Self>, upper: Var, lower: Var) -> Result<Character<Shuffle, FreqExpValue>, Error> {
        self.chi_character(upper).convolve(&self.chi_character(lower).inverse())
    }

    /// `(φ^upper * (φ^lower∘S̄))_ν(F)` through the cuts of `F`, coordinates
    /// following their vertices.
    pub fn convolved_skeleton(&self, f: &OrderedForest, nu: &AtomMeasure, upper: Var, lower: Var) -> Result<FreqExpValue, FnoError> {
        if f.len() != nu.arity() {
            return Err(FnoError::ArityMismatch { forest: f.len(), measure: nu.arity() });
        }
        let full = if f.is_empty() { 0 } else { u64::MAX >> (64 - f.len()) };
        let cuts = antichain_masks(f);
        let mut acc = FreqExpValue::zero();
        for atom in nu.atoms() {
            for &(_, lea) in &cuts {
                let roo = full & !lea;
                let roo_atom = FourierAtom::new(restrict_freq(&atom.freq, roo), atom.amp.clone());
                let left = skeleton_atom(&f.restrict(roo), &roo_atom, upper)?;
                let lea_atom = FourierAtom::new(restrict_freq(&atom.freq, lea), GaussianRational::one());
                let mut right = FreqExpValue::zero();
                for (negative, g) in labelled_antipode(&f.restrict(lea)) {
                    let term = skeleton_atom(&g, &lea_atom, lower)?;
                    right = if negative { &right - &term } else { &right + &term };
                }
                acc = &acc + &(&left * &right);
            }
        }
        Ok(acc)
    }

    /// `J(w) = Σ_σ (φ^upper * (φ^lower∘S̄))_{μ^σ}(T^σ)`.
    pub fn j_sectors(&self, w: &Word, upper: Var, lower: Var) -> Result<FreqExpValue, Error> {
        let split = split_measure_with(&self.path.tensor_measure(w)?, self.policy)?;
        let mut acc = FreqExpValue::zero();
        for (sigma, piece) in split.iter() {
            for (f, c) in self.tables.t_sigma(sigma)?.iter() {
                let term = self.convolved_skeleton(f, piece, upper, lower)?;
                acc = &acc + &term.scaled(c);
            }
        }
        Ok(acc)
    }

    pub fn j_character(self: &Arc<Self>, upper: Var, lower: Var) -> Character<Shuffle, FreqExpValue> {
        let me = self.clone();
        Character::new(self.shuffle_hopf(), move |w| me.j_sectors(w, upper, lower))
    }

    /// Both constructions of `J^{upper,lower}(w)`.
    pub fn rough_path(self: &Arc<Self>, w: &Word, upper: Var, lower: Var) -> Result<RoughPathValue, Error> {
        let j = self.j_sectors(w, upper, lower)?;
        let j_prime = self.j_prime_character(upper, lower)?.value(w)?;
        Ok(RoughPathValue { j, j_prime })
    }

    /// The converse construction: `φ_ν(T^σ) := χ_{ν∘σ⁻¹}`.
    pub fn converse_phi(&self, nu: &AtomMeasure, sigma: &Permutation, v: Var) -> Result<FreqExpValue, Error> {
        self.chi_measure(&nu.compose(&sigma.inverse()), v)
    }

    /// The converse construction on a forest, through `F = Σ_{τ ∈ S_F} T^{τ⁻¹}`.
    pub fn converse_phi_forest(&self, nu: &AtomMeasure, f: &OrderedForest, v: Var) -> Result<FreqExpValue, Error> {
        let mut acc = FreqExpValue::zero();
        for tau in theta(f).basis_elements() {
            acc = &acc + &self.chi_measure(&nu.compose(tau), v)?;
        }
        Ok(acc)
    }
}
