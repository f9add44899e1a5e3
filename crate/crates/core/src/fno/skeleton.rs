use crate::algebra::{FreqExpValue, GaussianRational, LinComb, Rational, Var};
use crate::error::FnoError;
use crate::trees::OrderedForest;

use super::measure::{render_freq, AtomMeasure, FourierAtom};

/// `Ξ_v = ξ_v + Σ_{j ↠ v} ξ_j` for every vertex.
fn subtree_sums(f: &OrderedForest, freq: &[Rational]) -> Vec<Rational> {
    let mut sums = freq.to_vec();
    for (j, anc) in f.ancestor_masks().into_iter().enumerate() {
        for (v, sum) in sums.iter_mut().enumerate() {
            if anc >> v & 1 == 1 {
                *sum = &*sum + &freq[j];
            }
        }
    }
    sums
}

fn check_arity(f: &OrderedForest, mu: &AtomMeasure) -> Result<(), FnoError> {
    if f.len() != mu.arity() {
        return Err(FnoError::ArityMismatch { forest: f.len(), measure: mu.arity() });
    }
    Ok(())
}

/// The skeleton integral of one atom on `f`, coordinate `j` attached to vertex `j`.
pub fn skeleton_atom(f: &OrderedForest, atom: &FourierAtom, v: Var) -> Result<FreqExpValue, FnoError> {
    if f.len() != atom.arity() {
        return Err(FnoError::ArityMismatch { forest: f.len(), measure: atom.arity() });
    }
    // Each vertex contributes e^{ixΞ}/(iΞ); the exponentials telescope to e^{iv Σξ}.
    let mut denom = Rational::one();
    for (i, s) in subtree_sums(f, &atom.freq).iter().enumerate() {
        if s.is_zero() {
            return Err(FnoError::Singular { vertex: i + 1, freqs: render_freq(&atom.freq) });
        }
        denom = &denom * s;
    }
    let n = f.len() as i64;
    let total: Rational = atom.freq.iter().cloned().sum();
    let coeff = &(&atom.amp * &GaussianRational::i_pow(-n)) * &GaussianRational::real(denom.recip().expect("nonzero"));
    Ok(FreqExpValue::exp(v, total, coeff))
}

/// `φ^v_μ(F)`: the skeleton integral `∫^v … ∫^{x_{j⁻}}` of an atom measure on a forest.
pub fn skeleton_tree(f: &OrderedForest, mu: &AtomMeasure, v: Var) -> Result<FreqExpValue, FnoError> {
    check_arity(f, mu)?;
    let mut acc = FreqExpValue::zero();
    for atom in mu.atoms() {
        acc = &acc + &skeleton_atom(f, &atom, v)?;
    }
    Ok(acc)
}

pub fn skeleton_lin(x: &LinComb<OrderedForest>, mu: &AtomMeasure, v: Var) -> Result<FreqExpValue, FnoError> {
    let mut acc = FreqExpValue::zero();
    for (f, c) in x.iter() {
        acc = &acc + &skeleton_tree(f, mu, v)?.scale(&GaussianRational::real(c.clone()));
    }
    Ok(acc)
}

/// The closed form `amp · e^{iv(ξ₁+…+ξₙ)} / Π_i [ξ_i + Σ_{j↠i} ξ_j]`, with
/// descendants found by walking parent links.
pub fn skeleton_closed_form(f: &OrderedForest, mu: &AtomMeasure, v: Var) -> Result<FreqExpValue, FnoError> {
    check_arity(f, mu)?;
    let n = f.len();
    let mut acc = FreqExpValue::zero();
    for atom in mu.atoms() {
        let mut denom = Rational::one();
        for i in 1..=n {
            let mut s = atom.freq[i - 1].clone();
            for j in (1..=n).filter(|&j| f.descends(j, i)) {
                s = &s + &atom.freq[j - 1];
            }
            if s.is_zero() {
                return Err(FnoError::Singular { vertex: i, freqs: render_freq(&atom.freq) });
            }
            denom = &denom * &s;
        }
        let total: Rational = atom.freq.iter().cloned().sum();
        let coeff = &atom.amp * &GaussianRational::real(denom.recip().expect("nonzero"));
        acc = &acc + &FreqExpValue::exp(v, total, coeff);
    }
    Ok(acc)
}

/// The labelled antipode of `H`: every term keeps the vertex set of `f` and
/// removes a subset `C` of its edges, with sign `(-1)^{#trees}`.
pub fn labelled_antipode(f: &OrderedForest) -> Vec<(bool, OrderedForest)> {
    let n = f.len();
    let edges: Vec<usize> = (1..=n).filter(|&i| f.parent(i) != 0).collect();
    let roots = n - edges.len();
    let mut out = Vec::with_capacity(1 << edges.len());
    for cut in 0u64..(1 << edges.len()) {
        let mut parent = f.parents().to_vec();
        for (k, &i) in edges.iter().enumerate() {
            if cut >> k & 1 == 1 {
                parent[i - 1] = 0;
            }
        }
        let pieces = roots + cut.count_ones() as usize;
        let g = OrderedForest::new(parent, f.decorations().to_vec()).expect("subforest of a valid forest");
        out.push((pieces % 2 == 1, g));
    }
    out
}
