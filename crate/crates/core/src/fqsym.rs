//! Free quasi-symmetric functions: products by shuffles, coproducts by
//! standardized deconcatenation, and their decorated versions.

use crate::algebra::{LinComb, Rational, Tensor};
use crate::error::TreeError;
use crate::perm::{DecoratedPermutation, Permutation};

/// `Sh(k, l)` in lexicographic order: words interleaving `1..=k` with `k+1..=k+l`.
pub fn shuffles(k: usize, l: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k + l);
    fn rec(a: usize, b: usize, k: usize, l: usize, cur: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if a == k && b == l {
            out.push(Permutation::from_vec_unchecked(cur.clone()));
            return;
        }
        if a < k {
            cur.push(a + 1);
            rec(a + 1, b, k, l, cur, out);
            cur.pop();
        }
        if b < l {
            cur.push(k + b + 1);
            rec(a, b + 1, k, l, cur, out);
            cur.pop();
        }
    }
    rec(0, 0, k, l, &mut cur, &mut out);
    out
}

/// `σ·τ = Σ_{ε ∈ Sh(k,l)} (σ ⊗ τ) ∘ ε`.
pub fn fq_product(sigma: &Permutation, tau: &Permutation) -> LinComb<Permutation> {
    let st = sigma.tensor(tau);
    LinComb::normalize(shuffles(sigma.len(), tau.len()).into_iter().map(|e| (st.compose(&e), Rational::one())))
}

/// Cut the word after every position and standardize both halves.
pub fn fq_coproduct(sigma: &Permutation) -> LinComb<Tensor<Permutation, Permutation>> {
    let w = sigma.word();
    LinComb::normalize((0..=w.len()).map(|k| {
        let t = Tensor(Permutation::standardize(&w[..k]), Permutation::standardize(&w[k..]));
        (t, Rational::one())
    }))
}

/// The triple `(σ₁, σ₂, ζ)` with `σ = ζ⁻¹ ∘ (σ₁ ⊗ σ₂)` and `ζ ∈ Sh(k, n-k)`.
pub fn unique_factorization(sigma: &Permutation, k: usize) -> (Permutation, Permutation, Permutation) {
    let w = sigma.word();
    let mut left: Vec<usize> = w[..k].to_vec();
    let mut right: Vec<usize> = w[k..].to_vec();
    let s1 = Permutation::standardize(&left);
    let s2 = Permutation::standardize(&right);
    left.sort_unstable();
    right.sort_unstable();
    left.extend(right);
    let zeta = Permutation::from_vec_unchecked(left).inverse();
    (s1, s2, zeta)
}

/// The triple `(σ₁, σ₂, ε)` with `σ = (σ₁ ⊗ σ₂) ∘ ε` and `ε ∈ Sh(k, n-k)`.
pub fn right_factorization(sigma: &Permutation, k: usize) -> (Permutation, Permutation, Permutation) {
    let (t1, t2, eps) = unique_factorization(&sigma.inverse(), k);
    (t1.inverse(), t2.inverse(), eps)
}

/// `(σ,ℓ)·(τ,ℓ′) = Σ_ε ((σ⊗τ)∘ε, ℓ⊗ℓ′)`; decorations follow the values.
pub fn fq_product_dec(a: &DecoratedPermutation, b: &DecoratedPermutation) -> LinComb<DecoratedPermutation> {
    let mut ell = a.ell.clone();
    ell.extend_from_slice(&b.ell);
    fq_product(&a.perm, &b.perm).map_basis(|p| DecoratedPermutation { perm: p.clone(), ell: ell.clone() })
}

/// Deconcatenation of both rows; the lower letters stay with their positions.
pub fn fq_coproduct_dec(a: &DecoratedPermutation) -> LinComb<Tensor<DecoratedPermutation, DecoratedPermutation>> {
    let w = a.perm.word();
    let lower = a.lower_row();
    let lower = lower.letters();
    LinComb::normalize((0..=w.len()).map(|k| {
        let left = DecoratedPermutation::from_rows(Permutation::standardize(&w[..k]), &lower[..k]).expect("aligned");
        let right = DecoratedPermutation::from_rows(Permutation::standardize(&w[k..]), &lower[k..]).expect("aligned");
        (Tensor(left, right), Rational::one())
    }))
}

/// Parses `ε` and checks that it is a `(k, l)`-shuffle.
pub fn check_shuffle(eps: &Permutation, k: usize) -> Result<(), TreeError> {
    if eps.is_shuffle(k) {
        Ok(())
    } else {
        Err(TreeError::NotShuffle(eps.to_string()))
    }
}
