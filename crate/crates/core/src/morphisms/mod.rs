//! The morphism `Θ : H_o → FQSym`, its inverse on heap-ordered forests, the
//! forgetful projections and the commutative square they form with `θ^d`.

mod checks;
mod matrix;

use crate::algebra::{LinComb, Rational};
use crate::error::TreeError;
use crate::hopf::sh_product;
use crate::perm::{DecoratedPermutation, Permutation};
use crate::trees::{heap_order_lifts, linear_extensions, OrderedForest, PlainForest, PlainTree};
use crate::words::{Letter, Word};

pub use checks::{
    check_equivariance, check_invertibility_witness, check_t_sigma_coproduct, check_t_sigma_product, check_decorated_t_sigma_coproduct,
    check_decorated_t_sigma_product, check_shuffle_action, check_theta_algebra, check_theta_coalgebra, check_theta_inverse,
    check_theta_small_well_defined, t_sigma_product_case, shuffle_action_case, verify_square,
};
pub use matrix::{TSigma, ThetaMatrix, DEFAULT_BOUND};

/// `Θ(F) = Σ_{σ ∈ S_F} σ`.
pub fn theta(f: &OrderedForest) -> LinComb<Permutation> {
    LinComb::normalize(linear_extensions(f).into_iter().map(|s| (s, Rational::one())))
}

pub fn theta_lin(x: &LinComb<OrderedForest>) -> LinComb<Permutation> {
    x.flat_map(theta)
}

/// `Θ^d(F) = Σ_{σ ∈ S_F} (σ, ℓ)` where `ℓ` is the decoration of `F`.
pub fn theta_dec(f: &OrderedForest) -> LinComb<DecoratedPermutation> {
    let ell = f.decorations().to_vec();
    theta(f).map_basis(|s| DecoratedPermutation { perm: s.clone(), ell: ell.clone() })
}

/// Forgets the vertex order.
pub fn pi_ho(f: &OrderedForest) -> PlainForest {
    f.to_plain()
}

pub fn pi_ho_lin(x: &LinComb<OrderedForest>) -> LinComb<PlainForest> {
    x.map_basis(pi_ho)
}

/// Keeps the lower row of a decorated permutation.
pub fn pi_sigma(p: &DecoratedPermutation) -> Word {
    p.lower_row()
}

pub fn pi_sigma_lin(x: &LinComb<DecoratedPermutation>) -> LinComb<Word> {
    x.map_basis(pi_sigma)
}

fn shuffle_all(parts: impl IntoIterator<Item = LinComb<Word>>) -> LinComb<Word> {
    parts
        .into_iter()
        .fold(LinComb::basis(Word::empty()), |acc, p| acc.bilinear(&p, sh_product))
}

fn theta_small_tree(t: &PlainTree) -> LinComb<Word> {
    let below = shuffle_all(t.children().iter().map(theta_small_tree));
    below.map_basis(|w| Word::new([t.dec()]).concat(w))
}

/// `θ^d`: a tree goes to its root letter followed by the shuffle of the
/// images of its branches; forests go to the shuffle of their trees.
pub fn theta_small(f: &PlainForest) -> LinComb<Word> {
    shuffle_all(f.trees().iter().map(theta_small_tree))
}

pub fn theta_small_lin(x: &LinComb<PlainForest>) -> LinComb<Word> {
    x.flat_map(theta_small)
}

/// `π_Σ ∘ Θ^d` evaluated on every heap-order lift of `f`.
pub fn theta_small_via_lifts(f: &PlainForest) -> Vec<LinComb<Word>> {
    heap_order_lifts(f).iter().map(|h| pi_sigma_lin(&theta_dec(h))).collect()
}

/// Decorates every forest of `x`: vertex `i` receives `ell[i-1]`.
pub fn decorate(x: &LinComb<OrderedForest>, ell: &[Letter]) -> Result<LinComb<OrderedForest>, TreeError> {
    let mut out = LinComb::zero();
    for (f, c) in x.iter() {
        out.add_term(f.with_decorations(ell.to_vec())?, c.clone());
    }
    Ok(out)
}

/// `σ.x` extended linearly.
pub fn act_lin(sigma: &Permutation, x: &LinComb<OrderedForest>) -> Result<LinComb<OrderedForest>, TreeError> {
    let mut out = LinComb::zero();
    for (f, c) in x.iter() {
        out.add_term(f.act(sigma)?, c.clone());
    }
    Ok(out)
}

/// `𝒯^σ = π_ho(T^σ, ℓ)`.
pub fn t_sigma_decorated(
    tables: &TSigma,
    sigma: &Permutation,
    ell: &[Letter],
) -> Result<LinComb<PlainForest>, crate::error::Error> {
    if ell.len() != sigma.len() {
        return Err(TreeError::SizeMismatch { expected: sigma.len(), found: ell.len() }.into());
    }
    let t = tables.t_sigma(sigma)?;
    Ok(pi_ho_lin(&decorate(&t, ell)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn of(s: &str) -> OrderedForest {
        s.parse().unwrap()
    }

    fn pf(s: &str) -> PlainForest {
        s.parse().unwrap()
    }

    #[test]
    fn theta_small_examples() {
        assert_eq!(theta_small(&pf("1[2,3]")).to_string(), "(123)+(132)");
        assert_eq!(theta_small(&pf("1[2]|3")).to_string(), "(123)+(132)+(312)");
        assert_eq!(theta_small(&PlainForest::empty()).to_string(), "1");
    }

    #[test]
    fn t21() {
        let tables = TSigma::new(3);
        let t = tables.t_sigma(&"21".parse().unwrap()).unwrap();
        let want = LinComb::normalize([(of("1|2"), Rational::one()), (of("1[2]"), Rational::from(-1))]);
        assert_eq!(t, want);
    }

    #[test]
    fn pi_sigma_keeps_lower_row() {
        let p: DecoratedPermutation = "213;bac".parse().unwrap();
        assert_eq!(pi_sigma(&p), "bac".parse().unwrap());
    }
}
