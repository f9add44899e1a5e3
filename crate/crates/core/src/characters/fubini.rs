use crate::algebra::{LinComb, Rational};
use crate::perm::Permutation;
use crate::trees::{OrderedForest, PlainForest};
use crate::words::Letter;

/// `𝒯^σ` decorated by `ℓ` (vertex `j` carries `ℓ(j)`), recomputed by Fubini.
///
/// The chain `s < x_{σ⁻¹(n)} < … < x_{σ⁻¹(1)} < t` is re-integrated in the
/// vertex order `x₁, x₂, …`. Vertex `j` then runs between the closest
/// already-integrated chain neighbours; an interval `(x_i, x_k)` splits as
/// `∫_s^{x_k} − ∫_s^{x_i}`, and every resulting term is a forest where `j`
/// hangs from the chosen upper variable (a root when that is `t`).
pub fn fubini_tsigma(sigma: &Permutation, ell: &[Letter]) -> LinComb<PlainForest> {
    assert_eq!(sigma.len(), ell.len(), "one decoration per vertex");
    let n = sigma.len();
    let pos: Vec<usize> = (1..=n).map(|j| sigma.apply(j)).collect();
    let mut terms: Vec<(Vec<usize>, bool)> = vec![(Vec::with_capacity(n), false)];
    for j in 1..=n {
        let pj = pos[j - 1];
        let upper = (1..j).filter(|&i| pos[i - 1] < pj).max_by_key(|&i| pos[i - 1]).unwrap_or(0);
        let lower = (1..j).filter(|&i| pos[i - 1] > pj).min_by_key(|&i| pos[i - 1]);
        let mut next = Vec::with_capacity(terms.len() * 2);
        for (parents, negative) in terms {
            if let Some(l) = lower {
                let mut p = parents.clone();
                p.push(l);
                next.push((p, !negative));
            }
            let mut p = parents;
            p.push(upper);
            next.push((p, negative));
        }
        terms = next;
    }
    LinComb::normalize(terms.into_iter().map(|(parents, negative)| {
        let f = OrderedForest::new(parents, ell.to_vec()).expect("parents precede children");
        (f.to_plain(), if negative { -Rational::one() } else { Rational::one() })
    }))
}
