use std::collections::BTreeSet;

use super::{act_lin, pi_sigma_lin, theta, theta_dec, theta_lin, theta_small, TSigma};
use crate::algebra::{LinComb, Tensor};
use crate::error::{BoundError, Error};
use crate::fqsym::{check_shuffle, fq_coproduct, fq_product, right_factorization, shuffles};
use crate::hopf::ho_coproduct;
use crate::perm::Permutation;
use crate::report::Check;
use crate::trees::{enumerate_heap_ordered, enumerate_heap_ordered_decorated, enumerate_ordered, enumerate_plain, OrderedForest, PlainForest};
use crate::words::{Letter, Word};

fn ho_mul(x: &LinComb<OrderedForest>, y: &LinComb<OrderedForest>) -> LinComb<OrderedForest> {
    x.bilinear(y, |f, g| LinComb::basis(f.concat(g)))
}

fn ck_mul(x: &LinComb<PlainForest>, y: &LinComb<PlainForest>) -> LinComb<PlainForest> {
    x.bilinear(y, |f, g| LinComb::basis(f.union(g)))
}

/// `Θ(F·G) = Θ(F)·Θ(G)` for ordered forests with `|F|+|G| ≤ max_total`.
pub fn check_theta_algebra(max_total: usize) -> Check {
    let mut check = Check::new("theta algebra morphism");
    let by_degree: Vec<Vec<OrderedForest>> = (0..=max_total).map(|n| enumerate_ordered(n, 1)).collect();
    for a in 0..=max_total {
        for b in 0..=(max_total - a) {
            for f in &by_degree[a] {
                let tf = theta(f);
                for g in &by_degree[b] {
                    let lhs = theta(&f.concat(g));
                    let rhs = tf.bilinear(&theta(g), fq_product);
                    check.record(format!("{} · {}", f, g), &lhs, &rhs);
                }
            }
        }
    }
    check
}

/// `(Θ⊗Θ)∘Δ = Δ∘Θ` on ordered forests up to `max_degree`.
pub fn check_theta_coalgebra(max_degree: usize) -> Check {
    let mut check = Check::new("theta coalgebra morphism");
    for n in 0..=max_degree {
        for f in enumerate_ordered(n, 1) {
            let lhs = ho_coproduct(&f).flat_map(|Tensor(a, b)| theta(a).tensor(&theta(b)));
            let rhs = theta(&f).flat_map(fq_coproduct);
            check.record(&f, &lhs, &rhs);
        }
    }
    check
}

/// `Θ(τ.F) = τ ∘ Θ(F)` for every ordered forest and permutation of size `≤ max_degree`.
pub fn check_equivariance(max_degree: usize) -> Check {
    let mut check = Check::new("theta equivariance");
    for n in 0..=max_degree {
        let perms = Permutation::all(n);
        for f in enumerate_ordered(n, 1) {
            let tf = theta(&f);
            for tau in &perms {
                let lhs = theta(&f.act(tau).expect("sizes agree"));
                let rhs = tf.map_basis(|s| tau.compose(s));
                check.record(format!("{} acting on {}", tau, f), &lhs, &rhs);
            }
        }
    }
    check
}

/// `Θ(Θ⁻¹(τ)) = τ` for all `τ ∈ Σ_n`.
pub fn check_theta_inverse(tables: &TSigma, n: usize) -> Result<Check, BoundError> {
    let mut check = Check::new(format!("theta inverse, degree {}", n));
    let table = tables.table(n)?;
    for tau in table.rows() {
        let back = theta_lin(table.theta_inverse(tau));
        check.record(tau, &back, &LinComb::basis(tau.clone()));
    }
    Ok(check)
}

/// The greatest element (lexicographically) of `S_F` determines `F`: the map
/// `F ↦ max S_F` is a bijection `F_ho(n) → Σ_n`, so the matrix of `Θ` is
/// unitriangular once columns are sorted by it.
pub fn check_invertibility_witness(n: usize) -> Check {
    let mut check = Check::new(format!("greatest-element witness, degree {}", n));
    let mut seen = BTreeSet::new();
    for f in enumerate_heap_ordered(n) {
        let top = theta(&f).basis_elements().last().cloned().expect("S_F contains the identity");
        check.cases += 1;
        if !seen.insert(top.clone()) {
            check.fail(&f, &top, "an unused greatest element");
        }
    }
    let total = Permutation::all(n).len();
    if seen.len() != total {
        check.fail(format!("degree {}", n), seen.len(), total);
    }
    check
}

/// One instance of `T^σ T^τ = Σ_{ζ ∈ Sh(k,l)} T^{ζ⁻¹∘(σ⊗τ)}`.
pub fn t_sigma_product_case(tables: &TSigma, sigma: &Permutation, tau: &Permutation) -> Result<Check, BoundError> {
    let mut check = Check::new(format!("T^{} T^{}", sigma, tau));
    let lhs = ho_mul(&tables.t_sigma(sigma)?, &tables.t_sigma(tau)?);
    let st = sigma.tensor(tau);
    let mut rhs = LinComb::zero();
    for zeta in shuffles(sigma.len(), tau.len()) {
        rhs = &rhs + &tables.t_sigma(&zeta.inverse().compose(&st))?;
    }
    check.record(format!("{} ⊗ {}", sigma, tau), &lhs, &rhs);
    Ok(check)
}

/// Product rule for `T^σ`, for all `k + l ≤ max_total`.
pub fn check_t_sigma_product(tables: &TSigma, max_total: usize) -> Result<Check, BoundError> {
    let mut check = Check::new("T^sigma product");
    for k in 0..=max_total {
        for l in 0..=(max_total - k) {
            for sigma in Permutation::all(k) {
                for tau in Permutation::all(l) {
                    check.merge(t_sigma_product_case(tables, &sigma, &tau)?);
                }
            }
        }
    }
    Ok(check)
}

/// `Δ(T^σ) = Σ_k T^{σ₁} ⊗ T^{σ₂}` over the factorizations `σ = (σ₁⊗σ₂)∘ε`.
pub fn check_t_sigma_coproduct(tables: &TSigma, max_degree: usize) -> Result<Check, BoundError> {
    let mut check = Check::new("T^sigma coproduct");
    for n in 0..=max_degree {
        for sigma in Permutation::all(n) {
            let lhs = tables.t_sigma(&sigma)?.flat_map(ho_coproduct);
            let mut rhs = LinComb::zero();
            for k in 0..=n {
                let (s1, s2, _) = right_factorization(&sigma, k);
                rhs = &rhs + &tables.t_sigma(&s1)?.tensor(&tables.t_sigma(&s2)?);
            }
            check.record(&sigma, &lhs, &rhs);
        }
    }
    Ok(check)
}

/// One instance of `ε⁻¹.(T^σ T^τ) = Σ_ζ T^{ζ⁻¹∘(σ⊗τ)∘ε}`; `ε` must be a `(k,l)`-shuffle.
pub fn shuffle_action_case(tables: &TSigma, sigma: &Permutation, tau: &Permutation, eps: &Permutation) -> Result<Check, Error> {
    let k = sigma.len();
    if eps.len() != k + tau.len() {
        return Err(crate::error::TreeError::SizeMismatch { expected: k + tau.len(), found: eps.len() }.into());
    }
    check_shuffle(eps, k)?;
    let mut check = Check::new(format!("shuffle action {} on T^{} T^{}", eps, sigma, tau));
    let lhs = act_lin(&eps.inverse(), &ho_mul(&tables.t_sigma(sigma)?, &tables.t_sigma(tau)?))?;
    let st = sigma.tensor(tau);
    let mut rhs = LinComb::zero();
    for zeta in shuffles(k, tau.len()) {
        rhs = &rhs + &tables.t_sigma(&zeta.inverse().compose(&st).compose(eps))?;
    }
    check.record(format!("({}, {}, {})", sigma, tau, eps), &lhs, &rhs);
    Ok(check)
}

/// Shuffle action on products of `T^σ`, for all `k + l ≤ max_total`.
pub fn check_shuffle_action(tables: &TSigma, max_total: usize) -> Result<Check, Error> {
    let mut check = Check::new("shuffle action on T^sigma T^tau");
    for k in 0..=max_total {
        for l in 0..=(max_total - k) {
            let eps_all = shuffles(k, l);
            for sigma in Permutation::all(k) {
                for tau in Permutation::all(l) {
                    for eps in &eps_all {
                        check.merge(shuffle_action_case(tables, &sigma, &tau, eps)?);
                    }
                }
            }
        }
    }
    Ok(check)
}

fn script_t(tables: &TSigma, sigma: &Permutation, ell: &[Letter]) -> Result<LinComb<PlainForest>, Error> {
    super::t_sigma_decorated(tables, sigma, ell)
}

/// Decorated product identity: for every `ε ∈ Sh(k,l)`,
/// `𝒯^σ_{ℓ₁} 𝒯^τ_{ℓ₂} = Σ_ζ 𝒯^{ζ⁻¹∘(σ⊗τ)∘ε}_{(ℓ₁⊗ℓ₂)∘ε}`.
pub fn check_decorated_t_sigma_product(tables: &TSigma, max_total: usize, d: Letter) -> Result<Check, Error> {
    let mut check = Check::new(format!("decorated T^sigma product, d = {}", d));
    for k in 0..=max_total {
        for l in 0..=(max_total - k) {
            let eps_all = shuffles(k, l);
            let zetas = shuffles(k, l);
            for l1 in Word::all(k, d) {
                for l2 in Word::all(l, d) {
                    let ell = l1.concat(&l2);
                    for sigma in Permutation::all(k) {
                        let a = script_t(tables, &sigma, l1.letters())?;
                        for tau in Permutation::all(l) {
                            let lhs = ck_mul(&a, &script_t(tables, &tau, l2.letters())?);
                            let st = sigma.tensor(&tau);
                            for eps in &eps_all {
                                let ell_eps = eps.permute(ell.letters());
                                let mut rhs = LinComb::zero();
                                for zeta in &zetas {
                                    let idx = zeta.inverse().compose(&st).compose(eps);
                                    rhs = &rhs + &script_t(tables, &idx, &ell_eps)?;
                                }
                                check.record(format!("{}{} ⊗ {}{} with {}", sigma, l1, tau, l2, eps), &lhs, &rhs);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(check)
}

/// Decorated coproduct identity: `Δ(𝒯^σ_ℓ) = Σ_k 𝒯^{σ₁} ⊗ 𝒯^{σ₂}` with the
/// decorations `ℓ ∘ ε⁻¹` split after position `k`, where `σ = (σ₁⊗σ₂)∘ε`.
pub fn check_decorated_t_sigma_coproduct(tables: &TSigma, max_degree: usize, d: Letter) -> Result<Check, Error> {
    let mut check = Check::new(format!("decorated T^sigma coproduct, d = {}", d));
    for n in 0..=max_degree {
        for ell in Word::all(n, d) {
            for sigma in Permutation::all(n) {
                let lhs = script_t(tables, &sigma, ell.letters())?.flat_map(crate::hopf::ck_coproduct);
                let mut rhs = LinComb::zero();
                for k in 0..=n {
                    let (s1, s2, eps) = right_factorization(&sigma, k);
                    let moved = eps.inverse().permute(ell.letters());
                    let left = script_t(tables, &s1, &moved[..k])?;
                    let right = script_t(tables, &s2, &moved[k..])?;
                    rhs = &rhs + &left.tensor(&right);
                }
                check.record(format!("{} decorated {}", sigma, ell), &lhs, &rhs);
            }
        }
    }
    Ok(check)
}

/// `π_Σ ∘ Θ^d = θ^d ∘ π_ho` on every decorated heap-ordered forest up to `degree`.
pub fn verify_square(degree: usize, d: Letter) -> Check {
    let mut check = Check::new(format!("commuting square, degree {}, d = {}", degree, d));
    for n in 0..=degree {
        for f in enumerate_heap_ordered_decorated(n, d) {
            let lhs = pi_sigma_lin(&theta_dec(&f));
            let rhs = theta_small(&f.to_plain());
            check.record(&f, &lhs, &rhs);
        }
    }
    check
}

/// Every heap-order lift of a plain forest has the same image under `π_Σ ∘ Θ^d`.
pub fn check_theta_small_well_defined(max_degree: usize, d: Letter) -> Check {
    let mut check = Check::new(format!("theta^d independent of the lift, d = {}", d));
    for n in 0..=max_degree {
        for f in enumerate_plain(n, d) {
            let images = super::theta_small_via_lifts(&f);
            let first = images[0].clone();
            for img in &images {
                check.record(&f, img, &first);
            }
        }
    }
    check
}
