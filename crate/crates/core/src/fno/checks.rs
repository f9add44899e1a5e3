use crate::algebra::{FreqExpValue, GaussianRational, Var};
use crate::error::{Error, FnoError};
use crate::fqsym::shuffles;
use crate::morphisms::theta;
use crate::perm::Permutation;
use crate::report::Check;
use crate::trees::{enumerate_heap_ordered, OrderedForest};
use crate::words::Word;

use super::measure::{split_measure_with, AtomMeasure, FourierAtom, TiePolicy};
use super::rough::Fno;
use super::skeleton::{skeleton_closed_form, skeleton_atom, skeleton_tree};

/// `Σ_σ μ^σ∘σ⁻¹ = μ`, and every piece sorted by magnitude.
pub fn check_reassembly(mu: &AtomMeasure, policy: TiePolicy) -> Result<Check, FnoError> {
    let mut check = Check::new("measure reassembly");
    let split = split_measure_with(mu, policy)?;
    check.record(mu, &split.reassemble(), mu);
    for (sigma, piece) in split.iter() {
        for atom in piece.atoms() {
            let sorted = atom.freq.windows(2).all(|p| p[0].abs() <= p[1].abs());
            check.record(format!("{} in sector {}", piece, sigma), &sorted, &true);
        }
    }
    Ok(check)
}

/// `(μ∘ε)^σ = μ^{ε∘σ}` for all `ε, σ`.
pub fn check_sector_relabelling(mu: &AtomMeasure, policy: TiePolicy) -> Result<Check, FnoError> {
    let mut check = Check::new("sector relabelling");
    let n = mu.arity();
    let split = split_measure_with(mu, policy)?;
    let perms = Permutation::all(n);
    for eps in &perms {
        let moved = split_measure_with(&mu.compose(eps), policy)?;
        for sigma in &perms {
            check.record(format!("{} with ε = {}, σ = {}", mu, eps, sigma), &moved.get(sigma), &split.get(&eps.compose(sigma)));
        }
    }
    Ok(check)
}

/// `μ₁^{σ₁} ⊗ μ₂^{σ₂} = Σ_{ε ∈ Sh(k,l)} (μ₁⊗μ₂)^{(σ₁⊗σ₂)∘ε} ∘ ε⁻¹`.
pub fn check_product_splitting(mu1: &AtomMeasure, mu2: &AtomMeasure, policy: TiePolicy) -> Result<Check, FnoError> {
    let mut check = Check::new("product splitting");
    let (k, l) = (mu1.arity(), mu2.arity());
    let (s1, s2) = (split_measure_with(mu1, policy)?, split_measure_with(mu2, policy)?);
    let joint = split_measure_with(&mu1.tensor(mu2), policy)?;
    let eps_all = shuffles(k, l);
    for sigma1 in Permutation::all(k) {
        for sigma2 in Permutation::all(l) {
            let lhs = s1.get(&sigma1).tensor(&s2.get(&sigma2));
            let st = sigma1.tensor(&sigma2);
            let mut rhs = AtomMeasure::zero(k + l);
            for eps in &eps_all {
                rhs = &rhs + &joint.get(&st.compose(eps)).compose(&eps.inverse());
            }
            check.record(format!("{} ⊗ {} in sectors {} ⊗ {}", mu1, mu2, sigma1, sigma2), &lhs, &rhs);
        }
    }
    Ok(check)
}

/// `φ_{μ₁}(F₁) φ_{μ₂}(F₂) = φ_{μ₁⊗μ₂}(F₁·F₂)`.
pub fn phi_multiplicativity_check(
    f1: &OrderedForest,
    f2: &OrderedForest,
    mu1: &AtomMeasure,
    mu2: &AtomMeasure,
) -> Result<Check, FnoError> {
    let mut check = Check::new("skeleton multiplicativity");
    let lhs = &skeleton_tree(f1, mu1, Var::T)? * &skeleton_tree(f2, mu2, Var::T)?;
    let rhs = skeleton_tree(&f1.concat(f2), &mu1.tensor(mu2), Var::T)?;
    check.record(format!("{} · {}", f1, f2), &lhs, &rhs);
    Ok(check)
}

/// `φ_μ(F) = φ_{μ∘σ}(σ⁻¹.F)` for every `σ ∈ S_F`.
pub fn check_symmetry_invariance(f: &OrderedForest, mu: &AtomMeasure) -> Result<Check, Error> {
    let mut check = Check::new("skeleton symmetry invariance");
    let base = skeleton_tree(f, mu, Var::T)?;
    for sigma in theta(f).basis_elements() {
        let moved = f.act(&sigma.inverse())?;
        check.record(format!("{} under {}", f, sigma), &skeleton_tree(&moved, &mu.compose(sigma), Var::T)?, &base);
    }
    Ok(check)
}

fn leading_coeff(v: &FreqExpValue) -> GaussianRational {
    v.terms().next().map(|(_, c)| c.clone()).unwrap_or_default()
}

/// The recursion and the closed form differ by one constant per degree; the
/// constant found on the first forest is returned with the check.
pub fn check_closed_form_constant(freq: &[crate::algebra::Rational]) -> Result<(Check, GaussianRational), FnoError> {
    let n = freq.len();
    let mut check = Check::new(format!("closed form ratio, degree {}", n));
    let atom = FourierAtom::new(freq.to_vec(), GaussianRational::real(crate::algebra::Rational::one()));
    let mu = AtomMeasure::dirac(atom.clone())?;
    let mut ratio: Option<GaussianRational> = None;
    for f in enumerate_heap_ordered(n) {
        let rec = leading_coeff(&skeleton_atom(&f, &atom, Var::T)?);
        let closed = leading_coeff(&skeleton_closed_form(&f, &mu, Var::T)?);
        let r = &rec * &closed.recip().expect("closed form is nonzero");
        let first = ratio.get_or_insert_with(|| r.clone()).clone();
        check.record(&f, &r, &first);
    }
    Ok((check, ratio.unwrap_or_default()))
}

fn words_up_to(d: usize, max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|n| Word::all(n, d as u32)).collect()
}

/// `J = J'` on every word up to `max_len`.
pub fn check_j_equals_j_prime(fno: &std::sync::Arc<Fno>, max_len: usize) -> Result<Check, Error> {
    let mut check = Check::new("J = J'");
    let jp = fno.j_prime_character(Var::T, Var::S)?;
    for w in words_up_to(fno.path().d(), max_len) {
        check.record(&w, &fno.j_sectors(&w, Var::T, Var::S)?, &jp.value(&w)?);
    }
    Ok(check)
}

/// `J^{ts} = J^{tu} * J^{us}` with three symbolic times.
pub fn check_chen(fno: &std::sync::Arc<Fno>, max_len: usize) -> Result<Check, Error> {
    let mut check = Check::new("Chen identity for J");
    let ts = fno.j_character(Var::T, Var::S);
    let split = fno.j_character(Var::T, Var::U).convolve(&fno.j_character(Var::U, Var::S))?;
    for w in words_up_to(fno.path().d(), max_len) {
        check.record(&w, &ts.value(&w)?, &split.value(&w)?);
    }
    Ok(check)
}

/// The converse construction satisfies the multiplicative property on pairs of
/// sector pieces; `(w1, w2)` fix the letters of the two measures.
pub fn check_converse(fno: &Fno, w1: &Word, w2: &Word) -> Result<Check, Error> {
    let mut check = Check::new(format!("converse multiplicativity {} · {}", w1, w2));
    let (k, l) = (w1.len(), w2.len());
    let s1 = split_measure_with(&fno.path().tensor_measure(w1)?, fno.policy())?;
    let s2 = split_measure_with(&fno.path().tensor_measure(w2)?, fno.policy())?;
    let tables = fno.tables();
    for (sigma1, p1) in s1.iter() {
        for (sigma2, p2) in s2.iter() {
            let lhs = &fno.converse_phi(p1, sigma1, Var::T)? * &fno.converse_phi(p2, sigma2, Var::T)?;
            let nu = p1.tensor(p2);
            let st = sigma1.tensor(sigma2);
            let mut via_products = FreqExpValue::zero();
            for zeta in shuffles(k, l) {
                via_products = &via_products + &fno.converse_phi(&nu, &zeta.inverse().compose(&st), Var::T)?;
            }
            let product = tables
                .t_sigma(sigma1)?
                .bilinear(&tables.t_sigma(sigma2)?, |a, b| crate::algebra::LinComb::basis(a.concat(b)));
            let mut via_forests = FreqExpValue::zero();
            for (f, c) in product.iter() {
                via_forests = &via_forests + &crate::algebra::Ring::scaled(&fno.converse_phi_forest(&nu, f, Var::T)?, c);
            }
            let label = format!("sectors {} ⊗ {}", sigma1, sigma2);
            check.record(&label, &lhs, &via_products);
            check.record(&label, &lhs, &via_forests);
        }
    }
    Ok(check)
}
