use std::fmt;

use super::HopfAlgebra;
use crate::algebra::{LinComb, Tensor};
use crate::report::Check;
use crate::trees::{enumerate_heap_ordered_decorated, OrderedForest};
use crate::words::Letter;

/// Basis element of a threefold tensor power.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple<B>(pub B, pub B, pub B);

impl<B: fmt::Display> fmt::Display for Triple<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗{}⊗{}", self.0, self.1, self.2)
    }
}

/// `(Δ ⊗ id)Δ = (id ⊗ Δ)Δ` on every basis element up to `max_degree`.
pub fn check_coassociativity<H: HopfAlgebra>(h: &H, max_degree: usize) -> Check {
    let mut check = Check::new(format!("{} coassociativity", h.name()));
    for x in h.basis_up_to(max_degree) {
        let dx = h.coproduct(&x);
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for (Tensor(a, b), c) in dx.iter() {
            for (Tensor(a1, a2), c2) in h.coproduct(a).iter() {
                left.add_term(Triple(a1.clone(), a2.clone(), b.clone()), c * c2);
            }
            for (Tensor(b1, b2), c2) in h.coproduct(b).iter() {
                right.add_term(Triple(a.clone(), b1.clone(), b2.clone()), c * c2);
            }
        }
        check.record(&x, &left, &right);
    }
    check
}

/// `(ε ⊗ id)Δ = id = (id ⊗ ε)Δ`.
pub fn check_counit<H: HopfAlgebra>(h: &H, max_degree: usize) -> Check {
    let mut check = Check::new(format!("{} counit", h.name()));
    for x in h.basis_up_to(max_degree) {
        let dx = h.coproduct(&x);
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for (Tensor(a, b), c) in dx.iter() {
            left.add_term(b.clone(), c * &h.counit(a));
            right.add_term(a.clone(), c * &h.counit(b));
        }
        let id = LinComb::basis(x.clone());
        check.record(&x, &left, &id);
        check.record(&x, &right, &id);
    }
    check
}

fn tensor_product<H: HopfAlgebra>(
    h: &H,
    p: &LinComb<Tensor<H::Basis, H::Basis>>,
    q: &LinComb<Tensor<H::Basis, H::Basis>>,
) -> LinComb<Tensor<H::Basis, H::Basis>> {
    p.bilinear(q, |Tensor(a1, b1), Tensor(a2, b2)| h.product(a1, a2).tensor(&h.product(b1, b2)))
}

/// `Δ(x·y) = Δ(x)·Δ(y)` on basis pairs of positive degree with `|x|+|y| ≤ max_degree`.
pub fn check_multiplicativity<H: HopfAlgebra>(h: &H, max_degree: usize) -> Check {
    let mut check = Check::new(format!("{} coproduct multiplicativity", h.name()));
    let by_degree: Vec<Vec<H::Basis>> = (0..=max_degree).map(|n| h.basis(n)).collect();
    for dx in 1..max_degree {
        for dy in 1..=(max_degree - dx) {
            for x in &by_degree[dx] {
                let cx = h.coproduct(x);
                for y in &by_degree[dy] {
                    let lhs = h.delta(&h.product(x, y));
                    let rhs = tensor_product(h, &cx, &h.coproduct(y));
                    check.record(format!("{} · {}", x, y), &lhs, &rhs);
                }
            }
        }
    }
    check
}

/// `m ∘ (S ⊗ id) ∘ Δ = ηε = m ∘ (id ⊗ S) ∘ Δ`.
pub fn check_antipode<H: HopfAlgebra>(h: &H, max_degree: usize) -> Check {
    let mut check = Check::new(format!("{} antipode", h.name()));
    for x in h.basis_up_to(max_degree) {
        let dx = h.coproduct(&x);
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for (Tensor(a, b), c) in dx.iter() {
            let bb = LinComb::basis(b.clone());
            let aa = LinComb::basis(a.clone());
            left.add_scaled(&h.mul(&h.antipode(a), &bb), c);
            right.add_scaled(&h.mul(&aa, &h.antipode(b)), c);
        }
        let want = LinComb::basis(h.unit()).scale(&h.counit(&x));
        check.record(format!("S on {}", x), &left, &want);
        check.record(format!("S on {}", x), &right, &want);
    }
    check
}

/// Counit, coassociativity, multiplicativity and antipode checks.
pub fn check_hopf_axioms<H: HopfAlgebra>(h: &H, max_degree: usize) -> Vec<Check> {
    vec![
        check_counit(h, max_degree),
        check_coassociativity(h, max_degree),
        check_multiplicativity(h, max_degree),
        check_antipode(h, max_degree),
    ]
}

/// Products and both legs of coproducts of heap-ordered forests are heap-ordered.
pub fn check_heap_closure(max_degree: usize, d: Letter) -> Check {
    let mut check = Check::new(format!("H_ho^{} closure", d));
    let by_degree: Vec<Vec<OrderedForest>> = (0..=max_degree)
        .map(|n| enumerate_heap_ordered_decorated(n, d).into_iter().map(|f| f.into_inner()).collect())
        .collect();
    for (n, fs) in by_degree.iter().enumerate() {
        for f in fs {
            for (Tensor(a, b), _) in super::ho_coproduct(f).iter() {
                check.cases += 1;
                if !a.is_heap_ordered() || !b.is_heap_ordered() {
                    check.fail(f, format!("{}⊗{}", a, b), "heap-ordered legs");
                }
            }
            for g in by_degree[..=(max_degree - n)].iter().flatten() {
                let p = f.concat(g);
                check.cases += 1;
                if !p.is_heap_ordered() {
                    check.fail(format!("{} · {}", f, g), &p, "heap-ordered product");
                }
            }
        }
    }
    check
}
