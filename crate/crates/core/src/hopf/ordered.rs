use super::{recursive_antipode, AntipodeMemo, HopfAlgebra};
use crate::algebra::{LinComb, Rational, Tensor};
use crate::trees::{admissible_cuts, enumerate_heap_ordered_decorated, enumerate_ordered, OrderedForest};
use crate::words::Letter;

/// Concatenation: the vertices of `f` come first.
pub fn ho_product(f: &OrderedForest, g: &OrderedForest) -> OrderedForest {
    f.concat(g)
}

/// `Δ(F) = Σ Roo ⊗ Lea` with the induced orders standardized.
pub fn ho_coproduct(f: &OrderedForest) -> LinComb<Tensor<OrderedForest, OrderedForest>> {
    LinComb::normalize(admissible_cuts(f).into_iter().map(|c| (Tensor(c.roo, c.lea), Rational::one())))
}

/// `H_o^d` (all ordered forests) or its Hopf subalgebra `H_ho^d` (heap-ordered ones).
#[derive(Default)]
pub struct OrderedForests {
    pub d: Letter,
    pub heap_only: bool,
    memo: AntipodeMemo<OrderedForest>,
}

impl OrderedForests {
    pub fn ordered(d: Letter) -> Self {
        OrderedForests { d, heap_only: false, memo: AntipodeMemo::default() }
    }

    pub fn heap_ordered(d: Letter) -> Self {
        OrderedForests { d, heap_only: true, memo: AntipodeMemo::default() }
    }
}

impl HopfAlgebra for OrderedForests {
    type Basis = OrderedForest;

    fn name(&self) -> String {
        if self.heap_only {
            format!("H_ho^{}", self.d)
        } else {
            format!("H_o^{}", self.d)
        }
    }

    fn unit(&self) -> OrderedForest {
        OrderedForest::empty()
    }

    fn degree(&self, x: &OrderedForest) -> usize {
        x.len()
    }

    fn product(&self, x: &OrderedForest, y: &OrderedForest) -> LinComb<OrderedForest> {
        LinComb::basis(ho_product(x, y))
    }

    fn coproduct(&self, x: &OrderedForest) -> LinComb<Tensor<OrderedForest, OrderedForest>> {
        ho_coproduct(x)
    }

    fn antipode(&self, x: &OrderedForest) -> LinComb<OrderedForest> {
        recursive_antipode(self, x, &self.memo)
    }

    fn basis(&self, degree: usize) -> Vec<OrderedForest> {
        if self.heap_only {
            enumerate_heap_ordered_decorated(degree, self.d).into_iter().map(|f| f.into_inner()).collect()
        } else {
            enumerate_ordered(degree, self.d)
        }
    }
}
