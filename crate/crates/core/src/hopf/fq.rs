use super::{recursive_antipode, AntipodeMemo, HopfAlgebra};
use crate::algebra::{LinComb, Tensor};
use crate::fqsym::{fq_coproduct_dec, fq_product_dec};
use crate::perm::{DecoratedPermutation, Permutation};
use crate::words::{Letter, Word};

/// `FQSym^d` on decorated permutations; `d = 1` is plain FQSym.
#[derive(Default)]
pub struct Fqsym {
    pub d: Letter,
    memo: AntipodeMemo<DecoratedPermutation>,
}

impl Fqsym {
    pub fn new(d: Letter) -> Self {
        Fqsym { d, memo: AntipodeMemo::default() }
    }
}

impl HopfAlgebra for Fqsym {
    type Basis = DecoratedPermutation;

    fn name(&self) -> String {
        format!("FQSym^{}", self.d)
    }

    fn unit(&self) -> DecoratedPermutation {
        DecoratedPermutation::default()
    }

    fn degree(&self, x: &DecoratedPermutation) -> usize {
        x.len()
    }

    fn product(&self, x: &DecoratedPermutation, y: &DecoratedPermutation) -> LinComb<DecoratedPermutation> {
        fq_product_dec(x, y)
    }

    fn coproduct(&self, x: &DecoratedPermutation) -> LinComb<Tensor<DecoratedPermutation, DecoratedPermutation>> {
        fq_coproduct_dec(x)
    }

    fn antipode(&self, x: &DecoratedPermutation) -> LinComb<DecoratedPermutation> {
        recursive_antipode(self, x, &self.memo)
    }

    fn basis(&self, degree: usize) -> Vec<DecoratedPermutation> {
        let words = Word::all(degree, self.d);
        Permutation::all(degree)
            .into_iter()
            .flat_map(|p| words.iter().map(move |w| DecoratedPermutation { perm: p.clone(), ell: w.0.clone() }))
            .collect()
    }
}
