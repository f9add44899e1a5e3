use super::{AntipodeMemo, HopfAlgebra};
use crate::algebra::{LinComb, Rational, Tensor};
use crate::trees::{enumerate_plain, plain_cuts, PlainForest};
use crate::words::Letter;

/// Disjoint union.
pub fn ck_product(f: &PlainForest, g: &PlainForest) -> PlainForest {
    f.union(g)
}

/// `Δ(F) = Σ Roo ⊗ Lea` over admissible cuts.
pub fn ck_coproduct(f: &PlainForest) -> LinComb<Tensor<PlainForest, PlainForest>> {
    LinComb::normalize(plain_cuts(f).into_iter().map(|c| (Tensor(c.roo, c.lea), Rational::one())))
}

fn ck_antipode_with(f: &PlainForest, memo: &AntipodeMemo<PlainForest>) -> LinComb<PlainForest> {
    if f.is_empty() {
        return LinComb::basis(f.clone());
    }
    if let Some(s) = memo.get(f) {
        return s;
    }
    // S(F) = -F - Σ Roo · S(Lea) over cuts with both parts nonempty.
    let mut out = LinComb::basis(f.clone()).scale(&Rational::from(-1));
    for (Tensor(roo, lea), c) in ck_coproduct(f).iter() {
        if roo.is_empty() || lea.is_empty() {
            continue;
        }
        let s = ck_antipode_with(lea, memo);
        out.add_scaled(&s.map_basis(|g| roo.union(g)), &-c);
    }
    memo.insert(f.clone(), out.clone());
    out
}

/// Antipode by recursion over proper cuts.
pub fn ck_antipode(f: &PlainForest) -> LinComb<PlainForest> {
    ck_antipode_with(f, &AntipodeMemo::default())
}

/// Connes–Kreimer Hopf algebra of `d`-decorated rooted forests.
#[derive(Default)]
pub struct ConnesKreimer {
    pub d: Letter,
    memo: AntipodeMemo<PlainForest>,
}

impl ConnesKreimer {
    pub fn new(d: Letter) -> Self {
        ConnesKreimer { d, memo: AntipodeMemo::default() }
    }
}

impl HopfAlgebra for ConnesKreimer {
    type Basis = PlainForest;

    fn name(&self) -> String {
        format!("H^{}", self.d)
    }

    fn unit(&self) -> PlainForest {
        PlainForest::empty()
    }

    fn degree(&self, x: &PlainForest) -> usize {
        x.size()
    }

    fn product(&self, x: &PlainForest, y: &PlainForest) -> LinComb<PlainForest> {
        LinComb::basis(ck_product(x, y))
    }

    fn coproduct(&self, x: &PlainForest) -> LinComb<Tensor<PlainForest, PlainForest>> {
        ck_coproduct(x)
    }

    fn antipode(&self, x: &PlainForest) -> LinComb<PlainForest> {
        ck_antipode_with(x, &self.memo)
    }

    fn basis(&self, degree: usize) -> Vec<PlainForest> {
        enumerate_plain(degree, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pf(s: &str) -> PlainForest {
        s.parse().unwrap()
    }

    #[test]
    fn product_is_union() {
        assert_eq!(ck_product(&pf("1"), &pf("2")), ck_product(&pf("2"), &pf("1")));
        assert_eq!(ck_product(&pf("1[2]"), &PlainForest::empty()), pf("1[2]"));
        assert_eq!(ck_product(&pf("1[2]"), &pf("3")).trees().len(), 2);
    }

    #[test]
    fn primitive_dot() {
        assert_eq!(ck_coproduct(&pf("1")).to_string(), "∅⊗1+1⊗∅");
        assert_eq!(ck_antipode(&pf("1")).to_string(), "-1");
    }

    #[test]
    fn small_antipodes() {
        assert_eq!(ck_antipode(&pf("1[2]")).to_string(), "1|2-1[2]");
        assert_eq!(ck_antipode(&pf("1[2,3]")).to_string(), "-1|2|3+1[2]|3-1[2,3]+1[3]|2");
    }
}
