use super::HopfAlgebra;
use crate::algebra::{LinComb, Rational, Tensor};
use crate::words::{Letter, Word};

/// Shuffle product: the sum over all interleavings, equal words merged.
pub fn sh_product(u: &Word, v: &Word) -> LinComb<Word> {
    let (a, b) = (u.letters(), v.letters());
    let mut out = LinComb::zero();
    let mut cur = Vec::with_capacity(a.len() + b.len());
    fn rec(a: &[Letter], b: &[Letter], cur: &mut Vec<Letter>, out: &mut LinComb<Word>) {
        if a.is_empty() && b.is_empty() {
            out.add_term(Word(cur.clone()), Rational::one());
            return;
        }
        if let Some((&x, rest)) = a.split_first() {
            cur.push(x);
            rec(rest, b, cur, out);
            cur.pop();
        }
        if let Some((&y, rest)) = b.split_first() {
            cur.push(y);
            rec(a, rest, cur, out);
            cur.pop();
        }
    }
    rec(a, b, &mut cur, &mut out);
    out
}

/// Deconcatenation.
pub fn sh_coproduct(w: &Word) -> LinComb<Tensor<Word, Word>> {
    LinComb::normalize((0..=w.len()).map(|i| (Tensor(w.slice(0, i), w.slice(i, w.len())), Rational::one())))
}

/// `S(a₁…aₙ) = (-1)ⁿ aₙ…a₁`.
pub fn sh_antipode(w: &Word) -> LinComb<Word> {
    let sign = if w.len() % 2 == 0 { Rational::one() } else { Rational::from(-1) };
    LinComb::normalize([(w.reversed(), sign)])
}

/// The shuffle Hopf algebra over the alphabet `{1..d}`.
#[derive(Debug, Clone, Copy)]
pub struct Shuffle {
    pub d: Letter,
}

impl Shuffle {
    pub fn new(d: Letter) -> Self {
        Shuffle { d }
    }
}

impl HopfAlgebra for Shuffle {
    type Basis = Word;

    fn name(&self) -> String {
        format!("Sh^{}", self.d)
    }

    fn unit(&self) -> Word {
        Word::empty()
    }

    fn degree(&self, x: &Word) -> usize {
        x.len()
    }

    fn product(&self, x: &Word, y: &Word) -> LinComb<Word> {
        sh_product(x, y)
    }

    fn coproduct(&self, x: &Word) -> LinComb<Tensor<Word, Word>> {
        sh_coproduct(x)
    }

    fn antipode(&self, x: &Word) -> LinComb<Word> {
        sh_antipode(x)
    }

    fn basis(&self, degree: usize) -> Vec<Word> {
        Word::all(degree, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn three_by_two_shuffle_has_ten_terms() {
        let p = sh_product(&w("123"), &w("45"));
        assert_eq!(p.len(), 10);
        assert_eq!(
            p.to_string(),
            "(12345)+(12435)+(12453)+(14235)+(14253)+(14523)+(41235)+(41253)+(41523)+(45123)"
        );
    }

    #[test]
    fn unit_and_merge() {
        assert_eq!(sh_product(&w("12"), &Word::empty()), LinComb::basis(w("12")));
        assert_eq!(sh_product(&w("1"), &w("1")).to_string(), "2*(11)");
    }

    #[test]
    fn deconcatenation() {
        assert_eq!(sh_coproduct(&w("1234")).to_string(), "1⊗(1234)+(1)⊗(234)+(12)⊗(34)+(123)⊗(4)+(1234)⊗1");
        assert_eq!(sh_coproduct(&Word::empty()).to_string(), "1⊗1");
        assert_eq!(sh_coproduct(&w("1")).to_string(), "1⊗(1)+(1)⊗1");
    }

    #[test]
    fn reversal_antipode() {
        assert_eq!(sh_antipode(&w("ab")).to_string(), "(21)");
        assert_eq!(sh_antipode(&w("abc")).to_string(), "-(321)");
        assert_eq!(sh_antipode(&Word::empty()).to_string(), "1");
    }
}
