//! Permutations in word form and decorated permutations.

use std::fmt;
use std::str::FromStr;

use crate::error::{ParseError, TreeError};
use crate::words::{parse_letters, render_letters, Letter, Word};

/// `σ ∈ Σ_n` stored as the word `(σ(1) … σ(n))`, values 1-based.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self, TreeError> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(TreeError::NotPermutation(format!("{:?}", word)));
            }
            seen[v] = true;
        }
        Ok(Permutation(word))
    }

    pub(crate) fn from_vec_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation(word)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    /// `σ(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Permutation(other.0.iter().map(|&i| self.0[i - 1]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `σ ⊗ τ`: `σ` on the first block, `τ` shifted onto the second.
    pub fn tensor(&self, other: &Permutation) -> Permutation {
        let k = self.len();
        let mut w = self.0.clone();
        w.extend(other.0.iter().map(|&v| v + k));
        Permutation(w)
    }

    /// Standardization of a word of distinct values: the unique increasing
    /// relabelling onto `1..=len`. Equal values are ranked left to right.
    pub fn standardize<T: Ord>(values: &[T]) -> Permutation {
        let mut idx: Vec<usize> = (0..values.len()).collect();
        idx.sort_by(|&a, &b| values[a].cmp(&values[b]).then(a.cmp(&b)));
        let mut w = vec![0; values.len()];
        for (rank, &i) in idx.iter().enumerate() {
            w[i] = rank + 1;
        }
        Permutation(w)
    }

    /// `Σ_n` in lexicographic order of words.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation(cur.clone()));
                return;
            }
            for v in 1..=n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }

    /// Whether `σ⁻¹` is increasing on `1..=k` and on `k+1..=n`.
    pub fn is_shuffle(&self, k: usize) -> bool {
        let inv = self.inverse();
        let w = inv.word();
        k <= w.len()
            && w[..k].windows(2).all(|p| p[0] < p[1])
            && w[k..].windows(2).all(|p| p[0] < p[1])
    }

    /// Applies the permutation to positions of a sequence: entry `i` of the
    /// result is `items[σ(i)]`, i.e. `items ∘ σ`.
    pub fn permute<T: Clone>(&self, items: &[T]) -> Vec<T> {
        self.0.iter().map(|&v| items[v - 1].clone()).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        f.write_str("(")?;
        render_letters(f, &self.0)?;
        f.write_str(")")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.contains(|c: char| c.is_ascii_lowercase()) {
            return Err(ParseError::new(0, "permutation entries must be numbers"));
        }
        if s.trim().is_empty() {
            return Ok(Permutation::default());
        }
        let w = parse_letters(s)?;
        Permutation::new(w.into_iter().map(|v| v as usize).collect())
            .map_err(|e| ParseError::new(0, e.to_string()))
    }
}

/// `(σ, ℓ)` with `ℓ : {1..n} → {1..d}` indexed by the values of `σ`. It is
/// drawn as two superposed words, the lower one being `ℓ(σ(1)) … ℓ(σ(n))`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DecoratedPermutation {
    pub perm: Permutation,
    pub ell: Vec<Letter>,
}

impl DecoratedPermutation {
    pub fn new(perm: Permutation, ell: Vec<Letter>) -> Result<Self, TreeError> {
        if perm.len() != ell.len() {
            return Err(TreeError::SizeMismatch { expected: perm.len(), found: ell.len() });
        }
        Ok(DecoratedPermutation { perm, ell })
    }

    /// Builds from the two rows: `σ` and the letters aligned under it.
    pub fn from_rows(perm: Permutation, lower: &[Letter]) -> Result<Self, TreeError> {
        if perm.len() != lower.len() {
            return Err(TreeError::SizeMismatch { expected: perm.len(), found: lower.len() });
        }
        let mut ell = vec![0; lower.len()];
        for (i, &b) in lower.iter().enumerate() {
            ell[perm.apply(i + 1) - 1] = b;
        }
        Ok(DecoratedPermutation { perm, ell })
    }

    pub fn undecorated(perm: Permutation) -> Self {
        let n = perm.len();
        DecoratedPermutation { perm, ell: vec![1; n] }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// The lower word `ℓ ∘ σ`.
    pub fn lower_row(&self) -> Word {
        Word(self.perm.permute(&self.ell))
    }
}

impl fmt::Display for DecoratedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.perm.is_empty() {
            return f.write_str("1");
        }
        f.write_str("(")?;
        render_letters(f, self.perm.word())?;
        f.write_str(";")?;
        render_letters(f, &self.lower_row().0)?;
        f.write_str(")")
    }
}

impl fmt::Debug for DecoratedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for DecoratedPermutation {
    type Err = ParseError;

    /// `213;bac` or `(213;213)`; the lower row is aligned with the upper one.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let t = t.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(t);
        let (top, bottom) = t
            .split_once(';')
            .ok_or_else(|| ParseError::new(0, "expected 'PERM;LETTERS'"))?;
        let perm: Permutation = top.parse()?;
        let lower = parse_letters(bottom).map_err(|e| e.shifted(top.len() + 1))?;
        DecoratedPermutation::from_rows(perm, &lower).map_err(|e| ParseError::new(top.len(), e.to_string()))
    }
}
