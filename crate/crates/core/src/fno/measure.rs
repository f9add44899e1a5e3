use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use crate::algebra::{GaussianRational, Rational, Ring};
use crate::error::FnoError;
use crate::perm::Permutation;

/// One point mass on the Fourier side: the measure with density
/// `amp · Π_j e^{iξ_j x_j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourierAtom {
    pub freq: Vec<Rational>,
    pub amp: GaussianRational,
}

impl FourierAtom {
    pub fn new(freq: Vec<Rational>, amp: GaussianRational) -> Self {
        FourierAtom { freq, amp }
    }

    pub fn arity(&self) -> usize {
        self.freq.len()
    }
}

pub(crate) fn render_freq(freq: &[Rational]) -> String {
    let parts: Vec<String> = freq.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// How atoms with tied frequency magnitudes are assigned to sectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TiePolicy {
    /// Ties are an error.
    #[default]
    Strict,
    /// A tied atom is shared equally among all of its sorting permutations.
    Symmetric,
}

/// A finite combination of Fourier atoms of one arity, atoms with equal
/// frequency vectors merged.
#[derive(Clone, PartialEq, Eq)]
pub struct AtomMeasure {
    arity: usize,
    atoms: BTreeMap<Vec<Rational>, GaussianRational>,
}

impl AtomMeasure {
    pub fn zero(arity: usize) -> Self {
        AtomMeasure { arity, atoms: BTreeMap::new() }
    }

    pub fn dirac(atom: FourierAtom) -> Result<Self, FnoError> {
        let mut m = AtomMeasure::zero(atom.arity());
        m.add_atom(atom)?;
        Ok(m)
    }

    pub fn from_atoms(arity: usize, atoms: impl IntoIterator<Item = FourierAtom>) -> Result<Self, FnoError> {
        let mut m = AtomMeasure::zero(arity);
        for a in atoms {
            m.add_atom(a)?;
        }
        Ok(m)
    }

    pub fn add_atom(&mut self, atom: FourierAtom) -> Result<(), FnoError> {
        if atom.arity() != self.arity {
            return Err(FnoError::ArityMismatch { forest: self.arity, measure: atom.arity() });
        }
        if let Some(j) = atom.freq.iter().position(Rational::is_zero) {
            return Err(FnoError::ZeroFrequency(j + 1));
        }
        self.add_unchecked(atom.freq, atom.amp);
        Ok(())
    }

    fn add_unchecked(&mut self, freq: Vec<Rational>, amp: GaussianRational) {
        let sum = self.atoms.get(&freq).map_or(amp.clone(), |v| v.plus(&amp));
        if sum.is_zero() {
            self.atoms.remove(&freq);
        } else {
            self.atoms.insert(freq, sum);
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atoms(&self) -> impl Iterator<Item = FourierAtom> + '_ {
        self.atoms.iter().map(|(f, a)| FourierAtom::new(f.clone(), a.clone()))
    }

    /// `μ∘σ`: the atom with frequencies `ξ` becomes `ξ∘σ`.
    pub fn compose(&self, sigma: &Permutation) -> AtomMeasure {
        assert_eq!(sigma.len(), self.arity, "permutation size must match the arity");
        let mut out = AtomMeasure::zero(self.arity);
        for (f, a) in &self.atoms {
            out.add_unchecked(sigma.permute(f), a.clone());
        }
        out
    }

    /// Product measure on the concatenated coordinates.
    pub fn tensor(&self, other: &AtomMeasure) -> AtomMeasure {
        let mut out = AtomMeasure::zero(self.arity + other.arity);
        for (f, a) in &self.atoms {
            for (g, b) in &other.atoms {
                let mut freq = f.clone();
                freq.extend(g.iter().cloned());
                out.add_unchecked(freq, a.times(b));
            }
        }
        out
    }

    pub fn scale(&self, c: &GaussianRational) -> AtomMeasure {
        let mut out = AtomMeasure::zero(self.arity);
        for (f, a) in &self.atoms {
            out.add_unchecked(f.clone(), a.times(c));
        }
        out
    }
}

impl Add<&AtomMeasure> for &AtomMeasure {
    type Output = AtomMeasure;
    fn add(self, other: &AtomMeasure) -> AtomMeasure {
        assert_eq!(self.arity, other.arity, "arities must agree");
        let mut out = self.clone();
        for (f, a) in &other.atoms {
            out.add_unchecked(f.clone(), a.clone());
        }
        out
    }
}

impl Sub<&AtomMeasure> for &AtomMeasure {
    type Output = AtomMeasure;
    fn sub(self, other: &AtomMeasure) -> AtomMeasure {
        self + &other.scale(&GaussianRational::real(Rational::from(-1)))
    }
}

impl fmt::Display for AtomMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return f.write_str("0");
        }
        for (n, (freq, a)) in self.atoms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})@{}", a, render_freq(freq))?;
        }
        Ok(())
    }
}

impl fmt::Debug for AtomMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Every `σ` with `|ξ_{σ(1)}| ≤ … ≤ |ξ_{σ(n)}|`, in lexicographic order.
pub fn sorting_permutations(freq: &[Rational]) -> Vec<Permutation> {
    let n = freq.len();
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by(|&a, &b| freq[a - 1].abs().cmp(&freq[b - 1].abs()));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &i in &order {
        match groups.last_mut() {
            Some(g) if freq[g[0] - 1].abs() == freq[i - 1].abs() => g.push(i),
            _ => groups.push(vec![i]),
        }
    }
    let mut out = Vec::new();
    fn rec(groups: &[Vec<usize>], cur: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        let Some((g, rest)) = groups.split_first() else {
            out.push(Permutation::new(cur.clone()).expect("a rearrangement of 1..n"));
            return;
        };
        for p in Permutation::all(g.len()) {
            let start = cur.len();
            cur.extend(p.word().iter().map(|&k| g[k - 1]));
            rec(rest, cur, out);
            cur.truncate(start);
        }
    }
    rec(&groups, &mut Vec::with_capacity(n), &mut out);
    out.sort();
    out
}

/// The sector pieces `μ^σ = (P^σ μ)∘σ` of a measure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SectorSplit {
    arity: usize,
    sectors: BTreeMap<Permutation, AtomMeasure>,
}

impl SectorSplit {
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// `μ^σ` (zero when no atom falls in the sector).
    pub fn get(&self, sigma: &Permutation) -> AtomMeasure {
        self.sectors.get(sigma).cloned().unwrap_or_else(|| AtomMeasure::zero(self.arity))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &AtomMeasure)> {
        self.sectors.iter()
    }

    /// `Σ_σ μ^σ∘σ⁻¹`.
    pub fn reassemble(&self) -> AtomMeasure {
        let mut out = AtomMeasure::zero(self.arity);
        for (s, m) in &self.sectors {
            out = &out + &m.compose(&s.inverse());
        }
        out
    }
}

/// Measure splitting; ties are rejected.
pub fn split_measure(mu: &AtomMeasure) -> Result<SectorSplit, FnoError> {
    split_measure_with(mu, TiePolicy::Strict)
}

pub fn split_measure_with(mu: &AtomMeasure, policy: TiePolicy) -> Result<SectorSplit, FnoError> {
    let mut sectors: BTreeMap<Permutation, AtomMeasure> = BTreeMap::new();
    for atom in mu.atoms() {
        let perms = sorting_permutations(&atom.freq);
        if perms.len() > 1 && policy == TiePolicy::Strict {
            return Err(FnoError::MagnitudeTie(render_freq(&atom.freq)));
        }
        let weight = GaussianRational::real(Rational::new(1, perms.len() as i64));
        for sigma in perms {
            let piece = sectors.entry(sigma.clone()).or_insert_with(|| AtomMeasure::zero(mu.arity));
            piece.add_unchecked(sigma.permute(&atom.freq), atom.amp.times(&weight));
        }
    }
    sectors.retain(|_, m| !m.is_zero());
    Ok(SectorSplit { arity: mu.arity, sectors })
}
