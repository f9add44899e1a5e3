use std::fmt;
use std::str::FromStr;

use crate::algebra::{FreqExpValue, GaussianRational, Rational, Ring, Var};
use crate::error::{FnoError, ParseError};
use crate::words::{Letter, Word};

use super::measure::{AtomMeasure, FourierAtom};

/// A path whose derivative components are finite Fourier sums,
/// `Γ'_i(x) = Σ_k c_k e^{iξ_k x}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrigPath {
    components: Vec<Vec<(Rational, GaussianRational)>>,
}

impl TrigPath {
    /// Component `i` (1-based) is the list of `(ξ, c)` pairs.
    pub fn new(components: Vec<Vec<(Rational, GaussianRational)>>) -> Result<Self, FnoError> {
        for (i, comp) in components.iter().enumerate() {
            for (k, (xi, _)) in comp.iter().enumerate() {
                if xi.is_zero() {
                    return Err(FnoError::ZeroFrequency(i + 1));
                }
                if comp[..k].iter().any(|(other, _)| other == xi) {
                    return Err(FnoError::RepeatedFrequency { component: i + 1, freq: xi.to_string() });
                }
            }
        }
        Ok(TrigPath { components })
    }

    /// One unit-amplitude atom per component, at the given frequencies.
    pub fn single_atoms(freqs: &[i64]) -> Result<Self, FnoError> {
        TrigPath::new(freqs.iter().map(|&x| vec![(Rational::from(x), GaussianRational::one())]).collect())
    }

    pub fn d(&self) -> usize {
        self.components.len()
    }

    pub fn component(&self, a: Letter) -> Result<&[(Rational, GaussianRational)], FnoError> {
        (a as usize)
            .checked_sub(1)
            .and_then(|i| self.components.get(i))
            .map(Vec::as_slice)
            .ok_or(FnoError::MissingComponent { letter: a, d: self.d() })
    }

    /// `μ_{(Γ,ℓ)} = dΓ_{ℓ(1)} ⊗ … ⊗ dΓ_{ℓ(n)}` expanded into atoms.
    pub fn tensor_measure(&self, w: &Word) -> Result<AtomMeasure, FnoError> {
        let mut mu = AtomMeasure::dirac(FourierAtom::new(Vec::new(), GaussianRational::one()))?;
        for &a in w.letters() {
            let comp = self.component(a)?;
            let one = AtomMeasure::from_atoms(1, comp.iter().map(|(xi, c)| FourierAtom::new(vec![xi.clone()], c.clone())))?;
            mu = mu.tensor(&one);
        }
        Ok(mu)
    }

    /// `Σ_k c_k (e^{iξ_k·upper} − e^{iξ_k·lower}) / (iξ_k)`, the increment of `Γ_a`
    /// up to the constant of integration.
    pub fn increment(&self, a: Letter, upper: Var, lower: Var) -> Result<FreqExpValue, FnoError> {
        let mut acc = FreqExpValue::zero();
        for (xi, c) in self.component(a)? {
            let k = &c.times(&GaussianRational::i_pow(-1)) * &GaussianRational::real(xi.recip().expect("nonzero"));
            acc = &acc + &(&FreqExpValue::exp(upper, xi.clone(), k.clone()) - &FreqExpValue::exp(lower, xi.clone(), k));
        }
        Ok(acc)
    }
}

impl FromStr for TrigPath {
    type Err = ParseError;

    /// One line per component: `i: amp@freq, amp@freq, …`, e.g. `1: 1@1, 1/2-i@-3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut comps: Vec<Option<Vec<(Rational, GaussianRational)>>> = Vec::new();
        let mut offset = 0;
        for line in s.split_inclusive('\n') {
            let here = offset;
            offset += line.len();
            let text = line.trim();
            if text.is_empty() || text.starts_with('#') {
                continue;
            }
            let (label, body) = text.split_once(':').ok_or_else(|| ParseError::new(here, "expected 'i:'"))?;
            let i: usize = label.trim().parse().map_err(|_| ParseError::new(here, "bad component index"))?;
            if i == 0 {
                return Err(ParseError::new(here, "components are numbered from 1"));
            }
            let mut terms = Vec::new();
            for item in body.split(',') {
                let (amp, freq) =
                    item.split_once('@').ok_or_else(|| ParseError::new(here, format!("expected amp@freq in '{}'", item.trim())))?;
                let amp: GaussianRational = amp.trim().parse().map_err(|e: ParseError| e.shifted(here))?;
                let freq: Rational =
                    freq.trim().parse().map_err(|_| ParseError::new(here, format!("bad frequency '{}'", freq.trim())))?;
                terms.push((freq, amp));
            }
            if comps.len() < i {
                comps.resize(i, None);
            }
            if comps[i - 1].replace(terms).is_some() {
                return Err(ParseError::new(here, format!("component {} given twice", i)));
            }
        }
        let comps = comps
            .into_iter()
            .enumerate()
            .map(|(i, c)| c.ok_or_else(|| ParseError::new(s.len(), format!("component {} missing", i + 1))))
            .collect::<Result<Vec<_>, _>>()?;
        TrigPath::new(comps).map_err(|e| ParseError::new(0, e.to_string()))
    }
}

impl fmt::Display for TrigPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, comp) in self.components.iter().enumerate() {
            let items: Vec<String> = comp.iter().map(|(xi, c)| format!("{}@{}", c, xi)).collect();
            writeln!(f, "{}: {}", i + 1, items.join(", "))?;
        }
        Ok(())
    }
}
