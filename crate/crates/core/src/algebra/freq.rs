use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{GaussianRational, Rational, Ring, Var};

/// Frequency vector, one rational frequency per time variable (t, u, s).
pub type Frequencies = [Rational; 3];

/// Finite exponential sum `Σ c · exp(i(ξ_t·t + ξ_u·u + ξ_s·s))` with Gaussian
/// rational coefficients. Products convolve the frequency supports.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FreqExpValue {
    terms: BTreeMap<Frequencies, GaussianRational>,
}

fn zero_freq() -> Frequencies {
    [Rational::zero(), Rational::zero(), Rational::zero()]
}

impl FreqExpValue {
    pub fn zero() -> Self {
        FreqExpValue::default()
    }

    pub fn constant(c: GaussianRational) -> Self {
        let mut v = FreqExpValue::zero();
        v.add_term(zero_freq(), c);
        v
    }

    /// `c · exp(i ξ v)`.
    pub fn exp(v: Var, xi: Rational, c: GaussianRational) -> Self {
        let mut f = zero_freq();
        f[v.index()] = xi;
        let mut out = FreqExpValue::zero();
        out.add_term(f, c);
        out
    }

    pub fn add_term(&mut self, freq: Frequencies, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&freq) {
            Some(slot) => {
                *slot = &*slot + &c;
                if slot.is_zero() {
                    self.terms.remove(&freq);
                }
            }
            None => {
                self.terms.insert(freq, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Frequencies, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let mut out = FreqExpValue::zero();
        for (f, k) in &self.terms {
            out.add_term(f.clone(), k * c);
        }
        out
    }

    pub fn relabel(&self, map: impl Fn(Var) -> Var) -> Self {
        let mut out = FreqExpValue::zero();
        for (f, c) in &self.terms {
            let mut f2 = zero_freq();
            for v in Var::ALL {
                f2[map(v).index()] = &f2[map(v).index()] + &f[v.index()];
            }
            out.add_term(f2, c.clone());
        }
        out
    }
}

impl Add<&FreqExpValue> for &FreqExpValue {
    type Output = FreqExpValue;
    fn add(self, rhs: &FreqExpValue) -> FreqExpValue {
        let mut out = self.clone();
        for (f, c) in &rhs.terms {
            out.add_term(f.clone(), c.clone());
        }
        out
    }
}

impl Sub<&FreqExpValue> for &FreqExpValue {
    type Output = FreqExpValue;
    fn sub(self, rhs: &FreqExpValue) -> FreqExpValue {
        let mut out = self.clone();
        for (f, c) in &rhs.terms {
            out.add_term(f.clone(), -c);
        }
        out
    }
}

impl Mul<&FreqExpValue> for &FreqExpValue {
    type Output = FreqExpValue;
    fn mul(self, rhs: &FreqExpValue) -> FreqExpValue {
        let mut out = FreqExpValue::zero();
        for (f1, c1) in &self.terms {
            for (f2, c2) in &rhs.terms {
                let f = [&f1[0] + &f2[0], &f1[1] + &f2[1], &f1[2] + &f2[2]];
                out.add_term(f, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &FreqExpValue {
    type Output = FreqExpValue;
    fn neg(self) -> FreqExpValue {
        FreqExpValue { terms: self.terms.iter().map(|(f, c)| (f.clone(), -c)).collect() }
    }
}

impl Ring for FreqExpValue {
    fn zero() -> Self {
        FreqExpValue::zero()
    }
    fn one() -> Self {
        FreqExpValue::constant(GaussianRational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(&GaussianRational::real(c.clone()))
    }
}

impl fmt::Display for FreqExpValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (freq, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            let phase: Vec<String> = Var::ALL
                .iter()
                .filter(|v| !freq[v.index()].is_zero())
                .map(|v| format!("{}·{}", freq[v.index()], v.name()))
                .collect();
            if phase.is_empty() {
                write!(f, "({})", c)?;
            } else {
                write!(f, "({})·exp(i({}))", c, phase.join("+"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FreqExpValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
