use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Rational, Ring};

/// Time variables available to polynomial and exponential values. The
/// declaration order `t < u < s` is the rendering order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    T,
    U,
    S,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::T, Var::U, Var::S];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::U => "u",
            Var::S => "s",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub type Exponents = [u32; 3];

/// Sparse polynomial in `t`, `u`, `s` with rational coefficients. No zero
/// coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Exponents, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term([0, 0, 0], c);
        p
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(v, 1, Rational::one())
    }

    /// `c * v^power`.
    pub fn monomial(v: Var, power: u32, c: Rational) -> Self {
        let mut e = [0; 3];
        e[v.index()] = power;
        let mut p = MultiPoly::zero();
        p.add_term(e, c);
        p
    }

    pub fn add_term(&mut self, exps: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_insert_with(Rational::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &Exponents) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|e| e[v.index()]).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect() }
    }

    /// Antiderivative in `v` with zero constant term.
    pub fn antiderivative(&self, v: Var) -> Self {
        let i = v.index();
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            e2[i] += 1;
            out.add_term(e2, c / &Rational::from(i64::from(e2[i])));
        }
        out
    }

    /// Replace every occurrence of `from` by `to`.
    pub fn substitute(&self, from: Var, to: Var) -> Self {
        if from == to {
            return self.clone();
        }
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            e2[to.index()] += e2[from.index()];
            e2[from.index()] = 0;
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Simultaneous renaming of variables through `map`.
    pub fn relabel(&self, map: impl Fn(Var) -> Var) -> Self {
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            let mut e2 = [0; 3];
            for v in Var::ALL {
                e2[map(v).index()] += e[v.index()];
            }
            out.add_term(e2, c.clone());
        }
        out
    }

    /// `∫_{lower}^{upper} p dv`, with `upper`/`lower` variables (either may equal `v`'s slot afterwards).
    pub fn integrate(&self, v: Var, lower: Var, upper: Var) -> Self {
        let anti = self.antiderivative(v);
        &anti.substitute(v, upper) - &anti.substitute(v, lower)
    }

    pub fn eval(&self, values: [&Rational; 3]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for v in Var::ALL {
                term = &term * &values[v.index()].pow(e[v.index()]);
            }
            acc = &acc + &term;
        }
        acc
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term([e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]], c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::constant(Rational::one())
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
        self.scale(c)
    }
}

/// Graded lex: higher total degree first, then lexicographic in (t, u, s).
fn graded_lex_desc(a: &Exponents, b: &Exponents) -> std::cmp::Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<&Exponents> = self.terms.keys().collect();
        keys.sort_by(|a, b| graded_lex_desc(a, b));
        for (n, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let mono: Vec<String> = Var::ALL
                .iter()
                .filter(|v| e[v.index()] > 0)
                .map(|v| match e[v.index()] {
                    1 => v.name().to_string(),
                    p => format!("{}^{}", v.name(), p),
                })
                .collect();
            let negative = c.is_negative();
            let mag = c.abs();
            if n == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            if mono.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
