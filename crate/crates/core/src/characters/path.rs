use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::Character;
use crate::algebra::{MultiPoly, Rational, Var};
use crate::error::{Error, ParseError, TreeError};
use crate::hopf::{ConnesKreimer, Shuffle};
use crate::morphisms::{pi_sigma_lin, theta_dec};
use crate::trees::{OrderedForest, PlainForest, PlainTree};
use crate::words::{Letter, Word};

/// A path in `R^d` given by the derivatives `Γ'_i` of its components, each a
/// univariate polynomial (coefficient `k` multiplies `x^k`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyPath {
    derivatives: Vec<Vec<Rational>>,
}

fn free_var(upper: Var, lower: Var) -> Var {
    Var::ALL.into_iter().find(|&v| v != upper && v != lower).expect("three variables")
}

impl PolyPath {
    pub fn new(derivatives: Vec<Vec<Rational>>) -> Self {
        let derivatives = derivatives
            .into_iter()
            .map(|mut c| {
                while c.last().is_some_and(Rational::is_zero) {
                    c.pop();
                }
                c
            })
            .collect();
        PolyPath { derivatives }
    }

    pub fn d(&self) -> usize {
        self.derivatives.len()
    }

    pub fn coefficients(&self, component: Letter) -> Option<&[Rational]> {
        self.derivatives.get((component as usize).checked_sub(1)?).map(Vec::as_slice)
    }

    /// `Γ'_a` as a polynomial in `v`.
    pub fn derivative(&self, a: Letter, v: Var) -> Result<MultiPoly, TreeError> {
        let coeffs = self.coefficients(a).ok_or(TreeError::DecorationOutOfRange { dec: a, d: self.d() as Letter })?;
        let mut p = MultiPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            p = &p + &MultiPoly::monomial(v, k as u32, c.clone());
        }
        Ok(p)
    }

    /// `∫_lower^x Γ'_a(y) p(y) dy` as a polynomial in the dummy variable `x`,
    /// where `p` is also written in `x`.
    fn primitive(&self, a: Letter, p: &MultiPoly, x: Var, lower: Var) -> Result<MultiPoly, TreeError> {
        let anti = (&self.derivative(a, x)? * p).antiderivative(x);
        Ok(&anti - &anti.substitute(x, lower))
    }

    /// `I^{upper,lower}(a₁…aₙ) = ∫_lower^upper dΓ_{a₁}(x₁) ∫_lower^{x₁} … dΓ_{aₙ}(xₙ)`.
    pub fn word_integral(&self, w: &Word, upper: Var, lower: Var) -> Result<MultiPoly, TreeError> {
        let x = free_var(upper, lower);
        let mut p = MultiPoly::constant(Rational::one());
        for &a in w.letters().iter().rev() {
            p = self.primitive(a, &p, x, lower)?;
        }
        Ok(p.substitute(x, upper))
    }

    fn tree_primitive(&self, t: &PlainTree, x: Var, lower: Var) -> Result<MultiPoly, TreeError> {
        let mut inner = MultiPoly::constant(Rational::one());
        for c in t.children() {
            inner = &inner * &self.tree_primitive(c, x, lower)?;
        }
        self.primitive(t.dec(), &inner, x, lower)
    }

    /// `Ī^{upper,lower}(F)`: each vertex integrated from `lower` up to its
    /// parent's variable (roots up to `upper`).
    pub fn tree_integral(&self, f: &PlainForest, upper: Var, lower: Var) -> Result<MultiPoly, TreeError> {
        let x = free_var(upper, lower);
        let mut p = MultiPoly::constant(Rational::one());
        for t in f.trees() {
            p = &p * &self.tree_primitive(t, x, lower)?;
        }
        Ok(p.substitute(x, upper))
    }

    /// Evaluation on a decorated ordered forest through its linear extensions:
    /// the sum of `I` over the words of `π_Σ Θ^d(F)`.
    pub fn ordered_integral(&self, f: &OrderedForest, upper: Var, lower: Var) -> Result<MultiPoly, TreeError> {
        let mut acc = MultiPoly::zero();
        for (w, c) in pi_sigma_lin(&theta_dec(f)).iter() {
            acc = &acc + &self.word_integral(w, upper, lower)?.scale(c);
        }
        Ok(acc)
    }

    /// `I^{upper,lower}` as a character of `Sh^d`.
    pub fn signature(self: &Arc<Self>, upper: Var, lower: Var) -> Character<Shuffle, MultiPoly> {
        let path = self.clone();
        Character::new(Arc::new(Shuffle::new(self.d() as Letter)), move |w| {
            path.word_integral(w, upper, lower).map_err(Error::from)
        })
    }

    /// `Ī^{upper,lower}` as a character of `H^d`.
    pub fn tree_character(self: &Arc<Self>, upper: Var, lower: Var) -> Character<ConnesKreimer, MultiPoly> {
        let path = self.clone();
        Character::new(Arc::new(ConnesKreimer::new(self.d() as Letter)), move |f| {
            path.tree_integral(f, upper, lower).map_err(Error::from)
        })
    }
}

/// `I^{ts}_Γ(w)`.
pub fn iter_int_word(path: &PolyPath, w: &Word) -> Result<MultiPoly, TreeError> {
    path.word_integral(w, Var::T, Var::S)
}

/// `Ī^{ts}_Γ(F)`.
pub fn iter_int_tree(path: &PolyPath, f: &PlainForest) -> Result<MultiPoly, TreeError> {
    path.tree_integral(f, Var::T, Var::S)
}

fn parse_term(term: &str, offset: usize) -> Result<(usize, Rational), ParseError> {
    let err = |m: &str| ParseError::new(offset, format!("{} in term '{}'", m, term));
    let (neg, body) = match term.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, term.strip_prefix('+').unwrap_or(term)),
    };
    let (coeff, power) = match body.find('x') {
        None => (body, 0),
        Some(i) => {
            let head = body[..i].strip_suffix('*').unwrap_or(&body[..i]);
            let tail = &body[i + 1..];
            let power = if tail.is_empty() {
                1
            } else {
                tail.strip_prefix('^').ok_or_else(|| err("expected '^'"))?.parse().map_err(|_| err("bad exponent"))?
            };
            (head, power)
        }
    };
    let mut c = if coeff.is_empty() { Rational::one() } else { coeff.parse::<Rational>().map_err(|_| err("bad coefficient"))? };
    if neg {
        c = -&c;
    }
    Ok((power, c))
}

impl FromStr for PolyPath {
    type Err = ParseError;

    /// One line per component: `i: c0 + c1*x + c2*x^2`. Blank lines and lines
    /// starting with `#` are skipped.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut comps: Vec<Option<Vec<Rational>>> = Vec::new();
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
            let body: String = body.chars().filter(|c| !c.is_whitespace()).collect();
            let mut coeffs: Vec<Rational> = Vec::new();
            let mut start = 0;
            let bytes = body.as_bytes();
            for k in 1..=bytes.len() {
                if k == bytes.len() || ((bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'^') {
                    let (p, c) = parse_term(&body[start..k], here)?;
                    if coeffs.len() <= p {
                        coeffs.resize(p + 1, Rational::zero());
                    }
                    coeffs[p] = &coeffs[p] + &c;
                    start = k;
                }
            }
            if body.is_empty() {
                return Err(ParseError::new(here, "empty component"));
            }
            if comps.len() < i {
                comps.resize(i, None);
            }
            if comps[i - 1].replace(coeffs).is_some() {
                return Err(ParseError::new(here, format!("component {} given twice", i)));
            }
        }
        let derivs = comps
            .into_iter()
            .enumerate()
            .map(|(i, c)| c.ok_or_else(|| ParseError::new(s.len(), format!("component {} missing", i + 1))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PolyPath::new(derivs))
    }
}

impl fmt::Display for PolyPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, coeffs) in self.derivatives.iter().enumerate() {
            write!(f, "{}: ", i + 1)?;
            let mut first = true;
            for (k, c) in coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let mag = c.abs();
                if first {
                    if c.is_negative() {
                        f.write_str("-")?;
                    }
                } else {
                    f.write_str(if c.is_negative() { " - " } else { " + " })?;
                }
                first = false;
                match k {
                    0 => write!(f, "{}", mag)?,
                    _ => {
                        if !mag.is_one() {
                            write!(f, "{}*", mag)?;
                        }
                        f.write_str("x")?;
                        if k > 1 {
                            write!(f, "^{}", k)?;
                        }
                    }
                }
            }
            if first {
                f.write_str("0")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
