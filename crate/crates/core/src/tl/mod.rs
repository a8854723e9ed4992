//! The Temperley-Lieb algebra `TL_n` as a diagram algebra, with loop value
//! `[2]` (or `-[2]` for `TL_n^-`), and its Jones-Wenzl idempotents.

mod diagram;
mod jw;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use diagram::Diagram;
pub use jw::{closed_jw, jw_minus, monomial, monomial_from_word, project_pi, wenzl_jw};

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::qpoly::{quantum_int, LaurentPoly, RatFunc};

/// Sign of the loop parameter: `Plus` gives `TL_n` (`u_i^2 = [2] u_i`),
/// `Minus` gives `TL_n^-` (`u_i^2 = -[2] u_i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LoopSign {
    Plus,
    Minus,
}

impl LoopSign {
    pub fn loop_value(self) -> LaurentPoly {
        let two = quantum_int(2).unwrap();
        match self {
            LoopSign::Plus => two,
            LoopSign::Minus => -two,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LoopSign::Plus => "plus",
            LoopSign::Minus => "minus",
        }
    }
}

impl FromStr for LoopSign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(LoopSign::Plus),
            "minus" | "-" => Ok(LoopSign::Minus),
            other => Err(Error::InvalidArgument(format!("unknown sign '{}'", other))),
        }
    }
}

/// `(diagram, loops, scalar)` for `a` stacked below `b`, the scalar being the
/// loop value raised to the number of loops.
pub fn compose(a: &Diagram, b: &Diagram, sign: LoopSign) -> Result<(Diagram, usize, LaurentPoly)> {
    let (d, loops) = a.compose(b)?;
    let mut scalar = LaurentPoly::one();
    let value = sign.loop_value();
    for _ in 0..loops {
        scalar = &scalar * &value;
    }
    Ok((d, loops, scalar))
}

/// An element of `TL_n` or `TL_n^-` in the diagram basis.
#[derive(Clone, PartialEq, Eq)]
pub struct TlElt {
    n: usize,
    sign: LoopSign,
    coeffs: LinComb<Diagram>,
}

impl fmt::Debug for TlElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> =
            self.coeffs.coefficients().into_iter().map(|(d, c)| format!("({}) {:?}", c, d)).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl TlElt {
    pub fn zero(n: usize, sign: LoopSign) -> Self {
        Self { n, sign, coeffs: LinComb::zero() }
    }

    pub fn identity(n: usize, sign: LoopSign) -> Self {
        Self::from_diagram(Diagram::identity(n), sign)
    }

    /// The generator `u_{s+1}`.
    pub fn generator(n: usize, s: usize, sign: LoopSign) -> Result<Self> {
        Ok(Self::from_diagram(Diagram::generator(n, s)?, sign))
    }

    pub fn from_diagram(d: Diagram, sign: LoopSign) -> Self {
        Self { n: d.n(), sign, coeffs: LinComb::basis(d) }
    }

    pub fn from_lincomb(n: usize, sign: LoopSign, coeffs: LinComb<Diagram>) -> Result<Self> {
        if let Some(d) = coeffs.keys().find(|d| d.n() != n) {
            return Err(Error::Mismatch(format!("diagram on {} strands in TL_{}", d.n(), n)));
        }
        Ok(Self { n, sign, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sign(&self) -> LoopSign {
        self.sign
    }

    pub fn coeffs(&self) -> &LinComb<Diagram> {
        &self.coeffs
    }

    pub fn coefficient(&self, d: &Diagram) -> RatFunc {
        self.coeffs.coefficient(d)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    fn check(&self, other: &TlElt) -> Result<()> {
        if self.n != other.n || self.sign != other.sign {
            return Err(Error::Mismatch(format!(
                "TL_{} ({}) and TL_{} ({})",
                self.n,
                self.sign.name(),
                other.n,
                other.sign.name()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &TlElt) -> Result<TlElt> {
        self.check(other)?;
        Ok(Self { coeffs: &self.coeffs + &other.coeffs, ..self.clone_empty() })
    }

    pub fn sub(&self, other: &TlElt) -> Result<TlElt> {
        self.check(other)?;
        Ok(Self { coeffs: &self.coeffs - &other.coeffs, ..self.clone_empty() })
    }

    pub fn scale(&self, r: &RatFunc) -> TlElt {
        Self { coeffs: self.coeffs.scale(r), ..self.clone_empty() }
    }

    fn clone_empty(&self) -> Self {
        Self::zero(self.n, self.sign)
    }

    /// Bilinear extension of diagram composition, `self` below `other`.
    pub fn multiply(&self, other: &TlElt) -> Result<TlElt> {
        self.check(other)?;
        let value = self.sign.loop_value();
        let mut powers = vec![LaurentPoly::one()];
        let coeffs = LinComb::bilinear(&self.coeffs, &other.coeffs, |a, b, acc| {
            let (d, loops) = a.compose(b).expect("strand counts checked");
            while powers.len() <= loops {
                let next = powers.last().unwrap() * &value;
                powers.push(next);
            }
            acc.add(d, &powers[loops]);
        });
        Ok(Self { coeffs, ..self.clone_empty() })
    }

    /// Includes `TL_n` into `TL_{n+k}` by adding strands on the right.
    pub fn extend(&self, k: usize) -> TlElt {
        Self { n: self.n + k, sign: self.sign, coeffs: self.coeffs.map_keys(|d| d.extend(k)) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loop_scalars() {
        let u = Diagram::generator(2, 0).unwrap();
        let (_, loops, scalar) = compose(&u, &u, LoopSign::Plus).unwrap();
        assert_eq!((loops, scalar), (1, quantum_int(2).unwrap()));
        let (_, _, scalar) = compose(&u, &u, LoopSign::Minus).unwrap();
        assert_eq!(scalar, -quantum_int(2).unwrap());
    }

    #[test]
    fn scaled_generator_is_idempotent() {
        let two = RatFunc::from(quantum_int(2).unwrap());
        let u = TlElt::generator(3, 1, LoopSign::Plus).unwrap().scale(&two.inv().unwrap());
        assert_eq!(u.multiply(&u).unwrap(), u);
        let id = TlElt::identity(3, LoopSign::Plus);
        assert_eq!(u.multiply(&id).unwrap(), u);
    }

    #[test]
    fn mismatches_are_errors() {
        let a = TlElt::identity(3, LoopSign::Plus);
        assert!(a.multiply(&TlElt::identity(4, LoopSign::Plus)).is_err());
        assert!(a.add(&TlElt::identity(3, LoopSign::Minus)).is_err());
    }
}
