use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

/// An element of `Q[v, v^-1]`.
///
/// Terms are kept sorted by ascending exponent and no stored coefficient is
/// zero, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(i32, BigRational)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigRational::one())
    }

    /// The indeterminate `v`.
    pub fn v() -> Self {
        Self::monomial(1, BigRational::one())
    }

    /// `v^-1`.
    pub fn v_inv() -> Self {
        Self::monomial(-1, BigRational::one())
    }

    pub fn monomial(exp: i32, coeff: BigRational) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(exp, coeff)] }
        }
    }

    /// `c v^exp` for an integer `c`.
    pub fn int_monomial(exp: i32, coeff: i64) -> Self {
        Self::monomial(exp, BigRational::from_integer(coeff.into()))
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::int_monomial(0, c)
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// summing repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (i32, BigRational)>>(iter: I) -> Self {
        let mut terms: Vec<(i32, BigRational)> = iter.into_iter().collect();
        terms.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(i32, BigRational)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    pub fn from_int_terms<I: IntoIterator<Item = (i32, i64)>>(iter: I) -> Self {
        Self::from_terms(iter.into_iter().map(|(e, c)| (e, BigRational::from_integer(c.into()))))
    }

    /// Coefficients `coeffs[i]` of `v^(low + i)`.
    pub(crate) fn from_dense(low: i32, coeffs: Vec<BigRational>) -> Self {
        let terms =
            coeffs.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (low + i as i32, c)).collect();
        Self { terms }
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &BigRational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn coeff(&self, exp: i32) -> BigRational {
        match self.terms.binary_search_by_key(&exp, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigRational::zero(),
        }
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|(e, _)| *e)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.last().map(|(_, c)| c)
    }

    /// True when every exponent is non-negative.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// The involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        Self { terms: self.terms.iter().rev().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// The involution `v -> -v^-1`.
    pub fn koszul(&self) -> Self {
        Self { terms: self.terms.iter().rev().map(|(e, c)| (-e, if e % 2 == 0 { c.clone() } else { -c })).collect() }
    }

    /// Dense coefficient vector starting at the lowest exponent.
    pub(crate) fn to_dense(&self) -> (i32, Vec<BigRational>) {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => {
                let mut v = vec![BigRational::zero(); (hi - lo + 1) as usize];
                for (e, c) in &self.terms {
                    v[(e - lo) as usize] = c.clone();
                }
                (lo, v)
            }
            _ => (0, Vec::new()),
        }
    }

    /// `(exponent, numerator, denominator)` triples in strictly decreasing
    /// exponent order.
    pub fn to_triples(&self) -> Vec<(i32, BigInt, BigInt)> {
        self.terms.iter().rev().map(|(e, c)| (*e, c.numer().clone(), c.denom().clone())).collect()
    }

    pub fn from_triples<I: IntoIterator<Item = (i32, BigInt, BigInt)>>(iter: I) -> Option<Self> {
        let mut terms = Vec::new();
        for (e, n, d) in iter {
            if d.is_zero() {
                return None;
            }
            terms.push((e, BigRational::new(n, d)));
        }
        Some(Self::from_terms(terms))
    }

    /// Renders with a caller-chosen exponent style; shared by `Display` and
    /// the LaTeX emitter.
    pub fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff_str = if abs.is_integer() {
                abs.numer().to_string()
            } else if latex {
                format!("\\tfrac{{{}}}{{{}}}", abs.numer(), abs.denom())
            } else {
                format!("({}/{})", abs.numer(), abs.denom())
            };
            let var = match (*e, latex) {
                (0, _) => String::new(),
                (1, _) => "v".to_string(),
                (k, true) => format!("v^{{{}}}", k),
                (k, false) => format!("v^{}", k),
            };
            if var.is_empty() {
                out.push_str(&coeff_str);
            } else if abs.is_one() {
                out.push_str(&var);
            } else {
                out.push_str(&coeff_str);
                out.push_str(&var);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, n, d) in self.to_triples() {
            seq.serialize_element(&(e as i64, BigIntJson(n), BigIntJson(d)))?;
        }
        seq.end()
    }
}

/// Integers go out as JSON numbers when they fit in 64 bits and as decimal
/// strings otherwise.
struct BigIntJson(BigInt);

impl Serialize for BigIntJson {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(x) => serializer.serialize_i64(x),
            Err(_) => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

fn merge(a: &[(i32, BigRational)], b: &[(i32, BigRational)], negate_b: bool) -> LaurentPoly {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
            out.push((b[j].0, c));
            j += 1;
        } else {
            let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
            if !c.is_zero() {
                out.push((a[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    LaurentPoly { terms: out }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        merge(&self.terms, &rhs.terms, false)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        merge(&self.terms, &rhs.terms, true)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if rhs.terms.len() == 1 {
            let (e, c) = &rhs.terms[0];
            return LaurentPoly { terms: self.terms.iter().map(|(x, d)| (x + e, d * c)).collect() };
        }
        if self.terms.len() == 1 {
            return rhs * self;
        }
        let lo = self.terms[0].0 + rhs.terms[0].0;
        let hi = self.terms.last().unwrap().0 + rhs.terms.last().unwrap().0;
        let mut acc = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                acc[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        LaurentPoly::from_dense(lo, acc)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for (_, c) in self.terms.iter_mut() {
            *c = -c.clone();
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<LaurentPoly> for &'a LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::from_int(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(terms.iter().copied())
    }

    #[test]
    fn difference_of_squares() {
        let a = lp(&[(1, 1), (-1, 1)]);
        let b = lp(&[(1, 1), (-1, -1)]);
        assert_eq!(&a * &b, lp(&[(2, 1), (-2, -1)]));
    }

    #[test]
    fn additive_inverse_is_empty() {
        let p = lp(&[(3, 2), (0, -1), (-4, 7)]);
        assert!((&p + &(-&p)).is_zero());
        assert_eq!((&p - &p).num_terms(), 0);
    }

    #[test]
    fn bar_examples() {
        assert_eq!(lp(&[(1, 1), (2, 3)]).bar(), lp(&[(-1, 1), (-2, 3)]));
        let sym = lp(&[(1, 1), (-1, 1)]);
        assert_eq!(sym.bar(), sym);
    }

    #[test]
    fn koszul_examples() {
        assert_eq!(LaurentPoly::v().koszul(), lp(&[(-1, -1)]));
        let q2 = lp(&[(1, 1), (-1, 1)]);
        assert_eq!(q2.koszul(), -&q2);
        assert_eq!(lp(&[(2, 5)]).koszul(), lp(&[(-2, 5)]));
    }

    #[test]
    fn triples_are_descending() {
        let p = lp(&[(-3, 1), (1, 2), (3, 1)]);
        let exps: Vec<i32> = p.to_triples().iter().map(|t| t.0).collect();
        assert_eq!(exps, vec![3, 1, -3]);
        let back = LaurentPoly::from_triples(p.to_triples()).unwrap();
        assert_eq!(back, p);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[[3,1,1],[1,2,1],[-3,1,1]]");
    }

    #[test]
    fn display() {
        assert_eq!(lp(&[(3, 1), (1, 2), (-1, 2), (-3, 1)]).to_string(), "v^3 + 2v + 2v^-1 + v^-3");
        assert_eq!(lp(&[(0, -1), (1, 1)]).to_string(), "v - 1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
