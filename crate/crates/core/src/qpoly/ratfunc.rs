use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::upoly;
use super::LaurentPoly;
use crate::error::{Error, Result};

/// An element of `Q(v)` in canonical form.
///
/// The denominator is a monic polynomial in `v` with nonzero constant term
/// and shares no factor with the numerator; powers of `v` live in the
/// (Laurent) numerator. Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    /// Canonical form of `num / den`; `den` must be nonzero.
    pub(crate) fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        if den.num_terms() == 1 {
            // monomial denominator: fold it into the numerator
            let (e, c) = den.terms().next().map(|(e, c)| (e, c.clone())).unwrap();
            let num = num.shift(-e).scale(&(BigRational::one() / c));
            return Self { num, den: LaurentPoly::one() };
        }
        let (dk, mut dd) = den.to_dense();
        let (nk, mut nd) = num.to_dense();
        let g = upoly::gcd(&nd, &dd);
        if !upoly::is_constant(&g) {
            nd = upoly::div_exact(&nd, &g);
            dd = upoly::div_exact(&dd, &g);
        }
        let lc = dd.last().cloned().unwrap();
        if !lc.is_one() {
            for c in nd.iter_mut() {
                *c /= &lc;
            }
            for c in dd.iter_mut() {
                *c /= &lc;
            }
        }
        Self { num: LaurentPoly::from_dense(nk - dk, nd), den: LaurentPoly::from_dense(0, dd) }
    }

    /// Re-canonicalises; a no-op on values produced by this module.
    pub fn canonicalize(&self) -> Self {
        Self::canonical(self.num.clone(), self.den.clone())
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `Some` when the value lies in `Q[v, v^-1]`.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn bar(&self) -> Self {
        Self::canonical(self.num.bar(), self.den.bar())
    }

    pub fn koszul(&self) -> Self {
        Self::canonical(self.num.koszul(), self.den.koszul())
    }

    pub fn render(&self, latex: bool) -> String {
        if self.den.is_one() {
            return self.num.render(latex);
        }
        if latex {
            format!("\\frac{{{}}}{{{}}}", self.num.render(true), self.den.render(true))
        } else {
            format!("({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self)
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        LaurentPoly::from_int(c).into()
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatFunc::from(&self.num + &rhs.num);
            }
            return RatFunc::canonical(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::canonical(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from(&self.num * &rhs.num);
        }
        RatFunc::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -self.num, den: self.den }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(terms.iter().copied())
    }

    #[test]
    fn coprime_pair_only_clears_negative_exponents() {
        // (v^2 + 1 + v^-2) / (v + v^-1) = (v^4 + v^2 + 1) v^-1 / (v^2 + 1)
        let r = RatFunc::new(lp(&[(2, 1), (0, 1), (-2, 1)]), lp(&[(1, 1), (-1, 1)])).unwrap();
        assert_eq!(r.denominator(), &lp(&[(2, 1), (0, 1)]));
        assert_eq!(r.numerator(), &lp(&[(3, 1), (1, 1), (-1, 1)]));
    }

    #[test]
    fn common_factor_cancels() {
        // [2][2] / ([3][2]) = [2]/[3]
        let q2 = lp(&[(1, 1), (-1, 1)]);
        let q3 = lp(&[(2, 1), (0, 1), (-2, 1)]);
        let r = RatFunc::new(&q2 * &q2, &q3 * &q2).unwrap();
        let expect = RatFunc::new(q2.clone(), q3.clone()).unwrap();
        assert_eq!(r, expect);
        assert_eq!(expect.denominator(), &lp(&[(4, 1), (2, 1), (0, 1)]));
        assert_eq!(expect.numerator(), &lp(&[(3, 1), (1, 1)]));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(RatFunc::new(LaurentPoly::one(), LaurentPoly::zero()), Err(Error::DivisionByZero)));
        assert!(matches!(RatFunc::one().checked_div(&RatFunc::zero()), Err(Error::DivisionByZero)));
        assert!(RatFunc::zero().inv().is_err());
    }

    #[test]
    fn monic_denominator_with_rational_scaling() {
        let r = RatFunc::new(LaurentPoly::one(), lp(&[(1, 2), (0, 4)])).unwrap();
        assert_eq!(r.denominator().leading_coeff().unwrap(), &BigRational::one());
        assert_eq!(r.numerator().coeff(0), BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn bar_and_koszul_of_quotient() {
        let q2 = lp(&[(1, 1), (-1, 1)]);
        let r = RatFunc::new(LaurentPoly::one(), q2.clone()).unwrap();
        assert_eq!(r.bar(), r);
        assert_eq!(r.koszul(), -&r);
    }
}
