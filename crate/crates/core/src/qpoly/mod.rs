//! Exact arithmetic in `Q[v, v^-1]` and `Q(v)`.

mod laurent;
mod ratfunc;
pub(crate) mod upoly;

pub use laurent::LaurentPoly;
pub use ratfunc::RatFunc;

use crate::error::{Error, Result};

/// The balanced quantum integer `[n] = v^(n-1) + v^(n-3) + ... + v^(1-n)`.
pub fn quantum_int(n: i64) -> Result<LaurentPoly> {
    if n <= 0 {
        return Err(Error::InvalidArgument(format!("quantum integer [{}] needs n >= 1", n)));
    }
    let n = n as i32;
    Ok(LaurentPoly::from_int_terms((0..n).map(|k| (n - 1 - 2 * k, 1))))
}

/// `[n]! = [n][n-1]...[1]`.
pub fn quantum_factorial(n: i64) -> Result<LaurentPoly> {
    if n <= 0 {
        return Err(Error::InvalidArgument(format!("quantum factorial [{}]! needs n >= 1", n)));
    }
    let mut acc = LaurentPoly::one();
    for k in 1..=n {
        acc = &acc * &quantum_int(k)?;
    }
    Ok(acc)
}

/// True iff `p` lies in `v^k Z[v^-2]`: every exponent has the parity of `k`
/// and none exceeds `k`. Coefficients must be integers.
pub fn parity_class(p: &LaurentPoly, k: i32) -> bool {
    p.has_integer_coeffs() && p.terms().all(|(e, _)| e <= k && (k - e) % 2 == 0)
}

/// Monic polynomial part of `p`: `p = c v^k q` with `q(0) != 0`, `q` monic.
pub(crate) fn poly_part(p: &LaurentPoly) -> upoly::Dense {
    let (_, mut d) = p.to_dense();
    upoly::make_monic(&mut d);
    d
}

/// Least common multiple of two denominators in canonical form (monic
/// polynomials with nonzero constant term).
pub(crate) fn lcm_denominators(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a == b || b.is_one() {
        return a.clone();
    }
    if a.is_one() {
        return b.clone();
    }
    let (_, da) = a.to_dense();
    let (_, db) = b.to_dense();
    let g = upoly::gcd(&da, &db);
    let q = upoly::div_exact(&da, &g);
    LaurentPoly::from_dense(0, upoly::mul(&q, &db))
}

/// Exact quotient of Laurent polynomials; panics in debug builds if `b`
/// does not divide `a`.
pub(crate) fn div_exact(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return LaurentPoly::zero();
    }
    let (ka, da) = a.to_dense();
    let (kb, db) = b.to_dense();
    LaurentPoly::from_dense(ka - kb, upoly::div_exact(&da, &db))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(terms.iter().copied())
    }

    #[test]
    fn small_quantum_integers() {
        assert_eq!(quantum_int(1).unwrap(), LaurentPoly::one());
        assert_eq!(quantum_int(2).unwrap(), lp(&[(1, 1), (-1, 1)]));
        assert_eq!(quantum_int(3).unwrap(), lp(&[(2, 1), (0, 1), (-2, 1)]));
        assert_eq!(quantum_factorial(3).unwrap(), lp(&[(3, 1), (1, 2), (-1, 2), (-3, 1)]));
    }

    #[test]
    fn nonpositive_arguments_rejected() {
        assert!(quantum_int(0).is_err());
        assert!(quantum_int(-2).is_err());
        assert!(quantum_factorial(0).is_err());
    }

    #[test]
    fn quantum_int_identities() {
        let d = lp(&[(1, 1), (-1, -1)]);
        for n in 1..12 {
            let q = quantum_int(n).unwrap();
            assert_eq!(q.bar(), q);
            assert_eq!(&q * &d, lp(&[(n as i32, 1), (-(n as i32), -1)]));
        }
    }

    #[test]
    fn parity_examples() {
        assert!(parity_class(&lp(&[(3, 1), (1, 2), (-1, 1)]), 3));
        assert!(!parity_class(&lp(&[(1, 1), (0, 1)]), 1));
        assert!(!parity_class(&lp(&[(4, 1)]), 2));
        assert!(parity_class(&LaurentPoly::zero(), 5));
    }

    #[test]
    fn lcm_of_quantum_integers() {
        let q2 = quantum_int(2).unwrap();
        let q4 = quantum_int(4).unwrap();
        // [4] = [2](v^2 + v^-2), so lcm([2], [4]) ~ [4]
        let d2 = RatFunc::new(LaurentPoly::one(), q2).unwrap().denominator().clone();
        let d4 = RatFunc::new(LaurentPoly::one(), q4).unwrap().denominator().clone();
        assert_eq!(lcm_denominators(&d2, &d4), d4);
    }
}
