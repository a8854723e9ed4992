//! Dense univariate polynomials over `Q`, coefficients in ascending degree.
//! Only what rational-function canonicalisation needs.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) type Dense = Vec<BigRational>;

pub(crate) fn trim(p: &mut Dense) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn degree(p: &Dense) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub(crate) fn is_constant(p: &Dense) -> bool {
    p.len() <= 1
}

pub(crate) fn make_monic(p: &mut Dense) {
    if let Some(lc) = p.last().cloned() {
        if !lc.is_one() {
            for c in p.iter_mut() {
                *c /= &lc;
            }
        }
    }
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn div_rem(a: &Dense, b: &Dense) -> (Dense, Dense) {
    let db = degree(b).expect("division by the zero polynomial");
    let mut r = a.clone();
    trim(&mut r);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let lc = b[db].clone();
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap() / &lc;
        for (i, bc) in b.iter().enumerate() {
            if !bc.is_zero() {
                r[k + i] -= &c * bc;
            }
        }
        q[k] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// Monic gcd by the Euclidean algorithm, normalising each remainder to be
/// monic to keep the rational coefficients small.
pub(crate) fn gcd(a: &Dense, b: &Dense) -> Dense {
    let mut x = a.clone();
    let mut y = b.clone();
    trim(&mut x);
    trim(&mut y);
    make_monic(&mut x);
    make_monic(&mut y);
    while !y.is_empty() {
        if is_constant(&y) {
            return vec![BigRational::one()];
        }
        let (_, mut r) = div_rem(&x, &y);
        make_monic(&mut r);
        x = std::mem::replace(&mut y, r);
    }
    x
}

pub(crate) fn div_exact(a: &Dense, b: &Dense) -> Dense {
    let (q, r) = div_rem(a, b);
    debug_assert!(r.is_empty(), "inexact polynomial division");
    q
}

pub(crate) fn mul(a: &Dense, b: &Dense) -> Dense {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(cs: &[i64]) -> Dense {
        cs.iter().map(|&c| BigRational::from_integer(c.into())).collect()
    }

    #[test]
    fn gcd_of_products() {
        // (x+1)(x-2) and (x+1)(x^2+1)
        let a = mul(&d(&[1, 1]), &d(&[-2, 1]));
        let b = mul(&d(&[1, 1]), &d(&[1, 0, 1]));
        assert_eq!(gcd(&a, &b), d(&[1, 1]));
        assert_eq!(gcd(&d(&[1, 0, 1]), &d(&[-2, 1])), d(&[1]));
    }

    #[test]
    fn division_round_trip() {
        let a = d(&[3, 0, -1, 2]);
        let b = d(&[1, 5]);
        let (q, r) = div_rem(&a, &b);
        let mut back = mul(&q, &b);
        if back.len() < r.len() {
            back.resize(r.len(), BigRational::zero());
        }
        for (i, c) in r.iter().enumerate() {
            back[i] += c;
        }
        trim(&mut back);
        assert_eq!(back, a);
    }
}
