//! Sparse `Q(v)`-linear combinations stored as Laurent numerators over one
//! shared denominator.
//!
//! Every algebra element in the crate (Hecke, Temperley-Lieb, generalised
//! Temperley-Lieb) is a `LinComb` over its own basis type. Keeping a single
//! denominator lets all products and sums run in `Q[v, v^-1]`; a gcd pass
//! after each operation restores the canonical form:
//!
//! * the denominator is a monic polynomial with nonzero constant term,
//! * it is coprime to the numerators taken together,
//! * no numerator is zero.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::One;

use crate::qpoly::{self, upoly, LaurentPoly, RatFunc};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, LaurentPoly>,
    denom: LaurentPoly,
}

impl<K: Ord + Clone> Default for LinComb<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new(), denom: LaurentPoly::one() }
    }

    pub fn basis(k: K) -> Self {
        Self::from_laurent([(k, LaurentPoly::one())])
    }

    /// A combination with coefficients in `Q[v, v^-1]`.
    pub fn from_laurent<I: IntoIterator<Item = (K, LaurentPoly)>>(iter: I) -> Self {
        let mut terms: BTreeMap<K, LaurentPoly> = BTreeMap::new();
        for (k, c) in iter {
            add_into(&mut terms, k, &c);
        }
        Self { terms, denom: LaurentPoly::one() }
    }

    pub fn from_coeffs<I: IntoIterator<Item = (K, RatFunc)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            if c.is_zero() {
                continue;
            }
            let term = Self::from_parts(BTreeMap::from([(k, c.numerator().clone())]), c.denominator().clone());
            out = &out + &term;
        }
        out
    }

    /// `sum_k numerators[k] / denom`, brought into canonical form.
    pub fn from_parts(terms: BTreeMap<K, LaurentPoly>, denom: LaurentPoly) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        let mut out = Self { terms, denom };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
        if self.terms.is_empty() {
            self.denom = LaurentPoly::one();
            return;
        }
        if self.denom.is_one() {
            return;
        }
        // move powers of v and the scalar part of a monomial denominator
        // into the numerators
        let (shift, mut dd) = self.denom.to_dense();
        if shift != 0 {
            for c in self.terms.values_mut() {
                *c = c.shift(-shift);
            }
        }
        let mut g = dd.clone();
        for c in self.terms.values() {
            if upoly::is_constant(&g) {
                break;
            }
            g = upoly::gcd(&g, &qpoly::poly_part(c));
        }
        if !upoly::is_constant(&g) {
            let gl = LaurentPoly::from_dense(0, g.clone());
            for c in self.terms.values_mut() {
                *c = qpoly::div_exact(c, &gl);
            }
            dd = upoly::div_exact(&dd, &g);
        }
        let lc = dd.last().cloned().unwrap();
        if !lc.is_one() {
            let inv = BigRational::one() / &lc;
            for c in self.terms.values_mut() {
                *c = c.scale(&inv);
            }
            for c in dd.iter_mut() {
                *c *= &inv;
            }
        }
        self.denom = LaurentPoly::from_dense(0, dd);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.denom
    }

    pub fn numerators(&self) -> &BTreeMap<K, LaurentPoly> {
        &self.terms
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> + '_ {
        self.terms.keys()
    }

    pub fn contains(&self, k: &K) -> bool {
        self.terms.contains_key(k)
    }

    pub fn coefficient(&self, k: &K) -> RatFunc {
        match self.terms.get(k) {
            Some(c) => RatFunc::canonical(c.clone(), self.denom.clone()),
            None => RatFunc::zero(),
        }
    }

    /// Coefficients as canonical rational functions, in key order.
    pub fn coefficients(&self) -> Vec<(K, RatFunc)> {
        self.terms.iter().map(|(k, c)| (k.clone(), RatFunc::canonical(c.clone(), self.denom.clone()))).collect()
    }

    pub fn scale(&self, r: &RatFunc) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(k, c)| (k.clone(), c * r.numerator())).collect();
        Self::from_parts(terms, &self.denom * r.denominator())
    }

    pub fn scale_laurent(&self, p: &LaurentPoly) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(k, c)| (k.clone(), c * p)).collect();
        Self::from_parts(terms, self.denom.clone())
    }

    /// Keeps the terms whose key satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        let terms = self.terms.iter().filter(|(k, _)| keep(k)).map(|(k, c)| (k.clone(), c.clone())).collect();
        Self::from_parts(terms, self.denom.clone())
    }

    /// Relabels the basis; colliding images are summed.
    pub fn map_keys<J: Ord + Clone>(&self, mut f: impl FnMut(&K) -> J) -> LinComb<J> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            add_into(&mut terms, f(k), c);
        }
        LinComb::from_parts(terms, self.denom.clone())
    }

    /// Applies the involution `v -> v^-1` to every coefficient.
    pub fn bar_coefficients(&self) -> Self {
        let terms = self.terms.iter().map(|(k, c)| (k.clone(), c.bar())).collect();
        Self::from_parts(terms, self.denom.bar())
    }

    /// Bilinear extension of `basis_product`, which must push the Laurent
    /// expansion of `k1 * k2` into the supplied accumulator.
    pub fn bilinear<K1: Ord + Clone, K2: Ord + Clone>(
        a: &LinComb<K1>,
        b: &LinComb<K2>,
        mut basis_product: impl FnMut(&K1, &K2, &mut Accumulator<K>),
    ) -> Self {
        let mut acc = Accumulator::new();
        let mut partial = Accumulator::new();
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                partial.clear();
                basis_product(ka, kb, &mut partial);
                let scale = ca * cb;
                for (k, c) in partial.terms.iter() {
                    acc.add(k.clone(), &(c * &scale));
                }
            }
        }
        Self::from_parts(acc.terms, &a.denom * &b.denom)
    }

    /// Splits off the denominator: `self = numerators / denominator`.
    pub fn into_parts(self) -> (BTreeMap<K, LaurentPoly>, LaurentPoly) {
        (self.terms, self.denom)
    }
}

/// Scratch map for Laurent-coefficient sums.
#[derive(Debug, Clone)]
pub struct Accumulator<K: Ord> {
    pub(crate) terms: BTreeMap<K, LaurentPoly>,
}

impl<K: Ord + Clone> Default for Accumulator<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone> Accumulator<K> {
    pub fn new() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn add(&mut self, k: K, c: &LaurentPoly) {
        add_into(&mut self.terms, k, c);
    }

    pub fn clear(&mut self) {
        self.terms.clear();
    }

    pub fn into_map(self) -> BTreeMap<K, LaurentPoly> {
        self.terms
    }
}

pub(crate) fn add_into<K: Ord>(map: &mut BTreeMap<K, LaurentPoly>, k: K, c: &LaurentPoly) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(k) {
        Entry::Vacant(e) => {
            e.insert(c.clone());
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn combine<K: Ord + Clone>(a: &LinComb<K>, b: &LinComb<K>, negate: bool) -> LinComb<K> {
    let sign = |c: &LaurentPoly| if negate { -c } else { c.clone() };
    if a.denom == b.denom {
        let mut terms = a.terms.clone();
        for (k, c) in &b.terms {
            add_into(&mut terms, k.clone(), &sign(c));
        }
        return LinComb::from_parts(terms, a.denom.clone());
    }
    let l = qpoly::lcm_denominators(&a.denom, &b.denom);
    let fa = qpoly::div_exact(&l, &a.denom);
    let fb = qpoly::div_exact(&l, &b.denom);
    let mut terms: BTreeMap<K, LaurentPoly> = a.terms.iter().map(|(k, c)| (k.clone(), c * &fa)).collect();
    for (k, c) in &b.terms {
        add_into(&mut terms, k.clone(), &sign(&(c * &fb)));
    }
    LinComb::from_parts(terms, l)
}

impl<'a, K: Ord + Clone> std::ops::Add<&'a LinComb<K>> for &'a LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        combine(self, rhs, false)
    }
}

impl<'a, K: Ord + Clone> std::ops::Sub<&'a LinComb<K>> for &'a LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        combine(self, rhs, true)
    }
}

impl<K: Ord + Clone> std::ops::Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        LinComb { terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(), denom: self.denom.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::quantum_int;

    fn q(n: i64) -> LaurentPoly {
        quantum_int(n).unwrap()
    }

    #[test]
    fn sum_with_different_denominators() {
        let a = LinComb::from_coeffs([(0u32, RatFunc::new(LaurentPoly::one(), q(2)).unwrap())]);
        let b = LinComb::from_coeffs([(0u32, RatFunc::new(LaurentPoly::one(), q(3)).unwrap())]);
        let s = &a + &b;
        let expect =
            &RatFunc::new(LaurentPoly::one(), q(2)).unwrap() + &RatFunc::new(LaurentPoly::one(), q(3)).unwrap();
        assert_eq!(s.coefficient(&0), expect);
    }

    #[test]
    fn cancellation_resets_denominator() {
        let a = LinComb::from_coeffs([(1u32, RatFunc::new(LaurentPoly::one(), q(3)).unwrap())]);
        let z = &a - &a;
        assert!(z.is_zero());
        assert!(z.denominator().is_one());
        assert_eq!(z, LinComb::zero());
    }

    #[test]
    fn common_factor_leaves_denominator() {
        // [2]/[2] * b0 + [2]/[2] * b1 normalises to integer coefficients
        let terms = BTreeMap::from([(0u32, q(2)), (1u32, &q(2) * &q(3))]);
        let c = LinComb::from_parts(terms, q(2));
        assert!(c.denominator().is_one());
        assert_eq!(c.coefficient(&1), RatFunc::from(q(3)));
    }
}
