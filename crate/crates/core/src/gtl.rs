//! Generalised Temperley-Lieb algebras `TL_W`, realised as the span of the
//! Kazhdan-Lusztig basis elements `b_x` with `x` fully commutative, the
//! others being sent to zero.
//!
//! That truncation is an algebra map exactly when the non-FC span is an
//! ideal; [`check_ideal_closure`] verifies this for a given group.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::coxeter::{ElementId, GroupTable};
use crate::error::{Error, Result};
use crate::grank::grrk;
use crate::hecke::{antisymmetriser, from_kl_basis, kl_structure_constants, to_kl_lincomb, KlTable, Side};
use crate::lincomb::{add_into, LinComb};
use crate::qpoly::{quantum_int, LaurentPoly, RatFunc};

/// An element of `TL_W` in the IC basis `beta_x`.
#[derive(Clone)]
pub struct GtlElt {
    group: Arc<GroupTable>,
    coeffs: LinComb<ElementId>,
}

impl PartialEq for GtlElt {
    fn eq(&self, other: &Self) -> bool {
        crate::hecke::same_group(&self.group, &other.group) && self.coeffs == other.coeffs
    }
}

impl fmt::Debug for GtlElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .coefficients()
            .into_iter()
            .map(|(x, c)| format!("({}) beta[{}]", c, self.group.word_string(x)))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl GtlElt {
    pub fn zero(group: &Arc<GroupTable>) -> Self {
        Self { group: group.clone(), coeffs: LinComb::zero() }
    }

    pub fn one(group: &Arc<GroupTable>) -> Self {
        Self { group: group.clone(), coeffs: LinComb::basis(group.identity()) }
    }

    pub fn basis(group: &Arc<GroupTable>, x: ElementId) -> Result<Self> {
        Self::from_lincomb(group, LinComb::basis(x))
    }

    pub fn from_lincomb(group: &Arc<GroupTable>, coeffs: LinComb<ElementId>) -> Result<Self> {
        if let Some(x) = coeffs.keys().find(|x| !group.is_fully_commutative(**x)) {
            return Err(Error::NotFullyCommutative(group.word_string(*x)));
        }
        Ok(Self { group: group.clone(), coeffs })
    }

    /// Drops the non-FC part of a KL-basis expansion.
    pub fn truncate(group: &Arc<GroupTable>, kl: &LinComb<ElementId>) -> Self {
        Self { group: group.clone(), coeffs: kl.filter(|x| group.is_fully_commutative(*x)) }
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn coeffs(&self) -> &LinComb<ElementId> {
        &self.coeffs
    }

    pub fn coefficient(&self, x: ElementId) -> RatFunc {
        self.coeffs.coefficient(&x)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    fn check(&self, other: &GtlElt) -> Result<()> {
        if crate::hecke::same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::Mismatch(format!(
                "TL_W elements of {} and {}",
                self.group.presentation(),
                other.group.presentation()
            )))
        }
    }

    pub fn add(&self, other: &GtlElt) -> Result<GtlElt> {
        self.check(other)?;
        Ok(Self { group: self.group.clone(), coeffs: &self.coeffs + &other.coeffs })
    }

    pub fn sub(&self, other: &GtlElt) -> Result<GtlElt> {
        self.check(other)?;
        Ok(Self { group: self.group.clone(), coeffs: &self.coeffs - &other.coeffs })
    }

    pub fn scale(&self, r: &RatFunc) -> GtlElt {
        Self { group: self.group.clone(), coeffs: self.coeffs.scale(r) }
    }
}

/// Product in `TL_W` through the Hecke algebra: lift both factors to
/// `sum c_x b_x`, multiply in the standard basis, expand in the KL basis and
/// drop the non-FC part.
pub fn gtl_multiply(a: &GtlElt, b: &GtlElt, table: &KlTable) -> Result<GtlElt> {
    a.check(b)?;
    let ha = from_kl_basis(&a.coeffs, table);
    let hb = from_kl_basis(&b.coeffs, table);
    let prod = ha.multiply(&hb)?;
    Ok(GtlElt::truncate(&a.group, &to_kl_lincomb(&prod, table)))
}

/// `beta_x beta_s` from the mu-coefficients of `b_x b_s`, truncated.
fn right_gen(
    g: &GroupTable,
    table: &KlTable,
    nums: &BTreeMap<ElementId, LaurentPoly>,
    s: usize,
) -> BTreeMap<ElementId, LaurentPoly> {
    let two = quantum_int(2).unwrap();
    let mut out = BTreeMap::new();
    for (x, c) in nums {
        let xs = g.right_mult(*x, s);
        if g.length(xs) < g.length(*x) {
            add_into(&mut out, *x, &(c * &two));
            continue;
        }
        if g.is_fully_commutative(xs) {
            add_into(&mut out, xs, c);
        }
        for (z, h) in table.column(*x).entries() {
            if *z != *x && g.is_right_descent(*z, s) && g.is_fully_commutative(*z) {
                let mu = h.coeff(1);
                if mu != 0 {
                    add_into(&mut out, *z, &(c * &LaurentPoly::from_int(mu)));
                }
            }
        }
    }
    out
}

/// Product in `TL_W` computed inside the quotient: `a beta_y` is built from
/// `a beta_{y'}` with `y = y' s` by `b_{y'} b_s = b_y + sum mu(z, y') b_z`.
/// Only the columns of FC elements are needed. Agrees with
/// [`gtl_multiply`] whenever the non-FC span is a two-sided ideal.
pub fn gtl_multiply_quotient(a: &GtlElt, b: &GtlElt, table: &KlTable) -> Result<GtlElt> {
    a.check(b)?;
    let g = &*a.group;
    let Some(top) = b.coeffs.keys().max().copied() else {
        return Ok(GtlElt::zero(&a.group));
    };
    // a * beta_z for every FC z up to the last support element, in index
    // (hence length) order
    let mut products: BTreeMap<ElementId, BTreeMap<ElementId, LaurentPoly>> = BTreeMap::new();
    let a_nums = a.coeffs.numerators().clone();
    for z in g.elements().take(top.index() + 1) {
        if !g.is_fully_commutative(z) {
            continue;
        }
        let value = if z == g.identity() {
            a_nums.clone()
        } else {
            let s = *g.word(z).last().unwrap() as usize;
            let zp = g.right_mult(z, s);
            let mut v = right_gen(g, table, &products[&zp], s);
            for (w, h) in table.column(zp).entries() {
                if *w != zp && g.is_right_descent(*w, s) && g.is_fully_commutative(*w) {
                    let mu = h.coeff(1);
                    if mu != 0 {
                        let scale = LaurentPoly::from_int(-mu);
                        for (y, c) in &products[w] {
                            add_into(&mut v, *y, &(c * &scale));
                        }
                    }
                }
            }
            v
        };
        products.insert(z, value);
    }
    let mut acc = BTreeMap::new();
    for (y, c) in b.coeffs.numerators() {
        for (x, d) in &products[y] {
            add_into(&mut acc, *x, &(d * c));
        }
    }
    let den = a.coeffs.denominator() * b.coeffs.denominator();
    Ok(GtlElt { group: a.group.clone(), coeffs: LinComb::from_parts(acc, den) })
}

/// `j_W` as the image of the antisymmetriser.
pub fn gen_jw_projection(table: &KlTable) -> GtlElt {
    let g = table.group();
    let e = antisymmetriser(g);
    GtlElt::truncate(g, &to_kl_lincomb(&e, table))
}

/// `j_W = sum over FC x of (-1)^{l(x)} grrk(x w0)/grrk(w0) beta_x`.
pub fn gen_jw_closed(table: &KlTable) -> GtlElt {
    let g = table.group();
    let w0 = g.w0();
    let fc = g.fc_elements();
    table.compute_columns(&fc.iter().map(|&x| g.multiply(x, w0)).collect::<Vec<_>>());
    let den = grrk(table, w0).value;
    let nums = fc
        .into_iter()
        .map(|x| {
            let c = grrk(table, g.multiply(x, w0)).value;
            (x, if g.length(x).is_multiple_of(2) { c } else { -c })
        })
        .collect();
    GtlElt { group: g.clone(), coeffs: LinComb::from_parts(nums, den) }
}

/// Counts from an ideal-closure check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClosureReport {
    pub products_checked: usize,
    pub non_fc_elements: usize,
}

/// Checks that for every non-FC `x` and generator `s` the KL expansion of
/// `b_x b_s` is supported on non-FC elements. Since `x` is FC iff `x^-1` is,
/// applying the anti-involution `b_x -> b_{x^-1}` gives the left-hand
/// version for free.
pub fn check_ideal_closure(table: &KlTable) -> Result<ClosureReport> {
    let g = table.group();
    let mut report = ClosureReport::default();
    for x in g.elements() {
        if g.is_fully_commutative(x) {
            continue;
        }
        report.non_fc_elements += 1;
        for s in 0..g.rank() {
            let prod = kl_structure_constants(table, x, s, Side::Right);
            if let Some(z) = prod.keys().find(|z| g.is_fully_commutative(**z)) {
                return Err(Error::IdealClosure {
                    group: g.presentation().label(),
                    detail: format!(
                        "b_x b_s with x = {}, s = {} has the FC element {} in its support",
                        g.word_string(x),
                        s + 1,
                        g.word_string(*z)
                    ),
                });
            }
            report.products_checked += 1;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_group, BuildOptions, CoxeterPresentation, Family};

    fn table(p: CoxeterPresentation) -> KlTable {
        KlTable::new(Arc::new(build_group(&p, BuildOptions::default()).unwrap()))
    }

    #[test]
    fn dihedral_products() {
        let t = table(CoxeterPresentation::dihedral(4).unwrap());
        let g = t.group().clone();
        let beta = |w: &[u8]| GtlElt::basis(&g, g.from_word(w).unwrap()).unwrap();
        let two = RatFunc::from(quantum_int(2).unwrap());
        for mult in [gtl_multiply, gtl_multiply_quotient] {
            assert_eq!(mult(&beta(&[0]), &beta(&[0]), &t).unwrap(), beta(&[0]).scale(&two));
            assert_eq!(mult(&beta(&[0]), &beta(&[1]), &t).unwrap(), beta(&[0, 1]));
            assert_eq!(mult(&beta(&[0, 1, 0]), &beta(&[0]), &t).unwrap(), beta(&[0, 1, 0]).scale(&two));
        }
    }

    #[test]
    fn closed_equals_projection_b3() {
        let t = table(CoxeterPresentation::new(Family::B, 3).unwrap());
        let closed = gen_jw_closed(&t);
        assert_eq!(closed, gen_jw_projection(&t));
        assert_eq!(closed.coefficient(t.group().identity()), RatFunc::one());
        assert_eq!(gtl_multiply_quotient(&closed, &closed, &t).unwrap(), closed);
        assert_eq!(gtl_multiply(&closed, &closed, &t).unwrap(), closed);
    }

    #[test]
    fn ideal_closure_small_groups() {
        for p in [CoxeterPresentation::new(Family::B, 2).unwrap(), CoxeterPresentation::dihedral(5).unwrap()] {
            let t = table(p);
            let r = check_ideal_closure(&t).unwrap();
            assert!(r.products_checked > 0);
        }
    }

    #[test]
    fn non_fc_basis_is_rejected() {
        let t = table(CoxeterPresentation::new(Family::A, 2).unwrap());
        let g = t.group().clone();
        assert!(GtlElt::basis(&g, g.w0()).is_err());
    }
}
