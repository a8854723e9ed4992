mod common;

use std::sync::Arc;

use common::{dihedral, group, table};
use kljw::gtl::{check_ideal_closure, gen_jw_closed, gen_jw_projection, gtl_multiply, gtl_multiply_quotient};
use kljw::tl::{closed_jw, monomial};
use kljw::{Family, GroupTable, GtlElt, KlTable, LaurentPoly, LinComb, RatFunc};
use proptest::prelude::*;

fn random_elt(g: &Arc<GroupTable>, raw: &[(usize, i32, i64)]) -> GtlElt {
    let fc = g.fc_elements();
    let terms = raw.iter().map(|&(i, e, c)| (fc[i % fc.len()], LaurentPoly::int_monomial(e, c)));
    GtlElt::from_lincomb(g, LinComb::from_laurent(terms)).unwrap()
}

fn raw() -> impl Strategy<Value = Vec<(usize, i32, i64)>> {
    prop::collection::vec((0usize..200, -2i32..=2, -2i64..=2), 1..4)
}

fn setups() -> &'static [(Arc<GroupTable>, KlTable)] {
    static S: std::sync::OnceLock<Vec<(Arc<GroupTable>, KlTable)>> = std::sync::OnceLock::new();
    S.get_or_init(|| {
        [group(Family::B, 2), group(Family::B, 3), dihedral(5)]
            .into_iter()
            .map(|g| {
                let t = table(&g);
                (g, t)
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn multiplication_routes_agree_and_associate(which in 0usize..3, a in raw(), b in raw(), c in raw()) {
        let (g, t) = &setups()[which];
        let (a, b, c) = (random_elt(g, &a), random_elt(g, &b), random_elt(g, &c));
        let ab = gtl_multiply(&a, &b, t).unwrap();
        prop_assert_eq!(&ab, &gtl_multiply_quotient(&a, &b, t).unwrap());
        let left = gtl_multiply_quotient(&ab, &c, t).unwrap();
        let right = gtl_multiply_quotient(&a, &gtl_multiply_quotient(&b, &c, t).unwrap(), t).unwrap();
        prop_assert_eq!(left, right);
    }
}

fn check_jw(g: &Arc<GroupTable>) {
    let t = table(g);
    let closed = gen_jw_closed(&t);
    assert_eq!(closed, gen_jw_projection(&t), "{}", g.presentation().label());
    assert_eq!(closed.coefficient(g.identity()), RatFunc::one());
    assert_eq!(closed.coeffs().len(), g.fc_elements().len());
    assert_eq!(gtl_multiply_quotient(&closed, &closed, &t).unwrap(), closed);
    for s in 0..g.rank() {
        let beta = GtlElt::basis(g, g.generator(s)).unwrap();
        assert!(gtl_multiply_quotient(&beta, &closed, &t).unwrap().is_zero());
        assert!(gtl_multiply_quotient(&closed, &beta, &t).unwrap().is_zero());
    }
}

#[test]
fn generalised_jw_in_small_groups() {
    for g in [group(Family::B, 2), group(Family::B, 3), group(Family::B, 4), group(Family::H3, 3)] {
        check_jw(&g);
    }
    for m in 3..=9 {
        check_jw(&dihedral(m));
    }
}

#[test]
fn dihedral_four_generator_coefficient() {
    let g = dihedral(4);
    let t = table(&g);
    let j = gen_jw_closed(&t);
    let num = LaurentPoly::from_int_terms([(3, -1), (1, -2), (-1, -2), (-3, -1)]);
    let den = LaurentPoly::from_int_terms([(4, 1), (2, 2), (0, 2), (-2, 2), (-4, 1)]);
    let expected = RatFunc::new(num, den).unwrap();
    assert_eq!(j.coefficient(g.generator(0)), expected);
    assert_eq!(j.coefficient(g.generator(1)), expected);
}

#[test]
fn type_a_matches_temperley_lieb() {
    for n in 2..=5 {
        let g = group(Family::A, n - 1);
        let t = table(&g);
        let gen = gen_jw_closed(&t);
        let tl = closed_jw(&t).unwrap();
        for x in g.fc_elements() {
            assert_eq!(gen.coefficient(x), tl.coefficient(&monomial(&g, x).unwrap()));
        }
        check_jw(&g);
    }
}

#[test]
fn non_fc_span_is_an_ideal() {
    for g in [group(Family::A, 3), group(Family::B, 3), group(Family::H3, 3), dihedral(7)] {
        let t = table(&g);
        let report = check_ideal_closure(&t).unwrap();
        assert_eq!(report.non_fc_elements, g.size() - g.fc_elements().len());
    }
}

#[test]
fn basis_requires_fully_commutative() {
    let g = group(Family::B, 2);
    assert!(GtlElt::basis(&g, g.w0()).is_err());
    assert!(GtlElt::from_lincomb(&g, LinComb::basis(g.w0())).is_err());
    let mixed = LinComb::from_laurent([(g.w0(), LaurentPoly::one()), (g.generator(0), LaurentPoly::v())]);
    let truncated = GtlElt::truncate(&g, &mixed);
    assert_eq!(truncated.coeffs().len(), 1);
    assert_eq!(truncated.coefficient(g.generator(0)), RatFunc::from(LaurentPoly::v()));
}
