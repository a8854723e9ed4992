mod common;

use std::collections::BTreeSet;

use common::group;
use kljw::hecke::antisymmetriser;
use kljw::qpoly::quantum_int;
use kljw::tl::{closed_jw, jw_minus, monomial, monomial_from_word, project_pi, wenzl_jw};
use kljw::{Diagram, ElementId, Family, GroupTable, KlTable, LoopSign, RatFunc, TlElt};

fn q(k: i64) -> RatFunc {
    RatFunc::from(quantum_int(k).unwrap())
}

fn strands(n: usize) -> (std::sync::Arc<GroupTable>, KlTable) {
    let g = group(Family::A, n - 1);
    let t = KlTable::new(g.clone());
    (g, t)
}

fn reduced_words(g: &GroupTable, x: ElementId) -> Vec<Vec<u8>> {
    if x == g.identity() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for s in 0..g.rank() {
        if g.is_right_descent(x, s) {
            for mut w in reduced_words(g, g.right_mult(x, s)) {
                w.push(s as u8);
                out.push(w);
            }
        }
    }
    out
}

#[test]
fn j2_and_j3_values() {
    let (_, t) = strands(2);
    let j2 = closed_jw(&t).unwrap();
    assert_eq!(j2.coefficient(&Diagram::generator(2, 0).unwrap()), -q(2).inv().unwrap());

    let (g, t) = strands(3);
    let j3 = closed_jw(&t).unwrap();
    let coeff = |w: &[u8]| j3.coefficient(&monomial(&g, g.from_word(w).unwrap()).unwrap());
    let two_thirds = q(2).checked_div(&q(3)).unwrap();
    let third = q(3).inv().unwrap();
    assert_eq!(coeff(&[]), RatFunc::one());
    assert_eq!(coeff(&[0]), -two_thirds.clone());
    assert_eq!(coeff(&[1]), -two_thirds);
    assert_eq!(coeff(&[0, 1]), third.clone());
    assert_eq!(coeff(&[1, 0]), third);
    assert_eq!(j3.coeffs().len(), 5);
}

#[test]
fn three_constructions_agree() {
    for n in 2..=6 {
        let (g, t) = strands(n);
        let closed = closed_jw(&t).unwrap();
        assert_eq!(closed, wenzl_jw(n, LoopSign::Plus).unwrap(), "n = {}", n);
        assert_eq!(closed, project_pi(&antisymmetriser(&g), &t).unwrap(), "n = {}", n);
        assert_eq!(jw_minus(&t).unwrap(), wenzl_jw(n, LoopSign::Minus).unwrap(), "n = {}", n);
    }
}

#[test]
fn minus_coefficients_are_koszul_and_sign_twists() {
    for n in 2..=5 {
        let (g, t) = strands(n);
        let plus = closed_jw(&t).unwrap();
        let minus = jw_minus(&t).unwrap();
        for x in g.fc_elements() {
            let d = monomial(&g, x).unwrap();
            let c = plus.coefficient(&d);
            assert_eq!(minus.coefficient(&d), c.koszul());
            let twisted = if g.length(x) % 2 == 0 { c } else { -c };
            assert_eq!(minus.coefficient(&d), twisted);
        }
    }
}

#[test]
fn idempotent_and_killed_by_cups() {
    for n in 1..=5 {
        for sign in [LoopSign::Plus, LoopSign::Minus] {
            let j = wenzl_jw(n, sign).unwrap();
            assert_eq!(j.multiply(&j).unwrap(), j);
            assert_eq!(j.coefficient(&Diagram::identity(n)), RatFunc::one());
            for i in 0..n.saturating_sub(1) {
                let u = TlElt::generator(n, i, sign).unwrap();
                assert!(u.multiply(&j).unwrap().is_zero());
                assert!(j.multiply(&u).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn monomials_are_well_defined_and_distinct() {
    for n in 2..=5 {
        let (g, _) = strands(n);
        let mut seen = BTreeSet::new();
        for x in g.fc_elements() {
            let d = monomial(&g, x).unwrap();
            assert!(d.is_planar());
            for w in reduced_words(&g, x) {
                assert_eq!(monomial_from_word(n, &w).unwrap(), d);
            }
            assert!(seen.insert(d));
        }
    }
}

#[test]
fn monomial_of_non_fc_is_rejected() {
    let (g, _) = strands(3);
    assert!(monomial(&g, g.w0()).is_err());
}

#[test]
fn projection_needs_type_a() {
    let g = group(Family::B, 2);
    let t = KlTable::new(g.clone());
    assert!(closed_jw(&t).is_err());
    assert!(project_pi(&antisymmetriser(&g), &t).is_err());
}
