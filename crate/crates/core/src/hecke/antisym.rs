use std::collections::BTreeMap;
use std::sync::Arc;

use super::HeckeElt;
use crate::coxeter::GroupTable;
use crate::lincomb::LinComb;
use crate::qpoly::LaurentPoly;

/// `[T_{w0}] = sum_x (-v)^{-l(x w0)} delta_x`.
pub fn t_w0(g: &Arc<GroupTable>) -> HeckeElt {
    let top = g.length(g.w0()) as i32;
    HeckeElt::from_laurent(
        g,
        g.elements().map(|x| {
            let k = top - g.length(x) as i32;
            let sign = if k % 2 == 0 { 1 } else { -1 };
            (x, LaurentPoly::int_monomial(-k, sign))
        }),
    )
}

/// `sum_x v^{l(w0) - 2 l(x)}`, the Poincare polynomial of the group.
pub fn grrk_w0_closed(g: &GroupTable) -> LaurentPoly {
    let top = g.length(g.w0()) as i32;
    let mut counts = vec![0i64; top as usize + 1];
    for x in g.elements() {
        counts[g.length(x)] += 1;
    }
    LaurentPoly::from_int_terms(counts.iter().enumerate().map(|(l, c)| (top - 2 * l as i32, *c)))
}

/// The antisymmetriser `e_sign = (-1)^{l(w0)} [T_{w0}] / grrk(w0)`:
/// the idempotent on which every `delta_s` acts by `-v`.
pub fn antisymmetriser(g: &Arc<GroupTable>) -> HeckeElt {
    let top = g.length(g.w0()) as i32;
    let nums: BTreeMap<_, _> = g
        .elements()
        .map(|x| {
            let l = g.length(x) as i32;
            let sign = if l % 2 == 0 { 1 } else { -1 };
            (x, LaurentPoly::int_monomial(l - top, sign))
        })
        .collect();
    HeckeElt::from_lincomb(g, LinComb::from_parts(nums, grrk_w0_closed(g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_group, BuildOptions, CoxeterPresentation, Family};
    use crate::hecke::Side;
    use crate::qpoly::{quantum_factorial, quantum_int, RatFunc};

    fn group(p: CoxeterPresentation) -> Arc<GroupTable> {
        Arc::new(build_group(&p, BuildOptions::default()).unwrap())
    }

    #[test]
    fn a1_closed_form() {
        let g = group(CoxeterPresentation::new(Family::A, 1).unwrap());
        let e = antisymmetriser(&g);
        let two = RatFunc::from(quantum_int(2).unwrap());
        let s = g.generator(0);
        assert_eq!(e.coefficient(g.identity()), RatFunc::from(LaurentPoly::v_inv()).checked_div(&two).unwrap());
        assert_eq!(e.coefficient(s), RatFunc::from(-LaurentPoly::one()).checked_div(&two).unwrap());
    }

    #[test]
    fn type_a_poincare_polynomial_is_quantum_factorial() {
        for n in 2..=5 {
            let g = group(CoxeterPresentation::new(Family::A, n - 1).unwrap());
            assert_eq!(grrk_w0_closed(&g), quantum_factorial(n as i64).unwrap());
        }
    }

    #[test]
    fn sign_character_and_idempotency() {
        let g = group(CoxeterPresentation::new(Family::B, 2).unwrap());
        let e = antisymmetriser(&g);
        for s in 0..2 {
            let lhs = e.mult_by_gen(s, Side::Right);
            assert_eq!(lhs, e.scale_laurent(&-LaurentPoly::v()));
            assert_eq!(e.mult_by_gen(s, Side::Left), e.scale_laurent(&-LaurentPoly::v()));
        }
        assert_eq!(e.multiply(&e).unwrap(), e);
        let t = t_w0(&g);
        assert_eq!(t.multiply(&t).unwrap(), t.scale_laurent(&grrk_w0_closed(&g)));
    }
}
