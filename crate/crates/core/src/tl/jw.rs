use std::collections::BTreeMap;

use super::{Diagram, LoopSign, TlElt};
use crate::coxeter::{ElementId, Family, GroupTable};
use crate::error::{Error, Result};
use crate::grank::grrk;
use crate::hecke::{to_kl_lincomb, HeckeElt, KlTable};
use crate::lincomb::LinComb;
use crate::qpoly::{quantum_int, LaurentPoly, RatFunc};

/// The diagram of `u_{i1} ... u_{ik}` for a word in the generators of
/// `A_{n-1}`.
pub fn monomial_from_word(n: usize, word: &[u8]) -> Result<Diagram> {
    let mut d = Diagram::identity(n);
    for &s in word {
        d = d.compose(&Diagram::generator(n, s as usize)?)?.0;
    }
    Ok(d)
}

fn strands(g: &GroupTable) -> Result<usize> {
    if g.family() != Family::A {
        return Err(Error::Unsupported(format!(
            "the diagrammatic Temperley-Lieb algebra needs type A, got {}",
            g.presentation()
        )));
    }
    Ok(g.rank() + 1)
}

/// `u_x` for a fully commutative `x` of `A_{n-1}`.
pub fn monomial(g: &GroupTable, x: ElementId) -> Result<Diagram> {
    let n = strands(g)?;
    if !g.is_fully_commutative(x) {
        return Err(Error::NotFullyCommutative(g.word_string(x)));
    }
    monomial_from_word(n, g.word(x))
}

/// Wenzl's recursion `j_k = j_{k-1} - ([k-1]/[k]) j_{k-1} u_{k-1} j_{k-1}`.
/// In `TL^-` the loop value changes sign and so does the ratio.
pub fn wenzl_jw(n: usize, sign: LoopSign) -> Result<TlElt> {
    if n < 1 {
        return Err(Error::InvalidArgument("Jones-Wenzl idempotents need n >= 1".into()));
    }
    let mut j = TlElt::identity(1, sign);
    for k in 2..=n {
        let prev = j.extend(1);
        let u = TlElt::generator(k, k - 2, sign)?;
        let mut ratio = RatFunc::new(quantum_int(k as i64 - 1)?, quantum_int(k as i64)?)?;
        if sign == LoopSign::Minus {
            ratio = -ratio;
        }
        let correction = prev.multiply(&u)?.multiply(&prev)?.scale(&ratio);
        j = prev.sub(&correction)?;
    }
    Ok(j)
}

fn fc_combination(table: &KlTable, sign: LoopSign, alternate: bool) -> Result<TlElt> {
    let g = table.group();
    let n = strands(g)?;
    let w0 = g.w0();
    let fc = g.fc_elements();
    table.compute_columns(&fc.iter().map(|&x| g.multiply(x, w0)).collect::<Vec<_>>());
    let den = grrk(table, w0).value;
    let mut nums = BTreeMap::new();
    for x in fc {
        let mut c = grrk(table, g.multiply(x, w0)).value;
        if alternate && g.length(x) % 2 == 1 {
            c = -c;
        }
        nums.insert(monomial(g, x)?, c);
    }
    TlElt::from_lincomb(n, sign, LinComb::from_parts(nums, den))
}

/// `j_n = sum over fully commutative x of (-1)^{l(x)} grrk(x w0)/grrk(w0) u_x`,
/// with `table` built on `A_{n-1}`.
pub fn closed_jw(table: &KlTable) -> Result<TlElt> {
    fc_combination(table, LoopSign::Plus, true)
}

/// `j_n^- = sum over fully commutative x of grrk(x w0)/grrk(w0) u_x^-`.
pub fn jw_minus(table: &KlTable) -> Result<TlElt> {
    fc_combination(table, LoopSign::Minus, false)
}

/// The quotient map `H -> TL_n`: `b_x -> u_x` for fully commutative `x` and
/// `b_x -> 0` otherwise.
pub fn project_pi(h: &HeckeElt, table: &KlTable) -> Result<TlElt> {
    let g = table.group();
    let n = strands(g)?;
    let kl = to_kl_lincomb(h, table);
    let (nums, den) = kl.into_parts();
    let mut out: BTreeMap<Diagram, LaurentPoly> = BTreeMap::new();
    for (x, c) in nums {
        if g.is_fully_commutative(x) {
            out.insert(monomial(g, x)?, c);
        }
    }
    TlElt::from_lincomb(n, LoopSign::Plus, LinComb::from_parts(out, den))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::coxeter::{build_group, BuildOptions, CoxeterPresentation};
    use crate::hecke::antisymmetriser;

    fn table(n: usize) -> KlTable {
        let p = CoxeterPresentation::new(Family::A, n - 1).unwrap();
        KlTable::new(Arc::new(build_group(&p, BuildOptions::default()).unwrap()))
    }

    fn q(k: i64) -> RatFunc {
        RatFunc::from(quantum_int(k).unwrap())
    }

    #[test]
    fn j2_and_j3() {
        let j2 = wenzl_jw(2, LoopSign::Plus).unwrap();
        let u = Diagram::generator(2, 0).unwrap();
        assert_eq!(j2.coefficient(&u), -q(2).inv().unwrap());
        assert_eq!(j2.coefficient(&Diagram::identity(2)), RatFunc::one());

        let j3 = wenzl_jw(3, LoopSign::Plus).unwrap();
        let expect = [
            (vec![], RatFunc::one()),
            (vec![0], -q(2).checked_div(&q(3)).unwrap()),
            (vec![1], -q(2).checked_div(&q(3)).unwrap()),
            (vec![0, 1], q(3).inv().unwrap()),
            (vec![1, 0], q(3).inv().unwrap()),
        ];
        assert_eq!(j3.coeffs().len(), 5);
        for (w, c) in expect {
            assert_eq!(j3.coefficient(&monomial_from_word(3, &w).unwrap()), c, "{:?}", w);
        }
    }

    #[test]
    fn three_constructions_agree_for_small_n() {
        for n in 2..=4 {
            let t = table(n);
            let closed = closed_jw(&t).unwrap();
            let wenzl = wenzl_jw(n, LoopSign::Plus).unwrap();
            let proj = project_pi(&antisymmetriser(t.group()), &t).unwrap();
            assert_eq!(closed, wenzl, "n = {}", n);
            assert_eq!(proj, wenzl, "n = {}", n);
        }
    }

    #[test]
    fn minus_variant() {
        for n in 2..=4 {
            let t = table(n);
            let closed = jw_minus(&t).unwrap();
            assert_eq!(closed, wenzl_jw(n, LoopSign::Minus).unwrap());
            assert_eq!(closed.multiply(&closed).unwrap(), closed);
        }
    }

    #[test]
    fn monomials_need_type_a_and_fc() {
        let t = table(3);
        let g = t.group();
        assert!(matches!(monomial(g, g.w0()), Err(Error::NotFullyCommutative(_))));
        let b2 = build_group(&CoxeterPresentation::new(Family::B, 2).unwrap(), BuildOptions::default()).unwrap();
        assert!(monomial(&b2, b2.identity()).is_err());
    }
}
