//! The Hecke algebra of a finite Coxeter group over `Q(v)`.
//!
//! Conventions: standard basis `delta_x`, quadratic relation
//! `(delta_s + v)(delta_s - v^-1) = 0`, bar involution `v -> v^-1`,
//! `delta_x -> delta_{x^-1}^-1`, and the Kazhdan-Lusztig basis
//! `b_x = sum_y h_{y,x} delta_y` with `h_{x,x} = 1`, `h_{y,x} in vZ[v]` for
//! `y < x` (so `b_s = delta_s + v`).

mod antisym;
pub mod cache;
mod kl;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

pub use antisym::{antisymmetriser, grrk_w0_closed, t_w0};
pub use kl::{KlColumn, KlPoly, KlTable};

use crate::coxeter::{ElementId, GroupTable};
use crate::error::{Error, Result};
use crate::lincomb::{add_into, LinComb};
use crate::qpoly::{LaurentPoly, RatFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

type Numerators = BTreeMap<ElementId, LaurentPoly>;

/// A `Q(v)`-linear combination of standard basis elements `delta_x`.
#[derive(Clone)]
pub struct HeckeElt {
    group: Arc<GroupTable>,
    coeffs: LinComb<ElementId>,
}

impl PartialEq for HeckeElt {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group) && self.coeffs == other.coeffs
    }
}

impl fmt::Debug for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .coefficients()
            .into_iter()
            .map(|(x, c)| format!("({}) d[{}]", c, self.group.word_string(x)))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

pub(crate) fn same_group(a: &Arc<GroupTable>, b: &Arc<GroupTable>) -> bool {
    Arc::ptr_eq(a, b) || a.presentation() == b.presentation()
}

impl HeckeElt {
    pub fn zero(group: &Arc<GroupTable>) -> Self {
        Self { group: group.clone(), coeffs: LinComb::zero() }
    }

    pub fn one(group: &Arc<GroupTable>) -> Self {
        Self::delta(group, ElementId::IDENTITY)
    }

    pub fn delta(group: &Arc<GroupTable>, x: ElementId) -> Self {
        Self { group: group.clone(), coeffs: LinComb::basis(x) }
    }

    pub fn from_lincomb(group: &Arc<GroupTable>, coeffs: LinComb<ElementId>) -> Self {
        Self { group: group.clone(), coeffs }
    }

    pub fn from_laurent<I: IntoIterator<Item = (ElementId, LaurentPoly)>>(group: &Arc<GroupTable>, iter: I) -> Self {
        Self::from_lincomb(group, LinComb::from_laurent(iter))
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

    fn check(&self, other: &HeckeElt) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::Mismatch(format!(
                "Hecke elements of {} and {}",
                self.group.presentation(),
                other.group.presentation()
            )))
        }
    }

    pub fn add(&self, other: &HeckeElt) -> Result<HeckeElt> {
        self.check(other)?;
        Ok(Self::from_lincomb(&self.group, &self.coeffs + &other.coeffs))
    }

    pub fn sub(&self, other: &HeckeElt) -> Result<HeckeElt> {
        self.check(other)?;
        Ok(Self::from_lincomb(&self.group, &self.coeffs - &other.coeffs))
    }

    pub fn neg(&self) -> HeckeElt {
        Self::from_lincomb(&self.group, -&self.coeffs)
    }

    pub fn scale(&self, r: &RatFunc) -> HeckeElt {
        Self::from_lincomb(&self.group, self.coeffs.scale(r))
    }

    pub fn scale_laurent(&self, p: &LaurentPoly) -> HeckeElt {
        Self::from_lincomb(&self.group, self.coeffs.scale_laurent(p))
    }

    /// `h * delta_s` or `delta_s * h`.
    pub fn mult_by_gen(&self, s: usize, side: Side) -> HeckeElt {
        let nums = gen_mult(&self.group, self.coeffs.numerators(), s, side);
        Self::from_lincomb(&self.group, LinComb::from_parts(nums, self.coeffs.denominator().clone()))
    }

    pub fn multiply(&self, other: &HeckeElt) -> Result<HeckeElt> {
        self.check(other)?;
        let nums = multiply_numerators(&self.group, self.coeffs.numerators(), other.coeffs.numerators());
        let den = self.coeffs.denominator() * other.coeffs.denominator();
        Ok(Self::from_lincomb(&self.group, LinComb::from_parts(nums, den)))
    }

    /// The Kazhdan-Lusztig involution: antilinear, with
    /// `bar(delta_x) = prod over the reduced word of (delta_s + v - v^-1)`.
    pub fn bar_involution(&self) -> HeckeElt {
        let g = &self.group;
        let step = &LaurentPoly::v() - &LaurentPoly::v_inv();
        let mut acc: Numerators = BTreeMap::new();
        let barred: HashMap<ElementId, LaurentPoly> =
            self.coeffs.numerators().iter().map(|(x, c)| (*x, c.bar())).collect();
        walk_prefix_tree(
            g,
            self.coeffs.keys().copied(),
            BTreeMap::from([(ElementId::IDENTITY, LaurentPoly::one())]),
            |cur, s| {
                let mut next = gen_mult(g, cur, s, Side::Right);
                for (y, c) in cur {
                    add_into(&mut next, *y, &(c * &step));
                }
                next
            },
            |y, cur| {
                if let Some(c) = barred.get(&y) {
                    for (z, d) in cur {
                        add_into(&mut acc, *z, &(d * c));
                    }
                }
            },
        );
        Self::from_lincomb(g, LinComb::from_parts(acc, self.coeffs.denominator().bar()))
    }
}

/// Numerator-level generator multiplication.
pub(crate) fn gen_mult(g: &GroupTable, a: &Numerators, s: usize, side: Side) -> Numerators {
    let quad = &LaurentPoly::v_inv() - &LaurentPoly::v();
    let mut out = BTreeMap::new();
    for (x, c) in a {
        let y = match side {
            Side::Right => g.right_mult(*x, s),
            Side::Left => g.left_mult(s, *x),
        };
        add_into(&mut out, y, c);
        if g.length(y) < g.length(*x) {
            add_into(&mut out, *x, &(c * &quad));
        }
    }
    out
}

/// Depth-first walk over the tree of ShortLex prefixes of `targets`,
/// carrying `state(y)` for each visited node `y`: the root is the identity
/// and the child `y s` gets `step(state(y), s)`. `visit` sees every node
/// that is one of the targets.
pub(crate) fn walk_prefix_tree<S>(
    g: &GroupTable,
    targets: impl Iterator<Item = ElementId>,
    root: S,
    mut step: impl FnMut(&S, usize) -> S,
    mut visit: impl FnMut(ElementId, &S),
) {
    let mut wanted: HashMap<ElementId, bool> = HashMap::new();
    let mut children: HashMap<ElementId, Vec<(ElementId, usize)>> = HashMap::new();
    for t in targets {
        let known = wanted.contains_key(&t);
        wanted.insert(t, true);
        if known {
            continue;
        }
        let mut y = t;
        while y != ElementId::IDENTITY {
            let s = *g.word(y).last().unwrap() as usize;
            let parent = g.right_mult(y, s);
            children.entry(parent).or_default().push((y, s));
            if wanted.contains_key(&parent) {
                break;
            }
            wanted.insert(parent, false);
            y = parent;
        }
    }
    fn rec<S>(
        y: ElementId,
        state: &S,
        wanted: &HashMap<ElementId, bool>,
        children: &HashMap<ElementId, Vec<(ElementId, usize)>>,
        step: &mut impl FnMut(&S, usize) -> S,
        visit: &mut impl FnMut(ElementId, &S),
    ) {
        if wanted.get(&y).copied().unwrap_or(false) {
            visit(y, state);
        }
        if let Some(ch) = children.get(&y) {
            let mut ch = ch.clone();
            ch.sort();
            for (c, s) in ch {
                let next = step(state, s);
                rec(c, &next, wanted, children, step, visit);
            }
        }
    }
    rec(ElementId::IDENTITY, &root, &wanted, &children, &mut step, &mut visit);
}

/// `a * b` on Laurent numerators: `sum_y b_y (a delta_y)`, building each
/// `a delta_y` from its ShortLex prefix.
pub(crate) fn multiply_numerators(g: &GroupTable, a: &Numerators, b: &Numerators) -> Numerators {
    let mut acc: Numerators = BTreeMap::new();
    if a.is_empty() || b.is_empty() {
        return acc;
    }
    walk_prefix_tree(
        g,
        b.keys().copied(),
        a.clone(),
        |cur, s| gen_mult(g, cur, s, Side::Right),
        |y, cur| {
            let c = &b[&y];
            for (z, d) in cur {
                add_into(&mut acc, *z, &(d * c));
            }
        },
    );
    acc
}

/// Coefficients `c_x` with `h = sum_x c_x b_x`, by unitriangular
/// back-substitution from the top of the support.
pub fn to_kl_basis(h: &HeckeElt, table: &KlTable) -> BTreeMap<ElementId, RatFunc> {
    to_kl_lincomb(h, table).coefficients().into_iter().collect()
}

/// As [`to_kl_basis`], keeping the shared-denominator form.
pub fn to_kl_lincomb(h: &HeckeElt, table: &KlTable) -> LinComb<ElementId> {
    let nums = numerators_to_kl(h.coeffs.numerators(), table);
    LinComb::from_parts(nums, h.coeffs.denominator().clone())
}

pub(crate) fn numerators_to_kl(nums: &Numerators, table: &KlTable) -> Numerators {
    int_numerators_to_kl(nums, table).unwrap_or_else(|| exact_numerators_to_kl(nums, table))
}

fn exact_numerators_to_kl(nums: &Numerators, table: &KlTable) -> Numerators {
    let mut work = nums.clone();
    let mut out = BTreeMap::new();
    while let Some((x, c)) = work.pop_last() {
        let col = table.column(x);
        for (y, h) in col.entries() {
            if *y != x {
                add_into(&mut work, *y, &-(&c * &h.to_laurent()));
            }
        }
        out.insert(x, c);
    }
    out
}

/// The same back-substitution on dense integer rows, which is much faster
/// on large groups. `None` if a coefficient is not an integer or an
/// intermediate value overflows.
fn int_numerators_to_kl(nums: &Numerators, table: &KlTable) -> Option<Numerators> {
    let g = table.group();
    let lo = nums.values().filter_map(LaurentPoly::min_exp).min();
    let hi = nums.values().filter_map(LaurentPoly::max_exp).max();
    let (Some(lo), Some(hi)) = (lo, hi) else {
        return Some(BTreeMap::new());
    };
    // h_{y,x} has degree at most l(x) - l(y), so exponents never pass hi + l(w0)
    let width = (hi - lo) as usize + g.length(g.w0()) + 1;
    let mut rows: Vec<Vec<i128>> = vec![Vec::new(); g.size()];
    for (x, c) in nums {
        let row = &mut rows[x.index()];
        row.resize(width, 0);
        for (e, q) in c.terms() {
            if !q.is_integer() {
                return None;
            }
            row[(e - lo) as usize] = q.to_integer().to_i128()?;
        }
    }
    let mut out = BTreeMap::new();
    let mut nonzero: Vec<(usize, i128)> = Vec::new();
    for xi in (0..rows.len()).rev() {
        let row = std::mem::take(&mut rows[xi]);
        nonzero.clear();
        nonzero.extend(row.iter().enumerate().filter(|(_, c)| **c != 0).map(|(i, c)| (i, *c)));
        if nonzero.is_empty() {
            continue;
        }
        let x = ElementId(xi as u32);
        for (y, h) in table.column(x).entries() {
            if *y == x {
                continue;
            }
            if y.index() > xi {
                return None;
            }
            let target = &mut rows[y.index()];
            if target.is_empty() {
                target.resize(width, 0);
            }
            for (k, hk) in h.terms_desc() {
                for &(i, c) in &nonzero {
                    let slot = target.get_mut(i + k)?;
                    *slot = slot.checked_sub(c.checked_mul(hk as i128)?)?;
                }
            }
        }
        let terms = nonzero.iter().map(|&(i, c)| (i as i32 + lo, BigRational::from_integer(BigInt::from(c))));
        out.insert(x, LaurentPoly::from_terms(terms));
    }
    Some(out)
}

/// `sum_x c_x b_x` expanded in the standard basis.
pub fn from_kl_basis(coeffs: &LinComb<ElementId>, table: &KlTable) -> HeckeElt {
    let mut acc = BTreeMap::new();
    for (x, c) in coeffs.numerators() {
        for (y, h) in table.column(*x).entries() {
            add_into(&mut acc, *y, &(c * &h.to_laurent()));
        }
    }
    HeckeElt::from_lincomb(table.group(), LinComb::from_parts(acc, coeffs.denominator().clone()))
}

/// KL-basis expansion of `b_x b_s` (or `b_s b_x`), computed by multiplying
/// in the standard basis and converting back.
pub fn kl_structure_constants(table: &KlTable, x: ElementId, s: usize, side: Side) -> LinComb<ElementId> {
    let g = table.group();
    let bx = table.kl_basis(x);
    let bs_times = |h: &HeckeElt| {
        let gen = h.mult_by_gen(s, side);
        gen.add(&h.scale_laurent(&LaurentPoly::v())).expect("same group")
    };
    let prod = bs_times(&bx);
    debug_assert!(same_group(prod.group(), g));
    to_kl_lincomb(&prod, table)
}

/// `b_x b_s` in the KL basis from the mu-coefficients:
/// `[2] b_x` if `xs < x`, else `b_{xs} + sum_{z < x, zs < z} mu(z, x) b_z`.
pub fn kl_times_gen_via_mu(table: &KlTable, x: ElementId, s: usize) -> LinComb<ElementId> {
    let g = table.group();
    let xs = g.right_mult(x, s);
    if g.length(xs) < g.length(x) {
        return LinComb::from_laurent([(x, crate::qpoly::quantum_int(2).unwrap())]);
    }
    let mut terms = vec![(xs, LaurentPoly::one())];
    for (z, h) in table.column(x).entries() {
        if *z != x && g.is_right_descent(*z, s) {
            let mu = h.coeff(1);
            if mu != 0 {
                terms.push((*z, LaurentPoly::from_int(mu)));
            }
        }
    }
    LinComb::from_laurent(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_group, BuildOptions, CoxeterPresentation, Family};
    use crate::qpoly::quantum_int;

    fn group(family: Family, rank: usize) -> Arc<GroupTable> {
        Arc::new(build_group(&CoxeterPresentation::new(family, rank).unwrap(), BuildOptions::default()).unwrap())
    }

    fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(terms.iter().copied())
    }

    #[test]
    fn integer_back_substitution_matches_exact() {
        for (family, rank) in [(Family::B, 3), (Family::H3, 3)] {
            let g = group(family, rank);
            let table = KlTable::new(g.clone());
            let nums: Numerators = g
                .elements()
                .map(|x| (x, lp(&[(-(g.length(x) as i32), 1 + x.0 as i64 % 3), (x.0 as i32 % 4, -2)])))
                .collect();
            let fast = int_numerators_to_kl(&nums, &table).unwrap();
            assert_eq!(fast, exact_numerators_to_kl(&nums, &table));
        }
    }

    #[test]
    fn quadratic_relation() {
        let g = group(Family::A, 1);
        let s = g.generator(0);
        let ds = HeckeElt::delta(&g, s);
        let sq = ds.multiply(&ds).unwrap();
        let expect = HeckeElt::from_laurent(&g, [(g.identity(), LaurentPoly::one()), (s, lp(&[(-1, 1), (1, -1)]))]);
        assert_eq!(sq, expect);
    }

    #[test]
    fn length_additive_products() {
        let g = group(Family::A, 2);
        let (s1, s2) = (g.generator(0), g.generator(1));
        let prod = HeckeElt::delta(&g, s1).multiply(&HeckeElt::delta(&g, s2)).unwrap();
        assert_eq!(prod, HeckeElt::delta(&g, g.multiply(s1, s2)));
        assert_eq!(HeckeElt::one(&g).mult_by_gen(0, Side::Left), HeckeElt::delta(&g, s1));
    }

    #[test]
    fn kl_generator_squares() {
        let g = group(Family::B, 2);
        let table = KlTable::new(g.clone());
        for s in 0..2 {
            let bs = table.kl_basis(g.generator(s));
            let sq = bs.multiply(&bs).unwrap();
            assert_eq!(sq, bs.scale_laurent(&quantum_int(2).unwrap()));
        }
    }

    #[test]
    fn bar_of_generator() {
        let g = group(Family::A, 1);
        let s = g.generator(0);
        let bar = HeckeElt::delta(&g, s).bar_involution();
        let expect = HeckeElt::from_laurent(&g, [(s, LaurentPoly::one()), (g.identity(), lp(&[(1, 1), (-1, -1)]))]);
        assert_eq!(bar, expect);
        let bs = HeckeElt::from_laurent(&g, [(s, LaurentPoly::one()), (g.identity(), LaurentPoly::v())]);
        assert_eq!(bs.bar_involution(), bs);
    }

    #[test]
    fn to_kl_examples() {
        let g = group(Family::A, 2);
        let table = KlTable::new(g.clone());
        let s = g.generator(0);
        let got = to_kl_basis(&HeckeElt::delta(&g, s), &table);
        assert_eq!(got.len(), 2);
        assert_eq!(got[&s], RatFunc::one());
        assert_eq!(got[&g.identity()], RatFunc::from(lp(&[(1, -1)])));
        assert!(to_kl_basis(&HeckeElt::zero(&g), &table).is_empty());
        for x in g.elements() {
            let back = to_kl_basis(&table.kl_basis(x), &table);
            assert_eq!(back, BTreeMap::from([(x, RatFunc::one())]));
        }
    }

    #[test]
    fn mu_route_matches_standard_route() {
        for g in [group(Family::A, 3), group(Family::B, 3)] {
            let table = KlTable::new(g.clone());
            for x in g.elements() {
                for s in 0..g.rank() {
                    assert_eq!(
                        kl_structure_constants(&table, x, s, Side::Right),
                        kl_times_gen_via_mu(&table, x, s),
                        "{} x={} s={}",
                        g.presentation(),
                        g.word_string(x),
                        s
                    );
                }
            }
        }
    }
}
