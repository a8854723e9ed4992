//! Graded ranks `grrk(x) = sum_y v^-l(y) h_{y,x}` and the idempotent
//! coefficients built from them.

use std::fmt;

use serde::Serialize;

use crate::coxeter::{ElementId, GroupTable};
use crate::hecke::KlTable;
use crate::qpoly::{parity_class, LaurentPoly, RatFunc};

/// The graded rank of the indecomposable Soergel module attached to `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedRank {
    pub element: ElementId,
    pub length: usize,
    pub value: LaurentPoly,
}

impl GradedRank {
    pub fn is_bar_symmetric(&self) -> bool {
        self.value.bar() == self.value
    }

    /// `value in v^{l(x)} Z[v^-2]`.
    pub fn satisfies_parity(&self) -> bool {
        parity_class(&self.value, self.length as i32)
    }
}

impl fmt::Display for GradedRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.value, f)
    }
}

pub fn grrk(table: &KlTable, x: ElementId) -> GradedRank {
    let g = table.group();
    let col = table.column(x);
    let mut counts: Vec<i64> = Vec::new();
    // exponent k - l(y) lies in [-l(x), l(x)]; index it from -l(x)
    let top = g.length(x) as i32;
    counts.resize(2 * top as usize + 1, 0);
    for (y, h) in col.entries() {
        let ly = g.length(*y) as i32;
        for (k, c) in h.terms_desc() {
            counts[(k as i32 - ly + top) as usize] += c;
        }
    }
    let value = LaurentPoly::from_int_terms(counts.iter().enumerate().map(|(i, c)| (i as i32 - top, *c)));
    GradedRank { element: x, length: g.length(x), value }
}

/// The Poincare polynomial `sum_{y <= x} v^{l(x) - 2l(y)}` of the Bruhat
/// interval below `x`.
pub fn poincare_interval(g: &GroupTable, x: ElementId) -> LaurentPoly {
    let top = g.length(x);
    let mut counts = vec![0i64; top + 1];
    for y in g.bruhat_interval(x) {
        counts[g.length(y)] += 1;
    }
    LaurentPoly::from_int_terms(counts.iter().enumerate().map(|(l, c)| (top as i32 - 2 * l as i32, *c)))
}

/// `(-1)^{l(x)} grrk(x w0) / grrk(w0)`.
pub fn jw_coefficient(table: &KlTable, x: ElementId) -> RatFunc {
    let g = table.group();
    let num = grrk(table, g.multiply(x, g.w0())).value;
    let den = grrk(table, g.w0()).value;
    let num = if g.length(x).is_multiple_of(2) { num } else { -num };
    RatFunc::new(num, den).expect("grrk(w0) is nonzero")
}
