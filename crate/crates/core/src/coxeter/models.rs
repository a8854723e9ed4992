//! Faithful models used to identify group elements during enumeration.
//!
//! Each model is a right action of the generators on a hashable state; two
//! words give the same element iff they act to the same state from the
//! identity.

use std::hash::Hash;

use super::presentation::{CoxeterPresentation, Family};
use crate::error::{Error, Result};

pub(crate) trait Model {
    type State: Clone + Eq + Hash;
    fn identity(&self) -> Self::State;
    /// State of `x * s`.
    fn apply(&self, x: &Self::State, s: usize) -> Self::State;
}

/// `A_n` as permutations of `n + 1` points; `s_i` swaps positions `i, i+1`.
pub(crate) struct PermModel {
    pub points: usize,
}

impl Model for PermModel {
    type State = Vec<u8>;

    fn identity(&self) -> Vec<u8> {
        (0..self.points as u8).collect()
    }

    fn apply(&self, x: &Vec<u8>, s: usize) -> Vec<u8> {
        let mut y = x.clone();
        y.swap(s, s + 1);
        y
    }
}

/// `B_n` as signed permutations; generator 0 negates the first entry and
/// generator `i >= 1` swaps entries `i - 1, i`.
pub(crate) struct SignedPermModel {
    pub n: usize,
}

impl Model for SignedPermModel {
    type State = Vec<i8>;

    fn identity(&self) -> Vec<i8> {
        (1..=self.n as i8).collect()
    }

    fn apply(&self, x: &Vec<i8>, s: usize) -> Vec<i8> {
        let mut y = x.clone();
        if s == 0 {
            y[0] = -y[0];
        } else {
            y.swap(s - 1, s);
        }
        y
    }
}

/// `I2(m)` by alternating normal forms: `(len, first)` is the alternating
/// word of length `len` starting with generator `first`. The identity is
/// `(0, 0)` and the longest element is stored as `(m, 0)`.
pub(crate) struct DihedralModel {
    pub m: u32,
}

impl DihedralModel {
    fn last(len: u32, first: u8) -> u8 {
        if len % 2 == 1 {
            first
        } else {
            1 - first
        }
    }
}

impl Model for DihedralModel {
    type State = (u32, u8);

    fn identity(&self) -> (u32, u8) {
        (0, 0)
    }

    fn apply(&self, &(len, first): &(u32, u8), s: usize) -> (u32, u8) {
        let s = s as u8;
        if len == 0 {
            return (1, s);
        }
        if len == self.m {
            // pick the reduced word of w0 that ends in s and drop that letter
            let start = if Self::last(len, 0) == s { 0 } else { 1 };
            return (len - 1, start);
        }
        if Self::last(len, first) == s {
            if len == 1 {
                (0, 0)
            } else {
                (len - 1, first)
            }
        } else if len + 1 == self.m {
            (self.m, 0)
        } else {
            (len + 1, first)
        }
    }
}

/// `a + b*theta` with `theta^2 = p*theta + q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct QuadInt {
    a: i64,
    b: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct QuadRing {
    p: i64,
    q: i64,
}

impl QuadRing {
    pub const GOLDEN: QuadRing = QuadRing { p: 1, q: 1 };
    pub const SQRT2: QuadRing = QuadRing { p: 0, q: 2 };
    pub const SQRT3: QuadRing = QuadRing { p: 0, q: 3 };

    fn mul(self, x: QuadInt, y: QuadInt) -> QuadInt {
        let bd = x.b * y.b;
        QuadInt { a: x.a * y.a + bd * self.q, b: x.a * y.b + x.b * y.a + bd * self.p }
    }
}

/// The geometric representation: the state is the matrix of `x` on the
/// basis of simple roots, stored column-major. Right multiplication by `s`
/// replaces column `t` by `col_t - 2B(a_s, a_t) col_s`.
///
/// Entries of `-2cos(pi/m)` live in `Z[theta]`: `theta = sqrt 2` for
/// `m = 4`, the golden ratio for `m = 5`, `sqrt 3` for `m = 6`.
pub(crate) struct ReflectionModel {
    rank: usize,
    ring: QuadRing,
    /// `2B(a_s, a_t)`
    form: Vec<Vec<QuadInt>>,
}

impl ReflectionModel {
    pub fn new(p: &CoxeterPresentation) -> Result<Self> {
        let mut ring = None;
        let rank = p.rank();
        let mut form = vec![vec![QuadInt { a: 0, b: 0 }; rank]; rank];
        for (s, row) in form.iter_mut().enumerate() {
            for (t, entry) in row.iter_mut().enumerate() {
                *entry = match p.m(s, t) {
                    1 => QuadInt { a: 2, b: 0 },
                    2 => QuadInt { a: 0, b: 0 },
                    3 => QuadInt { a: -1, b: 0 },
                    m @ (4..=6) => {
                        let r = match m {
                            4 => QuadRing::SQRT2,
                            5 => QuadRing::GOLDEN,
                            _ => QuadRing::SQRT3,
                        };
                        if ring.is_some_and(|old| old != r) {
                            return Err(Error::Unsupported(format!(
                                "{}: mixed quadratic fields in the geometric model",
                                p.label()
                            )));
                        }
                        ring = Some(r);
                        QuadInt { a: 0, b: -1 }
                    }
                    m => {
                        return Err(Error::Unsupported(format!(
                            "{}: m = {} has no quadratic geometric model",
                            p.label(),
                            m
                        )))
                    }
                };
            }
        }
        Ok(Self { rank, ring: ring.unwrap_or(QuadRing::SQRT2), form })
    }
}

impl Model for ReflectionModel {
    type State = Vec<QuadInt>;

    fn identity(&self) -> Vec<QuadInt> {
        let r = self.rank;
        let mut m = vec![QuadInt { a: 0, b: 0 }; r * r];
        for i in 0..r {
            m[i * r + i] = QuadInt { a: 1, b: 0 };
        }
        m
    }

    fn apply(&self, x: &Vec<QuadInt>, s: usize) -> Vec<QuadInt> {
        let r = self.rank;
        let mut y = x.clone();
        for t in 0..r {
            let c = self.form[s][t];
            if c.a == 0 && c.b == 0 {
                continue;
            }
            for i in 0..r {
                let prod = self.ring.mul(c, x[s * r + i]);
                let cell = &mut y[t * r + i];
                cell.a -= prod.a;
                cell.b -= prod.b;
            }
        }
        y
    }
}

/// Which faithful model a family uses by default.
pub(crate) fn default_is_geometric(family: Family) -> bool {
    matches!(family, Family::F4 | Family::H3 | Family::H4)
}
