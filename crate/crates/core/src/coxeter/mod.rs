//! Finite Coxeter groups, fully enumerated.
//!
//! Elements are numbered in (length, ShortLex) order of their minimal reduced
//! words, so index 0 is the identity and the last index is the longest
//! element. Every table downstream (KL caches, emitted documents) inherits
//! this order.

mod fc;
mod models;
mod presentation;

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

pub use fc::{is_321_avoiding, is_fc_word};
pub use presentation::{CoxeterPresentation, Family};

use crate::error::{Error, Result};
use models::{DihedralModel, Model, PermModel, ReflectionModel, SignedPermModel};

/// Groups above this order need [`BuildOptions::allow_large`].
pub const LARGE_GROUP_THRESHOLD: u64 = 10_000;
/// Hard ceiling on group order.
pub const MAX_GROUP_ORDER: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ElementId(pub u32);

impl ElementId {
    pub const IDENTITY: ElementId = ElementId(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ModelChoice {
    /// Permutations for A, signed permutations for B, alternating normal
    /// forms for I2, reflection matrices for F4/H3/H4.
    #[default]
    Canonical,
    /// Reflection matrices over `Z[theta]` for every family that has one.
    Geometric,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct BuildOptions {
    pub allow_large: bool,
    pub model: ModelChoice,
}

impl BuildOptions {
    pub fn large() -> Self {
        Self { allow_large: true, ..Self::default() }
    }
}

/// A fully enumerated finite Coxeter group. Immutable once built.
pub struct GroupTable {
    presentation: CoxeterPresentation,
    rank: usize,
    right: Vec<u32>,
    left: Vec<u32>,
    length: Vec<u32>,
    words: Vec<Vec<u8>>,
    inverse: Vec<u32>,
    w0: ElementId,
    fc: Vec<bool>,
    bruhat: OnceLock<BruhatTable>,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupTable({}, {} elements)", self.presentation, self.size())
    }
}

/// Enumerates the group. Deterministic: the same presentation always gives
/// identical tables.
pub fn build_group(presentation: &CoxeterPresentation, opts: BuildOptions) -> Result<GroupTable> {
    let order = presentation.order();
    if order > MAX_GROUP_ORDER {
        return Err(Error::Unsupported(format!(
            "{} has order {}, above the supported maximum {}",
            presentation, order, MAX_GROUP_ORDER
        )));
    }
    if order > LARGE_GROUP_THRESHOLD && !opts.allow_large {
        return Err(Error::TooLarge { order, limit: LARGE_GROUP_THRESHOLD });
    }
    let rank = presentation.rank();
    let geometric = opts.model == ModelChoice::Geometric || models::default_is_geometric(presentation.family());
    let (right, words) = if geometric {
        enumerate(&ReflectionModel::new(presentation)?, rank)
    } else {
        match presentation.family() {
            Family::A => enumerate(&PermModel { points: rank + 1 }, rank),
            Family::B => enumerate(&SignedPermModel { n: rank }, rank),
            Family::I2 => enumerate(&DihedralModel { m: presentation.m(0, 1) }, rank),
            _ => unreachable!("handled by the geometric model"),
        }
    };
    if words.len() as u64 != order {
        return Err(Error::InvalidArgument(format!(
            "enumeration of {} produced {} elements, expected {}",
            presentation,
            words.len(),
            order
        )));
    }
    let size = words.len();
    let length: Vec<u32> = words.iter().map(|w| w.len() as u32).collect();
    let mut inverse = vec![0u32; size];
    for (x, w) in words.iter().enumerate() {
        let mut y = 0u32;
        for &s in w.iter().rev() {
            y = right[y as usize * rank + s as usize];
        }
        inverse[x] = y;
    }
    let mut left = vec![0u32; size * rank];
    for x in 0..size {
        let xi = inverse[x] as usize;
        for s in 0..rank {
            left[x * rank + s] = inverse[right[xi * rank + s] as usize];
        }
    }
    let w0 = ElementId((size - 1) as u32);
    let mut table = GroupTable {
        presentation: presentation.clone(),
        rank,
        right,
        left,
        length,
        words,
        inverse,
        w0,
        fc: Vec::new(),
        bruhat: OnceLock::new(),
    };
    table.fc = fc::compute_flags(&table);
    Ok(table)
}

/// Breadth-first enumeration. Processing elements in index order and
/// generators in increasing order discovers each element first through its
/// ShortLex-minimal reduced word, and in ShortLex order.
fn enumerate<M: Model>(model: &M, rank: usize) -> (Vec<u32>, Vec<Vec<u8>>) {
    let mut states = vec![model.identity()];
    let mut index: HashMap<M::State, u32> = HashMap::from([(model.identity(), 0)]);
    let mut words: Vec<Vec<u8>> = vec![Vec::new()];
    let mut right: Vec<u32> = Vec::new();
    let mut i = 0;
    while i < states.len() {
        for s in 0..rank {
            let next = model.apply(&states[i], s);
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    let id = states.len() as u32;
                    let mut w = words[i].clone();
                    w.push(s as u8);
                    words.push(w);
                    index.insert(next.clone(), id);
                    states.push(next);
                    id
                }
            };
            right.push(id);
        }
        i += 1;
    }
    (right, words)
}

impl GroupTable {
    pub fn presentation(&self) -> &CoxeterPresentation {
        &self.presentation
    }

    pub fn family(&self) -> Family {
        self.presentation.family()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn elements(&self) -> impl DoubleEndedIterator<Item = ElementId> + ExactSizeIterator {
        (0..self.size() as u32).map(ElementId)
    }

    pub fn identity(&self) -> ElementId {
        ElementId::IDENTITY
    }

    pub fn w0(&self) -> ElementId {
        self.w0
    }

    pub fn generator(&self, s: usize) -> ElementId {
        self.right_mult(ElementId::IDENTITY, s)
    }

    pub fn length(&self, x: ElementId) -> usize {
        self.length[x.index()] as usize
    }

    /// The ShortLex-minimal reduced word (0-based generator indices).
    pub fn word(&self, x: ElementId) -> &[u8] {
        &self.words[x.index()]
    }

    /// `x * s`
    pub fn right_mult(&self, x: ElementId, s: usize) -> ElementId {
        ElementId(self.right[x.index() * self.rank + s])
    }

    /// `s * x`
    pub fn left_mult(&self, s: usize, x: ElementId) -> ElementId {
        ElementId(self.left[x.index() * self.rank + s])
    }

    pub fn inverse(&self, x: ElementId) -> ElementId {
        ElementId(self.inverse[x.index()])
    }

    /// `x * y`, by right-multiplying `x` along the reduced word of `y`.
    pub fn multiply(&self, x: ElementId, y: ElementId) -> ElementId {
        self.word(y).iter().fold(x, |acc, &s| self.right_mult(acc, s as usize))
    }

    pub fn from_word(&self, word: &[u8]) -> Result<ElementId> {
        let mut x = ElementId::IDENTITY;
        for &s in word {
            if s as usize >= self.rank {
                return Err(Error::InvalidArgument(format!("generator {} out of range", s)));
            }
            x = self.right_mult(x, s as usize);
        }
        Ok(x)
    }

    pub fn is_right_descent(&self, x: ElementId, s: usize) -> bool {
        self.length(self.right_mult(x, s)) < self.length(x)
    }

    pub fn is_left_descent(&self, s: usize, x: ElementId) -> bool {
        self.length(self.left_mult(s, x)) < self.length(x)
    }

    /// Lowest-index left descent, `None` for the identity.
    pub fn first_left_descent(&self, x: ElementId) -> Option<usize> {
        (0..self.rank).find(|&s| self.is_left_descent(s, x))
    }

    pub fn first_right_descent(&self, x: ElementId) -> Option<usize> {
        (0..self.rank).find(|&s| self.is_right_descent(x, s))
    }

    pub fn is_fully_commutative(&self, x: ElementId) -> bool {
        self.fc[x.index()]
    }

    pub fn fc_elements(&self) -> Vec<ElementId> {
        self.elements().filter(|&x| self.is_fully_commutative(x)).collect()
    }

    /// `y <= x` in Bruhat order.
    pub fn bruhat_leq(&self, y: ElementId, x: ElementId) -> bool {
        self.bruhat_table().leq(y, x)
    }

    /// All `y <= x`, in index order.
    pub fn bruhat_interval(&self, x: ElementId) -> Vec<ElementId> {
        self.bruhat_table().below(x).collect()
    }

    fn bruhat_table(&self) -> &BruhatTable {
        self.bruhat.get_or_init(|| BruhatTable::build(self))
    }

    /// Word rendered with 1-based generator indices joined by `-`; the
    /// identity is `e`.
    pub fn word_string(&self, x: ElementId) -> String {
        format_word(self.word(x))
    }
}

pub fn format_word(word: &[u8]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|s| (s + 1).to_string()).collect::<Vec<_>>().join("-")
    }
}

/// Parses `e` or hyphen-separated 1-based generator indices.
pub fn parse_word(text: &str) -> Result<Vec<u8>> {
    let text = text.trim();
    if text == "e" || text.is_empty() {
        return Ok(Vec::new());
    }
    text.split('-')
        .map(|t| match t.trim().parse::<u8>() {
            Ok(k) if k >= 1 => Ok(k - 1),
            _ => Err(Error::InvalidArgument(format!("bad word '{}'", text))),
        })
        .collect()
}

/// Lower Bruhat intervals as bitsets, built by the descent recursion
/// `[e, x] = [e, sx] u s[e, sx]` for a left descent `s` of `x`.
struct BruhatTable {
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BruhatTable {
    fn build(g: &GroupTable) -> Self {
        let n = g.size();
        let wpr = n.div_ceil(64);
        let mut bits = vec![0u64; n * wpr];
        bits[0] = 1;
        for x in 1..n {
            let xe = ElementId(x as u32);
            let s = g.first_left_descent(xe).expect("non-identity has a descent");
            let sx = g.left_mult(s, xe).index();
            let (done, rest) = bits.split_at_mut(x * wpr);
            let row = &mut rest[..wpr];
            let prev = &done[sx * wpr..(sx + 1) * wpr];
            row.copy_from_slice(prev);
            for (wi, &word) in prev.iter().enumerate() {
                let mut w = word;
                while w != 0 {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    let y = wi * 64 + b;
                    let sy = g.left_mult(s, ElementId(y as u32)).index();
                    row[sy / 64] |= 1 << (sy % 64);
                }
            }
        }
        Self { words_per_row: wpr, bits }
    }

    fn leq(&self, y: ElementId, x: ElementId) -> bool {
        let (y, x) = (y.index(), x.index());
        self.bits[x * self.words_per_row + y / 64] >> (y % 64) & 1 == 1
    }

    fn below(&self, x: ElementId) -> impl Iterator<Item = ElementId> + '_ {
        let row = &self.bits[x.index() * self.words_per_row..(x.index() + 1) * self.words_per_row];
        row.iter().enumerate().flat_map(|(wi, &word)| {
            (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| ElementId((wi * 64 + b) as u32))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(family: Family, rank: usize) -> GroupTable {
        build_group(&CoxeterPresentation::new(family, rank).unwrap(), BuildOptions::default()).unwrap()
    }

    fn dihedral(m: u32) -> GroupTable {
        build_group(&CoxeterPresentation::dihedral(m).unwrap(), BuildOptions::default()).unwrap()
    }

    #[test]
    fn small_group_sizes() {
        let a2 = group(Family::A, 2);
        assert_eq!(a2.size(), 6);
        assert_eq!(a2.length(a2.w0()), 3);
        let i7 = dihedral(7);
        assert_eq!(i7.size(), 14);
        assert_eq!(i7.length(i7.w0()), 7);
        let h3 = group(Family::H3, 3);
        assert_eq!(h3.size(), 120);
        assert_eq!(h3.length(h3.w0()), 15);
    }

    #[test]
    fn identity_and_shortlex_order() {
        let a3 = group(Family::A, 3);
        assert_eq!(a3.word(a3.identity()), &[] as &[u8]);
        for w in a3.elements().collect::<Vec<_>>().windows(2) {
            let (a, b) = (a3.word(w[0]), a3.word(w[1]));
            assert!((a.len(), a) < (b.len(), b));
        }
    }

    #[test]
    fn length_changes_by_one_and_w0_complements() {
        for g in [group(Family::B, 3), group(Family::A, 3), dihedral(5), group(Family::H3, 3)] {
            let w0 = g.w0();
            assert_eq!(g.multiply(w0, w0), g.identity());
            for x in g.elements() {
                for s in 0..g.rank() {
                    let d = g.length(g.right_mult(x, s)) as i64 - g.length(x) as i64;
                    assert!(d == 1 || d == -1);
                }
                assert_eq!(g.length(g.multiply(x, w0)), g.length(w0) - g.length(x));
                assert_eq!(g.from_word(g.word(x)).unwrap(), x);
            }
        }
    }

    #[test]
    fn multiplication_examples() {
        let a2 = group(Family::A, 2);
        let (s1, s2) = (a2.generator(0), a2.generator(1));
        assert_eq!(a2.length(a2.multiply(s1, s2)), 2);
        for x in a2.elements() {
            assert_eq!(a2.multiply(x, a2.identity()), x);
            assert_eq!(a2.multiply(x, a2.inverse(x)), a2.identity());
            for s in 0..2 {
                // (x s)^-1 = s x^-1
                assert_eq!(a2.inverse(a2.right_mult(x, s)), a2.left_mult(s, a2.inverse(x)));
            }
        }
    }

    #[test]
    fn bruhat_examples() {
        let a2 = group(Family::A, 2);
        let (s1, s2) = (a2.generator(0), a2.generator(1));
        assert!(!a2.bruhat_leq(s1, s2));
        for x in a2.elements() {
            assert!(a2.bruhat_leq(a2.identity(), x));
            assert!(a2.bruhat_leq(x, a2.w0()));
        }
        assert_eq!(a2.bruhat_interval(a2.w0()).len(), 6);
    }

    #[test]
    fn size_guard() {
        let h4 = CoxeterPresentation::new(Family::H4, 4).unwrap();
        assert!(matches!(build_group(&h4, BuildOptions::default()), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn words_round_trip() {
        assert_eq!(parse_word("1-2-1").unwrap(), vec![0, 1, 0]);
        assert_eq!(parse_word("e").unwrap(), Vec::<u8>::new());
        assert_eq!(format_word(&[1, 0]), "2-1");
        assert!(parse_word("0-1").is_err());
    }
}
