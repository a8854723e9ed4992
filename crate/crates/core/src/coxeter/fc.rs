use std::collections::{HashSet, VecDeque};

use super::{CoxeterPresentation, Family, GroupTable};

/// Stembridge's criterion on one reduced word: no word in its commutation
/// class contains an alternating factor `s t s ...` of length `m(s, t) >= 3`.
pub fn is_fc_word(word: &[u8], p: &CoxeterPresentation) -> bool {
    let m = |s: u8, t: u8| p.m(s as usize, t as usize);
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut queue = VecDeque::from([word.to_vec()]);
    seen.insert(word.to_vec());
    while let Some(w) = queue.pop_front() {
        if contains_braid(&w, &m) {
            return false;
        }
        for i in 0..w.len().saturating_sub(1) {
            if w[i] != w[i + 1] && m(w[i], w[i + 1]) == 2 {
                let mut n = w.clone();
                n.swap(i, i + 1);
                if seen.insert(n.clone()) {
                    queue.push_back(n);
                }
            }
        }
    }
    true
}

fn contains_braid(w: &[u8], m: &impl Fn(u8, u8) -> u32) -> bool {
    for i in 0..w.len().saturating_sub(1) {
        let (s, t) = (w[i], w[i + 1]);
        if s == t {
            continue;
        }
        let len = m(s, t) as usize;
        if len < 3 || i + len > w.len() {
            continue;
        }
        if (0..len).all(|k| w[i + k] == if k % 2 == 0 { s } else { t }) {
            return true;
        }
    }
    false
}

/// No indices `i < j < k` with `p[i] > p[j] > p[k]`.
pub fn is_321_avoiding(perm: &[u8]) -> bool {
    // a permutation avoids 321 iff it is a union of two increasing sequences:
    // track the largest value seen and the largest value not a left-to-right max
    let mut max_seen: i32 = -1;
    let mut max_other: i32 = -1;
    for &v in perm {
        let v = v as i32;
        if v > max_seen {
            max_seen = v;
        } else {
            if v < max_other {
                return false;
            }
            max_other = v;
        }
    }
    true
}

fn permutation_of(word: &[u8], points: usize) -> Vec<u8> {
    let mut p: Vec<u8> = (0..points as u8).collect();
    for &s in word {
        p.swap(s as usize, s as usize + 1);
    }
    p
}

pub(super) fn compute_flags(g: &GroupTable) -> Vec<bool> {
    let p = g.presentation();
    match p.family() {
        Family::A => g.elements().map(|x| is_321_avoiding(&permutation_of(g.word(x), g.rank() + 1))).collect(),
        Family::I2 => {
            let w0 = g.w0();
            g.elements().map(|x| x != w0).collect()
        }
        _ => generic_flags(g),
    }
}

/// Generic flags with one shortcut: if `x = y s` is reduced and `y` is not
/// FC then neither is `x`, since a braid factor in a word for `y` survives
/// in the extended word.
pub(super) fn generic_flags(g: &GroupTable) -> Vec<bool> {
    let mut flags = vec![true; g.size()];
    for x in g.elements().skip(1) {
        let w = g.word(x);
        let prefix = g.right_mult(x, *w.last().unwrap() as usize);
        flags[x.index()] = flags[prefix.index()] && is_fc_word(w, g.presentation());
    }
    flags
}
