use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A Temperley-Lieb diagram on `n` strands: a planar perfect matching of
/// the boundary points `0..n` (bottom, left to right) and `n..2n` (top,
/// left to right).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    partner: Vec<u16>,
}

impl Diagram {
    pub fn identity(n: usize) -> Self {
        let mut partner = vec![0u16; 2 * n];
        for i in 0..n {
            partner[i] = (n + i) as u16;
            partner[n + i] = i as u16;
        }
        Self { partner }
    }

    /// `u_{s+1}`: a cup joining bottom points `s, s+1` and a cap joining
    /// top points `s, s+1`; every other strand goes straight up.
    pub fn generator(n: usize, s: usize) -> Result<Self> {
        if s + 1 >= n {
            return Err(Error::InvalidArgument(format!("TL_{} has no generator u_{}", n, s + 1)));
        }
        let mut d = Self::identity(n);
        let p = &mut d.partner;
        p[s] = (s + 1) as u16;
        p[s + 1] = s as u16;
        p[n + s] = (n + s + 1) as u16;
        p[n + s + 1] = (n + s) as u16;
        Ok(d)
    }

    /// Builds a diagram from a 0-based partner array, checking that it is a
    /// planar perfect matching.
    pub fn from_partners(partner: Vec<u16>) -> Result<Self> {
        let len = partner.len();
        if !len.is_multiple_of(2) {
            return Err(Error::InvalidArgument("partner array has odd length".into()));
        }
        for (i, &p) in partner.iter().enumerate() {
            let p = p as usize;
            if p >= len || p == i || partner[p] as usize != i {
                return Err(Error::InvalidArgument(format!("point {} is not matched consistently", i)));
            }
        }
        let d = Self { partner };
        if !d.is_planar() {
            return Err(Error::InvalidArgument("matching is not planar".into()));
        }
        Ok(d)
    }

    pub fn n(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partners(&self) -> &[u16] {
        &self.partner
    }

    /// The partner array with points numbered from 1.
    pub fn partner_array(&self) -> Vec<u32> {
        self.partner.iter().map(|&p| p as u32 + 1).collect()
    }

    pub fn through_strands(&self) -> usize {
        let n = self.n();
        (0..n).filter(|&i| self.partner[i] as usize >= n).count()
    }

    /// Reading the boundary counterclockwise (bottom left to right, then top
    /// right to left), chords must nest like parentheses.
    pub fn is_planar(&self) -> bool {
        let n = self.n();
        let order: Vec<usize> = (0..n).chain((n..2 * n).rev()).collect();
        let mut pos = vec![0usize; 2 * n];
        for (k, &p) in order.iter().enumerate() {
            pos[p] = k;
        }
        let mut stack = Vec::new();
        for &p in &order {
            let q = self.partner[p] as usize;
            if pos[q] > pos[p] {
                stack.push(p);
            } else if stack.pop() != Some(q) {
                return false;
            }
        }
        stack.is_empty()
    }

    /// Adds `k` vertical strands on the right.
    pub fn extend(&self, k: usize) -> Self {
        let n = self.n();
        let m = n + k;
        let mut partner = vec![0u16; 2 * m];
        let map = |p: usize| if p < n { p } else { p - n + m };
        for p in 0..2 * n {
            partner[map(p)] = map(self.partner[p] as usize) as u16;
        }
        for i in n..m {
            partner[i] = (m + i) as u16;
            partner[m + i] = i as u16;
        }
        Self { partner }
    }

    /// Stacks `self` below `other`. Returns the resulting diagram and the
    /// number of closed loops removed.
    pub fn compose(&self, other: &Diagram) -> Result<(Diagram, usize)> {
        let n = self.n();
        if other.n() != n {
            return Err(Error::Mismatch(format!("diagrams on {} and {} strands", n, other.n())));
        }
        let a = &self.partner;
        let b = &other.partner;
        let mut seen_mid = vec![false; n];
        let mut out = vec![u16::MAX; 2 * n];
        // Walks from a point of `self` (side = false) or `other` (side = true)
        // until it leaves through the outer boundary.
        let walk = |start_in_b: bool, start: usize, seen_mid: &mut Vec<bool>| -> usize {
            let mut in_b = start_in_b;
            let mut q = start;
            loop {
                if in_b {
                    let r = b[q] as usize;
                    if r >= n {
                        return r;
                    }
                    seen_mid[r] = true;
                    in_b = false;
                    q = n + r;
                } else {
                    let r = a[q] as usize;
                    if r < n {
                        return r;
                    }
                    seen_mid[r - n] = true;
                    in_b = true;
                    q = r - n;
                }
            }
        };
        for p in 0..2 * n {
            if out[p] != u16::MAX {
                continue;
            }
            let end = if p < n { walk(false, p, &mut seen_mid) } else { walk(true, p, &mut seen_mid) };
            out[p] = end as u16;
            out[end] = p as u16;
        }
        let mut loops = 0;
        for k in 0..n {
            if seen_mid[k] {
                continue;
            }
            loops += 1;
            // trace the loop through the middle line
            let mut m = k;
            loop {
                seen_mid[m] = true;
                let up = b[m] as usize;
                seen_mid[up] = true;
                let down = a[n + up] as usize - n;
                if down == k {
                    break;
                }
                m = down;
            }
        }
        Ok((Diagram { partner: out }, loops))
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram{:?}", self.partner_array())
    }
}

impl Serialize for Diagram {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.partner_array().serialize(s)
    }
}
