use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;

use super::HeckeElt;
use crate::coxeter::{ElementId, GroupTable};
use crate::qpoly::LaurentPoly;

/// A polynomial in `Z[v]` with machine-integer coefficients; `coeffs[k]` is
/// the coefficient of `v^k`. No trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct KlPoly {
    coeffs: Vec<i64>,
}

impl KlPoly {
    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Nonzero `(exponent, coefficient)` pairs, exponents decreasing.
    pub fn terms_desc(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs.iter().enumerate().rev().filter(|(_, c)| **c != 0).map(|(k, c)| (k, *c))
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_int_terms(
            self.coeffs.iter().enumerate().filter(|(_, c)| **c != 0).map(|(k, c)| (k as i32, *c)),
        )
    }
}

impl fmt::Debug for KlPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_laurent())
    }
}

/// Dense scratch polynomial with an exponent offset of one, so that
/// multiplying by `v^-1` never leaves the array.
struct Scratch(Vec<i64>);

impl Scratch {
    fn add_shifted(&mut self, p: &KlPoly, shift: i32, scale: i64) {
        for (k, c) in p.coeffs.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let idx = (k as i32 + shift + 1) as usize;
            if idx >= self.0.len() {
                self.0.resize(idx + 1, 0);
            }
            self.0[idx] += c * scale;
        }
    }

    fn finish(self) -> KlPoly {
        assert_eq!(self.0.first().copied().unwrap_or(0), 0, "negative exponent in a KL polynomial");
        KlPoly::from_coeffs(self.0.into_iter().skip(1).collect())
    }
}

/// The column `h_{., x}`: all `y` with `h_{y,x} != 0`, sorted by index.
///
/// Polynomials are interned per column. Most entries of a column share a
/// handful of distinct polynomials, so an entry costs eight bytes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KlColumn {
    x: ElementId,
    entries: Vec<(ElementId, u32)>,
    pool: Vec<KlPoly>,
}

impl KlColumn {
    pub fn new(x: ElementId, mut entries: Vec<(ElementId, KlPoly)>) -> Self {
        entries.retain(|(_, h)| !h.is_zero());
        entries.sort_by_key(|(y, _)| *y);
        let mut index: HashMap<KlPoly, u32> = HashMap::new();
        let mut pool = Vec::new();
        let entries = entries
            .into_iter()
            .map(|(y, h)| {
                let i = *index.entry(h).or_insert_with_key(|h| {
                    pool.push(h.clone());
                    (pool.len() - 1) as u32
                });
                (y, i)
            })
            .collect();
        Self { x, entries, pool }
    }

    pub fn x(&self) -> ElementId {
        self.x
    }

    pub fn entries(&self) -> impl Iterator<Item = (&ElementId, &KlPoly)> + '_ {
        self.entries.iter().map(|(y, i)| (y, &self.pool[*i as usize]))
    }

    pub fn get(&self, y: ElementId) -> Option<&KlPoly> {
        self.entries.binary_search_by_key(&y, |(z, _)| *z).ok().map(|i| &self.pool[self.entries[i].1 as usize])
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Lazily filled table of Kazhdan-Lusztig polynomials `h_{y,x}`.
///
/// Columns are computed on demand by the first-left-descent recursion and
/// shared between threads; readers never block each other and a column is
/// inserted at most once.
pub struct KlTable {
    group: Arc<GroupTable>,
    columns: RwLock<Vec<Option<Arc<KlColumn>>>>,
}

impl fmt::Debug for KlTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KlTable({}, {} columns)", self.group.presentation(), self.computed_count())
    }
}

impl KlTable {
    pub fn new(group: Arc<GroupTable>) -> Self {
        let n = group.size();
        Self { group, columns: RwLock::new(vec![None; n]) }
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn is_computed(&self, x: ElementId) -> bool {
        self.columns.read().unwrap()[x.index()].is_some()
    }

    pub fn computed_count(&self) -> usize {
        self.columns.read().unwrap().iter().filter(|c| c.is_some()).count()
    }

    /// Computed columns in index order.
    pub fn computed_columns(&self) -> Vec<Arc<KlColumn>> {
        self.columns.read().unwrap().iter().flatten().cloned().collect()
    }

    /// Inserts a column obtained elsewhere (e.g. from disk). An existing
    /// column is kept.
    pub fn insert(&self, column: KlColumn) {
        let mut cols = self.columns.write().unwrap();
        let slot = &mut cols[column.x.index()];
        if slot.is_none() {
            *slot = Some(Arc::new(column));
        }
    }

    fn cached(&self, x: ElementId) -> Option<Arc<KlColumn>> {
        self.columns.read().unwrap()[x.index()].clone()
    }

    pub fn column(&self, x: ElementId) -> Arc<KlColumn> {
        if let Some(c) = self.cached(x) {
            return c;
        }
        let col = self.compute_column(x);
        let mut cols = self.columns.write().unwrap();
        cols[x.index()].get_or_insert_with(|| Arc::new(col)).clone()
    }

    fn compute_column(&self, x: ElementId) -> KlColumn {
        let g = &*self.group;
        let Some(s) = g.first_left_descent(x) else {
            return KlColumn::new(x, vec![(x, KlPoly::one())]);
        };
        let xp = g.left_mult(s, x);
        let prev = self.column(xp);
        let mut acc: BTreeMap<ElementId, Scratch> = BTreeMap::new();
        // b_s b_{x'}
        for (y, h) in prev.entries() {
            let sy = g.left_mult(s, *y);
            acc.entry(sy).or_insert_with(|| Scratch(Vec::new())).add_shifted(h, 0, 1);
            let shift = if g.length(sy) > g.length(*y) { 1 } else { -1 };
            acc.entry(*y).or_insert_with(|| Scratch(Vec::new())).add_shifted(h, shift, 1);
        }
        // minus sum over z < x' with sz < z of mu(z, x') b_z
        for (z, h) in prev.entries() {
            if *z == xp || !g.is_left_descent(s, *z) {
                continue;
            }
            let mu = h.coeff(1);
            if mu == 0 {
                continue;
            }
            for (y, hz) in self.column(*z).entries() {
                acc.entry(*y).or_insert_with(|| Scratch(Vec::new())).add_shifted(hz, 0, -mu);
            }
        }
        KlColumn::new(x, acc.into_iter().map(|(y, p)| (y, p.finish())).collect())
    }

    /// Fills every column, one length layer at a time with the layer
    /// computed in parallel.
    pub fn compute_all(&self) {
        let g = &*self.group;
        let max_len = g.length(g.w0());
        let mut layers = vec![Vec::new(); max_len + 1];
        for x in g.elements() {
            if !self.is_computed(x) {
                layers[g.length(x)].push(x);
            }
        }
        for layer in layers {
            let cols: Vec<KlColumn> = layer.par_iter().map(|&x| self.compute_column(x)).collect();
            let mut guard = self.columns.write().unwrap();
            for col in cols {
                let i = col.x.index();
                if guard[i].is_none() {
                    guard[i] = Some(Arc::new(col));
                }
            }
        }
    }

    /// Computes the columns of `xs` (and whatever they depend on) in parallel.
    pub fn compute_columns(&self, xs: &[ElementId]) {
        xs.par_iter().for_each(|&x| {
            self.column(x);
        });
    }

    pub fn h_int(&self, y: ElementId, x: ElementId) -> KlPoly {
        self.column(x).get(y).cloned().unwrap_or_default()
    }

    /// `h_{y,x}` as a Laurent polynomial.
    pub fn h(&self, y: ElementId, x: ElementId) -> LaurentPoly {
        self.h_int(y, x).to_laurent()
    }

    /// The coefficient of `v` in `h_{y,x}`.
    pub fn mu(&self, y: ElementId, x: ElementId) -> i64 {
        self.column(x).get(y).map_or(0, |h| h.coeff(1))
    }

    /// `b_x` in the standard basis.
    pub fn kl_basis(&self, x: ElementId) -> HeckeElt {
        let col = self.column(x);
        HeckeElt::from_laurent(&self.group, col.entries().map(|(y, h)| (*y, h.to_laurent())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_group, BuildOptions, CoxeterPresentation, Family};

    fn table(p: CoxeterPresentation) -> KlTable {
        KlTable::new(Arc::new(build_group(&p, BuildOptions::default()).unwrap()))
    }

    #[test]
    fn generators_and_identity() {
        let t = table(CoxeterPresentation::new(Family::A, 2).unwrap());
        let g = t.group().clone();
        let e = g.identity();
        assert_eq!(t.h_int(e, e), KlPoly::one());
        let s = g.generator(0);
        assert_eq!(t.h_int(e, s), KlPoly::monomial(1));
        assert_eq!(t.mu(e, s), 1);
        assert_eq!(t.mu(s, g.w0()), 0);
        assert_eq!(t.h_int(s, g.w0()), KlPoly::monomial(2));
    }

    #[test]
    fn longest_element_column() {
        for p in [
            CoxeterPresentation::new(Family::A, 3).unwrap(),
            CoxeterPresentation::new(Family::B, 3).unwrap(),
            CoxeterPresentation::new(Family::H3, 3).unwrap(),
        ] {
            let t = table(p);
            let g = t.group().clone();
            let w0 = g.w0();
            for x in g.elements() {
                let expect = KlPoly::monomial(g.length(g.multiply(x, w0)));
                assert_eq!(t.h_int(x, w0), expect);
            }
        }
    }

    #[test]
    fn parallel_fill_matches_lazy() {
        let lazy = table(CoxeterPresentation::new(Family::B, 3).unwrap());
        let eager = table(CoxeterPresentation::new(Family::B, 3).unwrap());
        eager.compute_all();
        assert_eq!(eager.computed_count(), 48);
        for x in lazy.group().elements().rev() {
            assert_eq!(*lazy.column(x), *eager.column(x));
        }
    }

    #[test]
    fn a3_has_a_nontrivial_polynomial() {
        // P_{y,x} = 1 + q for y in {e, s2} and x = s2 s1 s3 s2
        let t = table(CoxeterPresentation::new(Family::A, 3).unwrap());
        let g = t.group().clone();
        let x = g.from_word(&[1, 0, 2, 1]).unwrap();
        let s2 = g.generator(1);
        assert_eq!(t.h_int(s2, x), KlPoly::from_coeffs(vec![0, 1, 0, 1]));
        assert_eq!(t.mu(s2, x), 1);
        assert_eq!(t.h_int(g.identity(), x), KlPoly::from_coeffs(vec![0, 0, 1, 0, 1]));
    }
}
