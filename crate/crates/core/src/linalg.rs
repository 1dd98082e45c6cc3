//! Exact sparse linear algebra over `Q`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::scalars::Rational;

/// Sparse vector: entries sorted by index, no zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseVec {
    entries: Vec<(u32, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: alloc::vec![(i as u32, Rational::ONE)] }
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut map: BTreeMap<u32, Rational> = BTreeMap::new();
        for (i, c) in entries {
            if c.is_zero() {
                continue;
            }
            let slot = map.entry(i as u32).or_default();
            *slot += &c;
        }
        SparseVec { entries: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn from_dense(v: &[Rational]) -> Self {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as u32, c.clone()))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.entries.iter().map(|(i, c)| (*i as usize, c))
    }

    pub fn get(&self, i: usize) -> Rational {
        match self.entries.binary_search_by_key(&(i as u32), |e| e.0) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Rational::ZERO,
        }
    }

    pub fn first(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(i, c)| (*i as usize, c))
    }

    pub fn scale(&self, c: &Rational) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect() }
    }

    /// `self + c·other`.
    pub fn axpy(&self, c: &Rational, other: &SparseVec) -> SparseVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
            let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
            if take_a {
                out.push(a[i].clone());
                i += 1;
            } else if take_b {
                out.push((b[j].0, c * &b[j].1));
                j += 1;
            } else {
                let v = &a[i].1 + &(c * &b[j].1);
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        SparseVec { entries: out }
    }

    /// Shifts every index by `offset` (used to concatenate blocks).
    pub fn shifted(&self, offset: usize) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, c)| (i + offset as u32, c.clone())).collect() }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut v = alloc::vec![Rational::ZERO; len];
        for (i, c) in self.iter() {
            v[i] = c.clone();
        }
        v
    }
}

/// Accumulates `Σ c_k v_k` without repeated merging.
#[derive(Default)]
pub struct Accumulator {
    map: BTreeMap<u32, Rational>,
}

impl Accumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_scaled(&mut self, c: &Rational, v: &SparseVec) {
        if c.is_zero() {
            return;
        }
        for (i, x) in &v.entries {
            let slot = self.map.entry(*i).or_default();
            *slot += &(c * x);
        }
    }

    pub fn add_entry(&mut self, i: usize, c: &Rational) {
        let slot = self.map.entry(i as u32).or_default();
        *slot += c;
    }

    pub fn finish(self) -> SparseVec {
        SparseVec { entries: self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

struct EchelonRow {
    pivot: usize,
    /// Normalized so the pivot entry is 1; zero at every other pivot.
    row: SparseVec,
    /// This row as a combination of the selected generators.
    comb: SparseVec,
}

/// Incremental reduced echelon form that remembers how each row was built
/// from the vectors accepted so far, so that later vectors can be expressed
/// in the accepted ones.
#[derive(Default)]
pub struct Echelon {
    rows: Vec<EchelonRow>,
    pivot_row: BTreeMap<usize, usize>,
    selected: usize,
}

/// Outcome of [`Echelon::insert`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Insert {
    /// The vector was independent and became generator number `k`.
    New(usize),
    /// The vector is the given combination of accepted generators.
    Dependent(SparseVec),
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.selected
    }

    fn reduce(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let mut residual = Accumulator::new();
        let mut comb = Accumulator::new();
        residual.add_scaled(&Rational::ONE, v);
        for (i, c) in v.iter() {
            if let Some(&r) = self.pivot_row.get(&i) {
                let neg = -c;
                residual.add_scaled(&neg, &self.rows[r].row);
                comb.add_scaled(c, &self.rows[r].comb);
            }
        }
        (residual.finish(), comb.finish())
    }

    /// Expresses `v` in the accepted generators, or returns `None` if independent.
    pub fn express(&self, v: &SparseVec) -> Option<SparseVec> {
        let (res, comb) = self.reduce(v);
        res.is_zero().then_some(comb)
    }

    pub fn insert(&mut self, v: &SparseVec) -> Insert {
        let (res, comb) = self.reduce(v);
        if res.is_zero() {
            return Insert::Dependent(comb);
        }
        let k = self.selected;
        self.selected += 1;
        let (pivot, lead) = res.first().map(|(i, c)| (i, c.clone())).unwrap();
        let inv = lead.recip();
        let row = res.scale(&inv);
        let comb = SparseVec::unit(k).axpy(&-Rational::ONE, &comb).scale(&inv);
        for r in &mut self.rows {
            let f = r.row.get(pivot);
            if !f.is_zero() {
                let nf = -f;
                r.row = r.row.axpy(&nf, &row);
                r.comb = r.comb.axpy(&nf, &comb);
            }
        }
        self.pivot_row.insert(pivot, self.rows.len());
        self.rows.push(EchelonRow { pivot, row, comb });
        Insert::New(k)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r.pivot)
    }
}

/// Rank of a dense matrix.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(&SparseVec::from_dense(r));
    }
    e.rank()
}

/// Solves `A x = b` (dense), setting free variables to zero. `None` if inconsistent.
pub fn solve(a: &[Vec<Rational>], b: &[Rational], ncols: usize) -> Option<Vec<Rational>> {
    // Row-reduce the augmented system [A | b]; column `ncols` carries b.
    let mut e = Echelon::new();
    for (row, rhs) in a.iter().zip(b) {
        let mut v = SparseVec::from_dense(row);
        if !rhs.is_zero() {
            v = v.axpy(rhs, &SparseVec::unit(ncols));
        }
        e.insert(&v);
    }
    let mut x = alloc::vec![Rational::ZERO; ncols];
    for r in &e.rows {
        if r.pivot == ncols {
            return None;
        }
        // Free columns are zero, so x[pivot] = rhs of this fully reduced row.
        x[r.pivot] = r.row.get(ncols);
    }
    Some(x)
}

/// Basis of the null space `{x : A x = 0}` of a dense matrix with `ncols` columns.
pub fn null_space(a: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut e = Echelon::new();
    for row in a {
        e.insert(&SparseVec::from_dense(row));
    }
    let pivots: BTreeMap<usize, usize> = e.rows.iter().enumerate().map(|(k, r)| (r.pivot, k)).collect();
    let mut out = Vec::new();
    for free in 0..ncols {
        if pivots.contains_key(&free) {
            continue;
        }
        let mut x = alloc::vec![Rational::ZERO; ncols];
        x[free] = Rational::ONE;
        for (&p, &k) in &pivots {
            x[p] = -e.rows[k].row.get(free);
        }
        out.push(x);
    }
    out
}
