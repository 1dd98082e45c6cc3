//! The Nichols algebra `B(V) = T(V)/I(V)` with explicit graded bases.
//!
//! Degree `k` is spanned by the products `b·[γ]` of degree-`(k−1)` basis words
//! with generators. A degree-`k` element `x` is identified by the vector
//! `(∂_β x)_β ∈ B_{k−1}^{Δ₊}`, where `∂_β` is the adjoint of right
//! multiplication by `[β]` under the duality pairing,
//! `⟨ξ[β], x⟩ = ⟨ξ, ∂_β x⟩`. Its kernel on `T_k(V)` is exactly `I(V)_k`, so
//! a word is kept as a basis word iff its vector is independent of the
//! earlier ones. `∂_β(b·[γ]) = ∂_β(b)·[γ] + ⟨[β], g_b[γ]⟩ b` with `g_b`
//! the W-degree of `b`, so everything follows from the tables of lower degree.
//!
//! Elimination runs separately in each W-degree, since `I(V)` is graded by `W`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::OnceCell;

use crate::braided::{NcPoly, NcWord};
use crate::error::{Error, Result};
use crate::linalg::{Accumulator, Echelon, Insert, SparseVec};
use crate::roots::{RootSystem, SignedRoot, WeylElem};
use crate::scalars::{Rational, RingElem};

/// Safety cap on the number of degrees built when no truncation is requested.
pub const UNBOUNDED_CAP: usize = 64;

/// Per-degree construction data.
#[derive(Clone, Debug)]
pub struct DegreeData {
    /// Basis words, in increasing lexicographic order.
    pub words: Vec<NcWord>,
    /// `(prefix basis index, last letter)` of each basis word.
    pub parents: Vec<(usize, usize)>,
    pub w_degrees: Vec<WeylElem>,
    /// `rmul[γ][b]`: coordinates of `b·[γ]` for every basis word `b` of the previous degree.
    pub rmul: Vec<Vec<SparseVec>>,
    /// `dual[β][w]`: coordinates (previous degree) of `∂_β w`.
    pub dual: Vec<Vec<SparseVec>>,
}

impl DegreeData {
    pub fn dim(&self) -> usize {
        self.words.len()
    }
}

/// Table indexed by `[degree][basis index]`, each entry a coordinate vector in
/// a neighbouring degree.
pub type GradedTable = Vec<Vec<SparseVec>>;

/// Graded bases of `B(V)` up to a truncation degree, plus derived operator tables.
pub struct NicholsBasis {
    rs: RootSystem,
    max_degree: Option<usize>,
    degrees: Vec<DegreeData>,
    complete: bool,
    index: Vec<BTreeMap<NcWord, usize>>,
    left_mult: OnceCell<Vec<GradedTable>>,
    dbar: OnceCell<Vec<GradedTable>>,
    dbar_right: OnceCell<Vec<GradedTable>>,
    reflect: OnceCell<Vec<GradedTable>>,
    gram: OnceCell<Vec<OnceCell<Vec<SparseVec>>>>,
}

/// Element of `B_R(V)`: coordinates keyed by `(degree, basis index)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BElem {
    coords: BTreeMap<(usize, usize), RingElem>,
}

impl BElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::basis(0, 0)
    }

    pub fn basis(degree: usize, index: usize) -> Self {
        Self::term(degree, index, RingElem::one())
    }

    pub fn term(degree: usize, index: usize, c: RingElem) -> Self {
        let mut e = Self::zero();
        e.add_term(degree, index, &c);
        e
    }

    pub fn from_sparse(degree: usize, v: &SparseVec) -> Self {
        let mut e = Self::zero();
        for (i, c) in v.iter() {
            e.coords.insert((degree, i), RingElem::constant(c.clone()));
        }
        e
    }

    pub fn add_term(&mut self, degree: usize, index: usize, c: &RingElem) {
        if c.is_zero() {
            return;
        }
        let key = (degree, index);
        let slot = self.coords.entry(key).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coords.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, c: &RingElem, other: &BElem) {
        if c.is_zero() {
            return;
        }
        for (&(d, i), x) in &other.coords {
            self.add_term(d, i, &(x * c));
        }
    }

    pub fn add(&self, other: &BElem) -> BElem {
        let mut out = self.clone();
        out.add_scaled(&RingElem::one(), other);
        out
    }

    pub fn sub(&self, other: &BElem) -> BElem {
        let mut out = self.clone();
        out.add_scaled(&RingElem::from(-1), other);
        out
    }

    pub fn scale(&self, c: &RingElem) -> BElem {
        let mut out = BElem::zero();
        out.add_scaled(c, self);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &RingElem)> {
        self.coords.iter().map(|(&(d, i), c)| (d, i, c))
    }

    pub fn coefficient(&self, degree: usize, index: usize) -> RingElem {
        self.coords.get(&(degree, index)).cloned().unwrap_or_default()
    }

    /// Highest degree carrying a nonzero coordinate.
    pub fn top_degree(&self) -> Option<usize> {
        self.coords.keys().map(|k| k.0).max()
    }

    /// Component in a single degree.
    pub fn component(&self, degree: usize) -> BElem {
        BElem {
            coords: self
                .coords
                .iter()
                .filter(|(k, _)| k.0 == degree)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// Specializes all quantum parameters to zero.
    pub fn at_q_zero(&self) -> BElem {
        let mut out = BElem::zero();
        for (d, i, c) in self.terms() {
            out.add_term(d, i, &c.at_q_zero());
        }
        out
    }

    /// Drops coordinates of degree above `max`.
    pub fn truncated(&self, max: usize) -> BElem {
        BElem { coords: self.coords.iter().filter(|(k, _)| k.0 <= max).map(|(k, v)| (*k, v.clone())).collect() }
    }
}

fn apply_sparse(table: &[SparseVec], v: &SparseVec) -> SparseVec {
    let mut acc = Accumulator::new();
    for (i, c) in v.iter() {
        acc.add_scaled(c, &table[i]);
    }
    acc.finish()
}

impl NicholsBasis {
    /// Builds degrees `0..=max_degree`, or until the algebra ends when `None`.
    pub fn build(rs: &RootSystem, max_degree: Option<usize>) -> Self {
        let mut nb = Self::empty(rs, max_degree);
        nb.push_degree(Self::degree_zero(rs));
        nb.extend_to_limit();
        nb
    }

    fn empty(rs: &RootSystem, max_degree: Option<usize>) -> Self {
        NicholsBasis {
            rs: rs.clone(),
            max_degree,
            degrees: Vec::new(),
            complete: false,
            index: Vec::new(),
            left_mult: OnceCell::new(),
            dbar: OnceCell::new(),
            dbar_right: OnceCell::new(),
            reflect: OnceCell::new(),
            gram: OnceCell::new(),
        }
    }

    fn degree_zero(rs: &RootSystem) -> DegreeData {
        DegreeData {
            words: vec![NcWord::empty()],
            parents: vec![(0, 0)],
            w_degrees: vec![rs.identity()],
            rmul: Vec::new(),
            dual: vec![Vec::new(); rs.num_positive()],
        }
    }

    fn push_degree(&mut self, d: DegreeData) {
        let idx = d.words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        if d.dim() == 0 {
            self.complete = true;
        }
        self.index.push(idx);
        self.degrees.push(d);
    }

    fn limit(&self) -> usize {
        self.max_degree.unwrap_or(UNBOUNDED_CAP)
    }

    fn extend_to_limit(&mut self) {
        while !self.complete && self.degrees.len() <= self.limit() {
            let k = self.degrees.len();
            self.extend_basis(k);
        }
    }

    /// Builds degree `k` from degree `k − 1`. No-op once the algebra has ended.
    fn extend_basis(&mut self, k: usize) {
        assert_eq!(k, self.degrees.len(), "degrees must be built in order");
        if self.complete {
            return;
        }
        let data = self.compute_degree(k);
        self.push_degree(data);
    }

    /// Vector `(∂_β(b·[γ]))_β` for a spanning word, with block offsets `β·d_{k−1}`.
    fn spanning_dual(&self, k: usize, b: usize, gamma: usize) -> SparseVec {
        let prev = &self.degrees[k - 1];
        let m = self.rs.num_positive();
        let dprev = prev.dim();
        let mut acc = Accumulator::new();
        if k >= 2 {
            let rmul = &prev.rmul[gamma];
            for beta in 0..m {
                let db = &prev.dual[beta][b];
                if db.is_zero() {
                    continue;
                }
                let v = apply_sparse(rmul, db);
                acc.add_scaled(&Rational::ONE, &v.shifted(beta * dprev));
            }
        }
        let img = prev.w_degrees[b].apply(SignedRoot::positive(gamma));
        acc.add_entry(img.index * dprev + b, &Rational::from_int(img.sign()));
        acc.finish()
    }

    fn compute_degree(&self, k: usize) -> DegreeData {
        let m = self.rs.num_positive();
        let prev = &self.degrees[k - 1];
        let dprev = prev.dim();

        struct Block {
            echelon: Echelon,
            global: Vec<usize>,
        }
        let mut blocks: BTreeMap<WeylElem, Block> = BTreeMap::new();
        let mut words = Vec::new();
        let mut parents = Vec::new();
        let mut w_degrees = Vec::new();
        let mut duals: Vec<SparseVec> = Vec::new();
        // Coordinates of each spanning word, before basis indices are final.
        let mut span_coords: Vec<SparseVec> = Vec::with_capacity(dprev * m);

        for b in 0..dprev {
            for gamma in 0..m {
                let g = prev.w_degrees[b].compose(self.rs.reflection(gamma));
                let v = self.spanning_dual(k, b, gamma);
                let block = blocks.entry(g.clone()).or_insert_with(|| Block { echelon: Echelon::new(), global: Vec::new() });
                match block.echelon.insert(&v) {
                    Insert::New(_) => {
                        let id = words.len();
                        block.global.push(id);
                        let mut w = prev.words[b].clone();
                        w.0.push(gamma as u16);
                        words.push(w);
                        parents.push((b, gamma));
                        w_degrees.push(g);
                        duals.push(v);
                        span_coords.push(SparseVec::unit(id));
                    }
                    Insert::Dependent(comb) => {
                        let global = SparseVec::from_entries(comb.iter().map(|(i, c)| (block.global[i], c.clone())));
                        span_coords.push(global);
                    }
                }
            }
        }

        let mut rmul = vec![Vec::with_capacity(dprev); m];
        for b in 0..dprev {
            for (gamma, col) in rmul.iter_mut().enumerate() {
                col.push(span_coords[b * m + gamma].clone());
            }
        }
        let dual = Self::split_duals(&duals, m, dprev);
        DegreeData { words, parents, w_degrees, rmul, dual }
    }

    fn split_duals(duals: &[SparseVec], m: usize, dprev: usize) -> Vec<Vec<SparseVec>> {
        let mut dual = vec![Vec::with_capacity(duals.len()); m];
        for v in duals {
            let mut parts: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); m];
            for (i, c) in v.iter() {
                parts[i / dprev.max(1)].push((i % dprev.max(1), c.clone()));
            }
            for (beta, p) in parts.into_iter().enumerate() {
                dual[beta].push(SparseVec::from_entries(p));
            }
        }
        dual
    }

    /// Reassembles a basis from stored words and expansion tables (cache reload).
    /// Derived data is recomputed; shapes are validated.
    pub fn from_tables(
        rs: &RootSystem,
        max_degree: Option<usize>,
        tables: Vec<(Vec<NcWord>, Vec<Vec<SparseVec>>)>,
    ) -> Result<Self> {
        let bad = |s: &str| Error::Parse(alloc::format!("inconsistent basis tables: {s}"));
        let m = rs.num_positive();
        let mut nb = Self::empty(rs, max_degree);
        nb.push_degree(Self::degree_zero(rs));
        for (k, (words, rmul)) in tables.into_iter().enumerate().skip(1) {
            if nb.complete {
                return Err(bad("degree after the top"));
            }
            let prev_dim = nb.degrees[k - 1].dim();
            if rmul.len() != m || rmul.iter().any(|c| c.len() != prev_dim) {
                return Err(bad("expansion table shape"));
            }
            let mut parents = Vec::with_capacity(words.len());
            let mut w_degrees = Vec::with_capacity(words.len());
            let mut duals = Vec::with_capacity(words.len());
            for (id, w) in words.iter().enumerate() {
                if w.len() != k || w.letters().any(|l| l >= m) {
                    return Err(bad("word length or letter"));
                }
                let prefix = NcWord(w.0[..k - 1].to_vec());
                let gamma = w.0[k - 1] as usize;
                let b = *nb.index[k - 1].get(&prefix).ok_or_else(|| bad("prefix not a basis word"))?;
                if rmul[gamma][b] != SparseVec::unit(id) {
                    return Err(bad("basis word does not expand to itself"));
                }
                parents.push((b, gamma));
                w_degrees.push(nb.degrees[k - 1].w_degrees[b].compose(rs.reflection(gamma)));
                duals.push(nb.spanning_dual(k, b, gamma));
            }
            for col in rmul.iter().flatten() {
                if col.iter().any(|(i, _)| i >= words.len()) {
                    return Err(bad("coordinate index"));
                }
            }
            let dual = Self::split_duals(&duals, m, prev_dim);
            nb.push_degree(DegreeData { words, parents, w_degrees, rmul, dual });
        }
        nb.extend_to_limit();
        Ok(nb)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.max_degree
    }

    /// True once a zero-dimensional degree has been reached.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Highest degree with constructed data (an empty degree marks the end).
    pub fn built_degree(&self) -> usize {
        self.degrees.len() - 1
    }

    /// Highest degree with a nonzero basis.
    pub fn top_degree(&self) -> usize {
        if self.complete {
            self.degrees.len() - 2
        } else {
            self.degrees.len() - 1
        }
    }

    pub fn degree(&self, k: usize) -> &DegreeData {
        &self.degrees[k]
    }

    pub fn dim(&self, k: usize) -> usize {
        self.degrees.get(k).map_or(0, |d| d.dim())
    }

    /// `(dim_0, …, dim_top)`.
    pub fn hilbert_series(&self) -> Vec<usize> {
        (0..=self.top_degree()).map(|k| self.dim(k)).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.hilbert_series().iter().sum()
    }

    pub fn basis_words(&self, k: usize) -> &[NcWord] {
        &self.degrees[k].words
    }

    pub fn word_index(&self, w: &NcWord) -> Option<(usize, usize)> {
        self.index.get(w.len()).and_then(|m| m.get(w)).map(|&i| (w.len(), i))
    }

    /// Whether degree `k` coordinates are known (zero beyond the end).
    fn known(&self, k: usize) -> bool {
        k < self.degrees.len() || self.complete
    }

    fn check_degree(&self, k: usize) -> Result<()> {
        if self.known(k) {
            Ok(())
        } else {
            Err(Error::DegreeOverflow { requested: k, built: self.built_degree() })
        }
    }

    /// Right multiplication of degree-`k` coordinates by `[γ]`.
    fn rmul_sparse(&self, k: usize, v: &SparseVec, gamma: usize) -> Result<SparseVec> {
        self.check_degree(k + 1)?;
        if k + 1 >= self.degrees.len() {
            return Ok(SparseVec::new());
        }
        Ok(apply_sparse(&self.degrees[k + 1].rmul[gamma], v))
    }

    /// Coordinates of a single word.
    pub fn word_coords(&self, w: &NcWord) -> Result<SparseVec> {
        self.check_degree(w.len())?;
        let mut v = SparseVec::unit(0);
        for (k, gamma) in w.letters().enumerate() {
            if v.is_zero() {
                break;
            }
            v = self.rmul_sparse(k, &v, gamma)?;
        }
        Ok(v)
    }

    /// Image of a tensor-algebra element in `B(V)`.
    pub fn normal_form(&self, p: &NcPoly) -> Result<BElem> {
        let mut out = BElem::zero();
        for (w, c) in p.terms() {
            let v = self.word_coords(w)?;
            for (i, x) in v.iter() {
                out.add_term(w.len(), i, &c.scale(x));
            }
        }
        Ok(out)
    }

    /// A representative in `T(V)` (basis words with the element's coefficients).
    pub fn to_ncpoly(&self, x: &BElem) -> NcPoly {
        let mut p = NcPoly::zero();
        for (d, i, c) in x.terms() {
            p.add_term(self.degrees[d].words[i].clone(), c.clone());
        }
        p
    }

    /// `x · [γ]`.
    pub fn right_mul_generator(&self, x: &BElem, gamma: usize) -> Result<BElem> {
        let mut out = BElem::zero();
        for (d, i, c) in x.terms() {
            self.check_degree(d + 1)?;
            if d + 1 >= self.degrees.len() {
                continue;
            }
            for (j, y) in self.degrees[d + 1].rmul[gamma][i].iter() {
                out.add_term(d + 1, j, &c.scale(y));
            }
        }
        Ok(out)
    }

    /// Product in `B(V)`.
    pub fn multiply(&self, a: &BElem, b: &BElem) -> Result<BElem> {
        let mut out = BElem::zero();
        for (d, i, c) in b.terms() {
            let mut cur = a.scale(c);
            for gamma in self.degrees[d].words[i].letters() {
                if cur.is_zero() {
                    break;
                }
                cur = self.right_mul_generator(&cur, gamma)?;
            }
            out.add_scaled(&RingElem::one(), &cur);
        }
        Ok(out)
    }

    fn apply_table(&self, table: &GradedTable, x: &BElem, shift: isize) -> Result<BElem> {
        let mut out = BElem::zero();
        for (d, i, c) in x.terms() {
            let target = d as isize + shift;
            if target < 0 {
                continue;
            }
            let Some(col) = table.get(d) else {
                self.check_degree(target as usize)?;
                continue;
            };
            if col.is_empty() && self.dim(d) > 0 {
                // Column missing: the target degree is beyond the truncation.
                self.check_degree(target as usize)?;
            }
            if let Some(v) = col.get(i) {
                for (j, y) in v.iter() {
                    out.add_term(target as usize, j, &c.scale(y));
                }
            }
        }
        Ok(out)
    }

    /// Builds a table for each positive root by the recursion `f(b·[γ]) = step(f(b), b, γ)`.
    fn build_tables<F>(&self, shift: isize, base: impl Fn(usize) -> SparseVec, step: F) -> Vec<GradedTable>
    where
        F: Fn(usize, usize, &SparseVec, usize, usize) -> Option<SparseVec>,
    {
        let m = self.rs.num_positive();
        (0..m)
            .map(|alpha| {
                let mut table: GradedTable = Vec::with_capacity(self.degrees.len());
                for (k, data) in self.degrees.iter().enumerate() {
                    let target = k as isize + shift;
                    if target >= 0 && !self.known(target as usize) {
                        table.push(Vec::new());
                        continue;
                    }
                    if k == 0 {
                        table.push(vec![base(alpha)]);
                        continue;
                    }
                    let mut col = Vec::with_capacity(data.dim());
                    for &(b, gamma) in &data.parents {
                        let prev = &table[k - 1][b];
                        col.push(step(alpha, k, prev, b, gamma).unwrap_or_default());
                    }
                    table.push(col);
                }
                table
            })
            .collect()
    }

    /// Left multiplication tables: `[α]·w`, degree `k → k+1`.
    fn left_mult_tables(&self) -> &Vec<GradedTable> {
        self.left_mult.get_or_init(|| {
            self.build_tables(
                1,
                |alpha| {
                    if self.dim(1) > 0 {
                        SparseVec::unit(alpha)
                    } else {
                        SparseVec::new()
                    }
                },
                |_, k, prev, _, gamma| {
                    // [α]·(b[γ]) = ([α]b)·[γ], with [α]b in degree k.
                    self.rmul_sparse(k, prev, gamma).ok()
                },
            )
        })
    }

    /// Tables of the reflections `s_α` acting on `B(V)` (degree-preserving).
    fn reflect_tables(&self) -> &Vec<GradedTable> {
        self.reflect.get_or_init(|| {
            self.build_tables(
                0,
                |_| SparseVec::unit(0),
                |alpha, k, prev, _, gamma| {
                    let img = self.rs.reflect(alpha, gamma);
                    let v = self.rmul_sparse(k - 1, prev, img.index).ok()?;
                    Some(v.scale(&Rational::from_int(img.sign())))
                },
            )
        })
    }

    /// Left twisted derivation tables `D̄_α`, degree `k → k−1`.
    fn dbar_tables(&self) -> &Vec<GradedTable> {
        let reflect = self.reflect_tables();
        self.dbar.get_or_init(|| {
            self.build_tables(
                -1,
                |_| SparseVec::new(),
                |alpha, k, prev, b, gamma| {
                    // D̄_α(b[γ]) = D̄_α(b)[γ] + δ_{αγ} s_α(b)
                    let mut v = if k >= 2 { self.rmul_sparse(k - 2, prev, gamma).ok()? } else { SparseVec::new() };
                    if alpha == gamma {
                        v = v.axpy(&Rational::ONE, &reflect[alpha][k - 1][b]);
                    }
                    Some(v)
                },
            )
        })
    }

    /// Right twisted derivation tables `←D_α`, degree `k → k−1`.
    fn dbar_right_tables(&self) -> &Vec<GradedTable> {
        self.dbar_right.get_or_init(|| {
            self.build_tables(
                -1,
                |_| SparseVec::new(),
                |alpha, k, prev, b, gamma| {
                    // (b[γ])←D_α = δ_{αγ} b + (b←D_α)·s_α[γ]
                    let mut v = SparseVec::new();
                    if k >= 2 && !prev.is_zero() {
                        let img = self.rs.reflect(alpha, gamma);
                        v = self.rmul_sparse(k - 2, prev, img.index).ok()?.scale(&Rational::from_int(img.sign()));
                    }
                    if alpha == gamma {
                        v = v.axpy(&Rational::ONE, &SparseVec::unit(b));
                    }
                    Some(v)
                },
            )
        })
    }

    /// `[α] · x`.
    pub fn left_mul_generator(&self, alpha: usize, x: &BElem) -> Result<BElem> {
        self.apply_table(&self.left_mult_tables()[alpha], x, 1)
    }

    /// `s_α(x)`.
    pub fn reflect(&self, alpha: usize, x: &BElem) -> Result<BElem> {
        self.apply_table(&self.reflect_tables()[alpha], x, 0)
    }

    /// `w(x)`, composed along a reduced word of `w`.
    pub fn w_act(&self, w: &WeylElem, x: &BElem) -> Result<BElem> {
        let mut cur = x.clone();
        for &i in w.reduced_word(&self.rs).iter().rev() {
            cur = self.reflect(self.rs.simple_index(i), &cur)?;
        }
        Ok(cur)
    }

    /// Left twisted derivation `D̄_α`.
    pub fn dbar(&self, alpha: usize, x: &BElem) -> Result<BElem> {
        self.apply_table(&self.dbar_tables()[alpha], x, -1)
    }

    /// `D̄_w = D̄_{α_1} ⋯ D̄_{α_l}` for the reduced word `w = s_{α_1} ⋯ s_{α_l}`.
    pub fn dbar_w(&self, w: &WeylElem, x: &BElem) -> Result<BElem> {
        self.dbar_word(&w.reduced_word(&self.rs), x)
    }

    /// `D̄` composed along an explicit word of simple indices (rightmost applied first).
    pub fn dbar_word(&self, word: &[usize], x: &BElem) -> Result<BElem> {
        let mut cur = x.clone();
        for &i in word.iter().rev() {
            if cur.is_zero() {
                break;
            }
            cur = self.dbar(self.rs.simple_index(i), &cur)?;
        }
        Ok(cur)
    }

    /// Right twisted derivation `x ←D_α`.
    pub fn dbar_right(&self, alpha: usize, x: &BElem) -> Result<BElem> {
        self.apply_table(&self.dbar_right_tables()[alpha], x, -1)
    }

    /// The pairing-adjoint derivation `∂_β` used by the construction.
    pub fn pairing_derivation(&self, beta: usize, x: &BElem) -> BElem {
        let mut out = BElem::zero();
        for (d, i, c) in x.terms() {
            if d == 0 {
                continue;
            }
            for (j, y) in self.degrees[d].dual[beta][i].iter() {
                out.add_term(d - 1, j, &c.scale(y));
            }
        }
        out
    }

    /// Raw per-degree tables for a shift-`±1`/0 operator family.
    pub fn left_mult_table(&self, alpha: usize) -> &GradedTable {
        &self.left_mult_tables()[alpha]
    }

    pub fn dbar_table(&self, alpha: usize) -> &GradedTable {
        &self.dbar_tables()[alpha]
    }

    /// Gram matrices of the basis words, degree by degree (rows as sparse vectors).
    ///
    /// `⟨b_i[β_i], w_j⟩ = ⟨b_i, ∂_{β_i} w_j⟩ = Σ_m G_{k−1}[b_i][m] · (∂_{β_i} w_j)_m`.
    pub fn basis_gram(&self, k: usize) -> &[SparseVec] {
        let cells = self.gram.get_or_init(|| (0..self.degrees.len()).map(|_| OnceCell::new()).collect());
        cells[k].get_or_init(|| {
            if k == 0 {
                return vec![SparseVec::unit(0)];
            }
            let data = &self.degrees[k];
            let prev_gram = self.basis_gram(k - 1);
            data.parents
                .iter()
                .map(|&(b, beta)| {
                    let grow = &prev_gram[b];
                    SparseVec::from_entries((0..data.dim()).filter_map(|j| {
                        let d = &data.dual[beta][j];
                        let v = grow.iter().fold(Rational::ZERO, |acc, (m, g)| &acc + &(g * &d.get(m)));
                        (!v.is_zero()).then_some((j, v))
                    }))
                })
                .collect()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braided::{all_words, w_act as word_w_act, Pairing};
    use crate::linalg::rank;
    use crate::roots::CartanType;

    fn a2() -> RootSystem {
        RootSystem::new(CartanType::A, 2).unwrap()
    }

    /// Independent oracle: rank of the full Gram matrix on all words of degree k.
    fn gram_rank(rs: &RootSystem, k: usize) -> usize {
        let p = Pairing::new(rs);
        let words = all_words(rs.num_positive(), k);
        rank(&p.gram_matrix(&words, &words))
    }

    #[test]
    fn a2_dimensions_match_gram_oracle() {
        let rs = a2();
        let nb = NicholsBasis::build(&rs, None);
        assert_eq!(nb.hilbert_series(), vec![1, 3, 4, 3, 1]);
        for k in 0..=5 {
            assert_eq!(nb.dim(k), gram_rank(&rs, k), "degree {k}");
        }
        assert!(nb.is_complete());
    }

    #[test]
    fn a1_is_exterior() {
        let rs = RootSystem::new(CartanType::A, 1).unwrap();
        let nb = NicholsBasis::build(&rs, None);
        assert_eq!(nb.hilbert_series(), vec![1, 1]);
    }

    #[test]
    fn truncated_build_respects_bound() {
        let rs = a2();
        let nb = NicholsBasis::build(&rs, Some(2));
        assert_eq!(nb.hilbert_series(), vec![1, 3, 4]);
        assert!(!nb.is_complete());
        let w = NcWord::from_indices(&[0, 1, 0]);
        assert!(matches!(nb.word_coords(&w), Err(Error::DegreeOverflow { requested: 3, built: 2 })));
    }

    #[test]
    fn normal_form_examples() {
        let rs = a2();
        let nb = NicholsBasis::build(&rs, None);
        for a in 0..3 {
            let aa = NcPoly::word(NcWord::from_indices(&[a, a]));
            assert!(nb.normal_form(&aa).unwrap().is_zero());
        }
        for k in 0..=4 {
            for (i, w) in nb.basis_words(k).iter().enumerate() {
                assert_eq!(nb.normal_form(&NcPoly::word(w.clone())).unwrap(), BElem::basis(k, i));
            }
        }
        assert!(nb.normal_form(&NcPoly::zero()).unwrap().is_zero());
        // Beyond the top everything vanishes.
        let long = NcPoly::word(NcWord::from_indices(&[0, 1, 0, 2, 1]));
        assert!(nb.normal_form(&long).unwrap().is_zero());
    }

    #[test]
    fn multiplication_examples() {
        let rs = a2();
        let nb = NicholsBasis::build(&rs, None);
        let g = |i| nb.normal_form(&NcPoly::letter(i)).unwrap();
        let x = g(1);
        assert_eq!(nb.multiply(&BElem::one(), &x).unwrap(), x);
        assert!(nb.multiply(&g(0), &g(0)).unwrap().is_zero());
        let l = nb.multiply(&nb.multiply(&g(0), &g(1)).unwrap(), &g(0)).unwrap();
        let r = nb.multiply(&g(0), &nb.multiply(&g(1), &g(0)).unwrap()).unwrap();
        assert_eq!(l, r);
        let direct = nb.normal_form(&NcPoly::word(NcWord::from_indices(&[0, 1, 0]))).unwrap();
        assert_eq!(l, direct);
    }

    #[test]
    fn derivation_examples() {
        let rs = a2();
        let nb = NicholsBasis::build(&rs, None);
        let nf = |ix: &[usize]| nb.normal_form(&NcPoly::word(NcWord::from_indices(ix))).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                let v = nb.dbar(a, &nf(&[b])).unwrap();
                let expected = if a == b { BElem::one() } else { BElem::zero() };
                assert_eq!(v, expected);
                assert_eq!(nb.dbar_right(a, &nf(&[b])).unwrap(), expected);
            }
        }
        assert_eq!(nb.dbar(0, &nf(&[1, 0])).unwrap(), nf(&[2]));
        assert_eq!(nb.dbar(0, &nf(&[0, 1])).unwrap(), nf(&[1]));
        assert_eq!(nb.dbar_right(0, &nf(&[0, 1])).unwrap(), nf(&[2]));
        assert!(nb.dbar_right(0, &BElem::one()).unwrap().is_zero());
        assert_eq!(nb.dbar_w(&rs.identity(), &nf(&[0, 1])).unwrap(), nf(&[0, 1]));
        for w in rs.enumerate_weyl(100).unwrap().iter().skip(1) {
            assert!(nb.dbar_w(w, &BElem::one()).unwrap().is_zero());
        }
    }

    /// Word-level D̄_α from the Leibniz rule, independent of the tables.
    fn word_dbar(rs: &RootSystem, alpha: usize, p: &NcPoly) -> NcPoly {
        let s = rs.reflection(alpha);
        let mut out = NcPoly::zero();
        for (w, c) in p.terms() {
            for (i, l) in w.letters().enumerate() {
                if l != alpha {
                    continue;
                }
                let prefix = NcPoly::word(NcWord(w.0[..i].to_vec()));
                let suffix = NcPoly::word(NcWord(w.0[i + 1..].to_vec()));
                out = out.add(&word_w_act(s, &prefix).mul(&suffix).scale(c));
            }
        }
        out
    }

    #[test]
    fn dbar_is_well_defined_on_spanning_words() {
        for (kind, n) in [(CartanType::A, 2), (CartanType::B, 2)] {
            let rs = RootSystem::new(kind, n).unwrap();
            let nb = NicholsBasis::build(&rs, None);
            for k in 1..=nb.top_degree() {
                let prev = nb.degree(k - 1);
                for b in 0..prev.dim() {
                    for gamma in 0..rs.num_positive() {
                        let mut w = prev.words[b].clone();
                        w.0.push(gamma as u16);
                        let word = NcPoly::word(w);
                        let coords = nb.normal_form(&word).unwrap();
                        for alpha in 0..rs.num_positive() {
                            let via_word = nb.normal_form(&word_dbar(&rs, alpha, &word)).unwrap();
                            let via_basis = nb.dbar(alpha, &coords).unwrap();
                            assert_eq!(via_word, via_basis);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn basis_gram_is_nonsingular_and_matches_pairing() {
        let rs = a2();
        let nb = NicholsBasis::build(&rs, None);
        let p = Pairing::new(&rs);
        for k in 0..=nb.top_degree() {
            let words = nb.basis_words(k);
            let direct = p.gram_matrix(words, words);
            let ours: Vec<Vec<Rational>> = nb.basis_gram(k).iter().map(|r| r.to_dense(words.len())).collect();
            assert_eq!(ours, direct, "degree {k}");
            assert_eq!(rank(&ours), words.len());
        }
    }
}
