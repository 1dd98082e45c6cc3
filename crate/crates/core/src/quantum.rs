//! Quantized generators `[α]~ = c_α[α] + d_α q^{α∨} D̄_{s_α}`, the map `μ̃`,
//! the operators `Y_α` on `Sym_R(𝔥)`, quantization of polynomials and the
//! quantum W-invariants.
//!
//! Elements of `B_R(V*) ⊗ B̃_R(V)` are represented by their action on
//! `B_R(V)` as [`GradedOperator`]s.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::{OnceCell, RefCell};

use crate::error::{Error, Result};
use crate::linalg;
use crate::nichols::{BElem, NicholsBasis};
use crate::polyring::{self, Basis, CPoly, Constants};
use crate::roots::{CartanType, RootSystem, WeylElem};
use crate::scalars::{QMonomial, Rational, RingElem};

/// R-linear operator on the built part of `B_R(V)`, stored column by column.
///
/// Column `(k, i)` is the image of basis element `i` of degree `k`. Only
/// source degrees whose images are fully determined by the built basis are
/// stored; on a truncated algebra that excludes the top `raise` degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedOperator {
    cols: Vec<Vec<BElem>>,
    raise: usize,
    built: usize,
}

impl GradedOperator {
    fn exact_count(nb: &NicholsBasis, raise: usize) -> usize {
        let n = nb.built_degree() + 1;
        if nb.is_complete() {
            n
        } else {
            n.saturating_sub(raise)
        }
    }

    /// Builds an operator from its action on basis elements.
    pub fn from_fn<F>(nb: &NicholsBasis, raise: usize, f: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> Result<BElem>,
    {
        let exact = Self::exact_count(nb, raise);
        let mut cols = Vec::with_capacity(exact);
        for k in 0..exact {
            let col: Result<Vec<BElem>> = (0..nb.dim(k)).map(|i| f(k, i)).collect();
            cols.push(col?);
        }
        Ok(GradedOperator { cols, raise, built: nb.built_degree() })
    }

    pub fn identity(nb: &NicholsBasis) -> Self {
        Self::from_fn(nb, 0, |k, i| Ok(BElem::basis(k, i))).expect("identity is exact")
    }

    pub fn zero(nb: &NicholsBasis) -> Self {
        Self::from_fn(nb, 0, |_, _| Ok(BElem::zero())).expect("zero is exact")
    }

    /// Highest source degree on which the operator is known exactly.
    pub fn exact_degree(&self) -> Option<usize> {
        self.cols.len().checked_sub(1)
    }

    /// Largest possible increase of Nichols degree.
    pub fn raise(&self) -> usize {
        self.raise
    }

    pub fn column(&self, k: usize, i: usize) -> &BElem {
        &self.cols[k][i]
    }

    pub fn apply(&self, x: &BElem) -> Result<BElem> {
        let mut out = BElem::zero();
        for (d, i, c) in x.terms() {
            let col = self.cols.get(d).ok_or(Error::DegreeOverflow { requested: d + self.raise, built: self.built })?;
            out.add_scaled(c, &col[i]);
        }
        Ok(out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedOperator) -> GradedOperator {
        let exact = other.cols.len().min(self.cols.len().saturating_sub(other.raise));
        let cols = other.cols[..exact]
            .iter()
            .map(|col| col.iter().map(|x| self.apply(x).expect("within exact range")).collect())
            .collect();
        GradedOperator { cols, raise: self.raise + other.raise, built: self.built }
    }

    fn combine(&self, other: &GradedOperator, c: &RingElem) -> GradedOperator {
        let exact = self.cols.len().min(other.cols.len());
        let cols = (0..exact)
            .map(|k| {
                self.cols[k]
                    .iter()
                    .zip(&other.cols[k])
                    .map(|(a, b)| {
                        let mut v = a.clone();
                        v.add_scaled(c, b);
                        v
                    })
                    .collect()
            })
            .collect();
        GradedOperator { cols, raise: self.raise.max(other.raise), built: self.built }
    }

    pub fn add(&self, other: &GradedOperator) -> GradedOperator {
        self.combine(other, &RingElem::one())
    }

    pub fn sub(&self, other: &GradedOperator) -> GradedOperator {
        self.combine(other, &RingElem::from(-1))
    }

    pub fn scale(&self, c: &RingElem) -> GradedOperator {
        let cols = self.cols.iter().map(|col| col.iter().map(|x| x.scale(c)).collect()).collect();
        GradedOperator { cols, raise: self.raise, built: self.built }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().flatten().all(|x| x.is_zero())
    }

    /// First basis element (degree, index) whose image is nonzero.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        for (k, col) in self.cols.iter().enumerate() {
            if let Some(i) = col.iter().position(|x| !x.is_zero()) {
                return Some((k, i));
            }
        }
        None
    }

    /// Whether `self − c·id` vanishes.
    pub fn is_scalar(&self, c: &RingElem) -> bool {
        self.cols
            .iter()
            .enumerate()
            .all(|(k, col)| col.iter().enumerate().all(|(i, x)| *x == BElem::term(k, i, c.clone())))
    }
}

/// Quantized generators and the operators built from them.
pub struct QuantumEngine<'a> {
    nb: &'a NicholsBasis,
    c: Constants,
    d: Vec<Rational>,
    words: Vec<Vec<usize>>,
    qmon: Vec<QMonomial>,
    etas: OnceCell<Vec<GradedOperator>>,
    roots_tilde: OnceCell<Vec<GradedOperator>>,
}

impl<'a> QuantumEngine<'a> {
    pub fn new(nb: &'a NicholsBasis, c: Constants) -> Self {
        let rs = nb.root_system();
        let m = rs.num_positive();
        let words: Vec<Vec<usize>> = (0..m).map(|a| rs.reflection(a).reduced_word(rs)).collect();
        let d = words
            .iter()
            .map(|w| w.iter().fold(Rational::ONE, |acc, &i| &acc * c.get(rs.simple_index(i))).recip())
            .collect();
        let qmon = (0..m).map(|a| rs.q_of_root(a)).collect();
        QuantumEngine { nb, c, d, words, qmon, etas: OnceCell::new(), roots_tilde: OnceCell::new() }
    }

    pub fn basis(&self) -> &'a NicholsBasis {
        self.nb
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.nb.root_system()
    }

    pub fn constants(&self) -> &Constants {
        &self.c
    }

    /// `d_α = (c_{α_1} ⋯ c_{α_l})⁻¹` over a reduced word of `s_α`.
    pub fn d(&self, alpha: usize) -> &Rational {
        &self.d[alpha]
    }

    /// Reduced word of `s_α` used for `D̄_{s_α}`.
    pub fn reflection_word(&self, alpha: usize) -> &[usize] {
        &self.words[alpha]
    }

    /// `[α]~ (x)`.
    pub fn quantized_apply(&self, alpha: usize, x: &BElem) -> Result<BElem> {
        let rs = self.root_system();
        let mut out = self.nb.left_mul_generator(alpha, x)?.scale(&RingElem::constant(self.c.get(alpha).clone()));
        if rs.is_quantum_root(alpha) {
            let dq = RingElem::term(self.qmon[alpha], self.d[alpha].clone());
            out.add_scaled(&dq, &self.nb.dbar_word(&self.words[alpha], x)?);
        }
        Ok(out)
    }

    /// `[α]~` as an operator.
    pub fn quantize_root(&self, alpha: usize) -> &GradedOperator {
        &self.quantized_roots()[alpha]
    }

    fn quantized_roots(&self) -> &Vec<GradedOperator> {
        self.roots_tilde.get_or_init(|| {
            (0..self.root_system().num_positive())
                .map(|a| {
                    GradedOperator::from_fn(self.nb, 1, |k, i| self.quantized_apply(a, &BElem::basis(k, i)))
                        .expect("columns within the exact range")
                })
                .collect()
        })
    }

    /// `μ̃(x) = Σ_α ⟨x, α∨⟩ [α]~` for `x = Σ_j a_j ω_j`.
    pub fn mu_tilde_lin(&self, weight: &[Rational]) -> GradedOperator {
        let rs = self.root_system();
        let mut op = GradedOperator::from_fn(self.nb, 1, |_, _| Ok(BElem::zero())).expect("zero");
        for a in 0..rs.num_positive() {
            let p = weight
                .iter()
                .zip(&rs.root(a).coroot)
                .fold(Rational::ZERO, |acc, (x, &k)| &acc + &(x * &Rational::from_int(k)));
            if !p.is_zero() {
                op = op.add(&self.quantize_root(a).scale(&RingElem::constant(p)));
            }
        }
        op
    }

    /// `η_j = μ̃(ω_j)` for every fundamental weight.
    pub fn etas(&self) -> &[GradedOperator] {
        self.etas.get_or_init(|| {
            let n = self.root_system().rank;
            (0..n)
                .map(|j| {
                    let mut w = vec![Rational::ZERO; n];
                    w[j] = Rational::ONE;
                    self.mu_tilde_lin(&w)
                })
                .collect()
        })
    }

    /// `μ̃(f)` as an operator, substituting `η_j` for `ω_j`.
    pub fn mu_tilde_poly(&self, f: &CPoly) -> GradedOperator {
        let rs = self.root_system();
        let f = polyring::to_basis(rs, f, Basis::Omega);
        let etas = self.etas();
        let mut memo: BTreeMap<Vec<u16>, GradedOperator> = BTreeMap::new();
        memo.insert(vec![0; rs.rank], GradedOperator::identity(self.nb));
        let mut out = GradedOperator::zero(self.nb);
        for (e, c) in f.terms() {
            let op = Self::monomial_op(&mut memo, etas, e);
            out = out.add(&op.scale(c));
        }
        out
    }

    fn monomial_op(memo: &mut BTreeMap<Vec<u16>, GradedOperator>, etas: &[GradedOperator], e: &[u16]) -> GradedOperator {
        if let Some(op) = memo.get(e) {
            return op.clone();
        }
        let j = e.iter().position(|&x| x > 0).expect("nonconstant monomial");
        let mut rest = e.to_vec();
        rest[j] -= 1;
        let op = etas[j].compose(&Self::monomial_op(memo, etas, &rest));
        memo.insert(e.to_vec(), op.clone());
        op
    }

    /// `μ̃(f)(x)` without materializing the operator.
    pub fn mu_tilde_apply(&self, f: &CPoly, x: &BElem) -> Result<BElem> {
        MonomialImages::new(self, x.clone()).apply(f)
    }
}

/// Memoized images `η^e(x)` of one fixed element, shared across polynomials.
///
/// `η^e` is `η_j ∘ η^{e − ε_j}` with `j` the first nonzero exponent.
pub struct MonomialImages<'q, 'a> {
    qe: &'q QuantumEngine<'a>,
    memo: BTreeMap<Vec<u16>, BElem>,
}

impl<'q, 'a> MonomialImages<'q, 'a> {
    pub fn new(qe: &'q QuantumEngine<'a>, x: BElem) -> Self {
        let mut memo = BTreeMap::new();
        memo.insert(vec![0; qe.root_system().rank], x);
        MonomialImages { qe, memo }
    }

    pub fn image(&mut self, e: &[u16]) -> Result<&BElem> {
        if !self.memo.contains_key(e) {
            let j = e.iter().position(|&k| k > 0).expect("nonconstant monomial");
            let mut rest = e.to_vec();
            rest[j] -= 1;
            let qe = self.qe;
            let parent = self.image(&rest)?;
            let v = if parent.is_zero() { BElem::zero() } else { qe.etas()[j].apply(parent)? };
            self.memo.insert(e.to_vec(), v);
        }
        Ok(&self.memo[e])
    }

    /// `μ̃(f)(x)`.
    pub fn apply(&mut self, f: &CPoly) -> Result<BElem> {
        let f = polyring::to_basis(self.qe.root_system(), f, Basis::Omega);
        let mut out = BElem::zero();
        for (e, c) in f.terms() {
            out.add_scaled(c, self.image(e)?);
        }
        Ok(out)
    }
}

/// The operators `Y_j = ω_j + Σ_{γ∈Δ̃₊} ⟨ω_j, γ∨⟩ q^{γ∨} ∂_{s_γ}` on `Sym_R(𝔥)`.
pub struct YOperators<'a> {
    rs: &'a RootSystem,
    quantum: Vec<(usize, Vec<usize>, QMonomial)>,
    memo: RefCell<BTreeMap<Vec<u16>, CPoly>>,
}

impl<'a> YOperators<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        let quantum = rs
            .quantum_roots()
            .into_iter()
            .map(|g| (g, rs.reflection(g).reduced_word(rs), rs.q_of_root(g)))
            .collect();
        YOperators { rs, quantum, memo: RefCell::new(BTreeMap::new()) }
    }

    /// `Y_j f` for `f` in ω-coordinates.
    pub fn apply(&self, j: usize, f: &CPoly) -> Result<CPoly> {
        let n = self.rs.rank;
        let f = polyring::to_basis(self.rs, f, Basis::Omega);
        let mut out = CPoly::var(Basis::Omega, n, j).mul(&f);
        for (g, word, q) in &self.quantum {
            let k = self.rs.root(*g).coroot[j];
            if k == 0 {
                continue;
            }
            let d = polyring::demazure_word(self.rs, word, &f)?;
            out = out.add(&d.scale(&RingElem::term(*q, Rational::from_int(k))));
        }
        Ok(out)
    }

    /// `m(Y)(1)` for the ω-monomial with exponents `e`.
    pub fn monomial_at_one(&self, e: &[u16]) -> Result<CPoly> {
        if let Some(p) = self.memo.borrow().get(e) {
            return Ok(p.clone());
        }
        let n = self.rs.rank;
        let p = match e.iter().position(|&x| x > 0) {
            None => CPoly::one(Basis::Omega, n),
            Some(j) => {
                let mut rest = e.to_vec();
                rest[j] -= 1;
                let inner = self.monomial_at_one(&rest)?;
                self.apply(j, &inner)?
            }
        };
        self.memo.borrow_mut().insert(e.to_vec(), p.clone());
        Ok(p)
    }

    /// `f((Y_j)_j)(1)`.
    pub fn eval_at_one(&self, f: &CPoly) -> Result<CPoly> {
        let f = polyring::to_basis(self.rs, f, Basis::Omega);
        let mut out = CPoly::zero(Basis::Omega, self.rs.rank);
        for (e, c) in f.terms() {
            out = out.add(&self.monomial_at_one(e)?.scale(c));
        }
        Ok(out)
    }

    /// The unique `f̃` with `f̃((Y_j))(1) = f`, by descending ω-degree.
    pub fn quantize(&self, f: &CPoly) -> Result<CPoly> {
        let f = polyring::to_basis(self.rs, f, Basis::Omega);
        let mut residual = f.clone();
        let mut out = CPoly::zero(Basis::Omega, self.rs.rank);
        while let Some(d) = residual.degree() {
            let top = residual.homogeneous_component(d);
            out = out.add(&top);
            residual = residual.sub(&self.eval_at_one(&top)?);
            if residual.degree().is_some_and(|e| e >= d) {
                return Err(Error::KernelSearchFailed(String::from("quantization is not unitriangular")));
            }
        }
        Ok(out)
    }
}

/// Weighted degree `2·Σλ_i + |e|` of a term `q^λ ω^e`.
pub fn weighted_degree(q: &QMonomial, e: &[u16]) -> i64 {
    2 * q.total() + e.iter().map(|&x| x as i64).sum::<i64>()
}

/// Weyl group elements grouped by length.
pub fn elements_by_length(rs: &RootSystem) -> Result<Vec<Vec<WeylElem>>> {
    let all = rs.enumerate_weyl(crate::roots::DEFAULT_WEYL_BOUND)?;
    let mut out: Vec<Vec<WeylElem>> = Vec::new();
    for w in all {
        let l = w.length();
        if out.len() <= l {
            out.resize(l + 1, Vec::new());
        }
        out[l].push(w);
    }
    Ok(out)
}

/// Values `∂_w(p_k)` for every ω-degree `k ≤ l(w₀)` and `l(w) = k`, keyed by
/// `(k, index of w, q-monomial)`. A polynomial lies in the ideal generated by
/// positive-degree W-invariants iff all of them vanish.
pub fn coinvariant_functionals(
    rs: &RootSystem,
    by_length: &[Vec<WeylElem>],
    p: &CPoly,
) -> Result<BTreeMap<(usize, usize, QMonomial), Rational>> {
    let p = polyring::to_basis(rs, p, Basis::Omega);
    let mut out = BTreeMap::new();
    let Some(top) = p.degree() else { return Ok(out) };
    for (k, elems) in by_length.iter().enumerate().take(top + 1) {
        let h = p.homogeneous_component(k);
        if h.is_zero() {
            continue;
        }
        for (wi, w) in elems.iter().enumerate() {
            let v = polyring::demazure_w(rs, w, &h)?;
            let c = v.coefficient(&vec![0; rs.rank]);
            for (q, x) in c.terms() {
                out.insert((k, wi, *q), x.clone());
            }
        }
    }
    Ok(out)
}

/// Whether `p` lies in `I_W ⊗ R`.
pub fn in_invariant_ideal(rs: &RootSystem, by_length: &[Vec<WeylElem>], p: &CPoly) -> Result<bool> {
    Ok(coinvariant_functionals(rs, by_length, p)?.is_empty())
}

/// Exponent vectors of all monomials of total degree `d` in `n` variables.
pub fn monomials(n: usize, d: usize) -> Vec<Vec<u16>> {
    fn rec(n: usize, d: usize, prefix: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if prefix.len() + 1 == n {
            prefix.push(d as u16);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=d).rev() {
            prefix.push(k as u16);
            rec(n, d - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// A quantum fundamental invariant and its classical limit.
#[derive(Clone, Debug)]
pub struct QuantumInvariant {
    pub degree: usize,
    /// In ω-coordinates.
    pub poly: CPoly,
    /// Classical invariant in ambient coordinates (`poly` at `q = 0`, lifted).
    pub classical: CPoly,
}

impl QuantumInvariant {
    /// Ambient representative: the classical invariant plus the lifted q-corrections.
    pub fn ambient(&self, rs: &RootSystem) -> CPoly {
        let classical_omega = polyring::to_basis(rs, &self.classical, Basis::Omega);
        let corr = self.poly.sub(&classical_omega);
        self.classical.add(&polyring::to_basis(rs, &corr, Basis::Ambient))
    }
}

/// Candidate q-correction terms `q^λ ω^e` of weighted degree `d` with `λ ≠ 0`.
fn correction_terms(n: usize, d: usize) -> Vec<(QMonomial, Vec<u16>)> {
    let mut out = Vec::new();
    for l in 1..=d / 2 {
        for lam in monomials(n, l) {
            let q = QMonomial::new(&lam.iter().map(|&x| x as i64).collect::<Vec<_>>());
            for e in monomials(n, d - 2 * l) {
                out.push((q, e));
            }
        }
    }
    out
}

/// Finds `I^q = P + Σ c_{λ,e} q^λ ω^e` with `I^q((Y_j))(1) ∈ I_W ⊗ R`, free
/// parameters set to zero.
pub fn quantum_invariant_for(
    rs: &RootSystem,
    ys: &YOperators<'_>,
    by_length: &[Vec<WeylElem>],
    classical: &CPoly,
    degree: usize,
) -> Result<QuantumInvariant> {
    let n = rs.rank;
    let p = polyring::to_basis(rs, classical, Basis::Omega);
    let cands = correction_terms(n, degree);
    let base = coinvariant_functionals(rs, by_length, &ys.eval_at_one(&p)?)?;
    let mut cols = Vec::with_capacity(cands.len());
    for (q, e) in &cands {
        let img = ys.monomial_at_one(e)?.scale(&RingElem::monomial(*q));
        cols.push(coinvariant_functionals(rs, by_length, &img)?);
    }
    let keys: BTreeSet<_> = base.keys().chain(cols.iter().flat_map(|c| c.keys())).cloned().collect();
    let matrix: Vec<Vec<Rational>> =
        keys.iter().map(|k| cols.iter().map(|c| c.get(k).cloned().unwrap_or_default()).collect()).collect();
    let rhs: Vec<Rational> = keys.iter().map(|k| -base.get(k).cloned().unwrap_or_default()).collect();
    let x = linalg::solve(&matrix, &rhs, cands.len())
        .ok_or_else(|| Error::KernelSearchFailed(alloc::format!("no quantum correction of {classical} in degree {degree}")))?;
    let mut poly = p;
    for ((q, e), c) in cands.iter().zip(x) {
        poly.add_term(e.clone(), RingElem::term(*q, c));
    }
    Ok(QuantumInvariant { degree, poly, classical: classical.clone() })
}

/// Quantum fundamental invariants, one per fundamental degree.
pub fn quantum_invariants(rs: &RootSystem) -> Result<Vec<QuantumInvariant>> {
    let ys = YOperators::new(rs);
    let by_length = elements_by_length(rs)?;
    rs.fundamental_degrees()
        .into_iter()
        .zip(polyring::classical_invariants(rs))
        .map(|(d, inv)| quantum_invariant_for(rs, &ys, &by_length, &inv, d))
        .collect()
}

/// Coefficients of the characteristic polynomial of the tridiagonal matrix
/// with diagonal `x_i`, `q_i` above and `−1` below (type A, ambient):
/// `E_k^m = E_k^{m−1} + x_m E_{k−1}^{m−1} + q_{m−1} E_{k−2}^{m−2}`.
pub fn givental_kim(rs: &RootSystem, k: usize) -> Result<CPoly> {
    if rs.kind != CartanType::A {
        return Err(Error::UnsupportedType(String::from("the tridiagonal construction is type A only")));
    }
    let dim = rs.ambient_dim;
    let zero = CPoly::zero(Basis::Ambient, dim);
    let one = CPoly::one(Basis::Ambient, dim);
    // e[m][j] = E_j^m for m variables.
    let mut e: Vec<Vec<CPoly>> = vec![vec![one.clone()]];
    for m in 1..=dim {
        let mut row = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let get = |mm: usize, jj: isize| -> CPoly {
                if jj < 0 || jj as usize > mm {
                    zero.clone()
                } else {
                    e[mm][jj as usize].clone()
                }
            };
            let mut v = get(m - 1, j as isize);
            v = v.add(&CPoly::var(Basis::Ambient, dim, m - 1).mul(&get(m - 1, j as isize - 1)));
            if m >= 2 {
                let q = RingElem::monomial(QMonomial::var(m - 2));
                v = v.add(&get(m - 2, j as isize - 2).scale(&q));
            }
            row.push(v);
        }
        e.push(row);
    }
    Ok(e[dim].get(k).cloned().unwrap_or(zero))
}

/// The pair sets of the commutativity argument and a bijection between them.
#[derive(Clone, Debug)]
pub struct Prop1Sets {
    /// `(α, β) ∈ Δ̃₊ × Δ₊` with `l(s_α s_β) = l(s_α) − 1`.
    pub a: Vec<(usize, usize)>,
    /// `(α, β) ∈ Δ̃₊²` with `l(s_α s_β) = l(s_α) + l(s_β)`.
    pub b: Vec<(usize, usize)>,
    /// `A` without diagonal pairs.
    pub a_prime: Vec<(usize, usize)>,
    /// `B` without commuting pairs.
    pub b_prime: Vec<(usize, usize)>,
    /// Matched pairs `((α, β), (γ, δ))`.
    pub matching: Vec<((usize, usize), (usize, usize))>,
}

/// Enumerates the pair sets and matches `A′` with `B′` so that
/// `α∨ = γ∨ + δ∨` and `s_α s_β = s_γ s_δ`.
pub fn prop1_sets(rs: &RootSystem) -> Result<Prop1Sets> {
    let q = rs.quantum_roots();
    let m = rs.num_positive();
    let s = |a: usize| rs.reflection(a);
    let len = |a: usize| s(a).length();
    let mut a = Vec::new();
    for &x in &q {
        for y in 0..m {
            if s(x).compose(s(y)).length() + 1 == len(x) {
                a.push((x, y));
            }
        }
    }
    let mut b = Vec::new();
    for &x in &q {
        for &y in &q {
            if s(x).compose(s(y)).length() == len(x) + len(y) {
                b.push((x, y));
            }
        }
    }
    let a_prime: Vec<_> = a.iter().copied().filter(|(x, y)| x != y).collect();
    let b_prime: Vec<_> = b.iter().copied().filter(|&(x, y)| s(x).compose(s(y)) != s(y).compose(s(x))).collect();

    let adj: Vec<Vec<usize>> = a_prime
        .iter()
        .map(|&(x, y)| {
            let prod = s(x).compose(s(y));
            let cx = &rs.root(x).coroot;
            b_prime
                .iter()
                .enumerate()
                .filter(|(_, &(g, d))| {
                    let sum: Vec<i64> = rs.root(g).coroot.iter().zip(&rs.root(d).coroot).map(|(u, v)| u + v).collect();
                    &sum == cx && s(g).compose(s(d)) == prod
                })
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    let assigned = bipartite_matching(&adj, b_prime.len());
    if a_prime.len() != b_prime.len() {
        return Err(Error::NoMatching(alloc::format!("|A'| = {} but |B'| = {}", a_prime.len(), b_prime.len())));
    }
    let mut matching = Vec::new();
    for (i, j) in assigned.iter().enumerate() {
        match j {
            Some(j) => matching.push((a_prime[i], b_prime[*j])),
            None => {
                let (x, y) = a_prime[i];
                return Err(Error::NoMatching(alloc::format!(
                    "({}, {}) has no partner",
                    rs.root_label(x),
                    rs.root_label(y)
                )));
            }
        }
    }
    Ok(Prop1Sets { a, b, a_prime, b_prime, matching })
}

/// Maximum bipartite matching by augmenting paths; entry `i` is the right
/// vertex matched to left vertex `i`.
fn bipartite_matching(adj: &[Vec<usize>], n_right: usize) -> Vec<Option<usize>> {
    fn augment(u: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &v in &adj[u] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if owner[v].is_none_or(|w| augment(w, adj, seen, owner)) {
                owner[v] = Some(u);
                return true;
            }
        }
        false
    }
    let mut owner = vec![None; n_right];
    for u in 0..adj.len() {
        let mut seen = vec![false; n_right];
        augment(u, adj, &mut seen, &mut owner);
    }
    let mut out = vec![None; adj.len()];
    for (v, u) in owner.iter().enumerate() {
        if let Some(u) = u {
            out[*u] = Some(v);
        }
    }
    out
}

/// Exponents of `q^λ` in the ambient variables: `λ` read as a coroot in
/// ambient coordinates. In type B this sends `q^{α_i∨} ↦ q_i q_{i+1}^{-1}`
/// and `q^{α_n∨} ↦ q_n²`.
pub fn display_exponents(rs: &RootSystem, q: &QMonomial) -> Vec<Rational> {
    let mut out = vec![Rational::ZERO; rs.ambient_dim];
    for i in 0..rs.rank {
        let l = q.exponent(i);
        if l == 0 {
            continue;
        }
        let a = rs.root(rs.simple_index(i));
        for (o, &x) in out.iter_mut().zip(&a.ambient) {
            *o += &Rational::new(2 * x * l, a.norm2);
        }
    }
    out
}

/// Renders `q^λ` in ambient variables, e.g. `q1*q2^-1`.
pub fn display_qmonomial(rs: &RootSystem, q: &QMonomial) -> String {
    let parts: Vec<String> = display_exponents(rs, q)
        .iter()
        .enumerate()
        .filter(|(_, e)| !e.is_zero())
        .map(|(i, e)| if e.is_one() { alloc::format!("q{}", i + 1) } else { alloc::format!("q{}^{e}", i + 1) })
        .collect();
    if parts.is_empty() {
        String::from("1")
    } else {
        parts.join("*")
    }
}

/// Renders a ring element under [`display_qmonomial`].
pub fn display_ring(rs: &RootSystem, c: &RingElem) -> String {
    c.display_with(|m| display_qmonomial(rs, m))
}

/// A generator of the type-B bracket algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BnGen {
    /// `[i,j]`, 1-based, `i ≠ j`.
    Bracket(usize, usize),
    /// `[i,j]` with a bar.
    Bar(usize, usize),
    /// `[i]`.
    Short(usize),
}

impl BnGen {
    /// Positive root index and sign, with `[j,i] = −[i,j]`.
    pub fn root(&self, rs: &RootSystem) -> (usize, i64) {
        let n = rs.rank;
        let mut v = vec![0i64; n];
        let sign = match *self {
            BnGen::Bracket(i, j) => {
                let (a, b, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
                v[a - 1] = 1;
                v[b - 1] = -1;
                s
            }
            BnGen::Bar(i, j) => {
                v[i - 1] = 1;
                v[j - 1] = 1;
                1
            }
            BnGen::Short(i) => {
                v[i - 1] = 1;
                1
            }
        };
        let idx = (0..rs.num_positive()).find(|&a| rs.root(a).ambient == v).expect("type-B root");
        (idx, sign)
    }

    pub fn label(&self) -> String {
        match *self {
            BnGen::Bracket(i, j) => alloc::format!("[{i},{j}]"),
            BnGen::Bar(i, j) => alloc::format!("~[{i},{j}]"),
            BnGen::Short(i) => alloc::format!("[{i}]"),
        }
    }
}

/// Kinds of type-B bracket relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BnFamily {
    /// Squares of generators.
    Square,
    /// Commutation of brackets on disjoint index pairs; needs rank at least 4.
    Disjoint,
    /// Remaining commutations.
    Commute,
    /// Three- and four-term cyclic sums.
    Cyclic,
    /// Quartic relations between a bracket pair and a short generator.
    Quartic,
}

impl BnFamily {
    pub fn name(self) -> &'static str {
        match self {
            BnFamily::Square => "square",
            BnFamily::Disjoint => "disjoint",
            BnFamily::Commute => "commute",
            BnFamily::Cyclic => "cyclic",
            BnFamily::Quartic => "quartic",
        }
    }
}

/// `Σ_terms sign · product = scalar · id`, with the scalar given by ambient q-exponents.
#[derive(Clone, Debug)]
pub struct BnRelation {
    pub family: BnFamily,
    pub label: String,
    pub terms: Vec<(i64, Vec<BnGen>)>,
    /// `None` means zero; otherwise the ambient exponents of the scalar `Q`.
    pub rhs: Option<Vec<i64>>,
}

/// Instances of the type-B bracket relations available at rank `n`.
pub fn bn_relations(n: usize) -> Vec<BnRelation> {
    use BnFamily::*;
    use BnGen::*;
    let mut out = Vec::new();
    let rel = |family: BnFamily, label: String, terms: Vec<(i64, Vec<BnGen>)>, rhs: Option<Vec<i64>>| BnRelation {
        family,
        label,
        terms,
        rhs,
    };
    let q_ratio = |i: usize, j: usize| {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        v[j - 1] = -1;
        v
    };
    for i in 1..=n {
        for j in i + 1..=n {
            let g = Bracket(i, j);
            let rhs = (j == i + 1).then(|| q_ratio(i, j));
            out.push(rel(Square, alloc::format!("{}^2", g.label()), vec![(1, vec![g, g])], rhs));
            let b = Bar(i, j);
            out.push(rel(Square, alloc::format!("{}^2", b.label()), vec![(1, vec![b, b])], None));
        }
        let s = Short(i);
        let rhs = (i == n).then(|| {
            let mut v = vec![0; n];
            v[n - 1] = 2;
            v
        });
        out.push(rel(Square, alloc::format!("{}^2", s.label()), vec![(1, vec![s, s])], rhs));
    }
    let comm = |family: BnFamily, a: BnGen, b: BnGen| {
        rel(family, alloc::format!("{}{} = {}{}", a.label(), b.label(), b.label(), a.label()), vec![(1, vec![a, b]), (-1, vec![b, a])], None)
    };
    for i in 1..=n {
        for j in i + 1..=n {
            for k in 1..=n {
                for l in k + 1..=n {
                    if [i, j].contains(&k) || [i, j].contains(&l) || (i, j) > (k, l) {
                        continue;
                    }
                    out.push(comm(Disjoint, Bracket(i, j), Bracket(k, l)));
                    out.push(comm(Disjoint, Bar(i, j), Bracket(k, l)));
                    out.push(comm(Disjoint, Bracket(i, j), Bar(k, l)));
                    out.push(comm(Disjoint, Bar(i, j), Bar(k, l)));
                }
            }
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(comm(Commute, Short(i), Short(j)));
            out.push(comm(Commute, Bracket(i, j), Bar(i, j)));
            for k in (1..=n).filter(|&k| k != i && k != j) {
                out.push(comm(Commute, Bracket(i, j), Short(k)));
                out.push(comm(Commute, Bar(i, j), Short(k)));
            }
        }
    }
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            for k in (1..=n).filter(|&k| k != i && k != j) {
                out.push(rel(
                    Cyclic,
                    alloc::format!("cyclic [{i},{j}][{j},{k}]"),
                    vec![
                        (1, vec![Bracket(i, j), Bracket(j, k)]),
                        (1, vec![Bracket(j, k), Bracket(k, i)]),
                        (1, vec![Bracket(k, i), Bracket(i, j)]),
                    ],
                    None,
                ));
                out.push(rel(
                    Cyclic,
                    alloc::format!("bar ~[{i},{k}][{i},{j}]"),
                    vec![
                        (1, vec![Bar(i, k), Bracket(i, j)]),
                        (1, vec![Bracket(j, i), Bar(j, k)]),
                        (1, vec![Bar(k, j), Bar(i, k)]),
                    ],
                    None,
                ));
            }
            out.push(rel(
                Cyclic,
                alloc::format!("short [{i},{j}][{i}]"),
                vec![
                    (1, vec![Bracket(i, j), Short(i)]),
                    (1, vec![Short(j), Bracket(j, i)]),
                    (1, vec![Short(i), Bar(i, j)]),
                    (1, vec![Bar(i, j), Short(j)]),
                ],
                None,
            ));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let (a, b, s) = (Bracket(i, j), Bar(i, j), Short(i));
            out.push(rel(
                Quartic,
                alloc::format!("quartic ({i},{j})"),
                vec![(1, vec![a, s, b, s]), (1, vec![b, s, a, s]), (1, vec![s, a, s, b]), (1, vec![s, b, s, a])],
                None,
            ));
        }
    }
    out
}

/// Converts ambient q-exponents back to a monomial over simple coroots (type B).
pub fn qmonomial_from_display(rs: &RootSystem, exps: &[i64]) -> Result<QMonomial> {
    // Solve Σ λ_i α_i∨ = exps in ambient coordinates.
    let rows: Vec<Vec<Rational>> = (0..rs.ambient_dim)
        .map(|r| {
            (0..rs.rank)
                .map(|i| {
                    let a = rs.root(rs.simple_index(i));
                    Rational::new(2 * a.ambient[r], a.norm2)
                })
                .collect()
        })
        .collect();
    let rhs: Vec<Rational> = exps.iter().map(|&x| Rational::from_int(x)).collect();
    let lam = linalg::solve(&rows, &rhs, rs.rank).ok_or(Error::NonIntegralCoroot)?;
    crate::scalars::q_of_coroot(&lam)
}
