//! The commutative side: `Sym_R(𝔥)`, its W-action, Demazure operators,
//! BGG and Schubert polynomials, and the map `μ : Sym(𝔥) → B(V)`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::linalg;
use crate::nichols::{BElem, NicholsBasis};
use crate::roots::{CartanType, RootSystem, WeylElem};
use crate::scalars::{Rational, RingElem};

/// Coordinate system of a polynomial's variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    /// Fundamental weights `ω_1, …, ω_n`.
    Omega,
    /// Ambient coordinates (`x_i` in type A, `ε_i` otherwise).
    Ambient,
}

/// Polynomial over `R` in a fixed coordinate basis.
#[derive(Clone, PartialEq, Eq)]
pub struct CPoly {
    basis: Basis,
    nvars: usize,
    terms: BTreeMap<Vec<u16>, RingElem>,
}

impl CPoly {
    pub fn zero(basis: Basis, nvars: usize) -> Self {
        CPoly { basis, nvars, terms: BTreeMap::new() }
    }

    pub fn constant(basis: Basis, nvars: usize, c: RingElem) -> Self {
        let mut p = Self::zero(basis, nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(basis: Basis, nvars: usize) -> Self {
        Self::constant(basis, nvars, RingElem::one())
    }

    pub fn var(basis: Basis, nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(basis, e, RingElem::one())
    }

    pub fn monomial(basis: Basis, exps: Vec<u16>, c: RingElem) -> Self {
        let mut p = Self::zero(basis, exps.len());
        p.add_term(exps, c);
        p
    }

    /// Linear form `Σ c_i v_i`.
    pub fn linear(basis: Basis, coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(basis, n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, RingElem::constant(c.clone()));
        }
        p
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, exps: Vec<u16>, c: RingElem) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &RingElem)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exps: &[u16]) -> RingElem {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Maximal total degree in the variables (`None` for zero).
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| total(e)).max()
    }

    pub fn homogeneous_component(&self, d: usize) -> CPoly {
        let mut out = Self::zero(self.basis, self.nvars);
        for (e, c) in &self.terms {
            if total(e) == d {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| total(e));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    fn check_compatible(&self, other: &CPoly) {
        assert!(self.basis == other.basis && self.nvars == other.nvars, "coordinate mismatch");
    }

    pub fn add(&self, other: &CPoly) -> CPoly {
        self.check_compatible(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &CPoly) -> CPoly {
        self.add(&other.scale(&RingElem::from(-1)))
    }

    pub fn scale(&self, c: &RingElem) -> CPoly {
        let mut out = Self::zero(self.basis, self.nvars);
        if c.is_zero() {
            return out;
        }
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &CPoly) -> CPoly {
        self.check_compatible(other);
        let mut out = Self::zero(self.basis, self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u16> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> CPoly {
        let mut out = Self::one(self.basis, self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Sets all quantum parameters to zero.
    pub fn at_q_zero(&self) -> CPoly {
        let mut out = Self::zero(self.basis, self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.at_q_zero());
        }
        out
    }

    /// Replaces variable `i` by `images[i]` (all in a common target basis).
    pub fn substitute(&self, images: &[CPoly]) -> CPoly {
        assert_eq!(images.len(), self.nvars);
        let (basis, n) = images.first().map_or((self.basis, 0), |p| (p.basis, p.nvars));
        // Variables sent to themselves only shift exponents.
        let fixed: Vec<bool> = images
            .iter()
            .enumerate()
            .map(|(i, p)| self.basis == basis && self.nvars == n && *p == CPoly::var(basis, n, i))
            .collect();
        let mut powers: Vec<Vec<CPoly>> = images.iter().map(|p| vec![CPoly::one(basis, n), p.clone()]).collect();
        let mut out = CPoly::zero(basis, n);
        for (e, c) in &self.terms {
            let mut shift = vec![0u16; n];
            let mut m = CPoly::constant(basis, n, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if fixed[i] {
                    shift[i] += k;
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                m = m.mul(&powers[i][k as usize]);
            }
            for (me, mc) in m.terms {
                let e2 = me.iter().zip(&shift).map(|(a, b)| a + b).collect();
                out.add_term(e2, mc);
            }
        }
        out
    }

    /// Exact division by a linear form, or [`Error::NotDivisible`].
    pub fn div_linear(&self, l: &CPoly) -> Result<CPoly> {
        self.check_compatible(l);
        if l.terms.keys().any(|e| total(e) != 1) {
            return Err(Error::NotDivisible(String::from("divisor is not a linear form")));
        }
        // Pivot on the last variable occurring in the form.
        let pivot = l
            .terms
            .keys()
            .filter_map(|e| e.iter().position(|&x| x == 1))
            .max()
            .ok_or_else(|| Error::NotDivisible(String::from("division by zero")))?;
        let a = l.coefficient(&unit_exps(self.nvars, pivot));
        let inv = RingElem::constant(a.as_constant().ok_or_else(|| Error::NotDivisible(String::from("non-scalar divisor")))?.recip());
        let minus = RingElem::from(-1);
        let others: Vec<(usize, RingElem)> = l
            .terms
            .iter()
            .filter_map(|(e, c)| e.iter().position(|&x| x == 1).filter(|&j| j != pivot).map(|j| (j, c * &minus)))
            .collect();
        // Keyed by pivot exponent first, so each step only creates smaller keys.
        let mut rem: BTreeMap<(u16, Vec<u16>), RingElem> =
            self.terms.iter().map(|(e, c)| ((e[pivot], e.clone()), c.clone())).collect();
        let mut quot = Self::zero(self.basis, self.nvars);
        while let Some(((k, mut e), c)) = rem.pop_last() {
            if k == 0 {
                let mono = CPoly::monomial(self.basis, e, c);
                return Err(Error::NotDivisible(alloc::format!("nonzero remainder term {mono}")));
            }
            e[pivot] -= 1;
            let qc = &c * &inv;
            for (j, b) in &others {
                let mut te = e.clone();
                te[*j] += 1;
                let slot = rem.entry((k - 1, te)).or_default();
                *slot += &(&qc * b);
                if slot.is_zero() {
                    let mut te = e.clone();
                    te[*j] += 1;
                    rem.remove(&(k - 1, te));
                }
            }
            quot.add_term(e, qc);
        }
        Ok(quot)
    }

    fn var_name(&self) -> &'static str {
        match self.basis {
            Basis::Omega => "w",
            Basis::Ambient => "x",
        }
    }

    /// Renders with a custom variable prefix (`x`, `e`, `w`).
    pub fn display_vars(&self, var: &str) -> String {
        self.display_full(var, &|c: &RingElem| alloc::format!("{c}"))
    }

    /// Renders with a custom variable prefix and coefficient renderer.
    pub fn display_full(&self, var: &str, coeff: &dyn Fn(&RingElem) -> String) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut keys: Vec<&Vec<u16>> = self.terms.keys().collect();
        keys.sort_by(|a, b| total(b).cmp(&total(a)).then_with(|| b.cmp(a)));
        let mut s = String::new();
        for (k, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let mono = monomial_string(var, e);
            let cs = coeff(c);
            let single = c.terms().len() == 1;
            let (neg, body) = match cs.strip_prefix('-') {
                Some(rest) if single => (true, String::from(rest)),
                _ => (false, cs),
            };
            let body = if !single { alloc::format!("({body})") } else { body };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if mono.is_empty() {
                s.push_str(&body);
            } else if body == "1" {
                s.push_str(&mono);
            } else {
                s.push_str(&alloc::format!("{body}*{mono}"));
            }
        }
        s
    }
}

fn total(e: &[u16]) -> usize {
    e.iter().map(|&x| x as usize).sum()
}

fn unit_exps(n: usize, i: usize) -> Vec<u16> {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

fn monomial_string(var: &str, e: &[u16]) -> String {
    let mut parts = Vec::new();
    for (i, &x) in e.iter().enumerate() {
        match x {
            0 => {}
            1 => parts.push(alloc::format!("{var}{}", i + 1)),
            _ => parts.push(alloc::format!("{var}{}^{x}", i + 1)),
        }
    }
    parts.join("*")
}

impl fmt::Display for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_vars(self.var_name()))
    }
}

impl fmt::Debug for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CPoly[{:?}]({})", self.basis, self)
    }
}

/// Number of variables used for the given basis.
pub fn nvars(rs: &RootSystem, basis: Basis) -> usize {
    match basis {
        Basis::Omega => rs.rank,
        Basis::Ambient => rs.ambient_dim,
    }
}

/// Variable prefix used when printing ambient polynomials.
pub fn ambient_var(rs: &RootSystem) -> &'static str {
    if rs.kind == CartanType::A {
        "x"
    } else {
        "e"
    }
}

/// The positive root with index `idx` as a linear form.
pub fn root_poly(rs: &RootSystem, idx: usize, basis: Basis) -> CPoly {
    let root = rs.root(idx);
    match basis {
        Basis::Ambient => CPoly::linear(basis, &root.ambient.iter().map(|&x| Rational::from_int(x)).collect::<Vec<_>>()),
        Basis::Omega => {
            // α = Σ_i m_i α_i and α_i = Σ_j cartan[i][j] ω_j.
            let coeffs: Vec<Rational> = (0..rs.rank)
                .map(|j| Rational::from_int((0..rs.rank).map(|i| root.simple[i] * rs.cartan[i][j]).sum()))
                .collect();
            CPoly::linear(basis, &coeffs)
        }
    }
}

/// Images of the coordinate variables under `w`, as linear forms.
fn w_images(rs: &RootSystem, w: &WeylElem, basis: Basis) -> Vec<CPoly> {
    let n = nvars(rs, basis);
    (0..n)
        .map(|j| {
            let mut v = vec![Rational::ZERO; n];
            v[j] = Rational::ONE;
            let img = match basis {
                Basis::Omega => rs.act_on_weight(w, &v),
                Basis::Ambient => rs.act_on_ambient(w, &v),
            };
            CPoly::linear(basis, &img)
        })
        .collect()
}

/// `w · f` by linear substitution.
pub fn w_act_poly(rs: &RootSystem, w: &WeylElem, f: &CPoly) -> CPoly {
    if f.is_zero() || w.is_identity() {
        return f.clone();
    }
    f.substitute(&w_images(rs, w, f.basis))
}

/// `∂_i f = (f − s_i f)/α_i` for the simple root `α_i`.
pub fn demazure(rs: &RootSystem, i: usize, f: &CPoly) -> Result<CPoly> {
    let s = rs.simple_reflection(i);
    let num = f.sub(&w_act_poly(rs, s, f));
    if num.is_zero() {
        return Ok(num);
    }
    num.div_linear(&root_poly(rs, rs.simple_index(i), f.basis))
}

/// `∂_{i_1} ⋯ ∂_{i_l} f` for a word of simple indices.
pub fn demazure_word(rs: &RootSystem, word: &[usize], f: &CPoly) -> Result<CPoly> {
    let mut cur = f.clone();
    for &i in word.iter().rev() {
        if cur.is_zero() {
            break;
        }
        cur = demazure(rs, i, &cur)?;
    }
    Ok(cur)
}

/// `∂_w` along a reduced word of `w`.
pub fn demazure_w(rs: &RootSystem, w: &WeylElem, f: &CPoly) -> Result<CPoly> {
    demazure_word(rs, &w.reduced_word(rs), f)
}

/// Fundamental weights in ambient coordinates (type A uses the lift `x_1 + ⋯ + x_j`).
pub fn fundamental_weights_ambient(rs: &RootSystem) -> Vec<Vec<Rational>> {
    let n = rs.rank;
    let dim = rs.ambient_dim;
    if rs.kind == CartanType::A {
        return (0..n).map(|j| (0..dim).map(|i| if i <= j { Rational::ONE } else { Rational::ZERO }).collect()).collect();
    }
    // Solve ⟨ω_j, α_i∨⟩ = δ_ij: rows are the simple coroots 2α_i/|α_i|².
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let a = rs.root(rs.simple_index(i));
            a.ambient.iter().map(|&x| Rational::new(2 * x, a.norm2)).collect()
        })
        .collect();
    (0..n)
        .map(|j| {
            let rhs: Vec<Rational> = (0..n).map(|i| if i == j { Rational::ONE } else { Rational::ZERO }).collect();
            linalg::solve(&rows, &rhs, dim).expect("simple coroots are independent")
        })
        .collect()
}

/// Rewrites a polynomial in the requested basis. Ambient → ω restricts to `𝔥*`
/// (in type A the sum of all `x_i` maps to zero).
pub fn to_basis(rs: &RootSystem, f: &CPoly, basis: Basis) -> CPoly {
    if f.basis == basis {
        return f.clone();
    }
    let images: Vec<CPoly> = match basis {
        Basis::Omega => (0..rs.ambient_dim)
            .map(|i| {
                let coeffs: Vec<Rational> = (0..rs.rank)
                    .map(|j| {
                        let a = rs.root(rs.simple_index(j));
                        Rational::new(2 * a.ambient[i], a.norm2)
                    })
                    .collect();
                CPoly::linear(Basis::Omega, &coeffs)
            })
            .collect(),
        Basis::Ambient => fundamental_weights_ambient(rs).iter().map(|v| CPoly::linear(Basis::Ambient, v)).collect(),
    };
    if f.is_zero() {
        return CPoly::zero(basis, nvars(rs, basis));
    }
    f.substitute(&images)
}

/// `X_{w₀} = |W|⁻¹ ∏_{α∈Δ₊} α`.
pub fn bgg_top(rs: &RootSystem, basis: Basis, order: usize) -> CPoly {
    let n = nvars(rs, basis);
    let mut p = CPoly::one(basis, n);
    for idx in 0..rs.num_positive() {
        p = p.mul(&root_poly(rs, idx, basis));
    }
    p.scale(&RingElem::constant(Rational::new(1, order as i64)))
}

/// `X_w = ∂_{w⁻¹w₀} X_{w₀}` in the given basis.
pub fn bgg_class(rs: &RootSystem, w: &WeylElem, basis: Basis, order: usize) -> Result<CPoly> {
    let u = w.inverse().compose(&rs.longest_element());
    demazure_w(rs, &u, &bgg_top(rs, basis, order))
}

/// `X_w` for every `w` in `weyl`, walking down from `w₀` with `X_{ws_i} = ∂_i X_w`.
pub fn bgg_classes(rs: &RootSystem, weyl: &[WeylElem], basis: Basis) -> Result<BTreeMap<WeylElem, CPoly>> {
    let top = rs.longest_element();
    let mut classes = BTreeMap::new();
    classes.insert(top.clone(), bgg_top(rs, basis, weyl.len()));
    let mut by_len: Vec<&WeylElem> = weyl.iter().collect();
    by_len.sort_by_key(|w| core::cmp::Reverse(w.length()));
    for w in by_len {
        if classes.contains_key(w) {
            continue;
        }
        let (i, up) = (0..rs.rank)
            .map(|i| (i, w.compose(rs.simple_reflection(i))))
            .find(|(_, u)| u.length() > w.length())
            .expect("only w0 has no ascent");
        let x = demazure(rs, i, &classes[&up])?;
        classes.insert(w.clone(), x);
    }
    Ok(classes)
}

/// Type-A Schubert polynomial `𝔖_w = ∂_{w⁻¹w₀}(x_1^n x_2^{n−1} ⋯ x_n)` (ambient).
pub fn schubert_poly_a(rs: &RootSystem, w: &WeylElem) -> Result<CPoly> {
    if rs.kind != CartanType::A {
        return Err(Error::UnsupportedType(String::from("Schubert polynomials are defined for type A")));
    }
    let n = rs.rank;
    let exps: Vec<u16> = (0..=n).map(|i| (n - i) as u16).collect();
    let stair = CPoly::monomial(Basis::Ambient, exps, RingElem::one());
    let u = w.inverse().compose(&rs.longest_element());
    demazure_w(rs, &u, &stair)
}

/// Constants `c_α`, constant on W-orbits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constants {
    c: Vec<Rational>,
}

impl Constants {
    pub fn uniform(rs: &RootSystem) -> Self {
        Constants { c: vec![Rational::ONE; rs.num_positive()] }
    }

    /// `c_α = c_long` on long roots and `c_short` on short ones.
    pub fn by_length(rs: &RootSystem, c_long: Rational, c_short: Rational) -> Result<Self> {
        if c_long.is_zero() || c_short.is_zero() {
            return Err(Error::InvalidConstants(String::from("constants must be nonzero")));
        }
        Ok(Constants {
            c: rs.positive_roots().iter().map(|r| if r.long { c_long.clone() } else { c_short.clone() }).collect(),
        })
    }

    /// Explicit per-root values; rejected unless `c_α = c_{wα}`.
    pub fn from_values(rs: &RootSystem, c: Vec<Rational>) -> Result<Self> {
        if c.len() != rs.num_positive() {
            return Err(Error::InvalidConstants(alloc::format!("expected {} values", rs.num_positive())));
        }
        if c.iter().any(|x| x.is_zero()) {
            return Err(Error::InvalidConstants(String::from("constants must be nonzero")));
        }
        for i in 0..rs.rank {
            for a in 0..c.len() {
                let b = rs.reflect(rs.simple_index(i), a).index;
                if c[a] != c[b] {
                    return Err(Error::InvalidConstants(alloc::format!(
                        "c[{}] != c[{}] although the roots are W-conjugate",
                        rs.root_label(a),
                        rs.root_label(b)
                    )));
                }
            }
        }
        Ok(Constants { c })
    }

    pub fn get(&self, alpha: usize) -> &Rational {
        &self.c[alpha]
    }

    pub fn values(&self) -> &[Rational] {
        &self.c
    }
}

/// Root coefficients of `μ(ω_j) = Σ_α c_α ⟨ω_j, α∨⟩ [α]`.
pub fn mu_weight_coeffs(rs: &RootSystem, c: &Constants, j: usize) -> Vec<Rational> {
    (0..rs.num_positive()).map(|a| c.get(a) * &Rational::from_int(rs.root(a).coroot[j])).collect()
}

/// `(Σ_α a_α [α]) · x`.
pub fn left_mul_linear(nb: &NicholsBasis, coeffs: &[Rational], x: &BElem) -> Result<BElem> {
    let mut out = BElem::zero();
    for (alpha, a) in coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        out.add_scaled(&RingElem::constant(a.clone()), &nb.left_mul_generator(alpha, x)?);
    }
    Ok(out)
}

/// `μ(f)` in `B(V)`, extended multiplicatively from `μ(ω_j)`.
pub fn mu(nb: &NicholsBasis, c: &Constants, f: &CPoly) -> Result<BElem> {
    MuImages::new(nb, c).apply(f)
}

/// Memoized `μ(ω^e)`, shared across polynomials.
pub struct MuImages<'a> {
    nb: &'a NicholsBasis,
    gens: Vec<Vec<Rational>>,
    memo: BTreeMap<Vec<u16>, BElem>,
}

impl<'a> MuImages<'a> {
    pub fn new(nb: &'a NicholsBasis, c: &Constants) -> Self {
        let rs = nb.root_system();
        let gens = (0..rs.rank).map(|j| mu_weight_coeffs(rs, c, j)).collect();
        let mut memo = BTreeMap::new();
        memo.insert(vec![0; rs.rank], BElem::one());
        MuImages { nb, gens, memo }
    }

    /// `μ(ω^e) = μ(ω_j) · μ(ω^{e − ε_j})` with `j` the first nonzero exponent.
    pub fn image(&mut self, e: &[u16]) -> Result<&BElem> {
        if !self.memo.contains_key(e) {
            let j = e.iter().position(|&k| k > 0).expect("nonconstant monomial");
            let mut rest = e.to_vec();
            rest[j] -= 1;
            let nb = self.nb;
            let parent = self.image(&rest)?.clone();
            let v = if parent.is_zero() { parent } else { left_mul_linear(nb, &self.gens[j], &parent)? };
            self.memo.insert(e.to_vec(), v);
        }
        Ok(&self.memo[e])
    }

    pub fn apply(&mut self, f: &CPoly) -> Result<BElem> {
        let f = to_basis(self.nb.root_system(), f, Basis::Omega);
        let mut out = BElem::zero();
        for (e, coef) in f.terms() {
            out.add_scaled(coef, self.image(e)?);
        }
        Ok(out)
    }
}

/// Basic W-invariants in ambient coordinates, one per fundamental degree (in
/// the order of [`RootSystem::fundamental_degrees`]): `e_d` in type A, even
/// power sums in types B/C, and `p_2, …, p_{2n−2}` plus `ε_1⋯ε_n` in type D.
pub fn classical_invariants(rs: &RootSystem) -> Vec<CPoly> {
    let dim = rs.ambient_dim;
    match rs.kind {
        CartanType::A => (2..=dim).map(|d| elementary_symmetric(dim, d)).collect(),
        CartanType::B | CartanType::C => (1..=rs.rank).map(|k| power_sum(dim, 2 * k)).collect(),
        CartanType::D => {
            let mut v: Vec<(usize, CPoly)> = (1..rs.rank).map(|k| (2 * k, power_sum(dim, 2 * k))).collect();
            v.push((rs.rank, elementary_symmetric(dim, dim)));
            v.sort_by_key(|(d, _)| *d);
            v.into_iter().map(|(_, p)| p).collect()
        }
    }
}

fn elementary_symmetric(n: usize, d: usize) -> CPoly {
    let mut p = CPoly::zero(Basis::Ambient, n);
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == d {
            let e: Vec<u16> = (0..n).map(|i| ((mask >> i) & 1) as u16).collect();
            p.add_term(e, RingElem::one());
        }
    }
    p
}

fn power_sum(n: usize, d: usize) -> CPoly {
    let mut p = CPoly::zero(Basis::Ambient, n);
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = d as u16;
        p.add_term(e, RingElem::one());
    }
    p
}
