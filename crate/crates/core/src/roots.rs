//! Classical root systems, Weyl group elements and the quantum root subset.
//!
//! Roots are integer vectors over the simple roots; every system also carries
//! an ambient (ε / x) realization with the standard dot product as invariant
//! form. Weyl group elements are stored as their signed action on `Δ₊`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::scalars::{q_of_coroot, QMonomial, Rational};

pub const DEFAULT_MAX_RANK: usize = 4;
pub const DEFAULT_WEYL_BOUND: usize = 1152;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CartanType {
    A,
    B,
    C,
    D,
}

impl CartanType {
    pub fn letter(self) -> char {
        match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(CartanType::A),
            "B" | "b" => Ok(CartanType::B),
            "C" | "c" => Ok(CartanType::C),
            "D" | "d" => Ok(CartanType::D),
            other => Err(Error::UnsupportedType(other.into())),
        }
    }

    fn min_rank(self) -> usize {
        match self {
            CartanType::A => 1,
            CartanType::B | CartanType::C => 2,
            CartanType::D => 3,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A positive root together with its derived data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// Coordinates over the simple roots.
    pub simple: Vec<i64>,
    /// Coordinates in the ambient (ε or x) space.
    pub ambient: Vec<i64>,
    /// Coordinates of the coroot over the simple coroots.
    pub coroot: Vec<i64>,
    /// `(α, α)` under the ambient dot product.
    pub norm2: i64,
    pub long: bool,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.simple.iter().sum()
    }

    /// `ht(α∨)`: sum of the simple-coroot coordinates of the coroot.
    pub fn coroot_height(&self) -> i64 {
        self.coroot.iter().sum()
    }
}

/// `±β` for a positive root `β` given by index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedRoot {
    pub index: usize,
    pub negative: bool,
}

impl SignedRoot {
    pub fn positive(index: usize) -> Self {
        SignedRoot { index, negative: false }
    }

    pub fn sign(&self) -> i64 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn negate(self) -> Self {
        SignedRoot { index: self.index, negative: !self.negative }
    }
}

/// Weyl group element, canonicalized as its signed permutation of `Δ₊`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylElem {
    /// Entry `i` encodes `w(β_i) = ±β_j` as `±(j + 1)`.
    table: Vec<i16>,
}

impl WeylElem {
    fn encode(s: SignedRoot) -> i16 {
        let v = s.index as i16 + 1;
        if s.negative {
            -v
        } else {
            v
        }
    }

    fn decode(v: i16) -> SignedRoot {
        SignedRoot { index: (v.unsigned_abs() - 1) as usize, negative: v < 0 }
    }

    pub fn identity(n_pos: usize) -> Self {
        WeylElem { table: (1..=n_pos as i16).collect() }
    }

    pub fn apply(&self, beta: SignedRoot) -> SignedRoot {
        let img = Self::decode(self.table[beta.index]);
        if beta.negative {
            img.negate()
        } else {
            img
        }
    }

    pub fn apply_index(&self, i: usize) -> SignedRoot {
        Self::decode(self.table[i])
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElem) -> WeylElem {
        WeylElem {
            table: other.table.iter().map(|&v| Self::encode(self.apply(Self::decode(v)))).collect(),
        }
    }

    pub fn inverse(&self) -> WeylElem {
        let mut table = vec![0i16; self.table.len()];
        for (i, &v) in self.table.iter().enumerate() {
            let img = Self::decode(v);
            table[img.index] = Self::encode(SignedRoot { index: i, negative: img.negative });
        }
        WeylElem { table }
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(i, &v)| v == i as i16 + 1)
    }

    /// Inversion count `#{β ∈ Δ₊ : w(β) ∈ −Δ₊}`.
    pub fn length(&self) -> usize {
        self.table.iter().filter(|&&v| v < 0).count()
    }

    /// Reduced word by stripping right descents; `prefer_last` picks the largest descent.
    pub fn reduced_word_with(&self, rs: &RootSystem, prefer_last: bool) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(w.length());
        while !w.is_identity() {
            let mut descents = (0..rs.rank).filter(|&i| w.apply_index(rs.simple_index(i)).negative);
            let i = if prefer_last { descents.next_back() } else { descents.next() }
                .expect("non-identity element has a descent");
            w = w.compose(&rs.simple_reflections[i]);
            rev.push(i);
        }
        rev.reverse();
        rev
    }

    /// Reduced word (zero-based simple indices), smallest-descent-first stripping.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        self.reduced_word_with(rs, false)
    }
}

impl fmt::Debug for WeylElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElem{:?}", self.table)
    }
}

/// A classical root system with positive roots, coroots and Weyl group data.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub kind: CartanType,
    pub rank: usize,
    pub ambient_dim: usize,
    /// `cartan[i][j] = ⟨α_i, α_j∨⟩`.
    pub cartan: Vec<Vec<i64>>,
    positive: Vec<Root>,
    by_simple: BTreeMap<Vec<i64>, usize>,
    simple_reflections: Vec<WeylElem>,
    reflections: Vec<WeylElem>,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn simple_roots_ambient(kind: CartanType, n: usize) -> (usize, Vec<Vec<i64>>) {
    let dim = if kind == CartanType::A { n + 1 } else { n };
    let e = |i: usize| {
        let mut v = vec![0i64; dim];
        v[i] = 1;
        v
    };
    let diff = |i: usize, j: usize| {
        let mut v = e(i);
        v[j] -= 1;
        v
    };
    let mut out: Vec<Vec<i64>> = (0..n.min(dim - 1)).map(|i| diff(i, i + 1)).collect();
    match kind {
        CartanType::A => {}
        CartanType::B => {
            out.truncate(n - 1);
            out.push(e(n - 1));
        }
        CartanType::C => {
            out.truncate(n - 1);
            let mut v = e(n - 1);
            v[n - 1] = 2;
            out.push(v);
        }
        CartanType::D => {
            out.truncate(n - 1);
            let mut v = e(n - 2);
            v[n - 1] = 1;
            out.push(v);
        }
    }
    (dim, out)
}

impl RootSystem {
    /// Builds the positive system of the given type and rank (rank ≤ [`DEFAULT_MAX_RANK`]).
    pub fn new(kind: CartanType, rank: usize) -> Result<Self> {
        Self::with_max_rank(kind, rank, DEFAULT_MAX_RANK)
    }

    pub fn with_max_rank(kind: CartanType, rank: usize, max_rank: usize) -> Result<Self> {
        let max = max_rank.min(crate::scalars::MAX_RANK);
        if rank < kind.min_rank() || rank > max {
            return Err(Error::RankOutOfRange { kind: kind.letter(), rank, max });
        }
        let (ambient_dim, simple_amb) = simple_roots_ambient(kind, rank);
        let n = rank;
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| 2 * dot(&simple_amb[i], &simple_amb[j]) / dot(&simple_amb[j], &simple_amb[j]))
                    .collect()
            })
            .collect();

        // Closure of the simple roots under simple reflections, keeping positive roots.
        let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut v = vec![0i64; n];
            v[i] = 1;
            found.insert(v.clone());
            queue.push_back(v);
        }
        while let Some(r) = queue.pop_front() {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| r[j] * cartan[j][i]).sum();
                let mut s = r.clone();
                s[i] -= pairing;
                if s.iter().all(|&c| c >= 0) && s.iter().any(|&c| c > 0) && found.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }

        let simple_norms: Vec<i64> = simple_amb.iter().map(|a| dot(a, a)).collect();
        let mut positive: Vec<Root> = found
            .into_iter()
            .map(|simple| {
                let mut ambient = vec![0i64; ambient_dim];
                for (c, a) in simple.iter().zip(&simple_amb) {
                    for (x, y) in ambient.iter_mut().zip(a) {
                        *x += c * y;
                    }
                }
                let norm2 = dot(&ambient, &ambient);
                let coroot = simple
                    .iter()
                    .zip(&simple_norms)
                    .map(|(c, nn)| {
                        debug_assert_eq!((c * nn) % norm2, 0);
                        c * nn / norm2
                    })
                    .collect();
                Root { simple, ambient, coroot, norm2, long: false }
            })
            .collect();
        let max_norm = positive.iter().map(|r| r.norm2).max().unwrap_or(0);
        for r in &mut positive {
            r.long = r.norm2 == max_norm;
        }
        // Height first, then reverse-lex on simple coordinates (so α_1 precedes α_2).
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.simple.cmp(&a.simple)));
        let by_simple = positive.iter().enumerate().map(|(i, r)| (r.simple.clone(), i)).collect();

        let mut rs = RootSystem {
            kind,
            rank,
            ambient_dim,
            cartan,
            positive,
            by_simple,
            simple_reflections: Vec::new(),
            reflections: Vec::new(),
        };
        let np = rs.positive.len();
        rs.reflections = (0..np)
            .map(|a| WeylElem {
                table: (0..np).map(|b| WeylElem::encode(rs.reflect(a, b))).collect(),
            })
            .collect();
        rs.simple_reflections = (0..n).map(|i| rs.reflections[rs.simple_index(i)].clone()).collect();
        Ok(rs)
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.positive[i]
    }

    /// Index of the `i`-th simple root in the positive-root list.
    pub fn simple_index(&self, i: usize) -> usize {
        let mut v = vec![0i64; self.rank];
        v[i] = 1;
        self.by_simple[&v]
    }

    pub fn is_simple(&self, idx: usize) -> bool {
        self.positive[idx].height() == 1
    }

    /// Position of a root among the simple roots, if it is simple.
    pub fn simple_position(&self, idx: usize) -> Option<usize> {
        let r = &self.positive[idx];
        if r.height() == 1 {
            r.simple.iter().position(|&c| c == 1)
        } else {
            None
        }
    }

    /// Looks up `±β` from simple-root coordinates.
    pub fn find_root(&self, simple: &[i64]) -> Option<SignedRoot> {
        if let Some(&i) = self.by_simple.get(simple) {
            return Some(SignedRoot::positive(i));
        }
        let neg: Vec<i64> = simple.iter().map(|c| -c).collect();
        self.by_simple.get(&neg).map(|&i| SignedRoot { index: i, negative: true })
    }

    /// `⟨β, α∨⟩` for positive roots given by index.
    pub fn pairing_coroot(&self, beta: usize, alpha: usize) -> i64 {
        let (a, b) = (&self.positive[alpha], &self.positive[beta]);
        2 * dot(&a.ambient, &b.ambient) / a.norm2
    }

    /// `s_α(β) = β − ⟨β, α∨⟩α`, as a signed positive root.
    pub fn reflect(&self, alpha: usize, beta: usize) -> SignedRoot {
        let k = self.pairing_coroot(beta, alpha);
        let (a, b) = (&self.positive[alpha], &self.positive[beta]);
        let v: Vec<i64> = b.simple.iter().zip(&a.simple).map(|(x, y)| x - k * y).collect();
        self.find_root(&v).expect("root system closed under reflections")
    }

    /// The reflection `s_α` as a group element.
    pub fn reflection(&self, alpha: usize) -> &WeylElem {
        &self.reflections[alpha]
    }

    pub fn simple_reflection(&self, i: usize) -> &WeylElem {
        &self.simple_reflections[i]
    }

    pub fn identity(&self) -> WeylElem {
        WeylElem::identity(self.positive.len())
    }

    /// Product `s_{i_1} ⋯ s_{i_l}` of simple reflections (zero-based indices).
    pub fn from_word(&self, word: &[usize]) -> WeylElem {
        word.iter().fold(self.identity(), |w, &i| w.compose(&self.simple_reflections[i]))
    }

    pub fn longest_element(&self) -> WeylElem {
        let mut w = self.identity();
        loop {
            let next = (0..self.rank)
                .map(|i| w.compose(&self.simple_reflections[i]))
                .find(|u| u.length() > w.length());
            match next {
                Some(u) => w = u,
                None => return w,
            }
        }
    }

    /// `Δ̃₊`: roots with `l(s_α) = 2 ht(α∨) − 1`.
    pub fn quantum_roots(&self) -> Vec<usize> {
        (0..self.positive.len()).filter(|&i| self.is_quantum_root(i)).collect()
    }

    pub fn is_quantum_root(&self, i: usize) -> bool {
        self.reflections[i].length() as i64 == 2 * self.positive[i].coroot_height() - 1
    }

    /// The monomial `q^{α∨}`.
    pub fn q_of_root(&self, i: usize) -> QMonomial {
        let coords: Vec<Rational> = self.positive[i].coroot.iter().map(|&c| Rational::from_int(c)).collect();
        q_of_coroot(&coords).expect("coroots are integral")
    }

    /// Every Weyl group element, sorted by length and then reduced word.
    pub fn enumerate_weyl(&self, bound: usize) -> Result<Vec<WeylElem>> {
        let mut seen: BTreeSet<WeylElem> = BTreeSet::new();
        let mut queue = VecDeque::new();
        let e = self.identity();
        seen.insert(e.clone());
        queue.push_back(e);
        while let Some(w) = queue.pop_front() {
            for s in &self.simple_reflections {
                let u = w.compose(s);
                if !seen.contains(&u) {
                    if seen.len() >= bound {
                        return Err(Error::WeylBoundExceeded { bound });
                    }
                    seen.insert(u.clone());
                    queue.push_back(u);
                }
            }
        }
        let mut all: Vec<(usize, Vec<usize>, WeylElem)> =
            seen.into_iter().map(|w| (w.length(), w.reduced_word(self), w)).collect();
        all.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        Ok(all.into_iter().map(|t| t.2).collect())
    }

    /// Number of elements of each length.
    pub fn length_histogram(&self, bound: usize) -> Result<Vec<usize>> {
        let all = self.enumerate_weyl(bound)?;
        let mut hist = vec![0usize; self.positive.len() + 1];
        for w in &all {
            hist[w.length()] += 1;
        }
        while hist.len() > 1 && *hist.last().unwrap() == 0 {
            hist.pop();
        }
        Ok(hist)
    }

    /// Action of `w` on a weight written in fundamental-weight coordinates.
    pub fn act_on_weight(&self, w: &WeylElem, lambda: &[Rational]) -> Vec<Rational> {
        let word = w.reduced_word(self);
        let mut v = lambda.to_vec();
        for &i in word.iter().rev() {
            let c = v[i].clone();
            for (j, x) in v.iter_mut().enumerate() {
                *x -= &(&c * &Rational::from_int(self.cartan[i][j]));
            }
        }
        v
    }

    /// Action of `w` on an ambient-space vector.
    pub fn act_on_ambient(&self, w: &WeylElem, v: &[Rational]) -> Vec<Rational> {
        let word = w.reduced_word(self);
        let mut v = v.to_vec();
        for &i in word.iter().rev() {
            let a = &self.positive[self.simple_index(i)];
            let ip: Rational = v
                .iter()
                .zip(&a.ambient)
                .fold(Rational::ZERO, |acc, (x, &y)| &acc + &(x * &Rational::from_int(y)));
            let k = &(&ip * &Rational::from_int(2)) / &Rational::from_int(a.norm2);
            for (x, &y) in v.iter_mut().zip(&a.ambient) {
                *x -= &(&k * &Rational::from_int(y));
            }
        }
        v
    }

    /// Root label in simple-root coordinates, e.g. `a1+a2`.
    pub fn root_label(&self, i: usize) -> String {
        let mut s = String::new();
        for (j, &c) in self.positive[i].simple.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('+');
            }
            if c != 1 {
                s.push_str(&alloc::format!("{c}"));
            }
            s.push_str(&alloc::format!("a{}", j + 1));
        }
        s
    }

    /// Root label in ambient coordinates, e.g. `e1-e2`.
    pub fn root_label_ambient(&self, i: usize) -> String {
        let var = if self.kind == CartanType::A { 'x' } else { 'e' };
        let mut s = String::new();
        for (j, &c) in self.positive[i].ambient.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            if c.abs() != 1 {
                s.push_str(&alloc::format!("{}", c.abs()));
            }
            s.push_str(&alloc::format!("{var}{}", j + 1));
        }
        s
    }

    /// Reduced word rendered 1-based, e.g. `1,2,1`.
    pub fn word_label(word: &[usize]) -> String {
        let parts: Vec<String> = word.iter().map(|i| alloc::format!("{}", i + 1)).collect();
        parts.join(",")
    }

    /// Degrees of the basic W-invariants.
    pub fn fundamental_degrees(&self) -> Vec<usize> {
        let n = self.rank;
        match self.kind {
            CartanType::A => (2..=n + 1).collect(),
            CartanType::B | CartanType::C => (1..=n).map(|k| 2 * k).collect(),
            CartanType::D => {
                let mut d: Vec<usize> = (1..n).map(|k| 2 * k).collect();
                d.push(n);
                d.sort_unstable();
                d
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: positive roots by closure of *all* roots under
    /// reflections in every root, starting from the ambient simple roots.
    fn ambient_closure(kind: CartanType, n: usize) -> BTreeSet<Vec<i64>> {
        let (_, simple) = simple_roots_ambient(kind, n);
        let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = simple.iter().cloned().collect();
        for s in &simple {
            all.insert(s.clone());
        }
        while let Some(r) = queue.pop_front() {
            let snapshot: Vec<Vec<i64>> = all.iter().cloned().collect();
            for a in snapshot {
                let k = 2 * dot(&r, &a) / dot(&a, &a);
                let s: Vec<i64> = r.iter().zip(&a).map(|(x, y)| x - k * y).collect();
                if all.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        // Positive = nonnegative combination of simple roots; decide via the
        // first nonzero coordinate in the ε basis, which is valid for A-D.
        all.into_iter()
            .filter(|v| v.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0))
            .collect()
    }

    #[test]
    fn root_counts_match_closure_oracle() {
        for (kind, n, count) in [
            (CartanType::A, 1, 1),
            (CartanType::A, 2, 3),
            (CartanType::A, 3, 6),
            (CartanType::B, 2, 4),
            (CartanType::B, 3, 9),
            (CartanType::C, 3, 9),
            (CartanType::D, 4, 12),
        ] {
            let rs = RootSystem::new(kind, n).unwrap();
            assert_eq!(rs.num_positive(), count, "{kind}{n}");
            let oracle = ambient_closure(kind, n);
            let ours: BTreeSet<Vec<i64>> = rs.positive_roots().iter().map(|r| r.ambient.clone()).collect();
            assert_eq!(ours, oracle, "{kind}{n}");
        }
    }

    #[test]
    fn a2_and_b2_positive_roots() {
        let a2 = RootSystem::new(CartanType::A, 2).unwrap();
        let simple: Vec<Vec<i64>> = a2.positive_roots().iter().map(|r| r.simple.clone()).collect();
        assert_eq!(simple, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
        let b2 = RootSystem::new(CartanType::B, 2).unwrap();
        let amb: BTreeSet<Vec<i64>> = b2.positive_roots().iter().map(|r| r.ambient.clone()).collect();
        let expected: BTreeSet<Vec<i64>> =
            [vec![1, -1], vec![0, 1], vec![1, 1], vec![1, 0]].into_iter().collect();
        assert_eq!(amb, expected);
    }

    #[test]
    fn b2_long_coroot_coordinates() {
        let b2 = RootSystem::new(CartanType::B, 2).unwrap();
        let i = b2.positive_roots().iter().position(|r| r.ambient == vec![1, 1]).unwrap();
        assert_eq!(b2.root(i).coroot, vec![1, 1]);
        assert_eq!(b2.q_of_root(i), QMonomial::new(&[1, 1]));
        let a2 = RootSystem::new(CartanType::A, 2).unwrap();
        assert_eq!(a2.root(2).coroot, vec![1, 1]);
    }

    #[test]
    fn reflections_in_a2() {
        let rs = RootSystem::new(CartanType::A, 2).unwrap();
        assert_eq!(rs.reflect(0, 1), SignedRoot::positive(2));
        assert_eq!(rs.reflect(0, 2), SignedRoot::positive(1));
        for a in 0..3 {
            assert_eq!(rs.reflect(a, a), SignedRoot { index: a, negative: true });
        }
    }

    #[test]
    fn lengths_and_words() {
        let rs = RootSystem::new(CartanType::A, 2).unwrap();
        let e = rs.identity();
        assert_eq!(e.length(), 0);
        assert!(e.reduced_word(&rs).is_empty());
        let s_theta = rs.reflection(2);
        assert_eq!(s_theta.length(), 3);
        assert_eq!(s_theta.reduced_word(&rs), vec![0, 1, 0]);
        assert_eq!(rs.longest_element().length(), 3);
    }

    #[test]
    fn quantum_root_sets() {
        let a2 = RootSystem::new(CartanType::A, 2).unwrap();
        assert_eq!(a2.quantum_roots(), vec![0, 1, 2]);
        let b2 = RootSystem::new(CartanType::B, 2).unwrap();
        let q: BTreeSet<Vec<i64>> =
            b2.quantum_roots().iter().map(|&i| b2.root(i).ambient.clone()).collect();
        let expected: BTreeSet<Vec<i64>> = [vec![1, -1], vec![0, 1], vec![1, 1]].into_iter().collect();
        assert_eq!(q, expected);
        for kind in [CartanType::A, CartanType::B, CartanType::C, CartanType::D] {
            let rs = RootSystem::new(kind, 3).unwrap();
            for i in 0..rs.rank {
                assert!(rs.is_quantum_root(rs.simple_index(i)));
            }
        }
    }

    #[test]
    fn weyl_enumeration_sizes() {
        let a2 = RootSystem::new(CartanType::A, 2).unwrap();
        assert_eq!(a2.length_histogram(DEFAULT_WEYL_BOUND).unwrap(), vec![1, 2, 2, 1]);
        let a1 = RootSystem::new(CartanType::A, 1).unwrap();
        assert_eq!(a1.enumerate_weyl(DEFAULT_WEYL_BOUND).unwrap().len(), 2);
        let b2 = RootSystem::new(CartanType::B, 2).unwrap();
        assert_eq!(b2.enumerate_weyl(DEFAULT_WEYL_BOUND).unwrap().len(), 8);
        let b3 = RootSystem::new(CartanType::B, 3).unwrap();
        assert_eq!(b3.enumerate_weyl(DEFAULT_WEYL_BOUND).unwrap().len(), 48);
        assert!(matches!(b3.enumerate_weyl(10), Err(Error::WeylBoundExceeded { bound: 10 })));
    }

    #[test]
    fn unsupported_ranks_are_rejected() {
        assert!(RootSystem::new(CartanType::A, 0).is_err());
        assert!(RootSystem::new(CartanType::D, 2).is_err());
        assert!(RootSystem::new(CartanType::A, 5).is_err());
        assert!(RootSystem::with_max_rank(CartanType::A, 5, 6).is_ok());
        assert!(CartanType::parse("E").is_err());
    }
}
