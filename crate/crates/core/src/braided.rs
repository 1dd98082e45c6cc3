//! The braided tensor algebra `T(V)` on generators `[α]`, `α ∈ Δ₊`.
//!
//! `V` is a Yetter–Drinfeld module over `W`: `w.[α] = [w(α)]` with
//! `[−α] = −[α]`, and `[α]` sits in W-degree `s_α`. The braiding is
//! `Ψ([α] ⊗ y) = s_α(y) ⊗ [α]`. `V` and `V*` are identified through
//! `⟨[α], [β]⟩ = δ_{α,β}`, so one word type serves both sides of the pairing.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use crate::error::{Error, Result};
use crate::roots::{RootSystem, SignedRoot, WeylElem};
use crate::scalars::{Rational, RingElem};

/// A word `[β_1]⋯[β_k]` in positive-root indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct NcWord(pub Vec<u16>);

impl NcWord {
    pub fn empty() -> Self {
        NcWord(Vec::new())
    }

    pub fn letter(i: usize) -> Self {
        NcWord(alloc::vec![i as u16])
    }

    pub fn from_indices(ix: &[usize]) -> Self {
        NcWord(ix.iter().map(|&i| i as u16).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&i| i as usize)
    }

    pub fn concat(&self, other: &NcWord) -> NcWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        NcWord(v)
    }

    /// W-degree `s_{β_1} ⋯ s_{β_k}`.
    pub fn w_degree(&self, rs: &RootSystem) -> WeylElem {
        self.letters().fold(rs.identity(), |w, i| w.compose(rs.reflection(i)))
    }

    /// `w.[β_1]⋯[β_k]` as `(sign, word)`.
    pub fn act(&self, w: &WeylElem) -> (i64, NcWord) {
        let mut sign = 1;
        let mut out = Vec::with_capacity(self.0.len());
        for i in self.letters() {
            let img = w.apply(SignedRoot::positive(i));
            sign *= img.sign();
            out.push(img.index as u16);
        }
        (sign, NcWord(out))
    }
}

impl fmt::Debug for NcWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("]")
    }
}

/// Element of `T(V)` with coefficients in `R`.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct NcPoly {
    terms: BTreeMap<NcWord, RingElem>,
}

impl NcPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(NcWord::empty())
    }

    pub fn word(w: NcWord) -> Self {
        Self::term(w, RingElem::one())
    }

    pub fn letter(i: usize) -> Self {
        Self::word(NcWord::letter(i))
    }

    pub fn term(w: NcWord, c: RingElem) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn add_term(&mut self, w: NcWord, c: RingElem) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NcWord, &RingElem)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &NcWord) -> RingElem {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// The common word length, if the polynomial is homogeneous and nonzero.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|w| w.len());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn add(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &RingElem) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, x) in self.terms() {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                out.add_term(a.concat(b), x * y);
            }
        }
        out
    }
}

/// `w.p`, letterwise with sign tracking.
pub fn w_act(w: &WeylElem, p: &NcPoly) -> NcPoly {
    let mut out = NcPoly::zero();
    for (word, c) in p.terms() {
        let (sign, img) = word.act(w);
        out.add_term(img, c.scale(&Rational::from_int(sign)));
    }
    out
}

/// `Ψ([α] ⊗ [β]) = s_α([β]) ⊗ [α]`, returned as `(sign, s_α(β) index, α)`.
pub fn braid(rs: &RootSystem, alpha: usize, beta: usize) -> (i64, usize, usize) {
    let img = rs.reflect(alpha, beta);
    (img.sign(), img.index, alpha)
}

/// Elements of `T(V) ⊗ T(V)`.
pub type Tensor2 = BTreeMap<(NcWord, NcWord), RingElem>;

fn tensor_add(t: &mut Tensor2, key: (NcWord, NcWord), c: RingElem) {
    if c.is_zero() {
        return;
    }
    let slot = t.entry(key.clone()).or_default();
    *slot += &c;
    if slot.is_zero() {
        t.remove(&key);
    }
}

/// Terms of the braided coproduct of a single word in bidegree `(k − j, j)`:
/// each subset of `j` positions goes to the right factor, and every letter
/// left behind is acted on by the reflections of the right letters preceding it.
fn coproduct_word(rs: &RootSystem, word: &NcWord, right: usize) -> Vec<(i64, NcWord, NcWord)> {
    let k = word.len();
    let letters: Vec<usize> = word.letters().collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(right);
    fn rec(
        rs: &RootSystem,
        letters: &[usize],
        pos: usize,
        need: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<(i64, NcWord, NcWord)>,
    ) {
        if need == 0 {
            let mut sign = 1;
            let mut left = Vec::with_capacity(letters.len() - chosen.len());
            let mut right = Vec::with_capacity(chosen.len());
            let mut acting = None::<WeylElem>;
            let mut next = 0;
            for (p, &l) in letters.iter().enumerate() {
                if next < chosen.len() && chosen[next] == p {
                    next += 1;
                    right.push(l as u16);
                    let s = rs.reflection(l);
                    acting = Some(match acting {
                        None => s.clone(),
                        Some(g) => g.compose(s),
                    });
                } else {
                    let img = match &acting {
                        None => SignedRoot::positive(l),
                        Some(g) => g.apply(SignedRoot::positive(l)),
                    };
                    sign *= img.sign();
                    left.push(img.index as u16);
                }
            }
            out.push((sign, NcWord(left), NcWord(right)));
            return;
        }
        if letters.len() - pos < need {
            return;
        }
        chosen.push(pos);
        rec(rs, letters, pos + 1, need - 1, chosen, out);
        chosen.pop();
        rec(rs, letters, pos + 1, need, chosen, out);
    }
    if right <= k {
        rec(rs, &letters, 0, right, &mut chosen, &mut out);
    }
    out
}

/// The `(i, j)`-graded component of `△(x)` for `x` homogeneous of degree `i + j`.
pub fn coproduct_component(rs: &RootSystem, x: &NcPoly, split: (usize, usize)) -> Result<Tensor2> {
    let (i, j) = split;
    let mut out = Tensor2::new();
    for (word, c) in x.terms() {
        if word.len() != i + j {
            return Err(Error::InhomogeneousInput);
        }
        for (sign, l, r) in coproduct_word(rs, word, j) {
            tensor_add(&mut out, (l, r), c.scale(&Rational::from_int(sign)));
        }
    }
    Ok(out)
}

/// The duality pairing `⟨ , ⟩ : T(V*) × T(V) → Q`, with memoization.
///
/// The primary recursion peels the first letter of `ξ`:
/// `⟨[α]η, x⟩ = ⟨[α], x₍₂₎⟩⟨η, x₍₁₎⟩` using the `(k−1, 1)` component of `△(x)`.
/// [`Pairing::pair_by_x`] peels `x` instead through
/// `⟨ξ, [β]y⟩ = ⟨ξ₍₂₎, [β]⟩⟨ξ₍₁₎, y⟩`; the two must agree.
pub struct Pairing<'a> {
    rs: &'a RootSystem,
    by_xi: RefCell<BTreeMap<(NcWord, NcWord), Rational>>,
    by_x: RefCell<BTreeMap<(NcWord, NcWord), Rational>>,
}

impl<'a> Pairing<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        Pairing { rs, by_xi: RefCell::new(BTreeMap::new()), by_x: RefCell::new(BTreeMap::new()) }
    }

    pub fn root_system(&self) -> &RootSystem {
        self.rs
    }

    fn base_case(xi: &NcWord, x: &NcWord) -> Option<Rational> {
        if xi.len() != x.len() {
            return Some(Rational::ZERO);
        }
        match xi.len() {
            0 => Some(Rational::ONE),
            1 => Some(if xi.0[0] == x.0[0] { Rational::ONE } else { Rational::ZERO }),
            _ => None,
        }
    }

    /// `⟨ξ, x⟩` for words, peeling `ξ`.
    pub fn pair_words(&self, xi: &NcWord, x: &NcWord) -> Rational {
        if let Some(v) = Self::base_case(xi, x) {
            return v;
        }
        let key = (xi.clone(), x.clone());
        if let Some(v) = self.by_xi.borrow().get(&key) {
            return v.clone();
        }
        let alpha = xi.0[0];
        let rest = NcWord(xi.0[1..].to_vec());
        let mut acc = Rational::ZERO;
        for (sign, left, right) in coproduct_word(self.rs, x, 1) {
            if right.0[0] == alpha {
                let v = self.pair_words(&rest, &left);
                if sign > 0 {
                    acc += &v;
                } else {
                    acc -= &v;
                }
            }
        }
        self.by_xi.borrow_mut().insert(key, acc.clone());
        acc
    }

    /// `⟨ξ, x⟩` for words, peeling `x` through the dual axiom.
    pub fn pair_by_x(&self, xi: &NcWord, x: &NcWord) -> Rational {
        if let Some(v) = Self::base_case(xi, x) {
            return v;
        }
        let key = (xi.clone(), x.clone());
        if let Some(v) = self.by_x.borrow().get(&key) {
            return v.clone();
        }
        let beta = x.0[0];
        let rest = NcWord(x.0[1..].to_vec());
        let mut acc = Rational::ZERO;
        for (sign, left, right) in coproduct_word(self.rs, xi, 1) {
            if right.0[0] == beta {
                let v = self.pair_by_x(&left, &rest);
                if sign > 0 {
                    acc += &v;
                } else {
                    acc -= &v;
                }
            }
        }
        self.by_x.borrow_mut().insert(key, acc.clone());
        acc
    }

    /// Bilinear extension to polynomials. The pairing is `Q`-valued on words,
    /// so the result lies in `R` only through the coefficients.
    pub fn pair(&self, xi: &NcPoly, x: &NcPoly) -> RingElem {
        let mut acc = RingElem::zero();
        for (a, c) in xi.terms() {
            for (b, d) in x.terms() {
                let v = self.pair_words(a, b);
                if !v.is_zero() {
                    acc += &(c * d).scale(&v);
                }
            }
        }
        acc
    }

    /// Matrix of pairings `⟨row, col⟩`.
    pub fn gram_matrix(&self, rows: &[NcWord], cols: &[NcWord]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| cols.iter().map(|c| self.pair_words(r, c)).collect()).collect()
    }
}

/// All words of length `k` in lexicographic order.
pub fn all_words(num_letters: usize, k: usize) -> Vec<NcWord> {
    let mut out = alloc::vec![NcWord::empty()];
    for _ in 0..k {
        let mut next = Vec::with_capacity(out.len() * num_letters);
        for w in &out {
            for a in 0..num_letters {
                let mut v = w.0.clone();
                v.push(a as u16);
                next.push(NcWord(v));
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::CartanType;
    use alloc::vec;

    fn a2() -> RootSystem {
        RootSystem::new(CartanType::A, 2).unwrap()
    }

    #[test]
    fn weyl_action_on_words() {
        let rs = a2();
        let s1 = rs.simple_reflection(0);
        assert_eq!(w_act(s1, &NcPoly::letter(1)), NcPoly::letter(2));
        assert_eq!(
            w_act(s1, &NcPoly::letter(0)),
            NcPoly::term(NcWord::letter(0), RingElem::from(-1))
        );
        let p = NcPoly::word(NcWord::from_indices(&[0, 1]));
        assert_eq!(w_act(s1, &p), NcPoly::term(NcWord::from_indices(&[0, 2]), RingElem::from(-1)));
    }

    #[test]
    fn braiding_on_generators() {
        let rs = a2();
        assert_eq!(braid(&rs, 0, 1), (1, 2, 0));
        // s_{α1+α2}(α1) = −α2
        assert_eq!(braid(&rs, 2, 0), (-1, 1, 2));
        for a in 0..3 {
            assert_eq!(braid(&rs, a, a), (-1, a, a));
        }
    }

    /// Apply Ψ at positions (p, p+1) of a signed triple.
    fn psi_at(rs: &RootSystem, (s, w): (i64, [usize; 3]), p: usize) -> (i64, [usize; 3]) {
        let (sign, img, a) = braid(rs, w[p], w[p + 1]);
        let mut out = w;
        out[p] = img;
        out[p + 1] = a;
        (s * sign, out)
    }

    #[test]
    fn braid_relation_on_all_triples() {
        for (kind, n) in [(CartanType::A, 2), (CartanType::B, 2), (CartanType::A, 3)] {
            let rs = RootSystem::new(kind, n).unwrap();
            let m = rs.num_positive();
            for a in 0..m {
                for b in 0..m {
                    for c in 0..m {
                        let x = (1, [a, b, c]);
                        let lhs = psi_at(&rs, psi_at(&rs, psi_at(&rs, x, 0), 1), 0);
                        let rhs = psi_at(&rs, psi_at(&rs, psi_at(&rs, x, 1), 0), 1);
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn coproduct_examples() {
        let rs = a2();
        let x = NcPoly::word(NcWord::from_indices(&[0, 1]));
        let t = coproduct_component(&rs, &x, (1, 1)).unwrap();
        let mut expected = Tensor2::new();
        expected.insert((NcWord::letter(0), NcWord::letter(1)), RingElem::one());
        expected.insert((NcWord::letter(2), NcWord::letter(0)), RingElem::one());
        assert_eq!(t, expected);

        let v = NcPoly::letter(2);
        let t = coproduct_component(&rs, &v, (1, 0)).unwrap();
        assert_eq!(t.len(), 1);
        assert!(t.contains_key(&(NcWord::letter(2), NcWord::empty())));

        let t = coproduct_component(&rs, &NcPoly::one(), (0, 0)).unwrap();
        assert_eq!(t.get(&(NcWord::empty(), NcWord::empty())), Some(&RingElem::one()));

        assert_eq!(coproduct_component(&rs, &x, (2, 1)), Err(Error::InhomogeneousInput));
    }

    #[test]
    fn pairing_examples() {
        let rs = a2();
        let p = Pairing::new(&rs);
        for a in 0..3 {
            for b in 0..3 {
                let v = p.pair_words(&NcWord::letter(a), &NcWord::letter(b));
                assert_eq!(v, if a == b { Rational::ONE } else { Rational::ZERO });
            }
        }
        let aa = NcWord::from_indices(&[0, 0]);
        assert_eq!(p.pair_words(&aa, &aa), Rational::ZERO);
        let ab = NcWord::from_indices(&[0, 1]);
        let ba = NcWord::from_indices(&[1, 0]);
        assert_eq!(p.pair_words(&ab, &ba), Rational::ONE);
        assert_eq!(p.pair_words(&ab, &NcWord::letter(0)), Rational::ZERO);
    }

    #[test]
    fn gram_matrix_small_cases() {
        let rs = a2();
        let p = Pairing::new(&rs);
        let gens = all_words(3, 1);
        let g = p.gram_matrix(&gens, &gens);
        for (i, row) in g.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(*v, if i == j { Rational::ONE } else { Rational::ZERO });
            }
        }
        let e = vec![NcWord::empty()];
        assert_eq!(p.gram_matrix(&e, &e), vec![vec![Rational::ONE]]);
        let aa = vec![NcWord::from_indices(&[0, 0])];
        assert_eq!(p.gram_matrix(&aa, &aa), vec![vec![Rational::ZERO]]);
    }
}
