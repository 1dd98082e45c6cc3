//! Exact coefficients: rationals and the ground ring `R = Q[q^{α∨}]`.
//!
//! [`Rational`] keeps numerator and denominator in machine words while they
//! fit and falls back to big integers otherwise; the representation is always
//! canonical so derived equality is value equality. [`RingElem`] is a sparse
//! Laurent polynomial in the quantum parameters `q_i = q^{α_i∨}`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Denominator > 0, gcd(num, den) = 1.
    Small(i64, i64),
    /// Same invariants, and the value does not fit `Small`.
    Big(BigInt, BigInt),
}

/// Exact rational number of arbitrary precision.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational(Repr::Small(0, 1));
    pub const ONE: Rational = Rational(Repr::Small(1, 1));

    pub fn zero() -> Self {
        Self::ZERO
    }

    pub fn one() -> Self {
        Self::ONE
    }

    pub fn from_int(n: i64) -> Self {
        Rational(Repr::Small(n, 1))
    }

    /// Builds `num/den`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        if num == 0 {
            return Self::ZERO;
        }
        let g = gcd_u128(num.unsigned_abs(), den.unsigned_abs()) as i128;
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(BigInt::from(n), BigInt::from(d))),
        }
    }

    fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::ZERO;
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / &g, den / &g);
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        match (n.to_i64(), d.to_i64()) {
            (Some(n), Some(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(n, d)),
        }
    }

    fn to_big(&self) -> (BigInt, BigInt) {
        match &self.0 {
            Repr::Small(n, d) => (BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(n, d) => (n.clone(), d.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(_, d) => d.is_one(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(n, _) => n.is_negative(),
        }
    }

    /// The value as an `i64`, if it is an integer in range.
    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small(n, 1) => Some(*n),
            _ => None,
        }
    }

    pub fn recip(&self) -> Self {
        match &self.0 {
            Repr::Small(n, d) => {
                assert!(*n != 0, "reciprocal of zero");
                Self::from_i128(*d as i128, *n as i128)
            }
            Repr::Big(n, d) => Self::from_big(d.clone(), n.clone()),
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::ONE;
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Self::from_int(n as i64)
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(s) = a.checked_add(*c) {
                        return Rational(Repr::Small(s, 1));
                    }
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rational::from_i128(a * d + c * b, b * d)
            }
            _ => {
                let (a, b) = self.to_big();
                let (c, d) = rhs.to_big();
                Rational::from_big(a * &d + c * &b, b * d)
            }
        }
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(p) = a.checked_mul(*c) {
                        return Rational(Repr::Small(p, 1));
                    }
                }
                Rational::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => {
                let (a, b) = self.to_big();
                let (c, d) = rhs.to_big();
                Rational::from_big(a * c, b * d)
            }
        }
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small(n, d) => match n.checked_neg() {
                Some(m) => Rational(Repr::Small(m, *d)),
                None => Rational::from_big(-BigInt::from(*n), BigInt::from(*d)),
            },
            Repr::Big(n, d) => Rational::from_big(-n.clone(), d.clone()),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        *self = &*self * rhs;
    }
}

impl core::ops::Div<&Rational> for &Rational {
    type Output = Rational;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Rational) -> Rational {
        self * &rhs.recip()
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => {
                let (a, b) = self.to_big();
                let (c, d) = other.to_big();
                (a * d).cmp(&(c * b))
            }
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(n, d) if d.is_one() => write!(f, "{n}"),
            Repr::Big(n, d) => write!(f, "{n}/{d}"),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(alloc::format!("bad rational `{s}`"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Rational::from_big(n, d))
    }
}

/// Maximum number of quantum parameters a monomial can carry.
pub const MAX_RANK: usize = 8;

/// A monomial `q^λ` with `λ` an integer vector over the simple coroots.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct QMonomial {
    exps: [i16; MAX_RANK],
}

impl QMonomial {
    pub const ONE: QMonomial = QMonomial { exps: [0; MAX_RANK] };

    pub fn new(exps: &[i64]) -> Self {
        assert!(exps.len() <= MAX_RANK, "too many quantum parameters");
        let mut m = Self::ONE;
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = i16::try_from(e).expect("q exponent out of range");
        }
        m
    }

    /// `q_i = q^{α_i∨}` (zero-based index).
    pub fn var(i: usize) -> Self {
        let mut m = Self::ONE;
        m.exps[i] = 1;
        m
    }

    pub fn exponent(&self, i: usize) -> i64 {
        self.exps[i] as i64
    }

    pub fn exponents(&self) -> &[i16; MAX_RANK] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Sum of exponents (the height of the coroot `λ`).
    pub fn total(&self) -> i64 {
        self.exps.iter().map(|&e| e as i64).sum()
    }

    pub fn mul(&self, other: &QMonomial) -> QMonomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(*b).expect("q exponent overflow");
        }
        m
    }

    pub fn divides(&self, other: &QMonomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }
}

impl Ord for QMonomial {
    /// Graded-lex: total degree first, then exponents lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total().cmp(&other.total()).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for QMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, "q", self.exps.iter().map(|&e| e as i64))
    }
}

impl fmt::Debug for QMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Writes `x1^2*x3` style monomials; the empty monomial prints as `1`.
pub(crate) fn write_monomial(
    f: &mut fmt::Formatter<'_>,
    var: &str,
    exps: impl Iterator<Item = i64>,
) -> fmt::Result {
    let mut first = true;
    for (i, e) in exps.enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        write!(f, "{var}{}", i + 1)?;
        if e != 1 {
            write!(f, "^{e}")?;
        }
    }
    if first {
        f.write_str("1")?;
    }
    Ok(())
}

/// Exponent vector of `q^{γ∨}` given the simple-coroot coordinates of `γ∨`.
pub fn q_of_coroot(coords: &[Rational]) -> Result<QMonomial> {
    let mut exps = Vec::with_capacity(coords.len());
    for c in coords {
        exps.push(c.to_i64().ok_or(Error::NonIntegralCoroot)?);
    }
    Ok(QMonomial::new(&exps))
}

/// Element of `R = Q[q_1^{±1},…,q_n^{±1}]`, stored as a sorted term list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RingElem {
    /// Sorted ascending by [`QMonomial`] order; no zero coefficients.
    terms: Vec<(QMonomial, Rational)>,
}

impl RingElem {
    pub fn zero() -> Self {
        RingElem { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::ONE)
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(QMonomial::ONE, c)
    }

    pub fn term(m: QMonomial, c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            RingElem { terms: alloc::vec![(m, c)] }
        }
    }

    pub fn monomial(m: QMonomial) -> Self {
        Self::term(m, Rational::ONE)
    }

    /// Builds from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (QMonomial, Rational)>) -> Self {
        let mut v: Vec<(QMonomial, Rational)> = terms.into_iter().collect();
        v.sort_by_key(|a| a.0);
        let mut out: Vec<(QMonomial, Rational)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += &c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        RingElem { terms: out }
    }

    pub fn terms(&self) -> &[(QMonomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The value if this element is a pure rational (no q-dependence).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::ZERO),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or(Rational::ZERO)
    }

    pub fn coefficient(&self, m: &QMonomial) -> Rational {
        match self.terms.binary_search_by(|(t, _)| t.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::ZERO,
        }
    }

    /// Specializes every `q_i` to zero (only meaningful for nonnegative exponents).
    pub fn at_q_zero(&self) -> Self {
        Self::constant(self.constant_term())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RingElem { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn mul_monomial(&self, q: &QMonomial) -> Self {
        // Multiplying by a monomial is a translation: graded-lex order is preserved.
        RingElem { terms: self.terms.iter().map(|(m, c)| (m.mul(q), c.clone())).collect() }
    }

    /// Substitutes rational values for the q-parameters (requires values for negative exponents to be nonzero).
    pub fn evaluate(&self, values: &[Rational]) -> Rational {
        let mut acc = Rational::ZERO;
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, v) in values.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    t = &t * &v.pow(e as u32);
                } else if e < 0 {
                    t = &t * &v.recip().pow((-e) as u32);
                }
            }
            acc += &t;
        }
        acc
    }

    fn merge(a: &[(QMonomial, Rational)], b: &[(QMonomial, Rational)], negate_b: bool) -> Self {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let (m, c) = &b[j];
                    out.push((*m, if negate_b { -c } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        RingElem { terms: out }
    }

    /// Human-readable form under a custom monomial renderer (used for display maps).
    pub fn display_with<F>(&self, render: F) -> String
    where
        F: Fn(&QMonomial) -> String,
    {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = render(m);
            if mono == "1" {
                s.push_str(&mag.to_string());
            } else if mag.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&alloc::format!("{mag}*{mono}"));
            }
        }
        s
    }
}

impl<'a> Add<&'a RingElem> for &'a RingElem {
    type Output = RingElem;
    fn add(self, rhs: &RingElem) -> RingElem {
        RingElem::merge(&self.terms, &rhs.terms, false)
    }
}

impl<'a> Sub<&'a RingElem> for &'a RingElem {
    type Output = RingElem;
    fn sub(self, rhs: &RingElem) -> RingElem {
        RingElem::merge(&self.terms, &rhs.terms, true)
    }
}

impl<'a> Mul<&'a RingElem> for &'a RingElem {
    type Output = RingElem;
    fn mul(self, rhs: &RingElem) -> RingElem {
        if self.is_zero() || rhs.is_zero() {
            return RingElem::zero();
        }
        if let [(m, c)] = rhs.terms.as_slice() {
            if m.is_one() {
                return self.scale(c);
            }
        }
        if let [(m, c)] = self.terms.as_slice() {
            if m.is_one() {
                return rhs.scale(c);
            }
        }
        let mut v = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                v.push((a.mul(b), x * y));
            }
        }
        RingElem::from_terms(v)
    }
}

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}

impl AddAssign<&RingElem> for RingElem {
    fn add_assign(&mut self, rhs: &RingElem) {
        if rhs.is_zero() {
            return;
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&RingElem> for RingElem {
    fn sub_assign(&mut self, rhs: &RingElem) {
        if rhs.is_zero() {
            return;
        }
        *self = &*self - rhs;
    }
}

impl Add for RingElem {
    type Output = RingElem;
    fn add(self, rhs: RingElem) -> RingElem {
        &self + &rhs
    }
}

impl Sub for RingElem {
    type Output = RingElem;
    fn sub(self, rhs: RingElem) -> RingElem {
        &self - &rhs
    }
}

impl Mul for RingElem {
    type Output = RingElem;
    fn mul(self, rhs: RingElem) -> RingElem {
        &self * &rhs
    }
}

impl From<Rational> for RingElem {
    fn from(c: Rational) -> Self {
        RingElem::constant(c)
    }
}

impl From<i64> for RingElem {
    fn from(n: i64) -> Self {
        RingElem::constant(Rational::from_int(n))
    }
}

impl fmt::Display for RingElem {
    /// Canonical serialization, e.g. `3/2*q1^2*q2 - q1 + 1`; terms in descending graded-lex order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(|m| m.to_string()))
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RingElem {
    type Err = Error;

    /// Parses the canonical serialization (and any whitespace/order variant of it).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(RingElem::zero());
        }
        let mut terms = Vec::new();
        // Split into signed chunks at top-level `+`/`-` separators.
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev: Option<char> = None;
        for ch in s.chars() {
            let sep = (ch == '+' || ch == '-') && prev != Some('^') && !cur.trim().is_empty();
            if sep {
                chunks.push((neg, core::mem::take(&mut cur)));
                neg = ch == '-';
            } else if (ch == '-' || ch == '+') && cur.trim().is_empty() && prev != Some('^') {
                if ch == '-' {
                    neg = !neg;
                }
            } else {
                cur.push(ch);
            }
            if !ch.is_whitespace() {
                prev = Some(ch);
            }
        }
        chunks.push((neg, cur));
        for (neg, chunk) in chunks {
            let mut coef = Rational::ONE;
            let mut exps = [0i64; MAX_RANK];
            for factor in chunk.split('*') {
                let factor = factor.trim();
                if let Some(rest) = factor.strip_prefix('q') {
                    let (idx, e) = match rest.split_once('^') {
                        Some((i, e)) => (i, e.trim()),
                        None => (rest, "1"),
                    };
                    let idx: usize = idx
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(alloc::format!("bad variable `{factor}`")))?;
                    if idx == 0 || idx > MAX_RANK {
                        return Err(Error::Parse(alloc::format!("variable index out of range `{factor}`")));
                    }
                    let e: i64 =
                        e.parse().map_err(|_| Error::Parse(alloc::format!("bad exponent `{factor}`")))?;
                    exps[idx - 1] += e;
                } else {
                    coef = &coef * &factor.parse::<Rational>()?;
                }
            }
            if neg {
                coef = -coef;
            }
            terms.push((QMonomial::new(&exps), coef));
        }
        Ok(RingElem::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn q(i: usize) -> RingElem {
        RingElem::monomial(QMonomial::var(i))
    }

    #[test]
    fn additive_identity_and_inverse() {
        let q1 = q(0);
        assert_eq!(&q1 + &RingElem::zero(), q1);
        assert!((&q1 + &(-&q1)).is_zero());
    }

    #[test]
    fn halves_add_up() {
        let half = RingElem::term(QMonomial::var(0), Rational::new(1, 2));
        assert_eq!(&half + &half, q(0));
    }

    #[test]
    fn monomials_multiply_by_adding_exponents() {
        let p = &q(0) * &q(1);
        assert_eq!(p, RingElem::monomial(QMonomial::new(&[1, 1])));
        assert_eq!(&q(0) * &q(0), RingElem::monomial(QMonomial::new(&[2])));
        assert_eq!(&RingElem::one() * &p, p);
    }

    #[test]
    fn coroot_exponents_must_be_integral() {
        let m = q_of_coroot(&[Rational::ONE, Rational::ZERO]).unwrap();
        assert_eq!(m, QMonomial::new(&[1, 0]));
        let m = q_of_coroot(&[Rational::ONE, Rational::ONE]).unwrap();
        assert_eq!(m, QMonomial::new(&[1, 1]));
        assert_eq!(q_of_coroot(&[Rational::new(1, 2)]), Err(Error::NonIntegralCoroot));
    }

    #[test]
    fn serialization_format() {
        let x = RingElem::term(QMonomial::new(&[2, 1]), Rational::new(3, 2));
        assert_eq!(x.to_string(), "3/2*q1^2*q2");
        let y = &(&x - &q(0)) + &RingElem::one();
        assert_eq!(y.to_string(), "3/2*q1^2*q2 - q1 + 1");
        assert_eq!(y.to_string().parse::<RingElem>().unwrap(), y);
        let z = RingElem::monomial(QMonomial::new(&[1, -1]));
        assert_eq!(z.to_string(), "q1*q2^-1");
        assert_eq!("q1*q2^-1".parse::<RingElem>().unwrap(), z);
        assert_eq!("-2*q3".parse::<RingElem>().unwrap().to_string(), "-2*q3");
        assert_eq!(RingElem::zero().to_string(), "0");
    }

    #[test]
    fn rational_overflow_promotes_to_big() {
        let big = Rational::from_int(i64::MAX);
        let sq = &big * &big;
        assert!(!sq.is_integer() || sq.to_i64().is_none());
        let back = &sq / &big;
        assert_eq!(back, big);
        let tiny = Rational::new(1, i64::MAX);
        assert_eq!(&(&tiny * &big) - &Rational::ONE, Rational::ZERO);
        assert_eq!(Rational::from_int(i64::MIN).abs().to_string(), "9223372036854775808");
    }

    #[test]
    fn rational_parse_and_order() {
        let a: Rational = "-6/4".parse().unwrap();
        assert_eq!(a, Rational::new(-3, 2));
        assert!(a < Rational::ZERO);
        assert!("1/0".parse::<Rational>().is_err());
    }
}
