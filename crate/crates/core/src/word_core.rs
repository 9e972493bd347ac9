//! Words over an open alphabet of generators and their inverses.
//!
//! A [`Word`] is a flat sequence of signed letters. Nothing is reduced
//! implicitly; every simplification goes through [`reduce`] or
//! [`cyclically_reduce`].

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use once_cell::sync::Lazy;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

const MAX_EXPONENT: u32 = 100_000;

#[derive(Default)]
struct Interner {
    names: Vec<String>,
    ids: HashMap<String, u32>,
}

static INTERNER: Lazy<RwLock<Interner>> = Lazy::new(Default::default);

fn intern(name: &str) -> u32 {
    if let Some(&id) = INTERNER.read().unwrap().ids.get(name) {
        return id;
    }
    let mut table = INTERNER.write().unwrap();
    if let Some(&id) = table.ids.get(name) {
        return id;
    }
    let id = table.names.len() as u32;
    table.names.push(name.to_string());
    table.ids.insert(name.to_string(), id);
    id
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A generator or the inverse of a generator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    /// Builds a letter from a generator name and a sign (`1` or `-1`).
    ///
    /// Panics if the name is not an identifier or the sign is not ±1.
    pub fn new(symbol: &str, sign: i8) -> Letter {
        assert!(is_ident(symbol), "invalid generator name {symbol:?}");
        assert!(sign == 1 || sign == -1, "sign must be 1 or -1");
        let id = intern(symbol) as i32 + 1;
        Letter(id * sign as i32)
    }

    pub fn symbol(self) -> String {
        let id = (self.0.unsigned_abs() - 1) as usize;
        INTERNER.read().unwrap().names[id].clone()
    }

    pub fn sign(self) -> i8 {
        self.0.signum() as i8
    }

    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }

    #[inline]
    pub fn cancels(self, other: Letter) -> bool {
        self.0 == -other.0
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign() > 0 {
            write!(f, "{}", self.symbol())
        } else {
            write!(f, "{}^-1", self.symbol())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input (write \"1\" for the empty word)")]
    Empty,
    #[error("malformed token {0:?}")]
    BadToken(String),
    #[error("exponent 0 in token {0:?}")]
    ZeroExponent(String),
    #[error("exponent out of range in token {0:?}")]
    ExponentRange(String),
}

/// A word in the free monoid on letters and their inverses.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parses the text form: `1`, or space separated tokens `x`, `x^3`, `x^-2`.
    pub fn parse(text: &str) -> Result<Word, ParseError> {
        if text.is_empty() {
            return Err(ParseError::Empty);
        }
        if text == "1" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        for token in text.split(' ') {
            let (name, exp) = match token.split_once('^') {
                None => (token, 1i64),
                Some((name, exp)) => (name, parse_exponent(token, exp)?),
            };
            if !is_ident(name) {
                return Err(ParseError::BadToken(token.to_string()));
            }
            let letter = Letter::new(name, if exp > 0 { 1 } else { -1 });
            letters.extend(std::iter::repeat(letter).take(exp.unsigned_abs() as usize));
        }
        Ok(Word(letters))
    }

    /// Slice as an owned word.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.0.starts_with(&prefix.0)
    }

    pub fn ends_with(&self, suffix: &Word) -> bool {
        self.0.ends_with(&suffix.0)
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|p| !p[0].cancels(p[1]))
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_reduced()
            && match (self.first(), self.last()) {
                (Some(a), Some(b)) if self.len() > 1 => !a.cancels(b),
                _ => true,
            }
    }

    /// Set of generator names occurring in the word, in order of first appearance.
    pub fn symbols(&self) -> Vec<String> {
        let mut seen = Vec::new();
        for l in &self.0 {
            let s = l.symbol();
            if !seen.contains(&s) {
                seen.push(s);
            }
        }
        seen
    }
}

fn parse_exponent(token: &str, exp: &str) -> Result<i64, ParseError> {
    let digits = exp.strip_prefix('-').unwrap_or(exp);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::BadToken(token.to_string()));
    }
    if digits.bytes().all(|b| b == b'0') {
        return Err(ParseError::ZeroExponent(token.to_string()));
    }
    if digits.starts_with('0') {
        return Err(ParseError::BadToken(token.to_string()));
    }
    let magnitude: u32 = digits
        .parse()
        .ok()
        .filter(|m| *m <= MAX_EXPONENT)
        .ok_or_else(|| ParseError::ExponentRange(token.to_string()))?;
    Ok(if exp.starts_with('-') { -(magnitude as i64) } else { magnitude as i64 })
}

impl FromStr for Word {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Word, ParseError> {
        Word::parse(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut i = 0;
        let mut first = true;
        while i < self.0.len() {
            let l = self.0[i];
            let mut j = i + 1;
            while j < self.0.len() && self.0[j] == l {
                j += 1;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let exp = (j - i) as i64 * l.sign() as i64;
            if exp == 1 {
                write!(f, "{}", l.symbol())?;
            } else {
                write!(f, "{}^{}", l.symbol(), exp)?;
            }
            i = j;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Word, D::Error> {
        let text = String::deserialize(d)?;
        Word::parse(&text).map_err(serde::de::Error::custom)
    }
}

/// Parses a word literal, panicking on malformed input. Meant for tests and constants.
pub fn w(text: &str) -> Word {
    Word::parse(text).unwrap_or_else(|e| panic!("bad word literal {text:?}: {e}"))
}

pub fn concat(u: &Word, v: &Word) -> Word {
    let mut out = Vec::with_capacity(u.len() + v.len());
    out.extend_from_slice(&u.0);
    out.extend_from_slice(&v.0);
    Word(out)
}

/// Concatenation of any number of words.
pub fn concat_all(parts: &[&Word]) -> Word {
    let mut out = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
    for p in parts {
        out.extend_from_slice(&p.0);
    }
    Word(out)
}

pub fn inverse(u: &Word) -> Word {
    Word(u.0.iter().rev().map(|l| l.inverse()).collect())
}

pub fn reverse(u: &Word) -> Word {
    Word(u.0.iter().rev().copied().collect())
}

/// Free reduction in one left-to-right pass with a stack.
pub fn reduce(u: &Word) -> Word {
    let mut stack: Vec<Letter> = Vec::with_capacity(u.len());
    for &l in &u.0 {
        match stack.last() {
            Some(&top) if top.cancels(l) => {
                stack.pop();
            }
            _ => stack.push(l),
        }
    }
    Word(stack)
}

/// Reduced form of the concatenation of the given words.
pub fn reduce_all(parts: &[&Word]) -> Word {
    let mut stack: Vec<Letter> = Vec::new();
    for p in parts {
        for &l in &p.0 {
            match stack.last() {
                Some(&top) if top.cancels(l) => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
    }
    Word(stack)
}

/// Returns `(t, c)` with `c` cyclically reduced and `reduce(w) = t c t^-1`.
pub fn cyclically_reduce(u: &Word) -> (Word, Word) {
    let r = reduce(u);
    let n = r.len();
    let mut k = 0;
    while 2 * k + 1 < n && r.0[k].cancels(r.0[n - 1 - k]) {
        k += 1;
    }
    (r.slice(0, k), r.slice(k, n - k))
}

/// The cyclically reduced form of `u`.
pub fn cyc_reduced(u: &Word) -> Word {
    cyclically_reduce(u).1
}

/// The cyclically reduced product `u * v`.
pub fn cyc_product(u: &Word, v: &Word) -> Word {
    cyclically_reduce(&concat(u, v)).1
}

/// The reduced product `u . v`.
pub fn reduced_product(u: &Word, v: &Word) -> Word {
    reduce_all(&[u, v])
}

/// `reduce(a u a^-1)`.
pub fn conjugate(a: &Word, u: &Word) -> Word {
    reduce_all(&[a, u, &inverse(a)])
}

/// A factorization `w = left right` recording the rotation `right left`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicSplit {
    pub left: Word,
    pub right: Word,
}

impl CyclicSplit {
    pub fn at(u: &Word, k: usize) -> CyclicSplit {
        CyclicSplit { left: u.slice(0, k), right: u.slice(k, u.len()) }
    }

    pub fn rotation(&self) -> Word {
        concat(&self.right, &self.left)
    }

    pub fn whole(&self) -> Word {
        concat(&self.left, &self.right)
    }
}

/// The rotation of `u` that starts at offset `k`.
pub fn rotate(u: &Word, k: usize) -> Word {
    if u.is_empty() {
        return Word::empty();
    }
    let k = k % u.len();
    let mut out = Vec::with_capacity(u.len());
    out.extend_from_slice(&u.0[k..]);
    out.extend_from_slice(&u.0[..k]);
    Word(out)
}

/// All rotations by split index; the empty word has exactly one.
pub fn cyclic_permutations(u: &Word) -> Vec<(CyclicSplit, Word)> {
    (0..u.len().max(1))
        .map(|k| {
            let split = CyclicSplit::at(u, k);
            let rot = split.rotation();
            (split, rot)
        })
        .collect()
}

/// Split indices `k` with `rotate(u, k) == v`.
pub fn rotation_offsets(u: &Word, v: &Word) -> Vec<usize> {
    if u.len() != v.len() {
        return Vec::new();
    }
    if u.is_empty() {
        return vec![0];
    }
    let n = u.len();
    (0..n)
        .filter(|&k| (0..n).all(|i| u.0[(k + i) % n] == v.0[i]))
        .collect()
}

/// Returns the first split `u = w1 w2` with `v = w2 w1`, if any.
pub fn is_cyclic_permutation(u: &Word, v: &Word) -> Option<CyclicSplit> {
    rotation_offsets(u, v).first().map(|&k| CyclicSplit::at(u, k))
}

pub fn are_cyclic_permutations(u: &Word, v: &Word) -> bool {
    !rotation_offsets(u, v).is_empty()
}

/// Reduced conjugators `m` with `reduce(m u m^-1) = reduce(v)` read off the
/// literal rotations taking `u` to `v`: for each split `u = z1 z2` with
/// `v = z2 z1`, both `z1^-1` and `z2` qualify.
pub fn rotation_conjugators(u: &Word, v: &Word) -> Vec<Word> {
    let mut out: Vec<Word> = Vec::new();
    for k in rotation_offsets(u, v) {
        for m in [reduce(&inverse(&u.slice(0, k))), reduce(&u.slice(k, u.len()))] {
            if !out.contains(&m) {
                out.push(m);
            }
        }
    }
    out
}

/// Some reduced `m` with `reduce(m u m^-1) = reduce(v)`, if `u` and `v` are conjugate.
pub fn conjugator(u: &Word, v: &Word) -> Option<Word> {
    let (tu, cu) = cyclically_reduce(u);
    let (tv, cv) = cyclically_reduce(v);
    let k = *rotation_offsets(&cu, &cv).first()?;
    let z1 = cu.slice(0, k);
    Some(reduce_all(&[&tv, &inverse(&z1), &inverse(&tu)]))
}

/// The shortest word `r` with `u = r^n` for some `n >= 1`; `u` itself when empty.
pub fn primitive_root(u: &Word) -> Word {
    let n = u.len();
    for p in 1..n {
        if n % p == 0 && (p..n).all(|i| u.0[i] == u.0[i - p]) {
            return u.slice(0, p);
        }
    }
    u.clone()
}

/// Reduced conjugators `m` with `reduce(m x m^-1) = reduce(target)`, taken
/// from the coset `m0 z^k` of the centralizer of `x` for `|k| <= span`, where
/// `z` is the primitive root of `x`. Every reduced word qualifies when both
/// sides are trivial; only `1` is returned then.
pub fn conjugators_within(x: &Word, target: &Word, span: usize) -> Vec<Word> {
    let Some(m0) = conjugator(x, target) else {
        return Vec::new();
    };
    let (t, c) = cyclically_reduce(x);
    if c.is_empty() {
        return vec![m0];
    }
    let z = reduce_all(&[&t, &primitive_root(&c), &inverse(&t)]);
    let zi = inverse(&z);
    let mut out = vec![m0.clone()];
    let (mut up, mut down) = (m0.clone(), m0);
    for _ in 0..span {
        up = reduce_all(&[&up, &z]);
        down = reduce_all(&[&down, &zi]);
        for m in [&up, &down] {
            if !out.contains(m) {
                out.push(m.clone());
            }
        }
    }
    out
}

/// Given `reduce(u) = v1 v2` with `|v1| = k`, a factorization `u = u1 u2`
/// with `reduce(u1) = v1` and `reduce(u2) = v2`.
pub fn reduced_split_preimage(u: &Word, k: usize) -> Option<(Word, Word)> {
    let r = reduce(u);
    if k > r.len() {
        return None;
    }
    let (v1, v2) = (r.slice(0, k), r.slice(k, r.len()));
    (0..=u.len()).find_map(|i| {
        let (u1, u2) = (u.slice(0, i), u.slice(i, u.len()));
        (reduce(&u1) == v1 && reduce(&u2) == v2).then_some((u1, u2))
    })
}

/// Given a rotation `target` of `reduce(u)`, a rotation of `u` whose reduced
/// form equals `reduce(target)`.
pub fn rotation_preimage(u: &Word, target: &Word) -> Option<Word> {
    let r = reduce(u);
    let k = *rotation_offsets(&r, target).first()?;
    let (u1, u2) = reduced_split_preimage(u, k)?;
    Some(concat(&u2, &u1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum LeviCase {
    /// `u1 = v1 p` and `v2 = p u2`.
    Left,
    /// `v1 = u1 p` and `u2 = p v2`.
    Right,
    /// `u1 = v1` and `u2 = v2`.
    Aligned,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviSolution {
    pub case: LeviCase,
    pub p: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("the two sides of the word equation differ")]
pub struct EquationUnbalanced;

/// Solves `u1 u2 = v1 v2` for the overlap word.
pub fn levi_solve(u1: &Word, u2: &Word, v1: &Word, v2: &Word) -> Result<LeviSolution, EquationUnbalanced> {
    if concat(u1, u2) != concat(v1, v2) {
        return Err(EquationUnbalanced);
    }
    Ok(match u1.len().cmp(&v1.len()) {
        std::cmp::Ordering::Greater => LeviSolution { case: LeviCase::Left, p: u1.slice(v1.len(), u1.len()) },
        std::cmp::Ordering::Less => LeviSolution { case: LeviCase::Right, p: v1.slice(u1.len(), v1.len()) },
        std::cmp::Ordering::Equal => LeviSolution { case: LeviCase::Aligned, p: Word::empty() },
    })
}

/// Cut offsets of both sides of `u1 ... um = v1 ... vn` into the common word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BarPlacement {
    pub u_cuts: Vec<usize>,
    pub v_cuts: Vec<usize>,
}

impl BarPlacement {
    /// Number of `v` bars inside each `u` block (a weak composition of `n - 1` in `m` parts).
    pub fn u_composition(&self) -> Vec<usize> {
        composition(&self.u_cuts, &self.v_cuts)
    }

    /// Number of `u` bars inside each `v` block (a weak composition of `m - 1` in `n` parts).
    pub fn v_composition(&self) -> Vec<usize> {
        composition(&self.v_cuts, &self.u_cuts)
    }
}

// A bar at offset k belongs to the first block whose end is at or after k.
fn composition(own_cuts: &[usize], other_cuts: &[usize]) -> Vec<usize> {
    let mut counts = vec![0; own_cuts.len() + 1];
    for &k in other_cuts {
        let block = own_cuts.iter().position(|&end| end >= k).unwrap_or(own_cuts.len());
        counts[block] += 1;
    }
    counts
}

pub fn equation_bars(us: &[Word], vs: &[Word]) -> Result<BarPlacement, EquationUnbalanced> {
    let left: Vec<&Word> = us.iter().collect();
    let right: Vec<&Word> = vs.iter().collect();
    if concat_all(&left) != concat_all(&right) {
        return Err(EquationUnbalanced);
    }
    let cuts = |blocks: &[Word]| {
        let mut acc = 0;
        let mut out = Vec::new();
        for b in blocks.iter().take(blocks.len().saturating_sub(1)) {
            acc += b.len();
            out.push(acc);
        }
        out
    };
    Ok(BarPlacement { u_cuts: cuts(us), v_cuts: cuts(vs) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(w("x^-2").len(), 2);
        assert_eq!(w("x^-2").to_string(), "x^-2");
        assert_eq!(w("1"), Word::empty());
        assert_eq!(w("x y y x^-1").to_string(), "x y^2 x^-1");
        assert_eq!(Word::parse("x^0"), Err(ParseError::ZeroExponent("x^0".into())));
        assert!(Word::parse("").is_err());
        assert!(Word::parse("x  y").is_err());
        assert!(Word::parse("x^01").is_err());
        assert!(Word::parse("2x").is_err());
        assert!(Word::parse("x^").is_err());
        assert!(Word::parse("x_1^3 Y2").is_ok());
    }

    #[test]
    fn basic_ops() {
        assert_eq!(concat(&w("x y"), &w("y^-1")), w("x y y^-1"));
        assert_eq!(inverse(&w("x y^-1")), w("y x^-1"));
        assert_eq!(reverse(&w("x y^-1 z")), w("z y^-1 x"));
        assert_eq!(reduce(&w("x y y^-1 x^-1 x z")), w("x z"));
        assert_eq!(reduce(&w("x y x y y^-1 x^-1 y^-1 y^-1")), w("x y^-1"));
    }

    #[test]
    fn cyclic_reduction() {
        assert_eq!(cyclically_reduce(&w("y^-1 x^-1 y^-2 x y x^-1 y")), (w("y^-1"), w("x^-1 y^-2 x y x^-1")));
        assert_eq!(cyclically_reduce(&w("a b c b^-1 a^-1")), (w("a b"), w("c")));
        assert_eq!(cyclically_reduce(&w("x y")), (Word::empty(), w("x y")));
        assert_eq!(cyc_product(&w("x y"), &w("x^-1")), w("y"));
        assert_eq!(cyc_product(&w("t x"), &w("x^-1 y")), w("t y"));
    }

    #[test]
    fn rotations() {
        let perms: Vec<Word> = cyclic_permutations(&w("x y z")).into_iter().map(|p| p.1).collect();
        assert_eq!(perms, vec![w("x y z"), w("y z x"), w("z x y")]);
        assert_eq!(cyclic_permutations(&Word::empty()).len(), 1);
        assert_eq!(rotate(&w("x^-1 y^-2 x y x^-1"), 4), w("y x^-2 y^-2 x"));
        let split = is_cyclic_permutation(&w("x y"), &w("x y")).unwrap();
        assert_eq!((split.left, split.right), (Word::empty(), w("x y")));
        assert!(is_cyclic_permutation(&w("x y"), &w("x x")).is_none());
    }

    #[test]
    fn conjugators() {
        let u = w("x y x^-1 y");
        let v = w("y x y x^-1");
        for m in rotation_conjugators(&u, &v) {
            assert_eq!(conjugate(&m, &u), reduce(&v));
        }
        let m = conjugator(&w("a x y a^-1"), &w("b y x b^-1")).unwrap();
        assert_eq!(conjugate(&m, &w("a x y a^-1")), w("b y x b^-1"));
        assert!(conjugator(&w("x"), &w("y")).is_none());
    }

    #[test]
    fn preimages() {
        let u = w("x y y^-1 z z^-1 x");
        let (u1, u2) = reduced_split_preimage(&u, 1).unwrap();
        assert_eq!(concat(&u1, &u2), u);
        assert_eq!((reduce(&u1), reduce(&u2)), (w("x"), w("x")));
        let v = w("x y y^-1 z");
        let rot = rotation_preimage(&v, &w("z x")).unwrap();
        assert!(are_cyclic_permutations(&v, &rot));
        assert_eq!(reduce(&rot), w("z x"));
    }

    #[test]
    fn levi() {
        let s = levi_solve(&w("a b"), &w("c"), &w("a"), &w("b c")).unwrap();
        assert_eq!((s.case, s.p), (LeviCase::Left, w("b")));
        let s = levi_solve(&w("a"), &w("b"), &w("a"), &w("b")).unwrap();
        assert_eq!((s.case, s.p), (LeviCase::Aligned, Word::empty()));
        let s = levi_solve(&w("x y x"), &w("y"), &w("x"), &w("y x y")).unwrap();
        assert_eq!((s.case, s.p), (LeviCase::Left, w("y x")));
        assert!(levi_solve(&w("a"), &w("b"), &w("b"), &w("a")).is_err());
    }

    #[test]
    fn bars() {
        let bars = equation_bars(&[w("a b"), w("c d")], &[w("a"), w("b c d")]).unwrap();
        assert_eq!((bars.u_cuts.clone(), bars.v_cuts.clone()), (vec![2], vec![1]));
        assert_eq!((bars.u_composition(), bars.v_composition()), (vec![1, 0], vec![0, 1]));
        let bars = equation_bars(&[w("x")], &[w("x")]).unwrap();
        assert!(bars.u_cuts.is_empty() && bars.v_cuts.is_empty());
        // v1 = u1 a, u2 = a b, v2 = b u3 c, u4 = c v3
        let (u1, a, b, u3, c, v3) = (w("p"), w("q"), w("r"), w("s"), w("t"), w("z"));
        let us = [u1.clone(), concat(&a, &b), u3.clone(), concat(&c, &v3)];
        let vs = [concat(&u1, &a), concat_all(&[&b, &u3, &c]), v3];
        let bars = equation_bars(&us, &vs).unwrap();
        assert_eq!(bars.u_composition(), vec![0, 1, 0, 1]);
        assert_eq!(bars.v_composition(), vec![1, 2, 0]);
    }
}
