//! Products of conjugates of relators, Peiffer moves and identities among
//! relations.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word_core::{concat_all, inverse, reduce, reduce_all, reverse, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("terms {0} and {1} do not cancel")]
    NotDeletable(usize, usize),
    #[error("index {index} out of range for {len} terms")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("sides evaluate to {lhs} and {rhs}")]
    NotAnIdentity { lhs: Word, rhs: Word },
    #[error("{lhs} is not the conjugate of {rhs} by {c}")]
    EquivalenceFails { lhs: Word, rhs: Word, c: Word },
    #[error("relator {relator} does not match expansion value {value}")]
    ExpansionMismatch { relator: Word, value: Word },
}

/// The conjugate `a r a^-1`, with `a` kept reduced and `r` verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConjugateTerm {
    #[serde(rename = "a", deserialize_with = "reduced_word")]
    pub conjugator: Word,
    #[serde(rename = "r")]
    pub relator: Word,
}

fn reduced_word<'de, D: serde::Deserializer<'de>>(de: D) -> Result<Word, D::Error> {
    Word::deserialize(de).map(|w| reduce(&w))
}

impl ConjugateTerm {
    pub fn new(conjugator: &Word, relator: &Word) -> ConjugateTerm {
        ConjugateTerm { conjugator: reduce(conjugator), relator: relator.clone() }
    }

    pub fn inverse(&self) -> ConjugateTerm {
        ConjugateTerm { conjugator: self.conjugator.clone(), relator: inverse(&self.relator) }
    }

    /// The literal word `a r a^-1`.
    pub fn expand(&self) -> Word {
        concat_all(&[&self.conjugator, &self.relator, &inverse(&self.conjugator)])
    }

    /// Whether `self` followed by `other` is a cancelling pair over `Y`.
    pub fn cancels(&self, other: &ConjugateTerm) -> bool {
        self.conjugator == other.conjugator
            && reduce(&self.relator) == reduce(&inverse(&other.relator))
    }
}

impl fmt::Display for ConjugateTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.conjugator, self.relator)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ConjugateProduct {
    pub terms: Vec<ConjugateTerm>,
}

impl ConjugateProduct {
    pub fn new(terms: Vec<ConjugateTerm>) -> ConjugateProduct {
        ConjugateProduct { terms }
    }

    /// Builds a product from `(conjugator, relator)` pairs.
    pub fn from_pairs(pairs: &[(&Word, &Word)]) -> ConjugateProduct {
        ConjugateProduct::new(pairs.iter().map(|(a, r)| ConjugateTerm::new(a, r)).collect())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Inverse of the product: inverted terms in reverse order.
    pub fn inverse(&self) -> ConjugateProduct {
        ConjugateProduct::new(self.terms.iter().rev().map(ConjugateTerm::inverse).collect())
    }

    pub fn rotate(&self, k: usize) -> ConjugateProduct {
        let mut terms = self.terms.clone();
        if !terms.is_empty() {
            terms.rotate_left(k % self.terms.len());
        }
        ConjugateProduct::new(terms)
    }

    /// Every conjugator replaced by `reduce(c a)`.
    pub fn premultiply(&self, c: &Word) -> ConjugateProduct {
        ConjugateProduct::new(
            self.terms.iter().map(|t| ConjugateTerm::new(&concat_all(&[c, &t.conjugator]), &t.relator)).collect(),
        )
    }

    /// Image under letter reversal: reversed term order, each `(a, r)` sent
    /// to `(reverse(a)^-1, reverse(r))`.
    pub fn reversed(&self) -> ConjugateProduct {
        ConjugateProduct::new(
            self.terms
                .iter()
                .rev()
                .map(|t| ConjugateTerm::new(&inverse(&reverse(&t.conjugator)), &reverse(&t.relator)))
                .collect(),
        )
    }

    /// Free reduction of the term sequence over `Y`.
    pub fn free_reduce(&self) -> ConjugateProduct {
        let mut stack: Vec<ConjugateTerm> = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            match stack.last() {
                Some(top) if top.cancels(t) => {
                    stack.pop();
                }
                _ => stack.push(t.clone()),
            }
        }
        ConjugateProduct::new(stack)
    }
}

impl fmt::Display for ConjugateProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join(" . "))
    }
}

/// `psi`: the reduced form of the concatenated conjugates.
pub fn eval(p: &ConjugateProduct) -> Word {
    let expanded: Vec<Word> = p.terms.iter().map(ConjugateTerm::expand).collect();
    let refs: Vec<&Word> = expanded.iter().collect();
    reduce_all(&refs)
}

/// `lhs ≡ rhs`, with both sides evaluating to the same reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawIdentity")]
pub struct Identity {
    pub lhs: ConjugateProduct,
    pub rhs: ConjugateProduct,
}

#[derive(Deserialize)]
struct RawIdentity {
    lhs: ConjugateProduct,
    #[serde(default)]
    rhs: ConjugateProduct,
}

impl TryFrom<RawIdentity> for Identity {
    type Error = IdentityError;

    fn try_from(raw: RawIdentity) -> Result<Identity, IdentityError> {
        Identity::new(raw.lhs, raw.rhs)
    }
}

impl Identity {
    pub fn new(lhs: ConjugateProduct, rhs: ConjugateProduct) -> Result<Identity, IdentityError> {
        let (l, r) = (eval(&lhs), eval(&rhs));
        if l != r {
            return Err(IdentityError::NotAnIdentity { lhs: l, rhs: r });
        }
        Ok(Identity { lhs, rhs })
    }

    pub fn is_normal_form(&self) -> bool {
        self.rhs.is_empty()
    }

    /// Re-checks `eval(lhs) = eval(rhs)`; fields are public and may have been edited.
    pub fn check(&self) -> Result<(), IdentityError> {
        Identity::new(self.lhs.clone(), self.rhs.clone()).map(|_| ())
    }

    /// The normal form obtained by moving the right-hand terms, last first,
    /// to the end of the left-hand side as inverses.
    pub fn normal_form(&self) -> ConjugateProduct {
        let mut terms = self.lhs.terms.clone();
        terms.extend(self.rhs.inverse().terms);
        ConjugateProduct::new(terms)
    }

    /// Both sides premultiplied by `c`.
    pub fn premultiply(&self, c: &Word) -> Identity {
        Identity { lhs: self.lhs.premultiply(c), rhs: self.rhs.premultiply(c) }
    }

    /// Image under letter reversal of every conjugator and relator.
    pub fn reversed(&self) -> Identity {
        Identity { lhs: self.lhs.reversed(), rhs: self.rhs.reversed() }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} == {}", self.lhs, self.rhs)
    }
}

fn pair_index(p: &ConjugateProduct, i: usize) -> Result<(), IdentityError> {
    if i + 1 >= p.len() {
        return Err(IdentityError::IndexOutOfRange { index: i, len: p.len() });
    }
    Ok(())
}

/// Deletes terms `i` and `i + 1` when they cancel over `Y`.
pub fn peiffer_delete(p: &ConjugateProduct, i: usize) -> Result<ConjugateProduct, IdentityError> {
    pair_index(p, i)?;
    if !p.terms[i].cancels(&p.terms[i + 1]) {
        return Err(IdentityError::NotDeletable(i, i + 1));
    }
    let mut terms = p.terms.clone();
    terms.drain(i..i + 2);
    Ok(ConjugateProduct::new(terms))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExchangeKind {
    A,
    B,
}

/// Type A: `(a, r), (b, s)` becomes `(b, s), (b s^-1 b^-1 a, r)`.
/// Type B: `(a, r), (b, s)` becomes `(a r a^-1 b, s), (a, r)`.
pub fn exchange(p: &ConjugateProduct, i: usize, kind: ExchangeKind) -> Result<ConjugateProduct, IdentityError> {
    pair_index(p, i)?;
    let (x, y) = (&p.terms[i], &p.terms[i + 1]);
    let (a, r, b, s) = (&x.conjugator, &x.relator, &y.conjugator, &y.relator);
    let (first, second) = match kind {
        ExchangeKind::A => (
            y.clone(),
            ConjugateTerm::new(&concat_all(&[b, &inverse(s), &inverse(b), a]), r),
        ),
        ExchangeKind::B => (
            ConjugateTerm::new(&concat_all(&[a, r, &inverse(a), b]), s),
            x.clone(),
        ),
    };
    let mut terms = p.terms.clone();
    terms[i] = first;
    terms[i + 1] = second;
    Ok(ConjugateProduct::new(terms))
}

pub fn is_basic(id: &Identity) -> Result<bool, IdentityError> {
    id.check()?;
    Ok(id.normal_form().free_reduce().is_empty())
}

pub fn is_strictly_basic(id: &Identity) -> Result<bool, IdentityError> {
    if !is_basic(id)? {
        return Ok(false);
    }
    let nf = id.normal_form();
    Ok(nf.terms.windows(2).all(|pair| pair[0].conjugator == pair[1].conjugator))
}

/// All rotations of the normal form, in rotation order. The first element is
/// the form that moves right-hand terms from the back, and the rotation by
/// `|lhs|` is the form that moves them from the front.
pub fn normal_forms(id: &Identity) -> Result<Vec<ConjugateProduct>, IdentityError> {
    id.check()?;
    let nf = id.normal_form();
    Ok((0..nf.len().max(1)).map(|k| nf.rotate(k)).collect())
}

/// From `eval(lhs) = reduce(c eval(rhs) c^-1)`, the identity whose right
/// side has every conjugator premultiplied by `c`.
pub fn identity_from_equivalence(
    lhs: &ConjugateProduct,
    rhs: &ConjugateProduct,
    c: &Word,
) -> Result<Identity, IdentityError> {
    let shifted = rhs.premultiply(c);
    Identity::new(lhs.clone(), shifted).map_err(|_| IdentityError::EquivalenceFails {
        lhs: eval(lhs),
        rhs: eval(rhs),
        c: reduce(c),
    })
}

/// Replaces term `i` (counting through `lhs` then `rhs`) by `expansion`
/// with conjugators premultiplied by that term's conjugator.
pub fn substitute_relator(
    id: &Identity,
    i: usize,
    expansion: &ConjugateProduct,
) -> Result<Identity, IdentityError> {
    let total = id.lhs.len() + id.rhs.len();
    if i >= total {
        return Err(IdentityError::IndexOutOfRange { index: i, len: total });
    }
    let (side_is_lhs, j) = if i < id.lhs.len() { (true, i) } else { (false, i - id.lhs.len()) };
    let side = if side_is_lhs { &id.lhs } else { &id.rhs };
    let term = &side.terms[j];
    let value = eval(expansion);
    if reduce(&term.relator) != value {
        return Err(IdentityError::ExpansionMismatch { relator: term.relator.clone(), value });
    }
    let mut terms = side.terms[..j].to_vec();
    terms.extend(expansion.premultiply(&term.conjugator).terms);
    terms.extend_from_slice(&side.terms[j + 1..]);
    let replaced = ConjugateProduct::new(terms);
    let out = if side_is_lhs {
        Identity { lhs: replaced, rhs: id.rhs.clone() }
    } else {
        Identity { lhs: id.lhs.clone(), rhs: replaced }
    };
    out.check()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word_core::w;

    fn prod(pairs: &[(&str, &str)]) -> ConjugateProduct {
        ConjugateProduct::new(pairs.iter().map(|(a, r)| ConjugateTerm::new(&w(a), &w(r))).collect())
    }

    #[test]
    fn eval_examples() {
        assert_eq!(eval(&prod(&[("1", "x y")])), w("x y"));
        assert_eq!(eval(&prod(&[("x", "y"), ("x", "y^-1")])), w("1"));
        assert_eq!(
            eval(&prod(&[("x1 x2", "x3"), ("x1 x4", "x5 x6"), ("x1 x4", "x6^-1 x7")])),
            w("x1 x2 x3 x2^-1 x4 x5 x7 x4^-1 x1^-1")
        );
    }

    #[test]
    fn exchange_examples() {
        let p = prod(&[("1", "r"), ("1", "s")]);
        assert_eq!(exchange(&p, 0, ExchangeKind::A).unwrap(), prod(&[("1", "s"), ("s^-1", "r")]));
        assert_eq!(exchange(&p, 0, ExchangeKind::B).unwrap(), prod(&[("r", "s"), ("1", "r")]));
        assert!(matches!(exchange(&p, 1, ExchangeKind::A), Err(IdentityError::IndexOutOfRange { .. })));
    }

    #[test]
    fn json_shape() {
        let id = Identity::new(prod(&[("1", "r")]), prod(&[("1", "r")])).unwrap();
        let text = serde_json::to_string(&id).unwrap();
        assert_eq!(text, r#"{"lhs":[{"a":"1","r":"r"}],"rhs":[{"a":"1","r":"r"}]}"#);
        let back: Identity = serde_json::from_str(&text).unwrap();
        assert_eq!(back, id);
        assert!(serde_json::from_str::<Identity>(r#"{"lhs":[{"a":"1","r":"r"}],"rhs":[]}"#).is_err());
    }
}
