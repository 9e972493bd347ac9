//! Shared generators and slow reference implementations for the test suites.
#![allow(dead_code)]

use cycword::word_core::{Letter, Word};
use proptest::prelude::*;

pub const XYZ: [&str; 3] = ["x", "y", "z"];
pub const XY: [&str; 2] = ["x", "y"];

pub fn letter(name: &str, positive: bool) -> Letter {
    Letter::new(name, if positive { 1 } else { -1 })
}

/// Arbitrary (possibly unreduced) words.
pub fn word(alphabet: &'static [&'static str], max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..alphabet.len(), any::<bool>()), 0..=max)
        .prop_map(move |ls| Word::from_letters(ls.into_iter().map(|(i, s)| letter(alphabet[i], s)).collect()))
}

/// Reduced words, built so that no letter follows its inverse.
pub fn reduced_word(alphabet: &'static [&'static str], min: usize, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..alphabet.len(), any::<bool>()), min..=max).prop_map(move |ls| {
        let mut out: Vec<Letter> = Vec::new();
        for (i, s) in ls {
            let mut l = letter(alphabet[i], s);
            if out.last().is_some_and(|t| t.cancels(l)) {
                l = l.inverse();
            }
            out.push(l);
        }
        Word::from_letters(out)
    })
}

/// Free reduction by repeatedly deleting the leftmost cancelling pair.
pub fn slow_reduce(w: &Word) -> Word {
    let mut ls = w.letters().to_vec();
    loop {
        match (0..ls.len().saturating_sub(1)).find(|&i| ls[i].cancels(ls[i + 1])) {
            Some(i) => {
                ls.drain(i..i + 2);
            }
            None => return Word::from_letters(ls),
        }
    }
}

/// Cyclic reduction by stripping cancelling end letters of the reduced form.
pub fn slow_cyc_reduce(w: &Word) -> Word {
    let mut ls = slow_reduce(w).letters().to_vec();
    while ls.len() >= 2 && ls[0].cancels(ls[ls.len() - 1]) {
        ls.remove(0);
        ls.pop();
    }
    Word::from_letters(ls)
}

pub fn slow_cyc_product(u: &Word, v: &Word) -> Word {
    let mut ls = u.letters().to_vec();
    ls.extend_from_slice(v.letters());
    slow_cyc_reduce(&Word::from_letters(ls))
}

pub fn cat(parts: &[&Word]) -> Word {
    Word::from_letters(parts.iter().flat_map(|p| p.letters().iter().copied()).collect())
}

pub fn inv(w: &Word) -> Word {
    Word::from_letters(w.letters().iter().rev().map(|l| l.inverse()).collect())
}

/// Rotation test by searching the doubled word.
pub fn is_rotation(a: &Word, b: &Word) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let doubled = cat(&[b, b]);
    (0..b.len()).any(|k| doubled.letters()[k..k + a.len()] == *a.letters())
}

/// All reduced words over `alphabet` with length in `lo..=hi`.
pub fn all_reduced(alphabet: &[&str], lo: usize, hi: usize) -> Vec<Word> {
    let letters: Vec<Letter> = alphabet.iter().flat_map(|n| [letter(n, true), letter(n, false)]).collect();
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for len in 0..=hi {
        if len >= lo {
            out.extend(layer.iter().map(|ls| Word::from_letters(ls.clone())));
        }
        let mut next = Vec::new();
        for ls in &layer {
            for &l in &letters {
                if ls.last().is_some_and(|t: &Letter| t.cancels(l)) {
                    continue;
                }
                let mut n = ls.clone();
                n.push(l);
                next.push(n);
            }
        }
        layer = next;
    }
    out
}
