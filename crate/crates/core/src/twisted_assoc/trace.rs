//! Cancellation traces of cyclically reduced products.

use serde::{Deserialize, Serialize};

use crate::word_core::{are_cyclic_permutations, concat, inverse, Letter, Word};

/// The cancellations performed while reducing `uv` to `u*v`: first the
/// stack reduction, then the cyclic peeling of the ends.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CancellationTrace {
    /// `(position, pair)` for each removal, with the position taken in the
    /// word as it stands when the pair is removed. A peeling step removes the
    /// last and the first letter and is recorded at the last position.
    pub cancelled_segments: Vec<(usize, Word)>,
    /// Positions in the original concatenation of each cancelled pair, in
    /// reading order along the cyclic word.
    pub matched: Vec<(usize, usize)>,
}

impl CancellationTrace {
    pub fn is_empty(&self) -> bool {
        self.cancelled_segments.is_empty()
    }

    /// Re-applies the removals to `uv`, checking every removed pair, and
    /// returns what is left.
    pub fn replay(&self, uv: &Word) -> Option<Word> {
        let mut cur: Vec<Letter> = uv.letters().to_vec();
        for (pos, pair) in &self.cancelled_segments {
            let n = cur.len();
            if n < 2 || *pos >= n || pair.len() != 2 {
                return None;
            }
            let next = (pos + 1) % n;
            if cur[*pos] != pair.letters()[0] || cur[next] != pair.letters()[1] {
                return None;
            }
            if next == 0 {
                cur.pop();
                cur.remove(0);
            } else {
                cur.drain(*pos..pos + 2);
            }
        }
        Some(Word::from_letters(cur))
    }
}

pub fn cyc_product_traced(u: &Word, v: &Word) -> (Word, CancellationTrace) {
    trace_word(&concat(u, v))
}

/// Traced cyclic reduction of a single word.
pub fn trace_word(word: &Word) -> (Word, CancellationTrace) {
    let letters = word.letters();
    let mut trace = CancellationTrace::default();
    let mut stack: Vec<usize> = Vec::with_capacity(letters.len());
    for (j, &l) in letters.iter().enumerate() {
        match stack.last() {
            Some(&i) if letters[i].cancels(l) => {
                stack.pop();
                trace.cancelled_segments.push((stack.len(), Word::from_letters(vec![letters[i], l])));
                trace.matched.push((i, j));
            }
            _ => stack.push(j),
        }
    }
    let (mut lo, mut hi) = (0usize, stack.len());
    while hi - lo >= 2 && letters[stack[lo]].cancels(letters[stack[hi - 1]]) {
        let (first, last) = (stack[lo], stack[hi - 1]);
        trace.cancelled_segments.push((hi - lo - 1, Word::from_letters(vec![letters[last], letters[first]])));
        trace.matched.push((last, first));
        lo += 1;
        hi -= 1;
    }
    let rest: Vec<Letter> = stack[lo..hi].iter().map(|&i| letters[i]).collect();
    (Word::from_letters(rest), trace)
}

/// Words read along the cyclic intervals of `word` made only of cancelled
/// letters and closed under the cancellation matching, deduplicated. These
/// are the words "cancelled" in the cyclic product.
pub fn closed_blocks(word: &Word, trace: &CancellationTrace) -> Vec<Word> {
    let n = word.len();
    let mut partner = vec![usize::MAX; n];
    for &(a, b) in &trace.matched {
        partner[a] = b;
        partner[b] = a;
    }
    let letters = word.letters();
    let mut out: Vec<Word> = Vec::new();
    for start in 0..n {
        if partner[start] == usize::MAX {
            continue;
        }
        let mut inside = vec![false; n];
        for len in 1..=n {
            let pos = (start + len - 1) % n;
            if partner[pos] == usize::MAX {
                break;
            }
            inside[pos] = true;
            if len % 2 != 0 {
                continue;
            }
            let closed = (0..len).all(|k| inside[partner[(start + k) % n]]);
            if closed {
                let block = Word::from_letters((0..len).map(|k| letters[(start + k) % n]).collect());
                if !out.contains(&block) {
                    out.push(block);
                }
            }
        }
    }
    out
}

/// Words cancelled in `u*v`: the closed blocks of the trace of `uv`, plus
/// `b b^-1` for every suffix `b` of `u` with `b^-1` a prefix of `v`, and
/// `a^-1 a` for every prefix `a` of `u` with `a^-1` a suffix of `v`. The
/// second kind does not depend on which of several equal letters the stack
/// reduction happens to pair.
pub fn cancelled_words(u: &Word, v: &Word) -> Vec<Word> {
    let uv = concat(u, v);
    let (_, trace) = trace_word(&uv);
    let mut out = closed_blocks(&uv, &trace);
    for k in 1..=u.len().min(v.len()) {
        let b = u.slice(u.len() - k, u.len());
        if v.starts_with(&inverse(&b)) {
            let word = concat(&b, &inverse(&b));
            if !out.contains(&word) {
                out.push(word);
            }
        }
        let a = u.slice(0, k);
        if v.ends_with(&inverse(&a)) {
            let word = concat(&inverse(&a), &a);
            if !out.contains(&word) {
                out.push(word);
            }
        }
    }
    out
}

/// Whether `candidate` is, up to rotation, one of `blocks`.
pub fn is_cancelled(candidate: &Word, blocks: &[Word]) -> bool {
    !candidate.is_empty() && blocks.iter().any(|b| are_cyclic_permutations(b, candidate))
}
