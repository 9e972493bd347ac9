//! Brute-force enumeration of theorem certificates.

use std::time::Instant;

use crate::decompose::reduced_rotations;
use crate::word_core::{are_cyclic_permutations, cyc_product, cyclic_permutations, Word};

use super::theorem::{certify, h_options};
use super::{TheoremCertificate, TheoremError};

#[derive(Debug, Clone, Default)]
pub struct ExhaustiveOptions {
    /// Stop after this many certificates.
    pub max_results: Option<usize>,
    /// Stop enumerating at this instant and return what was found.
    pub deadline: Option<Instant>,
}

fn rotations(x: &Word) -> Vec<Word> {
    let mut out: Vec<Word> = Vec::new();
    for (_, r) in cyclic_permutations(x) {
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

/// Every admissible `(p, q, w', f, h)`, deduplicated and ordered with
/// `h = 1`, `w' = w` and `q` in `{u, v}` first.
pub fn exhaustive_solutions(
    u: &Word, v: &Word, w: &Word, d: &Word, opts: &ExhaustiveOptions,
) -> Result<Vec<TheoremCertificate>, TheoremError> {
    let target = cyc_product(u, v);
    if !are_cyclic_permutations(d, &target) {
        return Err(TheoremError::NotACyclicPermutation { d: d.clone(), target });
    }
    let mut found: Vec<TheoremCertificate> = Vec::new();
    let rank = |c: &TheoremCertificate| (!c.h.is_empty(), c.w_prime != *w, c.q != *u && c.q != *v);
    let best = (false, false, false);
    // Later candidates cannot outrank `m` best-ranked ones already found.
    let enough = |found: &Vec<TheoremCertificate>| {
        opts.max_results.is_some_and(|m| found.iter().filter(|c| rank(c) == best).count() >= m)
    };
    let late = || opts.deadline.is_some_and(|t| Instant::now() >= t);
    let ws = rotations(w);
    'outer: for (src, partner) in [(u, v), (v, u)] {
        for p in reduced_rotations(src) {
            for q in rotations(partner) {
                for w_prime in &ws {
                    if late() {
                        break 'outer;
                    }
                    for (_, f) in cyclic_permutations(&cyc_product(&q, w_prime)) {
                        for h in h_options(d, w, &p, &f) {
                            let Some(c) = certify(u, v, w, d, &p, &q, w_prime, &f, &h, None) else {
                                continue;
                            };
                            if found.iter().all(|x| x.key() != c.key()) {
                                found.push(c);
                            }
                            if enough(&found) {
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
    }
    found.sort_by_key(rank);
    if let Some(m) = opts.max_results {
        found.truncate(m);
    }
    Ok(found)
}

/// Whether the exhaustive enumeration contains a certificate with the same
/// `(p, q, w', f, h)` as `cert`.
pub fn exhaustive_admits(u: &Word, v: &Word, w: &Word, d: &Word, cert: &TheoremCertificate) -> bool {
    exhaustive_solutions(u, v, w, d, &ExhaustiveOptions::default())
        .is_ok_and(|all| all.iter().any(|c| c.key() == cert.key()))
}
