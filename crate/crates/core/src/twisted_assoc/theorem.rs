//! The theorem: `d*w ~ p * (h f h^-1)` with `f` a rotation of `q*w'`.

use crate::decompose::{reduced_rotations, solve_special};
use crate::identities::{ConjugateProduct, Identity};
use crate::word_core::{
    are_cyclic_permutations, concat, concat_all, conjugators_within, cyc_product, cyclic_permutations,
    cyclically_reduce, inverse, reduce, reduce_all, rotation_preimage, Word,
};

use super::exhaustive::{exhaustive_solutions, ExhaustiveOptions};
use super::lemma::main_lemma;
use super::verify::{cancellation_clause, theorem_specialization};
use super::{TheoremCertificate, TheoremError};

fn product_conjugator(x: &Word, y: &Word) -> Word {
    inverse(&cyclically_reduce(&concat(x, y)).0)
}

/// An identity with left side `[(sK, X), (sK, Y), (s, w)]` and a right side
/// whose conjugators are built from the conjugations carrying `X` to `p`,
/// `Y` to `q`, `w` to `w'` and `q*w'` to `f`, shifted by `h`. Both sides
/// agree term by term once the chain of conjugations closes, which is
/// checked through `c (p*(hfh^-1)) c^-1 = d*w`.
#[allow(clippy::too_many_arguments)]
pub fn build_theorem_identity(
    x: &Word, y: &Word, w: &Word, d: &Word, p: &Word, q: &Word, w_prime: &Word, f: &Word, h: &Word,
) -> Option<Identity> {
    let span = x.len() + y.len() + w.len() + 2;
    let one = Word::empty();
    let xy = concat(x, y);
    let sigma = product_conjugator(d, w);
    let qw = cyc_product(q, w_prime);
    let beta = product_conjugator(q, w_prime);
    let hfh = reduce_all(&[h, f, &inverse(h)]);
    let pi = product_conjugator(p, &hfh);
    let big_p = cyc_product(p, &hfh);
    let target = cyc_product(d, w);
    let (rw, rxy, rp, rwp) = (reduce(w), reduce(&xy), reduce(p), reduce(w_prime));

    let lambdas = if reduce(y).is_empty() { vec![one.clone()] } else { conjugators_within(y, q, span) };
    for lambda in &lambdas {
        let pairs_km: Vec<(Word, Word)> = if !rw.is_empty() && !rxy.is_empty() {
            conjugators_within(&xy, d, span)
                .into_iter()
                .map(|k| {
                    let mu = reduce_all(&[lambda, &inverse(&k)]);
                    (k, mu)
                })
                .filter(|(_, mu)| reduce_all(&[mu, w, &inverse(mu)]) == rwp)
                .collect()
        } else if rw.is_empty() {
            conjugators_within(&xy, d, span)
                .into_iter()
                .map(|k| {
                    let mu = reduce_all(&[lambda, &inverse(&k)]);
                    (k, mu)
                })
                .collect()
        } else {
            conjugators_within(w, w_prime, span)
                .into_iter()
                .map(|mu| (reduce_all(&[&inverse(&mu), lambda]), mu))
                .collect()
        };
        if pairs_km.is_empty() {
            continue;
        }
        let pairs_ft: Vec<(Word, Word)> = if !reduce(f).is_empty() {
            conjugators_within(&qw, f, span)
                .into_iter()
                .map(|phi| {
                    let tau = reduce_all(&[h, &phi, &beta, lambda]);
                    (phi, tau)
                })
                .filter(|(_, tau)| reduce(x).is_empty() || reduce_all(&[tau, x, &inverse(tau)]) == rp)
                .collect()
        } else if !reduce(x).is_empty() {
            conjugators_within(x, p, span)
                .into_iter()
                .map(|tau| (reduce_all(&[&inverse(h), &tau, &inverse(lambda), &inverse(&beta)]), tau))
                .collect()
        } else {
            vec![(one.clone(), reduce_all(&[h, &beta, lambda]))]
        };
        for (k, mu) in &pairs_km {
            for (phi, tau) in &pairs_ft {
                let c = reduce_all(&[&sigma, k, &inverse(tau), &inverse(&pi)]);
                if reduce_all(&[&c, &big_p, &inverse(&c)]) != target {
                    continue;
                }
                let sk = concat(&sigma, k);
                let head = concat_all(&[&c, &pi, h, phi, &beta]);
                let lhs = ConjugateProduct::from_pairs(&[(&sk, x), (&sk, y), (&sigma, w)]);
                let rhs = ConjugateProduct::from_pairs(&[
                    (&concat_all(&[&c, &pi, tau]), x),
                    (&concat(&head, lambda), y),
                    (&concat(&head, mu), w),
                ]);
                if let Ok(id) = Identity::new(lhs, rhs) {
                    return Some(id);
                }
            }
        }
    }
    None
}

/// Values of `h` for which some rotation of `d*w` is `p h f h^-1` letter
/// for letter, with `1` first when `d*w ~ p*f` already.
pub(crate) fn h_options(d: &Word, w: &Word, p: &Word, f: &Word) -> Vec<Word> {
    let dw = cyc_product(d, w);
    let mut out = Vec::new();
    if are_cyclic_permutations(&dw, &cyc_product(p, f)) {
        out.push(Word::empty());
    }
    for (_, c) in cyclic_permutations(&dw) {
        if !c.starts_with(p) || c.len() <= p.len() + f.len() {
            continue;
        }
        let rem = c.len() - p.len() - f.len();
        if rem % 2 != 0 {
            continue;
        }
        let h = c.slice(p.len(), p.len() + rem / 2);
        if c == concat_all(&[p, &h, f, &inverse(&h)]) && !out.contains(&h) {
            out.push(h);
        }
    }
    out
}

/// Checks one candidate tuple and builds its certificate.
#[allow(clippy::too_many_arguments)]
pub(crate) fn certify(
    u: &Word, v: &Word, w: &Word, d: &Word, p: &Word, q: &Word, w_prime: &Word, f: &Word, h: &Word,
    label: Option<String>,
) -> Option<TheoremCertificate> {
    let hfh = reduce_all(&[h, f, &inverse(h)]);
    if !are_cyclic_permutations(&cyc_product(d, w), &cyc_product(p, &hfh)) {
        return None;
    }
    if !theorem_specialization(u, v, w, d, q, w_prime) || !cancellation_clause(u, v, w, d, q, w_prime) {
        return None;
    }
    let in_rotations = |x: &Word| reduced_rotations(x).contains(p) || (p.is_empty() && reduce(x).is_empty());
    let is_rotation = |x: &Word| cyclic_permutations(x).iter().any(|(_, r)| r == q);
    let mut orders = Vec::new();
    if in_rotations(u) && is_rotation(v) {
        orders.push((u, v));
    }
    if in_rotations(v) && is_rotation(u) {
        orders.push((v, u));
    }
    let identity = orders.into_iter().find_map(|(x, y)| build_theorem_identity(x, y, w, d, p, q, w_prime, f, h))?;
    Some(TheoremCertificate {
        p: p.clone(),
        q: q.clone(),
        w_prime: w_prime.clone(),
        f: f.clone(),
        h: h.clone(),
        case_label: label,
        identity,
    })
}

/// `target` as a rotation of `x`, preferring `x` itself.
fn lift(x: &Word, target: &Word) -> Option<Word> {
    if reduce(x) == *target {
        return Some(x.clone());
    }
    rotation_preimage(x, target)
}

fn degenerate(u: &Word, v: &Word, w: &Word, d: &Word) -> Option<TheoremCertificate> {
    let (ru, rv, rw) = (reduce(u), reduce(v), reduce(w));
    let one = Word::empty();
    let rotation_to = |x: &Word| cyclic_permutations(x).into_iter().map(|(_, r)| r).find(|r| reduce(r) == *d);
    if ru.is_empty() {
        let q = rotation_to(v)?;
        let f = cyc_product(&q, w);
        return certify(u, v, w, d, &one, &q, w, &f, &one, Some("trivial.u".into()));
    }
    if rv.is_empty() {
        let q = rotation_to(u)?;
        let f = cyc_product(&q, w);
        return certify(u, v, w, d, &one, &q, w, &f, &one, Some("trivial.v".into()));
    }
    if rw.is_empty() {
        let f = cyc_product(v, w);
        return certify(u, v, w, d, &ru, v, w, &f, &one, Some("trivial.w".into()));
    }
    if d.is_empty() {
        let sol = solve_special(&ru, w).ok()?;
        return certify(u, v, w, d, &sol.u_prime, v, w, &sol.f, &sol.h, Some("trivial.d".into()));
    }
    None
}

fn is_degenerate(u: &Word, v: &Word, w: &Word, d: &Word) -> bool {
    reduce(u).is_empty() || reduce(v).is_empty() || reduce(w).is_empty() || d.is_empty()
}

fn from_lemma(u: &Word, v: &Word, w: &Word, d: &Word) -> Option<TheoremCertificate> {
    let (ru, rv, rw) = (reduce(u), reduce(v), reduce(w));
    let cert = main_lemma(&ru, &rv, &rw, d).ok()?;
    let q_from_v = are_cyclic_permutations(&cert.q, &rv) && are_cyclic_permutations(&cert.p, &ru);
    let (q_src, p_src) = if q_from_v { (v, u) } else { (u, v) };
    let q = lift(q_src, &cert.q)?;
    let w_prime = lift(w, &cert.w_prime)?;
    let label = Some(cert.case_label.clone());
    let qw = cyc_product(&q, &w_prime);
    let mut ps = vec![reduce(&cert.p)];
    for p in reduced_rotations(p_src) {
        if !ps.contains(&p) {
            ps.push(p);
        }
    }
    for p in &ps {
        for (_, f) in cyclic_permutations(&qw) {
            for h in h_options(d, w, p, &f) {
                if let Some(c) = certify(u, v, w, d, p, &q, &w_prime, &f, &h, label.clone()) {
                    return Some(c);
                }
            }
        }
    }
    None
}

/// Solves the theorem for `(u, v, w)` and a cyclic permutation `d` of `u*v`.
pub fn theorem_solve(u: &Word, v: &Word, w: &Word, d: &Word) -> Result<TheoremCertificate, TheoremError> {
    let target = cyc_product(u, v);
    if !are_cyclic_permutations(d, &target) {
        return Err(TheoremError::NotACyclicPermutation { d: d.clone(), target });
    }
    let found = if is_degenerate(u, v, w, d) { degenerate(u, v, w, d) } else { from_lemma(u, v, w, d) };
    if let Some(c) = found {
        return Ok(c);
    }
    let opts = ExhaustiveOptions { max_results: Some(1), ..ExhaustiveOptions::default() };
    exhaustive_solutions(u, v, w, d, &opts)?
        .into_iter()
        .next()
        .map(|mut c| {
            c.case_label = Some("search".into());
            c
        })
        .ok_or(TheoremError::SearchExhausted)
}
