//! Independent re-checks of lemma and theorem certificates.

use crate::decompose::reduced_rotations;
use crate::identities::{eval, is_basic};
use crate::word_core::{
    are_cyclic_permutations, concat, concat_all, cyc_product, cyclic_permutations, inverse, reduce, reduce_all,
    Word,
};

use super::lemma::specialization_holds;
use super::trace::{cancelled_words, is_cancelled};
use super::{MainLemmaCertificate, Side, TheoremCertificate, VerificationReport};

fn has_cancellation(x: &Word, y: &Word) -> bool {
    cyc_product(x, y).len() < x.len() + y.len()
}

fn is_rotation_of(x: &Word, y: &Word) -> bool {
    cyclic_permutations(y).iter().any(|(_, r)| r == x)
}

/// The specialization clauses on the original words: `w' = w` when `d` is
/// `u*v` or `v*u`, and also `q` in `{u, v}` when `d` is `uv` or `vu`.
pub(crate) fn theorem_specialization(u: &Word, v: &Word, w: &Word, d: &Word, q: &Word, w_prime: &Word) -> bool {
    let (ru, rv) = (reduce(u), reduce(v));
    let starred = *d == cyc_product(&ru, &rv) || *d == cyc_product(&rv, &ru);
    let literal = *d == concat(&ru, &rv) || *d == concat(&rv, &ru);
    (!starred || w_prime == w) && (!literal || (w_prime == w && (q == u || q == v)))
}

/// When `u`, `v`, `w` are reduced, `d != 1` and `d*w` cancels, some block
/// cancelled in `q*w'` is, up to rotation, a block cancelled in `d*w`.
pub(crate) fn cancellation_clause(u: &Word, v: &Word, w: &Word, d: &Word, q: &Word, w_prime: &Word) -> bool {
    let reduced = u.is_reduced() && v.is_reduced() && w.is_reduced();
    let (rd, rw) = (reduce(d), reduce(w));
    if !reduced || rd.is_empty() || !has_cancellation(&rd, &rw) {
        return true;
    }
    let big = cancelled_words(&rd, &rw);
    cancelled_words(q, w_prime).iter().any(|b| is_cancelled(b, &big))
}

pub fn verify_main_lemma(u: &Word, v: &Word, w: &Word, d: &Word, cert: &MainLemmaCertificate) -> VerificationReport {
    let mut r = VerificationReport::default();
    let c = cert;
    let paired = (are_cyclic_permutations(&c.p, u) && are_cyclic_permutations(&c.q, v))
        || (are_cyclic_permutations(&c.p, v) && are_cyclic_permutations(&c.q, u));
    r.push("pairing", paired, format!("p = {}, q = {}", c.p, c.q));
    r.push("w_prime_rotation", are_cyclic_permutations(&c.w_prime, w), format!("w' = {}", c.w_prime));

    let pi = inverse(&c.p);
    let (gamma, beta, alpha) = (&c.gamma, &c.beta, &c.alpha);
    let (left, right) = match c.side {
        Side::Miar => (
            reduce_all(&[alpha, &c.q, &c.w_prime, &inverse(alpha)]),
            reduce_all(&[beta, &pi, &inverse(beta), gamma, &cyc_product(d, w), &inverse(gamma)]),
        ),
        Side::MiarPrime => (
            reduce_all(&[alpha, &c.w_prime, &c.q, &inverse(alpha)]),
            reduce_all(&[gamma, &cyc_product(w, d), &inverse(gamma), beta, &pi, &inverse(beta)]),
        ),
    };
    r.push("side_equation", left == right, format!("{} vs {}", left, right));

    let valid = c.identity.check().is_ok();
    r.push("identity_valid", valid, "");
    r.push("identity_basic", valid && is_basic(&c.identity).unwrap_or(false), "");
    let value = eval(&c.identity.lhs);
    r.push("identity_evaluates", value == left, format!("{value}"));
    r.push("specialization", specialization_holds(u, v, w, d, &c.q, &c.w_prime), "");
    r.push("zeta_eta", zeta_eta_holds(d, w, c), format!("zeta = {}, eta = {}", c.zeta, c.eta));
    r
}

fn zeta_eta_holds(d: &Word, w: &Word, c: &MainLemmaCertificate) -> bool {
    if !has_cancellation(d, w) {
        return true;
    }
    let (zeta, eta) = (&c.zeta, &c.eta);
    if zeta.is_empty() && eta.is_empty() {
        return false;
    }
    let (big, small) = match c.side {
        Side::Miar => (cancelled_words(d, w), cancelled_words(&c.q, &c.w_prime)),
        Side::MiarPrime => (cancelled_words(w, d), cancelled_words(&c.w_prime, &c.q)),
    };
    let ok = |z: &Word| z.is_empty() || is_cancelled(&concat(z, &inverse(z)), &big);
    ok(zeta) && ok(eta) && is_cancelled(&concat_all(&[zeta, &inverse(eta), eta, &inverse(zeta)]), &small)
}

pub fn verify_theorem(u: &Word, v: &Word, w: &Word, d: &Word, cert: &TheoremCertificate) -> VerificationReport {
    let mut r = VerificationReport::default();
    let c = cert;
    let uv = cyc_product(u, v);
    r.push("cyclic_permutation", are_cyclic_permutations(d, &uv), format!("d = {d}, u*v = {uv}"));

    let in_rotations = |p: &Word, x: &Word| reduced_rotations(x).contains(p) || (p.is_empty() && reduce(x).is_empty());
    let from_u = in_rotations(&c.p, u) && is_rotation_of(&c.q, v);
    let from_v = in_rotations(&c.p, v) && is_rotation_of(&c.q, u);
    r.push("pairing", from_u || from_v, format!("p = {}, q = {}", c.p, c.q));
    r.push("w_prime_rotation", is_rotation_of(&c.w_prime, w), format!("w' = {}", c.w_prime));
    let qw = cyc_product(&c.q, &c.w_prime);
    r.push("f_rotation", are_cyclic_permutations(&c.f, &qw), format!("f = {}, q*w' = {qw}", c.f));

    let dw = cyc_product(d, w);
    let hfh = reduce_all(&[&c.h, &c.f, &inverse(&c.h)]);
    let big_p = cyc_product(&c.p, &hfh);
    r.push("equivalence", are_cyclic_permutations(&dw, &big_p), format!("{dw} vs {big_p}"));
    let literal = c.h.is_empty() || {
        let word = concat_all(&[&c.p, &c.h, &c.f, &inverse(&c.h)]);
        is_rotation_of(&word, &dw)
    };
    r.push("literal_concatenation", literal, format!("h = {}", c.h));
    r.push("specialization", theorem_specialization(u, v, w, d, &c.q, &c.w_prime), "");

    let valid = c.identity.check().is_ok();
    r.push("identity_valid", valid, "");
    r.push("identity_basic", valid && is_basic(&c.identity).unwrap_or(false), "");
    let relators: Vec<&Word> = c.identity.lhs.terms.iter().map(|t| &t.relator).collect();
    let relators_ok = relators == [u, v, w] || relators == [v, u, w];
    r.push("identity_relators", relators_ok, "");
    let value = eval(&c.identity.lhs);
    r.push("identity_evaluates", value == dw, format!("{value}"));
    let mut left: Vec<&Word> = c.identity.lhs.terms.iter().map(|t| &t.conjugator).collect();
    let mut right: Vec<&Word> = c.identity.rhs.terms.iter().map(|t| &t.conjugator).collect();
    left.sort();
    right.sort();
    r.push("same_conjugators", left == right, "");
    r.push("cancellation", cancellation_clause(u, v, w, d, &c.q, &c.w_prime), "");
    r
}
