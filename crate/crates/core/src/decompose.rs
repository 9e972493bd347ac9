//! Cancellation structure of `u v`, of cyclic permutations of `u * v`, and
//! the special product solver used when one of the theorem inputs is trivial.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word_core::{
    are_cyclic_permutations, concat, concat_all, cyc_product, cyc_reduced, cyclic_permutations,
    inverse, reduce, reduce_all, Word,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("input word {0} is not reduced")]
    NotReduced(Word),
    #[error("inputs are mutually inverse")]
    InverseInputs,
    #[error("{d} is not a cyclic permutation of {target}")]
    NotACyclicPermutation { d: Word, target: Word },
    #[error("search exhausted for u = {u}, w = {w}")]
    SearchExhausted { u: Word, w: Word },
}

/// Shape of the reduced product `u v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum ShirvCase {
    /// `u = u1 a`, `v = a^-1 s (u*v) s^-1 u1^-1`.
    #[serde(rename = "CASE1")]
    Case1 { u1: Word, a: Word, s: Word },
    /// `u = t c1 a`, `v = a^-1 c2 t^-1`, `u*v = c1 c2`.
    #[serde(rename = "CASE2")]
    Case2 { c1: Word, c2: Word, t: Word, a: Word },
    /// `u = v1^-1 s (u*v) s^-1 a`, `v = a^-1 v1`.
    #[serde(rename = "CASE3")]
    Case3 { v1: Word, s: Word, a: Word },
}

impl ShirvCase {
    pub fn tag(&self) -> &'static str {
        match self {
            ShirvCase::Case1 { .. } => "CASE1",
            ShirvCase::Case2 { .. } => "CASE2",
            ShirvCase::Case3 { .. } => "CASE3",
        }
    }

    /// Checks every equation of the tag letter by letter.
    pub fn holds(&self, u: &Word, v: &Word) -> bool {
        let c = cyc_product(u, v);
        let ruv = reduce_all(&[u, v]);
        match self {
            ShirvCase::Case1 { u1, a, s } => {
                *u == concat(u1, a)
                    && *v == concat_all(&[&inverse(a), s, &c, &inverse(s), &inverse(u1)])
                    && ruv == concat_all(&[u1, s, &c, &inverse(s), &inverse(u1)])
            }
            ShirvCase::Case2 { c1, c2, t, a } => {
                !c1.is_empty()
                    && !c2.is_empty()
                    && c == concat(c1, c2)
                    && *u == concat_all(&[t, c1, a])
                    && *v == concat_all(&[&inverse(a), c2, &inverse(t)])
                    && ruv == concat_all(&[t, c1, c2, &inverse(t)])
                    && reduce_all(&[v, u]) == concat_all(&[&inverse(a), c2, c1, a])
                    && cyc_product(v, u) == concat(c2, c1)
            }
            ShirvCase::Case3 { v1, s, a } => {
                *u == concat_all(&[&inverse(v1), s, &c, &inverse(s), a])
                    && *v == concat(&inverse(a), v1)
                    && ruv == concat_all(&[&inverse(v1), s, &c, &inverse(s), v1])
            }
        }
    }
}

fn check_pair(u: &Word, v: &Word) -> Result<(), DecomposeError> {
    for x in [u, v] {
        if !x.is_reduced() {
            return Err(DecomposeError::NotReduced(x.clone()));
        }
    }
    if reduce_all(&[u, v]).is_empty() {
        return Err(DecomposeError::InverseInputs);
    }
    Ok(())
}

/// Length of the longest suffix of `u` whose inverse is a prefix of `v`.
fn cancelled_length(u: &Word, v: &Word) -> usize {
    let (ul, vl) = (u.letters(), v.letters());
    let mut k = 0;
    while k < ul.len() && k < vl.len() && ul[ul.len() - 1 - k].cancels(vl[k]) {
        k += 1;
    }
    k
}

pub fn shirv_decompose(u: &Word, v: &Word) -> Result<ShirvCase, DecomposeError> {
    check_pair(u, v)?;
    let k = cancelled_length(u, v);
    let u_rest = u.slice(0, u.len() - k);
    let v_rest = v.slice(k, v.len());
    let a = u.slice(u.len() - k, u.len());
    let whole = concat(&u_rest, &v_rest);
    let m = (whole.len() - cyc_reduced(&whole).len()) / 2;
    let peel = whole.slice(0, m);

    let mut candidates = Vec::new();
    if m < u_rest.len() && m < v_rest.len() {
        candidates.push(ShirvCase::Case2 {
            c1: u_rest.slice(m, u_rest.len()),
            c2: v_rest.slice(0, v_rest.len() - m),
            t: peel.clone(),
            a: a.clone(),
        });
    }
    if m >= u_rest.len() {
        candidates.push(ShirvCase::Case1 {
            u1: u_rest.clone(),
            a: a.clone(),
            s: peel.slice(u_rest.len(), m),
        });
    }
    if m >= v_rest.len() {
        candidates.push(ShirvCase::Case3 {
            v1: v_rest.clone(),
            s: peel.slice(v_rest.len(), m),
            a,
        });
    }
    let found = candidates.into_iter().find(|c| c.holds(u, v));
    Ok(found.expect("maximal cancellation analysis always yields a valid case"))
}

/// A pair of rotations `p`, `q0` of the inputs exhibiting a cyclic
/// permutation `d` of `u * v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum Shirv4Case {
    /// `q0 = p^-1 r c1 c2 r^-1`, `p*q0 = c1 c2`, `d = c2 c1`.
    A { p: Word, q0: Word, r: Word, c1: Word, c2: Word },
    /// `p = e2 b`, `q0 = b^-1 e3 e1`, `d = e1 e2 e3`.
    B { p: Word, q0: Word, b: Word, e1: Word, e2: Word, e3: Word },
}

impl Shirv4Case {
    pub fn tag(&self) -> &'static str {
        match self {
            Shirv4Case::A { .. } => "A",
            Shirv4Case::B { .. } => "B",
        }
    }

    pub fn p(&self) -> &Word {
        match self {
            Shirv4Case::A { p, .. } | Shirv4Case::B { p, .. } => p,
        }
    }

    pub fn q0(&self) -> &Word {
        match self {
            Shirv4Case::A { q0, .. } | Shirv4Case::B { q0, .. } => q0,
        }
    }

    /// Checks the pairing with `(u, v)` and the equations of the tag. When
    /// `d = u*v` the split is pinned: `c2 = 1` or `e1 = 1`.
    pub fn holds(&self, u: &Word, v: &Word, d: &Word) -> bool {
        let (p, q0) = (self.p(), self.q0());
        let forward = are_cyclic_permutations(p, u) && are_cyclic_permutations(q0, v);
        let backward = are_cyclic_permutations(p, v) && are_cyclic_permutations(q0, u);
        let uv = cyc_product(u, v);
        let pinned = match self {
            Shirv4Case::A { c2, .. } => c2.is_empty(),
            Shirv4Case::B { e1, .. } => e1.is_empty(),
        };
        let order_ok = (forward || backward) && (*d != uv || pinned);
        let tag_ok = match self {
            Shirv4Case::A { r, c1, c2, .. } => {
                *q0 == concat_all(&[&inverse(p), r, c1, c2, &inverse(r)])
                    && cyc_product(p, q0) == concat(c1, c2)
                    && *d == concat(c2, c1)
                    && are_cyclic_permutations(&cyc_product(p, q0), &uv)
            }
            Shirv4Case::B { b, e1, e2, e3, .. } => {
                *p == concat(e2, b)
                    && *q0 == concat_all(&[&inverse(b), e3, e1])
                    && *d == concat_all(&[e1, e2, e3])
                    && !e2.is_empty()
                    && !concat(e3, e1).is_empty()
                    && are_cyclic_permutations(&cyc_product(p, q0), &uv)
            }
        };
        order_ok && tag_ok
    }
}

fn shirv4_case_a(p: &Word, q0: &Word, d: &Word, uv: &Word) -> Option<Shirv4Case> {
    if q0.len() < p.len() || !q0.starts_with(&inverse(p)) {
        return None;
    }
    let rest = q0.slice(p.len(), q0.len());
    let x = cyc_product(p, q0);
    if !are_cyclic_permutations(&x, uv) || rest.len() < x.len() || (rest.len() - x.len()) % 2 != 0 {
        return None;
    }
    let r = rest.slice(0, (rest.len() - x.len()) / 2);
    if rest != concat_all(&[&r, &x, &inverse(&r)]) {
        return None;
    }
    let n = x.len();
    let splits = std::iter::once(n).chain(if d == uv { 1..1 } else { 1..n });
    for k in splits {
        let (c1, c2) = (x.slice(0, k), x.slice(k, n));
        if concat(&c2, &c1) == *d {
            return Some(Shirv4Case::A { p: p.clone(), q0: q0.clone(), r: r.clone(), c1, c2 });
        }
    }
    None
}

fn shirv4_case_b(p: &Word, q0: &Word, d: &Word, uv: &Word) -> Option<Shirv4Case> {
    if !are_cyclic_permutations(&cyc_product(p, q0), uv) {
        return None;
    }
    for lb in 0..p.len() {
        let b = p.slice(p.len() - lb, p.len());
        let e2 = p.slice(0, p.len() - lb);
        if q0.len() <= lb || !q0.starts_with(&inverse(&b)) {
            continue;
        }
        let rest = q0.slice(lb, q0.len());
        let max_j = if d == uv { 0 } else { rest.len() };
        for j in 0..=max_j {
            let e1 = rest.slice(rest.len() - j, rest.len());
            let e3 = rest.slice(0, rest.len() - j);
            if concat_all(&[&e1, &e2, &e3]) == *d {
                return Some(Shirv4Case::B { p: p.clone(), q0: q0.clone(), b, e1, e2, e3 });
            }
        }
    }
    None
}

pub fn shirv4_decompose(u: &Word, v: &Word, d: &Word) -> Result<Shirv4Case, DecomposeError> {
    check_pair(u, v)?;
    let uv = cyc_product(u, v);
    if !are_cyclic_permutations(&uv, d) {
        return Err(DecomposeError::NotACyclicPermutation { d: d.clone(), target: uv });
    }
    let pinned = *d == uv;
    Ok(shirv4_search(u, v, d, [(u, v), (v, u)], pinned))
}

/// Like `shirv4_decompose`, but when `d = v*u` the pair `(v, u)` is tried
/// first and the split is pinned as well, so that `d` is read as a product
/// in the pairing's order whenever possible.
pub(crate) fn shirv4_ordered(u: &Word, v: &Word, d: &Word) -> Result<Shirv4Case, DecomposeError> {
    check_pair(u, v)?;
    let uv = cyc_product(u, v);
    if !are_cyclic_permutations(&uv, d) {
        return Err(DecomposeError::NotACyclicPermutation { d: d.clone(), target: uv });
    }
    let vu = cyc_product(v, u);
    let orders = if *d == vu && *d != uv { [(v, u), (u, v)] } else { [(u, v), (v, u)] };
    Ok(shirv4_search(u, v, d, orders, *d == uv || *d == vu))
}

fn shirv4_search(u: &Word, v: &Word, d: &Word, orders: [(&Word, &Word); 2], pinned: bool) -> Shirv4Case {
    // A pinned pass passes `d` itself as the product, forcing `c2 = 1` or
    // `e1 = 1`; it runs over both orders before the unrestricted pass.
    let passes: &[bool] = if pinned { &[true, false] } else { &[false] };
    for (pin, (first, second)) in passes.iter().flat_map(|&pin| orders.iter().map(move |o| (pin, *o))) {
        let product = if pin { d.clone() } else { cyc_product(first, second) };
        for (_, p) in cyclic_permutations(first) {
            for (_, q0) in cyclic_permutations(second) {
                let hit = shirv4_case_a(&p, &q0, d, &product).or_else(|| shirv4_case_b(&p, &q0, d, &product));
                if let Some(case) = hit {
                    debug_assert!(case.holds(u, v, d));
                    return case;
                }
            }
        }
    }
    unreachable!("a cyclic permutation of u*v always admits a decomposition")
}

/// Witnesses for `cyc(w) ~ u' * (h f h^-1)` and `cyc(w) ~ (h g h^-1) * u''`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialCaseSolution {
    pub u_prime: Word,
    pub u_second: Word,
    pub h: Word,
    pub f: Word,
    pub g: Word,
}

impl SpecialCaseSolution {
    pub fn holds(&self, u: &Word, w: &Word) -> bool {
        let target = cyc_reduced(w);
        let rotations = reduced_rotations(u);
        let hf = reduce_all(&[&self.h, &self.f, &inverse(&self.h)]);
        let hg = reduce_all(&[&self.h, &self.g, &inverse(&self.h)]);
        let base = self.f == cyc_product(&inverse(u), w)
            && self.g == cyc_product(w, &inverse(u))
            && rotations.contains(&self.u_prime)
            && rotations.contains(&self.u_second)
            && are_cyclic_permutations(&target, &cyc_product(&self.u_prime, &hf))
            && are_cyclic_permutations(&target, &cyc_product(&hg, &self.u_second));
        let literal = self.h.is_empty()
            || (self.f == self.g
                && self.u_prime == self.u_second
                && cyc_product(&self.u_prime, &hf)
                    == concat_all(&[&self.u_prime, &self.h, &self.f, &inverse(&self.h)]));
        base && literal
    }
}

/// Reduced forms of the cyclic permutations of `u`, deduplicated, in index order.
pub fn reduced_rotations(u: &Word) -> Vec<Word> {
    let mut out: Vec<Word> = Vec::new();
    for (_, rot) in cyclic_permutations(u) {
        let r = reduce(&rot);
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

pub fn solve_special(u: &Word, w: &Word) -> Result<SpecialCaseSolution, DecomposeError> {
    let target = cyc_reduced(w);
    let f = cyc_product(&inverse(u), w);
    let g = cyc_product(w, &inverse(u));
    let rotations = reduced_rotations(u);

    let left = rotations.iter().find(|up| are_cyclic_permutations(&target, &cyc_product(up, &f)));
    let right = rotations.iter().find(|us| are_cyclic_permutations(&target, &cyc_product(&g, us)));
    if let (Some(up), Some(us)) = (left, right) {
        return Ok(SpecialCaseSolution {
            u_prime: up.clone(),
            u_second: us.clone(),
            h: Word::empty(),
            f,
            g,
        });
    }

    if f == g {
        for (_, c) in cyclic_permutations(&target) {
            for up in &rotations {
                if !c.starts_with(up) || c.len() <= up.len() + f.len() {
                    continue;
                }
                let rem = c.len() - up.len() - f.len();
                if rem % 2 != 0 {
                    continue;
                }
                let h = c.slice(up.len(), up.len() + rem / 2);
                if c != concat_all(&[up, &h, &f, &inverse(&h)]) {
                    continue;
                }
                let sol = SpecialCaseSolution {
                    u_prime: up.clone(),
                    u_second: up.clone(),
                    h,
                    f: f.clone(),
                    g: g.clone(),
                };
                if sol.holds(u, w) {
                    return Ok(sol);
                }
            }
        }
    }
    Err(DecomposeError::SearchExhausted { u: u.clone(), w: w.clone() })
}
