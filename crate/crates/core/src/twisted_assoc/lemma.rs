//! Case engine for the lemma: classify `(u, v, w, d)` by where the two
//! products cancel, read `(q, w', p, side)` off the matching case, then
//! complete the conjugators and the identity.

use crate::decompose::{shirv4_ordered, shirv_decompose, Shirv4Case, ShirvCase};
use crate::identities::{is_basic, ConjugateProduct, Identity};
use crate::word_core::{
    are_cyclic_permutations, concat, concat_all, conjugator, cyc_product, cyclic_permutations,
    cyclically_reduce, inverse, reduce, reduce_all, rotation_conjugators, Word,
};

use super::trace::{cancelled_words, is_cancelled};
use super::{Derivation, LemmaError, MainLemmaCertificate, Side};

struct Plan {
    q: Word,
    w_prime: Word,
    p: Option<Word>,
    side: Side,
}

enum Step {
    Plan(Plan),
    /// The case reduces to another one after rotating `w` (and `d`).
    Recurse { u: Word, v: Word, w: Word, d: Word },
}

fn plan(q: Word, w_prime: &Word, p: &Word, side: Side) -> Option<Step> {
    Some(Step::Plan(Plan { q, w_prime: w_prime.clone(), p: Some(p.clone()), side }))
}

fn recurse(u: &Word, v: &Word, w: Word, d: Word) -> Option<Step> {
    Some(Step::Recurse { u: u.clone(), v: v.clone(), w, d })
}

/// `x[k..]`, if `k` is within bounds.
fn suf(x: &Word, k: usize) -> Option<Word> {
    (k <= x.len()).then(|| x.slice(k, x.len()))
}

/// `x` without its last `k` letters.
fn trim(x: &Word, k: usize) -> Option<Word> {
    (k <= x.len()).then(|| x.slice(0, x.len() - k))
}

fn cat(parts: &[&Word]) -> Word {
    concat_all(parts)
}

fn inv(x: &Word) -> Word {
    inverse(x)
}

fn has_cancellation(x: &Word, y: &Word) -> bool {
    cyc_product(x, y).len() < x.len() + y.len()
}

/// How `d` sits in `uv` when the product does not cancel: `d = uv` or
/// `d = u2 v u1` with `u = u1 u2`. The flag records a swap of `u` and `v`.
enum Arrangement {
    Whole,
    Split { u1: Word, u2: Word },
}

fn arrangement(u: &Word, v: &Word, d: &Word) -> Option<(bool, Word, Word, Arrangement)> {
    for (swapped, a, b) in [(false, u, v), (true, v, u)] {
        if *d == concat(a, b) {
            return Some((swapped, a.clone(), b.clone(), Arrangement::Whole));
        }
        for k in 1..a.len() {
            let (a1, a2) = (a.slice(0, k), a.slice(k, a.len()));
            if *d == cat(&[&a2, b, &a1]) {
                return Some((swapped, a.clone(), b.clone(), Arrangement::Split { u1: a1, u2: a2 }));
            }
        }
    }
    None
}

fn plain(u: &Word, v: &Word, w: &Word, d: &Word) -> (String, Option<Step>) {
    let Some((swapped, u, v, arr)) = arrangement(u, v, d) else {
        return ("plain".into(), None);
    };
    match (arr, swapped) {
        (Arrangement::Whole, s) => {
            let label = if s { "plain.C" } else { "plain.A" };
            (label.into(), plan(v.clone(), w, &u, Side::Miar))
        }
        (Arrangement::Split { u1, u2 }, s) => {
            let label = if s { "plain.D" } else { "plain.B" };
            (label.into(), plan(concat(&u2, &u1), w, &v, Side::Miar))
        }
    }
}

fn uv_only(u: &Word, v: &Word, w: &Word, d: &Word) -> (String, Option<Step>) {
    match shirv4_ordered(u, v, d) {
        Ok(Shirv4Case::A { p, r, c1, c2, .. }) => {
            let q = cat(&[&c2, &inv(&r), &inv(&p), &r, &c1]);
            ("uv.A".into(), plan(q, w, &p, Side::Miar))
        }
        Ok(Shirv4Case::B { p, b, e1, e3, .. }) => {
            let q = cat(&[&e1, &inv(&b), &e3]);
            ("uv.B".into(), plan(q, w, &p, Side::Miar))
        }
        Err(_) => ("uv".into(), None),
    }
}

fn dw_only(u: &Word, v: &Word, w: &Word, d: &Word) -> (String, Option<Step>) {
    let Some((swapped, u, v, arr)) = arrangement(u, v, d) else {
        return ("dw".into(), None);
    };
    let Ok(shape) = shirv_decompose(d, w) else {
        return ("dw.inverse".into(), None);
    };
    let g = cyc_product(d, w);
    let uv = concat(&u, &v);
    let vu = concat(&v, &u);
    let (u, v) = (&u, &v);
    let (label, step): (&str, Option<Step>) = match (&shape, &arr) {
        (ShirvCase::Case1 { u1: d1, .. }, Arrangement::Whole) => {
            if d1.len() <= u.len() {
                let step = suf(u, d1.len()).and_then(|x| plan(v.clone(), w, &concat(&x, d1), Side::Miar));
                ("1A1", step)
            } else {
                ("1A2", plan(u.clone(), w, v, Side::MiarPrime))
            }
        }
        (ShirvCase::Case1 { u1: d1, a, s }, Arrangement::Split { u1, u2 }) => {
            let big_s = cat(&[s, &g, &inv(s)]);
            let u2v = concat(u2, v);
            if d1.len() <= u2v.len() {
                let step = suf(&u2v, d1.len()).and_then(|x| {
                    if !d1.is_empty() {
                        recurse(u, v, cat(&[&inv(&x), &big_s, &inv(d1), &inv(u1)]), uv.clone())
                    } else {
                        plan(concat(u2, u1), w, v, Side::Miar)
                    }
                });
                ("1B1", step)
            } else {
                let step = suf(d1, u2v.len()).and_then(|x| {
                    if !a.is_empty() {
                        recurse(u, v, cat(&[&inv(v), &inv(u2), &inv(a), &big_s, &inv(&x)]), uv.clone())
                    } else {
                        plan(concat(u2, u1), w, v, Side::MiarPrime)
                    }
                });
                ("1B2", step)
            }
        }
        (ShirvCase::Case2 { c1: d1, t, a, .. }, Arrangement::Whole) => {
            if t.len() + d1.len() <= u.len() {
                ("2A1", plan(v.clone(), w, u, Side::Miar))
            } else if !a.is_empty() {
                ("2A2", plan(v.clone(), w, u, Side::Miar))
            } else {
                ("2A2", plan(u.clone(), w, v, Side::MiarPrime))
            }
        }
        (ShirvCase::Case2 { c1: d1, c2: w1, t, a }, Arrangement::Split { u1, u2 }) => {
            let (tl, dl) = (t.len(), t.len() + d1.len());
            let u2v = concat(u2, v);
            if dl <= u2v.len() {
                let step = suf(&u2v, dl).and_then(|x| {
                    if !t.is_empty() {
                        recurse(u, v, cat(&[&inv(&x), w1, &inv(t), &inv(u1)]), uv.clone())
                    } else {
                        plan(concat(u2, u1), w, v, Side::Miar)
                    }
                });
                ("2B1", step)
            } else if tl >= u2v.len() {
                let step = suf(t, u2v.len()).and_then(|x| {
                    if !a.is_empty() {
                        recurse(u, v, cat(&[&inv(v), &inv(u2), &inv(a), w1, &inv(&x)]), uv.clone())
                    } else {
                        plan(concat(u2, u1), w, v, Side::MiarPrime)
                    }
                });
                ("2B2", step)
            } else if tl >= u2.len() {
                let step = suf(t, u2.len()).and_then(|x| {
                    let d2 = suf(v, x.len())?;
                    let w_prime = cat(&[&inv(u2), &inv(a), w1, &inv(&x)]);
                    plan(u.clone(), &w_prime, &concat(&d2, &x), Side::Miar)
                });
                ("2B3", step)
            } else {
                ("2B4", plan(concat(u2, u1), w, v, Side::Miar))
            }
        }
        (ShirvCase::Case3 { v1: w1, s, a }, Arrangement::Whole) => {
            let (wl, ml) = (w1.len(), w1.len() + 2 * s.len() + g.len());
            if u.len() >= ml {
                ("3A1", plan(v.clone(), w, u, Side::Miar))
            } else if u.len() >= wl {
                if !a.is_empty() {
                    let step = suf(u, wl).and_then(|x1| plan(v.clone(), w, &concat(&x1, &inv(w1)), Side::Miar));
                    ("3A2", step)
                } else {
                    ("3A2", plan(u.clone(), w, v, Side::MiarPrime))
                }
            } else {
                ("3A3", plan(u.clone(), w, v, Side::MiarPrime))
            }
        }
        (ShirvCase::Case3 { v1: w1, a, .. }, Arrangement::Split { u1, u2 }) => {
            if u1.len() <= a.len() {
                let step = trim(a, u1.len()).and_then(|a1| {
                    if !w1.is_empty() {
                        recurse(u, v, cat(&[&inv(&a1), w1, &inv(u1)]), uv.clone())
                    } else {
                        plan(concat(u2, u1), w, v, Side::Miar)
                    }
                });
                ("3B1", step)
            } else if u2.len() <= w1.len() {
                let step = suf(&inv(w1), u2.len()).and_then(|v1| {
                    if !a.is_empty() {
                        recurse(u, v, cat(&[&inv(u2), &inv(a), &inv(&v1)]), vu.clone())
                    } else {
                        plan(concat(u2, u1), w, v, Side::MiarPrime)
                    }
                });
                ("3B2", step)
            } else {
                let step = (|| {
                    let x = suf(u2, w1.len())?;
                    let y = trim(u1, a.len())?;
                    plan(cat(&[&x, &y, a, &inv(w1)]), &concat(w1, &inv(a)), v, Side::Miar)
                })();
                ("3B3", step)
            }
        }
    };
    let suffix = if swapped { "/swap" } else { "" };
    (format!("dw.{label}{suffix}"), step)
}

/// Pieces of the decomposition of `d` relative to `(u, v)` when `u*v` cancels.
struct Pair {
    p: Word,
    q0: Word,
}

fn both(u: &Word, v: &Word, w: &Word, d: &Word) -> (String, Option<Step>) {
    let Ok(four) = shirv4_ordered(u, v, d) else {
        return ("both".into(), None);
    };
    let Ok(shape) = shirv_decompose(d, w) else {
        return ("both.inverse".into(), None);
    };
    let g = cyc_product(d, w);
    let pair = Pair { p: four.p().clone(), q0: four.q0().clone() };
    let (label, step) = match (&shape, &four) {
        (ShirvCase::Case1 { u1: d1, a, s }, Shirv4Case::A { r, c1, c2, .. }) => {
            let big_s = cat(&[s, &g, &inv(s)]);
            both_1a(&pair, w, d, d1, a, &big_s, r, c1, c2)
        }
        (ShirvCase::Case1 { u1: d1, a, s }, Shirv4Case::B { b, e1, e2, e3, .. }) => {
            let big_s = cat(&[s, &g, &inv(s)]);
            both_1b(&pair, d1, a, &big_s, b, e1, e2, e3)
        }
        (ShirvCase::Case2 { c1: d1, c2: w1, t, a }, Shirv4Case::A { r, c1, c2, .. }) => {
            both_2a(&pair, w, t, d1, a, w1, r, c1, c2)
        }
        (ShirvCase::Case2 { c1: d1, c2: w1, t, a }, Shirv4Case::B { b, e1, e2, e3, .. }) => {
            both_2b(&pair, w, t, d1, a, w1, b, e1, e2, e3)
        }
        (ShirvCase::Case3 { v1: w1, s, a }, Shirv4Case::A { r, c1, c2, .. }) => {
            let big_s = cat(&[s, &g, &inv(s)]);
            both_3a(&pair, w, w1, &big_s, a, r, c1, c2)
        }
        (ShirvCase::Case3 { v1: w1, s, a }, Shirv4Case::B { b, e1, e2, e3, .. }) => {
            let big_s = cat(&[s, &g, &inv(s)]);
            both_3b(&pair, w, w1, &big_s, a, b, e1, e2, e3)
        }
    };
    (format!("both.{label}"), step)
}

/// `r^-1 p^-1 r`, the rotation piece of `q0` in the A shape.
fn twisted(pair: &Pair, r: &Word) -> Word {
    cat(&[&inv(r), &inv(&pair.p), r])
}

#[allow(clippy::too_many_arguments)]
fn both_1a(
    pair: &Pair, w: &Word, d: &Word, d1: &Word, a: &Word, big_s: &Word, r: &Word, c1: &Word, c2: &Word,
) -> (&'static str, Option<Step>) {
    let rr = twisted(pair, r);
    if c2.len() >= d1.len() {
        let step = suf(c2, d1.len()).and_then(|x| {
            if !concat(d1, c1).is_empty() {
                let q = cat(&[&x, &rr, c1, d1]);
                let wp = cat(&[&inv(d1), &inv(c1), &inv(&x), big_s]);
                plan(q, &wp, &pair.p, Side::Miar)
            } else {
                plan(concat(&rr, d), w, &pair.p, Side::Miar)
            }
        });
        ("1A1", step)
    } else {
        let step = trim(c1, a.len()).and_then(|x| {
            if !concat(c2, a).is_empty() {
                let q = cat(&[&rr, &x, a, c2]);
                let wp = cat(&[&inv(c2), &inv(a), big_s, &inv(&x)]);
                plan(q, &wp, &pair.p, Side::Miar)
            } else {
                plan(concat(d, &rr), w, &pair.p, Side::MiarPrime)
            }
        });
        ("1A2", step)
    }
}

#[allow(clippy::too_many_arguments)]
fn both_1b(
    pair: &Pair, d1: &Word, a: &Word, big_s: &Word, b: &Word, e1: &Word, e2: &Word, e3: &Word,
) -> (&'static str, Option<Step>) {
    let (l1, l2, dl) = (e1.len(), e1.len() + e2.len(), d1.len());
    if l2 <= dl {
        let step = suf(d1, l2).and_then(|x| {
            let wp = cat(&[&inv(e1), &inv(a), big_s, &inv(&x), &inv(e2)]);
            plan(pair.p.clone(), &wp, &cat(&[e1, &inv(b), &x, a]), Side::MiarPrime)
        });
        ("1B1", step)
    } else if l1 <= dl {
        let step = (|| {
            let x = suf(d1, l1)?;
            let y = suf(e2, x.len())?;
            let wp = cat(&[&inv(e1), &inv(e3), &inv(&y), big_s, &inv(&x)]);
            plan(pair.q0.clone(), &wp, &cat(&[&y, b, &x]), Side::Miar)
        })();
        ("1B2", step)
    } else {
        let step = suf(e1, dl).and_then(|x| {
            if !concat(e3, d1).is_empty() {
                let q = cat(&[&x, &inv(b), e3, d1]);
                let wp = cat(&[&inv(d1), &inv(e3), &inv(e2), &inv(&x), big_s]);
                plan(q, &wp, &pair.p, Side::Miar)
            } else {
                let wp = cat(&[&inv(&x), big_s, &inv(e2)]);
                plan(pair.q0.clone(), &wp, &pair.p, Side::Miar)
            }
        });
        ("1B3", step)
    }
}

#[allow(clippy::too_many_arguments)]
fn both_2a(
    pair: &Pair, w: &Word, t: &Word, d1: &Word, a: &Word, w1: &Word, r: &Word, c1: &Word, c2: &Word,
) -> (&'static str, Option<Step>) {
    let rr = twisted(pair, r);
    let (tl, dl, cl) = (t.len(), t.len() + d1.len(), c2.len());
    if cl >= dl {
        let step = suf(c2, dl).and_then(|x| {
            if !concat(c1, t).is_empty() {
                let q = cat(&[d1, &x, &rr, c1, t]);
                let wp = cat(&[&inv(t), &inv(c1), &inv(&x), w1]);
                plan(q, &wp, &pair.p, Side::Miar)
            } else {
                plan(cat(&[&rr, d1, &x]), w, &pair.p, Side::Miar)
            }
        });
        ("2A1", step)
    } else if cl >= tl {
        let step = (|| {
            let d2 = suf(c2, tl)?;
            let d3 = suf(d1, d2.len())?;
            let q = cat(&[&d2, &rr, &d3, a, t]);
            let wp = cat(&[&inv(t), &inv(a), w1]);
            plan(q, &wp, &pair.p, Side::Miar)
        })();
        ("2A2", step)
    } else {
        let step = suf(t, cl).and_then(|x| {
            if !concat(a, c2).is_empty() {
                let q = cat(&[&rr, &x, d1, a, c2]);
                let wp = cat(&[&inv(c2), &inv(a), w1, &inv(&x)]);
                plan(q, &wp, &pair.p, Side::Miar)
            } else {
                plan(cat(&[&x, d1, &rr]), w, &pair.p, Side::MiarPrime)
            }
        });
        ("2A3", step)
    }
}

#[allow(clippy::too_many_arguments)]
fn both_2b(
    pair: &Pair, w: &Word, t: &Word, d1: &Word, a: &Word, w1: &Word, b: &Word, e1: &Word, e2: &Word, e3: &Word,
) -> (&'static str, Option<Step>) {
    let (tl, dl) = (t.len(), t.len() + d1.len());
    let (l1, l2) = (e1.len(), e1.len() + e2.len());
    if l1 >= dl {
        let step = if e1.is_empty() {
            plan(pair.q0.clone(), w, &pair.p, Side::Miar)
        } else {
            suf(e1, dl).and_then(|x| {
                let wp = cat(&[&inv(&x), w1, &inv(t), &inv(e3), &inv(e2)]);
                plan(pair.p.clone(), &wp, &pair.q0, Side::MiarPrime)
            })
        };
        ("2B1", step)
    } else if tl <= l1 && l1 <= dl && dl <= l2 {
        let step = (|| {
            let d2 = suf(e1, tl)?;
            let d3 = suf(d1, d2.len())?;
            let a1 = suf(e2, d3.len())?;
            if !concat(e3, t).is_empty() {
                let q = cat(&[&d2, &inv(b), e3, t]);
                let wp = cat(&[&inv(t), &inv(e3), &inv(&a1), w1]);
                plan(q, &wp, &pair.p, Side::Miar)
            } else {
                plan(cat(&[b, &d3, &a1]), w, &pair.q0, Side::Miar)
            }
        })();
        ("2B2", step)
    } else if tl <= l1 && l2 <= dl {
        let step = (|| {
            let d2 = suf(e1, tl)?;
            let d3 = suf(d1, d2.len() + e2.len())?;
            let q = cat(&[&d2, &inv(b), &d3, a, t]);
            let wp = cat(&[&inv(t), &inv(a), w1]);
            plan(q, &wp, &pair.p, Side::Miar)
        })();
        ("2B3", step)
    } else if l1 <= tl && dl <= l2 {
        let step = (|| {
            let t1 = suf(t, l1)?;
            let a1 = suf(e2, t1.len() + d1.len())?;
            let wp = cat(&[&inv(e1), &inv(e3), &inv(&a1), w1, &inv(&t1)]);
            plan(pair.q0.clone(), &wp, &cat(&[d1, &a1, b, &t1]), Side::Miar)
        })();
        ("2B4", step)
    } else if l1 <= tl && tl <= l2 && l2 <= dl {
        let step = (|| {
            let x = suf(t, l1)?;
            let d2 = suf(e2, x.len())?;
            if !concat(e1, a).is_empty() {
                let wp = cat(&[&inv(e1), &inv(a), w1, &inv(&x)]);
                plan(pair.q0.clone(), &wp, &cat(&[&d2, b, &x]), Side::Miar)
            } else {
                plan(pair.p.clone(), w, &pair.q0, Side::MiarPrime)
            }
        })();
        ("2B5", step)
    } else {
        let step = suf(t, l2).and_then(|x| {
            let wp = cat(&[&inv(e1), &inv(a), w1, &inv(&x), &inv(e2)]);
            plan(pair.p.clone(), &wp, &pair.q0, Side::MiarPrime)
        });
        ("2B6", step)
    }
}

#[allow(clippy::too_many_arguments)]
fn both_3a(
    pair: &Pair, w: &Word, w1: &Word, big_s: &Word, a: &Word, r: &Word, c1: &Word, c2: &Word,
) -> (&'static str, Option<Step>) {
    let rr = twisted(pair, r);
    let (wl, ml, cl) = (w1.len(), w1.len() + big_s.len(), c2.len());
    if cl >= ml {
        let step = suf(c2, ml).and_then(|a1| {
            if !concat(c1, w1).is_empty() {
                let q = cat(&[big_s, &a1, &rr, c1, &inv(w1)]);
                let wp = cat(&[w1, &inv(c1), &inv(&a1)]);
                plan(q, &wp, &pair.p, Side::Miar)
            } else {
                plan(cat(&[&rr, big_s, &inv(w)]), w, &pair.p, Side::Miar)
            }
        });
        ("3A1", step)
    } else if cl >= wl {
        let step = (|| {
            let x = suf(c2, wl)?;
            let y = suf(big_s, x.len())?;
            let q = cat(&[&x, &rr, &y, a, &inv(w1)]);
            plan(q, &concat(w1, &inv(a)), &pair.p, Side::Miar)
        })();
        ("3A2", step)
    } else {
        let step = suf(&inv(w1), cl).and_then(|x| {
            if !concat(a, c2).is_empty() {
                let q = cat(&[&rr, &x, big_s, a, c2]);
                let wp = cat(&[&inv(c2), &inv(a), &inv(&x)]);
                plan(q, &wp, &pair.p, Side::Miar)
            } else {
                plan(cat(&[&inv(w), big_s, &rr]), w, &pair.p, Side::MiarPrime)
            }
        });
        ("3A3", step)
    }
}

#[allow(clippy::too_many_arguments)]
fn both_3b(
    pair: &Pair, w: &Word, w1: &Word, big_s: &Word, a: &Word, b: &Word, e1: &Word, e2: &Word, e3: &Word,
) -> (&'static str, Option<Step>) {
    let (wl, ml) = (w1.len(), w1.len() + big_s.len());
    let (l1, l2) = (e1.len(), e1.len() + e2.len());
    let w1i = inv(w1);
    if l2 <= wl {
        let step = suf(&w1i, l2).and_then(|x| {
            let wp = cat(&[&inv(e1), &inv(a), &inv(&x), &inv(e2)]);
            plan(pair.p.clone(), &wp, &pair.q0, Side::MiarPrime)
        });
        ("3B1", step)
    } else if l1 <= wl && l2 <= ml {
        let step = (|| {
            let x = suf(&w1i, l1)?;
            let y = suf(e2, x.len())?;
            let z = suf(big_s, y.len())?;
            if !concat(a, e1).is_empty() {
                let wp = cat(&[&inv(e1), &inv(a), &inv(&x)]);
                plan(pair.q0.clone(), &wp, &pair.p, Side::Miar)
            } else {
                plan(cat(&[&y, b, &inv(w)]), w, &concat(&z, &inv(b)), Side::Miar)
            }
        })();
        ("3B2", step)
    } else if l1 <= wl {
        let step = (|| {
            let x = suf(&w1i, l1)?;
            let y = suf(e2, x.len() + big_s.len())?;
            let wp = cat(&[&inv(e1), &inv(e3), &inv(&y), &inv(&x)]);
            plan(pair.q0.clone(), &wp, &pair.p, Side::Miar)
        })();
        ("3B3", step)
    } else if l2 <= ml {
        let step = (|| {
            let x = suf(e1, wl)?;
            let y = suf(big_s, x.len() + e2.len())?;
            let q = cat(&[&x, &inv(b), &y, a, &w1i]);
            plan(q, &concat(w1, &inv(a)), &pair.p, Side::Miar)
        })();
        ("3B4", step)
    } else if l1 <= ml {
        let step = (|| {
            let x = suf(e1, wl)?;
            let y = suf(big_s, x.len())?;
            let a1 = suf(e2, y.len())?;
            if !concat(&inv(e3), w1).is_empty() {
                let q = cat(&[&x, &inv(b), e3, &w1i]);
                let wp = cat(&[w1, &inv(e3), &inv(&a1)]);
                plan(q, &wp, &pair.p, Side::Miar)
            } else {
                plan(cat(&[b, &y, &inv(w)]), w, &concat(&x, &inv(b)), Side::Miar)
            }
        })();
        ("3B5", step)
    } else {
        let step = suf(e1, ml).and_then(|a1| {
            let wp = cat(&[&inv(e2), &inv(&a1), w1, &inv(e3)]);
            plan(concat(b, e2), &wp, &cat(&[&w1i, big_s, &a1, &inv(b), e3]), Side::Miar)
        });
        ("3B6", step)
    }
}

fn dispatch(u: &Word, v: &Word, w: &Word, d: &Word, depth: usize) -> (String, Option<Plan>) {
    let (label, step) = match (has_cancellation(u, v), has_cancellation(d, w)) {
        (false, false) => plain(u, v, w, d),
        (true, false) => uv_only(u, v, w, d),
        (false, true) => dw_only(u, v, w, d),
        (true, true) => both(u, v, w, d),
    };
    match step {
        Some(Step::Plan(p)) => (label, Some(p)),
        Some(Step::Recurse { u, v, w, d }) if depth < 3 && w.is_reduced() => {
            let (sub, p) = dispatch(&u, &v, &w, &d, depth + 1);
            (format!("{label}>{sub}"), p)
        }
        _ => (label, None),
    }
}

/// The case label the engine dispatches to, without completing it.
pub fn lemma_case_label(u: &Word, v: &Word, w: &Word, d: &Word) -> String {
    dispatch(u, v, w, d, 0).0
}

/// `sigma` with `x*y = reduce(sigma x y sigma^-1)`.
fn product_conjugator(x: &Word, y: &Word) -> Word {
    inverse(&cyclically_reduce(&concat(x, y)).0)
}

/// Words `z` such that some rotation of a cancelled block of `x*y` reads `z z^-1`.
fn halves(x: &Word, y: &Word) -> Vec<Word> {
    let mut out: Vec<Word> = Vec::new();
    for block in cancelled_words(x, y) {
        let k = block.len() / 2;
        for (_, rot) in cyclic_permutations(&block) {
            let z = rot.slice(0, k);
            if rot.slice(k, rot.len()) == inverse(&z) && !out.contains(&z) {
                out.push(z);
            }
        }
    }
    out.sort_by_key(|z| z.len());
    out
}

/// Words `zeta`, `eta`, not both empty, with `zeta zeta^-1` and `eta eta^-1`
/// cancelled in `d*w` (or `w*d`) and `zeta eta^-1 eta zeta^-1` cancelled in
/// `q*w'` (or `w'*q`). Both empty when `d*w` does not cancel.
pub(crate) fn zeta_eta(d: &Word, w: &Word, q: &Word, w_prime: &Word, side: Side) -> Option<(Word, Word)> {
    if !has_cancellation(d, w) {
        return Some((Word::empty(), Word::empty()));
    }
    let ((x, y), (qx, qy)) = match side {
        Side::Miar => ((d, w), (q, w_prime)),
        Side::MiarPrime => ((w, d), (w_prime, q)),
    };
    let candidates = halves(x, y);
    let small = cancelled_words(qx, qy);
    let one = Word::empty();
    for z in &candidates {
        if is_cancelled(&concat(z, &inverse(z)), &small) {
            return Some((z.clone(), one));
        }
    }
    for e in &candidates {
        if is_cancelled(&concat(&inverse(e), e), &small) {
            return Some((one, e.clone()));
        }
    }
    for z in &candidates {
        for e in &candidates {
            if is_cancelled(&cat(&[z, &inverse(e), e, &inverse(z)]), &small) {
                return Some((z.clone(), e.clone()));
            }
        }
    }
    None
}

/// The clauses that tie `w'` and `q` to the shape of `d`.
pub(crate) fn specialization_holds(u: &Word, v: &Word, w: &Word, d: &Word, q: &Word, w_prime: &Word) -> bool {
    let starred = *d == cyc_product(u, v) || *d == cyc_product(v, u);
    let literal = *d == concat(u, v) || *d == concat(v, u);
    (!starred || w_prime == w) && (!literal || (w_prime == w && (q == u || q == v)))
}

/// The identity read off the side equality, with relators `p`, `q`, `w`.
#[allow(clippy::too_many_arguments)]
fn lemma_identity(
    p: &Word, q: &Word, w: &Word, alpha: &Word, beta: &Word, sigma: &Word, a: &Word, b: &Word, mu: &Word,
    side: Side,
) -> Option<Identity> {
    let alpha_mu = concat(alpha, mu);
    let sa = concat(sigma, a);
    let sb = concat(sigma, b);
    let pi = inverse(p);
    let (lhs, rhs) = match side {
        Side::Miar => (
            ConjugateProduct::from_pairs(&[(alpha, q), (&alpha_mu, w)]),
            ConjugateProduct::from_pairs(&[(beta, &pi), (&sa, p), (&sb, q), (sigma, w)]),
        ),
        Side::MiarPrime => (
            ConjugateProduct::from_pairs(&[(&alpha_mu, w), (alpha, q)]),
            ConjugateProduct::from_pairs(&[(sigma, w), (&sb, q), (&sa, p), (beta, &pi)]),
        ),
    };
    Identity::new(lhs, rhs).ok()
}

/// Completes `(q, w', side)` with a partner `p`, the conjugators and the identity.
fn complete(
    u: &Word, v: &Word, w: &Word, d: &Word, plan: &Plan, label: &str, derivation: Derivation,
) -> Option<MainLemmaCertificate> {
    let (q, w_prime, side) = (&plan.q, &plan.w_prime, plan.side);
    if !are_cyclic_permutations(w_prime, w) || !specialization_holds(u, v, w, d, q, w_prime) {
        return None;
    }
    let mut partners: Vec<&Word> = Vec::new();
    if are_cyclic_permutations(q, v) {
        partners.push(u);
    }
    if are_cyclic_permutations(q, u) {
        partners.push(v);
    }
    let mut ps: Vec<Word> = Vec::new();
    if let Some(p) = &plan.p {
        if partners.iter().any(|x| are_cyclic_permutations(p, x)) {
            ps.push(p.clone());
        }
    }
    for x in &partners {
        if !ps.contains(x) {
            ps.push((*x).clone());
        }
    }
    if ps.is_empty() {
        return None;
    }
    let (zeta, eta) = zeta_eta(d, w, q, w_prime, side)?;
    let sigma = match side {
        Side::Miar => product_conjugator(d, w),
        Side::MiarPrime => product_conjugator(w, d),
    };
    let qi = inverse(q);
    for p in &ps {
        for mu in rotation_conjugators(w, w_prime) {
            let b = reduce(&inverse(&mu));
            let target = match side {
                Side::Miar => reduce_all(&[d, &b, &qi, &inverse(&b)]),
                Side::MiarPrime => reduce_all(&[&b, &qi, &inverse(&b), d]),
            };
            let Some(a) = conjugator(p, &target) else {
                continue;
            };
            let alpha = reduce(&concat(&sigma, &b));
            let beta = reduce(&concat(&sigma, &a));
            let Some(identity) = lemma_identity(p, q, w, &alpha, &beta, &sigma, &a, &b, &mu, side) else {
                continue;
            };
            if !is_basic(&identity).unwrap_or(false) {
                continue;
            }
            return Some(MainLemmaCertificate {
                p: p.clone(),
                q: q.clone(),
                w_prime: w_prime.clone(),
                alpha,
                beta,
                gamma: Word::empty(),
                zeta,
                eta,
                side,
                case_label: label.to_string(),
                derivation,
                identity,
            });
        }
    }
    None
}

fn rotations_first(preferred: &[&Word], sources: &[&Word]) -> Vec<Word> {
    let mut out: Vec<Word> = preferred.iter().map(|x| (*x).clone()).collect();
    for s in sources {
        for (_, rot) in cyclic_permutations(s) {
            if !out.contains(&rot) {
                out.push(rot);
            }
        }
    }
    out.dedup();
    out
}

fn search(u: &Word, v: &Word, w: &Word, d: &Word, label: &str) -> Option<MainLemmaCertificate> {
    let qs = rotations_first(&[u, v], &[u, v]);
    let ws = rotations_first(&[w], &[w]);
    for w_prime in &ws {
        for q in &qs {
            for side in [Side::Miar, Side::MiarPrime] {
                let plan = Plan { q: q.clone(), w_prime: w_prime.clone(), p: None, side };
                if let Some(cert) = complete(u, v, w, d, &plan, label, Derivation::Searched) {
                    return Some(cert);
                }
            }
        }
    }
    None
}

pub fn main_lemma(u: &Word, v: &Word, w: &Word, d: &Word) -> Result<MainLemmaCertificate, LemmaError> {
    for (name, x) in [("u", u), ("v", v), ("w", w)] {
        if x.is_empty() || !x.is_reduced() {
            return Err(LemmaError::PreconditionViolated(format!("{name} = {x} must be reduced and nonempty")));
        }
    }
    if d.is_empty() {
        return Err(LemmaError::PreconditionViolated("d must not be 1".into()));
    }
    if !are_cyclic_permutations(d, &cyc_product(u, v)) {
        return Err(LemmaError::PreconditionViolated(format!("{d} is not a cyclic permutation of u*v")));
    }
    let (label, plan) = dispatch(u, v, w, d, 0);
    if let Some(plan) = plan {
        if let Some(cert) = complete(u, v, w, d, &plan, &label, Derivation::Transcribed) {
            return Ok(cert);
        }
    }
    search(u, v, w, d, &label).ok_or(LemmaError::CaseDispatchFailed(label))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word_core::w;

    #[test]
    fn plain_case_a() {
        let c = main_lemma(&w("x y"), &w("z"), &w("t"), &w("x y z")).unwrap();
        assert_eq!(c.case_label, "plain.A");
        assert_eq!((c.q.clone(), c.w_prime.clone(), c.p.clone()), (w("z"), w("t"), w("x y")));
        assert_eq!((c.alpha.clone(), c.beta.clone(), c.gamma.clone()), (w("1"), w("1"), w("1")));
        assert_eq!(c.derivation, Derivation::Transcribed);
    }

    #[test]
    fn rejects_trivial_d() {
        assert!(main_lemma(&w("x"), &w("x^-1 y"), &w("z"), &w("1")).is_err());
    }
}
