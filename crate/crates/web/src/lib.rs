//! Browser bindings. Every entry point takes and returns plain strings; the
//! result is a JSON object holding either the answer or an `"error"` field.

use cycword::twisted_assoc::{theorem_solve, verify_theorem};
use cycword::vankampen::{bouquet, fold_all, FoldOrder};
use cycword::identities::{ConjugateProduct, ConjugateTerm};
use cycword::word_core::cyc_product;
use cycword::Word;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn parse(label: &str, s: &str) -> Result<Word, String> {
    Word::parse(s.trim()).map_err(|e| format!("{label}: {e}"))
}

fn respond(r: Result<Value, String>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

/// Cyclically reduced product of two words.
#[wasm_bindgen]
pub fn cyclic_product(u: &str, v: &str) -> String {
    respond((|| {
        let (u, v) = (parse("u", u)?, parse("v", v)?);
        Ok(json!({ "product": cyc_product(&u, &v).to_string() }))
    })())
}

/// Certificate for moving `w` across the product `u * v`, with its checks.
#[wasm_bindgen]
pub fn solve_theorem(u: &str, v: &str, w: &str) -> String {
    respond((|| {
        let (u, v, w) = (parse("u", u)?, parse("v", v)?, parse("w", w)?);
        let d = cyc_product(&u, &v);
        let cert = theorem_solve(&u, &v, &w, &d).map_err(|e| e.to_string())?;
        let report = verify_theorem(&u, &v, &w, &d, &cert);
        Ok(json!({
            "d": d.to_string(),
            "certificate": cert,
            "passed": report.all_passed(),
            "checks": report.items,
        }))
    })())
}

/// Folds a product of conjugates, one `a : r` term per line, and renders
/// the resulting diagram as Graphviz DOT.
#[wasm_bindgen]
pub fn fold_to_dot(terms: &str) -> String {
    respond((|| {
        let mut list = Vec::new();
        for line in terms.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (a, r) = line.split_once(':').ok_or_else(|| format!("term {line:?} is not of the form `a : r`"))?;
            list.push(ConjugateTerm::new(&parse("conjugator", a)?, &parse("relator", r)?));
        }
        if list.is_empty() {
            return Err("no terms".to_string());
        }
        let (d, steps) = fold_all(&bouquet(&ConjugateProduct::new(list)), &FoldOrder::Canonical).map_err(|e| e.to_string())?;
        Ok(json!({
            "boundary": d.boundary_label().to_string(),
            "faces": d.faces.len(),
            "folds": steps.len(),
            "dot": d.to_dot(),
        }))
    })())
}
