//! Twisted associativity of cyclically reduced products: the case-analysis
//! lemma and the theorem, as solvers returning certificates, plus
//! verifiers that recheck every clause from scratch.

mod exhaustive;
mod lemma;
mod theorem;
pub mod trace;
mod verify;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::identities::Identity;
use crate::word_core::Word;

pub use exhaustive::{exhaustive_admits, exhaustive_solutions, ExhaustiveOptions};
pub use lemma::{lemma_case_label, main_lemma};
pub use theorem::{build_theorem_identity, theorem_solve};
pub use trace::{cancelled_words, closed_blocks, cyc_product_traced, CancellationTrace};
pub use verify::{verify_main_lemma, verify_theorem};

/// Which of the two equalities of the lemma a certificate satisfies:
/// `q w'` against `p^-1 (d*w)` or `w' q` against `(w*d) p^-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "MIAR")]
    Miar,
    #[serde(rename = "MIAR_PRIME")]
    MiarPrime,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Miar => "MIAR",
            Side::MiarPrime => "MIAR_PRIME",
        })
    }
}

/// How a certificate was obtained: read off the case analysis, or found by
/// the bounded search after the case recipe failed verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Derivation {
    Transcribed,
    Searched,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MainLemmaCertificate {
    pub p: Word,
    pub q: Word,
    pub w_prime: Word,
    pub alpha: Word,
    pub beta: Word,
    pub gamma: Word,
    pub zeta: Word,
    pub eta: Word,
    pub side: Side,
    pub case_label: String,
    pub derivation: Derivation,
    pub identity: Identity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCertificate {
    pub p: Word,
    pub q: Word,
    pub w_prime: Word,
    pub f: Word,
    pub h: Word,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case_label: Option<String>,
    pub identity: Identity,
}

impl TheoremCertificate {
    /// The tuple `(p, q, w', f, h)` that determines the certificate.
    pub fn key(&self) -> (Word, Word, Word, Word, Word) {
        (self.p.clone(), self.q.clone(), self.w_prime.clone(), self.f.clone(), self.h.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LemmaError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no certificate found for case {0}")]
    CaseDispatchFailed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("{d} is not a cyclic permutation of {target}")]
    NotACyclicPermutation { d: Word, target: Word },
    #[error("no certificate found")]
    SearchExhausted,
}

/// One named check of a verification report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Ordered list of named checks; every check is always evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct VerificationReport {
    pub items: Vec<CheckItem>,
}

impl VerificationReport {
    pub fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.items.push(CheckItem { name: name.to_string(), passed, detail: detail.into() });
    }

    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> Vec<&CheckItem> {
        self.items.iter().filter(|i| !i.passed).collect()
    }

    pub fn get(&self, name: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.name == name)
    }

    /// `(name, passed)` pairs, for comparing two reports item by item.
    pub fn verdicts(&self) -> Vec<(String, bool)> {
        self.items.iter().map(|i| (i.name.clone(), i.passed)).collect()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            let mark = if item.passed { "ok  " } else { "FAIL" };
            if item.detail.is_empty() {
                writeln!(f, "{mark} {}", item.name)?;
            } else {
                writeln!(f, "{mark} {}: {}", item.name, item.detail)?;
            }
        }
        Ok(())
    }
}
