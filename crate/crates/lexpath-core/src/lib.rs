//! Compliance reasoning engine for machine-executable legal rules.
//!
//! The library turns statutes into *decision paths* (evidence → criterion →
//! consequence), bundles them as versioned jurisdiction packs, and evaluates
//! them against observed evidence with sequential Bayesian updating plus
//! three-valued tree logic. Every inference step lands in a hash-chained,
//! tamper-evident trace from which human-readable explanations are rendered.
//!
//! Pipeline stages and the modules that own them:
//!
//! - [`extract`] — prompt an external language model to draft decision paths
//!   from statute text (record/replay fixtures keep this deterministic).
//! - [`dsl`] — parse/serialize the human-authorable `.lexpath` format and the
//!   canonical JSON form into the IR.
//! - [`ir`] — the decision-path IR, pack validation, and the versioned,
//!   immutable pack store.
//! - [`evidence`] — timestamped, source-attributed observations and their
//!   routing to criteria.
//! - [`infer`] — Bayesian belief updates, count-based likelihood learning,
//!   Kleene tree evaluation, decision policies, and full sessions.
//! - [`trace`] — the append-only audit log and explanation renderer.

pub mod diag;
pub mod dsl;
pub mod evidence;
pub mod extract;
pub mod infer;
pub mod ir;
pub mod trace;

pub use diag::{Diagnostic, Location, Severity};
