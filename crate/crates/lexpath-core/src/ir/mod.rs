//! The decision-path intermediate representation.
//!
//! A [`JurisdictionPack`] is the shippable unit of law: a versioned bundle of
//! [`DecisionPath`]s for one jurisdiction. Each path is a finite criterion
//! tree whose leaves carry priors and evidence specifications, plus exactly
//! one [`Consequence`] with actions for the three possible outcomes.
//!
//! Validation ([`validate_pack`]) enforces the structural invariants and
//! returns diagnostics rather than failing fast, so authoring tools can show
//! every problem at once. The versioned pack store lives in [`store`].

pub mod canon;
pub mod store;
pub mod validate;

use chrono::{DateTime, Utc};
use serde::{Deserialize, Serialize};

pub use validate::validate_pack;

/// A versioned, validated bundle of decision paths for one jurisdiction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JurisdictionPack {
    pub pack_id: String,
    /// Jurisdiction code, e.g. an ISO country/region code like "US-CA".
    pub jurisdiction: String,
    /// Statute name plus article, e.g. "California Vehicle Code §38750(b)".
    pub source_citation: String,
    /// Semantic version of this pack; amendments create new versions.
    pub version: String,
    pub paths: Vec<DecisionPath>,
    pub created_at: DateTime<Utc>,
}

/// One legal rule compiled to a criterion tree plus its consequence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecisionPath {
    pub path_id: String,
    pub consequence: Consequence,
    pub root: CriterionNode,
    /// Byte offset ranges into the source statute text.
    pub source_spans: Vec<SourceSpan>,
}

/// Half-open byte range `[start, end)` into the statute text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceSpan {
    pub start: u64,
    pub end: u64,
}

/// How a composite criterion combines its children.
///
/// `All` encodes cumulative criteria ("if all of the following requirements
/// are met"), `Any` alternative criteria, `Not` negation. `Leaf` criteria are
/// assessed directly from evidence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CriterionKind {
    Leaf,
    All,
    Any,
    Not,
}

impl CriterionKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CriterionKind::Leaf => "LEAF",
            CriterionKind::All => "ALL",
            CriterionKind::Any => "ANY",
            CriterionKind::Not => "NOT",
        }
    }
}

/// A node in the criterion tree.
///
/// Leaves carry a [`Prior`] and zero or more [`EvidenceSpec`]s (zero for
/// manual-input criteria); composite nodes carry neither and derive their
/// status logically from their children.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriterionNode {
    pub criterion_id: String,
    /// The legal criterion text, e.g. "on public roads".
    pub text: String,
    pub kind: CriterionKind,
    #[serde(default)]
    pub children: Vec<CriterionNode>,
    #[serde(default)]
    pub evidence_specs: Vec<EvidenceSpec>,
    #[serde(default)]
    pub prior: Option<Prior>,
}

impl CriterionNode {
    /// Depth-first pre-order walk over this node and all descendants.
    pub fn walk<'a>(&'a self, visit: &mut impl FnMut(&'a CriterionNode)) {
        visit(self);
        for child in &self.children {
            child.walk(visit);
        }
    }

    /// All leaf nodes under (and including) this node, in tree order.
    pub fn leaves(&self) -> Vec<&CriterionNode> {
        let mut out = Vec::new();
        self.walk(&mut |n| {
            if n.kind == CriterionKind::Leaf {
                out.push(n);
            }
        });
        out
    }
}

/// Authored prior belief pair (P(Cr), P(¬Cr)) for a leaf criterion.
///
/// Components must lie in [0,1] and sum to 1 within 1e-9. Priors encode the
/// status of the jurisprudence on the question and are authored data, not
/// computed by this engine.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Prior {
    pub p_cr: f64,
    pub p_not_cr: f64,
}

/// The legal effect deduced once the criterion tree is evaluated, with one
/// action per tri-state outcome.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Consequence {
    pub consequence_id: String,
    pub text: String,
    pub apply_action: ActionSpec,
    pub reject_action: ActionSpec,
    pub undetermined_action: ActionSpec,
}

/// Binds a consequence outcome to a device-level action.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionSpec {
    pub action_id: String,
    /// e.g. "permit_operation", "stop_and_alert".
    pub label: String,
}

/// One evidence item a leaf criterion can be assessed from, together with its
/// likelihood row P(E|Cr) / P(E|¬Cr).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvidenceSpec {
    pub evidence_id: String,
    pub description: String,
    /// Source kinds this spec accepts; empty means any source is accepted.
    #[serde(default)]
    pub accepted_sources: Vec<SourceKind>,
    pub likelihood: LikelihoodRow,
}

/// Enumerated provenance classes for evidence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum SourceKind {
    Sensor,
    Geospatial,
    Document,
    Manual,
}

impl SourceKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            SourceKind::Sensor => "SENSOR",
            SourceKind::Geospatial => "GEOSPATIAL",
            SourceKind::Document => "DOCUMENT",
            SourceKind::Manual => "MANUAL",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "SENSOR" => Some(SourceKind::Sensor),
            "GEOSPATIAL" => Some(SourceKind::Geospatial),
            "DOCUMENT" => Some(SourceKind::Document),
            "MANUAL" => Some(SourceKind::Manual),
            _ => None,
        }
    }
}

/// Likelihood row for one evidence item, stored as pseudo-counts so that
/// count-based learning is exact.
///
/// The derived probabilities renormalize across the two hypothesis states:
/// `p_cr = count_given_cr / (count_given_cr + count_given_not_cr)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LikelihoodRow {
    pub count_given_cr: f64,
    pub count_given_not_cr: f64,
}

impl LikelihoodRow {
    pub fn new(count_given_cr: f64, count_given_not_cr: f64) -> Self {
        Self {
            count_given_cr,
            count_given_not_cr,
        }
    }

    /// Derived P(E|Cr) after row renormalization.
    pub fn p_cr(&self) -> f64 {
        self.count_given_cr / (self.count_given_cr + self.count_given_not_cr)
    }

    /// Derived P(E|¬Cr) after row renormalization.
    pub fn p_not_cr(&self) -> f64 {
        self.count_given_not_cr / (self.count_given_cr + self.count_given_not_cr)
    }

    /// A row is degenerate when both counts are zero: no probability can be
    /// derived from it.
    pub fn is_degenerate(&self) -> bool {
        self.count_given_cr == 0.0 && self.count_given_not_cr == 0.0
    }
}
