//! Structural validation of jurisdiction packs.
//!
//! `validate_pack` returns an empty list iff every IR invariant holds. Each
//! diagnostic carries a JSON-pointer location into the canonical pack layout
//! so authoring tools can point at the offending construct.

use std::collections::HashMap;

use crate::diag::{Diagnostic, Location};
use crate::ir::{CriterionKind, CriterionNode, JurisdictionPack};

/// Tolerance for a prior pair summing to 1.
pub const PRIOR_SUM_TOLERANCE: f64 = 1e-9;

/// Check every pack invariant; an empty result means the pack is valid.
///
/// The criterion tree is finite and acyclic by construction (nodes own their
/// children), so only arity, uniqueness, and numeric constraints are checked.
pub fn validate_pack(pack: &JurisdictionPack) -> Vec<Diagnostic> {
    let mut diags = Vec::new();
    let err = |ptr: String, msg: String| Diagnostic::error(Location::Pointer(ptr), msg);

    if pack.pack_id.trim().is_empty() {
        diags.push(err("/pack_id".into(), "pack_id must be non-empty".into()));
    }
    if pack.jurisdiction.trim().is_empty() {
        diags.push(err(
            "/jurisdiction".into(),
            "jurisdiction must be non-empty".into(),
        ));
    }
    if let Err(e) = semver::Version::parse(&pack.version) {
        diags.push(err(
            "/version".into(),
            format!("version `{}` is not a semantic version: {e}", pack.version),
        ));
    }

    let mut path_ids: HashMap<&str, usize> = HashMap::new();
    let mut criterion_ids: HashMap<&str, String> = HashMap::new();
    let mut evidence_ids: HashMap<&str, String> = HashMap::new();

    for (pi, path) in pack.paths.iter().enumerate() {
        let base = format!("/paths/{pi}");
        if path.path_id.trim().is_empty() {
            diags.push(err(format!("{base}/path_id"), "path_id must be non-empty".into()));
        }
        if let Some(prev) = path_ids.insert(&path.path_id, pi) {
            diags.push(err(
                format!("{base}/path_id"),
                format!(
                    "duplicate path id `{}` (also declared at /paths/{prev})",
                    path.path_id
                ),
            ));
        }

        for (label, action) in [
            ("apply_action", &path.consequence.apply_action),
            ("reject_action", &path.consequence.reject_action),
            ("undetermined_action", &path.consequence.undetermined_action),
        ] {
            if action.action_id.trim().is_empty() {
                diags.push(err(
                    format!("{base}/consequence/{label}/action_id"),
                    "action_id must be non-empty".into(),
                ));
            }
        }

        for (si, span) in path.source_spans.iter().enumerate() {
            if span.start > span.end {
                diags.push(err(
                    format!("{base}/source_spans/{si}"),
                    format!("span start {} exceeds end {}", span.start, span.end),
                ));
            }
        }

        validate_node(
            &path.root,
            &format!("{base}/root"),
            &mut criterion_ids,
            &mut evidence_ids,
            &mut diags,
        );
    }

    if pack.paths.is_empty() {
        diags.push(err("/paths".into(), "pack declares no decision paths".into()));
    }

    diags
}

fn validate_node<'a>(
    node: &'a CriterionNode,
    ptr: &str,
    criterion_ids: &mut HashMap<&'a str, String>,
    evidence_ids: &mut HashMap<&'a str, String>,
    diags: &mut Vec<Diagnostic>,
) {
    let err = |ptr: String, msg: String| Diagnostic::error(Location::Pointer(ptr), msg);

    if node.criterion_id.trim().is_empty() {
        diags.push(err(
            format!("{ptr}/criterion_id"),
            "criterion_id must be non-empty".into(),
        ));
    } else if let Some(prev) = criterion_ids.insert(&node.criterion_id, ptr.to_string()) {
        diags.push(err(
            format!("{ptr}/criterion_id"),
            format!(
                "duplicate criterion id `{}` (also declared at {prev})",
                node.criterion_id
            ),
        ));
    }

    match node.kind {
        CriterionKind::Leaf => {
            if !node.children.is_empty() {
                diags.push(err(
                    format!("{ptr}/children"),
                    format!("LEAF must have no children, found {}", node.children.len()),
                ));
            }
            match &node.prior {
                None => diags.push(err(
                    format!("{ptr}/prior"),
                    "LEAF criterion must declare a prior".into(),
                )),
                Some(p) => {
                    let in_range =
                        (0.0..=1.0).contains(&p.p_cr) && (0.0..=1.0).contains(&p.p_not_cr);
                    if !in_range {
                        diags.push(err(
                            format!("{ptr}/prior"),
                            format!(
                                "prior components ({}, {}) must lie in [0,1]",
                                p.p_cr, p.p_not_cr
                            ),
                        ));
                    } else if (p.p_cr + p.p_not_cr - 1.0).abs() > PRIOR_SUM_TOLERANCE {
                        diags.push(err(
                            format!("{ptr}/prior"),
                            format!(
                                "prior components ({}, {}) must sum to 1 within {PRIOR_SUM_TOLERANCE}",
                                p.p_cr, p.p_not_cr
                            ),
                        ));
                    }
                }
            }
        }
        CriterionKind::All | CriterionKind::Any => {
            if node.children.len() < 2 {
                diags.push(err(
                    format!("{ptr}/children"),
                    format!(
                        "{} must have at least 2 children, found {}",
                        node.kind.as_str(),
                        node.children.len()
                    ),
                ));
            }
        }
        CriterionKind::Not => {
            if node.children.len() != 1 {
                diags.push(err(
                    format!("{ptr}/children"),
                    format!(
                        "NOT must have exactly 1 child, found {}",
                        node.children.len()
                    ),
                ));
            }
        }
    }

    if node.kind != CriterionKind::Leaf {
        if node.prior.is_some() {
            diags.push(err(
                format!("{ptr}/prior"),
                format!(
                    "{} criterion must not declare a prior; priors live on LEAF nodes only",
                    node.kind.as_str()
                ),
            ));
        }
        if !node.evidence_specs.is_empty() {
            diags.push(err(
                format!("{ptr}/evidence_specs"),
                format!(
                    "{} criterion must not declare evidence; evidence attaches to LEAF nodes",
                    node.kind.as_str()
                ),
            ));
        }
    }

    for (ei, spec) in node.evidence_specs.iter().enumerate() {
        let eptr = format!("{ptr}/evidence_specs/{ei}");
        if spec.evidence_id.trim().is_empty() {
            diags.push(err(
                format!("{eptr}/evidence_id"),
                "evidence_id must be non-empty".into(),
            ));
        } else if let Some(prev) = evidence_ids.insert(&spec.evidence_id, eptr.clone()) {
            diags.push(err(
                format!("{eptr}/evidence_id"),
                format!(
                    "duplicate evidence id `{}` (also declared at {prev}); each evidence id \
                     must be owned by exactly one criterion",
                    spec.evidence_id
                ),
            ));
        }

        let row = &spec.likelihood;
        if !row.count_given_cr.is_finite() || !row.count_given_not_cr.is_finite() {
            diags.push(err(
                format!("{eptr}/likelihood"),
                "likelihood counts must be finite".into(),
            ));
        } else if row.count_given_cr < 0.0 || row.count_given_not_cr < 0.0 {
            diags.push(err(
                format!("{eptr}/likelihood"),
                format!(
                    "likelihood counts ({}, {}) must be nonnegative",
                    row.count_given_cr, row.count_given_not_cr
                ),
            ));
        } else if row.is_degenerate() {
            diags.push(err(
                format!("{eptr}/likelihood"),
                "degenerate likelihood row: counts must not both be zero".into(),
            ));
        }
    }

    for (ci, child) in node.children.iter().enumerate() {
        validate_node(
            child,
            &format!("{ptr}/children/{ci}"),
            criterion_ids,
            evidence_ids,
            diags,
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::testutil::{leaf, sample_pack};
    use crate::ir::{LikelihoodRow, Prior};

    #[test]
    fn sample_pack_is_valid() {
        assert_eq!(validate_pack(&sample_pack()), Vec::new());
    }

    #[test]
    fn leaf_with_children_is_rejected() {
        let mut pack = sample_pack();
        let child = leaf("extra", "extra", (0.5, 0.5), vec![]);
        pack.paths[0].root.children[0].children.push(child);
        let diags = validate_pack(&pack);
        assert!(
            diags.iter().any(|d| d.message.contains("LEAF must have no children")),
            "{diags:?}"
        );
    }

    #[test]
    fn degenerate_likelihood_row_is_rejected() {
        let mut pack = sample_pack();
        pack.paths[0].root.children[0].evidence_specs[0].likelihood = LikelihoodRow::new(0.0, 0.0);
        let diags = validate_pack(&pack);
        assert!(
            diags.iter().any(|d| d.message.contains("degenerate likelihood row")),
            "{diags:?}"
        );
    }

    #[test]
    fn prior_must_sum_to_one() {
        let mut pack = sample_pack();
        pack.paths[0].root.children[0].prior = Some(Prior {
            p_cr: 0.5,
            p_not_cr: 0.6,
        });
        let diags = validate_pack(&pack);
        assert!(diags.iter().any(|d| d.message.contains("sum to 1")), "{diags:?}");
    }

    #[test]
    fn arity_violations_are_located() {
        let mut pack = sample_pack();
        pack.paths[0].root.children.truncate(1); // ALL with one child
        let diags = validate_pack(&pack);
        let d = diags
            .iter()
            .find(|d| d.message.contains("at least 2 children"))
            .expect("arity diagnostic");
        assert_eq!(d.location, Location::Pointer("/paths/0/root/children".into()));
    }

    #[test]
    fn duplicate_evidence_id_across_criteria_is_rejected() {
        let mut pack = sample_pack();
        let spec = pack.paths[0].root.children[0].evidence_specs[0].clone();
        pack.paths[0].root.children[1].evidence_specs.push(spec);
        let diags = validate_pack(&pack);
        assert!(
            diags.iter().any(|d| d.message.contains("duplicate evidence id")),
            "{diags:?}"
        );
    }

    #[test]
    fn bad_version_is_rejected() {
        let mut pack = sample_pack();
        pack.version = "one-point-oh".into();
        let diags = validate_pack(&pack);
        assert!(
            diags.iter().any(|d| d.message.contains("not a semantic version")),
            "{diags:?}"
        );
    }
}
