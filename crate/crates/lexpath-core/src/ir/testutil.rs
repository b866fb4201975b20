//! Compact constructors for packs, used by tests across the crate.

use chrono::{TimeZone, Utc};

use crate::ir::{
    ActionSpec, Consequence, CriterionKind, CriterionNode, DecisionPath, EvidenceSpec,
    JurisdictionPack, LikelihoodRow, Prior, SourceKind, SourceSpan,
};

pub fn action(id: &str, label: &str) -> ActionSpec {
    ActionSpec {
        action_id: id.into(),
        label: label.into(),
    }
}

pub fn spec(evidence_id: &str, counts: (f64, f64)) -> EvidenceSpec {
    EvidenceSpec {
        evidence_id: evidence_id.into(),
        description: format!("evidence {evidence_id}"),
        accepted_sources: vec![],
        likelihood: LikelihoodRow::new(counts.0, counts.1),
    }
}

pub fn spec_from(evidence_id: &str, counts: (f64, f64), sources: Vec<SourceKind>) -> EvidenceSpec {
    EvidenceSpec {
        accepted_sources: sources,
        ..spec(evidence_id, counts)
    }
}

pub fn leaf(id: &str, text: &str, prior: (f64, f64), specs: Vec<EvidenceSpec>) -> CriterionNode {
    CriterionNode {
        criterion_id: id.into(),
        text: text.into(),
        kind: CriterionKind::Leaf,
        children: vec![],
        evidence_specs: specs,
        prior: Some(Prior {
            p_cr: prior.0,
            p_not_cr: prior.1,
        }),
    }
}

pub fn composite(kind: CriterionKind, id: &str, text: &str, children: Vec<CriterionNode>) -> CriterionNode {
    CriterionNode {
        criterion_id: id.into(),
        text: text.into(),
        kind,
        children,
        evidence_specs: vec![],
        prior: None,
    }
}

pub fn consequence(id: &str) -> Consequence {
    Consequence {
        consequence_id: id.into(),
        text: format!("consequence {id}"),
        apply_action: action("apply", "permit_operation"),
        reject_action: action("reject", "stop_and_alert"),
        undetermined_action: action("hold", "await_verification"),
    }
}

/// A small valid pack: one path, ALL over two evidence-bearing leaves.
pub fn sample_pack() -> JurisdictionPack {
    let root = composite(
        CriterionKind::All,
        "root",
        "all conditions met",
        vec![
            leaf(
                "public_road",
                "on public roads",
                (0.3, 0.7),
                vec![
                    spec_from("e1", (0.8, 0.2), vec![SourceKind::Geospatial]),
                    spec_from("e2", (0.1, 0.9), vec![SourceKind::Sensor]),
                ],
            ),
            leaf("licensed", "driver properly licensed", (0.5, 0.5), vec![spec("e3", (0.9, 0.1))]),
        ],
    );
    JurisdictionPack {
        pack_id: "sample".into(),
        jurisdiction: "US-CA".into(),
        source_citation: "Sample Code §1(a)".into(),
        version: "1.0.0".into(),
        paths: vec![DecisionPath {
            path_id: "operate".into(),
            consequence: consequence("cs1"),
            root,
            source_spans: vec![SourceSpan { start: 0, end: 42 }],
        }],
        created_at: Utc.with_ymd_and_hms(2024, 3, 1, 12, 0, 0).unwrap(),
    }
}
