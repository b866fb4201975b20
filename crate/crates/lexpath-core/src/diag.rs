//! Diagnostics shared by the parser, validator, and evidence pipeline.
//!
//! Operations that can partially succeed return a list of [`Diagnostic`]
//! instead of aborting: an ERROR means the surrounding operation produced no
//! artifact, a WARNING means the artifact exists but something was dropped,
//! collapsed, or ignored along the way.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Diagnostic severity. ERROR diagnostics imply no artifact is returned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Severity {
    Warning,
    Error,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Severity::Warning => write!(f, "WARNING"),
            Severity::Error => write!(f, "ERROR"),
        }
    }
}

/// Where a diagnostic points: a line/column in a text document, a JSON
/// pointer into a structured document, or nowhere (input-level problems).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Location {
    LineCol { line: u32, col: u32 },
    Pointer(String),
    None,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::LineCol { line, col } => write!(f, "{line}:{col}"),
            Location::Pointer(p) => write!(f, "{p}"),
            Location::None => write!(f, "-"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub severity: Severity,
    pub location: Location,
    pub message: String,
}

impl Diagnostic {
    pub fn error(location: Location, message: impl Into<String>) -> Self {
        Self {
            severity: Severity::Error,
            location,
            message: message.into(),
        }
    }

    pub fn warning(location: Location, message: impl Into<String>) -> Self {
        Self {
            severity: Severity::Warning,
            location,
            message: message.into(),
        }
    }

    pub fn at_line(severity: Severity, line: u32, col: u32, message: impl Into<String>) -> Self {
        Self {
            severity,
            location: Location::LineCol { line, col },
            message: message.into(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}: {}", self.location, self.severity, self.message)
    }
}

/// True iff `diags` contains at least one ERROR.
pub fn has_errors(diags: &[Diagnostic]) -> bool {
    diags.iter().any(|d| d.severity == Severity::Error)
}
