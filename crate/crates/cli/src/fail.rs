//! CLI failure type: structured JSON on stderr plus the process exit code.

use lech_core::Error as CoreError;
use serde_json::json;

/// Exit code contract: 0 all-pass, 1 bound violation or hypothesis
/// rejection, 2 input or computation error.
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug)]
pub struct Failure {
    pub kind: String,
    pub message: String,
    pub position: Option<usize>,
    pub exit_code: i32,
}

impl Failure {
    pub fn input(kind: &str, message: impl Into<String>) -> Self {
        Self {
            kind: kind.into(),
            message: message.into(),
            position: None,
            exit_code: EXIT_INPUT,
        }
    }

    pub fn at(kind: &str, message: impl Into<String>, position: usize) -> Self {
        Self {
            kind: kind.into(),
            message: message.into(),
            position: Some(position),
            exit_code: EXIT_INPUT,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut err = json!({
            "kind": self.kind,
            "message": self.message,
        });
        if let Some(p) = self.position {
            err["position"] = json!(p);
        }
        json!({ "error": err })
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let kind = match &e {
            CoreError::InvalidRing(_) => "invalid_ring",
            CoreError::InvalidGenerator(_) => "invalid_generator",
            CoreError::InvalidPoint(_) => "invalid_point",
            CoreError::ZeroIdeal => "zero_ideal",
            CoreError::UnitIdeal => "unit_ideal",
            CoreError::RingMismatch => "ring_mismatch",
            CoreError::InfiniteColength => "infinite_colength",
            CoreError::NotStabilized { .. } => "not_stabilized",
            CoreError::NonIntegerResult(_) => "non_integer_result",
            CoreError::DimensionUnsupported { .. } => "dimension_unsupported",
            CoreError::HypothesisNotMet(_) => "hypothesis_not_met",
            CoreError::BaseMismatch => "base_mismatch",
            CoreError::BadGeneratorChoice(_) => "bad_generator_choice",
            CoreError::InvalidArgument(_) => "invalid_argument",
        };
        Failure::input(kind, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::input("io", e.to_string())
    }
}
