//! Check records and verification certificates.
//!
//! A certificate body is deterministic for fixed inputs: checks are keyed by
//! name and sorted on output, artifacts use sorted-key JSON, and wall-clock
//! timings are excluded from the body (the text rendering carries them in a
//! comment header instead).

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "n/a",
        }
    }

    pub fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// One verified claim: verdict plus the artifacts (bases, witnesses,
/// decompositions) that justify it. The wall-clock time is informational and
/// never part of the canonical body.
#[derive(Clone, Debug)]
pub struct CheckRecord {
    pub name: String,
    pub verdict: Verdict,
    /// Digest of the canonical JSON of the check inputs.
    pub digest: String,
    pub artifacts: serde_json::Value,
    pub wall_ms: u128,
}

impl Serialize for CheckRecord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CheckRecord", 4)?;
        s.serialize_field("name", &self.name)?;
        s.serialize_field("verdict", &self.verdict)?;
        s.serialize_field("digest", &self.digest)?;
        s.serialize_field("artifacts", &self.artifacts)?;
        s.end()
    }
}

/// Aggregated result of a verification run.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationCertificate {
    pub instance: serde_json::Value,
    pub checks: Vec<CheckRecord>,
    pub overall: Verdict,
}

impl VerificationCertificate {
    /// Sorts the checks by name and aggregates: overall pass unless some
    /// enabled check failed (not-applicable records do not count against).
    pub fn new(instance: serde_json::Value, mut checks: Vec<CheckRecord>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let overall = if checks.iter().any(|c| c.verdict == Verdict::Fail) {
            Verdict::Fail
        } else {
            Verdict::Pass
        };
        VerificationCertificate {
            instance,
            checks,
            overall,
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == Verdict::Pass
    }

    pub fn failing_checks(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| c.verdict == Verdict::Fail)
            .map(|c| c.name.as_str())
            .collect()
    }

    /// Canonical JSON body; byte-identical for identical inputs.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    /// Human-readable rendering. Timestamps and per-check wall times are
    /// isolated to `#`-prefixed header lines; everything below the header is
    /// deterministic.
    pub fn render_text(&self, generated_at: Option<&str>) -> String {
        let mut out = String::new();
        out.push_str("# verification certificate\n");
        if let Some(ts) = generated_at {
            out.push_str(&format!("# generated-at: {ts}\n"));
        }
        for c in &self.checks {
            out.push_str(&format!("# wall-ms {}: {}\n", c.name, c.wall_ms));
        }
        out.push_str(&format!(
            "instance: {}\n",
            serde_json::to_string(&self.instance).expect("instance serializes")
        ));
        for c in &self.checks {
            out.push_str(&format!("check {}: {}\n", c.name, c.verdict));
            out.push_str(&format!("  digest: {}\n", c.digest));
            render_value(&mut out, "  ", &c.artifacts);
        }
        out.push_str(&format!("overall: {}\n", self.overall));
        out
    }
}

fn render_value(out: &mut String, indent: &str, v: &serde_json::Value) {
    match v {
        serde_json::Value::Object(map) => {
            for (k, val) in map {
                match val {
                    serde_json::Value::Object(_) | serde_json::Value::Array(_) => {
                        out.push_str(&format!("{indent}{k}:\n"));
                        render_value(out, &format!("{indent}  "), val);
                    }
                    _ => out.push_str(&format!("{indent}{k}: {val}\n")),
                }
            }
        }
        serde_json::Value::Array(items) => {
            for item in items {
                match item {
                    serde_json::Value::Object(_) | serde_json::Value::Array(_) => {
                        out.push_str(&format!("{indent}-\n"));
                        render_value(out, &format!("{indent}  "), item);
                    }
                    _ => out.push_str(&format!("{indent}- {item}\n")),
                }
            }
        }
        _ => out.push_str(&format!("{indent}{v}\n")),
    }
}

/// Hex SHA-256 of the compact JSON encoding.
pub fn digest_value(v: &serde_json::Value) -> String {
    let compact = serde_json::to_string(v).expect("digest input serializes");
    let hash = Sha256::digest(compact.as_bytes());
    hash.iter().map(|b| format!("{b:02x}")).collect()
}
