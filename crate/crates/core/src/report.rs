//! Command reports: a result payload plus a list of checked claims.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    /// `None` means the claim's hypothesis did not hold.
    pub fn from_option(check: Option<bool>) -> Self {
        check.map_or(Status::NotApplicable, Status::from_bool)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not-applicable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assertion {
    pub claim: String,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub assertions: Vec<Assertion>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
}

impl Report {
    pub fn new(command: impl Into<String>, inputs: Value, result: Value) -> Self {
        Report {
            command: command.into(),
            inputs,
            result,
            assertions: Vec::new(),
            certificate: None,
        }
    }

    pub fn assert(&mut self, claim: impl Into<String>, status: Status) -> &mut Self {
        self.assertions.push(Assertion {
            claim: claim.into(),
            status,
        });
        self
    }

    pub fn with_certificate(mut self, certificate: Value) -> Self {
        self.certificate = Some(certificate);
        self
    }

    pub fn failed(&self) -> bool {
        self.assertions.iter().any(|a| a.status == Status::Fail)
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.failed())
    }

    /// Pretty JSON with object keys sorted.
    pub fn to_json(&self) -> String {
        // Going through `Value` sorts keys: serde_json maps are ordered.
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Scalar results print bare; object results print one `key: value` line
    /// per field. Then the certificate, then one line per assertion.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.result {
            Value::Object(map) => {
                for (k, v) in map {
                    let _ = writeln!(out, "{k}: {}", render(v));
                }
            }
            Value::Null => {}
            other => {
                let _ = writeln!(out, "{}", render(other));
            }
        }
        if let Some(c) = &self.certificate {
            let _ = writeln!(out, "certificate: {}", render(c));
        }
        for a in &self.assertions {
            let _ = writeln!(out, "[{}] {}", a.status.as_str(), a.claim);
        }
        out
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
