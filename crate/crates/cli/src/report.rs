use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// What every command reports. The JSON form always carries the same keys.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub value: Value,
    pub certificate: Option<String>,
    pub valid: bool,
    pub elapsed_ms: f64,
    pub input_digest: String,
    /// Command-specific extras; `null` when there are none.
    pub details: Value,
    #[serde(skip)]
    pub text: String,
}

impl RunReport {
    pub fn new(command: &str, input: &[u8]) -> RunReport {
        RunReport {
            command: command.to_string(),
            value: Value::Null,
            certificate: None,
            valid: true,
            elapsed_ms: 0.0,
            input_digest: digest(input),
            details: Value::Null,
            text: String::new(),
        }
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}
