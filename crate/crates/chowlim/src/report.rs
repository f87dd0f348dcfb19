use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

/// Output of one command. `payload` depends only on the inputs; the timing
/// does not.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub prime: Option<u32>,
    pub cutoff: Option<usize>,
    pub elapsed_ms: u64,
    pub payload: Value,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    /// One `key: value` line per field, arrays space separated.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        if let Some(p) = self.prime {
            let _ = writeln!(out, "prime: {p}");
        }
        if let Some(d) = self.cutoff {
            let _ = writeln!(out, "max degree: {d}");
        }
        if let Value::Object(map) = &self.payload {
            for (k, v) in map {
                let _ = writeln!(out, "{k}: {}", render(v));
            }
        }
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        let _ = writeln!(out, "elapsed: {} ms", self.elapsed_ms);
        out
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::Array(xs) if xs.iter().all(|x| !x.is_object() && !x.is_array()) => {
            xs.iter().map(render).collect::<Vec<_>>().join(" ")
        }
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
