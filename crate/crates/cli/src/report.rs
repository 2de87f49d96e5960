//! Report assembly and the JSON encodings shared by all commands.

use noether::hilbert::HilbertSeries;
use noether::{Monomial, Polynomial};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u64 = 1;

/// A command result: JSON fields plus the equivalent text lines, in order.
#[derive(Default)]
pub struct Report {
    fields: Map<String, Value>,
    text: Vec<String>,
}

impl Report {
    pub fn field(&mut self, key: &str, value: Value, text: impl Into<String>) {
        self.fields.insert(key.to_string(), value);
        self.text.push(format!("{key}: {}", text.into()));
    }

    /// A JSON-only field.
    pub fn hidden(&mut self, key: &str, value: Value) {
        self.fields.insert(key.to_string(), value);
    }

    /// A text-only line.
    pub fn line(&mut self, text: impl Into<String>) {
        self.text.push(text.into());
    }

    pub fn render_json(mut self, command: &str, digest: &str) -> String {
        self.fields.insert("schema_version".into(), json!(SCHEMA_VERSION));
        self.fields.insert("command".into(), json!(command));
        self.fields.insert("inputs_digest".into(), json!(digest));
        let mut s = serde_json::to_string_pretty(&Value::Object(self.fields)).expect("values are serializable");
        s.push('\n');
        s
    }

    pub fn render_text(self) -> String {
        let mut s = self.text.join("\n");
        s.push('\n');
        s
    }
}

/// sha256 over length-prefixed parts, hex encoded.
pub fn digest(parts: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p);
    }
    hex::encode(h.finalize())
}

pub fn exps(m: &Monomial) -> Value {
    json!(m.exps())
}

/// `[[coeff, [exponents]], …]`, leading term first.
pub fn poly(p: &Polynomial) -> Value {
    Value::Array(p.terms().iter().map(|(m, c)| json!([c.to_string(), m.exps()])).collect())
}

pub fn polys(ps: &[Polynomial]) -> Value {
    Value::Array(ps.iter().map(poly).collect())
}

pub fn poly_lines(ps: &[Polynomial]) -> String {
    ps.iter().map(|p| format!("\n  {p}")).collect()
}

pub fn hilbert(hs: &HilbertSeries) -> Value {
    json!({
        "numerator": hs.numerator().iter().map(|(e, c)| json!([c, e])).collect::<Vec<_>>(),
        "denominator_factors": hs.denominator().iter().map(|&(v, w)| json!([v, w])).collect::<Vec<_>>(),
    })
}

pub fn vectors(vs: &[Vec<u64>]) -> String {
    let items: Vec<String> = vs.iter().map(|v| format!("({})", join(v, ","))).collect();
    format!("{{{}}}", items.join(", "))
}

pub fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}
