//! Renderings of reports as text, JSON or CSV.

use num_traits::ToPrimitive;
use qschur::{LaurentInt, Tableau};
use serde_json::{Map, Value, json};

use crate::cli::Format;

/// One result in all three renderings.
#[derive(Debug, Clone)]
pub struct Report {
    pub json: Value,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub text: String,
}

impl Report {
    pub fn render(&self, f: Format) -> String {
        match f {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json values serialize");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header).expect("in-memory write");
                for r in &self.rows {
                    w.write_record(r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf8 fields")
            }
        }
    }
}

/// Exponent to coefficient map with decimal string keys, in increasing
/// exponent order. Coefficients beyond `i64` are written as strings.
pub fn laurent_json(p: &LaurentInt) -> Value {
    let mut m = Map::new();
    for (k, c) in p.terms() {
        let v = match c.to_i64() {
            Some(x) => json!(x),
            None => json!(c.to_string()),
        };
        m.insert(k.to_string(), v);
    }
    Value::Object(m)
}

/// `c*q^k` terms, highest exponent first, e.g. `1*q^0-2*q^-1`.
pub fn laurent_csv(p: &LaurentInt) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (k, c)) in p.terms().rev().enumerate() {
        let c = c.to_string();
        if i > 0 && !c.starts_with('-') {
            s.push('+');
        }
        s.push_str(&format!("{c}*q^{k}"));
    }
    s
}

/// `"component.row.col"` to `"number_alphabet"`.
pub fn tableau_json(t: &Tableau) -> Value {
    let mut m = Map::new();
    for (c, v) in t.filling() {
        m.insert(format!("{}.{}.{}", c.comp, c.row, c.col), json!(v.to_string()));
    }
    Value::Object(m)
}
