//! Text, JSON and CSV rendering. Big integers are always full decimal strings.

use clap::ValueEnum;
use filterpaths::closed_form::{PqCounterexample, PqValue};
use filterpaths::verify::{CompareReport, ParamValue, Params};
use filterpaths::ExactInt;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone)]
enum Field {
    Int(i64),
    Text(String),
}

/// An ordered list of named fields, rendered as one record.
#[derive(Debug, Clone, Default)]
pub struct Record {
    fields: Vec<(String, Field)>,
}

impl Record {
    pub fn new() -> Self {
        Record::default()
    }

    pub fn int(mut self, name: &str, v: i64) -> Self {
        self.fields.push((name.to_string(), Field::Int(v)));
        self
    }

    pub fn text(mut self, name: &str, v: &str) -> Self {
        self.fields
            .push((name.to_string(), Field::Text(v.to_string())));
        self
    }

    pub fn big(self, name: &str, v: &ExactInt) -> Self {
        self.text(name, &v.to_string())
    }

    pub fn extend(mut self, other: Record) -> Self {
        self.fields.extend(other.fields);
        self
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (k, v) in &self.fields {
            let v = match v {
                Field::Int(i) => json!(i),
                Field::Text(s) => json!(s),
            };
            map.insert(k.clone(), v);
        }
        Value::Object(map)
    }

    fn plain(v: &Field) -> String {
        match v {
            Field::Int(i) => i.to_string(),
            Field::Text(s) => s.clone(),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self
                .fields
                .iter()
                .map(|(k, v)| format!("{k}: {}\n", Record::plain(v)))
                .collect(),
            Format::Json => pretty(&self.to_json()),
            Format::Csv => {
                let header: Vec<_> = self.fields.iter().map(|(k, _)| csv_field(k)).collect();
                let row: Vec<_> = self
                    .fields
                    .iter()
                    .map(|(_, v)| csv_field(&Record::plain(v)))
                    .collect();
                format!("{}\n{}\n", header.join(","), row.join(","))
            }
        }
    }
}

fn pretty(v: &Value) -> String {
    format!(
        "{}\n",
        serde_json::to_string_pretty(v).expect("json values serialize")
    )
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn params_inline(params: &Params) -> String {
    params
        .iter()
        .map(|(k, v)| match v {
            ParamValue::Int(i) => format!("{k}={i}"),
            ParamValue::Text(t) => format!("{k}={t}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn report(report: &CompareReport, format: Format) -> String {
    match format {
        Format::Json => pretty(&serde_json::to_value(report).expect("report serializes")),
        Format::Csv => {
            let mut s = String::from("formula_id,parameters,formula_value,oracle_value,match\n");
            for c in &report.cells {
                s.push_str(&format!(
                    "{},{},{},{},{}\n",
                    csv_field(&c.formula_id),
                    csv_field(&params_inline(&c.parameters)),
                    c.formula_value,
                    c.oracle_value,
                    c.matches
                ));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for c in report.mismatched() {
                s.push_str(&format!(
                    "MISMATCH {} [{}] formula {} oracle {}\n",
                    c.formula_id,
                    params_inline(&c.parameters),
                    c.formula_value,
                    c.oracle_value
                ));
            }
            s.push_str(&format!(
                "total: {} mismatches: {}\n",
                report.summary.total, report.summary.mismatches
            ));
            s
        }
    }
}

fn verdict_text(verdict: &Result<(), PqCounterexample>) -> String {
    match verdict {
        Ok(()) => "ok".to_string(),
        Err(c) => format!(
            "failed at {}_{}({}): recurrence gives {}, closed form gives {}",
            c.family, c.j, c.k, c.from_recurrence, c.closed_form
        ),
    }
}

pub fn pq(table: &[PqValue], verdict: &Result<(), PqCounterexample>, format: Format) -> String {
    match format {
        Format::Text => {
            let mut s = String::new();
            let mut js: Vec<i64> = table.iter().map(|v| v.j).collect();
            js.dedup();
            for j in js {
                let row = |pick: fn(&PqValue) -> &ExactInt| {
                    table
                        .iter()
                        .filter(|v| v.j == j)
                        .map(|v| pick(v).to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                };
                s.push_str(&format!("P_{j} = {}\n", row(|v| &v.p)));
                s.push_str(&format!("Q_{j} = {}\n", row(|v| &v.q)));
            }
            s.push_str(&format!("recurrence: {}\n", verdict_text(verdict)));
            s
        }
        Format::Csv => {
            let mut s = String::from("j,k,P,Q\n");
            for v in table {
                s.push_str(&format!("{},{},{},{}\n", v.j, v.k, v.p, v.q));
            }
            s
        }
        Format::Json => {
            let rows: Vec<_> = table
                .iter()
                .map(|v| json!({ "j": v.j, "k": v.k, "P": v.p.to_string(), "Q": v.q.to_string() }))
                .collect();
            let recurrence = match verdict {
                Ok(()) => json!({ "ok": true }),
                Err(c) => json!({
                    "ok": false,
                    "family": c.family.to_string(),
                    "j": c.j,
                    "k": c.k,
                    "from_recurrence": c.from_recurrence.to_string(),
                    "closed_form": c.closed_form.to_string(),
                }),
            };
            pretty(&json!({ "rows": rows, "recurrence": recurrence }))
        }
    }
}
