use std::io::{self, Write};

use clap::ValueEnum;
use nearrect::sweep::Check;
use nearrect::Partition;
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub enum Payload {
    Integer(BigInt),
    /// Nonzero terms in canonical partition order.
    Expansion(Vec<(Partition, BigInt)>),
    /// One row per parameter value; the last column holds the count.
    Table {
        columns: [&'static str; 2],
        rows: Vec<(usize, BigInt)>,
    },
    Checks(Vec<Check>),
    Fields(Vec<(&'static str, Value)>),
}

/// What a command printed: the query, the answer and some metadata.
pub struct Record {
    pub command: &'static str,
    pub args: Map<String, Value>,
    pub result: Payload,
    pub meta: Map<String, Value>,
}

pub fn partition_json(p: &Partition) -> Value {
    json!(p.parts())
}

/// `4,3,1` (and `0` for the empty partition), the same syntax the CLI reads.
fn literal(p: &Partition) -> String {
    if p.is_empty() {
        "0".to_string()
    } else {
        let parts: Vec<String> = p.parts().iter().map(usize::to_string).collect();
        parts.join(",")
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

impl Record {
    pub fn to_json(&self) -> Value {
        let result = match &self.result {
            Payload::Integer(v) => json!({ "value": v.to_string() }),
            Payload::Expansion(terms) => {
                let terms: Vec<Value> = terms
                    .iter()
                    .map(|(p, c)| json!({ "partition": partition_json(p), "coeff": c.to_string() }))
                    .collect();
                json!({ "terms": terms })
            }
            Payload::Table { columns, rows } => {
                let rows: Vec<Value> = rows
                    .iter()
                    .map(|(n, v)| {
                        let mut m = Map::new();
                        m.insert(columns[0].to_string(), json!(n));
                        m.insert(columns[1].to_string(), json!(v.to_string()));
                        Value::Object(m)
                    })
                    .collect();
                json!({ "rows": rows })
            }
            Payload::Checks(checks) => {
                let checks: Vec<Value> = checks
                    .iter()
                    .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
                    .collect();
                json!({ "checks": checks })
            }
            Payload::Fields(fields) => {
                let m: Map<String, Value> = fields
                    .iter()
                    .map(|(k, v)| (k.to_string(), v.clone()))
                    .collect();
                Value::Object(m)
            }
        };
        json!({
            "command": self.command,
            "args": self.args,
            "result": result,
            "meta": self.meta,
        })
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Json => writeln!(out, "{}", self.to_json()),
            Format::Text => self.write_text(out),
            Format::Csv => self.write_csv(out),
        }
    }

    fn write_text(&self, out: &mut impl Write) -> io::Result<()> {
        match &self.result {
            Payload::Integer(v) => writeln!(out, "{v}"),
            Payload::Expansion(terms) => {
                for (p, c) in terms {
                    writeln!(out, "{c}  {p}")?;
                }
                Ok(())
            }
            Payload::Table { rows, .. } => {
                for (n, v) in rows {
                    writeln!(out, "{n}  {v}")?;
                }
                Ok(())
            }
            Payload::Checks(checks) => {
                for c in checks {
                    let tag = if c.passed { "PASS" } else { "FAIL" };
                    writeln!(out, "{tag}  {}: {}", c.name, c.detail)?;
                }
                let passed = checks.iter().filter(|c| c.passed).count();
                writeln!(out, "{passed}/{} checks passed", checks.len())
            }
            Payload::Fields(fields) => {
                for (k, v) in fields {
                    writeln!(out, "{k}: {}", scalar_text(v))?;
                }
                Ok(())
            }
        }
    }

    fn write_csv(&self, out: &mut impl Write) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        match &self.result {
            Payload::Integer(v) => {
                w.write_record(["value"])?;
                w.write_record([v.to_string()])?;
            }
            Payload::Expansion(terms) => {
                w.write_record(["partition", "coeff"])?;
                for (p, c) in terms {
                    w.write_record([literal(p), c.to_string()])?;
                }
            }
            Payload::Table { columns, rows } => {
                w.write_record(columns)?;
                for (n, v) in rows {
                    w.write_record([n.to_string(), v.to_string()])?;
                }
            }
            Payload::Checks(checks) => {
                w.write_record(["name", "passed", "detail"])?;
                for c in checks {
                    w.write_record([c.name.as_str(), &c.passed.to_string(), c.detail.as_str()])?;
                }
            }
            Payload::Fields(fields) => {
                w.write_record(fields.iter().map(|(k, _)| *k))?;
                w.write_record(fields.iter().map(|(_, v)| scalar_text(v)))?;
            }
        }
        w.flush()
    }
}
