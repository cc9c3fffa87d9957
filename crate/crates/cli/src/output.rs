use std::io::Write;

use fixpoint::{Exact, HighFloat};
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::Format;

pub const SCHEMA_VERSION: u32 = 1;

/// The fully resolved parameters of a run, echoed in every report.
#[derive(Debug, Clone, Default, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub model: Option<String>,
    pub n: Option<usize>,
    pub r: Option<usize>,
    pub r_max: Option<usize>,
    pub i: Option<usize>,
    pub k: Option<u64>,
    pub c: Option<f64>,
    pub t: Option<usize>,
    pub n_list: Option<Vec<usize>>,
    pub x: Option<String>,
    pub lambda: Option<String>,
    pub alg: Option<String>,
    pub suite: Option<String>,
    pub samples: Option<u64>,
    pub seed: u64,
    pub threads: usize,
    pub precision: String,
    pub format: String,
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table { headers: headers.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }
}

pub struct Report {
    pub config: RunConfig,
    pub result: Value,
    pub table: Table,
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.config.command,
            "config": self.config,
            "result": self.result,
        })
    }

    pub fn write<W: Write>(&self, format: Format, out: W) -> Result<(), crate::CliError> {
        match format {
            Format::Json => {
                let mut out = out;
                serde_json::to_writer_pretty(&mut out, &self.to_json())?;
                writeln!(out)?;
            }
            Format::Csv => write_csv(&self.table, out)?,
        }
        Ok(())
    }
}

pub fn write_csv<W: Write>(table: &Table, out: W) -> Result<(), crate::CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&table.headers)?;
    for row in &table.rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

/// JSON and CSV renderings of a scalar.
pub trait Emit {
    fn json(&self) -> Value;
    fn cell(&self) -> String;
}

impl Emit for Exact {
    fn json(&self) -> Value {
        json!({ "num": self.numer().to_string(), "den": self.denom().to_string() })
    }
    fn cell(&self) -> String {
        self.to_string()
    }
}

macro_rules! emit_real {
    ($($t:ty),*) => {$(
        impl Emit for $t {
            fn json(&self) -> Value {
                Value::String(fixpoint::Scalar::render(self))
            }
            fn cell(&self) -> String {
                fixpoint::Scalar::render(self)
            }
        }
    )*};
}

emit_real!(f32, f64, HighFloat<128>, HighFloat<256>);

pub fn rational(x: &Exact) -> Value {
    x.json()
}
