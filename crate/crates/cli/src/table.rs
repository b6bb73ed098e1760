//! Row tables and their CSV and JSON Lines encodings.
//!
//! Every record carries a `type` tag. CSV output uses one header listing
//! the union of all columns; cells a record does not define are left
//! empty. JSON Lines output writes only the cells a record defines.

use fibcf_core::exactnum::Round;
use fibcf_core::{RatInterval, Rational};
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Jsonl,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    /// Small integers, written as JSON numbers.
    Int(u64),
    /// Decimal strings, big integers and enum tokens.
    Text(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(n) => Value::from(*n),
            Cell::Text(s) => Value::from(s.as_str()),
        }
    }
}

impl From<u64> for Cell {
    fn from(n: u64) -> Self {
        Cell::Int(n)
    }
}

impl From<usize> for Cell {
    fn from(n: usize) -> Self {
        Cell::Int(n as u64)
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Text(b.to_string())
    }
}

#[derive(Clone, Debug, Default)]
pub struct Record {
    kind: &'static str,
    cells: Vec<(&'static str, Cell)>,
}

impl Record {
    pub fn new(kind: &'static str) -> Self {
        Self {
            kind,
            cells: Vec::new(),
        }
    }

    pub fn set(&mut self, column: &'static str, value: impl Into<Cell>) -> &mut Self {
        self.cells.push((column, value.into()));
        self
    }

    /// Sets `{prefix}_lo` and `{prefix}_hi`, rounded outward to `digits`
    /// significant digits so the printed pair still encloses the value.
    pub fn interval(
        &mut self,
        lo_col: &'static str,
        hi_col: &'static str,
        v: &RatInterval,
        digits: u32,
    ) -> &mut Self {
        self.set(lo_col, v.lo().to_sci(digits, Round::Down));
        self.set(hi_col, v.hi().to_sci(digits, Round::Up))
    }

    pub fn bound(
        &mut self,
        column: &'static str,
        v: &Rational,
        digits: u32,
        dir: Round,
    ) -> &mut Self {
        self.set(column, v.to_sci(digits, dir))
    }

    fn get(&self, column: &str) -> Option<&Cell> {
        self.cells.iter().find(|(c, _)| *c == column).map(|(_, v)| v)
    }
}

#[derive(Clone, Debug)]
pub struct Table {
    columns: Vec<&'static str>,
    records: Vec<Record>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Self {
            columns: columns.to_vec(),
            records: Vec::new(),
        }
    }

    pub fn push(&mut self, record: Record) {
        debug_assert!(record.cells.iter().all(|(c, _)| self.columns.contains(c)));
        self.records.push(record);
    }

    pub fn records(&self) -> usize {
        self.records.len()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.csv(),
            Format::Jsonl => self.jsonl(),
        }
    }

    fn csv(&self) -> String {
        let mut out = String::from("type");
        for c in &self.columns {
            out.push(',');
            out.push_str(c);
        }
        out.push('\n');
        for r in &self.records {
            out.push_str(r.kind);
            for c in &self.columns {
                out.push(',');
                if let Some(v) = r.get(c) {
                    out.push_str(&v.csv());
                }
            }
            out.push('\n');
        }
        out
    }

    fn jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let mut obj = Map::new();
            obj.insert("type".into(), Value::from(r.kind));
            for c in &self.columns {
                if let Some(v) = r.get(c) {
                    obj.insert((*c).into(), v.json());
                }
            }
            out.push_str(&Value::Object(obj).to_string());
            out.push('\n');
        }
        out
    }
}
