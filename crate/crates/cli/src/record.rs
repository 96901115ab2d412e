//! The output record shared by every subcommand and its three renderings.

use std::collections::BTreeMap;
use std::io::Write;

use motzkin::decimal::{to_decimal, Rounding};
use motzkin::{BigInt, Rational};
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use serde_json::Value;

/// Version of `schema/output-record.v1.json`.
pub const ARTIFACT_VERSION: &str = "1";

/// Longest fraction shown in text output; JSON always carries it.
pub const TEXT_EXACT_WIDTH: usize = 80;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Count(u64),
    /// Arbitrary size integer, serialized as a decimal string.
    Integer(BigInt),
    Exact {
        value: Rational,
        digits: usize,
        rounding: Rounding,
    },
    Float(f64),
    Text(String),
    Bool(bool),
}

impl Cell {
    pub fn exact(value: Rational, digits: usize, rounding: Rounding) -> Self {
        Cell::Exact {
            value,
            digits,
            rounding,
        }
    }

    fn flat(&self) -> String {
        match self {
            Cell::Count(c) => c.to_string(),
            Cell::Integer(i) => i.to_string(),
            Cell::Exact {
                value,
                digits,
                rounding,
            } => to_decimal(value, *digits, *rounding),
            Cell::Float(f) => f.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }
}

fn rounding_name(r: Rounding) -> &'static str {
    match r {
        Rounding::Floor => "floor",
        Rounding::Ceil => "ceil",
        Rounding::HalfEven => "half-even",
    }
}

/// `numerator/denominator`, also for integers.
pub fn fraction(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Cell::Count(c) => s.serialize_u64(*c),
            Cell::Integer(i) => s.serialize_str(&i.to_string()),
            Cell::Exact {
                value,
                digits,
                rounding,
            } => {
                let mut m = s.serialize_map(Some(4))?;
                m.serialize_entry("exact", &fraction(value))?;
                m.serialize_entry("decimal", &self.flat())?;
                m.serialize_entry("digits", digits)?;
                m.serialize_entry("rounding", rounding_name(*rounding))?;
                m.end()
            }
            Cell::Float(f) => s.serialize_f64(*f),
            Cell::Text(t) => s.serialize_str(t),
            Cell::Bool(b) => s.serialize_bool(*b),
        }
    }
}

/// Named cells in column order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Row(pub Vec<(&'static str, Cell)>);

impl Row {
    pub fn with(mut self, name: &'static str, cell: Cell) -> Self {
        self.0.push((name, cell));
        self
    }

    pub fn get(&self, name: &str) -> Option<&Cell> {
        self.0.iter().find(|(n, _)| *n == name).map(|(_, c)| c)
    }
}

impl Serialize for Row {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (name, cell) in &self.0 {
            m.serialize_entry(name, cell)?;
        }
        m.end()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Results {
    pub rows: Vec<Row>,
    /// Whole-run figures that are not per row. Omitted from CSV.
    #[serde(skip_serializing_if = "is_empty_row")]
    pub summary: Row,
}

fn is_empty_row(r: &Row) -> bool {
    r.0.is_empty()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub results: Results,
    pub artifact_version: String,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        OutputRecord {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            results: Results::default(),
            artifact_version: ARTIFACT_VERSION.to_string(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn row(mut self, row: Row) -> Self {
        self.results.rows.push(row);
        self
    }

    pub fn summary(mut self, name: &'static str, cell: Cell) -> Self {
        self.results.summary.0.push((name, cell));
        self
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> std::io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)
            }
            Format::Csv => self.write_csv(out),
            Format::Text => self.write_text(out),
        }
    }

    /// Header from the first row; rationals as their decimal rendering.
    fn write_csv(&self, out: &mut impl Write) -> std::io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        if let Some(first) = self.results.rows.first() {
            w.write_record(first.0.iter().map(|(n, _)| *n))?;
        }
        for row in &self.results.rows {
            w.write_record(row.0.iter().map(|(_, c)| c.flat()))?;
        }
        w.flush()
    }

    /// Aligned columns. A rational column is followed by its `_exact` column
    /// when every fraction in it fits in [`TEXT_EXACT_WIDTH`] characters.
    fn write_text(&self, out: &mut impl Write) -> std::io::Result<()> {
        let rows = &self.results.rows;
        let short = |name: &str| {
            rows.iter().all(|r| match r.get(name) {
                Some(Cell::Exact { value, .. }) => fraction(value).len() <= TEXT_EXACT_WIDTH,
                _ => true,
            })
        };
        let expand = |row: &Row, keep: &dyn Fn(&str) -> bool| -> Vec<(String, String)> {
            let mut cols = Vec::new();
            for (name, cell) in &row.0 {
                cols.push((name.to_string(), cell.flat()));
                if let Cell::Exact { value, .. } = cell {
                    if keep(name) {
                        cols.push((format!("{name}_exact"), fraction(value)));
                    }
                }
            }
            cols
        };
        let table: Vec<Vec<(String, String)>> = rows.iter().map(|r| expand(r, &short)).collect();
        if let Some(first) = table.first() {
            let widths: Vec<usize> = (0..first.len())
                .map(|j| {
                    table
                        .iter()
                        .map(|r| r[j].1.len())
                        .chain(std::iter::once(first[j].0.len()))
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |cells: Vec<&str>| -> String {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect();
                padded.join("  ").trim_end().to_string()
            };
            writeln!(
                out,
                "{}",
                line(first.iter().map(|(n, _)| n.as_str()).collect())
            )?;
            for r in &table {
                writeln!(out, "{}", line(r.iter().map(|(_, v)| v.as_str()).collect()))?;
            }
        }
        let summary_short = |v: &Rational| fraction(v).len() <= TEXT_EXACT_WIDTH;
        for (name, cell) in &self.results.summary.0 {
            writeln!(out, "{name}: {}", cell.flat())?;
            if let Cell::Exact { value, .. } = cell {
                if summary_short(value) {
                    writeln!(out, "{name}_exact: {}", fraction(value))?;
                }
            }
        }
        Ok(())
    }
}
