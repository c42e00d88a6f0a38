//! Flat records and their table / JSON / CSV renderings.
//!
//! Machine formats carry 10 significant digits; human tables carry 4
//! decimals (scientific below 1e-3 so small overheads stay visible).

use std::fmt::Write as _;

use serde_json::{Map, Number, Value};

use crate::error::{Error, Result};

pub const MACHINE_DIGITS: usize = 10;

/// Output format selected on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

/// One cell of a record.
#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Str(String),
    UInt(Option<u64>),
    Float(Option<f64>),
    Bool(Option<bool>),
}

impl From<f64> for Field {
    fn from(v: f64) -> Self {
        Field::Float(Some(v))
    }
}

impl From<Option<f64>> for Field {
    fn from(v: Option<f64>) -> Self {
        Field::Float(v)
    }
}

impl From<bool> for Field {
    fn from(v: bool) -> Self {
        Field::Bool(Some(v))
    }
}

impl From<Option<bool>> for Field {
    fn from(v: Option<bool>) -> Self {
        Field::Bool(v)
    }
}

impl From<u64> for Field {
    fn from(v: u64) -> Self {
        Field::UInt(Some(v))
    }
}

impl From<Option<u64>> for Field {
    fn from(v: Option<u64>) -> Self {
        Field::UInt(v)
    }
}

impl From<usize> for Field {
    fn from(v: usize) -> Self {
        Field::UInt(Some(v as u64))
    }
}

impl From<String> for Field {
    fn from(v: String) -> Self {
        Field::Str(v)
    }
}

impl From<&str> for Field {
    fn from(v: &str) -> Self {
        Field::Str(v.to_owned())
    }
}

/// Ordered key/value record.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Record {
    fields: Vec<(&'static str, Field)>,
}

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: &'static str, value: impl Into<Field>) -> &mut Self {
        self.fields.push((key, value.into()));
        self
    }

    pub fn with(mut self, key: &'static str, value: impl Into<Field>) -> Self {
        self.push(key, value);
        self
    }

    pub fn keys(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.fields.iter().map(|(k, _)| *k)
    }

    pub fn get(&self, key: &str) -> Option<&Field> {
        self.fields.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    pub fn float(&self, key: &str) -> Option<f64> {
        match self.get(key)? {
            Field::Float(v) => *v,
            _ => None,
        }
    }

    fn to_json(&self) -> Value {
        let mut obj = Map::new();
        for (k, v) in &self.fields {
            let value = match v {
                Field::Str(s) => Value::String(s.clone()),
                Field::UInt(Some(u)) => Value::Number((*u).into()),
                Field::Float(Some(x)) => round_sig(*x, MACHINE_DIGITS)
                    .and_then(Number::from_f64)
                    .map_or(Value::Null, Value::Number),
                Field::UInt(None) | Field::Float(None) | Field::Bool(None) => Value::Null,
                Field::Bool(Some(b)) => Value::Bool(*b),
            };
            obj.insert((*k).to_owned(), value);
        }
        Value::Object(obj)
    }
}

/// `printf("%.{digits}g")`-style formatting: shortest of fixed or
/// scientific notation with `digits` significant digits, trailing zeros
/// removed, and a two-digit signed exponent.
pub fn format_sig(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 {
        return "0".to_owned();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_fraction(mantissa), exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp) as usize;
        trim_fraction(&format!("{x:.decimals$}")).to_owned()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `x` rounded to `digits` significant digits.
pub fn round_sig(x: f64, digits: usize) -> Option<f64> {
    x.is_finite()
        .then(|| format_sig(x, digits).parse().expect("formatted float"))
}

fn format_table_num(x: f64) -> String {
    if x != 0.0 && x.abs() < 1e-3 {
        format!("{x:.4e}")
    } else {
        format!("{x:.4}")
    }
}

fn cell_table(f: &Field) -> String {
    match f {
        Field::Str(s) => s.clone(),
        Field::UInt(Some(u)) => u.to_string(),
        Field::Float(Some(x)) => format_table_num(*x),
        Field::Bool(Some(b)) => b.to_string(),
        Field::UInt(None) | Field::Float(None) | Field::Bool(None) => "-".to_owned(),
    }
}

fn cell_csv(f: &Field) -> String {
    match f {
        Field::Str(s) => s.clone(),
        Field::UInt(Some(u)) => u.to_string(),
        Field::Float(Some(x)) => format_sig(*x, MACHINE_DIGITS),
        Field::Bool(Some(b)) => b.to_string(),
        Field::UInt(None) | Field::Float(None) | Field::Bool(None) => String::new(),
    }
}

/// How a table rendering lays records out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layout {
    /// One `key  value` line per field, blank line between records.
    Vertical,
    /// Header row plus one aligned row per record.
    Columns,
}

pub fn render(records: &[Record], format: Format, layout: Layout) -> Result<String> {
    match format {
        Format::Table => Ok(render_table(records, layout)),
        Format::Json => render_json(records),
        Format::Csv => render_csv(records),
    }
}

/// JSON array of flat objects, one per record, newline terminated.
pub fn render_json(records: &[Record]) -> Result<String> {
    let array = Value::Array(records.iter().map(Record::to_json).collect());
    let mut out = serde_json::to_string_pretty(&array).map_err(|e| Error::Io(e.to_string()))?;
    out.push('\n');
    Ok(out)
}

/// RFC 4180 CSV with a header row taken from the first record and LF line
/// endings.
pub fn render_csv(records: &[Record]) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    if let Some(first) = records.first() {
        w.write_record(first.keys()).map_err(csv_err)?;
    }
    for r in records {
        w.write_record(r.fields.iter().map(|(_, f)| cell_csv(f)))
            .map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

fn render_table(records: &[Record], layout: Layout) -> String {
    let mut out = String::new();
    match layout {
        Layout::Vertical => {
            for (i, r) in records.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                let width = r.keys().map(str::len).max().unwrap_or(0);
                for (k, v) in &r.fields {
                    let _ = writeln!(out, "{k:<width$}  {}", cell_table(v));
                }
            }
        }
        Layout::Columns => {
            let Some(first) = records.first() else {
                return out;
            };
            let header: Vec<String> = first.keys().map(str::to_owned).collect();
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| r.fields.iter().map(|(_, f)| cell_table(f)).collect())
                .collect();
            let widths: Vec<usize> = (0..header.len())
                .map(|c| {
                    rows.iter()
                        .map(|r| r[c].len())
                        .chain([header[c].len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |cells: &[String]| {
                cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            let _ = writeln!(out, "{}", line(&header));
            for r in &rows {
                let _ = writeln!(out, "{}", line(r));
            }
        }
    }
    out
}
