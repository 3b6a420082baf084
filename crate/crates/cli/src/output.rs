//! Rendering of command results as JSON or CSV.

use std::io::Write;

use serde_json::{json, Map, Value as Json};

use fraciter::{Error, Real};

pub type Row = Map<String, Json>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// What every command produces.
pub struct Output {
    pub command: &'static str,
    pub config: Row,
    pub results: Vec<Row>,
    pub residuals: Option<Row>,
    pub pass: Option<bool>,
}

impl Output {
    pub fn new(command: &'static str, config: Row) -> Output {
        Output {
            command,
            config,
            results: Vec::new(),
            residuals: None,
            pass: None,
        }
    }

    pub fn render(&self, format: Format) -> Result<String, Error> {
        match format {
            Format::Json => {
                let mut top = Map::new();
                top.insert("command".into(), json!(self.command));
                top.insert("config".into(), Json::Object(self.config.clone()));
                top.insert(
                    "results".into(),
                    Json::Array(self.results.iter().cloned().map(Json::Object).collect()),
                );
                if let Some(r) = &self.residuals {
                    top.insert("residuals".into(), Json::Object(r.clone()));
                }
                if let Some(p) = self.pass {
                    top.insert("pass".into(), json!(p));
                }
                let mut s = serde_json::to_string_pretty(&Json::Object(top))
                    .map_err(|e| Error::InvalidInput(e.to_string()))?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => csv_table(&self.results),
        }
    }
}

/// Header is the union of keys in first-seen order; missing cells are empty.
fn csv_table(rows: &[Row]) -> Result<String, Error> {
    let mut header: Vec<&str> = Vec::new();
    for r in rows {
        for k in r.keys() {
            if !header.contains(&k.as_str()) {
                header.push(k);
            }
        }
    }
    let io = |e: csv::Error| Error::InvalidInput(e.to_string());
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(&header).map_err(io)?;
    for r in rows {
        let cells: Vec<String> = header
            .iter()
            .map(|k| match r.get(*k) {
                None | Some(Json::Null) => String::new(),
                Some(Json::String(s)) => s.clone(),
                Some(v) => v.to_string(),
            })
            .collect();
        w.write_record(&cells).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::InvalidInput(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::InvalidInput(e.to_string()))
}

/// A decimal string as a JSON number when it survives a round trip
/// through `f64` (at most 15 significant digits), else as a string.
pub fn num_str(s: String) -> Json {
    let sig = s
        .split(['e', 'E'])
        .next()
        .unwrap_or("")
        .chars()
        .filter(|c| c.is_ascii_digit())
        .collect::<String>();
    let sig = sig.trim_start_matches('0').trim_end_matches('0').len();
    if sig <= 15 {
        if let Ok(n) = s.parse::<i64>() {
            return json!(n);
        }
        if let Ok(x) = s.parse::<f64>() {
            if let Some(n) = serde_json::Number::from_f64(x) {
                return Json::Number(n);
            }
        }
    }
    Json::String(s)
}

pub fn real(x: &Real, digits: u32) -> Json {
    num_str(x.to_decimal(digits as usize))
}

pub fn write(text: &str, out: Option<&std::path::Path>) -> std::io::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text),
        None => {
            let mut so = std::io::stdout().lock();
            so.write_all(text.as_bytes())?;
            so.flush()
        }
    }
}
