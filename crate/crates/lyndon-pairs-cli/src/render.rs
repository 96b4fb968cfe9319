//! Output in JSON or TSV. Each command builds one `Output`; rendering is the
//! only place that writes to stdout.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

/// A JSON document paired with its TSV table.
pub struct Output {
    pub json: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Output {
    pub fn new(json: impl Serialize, header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        let json = serde_json::to_value(json).expect("output types serialize");
        Output { json, header, rows }
    }

    pub fn emit(&self, format: Format) -> io::Result<()> {
        let stdout = io::stdout();
        let mut out = stdout.lock();
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut out, &self.json)?;
                writeln!(out)
            }
            Format::Tsv => {
                writeln!(out, "{}", self.header.join("\t"))?;
                for row in &self.rows {
                    writeln!(out, "{}", row.join("\t"))?;
                }
                Ok(())
            }
        }
    }
}

pub fn join(words: &[String]) -> String {
    words.join(" ")
}
