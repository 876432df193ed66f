//! Rendering of command results as text, JSON or CSV.

use serde_json::Value;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// A rectangular result; the first column usually names the row.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: impl IntoIterator<Item = impl Into<String>>) -> Self {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: impl IntoIterator<Item = impl ToString>) {
        self.rows.push(row.into_iter().map(|c| c.to_string()).collect());
    }

    pub fn to_text(&self) -> String {
        let cols = self.header.len();
        let mut width = vec![0; cols];
        for row in std::iter::once(&self.header).chain(&self.rows) {
            for (w, c) in width.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        // numeric columns are right aligned, text columns left aligned
        let numeric: Vec<bool> = (0..cols)
            .map(|i| i > 0 && self.rows.iter().all(|r| r[i].parse::<f64>().is_ok()))
            .collect();
        let mut s = String::new();
        for row in std::iter::once(&self.header).chain(&self.rows) {
            let cells: Vec<String> = row
                .iter()
                .zip(&width)
                .enumerate()
                .map(|(i, (c, &w))| {
                    let pad = w - c.chars().count();
                    if numeric[i] {
                        format!("{}{c}", " ".repeat(pad))
                    } else {
                        format!("{c}{}", " ".repeat(pad))
                    }
                })
                .collect();
            s.push_str(cells.join("  ").trim_end());
            s.push('\n');
        }
        s
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }
}

/// What a command produced. `failure` carries the first failing item of a verification.
pub struct Out {
    pub text: String,
    pub json: Value,
    pub table: Option<Table>,
    pub failure: Option<String>,
}

impl Out {
    pub fn new(text: impl Into<String>, json: Value) -> Self {
        Out {
            text: text.into(),
            json,
            table: None,
            failure: None,
        }
    }

    /// A table with a JSON form given separately.
    pub fn table(table: Table, json: Value) -> Self {
        Out {
            text: table.to_text(),
            json,
            table: Some(table),
            failure: None,
        }
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        Ok(match format {
            Format::Text => {
                let mut s = self.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
            Format::Json => {
                serde_json::to_string_pretty(&self.json).expect("json values serialize") + "\n"
            }
            Format::Csv => match &self.table {
                Some(t) => t.to_csv(),
                None => return Err(CliError::Usage("csv output is only available for tables and reports".into())),
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_partitions() {
        let mut t = Table::new(["lambda", "j=1"]);
        t.push(["[2,1]", "3"]);
        assert_eq!(t.to_csv(), "lambda,j=1\n\"[2,1]\",3\n");
        assert_eq!(t.to_text(), "lambda  j=1\n[2,1]     3\n");
    }
}
