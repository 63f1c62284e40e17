//! Labelled tables and checks, emitted as JSON, CSV or LaTeX from the same
//! strings so the three formats carry identical numbers.

use serde_json::{json, Value};

use crate::config::Format;

/// A matrix of strings with row and column labels.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: String,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<String>>,
}

impl Table {
    pub fn new(name: impl Into<String>, cols: Vec<String>) -> Self {
        Table {
            name: name.into(),
            rows: Vec::new(),
            cols,
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, row: impl Into<String>, entries: Vec<String>) {
        debug_assert_eq!(entries.len(), self.cols.len());
        self.rows.push(row.into());
        self.entries.push(entries);
    }

    fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "rows": self.rows,
            "cols": self.cols,
            "entries": self.entries,
        })
    }
}

/// One identity checked by a command.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// Where the identity failed, or a note on its scope.
    pub detail: Option<String>,
}

/// Everything a command produces.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub config: Value,
    pub tables: Vec<Table>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &str, config: Value) -> Self {
        Report {
            command: command.to_string(),
            config,
            tables: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool, detail: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            pass,
            detail,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
            Format::Latex => self.to_latex(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "config": self.config,
            "tables": self.tables.iter().map(Table::to_json).collect::<Vec<_>>(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "pass": c.pass,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
            "pass": self.passed(),
        })
    }

    fn check_table(&self) -> Table {
        let mut t = Table::new("checks", vec!["pass".into(), "detail".into()]);
        for c in &self.checks {
            t.push(c.name.clone(), vec![c.pass.to_string(), c.detail.clone().unwrap_or_default()]);
        }
        t
    }

    /// Each table as a block: its name, a header row, then labelled rows.
    /// Blocks are separated by an empty line; the checks come last.
    fn to_csv(&self) -> String {
        let mut blocks = Vec::new();
        for t in self.tables.iter().chain(std::iter::once(&self.check_table())) {
            let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
            w.write_record([t.name.as_str()]).expect("in-memory write");
            w.write_record(std::iter::once("").chain(t.cols.iter().map(String::as_str)))
                .expect("in-memory write");
            for (r, row) in t.rows.iter().zip(&t.entries) {
                w.write_record(std::iter::once(r.as_str()).chain(row.iter().map(String::as_str)))
                    .expect("in-memory write");
            }
            blocks.push(String::from_utf8(w.into_inner().expect("flushed")).expect("utf-8"));
        }
        blocks.join("\n")
    }

    /// One `tabular` per table, preceded by its name as a comment.
    fn to_latex(&self) -> String {
        let mut out = format!("% {}\n", self.command);
        for t in self.tables.iter().chain(std::iter::once(&self.check_table())) {
            out.push_str(&format!("% {}\n", t.name));
            out.push_str(&format!("\\begin{{tabular}}{{l|{}}}\n", "c".repeat(t.cols.len())));
            let head: Vec<String> = t.cols.iter().map(|c| latex_cell(c)).collect();
            out.push_str(&format!(" & {} \\\\\n\\hline\n", head.join(" & ")));
            for (r, row) in t.rows.iter().zip(&t.entries) {
                let cells: Vec<String> = std::iter::once(r).chain(row).map(|c| latex_cell(c)).collect();
                out.push_str(&format!("{} \\\\\n", cells.join(" & ")));
            }
            out.push_str("\\end{tabular}\n\n");
        }
        out
    }
}

/// A cell in math mode, with exponents braced so that `t^-1` reads as
/// `t^{-1}`. Cells with letters other than `t` are set as text.
fn latex_cell(s: &str) -> String {
    if s.is_empty() {
        return String::new();
    }
    let mathy = s
        .chars()
        .all(|c| c.is_ascii_digit() || c == 't' || " +-^/,|()".contains(c));
    if !mathy {
        return format!("\\texttt{{{}}}", latex_escape(s));
    }
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        if c == '^' {
            out.push_str("^{");
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() || (d == '-' && out.ends_with('{')) {
                    out.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            out.push('}');
        } else {
            out.push(c);
        }
    }
    format!("${}$", out)
}

fn latex_escape(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars() {
        match c {
            '\\' => out.push_str("\\textbackslash{}"),
            '^' => out.push_str("\\^{}"),
            '~' => out.push_str("\\~{}"),
            '|' => out.push_str("\\textbar{}"),
            '#' | '$' | '%' | '&' | '_' | '{' | '}' => {
                out.push('\\');
                out.push(c);
            }
            _ => out.push(c),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latex_cells() {
        assert_eq!(latex_cell("t^2 + 1"), "$t^{2} + 1$");
        assert_eq!(latex_cell("3t^-1"), "$3t^{-1}$");
        assert_eq!(latex_cell("2,1|1"), "$2,1|1$");
        assert_eq!(latex_cell("psi_r"), "\\texttt{psi\\_r}");
    }

    #[test]
    fn formats_carry_the_same_cells() {
        let mut r = Report::new("demo", json!({}));
        let mut t = Table::new("Dec", vec!["1,1".into()]);
        t.push("2", vec!["t".into()]);
        t.push("1,1", vec!["1".into()]);
        r.tables.push(t);
        r.check("identity", true, None);
        let csv = r.render(Format::Csv);
        assert!(csv.starts_with("Dec\n,\"1,1\"\n2,t\n\"1,1\",1\n"), "{}", csv);
        let tex = r.render(Format::Latex);
        assert!(tex.contains("$2$ & $t$ \\\\"), "{}", tex);
        let js = r.to_json();
        assert_eq!(js["tables"][0]["entries"], json!([["t"], ["1"]]));
        assert_eq!(js["pass"], json!(true));
    }
}
