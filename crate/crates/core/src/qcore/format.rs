//! Text and JSON forms of a quandle table.
//!
//! Text: the first line holds `n`, followed by `n` lines of `n`
//! space-separated integers; line `x`, column `y` holds `s_x(y)`. Anything
//! after `#` on a line is a comment and blank lines are ignored.
//!
//! JSON: `{ "n": n, "table": [[...], ...] }` with the same row convention.
//! Input starting with `{` is read as JSON.
//!
//! Several quandles may be concatenated with lines consisting of `---`.

use serde::Deserialize;
use thiserror::Error;

use super::{verify, AxiomReport, FormatError, Quandle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("not a quandle: {0}")]
    Axioms(Box<AxiomReport>),
}

#[derive(Deserialize)]
struct JsonTable {
    n: usize,
    table: Vec<Vec<usize>>,
}

/// Parses a table without checking the axioms; shape and range are checked.
pub fn parse_raw(text: &str) -> Result<Vec<Vec<usize>>, ParseError> {
    let rows = if text.trim_start().starts_with('{') {
        parse_json(text)?
    } else {
        parse_text(text)?
    };
    verify_shape(&rows)?;
    Ok(rows)
}

/// Parses and verifies a quandle; tables failing S1–S3 are rejected with
/// their [`AxiomReport`].
pub fn parse(text: &str) -> Result<Quandle, ParseError> {
    let rows = parse_raw(text)?;
    let report = verify(&rows)?;
    if !report.is_quandle() {
        return Err(ParseError::Axioms(Box::new(report)));
    }
    Ok(Quandle::from_rows_unchecked(rows))
}

/// Parses quandles separated by `---` lines.
pub fn parse_many(text: &str) -> Result<Vec<Quandle>, ParseError> {
    let mut out = Vec::new();
    let mut chunk = String::new();
    for line in text.lines() {
        if line.trim() == "---" {
            if has_content(&chunk) {
                out.push(parse(&chunk)?);
            }
            chunk.clear();
        } else {
            chunk.push_str(line);
            chunk.push('\n');
        }
    }
    if has_content(&chunk) {
        out.push(parse(&chunk)?);
    }
    Ok(out)
}

fn has_content(chunk: &str) -> bool {
    chunk.lines().any(|l| !strip_comment(l).trim().is_empty())
}

pub fn serialize(q: &Quandle) -> String {
    let mut out = format!("{}\n", q.len());
    for x in 0..q.len() {
        let row: Vec<String> = q.row(x).iter().map(usize::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn serialize_many(qs: &[Quandle]) -> String {
    qs.iter().map(serialize).collect::<Vec<_>>().join("---\n")
}

pub fn serialize_json(q: &Quandle) -> String {
    serde_json::to_string(q).expect("quandle serializes")
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn parse_text(text: &str) -> Result<Vec<Vec<usize>>, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l).trim()))
        .filter(|(_, l)| !l.is_empty());

    let Some((line, header)) = lines.next() else {
        return Err(FormatError::Empty.into());
    };
    let n: usize = header.parse().map_err(|_| ParseError::Syntax {
        line,
        message: format!("expected the cardinality, found {header:?}"),
    })?;
    if n == 0 {
        return Err(FormatError::Empty.into());
    }

    let mut rows = Vec::with_capacity(n);
    for (line, content) in lines {
        let row = content
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| ParseError::Syntax {
                    line,
                    message: format!("expected a point, found {tok:?}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if rows.len() == n {
            return Err(ParseError::Syntax {
                line,
                message: format!("more than {n} rows"),
            });
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(ParseError::Syntax {
            line: text.lines().count(),
            message: format!("expected {n} rows, found {}", rows.len()),
        });
    }
    Ok(rows)
}

fn parse_json(text: &str) -> Result<Vec<Vec<usize>>, ParseError> {
    let parsed: JsonTable =
        serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    if parsed.table.len() != parsed.n {
        return Err(ParseError::Json(format!(
            "n = {} but the table has {} rows",
            parsed.n,
            parsed.table.len()
        )));
    }
    Ok(parsed.table)
}

fn verify_shape(rows: &[Vec<usize>]) -> Result<(), FormatError> {
    // verify() checks shape first; only its error matters here
    verify(rows).map(|_| ())
}
