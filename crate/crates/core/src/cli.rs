//! The `quandle` command-line front end.
//!
//! Exit codes: 0 on success, 1 when a checked property fails (axiom
//! violation, non-isomorphic inputs, conjecture counterexample, strict-mode
//! mismatch), 2 on usage or input-format errors.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::alexander::{self, render_strict, render_table, ClassificationRecord};
use crate::analysis::{analyze_with, is_isomorphic, AnalysisOptions};
use crate::census;
use crate::qcore::{self, ParseError, Quandle};

/// The classification table as transcribed for regression checks.
pub const TABLE1_FIXTURE: &str = include_str!("../fixtures/table1.txt");

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "quandle", version, about = "Finite quandle toolkit")]
pub struct Cli {
    /// Emit JSON instead of plain text
    #[arg(long, global = true)]
    pub json: bool,

    /// Compare classification output byte for byte against the bundled table
    #[arg(long, global = true)]
    pub strict: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the quandle axioms on a table file
    Verify { file: PathBuf },
    /// Report connectivity, two-point homogeneity, cyclic type and more
    Analyze {
        file: PathBuf,
        /// Also test two-point homogeneity with respect to Aut(X)
        #[arg(long)]
        aut: bool,
    },
    /// Write the table of the linear Alexander quandle Λ_p/(t−a)
    Alexander {
        p: u64,
        a: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Two-point homogeneous quandles of prime order p
    Classify { p: u64 },
    /// Classification rows for every prime 3 ≤ p ≤ P_MAX
    Table { p_max: u64 },
    /// Enumerate quandles of order n up to isomorphism
    Census {
        n: usize,
        /// Keep connected classes only
        #[arg(long)]
        connected: bool,
        /// Check that every two-point homogeneous class is of cyclic type
        #[arg(long)]
        check_conjecture: bool,
    },
    /// Search for an isomorphism between two quandles
    Iso { a: PathBuf, b: PathBuf },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub payload: String,
}

impl CommandResult {
    fn ok(payload: String) -> Self {
        Self {
            exit_code: EXIT_OK,
            payload,
        }
    }

    fn property(payload: String) -> Self {
        Self {
            exit_code: EXIT_PROPERTY,
            payload,
        }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Self {
            exit_code: EXIT_USAGE,
            payload: format!("error: {message}\n"),
        }
    }

    fn with(exit_code: i32, payload: String) -> Self {
        Self { exit_code, payload }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(err) => {
            let code = if err.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_OK
            };
            CommandResult::with(code, err.render().to_string())
        }
    }
}

pub fn execute(cli: &Cli) -> CommandResult {
    match &cli.command {
        Command::Verify { file } => cmd_verify(file, cli.json),
        Command::Analyze { file, aut } => cmd_analyze(file, *aut, cli.json),
        Command::Alexander { p, a, out } => cmd_alexander(*p, *a, out.as_deref(), cli.json),
        Command::Classify { p } => cmd_classify(*p, cli.json, cli.strict),
        Command::Table { p_max } => cmd_table(*p_max, cli.json, cli.strict),
        Command::Census {
            n,
            connected,
            check_conjecture,
        } => cmd_census(*n, *connected, *check_conjecture, cli.json),
        Command::Iso { a, b } => cmd_iso(a, b, cli.json),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn read(path: &Path) -> Result<String, CommandResult> {
    fs::read_to_string(path)
        .map_err(|e| CommandResult::usage(format!("cannot read {}: {e}", path.display())))
}

/// Reads a quandle; axiom failures are property failures, everything else
/// is a format error.
fn load(path: &Path, json: bool) -> Result<Quandle, CommandResult> {
    let text = read(path)?;
    qcore::parse(&text).map_err(|err| match err {
        ParseError::Axioms(report) => {
            let payload = if json {
                to_json(&axiom_json(&report))
            } else {
                format!("{}: not a quandle\n{report}\n", path.display())
            };
            CommandResult::property(payload)
        }
        other => CommandResult::usage(format!("{}: {other}", path.display())),
    })
}

fn axiom_json(report: &qcore::AxiomReport) -> serde_json::Value {
    let violations: Vec<serde_json::Value> = report
        .violations()
        .map(|v| {
            json!({
                "witness": v,
                "symmetry_form": v.symmetry_form(),
                "operator_form": v.operator_form(),
            })
        })
        .collect();
    json!({
        "n": report.n,
        "is_quandle": report.is_quandle(),
        "q1_ok": report.q1_ok(),
        "q2_ok": report.q2_ok(),
        "q3_ok": report.q3_ok(),
        "violations": violations,
    })
}

pub fn cmd_verify(file: &Path, json: bool) -> CommandResult {
    let text = match read(file) {
        Ok(t) => t,
        Err(r) => return r,
    };
    let rows = match qcore::parse_raw(&text) {
        Ok(rows) => rows,
        Err(e) => return CommandResult::usage(format!("{}: {e}", file.display())),
    };
    let report = match qcore::verify(&rows) {
        Ok(r) => r,
        Err(e) => return CommandResult::usage(format!("{}: {e}", file.display())),
    };
    let payload = if json {
        to_json(&axiom_json(&report))
    } else {
        let mut s = format!("{report}\n");
        if report.is_quandle() {
            s.push_str("quandle: yes\n");
        } else {
            s.push_str("quandle: no\n");
        }
        s
    };
    let code = if report.is_quandle() {
        EXIT_OK
    } else {
        EXIT_PROPERTY
    };
    CommandResult::with(code, payload)
}

pub fn cmd_analyze(file: &Path, aut: bool, json: bool) -> CommandResult {
    let q = match load(file, json) {
        Ok(q) => q,
        Err(r) => return r,
    };
    match analyze_with(&q, &AnalysisOptions { aut_variant: aut }) {
        Ok(report) if json => CommandResult::ok(to_json(&report)),
        Ok(report) => CommandResult::ok(report.to_string()),
        Err(e) => CommandResult::usage(e),
    }
}

pub fn cmd_alexander(p: u64, a: u64, out: Option<&Path>, json: bool) -> CommandResult {
    let q = match alexander::linear_alexander(p, a) {
        Ok(q) => q,
        Err(e) => return CommandResult::usage(e),
    };
    let body = if json {
        format!("{}\n", qcore::serialize_json(&q))
    } else {
        qcore::serialize(&q)
    };
    match out {
        Some(path) => match fs::write(path, &body) {
            Ok(()) => CommandResult::ok(format!("wrote {}\n", path.display())),
            Err(e) => CommandResult::usage(format!("cannot write {}: {e}", path.display())),
        },
        None => CommandResult::ok(body),
    }
}

/// Fixture rows keyed by prime, header excluded.
fn fixture_rows() -> Vec<(u64, &'static str)> {
    TABLE1_FIXTURE
        .lines()
        .skip(1)
        .filter_map(|line| {
            let p = line.split('|').next()?.trim().parse().ok()?;
            Some((p, line))
        })
        .collect()
}

fn strict_compare(rows: &[ClassificationRecord], with_header: bool) -> CommandResult {
    let fixture = fixture_rows();
    let max_fixture = fixture.last().map(|(p, _)| *p).unwrap_or(0);
    if let Some(r) = rows.iter().find(|r| r.p > max_fixture) {
        return CommandResult::usage(format!(
            "strict mode covers primes up to {max_fixture}, got {}",
            r.p
        ));
    }
    let rendered = if with_header {
        render_strict(rows)
    } else {
        rows.iter()
            .map(|r| format!("{}\n", r.strict_row()))
            .collect()
    };
    let mut expected = String::new();
    if with_header {
        expected.push_str(alexander::TABLE_HEADER);
        expected.push('\n');
    }
    for r in rows {
        if let Some((_, line)) = fixture.iter().find(|(p, _)| *p == r.p) {
            expected.push_str(line);
            expected.push('\n');
        }
    }
    if rendered == expected {
        CommandResult::ok(rendered)
    } else {
        CommandResult::property(format!(
            "strict mismatch\n--- expected\n{expected}--- computed\n{rendered}"
        ))
    }
}

pub fn cmd_classify(p: u64, json: bool, strict: bool) -> CommandResult {
    let record = match alexander::classify_prime(p) {
        Ok(r) => r,
        Err(e) => return CommandResult::usage(e),
    };
    if strict {
        return strict_compare(std::slice::from_ref(&record), false);
    }
    if json {
        CommandResult::ok(to_json(&record))
    } else {
        CommandResult::ok(format!("{record}\n"))
    }
}

pub fn cmd_table(p_max: u64, json: bool, strict: bool) -> CommandResult {
    if p_max < 3 {
        return CommandResult::usage(format!("P_MAX must be at least 3, got {p_max}"));
    }
    let rows = match alexander::table_rows(p_max) {
        Ok(rows) => rows,
        Err(e) => return CommandResult::usage(e),
    };
    if strict {
        return strict_compare(&rows, true);
    }
    if json {
        CommandResult::ok(to_json(&rows))
    } else {
        CommandResult::ok(render_table(&rows))
    }
}

pub fn cmd_census(n: usize, connected: bool, check_conjecture: bool, json: bool) -> CommandResult {
    if check_conjecture {
        let report = match census::check_conjecture(n) {
            Ok(r) => r,
            Err(e) => return CommandResult::usage(e),
        };
        let payload = if json {
            to_json(&report)
        } else {
            report.render_text()
        };
        let code = if report.holds() {
            EXIT_OK
        } else {
            EXIT_PROPERTY
        };
        return CommandResult::with(code, payload);
    }
    let result = match census::enumerate(n, connected) {
        Ok(r) => r,
        Err(e) => return CommandResult::usage(e),
    };
    if json {
        #[derive(Serialize)]
        struct Out<'a> {
            summary: census::CensusSummary,
            classes: &'a [census::CensusClass],
        }
        CommandResult::ok(to_json(&Out {
            summary: result.summary(),
            classes: &result.classes,
        }))
    } else {
        CommandResult::ok(result.render_text())
    }
}

pub fn cmd_iso(a: &Path, b: &Path, json: bool) -> CommandResult {
    let qa = match load(a, json) {
        Ok(q) => q,
        Err(r) => return r,
    };
    let qb = match load(b, json) {
        Ok(q) => q,
        Err(r) => return r,
    };
    let witness = is_isomorphic(&qa, &qb);
    let payload = if json {
        to_json(&json!({
            "isomorphic": witness.is_some(),
            "witness": witness.as_ref().map(|w| w.images().to_vec()),
        }))
    } else {
        match &witness {
            Some(w) => format!("isomorphic: {} {}\n", w.one_line(), w),
            None => "not isomorphic\n".to_string(),
        }
    };
    let code = if witness.is_some() {
        EXIT_OK
    } else {
        EXIT_PROPERTY
    };
    CommandResult::with(code, payload)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{dihedral, serialize, tetrahedron, trivial};

    fn write_tmp(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
        let path = dir.path().join(name);
        fs::write(&path, text).unwrap();
        path
    }

    fn run_args(args: &[&str]) -> CommandResult {
        run(std::iter::once("quandle").chain(args.iter().copied()))
    }

    #[test]
    fn verify_exit_codes() {
        let dir = tempfile::tempdir().unwrap();
        let good = write_tmp(&dir, "d3.txt", &serialize(&dihedral(3)));
        let bad = write_tmp(&dir, "bad.txt", "3\n1 0 2\n0 1 2\n0 1 2\n");
        let ragged = write_tmp(&dir, "ragged.txt", "3\n0 1 2\n0 1\n0 1 2\n");
        assert_eq!(cmd_verify(&good, false).exit_code, 0);
        let r = cmd_verify(&bad, false);
        assert_eq!(r.exit_code, 1);
        assert!(r.payload.contains("S1 fails: s_0(0) = 1"), "{}", r.payload);
        assert_eq!(cmd_verify(&ragged, false).exit_code, 2);
        assert_eq!(cmd_verify(&dir.path().join("missing"), false).exit_code, 2);
    }

    #[test]
    fn analyze_outputs() {
        let dir = tempfile::tempdir().unwrap();
        let tet = write_tmp(&dir, "tet.txt", &serialize(&tetrahedron()));
        assert!(cmd_analyze(&tet, false, false)
            .payload
            .contains("cyclic_type: true"));
        let d4 = write_tmp(&dir, "d4.txt", &serialize(&dihedral(4)));
        assert!(cmd_analyze(&d4, false, false)
            .payload
            .contains("connected: false"));
        let t1 = write_tmp(&dir, "t1.txt", &serialize(&trivial(1)));
        assert!(cmd_analyze(&t1, false, false)
            .payload
            .contains("not defined (n < 3)"));
        let bad = write_tmp(&dir, "bad.txt", "2\n1 0\n0 1\n");
        assert_eq!(cmd_analyze(&bad, false, false).exit_code, 1);
    }

    #[test]
    fn alexander_outputs() {
        let r = cmd_alexander(5, 2, None, false);
        assert_eq!(r.exit_code, 0);
        assert_eq!(r.payload.lines().nth(1), Some("0 2 4 1 3"));
        assert_eq!(r.payload.lines().count(), 6);
        assert_eq!(
            cmd_alexander(7, 1, None, false).payload,
            serialize(&trivial(7))
        );
        assert_eq!(cmd_alexander(6, 2, None, false).exit_code, 2);
    }

    #[test]
    fn classify_and_table() {
        let r = cmd_classify(11, false, false);
        assert!(r.payload.contains("count 4: 2↔6, 7↔8"));
        assert_eq!(cmd_classify(9, false, false).exit_code, 2);
        assert_eq!(cmd_classify(11, false, true).exit_code, 0);
        let t = cmd_table(37, false, true);
        assert_eq!(t.exit_code, 0, "{}", t.payload);
        assert_eq!(t.payload, TABLE1_FIXTURE);
        assert_eq!(cmd_table(37, false, false).payload.lines().count(), 12);
        assert_eq!(cmd_table(41, false, true).exit_code, 2);
        assert_eq!(cmd_table(2, false, false).exit_code, 2);
    }

    #[test]
    fn census_outputs() {
        let r = cmd_census(3, false, false, false);
        assert!(r.payload.contains("# isomorphism classes: 3"));
        let r = cmd_census(4, false, true, false);
        assert_eq!(r.exit_code, 0);
        assert!(r.payload.contains("no counterexample"));
        assert_eq!(cmd_census(7, false, false, false).exit_code, 2);
    }

    #[test]
    fn iso_outputs() {
        let dir = tempfile::tempdir().unwrap();
        let l4 = write_tmp(
            &dir,
            "l4.txt",
            &serialize(&crate::linear_alexander(5, 4).unwrap()),
        );
        let d5 = write_tmp(&dir, "d5.txt", &serialize(&dihedral(5)));
        let l2 = write_tmp(
            &dir,
            "l2.txt",
            &serialize(&crate::linear_alexander(5, 2).unwrap()),
        );
        let l3 = write_tmp(
            &dir,
            "l3.txt",
            &serialize(&crate::linear_alexander(5, 3).unwrap()),
        );
        assert_eq!(cmd_iso(&l4, &d5, false).exit_code, 0);
        let same = cmd_iso(&l2, &l2, false);
        assert_eq!(same.payload, "isomorphic: [0,1,2,3,4] ()\n");
        let r = cmd_iso(&l2, &l3, false);
        assert_eq!((r.exit_code, r.payload.as_str()), (1, "not isomorphic\n"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&["nonsense"]).exit_code, 2);
        assert_eq!(run_args(&["classify", "x"]).exit_code, 2);
        assert_eq!(run_args(&["--help"]).exit_code, 0);
    }
}
