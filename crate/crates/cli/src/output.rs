use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use serde_json::{Map, Value};

use sigma2_core::{distinct_count, CompactSolution};

use crate::Format;

pub const OK: u8 = 0;
pub const CHECK_FAILED: u8 = 1;
pub const USAGE: u8 = 2;

/// Everything a command produced, emitted only after it finishes.
pub struct Run {
    pub command: &'static str,
    pub parameters: Map<String, Value>,
    pub stdout: String,
    pub diagnostics: Vec<String>,
    pub result_count: usize,
    pub status: u8,
}

impl Run {
    pub fn new(command: &'static str, parameters: Value) -> Self {
        let Value::Object(parameters) = parameters else {
            unreachable!("parameters are built with json!({{..}})")
        };
        Self {
            command,
            parameters,
            stdout: String::new(),
            diagnostics: Vec::new(),
            result_count: 0,
            status: OK,
        }
    }

    pub fn line(&mut self, text: impl AsRef<str>) {
        self.stdout.push_str(text.as_ref());
        self.stdout.push('\n');
    }
}

#[derive(Debug)]
pub struct Failure {
    pub message: String,
    pub status: u8,
}

impl From<sigma2_core::Error> for Failure {
    fn from(e: sigma2_core::Error) -> Self {
        use sigma2_core::Error::*;
        let status = match e {
            Contract(_) | Overflow { .. } => CHECK_FAILED,
            _ => USAGE,
        };
        Self { message: e.to_string(), status }
    }
}

#[derive(Serialize)]
pub struct Manifest {
    command: &'static str,
    parameters: Map<String, Value>,
    version: &'static str,
    elapsed_seconds: f64,
    result_count: usize,
}

impl Manifest {
    pub fn new(command: &'static str, parameters: Map<String, Value>, elapsed: Duration, result_count: usize) -> Self {
        Self {
            command,
            parameters,
            version: env!("CARGO_PKG_VERSION"),
            elapsed_seconds: elapsed.as_secs_f64(),
            result_count,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("manifest serializes")
    }
}

#[derive(Serialize)]
struct SolutionRow<'a> {
    n: u64,
    ones: u64,
    tail: &'a [u64],
    m: Value,
    i: usize,
    distinct: usize,
}

fn m_value(c: &CompactSolution) -> Value {
    let m = c.m().expect("emitted solutions are verified");
    match u64::try_from(m) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(m.to_string()),
    }
}

pub const CSV_HEADER: &str = "n,ones,tail,m,i,distinct";

pub fn write_solutions(run: &mut Run, format: Format, sols: &[CompactSolution]) {
    if let Format::Csv = format {
        run.line(CSV_HEADER);
    }
    for c in sols {
        match format {
            Format::Jsonl => {
                let row = SolutionRow {
                    n: c.n(),
                    ones: c.ones(),
                    tail: c.tail(),
                    m: m_value(c),
                    i: c.i(),
                    distinct: distinct_count(c),
                };
                run.line(serde_json::to_string(&row).expect("row serializes"));
            }
            Format::Csv => {
                let tail: Vec<String> = c.tail().iter().map(u64::to_string).collect();
                let m = c.m().expect("emitted solutions are verified");
                let mut line = String::new();
                write!(line, "{},{},{},{m},{},{}", c.n(), c.ones(), tail.join("|"), c.i(), distinct_count(c)).unwrap();
                run.line(line);
            }
        }
    }
    run.result_count = sols.len();
}

/// Comma-separated positive integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct List(pub Vec<u64>);

pub fn parse_list(s: &str) -> Result<List, String> {
    let xs = s
        .split(',')
        .map(|part| {
            let part = part.trim();
            match part.parse::<u64>() {
                Ok(0) => Err("entries must be positive".to_string()),
                Ok(v) => Ok(v),
                Err(_) => Err(format!("`{part}` is not a positive integer")),
            }
        })
        .collect::<Result<Vec<u64>, String>>()?;
    Ok(List(xs))
}

pub fn parse_tuple(s: &str) -> Result<List, String> {
    let xs = parse_list(s)?;
    if xs.0.len() < 3 {
        return Err(format!("need at least 3 entries, got {}", xs.0.len()));
    }
    Ok(xs)
}

/// `A..B` or `A..=B` (both inclusive), or a single `K`.
pub fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let bad = || format!("`{s}` is not a range like 3..4");
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.trim_start_matches('=')),
        None => (s, s),
    };
    let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u32 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!(parse_tuple("2,3,6"), Ok(List(vec![2, 3, 6])));
        assert!(parse_tuple("3").is_err());
        assert!(parse_tuple("1,0,2").is_err());
        assert!(parse_tuple("1,x,2").is_err());
        assert_eq!(parse_range("3..4"), Ok((3, 4)));
        assert_eq!(parse_range("3..=6"), Ok((3, 6)));
        assert_eq!(parse_range("5"), Ok((5, 5)));
        assert!(parse_range("4..3").is_err());
    }
}
