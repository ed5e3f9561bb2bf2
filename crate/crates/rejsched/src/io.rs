//! The two on-disk formats: instance files and solution files.
//!
//! Both are line-oriented ASCII with LF endings, `#` starting a comment,
//! and single spaces between integers. Keys appear in a fixed order;
//! anything unexpected is an error rather than a warning, so a stray `w:`
//! line on a p2 instance cannot be silently dropped.
//!
//! ```text
//! problem: p1        # p1 | p2 | p3
//! n: 3
//! U: 10
//! p: 4 1 7
//! r: 0 2 5           # present iff p1
//! w: ...             # present iff p3
//! e: 3 3 4
//! ```
//!
//! Solution files carry the partition and its claimed scores:
//!
//! ```text
//! objective: 12
//! rejection_cost: 3
//! accepted: 1 3
//! rejected: 2
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::instance::{Instance, Job, ProblemKind, Solution};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, msg: msg.into() }
}

/// (1-based line number, key, value) with comments and blanks removed.
fn keyed_lines(text: &str) -> Result<Vec<(usize, &str, &str)>, ParseError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once(':')
            .ok_or_else(|| syntax(line, "expected `key: value`"))?;
        out.push((line, key.trim(), value.trim()));
    }
    Ok(out)
}

fn parse_u64(line: usize, key: &str, token: &str) -> Result<u64, ParseError> {
    token
        .parse::<u64>()
        .map_err(|_| syntax(line, format!("`{key}` expects a non-negative integer, got `{token}`")))
}

fn parse_vec(line: usize, key: &str, value: &str, n: usize) -> Result<Vec<u64>, ParseError> {
    let values: Vec<u64> = value
        .split_whitespace()
        .map(|tok| parse_u64(line, key, tok))
        .collect::<Result<_, _>>()?;
    if values.len() != n {
        return Err(syntax(
            line,
            format!("`{key}` lists {} values, expected n = {n}", values.len()),
        ));
    }
    Ok(values)
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let lines = keyed_lines(text)?;
    let mut cursor = lines.iter();
    let mut expect = |wanted: &str| -> Result<(usize, &str), ParseError> {
        match cursor.next() {
            Some(&(line, key, value)) if key == wanted => Ok((line, value)),
            Some(&(line, key, _)) => {
                Err(syntax(line, format!("expected key `{wanted}`, found `{key}`")))
            }
            None => Err(syntax(0, format!("missing key `{wanted}`"))),
        }
    };

    let (line, value) = expect("problem")?;
    let kind = match value {
        "p1" => ProblemKind::P1,
        "p2" => ProblemKind::P2,
        "p3" => ProblemKind::P3,
        other => return Err(syntax(line, format!("unknown problem `{other}`"))),
    };
    let (line, value) = expect("n")?;
    let n = parse_u64(line, "n", value)? as usize;
    if n == 0 {
        return Err(syntax(line, "n must be >= 1"));
    }
    let (line, value) = expect("U")?;
    let u = parse_u64(line, "U", value)?;
    let (line, value) = expect("p")?;
    let p = parse_vec(line, "p", value, n)?;
    let r = if kind == ProblemKind::P1 {
        let (line, value) = expect("r")?;
        Some(parse_vec(line, "r", value, n)?)
    } else {
        None
    };
    let w = if kind == ProblemKind::P3 {
        let (line, value) = expect("w")?;
        Some(parse_vec(line, "w", value, n)?)
    } else {
        None
    };
    let (line, value) = expect("e")?;
    let e = parse_vec(line, "e", value, n)?;
    if let Some(&(line, key, _)) = cursor.next() {
        return Err(syntax(line, format!("unexpected key `{key}` after `e`")));
    }

    let jobs = (0..n)
        .map(|k| Job {
            id: k as u32 + 1,
            p: p[k],
            r: r.as_ref().map_or(0, |r| r[k]),
            w: w.as_ref().map_or(1, |w| w[k]),
            e: e[k],
        })
        .collect();
    Instance::new(kind, jobs, u).map_err(|err| ParseError::Invalid(err.to_string()))
}

fn push_ints(out: &mut String, key: &str, values: impl Iterator<Item = u64>) {
    out.push_str(key);
    out.push(':');
    for v in values {
        let _ = write!(out, " {v}");
    }
    out.push('\n');
}

/// Inverse of [`parse_instance`]; ids are positional (1..=n), so only
/// instances with consecutive ids round-trip verbatim.
pub fn format_instance(instance: &Instance) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "problem: {}", instance.kind);
    let _ = writeln!(out, "n: {}", instance.n());
    let _ = writeln!(out, "U: {}", instance.u);
    push_ints(&mut out, "p", instance.jobs.iter().map(|j| j.p));
    if instance.kind == ProblemKind::P1 {
        push_ints(&mut out, "r", instance.jobs.iter().map(|j| j.r));
    }
    if instance.kind == ProblemKind::P3 {
        push_ints(&mut out, "w", instance.jobs.iter().map(|j| j.w));
    }
    push_ints(&mut out, "e", instance.jobs.iter().map(|j| j.e));
    out
}

fn parse_id_list(line: usize, key: &str, value: &str) -> Result<Vec<u32>, ParseError> {
    let ids: Vec<u32> = value
        .split_whitespace()
        .map(|tok| {
            tok.parse::<u32>()
                .map_err(|_| syntax(line, format!("`{key}` expects job ids, got `{tok}`")))
        })
        .collect::<Result<_, _>>()?;
    if ids.windows(2).any(|w| w[0] >= w[1]) {
        return Err(syntax(line, format!("`{key}` ids must be strictly ascending")));
    }
    Ok(ids)
}

pub fn parse_solution(text: &str) -> Result<Solution, ParseError> {
    let lines = keyed_lines(text)?;
    let mut cursor = lines.iter();
    let mut expect = |wanted: &str| -> Result<(usize, &str), ParseError> {
        match cursor.next() {
            Some(&(line, key, value)) if key == wanted => Ok((line, value)),
            Some(&(line, key, _)) => {
                Err(syntax(line, format!("expected key `{wanted}`, found `{key}`")))
            }
            None => Err(syntax(0, format!("missing key `{wanted}`"))),
        }
    };

    let (line, value) = expect("objective")?;
    let objective = i64::try_from(parse_u64(line, "objective", value)?)
        .map_err(|_| syntax(line, "`objective` out of range"))?;
    let (line, value) = expect("rejection_cost")?;
    let rejection_cost = parse_u64(line, "rejection_cost", value)?;
    let (line, value) = expect("accepted")?;
    let accepted = parse_id_list(line, "accepted", value)?;
    let (line, value) = expect("rejected")?;
    let rejected = parse_id_list(line, "rejected", value)?;
    if let Some(&(line, key, _)) = cursor.next() {
        return Err(syntax(line, format!("unexpected key `{key}` after `rejected`")));
    }
    Ok(Solution { accepted, rejected, objective, rejection_cost })
}

pub fn format_solution(solution: &Solution) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "objective: {}", solution.objective);
    let _ = writeln!(out, "rejection_cost: {}", solution.rejection_cost);
    push_ints(&mut out, "accepted", solution.accepted.iter().map(|&id| id as u64));
    push_ints(&mut out, "rejected", solution.rejected.iter().map(|&id| id as u64));
    out
}
