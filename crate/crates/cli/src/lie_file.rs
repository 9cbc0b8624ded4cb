//! The `.lie` text format.
//!
//! ```text
//! lie 1
//! dim 3
//! basis P Q Z
//! [P,Q] = 1 Z          # coefficients are integers or p/q
//! ```
//!
//! Brackets not listed are zero. A bracket line lists `coefficient name`
//! pairs joined by `+`; `0` alone denotes the zero bracket.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};
use orbit_rank_core::lie::{BracketEntry, LieError};
use orbit_rank_core::linalg::parse_rat;
use orbit_rank_core::{LieAlgebra, Rat};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieFileError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("line {line}: `{name}` is not a declared basis name")]
    UndeclaredName { line: usize, name: String },
    #[error("line {line}: bracket [{left},{right}] is listed twice")]
    DuplicateBracket {
        line: usize,
        left: String,
        right: String,
    },
    #[error("JacobiViolation on ({}, {}, {}): residual {}", .names[0], .names[1], .names[2], .residual)]
    Jacobi {
        names: [String; 3],
        residual: String,
    },
    #[error(transparent)]
    Invalid(LieError),
}

/// A parsed but not yet validated `.lie` file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieFile {
    pub version: u32,
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketLine>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketLine {
    pub line: usize,
    pub left: String,
    pub right: String,
    pub terms: Vec<(Rat, String)>,
}

/// Splits a line into whitespace-separated tokens with their 1-based columns,
/// dropping a trailing `#` comment.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in content.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &content[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &content[s..]));
    }
    out
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> SyntaxError {
    SyntaxError {
        line,
        column,
        message: message.into(),
    }
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn parse_lie_file(text: &str) -> Result<LieFile, SyntaxError> {
    let mut version = None;
    let mut dim = None;
    let mut basis: Option<Vec<String>> = None;
    let mut brackets = Vec::new();
    let mut last_line = 0;

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        last_line = line;
        let toks = tokens(raw);
        let Some(&(col, head)) = toks.first() else {
            continue;
        };
        match head {
            "lie" if version.is_none() => {
                let [_, (c, v)] = toks[..] else {
                    return Err(syntax(line, col, "expected `lie 1`"));
                };
                if v != "1" {
                    return Err(syntax(line, c, format!("unsupported version `{v}`")));
                }
                version = Some(1);
            }
            _ if version.is_none() => {
                return Err(syntax(line, col, "expected header `lie 1`"));
            }
            "dim" if dim.is_none() => {
                let [_, (c, v)] = toks[..] else {
                    return Err(syntax(line, col, "expected `dim <n>`"));
                };
                let n: usize = v
                    .parse()
                    .map_err(|_| syntax(line, c, format!("`{v}` is not a natural number")))?;
                dim = Some(n);
            }
            _ if dim.is_none() => return Err(syntax(line, col, "expected `dim <n>`")),
            "basis" if basis.is_none() => {
                let mut names = Vec::new();
                for &(c, name) in &toks[1..] {
                    if !is_name(name) {
                        return Err(syntax(line, c, format!("invalid basis name `{name}`")));
                    }
                    names.push(name.to_string());
                }
                let n = dim.unwrap_or_default();
                if names.len() != n {
                    return Err(syntax(
                        line,
                        col,
                        format!("expected {n} basis names, found {}", names.len()),
                    ));
                }
                basis = Some(names);
            }
            _ if basis.is_none() => return Err(syntax(line, col, "expected `basis <names>`")),
            _ if head.starts_with('[') => brackets.push(parse_bracket(line, &toks)?),
            _ => return Err(syntax(line, col, format!("unexpected `{head}`"))),
        }
    }
    let missing = if version.is_none() {
        Some("header `lie 1`")
    } else if dim.is_none() {
        Some("`dim` line")
    } else if basis.is_none() {
        Some("`basis` line")
    } else {
        None
    };
    if let Some(what) = missing {
        return Err(syntax(last_line.max(1), 1, format!("missing {what}")));
    }
    Ok(LieFile {
        version: 1,
        dim: dim.unwrap_or_default(),
        basis: basis.unwrap_or_default(),
        brackets,
    })
}

/// Parses `[A,B] = c1 N1 + c2 N2 ...`. The head may be split by whitespace,
/// as in `[A, B]`.
fn parse_bracket(line: usize, toks: &[(usize, &str)]) -> Result<BracketLine, SyntaxError> {
    let col = toks[0].0;
    let eq = toks
        .iter()
        .position(|&(_, t)| t == "=")
        .ok_or_else(|| syntax(line, col, "expected `=` in bracket line"))?;
    let head: String = toks[..eq].iter().map(|&(_, t)| t).collect();
    let inner = head
        .strip_prefix('[')
        .and_then(|h| h.strip_suffix(']'))
        .ok_or_else(|| syntax(line, col, format!("malformed bracket `{head}`")))?;
    let (left, right) = inner
        .split_once(',')
        .ok_or_else(|| syntax(line, col, "expected `[A,B]`"))?;
    for name in [left, right] {
        if !is_name(name) {
            return Err(syntax(line, col, format!("invalid basis name `{name}`")));
        }
    }

    let rhs = &toks[eq + 1..];
    let mut terms = Vec::new();
    match rhs {
        [] => {
            let end = toks[eq].0 + 1;
            return Err(syntax(line, end, "expected a linear combination after `=`"));
        }
        [(c, "0")] => {
            let _ = c;
        }
        _ => {
            let mut i = 0;
            loop {
                let Some(&(c, coeff)) = rhs.get(i) else {
                    let end = rhs.last().map_or(col, |&(c, t)| c + t.len());
                    return Err(syntax(line, end, "expected a coefficient"));
                };
                let value = parse_rat(coeff)
                    .map_err(|_| syntax(line, c, format!("invalid coefficient `{coeff}`")))?;
                let Some(&(c, name)) = rhs.get(i + 1) else {
                    return Err(syntax(line, c + coeff.len(), "expected a basis name"));
                };
                if !is_name(name) {
                    return Err(syntax(line, c, format!("invalid basis name `{name}`")));
                }
                terms.push((value, name.to_string()));
                match rhs.get(i + 2) {
                    None => break,
                    Some(&(_, "+")) => i += 3,
                    Some(&(c, other)) => {
                        return Err(syntax(line, c, format!("expected `+`, found `{other}`")))
                    }
                }
            }
        }
    }
    Ok(BracketLine {
        line,
        left: left.to_string(),
        right: right.to_string(),
        terms,
    })
}

impl LieFile {
    /// Resolves names and runs the Jacobi check.
    pub fn into_algebra(self) -> Result<LieAlgebra, LieFileError> {
        let index: BTreeMap<&str, usize> = self
            .basis
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let lookup = |line: usize, name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| LieFileError::UndeclaredName {
                    line,
                    name: name.to_string(),
                })
        };
        let mut seen = BTreeMap::new();
        let mut table = Vec::with_capacity(self.brackets.len());
        for b in &self.brackets {
            let (j, k) = (lookup(b.line, &b.left)?, lookup(b.line, &b.right)?);
            let mut value = vec![Rat::zero(); self.dim];
            for (c, name) in &b.terms {
                value[lookup(b.line, name)?] += c;
            }
            if seen.insert((j.min(k), j.max(k)), b.line).is_some() {
                return Err(LieFileError::DuplicateBracket {
                    line: b.line,
                    left: b.left.clone(),
                    right: b.right.clone(),
                });
            }
            table.push(BracketEntry::new(j, k, value));
        }
        LieAlgebra::validate(self.dim, self.basis.clone(), table).map_err(|e| match e {
            LieError::JacobiViolation { i, j, k, residual } => LieFileError::Jacobi {
                names: [i, j, k].map(|x| self.basis[x].clone()),
                residual: render_combination(&self.basis, &residual),
            },
            other => LieFileError::Invalid(other),
        })
    }
}

pub fn parse_algebra(text: &str) -> Result<LieAlgebra, LieFileError> {
    parse_lie_file(text)?.into_algebra()
}

/// `c1 N1 + c2 N2`, the right-hand side syntax of a bracket line.
fn render_terms(names: &[String], v: &[Rat]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(names)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, n)| format!("{c} {n}"))
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

/// A vector as a signed combination of basis names, unit coefficients
/// omitted: `H`, `X - 1/2 Y`, `0`.
pub fn render_combination(names: &[String], v: &[Rat]) -> String {
    let mut out = String::new();
    for (c, n) in v.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        let magnitude = c.abs();
        if !magnitude.is_one() {
            let _ = write!(out, "{magnitude} ");
        }
        out.push_str(n);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Renders the bracket `[X_j, X_k]` as a `.lie` bracket line.
pub fn render_bracket(l: &LieAlgebra, j: usize, k: usize, value: &[Rat]) -> String {
    let names = l.names();
    format!("[{},{}] = {}", names[j], names[k], render_terms(names, value))
}

/// Canonical `.lie` text: header, then the nonzero brackets `[X_j, X_k]`
/// with `j < k` in lexicographic order.
pub fn render_lie_file(l: &LieAlgebra) -> String {
    let mut out = format!("lie 1\ndim {}\nbasis", l.dim());
    for name in l.names() {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
    for (&(j, k), value) in l.brackets() {
        out.push_str(&render_bracket(l, j, k, value));
        out.push('\n');
    }
    out
}
