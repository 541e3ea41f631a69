//! Text format for algebraic complexes.
//!
//! ```text
//! [group]
//! order 2
//! generators 1
//! multtable
//! 0 1
//! 1 0
//! [ranks]
//! 1 1 1
//! [d1]
//! [(0,-1),(1,1)]
//! [d2]
//! [(0,1),(1,1)]
//! ```
//!
//! A symbolic complex replaces the table by `presentation` followed by the
//! presentation text, and its boundary entries are plain integers. Entries
//! of `d_i` are read row-major as `f_{i-1}·f_i` whitespace-separated tokens.

use std::fmt::Write as _;
use std::sync::Arc;

use num_bigint::BigInt;

use super::{AlgebraicComplex, Boundary, ChainError, ComplexGroup};
use crate::coset::FiniteGroupModel;
use crate::fp::Presentation;
use crate::group_ring::{GroupRingElement, GroupRingMatrix};
use crate::linalg::IntMatrix;

pub fn write_acx(f: &AlgebraicComplex) -> String {
    let mut out = String::new();
    out.push_str("[group]\n");
    match f.group() {
        ComplexGroup::Finite(m) => {
            let _ = writeln!(out, "order {}", m.order());
            let gens: Vec<String> = m.generator_images().iter().map(|g| g.to_string()).collect();
            let _ = writeln!(out, "generators {}", gens.join(" "));
            out.push_str("multtable\n");
            for a in 0..m.order() {
                let row: Vec<String> = m.table_row(a).iter().map(|x| x.to_string()).collect();
                let _ = writeln!(out, "{}", row.join(" "));
            }
        }
        ComplexGroup::Symbolic(p) => {
            out.push_str("presentation\n");
            out.push_str(&p.to_fp_string());
            if !out.ends_with('\n') {
                out.push('\n');
            }
        }
    }
    out.push_str("[ranks]\n");
    let ranks: Vec<String> = f.ranks().iter().map(|r| r.to_string()).collect();
    let _ = writeln!(out, "{}", ranks.join(" "));
    for (i, d) in f.boundaries().iter().enumerate() {
        let _ = writeln!(out, "[d{}]", i + 1);
        for r in 0..d.rows() {
            let row: Vec<String> = (0..d.cols())
                .map(|c| match d {
                    Boundary::Matrix(m) => m.get(r, c).to_string(),
                    Boundary::ExponentOnly(m) => m[(r, c)].to_string(),
                })
                .collect();
            if !row.is_empty() {
                let _ = writeln!(out, "{}", row.join(" "));
            }
        }
    }
    out
}

struct Section {
    name: String,
    line: usize,
    body: Vec<(usize, String)>,
}

fn parse_err(line: usize, message: impl Into<String>) -> ChainError {
    ChainError::Parse {
        line,
        message: message.into(),
    }
}

fn sections(text: &str) -> Result<Vec<Section>, ChainError> {
    let mut out: Vec<Section> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        if let Some(name) = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')).filter(|s| !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')) {
            out.push(Section {
                name: name.trim().to_string(),
                line,
                body: Vec::new(),
            });
        } else {
            match out.last_mut() {
                Some(s) => s.body.push((line, t.to_string())),
                None => return Err(parse_err(line, "content before the first section")),
            }
        }
    }
    Ok(out)
}

fn parse_group(s: &Section) -> Result<ComplexGroup, ChainError> {
    let mut lines = s.body.iter();
    let mut order = None;
    let mut gens = Vec::new();
    while let Some((line, t)) = lines.next() {
        let mut words = t.split_whitespace();
        match words.next() {
            Some("presentation") => {
                let text: Vec<&str> = lines.map(|(_, l)| l.as_str()).collect();
                let p: Presentation = text
                    .join("\n")
                    .parse()
                    .map_err(|e| parse_err(*line, format!("bad presentation: {e}")))?;
                return Ok(ComplexGroup::Symbolic(p));
            }
            Some("order") => {
                order = Some(parse_num::<usize>(words.next().unwrap_or(""), *line)?);
            }
            Some("generators") => {
                gens = words.map(|w| parse_num(w, *line)).collect::<Result<_, _>>()?;
            }
            Some("multtable") => {
                let n = order.ok_or_else(|| parse_err(*line, "multtable before order"))?;
                let mut table = Vec::with_capacity(n);
                for _ in 0..n {
                    let (l, row) = lines.next().ok_or_else(|| parse_err(*line, "multtable is short"))?;
                    let row: Vec<usize> = row.split_whitespace().map(|w| parse_num(w, *l)).collect::<Result<_, _>>()?;
                    table.push(row);
                }
                let model = FiniteGroupModel::from_table(&table, gens.clone())
                    .map_err(|e| parse_err(*line, format!("bad multiplication table: {e}")))?;
                return Ok(ComplexGroup::Finite(Arc::new(model)));
            }
            _ => return Err(parse_err(*line, format!("unexpected `{t}` in [group]"))),
        }
    }
    Err(parse_err(s.line, "[group] needs a multtable or a presentation"))
}

fn parse_num<T: std::str::FromStr>(w: &str, line: usize) -> Result<T, ChainError> {
    w.parse().map_err(|_| parse_err(line, format!("`{w}` is not a number")))
}

fn parse_element(model: &Arc<FiniteGroupModel>, tok: &str, line: usize) -> Result<GroupRingElement, ChainError> {
    let inner = tok
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| parse_err(line, format!("`{tok}` is not a [(index,coeff),…] list")))?;
    let mut terms: Vec<(usize, BigInt)> = Vec::new();
    let mut rest = inner;
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .and_then(|s| s.split_once(')'))
            .ok_or_else(|| parse_err(line, format!("malformed term in `{tok}`")))?;
        let (pair, after) = body;
        let (g, c) = pair
            .split_once(',')
            .ok_or_else(|| parse_err(line, format!("malformed term in `{tok}`")))?;
        let g: usize = parse_num(g.trim(), line)?;
        if g >= model.order() {
            return Err(parse_err(line, format!("element index {g} exceeds the group order")));
        }
        terms.push((g, parse_num(c.trim(), line)?));
        rest = after.strip_prefix(',').unwrap_or(after);
    }
    GroupRingElement::from_sparse(model, &terms).map_err(|e| parse_err(line, e.to_string()))
}

/// Parses and validates; a complex with `d∘d ≠ 0` is rejected with
/// [`ChainError::NotAChainComplex`].
pub fn read_acx(text: &str) -> Result<AlgebraicComplex, ChainError> {
    let secs = sections(text)?;
    let find = |name: &str| secs.iter().find(|s| s.name == name);
    let group = parse_group(find("group").ok_or_else(|| parse_err(1, "missing [group]"))?)?;
    let rs = find("ranks").ok_or_else(|| parse_err(1, "missing [ranks]"))?;
    let ranks: Vec<usize> = rs
        .body
        .iter()
        .flat_map(|(l, t)| t.split_whitespace().map(move |w| (l, w)))
        .map(|(l, w)| parse_num(w, *l))
        .collect::<Result<_, _>>()?;
    if ranks.is_empty() {
        return Err(parse_err(rs.line, "no ranks given"));
    }
    let mut boundaries = Vec::new();
    for i in 1..ranks.len() {
        let name = format!("d{i}");
        let (rows, cols) = (ranks[i - 1], ranks[i]);
        let tokens: Vec<(usize, &str)> = match find(&name) {
            Some(s) => s
                .body
                .iter()
                .flat_map(|(l, t)| t.split_whitespace().map(move |w| (*l, w)))
                .collect(),
            None if rows * cols == 0 => Vec::new(),
            None => return Err(parse_err(1, format!("missing [{name}]"))),
        };
        if tokens.len() != rows * cols {
            let line = find(&name).map_or(1, |s| s.line);
            return Err(parse_err(
                line,
                format!("[{name}] has {} entries, expected {rows}×{cols}", tokens.len()),
            ));
        }
        boundaries.push(match &group {
            ComplexGroup::Finite(m) => {
                let entries = tokens
                    .iter()
                    .map(|(l, t)| parse_element(m, t, *l))
                    .collect::<Result<_, _>>()?;
                Boundary::Matrix(GroupRingMatrix::from_entries(m, rows, cols, entries)?)
            }
            ComplexGroup::Symbolic(_) => {
                let mut a = IntMatrix::zeros(rows, cols);
                for (k, (l, t)) in tokens.iter().enumerate() {
                    a[(k / cols, k % cols)] = parse_num(t, *l)?;
                }
                Boundary::ExponentOnly(a)
            }
        });
    }
    AlgebraicComplex::new(group, ranks, boundaries)
}
