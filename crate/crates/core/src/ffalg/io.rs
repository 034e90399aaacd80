//! Text format for representations.
//!
//! ```text
//! field 3 2 modulus 1 0 1
//! dim 2
//! gen x
//! 1,0 1,0
//! 0,0 1,0
//! gen y
//! 1,0 0,0
//! 0,1 1,0
//! ```
//!
//! Each entry is the little-endian coefficient tuple `a0,a1,…` of a field
//! element. Blank lines and lines starting with `#` are ignored.

use std::sync::Arc;

use thiserror::Error;

use super::field::{FieldError, FqElem, FqField};
use super::matrix::Matrix;
use super::rep::{MatRep, RepError};

#[derive(Debug, Error)]
pub enum RepFileError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Field { line: usize, source: FieldError },
    #[error(transparent)]
    Rep(#[from] RepError),
}

fn syntax(line: usize, msg: impl Into<String>) -> RepFileError {
    RepFileError::Syntax {
        line,
        msg: msg.into(),
    }
}

pub fn parse_rep(text: &str) -> Result<MatRep, RepFileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (ln, header) = lines.next().ok_or_else(|| syntax(0, "empty file"))?;
    let tok: Vec<&str> = header.split_whitespace().collect();
    if tok.len() < 4 || tok[0] != "field" || tok[3] != "modulus" {
        return Err(syntax(ln, "expected `field p k modulus c0 … ck`"));
    }
    let p: u64 = tok[1].parse().map_err(|_| syntax(ln, "bad characteristic"))?;
    let k: usize = tok[2].parse().map_err(|_| syntax(ln, "bad degree"))?;
    let modulus: Vec<u32> = tok[4..]
        .iter()
        .map(|t| t.parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|_| syntax(ln, "bad modulus coefficient"))?;
    if modulus.len() != k + 1 {
        return Err(syntax(ln, format!("modulus needs {} coefficients", k + 1)));
    }
    let field = Arc::new(
        FqField::with_modulus(p, modulus).map_err(|source| RepFileError::Field { line: ln, source })?,
    );

    let (ln, dim_line) = lines.next().ok_or_else(|| syntax(ln, "missing `dim n`"))?;
    let dim: usize = match dim_line.split_whitespace().collect::<Vec<_>>()[..] {
        ["dim", n] => n.parse().map_err(|_| syntax(ln, "bad dimension"))?,
        _ => return Err(syntax(ln, "expected `dim n`")),
    };

    let mut gens = Vec::new();
    let mut labels = Vec::new();
    while let Some((ln, l)) = lines.next() {
        let mut parts = l.splitn(2, char::is_whitespace);
        if parts.next() != Some("gen") {
            return Err(syntax(ln, "expected `gen [label]`"));
        }
        labels.push(parts.next().map(|s| s.trim().to_string()).filter(|s| !s.is_empty()));
        let mut data = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            let (ln, row) = lines
                .next()
                .ok_or_else(|| syntax(ln, format!("generator truncated at row {}", r + 1)))?;
            let entries: Vec<&str> = row.split_whitespace().collect();
            if entries.len() != dim {
                return Err(syntax(ln, format!("expected {dim} entries, found {}", entries.len())));
            }
            for e in entries {
                data.push(
                    field
                        .parse_elem(e)
                        .map_err(|source| RepFileError::Field { line: ln, source })?,
                );
            }
        }
        gens.push(Matrix::from_vec(&field, dim, dim, data));
    }
    Ok(MatRep::with_labels(&field, dim, gens, labels)?)
}

pub fn write_rep(r: &MatRep) -> String {
    let f = r.field();
    let mut out = format!("field {} {} modulus", f.characteristic(), f.degree());
    for c in f.modulus() {
        out.push_str(&format!(" {c}"));
    }
    out.push_str(&format!("\ndim {}\n", r.dim()));
    for (g, label) in r.generators().iter().zip(r.labels()) {
        match label {
            Some(l) => out.push_str(&format!("gen {l}\n")),
            None => out.push_str("gen\n"),
        }
        for i in 0..g.rows() {
            let row: Vec<String> = g.row(i).iter().map(|e: &FqElem| f.format_elem(*e)).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}
