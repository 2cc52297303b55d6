//! Text formats: affine group files and integer matrix files.
//!
//! A group file is
//!
//! ```text
//! # comment
//! dim 2
//! gen
//! 1  0 1/2
//! 0 -1 0
//! 0  0 1
//! ```
//!
//! with one `gen` block of `n + 1` rows per non-lattice generator, each an
//! affine map in homogeneous coordinates. The lattice `Z^n` is implicit.
//! A matrix file is `n` rows of `n` integers.

use std::fmt::Write as _;

use num_rational::Ratio;
use spinflat_core::affine::{AffineError, AffineIsometry};
use spinflat_core::{CrystalGroupInput, IntMatrix, RatMatrix, Rational};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty input")]
    Empty,
    #[error("expected `dim n`, found `{0}`")]
    ExpectedDim(String),
    #[error("invalid dimension `{0}`")]
    BadDimension(String),
    #[error("expected `gen`, found `{0}`")]
    ExpectedGen(String),
    #[error("invalid number `{0}`")]
    BadNumber(String),
    #[error("row has {found} entries, expected {expected}")]
    RowLength { expected: usize, found: usize },
    #[error("block ends after {found} rows, expected {expected}")]
    TruncatedBlock { expected: usize, found: usize },
    #[error("last row must be (0, ..., 0, 1)")]
    BadLastRow,
    #[error("matrix is not square")]
    NotSquare,
    #[error(transparent)]
    Group(AffineError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based; 0 when the error concerns the whole input.
    pub line: usize,
    pub kind: ParseErrorKind,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Non-blank lines with comments stripped, paired with 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_rational(token: &str, line: usize) -> Result<Rational, ParseError> {
    token.parse::<Ratio<i64>>().map_err(|_| err(line, ParseErrorKind::BadNumber(token.to_string())))
}

fn parse_row<T>(
    line: usize,
    text: &str,
    expected: usize,
    parse: impl Fn(&str, usize) -> Result<T, ParseError>,
) -> Result<Vec<T>, ParseError> {
    let row = text.split_whitespace().map(|t| parse(t, line)).collect::<Result<Vec<_>, _>>()?;
    if row.len() != expected {
        return Err(err(line, ParseErrorKind::RowLength { expected, found: row.len() }));
    }
    Ok(row)
}

pub fn parse_group(text: &str) -> Result<CrystalGroupInput, ParseError> {
    let mut lines = content_lines(text).peekable();
    let (dim_line, header) = lines.next().ok_or(err(0, ParseErrorKind::Empty))?;
    let mut words = header.split_whitespace();
    if words.next() != Some("dim") {
        return Err(err(dim_line, ParseErrorKind::ExpectedDim(header.to_string())));
    }
    let dim_token = words.collect::<Vec<_>>().join(" ");
    let dim: usize = match dim_token.parse() {
        Ok(d) if d > 0 => d,
        _ => return Err(err(dim_line, ParseErrorKind::BadDimension(dim_token))),
    };

    let mut gens = Vec::new();
    let mut gen_lines = Vec::new();
    while let Some((line, text)) = lines.next() {
        if text != "gen" {
            return Err(err(line, ParseErrorKind::ExpectedGen(text.to_string())));
        }
        let mut rows = Vec::with_capacity(dim + 1);
        let mut last = line;
        for found in 0..=dim {
            match lines.peek() {
                Some(&(_, "gen")) | None => {
                    return Err(err(last, ParseErrorKind::TruncatedBlock { expected: dim + 1, found }));
                }
                Some(&(l, row_text)) => {
                    rows.push(parse_row(l, row_text, dim + 1, parse_rational)?);
                    last = l;
                    lines.next();
                }
            }
        }
        let g = AffineIsometry::from_homogeneous(&RatMatrix::from_rows(&rows))
            .ok_or(err(last, ParseErrorKind::BadLastRow))?;
        gens.push(g);
        gen_lines.push(line);
    }
    CrystalGroupInput::new(dim, gens).map_err(|e| {
        let line = match &e {
            AffineError::NonIntegralLinearPart { generator } | AffineError::NotUnimodular { generator, .. } => {
                gen_lines[*generator]
            }
            _ => 0,
        };
        err(line, ParseErrorKind::Group(e))
    })
}

fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Inverse of [`parse_group`] up to comments and spacing.
pub fn write_group(input: &CrystalGroupInput) -> String {
    let n = input.dim();
    let mut out = format!("dim {n}\n");
    for g in input.generators() {
        out.push_str("gen\n");
        for i in 0..n {
            let mut row: Vec<String> = (0..n).map(|j| format_rational(&g.linear().get(i, j))).collect();
            row.push(format_rational(&g.translation_part()[i]));
            let _ = writeln!(out, "{}", row.join(" "));
        }
        let _ = writeln!(out, "{}1", "0 ".repeat(n));
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<IntMatrix, ParseError> {
    let parse_int = |t: &str, line: usize| -> Result<i64, ParseError> {
        t.parse().map_err(|_| err(line, ParseErrorKind::BadNumber(t.to_string())))
    };
    let mut rows = Vec::new();
    let mut width = None;
    for (line, text) in content_lines(text) {
        let expected = *width.get_or_insert_with(|| text.split_whitespace().count());
        rows.push(parse_row(line, text, expected, parse_int)?);
    }
    if rows.is_empty() {
        return Err(err(0, ParseErrorKind::Empty));
    }
    if rows.len() != rows[0].len() {
        return Err(err(0, ParseErrorKind::NotSquare));
    }
    Ok(IntMatrix::from_rows(&rows))
}

pub fn write_matrix(m: &IntMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}
