//! Plain-text file formats. Blank lines and anything after `#` are ignored.
//! Errors carry 1-based line and column numbers.

use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::homlie::Endomorphism;
use crate::identity::{DistributiveLaw, Identity, PolarizedIdentity};
use crate::linalg::{parse_rational, Matrix, Rational};
use crate::sigma3::GroupAlgebraElement;
use crate::superalgebra::{PairSet, SignedIdentity};

struct Source<'a> {
    path: &'a str,
}

impl Source<'_> {
    fn err(&self, line: usize, column: usize, message: impl Into<String>) -> Error {
        Error::Parse { path: self.path.to_string(), line, column, message: message.into() }
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let body = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in body.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &body[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &body[s..]));
    }
    out.into_iter().map(|(s, t)| (body[..s].chars().count() + 1, t)).collect()
}

/// Non-empty lines as (line number, tokens).
fn lines(text: &str) -> Vec<(usize, Vec<(usize, &str)>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, tokens(l)))
        .filter(|(_, t)| !t.is_empty())
        .collect()
}

fn rationals(src: &Source, line: usize, toks: &[(usize, &str)], count: usize, end_col: usize) -> Result<Vec<Rational>> {
    if toks.len() != count {
        let col = toks.get(count).map_or(end_col, |t| t.0);
        return Err(src.err(line, col, format!("expected {count} rationals, found {}", toks.len())));
    }
    toks.iter()
        .map(|&(c, t)| parse_rational(t).ok_or_else(|| src.err(line, c, format!("invalid rational '{t}'"))))
        .collect()
}

fn end_column(toks: &[(usize, &str)]) -> usize {
    toks.last().map_or(1, |(c, t)| c + t.chars().count())
}

/// Lines `key: v1 ... vn` for each key in order.
fn keyed(src: &Source, text: &str, keys: &[&str], count: usize) -> Result<Vec<Vec<Rational>>> {
    let ls = lines(text);
    let mut out = Vec::new();
    for (k, key) in keys.iter().enumerate() {
        let Some((ln, toks)) = ls.get(k) else {
            let last = ls.last().map_or(1, |l| l.0 + 1);
            return Err(src.err(last, 1, format!("missing '{key}:' line")));
        };
        let head = format!("{key}:");
        if toks[0].1 != head {
            return Err(src.err(*ln, toks[0].0, format!("expected '{head}'")));
        }
        out.push(rationals(src, *ln, &toks[1..], count, end_column(toks))?);
    }
    if let Some((ln, toks)) = ls.get(keys.len()) {
        return Err(src.err(*ln, toks[0].0, "unexpected trailing content"));
    }
    Ok(out)
}

pub fn parse_identity(text: &str, path: &str) -> Result<Identity> {
    let src = Source { path };
    let v = keyed(&src, text, &["left", "right"], 6)?;
    Ok(Identity::new(GroupAlgebraElement::from_slice(&v[0])?, GroupAlgebraElement::from_slice(&v[1])?))
}

pub fn write_identity(id: &Identity) -> String {
    format!("left: {}\nright: {}\n", id.left, id.right)
}

pub fn parse_lambda(text: &str, path: &str) -> Result<PolarizedIdentity> {
    let src = Source { path };
    let v = keyed(&src, text, &["lambda"], 12)?;
    PolarizedIdentity::from_slice(&v[0])
}

pub fn write_lambda(p: &PolarizedIdentity) -> String {
    format!("lambda: {p}\n")
}

pub fn parse_law(text: &str, path: &str) -> Result<DistributiveLaw> {
    let src = Source { path };
    let v = keyed(&src, text, &["alpha", "beta"], 3)?;
    Ok(DistributiveLaw {
        alpha: std::array::from_fn(|i| v[0][i].clone()),
        beta: std::array::from_fn(|i| v[1][i].clone()),
    })
}

pub fn write_law(d: &DistributiveLaw) -> String {
    format!("{d}\n")
}

/// Six whitespace-separated rationals.
pub fn parse_group_element(text: &str, path: &str) -> Result<GroupAlgebraElement> {
    let src = Source { path };
    let toks: Vec<(usize, usize, &str)> =
        lines(text).into_iter().flat_map(|(ln, t)| t.into_iter().map(move |(c, s)| (ln, c, s))).collect();
    if toks.len() != 6 {
        let (ln, c) = toks.get(6).map_or((1, 1), |t| (t.0, t.1));
        return Err(src.err(ln, c, format!("expected 6 rationals, found {}", toks.len())));
    }
    let v = toks
        .iter()
        .map(|&(ln, c, t)| parse_rational(t).ok_or_else(|| src.err(ln, c, format!("invalid rational '{t}'"))))
        .collect::<Result<Vec<_>>>()?;
    GroupAlgebraElement::from_slice(&v)
}

pub fn parse_algebra(text: &str, path: &str) -> Result<StructureAlgebra> {
    let src = Source { path };
    let ls = lines(text);
    let Some((ln, toks)) = ls.first() else {
        return Err(src.err(1, 1, "missing 'dim' line"));
    };
    if toks[0].1 != "dim" || toks.len() != 2 {
        return Err(src.err(*ln, toks[0].0, "expected 'dim n'"));
    }
    let dim: usize = toks[1].1.parse().map_err(|_| src.err(*ln, toks[1].0, "invalid dimension"))?;
    if dim == 0 {
        return Err(src.err(*ln, toks[1].0, "dimension must be positive"));
    }
    let mut alg = StructureAlgebra::new(dim);
    let mut grading = None;
    let mut seen = std::collections::HashSet::new();
    for (idx, (ln, toks)) in ls.iter().enumerate().skip(1) {
        match toks[0].1 {
            "deg" => {
                if idx != 1 {
                    return Err(src.err(*ln, toks[0].0, "'deg' must directly follow 'dim'"));
                }
                if toks.len() != dim + 1 {
                    return Err(src.err(*ln, toks[0].0, format!("expected {dim} degrees")));
                }
                let mut d = Vec::new();
                for &(c, t) in &toks[1..] {
                    match t {
                        "0" => d.push(0),
                        "1" => d.push(1),
                        _ => return Err(src.err(*ln, c, format!("degree must be 0 or 1, found '{t}'"))),
                    }
                }
                grading = Some(d);
            }
            "e" => {
                if toks.len() < 4 || toks[3].1 != "=" {
                    return Err(src.err(*ln, toks[0].0, "expected 'e i j = c1 ... cn'"));
                }
                let mut ij = [0usize; 2];
                for (slot, &(c, t)) in ij.iter_mut().zip(&toks[1..3]) {
                    let v: usize = t.parse().map_err(|_| src.err(*ln, c, format!("invalid index '{t}'")))?;
                    if v == 0 || v > dim {
                        return Err(src.err(*ln, c, format!("index {v} outside 1..={dim}")));
                    }
                    *slot = v - 1;
                }
                if !seen.insert(ij) {
                    return Err(src.err(*ln, toks[0].0, "duplicate product line"));
                }
                let v = rationals(&src, *ln, &toks[4..], dim, end_column(toks))?;
                alg.set(ij[0], ij[1], v)?;
            }
            other => return Err(src.err(*ln, toks[0].0, format!("unexpected '{other}'"))),
        }
    }
    let line_of_deg = ls.get(1).map_or(1, |l| l.0);
    alg.with_grading(grading).map_err(|e| match e {
        Error::Grading { i, j } => src.err(line_of_deg, 1, format!("product e{i}e{j} violates the grading")),
        other => other,
    })
}

pub fn write_algebra(alg: &StructureAlgebra) -> String {
    alg.to_string()
}

/// Twelve lines `term <index> coeff <p/q> signs <subset>`.
pub fn parse_signed_identity(text: &str, path: &str) -> Result<SignedIdentity> {
    let src = Source { path };
    let ls = lines(text);
    let mut coeffs: Vec<Option<Rational>> = vec![None; 12];
    let mut signs = vec![PairSet::EMPTY; 12];
    for (ln, toks) in &ls {
        let shape = toks.len() == 6 && toks[0].1 == "term" && toks[2].1 == "coeff" && toks[4].1 == "signs";
        if !shape {
            return Err(src.err(*ln, toks[0].0, "expected 'term <index> coeff <p/q> signs <subset>'"));
        }
        let i: usize = toks[1].1.parse().map_err(|_| src.err(*ln, toks[1].0, "invalid term index"))?;
        if !(1..=12).contains(&i) {
            return Err(src.err(*ln, toks[1].0, "term index outside 1..=12"));
        }
        if coeffs[i - 1].is_some() {
            return Err(src.err(*ln, toks[1].0, format!("duplicate term {i}")));
        }
        coeffs[i - 1] =
            Some(parse_rational(toks[3].1).ok_or_else(|| src.err(*ln, toks[3].0, "invalid rational"))?);
        signs[i - 1] = PairSet::parse(toks[5].1).ok_or_else(|| src.err(*ln, toks[5].0, "invalid sign subset"))?;
    }
    if let Some(missing) = coeffs.iter().position(Option::is_none) {
        let last = ls.last().map_or(1, |l| l.0 + 1);
        return Err(src.err(last, 1, format!("missing term {}", missing + 1)));
    }
    let c: Vec<Rational> = coeffs.into_iter().map(Option::unwrap).collect();
    SignedIdentity::new(&c, &signs)
}

pub fn is_signed_identity_text(text: &str) -> bool {
    lines(text).first().is_some_and(|(_, t)| t[0].1 == "term")
}

/// n lines of n rationals.
pub fn parse_endomorphism(text: &str, path: &str) -> Result<Endomorphism> {
    let src = Source { path };
    let ls = lines(text);
    let n = ls.len();
    if n == 0 {
        return Err(src.err(1, 1, "empty matrix"));
    }
    let mut rows = Vec::new();
    for (ln, toks) in &ls {
        rows.push(rationals(&src, *ln, toks, n, end_column(toks))?);
    }
    Endomorphism::new(Matrix::from_rows(rows))
}

pub fn write_endomorphism(f: &Endomorphism) -> String {
    format!("{f}\n")
}
