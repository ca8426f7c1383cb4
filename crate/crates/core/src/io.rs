//! Text formats: Cayley tables, G-set files, Rees specs, partial maps,
//! partitions and catalog names.
//!
//! A Cayley table is the order `n` on the first line followed by `n` rows of
//! `n` whitespace-separated 0-based entries, optionally followed by a
//! `# labels: a b c` line. Blank lines and other `#` lines are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::constructors::{
    clifford8, cyclic_group, full_transformation_monoid, left_zero, rees_matrix, strict4, symmetric_group,
    symmetric_inverse_monoid, ConstructError, ReesSpec,
};
use crate::gset::{GSet, GSetError};
use crate::partial_map::{PartialMap, PartialMapError};
use crate::partition::{Partition, PartitionError};
use crate::semigroup::{FiniteSemigroup, SemigroupError};

/// Largest table order accepted from text.
pub const MAX_TABLE_ORDER: usize = 2048;
/// Largest `k` accepted in `leftzero:k` and `cyclic:k`.
pub const MAX_CATALOG_K: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    GSet(#[from] GSetError),
    #[error(transparent)]
    PartialMap(#[from] PartialMapError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("unknown catalog name `{0}`")]
    UnknownCatalog(String),
    #[error("cannot read {path}: {message}")]
    Read { path: String, message: String },
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

struct Lines<'a> {
    items: Vec<(usize, &'a str)>,
    pos: usize,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let items: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.trim_end()))
            .filter(|(_, l)| {
                let t = l.trim_start();
                !t.is_empty() && (!t.starts_with('#') || is_labels_line(t))
            })
            .collect();
        Lines {
            items,
            pos: 0,
            last_line: text.lines().count().max(1),
        }
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.items.get(self.pos).copied()
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str), ParseError> {
        let item = self
            .peek()
            .ok_or_else(|| err(self.last_line, 1, format!("unexpected end of input, expected {what}")))?;
        self.pos += 1;
        Ok(item)
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some((line, text)) => Err(err(line, first_column(text), "unexpected trailing content")),
        }
    }
}

fn is_labels_line(t: &str) -> bool {
    t.strip_prefix('#').is_some_and(|r| r.trim_start().starts_with("labels:"))
}

fn first_column(text: &str) -> usize {
    text.len() - text.trim_start().len() + 1
}

/// Whitespace-separated tokens with 1-based byte columns.
fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (k, c) in text.char_indices().chain(std::iter::once((text.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &text[s..k]));
                start = None;
            }
            (false, None) => start = Some(k),
            _ => {}
        }
    }
    out
}

fn number(line: usize, column: usize, token: &str) -> Result<usize, ParseError> {
    token
        .parse::<usize>()
        .map_err(|_| err(line, column, format!("expected a non-negative integer, found `{token}`")))
}

fn row(lines: &mut Lines, expected: usize, what: &str) -> Result<(usize, Vec<usize>), ParseError> {
    let (line, text) = lines.next(what)?;
    if is_labels_line(text.trim_start()) {
        return Err(err(line, first_column(text), format!("expected {what}, found a labels line")));
    }
    let toks = tokens(text);
    if toks.len() != expected {
        let column = toks.get(expected).map_or(text.len() + 1, |t| t.0);
        return Err(err(
            line,
            column,
            format!("{what} has {} entries, expected {expected}", toks.len()),
        ));
    }
    let values = toks
        .iter()
        .map(|&(c, t)| number(line, c, t))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((line, values))
}

fn header(lines: &mut Lines, what: &str, max: usize) -> Result<usize, ParseError> {
    let (line, text) = lines.next(what)?;
    let toks = tokens(text);
    if toks.len() != 1 {
        return Err(err(line, first_column(text), format!("expected {what} alone on its line")));
    }
    let n = number(line, toks[0].0, toks[0].1)?;
    if n > max {
        return Err(err(line, toks[0].0, format!("{what} {n} is above the maximum {max}")));
    }
    Ok(n)
}

fn read_table(lines: &mut Lines) -> Result<FiniteSemigroup, IoError> {
    let n = header(lines, "table order", MAX_TABLE_ORDER)?;
    let mut rows = Vec::new();
    for r in 0..n {
        let (line, values) = row(lines, n, &format!("row {r}"))?;
        if let Some(c) = values.iter().position(|&v| v >= n) {
            let column = tokens(lines.items[lines.pos - 1].1)[c].0;
            return Err(err(line, column, format!("entry {} is not below {n}", values[c])).into());
        }
        rows.push(values);
    }
    let mut s = FiniteSemigroup::new(rows)?;
    if let Some((_, text)) = lines.peek() {
        if is_labels_line(text.trim_start()) {
            lines.pos += 1;
            let rest = text.trim_start()[1..].trim_start()["labels:".len()..].to_string();
            let labels = rest.split_whitespace().map(str::to_string).collect();
            s = s.with_labels(labels)?;
        }
    }
    Ok(s)
}

pub fn parse_table(text: &str) -> Result<FiniteSemigroup, IoError> {
    let mut lines = Lines::new(text);
    let s = read_table(&mut lines)?;
    lines.finish()?;
    Ok(s)
}

fn join(values: &[usize]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn to_cayley_text(s: &FiniteSemigroup) -> String {
    let mut out = format!("{}\n", s.len());
    for a in s.elements() {
        let _ = writeln!(out, "{}", join(s.row(a)));
    }
    if let Some(labels) = s.labels() {
        let _ = writeln!(out, "# labels: {}", labels.join(" "));
    }
    out
}

/// Group table, blank line, `|X|`, then one action row per group element.
pub fn parse_gset(text: &str) -> Result<GSet, IoError> {
    let mut lines = Lines::new(text);
    let group = read_table(&mut lines)?;
    let x_size = header(&mut lines, "set size", MAX_TABLE_ORDER)?;
    let mut rows = Vec::new();
    for k in 0..group.len() {
        rows.push(row(&mut lines, x_size, &format!("action row {k}"))?.1);
    }
    lines.finish()?;
    Ok(GSet::new(group, x_size, rows)?)
}

pub fn to_gset_text(gs: &GSet) -> String {
    let mut out = to_cayley_text(gs.group());
    let _ = writeln!(out, "\n{}", gs.x_size());
    for r in gs.action_rows() {
        let _ = writeln!(out, "{}", join(&r));
    }
    out
}

/// Group table, then `|I| |Λ|`, then `|Λ|` sandwich rows of `|I|` entries.
pub fn parse_rees_spec(text: &str) -> Result<ReesSpec, IoError> {
    let mut lines = Lines::new(text);
    let group = read_table(&mut lines)?;
    let (line, sizes) = row(&mut lines, 2, "the sizes `I L`")?;
    let (i_size, lambda_size) = (sizes[0], sizes[1]);
    if i_size.saturating_mul(lambda_size).saturating_mul(group.len()) > MAX_TABLE_ORDER {
        return Err(err(line, 1, "Rees matrix semigroup is too large").into());
    }
    let mut sandwich = Vec::new();
    for l in 0..lambda_size {
        sandwich.push(row(&mut lines, i_size, &format!("sandwich row {l}"))?.1);
    }
    lines.finish()?;
    Ok(ReesSpec::new(group, i_size, lambda_size, sandwich)?)
}

pub fn to_rees_text(spec: &ReesSpec) -> String {
    let mut out = to_cayley_text(&spec.group);
    let _ = writeln!(out, "{} {}", spec.i_size, spec.lambda_size);
    for r in &spec.sandwich {
        let _ = writeln!(out, "{}", join(r));
    }
    out
}

/// `{a->b, c->d}` or `{}` over `0..n`.
pub fn parse_partial_map(text: &str, n: usize) -> Result<PartialMap, IoError> {
    let t = text.trim();
    let column = |s: &str| s.as_ptr() as usize - text.as_ptr() as usize + 1;
    let inner = t
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| err(1, column(t), "expected `{a->b, ...}`"))?;
    let mut pairs = Vec::new();
    if !inner.trim().is_empty() {
        for part in inner.split(',') {
            let (a, b) = part
                .split_once("->")
                .ok_or_else(|| err(1, column(part), "expected `a->b`"))?;
            let (a, b) = (a.trim(), b.trim());
            pairs.push((number(1, column(a), a)?, number(1, column(b), b)?));
        }
    }
    Ok(PartialMap::from_pairs(n, &pairs)?)
}

/// `0 1 | 2 | 3`. Without `n` the carrier is taken as the listed points.
pub fn parse_partition(text: &str, n: Option<usize>) -> Result<Partition, IoError> {
    let t = text.trim();
    let mut blocks = Vec::new();
    if !t.is_empty() {
        for part in t.split('|') {
            let offset = part.as_ptr() as usize - text.as_ptr() as usize;
            let block = tokens(part)
                .into_iter()
                .map(|(c, tok)| number(1, offset + c, tok))
                .collect::<Result<Vec<_>, _>>()?;
            blocks.push(block);
        }
    }
    let n = n.unwrap_or_else(|| blocks.iter().map(Vec::len).sum());
    Ok(Partition::from_blocks(n, &blocks)?)
}

/// A name accepted wherever a table file is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogName {
    Clifford8,
    Strict4,
    LeftZero(usize),
    Cyclic(usize),
    Transformations(usize),
    SymmetricInverse(usize),
    Symmetric(usize),
    Rees(String),
}

/// Parses a catalog name; `None` means the argument is not a catalog name
/// and should be read as a file.
pub fn parse_catalog_name(name: &str) -> Result<Option<CatalogName>, IoError> {
    let bad = || IoError::UnknownCatalog(name.to_string());
    let sized = |arg: &str, max: usize| -> Result<usize, IoError> {
        match arg.parse::<usize>() {
            Ok(k) if (1..=max).contains(&k) => Ok(k),
            _ => Err(bad()),
        }
    };
    Ok(Some(match name.split_once(':') {
        None => match name {
            "clifford8" => CatalogName::Clifford8,
            "strict4" => CatalogName::Strict4,
            _ => return Ok(None),
        },
        Some(("leftzero", k)) => CatalogName::LeftZero(sized(k, MAX_CATALOG_K)?),
        Some(("cyclic", k)) => CatalogName::Cyclic(sized(k, MAX_CATALOG_K)?),
        Some(("T", k)) => CatalogName::Transformations(sized(k, 4)?),
        Some(("I", k)) => CatalogName::SymmetricInverse(sized(k, 4)?),
        Some(("sym", k)) => CatalogName::Symmetric(sized(k, 5)?),
        Some(("rees", path)) if !path.is_empty() => CatalogName::Rees(path.to_string()),
        Some(_) => return Ok(None),
    }))
}

/// A resolved input: the semigroup and, for `rees:`, its parameters.
#[derive(Clone, Debug)]
pub struct Resolved {
    pub semigroup: FiniteSemigroup,
    pub rees: Option<ReesSpec>,
}

fn read_file(path: &str) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|e| IoError::Read {
        path: path.to_string(),
        message: e.to_string(),
    })
}

pub fn build_catalog(name: &CatalogName) -> Result<Resolved, IoError> {
    let plain = |s: FiniteSemigroup| Resolved { semigroup: s, rees: None };
    Ok(match name {
        CatalogName::Clifford8 => plain(clifford8()),
        CatalogName::Strict4 => plain(strict4()),
        CatalogName::LeftZero(k) => plain(left_zero(*k)?),
        CatalogName::Cyclic(k) => plain(cyclic_group(*k)?),
        CatalogName::Transformations(k) => plain(full_transformation_monoid(*k)?.0),
        CatalogName::SymmetricInverse(k) => plain(symmetric_inverse_monoid(*k)?.0),
        CatalogName::Symmetric(k) => plain(symmetric_group(*k)?),
        CatalogName::Rees(path) => {
            let spec = parse_rees_spec(&read_file(path)?)?;
            Resolved {
                semigroup: rees_matrix(&spec),
                rees: Some(spec),
            }
        }
    })
}

/// A catalog name or a path to a Cayley table file.
pub fn resolve(arg: &str) -> Result<Resolved, IoError> {
    match parse_catalog_name(arg)? {
        Some(name) => build_catalog(&name),
        None => Ok(Resolved {
            semigroup: parse_table(&read_file(arg)?)?,
            rees: None,
        }),
    }
}

pub fn read_gset(path: &str) -> Result<GSet, IoError> {
    parse_gset(&read_file(path)?)
}
