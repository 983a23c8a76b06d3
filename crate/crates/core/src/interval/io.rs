//! Representation text format:
//!
//! ```text
//! boxrep n d
//! dim 0
//! 0 lo hi
//! ...          (n lines, vertex ids ascending)
//! dim 1
//! ...
//! ```
//!
//! Dimensions are numbered from 0. Metadata is not part of the format.

use std::fmt::Write as _;

use super::{BoxRepresentation, Interval, IntervalAssignment, RepMetadata};
use crate::error::{Error, Result};

pub fn write_representation(r: &BoxRepresentation) -> String {
    let mut out = format!("boxrep {} {}\n", r.n(), r.d());
    for (j, dim) in r.dims().iter().enumerate() {
        writeln!(out, "dim {j}").unwrap();
        for (v, iv) in dim.0.iter().enumerate() {
            writeln!(out, "{v} {} {}", iv.lo, iv.hi).unwrap();
        }
    }
    out
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn expect_keyword<'a>(line: usize, s: &'a str, kw: &str) -> Result<Vec<&'a str>> {
    let mut toks = s.split_whitespace();
    if toks.next() != Some(kw) {
        return Err(err(line, format!("expected `{kw}`")));
    }
    Ok(toks.collect())
}

fn int<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| err(line, format!("`{tok}` is not a valid integer")))
}

pub fn parse_representation(text: &str) -> Result<BoxRepresentation> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let mut next = |what: &str| lines.next().ok_or_else(|| err(0, format!("unexpected end of input, expected {what}")));

    let (hl, header) = next("header")?;
    let toks = expect_keyword(hl, header, "boxrep")?;
    if toks.len() != 2 {
        return Err(err(hl, "header must be `boxrep n d`"));
    }
    let n: usize = int(hl, toks[0])?;
    let d: usize = int(hl, toks[1])?;

    let mut dims = Vec::with_capacity(d);
    for j in 0..d {
        let (dl, s) = next("`dim` line")?;
        let toks = expect_keyword(dl, s, "dim")?;
        if toks.len() != 1 || int::<usize>(dl, toks[0])? != j {
            return Err(err(dl, format!("expected `dim {j}`")));
        }
        let mut intervals = Vec::with_capacity(n);
        for v in 0..n {
            let (vl, s) = next("interval line")?;
            let toks: Vec<&str> = s.split_whitespace().collect();
            if toks.len() != 3 {
                return Err(err(vl, "interval line must be `v lo hi`"));
            }
            if int::<usize>(vl, toks[0])? != v {
                return Err(err(vl, format!("expected vertex {v}")));
            }
            let lo: i64 = int(vl, toks[1])?;
            let hi: i64 = int(vl, toks[2])?;
            if lo > hi {
                return Err(err(vl, format!("empty interval [{lo}, {hi}]")));
            }
            intervals.push(Interval { lo, hi });
        }
        dims.push(IntervalAssignment(intervals));
    }
    if let Some((l, _)) = lines.next() {
        return Err(err(l, "trailing content after last dimension"));
    }
    BoxRepresentation::new(n, dims, RepMetadata::new("parsed"))
}
