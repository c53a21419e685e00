//! Sparse text encoding of a series.
//!
//! ```text
//! p=2 N=14
//! 1:1 2:1 6:1 12:1 14:1
//! ```
//!
//! The first line gives the context, the second lists `exponent:coefficient` for the
//! nonzero coefficients in ascending order, or the single token `0` for the zero series.
//! Coefficients are canonical residues in `[1, p)`. Output always ends with a newline.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::field::Prime;
use crate::series::Series;

pub fn encode(series: &Series) -> String {
    let mut out = format!("p={} N={}\n", series.prime(), series.trunc());
    if series.is_zero() {
        out.push('0');
    } else {
        for (i, (e, c)) in series.terms().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            write!(out, "{e}:{c}").expect("writing to a String");
        }
    }
    out.push('\n');
    out
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn header_field<'a>(token: Option<&'a str>, key: &str) -> Result<&'a str> {
    token
        .and_then(|t| t.strip_prefix(key))
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| parse_err(format!("header must be `p=<p> N=<N>`, missing {key}")))
}

fn number(s: &str, what: &str) -> Result<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err(format!("bad {what} `{s}`")));
    }
    s.parse()
        .map_err(|_| parse_err(format!("{what} `{s}` out of range")))
}

pub fn decode(text: &str) -> Result<Series> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = body.split('\n');
    let header = lines.next().unwrap_or_default();
    let data = lines
        .next()
        .ok_or_else(|| parse_err("expected a header line and a data line"))?;
    if lines.next().is_some() {
        return Err(parse_err("trailing content after the data line"));
    }

    let mut fields = header.split(' ');
    let p = number(header_field(fields.next(), "p")?, "prime")?;
    let n = number(header_field(fields.next(), "N")?, "truncation order")?;
    if fields.next().is_some() {
        return Err(parse_err("trailing content in header"));
    }
    let prime = Prime::new(p)?;
    let trunc = usize::try_from(n).map_err(|_| parse_err("truncation order too large"))?;

    if data == "0" {
        return Ok(Series::zero(prime, trunc));
    }
    let mut terms = Vec::new();
    let mut last: Option<usize> = None;
    for token in data.split(' ') {
        let (e, c) = token
            .split_once(':')
            .ok_or_else(|| parse_err(format!("bad term `{token}`")))?;
        let e = number(e, "exponent")? as usize;
        let c = number(c, "coefficient")?;
        if e > trunc {
            return Err(parse_err(format!("exponent {e} exceeds N={trunc}")));
        }
        if last.is_some_and(|l| e <= l) {
            return Err(parse_err("exponents must be strictly ascending"));
        }
        if c == 0 || c >= p {
            return Err(parse_err(format!("coefficient {c} not in [1, {p})")));
        }
        last = Some(e);
        terms.push((e, c as i64));
    }
    Ok(Series::from_sparse(prime, trunc, &terms))
}
