//! Text grammar for ideals: `n; g1, g2, ...` with generators written as
//! `*`-separated factors `xk` or `xk^e`, or `1`. Whitespace is ignored.

use super::ideal::MonomialIdeal;
use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::vertex_set::MAX_VARS;

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

/// Splits `n; rest` and returns `(n, offset of rest, rest)`.
pub(crate) fn split_header(text: &str) -> Result<(usize, usize, &str)> {
    let semi = text
        .find(';')
        .ok_or_else(|| err(text.len(), "expected `n;` header"))?;
    let head = text[..semi].trim();
    let n: usize = head
        .parse()
        .map_err(|_| err(0, format!("invalid variable count `{head}`")))?;
    if n == 0 {
        return Err(err(0, "variable count must be positive"));
    }
    if n > MAX_VARS {
        return Err(err(
            0,
            format!("at most {MAX_VARS} variables are supported"),
        ));
    }
    Ok((n, semi + 1, &text[semi + 1..]))
}

/// Parses a single monomial such as `x1^2*x3` or `1`.
pub fn parse_monomial(text: &str, n: usize) -> Result<Monomial> {
    parse_monomial_at(text, n, 0)
}

fn parse_monomial_at(text: &str, n: usize, offset: usize) -> Result<Monomial> {
    let compact: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(i, c)| (i + offset, c))
        .collect();
    let end = offset + text.len();
    if compact.is_empty() {
        return Err(err(end, "empty generator"));
    }
    if compact.len() == 1 && compact[0].1 == '1' {
        return Ok(Monomial::one(n));
    }
    let mut exps = vec![0u32; n];
    let mut pos = 0;
    loop {
        let (at, c) = *compact
            .get(pos)
            .ok_or_else(|| err(end, "expected factor"))?;
        if c != 'x' {
            return Err(err(at, format!("expected `x`, found `{c}`")));
        }
        pos += 1;
        let (index, next) = read_number(&compact, pos, end)?;
        if index == 0 || index > n as u64 {
            return Err(err(at, format!("variable x{index} out of range 1..{n}")));
        }
        pos = next;
        let mut exponent = 1;
        if let Some(&(_, '^')) = compact.get(pos) {
            let (e, next) = read_number(&compact, pos + 1, end)?;
            if e == 0 {
                return Err(err(compact[pos].0, "exponent must be at least 1"));
            }
            exponent = u32::try_from(e).map_err(|_| err(compact[pos].0, "exponent too large"))?;
            pos = next;
        }
        exps[index as usize - 1] += exponent;
        match compact.get(pos) {
            None => break,
            Some(&(_, '*')) => pos += 1,
            Some(&(at, c)) => return Err(err(at, format!("unexpected `{c}`"))),
        }
    }
    Ok(Monomial::new(exps))
}

fn read_number(chars: &[(usize, char)], start: usize, end: usize) -> Result<(u64, usize)> {
    let mut pos = start;
    let mut value: u64 = 0;
    while let Some(&(_, c)) = chars.get(pos) {
        let Some(d) = c.to_digit(10) else { break };
        value = value
            .checked_mul(10)
            .and_then(|v| v.checked_add(d as u64))
            .ok_or_else(|| err(chars[pos].0, "number too large"))?;
        pos += 1;
    }
    if pos == start {
        let at = chars.get(start).map_or(end, |c| c.0);
        return Err(err(at, "expected a number"));
    }
    Ok((value, pos))
}

/// Parses `n; g1, g2, ...` into a minimalized ideal.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let (n, offset, body) = split_header(text)?;
    if body.trim().is_empty() {
        return Ok(MonomialIdeal::zero(n));
    }
    let mut gens = Vec::new();
    let mut start = 0;
    for piece in body.split(',') {
        gens.push(parse_monomial_at(piece, n, offset + start)?);
        start += piece.len() + 1;
    }
    MonomialIdeal::new(n, gens)
}

impl std::str::FromStr for MonomialIdeal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_ideal(s)
    }
}
