//! Plain-text family format.
//!
//! ```text
//! n=3
//! # comment
//! 0
//! 1 2
//! -
//! ```
//!
//! The header line gives the ground size. Every other non-empty line that does
//! not start with `#` is one subset, written as space-separated elements; the
//! lone token `-` is the empty set.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::{Family, GroundSize, SubsetMask};

pub fn parse_family(text: &str) -> Result<Family> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing `n=<int>` header".into(),
    })?;
    let n = header
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse::<usize>().ok())
        .ok_or_else(|| Error::Parse {
            line,
            message: format!("expected `n=<int>` header, found `{header}`"),
        })?;
    let ground = GroundSize::new(n).map_err(|e| Error::Parse {
        line,
        message: e.to_string(),
    })?;

    let mut members = Vec::new();
    for (line, body) in lines {
        members.push(parse_set(ground, body).map_err(|message| Error::Parse { line, message })?);
    }
    Family::new(ground, members)
}

fn parse_set(ground: GroundSize, body: &str) -> std::result::Result<SubsetMask, String> {
    if body == "-" {
        return Ok(ground.empty());
    }
    let mut bits = 0u64;
    for tok in body.split_whitespace() {
        let x: usize = tok
            .parse()
            .map_err(|_| format!("`{tok}` is not a non-negative integer"))?;
        if x >= ground.get() {
            return Err(format!("element {x} outside ground set of size {ground}"));
        }
        bits |= 1 << x;
    }
    Ok(SubsetMask::from_raw(bits, ground))
}

/// Writes a set as one line of the family format.
pub fn format_set(set: SubsetMask) -> String {
    if set.is_empty() {
        return "-".into();
    }
    set.elements()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.ground())?;
        for &m in self.members() {
            writeln!(f, "{}", format_set(m))?;
        }
        Ok(())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_family(s)
    }
}
