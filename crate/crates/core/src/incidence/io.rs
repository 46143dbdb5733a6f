//! Plain-text incidence files.
//!
//! ```text
//! points <n1>
//! blocks <n2>
//! <point indices of block 0, ascending>
//! ...
//! ```
//!
//! Indices are 0-based. Blank lines and everything after a `#` are ignored.

use std::fmt::Write as _;

use super::structure::IncidenceStructure;
use super::IncidenceError;

fn parse_err(line: usize, message: impl Into<String>) -> IncidenceError {
    IncidenceError::Parse {
        line,
        message: message.into(),
    }
}

fn header(line: Option<(usize, &str)>, keyword: &str) -> Result<usize, IncidenceError> {
    let (lineno, text) = line.ok_or_else(|| parse_err(0, format!("missing `{} <count>` header", keyword)))?;
    let mut parts = text.split_whitespace();
    if parts.next() != Some(keyword) {
        return Err(parse_err(lineno, format!("expected `{} <count>`", keyword)));
    }
    let count = parts
        .next()
        .ok_or_else(|| parse_err(lineno, format!("`{}` needs a count", keyword)))?
        .parse::<usize>()
        .map_err(|e| parse_err(lineno, format!("bad count: {}", e)))?;
    if parts.next().is_some() {
        return Err(parse_err(lineno, "trailing tokens after count"));
    }
    Ok(count)
}

pub fn parse_incidence(text: &str) -> Result<IncidenceStructure, IncidenceError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let n1 = header(lines.next(), "points")?;
    let n2 = header(lines.next(), "blocks")?;
    if n1 == 0 || n2 == 0 {
        return Err(IncidenceError::Empty);
    }

    let mut blocks = Vec::with_capacity(n2);
    for (lineno, text) in lines {
        if blocks.len() == n2 {
            return Err(parse_err(lineno, format!("more than the declared {} blocks", n2)));
        }
        let mut pts = Vec::new();
        for tok in text.split_whitespace() {
            let x: usize = tok
                .parse()
                .map_err(|_| parse_err(lineno, format!("`{}` is not a point index", tok)))?;
            if x >= n1 {
                return Err(parse_err(lineno, format!("point {} out of range 0..{}", x, n1)));
            }
            if pts.contains(&x) {
                return Err(parse_err(lineno, format!("point {} repeated within the block", x)));
            }
            pts.push(x);
        }
        pts.sort_unstable();
        blocks.push(pts);
    }
    if blocks.len() != n2 {
        return Err(parse_err(
            text.lines().count(),
            format!("declared {} blocks, found {}", n2, blocks.len()),
        ));
    }
    IncidenceStructure::from_blocks(n1, &blocks)
}

pub fn write_incidence(d: &IncidenceStructure) -> String {
    let mut out = String::new();
    writeln!(out, "points {}", d.n1()).unwrap();
    writeln!(out, "blocks {}", d.n2()).unwrap();
    for block in d.blocks() {
        let line: Vec<String> = block.iter().map(usize::to_string).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}
