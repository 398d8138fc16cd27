//! The `.mua` text format.
//!
//! ```text
//! # optional comment lines
//! 3
//! 1 2 0
//! ```
//!
//! The first token is the universe size `n`, followed by exactly `n`
//! images `f(0) .. f(n-1)`. Layout of the whitespace is free.

use std::fmt::Write as _;

use super::MonoAlg;
use crate::error::{Error, Result};
use crate::tokens::{end_position, tokenize};

pub fn parse_mua(text: &str) -> Result<MonoAlg> {
    let tokens = tokenize(text);
    let (eline, ecol) = end_position(text);
    let Some(first) = tokens.first() else {
        return Err(Error::parse(eline, ecol, "missing element count"));
    };
    let n = first.parse_usize("element count")?;
    if n == 0 {
        return Err(first.error("element count must be at least 1"));
    }
    let images = &tokens[1..];
    if images.len() < n {
        return Err(Error::parse(
            eline,
            ecol,
            format!("expected {n} images, found {}", images.len()),
        ));
    }
    if let Some(extra) = images.get(n) {
        return Err(extra.error(format!("unexpected token `{}` after {n} images", extra.text)));
    }
    let mut map = Vec::with_capacity(n);
    for (i, tok) in images.iter().enumerate() {
        let y = tok.parse_usize("an element")?;
        if y >= n {
            return Err(tok.error(format!("image f({i}) = {y} is out of range 0..{n}")));
        }
        map.push(y);
    }
    Ok(MonoAlg::from_map_unchecked(map))
}

/// Serializes in the layout `parse_mua` reads.
pub fn to_mua(a: &MonoAlg) -> String {
    let mut out = format!("{}\n", a.len());
    for (i, y) in a.table().iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{y}");
    }
    out.push('\n');
    out
}
