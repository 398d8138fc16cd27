//! The `.fa` text format.
//!
//! ```text
//! # Z_3 with addition and zero
//! n 3
//! op 2
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! op 0
//! 0
//! ```
//!
//! `n` gives the universe size, each `op k` is followed by its `n^k`
//! table entries in row-major order. Line breaks inside a table are free.

use std::fmt::Write as _;

use super::algebra::{table_len, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::tokens::{end_position, tokenize, Token};

pub fn parse_fa(text: &str) -> Result<FiniteAlgebra> {
    let tokens = tokenize(text);
    let (eline, ecol) = end_position(text);
    let eof = |what: &str| Error::parse(eline, ecol, format!("unexpected end of input, expected {what}"));
    let mut it = tokens.iter();
    let mut next = |what: &str| it.next().ok_or_else(|| eof(what));

    let kw = next("`n`")?;
    expect_keyword(kw, "n")?;
    let size_tok = next("universe size")?;
    let size = size_tok.parse_usize("universe size")?;
    if size == 0 {
        return Err(size_tok.error("universe size must be at least 1"));
    }

    let mut ops = Vec::new();
    while let Ok(kw) = next("`op`") {
        expect_keyword(kw, "op")?;
        let arity_tok = next("arity")?;
        let arity = arity_tok.parse_usize("arity")?;
        let len = table_len(size, arity)
            .ok_or_else(|| arity_tok.error(format!("table for arity {arity} over {size} elements is too large")))?;
        let mut table = Vec::with_capacity(len.min(tokens.len()));
        for _ in 0..len {
            let t = next("table entry")?;
            let y = t.parse_usize("table entry")?;
            if y >= size {
                return Err(t.error(format!("table entry {y} is out of range 0..{size}")));
            }
            table.push(y);
        }
        ops.push((arity, table));
    }
    FiniteAlgebra::new(size, ops)
}

fn expect_keyword(t: &Token<'_>, kw: &str) -> Result<()> {
    if t.text == kw {
        Ok(())
    } else {
        Err(t.error(format!("expected `{kw}`, found `{}`", t.text)))
    }
}

/// Serializes in the layout `parse_fa` reads, one table row per line.
pub fn to_fa(fa: &FiniteAlgebra) -> String {
    let n = fa.size();
    let mut out = format!("n {n}\n");
    for op in fa.ops() {
        let _ = writeln!(out, "op {}", op.arity());
        let row = if op.arity() == 0 { 1 } else { n };
        for chunk in op.table().chunks(row) {
            let line: Vec<String> = chunk.iter().map(usize::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::builtin::boolean_algebra;

    #[test]
    fn reads_example() {
        let fa = parse_fa("# Z_3\nn 3\nop 2\n0 1 2\n1 2 0\n2 0 1\nop 0\n0\n").unwrap();
        assert_eq!(fa.size(), 3);
        assert_eq!(fa.signature(), vec![2, 0]);
        assert_eq!(fa.apply(0, &[2, 2]), 1);
    }

    #[test]
    fn round_trip() {
        let b = boolean_algebra(2).unwrap();
        let back = parse_fa(&to_fa(&b)).unwrap();
        assert_eq!(back.ops(), b.ops());
    }

    #[test]
    fn errors_carry_positions() {
        let pos = |text: &str| match parse_fa(text) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(pos("m 3"), (1, 1));
        assert_eq!(pos("n 0"), (1, 3));
        assert_eq!(pos("n 2\nop 1\n0 2"), (3, 3));
        assert_eq!(pos("n 2\nop 1\n0"), (3, 2));
        assert_eq!(pos("n 2\nop 1\n0 1 1"), (3, 5));
        assert_eq!(pos("n 2\nop 99"), (2, 4));
    }
}
