//! Whitespace tokenizer shared by the `.mua` and `.fa` readers.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub(crate) struct Token<'a> {
    pub text: &'a str,
    pub line: usize,
    pub column: usize,
}

impl Token<'_> {
    pub fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(self.line, self.column, message)
    }

    pub fn parse_usize(&self, what: &str) -> Result<usize> {
        self.text
            .parse::<usize>()
            .map_err(|_| self.error(format!("expected {what}, found `{}`", self.text)))
    }
}

/// Splits `text` into tokens, dropping lines whose first non-blank
/// character is `#`. Accepts LF and CRLF line endings.
pub(crate) fn tokenize(text: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    for (idx, raw) in text.split('\n').enumerate() {
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.trim_start().starts_with('#') {
            continue;
        }
        let mut rest = line;
        let mut offset = 0;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let tail = &rest[start..];
            let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
            let column = line[..offset + start].chars().count() + 1;
            out.push(Token {
                text: &tail[..len],
                line: idx + 1,
                column,
            });
            offset += start + len;
            rest = &tail[len..];
        }
    }
    out
}

/// Position just past the last line, for "unexpected end of input" errors.
pub(crate) fn end_position(text: &str) -> (usize, usize) {
    let lines: Vec<&str> = text.split('\n').collect();
    let last = lines.last().map(|l| l.strip_suffix('\r').unwrap_or(l)).unwrap_or("");
    (lines.len().max(1), last.chars().count() + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skips_comments_and_tracks_positions() {
        let toks = tokenize("# header\r\n  3\r\n1 22  0\n");
        let texts: Vec<_> = toks.iter().map(|t| (t.text, t.line, t.column)).collect();
        assert_eq!(
            texts,
            vec![("3", 2, 3), ("1", 3, 1), ("22", 3, 3), ("0", 3, 7)]
        );
    }
}
