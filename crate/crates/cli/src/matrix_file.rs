//! Matrix files: one row per line, whitespace-separated scalars.
//!
//! Cyclotomic scalars such as `[1, 2]@3` contain spaces, so a `[` opens a
//! token that runs to the matching `]` and then to the next whitespace.
//! Blank lines and lines starting with `#` are skipped.

use hopf_frobenius::{Error, FieldScalar, Matrix, Result};

pub fn tokenize(line: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut chars = line.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let mut tok = String::new();
        let mut depth = 0usize;
        while let Some(&c) = chars.peek() {
            if c.is_whitespace() && depth == 0 {
                break;
            }
            match c {
                '[' => depth += 1,
                ']' => {
                    depth = depth
                        .checked_sub(1)
                        .ok_or_else(|| Error::InvalidInput(format!("unbalanced ']' in {line:?}")))?
                }
                _ => {}
            }
            tok.push(c);
            chars.next();
        }
        if depth != 0 {
            return Err(Error::InvalidInput(format!("unclosed '[' in {line:?}")));
        }
        out.push(tok);
    }
    Ok(out)
}

pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let mut rows = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = tokenize(line)?
            .iter()
            .map(|t| t.parse::<FieldScalar>().map_err(Error::from))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::InvalidInput("matrix file has no rows".into()));
    }
    Matrix::from_rows(rows)
}
