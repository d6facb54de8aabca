//! Plain-text code files.
//!
//! ```text
//! GF2M m=<m> mod=0x<hex>
//! CODE n=<n> k=<k>
//! <n hex elements>      (k generator rows)
//! ```

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{Field, Gf};
use crate::matrix::Matrix;

/// Serializes a code with its canonical generator rows, LF-terminated.
pub fn write_code(code: &LinearCode) -> String {
    let mut out = format!("{}\nCODE n={} k={}\n", code.field(), code.n(), code.k());
    for row in code.generator().iter_rows() {
        let cells: Vec<String> = row.iter().map(Gf::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_dims(line: &str) -> Option<(usize, usize)> {
    let rest = line.strip_prefix("CODE ")?;
    let (n, k) = rest.split_once(' ')?;
    Some((n.strip_prefix("n=")?.parse().ok()?, k.strip_prefix("k=")?.parse().ok()?))
}

/// Parses a code file, rejecting malformed headers, wrong element counts and
/// rank-deficient generators.
pub fn parse_code(text: &str) -> Result<LinearCode> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    let field: Field = header.parse().map_err(|e| match e {
        Error::Parse { msg, .. } => parse_err(1, msg),
        other => other,
    })?;
    let dims = lines.next().ok_or_else(|| parse_err(2, "missing CODE line"))?;
    let (n, k) = parse_dims(dims).ok_or_else(|| parse_err(2, format!("bad CODE line {dims:?}")))?;
    if k > n {
        return Err(parse_err(2, format!("k={k} exceeds n={n}")));
    }
    let mut data = Vec::with_capacity(n * k);
    for i in 0..k {
        let lineno = i + 3;
        let line = lines.next().ok_or_else(|| parse_err(lineno, "missing generator row"))?;
        let cells: Vec<&str> = if line.is_empty() {
            Vec::new()
        } else {
            line.split(' ').collect()
        };
        if cells.len() != n {
            return Err(parse_err(
                lineno,
                format!("expected {n} elements, found {}", cells.len()),
            ));
        }
        for cell in cells {
            let value =
                u32::from_str_radix(cell, 16).map_err(|_| parse_err(lineno, format!("bad element {cell:?}")))?;
            data.push(field.elem(value).map_err(|e| parse_err(lineno, e.to_string()))?);
        }
    }
    if let Some((extra, _)) = lines.enumerate().find(|(_, l)| !l.is_empty()) {
        return Err(parse_err(k + 3 + extra, "trailing content"));
    }
    LinearCode::new(field, Matrix::new(k, n, data))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "GF2M m=2 mod=0x7\nCODE n=2 k=1\n1 1\n";
        let code = parse_code(text).unwrap();
        assert_eq!(code.k(), 1);
        assert_eq!(write_code(&code), text);
    }

    #[test]
    fn zero_code_round_trip() {
        let text = "GF2M m=3 mod=0xb\nCODE n=4 k=0\n";
        assert_eq!(write_code(&parse_code(text).unwrap()), text);
    }

    #[test]
    fn rejects_bad_input() {
        let rank1 = "GF2M m=2 mod=0x7\nCODE n=3 k=2\n1 2 3\n2 3 1\n";
        assert_eq!(parse_code(rank1), Err(Error::RankDeficient { rows: 2, rank: 1 }));
        let short = "GF2M m=2 mod=0x7\nCODE n=3 k=1\n1 2\n";
        assert!(matches!(parse_code(short), Err(Error::Parse { line: 3, .. })));
        let big = "GF2M m=2 mod=0x7\nCODE n=2 k=1\n1 4\n";
        assert!(matches!(parse_code(big), Err(Error::Parse { line: 3, .. })));
        let reducible = "GF2M m=2 mod=0x5\nCODE n=2 k=1\n1 1\n";
        assert!(matches!(parse_code(reducible), Err(Error::ReducibleModulus { .. })));
        let header = "GF2M m=2\nCODE n=2 k=1\n1 1\n";
        assert!(matches!(parse_code(header), Err(Error::Parse { line: 1, .. })));
        let missing = "GF2M m=2 mod=0x7\nCODE n=2 k=2\n1 1\n";
        assert!(matches!(parse_code(missing), Err(Error::Parse { line: 4, .. })));
    }
}
