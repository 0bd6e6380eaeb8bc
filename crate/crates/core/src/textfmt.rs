//! Plain-text formats shared by the CLI and the file-based interfaces:
//! rationals as `p/q` or `p`, vectors as whitespace/comma-separated entries,
//! matrices preceded by a `rows cols` header, LP dumps as `m n` then A, b, c.

use crate::lp::StandardLP;
use crate::{Int, QMatrix, Rat};
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error: {}", self.0)
    }
}

impl std::error::Error for ParseError {}

pub fn parse_rat(s: &str) -> Result<Rat, ParseError> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let num = Int::from_str(n.trim()).map_err(|e| ParseError(format!("{s:?}: {e}")))?;
        let den = Int::from_str(d.trim()).map_err(|e| ParseError(format!("{s:?}: {e}")))?;
        if den == Int::from(0) {
            return Err(ParseError(format!("{s:?}: zero denominator")));
        }
        Ok(Rat::new(num, den))
    } else {
        let num = Int::from_str(s).map_err(|e| ParseError(format!("{s:?}: {e}")))?;
        Ok(Rat::from_integer(num))
    }
}

pub fn format_rat(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Whitespace- or comma-separated rational vector.
pub fn parse_vector(s: &str) -> Result<Vec<Rat>, ParseError> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(parse_rat)
        .collect()
}

/// Matrix text: `rows cols` header then row-major entries.
pub fn parse_matrix(s: &str) -> Result<QMatrix, ParseError> {
    let mut tokens = s
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty());
    let rows: usize = tokens
        .next()
        .ok_or_else(|| ParseError("missing rows".into()))?
        .parse()
        .map_err(|e| ParseError(format!("rows: {e}")))?;
    let cols: usize = tokens
        .next()
        .ok_or_else(|| ParseError("missing cols".into()))?
        .parse()
        .map_err(|e| ParseError(format!("cols: {e}")))?;
    let entries: Vec<Rat> = tokens.map(parse_rat).collect::<Result<_, _>>()?;
    if entries.len() != rows * cols {
        return Err(ParseError(format!(
            "expected {} entries, found {}",
            rows * cols,
            entries.len()
        )));
    }
    Ok(QMatrix::new(rows, cols, entries))
}

pub fn format_matrix(m: &QMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| format_rat(&m[(i, j)])).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// LP dump: header `m n`, then the m rows of A, then b, then c.
pub fn parse_lp(s: &str) -> Result<StandardLP, ParseError> {
    let mut tokens = s
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty());
    let m: usize = tokens
        .next()
        .ok_or_else(|| ParseError("missing m".into()))?
        .parse()
        .map_err(|e| ParseError(format!("m: {e}")))?;
    let n: usize = tokens
        .next()
        .ok_or_else(|| ParseError("missing n".into()))?
        .parse()
        .map_err(|e| ParseError(format!("n: {e}")))?;
    let rest: Vec<Rat> = tokens.map(parse_rat).collect::<Result<_, _>>()?;
    if rest.len() != m * n + m + n {
        return Err(ParseError(format!(
            "expected {} entries after header, found {}",
            m * n + m + n,
            rest.len()
        )));
    }
    let a = QMatrix::new(m, n, rest[..m * n].to_vec());
    let b = rest[m * n..m * n + m].to_vec();
    let c = rest[m * n + m..].to_vec();
    Ok(StandardLP::new(a, b, c))
}

pub fn format_lp(lp: &StandardLP) -> String {
    let mut out = format!("{} {}\n", lp.a.rows(), lp.a.cols());
    for i in 0..lp.a.rows() {
        let row: Vec<String> = (0..lp.a.cols())
            .map(|j| format_rat(&lp.a[(i, j)]))
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out.push_str(
        &lp.b
            .iter()
            .map(format_rat)
            .collect::<Vec<_>>()
            .join(" "),
    );
    out.push('\n');
    out.push_str(
        &lp.c
            .iter()
            .map(format_rat)
            .collect::<Vec<_>>()
            .join(" "),
    );
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    #[test]
    fn rat_roundtrip() {
        for s in ["3", "-7", "3/5", "-4/5", "22/7"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
        }
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn matrix_roundtrip() {
        let text = "2 2\n3/5 -4/5\n4/5 3/5\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(m[(0, 0)], ratio(3, 5));
        assert_eq!(parse_matrix(&format_matrix(&m)).unwrap(), m);
    }

    #[test]
    fn vector_commas_and_spaces() {
        assert_eq!(
            parse_vector("0,0,1,0").unwrap(),
            vec![rat(0), rat(0), rat(1), rat(0)]
        );
        assert_eq!(parse_vector("1 -2  3/2").unwrap(), vec![rat(1), rat(-2), ratio(3, 2)]);
    }
}
