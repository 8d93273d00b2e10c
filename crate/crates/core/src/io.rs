//! Text and JSON forms of monomial ideals and constraint systems.
//!
//! Ideal text:
//! ```text
//! # comments and blank lines are ignored
//! vars: 3
//! x1^5
//! x1^4 x2
//! ```
//! The unit monomial is written `1`. Constraint system text is a `vars: e`
//! header, an optional `labels:` line, then rows `c1 c2 ... ce >= b`.
//! Input starting with `{` is read as JSON.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::polyhedra::ConstraintSystem;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((k + 1, line))
    })
}

fn parse_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    key: &str,
) -> Result<usize> {
    let (no, line) = lines.next().ok_or_else(|| parse_err(1, format!("missing `{key}:` header")))?;
    let value = line
        .strip_prefix(key)
        .and_then(|rest| rest.trim_start().strip_prefix(':'))
        .ok_or_else(|| parse_err(no, format!("expected `{key}: <count>`")))?;
    value
        .trim()
        .parse()
        .map_err(|_| parse_err(no, format!("`{}` is not a count", value.trim())))
}

fn monomial_on_line(line: &str, r: usize, no: usize) -> Result<Monomial> {
    let mut exps = vec![0u64; r];
    if line == "1" {
        return Ok(Monomial::new(exps));
    }
    for token in line.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()) {
        let (var, exp) = match token.split_once('^') {
            Some((v, e)) => {
                let e: u64 = e.parse().map_err(|_| parse_err(no, format!("bad exponent in `{token}`")))?;
                (v, e)
            }
            None => (token, 1),
        };
        let k: usize = var
            .strip_prefix('x')
            .and_then(|k| k.parse().ok())
            .ok_or_else(|| parse_err(no, format!("expected a variable `x<k>`, found `{token}`")))?;
        if k == 0 || k > r {
            return Err(parse_err(no, format!("variable x{k} outside x1..x{r}")));
        }
        exps[k - 1] = exps[k - 1]
            .checked_add(exp)
            .ok_or_else(|| parse_err(no, "exponent overflow"))?;
    }
    Ok(Monomial::new(exps))
}

/// A single monomial such as `x1^3 x2` or `1` in `r` variables.
pub fn parse_monomial(text: &str, r: usize) -> Result<Monomial> {
    monomial_on_line(text.trim(), r, 1)
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    r: usize,
    generators: Vec<Vec<u64>>,
}

/// Parse the text or JSON form; the result is minimized.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    if text.trim_start().starts_with('{') {
        let j: IdealJson =
            serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
        return MonomialIdeal::minimize(j.generators.into_iter().map(Monomial::new).collect(), j.r);
    }
    let mut lines = content_lines(text);
    let r = parse_header(&mut lines, "vars")?;
    let gens = lines
        .map(|(no, line)| monomial_on_line(line, r, no))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::minimize(gens, r)
}

/// Canonical text form, one generator per line.
pub fn ideal_to_text(i: &MonomialIdeal) -> String {
    let mut out = format!("vars: {}\n", i.r());
    for g in i.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

pub fn ideal_to_json(i: &MonomialIdeal) -> serde_json::Value {
    serde_json::to_value(IdealJson {
        r: i.r(),
        generators: i.generators().iter().map(|g| g.exponents().to_vec()).collect(),
    })
    .expect("plain data serializes")
}

#[derive(Deserialize)]
struct SystemJson {
    e: usize,
    rows: Vec<Vec<i64>>,
    rhs: Vec<i64>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

pub fn parse_system(text: &str) -> Result<ConstraintSystem> {
    if text.trim_start().starts_with('{') {
        let j: SystemJson =
            serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
        return match j.labels {
            Some(labels) => ConstraintSystem::with_labels(j.e, j.rows, j.rhs, labels),
            None => ConstraintSystem::new(j.e, j.rows, j.rhs),
        };
    }
    let mut lines = content_lines(text).peekable();
    let e = parse_header(&mut lines, "vars")?;
    let mut labels = None;
    if let Some((no, line)) = lines.peek().copied() {
        if let Some(rest) = line.strip_prefix("labels:") {
            let l: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            if l.len() != e {
                return Err(parse_err(no, format!("{} labels for {e} variables", l.len())));
            }
            labels = Some(l);
            lines.next();
        }
    }
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (no, line) in lines {
        let (lhs, b) = line
            .split_once(">=")
            .ok_or_else(|| parse_err(no, "expected `c1 ... ce >= b`"))?;
        let row = lhs
            .split_whitespace()
            .map(|c| c.parse::<i64>().map_err(|_| parse_err(no, format!("bad coefficient `{c}`"))))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != e {
            return Err(parse_err(no, format!("{} coefficients, expected {e}", row.len())));
        }
        let b = b
            .trim()
            .parse::<i64>()
            .map_err(|_| parse_err(no, format!("bad right-hand side `{}`", b.trim())))?;
        rows.push(row);
        rhs.push(b);
    }
    match labels {
        Some(labels) => ConstraintSystem::with_labels(e, rows, rhs, labels),
        None => ConstraintSystem::new(e, rows, rhs),
    }
}

pub fn system_to_text(sys: &ConstraintSystem) -> String {
    sys.to_string()
}

pub fn system_to_json(sys: &ConstraintSystem) -> serde_json::Value {
    serde_json::to_value(sys).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::e11_ideal;
    use proptest::prelude::*;

    #[test]
    fn parses_text() {
        let i = parse_ideal("# E11\nvars: 3\n\nx1^5\nx1^4 x2  # inline\nx1 x2^4\nx2^5\nx1^2 x2^3 x3\n").unwrap();
        assert_eq!(i, e11_ideal(5));
        let unit = parse_ideal("vars: 2\n1\nx1\n").unwrap();
        assert!(unit.is_unit());
        assert!(parse_ideal("vars: 2\n").unwrap().is_zero());
        assert_eq!(parse_monomial(" x1^2*x3 ", 3).unwrap().exponents(), &[2, 0, 1]);
        assert!(parse_monomial("x4", 3).is_err());
    }

    #[test]
    fn reports_locations() {
        match parse_ideal("vars: 2\nx1\nx3^2\n") {
            Err(Error::Parse { line: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_ideal("x1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_ideal("vars: 2\nx1^a\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn parses_json() {
        let i = parse_ideal(r#"{"r": 2, "generators": [[2,0],[1,1],[3,0]]}"#).unwrap();
        assert_eq!(i, MonomialIdeal::from_exponents(2, &[&[2, 0], &[1, 1]]));
        assert_eq!(parse_ideal(&ideal_to_json(&i).to_string()).unwrap(), i);
    }

    #[test]
    fn system_forms() {
        let sys = parse_system("vars: 3\n2 -1 0 >= 0\n0 2 -1 >= 0\n").unwrap();
        assert_eq!(sys, ConstraintSystem::staircase(3, 2));
        assert_eq!(parse_system(&system_to_text(&sys)).unwrap(), sys);
        assert_eq!(parse_system(&system_to_json(&sys).to_string()).unwrap(), sys);
        assert!(matches!(parse_system("vars: 2\n1 2 3 >= 0\n"), Err(Error::Parse { line: 2, .. })));
    }

    proptest! {
        #[test]
        fn ideal_round_trip(
            r in 1usize..4,
            raw in prop::collection::vec(prop::collection::vec(0u64..5, 3), 0..6),
        ) {
            let gens: Vec<Monomial> = raw.into_iter().map(|mut g| { g.truncate(r); Monomial::new(g) }).collect();
            let i = MonomialIdeal::minimize(gens, r).unwrap();
            let text = ideal_to_text(&i);
            let back = parse_ideal(&text).unwrap();
            prop_assert_eq!(&back, &i);
            prop_assert_eq!(ideal_to_text(&back), text);
            prop_assert_eq!(parse_ideal(&ideal_to_json(&i).to_string()).unwrap(), i);
        }
    }
}
