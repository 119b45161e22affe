//! DIMACS CNF input restricted to three distinct variables per clause.

use crate::constructors::{CnfFormula, Literal};
use crate::error::{Error, Result};

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Reads a formula. With `max34` every variable must occur exactly four times.
pub fn parse_dimacs(text: &str, max34: bool) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut clauses: Vec<[Literal; 3]> = Vec::new();
    let mut current: Vec<(i64, usize, usize)> = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let ln = ln + 1;
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('%') {
            break;
        }
        if trimmed.starts_with('p') {
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            if header.is_some() {
                return Err(parse_err(ln, 1, "second problem line"));
            }
            if fields.len() != 4 || fields[0] != "p" || fields[1] != "cnf" {
                return Err(parse_err(ln, 1, "expected `p cnf <variables> <clauses>`"));
            }
            let vars = fields[2].parse().map_err(|_| parse_err(ln, 1, "bad variable count"))?;
            let count = fields[3].parse().map_err(|_| parse_err(ln, 1, "bad clause count"))?;
            header = Some((vars, count, ln));
            continue;
        }
        let Some((vars, _, _)) = header else {
            return Err(parse_err(ln, 1, "clause before the problem line"));
        };
        let indent = line.len() - trimmed.len();
        let mut offset = 0;
        for token in trimmed.split_whitespace() {
            let start = trimmed[offset..].find(token).expect("token present") + offset;
            offset = start + token.len();
            let column = indent + start + 1;
            let value: i64 =
                token.parse().map_err(|_| parse_err(ln, column, format!("`{token}` is not an integer")))?;
            if value == 0 {
                clauses.push(finish_clause(&current, clauses.len())?);
                current.clear();
                continue;
            }
            if value.unsigned_abs() as usize > vars {
                return Err(parse_err(ln, column, format!("variable {} exceeds the declared {vars}", value.abs())));
            }
            current.push((value, ln, column));
        }
    }
    let Some((vars, count, header_line)) = header else {
        return Err(parse_err(1, 1, "missing problem line"));
    };
    if let Some(&(_, ln, column)) = current.first() {
        return Err(parse_err(ln, column, "clause not terminated by 0"));
    }
    if clauses.len() != count {
        return Err(parse_err(header_line, 1, format!("header declares {count} clauses, found {}", clauses.len())));
    }
    let f = CnfFormula::new(vars, clauses).map_err(|e| match e {
        Error::BadFormula(m) => Error::Shape(m),
        other => other,
    })?;
    if max34 {
        f.check_max34()?;
    }
    Ok(f)
}

fn finish_clause(lits: &[(i64, usize, usize)], index: usize) -> Result<[Literal; 3]> {
    if lits.len() != 3 {
        return Err(Error::Shape(format!("clause {} has {} literals, expected 3", index + 1, lits.len())));
    }
    let to_lit = |v: i64| Literal { var: v.unsigned_abs() as usize - 1, negated: v < 0 };
    let clause = [to_lit(lits[0].0), to_lit(lits[1].0), to_lit(lits[2].0)];
    if clause[0].var == clause[1].var || clause[0].var == clause[2].var || clause[1].var == clause[2].var {
        return Err(Error::Shape(format!("clause {} repeats a variable", index + 1)));
    }
    Ok(clause)
}

/// DIMACS text for `f`; parsing it back yields `f`.
pub fn emit_dimacs(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars, f.clauses.len());
    for c in &f.clauses {
        out.push_str(&format!("{} {} {} 0\n", c[0].to_dimacs(), c[1].to_dimacs(), c[2].to_dimacs()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_clause() {
        let f = parse_dimacs("c example\np cnf 3 1\n1 2 3 0\n", false).unwrap();
        assert_eq!((f.num_vars, f.clauses.len()), (3, 1));
        assert_eq!(f.clauses[0][2], Literal { var: 2, negated: false });
    }

    #[test]
    fn clauses_may_span_lines() {
        let f = parse_dimacs("p cnf 4 2\n1 -2\n 3 0 -1 2 4\n0\n%\n0\n", false).unwrap();
        assert_eq!(f.clauses[1][0], Literal { var: 0, negated: true });
        assert_eq!(emit_dimacs(&f), "p cnf 4 2\n1 -2 3 0\n-1 2 4 0\n");
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(parse_dimacs("p cnf 3 1\n1 1 2 0\n", false), Err(Error::Shape(_))));
        assert!(matches!(parse_dimacs("p cnf 4 1\n1 2 3 4 0\n", false), Err(Error::Shape(_))));
        // variable 1 occurs three times
        let f = "p cnf 3 3\n1 2 3 0\n-1 2 3 0\n1 -2 -3 0\n";
        assert!(parse_dimacs(f, false).is_ok());
        assert!(matches!(parse_dimacs(f, true), Err(Error::Shape(_))));
    }

    #[test]
    fn parse_errors_are_positioned() {
        assert_eq!(
            parse_dimacs("p cnf 3 1\n1 x 3 0\n", false),
            Err(Error::Parse { line: 2, column: 3, message: "`x` is not an integer".into() })
        );
        assert!(matches!(parse_dimacs("p cnf 3 2\n1 2 3 0\n", false), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_dimacs("1 2 3 0\n", false), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_dimacs("p cnf 3 1\n1 2 4 0\n", false), Err(Error::Parse { line: 2, column: 5, .. })));
        assert!(matches!(parse_dimacs("p cnf 3 1\n1 2 3\n", false), Err(Error::Parse { line: 2, column: 1, .. })));
    }
}
