use super::{CnfInstance, Lit};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DimacsError {
    #[error("missing `p cnf <vars> <clauses>` header")]
    MissingHeader,
    #[error("line {0}: malformed header, expected `p cnf <vars> <clauses>`")]
    BadHeader(usize),
    #[error("line {0}: duplicate header")]
    DuplicateHeader(usize),
    #[error("line {line}: invalid literal `{token}`")]
    BadLiteral { line: usize, token: String },
    #[error("line {line}: literal {lit} exceeds declared variable count {vars}")]
    LiteralOutOfRange { line: usize, lit: Lit, vars: usize },
    #[error("last clause is not terminated by 0")]
    UnterminatedClause,
}

/// Parses DIMACS CNF text.
///
/// `c` lines are comments and a `%` line ends the clause section. A clause
/// count differing from the header is logged as a warning.
pub fn parse_dimacs(text: &str) -> Result<CnfInstance, DimacsError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<Lit>> = Vec::new();
    let mut current: Vec<Lit> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(DimacsError::DuplicateHeader(line_no));
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            match parts.as_slice() {
                ["p", "cnf", v, c] => {
                    let v = v.parse().map_err(|_| DimacsError::BadHeader(line_no))?;
                    let c = c.parse().map_err(|_| DimacsError::BadHeader(line_no))?;
                    header = Some((v, c));
                }
                _ => return Err(DimacsError::BadHeader(line_no)),
            }
            continue;
        }
        let (vars, _) = header.ok_or(DimacsError::MissingHeader)?;
        for tok in line.split_whitespace() {
            let lit: Lit = tok.parse().map_err(|_| DimacsError::BadLiteral {
                line: line_no,
                token: tok.to_string(),
            })?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else if lit.unsigned_abs() as usize > vars {
                return Err(DimacsError::LiteralOutOfRange {
                    line: line_no,
                    lit,
                    vars,
                });
            } else {
                current.push(lit);
            }
        }
    }

    let (vars, declared) = header.ok_or(DimacsError::MissingHeader)?;
    if !current.is_empty() {
        return Err(DimacsError::UnterminatedClause);
    }
    if declared != clauses.len() {
        log::warn!(
            "header declares {declared} clauses but {} were read",
            clauses.len()
        );
    }
    Ok(CnfInstance::new(vars, clauses).expect("literals are range-checked while reading"))
}
