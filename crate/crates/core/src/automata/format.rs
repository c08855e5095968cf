//! The line-based `.dfa` text format.
//!
//! ```text
//! dfa v1
//! alphabet 01#
//! states 3
//! initial 0
//! accepting 0
//! row 0 2 1 2
//! row 1 2 2 0
//! row 2 2 2 2
//! ```
//!
//! `;` starts a comment running to the end of the line; blank lines are
//! ignored. Rows may appear in any order but every state needs exactly one.

use std::fmt::Write as _;

use super::{Alphabet, Dfa, DfaError, StateId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("expected `{0}`")]
    Expected(&'static str),
    #[error("invalid number `{0}`")]
    BadNumber(String),
    #[error("state {state} out of range 0..{count}")]
    StateOutOfRange { state: usize, count: usize },
    #[error("duplicate row for state {0}")]
    DuplicateRow(StateId),
    #[error("row for state {state} has {found} targets, expected {expected}")]
    RowWidth {
        state: StateId,
        found: usize,
        expected: usize,
    },
    #[error("unexpected content after the last row")]
    TrailingContent,
    #[error(transparent)]
    Invalid(DfaError),
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    /// Next non-blank line with comments removed, paired with its 1-based number.
    fn next_content(&mut self) -> Option<(usize, &'a str)> {
        for (i, raw) in self.inner.by_ref() {
            self.last = i + 1;
            let body = raw.split(';').next().unwrap_or("").trim();
            if !body.is_empty() {
                return Some((i + 1, body));
            }
        }
        None
    }

    fn expect(&mut self, keyword: &'static str) -> Result<(usize, &'a str), ParseError> {
        let err = |line| ParseError {
            line,
            kind: ParseErrorKind::Expected(keyword),
        };
        let (line, body) = self.next_content().ok_or_else(|| err(self.last + 1))?;
        let mut parts = body.splitn(2, char::is_whitespace);
        if parts.next() != Some(keyword) {
            return Err(err(line));
        }
        Ok((line, parts.next().unwrap_or("").trim()))
    }
}

fn number(line: usize, tok: &str) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| ParseError {
        line,
        kind: ParseErrorKind::BadNumber(tok.to_string()),
    })
}

fn state(line: usize, tok: &str, count: usize) -> Result<StateId, ParseError> {
    let q = number(line, tok)?;
    if q >= count {
        return Err(ParseError {
            line,
            kind: ParseErrorKind::StateOutOfRange { state: q, count },
        });
    }
    Ok(q)
}

/// Parses the `.dfa` text format.
pub fn parse_dfa(text: &str) -> Result<Dfa, ParseError> {
    let mut lines = Lines {
        inner: text.lines().enumerate(),
        last: 0,
    };

    let (line, version) = lines.expect("dfa")?;
    if version != "v1" {
        return Err(ParseError {
            line,
            kind: ParseErrorKind::Expected("dfa v1"),
        });
    }

    let (line, symbols) = lines.expect("alphabet")?;
    let alphabet = Alphabet::new(symbols.chars()).map_err(|e| ParseError {
        line,
        kind: ParseErrorKind::Invalid(e),
    })?;

    let (line, count) = lines.expect("states")?;
    let count = number(line, count)?;
    if count == 0 {
        return Err(ParseError {
            line,
            kind: ParseErrorKind::Invalid(DfaError::NoStates),
        });
    }

    let (line, init) = lines.expect("initial")?;
    let initial = state(line, init, count)?;

    let (line, acc) = lines.expect("accepting")?;
    let accepting = acc
        .split_whitespace()
        .map(|tok| state(line, tok, count))
        .collect::<Result<Vec<_>, _>>()?;

    let mut rows: Vec<Option<Vec<StateId>>> = vec![None; count];
    for _ in 0..count {
        let (line, body) = lines.expect("row")?;
        let mut toks = body.split_whitespace();
        let q = state(line, toks.next().unwrap_or(""), count)?;
        let targets = toks
            .map(|tok| state(line, tok, count))
            .collect::<Result<Vec<_>, _>>()?;
        if targets.len() != alphabet.len() {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::RowWidth {
                    state: q,
                    found: targets.len(),
                    expected: alphabet.len(),
                },
            });
        }
        if rows[q].replace(targets).is_some() {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::DuplicateRow(q),
            });
        }
    }
    if let Some((line, _)) = lines.next_content() {
        return Err(ParseError {
            line,
            kind: ParseErrorKind::TrailingContent,
        });
    }

    // count rows were read without duplicates, so every slot is filled
    let rows = rows.into_iter().map(Option::unwrap).collect();
    Dfa::new(alphabet, initial, accepting, rows).map_err(|e| ParseError {
        line: lines.last,
        kind: ParseErrorKind::Invalid(e),
    })
}

/// Writes the canonical text of `d`: one header line per field, accepting
/// states ascending, rows in state order, single spaces, trailing newline.
pub fn serialize_dfa(d: &Dfa) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "dfa v1");
    let _ = writeln!(out, "alphabet {}", d.alphabet());
    let _ = writeln!(out, "states {}", d.state_count());
    let _ = writeln!(out, "initial {}", d.initial());
    out.push_str("accepting");
    for q in d.accepting_states() {
        let _ = write!(out, " {q}");
    }
    out.push('\n');
    for q in 0..d.state_count() {
        let _ = write!(out, "row {q}");
        for t in d.row(q) {
            let _ = write!(out, " {t}");
        }
        out.push('\n');
    }
    out
}
