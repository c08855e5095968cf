//! Complete deterministic finite automata over an explicit, ordered alphabet.
//!
//! Every [`Dfa`] is total: each `(state, symbol)` pair has exactly one target.
//! States are dense indices `0..m`. The order of the alphabet is significant;
//! it fixes the column order of the transition table, the order of edge
//! exploration in breadth-first searches and therefore the canonical state
//! numbering produced by [`Dfa::minimize`] and [`Dfa::product`].

mod dot;
mod format;
mod minimize;
mod ops;

use std::collections::VecDeque;
use std::fmt;

pub use format::{parse_dfa, serialize_dfa, ParseError, ParseErrorKind};
pub use ops::BoolOp;

/// Index of a state inside a transition table.
pub type StateId = usize;

/// Errors raised when constructing or combining automata.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DfaError {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("alphabet contains duplicate symbol '{0}'")]
    DuplicateSymbol(char),
    #[error("alphabet symbol {0:?} is whitespace or not printable")]
    InvalidSymbol(char),
    #[error("symbol '{0}' is not part of the alphabet")]
    UnknownSymbol(char),
    #[error("automaton needs at least one state")]
    NoStates,
    #[error("state {state} is outside the valid range 0..{count}")]
    StateOutOfRange { state: StateId, count: usize },
    #[error("state {state} has {found} transitions, expected {expected}")]
    RowLength {
        state: StateId,
        found: usize,
        expected: usize,
    },
    #[error("alphabets differ: \"{left}\" vs \"{right}\"")]
    AlphabetMismatch { left: Alphabet, right: Alphabet },
}

/// Ordered set of distinct, printable, non-whitespace symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(symbols: I) -> Result<Self, DfaError> {
        let mut out: Vec<char> = Vec::new();
        for c in symbols {
            if c.is_whitespace() || c.is_control() {
                return Err(DfaError::InvalidSymbol(c));
            }
            if out.contains(&c) {
                return Err(DfaError::DuplicateSymbol(c));
            }
            out.push(c);
        }
        if out.is_empty() {
            return Err(DfaError::EmptyAlphabet);
        }
        Ok(Self { symbols: out })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn symbol(&self, index: usize) -> char {
        self.symbols[index]
    }

    /// Column index of `c`, if it belongs to the alphabet.
    pub fn index_of(&self, c: char) -> Option<usize> {
        self.symbols.iter().position(|&s| s == c)
    }

    pub(crate) fn ensure_same(&self, other: &Alphabet) -> Result<(), DfaError> {
        if self == other {
            Ok(())
        } else {
            Err(DfaError::AlphabetMismatch {
                left: self.clone(),
                right: other.clone(),
            })
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.symbols.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

/// A finite sequence of symbols.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<char>);

impl Word {
    pub fn new(symbols: Vec<char>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn symbols(&self) -> &[char] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Converts the word into column indices of `alphabet`.
    pub fn indices(&self, alphabet: &Alphabet) -> Result<Vec<usize>, DfaError> {
        self.0
            .iter()
            .map(|&c| alphabet.index_of(c).ok_or(DfaError::UnknownSymbol(c)))
            .collect()
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word(s.chars().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

/// A complete deterministic finite automaton.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Alphabet,
    initial: StateId,
    accepting: Vec<bool>,
    // row-major: delta[q * |Σ| + a]
    delta: Vec<StateId>,
}

impl Dfa {
    /// Builds an automaton from an explicit transition table with one row per
    /// state and one column per alphabet symbol.
    pub fn new<I>(
        alphabet: Alphabet,
        initial: StateId,
        accepting: I,
        rows: Vec<Vec<StateId>>,
    ) -> Result<Self, DfaError>
    where
        I: IntoIterator<Item = StateId>,
    {
        let m = rows.len();
        let width = alphabet.len();
        if m == 0 {
            return Err(DfaError::NoStates);
        }
        let check = |state: StateId| {
            if state < m {
                Ok(state)
            } else {
                Err(DfaError::StateOutOfRange { state, count: m })
            }
        };
        check(initial)?;
        let mut accept = vec![false; m];
        for q in accepting {
            accept[check(q)?] = true;
        }
        let mut delta = Vec::with_capacity(m * width);
        for (state, row) in rows.into_iter().enumerate() {
            if row.len() != width {
                return Err(DfaError::RowLength {
                    state,
                    found: row.len(),
                    expected: width,
                });
            }
            for t in row {
                delta.push(check(t)?);
            }
        }
        Ok(Dfa {
            alphabet,
            initial,
            accepting: accept,
            delta,
        })
    }

    /// Builds an automaton with `states` states whose transitions are given by
    /// `next(state, symbol_index)`.
    ///
    /// Panics if `next` returns an out-of-range target or `initial >= states`;
    /// intended for constructions whose shape is known to be valid.
    pub fn from_fn(
        alphabet: Alphabet,
        states: usize,
        initial: StateId,
        is_accepting: impl Fn(StateId) -> bool,
        next: impl Fn(StateId, usize) -> StateId,
    ) -> Self {
        assert!(states > 0 && initial < states, "invalid state layout");
        let width = alphabet.len();
        let mut delta = Vec::with_capacity(states * width);
        for q in 0..states {
            for a in 0..width {
                let t = next(q, a);
                assert!(t < states, "transition target {t} out of range");
                delta.push(t);
            }
        }
        Dfa {
            alphabet,
            initial,
            accepting: (0..states).map(is_accepting).collect(),
            delta,
        }
    }

    /// One-state automaton accepting nothing (`accept == false`) or every word.
    pub fn trivial(alphabet: Alphabet, accept: bool) -> Self {
        Dfa::from_fn(alphabet, 1, 0, |_| accept, |_, _| 0)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting[q]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = StateId> + '_ {
        self.accepting
            .iter()
            .enumerate()
            .filter_map(|(q, &acc)| acc.then_some(q))
    }

    /// Target of the transition from `q` on the symbol in column `symbol`.
    #[inline]
    pub fn next(&self, q: StateId, symbol: usize) -> StateId {
        self.delta[q * self.alphabet.len() + symbol]
    }

    /// The transition row of `q`, in alphabet order.
    pub fn row(&self, q: StateId) -> &[StateId] {
        let w = self.alphabet.len();
        &self.delta[q * w..(q + 1) * w]
    }

    /// Extended transition function over column indices.
    pub fn run_indices(&self, from: StateId, word: &[usize]) -> StateId {
        word.iter().fold(from, |q, &a| self.next(q, a))
    }

    /// Whether `word` is in the language of this automaton.
    pub fn accepts(&self, word: &Word) -> Result<bool, DfaError> {
        let idx = word.indices(&self.alphabet)?;
        Ok(self.accepts_indices(&idx))
    }

    pub fn accepts_indices(&self, word: &[usize]) -> bool {
        self.accepting[self.run_indices(self.initial, word)]
    }

    /// States reachable from the initial state, in breadth-first order with
    /// edges explored in alphabet order.
    pub fn bfs_order(&self) -> Vec<StateId> {
        let mut seen = vec![false; self.state_count()];
        let mut order = Vec::new();
        let mut queue = VecDeque::from([self.initial]);
        seen[self.initial] = true;
        while let Some(q) = queue.pop_front() {
            order.push(q);
            for &t in self.row(q) {
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        order
    }

    /// Renumbers states in breadth-first order from the initial state.
    /// Unreachable states keep their relative order and are placed last.
    pub fn canonical(&self) -> Dfa {
        let mut order = self.bfs_order();
        let mut placed = vec![false; self.state_count()];
        order.iter().for_each(|&q| placed[q] = true);
        order.extend((0..self.state_count()).filter(|&q| !placed[q]));
        self.renumbered(&order)
    }

    /// Restriction to `order` (old ids), with `order[i]` becoming state `i`.
    /// Every transition out of a listed state must land on a listed state.
    pub(crate) fn renumbered(&self, order: &[StateId]) -> Dfa {
        let mut new_id = vec![usize::MAX; self.state_count()];
        for (i, &q) in order.iter().enumerate() {
            new_id[q] = i;
        }
        Dfa::from_fn(
            self.alphabet.clone(),
            order.len(),
            new_id[self.initial],
            |q| self.accepting[order[q]],
            |q, a| new_id[self.next(order[q], a)],
        )
    }
}

impl fmt::Display for Dfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_dfa(self))
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn unary() -> Alphabet {
        Alphabet::new(['a']).unwrap()
    }

    /// Four-state cycle accepting a^n for n not divisible by 4.
    pub fn cycle4() -> Dfa {
        Dfa::new(
            unary(),
            0,
            [1, 2, 3],
            vec![vec![1], vec![2], vec![3], vec![0]],
        )
        .unwrap()
    }

    /// Five-state lasso: p0 p1 p2 p3 p4 with p4 -> p2, accepting p1 p2 p3.
    pub fn lasso5() -> Dfa {
        Dfa::new(
            unary(),
            0,
            [1, 2, 3],
            vec![vec![1], vec![2], vec![3], vec![4], vec![2]],
        )
        .unwrap()
    }

    /// Odd-length words over {a}.
    pub fn a_odd() -> Dfa {
        Dfa::new(unary(), 0, [1], vec![vec![1], vec![0]]).unwrap()
    }
}
