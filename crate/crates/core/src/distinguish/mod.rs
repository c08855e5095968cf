//! Distinguishing two automata: shortest distinguishing words, the
//! distinguishing-automaton predicate, exact minimal synthesis through SAT,
//! and an exhaustive enumeration oracle.
//!
//! A DFA `D` *distinguishes* `A1` and `A2` when `L(D)` is a subset of exactly
//! one of `L(A1)` and `L(A2)`.

mod brute;
mod encode;

use std::fmt;

use crate::automata::{BoolOp, Dfa, DfaError, Word};
use crate::sat::Solver;

pub use brute::brute_force_min_distinguishing;
pub use encode::{encode_distinguishing, DecodeContext, EncodeOptions, EncodingStats};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DistinguishError {
    #[error(transparent)]
    Automaton(#[from] DfaError),
    #[error("state bound must be at least 1")]
    ZeroBound,
}

/// Which input the synthesized language must be included in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    /// `L(D) ⊆ L(A1)` and `L(D) ⊄ L(A2)`.
    First,
    /// `L(D) ⊆ L(A2)` and `L(D) ⊄ L(A1)`.
    Second,
}

impl Orientation {
    pub const BOTH: [Orientation; 2] = [Orientation::First, Orientation::Second];

    /// `(target, escape)` for the pair `(a1, a2)`.
    pub fn split<'a>(self, a1: &'a Dfa, a2: &'a Dfa) -> (&'a Dfa, &'a Dfa) {
        match self {
            Orientation::First => (a1, a2),
            Orientation::Second => (a2, a1),
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::First => "1",
            Orientation::Second => "2",
        })
    }
}

/// A distinguishing automaton together with the orientation it satisfies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distinguisher {
    pub dfa: Dfa,
    pub orientation: Orientation,
}

/// Result of a bounded search for a smallest distinguishing automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthOutcome {
    /// Largest state count that was allowed.
    pub bound: usize,
    pub result: Option<Distinguisher>,
}

impl SynthOutcome {
    pub fn found(&self) -> bool {
        self.result.is_some()
    }

    /// State count of the distinguisher, if one was found.
    pub fn states(&self) -> Option<usize> {
        self.result.as_ref().map(|r| r.dfa.state_count())
    }

    pub fn orientation(&self) -> Option<Orientation> {
        self.result.as_ref().map(|r| r.orientation)
    }
}

/// A shortest word accepted by exactly one of `a1`, `a2`; `None` iff the
/// languages are equal. Among shortest words the shortlex-least is returned.
pub fn shortest_distinguishing_word(a1: &Dfa, a2: &Dfa) -> Result<Option<Word>, DfaError> {
    Ok(a1.product(a2, BoolOp::Xor)?.shortest_accepted_word())
}

/// Whether `L(d)` is included in exactly one of `L(a1)` and `L(a2)`.
pub fn is_distinguishing(d: &Dfa, a1: &Dfa, a2: &Dfa) -> Result<bool, DfaError> {
    Ok(d.is_subset(a1)? != d.is_subset(a2)?)
}

/// Solves one encoding; returns the decoded automaton if satisfiable.
pub fn solve_bounded(
    a1: &Dfa,
    a2: &Dfa,
    states: usize,
    orientation: Orientation,
    options: EncodeOptions,
) -> Result<Option<Dfa>, DistinguishError> {
    let (cnf, ctx) = encode_distinguishing(a1, a2, states, orientation, options)?;
    Ok(Solver::new(&cnf).solve().map(|m| ctx.decode(&m)))
}

/// Smallest distinguishing automaton with at most `k_max` states, found by
/// trying `k = 1, 2, ..` and, for each `k`, target `a1` before target `a2`.
///
/// The returned automaton is minimized; its state count is the minimal `k`.
/// Uses breadth-first symmetry breaking; see
/// [`synth_min_distinguishing_with`] to choose encoding options.
pub fn synth_min_distinguishing(
    a1: &Dfa,
    a2: &Dfa,
    k_max: usize,
) -> Result<SynthOutcome, DistinguishError> {
    let options = EncodeOptions {
        symmetry_breaking: true,
    };
    synth_min_distinguishing_with(a1, a2, k_max, options)
}

pub fn synth_min_distinguishing_with(
    a1: &Dfa,
    a2: &Dfa,
    k_max: usize,
    options: EncodeOptions,
) -> Result<SynthOutcome, DistinguishError> {
    a1.alphabet().ensure_same(a2.alphabet())?;
    for k in 1..=k_max {
        for orientation in Orientation::BOTH {
            if let Some(raw) = solve_bounded(a1, a2, k, orientation, options)? {
                let dfa = raw.minimize();
                let (target, escape) = orientation.split(a1, a2);
                assert!(
                    dfa.is_subset(target)? && !dfa.is_subset(escape)?,
                    "decoded automaton violates the encoding contract"
                );
                log::debug!("distinguisher with {k} states, orientation {orientation}");
                return Ok(SynthOutcome {
                    bound: k_max,
                    result: Some(Distinguisher { dfa, orientation }),
                });
            }
        }
    }
    Ok(SynthOutcome {
        bound: k_max,
        result: None,
    })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::automata::Alphabet;

    fn unary() -> Alphabet {
        Alphabet::new(['a']).unwrap()
    }

    pub fn cycle4() -> Dfa {
        Dfa::new(
            unary(),
            0,
            [1, 2, 3],
            vec![vec![1], vec![2], vec![3], vec![0]],
        )
        .unwrap()
    }

    pub fn lasso5() -> Dfa {
        Dfa::new(
            unary(),
            0,
            [1, 2, 3],
            vec![vec![1], vec![2], vec![3], vec![4], vec![2]],
        )
        .unwrap()
    }

    fn a_odd() -> Dfa {
        Dfa::new(unary(), 0, [1], vec![vec![1], vec![0]]).unwrap()
    }

    #[test]
    fn unary_pair_word() {
        assert_eq!(
            shortest_distinguishing_word(&cycle4(), &lasso5()).unwrap(),
            Some(Word::from("aaaaaaa"))
        );
        assert_eq!(
            shortest_distinguishing_word(&cycle4(), &cycle4()).unwrap(),
            None
        );
    }

    #[test]
    fn distinguishing_predicate() {
        assert!(is_distinguishing(&a_odd(), &cycle4(), &lasso5()).unwrap());
        let empty = Dfa::trivial(unary(), false);
        assert!(!is_distinguishing(&empty, &cycle4(), &lasso5()).unwrap());
        // an input automaton distinguishes itself from the other
        assert!(is_distinguishing(&cycle4(), &cycle4(), &lasso5()).unwrap());
    }

    #[test]
    fn unary_pair_has_two_state_distinguisher() {
        let out = synth_min_distinguishing(&cycle4(), &lasso5(), 8).unwrap();
        assert_eq!(out.states(), Some(2));
        assert_eq!(out.orientation(), Some(Orientation::First));
        let d = &out.result.as_ref().unwrap().dfa;
        assert!(is_distinguishing(d, &cycle4(), &lasso5()).unwrap());
        assert_eq!(out.bound, 8);
    }

    #[test]
    fn one_state_is_not_enough_for_unary_pair() {
        for o in Orientation::BOTH {
            for sb in [false, true] {
                let opts = EncodeOptions {
                    symmetry_breaking: sb,
                };
                assert_eq!(
                    solve_bounded(&cycle4(), &lasso5(), 1, o, opts).unwrap(),
                    None
                );
            }
        }
    }

    #[test]
    fn symmetry_breaking_keeps_minimal_size() {
        let pairs = [
            (cycle4(), lasso5()),
            (lasso5(), a_odd()),
            (a_odd(), cycle4()),
        ];
        for (x, y) in &pairs {
            let outcomes: Vec<_> = [false, true]
                .into_iter()
                .map(|sb| {
                    let opts = EncodeOptions {
                        symmetry_breaking: sb,
                    };
                    let out = synth_min_distinguishing_with(x, y, 4, opts).unwrap();
                    (out.states(), out.orientation())
                })
                .collect();
            assert_eq!(outcomes[0], outcomes[1]);
            assert!(outcomes[0].0.is_some());
        }
    }

    #[test]
    fn equal_languages_have_no_distinguisher() {
        let out = synth_min_distinguishing(&lasso5(), &lasso5(), 3).unwrap();
        assert!(!out.found());
        assert_eq!(out.bound, 3);
        for o in Orientation::BOTH {
            let r = solve_bounded(&cycle4(), &cycle4(), 2, o, EncodeOptions::default());
            assert_eq!(r.unwrap(), None);
        }
    }

    #[test]
    fn zero_bound_and_mismatch_are_errors() {
        assert_eq!(
            encode_distinguishing(
                &cycle4(),
                &lasso5(),
                0,
                Orientation::First,
                Default::default()
            )
            .unwrap_err(),
            DistinguishError::ZeroBound
        );
        let other = Dfa::trivial(Alphabet::new(['b']).unwrap(), true);
        assert!(matches!(
            synth_min_distinguishing(&cycle4(), &other, 2),
            Err(DistinguishError::Automaton(
                DfaError::AlphabetMismatch { .. }
            ))
        ));
    }
}
