//! Deterministic finite automata, minimal distinguishing automata, and the
//! translation of CNF satisfiability into distinguishing problems.

#![allow(clippy::needless_range_loop)]

pub mod automata;
pub mod distinguish;
pub mod reduction;
pub mod sat;

pub use automata::{
    parse_dfa, serialize_dfa, Alphabet, BoolOp, Dfa, DfaError, ParseError, StateId, Word,
};
pub use distinguish::{
    brute_force_min_distinguishing, encode_distinguishing, is_distinguishing,
    shortest_distinguishing_word, solve_bounded, synth_min_distinguishing,
    synth_min_distinguishing_with, DistinguishError, Distinguisher, EncodeOptions, Orientation,
    SynthOutcome,
};
pub use reduction::{
    assignment_word, block_alphabet, build_l_minus, build_l_plus, in_l_minus, in_l_plus,
    verify_lemma, witness_dfa, Assignment, CnfFormula, FormulaError, LemmaReport, Verdict,
};
pub use sat::{parse_dimacs, solve, CnfInstance, DimacsError, Lit, Model};
