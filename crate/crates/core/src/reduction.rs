//! From CNF formulas to pairs of automata over `{0, 1, #}`.
//!
//! A truth assignment to `p1..pk` is written as a word of `k` bits. For a
//! formula with clauses `C1..Cn` two languages are built:
//!
//! * the *bounded* language: between `0` and `n` bit blocks, each of length
//!   `k` and each followed by `#`;
//! * the *satisfying* language: the bounded language plus every word whose
//!   first `n` blocks `w1#..wn#` satisfy `C1..Cn` in order, followed by an
//!   arbitrary suffix.
//!
//! The formula is satisfiable exactly when a DFA with at most `k + 2` states
//! accepts a subset of the satisfying language that escapes the bounded one.
//! [`verify_lemma`] checks that equivalence on a concrete formula.

use std::fmt;

use crate::automata::{Alphabet, Dfa, Word};
use crate::distinguish::{is_distinguishing, synth_min_distinguishing, SynthOutcome};
use crate::sat::{self, CnfInstance, Lit, Model};

const ZERO: usize = 0;
const ONE: usize = 1;
const HASH: usize = 2;

/// The alphabet `01#`, in this order.
pub fn block_alphabet() -> Alphabet {
    Alphabet::new(['0', '1', '#']).expect("static alphabet")
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormulaError {
    #[error("formula needs at least one variable")]
    NoVariables,
    #[error("formula needs at least one clause")]
    NoClauses,
    #[error("clause {0} is empty; both languages would coincide")]
    EmptyClause(usize),
    #[error("literal {lit} out of range for {var_count} variables")]
    LiteralOutOfRange { lit: Lit, var_count: usize },
}

/// A CNF formula with `k >= 1` variables and `n >= 1` nonempty clauses.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    var_count: usize,
    clauses: Vec<Vec<Lit>>,
}

impl CnfFormula {
    pub fn new(var_count: usize, clauses: Vec<Vec<Lit>>) -> Result<Self, FormulaError> {
        if var_count == 0 {
            return Err(FormulaError::NoVariables);
        }
        if clauses.is_empty() {
            return Err(FormulaError::NoClauses);
        }
        for (i, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(FormulaError::EmptyClause(i + 1));
            }
            for &lit in clause {
                if lit == 0 || lit.unsigned_abs() as usize > var_count {
                    return Err(FormulaError::LiteralOutOfRange { lit, var_count });
                }
            }
        }
        Ok(CnfFormula { var_count, clauses })
    }

    /// `k`
    pub fn var_count(&self) -> usize {
        self.var_count
    }

    /// `n`
    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<Lit>] {
        &self.clauses
    }

    /// Whether the assignment `bits` (bit `j` is variable `j + 1`) satisfies
    /// clause `i` (0-based).
    pub fn clause_satisfied(&self, i: usize, bits: &[bool]) -> bool {
        self.clauses[i]
            .iter()
            .any(|&lit| bits[lit.unsigned_abs() as usize - 1] == (lit > 0))
    }

    /// Whether setting variable `var` (1-based) to `value` makes clause `i` true.
    fn literal_hits(&self, i: usize, var: usize, value: bool) -> bool {
        self.clauses[i]
            .iter()
            .any(|&lit| lit.unsigned_abs() as usize == var && (lit > 0) == value)
    }

    pub fn to_instance(&self) -> CnfInstance {
        CnfInstance::new(self.var_count, self.clauses.clone()).expect("validated formula")
    }
}

impl TryFrom<CnfInstance> for CnfFormula {
    type Error = FormulaError;

    fn try_from(f: CnfInstance) -> Result<Self, Self::Error> {
        CnfFormula::new(f.var_count(), f.clauses().to_vec())
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let clauses: Vec<String> = self
            .clauses
            .iter()
            .map(|c| {
                let lits: Vec<String> = c
                    .iter()
                    .map(|&l| {
                        let sign = if l < 0 { "¬" } else { "" };
                        format!("{sign}p{}", l.unsigned_abs())
                    })
                    .collect();
                format!("({})", lits.join("∨"))
            })
            .collect();
        f.write_str(&clauses.join("∧"))
    }
}

/// A truth assignment to `p1..pk`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    bits: Vec<bool>,
}

impl Assignment {
    pub fn new(bits: Vec<bool>) -> Self {
        Assignment { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// The bit word, `1` for true.
    pub fn to_word(&self) -> Word {
        Word::new(
            self.bits
                .iter()
                .map(|&b| if b { '1' } else { '0' })
                .collect(),
        )
    }

    /// Inverse of [`Assignment::to_word`]; `None` if `w` is not over `{0, 1}`.
    pub fn from_word(w: &Word) -> Option<Self> {
        w.symbols()
            .iter()
            .map(|&c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Assignment::new)
    }
}

impl From<&Model> for Assignment {
    fn from(m: &Model) -> Self {
        Assignment::new(m.values().to_vec())
    }
}

/// The word of a truth assignment.
pub fn assignment_word(a: &Assignment) -> Word {
    a.to_word()
}

/// Splits `w` into `#`-terminated blocks of exactly `k` bits. `None` if `w`
/// has any other shape.
fn blocks(w: &Word, k: usize) -> Option<Vec<Vec<bool>>> {
    let s = w.symbols();
    if !s.len().is_multiple_of(k + 1) {
        return None;
    }
    s.chunks(k + 1)
        .map(|chunk| {
            let (bits, end) = chunk.split_at(k);
            if end != ['#'] {
                return None;
            }
            bits.iter()
                .map(|&c| match c {
                    '0' => Some(false),
                    '1' => Some(true),
                    _ => None,
                })
                .collect()
        })
        .collect()
}

/// Membership in the bounded language, by direct scanning: `w` is
/// `w1#..wj#` with `0 <= j <= n` and every `wi` a `k`-bit block.
pub fn in_l_minus(w: &Word, k: usize, n: usize) -> bool {
    blocks(w, k).is_some_and(|b| b.len() <= n)
}

/// Membership in the satisfying language, by direct scanning.
pub fn in_l_plus(w: &Word, phi: &CnfFormula) -> bool {
    let k = phi.var_count();
    let n = phi.clause_count();
    if in_l_minus(w, k, n) {
        return true;
    }
    let head_len = n * (k + 1);
    if w.len() < head_len {
        return false;
    }
    let head = Word::new(w.symbols()[..head_len].to_vec());
    match blocks(&head, k) {
        Some(b) => b
            .iter()
            .enumerate()
            .all(|(i, bits)| phi.clause_satisfied(i, bits)),
        None => false,
    }
}

/// Minimal DFA for the bounded language of `n` blocks of `k` bits.
///
/// Built from states `(block, position)`, an accept-and-stop state after the
/// `n`-th block and a rejecting sink, then minimized.
pub fn build_l_minus(k: usize, n: usize) -> Dfa {
    assert!(k >= 1 && n >= 1, "need k >= 1 and n >= 1");
    let id = |i: usize, p: usize| i * (k + 1) + p;
    let done = n * (k + 1);
    let sink = done + 1;
    Dfa::from_fn(
        block_alphabet(),
        sink + 1,
        id(0, 0),
        |q| q == done || (q < done && q % (k + 1) == 0),
        |q, a| {
            if q >= done {
                return sink;
            }
            let (i, p) = (q / (k + 1), q % (k + 1));
            match (p < k, a) {
                (true, ZERO | ONE) => id(i, p + 1),
                (false, HASH) if i + 1 < n => id(i + 1, 0),
                (false, HASH) => done,
                _ => sink,
            }
        },
    )
    .minimize()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Progress {
    /// All earlier blocks satisfied their clauses; the current one not yet.
    Pending = 0,
    /// All earlier blocks and the current one satisfied.
    Satisfied = 1,
    /// Some earlier block failed its clause; only the bounded language remains.
    Failed = 2,
}

impl Progress {
    fn from_index(i: usize) -> Self {
        match i {
            0 => Progress::Pending,
            1 => Progress::Satisfied,
            _ => Progress::Failed,
        }
    }
}

/// Minimal DFA for the satisfying language of `phi`.
///
/// Built from states `(block, position, progress)` where progress tracks
/// whether the clauses seen so far are all satisfied, plus an
/// accept-and-stop state, an absorbing accept-everything state and a sink;
/// then minimized.
pub fn build_l_plus(phi: &CnfFormula) -> Dfa {
    let k = phi.var_count();
    let n = phi.clause_count();
    let id = |i: usize, p: usize, s: Progress| (i * (k + 1) + p) * 3 + s as usize;
    let layered = n * (k + 1) * 3;
    let done = layered;
    let all = layered + 1;
    let sink = layered + 2;
    Dfa::from_fn(
        block_alphabet(),
        sink + 1,
        id(0, 0, Progress::Pending),
        |q| q == done || q == all || (q < layered && (q / 3) % (k + 1) == 0),
        |q, a| {
            if q == all {
                return all;
            }
            if q >= layered {
                return sink;
            }
            let s = Progress::from_index(q % 3);
            let (i, p) = ((q / 3) / (k + 1), (q / 3) % (k + 1));
            if p < k {
                if a == HASH {
                    return sink;
                }
                let s2 = match s {
                    Progress::Pending if phi.literal_hits(i, p + 1, a == ONE) => {
                        Progress::Satisfied
                    }
                    other => other,
                };
                return id(i, p + 1, s2);
            }
            if a != HASH {
                return sink;
            }
            let last = i + 1 == n;
            match (s, last) {
                (Progress::Satisfied, true) => all,
                (Progress::Satisfied, false) => id(i + 1, 0, Progress::Pending),
                (_, true) => done,
                (_, false) => id(i + 1, 0, Progress::Failed),
            }
        },
    )
    .minimize()
}

/// The `k + 2` state automaton for `{(w#)^i : i >= 0}` where `w` is the word
/// of `a`: a loop through the `k + 1` positions of `w#` and a rejecting sink.
pub fn witness_dfa(a: &Assignment) -> Dfa {
    let k = a.bits().len();
    let sink = k + 1;
    Dfa::from_fn(
        block_alphabet(),
        k + 2,
        0,
        |q| q == 0,
        |q, sym| match q {
            _ if q == sink => sink,
            _ if q == k => {
                if sym == HASH {
                    0
                } else {
                    sink
                }
            }
            _ => {
                let want = if a.bits()[q] { ONE } else { ZERO };
                if sym == want {
                    q + 1
                } else {
                    sink
                }
            }
        },
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Consistent,
    Inconsistent,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Consistent => "CONSISTENT",
            Verdict::Inconsistent => "INCONSISTENT",
        })
    }
}

/// Both sides of the satisfiability / small-distinguisher equivalence for one
/// formula.
#[derive(Debug, Clone)]
pub struct LemmaReport {
    pub var_count: usize,
    pub clause_count: usize,
    /// Model found by the SAT engine, if any.
    pub model: Option<Model>,
    /// Minimal distinguishing DFA search up to `k + 2` states.
    pub synthesis: SynthOutcome,
    /// Whether the `k + 2` state loop automaton of `model` distinguishes the
    /// pair; `None` when there is no model.
    pub witness_distinguishes: Option<bool>,
    pub verdict: Verdict,
}

impl LemmaReport {
    pub fn satisfiable(&self) -> bool {
        self.model.is_some()
    }

    pub fn bound(&self) -> usize {
        self.var_count + 2
    }
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "sat: {}", if self.satisfiable() { "yes" } else { "no" })?;
        match self.synthesis.states() {
            Some(k) => writeln!(f, "min_distinguishing_k: {k}")?,
            None => writeln!(f, "min_distinguishing_k: none")?,
        }
        writeln!(f, "bound: k+2 = {}", self.bound())?;
        writeln!(f, "verdict: {}", self.verdict)
    }
}

/// Solves `phi`, searches for a distinguishing DFA with at most `k + 2` states
/// for the satisfying/bounded pair, and checks that one exists exactly when
/// `phi` is satisfiable (and that the model's loop automaton is one).
pub fn verify_lemma(phi: &CnfFormula) -> LemmaReport {
    let k = phi.var_count();
    let n = phi.clause_count();
    let plus = build_l_plus(phi);
    let minus = build_l_minus(k, n);
    let model = sat::solve(&phi.to_instance());
    let synthesis =
        synth_min_distinguishing(&plus, &minus, k + 2).expect("builders share the block alphabet");
    let witness_distinguishes = model.as_ref().map(|m| {
        let w = witness_dfa(&Assignment::from(m));
        w.state_count() == k + 2 && is_distinguishing(&w, &plus, &minus).expect("shared alphabet")
    });
    let consistent = model.is_some() == synthesis.found() && witness_distinguishes.unwrap_or(true);
    LemmaReport {
        var_count: k,
        clause_count: n,
        model,
        synthesis,
        witness_distinguishes,
        verdict: if consistent {
            Verdict::Consistent
        } else {
            Verdict::Inconsistent
        },
    }
}
