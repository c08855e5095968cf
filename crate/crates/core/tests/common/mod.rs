#![allow(dead_code)]

use std::collections::HashSet;

use distdfa_core::{Alphabet, CnfFormula, CnfInstance, Dfa, Lit, Word};
use rand::rngs::StdRng;
use rand::Rng;

/// Every word over `alphabet` of length at most `max_len`, shortest first.
pub fn words_up_to(alphabet: &Alphabet, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut frontier = vec![Vec::<char>::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * alphabet.len());
        for w in &frontier {
            for &c in alphabet.symbols() {
                let mut v = w.clone();
                v.push(c);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned().map(Word::new));
        frontier = next;
    }
    out
}

/// Acceptance by walking the transition table directly.
pub fn run(d: &Dfa, w: &Word) -> bool {
    let mut q = d.initial();
    for &c in w.symbols() {
        let a = d.alphabet().index_of(c).expect("symbol in alphabet");
        q = d.row(q)[a];
    }
    d.is_accepting(q)
}

pub fn random_dfa(rng: &mut StdRng, alphabet: &Alphabet, max_states: usize) -> Dfa {
    let m = rng.gen_range(1..=max_states);
    let rows = (0..m)
        .map(|_| (0..alphabet.len()).map(|_| rng.gen_range(0..m)).collect())
        .collect();
    let accepting: Vec<usize> = (0..m).filter(|_| rng.gen_bool(0.5)).collect();
    Dfa::new(alphabet.clone(), rng.gen_range(0..m), accepting, rows).unwrap()
}

/// Satisfiability by enumerating all assignments.
pub fn truth_table_sat(f: &CnfInstance) -> bool {
    let n = f.var_count();
    assert!(n <= 20);
    (0u32..1 << n).any(|bits| {
        f.clauses().iter().all(|c| {
            c.iter().any(|&l| {
                let v = bits >> (l.unsigned_abs() - 1) & 1 == 1;
                v == (l > 0)
            })
        })
    })
}

/// Nonempty clauses over `p1..pk` without complementary literals: each
/// variable is absent, positive or negative.
pub fn clause_patterns(k: usize) -> Vec<Vec<Lit>> {
    let mut out = Vec::new();
    for code in 1..3usize.pow(k as u32) {
        let mut c = code;
        let mut clause = Vec::new();
        for v in 1..=k as Lit {
            match c % 3 {
                1 => clause.push(v),
                2 => clause.push(-v),
                _ => {}
            }
            c /= 3;
        }
        out.push(clause);
    }
    out
}

/// All formulas with `k <= 2` variables and `n <= 2` clauses drawn from
/// [`clause_patterns`], clause order significant.
pub fn small_battery() -> Vec<CnfFormula> {
    let mut out = Vec::new();
    for k in 1..=2 {
        let pats = clause_patterns(k);
        for c in &pats {
            out.push(CnfFormula::new(k, vec![c.clone()]).unwrap());
        }
        for c1 in &pats {
            for c2 in &pats {
                out.push(CnfFormula::new(k, vec![c1.clone(), c2.clone()]).unwrap());
            }
        }
    }
    out
}

/// Hand-picked three-variable formulas.
pub fn curated_battery() -> Vec<CnfFormula> {
    let f = |clauses: &[&[Lit]]| {
        CnfFormula::new(3, clauses.iter().map(|c| c.to_vec()).collect()).unwrap()
    };
    vec![
        f(&[&[1, 2, 3], &[-1, -2], &[-3]]),
        f(&[&[1], &[2], &[3]]),
        f(&[&[-1, 2], &[-2, 3], &[1]]),
        f(&[&[1], &[-1]]),
        f(&[&[1, 3], &[-2]]),
    ]
}

pub fn battery() -> Vec<CnfFormula> {
    let mut all = small_battery();
    all.extend(curated_battery());
    all
}

/// Number of distinct residual languages of reachable states, each given by
/// acceptance of all words shorter than the state count.
pub fn residual_classes(d: &Dfa) -> usize {
    let m = d.state_count();
    let probes = words_up_to(d.alphabet(), m.saturating_sub(1));
    let reachable: HashSet<usize> = words_up_to(d.alphabet(), m)
        .iter()
        .map(|w| {
            w.symbols().iter().fold(d.initial(), |q, &c| {
                d.row(q)[d.alphabet().index_of(c).unwrap()]
            })
        })
        .collect();
    let rows: HashSet<Vec<bool>> = reachable
        .iter()
        .map(|&q| {
            probes
                .iter()
                .map(|w| {
                    let idx = w.indices(d.alphabet()).unwrap();
                    d.is_accepting(d.run_indices(q, &idx))
                })
                .collect()
        })
        .collect();
    rows.len()
}
