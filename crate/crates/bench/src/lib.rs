//! Deterministic inputs for the benchmarks.

use distdfa_core::{Alphabet, CnfInstance, Dfa};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// A random complete DFA with `states` states over the first `width` letters.
pub fn random_dfa(seed: u64, states: usize, width: usize) -> Dfa {
    let mut rng = StdRng::seed_from_u64(seed);
    let alphabet = Alphabet::new(('a'..='z').take(width)).unwrap();
    let rows = (0..states)
        .map(|_| (0..width).map(|_| rng.gen_range(0..states)).collect())
        .collect();
    let accepting: Vec<usize> = (0..states).filter(|_| rng.gen_bool(0.5)).collect();
    Dfa::new(alphabet, 0, accepting, rows).unwrap()
}

/// A uniform random 3-CNF instance.
pub fn random_3cnf(seed: u64, vars: usize, clauses: usize) -> CnfInstance {
    let mut rng = StdRng::seed_from_u64(seed);
    let cls = (0..clauses)
        .map(|_| {
            (0..3)
                .map(|_| {
                    let v = rng.gen_range(1..=vars) as i32;
                    if rng.gen_bool(0.5) {
                        -v
                    } else {
                        v
                    }
                })
                .collect()
        })
        .collect();
    CnfInstance::new(vars, cls).unwrap()
}
