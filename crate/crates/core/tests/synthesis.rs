mod common;

use std::collections::BTreeSet;

use common::random_dfa;
use distdfa_core::{
    brute_force_min_distinguishing, is_distinguishing, solve_bounded, synth_min_distinguishing,
    Alphabet, Dfa, EncodeOptions, Orientation,
};
use rand::rngs::StdRng;
use rand::SeedableRng;

/// Orientations realised by some `k`-state DFA, by enumerating all of them.
fn feasible_orientations(a1: &Dfa, a2: &Dfa, k: usize) -> BTreeSet<Orientation> {
    let width = a1.alphabet().len();
    let cells = k * width;
    let mut found = BTreeSet::new();
    for table in 0..k.pow(cells as u32) {
        let rows: Vec<Vec<usize>> = (0..k)
            .map(|q| {
                (0..width)
                    .map(|a| table / k.pow((q * width + a) as u32) % k)
                    .collect()
            })
            .collect();
        for mask in 0..1usize << k {
            let acc: Vec<usize> = (0..k).filter(|q| mask >> q & 1 == 1).collect();
            let d = Dfa::new(a1.alphabet().clone(), 0, acc, rows.clone()).unwrap();
            match (d.is_subset(a1).unwrap(), d.is_subset(a2).unwrap()) {
                (true, false) => found.insert(Orientation::First),
                (false, true) => found.insert(Orientation::Second),
                _ => false,
            };
        }
    }
    found
}

#[test]
fn synthesis_agrees_with_enumeration_on_random_pairs() {
    let sigma = Alphabet::new(['a', 'b']).unwrap();
    let mut rng = StdRng::seed_from_u64(7);
    let mut pairs = 0;
    let mut found = 0;
    while pairs < 30 {
        let a1 = random_dfa(&mut rng, &sigma, 4);
        let a2 = random_dfa(&mut rng, &sigma, 4);
        if a1.is_equivalent(&a2).unwrap() {
            continue;
        }
        pairs += 1;
        let sat = synth_min_distinguishing(&a1, &a2, 3).unwrap();
        let brute = brute_force_min_distinguishing(&a1, &a2, 3).unwrap();
        assert_eq!(sat.states(), brute.states(), "pair {pairs}");
        if let Some(d) = &sat.result {
            found += 1;
            assert!(is_distinguishing(&d.dfa, &a1, &a2).unwrap());
        }
        for k in 1..=3 {
            let expected = feasible_orientations(&a1, &a2, k);
            for o in Orientation::BOTH {
                for sb in [false, true] {
                    let opts = EncodeOptions {
                        symmetry_breaking: sb,
                    };
                    let got = solve_bounded(&a1, &a2, k, o, opts).unwrap();
                    assert_eq!(
                        got.is_some(),
                        expected.contains(&o),
                        "pair {pairs} k={k} {o}"
                    );
                }
            }
        }
    }
    assert!(found > 0);
}

#[test]
fn brute_force_returns_first_in_enumeration_order() {
    let sigma = Alphabet::new(['a']).unwrap();
    let all = Dfa::trivial(sigma.clone(), true);
    let none = Dfa::trivial(sigma, false);
    let out = brute_force_min_distinguishing(&all, &none, 2).unwrap();
    // the empty language is a subset of both, so the first hit accepts ε
    let d = out.result.unwrap();
    assert_eq!(d.dfa.state_count(), 1);
    assert!(d.dfa.is_accepting(0));
    assert_eq!(d.orientation, Orientation::First);
}
