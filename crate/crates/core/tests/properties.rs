mod common;

use common::{residual_classes, run, truth_table_sat, words_up_to};
use distdfa_core::{
    parse_dfa, serialize_dfa, shortest_distinguishing_word, solve, Alphabet, BoolOp, CnfInstance,
    Dfa, Word,
};
use proptest::prelude::*;

fn alphabet(width: usize) -> Alphabet {
    Alphabet::new("abc".chars().take(width)).unwrap()
}

fn dfa_with(width: usize, max_states: usize) -> impl Strategy<Value = Dfa> {
    (1..=max_states).prop_flat_map(move |m| {
        (
            0..m,
            prop::collection::vec(any::<bool>(), m),
            prop::collection::vec(prop::collection::vec(0..m, width), m),
        )
            .prop_map(move |(init, acc, rows)| {
                let accepting: Vec<usize> = (0..m).filter(|&q| acc[q]).collect();
                Dfa::new(alphabet(width), init, accepting, rows).unwrap()
            })
    })
}

fn dfa() -> impl Strategy<Value = Dfa> {
    (1..=3usize).prop_flat_map(|w| dfa_with(w, 6))
}

fn dfa_pair() -> impl Strategy<Value = (Dfa, Dfa)> {
    (1..=2usize).prop_flat_map(|w| (dfa_with(w, 3), dfa_with(w, 3)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn text_format_round_trips(d in (1..=3usize).prop_flat_map(|w| dfa_with(w, 10))) {
        let text = serialize_dfa(&d);
        let back = parse_dfa(&text).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(serialize_dfa(&back), text);
    }

    #[test]
    fn product_and_complement_are_pointwise((a, b) in dfa_pair()) {
        let words = words_up_to(a.alphabet(), 5);
        let na = a.complement();
        for op in BoolOp::ALL {
            let p = a.product(&b, op).unwrap();
            for w in &words {
                let (x, y) = (run(&a, w), run(&b, w));
                prop_assert_eq!(p.accepts(w).unwrap(), op.eval(x, y));
            }
        }
        for w in &words {
            prop_assert_eq!(na.accepts(w).unwrap(), !run(&a, w));
        }
    }

    #[test]
    fn inclusion_matches_word_enumeration((a, b) in dfa_pair()) {
        let bound = a.state_count() * b.state_count();
        let words = words_up_to(a.alphabet(), bound);
        let exhaustive = words.iter().all(|w| !run(&a, w) || run(&b, w));
        prop_assert_eq!(a.is_subset(&b).unwrap(), exhaustive);
        let equal = words.iter().all(|w| run(&a, w) == run(&b, w));
        prop_assert_eq!(a.is_equivalent(&b).unwrap(), equal);
    }

    #[test]
    fn minimization_is_idempotent_and_preserves_language(d in dfa()) {
        let m = d.minimize();
        prop_assert_eq!(&m.minimize(), &m);
        prop_assert!(m.state_count() <= d.state_count());
        prop_assert!(m.is_equivalent(&d).unwrap());
        for w in words_up_to(d.alphabet(), 5) {
            prop_assert_eq!(run(&m, &w), run(&d, &w));
        }
    }

    #[test]
    fn nerode_count_matches_residual_table(d in dfa()) {
        prop_assert_eq!(d.nerode_class_count(), residual_classes(&d));
    }

    #[test]
    fn shortest_accepted_word_is_first_in_length_then_alphabet_order(d in dfa()) {
        let first = words_up_to(d.alphabet(), d.state_count())
            .into_iter()
            .find(|w| run(&d, w));
        prop_assert_eq!(d.shortest_accepted_word(), first);
    }

    #[test]
    fn shortest_distinguishing_word_is_minimal((a, b) in dfa_pair()) {
        let bound = a.state_count() * b.state_count();
        let first = words_up_to(a.alphabet(), bound)
            .into_iter()
            .find(|w| run(&a, w) != run(&b, w));
        prop_assert_eq!(shortest_distinguishing_word(&a, &b).unwrap(), first.clone());
        prop_assert_eq!(first.is_none(), a.is_equivalent(&b).unwrap());
    }

    #[test]
    fn solver_matches_truth_table(
        vars in 1..=12usize,
        raw in prop::collection::vec(prop::collection::vec((any::<bool>(), 0..12usize), 0..5), 0..40),
    ) {
        let clauses: Vec<Vec<i32>> = raw
            .into_iter()
            .map(|c| {
                c.into_iter()
                    .map(|(neg, v)| {
                        let var = (v % vars + 1) as i32;
                        if neg { -var } else { var }
                    })
                    .collect()
            })
            .collect();
        let f = CnfInstance::new(vars, clauses).unwrap();
        let model = solve(&f);
        prop_assert_eq!(model.is_some(), truth_table_sat(&f));
        if let Some(m) = model {
            prop_assert!(f.evaluate(&m));
        }
    }
}

#[test]
fn words_helper_counts() {
    let w = words_up_to(&alphabet(2), 3);
    assert_eq!(w.len(), 1 + 2 + 4 + 8);
    assert_eq!(w[0], Word::empty());
    assert_eq!(w[1], Word::from("a"));
}
