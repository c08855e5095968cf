use crate::automata::{Dfa, DfaError};

use super::{Distinguisher, Orientation, SynthOutcome};

/// Exhaustive search for a smallest distinguishing automaton.
///
/// For `k = 1..=k_max`, every complete `k`-state DFA with initial state 0 is
/// enumerated: transition tables as a base-`k` counter over the cells
/// `(symbol, state)` in symbol-major order, least significant cell first, and
/// for each table the accepting sets as a binary counter. The first DFA that
/// distinguishes `a1` and `a2` is returned unchanged.
///
/// There are `k^(k·|Σ|) · 2^k` candidates per `k`; keep `k_max` and the
/// alphabet small.
pub fn brute_force_min_distinguishing(
    a1: &Dfa,
    a2: &Dfa,
    k_max: usize,
) -> Result<SynthOutcome, DfaError> {
    a1.alphabet().ensure_same(a2.alphabet())?;
    let alphabet = a1.alphabet();
    let width = alphabet.len();
    for k in 1..=k_max {
        let cells = k * width;
        let mut digits = vec![0usize; cells];
        loop {
            for mask in 0u64..(1 << k) {
                let d = Dfa::from_fn(
                    alphabet.clone(),
                    k,
                    0,
                    |q| mask >> q & 1 == 1,
                    |q, a| digits[a * k + q],
                );
                let in_first = d.is_subset(a1)?;
                if in_first != d.is_subset(a2)? {
                    let orientation = if in_first {
                        Orientation::First
                    } else {
                        Orientation::Second
                    };
                    return Ok(SynthOutcome {
                        bound: k_max,
                        result: Some(Distinguisher {
                            dfa: d,
                            orientation,
                        }),
                    });
                }
            }
            // increment the base-k counter
            let mut i = 0;
            while i < cells {
                digits[i] += 1;
                if digits[i] < k {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == cells {
                break;
            }
        }
    }
    Ok(SynthOutcome {
        bound: k_max,
        result: None,
    })
}
