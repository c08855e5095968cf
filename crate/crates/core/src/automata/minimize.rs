//! Hopcroft partition refinement.

use super::{Dfa, StateId};

impl Dfa {
    /// The minimal complete automaton for `L(self)`.
    ///
    /// Unreachable states are dropped, equivalent states merged with Hopcroft's
    /// algorithm, and the result is renumbered in breadth-first order from the
    /// initial state, so equal languages yield identical values.
    pub fn minimize(&self) -> Dfa {
        let reachable = self.bfs_order();
        let trimmed = self.renumbered(&reachable);
        let class = hopcroft(&trimmed);
        let classes = class.iter().copied().max().map_or(0, |c| c + 1);

        let mut rep = vec![usize::MAX; classes];
        for (q, &c) in class.iter().enumerate() {
            if rep[c] == usize::MAX {
                rep[c] = q;
            }
        }
        let quotient = Dfa::from_fn(
            trimmed.alphabet.clone(),
            classes,
            class[trimmed.initial],
            |c| trimmed.accepting[rep[c]],
            |c, a| class[trimmed.next(rep[c], a)],
        );
        quotient.renumbered(&quotient.bfs_order())
    }

    /// Number of Myhill-Nerode classes of `L(self)`, i.e. the state count of
    /// the minimal complete automaton.
    pub fn nerode_class_count(&self) -> usize {
        self.minimize().state_count()
    }
}

/// Returns, for every state, the index of its equivalence class.
fn hopcroft(d: &Dfa) -> Vec<usize> {
    let n = d.state_count();
    let width = d.alphabet.len();

    // inverse[a][q] = predecessors of q on symbol a
    let mut inverse: Vec<Vec<Vec<StateId>>> = vec![vec![Vec::new(); n]; width];
    for q in 0..n {
        for a in 0..width {
            inverse[a][d.next(q, a)].push(q);
        }
    }

    let (acc, rej): (Vec<StateId>, Vec<StateId>) = (0..n).partition(|&q| d.accepting[q]);
    let mut blocks: Vec<Vec<StateId>> = [acc, rej].into_iter().filter(|b| !b.is_empty()).collect();
    let mut block_of = vec![0; n];
    for (b, members) in blocks.iter().enumerate() {
        for &q in members {
            block_of[q] = b;
        }
    }

    let mut in_work = vec![vec![false; width]; blocks.len()];
    let mut work: Vec<(usize, usize)> = Vec::new();
    if blocks.len() == 2 {
        let smaller = if blocks[0].len() <= blocks[1].len() {
            0
        } else {
            1
        };
        for a in 0..width {
            work.push((smaller, a));
            in_work[smaller][a] = true;
        }
    }

    let mut marked = vec![false; n];
    let mut marked_count: Vec<usize> = Vec::new();
    while let Some((splitter, a)) = work.pop() {
        in_work[splitter][a] = false;
        let preimage: Vec<StateId> = blocks[splitter]
            .iter()
            .flat_map(|&q| inverse[a][q].iter().copied())
            .collect();

        marked_count.clear();
        marked_count.resize(blocks.len(), 0);
        let mut touched = Vec::new();
        for &p in &preimage {
            if !marked[p] {
                marked[p] = true;
                let b = block_of[p];
                if marked_count[b] == 0 {
                    touched.push(b);
                }
                marked_count[b] += 1;
            }
        }

        for b in touched {
            if marked_count[b] < blocks[b].len() {
                let (inside, outside): (Vec<StateId>, Vec<StateId>) =
                    blocks[b].iter().partition(|&&q| marked[q]);
                let new_b = blocks.len();
                for &q in &outside {
                    block_of[q] = new_b;
                }
                let small_is_new = outside.len() <= inside.len();
                blocks[b] = inside;
                blocks.push(outside);
                in_work.push(vec![false; width]);
                for c in 0..width {
                    let target = if in_work[b][c] || small_is_new {
                        new_b
                    } else {
                        b
                    };
                    if !in_work[target][c] {
                        in_work[target][c] = true;
                        work.push((target, c));
                    }
                }
            }
        }
        for &p in &preimage {
            marked[p] = false;
        }
    }
    block_of
}
