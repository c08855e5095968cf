use std::collections::{HashMap, VecDeque};

use super::{Dfa, DfaError, StateId, Word};

/// Boolean connective used to decide acceptance of product states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoolOp {
    And,
    Or,
    Xor,
    /// `left && !right`, i.e. language difference.
    AndNot,
}

impl BoolOp {
    pub const ALL: [BoolOp; 4] = [BoolOp::And, BoolOp::Or, BoolOp::Xor, BoolOp::AndNot];

    pub fn eval(self, left: bool, right: bool) -> bool {
        match self {
            BoolOp::And => left && right,
            BoolOp::Or => left || right,
            BoolOp::Xor => left != right,
            BoolOp::AndNot => left && !right,
        }
    }
}

impl Dfa {
    /// Reachable part of the synchronous product of `self` and `other`.
    ///
    /// A pair `(s, t)` accepts iff `op(s ∈ F_self, t ∈ F_other)`. States are
    /// numbered in breadth-first discovery order from the initial pair.
    pub fn product(&self, other: &Dfa, op: BoolOp) -> Result<Dfa, DfaError> {
        self.alphabet.ensure_same(&other.alphabet)?;
        let width = self.alphabet.len();
        let mut ids: HashMap<(StateId, StateId), StateId> = HashMap::new();
        let mut pairs = vec![(self.initial, other.initial)];
        ids.insert(pairs[0], 0);
        let mut delta = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (s, t) = pairs[i];
            for a in 0..width {
                let succ = (self.next(s, a), other.next(t, a));
                let next_id = ids.len();
                let id = *ids.entry(succ).or_insert_with(|| {
                    pairs.push(succ);
                    next_id
                });
                delta.push(id);
            }
            i += 1;
        }
        let accepting = pairs
            .iter()
            .map(|&(s, t)| op.eval(self.accepting[s], other.accepting[t]))
            .collect();
        Ok(Dfa {
            alphabet: self.alphabet.clone(),
            initial: 0,
            accepting,
            delta,
        })
    }

    /// Same transition structure with the accepting set flipped.
    pub fn complement(&self) -> Dfa {
        Dfa {
            accepting: self.accepting.iter().map(|&a| !a).collect(),
            ..self.clone()
        }
    }

    /// A minimum-length accepted word, or `None` if the language is empty.
    ///
    /// Breadth-first search from the initial state; at each expansion edges are
    /// tried in alphabet order, so the result is the shortlex-least accepted word.
    pub fn shortest_accepted_word(&self) -> Option<Word> {
        let mut parent: Vec<Option<(StateId, usize)>> = vec![None; self.state_count()];
        let mut seen = vec![false; self.state_count()];
        let mut queue = VecDeque::from([self.initial]);
        seen[self.initial] = true;
        while let Some(q) = queue.pop_front() {
            if self.accepting[q] {
                let mut symbols = Vec::new();
                let mut cur = q;
                while let Some((prev, a)) = parent[cur] {
                    symbols.push(self.alphabet.symbol(a));
                    cur = prev;
                }
                symbols.reverse();
                return Some(Word::new(symbols));
            }
            for (a, &t) in self.row(q).iter().enumerate() {
                if !seen[t] {
                    seen[t] = true;
                    parent[t] = Some((q, a));
                    queue.push_back(t);
                }
            }
        }
        None
    }

    /// Whether no accepting state is reachable.
    pub fn is_empty_language(&self) -> bool {
        self.bfs_order().into_iter().all(|q| !self.accepting[q])
    }

    /// `L(self) ⊆ L(other)`, decided by emptiness of `L(self) ∩ ¬L(other)`.
    pub fn is_subset(&self, other: &Dfa) -> Result<bool, DfaError> {
        Ok(self.product(other, BoolOp::AndNot)?.is_empty_language())
    }

    /// `L(self) = L(other)`.
    pub fn is_equivalent(&self, other: &Dfa) -> Result<bool, DfaError> {
        Ok(self.is_subset(other)? && other.is_subset(self)?)
    }
}
