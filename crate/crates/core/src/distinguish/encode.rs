//! Propositional encoding of "there is a `k`-state DFA `D` with
//! `L(D) ⊆ L(T)` and `L(D) ⊄ L(E)`", for a target `T` and an escape `E`.
//!
//! Variables, in the order the solver branches on them:
//!
//! * `f[q]`: state `q` of `D` accepts;
//! * `t[q][a][p]`: `D` moves from `q` to `p` on symbol `a` (exactly one `p`
//!   per `(q, a)`); state 0 is initial;
//! * optional breadth-first numbering constraints on `D`;
//! * `r[q][s]`: the pair `(q, s)` of `D × T` may be reachable. The closure
//!   `r[0][s0]`, `r[q][s] ∧ t[q][a][p] → r[p][δT(s, a)]` and
//!   `r[q][s] ∧ f[q] → ⊥` for rejecting `s` enforces `L(D) ⊆ L(T)`.
//!   Spurious `r` values are harmless: they only forbid more.
//! * the escape witness. `X` is the minimal DFA of `L(T) \ L(E)`; `D`
//!   must accept a word of `L(X)`. The pairs of `D × X` reachable within
//!   `i` steps are encoded exactly, layer by layer, as
//!   `R[i+1][p][v] ⇔ R[i][p][v] ∨ ⋁ (R[i][q][u] ∧ t[q][a][p])` over
//!   `δX(u, a) = v`, each conjunction named by its own variable. A shortest
//!   word of `L(D) ∩ L(X)` visits each pair of the product at most once, so
//!   `k · |X|` layers suffice and the encoding is complete. Finally some
//!   pair `(q, u)` of the last layer must have `f[q]` and `u` accepting.
//!
//! Once `f` and `t` are fixed, unit propagation determines every other
//! variable, so the chronological solver only branches over automata.

use crate::automata::{Alphabet, BoolOp, Dfa};
use crate::sat::{CnfInstance, Lit, Model};

use super::{DistinguishError, Orientation};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EncodeOptions {
    /// Restrict `D` to breadth-first canonical numbering. Never changes
    /// satisfiability; prunes isomorphic copies from the search.
    pub symmetry_breaking: bool,
}

/// Size figures of one encoding.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EncodingStats {
    pub variables: usize,
    pub clauses: usize,
    /// Live states of the escape automaton `X`.
    pub escape_states: usize,
    /// Reachability layers; 0 when `L(T) \ L(E)` is empty.
    pub layers: usize,
}

/// Maps a model of the encoding back to the automaton `D`.
#[derive(Debug, Clone)]
pub struct DecodeContext {
    alphabet: Alphabet,
    states: usize,
    accept: Vec<Lit>,
    // trans[(q * |Σ| + a) * states + p]
    trans: Vec<Lit>,
    stats: EncodingStats,
}

impl DecodeContext {
    pub fn stats(&self) -> EncodingStats {
        self.stats
    }

    pub fn decode(&self, model: &Model) -> Dfa {
        let k = self.states;
        let width = self.alphabet.len();
        Dfa::from_fn(
            self.alphabet.clone(),
            k,
            0,
            |q| model.satisfies(self.accept[q]),
            |q, a| {
                let base = (q * width + a) * k;
                (0..k)
                    .find(|&p| model.satisfies(self.trans[base + p]))
                    .expect("exactly-one transition constraint")
            },
        )
    }
}

#[derive(Default)]
struct Cnf {
    vars: usize,
    clauses: Vec<Vec<Lit>>,
}

impl Cnf {
    fn fresh(&mut self) -> Lit {
        self.vars += 1;
        self.vars as Lit
    }

    fn add(&mut self, clause: impl Into<Vec<Lit>>) {
        self.clauses.push(clause.into());
    }

    fn exactly_one(&mut self, lits: &[Lit]) {
        self.add(lits.to_vec());
        for (i, &x) in lits.iter().enumerate() {
            for &y in &lits[i + 1..] {
                self.add([-x, -y]);
            }
        }
    }

    /// `out ⇔ a ∧ b`
    fn and(&mut self, a: Lit, b: Lit) -> Lit {
        let out = self.fresh();
        self.add([-out, a]);
        self.add([-out, b]);
        self.add([out, -a, -b]);
        out
    }
}

/// Encodes the existence of a `k`-state distinguishing DFA with the given
/// orientation. The instance is satisfiable iff such a DFA exists.
pub fn encode_distinguishing(
    a1: &Dfa,
    a2: &Dfa,
    k: usize,
    orientation: Orientation,
    options: EncodeOptions,
) -> Result<(CnfInstance, DecodeContext), DistinguishError> {
    a1.alphabet().ensure_same(a2.alphabet())?;
    if k == 0 {
        return Err(DistinguishError::ZeroBound);
    }
    let (target, escape) = orientation.split(a1, a2);
    let alphabet = target.alphabet().clone();
    let width = alphabet.len();
    let mut cnf = Cnf::default();

    let accept: Vec<Lit> = (0..k).map(|_| cnf.fresh()).collect();
    let trans: Vec<Lit> = (0..k * width * k).map(|_| cnf.fresh()).collect();
    let t = |q: usize, a: usize, p: usize| trans[(q * width + a) * k + p];
    for q in 0..k {
        for a in 0..width {
            let row: Vec<Lit> = (0..k).map(|p| t(q, a, p)).collect();
            cnf.exactly_one(&row);
        }
    }

    if options.symmetry_breaking {
        bfs_numbering(&mut cnf, k, width, &t);
    }

    // L(D) ⊆ L(T)
    let target = target.minimize();
    let m_t = target.state_count();
    let r: Vec<Lit> = (0..k * m_t).map(|_| cnf.fresh()).collect();
    let reach = |q: usize, s: usize| r[q * m_t + s];
    cnf.add([reach(0, target.initial())]);
    for q in 0..k {
        for s in 0..m_t {
            if !target.is_accepting(s) {
                cnf.add([-reach(q, s), -accept[q]]);
            }
            for a in 0..width {
                let s2 = target.next(s, a);
                for p in 0..k {
                    cnf.add([-reach(q, s), -t(q, a, p), reach(p, s2)]);
                }
            }
        }
    }

    // L(D) ∩ L(X) ≠ ∅ with X = T \ E
    let x = target.product(escape, BoolOp::AndNot)?.minimize();
    let live = co_reachable(&x);
    let live_count = live.iter().filter(|&&b| b).count();
    let mut layers = 0;
    if live_count == 0 {
        cnf.add(Vec::<Lit>::new());
    } else {
        layers = k * live_count;
        escape_layers(&mut cnf, &x, &live, k, layers, &accept, &t);
    }

    let stats = EncodingStats {
        variables: cnf.vars,
        clauses: cnf.clauses.len(),
        escape_states: live_count,
        layers,
    };
    let instance = CnfInstance::new(cnf.vars, cnf.clauses).expect("fresh variables are in range");
    Ok((
        instance,
        DecodeContext {
            alphabet,
            states: k,
            accept,
            trans,
            stats,
        },
    ))
}

/// States of `x` from which an accepting state is reachable.
fn co_reachable(x: &Dfa) -> Vec<bool> {
    let m = x.state_count();
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); m];
    for q in 0..m {
        for &p in x.row(q) {
            preds[p].push(q);
        }
    }
    let mut live = vec![false; m];
    let mut stack: Vec<usize> = x.accepting_states().collect();
    for &q in &stack {
        live[q] = true;
    }
    while let Some(q) = stack.pop() {
        for &p in &preds[q] {
            if !live[p] {
                live[p] = true;
                stack.push(p);
            }
        }
    }
    live
}

fn escape_layers(
    cnf: &mut Cnf,
    x: &Dfa,
    live: &[bool],
    k: usize,
    layers: usize,
    accept: &[Lit],
    t: &impl Fn(usize, usize, usize) -> Lit,
) {
    let m_x = x.state_count();
    let width = x.alphabet().len();
    let idx = |q: usize, u: usize| q * m_x + u;

    // layer 0: only the initial pair
    let mut current: Vec<Option<Lit>> = vec![None; k * m_x];
    let start = cnf.fresh();
    cnf.add([start]);
    current[idx(0, x.initial())] = Some(start);

    for _ in 1..layers {
        let mut support: Vec<Vec<Lit>> = vec![Vec::new(); k * m_x];
        for q in 0..k {
            for u in 0..m_x {
                let Some(here) = current[idx(q, u)] else {
                    continue;
                };
                for a in 0..width {
                    let v = x.next(u, a);
                    if !live[v] {
                        continue;
                    }
                    for p in 0..k {
                        let step = cnf.and(here, t(q, a, p));
                        support[idx(p, v)].push(step);
                    }
                }
            }
        }
        let mut next: Vec<Option<Lit>> = vec![None; k * m_x];
        for (i, mut sources) in support.into_iter().enumerate() {
            if let Some(prev) = current[i] {
                sources.push(prev);
            }
            if sources.is_empty() {
                continue;
            }
            let var = cnf.fresh();
            for &s in &sources {
                cnf.add([-s, var]);
            }
            let mut back = vec![-var];
            back.extend(&sources);
            cnf.add(back);
            next[i] = Some(var);
        }
        current = next;
    }

    let mut finals = Vec::new();
    for q in 0..k {
        for u in x.accepting_states() {
            if let Some(here) = current[idx(q, u)] {
                finals.push(cnf.and(here, accept[q]));
            }
        }
    }
    cnf.add(finals);
}

/// Breadth-first canonical numbering: every state `j > 0` has a parent
/// `i < j` (the smallest state with an edge into `j`), parents are
/// nondecreasing in `j`, and siblings are ordered by their smallest symbol.
fn bfs_numbering(cnf: &mut Cnf, k: usize, width: usize, t: &impl Fn(usize, usize, usize) -> Lit) {
    if k < 2 {
        return;
    }
    // edge[i][j]: some symbol leads from i to j (i < j)
    let mut edge = vec![vec![0 as Lit; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let e = cnf.fresh();
            let mut def = vec![-e];
            for a in 0..width {
                def.push(t(i, a, j));
                cnf.add([e, -t(i, a, j)]);
            }
            cnf.add(def);
            edge[i][j] = e;
        }
    }
    // parent[j][i] ⇔ edge[i][j] ∧ no edge from a smaller state
    let mut parent = vec![vec![0 as Lit; k]; k];
    for j in 1..k {
        for i in 0..j {
            let p = cnf.fresh();
            cnf.add([-p, edge[i][j]]);
            let mut def = vec![p, -edge[i][j]];
            for smaller in 0..i {
                cnf.add([-p, -edge[smaller][j]]);
                def.push(edge[smaller][j]);
            }
            cnf.add(def);
            parent[j][i] = p;
        }
        cnf.add((0..j).map(|i| parent[j][i]).collect::<Vec<_>>());
    }
    for j in 1..k - 1 {
        for i in 0..j {
            for smaller in 0..i {
                cnf.add([-parent[j][i], -parent[j + 1][smaller]]);
            }
        }
    }
    // least[i][a][j] ⇔ t(i, a, j) and no smaller symbol leads from i to j
    let mut least = vec![vec![vec![0 as Lit; k]; width]; k];
    for i in 0..k {
        for j in i + 1..k {
            for a in 0..width {
                let m = cnf.fresh();
                cnf.add([-m, t(i, a, j)]);
                let mut def = vec![m, -t(i, a, j)];
                for b in 0..a {
                    cnf.add([-m, -t(i, b, j)]);
                    def.push(t(i, b, j));
                }
                cnf.add(def);
                least[i][a][j] = m;
            }
        }
    }
    for j in 1..k - 1 {
        for i in 0..j {
            for a in 0..width {
                for b in 0..a {
                    cnf.add([
                        -parent[j][i],
                        -parent[j + 1][i],
                        -least[i][a][j],
                        -least[i][b][j + 1],
                    ]);
                }
            }
        }
    }
}
