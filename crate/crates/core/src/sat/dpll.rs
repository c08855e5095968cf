//! Chronological-backtracking DPLL with two-watched-literal unit propagation.
//!
//! Branching picks the lowest-indexed unassigned variable and tries `false`
//! before `true`. There is no clause learning, no restarts and no pure-literal
//! rule, so the search is a deterministic function of the instance.

use super::{CnfInstance, Model};

/// Internal literal code: `2 * var + negated` with 0-based `var`.
type Code = u32;

const UNASSIGNED: i8 = 0;
const TRUE: i8 = 1;
const FALSE: i8 = -1;

#[inline]
fn var_of(l: Code) -> usize {
    (l >> 1) as usize
}

#[inline]
fn negate(l: Code) -> Code {
    l ^ 1
}

/// Counters describing one search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub decisions: u64,
    pub conflicts: u64,
    pub propagations: u64,
}

#[derive(Debug, Clone, Copy)]
struct Decision {
    trail_len: usize,
    lit: Code,
    flipped: bool,
}

/// A single-use solver owning its assignment stack.
#[derive(Debug)]
pub struct Solver {
    var_count: usize,
    clauses: Vec<Vec<Code>>,
    watches: Vec<Vec<usize>>,
    values: Vec<i8>,
    trail: Vec<Code>,
    queue_head: usize,
    decisions: Vec<Decision>,
    // every variable below this index is assigned
    scan_from: usize,
    root_units: Vec<Code>,
    trivially_unsat: bool,
    stats: SolveStats,
}

impl Solver {
    pub fn new(f: &CnfInstance) -> Self {
        let n = f.var_count();
        let mut solver = Solver {
            var_count: n,
            clauses: Vec::new(),
            watches: vec![Vec::new(); 2 * n],
            values: vec![UNASSIGNED; n],
            trail: Vec::with_capacity(n),
            queue_head: 0,
            decisions: Vec::new(),
            scan_from: 0,
            root_units: Vec::new(),
            trivially_unsat: false,
            stats: SolveStats::default(),
        };
        for clause in f.clauses() {
            let mut codes: Vec<Code> = clause
                .iter()
                .map(|&lit| {
                    let var = lit.unsigned_abs() - 1;
                    2 * var + u32::from(lit < 0)
                })
                .collect();
            codes.sort_unstable();
            codes.dedup();
            if codes.windows(2).any(|w| w[1] == negate(w[0])) {
                continue; // tautology
            }
            match codes.len() {
                0 => solver.trivially_unsat = true,
                1 => solver.root_units.push(codes[0]),
                _ => {
                    let idx = solver.clauses.len();
                    solver.watches[codes[0] as usize].push(idx);
                    solver.watches[codes[1] as usize].push(idx);
                    solver.clauses.push(codes);
                }
            }
        }
        solver
    }

    pub fn stats(&self) -> SolveStats {
        self.stats
    }

    #[inline]
    fn value(&self, l: Code) -> i8 {
        let v = self.values[var_of(l)];
        if l & 1 == 1 {
            -v
        } else {
            v
        }
    }

    /// Makes `l` true. Returns false if it is already false.
    fn enqueue(&mut self, l: Code) -> bool {
        match self.value(l) {
            TRUE => true,
            FALSE => false,
            _ => {
                self.values[var_of(l)] = if l & 1 == 1 { FALSE } else { TRUE };
                self.trail.push(l);
                true
            }
        }
    }

    /// Unit propagation; returns false on conflict.
    fn propagate(&mut self) -> bool {
        while self.queue_head < self.trail.len() {
            let p = self.trail[self.queue_head];
            self.queue_head += 1;
            self.stats.propagations += 1;
            let false_lit = negate(p);
            let mut watchers = std::mem::take(&mut self.watches[false_lit as usize]);
            let mut keep = 0;
            let mut i = 0;
            let mut conflict = false;
            while i < watchers.len() {
                let ci = watchers[i];
                i += 1;
                let clause = &mut self.clauses[ci];
                if clause[0] == false_lit {
                    clause.swap(0, 1);
                }
                let first = clause[0];
                if self.value(first) == TRUE {
                    watchers[keep] = ci;
                    keep += 1;
                    continue;
                }
                let clause = &mut self.clauses[ci];
                let mut moved = false;
                for k in 2..clause.len() {
                    let l = clause[k];
                    let v = self.values[var_of(l)];
                    let lv = if l & 1 == 1 { -v } else { v };
                    if lv != FALSE {
                        clause.swap(1, k);
                        self.watches[l as usize].push(ci);
                        moved = true;
                        break;
                    }
                }
                if moved {
                    continue;
                }
                watchers[keep] = ci;
                keep += 1;
                if !self.enqueue(first) {
                    conflict = true;
                    break;
                }
            }
            while i < watchers.len() {
                watchers[keep] = watchers[i];
                keep += 1;
                i += 1;
            }
            watchers.truncate(keep);
            self.watches[false_lit as usize] = watchers;
            if conflict {
                self.stats.conflicts += 1;
                return false;
            }
        }
        true
    }

    fn undo_to(&mut self, len: usize) {
        for &l in &self.trail[len..] {
            let v = var_of(l);
            self.values[v] = UNASSIGNED;
            self.scan_from = self.scan_from.min(v);
        }
        self.trail.truncate(len);
        self.queue_head = len;
    }

    fn next_unassigned(&mut self) -> Option<usize> {
        while self.scan_from < self.var_count && self.values[self.scan_from] != UNASSIGNED {
            self.scan_from += 1;
        }
        (self.scan_from < self.var_count).then_some(self.scan_from)
    }

    /// Flips the most recent untried decision. Returns false when the search
    /// space is exhausted.
    fn backtrack(&mut self) -> bool {
        while let Some(top) = self.decisions.last().copied() {
            self.undo_to(top.trail_len);
            if top.flipped {
                self.decisions.pop();
                continue;
            }
            let flipped = negate(top.lit);
            *self.decisions.last_mut().unwrap() = Decision {
                trail_len: top.trail_len,
                lit: flipped,
                flipped: true,
            };
            self.enqueue(flipped);
            return true;
        }
        false
    }

    /// Runs the search. Returns a model if the instance is satisfiable.
    pub fn solve(&mut self) -> Option<Model> {
        if self.trivially_unsat {
            return None;
        }
        let units = std::mem::take(&mut self.root_units);
        for &u in &units {
            if !self.enqueue(u) {
                return None;
            }
        }
        if !self.propagate() {
            return None;
        }
        loop {
            let Some(var) = self.next_unassigned() else {
                let values = self.values.iter().map(|&v| v == TRUE).collect();
                return Some(Model::new(values));
            };
            self.stats.decisions += 1;
            let lit = 2 * var as Code + 1; // false first
            self.decisions.push(Decision {
                trail_len: self.trail.len(),
                lit,
                flipped: false,
            });
            self.enqueue(lit);
            while !self.propagate() {
                if !self.backtrack() {
                    return None;
                }
            }
        }
    }
}

/// Decides `f`; returns a satisfying model or `None` if unsatisfiable.
pub fn solve(f: &CnfInstance) -> Option<Model> {
    Solver::new(f).solve()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cnf(vars: usize, clauses: &[&[i32]]) -> CnfInstance {
        CnfInstance::new(vars, clauses.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn contradictory_units() {
        assert_eq!(solve(&cnf(1, &[&[1], &[-1]])), None);
    }

    #[test]
    fn unit_propagation_forces_model() {
        let m = solve(&cnf(2, &[&[1, 2], &[-1]])).unwrap();
        assert_eq!(m.values(), &[false, true]);
    }

    #[test]
    fn prefers_false() {
        let m = solve(&cnf(3, &[&[1, 2, 3]])).unwrap();
        assert_eq!(m.values(), &[false, false, true]);
    }

    #[test]
    fn empty_instance_and_empty_clause() {
        assert_eq!(solve(&cnf(2, &[])).unwrap().values(), &[false, false]);
        assert_eq!(solve(&cnf(2, &[&[1], &[]])), None);
        assert!(solve(&cnf(0, &[])).is_some());
    }

    #[test]
    fn tautologies_and_duplicates() {
        let f = cnf(2, &[&[1, -1], &[2, 2], &[-2, 1, -2]]);
        let m = solve(&f).unwrap();
        assert!(f.evaluate(&m));
        assert_eq!(m.values(), &[true, true]);
    }

    #[test]
    fn pigeonhole_three_into_two_is_unsat() {
        // p(i,h) = 2*i + h + 1
        let p = |i: i32, h: i32| 2 * i + h + 1;
        let mut cls: Vec<Vec<i32>> = (0..3).map(|i| vec![p(i, 0), p(i, 1)]).collect();
        for h in 0..2 {
            for i in 0..3 {
                for j in i + 1..3 {
                    cls.push(vec![-p(i, h), -p(j, h)]);
                }
            }
        }
        let f = CnfInstance::new(6, cls).unwrap();
        let mut s = Solver::new(&f);
        assert_eq!(s.solve(), None);
        assert!(s.stats().conflicts > 0);
    }
}
