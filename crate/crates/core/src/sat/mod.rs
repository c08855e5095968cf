//! Propositional satisfiability: CNF instances, DIMACS input and a DPLL
//! solver with unit propagation.

mod dimacs;
mod dpll;

use std::fmt;

pub use dimacs::{parse_dimacs, DimacsError};
pub use dpll::{solve, SolveStats, Solver};

/// A literal in DIMACS convention: `v` or `-v` for variable `v >= 1`.
pub type Lit = i32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CnfError {
    #[error("literal {lit} out of range for {var_count} variables")]
    LiteralOutOfRange { lit: Lit, var_count: usize },
}

/// A formula in conjunctive normal form over variables `1..=var_count`.
///
/// Empty clauses are allowed and make the instance unsatisfiable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CnfInstance {
    var_count: usize,
    clauses: Vec<Vec<Lit>>,
}

impl CnfInstance {
    pub fn new(var_count: usize, clauses: Vec<Vec<Lit>>) -> Result<Self, CnfError> {
        for &lit in clauses.iter().flatten() {
            if lit == 0 || lit.unsigned_abs() as usize > var_count {
                return Err(CnfError::LiteralOutOfRange { lit, var_count });
            }
        }
        Ok(CnfInstance { var_count, clauses })
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn clauses(&self) -> &[Vec<Lit>] {
        &self.clauses
    }

    /// Whether every clause has a literal made true by `model`.
    pub fn evaluate(&self, model: &Model) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|&lit| model.satisfies(lit)))
    }
}

/// A total truth assignment; `values[i]` is the value of variable `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Model {
    values: Vec<bool>,
}

impl Model {
    pub fn new(values: Vec<bool>) -> Self {
        Model { values }
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    /// Value of 1-based variable `var`.
    pub fn value(&self, var: usize) -> bool {
        self.values[var - 1]
    }

    pub fn satisfies(&self, lit: Lit) -> bool {
        self.value(lit.unsigned_abs() as usize) == (lit > 0)
    }

    /// The model as a solver-style `v` line, e.g. `v 1 -2 0`.
    pub fn to_v_line(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("v")?;
        for (i, &b) in self.values.iter().enumerate() {
            let v = i as i64 + 1;
            write!(f, " {}", if b { v } else { -v })?;
        }
        f.write_str(" 0")
    }
}
