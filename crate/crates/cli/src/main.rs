use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use distdfa_core::{
    build_l_minus, build_l_plus, is_distinguishing, parse_dfa, parse_dimacs, serialize_dfa,
    shortest_distinguishing_word, solve, synth_min_distinguishing, verify_lemma, CnfFormula,
    CnfInstance, Dfa, DfaError, DimacsError, DistinguishError, FormulaError, ParseError, Verdict,
};

/// Minimal distinguishing automata and the SAT reduction behind them.
#[derive(Parser)]
#[command(name = "distdfa", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the satisfying and bounded automata of a DIMACS formula.
    Reduce {
        cnf: PathBuf,
        plus: PathBuf,
        minus: PathBuf,
    },
    /// Search for a smallest distinguishing DFA.
    Synth {
        a1: PathBuf,
        a2: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_k: u32,
        /// Write the automaton found to this file.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Print a shortest word accepted by exactly one automaton.
    Word { a1: PathBuf, a2: PathBuf },
    /// Decide a relation between automata; exit 0 if it holds, 1 otherwise.
    Check {
        #[command(subcommand)]
        relation: Relation,
    },
    /// Print the minimal equivalent automaton.
    Minimize { dfa: PathBuf },
    /// Print the automaton in Graphviz DOT.
    Dot { dfa: PathBuf },
    /// Solve a DIMACS formula.
    Sat { cnf: PathBuf },
    /// Compare satisfiability with the existence of a small distinguisher.
    VerifyLemma { cnf: PathBuf },
}

#[derive(Subcommand)]
enum Relation {
    /// L(A) ⊆ L(B)
    Subset { a: PathBuf, b: PathBuf },
    /// L(A) = L(B)
    Equiv { a: PathBuf, b: PathBuf },
    /// L(D) is a subset of exactly one of L(A1), L(A2)
    Distinguishing {
        d: PathBuf,
        a1: PathBuf,
        a2: PathBuf,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Dfa { path: PathBuf, source: ParseError },
    #[error("{}: {source}", path.display())]
    Dimacs { path: PathBuf, source: DimacsError },
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Automaton(#[from] DfaError),
    #[error(transparent)]
    Distinguish(#[from] DistinguishError),
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn load_dfa(path: &Path) -> Result<Dfa, CliError> {
    parse_dfa(&read(path)?).map_err(|source| CliError::Dfa {
        path: path.to_owned(),
        source,
    })
}

fn load_cnf(path: &Path) -> Result<CnfInstance, CliError> {
    parse_dimacs(&read(path)?).map_err(|source| CliError::Dimacs {
        path: path.to_owned(),
        source,
    })
}

fn load_formula(path: &Path) -> Result<CnfFormula, CliError> {
    Ok(CnfFormula::try_from(load_cnf(path)?)?)
}

fn status(holds: bool) -> ExitCode {
    if holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Reduce { cnf, plus, minus } => {
            let phi = load_formula(&cnf)?;
            let lp = build_l_plus(&phi);
            let lm = build_l_minus(phi.var_count(), phi.clause_count());
            write(&plus, &serialize_dfa(&lp))?;
            write(&minus, &serialize_dfa(&lm))?;
            println!("plus: {} states", lp.state_count());
            println!("minus: {} states", lm.state_count());
            Ok(ExitCode::SUCCESS)
        }
        Command::Synth {
            a1,
            a2,
            max_k,
            emit,
        } => {
            let (a1, a2) = (load_dfa(&a1)?, load_dfa(&a2)?);
            let out = synth_min_distinguishing(&a1, &a2, max_k as usize)?;
            match out.result {
                Some(d) => {
                    println!("k={} orientation={}", d.dfa.state_count(), d.orientation);
                    if let Some(path) = emit {
                        write(&path, &serialize_dfa(&d.dfa))?;
                    }
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("none");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Word { a1, a2 } => {
            let w = shortest_distinguishing_word(&load_dfa(&a1)?, &load_dfa(&a2)?)?;
            match &w {
                Some(w) => println!("{w}"),
                None => println!("none"),
            }
            Ok(status(w.is_some()))
        }
        Command::Check { relation } => {
            let holds = match relation {
                Relation::Subset { a, b } => load_dfa(&a)?.is_subset(&load_dfa(&b)?)?,
                Relation::Equiv { a, b } => load_dfa(&a)?.is_equivalent(&load_dfa(&b)?)?,
                Relation::Distinguishing { d, a1, a2 } => {
                    is_distinguishing(&load_dfa(&d)?, &load_dfa(&a1)?, &load_dfa(&a2)?)?
                }
            };
            Ok(status(holds))
        }
        Command::Minimize { dfa } => {
            print!("{}", serialize_dfa(&load_dfa(&dfa)?.minimize()));
            Ok(ExitCode::SUCCESS)
        }
        Command::Dot { dfa } => {
            print!("{}", load_dfa(&dfa)?.to_dot());
            Ok(ExitCode::SUCCESS)
        }
        Command::Sat { cnf } => match solve(&load_cnf(&cnf)?) {
            Some(model) => {
                println!("s SATISFIABLE");
                println!("{model}");
                Ok(ExitCode::SUCCESS)
            }
            None => {
                println!("s UNSATISFIABLE");
                Ok(ExitCode::from(1))
            }
        },
        Command::VerifyLemma { cnf } => {
            let report = verify_lemma(&load_formula(&cnf)?);
            print!("{report}");
            Ok(status(report.verdict == Verdict::Consistent))
        }
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
