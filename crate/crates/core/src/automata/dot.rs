//! Graphviz export.

use std::fmt::Write as _;

use super::Dfa;

impl Dfa {
    /// Renders the automaton as a Graphviz digraph: accepting states are
    /// double circles, the initial state has an unlabeled arrow from a point
    /// node, and every `(state, symbol)` pair contributes one edge.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph {\n  rankdir=LR;\n");
        out.push_str("  __start [shape=point, label=\"\"];\n");
        for q in 0..self.state_count() {
            let shape = if self.is_accepting(q) {
                "doublecircle"
            } else {
                "circle"
            };
            let _ = writeln!(out, "  q{q} [shape={shape}, label=\"{q}\"];");
        }
        let _ = writeln!(out, "  __start -> q{};", self.initial());
        for q in 0..self.state_count() {
            for (a, &t) in self.row(q).iter().enumerate() {
                let sym = escape(self.alphabet().symbol(a));
                let _ = writeln!(out, "  q{q} -> q{t} [label=\"{sym}\"];");
            }
        }
        out.push_str("}\n");
        out
    }
}

fn escape(c: char) -> String {
    match c {
        '"' | '\\' => format!("\\{c}"),
        _ => c.to_string(),
    }
}
