//! Byte-stable serializations of automata and count tables.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::{CountModel, UnitAutomaton};
use crate::freealg::Field;
use crate::selfsim::Letter;

/// Graphviz rendering: one node per state labeled with the canonical
/// polynomial text, accepting states double-circled, edges labeled with
/// their letter, and an arrow head marking the initial state.
pub fn to_dot(aut: &UnitAutomaton) -> String {
    let mut out = String::from("digraph unit_language {\n  rankdir=LR;\n");
    out.push_str("  __start [shape=none, label=\"\"];\n");
    for (id, state) in aut.states().iter().enumerate() {
        let shape = if aut.is_accepting(id) {
            "doublecircle"
        } else {
            "circle"
        };
        out.push_str(&format!("  q{id} [shape={shape}, label=\"{state}\"];\n"));
    }
    out.push_str(&format!("  __start -> q{};\n", aut.initial()));
    for id in 0..aut.num_states() {
        for &l in &Letter::ALL {
            out.push_str(&format!(
                "  q{id} -> q{} [label=\"{l}\"];\n",
                aut.transition(id, l)
            ));
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct StateDoc {
    id: usize,
    poly: String,
    accepting: bool,
}

#[derive(Serialize)]
struct TransitionDoc {
    from: usize,
    letter: [u8; 2],
    to: usize,
}

#[derive(Serialize)]
struct AutomatonDoc {
    field: u64,
    initial: String,
    policy: String,
    states: Vec<StateDoc>,
    transitions: Vec<TransitionDoc>,
}

/// JSON rendering with states in the canonical (depth, text) order.
pub fn to_json(aut: &UnitAutomaton) -> String {
    let field = match aut.field() {
        Field::Fp(p) => p,
        Field::Q => unreachable!("automata are built over prime fields"),
    };
    let doc = AutomatonDoc {
        field,
        initial: aut.states()[aut.initial()].to_string(),
        policy: aut.policy().to_string(),
        states: aut
            .states()
            .iter()
            .enumerate()
            .map(|(id, poly)| StateDoc {
                id,
                poly: poly.to_string(),
                accepting: aut.is_accepting(id),
            })
            .collect(),
        transitions: (0..aut.num_states())
            .flat_map(|from| {
                Letter::ALL.map(|l| TransitionDoc {
                    from,
                    letter: [l.row() as u8, l.col() as u8],
                    to: aut.transition(from, l),
                })
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

/// CSV table `k,count,predicted,match` comparing exact counts against the
/// `2^k mu - 2 nu` model for `k = 0..=kmax`.
pub fn count_table_csv(aut: &UnitAutomaton, model: &CountModel, kmax: u32) -> String {
    let counts = aut.count_words_range(kmax);
    let mut out = String::from("k,count,predicted,match\n");
    for (k, counted) in counts.iter().enumerate() {
        let predicted = model.predicted(k as u32);
        let matches = BigRational::from(BigInt::from(counted.clone())) == predicted;
        out.push_str(&format!("{k},{counted},{predicted},{matches}\n"));
    }
    out
}
