//! Preparing a graph state with fewer two-qubit gates than one CZ per edge.

use stabnf::graphstate::{b_to_b_red, reduce_graph_state};
use stabnf::oracle::{state_of, states_equal_up_to_phase};
use stabnf::synth::SynthMethod;
use stabnf::SymZeroDiag;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let b = SymZeroDiag::from_edges(7, [(0, 3), (0, 5), (1, 2), (1, 3), (1, 6), (2, 4), (2, 5), (3, 4), (5, 6)])?;
    let (b_red, a) = b_to_b_red(&b);
    println!("B     = {b}  ({} edges)", b.edge_count());
    println!("B_red = {b_red}");
    println!("A =\n{}", a.to_text());

    let form = reduce_graph_state(&b, SynthMethod::Pmh)?;
    let word: String = form.word.iter().map(ToString::to_string).collect();
    println!("word(A) = {word}, v = {}", form.v);
    println!("two-qubit gates {} -> {}, gain {:.1}%", b.edge_count(), form.two_qubit_count(), 100.0 * form.gain());

    let direct = stabnf::graphstate::graph_state_circuit(&b);
    let same = states_equal_up_to_phase(&state_of(&direct)?, &state_of(&form.to_circuit())?);
    println!("same state: {same}");

    let k5 = SymZeroDiag::complete(5);
    let f5 = reduce_graph_state(&k5, SynthMethod::Pmh)?;
    println!("K5: {} -> {}", k5.edge_count(), f5.two_qubit_count());
    Ok(())
}
