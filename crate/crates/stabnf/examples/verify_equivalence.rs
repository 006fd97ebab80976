//! Dense-statevector checks: unitary equality up to an octant phase, and
//! state equality from |0…0⟩.

use stabnf::oracle::{equal_up_to_octant_phase, state_of, states_equal_up_to_phase};
use stabnf::Circuit;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let hp3 = Circuit::parse("qubits 1\nH 0\nP 0\nH 0\nP 0\nH 0\nP 0\n")?;
    let id = Circuit::new(1);
    println!("(HP)^3 vs I: {:?}", equal_up_to_octant_phase(&hp3, &id)?);

    let swap = Circuit::parse("qubits 2\nSWAP 0 1\n")?;
    let three = Circuit::parse("qubits 2\nCX 0 1\nCX 1 0\nCX 0 1\n")?;
    println!("SWAP vs three CX: {:?}", equal_up_to_octant_phase(&swap, &three)?);

    let cz = Circuit::parse("qubits 2\nCZ 0 1\n")?;
    println!("CZ vs I as unitaries: {:?}", equal_up_to_octant_phase(&cz, &Circuit::new(2))?);
    println!("CZ|00> vs |00>: {}", states_equal_up_to_phase(&state_of(&cz)?, &state_of(&Circuit::new(2))?));
    Ok(())
}
