//! Any Clifford circuit over {H, P, CX, CZ, X, Y, Z, SWAP} folds into the
//! general normal form, re-emitted as a circuit with a global phase.

use stabnf::genpzx;
use stabnf::oracle::{octant, DenseUnitary};
use stabnf::synth::SynthMethod;
use stabnf::Circuit;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = Circuit::parse(
        "qubits 3\nH 0\nP 0\nCX 1 0\nH 2\nCZ 1 2\nY 1\nSWAP 0 2\nH 1\nP 1\nH 1\n",
    )?;
    let form = genpzx::c_to_gpzx(&c)?;
    println!("{form}");

    let (out, phase) = form.to_circuit(SynthMethod::Pmh)?;
    println!("emitted {} gates ({} two-qubit), global phase {phase}", out.len(), out.two_qubit_count());
    print!("{}", out.to_qasm(Some(phase)));

    let lhs = DenseUnitary::of(&c)?;
    let rhs = DenseUnitary::of(&out)?.scaled(octant(phase));
    println!("exact equality with phase: {}", lhs.approx_eq(&rhs));
    Ok(())
}
