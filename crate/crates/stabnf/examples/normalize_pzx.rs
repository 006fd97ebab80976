//! A {P, CZ, CX, Z} circuit has a unique PZX form P_b Z_B Z_v X_A.
//! Two different circuits for the same operator land on the same form.

use stabnf::pzx;
use stabnf::synth::SynthMethod;
use stabnf::Circuit;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = Circuit::parse("qubits 3\nCX 1 0\nP 1\nCZ 1 2\nCX 2 1\nZ 0\n")?;
    // Same operator, padded with cancelling pairs.
    let b = Circuit::parse("qubits 3\nP 2\nP 2\nP 2\nP 2\nCX 1 0\nCZ 0 2\nCZ 0 2\nP 1\nCZ 1 2\nCX 2 1\nZ 0\n")?;

    let fa = pzx::normalize(&a)?;
    let fb = pzx::normalize(&b)?;
    println!("{fa}");
    println!("same form: {}", fa == fb);

    let out = fa.to_circuit(SynthMethod::Pmh)?;
    println!("re-emitted ({} gates):\n{}", out.len(), out.serialize());
    println!("matches input exactly: {:?}", stabnf::oracle::equal_up_to_octant_phase(&a, &out)?);
    Ok(())
}
