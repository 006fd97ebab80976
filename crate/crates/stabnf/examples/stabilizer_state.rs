//! The state C|0…0⟩ of a Clifford circuit in the form e^{iφ} H_a Z_u P_d Z_D h|0⟩.

use stabnf::genpzx::stab_state_form;
use stabnf::oracle::{octant, state_of};
use stabnf::Circuit;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = Circuit::parse("qubits 3\nH 0\nCX 1 0\nCX 2 1\nP 2\nH 1\nZ 0\n")?;
    let f = stab_state_form(&c)?;
    println!("phase {} a {} u {} d {} D {}", f.phase, f.a, f.u, f.d, f.dd);

    let (prep, phase) = f.to_circuit();
    print!("{}", prep.serialize());
    let want = state_of(&c)?;
    let got: Vec<_> = state_of(&prep)?.into_iter().map(|z| z * octant(phase)).collect();
    let exact = want.iter().zip(&got).all(|(a, b)| (a - b).norm() < 1e-9);
    println!("exact state including phase: {exact}");
    Ok(())
}
