use stabnf::oracle::dense_closure_size;
use stabnf::pzx::form_group_order;
use stabnf::synth::bfs_group_order;
use stabnf::{Circuit, Gate};

/// `2^{n(n-1)/2} Π_{i=1..n} (2^i - 1)`.
fn gl_order(n: u32) -> usize {
    (1..=n).map(|i| (1usize << i) - 1).product::<usize>() << (n * (n - 1) / 2)
}

#[test]
fn general_linear_groups() {
    for n in 1..=4 {
        assert_eq!(bfs_group_order(n as usize).unwrap(), gl_order(n), "n={n}");
    }
}

/// P, Z, P³ per qubit, a CZ graph and an invertible matrix: `4ⁿ 2^{n(n-1)/2} |GL(n,2)|`.
#[test]
fn pzx_forms() {
    assert_eq!(form_group_order(1), 4);
    assert_eq!(form_group_order(2), 192);
    assert_eq!(form_group_order(3), 64 * 8 * gl_order(3));
    assert_eq!(form_group_order(3), 86016);
}

#[test]
fn one_qubit_clifford_group_with_phases() {
    let h = Circuit::from_gates(1, [Gate::H(0)]).unwrap();
    let p = Circuit::from_gates(1, [Gate::P(0)]).unwrap();
    assert_eq!(dense_closure_size(&[h, p]).unwrap(), 192);
}

#[test]
fn phase_gate_alone() {
    let p = Circuit::from_gates(1, [Gate::P(0)]).unwrap();
    assert_eq!(dense_closure_size(&[p]).unwrap(), 4);
}
