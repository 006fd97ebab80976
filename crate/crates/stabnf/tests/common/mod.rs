#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use stabnf::{BitMat, Circuit, Gate, Transvection};

/// Gates over {P, CZ, CX, Z} on `n ≥ 2` qubits.
pub fn pzx_gate(n: usize) -> impl Strategy<Value = Gate> {
    (0..4u8, 0..n, 1..n).prop_map(move |(k, a, off)| {
        let b = (a + off) % n;
        match k {
            0 => Gate::P(a),
            1 => Gate::CZ(a, b),
            2 => Gate::CX(a, b),
            _ => Gate::Z(a),
        }
    })
}

/// Any supported gate on `n ≥ 2` qubits.
pub fn clifford_gate(n: usize) -> impl Strategy<Value = Gate> {
    (0..8u8, 0..n, 1..n).prop_map(move |(k, a, off)| {
        let b = (a + off) % n;
        match k {
            0 => Gate::H(a),
            1 => Gate::P(a),
            2 => Gate::CX(a, b),
            3 => Gate::CZ(a, b),
            4 => Gate::X(a),
            5 => Gate::Y(a),
            6 => Gate::Z(a),
            _ => Gate::SWAP(a, b),
        }
    })
}

pub fn circuit_of(gate: fn(usize) -> BoxedStrategy<Gate>, n_max: usize, len_max: usize) -> impl Strategy<Value = Circuit> {
    (2..=n_max).prop_flat_map(move |n| {
        prop::collection::vec(gate(n), 0..=len_max).prop_map(move |g| Circuit::from_gates(n, g).unwrap())
    })
}

pub fn pzx_circuit(n_max: usize, len_max: usize) -> impl Strategy<Value = Circuit> {
    circuit_of(|n| pzx_gate(n).boxed(), n_max, len_max)
}

pub fn clifford_circuit(n_max: usize, len_max: usize) -> impl Strategy<Value = Circuit> {
    circuit_of(|n| clifford_gate(n).boxed(), n_max, len_max)
}

/// Random gate drawn with `rng`, for the non-proptest loops.
pub fn random_gate(n: usize, pzx_only: bool, rng: &mut impl Rng) -> Gate {
    let a = rng.gen_range(0..n);
    let b = (a + rng.gen_range(1..n)) % n;
    let k = if pzx_only { [1, 2, 3, 6][rng.gen_range(0..4)] } else { rng.gen_range(0..8) };
    match k {
        0 => Gate::H(a),
        1 => Gate::P(a),
        2 => Gate::CX(a, b),
        3 => Gate::CZ(a, b),
        4 => Gate::X(a),
        5 => Gate::Y(a),
        6 => Gate::Z(a),
        _ => Gate::SWAP(a, b),
    }
}

pub fn random_circuit(n: usize, len: usize, pzx_only: bool, rng: &mut impl Rng) -> Circuit {
    Circuit::from_gates(n, (0..len).map(|_| random_gate(n, pzx_only, rng))).unwrap()
}

/// Product of `4n²` random transvections: uniform enough for testing.
pub fn random_invertible(n: usize, rng: &mut impl Rng) -> BitMat {
    let mut a = BitMat::identity(n);
    for _ in 0..4 * n * n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i != j {
            a.transvect_left(Transvection { target: i, control: j }).unwrap();
        }
    }
    a
}

pub fn invertible(n_max: usize) -> impl Strategy<Value = BitMat> {
    (1..=n_max, any::<u64>()).prop_map(|(n, seed)| {
        use rand::SeedableRng;
        random_invertible(n, &mut rand_chacha::ChaCha8Rng::seed_from_u64(seed))
    })
}

/// Inserts self-cancelling pairs (P⁴, CZ², CX², Z²) at random positions.
pub fn pad_with_identities(c: &Circuit, rng: &mut impl Rng) -> Circuit {
    let n = c.n();
    let mut out = Circuit::new(n);
    let insert = |out: &mut Circuit, rng: &mut dyn rand::RngCore| {
        let a = rng.gen_range(0..n);
        let b = (a + rng.gen_range(1..n)) % n;
        let pair: Vec<Gate> = match rng.gen_range(0..4) {
            0 => vec![Gate::P(a); 4],
            1 => vec![Gate::CZ(a, b); 2],
            2 => vec![Gate::CX(a, b); 2],
            _ => vec![Gate::Z(a); 2],
        };
        for g in pair {
            out.push(g).unwrap();
        }
    };
    for &g in c.gates() {
        if rng.gen_bool(0.3) {
            insert(&mut out, rng);
        }
        out.push(g).unwrap();
    }
    insert(&mut out, rng);
    out
}
