//! A catalogue of Clifford identities, each checked by the dense oracle on
//! every instance up to three qubits (sampled where exhaustive is too big).
//!
//! Gate lists passed to [`op`] are written in operator order, leftmost
//! factor applied last, so the checks read like the algebra they test.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circuit::{Circuit, Gate, PhaseOctant};
use crate::genpzx;
use crate::gf2::{BitMat, BitVec, QuadraticForm, SymZeroDiag, Transvection};
use crate::oracle::{octant, DenseUnitary, TOLERANCE};
use crate::pauli::PauliTerm;
use crate::pzx;
use crate::synth::{self, SynthMethod};

pub struct Identity {
    pub name: &'static str,
    pub statement: &'static str,
    check: fn() -> Result<usize, String>,
}

impl Identity {
    /// Runs the check; `Ok(k)` means `k` instances agreed with the oracle.
    pub fn check(&self) -> Result<usize, String> {
        (self.check)()
    }
}

/// Circuit from gates in operator order.
#[must_use]
pub fn op(n: usize, gates: &[Gate]) -> Circuit {
    Circuit::from_gates(n, gates.iter().rev().copied()).expect("indices in range")
}

/// Inverse of an operator-order gate list, again in operator order.
fn inv(gates: &[Gate]) -> Vec<Gate> {
    gates.iter().rev().flat_map(|g| g.inverse()).collect()
}

fn cat(parts: &[&[Gate]]) -> Vec<Gate> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

fn zs(v: &BitVec) -> Vec<Gate> {
    v.iter_ones().map(Gate::Z).collect()
}

fn xs(u: &BitVec) -> Vec<Gate> {
    u.iter_ones().map(Gate::X).collect()
}

fn ps(b: &BitVec) -> Vec<Gate> {
    b.iter_ones().map(Gate::P).collect()
}

fn czs(bb: &SymZeroDiag) -> Vec<Gate> {
    bb.edges().into_iter().map(|(i, j)| Gate::CZ(i, j)).collect()
}

fn cxs(a: &BitMat) -> Vec<Gate> {
    synth::gauss(a).expect("invertible").into_iter().map(Gate::cx).collect()
}

fn h_all(n: usize) -> Vec<Gate> {
    (0..n).map(Gate::H).collect()
}

fn hh(i: usize, inner: &[Gate]) -> Vec<Gate> {
    cat(&[&[Gate::H(i)], inner, &[Gate::H(i)]])
}

fn hh2(i: usize, j: usize, inner: &[Gate]) -> Vec<Gate> {
    cat(&[&[Gate::H(i), Gate::H(j)], inner, &[Gate::H(i), Gate::H(j)]])
}

fn pauli(u: &BitVec, v: &BitVec) -> Vec<Gate> {
    cat(&[&xs(u), &zs(v)])
}

/// `lhs = e^{ikπ/4}·rhs` as operators.
fn same(n: usize, lhs: &[Gate], rhs: &[Gate], k: i64) -> Result<(), String> {
    let a = DenseUnitary::of(&op(n, lhs)).map_err(|e| e.to_string())?;
    let b = DenseUnitary::of(&op(n, rhs)).map_err(|e| e.to_string())?;
    if a.approx_eq(&b.scaled(octant(PhaseOctant::new(k)))) {
        Ok(())
    } else {
        Err(format!("mismatch: {lhs:?} vs e^(i{k}π/4) {rhs:?}"))
    }
}

/// Checks `gates|x⟩ = phase(x)·|image(x)⟩` on every basis state.
fn basis_action(
    n: usize,
    gates: &[Gate],
    image: impl Fn(&BitVec) -> BitVec,
    phase_quarter_turns: impl Fn(&BitVec) -> u32,
) -> Result<(), String> {
    let u = DenseUnitary::of(&op(n, gates)).map_err(|e| e.to_string())?;
    for x in vectors(n) {
        let y = image(&x);
        let want = num_complex::Complex64::new(0.0, 1.0).powu(phase_quarter_turns(&x) % 4);
        let got = u.entry(index(&y), index(&x));
        if (got - want).norm() > TOLERANCE {
            return Err(format!("{gates:?} on |{x}⟩"));
        }
    }
    Ok(())
}

fn index(x: &BitVec) -> usize {
    x.iter_ones().fold(0, |acc, i| acc | 1 << (x.len() - 1 - i))
}

/// All vectors of length `n`.
#[must_use]
pub fn vectors(n: usize) -> Vec<BitVec> {
    (0..1u32 << n).map(|bits| BitVec::from_bools(&(0..n).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>())).collect()
}

/// All symmetric zero-diagonal matrices of size `n`.
#[must_use]
pub fn graphs(n: usize) -> Vec<SymZeroDiag> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0..1u32 << pairs.len())
        .map(|mask| {
            SymZeroDiag::from_edges(n, pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p))
                .expect("valid pairs")
        })
        .collect()
}

/// All invertible `n × n` matrices (n ≤ 3 keeps this small).
#[must_use]
pub fn gl(n: usize) -> Vec<BitMat> {
    let mut out = Vec::new();
    for bits in 0u32..1 << (n * n) {
        let mut m = BitMat::zeros(n);
        for r in 0..n {
            for c in 0..n {
                m.set(r, c, bits >> (r * n + c) & 1 == 1);
            }
        }
        if m.is_invertible() {
            out.push(m);
        }
    }
    out
}

fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i != j && j != k && i != k {
                    out.push((i, j, k));
                }
            }
        }
    }
    out
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect()
}

fn prod2<A: Clone, B: Clone>(a: &[A], b: &[B]) -> Vec<(A, B)> {
    a.iter().flat_map(|x| b.iter().map(move |y| (x.clone(), y.clone()))).collect()
}

fn prod3<A: Clone, B: Clone, C: Clone>(a: &[A], b: &[B], c: &[C]) -> Vec<(A, B, C)> {
    prod2(a, b).into_iter().flat_map(|(x, y)| c.iter().map(move |z| (x.clone(), y.clone(), z.clone()))).collect()
}

fn tv(i: usize, j: usize) -> Transvection {
    Transvection { target: i, control: j }
}

fn run<T>(items: impl IntoIterator<Item = T>, mut f: impl FnMut(T) -> Result<(), String>) -> Result<usize, String> {
    let mut count = 0;
    for it in items {
        f(it)?;
        count += 1;
    }
    Ok(count)
}

fn random_circuit(rng: &mut ChaCha8Rng, n: usize, len: usize, gates: &str) -> Circuit {
    let mut c = Circuit::new(n);
    for _ in 0..len {
        let kind = gates.as_bytes()[rng.gen_range(0..gates.len())];
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let g = match kind {
            b'H' => Gate::H(i),
            b'P' => Gate::P(i),
            b'Z' => Gate::Z(i),
            b'C' => Gate::CZ(i, j),
            _ => Gate::CX(i, j),
        };
        c.push(g).expect("in range");
    }
    c
}

/// Every identity in the catalogue.
#[must_use]
pub fn catalogue() -> Vec<Identity> {
    vec![
        Identity {
            name: "single_qubit_paulis_and_h_are_involutions",
            statement: "H² = X² = Y² = Z² = I",
            check: || run([Gate::H(0), Gate::X(0), Gate::Y(0), Gate::Z(0)], |g| same(1, &[g, g], &[], 0)),
        },
        Identity {
            name: "x_and_z_anticommute",
            statement: "XZ = -ZX",
            check: || run([()], |()| same(1, &[Gate::X(0), Gate::Z(0)], &[Gate::Z(0), Gate::X(0)], 4)),
        },
        Identity {
            name: "y_is_i_xz",
            statement: "Y = iXZ",
            check: || run([()], |()| same(1, &[Gate::Y(0)], &[Gate::X(0), Gate::Z(0)], 2)),
        },
        Identity {
            name: "h_conjugates_z_to_x",
            statement: "HZH = X",
            check: || run([()], |()| same(1, &[Gate::H(0), Gate::Z(0), Gate::H(0)], &[Gate::X(0)], 0)),
        },
        Identity {
            name: "p_conjugates_x_to_y",
            statement: "PXP⁻¹ = Y",
            check: || run([()], |()| same(1, &cat(&[&[Gate::P(0), Gate::X(0)], &inv(&[Gate::P(0)])]), &[Gate::Y(0)], 0)),
        },
        Identity {
            name: "z_layer_acts_by_sign",
            statement: "Z_v|x⟩ = (-1)^{v·x}|x⟩",
            check: || run(vectors(3), |v| basis_action(3, &zs(&v), |x| x.clone(), |x| 2 * u32::from(v.dot(x)))),
        },
        Identity {
            name: "p_layer_acts_by_i_power",
            statement: "P_v|x⟩ = i^{v·x}|x⟩ (integer dot product)",
            check: || {
                run(vectors(3), |v| basis_action(3, &ps(&v), |x| x.clone(), |x| v.and(x).count_ones() as u32))
            },
        },
        Identity {
            name: "cnot_adds_control_into_target",
            statement: "X_ij|x⟩ = |x with x_i ⊕= x_j⟩",
            check: || {
                run(pairs(3), |(i, j)| {
                    basis_action(3, &[Gate::CX(i, j)], |x| {
                        let mut y = x.clone();
                        y.transvect(tv(i, j));
                        y
                    }, |_| 0)
                })
            },
        },
        Identity {
            name: "cz_acts_by_sign",
            statement: "Z_ij|x⟩ = (-1)^{x_i x_j}|x⟩",
            check: || {
                run(pairs(3), |(i, j)| {
                    basis_action(3, &[Gate::CZ(i, j)], |x| x.clone(), |x| 2 * u32::from(x.get(i) && x.get(j)))
                })
            },
        },
        Identity {
            name: "swap_exchanges_bits",
            statement: "S_ij|…x_i…x_j…⟩ = |…x_j…x_i…⟩",
            check: || {
                run(pairs(3), |(i, j)| {
                    basis_action(3, &[Gate::SWAP(i, j)], |x| {
                        let mut y = x.clone();
                        y.swap(i, j);
                        y
                    }, |_| 0)
                })
            },
        },
        Identity {
            name: "hadamards_reverse_cnot",
            statement: "X_ij = H_i H_j X_ji H_i H_j",
            check: || run(pairs(3), |(i, j)| same(3, &[Gate::CX(i, j)], &hh2(i, j, &[Gate::CX(j, i)]), 0)),
        },
        Identity {
            name: "cz_is_h_conjugated_cnot",
            statement: "Z_ij = H_i X_ij H_i = H_j X_ji H_j",
            check: || {
                run(pairs(3), |(i, j)| {
                    same(3, &[Gate::CZ(i, j)], &hh(i, &[Gate::CX(i, j)]), 0)?;
                    same(3, &[Gate::CZ(i, j)], &hh(j, &[Gate::CX(j, i)]), 0)
                })
            },
        },
        Identity {
            name: "swap_is_three_cnots",
            statement: "S_ij = X_ij X_ji X_ij = X_ji X_ij X_ji",
            check: || {
                run(pairs(3), |(i, j)| {
                    same(3, &[Gate::SWAP(i, j)], &[Gate::CX(i, j), Gate::CX(j, i), Gate::CX(i, j)], 0)?;
                    same(3, &[Gate::SWAP(i, j)], &[Gate::CX(j, i), Gate::CX(i, j), Gate::CX(j, i)], 0)
                })
            },
        },
        Identity {
            name: "generator_words_for_paulis",
            statement: "Z = P², X = HP²H, Y = PHP²HP³",
            check: || {
                let (h, p) = (Gate::H(0), Gate::P(0));
                same(1, &[Gate::Z(0)], &[p, p], 0)?;
                same(1, &[Gate::X(0)], &[h, p, p, h], 0)?;
                same(1, &[Gate::Y(0)], &[p, h, p, p, h, p, p, p], 0)?;
                Ok(3)
            },
        },
        Identity {
            name: "pauli_multiplication_rule",
            statement: "i^λ X_u Z_v · i^λ' X_u' Z_v' = i^{λ+λ'} (-1)^{u'·v} X_{u⊕u'} Z_{v⊕v'}",
            check: || {
                let vs = vectors(2);
                let mut count = 0;
                for u in &vs {
                    for v in &vs {
                        for u2 in &vs {
                            for v2 in &vs {
                                let sign = if u2.dot(v) { 4 } else { 0 };
                                same(2, &cat(&[&pauli(u, v), &pauli(u2, v2)]), &pauli(&u.xor(u2), &v.xor(v2)), sign)?;
                                count += 1;
                            }
                        }
                    }
                }
                Ok(count)
            },
        },
        Identity {
            name: "hp_cubed_is_an_eighth_turn",
            statement: "(H_i P_i)³ = (P_i H_i)³ = e^{iπ/4} I",
            check: || {
                let (h, p) = (Gate::H(0), Gate::P(0));
                same(1, &[h, p, h, p, h, p], &[], 1)?;
                same(1, &[p, h, p, h, p, h], &[], 1)?;
                Ok(2)
            },
        },
        Identity {
            name: "cz_layer_acts_by_quadratic_form",
            statement: "Z_B|x⟩ = (-1)^{q_B(x)}|x⟩",
            check: || {
                run(graphs(3), |b| {
                    let q = QuadraticForm::new(&b);
                    basis_action(3, &czs(&b), |x| x.clone(), |x| 2 * u32::from(q.eval(x)))
                })
            },
        },
        Identity {
            name: "cnot_acts_as_transvection",
            statement: "X_[ij]|x⟩ = |[ij]x⟩",
            check: || {
                run(pairs(3), |(i, j)| {
                    let m = BitMat::from_word(3, &[tv(i, j)]).expect("in range");
                    basis_action(3, &[Gate::CX(i, j)], |x| m.mul_vec(x).expect("sizes"), |_| 0)
                })
            },
        },
        Identity {
            name: "cx_circuits_represent_gl",
            statement: "X_A|x⟩ = |Ax⟩ and X_A X_A' = X_{AA'}",
            check: || {
                let all = gl(3);
                let mut rng = ChaCha8Rng::seed_from_u64(7);
                run(0..200, |_| {
                    let a = &all[rng.gen_range(0..all.len())];
                    let b = &all[rng.gen_range(0..all.len())];
                    basis_action(3, &cxs(a), |x| a.mul_vec(x).expect("sizes"), |_| 0)?;
                    let ab = a.mul(b).expect("sizes");
                    same(3, &cat(&[&cxs(a), &cxs(b)]), &cxs(&ab), 0)
                })
            },
        },
        Identity {
            name: "cnot_commutation_on_a_path",
            statement: "X_[ij] X_[jk] X_[ij] = X_[ik] X_[jk] = X_[jk] X_[ik]",
            check: || {
                run(triples(3), |(i, j, k)| {
                    let lhs = [Gate::CX(i, j), Gate::CX(j, k), Gate::CX(i, j)];
                    same(3, &lhs, &[Gate::CX(i, k), Gate::CX(j, k)], 0)?;
                    same(3, &lhs, &[Gate::CX(j, k), Gate::CX(i, k)], 0)
                })
            },
        },
        Identity {
            name: "diagonal_layers_multiply",
            statement: "Z_v P_b Z_B · Z_v' P_b' Z_B' = Z_{v⊕v'⊕b⊙b'} P_{b⊕b'} Z_{B⊕B'}",
            check: || {
                let vs = vectors(2);
                let gs = graphs(2);
                let mut count = 0;
                for v in &vs {
                    for b in &vs {
                        for v2 in &vs {
                            for b2 in &vs {
                                for bb in &gs {
                                    for bb2 in &gs {
                                        let lhs = cat(&[&zs(v), &ps(b), &czs(bb), &zs(v2), &ps(b2), &czs(bb2)]);
                                        let mut sum = bb.clone();
                                        sum.xor_assign(bb2);
                                        let rhs = cat(&[&zs(&v.xor(v2).xor(&b.and(b2))), &ps(&b.xor(b2)), &czs(&sum)]);
                                        same(2, &lhs, &rhs, 0)?;
                                        count += 1;
                                    }
                                }
                            }
                        }
                    }
                }
                Ok(count)
            },
        },
        Identity {
            name: "cnot_conjugates_cz_on_its_pair",
            statement: "X_[ij] Z_{ij} X_[ij] = Z_{ij} Z_j",
            check: || {
                run(pairs(3), |(i, j)| {
                    same(3, &[Gate::CX(i, j), Gate::CZ(i, j), Gate::CX(i, j)], &[Gate::CZ(i, j), Gate::Z(j)], 0)
                })
            },
        },
        Identity {
            name: "cnot_conjugates_cz_on_target",
            statement: "X_[ij] Z_{ik} X_[ij] = Z_{ik} Z_{jk}",
            check: || {
                run(triples(3), |(i, j, k)| {
                    same(3, &[Gate::CX(i, j), Gate::CZ(i, k), Gate::CX(i, j)], &[Gate::CZ(i, k), Gate::CZ(j, k)], 0)
                })
            },
        },
        Identity {
            name: "cnot_commutes_with_cz_off_target",
            statement: "X_[ij] Z_{pq} X_[ij] = Z_{pq} for p, q ≠ i",
            check: || {
                run(triples(3), |(i, j, k)| {
                    same(3, &[Gate::CX(i, j), Gate::CZ(j, k), Gate::CX(i, j)], &[Gate::CZ(j, k)], 0)
                })
            },
        },
        Identity {
            name: "cnot_copies_z_from_target",
            statement: "X_[ij] Z_i X_[ij] = Z_i Z_j",
            check: || run(pairs(3), |(i, j)| same(3, &[Gate::CX(i, j), Gate::Z(i), Gate::CX(i, j)], &[Gate::Z(i), Gate::Z(j)], 0)),
        },
        Identity {
            name: "cnot_fixes_z_on_control",
            statement: "X_[ij] Z_j X_[ij] = Z_j",
            check: || run(pairs(3), |(i, j)| same(3, &[Gate::CX(i, j), Gate::Z(j), Gate::CX(i, j)], &[Gate::Z(j)], 0)),
        },
        Identity {
            name: "cnot_conjugates_p_on_target",
            statement: "X_[ij] P_i X_[ij] = P_i P_j Z_{ij}",
            check: || {
                run(pairs(3), |(i, j)| {
                    same(3, &[Gate::CX(i, j), Gate::P(i), Gate::CX(i, j)], &[Gate::P(i), Gate::P(j), Gate::CZ(i, j)], 0)
                })
            },
        },
        Identity {
            name: "cnot_fixes_p_on_control",
            statement: "X_[ij] P_j X_[ij] = P_j",
            check: || run(pairs(3), |(i, j)| same(3, &[Gate::CX(i, j), Gate::P(j), Gate::CX(i, j)], &[Gate::P(j)], 0)),
        },
        Identity {
            name: "cnot_conjugates_z_layer",
            statement: "X_[ij] Z_v X_[ij] = Z_{[ji]v}",
            check: || {
                let vs = vectors(3);
                run(prod2(&pairs(3), &vs), |((i, j), v)| {
                    let mut w = v.clone();
                    w.transvect(tv(j, i));
                    same(3, &cat(&[&[Gate::CX(i, j)], &zs(&v), &[Gate::CX(i, j)]]), &zs(&w), 0)
                })
            },
        },
        Identity {
            name: "cnot_conjugates_p_layer",
            statement: "X_[ij] P_b X_[ij] = Z_{b_i b_j e_j} P_{[ji]b} Z_{b_i{{i,j}}}",
            check: || {
                let vs = vectors(3);
                run(prod2(&pairs(3), &vs), |((i, j), b)| {
                    let mut b2 = b.clone();
                    b2.transvect(tv(j, i));
                    let mut rhs = Vec::new();
                    if b.get(i) && b.get(j) {
                        rhs.push(Gate::Z(j));
                    }
                    rhs.extend(ps(&b2));
                    if b.get(i) {
                        rhs.push(Gate::CZ(i, j));
                    }
                    same(3, &cat(&[&[Gate::CX(i, j)], &ps(&b), &[Gate::CX(i, j)]]), &rhs, 0)
                })
            },
        },
        Identity {
            name: "cnot_conjugates_cz_layer",
            statement: "X_[ij] Z_B X_[ij] = Z_{b_ij e_j} Z_{[ji]B[ij]}",
            check: || {
                let gs = graphs(3);
                run(prod2(&pairs(3), &gs), |((i, j), b)| {
                    let mut b2 = b.clone();
                    b2.congruence(tv(i, j)).expect("in range");
                    let mut rhs = Vec::new();
                    if b.get(i, j) {
                        rhs.push(Gate::Z(j));
                    }
                    rhs.extend(czs(&b2));
                    same(3, &cat(&[&[Gate::CX(i, j)], &czs(&b), &[Gate::CX(i, j)]]), &rhs, 0)
                })
            },
        },
        Identity {
            name: "congruence_splits_by_incidence",
            statement: "Z_{[ji]B[ij]} = Z_ij^{b_ij} Z_{B_i^c} ∏_{k∈Λ_i} Z_ik Z_jk",
            check: || {
                let gs = graphs(3);
                run(prod2(&pairs(3), &gs), |((i, j), b)| {
                    let mut lhs = b.clone();
                    lhs.congruence(tv(i, j)).expect("in range");
                    let mut rest = b.clone();
                    rest.clear_incident(i);
                    let mut rhs = Vec::new();
                    if b.get(i, j) {
                        rhs.push(Gate::CZ(i, j));
                    }
                    rhs.extend(czs(&rest));
                    for k in b.neighbors(i).into_iter().filter(|&k| k != j) {
                        rhs.extend([Gate::CZ(i, k), Gate::CZ(j, k)]);
                    }
                    same(3, &czs(&lhs), &rhs, 0)
                })
            },
        },
        Identity {
            name: "cnot_conjugation_of_cz_layer_by_incidence",
            statement: "X_[ij] Z_B X_[ij] = Z_ij^{b_ij} Z_j^{b_ij} Z_{B_i^c} ∏_{k∈Λ_i} Z_ik Z_jk",
            check: || {
                let gs = graphs(3);
                run(prod2(&pairs(3), &gs), |((i, j), b)| {
                    let mut rest = b.clone();
                    rest.clear_incident(i);
                    let mut rhs = Vec::new();
                    if b.get(i, j) {
                        rhs.extend([Gate::CZ(i, j), Gate::Z(j)]);
                    }
                    rhs.extend(czs(&rest));
                    for k in b.neighbors(i).into_iter().filter(|&k| k != j) {
                        rhs.extend([Gate::CZ(i, k), Gate::CZ(j, k)]);
                    }
                    same(3, &cat(&[&[Gate::CX(i, j)], &czs(&b), &[Gate::CX(i, j)]]), &rhs, 0)
                })
            },
        },
        Identity {
            name: "cx_circuit_conjugates_cz_layer",
            statement: "X_A Z_B X_A⁻¹ = Z_{q_B(A⁻¹)} Z_{A⁻ᵀ B A⁻¹}",
            check: || {
                let all = gl(3);
                let gs = graphs(3);
                run(prod2(&all, &gs), |(a, b)| {
                    let (a, b) = (&a, &b);
                    let ainv = a.inverse().expect("invertible");
                    let v = QuadraticForm::new(b).of_columns(&ainv);
                    let b2 = b.congruence_by(&ainv).expect("sizes");
                    let lhs = cat(&[&cxs(a), &czs(b), &cxs(&ainv)]);
                    same(3, &lhs, &cat(&[&zs(&v), &czs(&b2)]), 0)
                })
            },
        },
        Identity {
            name: "swap_permutes_z_layer",
            statement: "X_(ij) Z_v X_(ij) = Z_{(ij)v}",
            check: || {
                let vs = vectors(3);
                run(prod2(&pairs(3), &vs), |((i, j), v)| {
                    let mut w = v.clone();
                    w.swap(i, j);
                    same(3, &cat(&[&[Gate::SWAP(i, j)], &zs(&v), &[Gate::SWAP(i, j)]]), &zs(&w), 0)
                })
            },
        },
        Identity {
            name: "swap_permutes_p_layer",
            statement: "X_(ij) P_b X_(ij) = P_{(ij)b}",
            check: || {
                let vs = vectors(3);
                run(prod2(&pairs(3), &vs), |((i, j), b)| {
                    let mut w = b.clone();
                    w.swap(i, j);
                    same(3, &cat(&[&[Gate::SWAP(i, j)], &ps(&b), &[Gate::SWAP(i, j)]]), &ps(&w), 0)
                })
            },
        },
        Identity {
            name: "swap_permutes_cz_layer",
            statement: "X_(ij) Z_B X_(ij) = Z_{(ij)B(ij)}",
            check: || {
                let gs = graphs(3);
                run(prod2(&pairs(3), &gs), |((i, j), b)| {
                    let mut w = b.clone();
                    w.swap_indices(i, j);
                    same(3, &cat(&[&[Gate::SWAP(i, j)], &czs(&b), &[Gate::SWAP(i, j)]]), &czs(&w), 0)
                })
            },
        },
        Identity {
            name: "permutation_conjugates_cz_layer",
            statement: "X_σ Z_B X_σ⁻¹ = Z_{σBσ⁻¹}",
            check: || {
                let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
                let gs = graphs(3);
                run(prod2(&perms, &gs), |(p, b)| {
                    let b = &b;
                    // σ e_c = e_{p[c]}
                    let mut sigma = BitMat::zeros(3);
                    for (c, &r) in p.iter().enumerate() {
                        sigma.set(r, c, true);
                    }
                    let sinv = sigma.transpose();
                    let b2 = b.congruence_by(&sinv).expect("sizes");
                    same(3, &cat(&[&cxs(&sigma), &czs(b), &cxs(&sinv)]), &czs(&b2), 0)
                })
            },
        },
        Identity {
            name: "pzx_form_reproduces_circuit",
            statement: "every {P, CZ, CX} circuit equals Z_v P_b Z_B X_A exactly",
            check: || {
                let mut rng = ChaCha8Rng::seed_from_u64(11);
                run(0..100, |_| {
                    let c = random_circuit(&mut rng, 3, 20, "PCX");
                    let f = pzx::normalize(&c).map_err(|e| e.to_string())?;
                    let back = f.to_circuit(SynthMethod::Pmh).map_err(|e| e.to_string())?;
                    let (a, b) = (DenseUnitary::of(&c).expect("cap"), DenseUnitary::of(&back).expect("cap"));
                    if a.approx_eq(&b) {
                        Ok(())
                    } else {
                        Err(format!("{c}"))
                    }
                })
            },
        },
        Identity {
            name: "h_layer_transposes_cx_circuit",
            statement: "h X_A h = X_{A⁻ᵀ}",
            check: || {
                run(gl(3), |a| {
                    let ait = a.inverse().expect("invertible").transpose();
                    same(3, &cat(&[&h_all(3), &cxs(&a), &h_all(3)]), &cxs(&ait), 0)
                })
            },
        },
        Identity {
            name: "p_conjugated_by_its_h_twin",
            statement: "P_i^h P_i P_i^{-h} = e^{iπ/4} H_i X_i",
            check: || {
                let ph = hh(0, &[Gate::P(0)]);
                same(1, &cat(&[&ph, &[Gate::P(0)], &inv(&ph)]), &[Gate::H(0), Gate::X(0)], 1).map(|()| 1)
            },
        },
        Identity {
            name: "h_twin_of_p_conjugates_cz",
            statement: "P_i^h Z_ik P_i^{-h} = Z_ik X_[ik] P_k",
            check: || {
                run(pairs(3), |(i, k)| {
                    let ph = hh(i, &[Gate::P(i)]);
                    same(3, &cat(&[&ph, &[Gate::CZ(i, k)], &inv(&ph)]), &[Gate::CZ(i, k), Gate::CX(i, k), Gate::P(k)], 0)
                })
            },
        },
        Identity {
            name: "h_twin_of_cz_conjugates_p",
            statement: "Z_ij^h P_j Z_ij^{-h} = P_i^h X_[ij] P_j",
            check: || {
                run(pairs(3), |(i, j)| {
                    let zh = hh2(i, j, &[Gate::CZ(i, j)]);
                    let rhs = cat(&[&hh(i, &[Gate::P(i)]), &[Gate::CX(i, j), Gate::P(j)]]);
                    same(3, &cat(&[&zh, &[Gate::P(j)], &zh]), &rhs, 0)
                })
            },
        },
        Identity {
            name: "h_twin_of_cz_conjugates_same_cz",
            statement: "Z_ij^h Z_ij Z_ij^{-h} = Z_ij Z_ij^h Z_ij = H_i H_j X_(ij) = X_(ij) H_i H_j",
            check: || {
                run(pairs(3), |(i, j)| {
                    let zh = hh2(i, j, &[Gate::CZ(i, j)]);
                    let lhs = cat(&[&zh, &[Gate::CZ(i, j)], &zh]);
                    same(3, &lhs, &cat(&[&[Gate::CZ(i, j)], &zh, &[Gate::CZ(i, j)]]), 0)?;
                    same(3, &lhs, &[Gate::H(i), Gate::H(j), Gate::SWAP(i, j)], 0)?;
                    same(3, &lhs, &[Gate::SWAP(i, j), Gate::H(i), Gate::H(j)], 0)
                })
            },
        },
        Identity {
            name: "h_twin_of_cz_conjugates_adjacent_cz",
            statement: "Z_ij^h Z_ik Z_ij^{-h} = X_[jk] Z_ik = Z_ik X_[jk]",
            check: || {
                run(triples(3), |(i, j, k)| {
                    let zh = hh2(i, j, &[Gate::CZ(i, j)]);
                    let lhs = cat(&[&zh, &[Gate::CZ(i, k)], &zh]);
                    same(3, &lhs, &[Gate::CX(j, k), Gate::CZ(i, k)], 0)?;
                    same(3, &lhs, &[Gate::CZ(i, k), Gate::CX(j, k)], 0)
                })
            },
        },
        Identity {
            name: "p_conjugates_pauli",
            statement: "P_i X_u Z_v P_i⁻¹ = i^{u_i} X_u Z_{v⊕u_i e_i}",
            check: || pauli_rule(|n, i, _j, u, v| {
                let lhs = cat(&[&[Gate::P(i)], &pauli(u, v), &inv(&[Gate::P(i)])]);
                let mut w = v.clone();
                if u.get(i) {
                    w.flip(i);
                }
                (lhs, pauli(u, &w), if u.get(i) { 2 } else { 0 }, n)
            }),
        },
        Identity {
            name: "cnot_conjugates_pauli",
            statement: "X_[ij] X_u Z_v X_[ij] = X_{[ij]u} Z_{[ji]v}",
            check: || pauli_rule(|n, i, j, u, v| {
                let lhs = cat(&[&[Gate::CX(i, j)], &pauli(u, v), &[Gate::CX(i, j)]]);
                let (mut u2, mut v2) = (u.clone(), v.clone());
                u2.transvect(tv(i, j));
                v2.transvect(tv(j, i));
                (lhs, pauli(&u2, &v2), 0, n)
            }),
        },
        Identity {
            name: "cz_conjugates_pauli",
            statement: "Z_ij X_u Z_v Z_ij = (-1)^{u_i u_j} X_u Z_{v⊕{{i,j}}u}",
            check: || pauli_rule(|n, i, j, u, v| {
                let lhs = cat(&[&[Gate::CZ(i, j)], &pauli(u, v), &[Gate::CZ(i, j)]]);
                let mut w = v.clone();
                if u.get(j) {
                    w.flip(i);
                }
                if u.get(i) {
                    w.flip(j);
                }
                (lhs, pauli(u, &w), if u.get(i) && u.get(j) { 4 } else { 0 }, n)
            }),
        },
        Identity {
            name: "h_layer_swaps_pauli_parts",
            statement: "h X_u Z_v h = (-1)^{u·v} X_v Z_u (sign-free exactly when u·v = 0)",
            check: || {
                let vs = vectors(3);
                run(prod2(&vs, &vs), |(u, v)| {
                    let (u, v) = (&u, &v);
                    let lhs = cat(&[&h_all(3), &pauli(u, v), &h_all(3)]);
                    same(3, &lhs, &pauli(v, u), if u.dot(v) { 4 } else { 0 })
                })
            },
        },
        Identity {
            name: "p_layer_conjugates_pauli",
            statement: "P_b X_u Z_v P_b⁻¹ = i^{Σ b_i u_i} X_u Z_{v⊕b⊙u}",
            check: || {
                let vs = vectors(3);
                run(prod3(&vs, &vs, &vs), |(b, u, v)| {
                    let (b, u, v) = (&b, &u, &v);
                    let lhs = cat(&[&ps(b), &pauli(u, v), &inv(&ps(b))]);
                    let bu = b.and(u);
                    same(3, &lhs, &pauli(u, &v.xor(&bu)), 2 * bu.count_ones() as i64)
                })
            },
        },
        Identity {
            name: "cx_circuit_conjugates_pauli",
            statement: "X_A X_u Z_v X_A⁻¹ = X_{Au} Z_{A⁻ᵀv}",
            check: || {
                let vs = vectors(3);
                let all = gl(3);
                let mut rng = ChaCha8Rng::seed_from_u64(3);
                run(0..300, |_| {
                    let a = &all[rng.gen_range(0..all.len())];
                    let (u, v) = (&vs[rng.gen_range(0..8)], &vs[rng.gen_range(0..8)]);
                    let ainv = a.inverse().expect("invertible");
                    let lhs = cat(&[&cxs(a), &pauli(u, v), &cxs(&ainv)]);
                    let rhs = pauli(&a.mul_vec(u).expect("sizes"), &ainv.transpose().mul_vec(v).expect("sizes"));
                    same(3, &lhs, &rhs, 0)
                })
            },
        },
        Identity {
            name: "cz_layer_conjugates_pauli",
            statement: "Z_B X_u Z_v Z_B = (-1)^{q_B(u)} X_u Z_{v⊕Bu}",
            check: || {
                let vs = vectors(3);
                let gs = graphs(3);
                run(prod3(&gs, &vs, &vs), |(b, u, v)| {
                    let (b, u, v) = (&b, &u, &v);
                    let lhs = cat(&[&czs(b), &pauli(u, v), &czs(b)]);
                    let sign = if QuadraticForm::new(b).eval(u) { 4 } else { 0 };
                    same(3, &lhs, &pauli(u, &v.xor(&b.mul_vec(u))), sign)
                })
            },
        },
        Identity {
            name: "pauli_term_rules_agree_with_gates",
            statement: "PauliTerm::conj_by_gate matches g X_u Z_v g⁻¹ for every generator",
            check: || {
                let vs = vectors(2);
                let gates = [Gate::H(0), Gate::P(1), Gate::CX(0, 1), Gate::CZ(0, 1), Gate::X(0), Gate::Y(1), Gate::Z(0), Gate::SWAP(0, 1)];
                run(prod3(&gates, &vs, &vs), |(g, u, v)| {
                    let mut p = PauliTerm::new(0, u.clone(), v.clone());
                    p.conj_by_gate(g);
                    let lhs = cat(&[&[g], &pauli(&u, &v), &inv(&[g])]);
                    same(2, &lhs, &pauli(&p.u, &p.v), 2 * i64::from(p.lambda))
                })
            },
        },
        Identity {
            name: "intermediate_form_reproduces_circuit",
            statement: "C = H_a P_d Z_D h e^{iφ} X_u Z_v P_b Z_B X_A",
            check: || {
                let mut rng = ChaCha8Rng::seed_from_u64(5);
                run(0..100, |_| {
                    let c = random_circuit(&mut rng, 3, 25, "HPX");
                    let f = genpzx::c_to_intermediate(&c).map_err(|e| e.to_string())?;
                    let (back, k) = f.to_circuit(SynthMethod::Gauss).map_err(|e| e.to_string())?;
                    same_phase(&c, &back, k)
                })
            },
        },
        Identity {
            name: "general_form_reproduces_circuit",
            statement: "C = e^{iφ} H_r Z_u P_d Z_D H_s Z_v P_b Z_B X_A",
            check: || {
                let mut rng = ChaCha8Rng::seed_from_u64(6);
                run(0..100, |_| {
                    let c = random_circuit(&mut rng, 3, 25, "HPXCZ");
                    let f = genpzx::c_to_gpzx(&c).map_err(|e| e.to_string())?;
                    let (back, k) = f.to_circuit(SynthMethod::Pmh).map_err(|e| e.to_string())?;
                    same_phase(&c, &back, k)
                })
            },
        },
    ]
}

fn same_phase(c: &Circuit, back: &Circuit, k: PhaseOctant) -> Result<(), String> {
    let a = DenseUnitary::of(c).map_err(|e| e.to_string())?;
    let b = DenseUnitary::of(back).map_err(|e| e.to_string())?.scaled(octant(k));
    if a.approx_eq(&b) {
        Ok(())
    } else {
        Err(format!("{c}"))
    }
}

type PauliCase = (Vec<Gate>, Vec<Gate>, i64, usize);

/// Runs a Pauli conjugation rule over every ordered pair `(i, j)` and every
/// `u, v` at two qubits.
fn pauli_rule(f: impl Fn(usize, usize, usize, &BitVec, &BitVec) -> PauliCase) -> Result<usize, String> {
    let n = 2;
    let vs = vectors(n);
    let mut count = 0;
    for (i, j) in pairs(n) {
        for u in &vs {
            for v in &vs {
                let (lhs, rhs, k, n) = f(n, i, j, u, v);
                same(n, &lhs, &rhs, k)?;
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Runs every identity; returns `(name, result)` pairs.
#[must_use]
pub fn check_all() -> Vec<(&'static str, Result<usize, String>)> {
    catalogue().iter().map(|id| (id.name, id.check())).collect()
}
