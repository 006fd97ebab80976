//! Normal form for arbitrary Clifford circuits:
//! `e^{iφ} H_r Z_u P_d Z_D H_s Z_v P_b Z_B X_A`.
//!
//! Gates are folded one at a time into the intermediate form
//! `H_a · P_d Z_D · h · e^{iφ} X_u Z_v · P_b Z_B X_A` (with `h = H^{⊗n}`)
//! by three merge rules, one per generator `H`, `P`, `CX`. Each merge costs
//! `O(n²)`. The intermediate form is then rewritten into the final shape,
//! dropping Hadamard pairs that cancel.

use std::fmt;

use serde_json::json;

use crate::circuit::{Circuit, Gate, PhaseOctant};
use crate::gf2::{BitVec, SymZeroDiag, Transvection};
use crate::pzx::{push_diag, push_word, PzxError, PzxForm};
use crate::synth::{self, SynthMethod};

/// `H_a · P_d Z_D · h · e^{iφ} X_u Z_v · P_b Z_B X_A`.
///
/// `right` holds `P_b Z_B X_A`; its own `v` is kept zero between merges
/// because any `Z` it produces is folded into the Pauli block.
#[derive(Clone, PartialEq, Eq)]
pub struct IntermediateForm {
    pub a: BitVec,
    pub d: BitVec,
    pub dd: SymZeroDiag,
    pub phase: PhaseOctant,
    pub u: BitVec,
    pub v: BitVec,
    pub right: PzxForm,
}

impl IntermediateForm {
    /// The identity, written as `H_{1…1} · h`.
    #[must_use]
    pub fn new(n: usize) -> Self {
        Self {
            a: BitVec::ones(n),
            d: BitVec::zeros(n),
            dd: SymZeroDiag::zeros(n),
            phase: PhaseOctant::ZERO,
            u: BitVec::zeros(n),
            v: BitVec::zeros(n),
            right: PzxForm::untracked(n),
        }
    }

    #[must_use]
    pub fn n(&self) -> usize {
        self.a.len()
    }

    /// `F ← g·F` for any supported gate. `X`, `Y`, `Z`, `CZ` and `SWAP`
    /// are desugared into `{H, P, CX}` first.
    pub fn apply_gate(&mut self, g: Gate) -> Result<(), PzxError> {
        let n = self.n();
        for index in g.qubits() {
            if index >= n {
                return Err(crate::gf2::Gf2Error::IndexOutOfRange { index, n }.into());
            }
        }
        match g {
            Gate::H(i) => self.merge_h(i),
            Gate::P(i) => self.merge_p(i),
            Gate::CX(i, j) => self.merge_cx(Transvection::new(i, j)?),
            other => {
                let c = Circuit::from_gates(n, [other]).expect("checked above").desugar();
                for &h in c.gates() {
                    self.apply_gate(h)?;
                }
            }
        }
        Ok(())
    }

    /// `H_i·F`: `a ^= e_i`.
    pub fn merge_h(&mut self, i: usize) {
        self.a.flip(i);
    }

    /// `P_i·F`.
    pub fn merge_p(&mut self, i: usize) {
        if self.a.get(i) {
            self.p_through_h(i);
        } else {
            self.p_plain(i);
        }
    }

    /// `X_[ij]·F` (target `i`, control `j`).
    pub fn merge_cx(&mut self, t: Transvection) {
        let (i, j) = (t.target, t.control);
        match (self.a.get(i), self.a.get(j)) {
            (false, false) => self.cx_plain(t),
            (true, true) => self.cx_plain(t.transpose()),
            // H_i X_[ij] H_i = CZ_ij
            (true, false) => self.dd.toggle(i, j).expect("valid transvection"),
            (false, true) => self.cz_through_h(i, j),
        }
    }

    /// Moves `Z_w` from the diagonal block through `h`: it lands as `X_w`
    /// in front of the Pauli block.
    fn z_through_h(&mut self, w: &BitVec) {
        self.u.xor_assign(w);
    }

    /// Left-multiplies the Pauli block and the right block by `X_t`.
    fn cx_into_right(&mut self, t: Transvection) {
        self.u.transvect(t);
        self.v.transvect(t.transpose());
        self.right.left_mul_cx(t).expect("valid transvection");
        self.drain_right_v();
    }

    fn drain_right_v(&mut self) {
        if !self.right.v.is_zero() {
            self.v.xor_assign(&self.right.v);
            self.right.v = BitVec::zeros(self.n());
        }
    }

    /// Installs `m = Z_w P_x Z_X X_{A'}` as the new diagonal block, pushing
    /// `X_{A'}` through `h` (it becomes `X_{A'^{-T}}`, a word of transposed
    /// transvections) and `Z_w` through `h`.
    fn install_middle(&mut self, m: PzxForm) {
        let word = m.word().expect("middle forms are tracked");
        for &t in word.iter().rev() {
            self.cx_into_right(t.transpose());
        }
        self.z_through_h(&m.v);
        self.d = m.b;
        self.dd = m.bb;
    }

    /// `X_[ij]` with `a_i = a_j = 0`: it passes `H_a` unchanged.
    fn cx_plain(&mut self, t: Transvection) {
        let mut m = PzxForm::diagonal(BitVec::zeros(self.n()), self.d.clone(), self.dd.clone());
        m.left_mul_cx(t).expect("valid transvection");
        self.install_middle(m);
    }

    /// `P_i` with `a_i = 0`: `P_i P_d = Z_{d_i e_i} P_{d⊕e_i}`.
    fn p_plain(&mut self, i: usize) {
        if self.d.get(i) {
            self.u.flip(i);
        }
        self.d.flip(i);
    }

    /// `H_i P_i H_i` sitting directly right of `H_a`.
    fn p_through_h(&mut self, i: usize) {
        // P_i passes h and conjugates the Pauli block, then hits P_b.
        if self.u.get(i) {
            self.phase += 2;
            self.v.flip(i);
        }
        self.right.left_mul_p(i);
        self.drain_right_v();

        if self.d.get(i) {
            // P_i^h P_i P_i^{-h} = e^{iπ/4} H_i X_i; the X_i then crosses the
            // conjugated CZ layer and h as X_{De_i} Z_i.
            self.phase += 1;
            self.a.flip(i);
            self.d.flip(i);
            if self.u.get(i) {
                self.phase += 4;
            }
            let row = self.dd.row(i);
            self.u.xor_assign(&row);
            self.v.flip(i);
        }

        // P_i^h Z_D P_i^{-h} = Z_{D⊕D_i} ∏_{k∈Λ_i} Z_ik X_[ik] P_k
        let neighbors = self.dd.neighbors(i);
        let mut rest = self.dd.clone();
        rest.clear_incident(i);
        let n = self.n();
        let mut m = PzxForm::identity(n);
        for &k in neighbors.iter().rev() {
            m.left_mul_p(k);
            m.left_mul_cx(Transvection { target: i, control: k }).expect("i != k");
            m.bb.toggle(i, k).expect("i != k");
        }
        m.left_mul_diag(&BitVec::zeros(n), &self.d, &rest);
        self.install_middle(m);
    }

    /// `Z_ij^h = H_i H_j CZ_ij H_i H_j` sitting directly right of `H_a`.
    fn cz_through_h(&mut self, i: usize, j: usize) {
        if self.dd.get(i, j) {
            // Z_ij^h Z_ij = H_i H_j X_(ij) Z_ij^h; conjugate everything by the swap.
            self.dd.toggle(i, j).expect("i != j");
            self.a.flip(i);
            self.a.flip(j);
            self.d.swap(i, j);
            self.dd.swap_indices(i, j);
            self.u.swap(i, j);
            self.v.swap(i, j);
            self.right.left_mul_swap_perm(i, j);
        }

        // Z_ij passes h, conjugates the Pauli block and lands on Z_B.
        let (ui, uj) = (self.u.get(i), self.u.get(j));
        if ui && uj {
            self.phase += 4;
        }
        if uj {
            self.v.flip(i);
        }
        if ui {
            self.v.flip(j);
        }
        self.right.bb.toggle(i, j).expect("i != j");

        // Z^h Z_D Z^h = Z_{D⊕D_i⊕D_j} ∏_{Λ_i} Z_ik X_[jk] ∏_{Λ_j} Z_jk X_[ik]
        let n = self.n();
        let li = self.dd.neighbors(i);
        let lj = self.dd.neighbors(j);
        let mut rest = self.dd.clone();
        rest.clear_incident(i);
        rest.clear_incident(j);
        let mut m = PzxForm::identity(n);
        for &k in lj.iter().rev() {
            m.left_mul_cx(Transvection { target: i, control: k }).expect("i != k");
            m.bb.toggle(j, k).expect("j != k");
        }
        for &k in li.iter().rev() {
            m.left_mul_cx(Transvection { target: j, control: k }).expect("j != k");
            m.bb.toggle(i, k).expect("i != k");
        }
        m.left_mul_diag(&BitVec::zeros(n), &BitVec::zeros(n), &rest);
        let d = std::mem::replace(&mut self.d, BitVec::zeros(n));
        self.install_middle(m);

        // What is left in front is Z^h P_d Z^h.
        let a_outer = std::mem::replace(&mut self.a, BitVec::zeros(n));
        let tij = Transvection { target: i, control: j };
        match (d.get(i), d.get(j)) {
            (false, false) => self.d = d,
            // Z^h P_d Z^h = P_i^h X_[ij] P_d
            (false, true) => {
                self.d = d;
                self.cx_plain(tij);
                self.p_through_h(i);
            }
            (true, false) => {
                self.d = d;
                self.cx_plain(tij.transpose());
                self.p_through_h(j);
            }
            // Z^h P_d Z^h = P_i^h X_[ij] P_d P_j^h X_[ji]
            (true, true) => {
                self.cx_plain(tij.transpose());
                self.p_through_h(j);
                for k in d.iter_ones() {
                    self.p_plain(k);
                }
                self.cx_plain(tij);
                self.p_through_h(i);
            }
        }
        self.a.xor_assign(&a_outer);
    }

    /// Circuit for the intermediate form (global phase returned separately).
    pub fn to_circuit(&self, method: SynthMethod) -> Result<(Circuit, PhaseOctant), PzxError> {
        let n = self.n();
        let mut c = self.right.to_circuit(method)?;
        for i in self.v.iter_ones() {
            c.push(Gate::Z(i)).expect("in range");
        }
        for i in self.u.iter_ones() {
            c.push(Gate::X(i)).expect("in range");
        }
        for i in 0..n {
            c.push(Gate::H(i)).expect("in range");
        }
        push_diag(&mut c, &BitVec::zeros(n), &self.d, &self.dd);
        for i in self.a.iter_ones() {
            c.push(Gate::H(i)).expect("in range");
        }
        Ok((c, self.phase))
    }

    /// Rewrites into the final shape: `X_u` crosses `h` as `Z_u`, and every
    /// qubit whose two Hadamards enclose nothing is cleared.
    #[must_use]
    pub fn finish(&self) -> GenPzxForm {
        let n = self.n();
        let mut right = self.right.clone();
        right.v = self.v.clone();
        let mut r = BitVec::zeros(n);
        let mut s = BitVec::zeros(n);
        for i in 0..n {
            let touched = self.u.get(i) || self.d.get(i) || !self.dd.neighbors(i).is_empty();
            if self.a.get(i) && !touched {
                continue;
            }
            r.set(i, self.a.get(i));
            s.set(i, true);
        }
        GenPzxForm { phase: self.phase, r, u: self.u.clone(), d: self.d.clone(), dd: self.dd.clone(), s, right }
    }

    /// The stabilizer state `F|0⟩ = e^{iφ} H_a Z_u P_d Z_D h|0⟩`.
    #[must_use]
    pub fn state_form(&self) -> StabStateForm {
        StabStateForm {
            phase: self.phase,
            a: self.a.clone(),
            u: self.u.clone(),
            d: self.d.clone(),
            dd: self.dd.clone(),
        }
    }
}

impl fmt::Display for IntermediateForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "a: {}", self.a)?;
        writeln!(f, "d: {}", self.d)?;
        writeln!(f, "D: {}", self.dd)?;
        writeln!(f, "phase: {}", self.phase)?;
        writeln!(f, "u: {}  v: {}", self.u, self.v)?;
        writeln!(f, "b: {}", self.right.b)?;
        writeln!(f, "B: {}", self.right.bb)?;
        write!(f, "A:")?;
        for row in self.right.a.rows() {
            write!(f, " {row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntermediateForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "IntermediateForm {{ a: {}, d: {}, D: {}, phase: {}, u: {}, v: {}, right: {:?} }}",
            self.a, self.d, self.dd, self.phase, self.u, self.v, self.right
        )
    }
}

/// `e^{iφ} H_r Z_u P_d Z_D H_s Z_v P_b Z_B X_A`; `right` holds
/// `Z_v P_b Z_B X_A`.
#[derive(Clone, PartialEq, Eq)]
pub struct GenPzxForm {
    pub phase: PhaseOctant,
    pub r: BitVec,
    pub u: BitVec,
    pub d: BitVec,
    pub dd: SymZeroDiag,
    pub s: BitVec,
    pub right: PzxForm,
}

impl GenPzxForm {
    #[must_use]
    pub fn n(&self) -> usize {
        self.r.len()
    }

    /// Emits the form as a circuit with layer shape CX–CZ–P–H–CZ–P–H
    /// (application order). The global phase is returned separately.
    pub fn to_circuit(&self, method: SynthMethod) -> Result<(Circuit, PhaseOctant), PzxError> {
        let mut c = Circuit::new(self.n());
        let word = synth::a_to_x(&self.right.a, method)?;
        push_word(&mut c, &word);
        push_diag(&mut c, &self.right.v, &self.right.b, &self.right.bb);
        for i in self.s.iter_ones() {
            c.push(Gate::H(i)).expect("in range");
        }
        push_diag(&mut c, &self.u, &self.d, &self.dd);
        for i in self.r.iter_ones() {
            c.push(Gate::H(i)).expect("in range");
        }
        Ok((c, self.phase))
    }

    #[must_use]
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "phase_octant": self.phase.k(),
            "r": self.r.to_string(),
            "u": self.u.to_string(),
            "d": self.d.to_string(),
            "D": self.dd.edges(),
            "s": self.s.to_string(),
            "right": self.right.to_json(),
        })
    }
}

impl fmt::Display for GenPzxForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "phase: {}", self.phase)?;
        writeln!(f, "r: {}", self.r)?;
        writeln!(f, "u: {}", self.u)?;
        writeln!(f, "d: {}", self.d)?;
        writeln!(f, "D: {}", self.dd)?;
        writeln!(f, "s: {}", self.s)?;
        write!(f, "{}", self.right)
    }
}

impl fmt::Debug for GenPzxForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GenPzxForm {{ phase: {}, r: {}, u: {}, d: {}, D: {}, s: {}, right: {:?} }}",
            self.phase, self.r, self.u, self.d, self.dd, self.s, self.right
        )
    }
}

/// A stabilizer state `e^{iφ} H_a Z_u P_d Z_D h|0⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabStateForm {
    pub phase: PhaseOctant,
    pub a: BitVec,
    pub u: BitVec,
    pub d: BitVec,
    pub dd: SymZeroDiag,
}

impl StabStateForm {
    /// Preparation circuit from `|0…0⟩` (global phase returned separately).
    #[must_use]
    pub fn to_circuit(&self) -> (Circuit, PhaseOctant) {
        let n = self.a.len();
        let mut c = Circuit::new(n);
        for i in 0..n {
            c.push(Gate::H(i)).expect("in range");
        }
        push_diag(&mut c, &self.u, &self.d, &self.dd);
        for i in self.a.iter_ones() {
            c.push(Gate::H(i)).expect("in range");
        }
        (c, self.phase)
    }
}

/// Folds every gate of `c` (in application order) into an intermediate form.
pub fn c_to_intermediate(c: &Circuit) -> Result<IntermediateForm, PzxError> {
    let mut f = IntermediateForm::new(c.n());
    for &g in c.gates() {
        f.apply_gate(g)?;
    }
    Ok(f)
}

/// Normal form of an arbitrary Clifford circuit.
pub fn c_to_gpzx(c: &Circuit) -> Result<GenPzxForm, PzxError> {
    Ok(c_to_intermediate(c)?.finish())
}

/// Stabilizer-state form of `c|0…0⟩`.
pub fn stab_state_form(c: &Circuit) -> Result<StabStateForm, PzxError> {
    Ok(c_to_intermediate(c)?.state_form())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{octant, DenseUnitary};

    fn dense_of(f: &IntermediateForm) -> DenseUnitary {
        let (c, k) = f.to_circuit(SynthMethod::Gauss).unwrap();
        DenseUnitary::of(&c).unwrap().scaled(octant(k))
    }

    /// Applies `gates` one at a time and checks each merge against the oracle.
    fn walk(n: usize, gates: &[Gate]) -> IntermediateForm {
        let mut f = IntermediateForm::new(n);
        let mut want = DenseUnitary::identity(n).unwrap();
        assert!(dense_of(&f).approx_eq(&want));
        for &g in gates {
            f.apply_gate(g).unwrap();
            want.apply(&Circuit::from_gates(n, [g]).unwrap());
            assert!(dense_of(&f).approx_eq(&want), "after {g}: {f:?}");
        }
        f
    }

    #[test]
    fn hp_cubed_gives_phase_one_octant() {
        let g = [Gate::H(0), Gate::P(0)].repeat(3);
        let f = c_to_gpzx(&Circuit::from_gates(1, g).unwrap()).unwrap();
        assert_eq!(f.phase.k(), 1);
        assert!(f.r.is_zero() && f.s.is_zero() && f.u.is_zero() && f.d.is_zero());
        assert!(f.right.v.is_zero() && f.right.b.is_zero() && f.right.a.is_identity());
    }

    #[test]
    fn single_gates_are_sound() {
        for g in [Gate::H(0), Gate::P(1), Gate::CX(0, 1), Gate::CX(1, 0), Gate::CZ(0, 1), Gate::Y(0)] {
            walk(2, &[g]);
        }
    }

    #[test]
    fn p_through_h_with_neighbours() {
        // a_0 = 0, D = {01, 02}, then P_0 through H_0.
        walk(3, &[Gate::H(1), Gate::H(2), Gate::CX(1, 0), Gate::CX(2, 0), Gate::H(1), Gate::H(2), Gate::H(0), Gate::P(0)]);
        walk(3, &[Gate::P(0), Gate::CZ(0, 1), Gate::CZ(0, 2), Gate::H(0), Gate::P(0), Gate::X(0), Gate::P(0)]);
    }

    #[test]
    fn cz_through_h_all_subcases() {
        for d in 0..4u8 {
            let mut gates = vec![Gate::CZ(0, 2), Gate::CZ(1, 3), Gate::X(0), Gate::X(1)];
            if d & 1 == 1 {
                gates.push(Gate::P(0));
            }
            if d & 2 == 2 {
                gates.push(Gate::P(1));
            }
            // a_0 = 0, a_1 = 1, so CX(0,1) is Z_01^h
            gates.extend([Gate::H(0), Gate::CX(0, 1)]);
            walk(4, &gates);
            // same with D_01 = 1
            let mut g2 = gates.clone();
            g2.insert(g2.len() - 2, Gate::CZ(0, 1));
            walk(4, &g2);
        }
    }
}
