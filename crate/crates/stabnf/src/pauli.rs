//! Pauli operators `i^λ X_u Z_v` and their conjugation by Clifford gates
//! and layers.

use std::fmt;

use crate::circuit::{Circuit, Gate, PhaseOctant};
use crate::gf2::{BitMat, BitVec, QuadraticForm, SymZeroDiag, Transvection};

/// The operator `i^λ X_u Z_v`, with `λ` kept mod 4.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliTerm {
    pub lambda: u8,
    pub u: BitVec,
    pub v: BitVec,
}

/// A layer of gates whose conjugation action on Paulis is closed-form.
#[derive(Clone, Debug)]
pub enum Layer<'a> {
    P(&'a BitVec),
    CZ(&'a SymZeroDiag),
    CX(&'a BitMat),
    /// The full Hadamard layer `h = H^{⊗n}`.
    H,
}

impl PauliTerm {
    #[must_use]
    pub fn identity(n: usize) -> Self {
        Self { lambda: 0, u: BitVec::zeros(n), v: BitVec::zeros(n) }
    }

    #[must_use]
    pub fn new(lambda: u8, u: BitVec, v: BitVec) -> Self {
        assert_eq!(u.len(), v.len(), "length mismatch");
        Self { lambda: lambda % 4, u, v }
    }

    #[must_use]
    pub fn n(&self) -> usize {
        self.u.len()
    }

    fn add_lambda(&mut self, k: u8) {
        self.lambda = (self.lambda + k) % 4;
    }

    /// `self · other`, using `X_u Z_v X_u' Z_v' = (-1)^{u'·v} X_{u⊕u'} Z_{v⊕v'}`.
    #[must_use]
    pub fn mul(&self, other: &PauliTerm) -> PauliTerm {
        let sign = if other.u.dot(&self.v) { 2 } else { 0 };
        PauliTerm {
            lambda: (self.lambda + other.lambda + sign) % 4,
            u: self.u.xor(&other.u),
            v: self.v.xor(&other.v),
        }
    }

    /// `g · self · g⁻¹`.
    pub fn conj_by_gate(&mut self, g: Gate) {
        match g {
            Gate::P(i) => {
                if self.u.get(i) {
                    self.add_lambda(1);
                    self.v.flip(i);
                }
            }
            Gate::Z(i) => {
                if self.u.get(i) {
                    self.add_lambda(2);
                }
            }
            Gate::X(i) => {
                if self.v.get(i) {
                    self.add_lambda(2);
                }
            }
            Gate::Y(i) => {
                if self.u.get(i) ^ self.v.get(i) {
                    self.add_lambda(2);
                }
            }
            Gate::H(i) => {
                // H X^a Z^b H = Z^a X^b = (-1)^{ab} X^b Z^a
                let (a, b) = (self.u.get(i), self.v.get(i));
                if a && b {
                    self.add_lambda(2);
                }
                self.u.set(i, b);
                self.v.set(i, a);
            }
            Gate::CX(t, c) => self.conj_by_cx(Transvection { target: t, control: c }),
            Gate::CZ(i, j) => {
                let (ui, uj) = (self.u.get(i), self.u.get(j));
                if ui && uj {
                    self.add_lambda(2);
                }
                if uj {
                    self.v.flip(i);
                }
                if ui {
                    self.v.flip(j);
                }
            }
            Gate::SWAP(i, j) => {
                self.u.swap(i, j);
                self.v.swap(i, j);
            }
        }
    }

    /// `X_[ij] X_u Z_v X_[ij] = X_{[ij]u} Z_{[ji]v}`.
    pub fn conj_by_cx(&mut self, t: Transvection) {
        self.u.transvect(t);
        self.v.transvect(t.transpose());
    }

    /// Conjugates by every gate of `c`, i.e. `C·self·C⁻¹`.
    pub fn conj_by_circuit(&mut self, c: &Circuit) {
        for &g in c.gates() {
            self.conj_by_gate(g);
        }
    }

    /// `L · self · L⁻¹` for a whole layer.
    ///
    /// * `P_b`: `i^{Σ b_i u_i} X_u Z_{v⊕b⊙u}`
    /// * `Z_B`: `(-1)^{q_B(u)} X_u Z_{v⊕Bu}`
    /// * `X_A`: `X_{Au} Z_{A⁻ᵀv}`
    /// * `h`: `(-1)^{u·v} X_v Z_u`
    pub fn conj_by_layer(&mut self, layer: Layer<'_>) -> Result<(), crate::gf2::Gf2Error> {
        match layer {
            Layer::P(b) => {
                let bu = b.and(&self.u);
                self.add_lambda((bu.count_ones() % 4) as u8);
                self.v.xor_assign(&bu);
            }
            Layer::CZ(bb) => {
                if QuadraticForm::new(bb).eval(&self.u) {
                    self.add_lambda(2);
                }
                let bu = bb.mul_vec(&self.u);
                self.v.xor_assign(&bu);
            }
            Layer::CX(a) => {
                let u = a.mul_vec(&self.u)?;
                let v = a.inverse()?.transpose().mul_vec(&self.v)?;
                self.u = u;
                self.v = v;
            }
            Layer::H => {
                if self.u.dot(&self.v) {
                    self.add_lambda(2);
                }
                std::mem::swap(&mut self.u, &mut self.v);
            }
        }
        Ok(())
    }

    /// Circuit for `X_u Z_v` plus the global phase `i^λ`.
    #[must_use]
    pub fn to_circuit(&self) -> (Circuit, PhaseOctant) {
        let n = self.n();
        let gates = self.v.iter_ones().map(Gate::Z).chain(self.u.iter_ones().map(Gate::X));
        let c = Circuit::from_gates(n, gates).expect("indices in range");
        (c, PhaseOctant::new(2 * i64::from(self.lambda)))
    }
}

impl fmt::Display for PauliTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "i^{} X_{} Z_{}", self.lambda, self.u, self.v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{octant, DenseUnitary};

    fn dense_of(p: &PauliTerm) -> DenseUnitary {
        let (c, k) = p.to_circuit();
        DenseUnitary::of(&c).unwrap().scaled(octant(k))
    }

    fn all_paulis(n: usize) -> Vec<PauliTerm> {
        let mut out = Vec::new();
        for bits in 0..(1u32 << (2 * n)) {
            let u = BitVec::from_bools(&(0..n).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>());
            let v = BitVec::from_bools(&(0..n).map(|i| bits >> (n + i) & 1 == 1).collect::<Vec<_>>());
            out.push(PauliTerm::new(0, u, v));
        }
        out
    }

    fn check_gate(n: usize, g: Gate) {
        let gc = Circuit::from_gates(n, [g]).unwrap();
        for p in all_paulis(n) {
            // dense(g P g⁻¹): apply g⁻¹, then P, then g.
            let mut c = gc.inverse();
            c.extend(&p.to_circuit().0).unwrap();
            c.extend(&gc).unwrap();
            let want = DenseUnitary::of(&c).unwrap();
            let mut q = p.clone();
            q.conj_by_gate(g);
            assert!(dense_of(&q).approx_eq(&want), "{g} on {p}");
        }
    }

    #[test]
    fn gate_conjugation_matches_oracle() {
        for g in [
            Gate::H(0),
            Gate::P(1),
            Gate::X(0),
            Gate::Y(1),
            Gate::Z(0),
            Gate::CX(0, 1),
            Gate::CX(1, 0),
            Gate::CZ(0, 1),
            Gate::SWAP(0, 1),
        ] {
            check_gate(2, g);
        }
    }

    #[test]
    fn multiplication_matches_oracle() {
        let ps = all_paulis(2);
        for a in &ps {
            for b in &ps {
                let mut c = b.to_circuit().0;
                c.extend(&a.to_circuit().0).unwrap();
                assert!(dense_of(&a.mul(b)).approx_eq(&DenseUnitary::of(&c).unwrap()), "{a} * {b}");
            }
        }
    }

    #[test]
    fn hadamard_layer_swaps_parts_with_sign() {
        let mut p = PauliTerm::new(0, "1".parse().unwrap(), "1".parse().unwrap());
        p.conj_by_layer(Layer::H).unwrap();
        assert_eq!(p.lambda, 2);
        let mut q = PauliTerm::new(0, "10".parse().unwrap(), "01".parse().unwrap());
        q.conj_by_layer(Layer::H).unwrap();
        assert_eq!(q, PauliTerm::new(0, "01".parse().unwrap(), "10".parse().unwrap()));
    }
}
