//! Normal form `Z_v P_b Z_B X_A` for circuits over `{P, CZ, CX}`.
//!
//! Left-multiplying a form by one gate only touches the layers in closed
//! form, so a circuit of length ℓ on n qubits normalizes in `O(ℓn)`.

use std::fmt;

use serde_json::json;
use thiserror::Error;

use crate::circuit::{Circuit, Gate};
use crate::gf2::{BitMat, BitVec, Gf2Error, SymZeroDiag, Transvection};
use crate::synth::{self, SynthMethod};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PzxError {
    #[error("gate {0} is outside the {{P, Z, CZ, CX, SWAP}} set")]
    UnsupportedGate(Gate),
    #[error("form has {form} qubits but circuit has {circuit}")]
    SizeMismatch { form: usize, circuit: usize },
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
    #[error(transparent)]
    Synth(#[from] synth::SynthError),
}

/// `Z_v P_b Z_B X_A`. The CX part is kept as the matrix `A`; when the form
/// was built from the identity the consumed CNOTs are kept too, in
/// application order.
#[derive(Clone)]
pub struct PzxForm {
    pub v: BitVec,
    pub b: BitVec,
    pub bb: SymZeroDiag,
    pub a: BitMat,
    applied: Option<Vec<Transvection>>,
}

impl PartialEq for PzxForm {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v && self.b == other.b && self.bb == other.bb && self.a == other.a
    }
}
impl Eq for PzxForm {}

impl std::hash::Hash for PzxForm {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.v.hash(state);
        self.b.hash(state);
        self.bb.hash(state);
        self.a.hash(state);
    }
}

impl PzxForm {
    /// The identity form, tracking the transvection word.
    #[must_use]
    pub fn identity(n: usize) -> Self {
        let mut f = Self::untracked(n);
        f.applied = Some(Vec::new());
        f
    }

    /// The identity form without word tracking (constant memory per gate).
    #[must_use]
    pub fn untracked(n: usize) -> Self {
        Self {
            v: BitVec::zeros(n),
            b: BitVec::zeros(n),
            bb: SymZeroDiag::zeros(n),
            a: BitMat::identity(n),
            applied: None,
        }
    }

    /// A purely diagonal form `Z_v P_b Z_B`.
    #[must_use]
    pub fn diagonal(v: BitVec, b: BitVec, bb: SymZeroDiag) -> Self {
        let n = v.len();
        Self { v, b, bb, a: BitMat::identity(n), applied: Some(Vec::new()) }
    }

    #[must_use]
    pub fn n(&self) -> usize {
        self.v.len()
    }

    /// Transvection word whose product is `A` (leftmost factor first), if tracked.
    #[must_use]
    pub fn word(&self) -> Option<Vec<Transvection>> {
        self.applied.as_ref().map(|w| w.iter().rev().copied().collect())
    }

    /// `F ← X_[ij]·F`:
    /// `v ← [ji]v ⊕ b_i b_j e_j ⊕ B_ij e_j`, `B ← [ji]B[ij] ⊕ b_i{{i,j}}`,
    /// `b ← [ji]b`, `A ← [ij]A`, all right-hand sides on old values.
    pub fn left_mul_cx(&mut self, t: Transvection) -> Result<(), Gf2Error> {
        self.a.transvect_left(t)?;
        let (i, j) = (t.target, t.control);
        let (bi, bj, bij) = (self.b.get(i), self.b.get(j), self.bb.get(i, j));
        self.v.transvect(t.transpose());
        if (bi && bj) ^ bij {
            self.v.flip(j);
        }
        self.bb.congruence(t)?;
        if bi {
            self.bb.toggle(i, j)?;
        }
        self.b.transvect(t.transpose());
        if let Some(w) = self.applied.as_mut() {
            w.push(t);
        }
        Ok(())
    }

    /// `F ← P_i·F`: `v ^= b_i e_i`, `b ^= e_i`.
    pub fn left_mul_p(&mut self, i: usize) {
        if self.b.get(i) {
            self.v.flip(i);
        }
        self.b.flip(i);
    }

    /// `F ← g·F` for `g` in `{P, Z, CZ, CX, SWAP}`.
    pub fn left_mul_gate(&mut self, g: Gate) -> Result<(), PzxError> {
        let n = self.n();
        for index in g.qubits() {
            if index >= n {
                return Err(Gf2Error::IndexOutOfRange { index, n }.into());
            }
        }
        match g {
            Gate::P(i) => self.left_mul_p(i),
            Gate::Z(i) => self.v.flip(i),
            Gate::CZ(i, j) => self.bb.toggle(i, j)?,
            Gate::CX(i, j) => self.left_mul_cx(Transvection::new(i, j)?)?,
            Gate::SWAP(i, j) => {
                let t = Transvection::new(i, j)?;
                self.left_mul_cx(t)?;
                self.left_mul_cx(t.transpose())?;
                self.left_mul_cx(t)?;
            }
            Gate::H(_) | Gate::X(_) | Gate::Y(_) => return Err(PzxError::UnsupportedGate(g)),
        }
        Ok(())
    }

    /// `F ← (Z_v P_b Z_B)·F`, using
    /// `Z_v P_b Z_B · Z_v' P_b' Z_B' = Z_{v⊕v'⊕b⊙b'} P_{b⊕b'} Z_{B⊕B'}`.
    pub fn left_mul_diag(&mut self, v: &BitVec, b: &BitVec, bb: &SymZeroDiag) {
        self.v.xor_assign(v);
        self.v.xor_assign(&b.and(&self.b));
        self.b.xor_assign(b);
        self.bb.xor_assign(bb);
    }

    /// Conjugation by the swap `(ij)` on every layer, with the trailing swap
    /// absorbed into `A`: `X_(ij) F X_(ij)·X_(ij) = Z_{(ij)v} P_{(ij)b} Z_{(ij)B(ij)} X_{(ij)A}`.
    pub fn left_mul_swap_perm(&mut self, i: usize, j: usize) {
        self.v.swap(i, j);
        self.b.swap(i, j);
        self.bb.swap_indices(i, j);
        self.a.swap_rows(i, j);
        if let Some(w) = self.applied.as_mut() {
            let t = Transvection { target: i, control: j };
            w.extend([t, t.transpose(), t]);
        }
    }

    /// Emits `X_A` (synthesized), then `Z_B`, `P_b`, `Z_v`, in application order.
    pub fn to_circuit(&self, method: SynthMethod) -> Result<Circuit, PzxError> {
        let word = synth::a_to_x(&self.a, method)?;
        let mut c = Circuit::new(self.n());
        push_word(&mut c, &word);
        push_diag(&mut c, &self.v, &self.b, &self.bb);
        Ok(c)
    }

    /// Like [`PzxForm::to_circuit`] but replays the recorded CNOTs instead of
    /// synthesizing `A`. Returns `None` for untracked forms.
    #[must_use]
    pub fn to_circuit_recorded(&self) -> Option<Circuit> {
        let applied = self.applied.as_ref()?;
        let mut c = Circuit::new(self.n());
        for &t in applied {
            c.push(Gate::cx(t)).expect("indices in range");
        }
        push_diag(&mut c, &self.v, &self.b, &self.bb);
        Some(c)
    }

    #[must_use]
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "v": self.v.to_string(),
            "b": self.b.to_string(),
            "B": self.bb.edges(),
            "A": self.a.rows().iter().map(ToString::to_string).collect::<Vec<_>>(),
        })
    }
}

/// Appends `X_{t_1} ⋯ X_{t_k}` (operator order), i.e. `t_k` first.
pub(crate) fn push_word(c: &mut Circuit, word: &[Transvection]) {
    for &t in word.iter().rev() {
        c.push(Gate::cx(t)).expect("indices in range");
    }
}

/// Appends `Z_v P_b Z_B`.
pub(crate) fn push_diag(c: &mut Circuit, v: &BitVec, b: &BitVec, bb: &SymZeroDiag) {
    for (i, j) in bb.edges() {
        c.push(Gate::CZ(i, j)).expect("indices in range");
    }
    for i in b.iter_ones() {
        c.push(Gate::P(i)).expect("indices in range");
    }
    for i in v.iter_ones() {
        c.push(Gate::Z(i)).expect("indices in range");
    }
}

impl fmt::Debug for PzxForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PzxForm {{ v: {}, b: {}, B: {}, A: {:?} }}", self.v, self.b, self.bb, self.a)
    }
}

impl fmt::Display for PzxForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "v: {}", self.v)?;
        writeln!(f, "b: {}", self.b)?;
        writeln!(f, "B: {}", self.bb)?;
        write!(f, "A:")?;
        for r in self.a.rows() {
            write!(f, " {r}")?;
        }
        Ok(())
    }
}

/// Number of distinct PZX forms on `n` qubits reachable from the identity by
/// left multiplication with P, CZ and CX (BFS over the tuples).
pub fn form_group_order(n: usize) -> usize {
    let mut gens: Vec<Gate> = (0..n).map(Gate::P).collect();
    for i in 0..n {
        for j in 0..n {
            if i < j {
                gens.push(Gate::CZ(i, j));
            }
            if i != j {
                gens.push(Gate::CX(i, j));
            }
        }
    }
    let start = PzxForm::untracked(n);
    let mut seen = std::collections::HashSet::from([start.clone()]);
    let mut frontier = vec![start];
    while let Some(f) = frontier.pop() {
        for &g in &gens {
            let mut h = f.clone();
            h.left_mul_gate(g).expect("generators are PZX gates");
            if !seen.contains(&h) {
                seen.insert(h.clone());
                frontier.push(h);
            }
        }
    }
    seen.len()
}

/// `C·F_in`, consuming the gates of `C` in application order.
pub fn c_to_pzx(c: &Circuit, f_in: &PzxForm) -> Result<PzxForm, PzxError> {
    if c.n() != f_in.n() {
        return Err(PzxError::SizeMismatch { form: f_in.n(), circuit: c.n() });
    }
    let mut f = f_in.clone();
    for &g in c.gates() {
        f.left_mul_gate(g)?;
    }
    Ok(f)
}

/// Normal form of a `{P, Z, CZ, CX, SWAP}` circuit.
pub fn normalize(c: &Circuit) -> Result<PzxForm, PzxError> {
    c_to_pzx(c, &PzxForm::identity(c.n()))
}

/// The form of the product `F·G`.
pub fn compose(f: &PzxForm, g: &PzxForm) -> Result<PzxForm, PzxError> {
    let circuit = f.to_circuit(SynthMethod::Gauss)?;
    let mut out = c_to_pzx(&circuit, g)?;
    out.applied = match (&f.applied, &g.applied) {
        (Some(wf), Some(wg)) => Some(wg.iter().chain(wf).copied().collect()),
        _ => None,
    };
    Ok(out)
}
