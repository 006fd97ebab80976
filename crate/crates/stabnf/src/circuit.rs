//! Clifford circuits over `{H, P, X, Y, Z, CX, CZ, SWAP}`.
//!
//! Gates are stored in application order: `gates[0]` acts on the input
//! ket first, so the circuit is the operator `g_{ℓ-1} ⋯ g_1 g_0`.
//! `CX(i, j)` is the CNOT with target `i` and control `j`, mapping
//! `|x⟩ ↦ |[ij]x⟩`.
//!
//! Text format: a mandatory `qubits n` header, then one gate per line
//! (`H i`, `P i`, `X i`, `Y i`, `Z i`, `CX i j`, `CZ i j`, `SWAP i j`).
//! `#` starts a comment.

use std::fmt;
use std::ops::{Add, AddAssign};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf2::Transvection;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CircuitError {
    #[error("qubit {index} out of range for {n} qubits")]
    QubitOutOfRange { index: usize, n: usize },
    #[error("two-qubit gate {0} acts twice on the same qubit")]
    RepeatedQubit(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Gate {
    H(usize),
    P(usize),
    X(usize),
    Y(usize),
    Z(usize),
    /// `CX(target, control)`.
    CX(usize, usize),
    CZ(usize, usize),
    SWAP(usize, usize),
}

impl Gate {
    #[must_use]
    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            Gate::H(q) | Gate::P(q) | Gate::X(q) | Gate::Y(q) | Gate::Z(q) => vec![q],
            Gate::CX(a, b) | Gate::CZ(a, b) | Gate::SWAP(a, b) => vec![a, b],
        }
    }

    #[must_use]
    pub fn is_two_qubit(&self) -> bool {
        matches!(self, Gate::CX(..) | Gate::CZ(..) | Gate::SWAP(..))
    }

    #[must_use]
    pub fn mnemonic(&self) -> &'static str {
        match self {
            Gate::H(_) => "H",
            Gate::P(_) => "P",
            Gate::X(_) => "X",
            Gate::Y(_) => "Y",
            Gate::Z(_) => "Z",
            Gate::CX(..) => "CX",
            Gate::CZ(..) => "CZ",
            Gate::SWAP(..) => "SWAP",
        }
    }

    #[must_use]
    pub fn cx(t: Transvection) -> Gate {
        Gate::CX(t.target, t.control)
    }

    fn validate(&self, n: usize) -> Result<(), CircuitError> {
        let qs = self.qubits();
        for &index in &qs {
            if index >= n {
                return Err(CircuitError::QubitOutOfRange { index, n });
            }
        }
        if qs.len() == 2 && qs[0] == qs[1] {
            return Err(CircuitError::RepeatedQubit(self.to_string()));
        }
        Ok(())
    }

    /// The inverse gate as a short gate sequence in application order.
    #[must_use]
    pub fn inverse(&self) -> Vec<Gate> {
        match *self {
            Gate::P(q) => vec![Gate::P(q); 3],
            g => vec![g],
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gate::H(q) | Gate::P(q) | Gate::X(q) | Gate::Y(q) | Gate::Z(q) => write!(f, "{} {q}", self.mnemonic()),
            Gate::CX(a, b) | Gate::CZ(a, b) | Gate::SWAP(a, b) => write!(f, "{} {a} {b}", self.mnemonic()),
        }
    }
}

/// A global phase `e^{ikπ/4}`, stored as `k mod 8`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PhaseOctant(u8);

impl PhaseOctant {
    pub const ZERO: PhaseOctant = PhaseOctant(0);

    #[must_use]
    pub fn new(k: i64) -> Self {
        PhaseOctant(k.rem_euclid(8) as u8)
    }

    #[must_use]
    pub fn k(self) -> u8 {
        self.0
    }

    #[must_use]
    pub fn radians(self) -> f64 {
        f64::from(self.0) * std::f64::consts::FRAC_PI_4
    }
}

impl Add for PhaseOctant {
    type Output = PhaseOctant;
    fn add(self, rhs: PhaseOctant) -> PhaseOctant {
        PhaseOctant((self.0 + rhs.0) % 8)
    }
}

impl AddAssign<u8> for PhaseOctant {
    fn add_assign(&mut self, rhs: u8) {
        self.0 = (self.0 + rhs % 8) % 8;
    }
}

impl fmt::Display for PhaseOctant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·π/4", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Circuit {
    n: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    #[must_use]
    pub fn new(n: usize) -> Self {
        Self { n, gates: Vec::new() }
    }

    pub fn from_gates(n: usize, gates: impl IntoIterator<Item = Gate>) -> Result<Self, CircuitError> {
        let mut c = Self::new(n);
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    #[must_use]
    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.gates.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, g: Gate) -> Result<(), CircuitError> {
        g.validate(self.n)?;
        self.gates.push(g);
        Ok(())
    }

    pub fn pop(&mut self) -> Option<Gate> {
        self.gates.pop()
    }

    /// Appends `other`, which is applied after `self`.
    pub fn extend(&mut self, other: &Circuit) -> Result<(), CircuitError> {
        for &g in other.gates() {
            self.push(g)?;
        }
        Ok(())
    }

    #[must_use]
    pub fn two_qubit_count(&self) -> usize {
        self.gates.iter().filter(|g| g.is_two_qubit()).count()
    }

    /// The inverse circuit (up to nothing: `P⁻¹` is emitted as `P³`).
    #[must_use]
    pub fn inverse(&self) -> Circuit {
        let gates = self.gates.iter().rev().flat_map(Gate::inverse).collect();
        Circuit { n: self.n, gates }
    }

    /// Rewrites into `{H, P, CX}` with exactly the same unitary:
    /// `Z = P²`, `X = H P² H`, `Y = P H P² H P³`, `CZ_ij = H_i CX_ij H_i`,
    /// `SWAP = CX_ij CX_ji CX_ij`.
    #[must_use]
    pub fn desugar(&self) -> Circuit {
        let mut gates = Vec::with_capacity(self.gates.len());
        for &g in &self.gates {
            match g {
                Gate::Z(q) => gates.extend([Gate::P(q); 2]),
                Gate::X(q) => gates.extend([Gate::H(q), Gate::P(q), Gate::P(q), Gate::H(q)]),
                // Operator P H P² H P³, so P³ is applied first.
                Gate::Y(q) => gates.extend([
                    Gate::P(q),
                    Gate::P(q),
                    Gate::P(q),
                    Gate::H(q),
                    Gate::P(q),
                    Gate::P(q),
                    Gate::H(q),
                    Gate::P(q),
                ]),
                Gate::CZ(i, j) => gates.extend([Gate::H(i), Gate::CX(i, j), Gate::H(i)]),
                Gate::SWAP(i, j) => gates.extend([Gate::CX(i, j), Gate::CX(j, i), Gate::CX(i, j)]),
                g => gates.push(g),
            }
        }
        Circuit { n: self.n, gates }
    }

    pub fn parse(text: &str) -> Result<Circuit, ParseError> {
        let mut circuit: Option<Circuit> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let err = |msg: String| ParseError { line, msg };
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let toks: Vec<&str> = body.split_whitespace().collect();
            let Some(c) = circuit.as_mut() else {
                if !toks[0].eq_ignore_ascii_case("qubits") {
                    return Err(err("missing qubits header".into()));
                }
                if toks.len() != 2 {
                    return Err(err("expected `qubits n`".into()));
                }
                let n = toks[1].parse().map_err(|_| err(format!("bad qubit count {:?}", toks[1])))?;
                circuit = Some(Circuit::new(n));
                continue;
            };
            let args: Result<Vec<usize>, _> = toks[1..].iter().map(|t| t.parse::<usize>()).collect();
            let args = args.map_err(|_| err(format!("bad qubit index in {body:?}")))?;
            let arity = |k: usize| {
                if args.len() == k {
                    Ok(())
                } else {
                    Err(err(format!("{} takes {k} qubit(s), got {}", toks[0], args.len())))
                }
            };
            let gate = match toks[0].to_ascii_uppercase().as_str() {
                m @ ("H" | "P" | "S" | "X" | "Y" | "Z") => {
                    arity(1)?;
                    let q = args[0];
                    match m {
                        "H" => Gate::H(q),
                        "P" | "S" => Gate::P(q),
                        "X" => Gate::X(q),
                        "Y" => Gate::Y(q),
                        _ => Gate::Z(q),
                    }
                }
                m @ ("CX" | "CNOT" | "CZ" | "SWAP") => {
                    arity(2)?;
                    let (a, b) = (args[0], args[1]);
                    match m {
                        "CZ" => Gate::CZ(a, b),
                        "SWAP" => Gate::SWAP(a, b),
                        _ => Gate::CX(a, b),
                    }
                }
                "QUBITS" => return Err(err("duplicate qubits header".into())),
                other => return Err(err(format!("unknown gate {other:?}"))),
            };
            c.push(gate).map_err(|e| err(e.to_string()))?;
        }
        circuit.ok_or(ParseError { line: 0, msg: "missing qubits header".into() })
    }

    /// Canonical text serialization; `parse(serialize(c)) == c`.
    #[must_use]
    pub fn serialize(&self) -> String {
        let mut s = format!("qubits {}\n", self.n);
        for g in &self.gates {
            s.push_str(&g.to_string());
            s.push('\n');
        }
        s
    }

    /// OpenQASM 2.0. `CX(i, j)` becomes `cx q[j],q[i]` (control first).
    #[must_use]
    pub fn to_qasm(&self, phase: Option<PhaseOctant>) -> String {
        let mut s = String::from("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
        if let Some(p) = phase {
            s.push_str(&format!("// global phase e^(i*{}*pi/4)\n", p.k()));
        }
        s.push_str(&format!("qreg q[{}];\n", self.n));
        for g in &self.gates {
            let line = match *g {
                Gate::H(q) => format!("h q[{q}];"),
                Gate::P(q) => format!("s q[{q}];"),
                Gate::X(q) => format!("x q[{q}];"),
                Gate::Y(q) => format!("y q[{q}];"),
                Gate::Z(q) => format!("z q[{q}];"),
                Gate::CX(t, c) => format!("cx q[{c}],q[{t}];"),
                Gate::CZ(a, b) => format!("cz q[{a}],q[{b}];"),
                Gate::SWAP(a, b) => format!("swap q[{a}],q[{b}];"),
            };
            s.push_str(&line);
            s.push('\n');
        }
        s
    }

    #[must_use]
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("circuit serializes")
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gates.iter().map(Gate::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}
