//! Normal forms for Clifford circuits.
//!
//! * [`pzx`]: circuits over `{P, CZ, CX}` collapse to `Z_v P_b Z_B X_A`.
//! * [`genpzx`]: arbitrary Clifford circuits collapse to
//!   `e^{iφ} H_r Z_u P_d Z_D H_s Z_v P_b Z_B X_A`.
//! * [`graphstate`]: graph states `Z_B|+⟩` are re-prepared as
//!   `Z_v X_A Z_{B_red}|+⟩`, often with fewer two-qubit gates.
//!
//! Everything is checked against the dense simulator in [`oracle`].

pub mod circuit;
pub mod cli;
pub mod genpzx;
pub mod gf2;
pub mod graphstate;
pub mod identities;
pub mod oracle;
pub mod pauli;
pub mod pzx;
pub mod synth;

pub use circuit::{Circuit, Gate, PhaseOctant};
pub use gf2::{BitMat, BitVec, SymZeroDiag, Transvection};
