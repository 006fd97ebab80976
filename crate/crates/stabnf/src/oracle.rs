//! Dense unitary and state-vector simulation, used as ground truth.
//!
//! Basis index of `|x⟩` is `Σ x_i 2^{n-1-i}`: qubit 0 is the most
//! significant bit. Exponential in `n`, so every entry point checks a
//! qubit cap (default 12, override with `STABNF_ORACLE_CAP`).

use num_complex::Complex64;
use thiserror::Error;

use crate::circuit::{Circuit, Gate, PhaseOctant};

pub const DEFAULT_CAP: usize = 12;
pub const TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("{n} qubits exceeds the oracle cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("qubit counts differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
}

/// The active qubit cap, honouring `STABNF_ORACLE_CAP`.
#[must_use]
pub fn cap() -> usize {
    std::env::var("STABNF_ORACLE_CAP").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_CAP)
}

fn check_cap(n: usize) -> Result<(), OracleError> {
    let cap = cap();
    if n > cap {
        return Err(OracleError::CapExceeded { n, cap });
    }
    Ok(())
}

#[inline]
fn mask(n: usize, q: usize) -> usize {
    1 << (n - 1 - q)
}

/// Applies `g` in place to an amplitude vector of `2^n` entries.
fn apply_gate(n: usize, amps: &mut [Complex64], g: Gate) {
    let i_unit = Complex64::new(0.0, 1.0);
    let s = std::f64::consts::FRAC_1_SQRT_2;
    match g {
        Gate::H(q) => {
            let m = mask(n, q);
            for x in 0..amps.len() {
                if x & m == 0 {
                    let (a, b) = (amps[x], amps[x | m]);
                    amps[x] = (a + b) * s;
                    amps[x | m] = (a - b) * s;
                }
            }
        }
        Gate::P(q) | Gate::Z(q) => {
            let m = mask(n, q);
            let f = if matches!(g, Gate::P(_)) { i_unit } else { Complex64::new(-1.0, 0.0) };
            for (x, a) in amps.iter_mut().enumerate() {
                if x & m != 0 {
                    *a *= f;
                }
            }
        }
        Gate::X(q) => {
            let m = mask(n, q);
            for x in 0..amps.len() {
                if x & m == 0 {
                    amps.swap(x, x | m);
                }
            }
        }
        Gate::Y(q) => {
            // Y|0⟩ = i|1⟩, Y|1⟩ = -i|0⟩
            let m = mask(n, q);
            for x in 0..amps.len() {
                if x & m == 0 {
                    let (a0, a1) = (amps[x], amps[x | m]);
                    amps[x] = -i_unit * a1;
                    amps[x | m] = i_unit * a0;
                }
            }
        }
        Gate::CX(t, c) => {
            let (mt, mc) = (mask(n, t), mask(n, c));
            for x in 0..amps.len() {
                if x & mc != 0 && x & mt == 0 {
                    amps.swap(x, x | mt);
                }
            }
        }
        Gate::CZ(a, b) => {
            let m = mask(n, a) | mask(n, b);
            for (x, amp) in amps.iter_mut().enumerate() {
                if x & m == m {
                    *amp = -*amp;
                }
            }
        }
        Gate::SWAP(a, b) => {
            let (ma, mb) = (mask(n, a), mask(n, b));
            for x in 0..amps.len() {
                if x & ma != 0 && x & mb == 0 {
                    amps.swap(x, (x & !ma) | mb);
                }
            }
        }
    }
}

/// A `2^n × 2^n` unitary stored column by column.
#[derive(Clone, Debug)]
pub struct DenseUnitary {
    n: usize,
    cols: Vec<Vec<Complex64>>,
}

impl DenseUnitary {
    pub fn identity(n: usize) -> Result<Self, OracleError> {
        check_cap(n)?;
        let dim = 1usize << n;
        let cols = (0..dim)
            .map(|c| {
                let mut col = vec![Complex64::new(0.0, 0.0); dim];
                col[c] = Complex64::new(1.0, 0.0);
                col
            })
            .collect();
        Ok(Self { n, cols })
    }

    /// The operator implemented by `c`.
    pub fn of(c: &Circuit) -> Result<Self, OracleError> {
        let mut u = Self::identity(c.n())?;
        u.apply(c);
        Ok(u)
    }

    /// Left-multiplies by the gates of `c` in application order.
    pub fn apply(&mut self, c: &Circuit) {
        assert_eq!(c.n(), self.n, "qubit count mismatch");
        for col in &mut self.cols {
            for &g in c.gates() {
                apply_gate(self.n, col, g);
            }
        }
    }

    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `⟨row|U|col⟩`.
    #[must_use]
    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.cols[col][row]
    }

    #[must_use]
    pub fn scaled(&self, z: Complex64) -> Self {
        let cols = self.cols.iter().map(|c| c.iter().map(|a| a * z).collect()).collect();
        Self { n: self.n, cols }
    }

    /// `max |self - other|` entrywise.
    #[must_use]
    pub fn distance(&self, other: &DenseUnitary) -> f64 {
        self.cols
            .iter()
            .zip(&other.cols)
            .flat_map(|(a, b)| a.iter().zip(b).map(|(x, y)| (x - y).norm()))
            .fold(0.0, f64::max)
    }

    #[must_use]
    pub fn approx_eq(&self, other: &DenseUnitary) -> bool {
        self.n == other.n && self.distance(other) < TOLERANCE
    }
}

/// Number of distinct unitaries generated by `gens` (all on the same qubit
/// count), found by BFS with entries rounded to a 1e-6 grid for hashing.
pub fn dense_closure_size(gens: &[Circuit]) -> Result<usize, OracleError> {
    let Some(first) = gens.first() else { return Ok(1) };
    let key = |u: &DenseUnitary| -> Vec<(i64, i64)> {
        u.cols.iter().flatten().map(|z| ((z.re * 1e6).round() as i64, (z.im * 1e6).round() as i64)).collect()
    };
    let start = DenseUnitary::identity(first.n())?;
    let mut seen = std::collections::HashSet::from([key(&start)]);
    let mut frontier = vec![start];
    while let Some(u) = frontier.pop() {
        for g in gens {
            let mut w = u.clone();
            w.apply(g);
            if seen.insert(key(&w)) {
                frontier.push(w);
            }
        }
    }
    Ok(seen.len())
}

/// `e^{ikπ/4}`.
#[must_use]
pub fn octant(k: PhaseOctant) -> Complex64 {
    Complex64::from_polar(1.0, k.radians())
}

/// Checks `dense(a) = e^{ikπ/4}·dense(b)` for some `k` and returns that `k`.
pub fn equal_up_to_octant_phase(a: &Circuit, b: &Circuit) -> Result<Option<PhaseOctant>, OracleError> {
    if a.n() != b.n() {
        return Err(OracleError::SizeMismatch(a.n(), b.n()));
    }
    let (ua, ub) = (DenseUnitary::of(a)?, DenseUnitary::of(b)?);
    Ok(unitaries_equal_up_to_octant(&ua, &ub))
}

/// As [`equal_up_to_octant_phase`] for prebuilt unitaries.
#[must_use]
pub fn unitaries_equal_up_to_octant(ua: &DenseUnitary, ub: &DenseUnitary) -> Option<PhaseOctant> {
    (0..8).map(PhaseOctant::new).find(|&k| ua.approx_eq(&ub.scaled(octant(k))))
}

/// State vector of `c|0…0⟩`.
pub fn state_of(c: &Circuit) -> Result<Vec<Complex64>, OracleError> {
    check_cap(c.n())?;
    let mut amps = vec![Complex64::new(0.0, 0.0); 1 << c.n()];
    amps[0] = Complex64::new(1.0, 0.0);
    for &g in c.gates() {
        apply_gate(c.n(), &mut amps, g);
    }
    Ok(amps)
}

/// Whether two states agree up to a global phase (any phase, not only octants).
#[must_use]
pub fn states_equal_up_to_phase(a: &[Complex64], b: &[Complex64]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let inner: Complex64 = a.iter().zip(b).map(|(x, y)| x.conj() * y).sum();
    let na: f64 = a.iter().map(|x| x.norm_sqr()).sum();
    let nb: f64 = b.iter().map(|x| x.norm_sqr()).sum();
    (inner.norm() - (na * nb).sqrt()).abs() < TOLERANCE
}
