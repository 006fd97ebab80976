//! Cheaper preparation of graph states.
//!
//! The graph state `|G⟩ = Z_B|+⟩` needs one CZ per edge. Congruence by
//! transvections reduces `B` to a sparse `B_red = AᵀBA`, and then
//! `|G⟩ = Z_v X_A Z_{B_red}|+⟩` with `v = q_{B_red}(A⁻¹)`. The two-qubit cost
//! becomes `|B_red| + |word(A)|`, which is often smaller than `|B|`.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::circuit::{Circuit, Gate};
use crate::gf2::{BitMat, BitVec, Gf2Error, QuadraticForm, SymZeroDiag, Transvection};
use crate::pzx::push_word;
use crate::synth::{self, SynthError, SynthMethod};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("{edges} edges requested but K_{n} has only {max}")]
    TooManyEdges { n: usize, edges: usize, max: usize },
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
    #[error(transparent)]
    Synth(#[from] SynthError),
}

/// Reduces `B` by congruence. Returns `(B_red, A)` with `AᵀBA = B_red`.
///
/// For each column `j`, the first row `p` holding a one in column `j` becomes
/// a pivot; the other ones in column `j` below `p` are cleared with
/// `[rp]·B·[pr]`, then the ones in row `p` right of `j` with `[cj]·B·[jc]`.
pub fn b_to_b_red(b: &SymZeroDiag) -> (SymZeroDiag, BitMat) {
    let n = b.n();
    let mut red = b.clone();
    let mut a = BitMat::identity(n);
    let mut pivot = vec![false; n];
    for j in 0..n.saturating_sub(1) {
        if pivot[j] {
            continue;
        }
        let Some(p) = (0..n).find(|&i| red.get(i, j)) else {
            continue;
        };
        pivot[p] = true;
        for r in p + 1..n {
            if red.get(r, j) {
                let t = Transvection { target: p, control: r };
                red.congruence(t).expect("in range");
                a.transvect_right(t).expect("in range");
            }
        }
        for c in j + 1..n {
            if red.get(p, c) {
                let t = Transvection { target: j, control: c };
                red.congruence(t).expect("in range");
                a.transvect_right(t).expect("in range");
            }
        }
    }
    (red, a)
}

/// `|G⟩ = Z_v X_A Z_{B_red}|+⟩` with `A` given as a transvection word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphStateForm {
    pub v: BitVec,
    pub a: BitMat,
    pub word: Vec<Transvection>,
    pub b_red: SymZeroDiag,
    /// Edge count of the input graph.
    pub original_edges: usize,
}

impl GraphStateForm {
    #[must_use]
    pub fn n(&self) -> usize {
        self.v.len()
    }

    /// Two-qubit gates of the reduced preparation, `|B_red| + |word|`.
    #[must_use]
    pub fn two_qubit_count(&self) -> usize {
        self.b_red.edge_count() + self.word.len()
    }

    /// `max(ℓ - ℓ', 0) / ℓ` as a fraction in `[0, 1]` (0 for the empty graph).
    #[must_use]
    pub fn gain(&self) -> f64 {
        gain(self.original_edges, self.two_qubit_count())
    }

    /// `h`, then `Z_{B_red}`, then `X_A`, then `Z_v`.
    #[must_use]
    pub fn to_circuit(&self) -> Circuit {
        let n = self.n();
        let mut c = plus_layer(n);
        for (i, j) in self.b_red.edges() {
            c.push(Gate::CZ(i, j)).expect("in range");
        }
        push_word(&mut c, &self.word);
        for i in self.v.iter_ones() {
            c.push(Gate::Z(i)).expect("in range");
        }
        c
    }
}

/// Gain of replacing `l` two-qubit gates by `l_red`; never negative because
/// the original circuit is kept when the reduction does not pay off.
#[must_use]
pub fn gain(l: usize, l_red: usize) -> f64 {
    if l == 0 {
        return 0.0;
    }
    l.saturating_sub(l_red) as f64 / l as f64
}

fn plus_layer(n: usize) -> Circuit {
    Circuit::from_gates(n, (0..n).map(Gate::H)).expect("in range")
}

/// The direct preparation `Z_B|+⟩`, one CZ per edge.
#[must_use]
pub fn graph_state_circuit(b: &SymZeroDiag) -> Circuit {
    let mut c = plus_layer(b.n());
    for (i, j) in b.edges() {
        c.push(Gate::CZ(i, j)).expect("in range");
    }
    c
}

pub fn reduce_graph_state(b: &SymZeroDiag, method: SynthMethod) -> Result<GraphStateForm, GraphError> {
    let (b_red, a) = b_to_b_red(b);
    let a_inv = a.inverse()?;
    let v = QuadraticForm::new(&b_red).of_columns(&a_inv);
    let word = synth::a_to_x(&a, method)?;
    Ok(GraphStateForm { v, a, word, b_red, original_edges: b.edge_count() })
}

/// Whichever of the direct and reduced preparations uses fewer two-qubit gates.
pub fn best_circuit(b: &SymZeroDiag, method: SynthMethod) -> Result<Circuit, GraphError> {
    let form = reduce_graph_state(b, method)?;
    if form.two_qubit_count() < b.edge_count() {
        Ok(form.to_circuit())
    } else {
        Ok(graph_state_circuit(b))
    }
}

/// Number of unordered pairs on `n` vertices.
#[must_use]
pub fn max_edges(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// A graph drawn uniformly among those with exactly `edges` edges.
pub fn random_graph(n: usize, edges: usize, rng: &mut impl rand::Rng) -> Result<SymZeroDiag, GraphError> {
    let max = max_edges(n);
    if edges > max {
        return Err(GraphError::TooManyEdges { n, edges, max });
    }
    let mut g = SymZeroDiag::zeros(n);
    for idx in sample(rng, max, edges) {
        let (i, j) = pair_of_index(n, idx);
        g.toggle(i, j)?;
    }
    Ok(g)
}

/// The `idx`-th pair `(i, j)`, `i < j`, in lexicographic order.
fn pair_of_index(n: usize, mut idx: usize) -> (usize, usize) {
    for i in 0..n {
        let row = n - 1 - i;
        if idx < row {
            return (i, i + 1 + idx);
        }
        idx -= row;
    }
    unreachable!("pair index out of range")
}

/// Summary of the gain over random graphs, percentages in `[0, 100]`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GainStats {
    pub n: usize,
    pub edges: usize,
    pub samples: usize,
    pub mean_gain_pct: f64,
    pub stddev: f64,
    pub min: f64,
    pub max: f64,
    pub seed: u64,
}

impl GainStats {
    pub const CSV_HEADER: &'static str = "n,edges,samples,mean_gain_pct,stddev,min,max,seed";

    #[must_use]
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{:.2},{:.2},{:.2},{:.2},{}",
            self.n, self.edges, self.samples, self.mean_gain_pct, self.stddev, self.min, self.max, self.seed
        )
    }

    #[must_use]
    pub fn markdown_row(&self) -> String {
        format!(
            "| {} | {} | {} | {:.2} | {:.2} | {:.2} | {:.2} | {} |",
            self.n, self.edges, self.samples, self.mean_gain_pct, self.stddev, self.min, self.max, self.seed
        )
    }
}

/// Gain statistics over `samples` uniform random graphs with `n` vertices and
/// `edges` edges. Sample `k` uses ChaCha8 seeded with `seed` on stream `k`, so
/// results do not depend on thread scheduling.
pub fn gain_stats(n: usize, edges: usize, samples: usize, seed: u64, method: SynthMethod) -> Result<GainStats, GraphError> {
    let max = max_edges(n);
    if edges > max {
        return Err(GraphError::TooManyEdges { n, edges, max });
    }
    let gains: Vec<f64> = (0..samples)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k as u64);
            let g = random_graph(n, edges, &mut rng)?;
            Ok(100.0 * reduce_graph_state(&g, method)?.gain())
        })
        .collect::<Result<_, GraphError>>()?;
    let count = gains.len().max(1) as f64;
    let mean = gains.iter().sum::<f64>() / count;
    let var = gains.iter().map(|g| (g - mean).powi(2)).sum::<f64>() / count;
    Ok(GainStats {
        n,
        edges,
        samples,
        mean_gain_pct: mean,
        stddev: var.sqrt(),
        min: if gains.is_empty() { 0.0 } else { gains.iter().copied().fold(f64::INFINITY, f64::min) },
        max: gains.iter().copied().fold(0.0, f64::max),
        seed,
    })
}
