//! CNOT synthesis: turn an invertible `A` into a transvection word
//! `[t_1, …, t_k]` with `t_1 ⋯ t_k = A`, so that `X_A = X_{t_1} ⋯ X_{t_k}`.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

use crate::gf2::{BitMat, Transvection};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SynthError {
    #[error("matrix is singular")]
    Singular,
    #[error("optimal synthesis is limited to n <= {max}, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("unknown synthesis method {0:?} (expected pmh, gauss or optimal)")]
    UnknownMethod(String),
}

/// Largest dimension handled by [`optimal`].
pub const OPTIMAL_MAX_N: usize = 5;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SynthMethod {
    /// Patel–Markov–Hayes column-section elimination.
    #[default]
    Pmh,
    /// Plain Gauss–Jordan elimination.
    Gauss,
    /// Breadth-first search over GL(n, 2); minimal CNOT count, n ≤ 5.
    Optimal,
}

impl FromStr for SynthMethod {
    type Err = SynthError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "pmh" => Ok(SynthMethod::Pmh),
            "gauss" => Ok(SynthMethod::Gauss),
            "optimal" | "bfs" => Ok(SynthMethod::Optimal),
            _ => Err(SynthError::UnknownMethod(s.to_string())),
        }
    }
}

impl fmt::Display for SynthMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SynthMethod::Pmh => "pmh",
            SynthMethod::Gauss => "gauss",
            SynthMethod::Optimal => "optimal",
        })
    }
}

/// Synthesizes `A` with the given method.
pub fn a_to_x(a: &BitMat, method: SynthMethod) -> Result<Vec<Transvection>, SynthError> {
    match method {
        SynthMethod::Pmh => pmh(a, pmh_section_size(a.n())),
        SynthMethod::Gauss => gauss(a),
        SynthMethod::Optimal => optimal(a),
    }
}

/// Section width `⌈log₂(n)/2⌉`, at least 1.
#[must_use]
pub fn pmh_section_size(n: usize) -> usize {
    if n <= 2 {
        return 1;
    }
    let m = ((n as f64).log2() / 2.0).ceil() as usize;
    m.max(1)
}

fn row_op(m: &mut BitMat, ops: &mut Vec<Transvection>, target: usize, control: usize) {
    m.add_row(target, control);
    ops.push(Transvection { target, control });
}

/// Gauss–Jordan: row-reduce `A` to `I` with `E_k ⋯ E_1 A = I`, so `A = E_1 ⋯ E_k`.
/// Uses at most `n²` transvections.
pub fn gauss(a: &BitMat) -> Result<Vec<Transvection>, SynthError> {
    let n = a.n();
    let mut m = a.clone();
    let mut ops = Vec::new();
    for c in 0..n {
        if !m.get(c, c) {
            let p = (c + 1..n).find(|&r| m.get(r, c)).ok_or(SynthError::Singular)?;
            row_op(&mut m, &mut ops, c, p);
        }
        for r in 0..n {
            if r != c && m.get(r, c) {
                row_op(&mut m, &mut ops, r, c);
            }
        }
    }
    Ok(ops)
}

/// One lower-triangular pass: row operations clearing everything below the
/// diagonal, column section by column section, after first cancelling rows
/// that repeat the same pattern inside the section.
fn pmh_lower(m: &mut BitMat, section: usize, ops: &mut Vec<Transvection>) -> Result<(), SynthError> {
    let n = m.n();
    let mut start = 0;
    while start < n {
        let end = (start + section).min(n);
        let mut seen: Vec<Option<usize>> = vec![None; 1 << (end - start)];
        for r in start..n {
            let patt = (start..end).fold(0usize, |acc, c| acc | (usize::from(m.get(r, c)) << (c - start)));
            if patt == 0 {
                continue;
            }
            match seen[patt] {
                None => seen[patt] = Some(r),
                Some(first) => row_op(m, ops, r, first),
            }
        }
        for c in start..end {
            let mut diag = m.get(c, c);
            for r in c + 1..n {
                if m.get(r, c) {
                    if !diag {
                        row_op(m, ops, c, r);
                        diag = true;
                    }
                    row_op(m, ops, r, c);
                }
            }
            if !diag {
                return Err(SynthError::Singular);
            }
        }
        start = end;
    }
    Ok(())
}

/// Patel–Markov–Hayes synthesis with section width `section` (clamped to ≥ 1).
/// Asymptotically `O(n²/log n)` transvections.
pub fn pmh(a: &BitMat, section: usize) -> Result<Vec<Transvection>, SynthError> {
    let section = section.max(1);
    let mut m = a.clone();
    // L_k ⋯ L_1 A = U
    let mut lower = Vec::new();
    pmh_lower(&mut m, section, &mut lower)?;
    // M_j ⋯ M_1 Uᵀ = I
    let mut mt = m.transpose();
    let mut upper = Vec::new();
    pmh_lower(&mut mt, section, &mut upper)?;
    if !mt.is_identity() {
        return Err(SynthError::Singular);
    }
    // A = L_1 ⋯ L_k · M_jᵀ ⋯ M_1ᵀ
    let mut word = lower;
    word.extend(upper.iter().rev().map(|t| t.transpose()));
    Ok(word)
}

/// Parent table of a BFS over GL(n,2) from the identity under right
/// multiplication by transvections. Entry = index of the last transvection
/// on a shortest path, `u8::MAX` if unreachable (singular), `u8::MAX - 1` for I.
struct BfsTable {
    moves: Vec<Transvection>,
    parent: Vec<u8>,
}

const UNSEEN: u8 = u8::MAX;
const ROOT: u8 = u8::MAX - 1;

fn key_of(a: &BitMat) -> usize {
    let n = a.n();
    let mut k = 0;
    for r in 0..n {
        for c in 0..n {
            if a.get(r, c) {
                k |= 1 << (r * n + c);
            }
        }
    }
    k
}

/// `key · t`: column `t.control` ^= column `t.target`.
fn right_mul_key(key: usize, n: usize, t: Transvection) -> usize {
    let mut k = key;
    for r in 0..n {
        if key >> (r * n + t.target) & 1 == 1 {
            k ^= 1 << (r * n + t.control);
        }
    }
    k
}

fn bfs_table(n: usize) -> &'static BfsTable {
    static TABLES: [OnceLock<BfsTable>; OPTIMAL_MAX_N + 1] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    TABLES[n].get_or_init(|| {
        let moves: Vec<Transvection> = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| Transvection { target: i, control: j }))
            .collect();
        let mut parent = vec![UNSEEN; 1 << (n * n)];
        let start = key_of(&BitMat::identity(n));
        parent[start] = ROOT;
        let mut frontier = vec![start];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &s in &frontier {
                for (mi, &t) in moves.iter().enumerate() {
                    let k = right_mul_key(s, n, t);
                    if parent[k] == UNSEEN {
                        parent[k] = mi as u8;
                        next.push(k);
                    }
                }
            }
            frontier = next;
        }
        BfsTable { moves, parent }
    })
}

/// Size of GL(n,2) as found by exhaustive BFS (n ≤ 5).
pub fn bfs_group_order(n: usize) -> Result<usize, SynthError> {
    if n > OPTIMAL_MAX_N {
        return Err(SynthError::TooLarge { n, max: OPTIMAL_MAX_N });
    }
    Ok(bfs_table(n).parent.iter().filter(|&&p| p != UNSEEN).count())
}

/// Minimal-length transvection word for `A` (n ≤ 5).
pub fn optimal(a: &BitMat) -> Result<Vec<Transvection>, SynthError> {
    let n = a.n();
    if n > OPTIMAL_MAX_N {
        return Err(SynthError::TooLarge { n, max: OPTIMAL_MAX_N });
    }
    let table = bfs_table(n);
    let mut key = key_of(a);
    let mut rev = Vec::new();
    loop {
        match table.parent[key] {
            UNSEEN => return Err(SynthError::Singular),
            ROOT => break,
            mi => {
                let t = table.moves[usize::from(mi)];
                rev.push(t);
                key = right_mul_key(key, n, t);
            }
        }
    }
    rev.reverse();
    Ok(rev)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked_example() -> BitMat {
        BitMat::from_rows(&["1100010", "0100110", "0010011", "0001010", "0000100", "0000010", "0000001"]).unwrap()
    }

    #[test]
    fn all_methods_reproduce_the_matrix() {
        let a = worked_example();
        for m in [SynthMethod::Pmh, SynthMethod::Gauss] {
            let w = a_to_x(&a, m).unwrap();
            assert_eq!(BitMat::from_word(7, &w).unwrap(), a, "{m}");
        }
    }

    #[test]
    fn swap_needs_three() {
        let swap = BitMat::from_rows(&["01", "10"]).unwrap();
        let w = optimal(&swap).unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(BitMat::from_word(2, &w).unwrap(), swap);
    }

    #[test]
    fn singular_is_rejected() {
        let s = BitMat::from_rows(&["11", "11"]).unwrap();
        assert_eq!(gauss(&s), Err(SynthError::Singular));
        assert_eq!(pmh(&s, 1), Err(SynthError::Singular));
        assert_eq!(optimal(&s), Err(SynthError::Singular));
    }

    #[test]
    fn section_size() {
        assert_eq!(pmh_section_size(1), 1);
        assert_eq!(pmh_section_size(7), 2);
        assert_eq!(pmh_section_size(16), 2);
        assert_eq!(pmh_section_size(64), 3);
    }

    #[test]
    fn gl_orders() {
        assert_eq!(bfs_group_order(2).unwrap(), 6);
        assert_eq!(bfs_group_order(3).unwrap(), 168);
        assert_eq!(bfs_group_order(4).unwrap(), 20160);
    }
}
