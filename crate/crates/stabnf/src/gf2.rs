//! Linear algebra over GF(2): packed bit vectors, square matrices,
//! transvections, symmetric zero-diagonal matrices and their quadratic forms.
//!
//! Index conventions: bit `i` of a vector is qubit `i`. A transvection
//! `[ij]` is `I + E_ij`; left-multiplying adds row `j` into row `i`,
//! right-multiplying adds column `i` into column `j`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("index {index} out of range for dimension {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("transvection [{0}{0}] is not allowed (target equals control)")]
    DegenerateTransvection(usize),
    #[error("pair ({0},{0}) is not allowed on a zero-diagonal matrix")]
    SelfPair(usize),
    #[error("matrix is singular")]
    Singular,
    #[error("malformed matrix text: {0}")]
    Parse(String),
}

const W: usize = 64;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(W)
}

/// Packed vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    #[must_use]
    pub fn zeros(len: usize) -> Self {
        Self { len, words: vec![0; words_for(len)] }
    }

    #[must_use]
    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for i in 0..len {
            v.set(i, true);
        }
        v
    }

    /// The unit vector `e_i`.
    ///
    /// # Panics
    /// Panics if `i >= len`.
    #[must_use]
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    #[must_use]
    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Result<Self, Gf2Error> {
        let mut v = Self::zeros(len);
        for i in ones {
            if i >= len {
                return Err(Gf2Error::IndexOutOfRange { index: i, n: len });
            }
            v.flip(i);
        }
        Ok(v)
    }

    #[inline]
    #[must_use]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    #[must_use]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        (self.words[i / W] >> (i % W)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % W);
        if value {
            self.words[i / W] |= mask;
        } else {
            self.words[i / W] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        self.words[i / W] ^= 1u64 << (i % W);
    }

    /// `self ^= other`.
    ///
    /// # Panics
    /// Panics on length mismatch.
    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    #[must_use]
    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut r = self.clone();
        r.xor_assign(other);
        r
    }

    /// Entrywise product `self ⊙ other`.
    #[must_use]
    pub fn and(&self, other: &BitVec) -> BitVec {
        assert_eq!(self.len, other.len, "length mismatch");
        BitVec {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    /// Inner product `Σ self_i other_i mod 2`.
    #[must_use]
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "length mismatch");
        let ones: u32 = self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum();
        ones & 1 == 1
    }

    #[must_use]
    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * W + t)
            })
        })
    }

    /// Swap entries `i` and `j`; this is the action of the permutation `(ij)`.
    pub fn swap(&mut self, i: usize, j: usize) {
        let (a, b) = (self.get(i), self.get(j));
        self.set(i, b);
        self.set(j, a);
    }

    /// `self ← t·self` for the transvection `t = [ij]`: `x_i ^= x_j`.
    pub fn transvect(&mut self, t: Transvection) {
        if self.get(t.control) {
            self.flip(t.target);
        }
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

impl FromStr for BitVec {
    type Err = Gf2Error;

    /// Parses a string of `0`/`1` characters, bit 0 first.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut v = BitVec::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                _ => return Err(Gf2Error::Parse(format!("unexpected character {c:?} in bit string"))),
            }
        }
        Ok(v)
    }
}

/// The elementary matrix `[ij] = I + E_ij`; as a gate it is a CNOT with
/// target `i` and control `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transvection {
    pub target: usize,
    pub control: usize,
}

impl Transvection {
    pub fn new(target: usize, control: usize) -> Result<Self, Gf2Error> {
        if target == control {
            return Err(Gf2Error::DegenerateTransvection(target));
        }
        Ok(Self { target, control })
    }

    /// `[ij]ᵀ = [ji]`. Each transvection is its own inverse.
    #[must_use]
    pub fn transpose(self) -> Self {
        Self { target: self.control, control: self.target }
    }

    fn check(self, n: usize) -> Result<(), Gf2Error> {
        for index in [self.target, self.control] {
            if index >= n {
                return Err(Gf2Error::IndexOutOfRange { index, n });
            }
        }
        Ok(())
    }
}

impl fmt::Display for Transvection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.target < 10 && self.control < 10 {
            write!(f, "[{}{}]", self.target, self.control)
        } else {
            write!(f, "[{},{}]", self.target, self.control)
        }
    }
}

/// Square matrix over GF(2) with packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMat {
    n: usize,
    wpr: usize,
    data: Vec<u64>,
}

impl BitMat {
    #[must_use]
    pub fn zeros(n: usize) -> Self {
        let wpr = words_for(n);
        Self { n, wpr, data: vec![0; wpr * n] }
    }

    #[must_use]
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Product of a transvection word, leftmost factor first.
    pub fn from_word(n: usize, word: &[Transvection]) -> Result<Self, Gf2Error> {
        let mut m = Self::identity(n);
        for &t in word {
            m.transvect_right(t)?;
        }
        Ok(m)
    }

    /// Builds a matrix from row strings such as `"1100"`.
    pub fn from_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self, Gf2Error> {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (r, row) in rows.iter().enumerate() {
            let v: BitVec = row.as_ref().parse()?;
            if v.len() != n {
                return Err(Gf2Error::DimensionMismatch { expected: n, got: v.len() });
            }
            m.set_row(r, &v);
        }
        Ok(m)
    }

    #[inline]
    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    #[must_use]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.n && c < self.n);
        (self.data[r * self.wpr + c / W] >> (c % W)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        debug_assert!(r < self.n && c < self.n);
        let mask = 1u64 << (c % W);
        let w = &mut self.data[r * self.wpr + c / W];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, r: usize, c: usize) {
        debug_assert!(r < self.n && c < self.n);
        self.data[r * self.wpr + c / W] ^= 1u64 << (c % W);
    }

    #[must_use]
    pub fn row(&self, r: usize) -> BitVec {
        BitVec { len: self.n, words: self.row_words(r).to_vec() }
    }

    #[must_use]
    pub fn col(&self, c: usize) -> BitVec {
        let mut v = BitVec::zeros(self.n);
        for r in 0..self.n {
            if self.get(r, c) {
                v.set(r, true);
            }
        }
        v
    }

    pub fn set_row(&mut self, r: usize, v: &BitVec) {
        assert_eq!(v.len(), self.n, "length mismatch");
        let wpr = self.wpr;
        self.data[r * wpr..(r + 1) * wpr].copy_from_slice(v.words());
    }

    #[inline]
    fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.wpr..(r + 1) * self.wpr]
    }

    /// Row `dst` ^= row `src`.
    pub fn add_row(&mut self, dst: usize, src: usize) {
        if dst == src {
            // x + x = 0 would silently zero the row; never meaningful here.
            panic!("add_row with dst == src");
        }
        let wpr = self.wpr;
        let (d, s) = (dst * wpr, src * wpr);
        for k in 0..wpr {
            let x = self.data[s + k];
            self.data[d + k] ^= x;
        }
    }

    /// Column `dst` ^= column `src`.
    pub fn add_col(&mut self, dst: usize, src: usize) {
        assert_ne!(dst, src, "add_col with dst == src");
        let (sw, sb) = (src / W, src % W);
        let dw = dst / W;
        let db = dst % W;
        for r in 0..self.n {
            let base = r * self.wpr;
            let bit = (self.data[base + sw] >> sb) & 1;
            self.data[base + dw] ^= bit << db;
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.wpr {
            self.data.swap(a * self.wpr + k, b * self.wpr + k);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.n {
            let (x, y) = (self.get(r, a), self.get(r, b));
            self.set(r, a, y);
            self.set(r, b, x);
        }
    }

    /// `self ← t·self`: row `t.target` ^= row `t.control`.
    pub fn transvect_left(&mut self, t: Transvection) -> Result<(), Gf2Error> {
        t.check(self.n)?;
        self.add_row(t.target, t.control);
        Ok(())
    }

    /// `self ← self·t`: column `t.control` ^= column `t.target`.
    pub fn transvect_right(&mut self, t: Transvection) -> Result<(), Gf2Error> {
        t.check(self.n)?;
        self.add_col(t.control, t.target);
        Ok(())
    }

    #[must_use]
    pub fn transpose(&self) -> BitMat {
        let mut t = BitMat::zeros(self.n);
        for r in 0..self.n {
            for c in self.row_iter_ones(r) {
                t.set(c, r, true);
            }
        }
        t
    }

    fn row_iter_ones(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.n;
        self.row_words(r).iter().enumerate().flat_map(move |(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * W + t)
            })
            .filter(move |&c| c < n)
        })
    }

    pub fn mul(&self, other: &BitMat) -> Result<BitMat, Gf2Error> {
        if self.n != other.n {
            return Err(Gf2Error::DimensionMismatch { expected: self.n, got: other.n });
        }
        let mut out = BitMat::zeros(self.n);
        for r in 0..self.n {
            let base = r * self.wpr;
            for k in self.row_iter_ones(r) {
                let ob = k * other.wpr;
                for w in 0..self.wpr {
                    out.data[base + w] ^= other.data[ob + w];
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &BitVec) -> Result<BitVec, Gf2Error> {
        if v.len() != self.n {
            return Err(Gf2Error::DimensionMismatch { expected: self.n, got: v.len() });
        }
        let mut out = BitVec::zeros(self.n);
        for r in 0..self.n {
            let parity: u32 =
                self.row_words(r).iter().zip(v.words()).map(|(a, b)| (a & b).count_ones()).sum();
            if parity & 1 == 1 {
                out.set(r, true);
            }
        }
        Ok(out)
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for c in 0..self.n {
            if let Some(p) = (rank..self.n).find(|&r| m.get(r, c)) {
                m.swap_rows(rank, p);
                for r in 0..self.n {
                    if r != rank && m.get(r, c) {
                        m.add_row(r, rank);
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    #[must_use]
    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }

    #[must_use]
    pub fn is_identity(&self) -> bool {
        *self == BitMat::identity(self.n)
    }

    pub fn inverse(&self) -> Result<BitMat, Gf2Error> {
        let n = self.n;
        let mut m = self.clone();
        let mut inv = BitMat::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&r| m.get(r, c)).ok_or(Gf2Error::Singular)?;
            m.swap_rows(c, p);
            inv.swap_rows(c, p);
            for r in 0..n {
                if r != c && m.get(r, c) {
                    m.add_row(r, c);
                    inv.add_row(r, c);
                }
            }
        }
        Ok(inv)
    }

    /// Parses the matrix text format: first line `n`, then `n` rows of 0/1
    /// (whitespace between digits allowed, `#` comments ignored).
    pub fn parse_text(text: &str) -> Result<BitMat, Gf2Error> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Gf2Error::Parse("empty matrix file".into()))?;
        let n: usize = header
            .parse()
            .map_err(|_| Gf2Error::Parse(format!("bad dimension line {header:?}")))?;
        let rows: Vec<String> = lines.map(|l| l.chars().filter(|c| !c.is_whitespace()).collect()).collect();
        if rows.len() != n {
            return Err(Gf2Error::Parse(format!("expected {n} rows, found {}", rows.len())));
        }
        BitMat::from_rows(&rows)
    }

    #[must_use]
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for r in 0..self.n {
            s.push_str(&self.row(r).to_string());
            s.push('\n');
        }
        s
    }

    /// `Ax` for every column `x` of `self`, the image of the basis.
    #[must_use]
    pub fn rows(&self) -> Vec<BitVec> {
        (0..self.n).map(|r| self.row(r)).collect()
    }
}

impl fmt::Display for BitMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.n {
            if r > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{}", self.row(r))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.n).map(|r| self.row(r).to_string()).collect();
        write!(f, "BitMat[{}]", rows.join(" / "))
    }
}

/// Symmetric matrix with zero diagonal, i.e. the adjacency matrix of a
/// simple graph. Doubles as the exponent of a layer of CZ gates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymZeroDiag {
    m: BitMat,
}

impl SymZeroDiag {
    #[must_use]
    pub fn zeros(n: usize) -> Self {
        Self { m: BitMat::zeros(n) }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, Gf2Error> {
        let mut s = Self::zeros(n);
        for (i, j) in edges {
            s.toggle(i, j)?;
        }
        Ok(s)
    }

    /// Accepts any square matrix that is symmetric with zero diagonal.
    pub fn from_matrix(m: BitMat) -> Result<Self, Gf2Error> {
        for i in 0..m.n() {
            if m.get(i, i) {
                return Err(Gf2Error::SelfPair(i));
            }
        }
        if m.transpose() != m {
            return Err(Gf2Error::Parse("matrix is not symmetric".into()));
        }
        Ok(Self { m })
    }

    /// The complete graph `K_n`.
    #[must_use]
    pub fn complete(n: usize) -> Self {
        let mut s = Self::zeros(n);
        for i in 0..n {
            for j in i + 1..n {
                s.m.set(i, j, true);
                s.m.set(j, i, true);
            }
        }
        s
    }

    #[inline]
    #[must_use]
    pub fn n(&self) -> usize {
        self.m.n()
    }

    #[inline]
    #[must_use]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.m.get(i, j)
    }

    /// Toggles the pair `{i, j}`, i.e. `self ⊕ {{i,j}}`.
    pub fn toggle(&mut self, i: usize, j: usize) -> Result<(), Gf2Error> {
        let n = self.n();
        for index in [i, j] {
            if index >= n {
                return Err(Gf2Error::IndexOutOfRange { index, n });
            }
        }
        if i == j {
            return Err(Gf2Error::SelfPair(i));
        }
        self.m.flip(i, j);
        self.m.flip(j, i);
        Ok(())
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    #[must_use]
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n() {
            for j in self.m.row_iter_ones(i) {
                if j > i {
                    out.push((i, j));
                }
            }
        }
        out
    }

    #[must_use]
    pub fn edge_count(&self) -> usize {
        (0..self.n()).map(|i| self.m.row(i).count_ones()).sum::<usize>() / 2
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        (0..self.n()).all(|i| self.m.row_words(i).iter().all(|&w| w == 0))
    }

    /// Neighbours of `i`.
    #[must_use]
    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        self.m.row_iter_ones(i).collect()
    }

    #[must_use]
    pub fn row(&self, i: usize) -> BitVec {
        self.m.row(i)
    }

    /// Removes every edge incident to `i` (`self ⊕ self_i`).
    pub fn clear_incident(&mut self, i: usize) {
        for j in self.neighbors(i) {
            self.m.flip(i, j);
            self.m.flip(j, i);
        }
    }

    pub fn xor_assign(&mut self, other: &SymZeroDiag) {
        assert_eq!(self.n(), other.n(), "dimension mismatch");
        for (a, b) in self.m.data.iter_mut().zip(&other.m.data) {
            *a ^= b;
        }
    }

    /// Congruence `self ← tᵀ·self·t`. With `t = [ij]` this is `[ji]·B·[ij]`:
    /// row `j` ^= row `i`, then column `j` ^= column `i`. The diagonal stays zero.
    pub fn congruence(&mut self, t: Transvection) -> Result<(), Gf2Error> {
        t.check(self.n())?;
        self.m.add_row(t.control, t.target);
        self.m.add_col(t.control, t.target);
        debug_assert!(!self.m.get(t.control, t.control));
        Ok(())
    }

    /// Conjugation by the swap `(ij)`: `(ij)·B·(ij)`.
    pub fn swap_indices(&mut self, i: usize, j: usize) {
        self.m.swap_rows(i, j);
        self.m.swap_cols(i, j);
    }

    /// `B·x`.
    #[must_use]
    pub fn mul_vec(&self, x: &BitVec) -> BitVec {
        self.m.mul_vec(x).expect("dimension checked by caller")
    }

    #[must_use]
    pub fn as_matrix(&self) -> &BitMat {
        &self.m
    }

    /// `Mᵀ·B·M`; the result is again symmetric with zero diagonal.
    pub fn congruence_by(&self, m: &BitMat) -> Result<SymZeroDiag, Gf2Error> {
        let prod = m.transpose().mul(&self.m)?.mul(m)?;
        Ok(SymZeroDiag { m: prod })
    }
}

impl fmt::Debug for SymZeroDiag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymZeroDiag{}", format_edges(&self.edges()))
    }
}

impl fmt::Display for SymZeroDiag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_edges(&self.edges()))
    }
}

fn format_edges(edges: &[(usize, usize)]) -> String {
    let parts: Vec<String> = edges.iter().map(|(i, j)| format!("{i}{j}")).collect();
    format!("{{{}}}", parts.join(","))
}

/// The quadratic form `q_B(x) = Σ_{i<j} b_ij x_i x_j` attached to a
/// symmetric zero-diagonal matrix.
#[derive(Clone, Debug)]
pub struct QuadraticForm<'a> {
    b: &'a SymZeroDiag,
}

impl<'a> QuadraticForm<'a> {
    #[must_use]
    pub fn new(b: &'a SymZeroDiag) -> Self {
        Self { b }
    }

    #[must_use]
    pub fn eval(&self, x: &BitVec) -> bool {
        // Every edge inside supp(x) is counted twice by the row sums.
        let total: usize = x.iter_ones().map(|i| self.b.row(i).and(x).count_ones()).sum();
        (total / 2) % 2 == 1
    }

    /// `q_B` applied to every column of `m`, collected into a vector.
    #[must_use]
    pub fn of_columns(&self, m: &BitMat) -> BitVec {
        let mut out = BitVec::zeros(m.n());
        for c in 0..m.n() {
            if self.eval(&m.col(c)) {
                out.set(c, true);
            }
        }
        out
    }
}
