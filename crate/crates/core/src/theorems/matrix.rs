//! Bridge between vertex subsets of `K_m □ K_n` and `m × n` binary matrices.
//!
//! Vertex `(i, j)` (0-based, row-major id `i * n + j`) corresponds to entry
//! `(i, j)`. Under this bijection mutual-visibility sets are exactly the
//! matrices with no all-ones 2×2 submatrix, and maximal ones are exactly the
//! (2,2)-saturated matrices.

use std::fmt;
use std::time::Instant;

use super::suite::{CheckReport, Expected};
use crate::error::{Error, Result};
use crate::families::{generate, FamilySpec};
use crate::vertex_set::VertexSet;
use crate::visibility::{InvariantKind, VisibilityContext};

/// Largest `m * n` accepted by the exhaustive matrix checks.
pub const MATRIX_EXHAUSTIVE_CAP: usize = 16;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<bool>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BinaryMatrix {
            rows,
            cols,
            entries: vec![false; rows * cols],
        }
    }

    /// Builds from rows of `0`/`1` values.
    pub fn from_rows(rows: &[&[u8]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| x != 0))
            .collect();
        Ok(BinaryMatrix {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    /// The cross `({0} × [n]) ∪ ([m] × {0})`, i.e. `N[(0,0)]` in `K_m □ K_n`.
    pub fn cross(rows: usize, cols: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        for j in 0..cols {
            m.set(0, j, true);
        }
        for i in 0..rows {
            m.set(i, 0, true);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn ones(&self) -> usize {
        self.entries.iter().filter(|&&x| x).count()
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: String = (0..self.cols)
                .map(|j| if self.get(i, j) { '1' } else { '0' })
                .collect();
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

pub fn matrix_of_set(rows: usize, cols: usize, x: &VertexSet) -> Result<BinaryMatrix> {
    if x.universe() != rows * cols {
        return Err(Error::DimensionMismatch(format!(
            "set over {} vertices does not match a {rows}x{cols} matrix",
            x.universe()
        )));
    }
    let mut m = BinaryMatrix::zeros(rows, cols);
    for v in x.iter() {
        m.set(v / cols, v % cols, true);
    }
    Ok(m)
}

pub fn set_of_matrix(m: &BinaryMatrix) -> VertexSet {
    let mut s = VertexSet::new(m.rows * m.cols);
    for (v, _) in m.entries.iter().enumerate().filter(|(_, &x)| x) {
        s.insert(v);
    }
    s
}

/// True iff rows `i < i'` and columns `j < j'` exist with all four entries 1.
pub fn has_constant_2x2(m: &BinaryMatrix) -> bool {
    for i in 0..m.rows {
        for i2 in i + 1..m.rows {
            let shared = (0..m.cols).filter(|&j| m.get(i, j) && m.get(i2, j)).count();
            if shared >= 2 {
                return true;
            }
        }
    }
    false
}

/// True iff every 0 → 1 flip creates an all-ones 2×2 submatrix.
pub fn is_22_saturated(m: &BinaryMatrix) -> Result<bool> {
    if has_constant_2x2(m) {
        return Err(Error::InvalidSet);
    }
    let mut work = m.clone();
    for i in 0..m.rows {
        for j in 0..m.cols {
            if m.get(i, j) {
                continue;
            }
            work.set(i, j, true);
            let creates = has_constant_2x2(&work);
            work.set(i, j, false);
            if !creates {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_matrix_size(rows: usize, cols: usize) -> Result<()> {
    if rows * cols > MATRIX_EXHAUSTIVE_CAP {
        return Err(Error::CapExceeded {
            size: rows * cols,
            cap: MATRIX_EXHAUSTIVE_CAP,
        });
    }
    Ok(())
}

/// Exhaustively compares, over all `2^(mn)` subsets of `K_m □ K_n`,
/// mutual-visibility with C4-freeness and maximality with saturation.
/// `computed` is the number of disagreements.
pub fn mv_matrix_equivalence(rows: usize, cols: usize) -> Result<CheckReport> {
    check_matrix_size(rows, cols)?;
    let start = Instant::now();
    let ctx = VisibilityContext::new(generate(&FamilySpec::CliqueProduct(rows, cols))?);
    let n = rows * cols;
    let mut mismatches = 0usize;
    for mask in 0u32..1 << n {
        let set = VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1))?;
        let mat = matrix_of_set(rows, cols, &set)?;
        let valid = ctx.is_valid_set(&set, InvariantKind::Mv);
        if valid == has_constant_2x2(&mat) {
            mismatches += 1;
            continue;
        }
        if valid && ctx.is_maximal(&set, InvariantKind::Mv)? != is_22_saturated(&mat)? {
            mismatches += 1;
        }
    }
    Ok(CheckReport::new(
        "matrix-mv-equivalence",
        format!("K_{rows} x K_{cols} ({} subsets)", 1u64 << n),
        Expected::Exactly(0),
        "MV sets of K_m x K_n are the C4-free matrices; maximal ones are (2,2)-saturated",
        mismatches,
        start.elapsed(),
    ))
}

/// Fewest ones in a C4-free (2,2)-saturated `rows × cols` matrix, by
/// enumerating every matrix.
pub fn min_saturated_ones(rows: usize, cols: usize) -> Result<usize> {
    check_matrix_size(rows, cols)?;
    let n = rows * cols;
    let mut best = usize::MAX;
    for mask in 0u32..1 << n {
        let ones = mask.count_ones() as usize;
        if ones >= best {
            continue;
        }
        let mut m = BinaryMatrix::zeros(rows, cols);
        for v in (0..n).filter(|&v| mask >> v & 1 == 1) {
            m.set(v / cols, v % cols, true);
        }
        if !has_constant_2x2(&m) && is_22_saturated(&m)? {
            best = ones;
        }
    }
    Ok(best)
}
