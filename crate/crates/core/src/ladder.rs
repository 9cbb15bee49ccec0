//! The generalized Möbius ladder `M_{m,n}`.
//!
//! `M_{m,n}` is the grid `P_m × P_n` whose first and last columns are identified
//! under a half twist: row `r` of the first column is glued to row `n + 1 − r` of
//! the last. The quotient is built directly with `m − 1` columns `c = 0..=m−2`
//! and rows `r = 1..=n`; the last column is joined to column 0 by twist edges.
//!
//! ```text
//!   c=0 ── c=1 ── … ── c=m−2 ╮
//!    │      │            │    ├─ twist: (m−2, r) ── (0, n+1−r)
//!   c=0 ── c=1 ── … ── c=m−2 ╯
//! ```

use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum LadderError {
    #[error("invalid ladder parameters m = {m}, n = {n}: need m >= 4 and n >= 2")]
    InvalidParams { m: i64, n: i64 },
}

/// Validated `(m, n)` for `M_{m,n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LadderParams {
    m: usize,
    n: usize,
}

impl LadderParams {
    /// Smallest supported `m`. At `m = 3` a twist edge coincides with a horizontal
    /// edge whenever `n` is odd.
    pub const MIN_M: i64 = 4;
    pub const MIN_N: i64 = 2;

    pub fn new(m: i64, n: i64) -> Result<Self, LadderError> {
        if m < Self::MIN_M || n < Self::MIN_N {
            return Err(LadderError::InvalidParams { m, n });
        }
        Ok(LadderParams {
            m: m as usize,
            n: n as usize,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of distinct columns after identification.
    pub fn columns(&self) -> usize {
        self.m - 1
    }

    /// Identifier of vertex `v(c, r)`: `c·n + (r − 1)`.
    pub fn vertex(&self, column: usize, row: usize) -> VertexId {
        debug_assert!(column < self.columns() && (1..=self.n).contains(&row));
        column * self.n + (row - 1)
    }
}

/// Constructs `M_{m,n}`.
///
/// The result has `(m−1)·n` vertices and `(m−1)(2n−1)` edges; rows 1 and `n` have
/// degree 3 and every other vertex degree 4.
pub fn build_ladder(params: LadderParams) -> Graph {
    let (n, cols) = (params.n, params.columns());
    let mut edges = Vec::with_capacity(cols * (2 * n - 1));
    for c in 0..cols {
        for r in 1..n {
            edges.push((params.vertex(c, r), params.vertex(c, r + 1)));
        }
    }
    for c in 0..cols - 1 {
        for r in 1..=n {
            edges.push((params.vertex(c, r), params.vertex(c + 1, r)));
        }
    }
    for r in 1..=n {
        edges.push((params.vertex(cols - 1, r), params.vertex(0, n + 1 - r)));
    }
    Graph::new(cols * n, edges).expect("ladder edges are simple for m >= 4")
}

/// Validates `(m, n)` and constructs `M_{m,n}`.
pub fn ladder(m: i64, n: i64) -> Result<Graph, LadderError> {
    Ok(build_ladder(LadderParams::new(m, n)?))
}
