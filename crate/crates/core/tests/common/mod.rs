//! Test-only oracles, independent of the library's construction paths.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use mobius_mpoly::{ladder, Graph};
use num_bigint::BigInt;
use num_rational::BigRational;

/// Builds `M_{m,n}` literally: the grid `P_m × P_n` (vertex `(i, j)`, `1 <= i <= m`,
/// `1 <= j <= n`) with `(1, j)` identified with `(m, n + 1 − j)`, then merged
/// duplicate edges removed. Returns the vertex count and the canonical edge set,
/// relabelled so that `(i, j)` for `i < m` gets `(i − 1)·n + (j − 1)`.
pub fn literal_ladder(m: usize, n: usize) -> (usize, BTreeSet<(usize, usize)>) {
    let id = |i: usize, j: usize| -> usize {
        if i == m {
            // (m, j) ~ (1, n + 1 − j)
            n - j
        } else {
            (i - 1) * n + (j - 1)
        }
    };
    let mut edges = BTreeSet::new();
    for i in 1..=m {
        for j in 1..=n {
            if j < n {
                let (a, b) = (id(i, j), id(i, j + 1));
                edges.insert((a.min(b), a.max(b)));
            }
            if i < m {
                let (a, b) = (id(i, j), id(i + 1, j));
                edges.insert((a.min(b), a.max(b)));
            }
        }
    }
    ((m - 1) * n, edges)
}

/// Line graph by checking every pair of edges for a shared endpoint.
pub fn brute_line_graph(g: &Graph) -> BTreeSet<(usize, usize)> {
    let e = g.edges();
    let mut out = BTreeSet::new();
    for a in 0..e.len() {
        for b in a + 1..e.len() {
            let (p, q) = (e[a], e[b]);
            if p.0 == q.0 || p.0 == q.1 || p.1 == q.0 || p.1 == q.1 {
                out.insert((a, b));
            }
        }
    }
    out
}

/// Degrees from a dense adjacency matrix.
pub fn matrix_degrees(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj.iter().map(|row| row.iter().filter(|&&b| b).count()).collect()
}

/// `m_ij` tallied from matrix degrees.
pub fn brute_partition(g: &Graph) -> BTreeMap<(usize, usize), usize> {
    let d = matrix_degrees(g);
    let mut out = BTreeMap::new();
    for &(u, v) in g.edges() {
        *out.entry((d[u].min(d[v]), d[u].max(d[v]))).or_insert(0) += 1;
    }
    out
}

pub fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// The test corpus: ladders over the theorem grids, their line graphs, paths
/// `P_2..P_10`, cycles `C_3..C_10` and stars `K_{1,3..6}`.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    let mut params = BTreeSet::new();
    for m in 4..=12 {
        for n in 3..=10 {
            params.insert((m, n));
        }
    }
    for m in 4..=10 {
        for n in 4..=10 {
            params.insert((m, n));
        }
    }
    for (m, n) in params {
        let g = ladder(m, n).unwrap();
        out.push((format!("L(M_{{{m},{n}}})"), g.line_graph()));
        out.push((format!("M_{{{m},{n}}}"), g));
    }
    for k in 2..=10 {
        out.push((format!("P_{k}"), Graph::path(k)));
    }
    for k in 3..=10 {
        out.push((format!("C_{k}"), Graph::cycle(k)));
    }
    for k in 3..=6 {
        out.push((format!("K_{{1,{k}}}"), Graph::star(k)));
    }
    out
}
