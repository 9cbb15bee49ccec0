//! Simple undirected graphs: degrees, line graphs, edge-degree partitions and
//! M-polynomials.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::polynomial::{rational, MPoly};

pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("parallel edge ({0}, {1})")]
    ParallelEdge(VertexId, VertexId),
    #[error("edge ({u}, {v}) references a vertex outside [0, {vertex_count})")]
    VertexOutOfRange {
        u: VertexId,
        v: VertexId,
        vertex_count: usize,
    },
    #[error("edge list line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A simple undirected graph on vertices `0..vertex_count`.
///
/// Edges are stored normalized as `(u, v)` with `u < v`, sorted lexicographically.
/// Construction rejects self-loops and parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    degrees: Vec<usize>,
}

impl Graph {
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(GraphError::VertexOutOfRange { u, v, vertex_count });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::ParallelEdge(key.0, key.1));
            }
        }
        let mut degrees = vec![0; vertex_count];
        for &(u, v) in &seen {
            degrees[u] += 1;
            degrees[v] += 1;
        }
        Ok(Graph {
            vertex_count,
            edges: seen.into_iter().collect(),
            degrees,
        })
    }

    /// `n` isolated vertices.
    pub fn edgeless(n: usize) -> Self {
        Graph {
            vertex_count: n,
            edges: Vec::new(),
            degrees: vec![0; n],
        }
    }

    /// The path `P_n` on `n` vertices.
    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are simple")
    }

    /// The cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are simple")
    }

    /// The star `K_{1,k}` with centre 0.
    pub fn star(k: usize) -> Self {
        Self::new(k + 1, (1..=k).map(|v| (0, v))).expect("star edges are simple")
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        Self::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            .expect("complete graph edges are simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges `(u, v)` with `u < v` in ascending lexicographic order.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Number of vertices of each degree. Isolated vertices count under degree 0.
    pub fn degree_multiset(&self) -> BTreeMap<usize, usize> {
        let mut tally = BTreeMap::new();
        for &d in &self.degrees {
            *tally.entry(d).or_insert(0) += 1;
        }
        tally
    }

    /// Neighbour lists, each sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<VertexId>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.vertex_count
    }

    /// The line graph `L(G)`.
    ///
    /// Vertex `k` of the result is the `k`-th edge of `self` in lexicographic order;
    /// two vertices are adjacent iff their edges share an endpoint.
    pub fn line_graph(&self) -> Graph {
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.vertex_count];
        for (k, &(u, v)) in self.edges.iter().enumerate() {
            incident[u].push(k);
            incident[v].push(k);
        }
        // Two distinct edges of a simple graph share at most one endpoint,
        // so each pair below is produced exactly once.
        let mut edges = Vec::new();
        for around in &incident {
            for (a, &e) in around.iter().enumerate() {
                for &f in &around[a + 1..] {
                    edges.push((e.min(f), e.max(f)));
                }
            }
        }
        Graph::new(self.edges.len(), edges).expect("line graph of a simple graph is simple")
    }

    /// Groups edges by their normalized endpoint-degree pair.
    pub fn edge_degree_partition(&self) -> EdgeDegreePartition {
        let mut counts = BTreeMap::new();
        for &(u, v) in &self.edges {
            let (du, dv) = (self.degrees[u], self.degrees[v]);
            *counts.entry((du.min(dv), du.max(dv))).or_insert(0) += 1;
        }
        EdgeDegreePartition { counts }
    }

    /// `M(G; x, y) = Σ_{i ≤ j} m_ij x^i y^j`.
    pub fn m_polynomial(&self) -> MPoly {
        self.edge_degree_partition().to_mpoly()
    }

    /// Serializes to the edge-list text format:
    /// a header `p <vertex_count> <edge_count>` then one `u v` line per edge.
    pub fn to_edgelist(&self) -> String {
        let mut out = format!("p {} {}\n", self.vertex_count, self.edges.len());
        for &(u, v) in &self.edges {
            writeln!(out, "{u} {v}").expect("writing to a String cannot fail");
        }
        out
    }

    /// Parses the edge-list text format. Blank lines are ignored; edge lines may
    /// appear in any order and the declared edge count must match.
    pub fn from_edgelist(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());

        let (header_line, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            message: "missing `p <vertex_count> <edge_count>` header".into(),
        })?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let (vertex_count, edge_count) = match fields.as_slice() {
            ["p", n, e] => (
                parse_usize(n, header_line)?,
                parse_usize(e, header_line)?,
            ),
            _ => {
                return Err(GraphError::Parse {
                    line: header_line,
                    message: format!("expected `p <vertex_count> <edge_count>`, got `{header}`"),
                })
            }
        };

        let mut edges = Vec::with_capacity(edge_count);
        for (line, l) in lines {
            let fields: Vec<&str> = l.split_whitespace().collect();
            match fields.as_slice() {
                [u, v] => edges.push((parse_usize(u, line)?, parse_usize(v, line)?)),
                _ => {
                    return Err(GraphError::Parse {
                        line,
                        message: format!("expected `u v`, got `{l}`"),
                    })
                }
            }
        }
        if edges.len() != edge_count {
            return Err(GraphError::Parse {
                line: header_line,
                message: format!("header declares {edge_count} edges, found {}", edges.len()),
            });
        }
        Graph::new(vertex_count, edges)
    }

    /// `{"vertex_count": n, "edges": [[u, v], ...]}`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct GraphJson<'a> {
            vertex_count: usize,
            edges: &'a [(VertexId, VertexId)],
        }
        serde_json::to_string(&GraphJson {
            vertex_count: self.vertex_count,
            edges: &self.edges,
        })
        .expect("graph serializes")
    }
}

fn parse_usize(field: &str, line: usize) -> Result<usize, GraphError> {
    field.parse().map_err(|_| GraphError::Parse {
        line,
        message: format!("`{field}` is not a non-negative integer"),
    })
}

/// Edge counts `m_ij` keyed by degree pairs `(i, j)` with `i <= j`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct EdgeDegreePartition {
    counts: BTreeMap<(usize, usize), usize>,
}

impl EdgeDegreePartition {
    pub fn counts(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.counts
    }

    /// `m_ij`, normalizing the key order; zero when absent.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.counts.get(&(i.min(j), i.max(j))).copied().unwrap_or(0)
    }

    /// Total number of edges, `Σ m_ij`.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn to_mpoly(&self) -> MPoly {
        MPoly::from_terms(self.counts.iter().map(|(&(i, j), &m)| {
            let exp = |d: usize| u32::try_from(d).expect("vertex degree fits in u32");
            ((exp(i), exp(j)), rational(m as i64))
        }))
    }
}
