//! Simple undirected graphs with bitset adjacency, plus the edge-list text
//! format shared by every tool in the workspace.
//!
//! Vertices are `0..n`. Graphs are built once and then treated as
//! immutable; nothing in this crate mutates a graph after construction.

use crate::set::VertexSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range (n = {1})")]
    OutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
}

/// Errors from [`parse_graph`]; each names the offending 1-based line.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: vertex {v} out of range (n = {n})")]
    OutOfRange { line: usize, v: usize, n: usize },
    #[error("line {line}: self-loop {u} {u}")]
    SelfLoop { line: usize, u: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("missing header line \"n m\"")]
    MissingHeader,
}

/// An undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts the edge `uv`. Rejects loops, out-of-range endpoints and
    /// edges already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::OutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(GraphError::OutOfRange(v, self.n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u].contains(v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count.
    pub fn m(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, u: usize) -> &VertexSet {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).min().unwrap_or(0)
    }

    /// All vertices as a set.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in self.adj[u].above(u).iter() {
                out.push((u, v));
            }
        }
        out
    }

    /// True when every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    /// The complement graph: `uv` is an edge iff `u != v` and `uv` is not
    /// an edge of `self`.
    pub fn complement(&self) -> Graph {
        let adj = (0..self.n)
            .map(|u| {
                let mut s = self.adj[u].complement_within(self.n);
                s.remove(u);
                s
            })
            .collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `s`, relabeled `0..|s|` preserving vertex order,
    /// together with the map from new indices to original ones.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if let Some(v) = s.iter().find(|&v| v >= self.n) {
            return Err(GraphError::OutOfRange(v, self.n));
        }
        let map: Vec<usize> = s.to_vec();
        let mut g = Graph::empty(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        Ok((g, map))
    }

    /// Vertices of `x` other than `u` that are not adjacent to `u`.
    pub fn co_neighbors(&self, u: usize, x: &VertexSet) -> VertexSet {
        let mut s = x.difference(&self.adj[u]);
        s.remove(u);
        s
    }

    /// Non-neighbors of `u` over the whole vertex set, excluding `u`.
    pub fn co_neighborhood(&self, u: usize) -> VertexSet {
        self.co_neighbors(u, &self.vertex_set())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Whether `check_set` tests for a clique or an independent set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetMode {
    Clique,
    Independent,
}

/// True iff every pair inside `s` is adjacent (`Clique`) or no pair is
/// (`Independent`). Empty sets and singletons are both.
pub fn check_set(g: &Graph, s: &VertexSet, mode: SetMode) -> bool {
    let members: Vec<usize> = s.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            match mode {
                SetMode::Clique if !g.has_edge(u, v) => return false,
                SetMode::Independent if g.has_edge(u, v) => return false,
                _ => {}
            }
        }
    }
    true
}

/// A path given by its vertex sequence; vertices are distinct and
/// consecutive ones are adjacent in the ambient graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    vertices: Vec<usize>,
}

impl Path {
    pub fn new(vertices: Vec<usize>) -> Self {
        Path { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Edge count.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn endpoints(&self) -> Option<(usize, usize)> {
        match self.vertices.as_slice() {
            [] | [_] => None,
            [first, .., last] => Some((*first, *last)),
        }
    }

    pub fn internal(&self) -> &[usize] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }

    /// Edges as normalized `(min, max)` pairs, in path order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices
            .windows(2)
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
    }

    pub fn reversed(&self) -> Path {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Path { vertices }
    }
}

/// Parses the edge-list document format: a header `n m`, then `m` lines
/// `u v`. Lines starting with `#` and blank lines are ignored.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut graph = Graph::empty(0);
    let mut found = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(ParseError::Malformed {
                line,
                reason: format!("expected two integers, got {:?}", content),
            });
        }
        let a: usize = fields[0].parse().map_err(|_| ParseError::Malformed {
            line,
            reason: format!("not an integer: {:?}", fields[0]),
        })?;
        let b: usize = fields[1].parse().map_err(|_| ParseError::Malformed {
            line,
            reason: format!("not an integer: {:?}", fields[1]),
        })?;
        match header {
            None => {
                header = Some((a, b));
                graph = Graph::empty(a);
            }
            Some((_, m)) => {
                if found == m {
                    return Err(ParseError::EdgeCount {
                        expected: m,
                        found: m + 1,
                    });
                }
                graph.add_edge(a, b).map_err(|e| match e {
                    GraphError::OutOfRange(v, n) => ParseError::OutOfRange { line, v, n },
                    GraphError::SelfLoop(u) => ParseError::SelfLoop { line, u },
                    GraphError::DuplicateEdge(u, v) => ParseError::DuplicateEdge { line, u, v },
                })?;
                found += 1;
            }
        }
    }
    match header {
        None => Err(ParseError::MissingHeader),
        Some((_, m)) if found != m => Err(ParseError::EdgeCount { expected: m, found }),
        Some(_) => Ok(graph),
    }
}

/// Canonical edge-list document: header, then edges with `u < v` in
/// lexicographic order. `parse_graph` inverts this exactly.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push('\n');
        out.push_str(&format!("{} {}", u, v));
    }
    out
}

/// The cycle `0-1-...-(n-1)-0`.
pub fn cycle(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    if n >= 3 {
        for u in 0..n {
            let v = (u + 1) % n;
            if !g.has_edge(u, v) {
                g.add_edge(u, v).unwrap();
            }
        }
    } else if n == 2 {
        g.add_edge(0, 1).unwrap();
    }
    g
}

/// The complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    Graph::empty(n).complement()
}
