//! Simple undirected graphs with the measurement instruments the rest of
//! the crate is built on: even-cycle certification, girth, bounded path
//! enumeration and non-returning walk counting.

mod cycles;
mod io;
mod paths;
pub mod reference;
mod walks;

pub use cycles::{EvenCycleCertificate, EvenCycleWitness};

use num::rational::Ratio;
use thiserror::Error;

pub const DEFAULT_PATH_CEILING: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {0} (graphs are simple)")]
    Loop(u32),
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: u32, n: usize },
    #[error("path enumeration exceeded the ceiling of {0} paths")]
    ExplosionCeiling(usize),
    #[error("labels length {got} does not match vertex count {n}")]
    LabelMismatch { got: usize, n: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

/// An undirected simple graph on vertices `0..n` with sorted adjacency
/// lists. Immutable after construction; all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<u32>>,
    labels: Option<Vec<String>>,
}

/// Minimum degree, maximum degree, exact average degree and edge count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    pub average: Ratio<u64>,
    pub edges: usize,
}

impl Graph {
    /// Build a graph from an edge list. Parallel edges collapse silently;
    /// loops and out-of-range endpoints are rejected.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Graph, GraphError> {
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::Loop(u));
            }
            for w in [u, v] {
                if w as usize >= n {
                    return Err(GraphError::VertexOutOfRange { v: w, n });
                }
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        let mut m = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { n, m: m / 2, adj, labels: None })
    }

    pub fn empty(n: usize) -> Graph {
        Graph { n, m: 0, adj: vec![Vec::new(); n], labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::LabelMismatch { got: labels.len(), n: self.n });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: u32) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v as usize].as_str())
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n as u32 {
            for &v in &self.adj[u as usize] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree_stats(&self) -> DegreeStats {
        if self.n == 0 {
            return DegreeStats { min: 0, max: 0, average: Ratio::from_integer(0), edges: 0 };
        }
        let degs: Vec<usize> = (0..self.n).map(|v| self.adj[v].len()).collect();
        let min = *degs.iter().min().unwrap();
        let max = *degs.iter().max().unwrap();
        let average = Ratio::new(2 * self.m as u64, self.n as u64);
        DegreeStats { min, max, average, edges: self.m }
    }

    /// Breadth-first distances from `src`; `usize::MAX` marks unreachable
    /// vertices. `limit` truncates the search depth.
    pub(crate) fn bfs_distances(&self, src: u32, limit: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[src as usize] = 0;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            if du >= limit {
                continue;
            }
            for &w in &self.adj[u as usize] {
                if dist[w as usize] == usize::MAX {
                    dist[w as usize] = du + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Distance between two vertices, if connected.
    pub fn distance(&self, u: u32, v: u32) -> Option<usize> {
        let d = self.bfs_distances(u, self.n)[v as usize];
        (d != usize::MAX).then_some(d)
    }
}

/// Checks that `cycle` is a genuine simple cycle of `g`: distinct vertices,
/// consecutive adjacency and a closing edge.
pub fn is_simple_cycle(g: &Graph, cycle: &[u32]) -> bool {
    if cycle.len() < 3 {
        return false;
    }
    let mut seen = std::collections::HashSet::with_capacity(cycle.len());
    for &v in cycle {
        if v as usize >= g.n() || !seen.insert(v) {
            return false;
        }
    }
    cycle
        .windows(2)
        .all(|w| g.has_edge(w[0], w[1]))
        && g.has_edge(*cycle.last().unwrap(), cycle[0])
}

/// Checks that `path` is a simple path of `g` (distinct vertices, each
/// consecutive pair adjacent).
pub fn is_simple_path(g: &Graph, path: &[u32]) -> bool {
    if path.is_empty() {
        return false;
    }
    let mut seen = std::collections::HashSet::with_capacity(path.len());
    for &v in path {
        if v as usize >= g.n() || !seen.insert(v) {
            return false;
        }
    }
    path.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert!(matches!(Graph::from_edges(3, [(0, 0)]), Err(GraphError::Loop(0))));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { v: 3, n: 3 })
        ));
    }

    #[test]
    fn parallel_edges_collapse() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn degree_stats_c5() {
        let g = generators::cycle(5);
        let s = g.degree_stats();
        assert_eq!((s.min, s.max, s.edges), (2, 2, 5));
        assert_eq!(s.average, Ratio::from_integer(2));
    }

    #[test]
    fn degree_stats_single_vertex() {
        let g = Graph::empty(1);
        let s = g.degree_stats();
        assert_eq!((s.min, s.max, s.edges), (0, 0, 0));
        assert_eq!(s.average, Ratio::from_integer(0));
    }

    #[test]
    fn distance_on_path() {
        let g = generators::path(4);
        assert_eq!(g.distance(0, 3), Some(3));
        let h = Graph::empty(2);
        assert_eq!(h.distance(0, 1), None);
    }
}
