//! Small named graphs used across tests, docs and fixtures.

use crate::graph::Graph;

/// The cycle `C_n`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::from_edges(n, (0..n as u32).map(|i| (i, (i + 1) % n as u32))).unwrap()
}

/// The path on `n` vertices (`n - 1` edges).
pub fn path(n: usize) -> Graph {
    assert!(n >= 1);
    Graph::from_edges(n, (1..n as u32).map(|i| (i - 1, i))).unwrap()
}

/// The complete graph `K_n`.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// The Petersen graph: outer 5-cycle, inner pentagram, spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5u32 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edges(10, edges).unwrap()
}

/// A chain of `r` triangles over the path `x_0 .. x_r`: apex `a_i` is
/// joined to `x_{i-1}` and `x_i`. Vertices `0..=r` form the path, vertex
/// `r + i` is apex `i`.
pub fn triangle_chain(r: usize) -> Graph {
    assert!(r >= 1);
    let mut edges = Vec::new();
    for i in 0..r as u32 {
        edges.push((i, i + 1));
        let apex = r as u32 + 1 + i;
        edges.push((i, apex));
        edges.push((i + 1, apex));
    }
    Graph::from_edges(2 * r + 1, edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_shapes() {
        assert_eq!(cycle(6).m(), 6);
        assert_eq!(path(4).m(), 3);
        assert_eq!(complete(5).m(), 10);
        let p = petersen();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert!(p.degree_stats().min == 3 && p.degree_stats().max == 3);
        let t = triangle_chain(2);
        assert_eq!((t.n(), t.m()), (5, 6));
    }
}
