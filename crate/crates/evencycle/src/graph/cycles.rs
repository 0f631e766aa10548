//! Girth and shortest-even-cycle detection.
//!
//! Even-cycle detection runs in two phases. A truncated breadth-first
//! search over directed-edge states tracks, per (edge, parity) pair, the
//! shortest non-returning walk from each source; arrivals back at the
//! source with even parity are candidate closed walks. A candidate walk
//! need not be a simple cycle (two odd cycles can splice into an even
//! closed walk), so candidates are validated by reconstruction, and every
//! even length from the smallest candidate upwards is confirmed or refuted
//! by a bounded depth-first search for a cycle of exactly that length.
//! The candidate lengths are sound lower bounds: any even cycle of length
//! `l <= cap` induces a candidate of length at most `l`, so "no candidates"
//! certifies "no even cycle within the cap".

use super::Graph;
use rayon::prelude::*;

/// A witness even cycle: `cycle` lists the vertices in order, with the
/// closing edge implied from last back to first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenCycleWitness {
    pub length: usize,
    pub cycle: Vec<u32>,
}

/// Verdict of [`Graph::certify_no_even_cycles`]: `witness` is `None` when
/// the graph has no even cycle of length at most `2k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenCycleCertificate {
    pub k: usize,
    pub witness: Option<EvenCycleWitness>,
}

impl EvenCycleCertificate {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Directed-edge indexing shared by the walk kernels: directed edge
/// `offsets[u] + i` is `u -> adj[u][i]`, and `rev` maps each directed edge
/// to its reverse.
pub(crate) struct EdgeIndex {
    pub offsets: Vec<u32>,
    pub targets: Vec<u32>,
    pub sources: Vec<u32>,
    pub rev: Vec<u32>,
}

impl EdgeIndex {
    pub fn new(g: &Graph) -> EdgeIndex {
        let n = g.n();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::with_capacity(2 * g.m());
        let mut sources = Vec::with_capacity(2 * g.m());
        let mut acc = 0u32;
        for u in 0..n as u32 {
            offsets.push(acc);
            for &w in g.neighbors(u) {
                targets.push(w);
                sources.push(u);
                acc += 1;
            }
        }
        offsets.push(acc);
        let mut rev = vec![0u32; targets.len()];
        for e in 0..targets.len() {
            let u = sources[e];
            let w = targets[e];
            let pos = g.neighbors(w).binary_search(&u).unwrap() as u32;
            rev[e] = offsets[w as usize] + pos;
        }
        EdgeIndex { offsets, targets, sources, rev }
    }

    pub fn out_edges(&self, u: u32) -> std::ops::Range<usize> {
        self.offsets[u as usize] as usize..self.offsets[u as usize + 1] as usize
    }
}

struct Candidate {
    walk: Vec<u32>,
    simple: bool,
}

/// Parity BFS from one source. Returns, for each even length `4..=cap`,
/// the first closed walk of that length found (if any).
fn source_candidates(g: &Graph, idx: &EdgeIndex, src: u32, cap: usize) -> Vec<Option<Candidate>> {
    let nstates = idx.targets.len() * 2;
    let mut dist = vec![u16::MAX; nstates];
    let mut parent = vec![u32::MAX; nstates];
    let mut queue = std::collections::VecDeque::new();
    let mut found: Vec<Option<u32>> = vec![None; cap + 1];

    for e in idx.out_edges(src) {
        let s = (e * 2 + 1) as u32;
        if dist[s as usize] == u16::MAX {
            dist[s as usize] = 1;
            queue.push_back(s);
        }
    }
    while let Some(s) = queue.pop_front() {
        let d = dist[s as usize] as usize;
        if d >= cap {
            continue;
        }
        let e = (s / 2) as usize;
        let parity = s & 1;
        let y = idx.targets[e];
        for f in idx.out_edges(y) {
            if f as u32 == idx.rev[e] {
                continue;
            }
            let t = f as u32 * 2 + (1 - parity);
            if dist[t as usize] != u16::MAX {
                continue;
            }
            dist[t as usize] = (d + 1) as u16;
            parent[t as usize] = s;
            let z = idx.targets[f];
            if z == src && (d + 1) % 2 == 0 && found[d + 1].is_none() {
                found[d + 1] = Some(t);
            }
            queue.push_back(t);
        }
    }

    let mut out: Vec<Option<Candidate>> = Vec::with_capacity(cap + 1);
    for len in 0..=cap {
        out.push(found[len].map(|state| {
            // Reconstruct the closed walk src .. src and drop the final
            // return to the source.
            let mut verts = Vec::with_capacity(len + 1);
            let mut s = state;
            while s != u32::MAX {
                verts.push(idx.targets[(s / 2) as usize]);
                s = parent[s as usize];
            }
            verts.push(src);
            verts.reverse();
            debug_assert_eq!(verts.len(), len + 1);
            debug_assert_eq!(*verts.last().unwrap(), src);
            verts.pop();
            let mut seen = vec![false; g.n()];
            let simple = verts.iter().all(|&v| !std::mem::replace(&mut seen[v as usize], true));
            Candidate { walk: verts, simple }
        }));
    }
    out
}

/// Searches for a simple cycle with exactly `len` edges; deterministic
/// (smallest-rooted, lexicographic DFS).
fn find_cycle_of_exact_length(g: &Graph, len: usize) -> Option<Vec<u32>> {
    if len < 3 {
        return None;
    }
    let n = g.n();
    for s in 0..n as u32 {
        if g.degree(s) < 2 {
            continue;
        }
        let dist = g.bfs_distances(s, len - 1);
        let mut in_path = vec![false; n];
        in_path[s as usize] = true;
        let mut path = vec![s];
        if dfs_exact(g, s, &dist, &mut path, &mut in_path, len) {
            return Some(path);
        }
    }
    None
}

fn dfs_exact(
    g: &Graph,
    root: u32,
    dist: &[usize],
    path: &mut Vec<u32>,
    in_path: &mut [bool],
    len: usize,
) -> bool {
    let cur = *path.last().unwrap();
    let used = path.len() - 1;
    if used == len - 1 {
        return g.has_edge(cur, root);
    }
    for &w in g.neighbors(cur) {
        if w <= root || in_path[w as usize] {
            continue;
        }
        if dist[w as usize] > len - used - 1 {
            continue;
        }
        path.push(w);
        in_path[w as usize] = true;
        if dfs_exact(g, root, dist, path, in_path, len) {
            return true;
        }
        in_path[w as usize] = false;
        path.pop();
    }
    false
}

impl Graph {
    /// Length of the shortest cycle of any parity, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![u32::MAX; n];
        let mut stamp = vec![0u32; n];
        let mut round = 0u32;
        let mut queue = std::collections::VecDeque::new();
        for v in 0..n as u32 {
            if best == Some(3) {
                break;
            }
            round += 1;
            let limit = best.map(|b| b / 2).unwrap_or(n);
            queue.clear();
            dist[v as usize] = 0;
            parent[v as usize] = u32::MAX;
            stamp[v as usize] = round;
            queue.push_back(v);
            while let Some(u) = queue.pop_front() {
                let du = dist[u as usize];
                if du >= limit {
                    continue;
                }
                for &w in self.neighbors(u) {
                    if stamp[w as usize] != round {
                        stamp[w as usize] = round;
                        dist[w as usize] = du + 1;
                        parent[w as usize] = u;
                        queue.push_back(w);
                    } else if parent[u as usize] != w {
                        let cand = du + dist[w as usize] + 1;
                        if best.map(|b| cand < b).unwrap_or(true) {
                            best = Some(cand);
                        }
                    }
                }
            }
        }
        best
    }

    /// The minimum even `l <= cap` such that the graph contains a cycle of
    /// length `l`, together with a witness cycle; `None` if there is none.
    ///
    /// `cap` must be even and at least 4.
    pub fn shortest_even_cycle(&self, cap: usize) -> Option<EvenCycleWitness> {
        assert!(cap >= 4 && cap % 2 == 0, "cap must be even and >= 4");
        if self.m() < 2 {
            return None;
        }
        let idx = EdgeIndex::new(self);
        let n = self.n();

        // Candidate generation per source, merged in source order so the
        // outcome is identical however the sources are scheduled.
        let per_source: Vec<Vec<Option<Candidate>>> = if n * self.m() >= 50_000 {
            (0..n as u32)
                .into_par_iter()
                .map(|v| source_candidates(self, &idx, v, cap))
                .collect()
        } else {
            (0..n as u32).map(|v| source_candidates(self, &idx, v, cap)).collect()
        };

        let mut merged: Vec<Option<Candidate>> = (0..=cap).map(|_| None).collect();
        for cands in per_source {
            for (len, cand) in cands.into_iter().enumerate() {
                let Some(cand) = cand else { continue };
                match &merged[len] {
                    None => merged[len] = Some(cand),
                    Some(kept) if !kept.simple && cand.simple => merged[len] = Some(cand),
                    _ => {}
                }
            }
        }

        let first = (4..=cap).step_by(2).find(|&len| merged[len].is_some())?;
        for len in (first..=cap).step_by(2) {
            if let Some(cand) = &merged[len] {
                if cand.simple {
                    return Some(EvenCycleWitness { length: len, cycle: cand.walk.clone() });
                }
            }
            if let Some(cycle) = find_cycle_of_exact_length(self, len) {
                return Some(EvenCycleWitness { length: len, cycle });
            }
        }
        None
    }

    /// Pass/fail certificate that the graph has no even cycle of length at
    /// most `2k`. Requires `k >= 2`.
    pub fn certify_no_even_cycles(&self, k: usize) -> EvenCycleCertificate {
        assert!(k >= 2, "k must be at least 2");
        let witness = self.shortest_even_cycle(2 * k);
        if let Some(w) = &witness {
            debug_assert!(super::is_simple_cycle(self, &w.cycle));
            debug_assert!(w.length % 2 == 0 && w.length <= 2 * k);
        }
        EvenCycleCertificate { k, witness }
    }
}

#[cfg(test)]
mod tests {
    use crate::generators;
    use crate::graph::is_simple_cycle;

    #[test]
    fn c5_has_no_even_cycle() {
        let g = generators::cycle(5);
        assert!(g.shortest_even_cycle(10).is_none());
    }

    #[test]
    fn k4_has_a_four_cycle() {
        let g = generators::complete(4);
        let w = g.shortest_even_cycle(4).unwrap();
        assert_eq!(w.length, 4);
        assert!(is_simple_cycle(&g, &w.cycle));
        assert_eq!(w.cycle.len(), 4);
    }

    #[test]
    fn petersen_shortest_even_cycle_is_six() {
        // Fixed by the brute-force oracle in `reference`.
        let g = generators::petersen();
        assert_eq!(crate::graph::reference::shortest_even_cycle_brute(&g, 12), Some(6));
        let w = g.shortest_even_cycle(12).unwrap();
        assert_eq!(w.length, 6);
        assert!(is_simple_cycle(&g, &w.cycle));
    }

    #[test]
    fn girth_examples() {
        assert_eq!(generators::path(5).girth(), None);
        assert_eq!(generators::petersen().girth(), Some(5));
        assert_eq!(generators::cycle(7).girth(), Some(7));
        assert_eq!(generators::complete(4).girth(), Some(3));
    }

    #[test]
    fn certify_examples() {
        let k4 = generators::complete(4);
        let cert = k4.certify_no_even_cycles(2);
        assert!(!cert.passed());
        assert_eq!(cert.witness.unwrap().length, 4);

        let c6 = generators::cycle(6);
        let cert = c6.certify_no_even_cycles(3);
        assert!(!cert.passed());
        assert_eq!(cert.witness.unwrap().length, 6);

        let c5 = generators::cycle(5);
        assert!(c5.certify_no_even_cycles(5).passed());
    }

    #[test]
    fn two_triangles_sharing_a_vertex() {
        // Closed even walks through the shared vertex are not simple
        // cycles; the confirmation pass must reject them.
        let g = crate::graph::Graph::from_edges(
            5,
            [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)],
        )
        .unwrap();
        assert!(g.shortest_even_cycle(8).is_none());
        assert!(g.certify_no_even_cycles(4).passed());
    }

    #[test]
    fn theta_graph_even_cycle() {
        // Paths of lengths 2, 3, 4 between two hubs: shortest even cycle 6.
        // u=0, v=1; path A: 0-2-1; path B: 0-3-4-1; path C: 0-5-6-7-1.
        let g = crate::graph::Graph::from_edges(
            8,
            [(0, 2), (2, 1), (0, 3), (3, 4), (4, 1), (0, 5), (5, 6), (6, 7), (7, 1)],
        )
        .unwrap();
        let w = g.shortest_even_cycle(12).unwrap();
        assert_eq!(w.length, 6);
    }

    #[test]
    fn heawood_girth_is_six() {
        let g = crate::geometry::incidence_pg2(2).unwrap();
        assert_eq!(crate::graph::reference::girth_brute(&g), Some(6));
        assert_eq!(g.girth(), Some(6));
    }
}
