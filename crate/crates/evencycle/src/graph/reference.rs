//! Straightforward brute-force enumerations kept as independent oracles
//! for the optimised kernels. Nothing here shares code with the production
//! algorithms: cycles are enumerated by plain rooted DFS, walks by explicit
//! sequence extension.

use super::Graph;

/// Every simple cycle of length at most `cap`, each listed once: rooted at
/// its smallest vertex, traversed towards its smaller second endpoint.
pub fn all_cycles_up_to(g: &Graph, cap: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut path = Vec::new();
    let mut in_path = vec![false; g.n()];
    for s in 0..g.n() as u32 {
        path.push(s);
        in_path[s as usize] = true;
        cycle_dfs(g, s, cap, &mut path, &mut in_path, &mut out);
        in_path[s as usize] = false;
        path.pop();
    }
    out
}

fn cycle_dfs(
    g: &Graph,
    root: u32,
    cap: usize,
    path: &mut Vec<u32>,
    in_path: &mut [bool],
    out: &mut Vec<Vec<u32>>,
) {
    let cur = *path.last().unwrap();
    if path.len() >= 3 && g.has_edge(cur, root) && path[1] < cur {
        out.push(path.clone());
    }
    if path.len() == cap {
        return;
    }
    for &w in g.neighbors(cur) {
        if w <= root || in_path[w as usize] {
            continue;
        }
        path.push(w);
        in_path[w as usize] = true;
        cycle_dfs(g, root, cap, path, in_path, out);
        in_path[w as usize] = false;
        path.pop();
    }
}

/// Minimum length of an even cycle of length at most `cap`, by exhaustive
/// cycle enumeration.
pub fn shortest_even_cycle_brute(g: &Graph, cap: usize) -> Option<usize> {
    all_cycles_up_to(g, cap)
        .iter()
        .map(|c| c.len())
        .filter(|l| l % 2 == 0)
        .min()
}

/// Girth by exhaustive cycle enumeration.
pub fn girth_brute(g: &Graph) -> Option<usize> {
    all_cycles_up_to(g, g.n()).iter().map(|c| c.len()).min()
}

/// True when the graph has no even cycle of length at most `2k`.
pub fn no_even_cycles_brute(g: &Graph, k: usize) -> bool {
    shortest_even_cycle_brute(g, 2 * k).is_none()
}

/// Non-returning walks counted by explicit extension of every sequence.
/// Exponential; for small test graphs only.
pub fn count_nonreturning_walks_brute(g: &Graph, r: usize) -> u64 {
    if r == 0 {
        return g.n() as u64;
    }
    let mut total = 0;
    for s in 0..g.n() as u32 {
        let mut walk = vec![s];
        total += extend_walk(g, &mut walk, r);
    }
    total
}

fn extend_walk(g: &Graph, walk: &mut Vec<u32>, r: usize) -> u64 {
    if walk.len() == r + 1 {
        return 1;
    }
    let cur = *walk.last().unwrap();
    let prev = walk.len().checked_sub(2).map(|i| walk[i]);
    let mut total = 0;
    for &w in g.neighbors(cur) {
        if prev == Some(w) {
            continue;
        }
        walk.push(w);
        total += extend_walk(g, walk, r);
        walk.pop();
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn petersen_cycle_census() {
        let g = generators::petersen();
        let cycles = all_cycles_up_to(&g, 6);
        // Petersen: twelve 5-cycles, ten 6-cycles, nothing shorter.
        assert_eq!(cycles.iter().filter(|c| c.len() == 3).count(), 0);
        assert_eq!(cycles.iter().filter(|c| c.len() == 4).count(), 0);
        assert_eq!(cycles.iter().filter(|c| c.len() == 5).count(), 12);
        assert_eq!(cycles.iter().filter(|c| c.len() == 6).count(), 10);
        assert_eq!(girth_brute(&g), Some(5));
    }

    #[test]
    fn each_cycle_listed_once() {
        let g = generators::complete(4);
        let cycles = all_cycles_up_to(&g, 4);
        // K4 has four triangles and three 4-cycles.
        assert_eq!(cycles.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(cycles.iter().filter(|c| c.len() == 4).count(), 3);
    }
}
