//! Bounded enumeration and counting of simple paths.

use super::{Graph, GraphError, DEFAULT_PATH_CEILING};

impl Graph {
    /// All simple paths from `u` to `v` with exactly `len` edges, in
    /// lexicographic order of their vertex sequences, capped at the default
    /// output ceiling.
    pub fn enumerate_paths(&self, u: u32, v: u32, len: usize) -> Result<Vec<Vec<u32>>, GraphError> {
        self.enumerate_paths_with_ceiling(u, v, len, DEFAULT_PATH_CEILING)
    }

    pub fn enumerate_paths_with_ceiling(
        &self,
        u: u32,
        v: u32,
        len: usize,
        ceiling: usize,
    ) -> Result<Vec<Vec<u32>>, GraphError> {
        assert!(u != v, "path endpoints must differ");
        assert!(len >= 1, "path length must be at least 1");
        assert!((u as usize) < self.n() && (v as usize) < self.n());
        let dist_to_target = self.bfs_distances(v, len);
        let mut out = Vec::new();
        let mut in_path = vec![false; self.n()];
        in_path[u as usize] = true;
        let mut path = vec![u];
        self.paths_dfs(v, len, &dist_to_target, &mut path, &mut in_path, ceiling, &mut out)?;
        Ok(out)
    }

    fn paths_dfs(
        &self,
        target: u32,
        len: usize,
        dist_to_target: &[usize],
        path: &mut Vec<u32>,
        in_path: &mut [bool],
        ceiling: usize,
        out: &mut Vec<Vec<u32>>,
    ) -> Result<(), GraphError> {
        let cur = *path.last().unwrap();
        let used = path.len() - 1;
        if used == len {
            if cur == target {
                if out.len() >= ceiling {
                    return Err(GraphError::ExplosionCeiling(ceiling));
                }
                out.push(path.clone());
            }
            return Ok(());
        }
        for &w in self.neighbors(cur) {
            if in_path[w as usize] {
                continue;
            }
            // Must still be able to reach the target with the remaining
            // edge budget.
            if dist_to_target[w as usize] > len - used - 1 {
                continue;
            }
            path.push(w);
            in_path[w as usize] = true;
            self.paths_dfs(target, len, dist_to_target, path, in_path, ceiling, out)?;
            in_path[w as usize] = false;
            path.pop();
        }
        Ok(())
    }

    /// Number of simple paths (as directed vertex sequences) of each length
    /// `0..=max_len`, so `counts[0] = n` and `counts[1] = 2m`.
    pub fn count_simple_paths_up_to(&self, max_len: usize) -> Vec<u128> {
        let mut counts = vec![0u128; max_len + 1];
        counts[0] = self.n() as u128;
        if max_len == 0 {
            return counts;
        }
        let mut in_path = vec![false; self.n()];
        for s in 0..self.n() as u32 {
            in_path[s as usize] = true;
            self.count_dfs(s, 0, max_len, &mut in_path, &mut counts);
            in_path[s as usize] = false;
        }
        counts
    }

    fn count_dfs(&self, cur: u32, used: usize, max_len: usize, in_path: &mut [bool], counts: &mut [u128]) {
        if used == max_len {
            return;
        }
        for &w in self.neighbors(cur) {
            if in_path[w as usize] {
                continue;
            }
            counts[used + 1] += 1;
            in_path[w as usize] = true;
            self.count_dfs(w, used + 1, max_len, in_path, counts);
            in_path[w as usize] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::graph::is_simple_path;

    #[test]
    fn antipodal_pair_on_c6_has_two_paths() {
        let g = generators::cycle(6);
        let paths = g.enumerate_paths(0, 3, 3).unwrap();
        assert_eq!(paths.len(), 2);
        for p in &paths {
            assert!(is_simple_path(&g, p));
            assert_eq!(p.len(), 4);
        }
        assert!(paths[0] < paths[1], "lexicographic order");
    }

    #[test]
    fn adjacent_pair_in_k4() {
        let g = generators::complete(4);
        assert_eq!(g.enumerate_paths(0, 1, 1).unwrap(), vec![vec![0, 1]]);
    }

    #[test]
    fn ceiling_is_enforced() {
        let g = generators::complete(7);
        let err = g.enumerate_paths_with_ceiling(0, 1, 5, 3).unwrap_err();
        assert_eq!(err, GraphError::ExplosionCeiling(3));
    }

    #[test]
    fn directed_path_counts() {
        let g = generators::cycle(5);
        let counts = g.count_simple_paths_up_to(4);
        assert_eq!(counts[0], 5);
        assert_eq!(counts[1], 10);
        assert_eq!(counts[2], 10);
        // On a cycle every vertex sequence extends one way around.
        assert_eq!(counts[4], 10);
    }
}
