//! Counting non-returning walks: walks whose consecutive edges are
//! distinct (no immediate backtracking). Counts grow past 64 bits quickly,
//! so the accumulation is exact big-integer arithmetic throughout.

use super::cycles::EdgeIndex;
use super::Graph;
use num::BigUint;
use num::Zero;

impl Graph {
    /// Exact number of non-returning walks with `r` edges, counted as
    /// directed vertex sequences. `r = 0` counts single vertices.
    pub fn count_nonreturning_walks(&self, r: usize) -> BigUint {
        if r == 0 {
            return BigUint::from(self.n());
        }
        let idx = EdgeIndex::new(self);
        let ne = idx.targets.len();
        // counts[e] = number of non-returning walks of the current length
        // ending with directed edge e.
        let mut counts: Vec<BigUint> = vec![BigUint::from(1u32); ne];
        for _ in 1..r {
            // Sum of incoming counts per vertex, then subtract the reverse
            // edge's contribution for each extension.
            let mut incoming: Vec<BigUint> = vec![BigUint::zero(); self.n()];
            for e in 0..ne {
                let head = idx.targets[e] as usize;
                incoming[head] += &counts[e];
            }
            let mut next: Vec<BigUint> = Vec::with_capacity(ne);
            for f in 0..ne {
                let tail = idx.sources[f] as usize;
                next.push(&incoming[tail] - &counts[idx.rev[f] as usize]);
            }
            counts = next;
        }
        counts.iter().sum()
    }
}
