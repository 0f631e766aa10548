//! Vine decompositions of short-path unions.
//!
//! In a graph with no even cycle of length at most `2k`, the union of all
//! `uv`-paths of length at most `k` collapses into a rigid shape: a unique
//! geodesic plus internally disjoint ears attached in non-crossing
//! left-to-right order, every ear closing an odd cycle with its geodesic
//! segment. The functions here compute that decomposition, derive the
//! family of ear subsets used by the length-`k` paths, and check the whole
//! chain of properties (geodesic uniqueness, injectivity, the antichain
//! property, size bounds). Violations are reported as errors rather than
//! panics so the same code doubles as a falsification harness on
//! near-miss inputs.

use crate::graph::{Graph, GraphError};
use std::collections::{BTreeSet, HashMap, HashSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VineError {
    #[error("endpoints are farther apart than k={k}")]
    TooFar { dist: Option<usize>, k: usize },
    #[error("graph has an even cycle of length {len} (at most 2k)")]
    Precondition { len: usize, witness: Vec<u32> },
    #[error("not a theta graph: {0}")]
    NotATheta(String),
    #[error("lemma violation: {0}")]
    LemmaViolation(Violation),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Structured witness for a failed check; these falsify the caller's
/// precondition bookkeeping and exist for diagnosis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NonUniqueGeodesic { first: Vec<u32>, second: Vec<u32> },
    NotAVine { reason: String },
    EvenEarCycle { ear: usize, cycle_len: usize },
    NotInjective { first: Vec<u32>, second: Vec<u32> },
    NotAntichain { smaller: Vec<u32>, larger: Vec<u32> },
    SizeExceeded { path: Vec<u32>, size: usize, bound: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::NonUniqueGeodesic { first, second } => {
                write!(f, "two geodesics: {first:?} and {second:?}")
            }
            Violation::NotAVine { reason } => write!(f, "short-path union is not a vine: {reason}"),
            Violation::EvenEarCycle { ear, cycle_len } => {
                write!(f, "ear {ear} closes an even cycle of length {cycle_len}")
            }
            Violation::NotInjective { first, second } => {
                write!(f, "paths {first:?} and {second:?} use the same ear set")
            }
            Violation::NotAntichain { smaller, larger } => {
                write!(f, "ear sets of {smaller:?} and {larger:?} are nested")
            }
            Violation::SizeExceeded { path, size, bound } => {
                write!(f, "path {path:?} uses {size} ears, bound {bound}")
            }
        }
    }
}

/// A vertex- and edge-subset of a host graph, in host indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub vertices: Vec<u32>,
    pub edges: Vec<(u32, u32)>,
}

/// One ear: a path from `from` to `to` (both on the geodesic) whose
/// interior avoids the geodesic. `path` lists the full vertex sequence
/// including the attachment endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ear {
    pub from: u32,
    pub to: u32,
    pub path: Vec<u32>,
}

impl Ear {
    /// Length in edges.
    pub fn len(&self) -> usize {
        self.path.len() - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VineChecks {
    pub geodesic_unique: bool,
    pub ordering_ok: bool,
    pub ear_cycles_odd: bool,
    pub injective: bool,
    pub antichain: bool,
    pub sizes_within_bound: bool,
}

/// One path of length `k` together with its ear set `f(P)` (1-based ear
/// indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyEntry {
    pub path: Vec<u32>,
    pub ears_used: BTreeSet<usize>,
}

/// The decomposition certificate: geodesic, ordered ears, the family of
/// ear sets of the length-`k` paths, and the outcome of every check. A
/// certificate is only ever returned with all checks true; failures
/// surface as [`VineError::LemmaViolation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VineCertificate {
    pub u: u32,
    pub v: u32,
    pub k: usize,
    pub geodesic: Vec<u32>,
    pub ears: Vec<Ear>,
    pub family: Vec<FamilyEntry>,
    pub checks: VineChecks,
}

impl VineCertificate {
    /// Number of ears.
    pub fn r(&self) -> usize {
        self.ears.len()
    }

    /// Geodesic length in edges.
    pub fn geodesic_len(&self) -> usize {
        self.geodesic.len() - 1
    }

    /// Line-oriented text report consumed by the CLI.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let join =
            |p: &[u32]| p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("-");
        out.push_str(&format!("u={} v={} k={}\n", self.u, self.v, self.k));
        out.push_str(&format!(
            "geodesic: {} (length {})\n",
            join(&self.geodesic),
            self.geodesic_len()
        ));
        out.push_str(&format!("ears: {}\n", self.ears.len()));
        for (i, ear) in self.ears.iter().enumerate() {
            out.push_str(&format!(
                "  ear {}: {} attached at [{},{}]\n",
                i + 1,
                join(&ear.path),
                ear.from,
                ear.to
            ));
        }
        out.push_str(&format!("paths of length {}: {}\n", self.k, self.family.len()));
        for entry in &self.family {
            let set: Vec<String> = entry.ears_used.iter().map(|i| i.to_string()).collect();
            out.push_str(&format!("  {} ears {{{}}}\n", join(&entry.path), set.join(",")));
        }
        let c = &self.checks;
        out.push_str(&format!(
            "checks: geodesic-unique={} ordering={} ear-cycles-odd={} injective={} antichain={} sizes={}\n",
            verdict(c.geodesic_unique),
            verdict(c.ordering_ok),
            verdict(c.ear_cycles_odd),
            verdict(c.injective),
            verdict(c.antichain),
            verdict(c.sizes_within_bound),
        ));
        out
    }
}

fn verdict(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

/// The family of ear sets plus the size bound, as recomputed from a
/// certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathFamily {
    pub entries: Vec<FamilyEntry>,
    /// `k - |P*|`, the maximum allowed ear-set size.
    pub size_bound: usize,
}

/// Given three internally disjoint paths with the same endpoints, returns
/// one of the three fused cycles that has even length. The three cycle
/// lengths sum to `2(|A|+|B|+|C|)`, so one of them is always even.
pub fn find_even_cycle_in_theta(a: &[u32], b: &[u32], c: &[u32]) -> Result<Vec<u32>, VineError> {
    for p in [a, b, c] {
        if p.len() < 2 {
            return Err(VineError::NotATheta("each path needs at least one edge".into()));
        }
        let mut seen = HashSet::new();
        if !p.iter().all(|&x| seen.insert(x)) {
            return Err(VineError::NotATheta("path revisits a vertex".into()));
        }
    }
    let u = a[0];
    let v = *a.last().unwrap();
    if u == v {
        return Err(VineError::NotATheta("endpoints coincide".into()));
    }
    // Normalise all three to run from u to v.
    let orient = |p: &[u32]| -> Result<Vec<u32>, VineError> {
        if p[0] == u && *p.last().unwrap() == v {
            Ok(p.to_vec())
        } else if p[0] == v && *p.last().unwrap() == u {
            Ok(p.iter().rev().copied().collect())
        } else {
            Err(VineError::NotATheta("paths do not share both endpoints".into()))
        }
    };
    let paths = [a.to_vec(), orient(b)?, orient(c)?];
    let mut internals: HashSet<u32> = HashSet::new();
    let mut one_edge_count = 0;
    for p in &paths {
        if p.len() == 2 {
            one_edge_count += 1;
        }
        for &x in &p[1..p.len() - 1] {
            if x == u || x == v || !internals.insert(x) {
                return Err(VineError::NotATheta("paths are not internally disjoint".into()));
            }
        }
    }
    if one_edge_count > 1 {
        return Err(VineError::NotATheta("two single-edge paths form a parallel edge".into()));
    }
    for i in 0..3 {
        for j in i + 1..3 {
            let len = (paths[i].len() - 1) + (paths[j].len() - 1);
            if len % 2 == 0 {
                let mut cycle = paths[i].clone();
                cycle.extend(paths[j][1..paths[j].len() - 1].iter().rev());
                return Ok(cycle);
            }
        }
    }
    unreachable!("three cycle lengths summing to an even number include an even one");
}

fn check_precondition(g: &Graph, k: usize) -> Result<(), VineError> {
    let cert = g.certify_no_even_cycles(k);
    match cert.witness {
        None => Ok(()),
        Some(w) => Err(VineError::Precondition { len: w.length, witness: w.cycle }),
    }
}

fn geodesic_distance(g: &Graph, u: u32, v: u32, k: usize) -> Result<usize, VineError> {
    assert!(u != v, "endpoints must differ");
    match g.distance(u, v) {
        Some(d) if d <= k => Ok(d),
        d => Err(VineError::TooFar { dist: d, k }),
    }
}

fn the_unique_geodesic(g: &Graph, u: u32, v: u32, dist: usize) -> Result<Vec<u32>, VineError> {
    let mut shortest = g.enumerate_paths(u, v, dist)?;
    if shortest.len() > 1 {
        let second = shortest.swap_remove(1);
        let first = shortest.swap_remove(0);
        return Err(VineError::LemmaViolation(Violation::NonUniqueGeodesic { first, second }));
    }
    Ok(shortest.pop().expect("distance certifies at least one path"))
}

/// The unique shortest `uv`-path in a graph without even cycles of length
/// at most `2k`. Uniqueness is verified by exhaustive enumeration; a
/// second geodesic is reported as a lemma violation.
pub fn unique_geodesic(g: &Graph, u: u32, v: u32, k: usize) -> Result<Vec<u32>, VineError> {
    check_precondition(g, k)?;
    let dist = geodesic_distance(g, u, v, k)?;
    the_unique_geodesic(g, u, v, dist)
}

/// Union of the vertex and edge sets of all `uv`-paths of length at most
/// `k`. Plain enumeration, no even-cycle precondition.
pub fn short_path_union(g: &Graph, u: u32, v: u32, k: usize) -> Result<Subgraph, VineError> {
    let dist = geodesic_distance(g, u, v, k)?;
    let mut vertices: BTreeSet<u32> = BTreeSet::new();
    let mut edges: BTreeSet<(u32, u32)> = BTreeSet::new();
    for len in dist..=k {
        for path in g.enumerate_paths(u, v, len)? {
            vertices.extend(path.iter().copied());
            for w in path.windows(2) {
                edges.insert((w[0].min(w[1]), w[0].max(w[1])));
            }
        }
    }
    Ok(Subgraph { vertices: vertices.into_iter().collect(), edges: edges.into_iter().collect() })
}

fn not_a_vine<T>(reason: impl Into<String>) -> Result<T, VineError> {
    Err(VineError::LemmaViolation(Violation::NotAVine { reason: reason.into() }))
}

/// Decomposes the union of all `uv`-paths of length at most `k` into a
/// vine on the unique geodesic, checking geodesic uniqueness, the
/// left-to-right ear ordering, odd ear cycles, and the family properties
/// of the length-`k` paths. Requires the even-cycle certificate to pass.
pub fn vine_decompose(g: &Graph, u: u32, v: u32, k: usize) -> Result<VineCertificate, VineError> {
    check_precondition(g, k)?;
    let dist = geodesic_distance(g, u, v, k)?;
    let geodesic = the_unique_geodesic(g, u, v, dist)?;
    let h = short_path_union(g, u, v, k)?;

    let mut geo_pos: HashMap<u32, usize> = HashMap::new();
    for (i, &x) in geodesic.iter().enumerate() {
        geo_pos.insert(x, i);
    }

    // Classify the edges of H: geodesic steps, attachments to the
    // geodesic, and interior ear edges.
    let mut interior_adj: HashMap<u32, Vec<u32>> = HashMap::new();
    let mut attachments: HashMap<u32, Vec<u32>> = HashMap::new();
    for &(a, b) in &h.edges {
        match (geo_pos.get(&a), geo_pos.get(&b)) {
            (Some(&pa), Some(&pb)) => {
                if pa.abs_diff(pb) != 1 {
                    return not_a_vine(format!(
                        "edge ({a},{b}) is a chord between geodesic positions {pa} and {pb}"
                    ));
                }
            }
            (Some(_), None) => attachments.entry(b).or_default().push(a),
            (None, Some(_)) => attachments.entry(a).or_default().push(b),
            (None, None) => {
                interior_adj.entry(a).or_default().push(b);
                interior_adj.entry(b).or_default().push(a);
            }
        }
    }
    for list in attachments.values_mut() {
        list.sort_unstable();
    }
    for list in interior_adj.values_mut() {
        list.sort_unstable();
    }

    // Each component of H minus the geodesic must be a path attached by
    // exactly one edge at each end (a lone vertex by exactly two).
    let off_geo: Vec<u32> =
        h.vertices.iter().copied().filter(|x| !geo_pos.contains_key(x)).collect();
    let mut visited: HashSet<u32> = HashSet::new();
    let mut ears: Vec<Ear> = Vec::new();
    for &start in &off_geo {
        if visited.contains(&start) {
            continue;
        }
        let mut comp = vec![start];
        visited.insert(start);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &y in interior_adj.get(&x).map(|v| v.as_slice()).unwrap_or(&[]) {
                if visited.insert(y) {
                    comp.push(y);
                    stack.push(y);
                }
            }
        }
        comp.sort_unstable();
        ears.push(component_to_ear(&comp, &interior_adj, &attachments, &geo_pos)?);
    }

    ears.sort_by_key(|e| (geo_pos[&e.from], geo_pos[&e.to]));

    // Vine ordering: u <= u_1 < v_1 <= u_2 < v_2 <= ... <= v.
    for w in ears.windows(2) {
        if geo_pos[&w[0].to] > geo_pos[&w[1].from] {
            return not_a_vine(format!(
                "ears [{},{}] and [{},{}] overlap on the geodesic",
                w[0].from, w[0].to, w[1].from, w[1].to
            ));
        }
    }

    // Each ear closes an odd cycle with its geodesic segment.
    for (i, ear) in ears.iter().enumerate() {
        let seg = geo_pos[&ear.to] - geo_pos[&ear.from];
        let cycle_len = ear.len() + seg;
        if cycle_len % 2 == 0 {
            return Err(VineError::LemmaViolation(Violation::EvenEarCycle {
                ear: i + 1,
                cycle_len,
            }));
        }
    }

    // Edge accounting: geodesic plus ears must cover H exactly.
    let ear_edges: usize = ears.iter().map(|e| e.len()).sum();
    if dist + ear_edges != h.edges.len() {
        return not_a_vine(format!(
            "H has {} edges but geodesic and ears account for {}",
            h.edges.len(),
            dist + ear_edges
        ));
    }

    let family = compute_family(g, u, v, k, &geodesic, &ears)?;

    Ok(VineCertificate {
        u,
        v,
        k,
        geodesic,
        ears,
        family,
        checks: VineChecks {
            geodesic_unique: true,
            ordering_ok: true,
            ear_cycles_odd: true,
            injective: true,
            antichain: true,
            sizes_within_bound: true,
        },
    })
}

fn component_to_ear(
    comp: &[u32],
    interior_adj: &HashMap<u32, Vec<u32>>,
    attachments: &HashMap<u32, Vec<u32>>,
    geo_pos: &HashMap<u32, usize>,
) -> Result<Ear, VineError> {
    let degree = |x: u32| interior_adj.get(&x).map(|v| v.len()).unwrap_or(0);
    let attach = |x: u32| attachments.get(&x).map(|v| v.as_slice()).unwrap_or(&[]);

    let interior: Vec<u32> = if comp.len() == 1 {
        comp.to_vec()
    } else {
        let ends: Vec<u32> = comp.iter().copied().filter(|&x| degree(x) == 1).collect();
        if ends.len() != 2 || comp.iter().any(|&x| degree(x) > 2) {
            return not_a_vine(format!("off-geodesic component {comp:?} is not a path"));
        }
        let start = *ends.iter().min().unwrap();
        let mut walk = vec![start];
        let mut prev = None;
        loop {
            let cur = *walk.last().unwrap();
            match interior_adj[&cur].iter().copied().find(|&y| Some(y) != prev) {
                Some(y) => {
                    prev = Some(cur);
                    walk.push(y);
                }
                None => break,
            }
            if walk.len() > comp.len() {
                return not_a_vine(format!("off-geodesic component {comp:?} contains a cycle"));
            }
        }
        if walk.len() != comp.len() {
            return not_a_vine(format!("off-geodesic component {comp:?} is not a path"));
        }
        walk
    };

    let first = interior[0];
    let last = *interior.last().unwrap();
    for &x in &interior {
        let expected = if comp.len() == 1 {
            2
        } else if x == first || x == last {
            1
        } else {
            0
        };
        if attach(x).len() != expected {
            return not_a_vine(format!(
                "vertex {x} has {} geodesic attachments, expected {expected}",
                attach(x).len()
            ));
        }
    }
    let (a, b) = if comp.len() == 1 {
        (attach(first)[0], attach(first)[1])
    } else {
        (attach(first)[0], attach(last)[0])
    };
    if a == b {
        return not_a_vine(format!("ear through {comp:?} attaches twice to vertex {a}"));
    }
    let (from, to, ordered) = if geo_pos[&a] < geo_pos[&b] {
        (a, b, interior)
    } else {
        (b, a, interior.into_iter().rev().collect())
    };
    let mut path = Vec::with_capacity(ordered.len() + 2);
    path.push(from);
    path.extend(ordered);
    path.push(to);
    Ok(Ear { from, to, path })
}

fn compute_family(
    g: &Graph,
    u: u32,
    v: u32,
    k: usize,
    geodesic: &[u32],
    ears: &[Ear],
) -> Result<Vec<FamilyEntry>, VineError> {
    let ear_edge_sets: Vec<HashSet<(u32, u32)>> = ears
        .iter()
        .map(|e| e.path.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))).collect())
        .collect();
    let paths = g.enumerate_paths(u, v, k)?;
    let mut entries = Vec::with_capacity(paths.len());
    let mut seen: HashMap<Vec<usize>, Vec<u32>> = HashMap::new();
    let size_bound = k - (geodesic.len() - 1);
    for path in paths {
        let edges: HashSet<(u32, u32)> =
            path.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))).collect();
        let ears_used: BTreeSet<usize> = ear_edge_sets
            .iter()
            .enumerate()
            .filter(|(_, es)| es.is_subset(&edges))
            .map(|(i, _)| i + 1)
            .collect();
        if ears_used.len() > size_bound {
            return Err(VineError::LemmaViolation(Violation::SizeExceeded {
                path,
                size: ears_used.len(),
                bound: size_bound,
            }));
        }
        let key: Vec<usize> = ears_used.iter().copied().collect();
        if let Some(other) = seen.get(&key) {
            return Err(VineError::LemmaViolation(Violation::NotInjective {
                first: other.clone(),
                second: path,
            }));
        }
        seen.insert(key, path.clone());
        entries.push(FamilyEntry { path, ears_used });
    }
    for i in 0..entries.len() {
        for j in 0..entries.len() {
            if i != j && entries[i].ears_used.is_subset(&entries[j].ears_used) {
                return Err(VineError::LemmaViolation(Violation::NotAntichain {
                    smaller: entries[i].path.clone(),
                    larger: entries[j].path.clone(),
                }));
            }
        }
    }
    Ok(entries)
}

/// Recomputes the family of ear sets for the length-`k` paths of a
/// certificate, re-asserting injectivity, the antichain property and the
/// `k - |P*|` size bound.
pub fn path_family(g: &Graph, cert: &VineCertificate) -> Result<PathFamily, VineError> {
    let entries = compute_family(g, cert.u, cert.v, cert.k, &cert.geodesic, &cert.ears)?;
    Ok(PathFamily { entries, size_bound: cert.k - cert.geodesic_len() })
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// The global path-count bound: the largest `C(r, min(floor(r/2), k-r))`
/// over `r <= k` bounds the number of `uv`-paths of length `k` in any
/// graph without even cycles of length at most `2k`.
pub fn path_count_bound(k: usize) -> u64 {
    assert!(k >= 2);
    (0..=k).map(|r| binomial(r, (r / 2).min(k - r))).max().unwrap()
}

/// Per-instance form: with `r` ears over a geodesic of `geo_len` edges,
/// the family size is at most `C(r, min(floor(r/2), k - geo_len))`.
pub fn per_instance_path_bound(r: usize, geo_len: usize, k: usize) -> u64 {
    assert!(geo_len >= 1);
    if geo_len > k {
        return 0;
    }
    binomial(r, (r / 2).min(k - geo_len))
}

/// A graph and endpoint pair achieving [`path_count_bound`] exactly: a
/// chain of `r` triangles over a path of length `r`, with `r` the
/// smallest maximiser (a bare path when `r = 0`).
#[derive(Debug, Clone)]
pub struct EqualityWitness {
    pub graph: Graph,
    pub u: u32,
    pub v: u32,
    pub r: usize,
    pub expected_paths: u64,
}

pub fn equality_witness(k: usize) -> EqualityWitness {
    assert!(k >= 2);
    let bound = path_count_bound(k);
    let r = (0..=k).find(|&r| binomial(r, (r / 2).min(k - r)) == bound).unwrap();
    let (graph, u, v) = if r == 0 {
        (crate::generators::path(k + 1), 0u32, k as u32)
    } else {
        (crate::generators::triangle_chain(r), 0u32, r as u32)
    };
    debug_assert!(graph.certify_no_even_cycles(k).passed());
    let count =
        graph.enumerate_paths(u, v, k).expect("witness graphs are tiny").len() as u64;
    assert_eq!(count, bound, "triangle chain must achieve the bound exactly");
    EqualityWitness { graph, u, v, r, expected_paths: bound }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn theta_even_cycle_examples() {
        // Lengths (1,2,2): the two length-2 paths fuse into a 4-cycle.
        let cycle = find_even_cycle_in_theta(&[0, 1], &[0, 2, 1], &[0, 3, 1]).unwrap();
        assert_eq!(cycle.len(), 4);

        // Lengths (2,3,4): 2+4 = 6 is the even fusion.
        let cycle =
            find_even_cycle_in_theta(&[0, 2, 1], &[0, 3, 4, 1], &[0, 5, 6, 7, 1]).unwrap();
        assert_eq!(cycle.len(), 6);

        // Two single-edge paths are parallel edges, not a theta.
        let err = find_even_cycle_in_theta(&[0, 1], &[0, 1], &[0, 2, 1]).unwrap_err();
        assert!(matches!(err, VineError::NotATheta(_)));

        // Reversed orientations are accepted.
        let cycle =
            find_even_cycle_in_theta(&[0, 2, 1], &[1, 4, 3, 0], &[0, 5, 6, 7, 1]).unwrap();
        assert_eq!(cycle.len(), 6);
    }

    #[test]
    fn unique_geodesic_on_path() {
        let g = generators::path(3);
        assert_eq!(unique_geodesic(&g, 0, 2, 2).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn c6_fails_the_precondition() {
        let g = generators::cycle(6);
        let err = unique_geodesic(&g, 0, 3, 3).unwrap_err();
        assert!(matches!(err, VineError::Precondition { len: 6, .. }));
    }

    #[test]
    fn fano_distance_two_pairs() {
        let g = crate::geometry::erdos_renyi_polarity(2).unwrap();
        for u in 0..7u32 {
            for v in 0..7u32 {
                if u == v || g.distance(u, v) != Some(2) {
                    continue;
                }
                let geo = unique_geodesic(&g, u, v, 2).unwrap();
                assert_eq!(geo.len(), 3);
            }
        }
    }

    #[test]
    fn too_far_is_reported() {
        let g = generators::path(6);
        let err = unique_geodesic(&g, 0, 5, 3).unwrap_err();
        assert!(matches!(err, VineError::TooFar { dist: Some(5), k: 3 }));
    }

    #[test]
    fn short_path_union_examples() {
        // Triangle chain, k = 3: the whole graph.
        let g = generators::triangle_chain(2);
        let h = short_path_union(&g, 0, 2, 3).unwrap();
        assert_eq!(h.vertices, vec![0, 1, 2, 3, 4]);
        assert_eq!(h.edges.len(), 6);

        // A tree: exactly the tree path.
        let t = generators::path(5);
        let h = short_path_union(&t, 0, 3, 4).unwrap();
        assert_eq!(h.vertices, vec![0, 1, 2, 3]);
        assert_eq!(h.edges.len(), 3);

        // C7 with adjacent endpoints, k = 3: just the edge (the far arc is
        // too long).
        let c = generators::cycle(7);
        let h = short_path_union(&c, 0, 1, 3).unwrap();
        assert_eq!(h.vertices, vec![0, 1]);
        assert_eq!(h.edges, vec![(0, 1)]);
    }

    #[test]
    fn triangle_chain_decomposition() {
        let g = generators::triangle_chain(2);
        let cert = vine_decompose(&g, 0, 2, 3).unwrap();
        assert_eq!(cert.geodesic, vec![0, 1, 2]);
        assert_eq!(cert.r(), 2);
        assert_eq!(cert.ears[0].path, vec![0, 3, 1]);
        assert_eq!(cert.ears[1].path, vec![1, 4, 2]);
        // Family {{1},{2}} for the two length-3 paths (entries follow path
        // order, the family itself is a set).
        let mut sets: Vec<Vec<usize>> =
            cert.family.iter().map(|e| e.ears_used.iter().copied().collect()).collect();
        sets.sort();
        assert_eq!(sets, vec![vec![1], vec![2]]);
        let fam = path_family(&g, &cert).unwrap();
        assert_eq!(fam.size_bound, 1);
        assert_eq!(fam.entries, cert.family);
    }

    #[test]
    fn tree_gives_a_trivial_vine() {
        let g = generators::path(4);
        let cert = vine_decompose(&g, 0, 3, 3).unwrap();
        assert_eq!(cert.r(), 0);
        assert_eq!(cert.family.len(), 1);
        assert!(cert.family[0].ears_used.is_empty());
    }

    #[test]
    fn fano_vines_have_odd_ears() {
        let g = crate::geometry::erdos_renyi_polarity(2).unwrap();
        for u in 0..7u32 {
            for v in u + 1..7u32 {
                if g.distance(u, v).map(|d| d <= 2) != Some(true) {
                    continue;
                }
                let cert = vine_decompose(&g, u, v, 2).unwrap();
                for ear in &cert.ears {
                    let pos = |x| cert.geodesic.iter().position(|&y| y == x).unwrap();
                    assert_eq!((ear.len() + pos(ear.to) - pos(ear.from)) % 2, 1);
                }
                assert!(cert.family.len() as u64 <= path_count_bound(2));
            }
        }
    }

    #[test]
    fn c5_vines() {
        let c5 = generators::cycle(5);
        // k = 2: the far arc is too long, H is the bare geodesic.
        let cert = vine_decompose(&c5, 0, 2, 2).unwrap();
        assert_eq!(cert.r(), 0);
        // k = 3: H is the whole cycle, one ear of length 3 closing the odd
        // 5-cycle.
        let cert = vine_decompose(&c5, 0, 2, 3).unwrap();
        assert_eq!(cert.r(), 1);
        assert_eq!(cert.ears[0].len(), 3);
    }

    #[test]
    fn bound_values() {
        assert_eq!(path_count_bound(2), 1);
        assert_eq!(path_count_bound(3), 2);
        assert_eq!(path_count_bound(4), 3);
        assert_eq!(path_count_bound(5), 4);
        assert_eq!(per_instance_path_bound(2, 2, 3), 2);
        assert_eq!(per_instance_path_bound(4, 4, 5), 4);
        // A geodesic longer than k admits no length-k paths at all.
        assert_eq!(per_instance_path_bound(3, 6, 5), 0);
    }

    #[test]
    fn equality_witnesses() {
        for (k, expected) in [(2usize, 1u64), (3, 2), (4, 3), (5, 4)] {
            let w = equality_witness(k);
            assert_eq!(w.expected_paths, expected, "k = {k}");
            assert!(w.graph.certify_no_even_cycles(k).passed());
            let paths = w.graph.enumerate_paths(w.u, w.v, k).unwrap();
            assert_eq!(paths.len() as u64, expected);
        }
        assert_eq!(equality_witness(2).r, 0);
        assert_eq!(equality_witness(3).r, 2);
    }

    #[test]
    fn renders_a_report() {
        let g = generators::triangle_chain(2);
        let cert = vine_decompose(&g, 0, 2, 3).unwrap();
        let text = cert.render();
        assert!(text.contains("geodesic: 0-1-2"));
        assert!(text.contains("ear 1: 0-3-1"));
        assert!(text.contains("ears {1}"));
        assert!(text.contains("geodesic-unique=PASS"));
    }
}
