//! The projective plane PG(2,q): its polarity graph (the classical dense
//! C4-free construction) and its point-line incidence graph.

use super::{projective_points, GeometryError, IncidenceStructure, ProjectivePoint};
use crate::gf::{Field, FieldElement};
use crate::graph::Graph;

fn dot3(f: &Field, a: &ProjectivePoint, b: &ProjectivePoint) -> FieldElement {
    let mut acc = f.zero();
    for (x, y) in a.coords().iter().zip(b.coords()) {
        acc = f.add(&acc, &f.mul(x, y));
    }
    acc
}

/// Polarity graph of PG(2,q) under the identity bilinear form: vertices are
/// the q^2+q+1 canonical points, `x ~ y` iff `x . y = 0` and `x != y`
/// (loops at the q+1 absolute points dropped). Has q(q+1)^2/2 edges and no
/// 4-cycle.
pub fn erdos_renyi_polarity(q: u64) -> Result<Graph, GeometryError> {
    let f = Field::of_order(q)?;
    let pts = projective_points(&f, 2);
    let n = pts.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if f.is_zero(&dot3(&f, &pts[i], &pts[j])) {
                edges.push((i as u32, j as u32));
            }
        }
    }
    let labels = pts.iter().map(|p| p.label(&f)).collect();
    let g = Graph::from_edges(n, edges)?.with_labels(labels)?;

    let expected_edges = (q * (q + 1) * (q + 1) / 2) as usize;
    if g.m() != expected_edges {
        return Err(GeometryError::SelfCertification(format!(
            "polarity graph of PG(2,{q}) has {} edges, expected {expected_edges}",
            g.m()
        )));
    }
    let absolute = (0..n).filter(|&i| g.degree(i as u32) == q as usize).count();
    let full = (0..n).filter(|&i| g.degree(i as u32) == q as usize + 1).count();
    if absolute != q as usize + 1 || absolute + full != n {
        return Err(GeometryError::SelfCertification(format!(
            "polarity graph of PG(2,{q}) has {absolute} absolute points, expected {}",
            q + 1
        )));
    }
    Ok(g)
}

fn pg2_structure(q: u64) -> Result<IncidenceStructure, GeometryError> {
    let f = Field::of_order(q)?;
    let pts = projective_points(&f, 2);
    // Lines are indexed by the canonical points of the dual plane: line [a]
    // carries the points x with a . x = 0.
    let mut lines = Vec::with_capacity(pts.len());
    for a in &pts {
        let mut line: Vec<u32> = pts
            .iter()
            .enumerate()
            .filter(|(_, x)| f.is_zero(&dot3(&f, a, x)))
            .map(|(i, _)| i as u32)
            .collect();
        line.sort_unstable();
        lines.push(line);
    }
    let structure = IncidenceStructure {
        point_labels: pts.iter().map(|p| p.label(&f)).collect(),
        line_labels: pts.iter().map(|p| format!("[{}]", &p.label(&f)[1..p.label(&f).len() - 1])).collect(),
        lines,
        s: q as usize,
        t: q as usize,
    };
    structure.validate()?;
    Ok(structure)
}

/// Bipartite point-line incidence graph of PG(2,q): `2(q^2+q+1)` vertices,
/// `(q+1)(q^2+q+1)` edges, `(q+1)`-regular, girth 6.
pub fn incidence_pg2(q: u64) -> Result<Graph, GeometryError> {
    let structure = pg2_structure(q)?;
    Ok(structure.incidence_graph())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::reference;

    #[test]
    fn fano_polarity_graph() {
        let g = erdos_renyi_polarity(2).unwrap();
        assert_eq!((g.n(), g.m()), (7, 9));
        let stats = g.degree_stats();
        assert_eq!((stats.min, stats.max), (2, 3));
        assert_eq!(stats.average, num::rational::Ratio::new(18, 7));
        // Exhaustive 4-cycle check via the brute oracle.
        assert!(reference::no_even_cycles_brute(&g, 2));
        assert!(g.certify_no_even_cycles(2).passed());
    }

    #[test]
    fn small_polarity_graphs_are_c4_free() {
        for (q, n, m) in [(3u64, 13usize, 24usize), (4, 21, 50), (5, 31, 90)] {
            let g = erdos_renyi_polarity(q).unwrap();
            assert_eq!((g.n(), g.m()), (n, m), "q = {q}");
            assert!(g.certify_no_even_cycles(2).passed(), "q = {q}");
        }
    }

    #[test]
    fn heawood_and_friends() {
        let g = incidence_pg2(2).unwrap();
        assert_eq!((g.n(), g.m()), (14, 21));
        assert_eq!(g.girth(), Some(6));
        let stats = g.degree_stats();
        assert_eq!((stats.min, stats.max), (3, 3));

        let g3 = incidence_pg2(3).unwrap();
        assert_eq!((g3.n(), g3.m()), (26, 52));
        assert_eq!(g3.girth(), Some(6));

        let g4 = incidence_pg2(4).unwrap();
        assert_eq!((g4.n(), g4.m()), (42, 105));
        assert_eq!(g4.girth(), Some(6));
    }

    #[test]
    fn unsupported_order_is_reported() {
        assert!(matches!(
            erdos_renyi_polarity(6),
            Err(GeometryError::Field(crate::gf::GfError::NotPrime(6)))
        ));
    }

    #[test]
    fn labels_carry_coordinates() {
        let g = erdos_renyi_polarity(2).unwrap();
        let labels = g.labels().unwrap();
        assert_eq!(labels.len(), 7);
        assert!(labels.contains(&"(1,0,0)".to_string()));
    }
}
