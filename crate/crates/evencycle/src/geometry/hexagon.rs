//! The split Cayley hexagon H(q) through its standard embedding in the
//! parabolic quadric x0*x4 + x1*x5 + x2*x6 = x3^2 in PG(6,q): points are
//! the quadric points, lines are the quadric lines whose Grassmann
//! coordinates satisfy the six classical linear relations. The
//! construction certifies its own order parameters, point/line counts and
//! girth 12 before returning.

use super::{projective_points, GeometryError, IncidenceStructure, ProjectivePoint};
use crate::gf::{Field, FieldElement};
use crate::graph::Graph;
use std::collections::HashMap;

fn quadric_value(f: &Field, x: &[FieldElement]) -> FieldElement {
    let mut acc = f.mul(&x[0], &x[4]);
    acc = f.add(&acc, &f.mul(&x[1], &x[5]));
    acc = f.add(&acc, &f.mul(&x[2], &x[6]));
    f.sub(&acc, &f.mul(&x[3], &x[3]))
}

/// Grassmann coordinate `p_ij = x_i y_j - x_j y_i` of the line spanned by
/// `x` and `y`.
fn grassmann(f: &Field, x: &[FieldElement], y: &[FieldElement], i: usize, j: usize) -> FieldElement {
    f.sub(&f.mul(&x[i], &y[j]), &f.mul(&x[j], &y[i]))
}

/// The six relations cutting the hexagon lines out of the quadric lines:
/// p12 = p34, p20 = p35, p01 = p36, p45 = p23, p56 = p03, p64 = p13.
fn is_hexagon_line(f: &Field, x: &[FieldElement], y: &[FieldElement]) -> bool {
    let p = |i: usize, j: usize| grassmann(f, x, y, i, j);
    let pairs = [
        (p(1, 2), p(3, 4)),
        (p(2, 0), p(3, 5)),
        (p(0, 1), p(3, 6)),
        (p(4, 5), p(2, 3)),
        (p(5, 6), p(0, 3)),
        (p(6, 4), p(1, 3)),
    ];
    pairs.iter().all(|(a, b)| a == b)
}

/// Incidence graph of H(q) for q in {2, 3}: `(q+1)`-regular bipartite on
/// `2(q^5+q^4+q^3+q^2+q+1)` vertices with girth exactly 12.
pub fn incidence_hexagon(q: u64) -> Result<Graph, GeometryError> {
    if q != 2 && q != 3 {
        return Err(GeometryError::UnsupportedOrder { q });
    }
    let f = Field::of_order(q)?;
    let points: Vec<ProjectivePoint> = projective_points(&f, 6)
        .into_iter()
        .filter(|p| f.is_zero(&quadric_value(&f, p.coords())))
        .collect();
    let expected = (q.pow(5) + q.pow(4) + q.pow(3) + q * q + q + 1) as usize;
    if points.len() != expected {
        return Err(GeometryError::SelfCertification(format!(
            "quadric in PG(6,{q}) has {} points, expected {expected}",
            points.len()
        )));
    }
    let mut point_index = HashMap::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        let key: Vec<u64> = p.coords().iter().map(|c| f.index_of(c)).collect();
        point_index.insert(key, i as u32);
    }

    // Quadric lines through 'span stays on the quadric', filtered by the
    // Grassmann relations, deduplicated as sorted point sets.
    let mut line_set = std::collections::HashSet::new();
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            let x = points[i].coords();
            let y = points[j].coords();
            if !is_hexagon_line(&f, x, y) {
                continue;
            }
            let mut on_quadric = true;
            let mut line = vec![j as u32];
            for t in 0..q {
                let tt = f.from_index(t);
                let coords: Vec<FieldElement> =
                    x.iter().zip(y).map(|(a, b)| f.add(a, &f.mul(&tt, b))).collect();
                if coords.iter().all(|c| f.is_zero(c)) {
                    on_quadric = false;
                    break;
                }
                let p = ProjectivePoint::new(&f, coords);
                if !f.is_zero(&quadric_value(&f, p.coords())) {
                    on_quadric = false;
                    break;
                }
                let key: Vec<u64> = p.coords().iter().map(|c| f.index_of(c)).collect();
                line.push(point_index[&key]);
            }
            if !on_quadric {
                continue;
            }
            line.sort_unstable();
            line.dedup();
            line_set.insert(line);
        }
    }
    let mut lines: Vec<Vec<u32>> = line_set.into_iter().collect();
    lines.sort();
    if lines.len() != expected {
        return Err(GeometryError::SelfCertification(format!(
            "hexagon over GF({q}) has {} lines, expected {expected}",
            lines.len()
        )));
    }

    let line_labels = lines
        .iter()
        .map(|l| {
            format!(
                "<{},{}>",
                points[l[0] as usize].label(&f),
                points[l[1] as usize].label(&f)
            )
        })
        .collect();
    let structure = IncidenceStructure {
        point_labels: points.iter().map(|p| p.label(&f)).collect(),
        line_labels,
        lines,
        s: q as usize,
        t: q as usize,
    };
    structure.validate()?;
    let g = structure.incidence_graph();
    if g.girth() != Some(12) {
        return Err(GeometryError::SelfCertification(format!(
            "hexagon incidence graph over GF({q}) has girth {:?}, expected 12",
            g.girth()
        )));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_cage() {
        let g = incidence_hexagon(2).unwrap();
        assert_eq!((g.n(), g.m()), (126, 189));
        let stats = g.degree_stats();
        assert_eq!((stats.min, stats.max), (3, 3));
        assert_eq!(g.girth(), Some(12));
        assert!(g.certify_no_even_cycles(5).passed());
    }

    #[test]
    fn hexagon_over_gf3() {
        let g = incidence_hexagon(3).unwrap();
        assert_eq!((g.n(), g.m()), (728, 1456));
        let stats = g.degree_stats();
        assert_eq!((stats.min, stats.max), (4, 4));
        assert_eq!(g.girth(), Some(12));
    }

    #[test]
    fn unsupported_orders() {
        assert!(matches!(incidence_hexagon(4), Err(GeometryError::UnsupportedOrder { q: 4 })));
        assert!(matches!(incidence_hexagon(5), Err(GeometryError::UnsupportedOrder { q: 5 })));
    }
}
