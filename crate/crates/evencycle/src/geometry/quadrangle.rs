//! The symplectic generalized quadrangle W(q) and, for q = 2^(2e+1), a
//! certified polarity of it.
//!
//! Points are all points of PG(3,q); lines are the totally isotropic lines
//! of the form x0*y1 - x1*y0 + x2*y3 - x3*y2, found by brute enumeration of
//! isotropic point pairs closed under span. The duality used to seed the
//! polarity search maps a line with Pluecker coordinates p_ij to the point
//! (p02 : p13 : p03 : p12) — the classical Klein-correspondence route
//! through the parabolic quadric, which lands back in the same symplectic
//! space — and maps a point to the image of its line pencil. An involutory
//! correlation is then located inside the coset (duality composed with
//! collineations) by a seeded random walk: whenever a coset element has
//! order 2m with m odd, its m-th power is a polarity. Everything the
//! construction claims is re-verified exhaustively before a graph is
//! emitted; the formulas are scaffolding, the certificate is the contract.

use super::{projective_points, GeometryError, IncidenceStructure, ProjectivePoint};
use crate::gf::{Field, FieldElement};
use crate::graph::Graph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

fn symp(f: &Field, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    let t1 = f.sub(&f.mul(&a[0], &b[1]), &f.mul(&a[1], &b[0]));
    let t2 = f.sub(&f.mul(&a[2], &b[3]), &f.mul(&a[3], &b[2]));
    f.add(&t1, &t2)
}

fn coord_key(f: &Field, coords: &[FieldElement]) -> Vec<u64> {
    coords.iter().map(|c| f.index_of(c)).collect()
}

/// W(q) assembled from scratch: points, totally isotropic lines (sorted
/// point-index sets, sorted among themselves), and reverse indexes.
struct SymplecticSpace {
    f: Field,
    points: Vec<ProjectivePoint>,
    point_index: HashMap<Vec<u64>, u32>,
    lines: Vec<Vec<u32>>,
    line_index: HashMap<Vec<u32>, u32>,
    lines_through: Vec<Vec<u32>>,
    line_labels: Vec<String>,
}

impl SymplecticSpace {
    fn new(q: u64) -> Result<SymplecticSpace, GeometryError> {
        let f = Field::of_order(q)?;
        let points = projective_points(&f, 3);
        let n = points.len();
        let mut point_index = HashMap::with_capacity(n);
        for (i, p) in points.iter().enumerate() {
            point_index.insert(coord_key(&f, p.coords()), i as u32);
        }

        let mut line_set = std::collections::HashSet::new();
        for i in 0..n {
            for j in i + 1..n {
                if !f.is_zero(&symp(&f, points[i].coords(), points[j].coords())) {
                    continue;
                }
                line_set.insert(span_line(&f, &points[i], &points[j], &point_index));
            }
        }
        let mut lines: Vec<Vec<u32>> = line_set.into_iter().collect();
        lines.sort();
        let mut line_index = HashMap::with_capacity(lines.len());
        let mut lines_through = vec![Vec::new(); n];
        for (li, line) in lines.iter().enumerate() {
            line_index.insert(line.clone(), li as u32);
            for &p in line {
                lines_through[p as usize].push(li as u32);
            }
        }
        let line_labels = lines
            .iter()
            .map(|line| pluecker_label(&f, &points[line[0] as usize], &points[line[1] as usize]))
            .collect();
        Ok(SymplecticSpace { f, points, point_index, lines, line_index, lines_through, line_labels })
    }

    fn npoints(&self) -> usize {
        self.points.len()
    }

    fn structure(&self) -> IncidenceStructure {
        let q = self.f.q() as usize;
        IncidenceStructure {
            point_labels: self.points.iter().map(|p| p.label(&self.f)).collect(),
            line_labels: self.line_labels.clone(),
            lines: self.lines.clone(),
            s: q,
            t: q,
        }
    }
}

fn span_line(
    f: &Field,
    a: &ProjectivePoint,
    b: &ProjectivePoint,
    point_index: &HashMap<Vec<u64>, u32>,
) -> Vec<u32> {
    let mut pts = Vec::with_capacity(f.q() as usize + 1);
    pts.push(point_index[&coord_key(f, b.coords())]);
    for t in 0..f.q() {
        let tt = f.from_index(t);
        let coords: Vec<FieldElement> = a
            .coords()
            .iter()
            .zip(b.coords())
            .map(|(x, y)| f.add(x, &f.mul(&tt, y)))
            .collect();
        let canon = ProjectivePoint::new(f, coords);
        pts.push(point_index[&coord_key(f, canon.coords())]);
    }
    pts.sort_unstable();
    pts.dedup();
    pts
}

fn pluecker_coords(f: &Field, a: &ProjectivePoint, b: &ProjectivePoint) -> Vec<FieldElement> {
    let x = a.coords();
    let y = b.coords();
    let p = |i: usize, j: usize| f.sub(&f.mul(&x[i], &y[j]), &f.mul(&x[j], &y[i]));
    vec![p(0, 1), p(0, 2), p(0, 3), p(1, 2), p(1, 3), p(2, 3)]
}

fn pluecker_label(f: &Field, a: &ProjectivePoint, b: &ProjectivePoint) -> String {
    let raw = pluecker_coords(f, a, b);
    let canon = ProjectivePoint::new(f, raw);
    format!("[{}]", canon.label(f).trim_matches(|c| c == '(' || c == ')'))
}

/// Incidence graph of W(q): `(q+1)(q^2+1)` points and as many lines,
/// `(q+1)`-regular bipartite, girth 8.
pub fn incidence_w(q: u64) -> Result<Graph, GeometryError> {
    let space = SymplecticSpace::new(q)?;
    let expected = ((q + 1) * (q * q + 1)) as usize;
    if space.npoints() != expected || space.lines.len() != expected {
        return Err(GeometryError::SelfCertification(format!(
            "W({q}) has {} points and {} lines, expected {expected} of each",
            space.npoints(),
            space.lines.len()
        )));
    }
    let structure = space.structure();
    structure.validate()?;
    Ok(structure.incidence_graph())
}

// ---------------------------------------------------------------------
// Polarity machinery. Correlations and collineations are handled as
// permutations of the combined domain: points occupy 0..N, lines N..2N.
// ---------------------------------------------------------------------

type Perm = Vec<u32>;

fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&x| a[x as usize]).collect()
}

fn perm_order(p: &Perm) -> Option<u128> {
    let mut seen = vec![false; p.len()];
    let mut order: u128 = 1;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len: u128 = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        let g = gcd(order, len);
        order = order.checked_div(g).and_then(|o| o.checked_mul(len))?;
    }
    Some(order)
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn perm_pow(p: &Perm, mut e: u128) -> Perm {
    let mut base = p.clone();
    let mut acc: Perm = (0..p.len() as u32).collect();
    while e > 0 {
        if e & 1 == 1 {
            acc = compose(&base, &acc);
        }
        base = compose(&base, &base);
        e >>= 1;
    }
    acc
}

/// A semilinear point map: `x -> M . x^(p^frob)` followed by
/// canonicalisation.
struct Semilinear {
    matrix: Vec<Vec<FieldElement>>,
    frob: usize,
}

impl Semilinear {
    fn apply(&self, f: &Field, coords: &[FieldElement]) -> ProjectivePoint {
        let twisted: Vec<FieldElement> = coords
            .iter()
            .map(|c| {
                let mut t = c.clone();
                for _ in 0..self.frob {
                    t = f.frobenius(&t);
                }
                t
            })
            .collect();
        let image: Vec<FieldElement> = self
            .matrix
            .iter()
            .map(|row| {
                let mut acc = f.zero();
                for (m, x) in row.iter().zip(&twisted) {
                    acc = f.add(&acc, &f.mul(m, x));
                }
                acc
            })
            .collect();
        ProjectivePoint::new(f, image)
    }
}

fn identity_matrix(f: &Field) -> Vec<Vec<FieldElement>> {
    (0..4)
        .map(|i| (0..4).map(|j| if i == j { f.one() } else { f.zero() }).collect())
        .collect()
}

/// Symplectic transvection `x -> x + lambda * B(x, v) * v` as a matrix.
fn transvection_matrix(f: &Field, v: &[FieldElement], lambda: &FieldElement) -> Vec<Vec<FieldElement>> {
    let mut m = identity_matrix(f);
    // Column action: image of basis vector e_j is e_j + lambda*B(e_j,v)*v.
    for j in 0..4 {
        let mut e = vec![f.zero(), f.zero(), f.zero(), f.zero()];
        e[j] = f.one();
        let c = f.mul(lambda, &symp(f, &e, v));
        for i in 0..4 {
            let add = f.mul(&c, &v[i]);
            m[i][j] = f.add(&m[i][j], &add);
        }
    }
    m
}

/// Lift a point map to a permutation of points and lines, verifying that
/// line images are lines.
fn collineation_perm(space: &SymplecticSpace, map: &Semilinear) -> Result<Perm, GeometryError> {
    let n = space.npoints();
    let mut perm = vec![0u32; n + space.lines.len()];
    for (i, p) in space.points.iter().enumerate() {
        let img = map.apply(&space.f, p.coords());
        perm[i] = space.point_index[&coord_key(&space.f, img.coords())];
    }
    for (li, line) in space.lines.iter().enumerate() {
        let mut img: Vec<u32> = line.iter().map(|&p| perm[p as usize]).collect();
        img.sort_unstable();
        let target = space.line_index.get(&img).ok_or_else(|| {
            GeometryError::SelfCertification("collineation does not preserve the line set".into())
        })?;
        perm[n + li] = n as u32 + target;
    }
    Ok(perm)
}

/// The Klein-correspondence duality: lines to points via
/// `(p02 : p13 : p03 : p12)`, points to lines via pencil images. Fails
/// loudly when any pencil image is not a line.
fn klein_duality(space: &SymplecticSpace) -> Result<Perm, GeometryError> {
    let n = space.npoints();
    let f = &space.f;
    let mut line_to_point = vec![0u32; space.lines.len()];
    for (li, line) in space.lines.iter().enumerate() {
        let a = &space.points[line[0] as usize];
        let b = &space.points[line[1] as usize];
        let p = pluecker_coords(f, a, b);
        let image = ProjectivePoint::new(f, vec![p[1].clone(), p[4].clone(), p[2].clone(), p[3].clone()]);
        line_to_point[li] = *space
            .point_index
            .get(&coord_key(f, image.coords()))
            .ok_or_else(|| GeometryError::SelfCertification("duality image is not a point".into()))?;
    }
    let mut perm = vec![0u32; n + space.lines.len()];
    for (li, &pt) in line_to_point.iter().enumerate() {
        perm[n + li] = pt;
    }
    for x in 0..n {
        let mut pencil_image: Vec<u32> =
            space.lines_through[x].iter().map(|&li| line_to_point[li as usize]).collect();
        pencil_image.sort_unstable();
        let target = space.line_index.get(&pencil_image).ok_or_else(|| {
            GeometryError::SelfCertification(format!(
                "pencil image of point {x} is not a line of W({})",
                f.q()
            ))
        })?;
        perm[x] = n as u32 + target;
    }
    Ok(perm)
}

/// Exhaustive correlation checks: swaps the two sides, and
/// `x I l  =>  rho(l) I rho(x)` for every incident pair (with bijectivity
/// this forces the equivalence).
fn verify_correlation(space: &SymplecticSpace, perm: &Perm) -> Result<(), GeometryError> {
    let n = space.npoints();
    let total = n + space.lines.len();
    let mut seen = vec![false; total];
    for (x, &y) in perm.iter().enumerate() {
        if seen[y as usize] {
            return Err(GeometryError::SelfCertification("correlation is not a bijection".into()));
        }
        seen[y as usize] = true;
        let swaps = (x < n) == (y as usize >= n);
        if !swaps {
            return Err(GeometryError::SelfCertification(
                "correlation does not swap points and lines".into(),
            ));
        }
    }
    for (li, line) in space.lines.iter().enumerate() {
        let image_point = perm[n + li];
        for &x in line {
            let image_line = (perm[x as usize] as usize - n) as u32;
            if space.lines[image_line as usize].binary_search(&image_point).is_err() {
                return Err(GeometryError::SelfCertification(
                    "correlation does not preserve incidence".into(),
                ));
            }
        }
    }
    Ok(())
}

fn is_involution(perm: &Perm) -> bool {
    perm.iter().enumerate().all(|(x, &y)| perm[y as usize] as usize == x)
}

/// Finds a polarity of W(q) for q = 2^(2e+1) as a certified involutory
/// correlation, and returns (polarity permutation, space).
fn tits_polarity(space: &SymplecticSpace) -> Result<Perm, GeometryError> {
    let f = &space.f;
    let delta = klein_duality(space)?;
    verify_correlation(space, &delta)?;

    // Collineation generators: symplectic transvections in a spread of
    // directions and scales, plus the Tits twist (the field automorphism
    // with sigma^2 = Frobenius) and the plain Frobenius.
    let mut generators: Vec<Perm> = Vec::new();
    let dirs: Vec<Vec<u64>> = vec![
        vec![1, 0, 0, 0],
        vec![0, 1, 0, 0],
        vec![0, 0, 1, 0],
        vec![0, 0, 0, 1],
        vec![1, 0, 1, 0],
        vec![0, 1, 0, 1],
        vec![1, 1, 0, 0],
        vec![1, 0, 0, 1],
    ];
    let mut lambdas = vec![1u64];
    if f.q() > 2 {
        lambdas.push(2);
        lambdas.push(f.q() - 1);
    }
    for dir in &dirs {
        let v: Vec<FieldElement> = dir.iter().map(|&i| f.from_index(i)).collect();
        for &l in &lambdas {
            let m = transvection_matrix(f, &v, &f.from_index(l));
            generators.push(collineation_perm(space, &Semilinear { matrix: m, frob: 0 })?);
        }
    }
    if f.degree() > 1 {
        // x -> x^sigma with sigma the Tits endomorphism, i.e. Frobenius
        // iterated (e+1)/2 + ... times so that sigma(sigma(x)) = x^2.
        let sigma_steps = (f.degree() + 1) / 2;
        generators.push(collineation_perm(
            space,
            &Semilinear { matrix: identity_matrix(f), frob: sigma_steps },
        )?);
        generators.push(collineation_perm(
            space,
            &Semilinear { matrix: identity_matrix(f), frob: 1 },
        )?);
    }

    // Seeded walk over the correlation coset: tau = word * delta. If tau
    // has order 2m with m odd, tau^m is an involutory correlation.
    let mut rng = ChaCha8Rng::seed_from_u64(0x57715f706f6c);
    let identity: Perm = (0..delta.len() as u32).collect();
    for _attempt in 0..20_000 {
        let word_len = rng.gen_range(6..=30);
        let mut word = identity.clone();
        for _ in 0..word_len {
            let g = &generators[rng.gen_range(0..generators.len())];
            word = compose(g, &word);
        }
        let tau = compose(&word, &delta);
        let Some(order) = perm_order(&tau) else { continue };
        if order % 2 != 0 {
            continue;
        }
        let m = order / 2;
        if m % 2 == 0 {
            continue;
        }
        let rho = perm_pow(&tau, m);
        if !is_involution(&rho) {
            continue;
        }
        verify_correlation(space, &rho)?;
        return Ok(rho);
    }
    Err(GeometryError::SelfCertification(format!(
        "no polarity of W({}) found within the search budget",
        f.q()
    )))
}

/// Polarity graph of W(q) for q in {2, 8}: vertices are the points of
/// W(q), `x ~ y` iff `x` lies on the polar line of `y`, loops at the
/// q^2+1 absolute points dropped. The polarity is certified (involutory,
/// incidence-preserving) before the graph is emitted.
pub fn polarity_w(q: u64) -> Result<Graph, GeometryError> {
    match q {
        2 | 8 => {}
        32 => return Err(GeometryError::UnsupportedOrder { q }),
        _ => return Err(GeometryError::WrongFieldOrder { q }),
    }
    let space = SymplecticSpace::new(q)?;
    let rho = tits_polarity(&space)?;
    let n = space.npoints();

    let polar_line = |x: usize| -> &Vec<u32> { &space.lines[rho[x] as usize - n] };
    let mut absolute = 0usize;
    let mut edges = Vec::new();
    for x in 0..n {
        for &y in polar_line(x) {
            if y as usize == x {
                absolute += 1;
                continue;
            }
            // Polarities make the relation symmetric; insist on it.
            if polar_line(y as usize).binary_search(&(x as u32)).is_err() {
                return Err(GeometryError::SelfCertification(
                    "polarity adjacency is not symmetric".into(),
                ));
            }
            if (x as u32) < y {
                edges.push((x as u32, y));
            }
        }
    }
    if absolute as u64 != q * q + 1 {
        return Err(GeometryError::SelfCertification(format!(
            "polarity of W({q}) has {absolute} absolute points, expected {}",
            q * q + 1
        )));
    }
    let labels = space.points.iter().map(|p| p.label(&space.f)).collect();
    let g = Graph::from_edges(n, edges)?.with_labels(labels)?;
    let expected_edges = ((q * q + 1) * (q * q + 2 * q) / 2) as usize;
    if g.m() != expected_edges {
        return Err(GeometryError::SelfCertification(format!(
            "polarity graph of W({q}) has {} edges, expected {expected_edges}",
            g.m()
        )));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tutte_coxeter() {
        let g = incidence_w(2).unwrap();
        assert_eq!((g.n(), g.m()), (30, 45));
        assert_eq!(g.girth(), Some(8));
        let stats = g.degree_stats();
        assert_eq!((stats.min, stats.max), (3, 3));
    }

    #[test]
    fn w3_and_w4_incidence() {
        let g3 = incidence_w(3).unwrap();
        assert_eq!((g3.n(), g3.m()), (80, 160));
        assert_eq!(g3.girth(), Some(8));

        let g4 = incidence_w(4).unwrap();
        assert_eq!((g4.n(), g4.m()), (170, 425));
        assert_eq!(g4.girth(), Some(8));
    }

    #[test]
    fn polarity_w2() {
        let g = polarity_w(2).unwrap();
        assert_eq!((g.n(), g.m()), (15, 20));
        let absolute = (0..15).filter(|&v| g.degree(v) == 2).count();
        assert_eq!(absolute, 5);
        assert!(g.certify_no_even_cycles(3).passed());
        assert!(crate::graph::reference::no_even_cycles_brute(&g, 3));
    }

    #[test]
    fn polarity_rejects_other_orders() {
        assert!(matches!(polarity_w(3), Err(GeometryError::WrongFieldOrder { q: 3 })));
        assert!(matches!(polarity_w(4), Err(GeometryError::WrongFieldOrder { q: 4 })));
        assert!(matches!(polarity_w(32), Err(GeometryError::UnsupportedOrder { q: 32 })));
    }

    #[test]
    fn polarity_is_deterministic() {
        let a = polarity_w(2).unwrap();
        let b = polarity_w(2).unwrap();
        assert_eq!(a.edges(), b.edges());
    }
}
