use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{Rational, RationalMatrix, RationalVector};
use crate::simplicial::{Simplex, SimplicialMap};

/// A point of the source where two maps agree, in exact barycentric form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoincidenceWitness {
    /// Carrier simplex of the point; every weight is positive.
    pub simplex: Simplex,
    pub weights: RationalVector,
    /// Common image point as target-vertex weights.
    pub image: BTreeMap<usize, Rational>,
}

/// Image of a barycentric point under a simplicial map, as target-vertex weights.
pub fn image_point(f: &SimplicialMap, simplex: &Simplex, weights: &[Rational]) -> BTreeMap<usize, Rational> {
    let mut out: BTreeMap<usize, Rational> = BTreeMap::new();
    for (&v, w) in simplex.vertices().iter().zip(weights) {
        *out.entry(f.image_vertex(v)).or_insert_with(Rational::zero) += w;
    }
    out.retain(|_, w| !w.is_zero());
    out
}

/// Checks a witness by substituting it into both maps.
pub fn verify_witness(f: &SimplicialMap, g: &SimplicialMap, w: &CoincidenceWitness) -> bool {
    let valid_point = f.source().total().contains(&w.simplex)
        && w.weights.len() == w.simplex.vertices().len()
        && w.weights.iter().all(|x| *x > Rational::zero())
        && w.weights.iter().fold(Rational::zero(), |a, x| a + x) == Rational::one();
    valid_point
        && image_point(f, &w.simplex, &w.weights) == w.image
        && image_point(g, &w.simplex, &w.weights) == w.image
}

/// Exhaustive exact search for `x` with `f(x) = g(x)`.
///
/// Points of the target are identified with their barycentric vectors over
/// the target vertices, which is injective on the realization. On each source
/// simplex `τ` the condition is then linear in the weights. If it has a
/// solution with nonnegative weights it has one whose support has linearly
/// independent columns, so it suffices to look, on every simplex, for a unique
/// solution with positive weights. Simplices are scanned by dimension, then
/// lexicographically, and the first hit is returned.
pub fn coincidence_oracle(f: &SimplicialMap, g: &SimplicialMap) -> Option<CoincidenceWitness> {
    assert_eq!(f.source().total(), g.source().total(), "maps need a common source");
    let source = f.source().total();
    let top = source.dim()?;
    for k in 0..=top {
        for tau in source.simplices(k) {
            if let Some(w) = solve_on(f, g, tau) {
                debug_assert!(verify_witness(f, g, &w));
                return Some(w);
            }
        }
    }
    None
}

fn solve_on(f: &SimplicialMap, g: &SimplicialMap, tau: &Simplex) -> Option<CoincidenceWitness> {
    let vertices = tau.vertices();
    let mut targets: Vec<usize> = vertices
        .iter()
        .flat_map(|&v| [f.image_vertex(v), g.image_vertex(v)])
        .collect();
    targets.sort_unstable();
    targets.dedup();
    let mut rows: Vec<Vec<Rational>> = targets
        .iter()
        .map(|&t| {
            vertices
                .iter()
                .map(|&v| {
                    let mut x = Rational::zero();
                    if f.image_vertex(v) == t {
                        x += Rational::one();
                    }
                    if g.image_vertex(v) == t {
                        x -= Rational::one();
                    }
                    x
                })
                .collect()
        })
        .collect();
    rows.push(vec![Rational::one(); vertices.len()]);
    let mut rhs = vec![Rational::zero(); targets.len()];
    rhs.push(Rational::one());
    let system = RationalMatrix::from_rows(rows);
    if system.rank() < vertices.len() {
        return None;
    }
    let weights = system.solve(&rhs).expect("rhs sized to rows")?;
    if weights.iter().any(|w| *w <= Rational::zero()) {
        return None;
    }
    let image = image_point(f, tau, &weights);
    Some(CoincidenceWitness {
        simplex: tau.clone(),
        weights,
        image,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational;
    use crate::simplicial::{SimplicialComplex, SimplicialPair};

    fn circle(n: usize) -> SimplicialPair {
        let edges: Vec<Vec<usize>> = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
        let facets: Vec<&[usize]> = edges.iter().map(Vec::as_slice).collect();
        SimplicialPair::absolute(SimplicialComplex::from_facets_numbered(n, &facets))
    }

    #[test]
    fn equal_maps_meet_at_the_first_vertex() {
        let c = circle(3);
        let id = SimplicialMap::identity(c);
        let w = coincidence_oracle(&id, &id).unwrap();
        assert_eq!(w.simplex.vertices(), &[0]);
    }

    #[test]
    fn rotation_of_hexagon_has_no_fixed_point() {
        let c = circle(6);
        let id = SimplicialMap::identity(c.clone());
        let rot = SimplicialMap::from_vertex_images(c.clone(), c, &[1, 2, 3, 4, 5, 0]).unwrap();
        assert_eq!(coincidence_oracle(&id, &rot), None);
    }

    #[test]
    fn double_cover_meets_refinement_inside_an_edge() {
        let (six, three) = (circle(6), circle(3));
        let s = SimplicialMap::from_vertex_images(six.clone(), three.clone(), &[0, 1, 1, 2, 2, 0]).unwrap();
        let f = SimplicialMap::from_vertex_images(six, three, &[0, 1, 2, 0, 1, 2]).unwrap();
        let w = coincidence_oracle(&s, &f).unwrap();
        assert!(verify_witness(&s, &f, &w));
        assert_eq!(w.simplex.vertices(), &[0]);
        let mut moved = w.clone();
        moved.weights = vec![rational(1, 2)];
        assert!(!verify_witness(&s, &f, &moved));
    }
}
