use std::collections::HashSet;

use super::ControlError;
use crate::lefschetz::{CoincidenceVerdict, OracleOutcome, SweepEntry};
use crate::products::OrientedManifold;
use crate::simplicial::{Homology, Simplex, SimplicialComplex, SimplicialMap};

/// Maximal simplices of a complex (those that are faces of nothing larger).
pub fn maximal_simplices(c: &SimplicialComplex) -> Vec<Simplex> {
    let mut covered: HashSet<Simplex> = HashSet::new();
    let mut out = Vec::new();
    let top = c.dim().map_or(0, |d| d + 1);
    for k in (0..top).rev() {
        for s in c.simplices(k) {
            if !covered.contains(s) {
                out.push(s.clone());
            }
            for (_, f) in s.faces() {
                covered.insert(f);
            }
        }
    }
    out.sort();
    out
}

/// Whether the map hits every point of the target. The image of a simplicial
/// map is the union of the image simplices, so it is onto exactly when every
/// maximal simplex of the target is the vertex image of some source simplex.
pub fn surjectivity_oracle(f: &SimplicialMap) -> bool {
    let images: HashSet<Simplex> = f.source().total().all_simplices().map(|s| f.image_simplex(s)).collect();
    maximal_simplices(f.target().total()).iter().all(|s| images.contains(s))
}

/// Nonzero iff `f_* : H_n(N, A) -> H_n(M, ∂M)` is nonzero.
pub fn surjectivity_certificate(
    f: &SimplicialMap,
    target: &OrientedManifold,
    run_oracle: bool,
) -> Result<CoincidenceVerdict, ControlError> {
    if f.target() != target.pair() {
        return Err(ControlError::WrongTarget);
    }
    f.check_pair_condition(f.source().sub(), f.target().sub())?;
    let n = target.dim();
    let source = Homology::compute(f.source());
    let matrix = f.induced_homology(&source, target.relative(), n)?;
    let entries = (0..source.betti(n))
        .map(|j| SweepEntry {
            input: source.basis_class(n, j),
            value: Some(crate::simplicial::HomologyClass::new(n, matrix.column(j))),
        })
        .collect();
    let mut verdict = CoincidenceVerdict::from_entries("surjectivity", entries);
    if run_oracle {
        verdict.oracle = if surjectivity_oracle(f) {
            OracleOutcome::Confirmed(None)
        } else {
            OracleOutcome::Refuted
        };
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::SimplicialPair;

    fn circle(n: usize) -> SimplicialPair {
        let edges: Vec<Vec<usize>> = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
        let facets: Vec<&[usize]> = edges.iter().map(Vec::as_slice).collect();
        SimplicialPair::absolute(SimplicialComplex::from_facets_numbered(n, &facets))
    }

    #[test]
    fn oracle_examples() {
        let c = circle(3);
        assert!(surjectivity_oracle(&SimplicialMap::identity(c.clone())));
        assert!(!surjectivity_oracle(
            &SimplicialMap::constant(c.clone(), c.clone(), 0).unwrap()
        ));
        let cover = SimplicialMap::from_vertex_images(circle(6), c, &[0, 1, 2, 0, 1, 2]).unwrap();
        assert!(surjectivity_oracle(&cover));
    }

    #[test]
    fn certificates() {
        let c = circle(3);
        let m = OrientedManifold::orient(&c, None).unwrap();
        let id = surjectivity_certificate(&SimplicialMap::identity(c.clone()), &m, true).unwrap();
        assert!(id.nonzero);
        assert_eq!(id.oracle, OracleOutcome::Confirmed(None));
        let k = SimplicialMap::constant(c.clone(), c, 1).unwrap();
        let constant = surjectivity_certificate(&k, &m, true).unwrap();
        assert!(!constant.nonzero);
        assert_eq!(constant.oracle, OracleOutcome::Refuted);
        assert!(constant.is_sound());
    }
}
