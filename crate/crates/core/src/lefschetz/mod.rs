//! Lefschetz numbers, Lefschetz classes, the Lefschetz homomorphism and an
//! exact coincidence oracle.

mod coincidence;
mod graded;
mod oracle;

pub use coincidence::{CoincidenceSetup, CoincidenceVerdict, OracleOutcome, SweepEntry};
pub use graded::{lefschetz_class, scalar_of, GradedEndomorphism};
pub use oracle::{coincidence_oracle, image_point, verify_witness, CoincidenceWitness};

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{self, Rational};
use crate::products::{CapError, DualityError};
use crate::simplicial::{Homology, HomologyError, MapError, SimplicialMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LefschetzError {
    #[error("pair mismatch: {0}")]
    PairMismatch(String),
    #[error("dimension inconsistency: {0}")]
    DimensionInconsistent(String),
    #[error("graded homomorphism has negative degree {0}")]
    NegativeShift(i64),
    #[error("invalid class: {0}")]
    InvalidClass(String),
    #[error("refinement map is not invertible on homology in degree {0}")]
    SingularRefinement(usize),
    #[error(transparent)]
    Map(MapError),
    #[error(transparent)]
    Duality(#[from] DualityError),
    #[error(transparent)]
    Cap(#[from] CapError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

/// `λ_f = Σ_k (-1)^k Tr(f_{*k})` for a self-map of a pair.
pub fn lefschetz_number_self(f: &SimplicialMap) -> Result<Rational, LefschetzError> {
    if f.source() != f.target() {
        return Err(LefschetzError::PairMismatch("source and target pairs differ".into()));
    }
    let h = Homology::compute(f.source());
    Ok(crate::simplicial::alternating_trace(&f.induced_homology_all(&h, &h)?))
}

/// Lefschetz number of a self-map given on a subdivision: `f` and `s` both go
/// from a fine triangulation to the coarse one, `s` approximating the
/// identity. The number is `Σ_k (-1)^k Tr(f_* s_*^{-1})`.
pub fn lefschetz_number_refined(f: &SimplicialMap, refinement: &SimplicialMap) -> Result<Rational, LefschetzError> {
    if f.source() != refinement.source() || f.target() != refinement.target() {
        return Err(LefschetzError::PairMismatch(
            "map and refinement must share source and target".into(),
        ));
    }
    let fine = Homology::compute(f.source());
    let coarse = Homology::compute(f.target());
    let mut total = Rational::zero();
    for k in 0..fine.degrees().max(coarse.degrees()) {
        let s = refinement.induced_homology(&fine, &coarse, k)?;
        let s_inv = s.inverse().map_err(|_| LefschetzError::SingularRefinement(k))?;
        let composite = &f.induced_homology(&fine, &coarse, k)? * &s_inv;
        total += algebra::sign(k) * composite.trace().expect("square");
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::products::OrientedManifold;
    use crate::simplicial::{HomologyClass, SimplicialComplex, SimplicialPair};

    fn circle(n: usize) -> SimplicialPair {
        let edges: Vec<Vec<usize>> = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
        let facets: Vec<&[usize]> = edges.iter().map(Vec::as_slice).collect();
        SimplicialPair::absolute(SimplicialComplex::from_facets_numbered(n, &facets))
    }

    fn sphere() -> SimplicialPair {
        SimplicialPair::absolute(SimplicialComplex::from_facets_numbered(
            4,
            &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]],
        ))
    }

    #[test]
    fn self_numbers() {
        let s2 = sphere();
        assert_eq!(
            lefschetz_number_self(&SimplicialMap::identity(s2.clone())).unwrap(),
            int(2)
        );
        let k = SimplicialMap::constant(s2.clone(), s2, 3).unwrap();
        assert_eq!(lefschetz_number_self(&k).unwrap(), int(1));
    }

    #[test]
    fn refined_double_cover() {
        let (six, three) = (circle(6), circle(3));
        let s = SimplicialMap::from_vertex_images(six.clone(), three.clone(), &[0, 1, 1, 2, 2, 0]).unwrap();
        let f = SimplicialMap::from_vertex_images(six, three, &[0, 1, 2, 0, 1, 2]).unwrap();
        assert_eq!(lefschetz_number_refined(&f, &s).unwrap(), int(-1));
        assert_eq!(lefschetz_number_refined(&s, &s).unwrap(), int(0));
    }

    #[test]
    fn identity_endomorphism_on_a_circle() {
        let c = circle(3);
        let m = OrientedManifold::orient(&c, None).unwrap();
        let id = SimplicialMap::identity(c);
        let setup = CoincidenceSetup::new(id.clone(), id, m.clone()).unwrap();
        let h = setup.endomorphism(&m.fundamental_class()).unwrap();
        assert_eq!(h, GradedEndomorphism::identity(m.absolute()));
        let value = setup.homomorphism(&m.fundamental_class()).unwrap().unwrap();
        assert_eq!(value, HomologyClass::new(0, vec![int(0)]));
        assert_eq!(setup.classical_number(&m).unwrap(), int(0));
    }

    #[test]
    fn refinement_against_double_cover() {
        let (six, three) = (circle(6), circle(3));
        let fine = OrientedManifold::orient(&six, None).unwrap();
        let coarse = OrientedManifold::orient(&three, None).unwrap();
        let s = SimplicialMap::from_vertex_images(six.clone(), three.clone(), &[0, 1, 1, 2, 2, 0]).unwrap();
        let f = SimplicialMap::from_vertex_images(six, three, &[0, 1, 2, 0, 1, 2]).unwrap();
        let setup = CoincidenceSetup::new(s, f, coarse).unwrap();
        let value = setup.homomorphism(&fine.fundamental_class()).unwrap().unwrap();
        assert_eq!(scalar_of(&value), Some(int(-1)));
        assert_eq!(setup.classical_number(&fine).unwrap(), int(-1));
        let verdict = setup.certificate(None, true).unwrap();
        assert!(verdict.nonzero);
        assert!(matches!(verdict.oracle, OracleOutcome::Confirmed(Some(_))));
    }

    #[test]
    fn rotation_certificate_is_zero() {
        let c = circle(6);
        let m = OrientedManifold::orient(&c, None).unwrap();
        let rot = SimplicialMap::from_vertex_images(c.clone(), c.clone(), &[1, 2, 3, 4, 5, 0]).unwrap();
        let setup = CoincidenceSetup::new(SimplicialMap::identity(c), rot, m).unwrap();
        let verdict = setup.certificate(None, true).unwrap();
        assert!(!verdict.nonzero);
        assert_eq!(verdict.oracle, OracleOutcome::Refuted);
        assert!(verdict.is_sound());
        assert_eq!(verdict.entries.len(), 2);
        assert!(verdict.entries[0].value.is_none());
    }
}
