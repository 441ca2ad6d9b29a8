use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{self, Rational};
use crate::simplicial::{Chain, Cochain, Homology, HomologyClass, HomologyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CapError {
    #[error("cochain degree {cochain} does not match chain degree {chain}")]
    DegreeMismatch { cochain: usize, chain: usize },
    #[error("cochain degree {cochain} exceeds chain degree {chain}")]
    DegreeTooLarge { cochain: usize, chain: usize },
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

/// `<x, a>`.
pub fn kronecker(x: &Cochain, a: &Chain) -> Result<Rational, CapError> {
    x.evaluate(a).ok_or(CapError::DegreeMismatch {
        cochain: x.degree(),
        chain: a.degree(),
    })
}

/// Chain-level cap product with the Alexander–Whitney diagonal:
/// `x ⌢ [v_0..v_m] = (-1)^{k(m-k)} x([v_{m-k}..v_m]) [v_0..v_{m-k}]`.
pub fn cap(x: &Cochain, a: &Chain) -> Result<Chain, CapError> {
    let (k, m) = (x.degree(), a.degree());
    if k > m {
        return Err(CapError::DegreeTooLarge { cochain: k, chain: m });
    }
    let sign = algebra::sign(k * (m - k));
    let mut out = Chain::zero(m - k);
    for (s, c) in a.terms() {
        let value = x.value(&s.back(k));
        if !value.is_zero() {
            out.add_term(s.front(m - k), c * value * &sign);
        }
    }
    Ok(out)
}

/// Cap of a relative cocycle with a relative cycle, expressed in `absolute`,
/// the homology of the total complex with empty subcomplex.
pub fn cap_class(x: &Cochain, a: &Chain, absolute: &Homology) -> Result<HomologyClass, CapError> {
    debug_assert!(absolute.pair().is_absolute());
    Ok(absolute.class_of(&cap(x, a)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::simplicial::{Simplex, SimplicialComplex, SimplicialPair};

    fn s(v: &[usize]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn cap_with_unit_is_identity() {
        let a: Chain = [(s(&[0, 1]), int(2)), (s(&[1, 2]), int(-1))].into_iter().collect();
        assert_eq!(cap(&Cochain::unit(0..3), &a).unwrap(), a);
    }

    #[test]
    fn cap_evaluates_back_face() {
        let x: Cochain = [(s(&[1, 2]), int(5))].into_iter().collect();
        let a = Chain::single(s(&[0, 1, 2]));
        let expected: Chain = [(s(&[0, 1]), int(-5))].into_iter().collect();
        assert_eq!(cap(&x, &a).unwrap(), expected);
    }

    #[test]
    fn full_degree_cap_is_the_pairing() {
        let c = SimplicialComplex::from_facets_numbered(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        let h = Homology::compute(&SimplicialPair::absolute(c));
        let (x, a) = (h.cocycle(1, 0), h.cycle(1, 0));
        let capped = cap(&x, &a).unwrap();
        assert_eq!(
            kronecker(&Cochain::unit(0..3), &capped).unwrap(),
            kronecker(&x, &a).unwrap()
        );
        assert_eq!(cap_class(&x, &a, &h).unwrap().coords, vec![int(1)]);
        assert!(kronecker(&x, &Chain::single(s(&[0]))).is_err());
    }
}
