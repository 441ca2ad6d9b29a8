use num_traits::Zero;

use super::LefschetzError;
use crate::algebra::{self, RationalMatrix};
use crate::products::cap;
use crate::simplicial::{Chain, Homology, HomologyClass};

/// A graded homomorphism `h_k : H_k -> H_{k+shift}` given block by block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedEndomorphism {
    shift: i64,
    blocks: Vec<RationalMatrix>,
}

impl GradedEndomorphism {
    /// `blocks[k]` must be `dim H_{k+shift} x dim H_k` for the homology it is
    /// used with (zero rows when `k + shift` is out of range).
    pub fn new(shift: i64, blocks: Vec<RationalMatrix>) -> Self {
        GradedEndomorphism { shift, blocks }
    }

    pub fn identity(h: &Homology) -> Self {
        Self::new(
            0,
            (0..h.degrees()).map(|k| RationalMatrix::identity(h.betti(k))).collect(),
        )
    }

    pub fn zero(h: &Homology, shift: i64) -> Self {
        Self::new(
            shift,
            (0..h.degrees())
                .map(|k| RationalMatrix::zeros(target_dim(h, k, shift), h.betti(k)))
                .collect(),
        )
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn blocks(&self) -> &[RationalMatrix] {
        &self.blocks
    }

    pub fn block(&self, k: usize) -> Option<&RationalMatrix> {
        self.blocks.get(k)
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(RationalMatrix::is_zero)
    }

    pub fn check(&self, h: &Homology) -> Result<(), LefschetzError> {
        if self.blocks.len() != h.degrees() {
            return Err(LefschetzError::DimensionInconsistent(format!(
                "{} blocks for {} homology degrees",
                self.blocks.len(),
                h.degrees()
            )));
        }
        for (k, b) in self.blocks.iter().enumerate() {
            let expected = (target_dim(h, k, self.shift), h.betti(k));
            if (b.rows(), b.cols()) != expected {
                return Err(LefschetzError::DimensionInconsistent(format!(
                    "block {k} is {}x{}, expected {}x{}",
                    b.rows(),
                    b.cols(),
                    expected.0,
                    expected.1
                )));
            }
        }
        Ok(())
    }

    /// `Σ_k (-1)^k Tr(h_k)`; only meaningful for `shift = 0`.
    pub fn alternating_trace(&self) -> Result<algebra::Rational, LefschetzError> {
        if self.shift != 0 {
            return Err(LefschetzError::DimensionInconsistent(
                "trace needs degree-preserving blocks".into(),
            ));
        }
        Ok(crate::simplicial::alternating_trace(&self.blocks))
    }
}

pub(crate) fn target_dim(h: &Homology, k: usize, shift: i64) -> usize {
    let t = k as i64 + shift;
    if t < 0 {
        0
    } else {
        h.betti(t as usize)
    }
}

/// `L(h) = Σ_k (-1)^{k(k+m)} Σ_j x_j^k ⌢ h(a_j^k)`, a class in `H_m`.
///
/// `h` must be built over the homology `hom` (typically absolute homology of a
/// closed or bounded manifold). A negative shift yields `NegativeShift`.
pub fn lefschetz_class(h: &GradedEndomorphism, hom: &Homology) -> Result<HomologyClass, LefschetzError> {
    h.check(hom)?;
    if h.shift < 0 {
        return Err(LefschetzError::NegativeShift(h.shift));
    }
    let m = h.shift as usize;
    let mut total = Chain::zero(m);
    for (k, block) in h.blocks.iter().enumerate() {
        if block.is_zero() {
            continue;
        }
        let sign = algebra::sign(k * (k + m));
        for j in 0..hom.betti(k) {
            let image = HomologyClass::new(k + m, block.column(j));
            if image.is_zero() {
                continue;
            }
            let rep = hom.representative(&image)?;
            let term = cap(&hom.cocycle(k, j), &rep)?;
            total = &total + &term.scale(&sign);
        }
    }
    Ok(if total.is_zero() {
        hom.zero_class(m)
    } else {
        hom.class_of(&total)?
    })
}

/// The coefficient of `L(h)` on the basis class of `H_0` when `H_0` is one-dimensional.
pub fn scalar_of(class: &HomologyClass) -> Option<algebra::Rational> {
    match class.coords.as_slice() {
        [] if class.degree == 0 => Some(algebra::Rational::zero()),
        [c] => Some(c.clone()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::simplicial::{SimplicialComplex, SimplicialPair};

    fn sphere() -> Homology {
        let c = SimplicialComplex::from_facets_numbered(4, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        Homology::compute(&SimplicialPair::absolute(c))
    }

    #[test]
    fn identity_on_sphere_gives_euler_characteristic() {
        let h = sphere();
        let l = lefschetz_class(&GradedEndomorphism::identity(&h), &h).unwrap();
        assert_eq!(l, HomologyClass::new(0, vec![int(2)]));
    }

    #[test]
    fn shape_is_checked() {
        let h = sphere();
        let bad = GradedEndomorphism::new(0, vec![RationalMatrix::identity(2)]);
        assert!(matches!(
            lefschetz_class(&bad, &h),
            Err(LefschetzError::DimensionInconsistent(_))
        ));
        let negative = GradedEndomorphism::zero(&h, -1);
        assert_eq!(lefschetz_class(&negative, &h), Err(LefschetzError::NegativeShift(-1)));
    }
}
