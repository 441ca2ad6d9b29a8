use thiserror::Error;

use super::cap::cap_class;
use super::orientation::{orient, FundamentalClass, OrientationError};
use crate::algebra::{Rational, RationalMatrix, RationalVector};
use crate::simplicial::{Homology, HomologyClass, Simplex, SimplicialPair};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualityError {
    #[error("degree {k} is outside 0..={n}")]
    DegreeOutOfRange { k: usize, n: usize },
    #[error("duality matrix in degree {k} is singular")]
    Singular { k: usize },
    #[error("expected {expected} coordinates, got {got}")]
    WrongDimension { expected: usize, got: usize },
}

/// An oriented compact manifold pair `(M, ∂M)` with its relative and absolute
/// homology and the duality matrices `D_k : H^k(M,∂M) -> H_{n-k}(M)`.
#[derive(Debug, Clone)]
pub struct OrientedManifold {
    fundamental: FundamentalClass,
    relative: Homology,
    absolute: Homology,
    duality: Vec<RationalMatrix>,
}

impl OrientedManifold {
    pub fn new(pair: &SimplicialPair, n: usize, seed: Option<&Simplex>) -> Result<Self, OrientationError> {
        Ok(Self::from_fundamental(orient(pair, n, seed)?))
    }

    /// Orients a pair in the dimension of its total complex.
    pub fn orient(pair: &SimplicialPair, seed: Option<&Simplex>) -> Result<Self, OrientationError> {
        let n = pair.total().dim().ok_or(OrientationError::Dimension {
            expected: 0,
            found: None,
        })?;
        Self::new(pair, n, seed)
    }

    pub fn from_fundamental(fundamental: FundamentalClass) -> Self {
        let relative = Homology::compute(fundamental.pair());
        let absolute = Homology::compute(&fundamental.pair().to_absolute());
        let n = fundamental.dim();
        let duality = (0..=n)
            .map(|k| {
                let columns: Vec<RationalVector> = (0..relative.betti(k))
                    .map(|i| {
                        cap_class(&relative.cocycle(k, i), fundamental.cycle(), &absolute)
                            .expect("cap of a relative cocycle with the fundamental cycle is a cycle")
                            .coords
                    })
                    .collect();
                RationalMatrix::from_columns(absolute.betti(n - k), &columns)
            })
            .collect();
        OrientedManifold {
            fundamental,
            relative,
            absolute,
            duality,
        }
    }

    pub fn dim(&self) -> usize {
        self.fundamental.dim()
    }

    pub fn pair(&self) -> &SimplicialPair {
        self.fundamental.pair()
    }

    pub fn fundamental(&self) -> &FundamentalClass {
        &self.fundamental
    }

    /// Homology of `(M, ∂M)`.
    pub fn relative(&self) -> &Homology {
        &self.relative
    }

    /// Homology of `M`.
    pub fn absolute(&self) -> &Homology {
        &self.absolute
    }

    /// `O_M` in the basis of `H_n(M, ∂M)`.
    pub fn fundamental_class(&self) -> HomologyClass {
        self.relative
            .class_of(self.fundamental.cycle())
            .expect("fundamental cycle is a relative cycle")
    }

    fn check_degree(&self, k: usize) -> Result<(), DualityError> {
        if k > self.dim() {
            return Err(DualityError::DegreeOutOfRange { k, n: self.dim() });
        }
        Ok(())
    }

    pub fn duality_matrix(&self, k: usize) -> Result<&RationalMatrix, DualityError> {
        self.check_degree(k)?;
        Ok(&self.duality[k])
    }

    /// `D_M(x) = x ⌢ O_M` for `x` given by coordinates in the dual basis of `H^k(M,∂M)`.
    pub fn dual(&self, k: usize, coords: &[Rational]) -> Result<HomologyClass, DualityError> {
        let d = self.duality_matrix(k)?;
        let image = d.mul_vector(coords).map_err(|_| DualityError::WrongDimension {
            expected: d.cols(),
            got: coords.len(),
        })?;
        Ok(HomologyClass::new(self.dim() - k, image))
    }

    /// Matrix of `D_M^{-1} : H_{n-k}(M) -> H^k(M,∂M)`.
    pub fn dual_inverse_matrix(&self, k: usize) -> Result<RationalMatrix, DualityError> {
        self.duality_matrix(k)?
            .inverse()
            .map_err(|_| DualityError::Singular { k })
    }

    /// Solves `D_M(x) = a` for a class `a` in `H_{n-k}(M)`.
    pub fn dual_inverse(&self, a: &HomologyClass) -> Result<RationalVector, DualityError> {
        let n = self.dim();
        if a.degree > n {
            return Err(DualityError::DegreeOutOfRange { k: a.degree, n });
        }
        let k = n - a.degree;
        let d = self.duality_matrix(k)?;
        if a.coords.len() != d.rows() {
            return Err(DualityError::WrongDimension {
                expected: d.rows(),
                got: a.coords.len(),
            });
        }
        if !d.is_square() || d.rank() != d.cols() {
            return Err(DualityError::Singular { k });
        }
        d.solve(&a.coords)
            .expect("dimension checked")
            .ok_or(DualityError::Singular { k })
    }

    /// Whether every duality matrix is square of full rank.
    pub fn duality_is_bijective(&self) -> bool {
        self.duality.iter().all(|d| d.is_square() && d.rank() == d.rows())
    }
}
