//! Fundamental classes, cap products, duality, cross products and degree.

mod cap;
mod manifold;
mod orientation;

pub use cap::{cap, cap_class, kronecker, CapError};
pub use manifold::{DualityError, OrientedManifold};
pub use orientation::{orient, FundamentalClass, OrientationError};

use thiserror::Error;

use crate::algebra::{Rational, RationalMatrix};
use crate::simplicial::{Homology, HomologyClass, HomologyError, MapError, ProductPair, SimplicialMap, SimplicialPair};

/// A product pair together with the homology of both factors and of the product.
#[derive(Debug, Clone)]
pub struct ProductHomology {
    product: ProductPair,
    first: Homology,
    second: Homology,
    total: Homology,
}

impl ProductHomology {
    pub fn new(first: &SimplicialPair, second: &SimplicialPair) -> Self {
        Self::from_parts(
            ProductPair::new(first.clone(), second.clone()),
            Homology::compute(first),
            Homology::compute(second),
        )
    }

    /// Reuses already computed factor homology.
    pub fn from_parts(product: ProductPair, first: Homology, second: Homology) -> Self {
        debug_assert!(first.pair() == product.first() && second.pair() == product.second());
        let total = Homology::compute(product.pair());
        ProductHomology {
            product,
            first,
            second,
            total,
        }
    }

    pub fn product(&self) -> &ProductPair {
        &self.product
    }

    pub fn first(&self) -> &Homology {
        &self.first
    }

    pub fn second(&self) -> &Homology {
        &self.second
    }

    pub fn homology(&self) -> &Homology {
        &self.total
    }

    /// `a × v`: shuffle image of representatives, in the product basis.
    pub fn cross(&self, a: &HomologyClass, v: &HomologyClass) -> Result<HomologyClass, HomologyError> {
        let chain = self
            .product
            .cross_chain(&self.first.representative(a)?, &self.second.representative(v)?);
        self.total.class_of(&chain)
    }

    /// Cross product of basis classes `a_i^p × b_j^q` as a matrix with one
    /// column per pair `(i, j)`, ordered by `i` then `j`.
    pub fn cross_matrix(&self, p: usize, q: usize) -> RationalMatrix {
        let mut columns = Vec::new();
        for i in 0..self.first.betti(p) {
            for j in 0..self.second.betti(q) {
                let c = self
                    .cross(&self.first.basis_class(p, i), &self.second.basis_class(q, j))
                    .expect("basis classes are valid");
                columns.push(c.coords);
            }
        }
        RationalMatrix::from_columns(self.total.betti(p + q), &columns)
    }

    /// Pushes a class through `(x, u) ↦ x` into the first factor. Fails with
    /// `NotACycle` when the image is not a relative cycle there, which can
    /// happen when the second factor has a nonempty subcomplex.
    pub fn project_first(&self, class: &HomologyClass) -> Result<HomologyClass, HomologyError> {
        let chain = self.total.representative(class)?;
        self.first.class_of(&self.product.projection_first().push(&chain))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegreeError {
    #[error("manifolds have different dimensions {source_dim} and {target_dim}")]
    DimensionMismatch { source_dim: usize, target_dim: usize },
    #[error("orientation unavailable: the map's {0} pair is not the oriented manifold")]
    OrientationUnavailable(&'static str),
    #[error(transparent)]
    Map(#[from] MapError),
}

/// The scalar `d` with `f_*(O_N) = d O_M`.
pub fn degree(
    f: &SimplicialMap,
    source: &OrientedManifold,
    target: &OrientedManifold,
) -> Result<Rational, DegreeError> {
    if source.dim() != target.dim() {
        return Err(DegreeError::DimensionMismatch {
            source_dim: source.dim(),
            target_dim: target.dim(),
        });
    }
    if f.source() != source.pair() {
        return Err(DegreeError::OrientationUnavailable("source"));
    }
    if f.target() != target.pair() {
        return Err(DegreeError::OrientationUnavailable("target"));
    }
    let image = f.push(source.fundamental().cycle());
    let class = target.relative().class_of(&image).map_err(MapError::from)?;
    Ok(class
        .multiple_of(&target.fundamental_class())
        .expect("top relative homology of an oriented manifold is one-dimensional"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::simplicial::SimplicialComplex;

    fn circle(n: usize) -> SimplicialPair {
        let edges: Vec<Vec<usize>> = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
        let facets: Vec<&[usize]> = edges.iter().map(Vec::as_slice).collect();
        SimplicialPair::absolute(SimplicialComplex::from_facets_numbered(n, &facets))
    }

    #[test]
    fn degrees_on_circles() {
        let (six, three) = (circle(6), circle(3));
        let m6 = OrientedManifold::orient(&six, None).unwrap();
        let m3 = OrientedManifold::orient(&three, None).unwrap();
        let cover = SimplicialMap::from_vertex_images(six, three.clone(), &[0, 1, 2, 0, 1, 2]).unwrap();
        assert_eq!(degree(&cover, &m6, &m3).unwrap(), int(2));
        let id = SimplicialMap::identity(three.clone());
        assert_eq!(degree(&id, &m3, &m3).unwrap(), int(1));
        let constant = SimplicialMap::constant(three.clone(), three, 0).unwrap();
        assert_eq!(degree(&constant, &m3, &m3).unwrap(), int(0));
    }

    #[test]
    fn torus_generator() {
        let c = circle(3);
        let ph = ProductHomology::new(&c, &c);
        let g = ph.first().basis_class(1, 0);
        let top = ph.cross(&g, &g).unwrap();
        assert_eq!(top.degree, 2);
        assert!(!top.is_zero());
        let unit = ph.second().basis_class(0, 0);
        let a = ph.cross(&g, &unit).unwrap();
        assert_eq!(ph.project_first(&a).unwrap(), g);
    }
}
