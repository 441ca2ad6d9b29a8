use num_traits::Zero;
use thiserror::Error;

use super::chain::{Chain, Cochain};
use super::complex::{Simplex, SimplicialComplex};
use super::homology::{Homology, HomologyError};
use super::pair::SimplicialPair;
use crate::algebra::{self, RationalMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("vertex {0} of the source has no image")]
    MissingVertex(String),
    #[error("vertex {vertex} is sent to {image}, which is not a vertex of the target")]
    NotATargetVertex { vertex: String, image: usize },
    #[error("image of simplex {simplex} is not a simplex of the target")]
    NotSimplicial { simplex: String },
    #[error("simplex {simplex} of the source subcomplex is not sent into the target subcomplex")]
    NotMapOfPairs { simplex: String },
    #[error("maps do not compose: target of the first is not the source of the second")]
    NotComposable,
    #[error("homology data does not describe the map's {0} complex")]
    WrongComplex(&'static str),
    #[error("restriction domain is not a subcomplex of the source")]
    NotASubcomplex,
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

/// A vertex map between pairs whose vertex images span target simplices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialMap {
    source: SimplicialPair,
    target: SimplicialPair,
    assignment: Vec<Option<usize>>,
}

impl SimplicialMap {
    /// `assignment[v]` is the image of source vertex `v`; entries for indices
    /// that are not vertices of the source are ignored.
    pub fn new(
        source: SimplicialPair,
        target: SimplicialPair,
        assignment: Vec<Option<usize>>,
    ) -> Result<Self, MapError> {
        let map = Self::unchecked_pairs(source, target, assignment)?;
        map.check_pair_condition(map.source.sub(), map.target.sub())?;
        Ok(map)
    }

    /// Checks simpliciality only; the subcomplex condition is left to callers
    /// that need it (see [`SimplicialMap::check_pair_condition`]).
    pub fn unchecked_pairs(
        source: SimplicialPair,
        target: SimplicialPair,
        mut assignment: Vec<Option<usize>>,
    ) -> Result<Self, MapError> {
        assignment.resize(source.total().labels().len(), None);
        for v in source.total().vertices() {
            let image = assignment[v].ok_or_else(|| MapError::MissingVertex(source.total().label(v).to_string()))?;
            if !target.total().is_vertex(image) {
                return Err(MapError::NotATargetVertex {
                    vertex: source.total().label(v).to_string(),
                    image,
                });
            }
        }
        let map = SimplicialMap {
            source,
            target,
            assignment,
        };
        for s in map.source.total().all_simplices() {
            if !map.target.total().contains(&map.image_simplex(s)) {
                return Err(MapError::NotSimplicial {
                    simplex: map.source.total().render_simplex(s),
                });
            }
        }
        Ok(map)
    }

    pub fn from_vertex_images(
        source: SimplicialPair,
        target: SimplicialPair,
        images: &[usize],
    ) -> Result<Self, MapError> {
        Self::new(source, target, images.iter().map(|&v| Some(v)).collect())
    }

    pub fn identity(pair: SimplicialPair) -> Self {
        let assignment = (0..pair.total().labels().len()).map(Some).collect();
        SimplicialMap {
            source: pair.clone(),
            target: pair,
            assignment,
        }
    }

    /// The map collapsing the source onto one target vertex. Fails as a map of
    /// pairs unless the source sub is empty or the vertex lies in the target sub.
    pub fn constant(source: SimplicialPair, target: SimplicialPair, vertex: usize) -> Result<Self, MapError> {
        let n = source.total().labels().len();
        Self::new(source, target, vec![Some(vertex); n])
    }

    pub fn source(&self) -> &SimplicialPair {
        &self.source
    }

    pub fn target(&self) -> &SimplicialPair {
        &self.target
    }

    pub fn image_vertex(&self, v: usize) -> usize {
        self.assignment[v].expect("vertex of the source")
    }

    pub fn assignment(&self) -> &[Option<usize>] {
        &self.assignment
    }

    /// Vertex set of the image, possibly of lower dimension.
    pub fn image_simplex(&self, s: &Simplex) -> Simplex {
        Simplex::from_unsorted(s.vertices().iter().map(|&v| self.image_vertex(v)).collect())
    }

    /// Whether `source_sub` is sent into `target_sub`.
    pub fn check_pair_condition(
        &self,
        source_sub: &SimplicialComplex,
        target_sub: &SimplicialComplex,
    ) -> Result<(), MapError> {
        for s in source_sub.all_simplices() {
            if !target_sub.contains(&self.image_simplex(s)) {
                return Err(MapError::NotMapOfPairs {
                    simplex: source_sub.render_simplex(s),
                });
            }
        }
        Ok(())
    }

    pub fn is_map_of_pairs(&self) -> bool {
        self.check_pair_condition(self.source.sub(), self.target.sub()).is_ok()
    }

    /// Same vertex map between the absolute pairs.
    pub fn absolute(&self) -> SimplicialMap {
        SimplicialMap {
            source: self.source.to_absolute(),
            target: self.target.to_absolute(),
            assignment: self.assignment.clone(),
        }
    }

    /// Same vertex map with new source and target pairs over the same totals.
    pub fn with_pairs(&self, source: SimplicialPair, target: SimplicialPair) -> Result<SimplicialMap, MapError> {
        if source.total() != self.source.total() {
            return Err(MapError::WrongComplex("source"));
        }
        if target.total() != self.target.total() {
            return Err(MapError::WrongComplex("target"));
        }
        let map = SimplicialMap {
            source,
            target,
            assignment: self.assignment.clone(),
        };
        map.check_pair_condition(map.source.sub(), map.target.sub())?;
        Ok(map)
    }

    /// Restriction to a subpair of the source (same label table).
    pub fn restrict(&self, domain: SimplicialPair) -> Result<SimplicialMap, MapError> {
        if !domain.total().is_subcomplex_of(self.source.total()) {
            return Err(MapError::NotASubcomplex);
        }
        let mut assignment = vec![None; self.assignment.len()];
        for v in domain.total().vertices() {
            assignment[v] = self.assignment[v];
        }
        let map = SimplicialMap {
            source: domain,
            target: self.target.clone(),
            assignment,
        };
        map.check_pair_condition(map.source.sub(), map.target.sub())?;
        Ok(map)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SimplicialMap) -> Result<SimplicialMap, MapError> {
        if self.target.total() != other.source.total() {
            return Err(MapError::NotComposable);
        }
        let assignment = self
            .assignment
            .iter()
            .map(|a| a.map(|v| other.image_vertex(v)))
            .collect();
        Ok(SimplicialMap {
            source: self.source.clone(),
            target: other.target.clone(),
            assignment,
        })
    }

    /// Image of one oriented simplex: zero when vertices collide, otherwise the
    /// sorted image with the sign of the sorting permutation.
    pub fn push_simplex(&self, s: &Simplex) -> Option<(Simplex, bool)> {
        let image: Vec<usize> = s.vertices().iter().map(|&v| self.image_vertex(v)).collect();
        let mut inversions = 0usize;
        for i in 0..image.len() {
            for j in i + 1..image.len() {
                match image[i].cmp(&image[j]) {
                    std::cmp::Ordering::Equal => return None,
                    std::cmp::Ordering::Greater => inversions += 1,
                    std::cmp::Ordering::Less => {}
                }
            }
        }
        Some((Simplex::from_unsorted(image), inversions % 2 == 1))
    }

    /// Chain map `f_#` into the chains of the target total complex.
    pub fn push(&self, chain: &Chain) -> Chain {
        let mut out = Chain::zero(chain.degree());
        for (s, c) in chain.terms() {
            if let Some((image, negative)) = self.push_simplex(s) {
                out.add_term(image, if negative { -c.clone() } else { c.clone() });
            }
        }
        out
    }

    /// Cochain map `f^#`, evaluated on every source simplex of the cochain's degree.
    pub fn pull(&self, cochain: &Cochain) -> Cochain {
        let k = cochain.degree();
        let mut out = Cochain::zero(k);
        for s in self.source.total().simplices(k) {
            if let Some((image, negative)) = self.push_simplex(s) {
                let v = cochain.value(&image);
                if !v.is_zero() {
                    out.add_term(s.clone(), if negative { -v } else { v });
                }
            }
        }
        out
    }

    fn check_homologies(&self, source: &Homology, target: &Homology) -> Result<(), MapError> {
        if source.pair().total() != self.source.total() {
            return Err(MapError::WrongComplex("source"));
        }
        if target.pair().total() != self.target.total() {
            return Err(MapError::WrongComplex("target"));
        }
        self.check_pair_condition(source.pair().sub(), target.pair().sub())
    }

    /// Matrix of `f_* : H_k(source) -> H_k(target)` in the chosen bases. The
    /// pairs are read from the homology data, so the same vertex map can be
    /// evaluated relatively or absolutely.
    pub fn induced_homology(&self, source: &Homology, target: &Homology, k: usize) -> Result<RationalMatrix, MapError> {
        self.check_homologies(source, target)?;
        let columns = (0..source.betti(k))
            .map(|j| {
                let image = self.push(&source.cycle(k, j));
                Ok(target.class_of(&image)?.coords)
            })
            .collect::<Result<Vec<_>, MapError>>()?;
        Ok(RationalMatrix::from_columns(target.betti(k), &columns))
    }

    /// Matrix of `f^* : H^k(target) -> H^k(source)` in the dual bases.
    pub fn induced_cohomology(
        &self,
        source: &Homology,
        target: &Homology,
        k: usize,
    ) -> Result<RationalMatrix, MapError> {
        self.check_homologies(source, target)?;
        let columns = (0..target.betti(k))
            .map(|i| {
                let mut pulled = self.pull(&target.cocycle(k, i));
                pulled.retain(|s| !source.pair().sub().contains(s));
                Ok(source.cohomology_class_of(&pulled)?)
            })
            .collect::<Result<Vec<_>, MapError>>()?;
        Ok(RationalMatrix::from_columns(source.betti(k), &columns))
    }

    /// `f_*` in every degree of the source.
    pub fn induced_homology_all(&self, source: &Homology, target: &Homology) -> Result<Vec<RationalMatrix>, MapError> {
        (0..source.degrees().max(target.degrees()))
            .map(|k| self.induced_homology(source, target, k))
            .collect()
    }
}

/// Alternating trace `Σ (-1)^k Tr(h_k)` of square per-degree matrices.
pub fn alternating_trace(blocks: &[RationalMatrix]) -> algebra::Rational {
    blocks
        .iter()
        .enumerate()
        .map(|(k, m)| algebra::sign(k) * m.trace().expect("square blocks"))
        .fold(algebra::Rational::zero(), |acc, x| acc + x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn circle(n: usize) -> SimplicialPair {
        let edges: Vec<Vec<usize>> = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
        let facets: Vec<&[usize]> = edges.iter().map(Vec::as_slice).collect();
        SimplicialPair::absolute(SimplicialComplex::from_facets_numbered(n, &facets))
    }

    #[test]
    fn identity_and_constant_on_a_circle() {
        let c = circle(3);
        let h = Homology::compute(&c);
        let id = SimplicialMap::identity(c.clone());
        assert_eq!(id.induced_homology(&h, &h, 1).unwrap(), RationalMatrix::identity(1));
        let k = SimplicialMap::constant(c.clone(), c.clone(), 2).unwrap();
        assert!(k.induced_homology(&h, &h, 1).unwrap().is_zero());
        assert!(k.induced_cohomology(&h, &h, 1).unwrap().is_zero());
        assert_eq!(k.induced_homology(&h, &h, 0).unwrap(), RationalMatrix::identity(1));
    }

    #[test]
    fn double_cover_has_degree_two() {
        let (six, three) = (circle(6), circle(3));
        let f = SimplicialMap::from_vertex_images(six.clone(), three.clone(), &[0, 1, 2, 0, 1, 2]).unwrap();
        let (h6, h3) = (Homology::compute(&six), Homology::compute(&three));
        let push = f.induced_homology(&h6, &h3, 1).unwrap();
        let pull = f.induced_cohomology(&h6, &h3, 1).unwrap();
        assert_eq!(push[(0, 0)].clone() * push[(0, 0)].clone(), int(4));
        assert_eq!(pull, push.transpose());
    }

    #[test]
    fn non_simplicial_assignment_is_rejected() {
        let edge = SimplicialPair::absolute(SimplicialComplex::from_facets_numbered(2, &[&[0, 1]]));
        let two_points = SimplicialPair::absolute(SimplicialComplex::from_facets_numbered(2, &[&[0], &[1]]));
        assert!(matches!(
            SimplicialMap::from_vertex_images(edge, two_points, &[0, 1]),
            Err(MapError::NotSimplicial { .. })
        ));
    }

    #[test]
    fn push_sign_follows_sorting() {
        let c = circle(3);
        let flip = SimplicialMap::from_vertex_images(c.clone(), c, &[1, 0, 2]).unwrap();
        let (image, negative) = flip.push_simplex(&Simplex::new(vec![0, 1]).unwrap()).unwrap();
        assert_eq!(image.vertices(), &[0, 1]);
        assert!(negative);
    }
}
