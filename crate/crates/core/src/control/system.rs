use std::sync::OnceLock;

use crate::algebra::RationalMatrix;
use crate::products::{OrientedManifold, ProductHomology};
use crate::simplicial::{Homology, ProductPair, Simplex, SimplicialComplex, SimplicialMap, SimplicialPair};

use super::ControlError;

/// A discrete-time system `g : M × U -> M` on a triangulated oriented manifold.
///
/// The map may be given on a subdivision `M'` of the state space together
/// with a vertex map `s : M' -> M` approximating the identity; then the system
/// reads `g : M' × U -> M` and the state at the next step is read back on `M`.
#[derive(Debug)]
pub struct DiscreteSystem {
    state: OrientedManifold,
    fine: Option<(OrientedManifold, SimplicialMap)>,
    input: SimplicialComplex,
    product: ProductPair,
    map: SimplicialMap,
    absolute_product: OnceLock<ProductHomology>,
    relative_product: OnceLock<ProductHomology>,
    transport: OnceLock<Vec<RationalMatrix>>,
}

impl Clone for DiscreteSystem {
    fn clone(&self) -> Self {
        DiscreteSystem {
            state: self.state.clone(),
            fine: self.fine.clone(),
            input: self.input.clone(),
            product: self.product.clone(),
            map: self.map.clone(),
            absolute_product: OnceLock::new(),
            relative_product: OnceLock::new(),
            transport: OnceLock::new(),
        }
    }
}

impl DiscreteSystem {
    /// `map` must be a simplicial map from the staircase product of the state
    /// and input complexes to the state complex.
    pub fn new(state: OrientedManifold, input: SimplicialComplex, map: SimplicialMap) -> Result<Self, ControlError> {
        Self::build(state, None, input, map)
    }

    /// A system given on a subdivision of the state space.
    pub fn refined(
        state: OrientedManifold,
        fine: OrientedManifold,
        refinement: SimplicialMap,
        input: SimplicialComplex,
        map: SimplicialMap,
    ) -> Result<Self, ControlError> {
        let refinement = refinement.with_pairs(fine.pair().clone(), state.pair().clone())?;
        Self::build(state, Some((fine, refinement)), input, map)
    }

    /// Builds the system map from a vertex rule `(x, u) ↦ g(x, u)`.
    pub fn from_rule(
        state: OrientedManifold,
        input: SimplicialComplex,
        rule: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, ControlError> {
        let product = ProductPair::new(state.pair().to_absolute(), SimplicialPair::absolute(input.clone()));
        let assignment = (0..product.total().labels().len())
            .map(|v| {
                let (x, u) = product.split(v);
                Some(rule(x, u))
            })
            .collect();
        let map = SimplicialMap::unchecked_pairs(
            SimplicialPair::absolute(product.total().clone()),
            state.pair().to_absolute(),
            assignment,
        )?;
        Self::new(state, input, map)
    }

    fn build(
        state: OrientedManifold,
        fine: Option<(OrientedManifold, SimplicialMap)>,
        input: SimplicialComplex,
        map: SimplicialMap,
    ) -> Result<Self, ControlError> {
        let source_state = fine.as_ref().map_or(&state, |(f, _)| f);
        let product = ProductPair::new(source_state.pair().clone(), SimplicialPair::absolute(input.clone()));
        if map.source().total() != product.total() {
            return Err(ControlError::WrongProduct);
        }
        if map.target().total() != state.pair().total() {
            return Err(ControlError::WrongTarget);
        }
        let map = map.absolute();
        Ok(DiscreteSystem {
            state,
            fine,
            input,
            product,
            map,
            absolute_product: OnceLock::new(),
            relative_product: OnceLock::new(),
            transport: OnceLock::new(),
        })
    }

    pub fn state(&self) -> &OrientedManifold {
        &self.state
    }

    /// The triangulation the map is defined on (the subdivision when refined).
    pub fn source_state(&self) -> &OrientedManifold {
        self.fine.as_ref().map_or(&self.state, |(f, _)| f)
    }

    pub fn refinement(&self) -> Option<&SimplicialMap> {
        self.fine.as_ref().map(|(_, s)| s)
    }

    pub fn is_refined(&self) -> bool {
        self.fine.is_some()
    }

    pub fn input(&self) -> &SimplicialComplex {
        &self.input
    }

    /// `(M, ∂M) × (U, ∅)` on the source triangulation.
    pub fn product(&self) -> &ProductPair {
        &self.product
    }

    /// The system map between absolute pairs.
    pub fn map(&self) -> &SimplicialMap {
        &self.map
    }

    pub fn dim(&self) -> usize {
        self.state.dim()
    }

    /// Homology of `M × U` and both factors, all absolute.
    pub fn absolute_product(&self) -> &ProductHomology {
        self.absolute_product.get_or_init(|| {
            ProductHomology::new(
                &self.source_state().pair().to_absolute(),
                &SimplicialPair::absolute(self.input.clone()),
            )
        })
    }

    /// Homology of `(M × U, ∂M × U)` and of `(M, ∂M)`, `U`.
    pub fn relative_product(&self) -> &ProductHomology {
        self.relative_product.get_or_init(|| {
            ProductHomology::from_parts(
                self.product.clone(),
                self.source_state().relative().clone(),
                Homology::compute(&SimplicialPair::absolute(self.input.clone())),
            )
        })
    }

    pub fn input_homology(&self) -> &Homology {
        self.absolute_product().second()
    }

    /// Per degree, the matrix carrying absolute classes of `M` to the source
    /// triangulation (`s_*^{-1}`, or the identity when unrefined).
    pub fn transport(&self, k: usize) -> RationalMatrix {
        let all = self.transport.get_or_init(|| {
            let coarse = self.state.absolute();
            match &self.fine {
                None => (0..coarse.degrees())
                    .map(|k| RationalMatrix::identity(coarse.betti(k)))
                    .collect(),
                Some((fine, s)) => {
                    let s = s.absolute();
                    (0..coarse.degrees())
                        .map(|k| {
                            s.induced_homology(fine.absolute(), coarse, k)
                                .expect("refinement is simplicial")
                                .inverse()
                                .expect("refinement induces isomorphisms")
                        })
                        .collect()
                }
            }
        });
        all.get(k).cloned().unwrap_or_else(|| RationalMatrix::zeros(0, 0))
    }

    /// The state projection read on `M`: `π_1`, or `s ∘ π_1` when refined.
    /// Source pair is `(M' × U, ∂M' × U)`, target `(M, ∂M)`.
    pub fn projection(&self) -> SimplicialMap {
        let p = self.product.projection_first();
        match &self.fine {
            None => p,
            Some((_, s)) => p.then(s).expect("projection lands in the subdivision"),
        }
    }

    /// Checks that the refinement, if any, induces isomorphisms on homology.
    pub(crate) fn check_refinement(&self) -> Result<(), ControlError> {
        if let Some((fine, s)) = &self.fine {
            let s = s.absolute();
            for k in 0..self.state.absolute().degrees() {
                let m = s.induced_homology(fine.absolute(), self.state.absolute(), k)?;
                if m.inverse().is_err() {
                    return Err(ControlError::SingularRefinement(k));
                }
            }
        }
        Ok(())
    }

    /// Product simplices over the given state and input subcomplexes.
    pub fn product_simplices_over<'a>(
        &'a self,
        state_part: &'a SimplicialComplex,
        input_part: &'a SimplicialComplex,
    ) -> impl Iterator<Item = &'a Simplex> + 'a {
        self.product.total().all_simplices().filter(move |s| {
            let (x, u) = self.product.project(s);
            state_part.contains(&x) && input_part.contains(&u)
        })
    }
}
