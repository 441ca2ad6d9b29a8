use std::collections::{BTreeSet, HashSet};

use super::surjectivity::{maximal_simplices, surjectivity_oracle};
use super::{ControlError, DiscreteSystem};
use crate::algebra::{self, RationalMatrix, RationalVector};
use crate::products::ProductHomology;
use crate::simplicial::{
    Homology, HomologyClass, ProductPair, Simplex, SimplicialComplex, SimplicialMap, SimplicialPair,
};

/// A witness for robust controllability from `L`: `a_1 = f'_*(a_0 ⊗ v_0)`,
/// `a_{i+1} = f_*(a_i ⊗ v_i)`, ending in a nonzero class of `H_n(M, ∂M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ControllabilityChain {
    /// `a_0` in `H_p(L, L')`.
    pub start_class: HomologyClass,
    /// `v_0, ..., v_r` in `H_*(U, U')`.
    pub inputs: Vec<HomologyClass>,
    /// `a_1, ..., a_{r+1}` in `H_*(M, ∂M)`.
    pub classes: Vec<HomologyClass>,
}

impl ControllabilityChain {
    pub fn steps(&self) -> usize {
        self.inputs.len()
    }

    /// `n_0 = p, n_{i+1} = n_i + s_i`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut out = vec![self.start_class.degree];
        for v in &self.inputs {
            out.push(out.last().expect("nonempty") + v.degree);
        }
        out
    }

    pub fn final_class(&self) -> &HomologyClass {
        self.classes.last().expect("a chain has at least one step")
    }
}

#[derive(Debug, Clone)]
pub struct ChainSearch {
    pub boundary_inputs: SimplicialComplex,
    pub start_boundary: SimplicialComplex,
    pub max_steps: usize,
    /// Distinct nonzero classes visited, up to scalar multiples.
    pub explored: usize,
    pub chain: Option<ControllabilityChain>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompositionMethod {
    /// `F` is simplicial on the iterated staircase product and was checked directly.
    ComposedMap,
    /// `F` is not simplicial there; its image was computed by iterating image complexes.
    ImageIteration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionCheck {
    pub method: CompositionMethod,
    pub steps: usize,
    pub onto: bool,
}

struct Node {
    class: HomologyClass,
    input: HomologyClass,
    parent: Result<usize, HomologyClass>,
}

impl DiscreteSystem {
    /// The largest subcomplex `U'` with `g(M × U') ⊆ ∂M`; empty when `∂M = ∅`.
    pub fn boundary_input_subcomplex(&self) -> SimplicialComplex {
        let boundary = self.state().pair().sub();
        if boundary.is_empty() {
            return SimplicialComplex::empty(self.input().labels().to_vec());
        }
        let bad: HashSet<Simplex> = self
            .product()
            .total()
            .all_simplices()
            .filter(|s| !boundary.contains(&self.map().image_simplex(s)))
            .map(|s| self.product().project(s).1)
            .collect();
        self.input().filter(|t| t.all_faces().iter().all(|f| !bad.contains(f)))
    }

    /// Checks `g(∂M × U) ⊆ ∂M`.
    pub fn check_boundary_condition(&self) -> Result<(), ControlError> {
        let source_boundary = self.source_state().pair().sub();
        let boundary = self.state().pair().sub();
        for s in self.product().total().all_simplices() {
            if source_boundary.contains(&self.product().project(s).0)
                && !boundary.contains(&self.map().image_simplex(s))
            {
                return Err(ControlError::BoundaryCondition {
                    simplex: self.product().total().render_simplex(s),
                });
            }
        }
        Ok(())
    }

    fn start_pair(&self, start: &SimplicialComplex) -> Result<SimplicialPair, ControlError> {
        if !start.is_subcomplex_of(self.state().pair().total()) {
            return Err(ControlError::StartNotSubcomplex);
        }
        let start_boundary = start.intersection(self.state().pair().sub());
        Ok(SimplicialPair::new(start.clone(), start_boundary).expect("intersection is a subcomplex"))
    }

    /// Breadth-first search for a controllability chain of at most `max_steps`
    /// steps (default: the state dimension), starting from classes of `(L, L')`.
    pub fn controllability_chain_search(
        &self,
        start: &SimplicialComplex,
        max_steps: Option<usize>,
    ) -> Result<ChainSearch, ControlError> {
        if self.is_refined() {
            return Err(ControlError::RefinedUnsupported);
        }
        self.check_boundary_condition()?;
        let n = self.dim();
        let max_steps = max_steps.unwrap_or(n);
        let l_pair = self.start_pair(start)?;
        let u_prime = self.boundary_input_subcomplex();
        let u_pair = SimplicialPair::new(self.input().clone(), u_prime.clone()).expect("subcomplex of U");
        let hu = Homology::compute(&u_pair);
        let m_rel = self.state().relative();

        let start_product = ProductHomology::from_parts(
            ProductPair::new(l_pair.clone(), u_pair.clone()),
            Homology::compute(&l_pair),
            hu.clone(),
        );
        let first_map = self
            .map()
            .restrict(SimplicialPair::absolute(start_product.product().total().clone()))?
            .with_pairs(start_product.product().pair().clone(), self.state().pair().clone())?;
        let state_product = ProductHomology::from_parts(
            ProductPair::new(self.state().pair().clone(), u_pair.clone()),
            m_rel.clone(),
            hu.clone(),
        );
        let step_map = self
            .map()
            .with_pairs(state_product.product().pair().clone(), self.state().pair().clone())?;
        let induced = |map: &SimplicialMap, ph: &ProductHomology| -> Result<Vec<RationalMatrix>, ControlError> {
            (0..=n)
                .map(|d| Ok(map.induced_homology(ph.homology(), m_rel, d)?))
                .collect()
        };
        let first_matrices = induced(&first_map, &start_product)?;
        let step_matrices = induced(&step_map, &state_product)?;
        let apply = |ph: &ProductHomology, g: &[RationalMatrix], a: &HomologyClass, v: &HomologyClass| {
            let d = a.degree + v.degree;
            if d > n {
                return Ok::<_, ControlError>(None);
            }
            let cross = ph.cross(a, v)?;
            let image = HomologyClass::new(d, g[d].mul_vector(&cross.coords).expect("sizes"));
            Ok((!image.is_zero()).then_some(image))
        };

        let inputs: Vec<HomologyClass> = basis(&hu);
        let starts: Vec<HomologyClass> = basis(start_product.first());
        let mut nodes: Vec<Node> = Vec::new();
        let mut visited: HashSet<(usize, RationalVector)> = HashSet::new();
        let mut frontier: Vec<usize> = Vec::new();
        let mut found: Option<usize> = None;

        let mut visit = |nodes: &mut Vec<Node>, node: Node| -> Option<usize> {
            let key = (
                node.class.degree,
                algebra::normalize_direction(&node.class.coords).expect("nonzero class"),
            );
            if !visited.insert(key) {
                return None;
            }
            nodes.push(node);
            Some(nodes.len() - 1)
        };

        if max_steps > 0 {
            'level0: for a0 in &starts {
                for v in &inputs {
                    if let Some(a1) = apply(&start_product, &first_matrices, a0, v)? {
                        let node = Node {
                            class: a1,
                            input: v.clone(),
                            parent: Err(a0.clone()),
                        };
                        if let Some(i) = visit(&mut nodes, node) {
                            if nodes[i].class.degree == n {
                                found = Some(i);
                                break 'level0;
                            }
                            frontier.push(i);
                        }
                    }
                }
            }
        }
        let mut steps = 1;
        while found.is_none() && steps < max_steps && !frontier.is_empty() {
            steps += 1;
            let mut next = Vec::new();
            'level: for &p in &frontier {
                for v in &inputs {
                    let a = nodes[p].class.clone();
                    if let Some(image) = apply(&state_product, &step_matrices, &a, v)? {
                        let node = Node {
                            class: image,
                            input: v.clone(),
                            parent: Ok(p),
                        };
                        if let Some(i) = visit(&mut nodes, node) {
                            if nodes[i].class.degree == n {
                                found = Some(i);
                                break 'level;
                            }
                            next.push(i);
                        }
                    }
                }
            }
            frontier = next;
        }

        let chain = found.map(|mut i| {
            let mut classes = Vec::new();
            let mut chain_inputs = Vec::new();
            loop {
                classes.push(nodes[i].class.clone());
                chain_inputs.push(nodes[i].input.clone());
                match &nodes[i].parent {
                    Ok(p) => i = *p,
                    Err(a0) => {
                        classes.reverse();
                        chain_inputs.reverse();
                        return ControllabilityChain {
                            start_class: a0.clone(),
                            inputs: chain_inputs,
                            classes,
                        };
                    }
                }
            }
        });
        if let Some(c) = &chain {
            debug_assert_eq!(c.degrees().last().copied(), Some(n));
        }
        Ok(ChainSearch {
            boundary_inputs: u_prime,
            start_boundary: l_pair.sub().clone(),
            max_steps,
            explored: nodes.len(),
            chain,
        })
    }

    /// Whether `F(x, u_0, ..., u_r) = g(...g(g(x, u_0), u_1)..., u_r)` maps
    /// `L × U^{steps}` onto `M`. `F` is first built as a vertex map on the
    /// iterated staircase product; if that is not simplicial, the image is
    /// computed exactly by iterating image complexes.
    pub fn composed_map_check(
        &self,
        start: &SimplicialComplex,
        steps: usize,
    ) -> Result<CompositionCheck, ControlError> {
        if self.is_refined() {
            return Err(ControlError::RefinedUnsupported);
        }
        let start = self.start_pair(start)?.total().clone();
        if let Some(f) = self.composed_map(&start, steps) {
            return Ok(CompositionCheck {
                method: CompositionMethod::ComposedMap,
                steps,
                onto: surjectivity_oracle(&f),
            });
        }
        let image = self.iterated_image(&start, steps);
        let onto = maximal_simplices(self.state().pair().total())
            .iter()
            .all(|s| image.contains(s));
        Ok(CompositionCheck {
            method: CompositionMethod::ImageIteration,
            steps,
            onto,
        })
    }

    /// `F` as a simplicial map on `L × U × ... × U`, when it is one.
    pub fn composed_map(&self, start: &SimplicialComplex, steps: usize) -> Option<SimplicialMap> {
        if steps == 0 {
            return None;
        }
        let u = SimplicialPair::absolute(self.input().clone());
        let mut levels = vec![ProductPair::new(SimplicialPair::absolute(start.clone()), u.clone())];
        for _ in 1..steps {
            let previous = levels.last().expect("nonempty").pair().to_absolute();
            levels.push(ProductPair::new(previous, u.clone()));
        }
        let last = levels.last().expect("nonempty");
        let eval = |v: usize| -> usize {
            // Peel off inputs from the outermost product inward.
            let mut inputs = Vec::with_capacity(steps);
            let mut current = v;
            for level in levels.iter().rev() {
                let (rest, input) = level.split(current);
                inputs.push(input);
                current = rest;
            }
            inputs.into_iter().rev().fold(current, |x, input| {
                self.map().image_vertex(self.product().vertex(x, input))
            })
        };
        let assignment = (0..last.total().labels().len())
            .map(|v| {
                let vertex = Simplex::from_unsorted(vec![v]);
                last.total().contains(&vertex).then(|| eval(v))
            })
            .collect();
        SimplicialMap::unchecked_pairs(
            SimplicialPair::absolute(last.total().clone()),
            self.state().pair().to_absolute(),
            assignment,
        )
        .ok()
    }

    /// Image of `L × U^{steps}` under `F`, as a subcomplex of `M`.
    pub fn iterated_image(&self, start: &SimplicialComplex, steps: usize) -> SimplicialComplex {
        let all_inputs = self.input().clone();
        let mut current = start.clone();
        for _ in 0..steps {
            let mut set: BTreeSet<Simplex> = BTreeSet::new();
            for s in self.product_simplices_over(&current, &all_inputs) {
                set.insert(self.map().image_simplex(s));
            }
            current = self.state().pair().total().filter(|s| set.contains(s));
        }
        current
    }
}

fn basis(h: &Homology) -> Vec<HomologyClass> {
    (0..h.degrees())
        .flat_map(|k| (0..h.betti(k)).map(move |j| h.basis_class(k, j)))
        .collect()
}
