use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::algebra::{self, Rational};
use crate::simplicial::{Chain, Cochain, Simplex, SimplicialPair};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrientationError {
    #[error("complex has dimension {found:?}, expected {expected}")]
    Dimension { expected: usize, found: Option<usize> },
    #[error("complex is not pure: {simplex} is not a face of an {n}-simplex")]
    NotPure { simplex: String, n: usize },
    #[error("non-manifold: face {face} has {cofaces} top-dimensional cofaces")]
    NonManifold { face: String, cofaces: usize },
    #[error("subcomplex is not the boundary of the manifold")]
    BoundaryMismatch,
    #[error("non-orientable: orientation propagation contradicts itself at {face}")]
    NonOrientable { face: String },
    #[error("top-dimensional simplices are not connected through interior faces")]
    Disconnected,
    #[error("seed {0} is not a top-dimensional simplex")]
    InvalidSeed(String),
}

/// Coherent orientation of a connected pseudomanifold with boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalClass {
    pair: SimplicialPair,
    dim: usize,
    seed: Simplex,
    cycle: Chain,
    dual: Cochain,
}

impl FundamentalClass {
    pub fn pair(&self) -> &SimplicialPair {
        &self.pair
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn seed(&self) -> &Simplex {
        &self.seed
    }

    /// The top cycle, `±1` on every top simplex.
    pub fn cycle(&self) -> &Chain {
        &self.cycle
    }

    /// Indicator cochain of the seed simplex; pairs to 1 with the cycle.
    pub fn dual(&self) -> &Cochain {
        &self.dual
    }
}

/// Orients `pair` as an `n`-manifold with boundary equal to its subcomplex.
/// The seed (default: least top simplex) receives `+1`.
pub fn orient(pair: &SimplicialPair, n: usize, seed: Option<&Simplex>) -> Result<FundamentalClass, OrientationError> {
    let total = pair.total();
    if total.dim() != Some(n) {
        return Err(OrientationError::Dimension {
            expected: n,
            found: total.dim(),
        });
    }
    if !total.is_pure() {
        let covered: std::collections::BTreeSet<Simplex> =
            total.simplices(n).iter().flat_map(Simplex::all_faces).collect();
        let s = total
            .all_simplices()
            .find(|s| !covered.contains(s))
            .expect("impure complex has an uncovered simplex");
        return Err(OrientationError::NotPure {
            simplex: total.render_simplex(s),
            n,
        });
    }
    let top = total.simplices(n);

    // (n-1)-face -> list of (top simplex index, position of the face in it)
    let mut incidences: HashMap<Simplex, Vec<(usize, usize)>> = HashMap::new();
    for (t, s) in top.iter().enumerate() {
        for (i, f) in s.faces() {
            incidences.entry(f).or_default().push((t, i));
        }
    }
    if n > 0 {
        for f in total.simplices(n - 1) {
            let count = incidences.get(f).map_or(0, Vec::len);
            if count > 2 || (count != 2 && !pair.sub().contains(f)) {
                return Err(OrientationError::NonManifold {
                    face: total.render_simplex(f),
                    cofaces: count,
                });
            }
        }
    }
    if total.boundary_complex() != *pair.sub() {
        return Err(OrientationError::BoundaryMismatch);
    }

    let seed_index = match seed {
        Some(s) => top
            .iter()
            .position(|t| t == s)
            .ok_or_else(|| OrientationError::InvalidSeed(total.render_simplex(s)))?,
        None => 0,
    };
    let mut signs: Vec<Option<bool>> = vec![None; top.len()];
    signs[seed_index] = Some(false);
    let mut queue = VecDeque::from([seed_index]);
    while let Some(t) = queue.pop_front() {
        let negative = signs[t].expect("queued simplices are signed");
        for (i, f) in top[t].faces() {
            for &(u, j) in &incidences[&f] {
                if u == t {
                    continue;
                }
                // Coefficients of f in ∂ must cancel: ε_t (-1)^i + ε_u (-1)^j = 0.
                let required = !(negative ^ ((i + j) % 2 == 1));
                match signs[u] {
                    None => {
                        signs[u] = Some(required);
                        queue.push_back(u);
                    }
                    Some(existing) if existing != required => {
                        return Err(OrientationError::NonOrientable {
                            face: total.render_simplex(&f),
                        });
                    }
                    Some(_) => {}
                }
            }
        }
    }
    if signs.iter().any(Option::is_none) {
        return Err(OrientationError::Disconnected);
    }

    let cycle: Chain = top
        .iter()
        .zip(&signs)
        .map(|(s, sign)| {
            let c: Rational = if sign.expect("all signed") {
                algebra::int(-1)
            } else {
                algebra::int(1)
            };
            (s.clone(), c)
        })
        .collect();
    debug_assert!(cycle.boundary().terms().all(|(s, _)| pair.sub().contains(s)));
    let seed = top[seed_index].clone();
    let dual: Cochain = [(seed.clone(), algebra::int(1))].into_iter().collect();
    Ok(FundamentalClass {
        pair: pair.clone(),
        dim: n,
        seed,
        cycle,
        dual,
    })
}
