//! Discrete-time control systems and their certificates: equilibria,
//! surjectivity, controllability chains, removability preconditions.

mod controllability;
mod equilibrium;
mod reachability;
mod removability;
mod surjectivity;
mod system;

pub use controllability::{ChainSearch, CompositionCheck, CompositionMethod, ControllabilityChain};
pub use equilibrium::{euler_class, SphereVerdict};
pub use reachability::Reachability;
pub use removability::{removability_precondition, sphere_table_admits, Clause, RemovabilityReport};
pub use surjectivity::{maximal_simplices, surjectivity_certificate, surjectivity_oracle};
pub use system::DiscreteSystem;

use thiserror::Error;

use crate::lefschetz::LefschetzError;
use crate::products::{CapError, OrientationError};
use crate::simplicial::{HomologyError, MapError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ControlError {
    #[error("system map is not defined on the product of state and input complexes")]
    WrongProduct,
    #[error("map does not land in the oriented state manifold")]
    WrongTarget,
    #[error("boundary condition violated: {simplex} is not sent into the state boundary")]
    BoundaryCondition { simplex: String },
    #[error("start complex is not a subcomplex of the state complex")]
    StartNotSubcomplex,
    #[error("operation is not available for systems given on a subdivision")]
    RefinedUnsupported,
    #[error("subdivision map is not a homology isomorphism in degree {0}")]
    SingularRefinement(usize),
    #[error("state space does not have the homology of a sphere (Betti numbers {0:?})")]
    NotASphere(Vec<usize>),
    #[error("malformed homology declaration: {0}")]
    MalformedHomology(String),
    #[error("invalid class: {0}")]
    InvalidClass(String),
    #[error(transparent)]
    Orientation(#[from] OrientationError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Cap(#[from] CapError),
    #[error(transparent)]
    Lefschetz(#[from] LefschetzError),
}
