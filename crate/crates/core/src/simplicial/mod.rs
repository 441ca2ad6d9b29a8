//! Complexes, pairs, chains, homology with dual bases, simplicial maps and products.

mod chain;
mod complex;
mod homology;
mod map;
mod pair;
mod product;

pub use chain::{Chain, Cochain};
pub use complex::{Simplex, SimplicialComplex, ValidationError};
pub use homology::{ChainComplex, Homology, HomologyClass, HomologyError};
pub use map::{alternating_trace, MapError, SimplicialMap};
pub use pair::{validate_pair, SimplicialPair};
pub use product::{shuffles, ProductPair};
