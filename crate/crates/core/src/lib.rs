pub mod algebra;
pub mod cli;
pub mod control;
pub mod fixtures;
pub mod lefschetz;
pub mod products;
pub mod simplicial;
