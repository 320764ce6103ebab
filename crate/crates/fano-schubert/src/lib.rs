//! Exact-arithmetic Schubert calculus on Grassmannians and the numerical
//! geometry of loci of planes on complete intersections of quadrics:
//! Littlewood-Richardson expansions, Chern/Todd/Riemann-Roch invariants,
//! plethysm of wedge powers of Sym², and Borel-Weil-Bott cohomology.
//!
//! Every computation is exact (integers or rationals); nothing is floating
//! point, and results forced to be integers are checked to be so.

pub mod bott;
pub mod bundles;
pub mod chow;
pub mod cli;
pub mod error;
pub mod invariants;
pub mod koszul;
pub mod partition;
pub mod plethysm;
pub mod reproduce;
mod symfun;

pub use chow::{complement, ChowClass, Grassmannian};
pub use error::{Error, Result};
pub use partition::{lr_coefficients, weyl_dim, FrobeniusCoords, LrExpansion, Partition};
