//! Exact computations for the real local Langlands correspondence and its
//! geometric refinement: L-parameters, orbit stratifications, the
//! intersection-cohomology decomposition matrices, nilpotent orbit data, and
//! the Arthur-to-coadjoint duality for general linear groups.

pub mod arthur;
pub mod datum;
pub mod error;
pub mod geoparams;
pub mod linalg;
pub mod lparams;
pub mod orbits;
pub mod parse;
pub mod partition;
pub mod scalar;
pub mod sheafk;

pub use datum::{BasedRootDatum, CartanVector, Family};
pub use error::{Error, Result};
pub use partition::{partition_colsum, LeviBlocks, Partition};
pub use scalar::{ExpScalar, GaussianRational, Rational};
