//! Surface braid group presentations and the computational checks around them.

pub mod derivation;
pub mod enumeration;
pub mod error;
pub mod morphisms;
pub mod presentations;
pub mod solvers;
pub mod words;

pub use error::{Error, Result};
pub use presentations::{build, build_presentation, Family, Presentation, Relator, SurfaceParams};
pub use words::{Alphabet, GenSym, Letter, Word};
