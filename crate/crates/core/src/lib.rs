//! Exact symbolic machinery for Calogero–Moser models: Dunkl operators,
//! deformed harmonics, intertwiners, spectra and spin content.

pub mod coeff;
pub mod coxeter;
pub mod dunkl;
pub mod error;
pub mod harmonics;
pub mod intertwine;
pub mod linalg;
pub mod poly;
pub mod radial;
pub mod random;
pub mod spectra;
pub mod spin;
pub mod verify;

pub use coeff::{ExactRational, GaussianRational};
pub use dunkl::{DunklContext, DunklFamily};
pub use error::{Error, Result};
pub use poly::{Monomial, MultiPoly};
pub use radial::RadialPoly;
pub use spectra::{ModelVariant, MultiIndex};
pub use spin::{VirtualCharacter, YoungDiagram};
