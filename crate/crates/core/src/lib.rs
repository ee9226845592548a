//! Mode solver for prolate ("bottle") whispering-gallery-mode microresonators.
//!
//! The resonator profile R(z) = R0/sqrt(1+(dk z)^2) confines light that spirals
//! between two axial turning points. The solver finds the azimuthal resonance,
//! the axial harmonic-oscillator spectrum, field distributions, mode volume,
//! atom-photon coupling strength and temperature/strain tuning budgets.

pub mod coupling;
pub mod error;
pub mod fields;
pub mod geometry;
pub mod materials;
pub mod modes;
pub mod quad;
pub mod report;
pub mod specfun;
pub mod tuning;

pub use error::{Error, Result};
