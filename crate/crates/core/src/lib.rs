//! Exact verification of periodic points on genus-two Veech surfaces.
//!
//! The crate is organised bottom-up:
//!
//! - [`exactnum`]: rationals, ℚ(√D), ℚ(ζ_m), minimal polynomials, exact signs.
//! - [`tanratio`]: tangents of rational angles and the degree of their ratios.
//! - [`lshape`]: admissible L-shaped parameters and the trace/norm exclusion test.
//! - [`stablefiber`]: nodal limit curves, limit differentials, torsion conditions
//!   and the decagon configuration.
//! - [`report`]: reproducible machine-readable reports.
//! - [`commands`]: the checks behind each `torsion-packet` subcommand.

pub mod commands;
pub mod exactnum;
pub mod lshape;
pub mod report;
pub mod stablefiber;
pub mod tanratio;

mod error;

pub use error::{Error, Result};
