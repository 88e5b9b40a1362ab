//! Exact concordance obstructions for connected sums of torus knots.
//!
//! A sum `K = #±T(p,q)` is checked against determinant, Alexander
//! polynomial and lens-space cover conditions that any sum concordant to an
//! L-space knot must satisfy.
//!
//! ```
//! use torus_concordance::{evaluate, KnotSum, Status};
//!
//! let k: KnotSum = "T(3,5) # -T(2,3)".parse().unwrap();
//! assert_eq!(evaluate(&k).status, Status::Obstructed);
//! ```

pub mod cli;
pub mod covers;
pub mod invariants;
pub mod knotsum;
pub mod laurent;
pub mod obstruct;
pub mod scan;

pub use knotsum::{KnotSum, Sign, Split, TorusKnotFactor};
pub use laurent::LaurentPoly;
pub use obstruct::{evaluate, ReasonCode, Status, Verdict};
