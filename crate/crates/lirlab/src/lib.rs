//! Locally irregular 2-edge-colorings of multigraphs and the minimum number of
//! edge doublings that makes such a coloring exist.
//!
//! - [`graph`]: multigraphs with doubled bundles, colorings, the verifier;
//! - [`io`]: JSON and DOT;
//! - [`families`]: generators and the family spec grammar;
//! - [`colorers`]: constructive plans for each family;
//! - [`solver`]: exact search for lir, 2-liec existence and doubling numbers;
//! - [`reference`]: brute-force enumerators used as oracles;
//! - [`sweeps`]: named parameter sweeps checking plans against their promises.

pub mod colorers;
pub mod error;
pub mod families;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod reference;
pub mod solver;
pub mod sweeps;

pub use error::{Error, Result};
pub use graph::{
    apply_doubling, color_degrees, is_locally_irregular, verify_liec, Bundle, Color, ColorDegrees,
    DoublingPlan, EdgeColoring, Multigraph, VerificationReport, Violation,
};
