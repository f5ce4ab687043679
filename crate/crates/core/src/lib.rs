//! Exact divisor-class arithmetic on strong del Pezzo surfaces: (-1)-lines,
//! positivity criteria, the classification of initialized ACM line bundles,
//! and the extension families of higher-rank ACM bundles.

pub mod acm;
pub mod combinatorics;
pub mod error;
pub mod geometry;
pub mod golden;
pub mod invariants;
pub mod lattice;
pub mod par;
pub mod picard;
pub mod text;
pub mod wild;

pub use error::{Error, Result};
pub use par::Strategy;
pub use picard::{DivisorClass, RuledCoords, SurfaceKind, SurfaceModel};
pub use text::{format_divisor, parse_divisor};
