//! Exact-arithmetic curvature and classification for almost contact metric
//! Lie algebras.
//!
//! The crate works entirely over arbitrary-precision rationals: Lie algebras
//! are structure-constant tables, metrics are exact Gram matrices, and every
//! geometric statement (curvature values, classification predicates, central
//! extension identities) is decided by literal equality rather than a
//! tolerance. Dimensions stay small (at most six), so everything is dense.
//!
//! The main layers are:
//!
//! - [`scalar`] and [`linalg`]: exact rationals and small dense linear algebra;
//! - [`lie`]: structure constants, center, derived series, Killing form;
//! - [`forms`]: alternating forms, wedge, Chevalley-Eilenberg differential;
//! - [`riemann`]: Koszul connection, Riemann/Ricci curvature in a coordinate
//!   basis with the exact inverse metric;
//! - [`structures`]: almost contact metric and Kahler structures with their
//!   classification predicates;
//! - [`extension`]: central extensions of Kahler Lie algebras by a symplectic
//!   form, closed-form curvature of the extension, eta-Einstein fitting;
//! - [`catalog`]: named fixtures with exact expected values;
//! - [`fileio`] and [`cli`]: the JSON algebra-file format and the command-line
//!   verbs built on it.
//!
//! See the `examples/` directory for runnable walkthroughs of each capability.

pub mod scalar;

pub mod catalog;
pub mod cli;
pub mod extension;
pub mod fileio;
pub mod forms;
pub mod lie;
pub mod linalg;
pub mod riemann;
pub mod structures;

pub use scalar::Scalar;
