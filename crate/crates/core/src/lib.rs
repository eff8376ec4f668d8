//! Solvers for the Colored Points TSP.
//!
//! Points in the plane carry one of `k` colors. The goal is the shortest
//! closed tour that visits exactly one point of every color. The crate
//! provides exact solvers, an onion-peeling approximation built on the
//! minimum color-spanning circle, a seeded instance generator, JSON/CSV
//! file formats, a benchmark harness and SVG rendering.
//!
//! ```
//! use colored_tsp::{generate, solvers::{approx_onion, exact_dp, Limits}};
//!
//! let instance = generate(30, 5, 7, 100.0, 100.0).unwrap();
//! let opt = exact_dp(&instance, &Limits::default()).unwrap();
//! let apx = approx_onion(&instance).unwrap();
//! assert!(apx.perimeter() >= opt.perimeter() - 1e-9);
//! ```

pub mod bench;
pub mod cli;
pub mod color_spanning;
pub mod error;
pub mod geometry;
pub mod instance;
pub mod io;
pub mod render;
pub mod solvers;

pub use color_spanning::{build_msp, min_color_spanning_circle, Circle, ColorSet};
pub use error::{Error, Result};
pub use geometry::{Layer, Point2};
pub use instance::{generate, ColoredPoint, Instance, InstanceMeta};
pub use solvers::{Algorithm, Limits, SolveReport, Tour};
