//! Asymmetric vertex colourings of connected graphs with bounded maximal
//! degree.
//!
//! The construction grows a colouring sphere by sphere around a root,
//! breaking the symmetry of each new sphere with a small set of recoloured
//! neighbourhood classes and a final split into short chunks. Every claim
//! it relies on is checkable here: [`oracle`] holds exhaustive ground-truth
//! searches, and [`colouring::audit`] re-verifies a finished run step by
//! step.
//!
//! ```
//! use asym_core::graph::{FamilySpec, Graph};
//! use asym_core::colouring::{run, RunOptions};
//! use asym_core::oracle::is_asymmetric;
//!
//! let tree = Graph::family_graph(FamilySpec::Tree { degree: 3, radius: 2 }).unwrap();
//! let outcome = run(&tree, 0, None, &RunOptions::default()).unwrap();
//! assert!(is_asymmetric(&tree, outcome.colouring.colours()).unwrap());
//! ```

pub mod colouring;
pub mod corpus;
pub mod graph;
pub mod oracle;
pub mod partition;
pub mod symmetry;

pub use partition::Partition;
