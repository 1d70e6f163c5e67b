//! Edge ideals of finite simple graphs: matching-type invariants, co-chordal
//! covers, even-connection graphs of colon ideals of powers, and an exact
//! Betti-number oracle for Castelnuovo–Mumford regularity.

pub mod betti;
pub mod caps;
pub mod chordal;
pub mod enumerate;
pub mod error;
pub mod even_connection;
pub mod formulas;
pub mod graph;
pub mod invariants;
pub mod monomial;

pub use caps::Caps;
pub use error::{Error, Result};
pub use graph::{parse_graph, Bipartition, Family, Graph};
