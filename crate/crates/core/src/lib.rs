//! Complementary edge ideals `I_c(G)` and complementary cover ideals `J_c(G)`
//! of finite simple graphs: constructions, exact multigraded Betti numbers,
//! and executable checks of their structure theory.

pub mod error;
pub mod graph;
pub mod graph_ideals;
pub mod monomial;
pub mod resolution;
pub mod structure;
pub mod sweep;

pub use error::{Error, Guard, Result};
pub use graph::{enumerate_graphs, Graph, VertexOrder};
pub use monomial::{IdealJson, Monomial, MonomialIdeal, Polarization, PrimeSupport};
pub use resolution::{BettiTable, Field};
