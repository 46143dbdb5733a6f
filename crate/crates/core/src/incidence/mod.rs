//! Incidence structures, the strongly-regular-design axioms, point and block
//! graphs, and the built-in doily and grid generators.

mod generators;
mod graph;
mod identities;
mod io;
mod srd;
mod structure;

use thiserror::Error;

pub use generators::{gen_doily, gen_grid};
pub use graph::{block_graph, point_graph, srg_params_of, Graph, SrgParams};
pub use identities::{verify_matrix_identities, MatrixIdentityReport};
pub use io::{parse_incidence, write_incidence};
pub use srd::{check_srd, SrdParams, SrdViolation, Witness};
pub use structure::IncidenceStructure;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IncidenceError {
    #[error("incidence structures need at least one point and one block")]
    Empty,
    #[error("expected {expected} matrix entries, found {found}")]
    Shape { expected: usize, found: usize },
    #[error("block {block} names point {point}, but there are only {n1} points")]
    PointOutOfRange { block: usize, point: usize, n1: usize },
    #[error("block {block} lists point {point} twice")]
    DuplicatePoint { block: usize, point: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("grid size must be at least 2, got {0}")]
    GridTooSmall(usize),
    #[error("graph is not simple: {0}")]
    NotSimple(String),
    #[error("graph is not strongly regular: {0}")]
    NotStronglyRegular(String),
}
