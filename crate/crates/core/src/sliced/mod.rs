//! Morse-sliced diagrams and the R-matrix / Clebsch-Gordan state-sum.

pub mod builders;
mod diagram;
mod eval;
mod format;
mod validate;

pub use diagram::{Boundary, Edge, Slice, SlicedDiagram, Tile, TileKind, UnionFind};
pub use eval::{evaluate, evaluate_entries, evaluate_frac, framing_factor, state_tuples, BoundaryStates, EvalError};
pub use format::{from_json, load, save, to_json, FormatError};
pub(crate) use format::strip_position;
pub use validate::{validate, Violation};
