//! Measure-balanced separators for intersection graphs of unit-height
//! rectangles and unit-distance graphs of points, with exact and
//! approximation solvers built on them.
//!
//! The graph `G` is separated using two supergraphs: an ordered clique
//! cover whose parts are cliques of a graph `G1` and in which no edge of `G`
//! spans more than `l` parts, and a chordal graph `G2` containing `G`. The
//! measure of a vertex set is the number of parts of a fixed clique
//! partition of `G` that it meets.

pub mod chordal;
pub mod error;
pub mod geometry;
pub mod graphcore;
pub mod oracles;
pub mod separator;
pub mod solvers;

pub use error::{GeometryError, GraphError, OracleError};
pub use geometry::{Disc, GridFrame, PointSite, Rect, SCALE};
pub use graphcore::{Graph, OrderedCliqueCover, RestrictionMeasure, VertexSet};
pub use separator::{Certificate, CoverUnit, Route, SeparatorError, SeparatorResult};
pub use solvers::{CoverSolution, MisSolution, PierceSolution, SolveConfig, SolveError};
