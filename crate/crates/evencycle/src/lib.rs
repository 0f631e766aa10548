//! evencycle: build, certify and search graphs without short even cycles.
//!
//! The crate has three layers. [`graph`] holds the measurement
//! instruments: even-cycle certification, girth, bounded path enumeration
//! and non-returning walk counts, over a plain immutable [`graph::Graph`].
//! [`geometry`] produces the dense extremal candidates (polarity and
//! incidence graphs of projective planes, symplectic quadrangles and split
//! Cayley hexagons over [`gf`] fields), each construction re-certifying
//! its own claims. [`vine`], [`bounds`] and [`search`] turn the structure
//! theory into checkable artifacts: vine decompositions of short-path
//! unions, exact bound audits, and exact extremal numbers by pruned
//! search.
//!
//! A command-line front end lives in the companion `evencycle-cli` crate;
//! the `book/` directory of the repository walks through the concepts with
//! runnable snippets.

pub mod bounds;
pub mod generators;
pub mod geometry;
pub mod gf;
pub mod graph;
pub mod search;
pub mod vine;

pub use graph::Graph;
