//! A workbench for the game of Cops and Robber on small graphs.
//!
//! The crate is organised around five pieces:
//!
//! - [`graph`]: immutable bit-mask graphs with graph6 I/O and the
//!   neighborhood / distance / component primitives everything else uses.
//! - [`pattern`]: named small graphs (paths, cycles, claw, paw, the house,
//!   linear forests, the hooked-path structures) and an exhaustive induced
//!   subgraph matcher.
//! - [`game`]: exact solution of the k-cop pursuit game by retrograde
//!   analysis, cop numbers, capture times, optimal policies, and the
//!   corner-elimination (dismantlability) oracle for one-cop graphs.
//! - [`strategy`]: executable cop strategies extracted from constructive
//!   proofs, plus a match runner that plays them against adversarial
//!   robbers.
//! - [`harness`]: corpus ingestion and generation, bound specifications,
//!   exhaustive verification against the exact solver, caching, and
//!   reports.

pub mod game;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod pattern;
pub mod strategy;

pub use game::{cop_number, is_dismantlable, solve, Configuration, Side, SolveTable};
pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use graph6::{emit_graph6, parse_graph6};
pub use pattern::{contains_induced, has_induced_path, is_family_free, Pattern, PatternKind, Witness};
pub use strategy::{run_match, MatchOutcome, MatchResult, RobberPolicy, Strategy};
