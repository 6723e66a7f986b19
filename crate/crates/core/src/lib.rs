//! Deciding realizability of Gauss diagrams.
//!
//! A closed plane curve with transverse double points induces a double
//! occurrence word (its Gauss code) and hence a chord diagram; not every
//! chord diagram arises this way. This crate implements the classical and
//! recent criteria that decide realizability from the interlacement graph
//! alone, keeps them cross-checked against each other, and enumerates
//! equivalence classes of diagrams to count how many pass each criterion.
//!
//! Modules:
//! - [`codec`]: Gauss codes, chord diagrams, dihedral canonical forms, class
//!   enumeration.
//! - [`interlace`]: interlacement graphs and the common-neighbor parity
//!   weights.
//! - [`gf2`]: bit-packed GF(2) matrices and linear systems.
//! - [`criteria`]: the realizability checks and their witnesses.
//! - [`tablegen`]: per-size class counts and the parity-vs-exact gap.
//! - [`render`]: DOT and TikZ output.

pub mod codec;
pub mod criteria;
pub mod gf2;
pub mod interlace;
pub mod render;
pub mod tablegen;

pub use codec::{ChordDiagram, CodecError, EquivClassKey, GaussCode};
pub use criteria::{
    check_all, CheckAll, CriteriaDisagree, Criterion, CriterionReport, Witness,
};
pub use gf2::{Equation, Gf2Matrix, Gf2Solution, Gf2System};
pub use interlace::{InterlacementGraph, WeightedInterlacementGraph};
pub use tablegen::{count_table, CountRow, TableOptions};
