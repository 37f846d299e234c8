//! Decides when ordinary, Schur-Q, and Schur-P Littlewood-Richardson
//! numbers are non-zero.
//!
//! Four Horn-type inequality systems (classical row-crossing, symmetric
//! row-and-column crossing, and the staircase inner/outer corner systems)
//! are implemented next to brute-force coefficient oracles that expand
//! explicit polynomial models of Schur, Schur-P, and Schur-Q functions.
//! Exhaustive sweeps verify that each inequality system accepts exactly the
//! triples whose symmetric Littlewood-Richardson number is non-zero.

pub mod error;
pub mod partition;
pub mod statistics;
pub mod oracle;
pub mod feasibility;
pub mod sweep;
pub mod cli;

pub use error::Error;
pub use partition::{
    binomial, enumerate_partitions, enumerate_strict, Partition, Rectangle, Staircase,
    StrictPartition,
};
pub use statistics::{
    inner_corner_stat, outer_corner_stat, rows_cols_stat, rows_stat, IndexSet,
};
pub use oracle::{Basis, MonomialMap, Oracle};
pub use feasibility::{
    CheckOptions, FeasibilityVerdict, FeasibleTripleTable, HornEngine, InequalityDescriptor,
    RectSystem, StairSystem, TableMethod, Witness, WitnessKind,
};
pub use sweep::{
    fixture_check, sweep_rectangle, sweep_staircase, Disagreement, SweepConfig, SweepReport,
};
