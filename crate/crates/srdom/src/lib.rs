//! Signed Roman domination on graphs.
//!
//! A signed Roman dominating function labels every vertex with −1, 1, or 2
//! so that each closed neighborhood sums to at least 1 and every −1 vertex
//! has a neighbor labeled 2; gamma is the minimum total weight of such a
//! labeling. This crate provides:
//!
//! - [`graph`]: simple graphs, the join operator, and standard families
//!   (cycles, paths, wheels, fans, friendship graphs, joins of cycles);
//! - [`srdf`]: labelings, weights, and the two-condition verifier;
//! - [`solver`]: exact gamma by exhaustive enumeration or branch and bound,
//!   plus a streaming labeling enumerator;
//! - [`families`]: explicit optimal or near-optimal labelings for the
//!   supported families, each gated through the verifier, and closed-form
//!   gamma values where known;
//! - [`suite`]: batch checks binding the closed forms and constructions to
//!   solver and verifier evidence;
//! - [`graph6`] and [`records`]: graph6 interchange and line-oriented
//!   labeling/claim records.
//!
//! ```
//! use srdom::{solve_exact, verify, FamilySpec, SolveOptions};
//!
//! let wheel = FamilySpec::Wheel { n: 5 }.generate()?;
//! let result = solve_exact(&wheel, &SolveOptions::default())?;
//! assert_eq!(result.gamma, 1);
//!
//! let report = verify(&wheel, &result.witness)?;
//! assert!(report.valid);
//! assert_eq!(report.weight, 1);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod families;
pub mod graph;
pub mod graph6;
pub mod records;
pub mod solver;
pub mod srdf;
pub mod suite;

pub use graph::{FamilyError, FamilySpec, Graph, GraphError};
pub use solver::{
    enumerate_labelings, lower_bound_universal, solve_exact, SolveMethod, SolveOptions,
    SolveResult, SolverError,
};
pub use srdf::{closed_sum, verify, Label, Labeling, VerificationReport};
