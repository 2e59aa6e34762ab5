//! Exact symbolic engine for singular 2-dimensional cobordisms.
//!
//! Morphisms are layered words over the generators of the singular
//! cobordism category. The crate computes their topological invariants,
//! builds normal forms, decides equivalence, and evaluates them as exact
//! matrices under twin Frobenius algebras over `Z[i][a,h]`.

pub mod algebra;
pub mod matrix;
pub mod report;
pub mod ring;
pub mod diagram;
pub mod dsl;
pub mod perm;
pub mod topology;
pub mod eval;
pub mod normal_form;
pub mod fuzz;
