//! Exact-arithmetic toolkit for resistance-distance invariants on cactus
//! graphs: rationals over big integers, graph plumbing (edge lists, graph6,
//! block structure, canonical forms), effective resistances via determinant
//! ratios, the derived invariants (Wiener, degree distance, Kirchhoff,
//! degree resistance distance), the named extremal families with their
//! closed forms, and exhaustive generation of Cact(n, t).

pub mod blocks;
pub mod canon;
pub mod enumeration;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod matrix;
pub mod rational;
pub mod resistance;

pub use blocks::{
    block_decomposition, cactus_check, BlockDecomposition, CactusParams, StructureError,
};
pub use canon::{are_isomorphic, canonical_form, CanonError, CanonicalForm};
pub use enumeration::{brute_force_cacti_oracle, enumerate_cacti, CactusCorpus, EnumerationError};
pub use families::{
    build_family, closed_forms_cycle, closed_forms_cycle_pendant, corollary_closed_forms,
    g0_closed_form, lemma7_transform, sigma_transform, EndCycle, FamilyError, FamilyId,
};
pub use graph::{Graph, GraphError};
pub use graph6::{emit_graph6, parse_graph6, Graph6Error};
pub use invariants::{invariant_report, InvariantError, InvariantReport, PerVertexReport};
pub use matrix::{MatrixError, RationalMatrix};
pub use rational::{ArithError, Rational};
pub use resistance::{
    effective_resistance, resistance_matrix, spanning_tree_count, ResistanceError, ResistanceMatrix,
};
