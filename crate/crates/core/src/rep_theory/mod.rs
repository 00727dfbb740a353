//! Corepresentation theory of bicrossed products: the orbit and function
//! corepresentations, the catalog of irreducibles, audits of the fusion
//! statements, and the intrinsic group and spectrum.

mod audit;
mod branching;
mod catalog;
mod corep;
mod invariants;

pub use audit::{
    audit_candidates, audit_flip, audit_fusion_formula, format_complex, format_matrix, fusion_consistency,
    fusion_formula, normalize_phase, AuditEntry, AuditStatus, ConsistencyCheck,
};
pub use branching::{
    branching_consistency, branching_matrix, branching_sets, kazhdan_combine, push_corep, BranchingCheck,
    KazhdanPair,
};
pub use catalog::{coefficient_rank, decompose, enumerate_irreps, Candidate, IrrepCatalog};
pub use corep::{
    check_corep, corep_defect, function_corep, intertwiners, mor_dim_haar, mor_dim_solver, orbit_corep, tensor,
    Corep, SOLVER_TOL,
};
pub use invariants::{
    crossed_intrinsic_model, crossed_spectrum_model, intrinsic_group, intrinsic_model, invariant_groups, spectrum,
    spectrum_model, IntrinsicGroup, InvariantGroups, InvariantReport, Spectrum, SpectrumPoint,
};

#[cfg(test)]
mod tests;
