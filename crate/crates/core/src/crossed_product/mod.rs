//! Crossed products by actions on discrete duals: crossed fusion rings, length
//! functions, the Fourier transform with its Sobolev-0 norm, and the crossed
//! products `C(G) ⋊ Γ` of finite groups.

mod fourier;
mod instance;
mod length;
mod ring;

pub use fourier::{fourier_transform, haar_l2, inverse_fourier, sobolev0_norm, DualElement, FourierContext};
pub use instance::{
    check_lemma_fourier, conj_action_builder, crossed_invariant_groups, eval_poly, operator_norm, rd_inequality_sample,
    realize_irreps, CrossedInstance, CrossedInvariantReport, FourierLemmaReport, Realization, RdReport, RdSample,
};
pub use length::{invariantize, length_l0, word_length, LengthFunction};
pub use ring::{
    chebyshev_dims, chebyshev_recursion_holds, crossed_ring, dual_group_ring, free_orthogonal, group_ring,
    irrep_action, ring_of_table, CrossedFusionRing, FusionRing, RingAction,
};

#[cfg(test)]
mod tests;
