//! Finite-scale shadows of approximation properties: measures on `G` under the
//! `Γ`-action, total variation, Fourier transforms of measures, the
//! relative-(T) obstruction over finite groups, and Chebyshev states.

mod chebyshev;
mod measure;
mod obstruction;

pub use chebyshev::{chebyshev_state, chebyshev_values, ChebyshevState};
pub use measure::{
    block_norms, convolution, measure_fourier, parse_rational, pushforward, smooth, tv_distance, FiniteMeasure,
};
pub use obstruction::{rel_t_obstruction, ObstructionReport};

#[cfg(test)]
mod tests;
