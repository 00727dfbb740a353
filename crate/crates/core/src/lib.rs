//! Exact computations for compact quantum groups built from finite matched pairs
//! of groups: bicrossed-product Kac algebras, their corepresentations, fusion
//! data, invariant groups, and the finite shadows of approximation properties.

pub mod approx_props;
pub mod bicrossed;
pub mod config;
pub mod crossed_product;
pub mod error;
pub mod groups;
pub mod io;
pub mod linalg;
pub mod matched_pair;
pub mod rep_theory;
pub mod standard;

pub use error::{Error, Result};
