//! Input files, the command pipeline and reports.

mod input;
mod pipeline;
mod report;

pub use input::{
    build_group, build_pair, build_ring, builtin_ring, find_element, line_column, load_any, load_config, load_group, load_measure,
    load_pair, load_ring, DeformSide, GroupRef, GroupSpec, Loaded, LoadedMeasure, LoadedPair, PairSpec, RingSpec,
};
pub use pipeline::{
    builtin_pair, describe_group, exit_code_for, load_group_arg, load_pair_arg, run_pipeline, Command, Shadow,
    BUILTIN_PAIRS,
};
pub use report::{sci, Datum, Entry, Report, Section, Status};

#[cfg(test)]
mod tests;
