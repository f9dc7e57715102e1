//! File formats, instance generation, sweeps and the command-line front end
//! for `rainbow-core`.

pub mod cli;
pub mod format;
pub mod random;
pub mod sweep;
