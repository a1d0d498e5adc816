//! Library side of the `grundy` command: solving, instance generation and
//! benchmarking on top of `grundy-core`.

pub mod bench;
pub mod generate;
pub mod report;
pub mod solve;
