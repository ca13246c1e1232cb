pub mod error;
pub mod kernel;
pub mod partitions;
pub mod polybasis;
pub mod schurgen;
pub mod symfun;
pub mod characters;
pub mod tauseries;
pub mod moments;
pub mod walks;
pub mod cli;
