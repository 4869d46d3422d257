//! IO, file formats, audit suites, and the command line for the signed-graph
//! coloring-game toolkit. The pure algorithms live in `sgcg-core`; this crate
//! adds everything that needs an operating system.

pub mod audit;
pub mod clock;
pub mod formats;
pub mod report;
