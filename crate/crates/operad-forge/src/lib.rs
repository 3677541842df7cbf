//! Free bialgebras over operads with confluence laws, rigidity checks and idempotents.

pub mod combinatorics;
pub mod linear;
pub mod matrix;
pub mod operads;
pub mod free_bialgebra;
pub mod laws;
pub mod idempotents;
pub mod solomon_tits;
pub mod report;
pub mod cli;
