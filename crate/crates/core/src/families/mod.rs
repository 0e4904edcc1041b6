//! Closed forms for squarefree Veronese ideals and complete intersections.

pub mod ci;
pub mod econj;
pub mod veronese;

pub use ci::{ci_ideal_qdepth, ci_qdepth, ci_qdepth_check, ci_symmetry, CISymmetryReport, DReading, SymmetryCheck};
pub use econj::{
    alpha_ratio, classify_cell, conjecture_scan, e_falling_factorial, e_rec_n, e_rec_q, e_telescoped, e_value,
    gamma, ConjectureScan, EConjectureCell, ProofStatus,
};
pub use veronese::{alpha_veronese, qdepth_veronese, veronese_ideal, VeroneseQDepth, VeroneseSpec};
