//! Quasi depth and Stanley depth of quotients of monomial ideals.
//!
//! A squarefree quotient `J/I` is encoded by its characteristic poset, the
//! subsets `C ⊆ [n]` with `x_C ∈ J \ I`. Counting members by size gives the
//! α-vector, from which the β-tables and the quasi depth follow in exact
//! integer arithmetic. General monomial ideals are handled by polarization.

pub mod beta;
pub mod binomial;
pub mod error;
pub mod families;
pub mod ideal;
pub mod parse;
pub mod polarize;
pub mod poset;
pub mod qdepth;
pub mod random;
pub mod sdepth;
pub mod selftest;

pub use beta::{alpha_from_beta, beta_closed, beta_table, BetaTable};
pub use error::{Error, Result};
pub use ideal::{Monomial, MonomialIdeal};
pub use parse::{parse_ideal, parse_monomial};
pub use polarize::{polarize, polarize_pair, PolarizationResult, PolarizedPair};
pub use poset::{
    alpha_by_inclusion_exclusion, alpha_ci, alpha_vector, build_poset, AlphaVector, Interval, Module,
    SubsetPoset,
};
pub use qdepth::{
    check_extension_shift, check_regular_sandwich, lemma_kkk_table, qdepth, qdepth_from_alpha,
    qdepth_lower_bounds, qdepth_module, qdepth_poset, qdepth_squarefree, QDepthReport,
};
pub use sdepth::{sdepth, sdepth_poset, IntervalPartition, SdepthReport};
