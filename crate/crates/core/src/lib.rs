//! Exact intersection theory on smooth quadric hypersurfaces Q^n and the
//! classification pipeline for rank-2 weak Fano bundles on them.
//!
//! Everything numeric is exact rational arithmetic except the single
//! transcendental bound, which is evaluated with certified rational
//! intervals.

pub mod bundle;
pub mod certified;
pub mod chow;
pub mod classify;
pub mod error;
pub mod filters;
pub mod quadratic;
pub mod rational;
pub mod report;
pub mod riemann_roch;
pub mod series;
pub mod verify;

pub use bundle::{s6_closed_form_q6, ChernData};
pub use chow::{middle_relations_check, ChowClass, QuadricContext};
pub use classify::{
    classify, classify_serial, Branch, ClassificationRecord, FormulaMode, Outcome, RunConfig,
};
pub use error::{Error, Result};
pub use filters::{FilterStatus, FilterVerdict};
pub use rational::Rat;
pub use report::{emit_report, ReportFormat};
pub use verify::{has_disagreement, verify_paper, CheckStatus, PaperCheck};
