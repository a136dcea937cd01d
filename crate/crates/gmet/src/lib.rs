//! Closed-form metric engine.
//!
//! `gmet` evaluates symmetric 4×4 metrics given by closed-form component
//! expressions: exact first and second derivatives through jet
//! arithmetic, curvature tensors and field-equation residuals with an
//! independent finite-difference oracle, signature and singular-set
//! analysis, horizon-candidate tracing, and a small construction toolkit
//! for type-I metric ansätze.
//!
//! The built-in catalog ships a flat baseline, a Schwarzschild baseline
//! and a two-chart family of time-periodic metrics; `.gmet` documents
//! describe further metrics in a line-oriented text format.

// index loops mirror the tensor formulas; iterator folds would obscure them
#![allow(clippy::needless_range_loop)]

pub mod analysis;
pub mod catalog;
pub mod chart;
pub mod constructor;
pub mod expr;
pub mod fd;
pub mod geometry;
pub mod jet;
pub mod linalg;
pub mod metric;
pub mod parse;
pub mod quad;
pub mod rng;
pub mod roots;

pub use chart::{Chart, Interval, Point4};
pub use expr::{EvalError, Expr, ParamMap};
pub use jet::Jet2;
pub use metric::{MetricKind, MetricSpec};
pub use parse::{parse_metric_document, ParseError};
