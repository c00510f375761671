//! Exact truncated q-series over a multivariate rational coefficient ring.

pub mod constants;
pub mod qseries;
pub mod ring;

pub use constants::{b_poly, catalan_c, central_factorial};
pub use qseries::{
    euler, jacobi_sum, pochhammer_inf, pochhammer_inf_inverse, Divergence, QSeries, QTerm,
};
pub use ring::{fmt_rational, int, rat, Monomial, Rational, RingElement, DEFAULT_Z_CAP};
