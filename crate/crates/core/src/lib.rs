//! q-Cartan matrices, q-reflections and q-Coxeter matrices of finite
//! homogeneous bound quivers, computed in exact arithmetic.
//!
//! The crate is split into:
//!
//! * [`polyring`]: rationals, polynomials in `q` and polynomial matrices;
//! * [`quiverdsl`]: the bound-quiver data model with its text and JSON formats;
//! * [`algebra`]: graded dimensions of `kQ/<I>` and the q-Cartan matrix;
//! * [`coxeter`]: reflections, forms, Coxeter matrices and the identity checks;
//! * [`cli`]: the `qcox` command-line front end.

pub mod polyring;
pub mod quiverdsl;
pub mod algebra;
pub mod coxeter;
pub mod cli;
