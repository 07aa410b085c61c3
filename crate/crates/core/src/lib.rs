//! Exact symbolic computation of Kostka-Foulkes polynomials K_{lm}(t) and
//! Hall-Littlewood (Macdonald spherical) functions for root systems of
//! types A, B, C, D, G2 and for GL(n), by several independent routes that
//! are cross-checked against each other:
//!
//! - triangular base change between Schur and Hall-Littlewood expansions,
//! - the alternating Weyl-group sum over a q-analogue of the Kostant
//!   partition function,
//! - the symmetric-function inner product with its t-deformed kernel,
//! - Kazhdan-Lusztig polynomials for the (extended) affine Weyl group,
//! - the charge statistic on column-strict tableaux (type A).
//!
//! All arithmetic is exact: arbitrary-precision integers, Laurent
//! polynomials, reduced rational functions, and truncated power series with
//! tracked precision. No floating point anywhere.

pub mod affine_weyl;
pub mod cli;
pub mod error;
pub mod hecke;
pub mod kostka;
pub mod poly;
pub mod polyring;
pub mod root_data;
pub mod symfunc;
pub mod tableaux;

pub use error::{Error, Result};
pub use poly::{RatQ, TSeries, ZPoly};
pub use root_data::{CartanType, RootSystem, Weight, WeylElement};
