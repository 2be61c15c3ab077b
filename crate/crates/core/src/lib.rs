//! Exact-arithmetic formal power series engine.
//!
//! The crate is organized as:
//!
//! - [`coeffring`]: pluggable exact coefficient rings (integers, rationals,
//!   residues, Gaussian rationals, an auxiliary Laurent symbol)
//! - [`fps`]: univariate truncated power series and their toolkit
//! - [`laurent`]: formal Laurent series, residues and Lagrange-Buermann
//!   inversion
//! - [`qseries`]: Gaussian coefficients, theta sums, infinite products and
//!   the identity registry
//! - [`combinat`]: combinatorial sequences backed by the series engine, with
//!   independent brute-force oracles in the tests
//! - [`mps`]: multivariate truncated series, symmetric functions, series
//!   matrices and the inversion theorems
//! - [`wdiv`]: Weierstrass division/preparation, Hensel lifting and Puiseux
//!   series arithmetic
//!
//! All values are immutable and all operations are pure, so everything can
//! be shared freely between threads.

pub mod coeffring;
pub mod combinat;
pub mod error;
pub mod fps;
pub mod laurent;
pub mod mps;
pub mod qseries;
pub mod wdiv;

pub use coeffring::{
    AlphaPoly, AlphaRing, Gaussian, GaussianRing, IntegerRing, ModRing, RationalRing, Ring,
};
pub use error::{Error, Result};
pub use fps::{Series, Valuation};
pub use laurent::Laurent;
pub use mps::MSeries;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
