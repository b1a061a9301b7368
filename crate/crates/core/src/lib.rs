//! Exact multidegrees of `M_{0,n}` embedded in `P^1 x P^2 x ... x P^{n-3}`.
//!
//! Three engines compute the same numbers: the asymmetric multinomial
//! recursion ([`coefficients`]), enumeration of column-restricted parking
//! functions ([`parking`]) and the generating functions ([`genfun`]).
//! [`multidegree`] assembles the tables and [`verify`] compares the engines.

pub mod cli;
pub mod coefficients;
pub mod compositions;
pub mod error;
pub mod genfun;
pub mod multidegree;
pub mod parking;
pub mod verify;

pub use coefficients::{asym_multinomial, odd_double_factorial, AsymMultinomial, BigCount};
pub use compositions::Composition;
pub use error::{Error, Result};
pub use parking::{ParkingFunction, PointedParkingFunction};
