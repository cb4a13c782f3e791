//! Exact computation and identity verification for Changhee-type number
//! families: Stirling/Lah/Comtet triangles, Euler and Changhee numbers of
//! higher order, and their multiparameter generalizations.

pub mod cases;
pub mod error;
pub mod euler_changhee;
pub mod multiparam;
pub mod multipoly;
pub mod oracle;
pub mod poly;
pub mod rational;
pub mod series;
pub mod triangles;
pub mod verify;

pub use error::{Error, Result};
pub use multipoly::MultiPoly;
pub use poly::Polynomial;
pub use rational::Rational;
pub use series::TruncatedSeries;
pub use triangles::ParameterSpec;
