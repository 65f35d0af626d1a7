//! Exact umbral calculus over the rationals.
//!
//! The crate is organised bottom-up:
//!
//! * [`rational`] and [`series`]: canonical big rationals and truncated formal
//!   power series in `t` (ordinary coefficients).
//! * [`poly`] and [`triangle`]: polynomials in `x` and lower-triangular
//!   coefficient tables `s_{n,k}` of polynomial sequences.
//! * [`special`]: Stirling, Lah, Abel, Mittag-Leffler and higher-order
//!   Bernoulli/Euler generators.
//! * [`sheffer`]: Sheffer pairs, the functional pairing, operator action,
//!   the transfer formula, umbral composition and umbral powers.
//! * [`identity`]: both sides of the power identities for the four classical
//!   families, evaluated independently and compared exactly.

pub mod error;
pub mod identity;
pub mod poly;
pub mod rational;
pub mod series;
pub mod sheffer;
pub mod special;
pub mod triangle;

pub use error::{Error, Result};
pub use poly::Polynomial;
pub use rational::Rational;
pub use series::{Order, Series, SeriesClass};
pub use sheffer::{SequenceFamily, ShefferPair};
pub use triangle::CoeffTriangle;
