//! Exact computation of recursive polynomial remainder sequences and the
//! three subresultant families attached to them: the classical one, the
//! recursive one built from block matrices, and the nested/reduced pair that
//! trades nested determinants for bordered determinants and linear solves.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere and every identity the library verifies is checked
//! with exact equality.

pub mod error;
pub mod guide;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod prs;
pub mod rat;
pub mod report;
pub mod sqfree;
pub mod subresultant;
pub mod verify;

pub use error::Error;
pub use matrix::Mat;
pub use parse::parse_poly;
pub use poly::Poly;
pub use prs::{recursive_prs, DivisionRule, PrsStage, RecursivePrs};
pub use rat::Rat;

/// Convenience alias used by every fallible operation in the crate.
pub type Result<T> = std::result::Result<T, Error>;
