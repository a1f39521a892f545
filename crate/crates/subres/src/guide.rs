//! The long-form guide, one module per chapter of `book/`.
//!
//! Each chapter's markdown is included as the module's documentation, which
//! makes every fenced Rust block in the book a doc-test: `cargo test --doc`
//! compiles and runs them all, so the guide cannot drift from the code.

#[doc = include_str!("../../../book/src/overview.md")]
pub mod overview {}

#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}

#[doc = include_str!("../../../book/src/remainder-sequences.md")]
pub mod remainder_sequences {}

#[doc = include_str!("../../../book/src/matrices.md")]
pub mod matrices {}

#[doc = include_str!("../../../book/src/classical-subresultants.md")]
pub mod classical_subresultants {}

#[doc = include_str!("../../../book/src/recursive-family.md")]
pub mod recursive_family {}

#[doc = include_str!("../../../book/src/nested-family.md")]
pub mod nested_family {}

#[doc = include_str!("../../../book/src/reduced-family.md")]
pub mod reduced_family {}

#[doc = include_str!("../../../book/src/square-free.md")]
pub mod square_free {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
