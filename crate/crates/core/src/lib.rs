//! Exact weighted lattice-path counting with wall and filter restrictions.
//!
//! Paths move up one row per step, one column left or right. Walls make a
//! column one-way; filters make it one-way *and* charge weight 2 for certain
//! steps next to it. [`lattice`] fixes those rules, [`oracle`] counts by brute
//! force, [`closed_form`] evaluates the reflection-principle formulas, and
//! [`verify`] sweeps parameter grids comparing the two.
//!
//! ```
//! use filterpaths::closed_form::multiplicity;
//! use filterpaths::lattice::Arrangement;
//! use filterpaths::oracle::{dp_count, PathQuery};
//!
//! let arrangement = Arrangement::canonical(2, 7)?;
//! let brute = dp_count(&PathQuery::from_origin(3, 7, arrangement))?;
//! assert_eq!(brute, multiplicity(2, 3, 7)?);
//! assert_eq!(brute, 24.into());
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod closed_form;
pub mod lattice;
pub mod oracle;
pub mod verify;

pub use num_bigint::BigInt as ExactInt;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/lattice.md")]
    mod lattice {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/one-restriction.md")]
    mod one_restriction {}
    #[doc = include_str!("../../../book/src/strips.md")]
    mod strips {}
    #[doc = include_str!("../../../book/src/multiplicity.md")]
    mod multiplicity {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
