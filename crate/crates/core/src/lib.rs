//! Square sizes of algebraic integers.
//!
//! For `alpha` with real conjugates `alpha_1..alpha_s` and complex pairs
//! represented by `beta_1..beta_t`, `R = sum alpha_i^2`, `C = sum |beta_j|^2`
//! and `m = (R + C) / (s + t)`. The crate computes these exactly where it can
//! and with certified floating point elsewhere:
//!
//! * [`intpoly`]: integer polynomials, discriminants, irreducibility, families.
//! * [`roots`]: conjugates, signatures and sector counts.
//! * [`measures`]: size profiles and their lower bounds.
//! * [`lattice`]: the canonical-embedding lattice and its minimum.
//! * [`search`]: every polynomial of a given degree with `m < 1`.
//! * [`verify`]: numeric checks producing machine-readable records.
//!
//! ```
//! use nfsize::measures::profile_of;
//!
//! let p = profile_of(&"x^6 + x^2 - 1".parse()?)?;
//! assert!((p.m - 0.946467).abs() < 1e-6);
//! # Ok::<(), nfsize::Error>(())
//! ```

pub mod error;
pub mod intpoly;
pub mod lattice;
pub mod measures;
pub mod roots;
pub mod search;
pub mod verify;

pub use error::{Error, Result};

// The book chapters run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/roots.md")]
    mod roots {}
    #[doc = include_str!("../../../book/src/sizes.md")]
    mod sizes {}
    #[doc = include_str!("../../../book/src/lattices.md")]
    mod lattices {}
    #[doc = include_str!("../../../book/src/search.md")]
    mod search {}
    #[doc = include_str!("../../../book/src/verify.md")]
    mod verify {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
