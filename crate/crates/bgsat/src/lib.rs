//! Exact satellite/L-space calculus for Berge-Gabai patterns.
//!
//! A Berge-Gabai pattern is a braid closure in the solid torus, cut out by
//! a winding number `w`, a bridge width `b`, and a twist number `t`, that
//! admits a non-trivial solid-torus surgery. This crate computes, in exact
//! integer arithmetic:
//!
//! - pattern validity, braid words, and Seifert genus ([`pattern`],
//!   [`braid`]);
//! - Alexander polynomials of braid closures and satellites via the
//!   reduced Burau representation ([`alexander`], [`laurent`]);
//! - candidate solid-torus filling slopes, the satellite–companion surgery
//!   correspondence, and filling homology ([`surgery`]);
//! - Heegaard Floer surgery ranks, the L-space-knot criterion for
//!   satellites, and tau/4-ball-genus propagation ([`hf`]);
//! - knot descriptors whose large surgeries are L-spaces with prescribed
//!   JSJ piece counts ([`jsj`]).
//!
//! The `bgsat` binary exposes all of this behind a small CLI ([`cli`],
//! [`parse`]).
//!
//! ```
//! use bgsat::hf::KnotDescriptor;
//! use bgsat::pattern::BergeGabaiPattern;
//!
//! let pattern = BergeGabaiPattern::new(5, 2, 8)?;
//! let trefoil = KnotDescriptor::torus(2, 3)?;
//! let satellite = KnotDescriptor::satellite(pattern, trefoil);
//! assert_eq!(satellite.genus(), 20);
//! assert!(satellite.is_lspace_knot());
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod alexander;
pub mod braid;
pub mod cli;
pub mod hf;
pub mod jsj;
pub mod laurent;
pub mod parse;
pub mod pattern;
pub mod surgery;

pub use braid::BraidWord;
pub use hf::{HfKnotData, KnotDescriptor};
pub use jsj::JsjPlan;
pub use laurent::LaurentPoly;
pub use pattern::BergeGabaiPattern;
pub use surgery::Slope;

/// Runs every fenced Rust snippet in the guide as a doc-test so the book
/// stays in sync with the library.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }

    chapter!(intro, "../../../book/src/intro.md");
    chapter!(patterns, "../../../book/src/patterns.md");
    chapter!(alexander, "../../../book/src/alexander.md");
    chapter!(surgery, "../../../book/src/surgery.md");
    chapter!(lspace, "../../../book/src/lspace.md");
    chapter!(jsj, "../../../book/src/jsj.md");
    chapter!(cli, "../../../book/src/cli.md");
}
