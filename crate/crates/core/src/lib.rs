//! Exact computations with nonsymmetric operads and generalized bialgebras.
//!
//! Free models ([`models`]) carry products and coproducts on explicit bases.
//! [`relations`] checks compatibility relations between them, [`idempotents`]
//! and [`structure`] compute primitives and test the structure theorems, and
//! [`series`] and [`homology`] cover the counting side. Everything is exact
//! over the rationals. The guide in `book/` walks through each part.

pub mod error;
pub mod key;
pub mod lincomb;
pub mod linalg;
pub mod rational;
pub mod tree;
pub mod models;
pub mod relations;
pub mod graded;
pub mod scheme;
pub mod presets;
pub mod idempotents;
pub mod structure;
pub mod series;
pub mod homology;
pub mod literal;
pub mod suite;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/trees.md")]
    mod trees {}
    #[doc = include_str!("../../../book/src/models.md")]
    mod models {}
    #[doc = include_str!("../../../book/src/relations.md")]
    mod relations {}
    #[doc = include_str!("../../../book/src/idempotents.md")]
    mod idempotents {}
    #[doc = include_str!("../../../book/src/structure.md")]
    mod structure {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/homology.md")]
    mod homology {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
