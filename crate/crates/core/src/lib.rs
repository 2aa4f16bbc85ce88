//! Exact computations in free algebras over tree bases.
//!
//! The crate covers the free pre-Lie and NAP algebras (labelled rooted
//! trees), the free magmatic and commutative-magmatic algebras (binary
//! terms), free λ-dendriform algebras (planar binary trees) and the free
//! associative algebra (words). On top of these it builds the
//! symmetrization morphisms out of `ComMag`, exact rank certificates for
//! their injectivity, the red/black decomposition of rooted trees, and the
//! power-series identities relating the dimensions of these operads.

pub mod error;
pub mod exact;
pub mod fixtures;
pub mod maps;
pub mod products;
pub mod redblack;
pub mod seriescalc;
pub mod treebases;

pub use error::{Error, Result};
pub use exact::{LambdaPoly, LinComb, Rational, RationalMatrix};
pub use treebases::{BasisKind, BinaryTerm, Element, Label, PlanarBinaryTree, RootedTree, Word};
