//! Exact symbolic computation in truncated super Yangians.
//!
//! The algebra is presented by RTT generators t\[i,j;r\] over a 01-sequence
//! and truncated at order D in u^{-1}. Products are normal-ordered through
//! the defining relation, all coefficients stay exact, and the higher layers
//! build the generating matrix T(u), its block Gauss decompositions, quantum
//! determinants and Berezinians, and the standard maps between algebras.
//!
//! The core is generic over the coefficient scalar (anything field-like from
//! num-traits); the aliases below fix arbitrary-precision rationals, which is
//! what every identity check uses.

pub mod algebra;
pub mod berezinian;
pub mod error;
pub mod matrix;
pub mod morphism;
pub mod scalar;
pub mod series;
pub mod sign;

pub use algebra::{AlgebraContext, AlgebraElement, Generator, Monomial, Parity};
pub use error::{Error, Result};
pub use matrix::{Composition, GaussFactors, SeriesMatrix};
pub use morphism::{Morphism, MorphismKind};
pub use scalar::Scalar;
pub use series::USeries;
pub use sign::SignSequence;

/// Default exact coefficient type.
pub type Coeff = num_rational::BigRational;

/// Context over exact rationals.
pub type Context = AlgebraContext<Coeff>;

/// Algebra element over exact rationals.
pub type Element = AlgebraElement<Coeff>;

/// Truncated series over exact rationals.
pub type Series = USeries<Coeff>;

/// Series matrix over exact rationals.
pub type Matrix = SeriesMatrix<Coeff>;

/// Gauss decomposition data over exact rationals.
pub type Gauss = GaussFactors<Coeff>;

/// Morphism over exact rationals.
pub type Hom = Morphism<Coeff>;
