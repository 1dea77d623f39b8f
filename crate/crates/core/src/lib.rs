//! Root posets, order ideals and root ideal arrangements over exact arithmetic.
//!
//! The crate builds finite crystallographic root systems from Cartan data,
//! enumerates the order ideals of their root posets and decides, for each
//! ideal `I`, whether the arrangement `A_I` is chain peelable,
//! supersolvable, line-closed and free of the two minimal bad ideals
//! (the `D4` star and the `F4` ideal of roots of height at most 4).
//!
//! All arithmetic is exact. The linear-algebra kernel in [`linalg`] is
//! generic over an integer scalar (see [`ExactScalar`]); the rest of the
//! crate instantiates it with [`Coord`] and [`Rational`].

pub mod bitset;
pub mod classify;
pub mod error;
pub mod ideals;
pub mod linalg;
pub mod matroid;
pub mod rootsystem;
pub mod scalar;
pub mod suites;
pub mod survey;

pub use bitset::RootSet;
pub use classify::{
    chain_peeling, classify_ideal, exponents, greedy_chain_peeling, is_supersolvable_generic,
    is_supersolvable_rootideal, BlockMeta, CertificateKind, ClassificationRecord,
    PartitionCertificate,
};
pub use error::{Error, Result};
pub use ideals::{BadIdealKind, BadIdealWitness, Ideal, SubsystemView};
pub use matroid::{Arrangement, Flat, Polynomial};
pub use rootsystem::{Family, RootPoset, RootSystem, SignedRoot, TypeLabel};
pub use scalar::ExactScalar;

/// Coordinate scalar used for roots in the simple-root basis.
pub type Coord = i64;

/// Exact rational over [`Coord`], used for the bilinear form.
pub type Rational = num_rational::Ratio<Coord>;

/// Integer polynomial used for characteristic polynomials.
pub type IntPolynomial = matroid::Polynomial<Coord>;
