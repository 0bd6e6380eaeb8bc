//! Exact-rational laboratory for volume distortion, filling volumes, and
//! isoperimetric duality on group complexes.
//!
//! Everything on a verdict path is computed over arbitrary-precision
//! rationals; floating point appears only as a guide for lattice rounding and
//! in cross-checks. The crate is organized around six subsystems:
//!
//! * [`matrix`], [`poly`], [`sturm`], [`circle`], [`lattice`] — exact linear
//!   algebra, polynomial arithmetic, Sturm root counting, and the
//!   unit-circle root test.
//! * [`monodromy`] — mapping-torus spaces with a single monodromy matrix:
//!   expression evaluation, ellipticity, minimal-volume search, logarithmic
//!   decompositions, and shift bounds.
//! * [`lp`] — an exact-rational simplex solver with certificates, and the
//!   isoperimetric duality dichotomy on finite balls.
//! * [`chains`] — equivariant cellular chain complexes over groups with
//!   word-problem oracles: ball extraction, filling volumes, twisted
//!   pairings.
//! * [`diamond`] — the diamond groups, their classifying complexes, and the
//!   hard-to-fill chain families.
//! * [`qz`] — finitely presented modules over the Laurent ring in one
//!   variable: Smith normal form, Ext, splitting tests, lifting
//!   homomorphisms, and distortion certificate chains.

pub mod chains;
pub mod circle;
pub mod diamond;
pub mod floatal;
pub mod lattice;
pub mod lp;
pub mod matrix;
pub mod monodromy;
pub mod poly;
pub mod qz;
pub mod scalar;
pub mod sturm;
pub mod textfmt;

/// Arbitrary-precision rational scalar: the field every verdict is computed in.
///
/// `BigRational` keeps the denominator positive and the fraction reduced
/// after every operation, which is exactly the canonical form we rely on for
/// equality-by-field-comparison.
pub type Rat = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;

/// Dense matrix over the exact rationals.
pub type QMatrix = matrix::Matrix<Rat>;
/// Dense univariate polynomial over the exact rationals, lowest degree first.
pub type QPoly = poly::Poly<Rat>;
/// Float instantiations, used for rounding guides and cross-checks only.
pub type FMatrix = matrix::Matrix<f64>;
pub type FPoly = poly::Poly<f64>;

/// Rational from an integer literal.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Rational `n/d`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}
