//! Exact computations on indicator diagrams of plurisubharmonic singularities.
//!
//! A diagram is a complete convex set `conv(generators) + R^n_+` in the
//! nonnegative orthant. This crate provides:
//!
//! * [`diagram`]: canonical forms, Minkowski sums, homotheties, support values;
//! * [`polynomial`]: parsing, exact ring operations, linear substitutions and
//!   Newton diagrams of `log(|p_1| + ... + |p_m|)`;
//! * [`measures`]: Newton numbers and monomial relative types;
//! * [`decomposition`]: decomposability modulo homothety with verified
//!   certificates, and the extremity classification built on it.
//!
//! All arithmetic is over exact rationals.

pub mod decomposition;
pub mod diagram;
pub mod error;
pub mod geometry;
pub mod lp;
pub mod measures;
pub mod polynomial;
pub mod rational;

pub use decomposition::{
    classify_extreme, decide_decomposability, decide_decomposability_general, verify_decomposition, Assignment,
    DecompositionCertificate, ExtremityReport, Method, SummandSystem, Verdict, HOMOGENEITY_CAVEAT,
};
pub use diagram::{CompactGraph, Diagram, Edge, HomothetyWitness, Point};
pub use error::{Error, Result};
pub use measures::{
    covolume_2d_oracle, indicator_eval, intercept_simplex, newton_number, relative_type_monomial, weighted_simplex,
    NewtonNumber,
};
pub use polynomial::{Polynomial, RationalMatrix, SingularityInput, Weight};
pub use rational::{format_rational, parse_rational, Rational};
