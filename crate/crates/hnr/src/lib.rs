//! Exact computer algebra for the modified Ariki-Koike algebra H(n, r).
//!
//! The algebra is a deformation of the group algebra of the complex
//! reflection group G(r, 1, n) carrying three interchangeable presentations:
//! the defining one (Hecke generators T_i and spectral generators t_i), a
//! Yokonuma-style one (braid generators g_i and the t_i), and an idempotent
//! one (the g_i together with the color idempotents b_k). Everything here is
//! computed over exact rationals: products in the normal form
//! {b_k g_w}, conversions between the three bases, the symmetrizing trace
//! and its dual pairing, the color-relabeling action with its fixed
//! subalgebra, and machine verification of every presentation at desk scale.

pub mod color;
pub mod error;
pub mod linalg;
pub mod perm;
pub mod poly;
pub mod scalar;

pub use color::ColorVector;
pub use error::{Error, Result};
pub use perm::Permutation;
pub use poly::UniPolynomial;
pub use scalar::{ParameterSet, Scalar};

pub mod context;
pub mod element;

pub use context::Context;
pub use element::{AlgebraElement, BasisWord};

pub mod convert;
pub(crate) mod exec;
pub mod expr;
pub mod fixed;
pub mod sample;
pub mod trace;
pub mod verify;

pub use convert::{
    from_coordinates, parameter_change_map, to_coordinates, BasisTag, CoordLabel,
    CoordinateVector, ParameterChange,
};
pub use expr::{format_element, parse_element, parse_element_in};
pub use fixed::{fixed_basis, generation_check, is_fixed, FixedBasisElement, GenerationReport};
pub use trace::{dual_basis_element, gram_check, tau, GramReport};
pub use verify::{
    multi_parameter_fuzz, verify_all, verify_b_presentation, verify_definition_images,
    verify_definition_presentation, verify_lemma_suite, verify_yokonuma_presentation,
    RelationCheck, VerificationReport,
};
