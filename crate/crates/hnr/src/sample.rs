//! Seeded random generation of scalars, parameters, and elements for
//! property checks and fuzzing. Everything is driven by an explicit seed,
//! so every reported failure is reproducible.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::color::ColorVector;
use crate::context::Context;
use crate::element::{AlgebraElement, BasisWord};
use crate::error::Result;
use crate::perm::Permutation;
use crate::scalar::{ParameterSet, Scalar};

/// The deterministic generator used by every sampling entry point.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small exact rational with numerator in -20..=20 and denominator
/// in 1..=20.
pub fn sample_scalar(rng: &mut impl Rng) -> Scalar {
    let num = rng.random_range(-20i64..=20);
    let den = rng.random_range(1i64..=20);
    Scalar::from_fraction(num, den).expect("nonzero denominator")
}

pub fn sample_nonzero_scalar(rng: &mut impl Rng) -> Scalar {
    loop {
        let s = sample_scalar(rng);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn sample_permutation(n: usize, rng: &mut impl Rng) -> Permutation {
    let mut one_line: Vec<u8> = (1..=n as u8).collect();
    // Fisher-Yates.
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        one_line.swap(i, j);
    }
    Permutation::from_one_line(&one_line).expect("shuffle keeps a valid one-line word")
}

pub fn sample_colors(n: usize, r: usize, rng: &mut impl Rng) -> ColorVector {
    let colors: Vec<u8> = (0..n).map(|_| rng.random_range(1..=r as u8)).collect();
    ColorVector::new(&colors, r).expect("colors drawn in range")
}

/// A random element with at most `max_terms` nonzero normal-form terms.
pub fn sample_element(ctx: &Context, max_terms: usize, rng: &mut impl Rng) -> AlgebraElement {
    let count = rng.random_range(1..=max_terms.max(1));
    let terms = (0..count).map(|_| {
        let word = BasisWord::new(
            sample_colors(ctx.n(), ctx.r(), rng),
            sample_permutation(ctx.n(), rng),
        )
        .expect("matching sizes");
        (word, sample_nonzero_scalar(rng))
    });
    AlgebraElement::from_terms(ctx, terms).expect("sampled labels fit the context")
}

/// A random valid parameter set with the given shape: q nonzero and the u
/// values distinct and nonzero (so the trace form is symmetrizing).
pub fn sample_parameters(n: usize, r: usize, rng: &mut impl Rng) -> Result<ParameterSet> {
    let q = sample_nonzero_scalar(rng);
    let mut u: Vec<Scalar> = Vec::with_capacity(r);
    while u.len() < r {
        let candidate = sample_nonzero_scalar(rng);
        if !u.contains(&candidate) {
            u.push(candidate);
        }
    }
    ParameterSet::new(n, r, q, u)
}
