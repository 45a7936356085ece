//! Seeded random inputs: integer multivectors and vectors.

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::multivector::Multivector;
use crate::rational::Rational;
use crate::signature::{BladeIndex, Signature};

pub type Rng = ChaCha8Rng;

/// Coordinates of random test elements are drawn uniformly from this range.
pub const COEFF_RANGE: std::ops::RangeInclusive<i64> = -9..=9;

pub fn seeded_rng(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every coordinate uniform in `COEFF_RANGE`.
pub fn random_multivector(sig: Signature, rng: &mut Rng) -> Multivector {
    let coeffs = (0..sig.blade_count())
        .map(|_| Rational::from(rng.random_range(COEFF_RANGE)))
        .collect();
    Multivector::from_coeffs(sig, coeffs).expect("length matches")
}

/// Grade-1 element with coordinates uniform in `COEFF_RANGE`.
pub fn random_vector(sig: Signature, rng: &mut Rng) -> Multivector {
    let terms: Vec<_> = (1..=sig.dim())
        .map(|a| {
            (
                BladeIndex::generator(a),
                Rational::from(rng.random_range(COEFF_RANGE)),
            )
        })
        .collect();
    Multivector::from_terms(sig, terms).expect("generators fit")
}
