use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::signature::Signature;

/// Coefficients `C(1)..C(N)` of `phi(l) = l^N - C(1) l^(N-1) - ... - C(N)`.
///
/// Equality compares coefficients only.
#[derive(Clone)]
pub struct CharPoly {
    sig: Option<Signature>,
    coeffs: Vec<Rational>,
}

impl CharPoly {
    /// Coefficients attached to a signature; the length must be `N`.
    pub fn for_signature(sig: Signature, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != sig.charpoly_degree() {
            return Err(Error::CoefficientCount {
                expected: sig.charpoly_degree(),
                found: coeffs.len(),
            });
        }
        Ok(CharPoly {
            sig: Some(sig),
            coeffs,
        })
    }

    /// Coefficients with no algebra attached (e.g. of a bare matrix).
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        CharPoly { sig: None, coeffs }
    }

    pub fn signature(&self) -> Option<Signature> {
        self.sig
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// `C(k)`, one-based.
    pub fn get(&self, k: usize) -> &Rational {
        &self.coeffs[k - 1]
    }

    /// `Tr(U) = C(1)`.
    pub fn trace(&self) -> &Rational {
        &self.coeffs[0]
    }

    /// `Det(U) = -C(N)`.
    pub fn det(&self) -> Rational {
        -self.coeffs.last().expect("N >= 2")
    }

    /// `C(k)` of `other` minus `C(k)` of `self`, per coefficient.
    pub fn deltas(&self, other: &CharPoly) -> Vec<Rational> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| b - a)
            .collect()
    }
}

impl PartialEq for CharPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for CharPoly {}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharPoly{self}")
    }
}
