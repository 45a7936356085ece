//! Operations of conjugation: grade-wise sign maps `U -> sum_k s_k <U>_k`.

use std::fmt;

use crate::error::{Error, Result};
use crate::signature::Signature;

const GRADES: usize = Signature::MAX_DIM + 1;

/// Per-grade sign vector, stored as a bit set of the grades that flip sign.
///
/// Covers every grade up to `Signature::MAX_DIM`, so one spec applies to all
/// signatures.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ConjugationSpec {
    negated: u16,
}

impl ConjugationSpec {
    pub const IDENTITY: ConjugationSpec = ConjugationSpec { negated: 0 };

    fn from_rule(rule: impl Fn(usize) -> bool) -> Self {
        let negated = (0..GRADES)
            .filter(|&k| rule(k))
            .fold(0u16, |m, k| m | (1 << k));
        ConjugationSpec { negated }
    }

    /// Hat: `(-1)^k`.
    pub fn grade_involution() -> Self {
        Self::from_rule(|k| k % 2 == 1)
    }

    /// Tilde: `(-1)^(k(k-1)/2)`.
    pub fn reversion() -> Self {
        Self::from_rule(|k| (k * k.saturating_sub(1) / 2) % 2 == 1)
    }

    /// Hat-tilde: `(-1)^(k(k+1)/2)`.
    pub fn clifford_conjugation() -> Self {
        Self::from_rule(|k| (k * (k + 1) / 2) % 2 == 1)
    }

    /// Triangle: `(-1)^(k(k-1)(k-2)(k-3)/24)`, flips grades 4..=7 and 12.
    pub fn triangle() -> Self {
        Self::from_rule(|k| {
            if k < 4 {
                return false;
            }
            (k * (k - 1) * (k - 2) * (k - 3) / 24) % 2 == 1
        })
    }

    /// Build from explicit signs `signs[k]` for grades `0..signs.len()`;
    /// grades beyond the slice keep their sign.
    pub fn from_signs(signs: &[i8]) -> Result<Self> {
        if signs.len() > GRADES {
            return Err(Error::InvalidConjugationSigns);
        }
        let mut negated = 0u16;
        for (k, &s) in signs.iter().enumerate() {
            match s {
                1 => {}
                -1 => negated |= 1 << k,
                _ => return Err(Error::InvalidConjugationSigns),
            }
        }
        Ok(ConjugationSpec { negated })
    }

    /// Pointwise product of sign vectors.
    pub fn compose(self, other: Self) -> Self {
        ConjugationSpec {
            negated: self.negated ^ other.negated,
        }
    }

    pub fn sign(&self, grade: usize) -> i8 {
        if self.negated >> grade & 1 == 1 {
            -1
        } else {
            1
        }
    }

    #[inline]
    pub(crate) fn flips(&self, grade: usize) -> bool {
        self.negated >> grade & 1 == 1
    }

    /// Signs `s_0..s_n` for a given dimension.
    pub fn signs(&self, dim: usize) -> Vec<i8> {
        (0..=dim).map(|k| self.sign(k)).collect()
    }

    pub fn fixes_scalars(&self) -> bool {
        !self.flips(0)
    }
}

impl fmt::Debug for ConjugationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let signs: String = (0..GRADES)
            .map(|k| if self.flips(k) { '-' } else { '+' })
            .collect();
        write!(f, "ConjugationSpec({signs})")
    }
}
