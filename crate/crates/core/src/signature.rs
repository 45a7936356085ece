//! Signatures, basis blades and the blade multiplication rule.
//!
//! Generators `e_1..e_p` square to `+1`, `e_{p+1}..e_n` square to `-1`.
//! A blade is stored as a bit set: bit `a` set means `e_{a+1}` is a factor.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    p: u8,
    q: u8,
}

impl Signature {
    pub const MAX_DIM: usize = 12;

    pub fn new(p: usize, q: usize) -> Result<Self> {
        let n = p + q;
        if n == 0 || n > Self::MAX_DIM {
            return Err(Error::InvalidSignature {
                p,
                q,
                max: Self::MAX_DIM,
            });
        }
        Ok(Signature {
            p: p as u8,
            q: q as u8,
        })
    }

    pub fn p(&self) -> usize {
        self.p as usize
    }

    pub fn q(&self) -> usize {
        self.q as usize
    }

    /// `n = p + q`.
    pub fn dim(&self) -> usize {
        self.p() + self.q()
    }

    /// Number of basis blades, `2^n`.
    pub fn blade_count(&self) -> usize {
        1 << self.dim()
    }

    /// Degree `N = 2^floor((n+1)/2)` of the characteristic polynomial.
    pub fn charpoly_degree(&self) -> usize {
        1 << self.dim().div_ceil(2)
    }

    /// Square of the generator with zero-based index `a`.
    pub fn generator_square(&self, a: usize) -> i8 {
        if a < self.p() {
            1
        } else {
            -1
        }
    }

    /// Bits of the generators that square to `-1`.
    pub(crate) fn negative_mask(&self) -> u32 {
        ((1u32 << self.dim()) - 1) & !((1u32 << self.p()) - 1)
    }

    /// All signatures with `1 <= p+q <= max_dim`, ordered by `n` then `p`.
    pub fn all_up_to(max_dim: usize) -> impl Iterator<Item = Signature> {
        let max_dim = max_dim.min(Self::MAX_DIM);
        (1..=max_dim).flat_map(|n| (0..=n).map(move |p| Signature::new(p, n - p).unwrap()))
    }

    /// Sign of `a * b` for blade bit sets; served from a table for small `n`.
    #[inline]
    pub(crate) fn product_sign(&self, a: usize, b: usize) -> i8 {
        match self.sign_table() {
            Some(t) => t[(a << self.dim()) | b],
            None => blade_sign(a as u32, b as u32, self.negative_mask()),
        }
    }

    pub(crate) fn sign_table(&self) -> Option<&'static [i8]> {
        const TABLE_MAX_DIM: usize = 8;
        static TABLES: [OnceLock<Box<[i8]>>; 81] = [const { OnceLock::new() }; 81];
        if self.dim() > TABLE_MAX_DIM {
            return None;
        }
        let slot = &TABLES[self.p() * 9 + self.q()];
        Some(slot.get_or_init(|| {
            let m = self.blade_count();
            let neg = self.negative_mask();
            let mut t = vec![0i8; m * m];
            for a in 0..m {
                for b in 0..m {
                    t[a * m + b] = blade_sign(a as u32, b as u32, neg);
                }
            }
            t.into_boxed_slice()
        }))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Transposition count plus one factor `-1` per repeated negative generator.
#[inline]
fn blade_sign(a: u32, b: u32, negative_mask: u32) -> i8 {
    let mut swaps = 0u32;
    let mut x = a >> 1;
    while x != 0 {
        swaps += (x & b).count_ones();
        x >>= 1;
    }
    swaps += (a & b & negative_mask).count_ones();
    if swaps & 1 == 0 {
        1
    } else {
        -1
    }
}

/// A canonical basis blade `e_{a1...ak}`, `a1 < ... < ak`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BladeIndex(pub u32);

impl BladeIndex {
    pub const IDENTITY: BladeIndex = BladeIndex(0);

    /// Blade from one-based generator indices, e.g. `[1, 5]` for `e15`.
    pub fn from_generators(indices: &[usize]) -> Result<Self> {
        let mut bits = 0u32;
        let mut last = 0;
        for &i in indices {
            if i <= last {
                return Err(Error::UnorderedBlade(indices.to_vec()));
            }
            if i > Signature::MAX_DIM {
                return Err(Error::GeneratorOutOfRange {
                    index: i,
                    dim: Signature::MAX_DIM,
                });
            }
            bits |= 1 << (i - 1);
            last = i;
        }
        Ok(BladeIndex(bits))
    }

    /// The single generator `e_index` (one-based).
    pub fn generator(index: usize) -> Self {
        debug_assert!(index >= 1);
        BladeIndex(1 << (index - 1))
    }

    pub fn grade(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn bits(&self) -> usize {
        self.0 as usize
    }

    /// One-based generator indices in increasing order.
    pub fn generators(&self) -> Vec<usize> {
        (0..32).filter(|a| self.0 >> a & 1 == 1).map(|a| a + 1).collect()
    }

    pub fn fits(&self, sig: Signature) -> bool {
        (self.0 as usize) < sig.blade_count()
    }
}

impl fmt::Display for BladeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.generators();
        if gens.iter().all(|&g| g <= 9) {
            write!(f, "e")?;
            for g in gens {
                write!(f, "{g}")?;
            }
            Ok(())
        } else {
            let list: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
            write!(f, "e({})", list.join(","))
        }
    }
}

impl fmt::Debug for BladeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Product of two basis blades: `a * b = sign * result`.
pub fn blade_product(a: BladeIndex, b: BladeIndex, sig: Signature) -> (i8, BladeIndex) {
    let sign = blade_sign(a.0, b.0, sig.negative_mask());
    (sign, BladeIndex(a.0 ^ b.0))
}
