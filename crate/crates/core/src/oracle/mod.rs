//! Matrix ground truth: a faithful complex representation of `Cl(p,q)` of
//! size `N` and Faddeev–LeVerrier on the image of a multivector.
//!
//! Generators come from Kronecker products of Pauli matrices. Negative
//! squares are obtained by multiplying by `i`. For odd `n` the last generator
//! is the chirality matrix and the representation is the direct sum of the
//! two sign choices for it.

mod complex;

pub use complex::{ComplexMatrix, ComplexRational};

use crate::charpoly::CharPoly;
use crate::closed::charpoly_closed;
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::rational::Rational;
use crate::recursive::charpoly;
use crate::signature::Signature;

/// A matrix with exactly one nonzero entry `i^phase[r]` per row, in column
/// `perm[r]`. Every image of a basis blade has this shape.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Monomial {
    perm: Vec<u32>,
    phase: Vec<u8>,
}

impl Monomial {
    fn identity(dim: usize) -> Self {
        Monomial {
            perm: (0..dim as u32).collect(),
            phase: vec![0; dim],
        }
    }

    fn pauli(which: char) -> Self {
        let (perm, phase) = match which {
            'I' => (vec![0, 1], vec![0, 0]),
            'X' => (vec![1, 0], vec![0, 0]),
            'Y' => (vec![1, 0], vec![3, 1]),
            _ => (vec![0, 1], vec![0, 2]),
        };
        Monomial { perm, phase }
    }

    fn kron(&self, other: &Self) -> Self {
        let m = other.perm.len();
        let mut perm = Vec::with_capacity(self.perm.len() * m);
        let mut phase = Vec::with_capacity(self.perm.len() * m);
        for (&c1, &ph1) in self.perm.iter().zip(&self.phase) {
            for (&c2, &ph2) in other.perm.iter().zip(&other.phase) {
                perm.push(c1 * m as u32 + c2);
                phase.push((ph1 + ph2) % 4);
            }
        }
        Monomial { perm, phase }
    }

    fn mul(&self, other: &Self) -> Self {
        let (perm, phase) = self
            .perm
            .iter()
            .zip(&self.phase)
            .map(|(&k, &ph)| {
                let k = k as usize;
                (other.perm[k], (ph + other.phase[k]) % 4)
            })
            .unzip();
        Monomial { perm, phase }
    }

    fn rotate(&self, k: u8) -> Self {
        Monomial {
            perm: self.perm.clone(),
            phase: self.phase.iter().map(|&p| (p + k) % 4).collect(),
        }
    }

    /// `diag(self, other)`.
    fn direct_sum(&self, other: &Self) -> Self {
        let shift = self.perm.len() as u32;
        Monomial {
            perm: self
                .perm
                .iter()
                .copied()
                .chain(other.perm.iter().map(|&c| c + shift))
                .collect(),
            phase: self.phase.iter().chain(&other.phase).copied().collect(),
        }
    }

    fn to_dense(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(self.perm.len());
        for (r, (&c, &ph)) in self.perm.iter().zip(&self.phase).enumerate() {
            m.set(r, c as usize, ComplexRational::i_pow(ph));
        }
        m
    }
}

fn kron_all(factors: &[char]) -> Monomial {
    factors
        .iter()
        .fold(Monomial::identity(1), |acc, &f| acc.kron(&Monomial::pauli(f)))
}

/// Generator matrices of `Cl(p,q)` of size `N`, plus the images of all blades.
#[derive(Clone, Debug)]
pub struct Representation {
    sig: Signature,
    gamma: Vec<ComplexMatrix>,
    blades: Vec<Monomial>,
}

impl Representation {
    pub fn signature(&self) -> Signature {
        self.sig
    }

    /// Matrix side length, equal to `N`.
    pub fn dim(&self) -> usize {
        self.blades[0].perm.len()
    }

    /// `gamma[a]` is the image of `e_(a+1)`.
    pub fn gamma(&self) -> &[ComplexMatrix] {
        &self.gamma
    }

    /// Image of basis blade `bits`.
    pub fn blade_matrix(&self, bits: usize) -> ComplexMatrix {
        self.blades[bits].to_dense()
    }
}

/// The representation used throughout the oracle.
pub fn build_representation(sig: Signature) -> Representation {
    let n = sig.dim();
    let m = n / 2;
    let mut gens: Vec<Monomial> = Vec::with_capacity(n);
    for j in 0..m {
        for middle in ['X', 'Y'] {
            let mut factors = vec!['Z'; j];
            factors.push(middle);
            factors.extend(std::iter::repeat_n('I', m - j - 1));
            gens.push(kron_all(&factors));
        }
    }
    if n % 2 == 1 {
        let chirality = kron_all(&vec!['Z'; m]);
        let minus = chirality.rotate(2);
        gens = gens.iter().map(|g| g.direct_sum(g)).collect();
        gens.push(chirality.direct_sum(&minus));
    }
    let gens: Vec<Monomial> = gens
        .into_iter()
        .enumerate()
        .map(|(a, g)| if a >= sig.p() { g.rotate(1) } else { g })
        .collect();

    let dim = gens[0].perm.len();
    let mut blades = Vec::with_capacity(sig.blade_count());
    blades.push(Monomial::identity(dim));
    for bits in 1..sig.blade_count() {
        let top = usize::BITS - 1 - bits.leading_zeros();
        let rest = bits & !(1 << top);
        blades.push(blades[rest].mul(&gens[top as usize]));
    }
    Representation {
        sig,
        gamma: gens.iter().map(Monomial::to_dense).collect(),
        blades,
    }
}

/// `beta(U) = sum_b U_b beta(e_b)`.
pub fn beta(u: &Multivector, rep: &Representation) -> Result<ComplexMatrix> {
    if u.signature() != rep.sig {
        return Err(Error::SignatureMismatch {
            left: u.signature(),
            right: rep.sig,
        });
    }
    let mut out = ComplexMatrix::zeros(rep.dim());
    for (blade, c) in u.terms() {
        let mono = &rep.blades[blade.bits()];
        for (r, (&col, &ph)) in mono.perm.iter().zip(&mono.phase).enumerate() {
            let cell = out.entry_mut(r, col as usize);
            *cell = &*cell + &ComplexRational::real(c.clone()).rotate(ph);
        }
    }
    Ok(out)
}

/// Faddeev–LeVerrier, reported as `C(1)..C(N)` with
/// `det(l I - M) = l^N - C(1) l^(N-1) - ... - C(N)`.
pub fn matrix_charpoly(m: &ComplexMatrix) -> Result<CharPoly> {
    let n = m.dim();
    let mut acc = ComplexMatrix::identity(n);
    let mut coeffs = Vec::with_capacity(n);
    for k in 1..=n {
        let am = m * &acc;
        let ck = am.trace().scale(&Rational::new(1, k as i128));
        if !ck.is_real() {
            return Err(Error::ComplexCoefficient { k });
        }
        acc = am.add_scalar(&-&ck);
        coeffs.push(ck.re);
    }
    Ok(CharPoly::from_coeffs(coeffs))
}

/// Coefficients of `U` through the representation.
pub fn oracle_charpoly(u: &Multivector, rep: &Representation) -> Result<CharPoly> {
    let coeffs = matrix_charpoly(&beta(u, rep)?)?.into_coeffs();
    CharPoly::for_signature(u.signature(), coeffs)
}

/// One alternative path compared against the recursive result.
#[derive(Clone, Debug)]
pub struct PathOutcome {
    pub method: &'static str,
    /// `other - recursive` per coefficient, or the error the path raised.
    pub deltas: Result<Vec<Rational>>,
}

impl PathOutcome {
    pub fn agrees(&self) -> bool {
        matches!(&self.deltas, Ok(d) if d.iter().all(Rational::is_zero))
    }
}

#[derive(Clone, Debug)]
pub struct OracleReport {
    pub recursive: CharPoly,
    pub paths: Vec<PathOutcome>,
}

impl OracleReport {
    pub fn agrees(&self) -> bool {
        self.paths.iter().all(PathOutcome::agrees)
    }

    pub fn failures(&self) -> Vec<&PathOutcome> {
        self.paths.iter().filter(|p| !p.agrees()).collect()
    }
}

/// Matrix oracle and (for `n <= 6`) the closed forms against the recursion.
pub fn oracle_compare(u: &Multivector) -> OracleReport {
    oracle_compare_with(u, &build_representation(u.signature()))
}

pub fn oracle_compare_with(u: &Multivector, rep: &Representation) -> OracleReport {
    let recursive = charpoly(u);
    let delta = |other: Result<CharPoly>| other.map(|c| recursive.deltas(&c));
    let mut paths = vec![PathOutcome {
        method: "oracle",
        deltas: delta(oracle_charpoly(u, rep)),
    }];
    if u.signature().dim() <= 6 {
        paths.push(PathOutcome {
            method: "closed",
            deltas: delta(charpoly_closed(u)),
        });
    }
    OracleReport { recursive, paths }
}
