//! Dense multivectors over exact rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::conjugation::ConjugationSpec;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::signature::{BladeIndex, Signature};

/// `coeffs[b]` is the coordinate of blade `b`; always exactly `2^n` entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multivector {
    sig: Signature,
    coeffs: Vec<Rational>,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            coeffs: vec![Rational::zero(); sig.blade_count()],
        }
    }

    pub fn scalar(sig: Signature, value: Rational) -> Self {
        let mut m = Self::zero(sig);
        m.coeffs[0] = value;
        m
    }

    /// The identity element `e`.
    pub fn identity(sig: Signature) -> Self {
        Self::scalar(sig, Rational::one())
    }

    pub fn blade(sig: Signature, blade: BladeIndex) -> Result<Self> {
        Self::from_terms(sig, [(blade, Rational::one())])
    }

    /// Generator `e_index`, one-based.
    pub fn generator(sig: Signature, index: usize) -> Result<Self> {
        if index == 0 || index > sig.dim() {
            return Err(Error::GeneratorOutOfRange {
                index,
                dim: sig.dim(),
            });
        }
        Self::blade(sig, BladeIndex::generator(index))
    }

    pub fn from_coeffs(sig: Signature, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != sig.blade_count() {
            return Err(Error::CoefficientCount {
                expected: sig.blade_count(),
                found: coeffs.len(),
            });
        }
        Ok(Multivector { sig, coeffs })
    }

    pub fn from_terms(
        sig: Signature,
        terms: impl IntoIterator<Item = (BladeIndex, Rational)>,
    ) -> Result<Self> {
        let mut m = Self::zero(sig);
        for (blade, c) in terms {
            if !blade.fits(sig) {
                let index = blade.generators().last().copied().unwrap_or(0);
                return Err(Error::GeneratorOutOfRange {
                    index,
                    dim: sig.dim(),
                });
            }
            m.coeffs[blade.bits()] += c;
        }
        Ok(m)
    }

    /// Sum of unit blades given by one-based generator lists, e.g.
    /// `&[&[1], &[5], &[1, 5]]` for `e1 + e5 + e15`.
    pub fn from_blades(sig: Signature, blades: &[&[usize]]) -> Result<Self> {
        let mut terms = Vec::with_capacity(blades.len());
        for gens in blades {
            if let Some(&index) = gens.iter().find(|&&g| g == 0 || g > sig.dim()) {
                return Err(Error::GeneratorOutOfRange {
                    index,
                    dim: sig.dim(),
                });
            }
            terms.push((BladeIndex::from_generators(gens)?, Rational::one()));
        }
        Self::from_terms(sig, terms)
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, blade: BladeIndex) -> &Rational {
        &self.coeffs[blade.bits()]
    }

    /// Nonzero terms in increasing blade order.
    pub fn terms(&self) -> impl Iterator<Item = (BladeIndex, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(b, c)| (BladeIndex(b as u32), c))
    }

    /// `<U>_0`.
    pub fn scalar_part(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// True when every non-scalar coordinate is exactly zero.
    pub fn is_scalar(&self) -> bool {
        self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// True when only grade-`k` coordinates are nonzero.
    pub fn is_homogeneous(&self, k: usize) -> bool {
        self.terms().all(|(b, _)| b.grade() == k)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch {
                left: self.sig,
                right: other.sig,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| f(a, b))
            .collect();
        Multivector {
            sig: self.sig,
            coeffs,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Multivector {
            sig: self.sig,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `self + c e`.
    pub fn add_scalar(&self, c: &Rational) -> Self {
        let mut out = self.clone();
        out.coeffs[0] += c;
        out
    }

    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.product_unchecked(other))
    }

    fn product_unchecked(&self, other: &Self) -> Self {
        if let (Some(a), Some(b)) = (small_coeffs(&self.coeffs), small_coeffs(&other.coeffs)) {
            if let Some(out) = product_small(&a, &b, self.sig) {
                return Multivector {
                    sig: self.sig,
                    coeffs: out.into_iter().map(Rational::from_int).collect(),
                };
            }
        }
        let m = self.sig.blade_count();
        let mut out = vec![Rational::zero(); m];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let t = x * y;
                if self.sig.product_sign(i, j) > 0 {
                    out[i ^ j] += t;
                } else {
                    out[i ^ j] -= t;
                }
            }
        }
        Multivector {
            sig: self.sig,
            coeffs: out,
        }
    }

    /// `U^k`, with `U^0 = e`.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.sig);
        for _ in 0..k {
            acc = acc.product_unchecked(self);
        }
        acc
    }

    /// `<U>_k`.
    pub fn grade_project(&self, k: usize) -> Result<Self> {
        if k > self.sig.dim() {
            return Err(Error::GradeOutOfRange {
                grade: k,
                dim: self.sig.dim(),
            });
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(b, c)| {
                if (b as u32).count_ones() as usize == k {
                    c.clone()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        Ok(Multivector {
            sig: self.sig,
            coeffs,
        })
    }

    pub fn conjugate(&self, spec: ConjugationSpec) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(b, c)| {
                if spec.flips((b as u32).count_ones() as usize) {
                    -c
                } else {
                    c.clone()
                }
            })
            .collect();
        Multivector {
            sig: self.sig,
            coeffs,
        }
    }

    pub fn hat(&self) -> Self {
        self.conjugate(ConjugationSpec::grade_involution())
    }

    pub fn tilde(&self) -> Self {
        self.conjugate(ConjugationSpec::reversion())
    }

    pub fn hat_tilde(&self) -> Self {
        self.conjugate(ConjugationSpec::clifford_conjugation())
    }

    pub fn triangle(&self) -> Self {
        self.conjugate(ConjugationSpec::triangle())
    }
}

fn small_coeffs(coeffs: &[Rational]) -> Option<Vec<i128>> {
    coeffs.iter().map(Rational::as_i128).collect()
}

/// Integer product with overflow detection; `None` means fall back to bignums.
fn product_small(a: &[i128], b: &[i128], sig: Signature) -> Option<Vec<i128>> {
    let m = a.len();
    let mut out = vec![0i128; m];
    match sig.sign_table() {
        Some(table) => {
            for (i, &x) in a.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let row = &table[i * m..(i + 1) * m];
                for (j, &y) in b.iter().enumerate() {
                    if y == 0 {
                        continue;
                    }
                    let t = x.checked_mul(y)?;
                    let slot = &mut out[i ^ j];
                    *slot = if row[j] > 0 {
                        slot.checked_add(t)?
                    } else {
                        slot.checked_sub(t)?
                    };
                }
            }
        }
        None => {
            for (i, &x) in a.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in b.iter().enumerate() {
                    if y == 0 {
                        continue;
                    }
                    let t = x.checked_mul(y)?;
                    let slot = &mut out[i ^ j];
                    *slot = if sig.product_sign(i, j) > 0 {
                        slot.checked_add(t)?
                    } else {
                        slot.checked_sub(t)?
                    };
                }
            }
        }
    }
    Some(out)
}

// Operator forms panic on signature mismatch; use the `try_*` and
// `geometric_product` methods where mismatches are possible.

impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.geometric_product(rhs).expect("geometric product")
    }
}

impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        &self * &rhs
    }
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        self.try_add(rhs).expect("multivector addition")
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        &self + &rhs
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self.try_sub(rhs).expect("multivector subtraction")
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        &self - &rhs
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        Multivector {
            sig: self.sig,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        -&self
    }
}

/// Terms in increasing blade order, e.g. `2 + 3/2*e12 - e3`; `0` when empty.
impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (blade, c) in self.terms() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if blade == BladeIndex::IDENTITY {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{blade}")?;
            } else {
                write!(f, "{magnitude}*{blade}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.sig, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_multivector, seeded_rng};
    use crate::signature::blade_product;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    fn e(s: Signature, gens: &[usize]) -> Multivector {
        Multivector::blade(s, BladeIndex::from_generators(gens).unwrap()).unwrap()
    }

    fn q(n: i128) -> Rational {
        Rational::from(n)
    }

    /// Double loop over blade pairs through `blade_product` only.
    fn brute_product(a: &Multivector, b: &Multivector) -> Multivector {
        let s = a.signature();
        let mut out = vec![Rational::zero(); s.blade_count()];
        for i in 0..s.blade_count() {
            for j in 0..s.blade_count() {
                let (sign, blade) =
                    blade_product(BladeIndex(i as u32), BladeIndex(j as u32), s);
                let t = &a.coeffs()[i] * &b.coeffs()[j] * Rational::from(sign);
                out[blade.bits()] += t;
            }
        }
        Multivector::from_coeffs(s, out).unwrap()
    }

    #[test]
    fn identity_and_simple_squares() {
        let s = sig(2, 0);
        let u = Multivector::from_terms(
            s,
            [(BladeIndex(0), q(3)), (BladeIndex(1), q(-2)), (BladeIndex(3), q(5))],
        )
        .unwrap();
        assert_eq!(&u * &Multivector::identity(s), u);
        let v = &e(s, &[1]) + &e(s, &[2]);
        assert_eq!(&v * &v, Multivector::scalar(s, q(2)));
    }

    #[test]
    fn product_matches_brute_force() {
        let mut rng = seeded_rng(11);
        for s in [sig(3, 0), sig(1, 2), sig(2, 2)] {
            for _ in 0..20 {
                let a = random_multivector(s, &mut rng);
                let b = random_multivector(s, &mut rng);
                assert_eq!(&a * &b, brute_product(&a, &b));
            }
        }
    }

    #[test]
    fn bignum_path_agrees_with_small_path() {
        let mut rng = seeded_rng(5);
        let s = sig(2, 1);
        let a = random_multivector(s, &mut rng);
        let b = random_multivector(s, &mut rng);
        let half = Rational::new(1, 2);
        // scaling by 1/2 forces the general path; undo afterwards
        let slow = &a.scale(&half) * &b.scale(&half);
        assert_eq!(slow.scale(&q(4)), &a * &b);
        let huge = Rational::from(i128::MAX / 3);
        let big = &a.scale(&huge) * &b;
        assert_eq!(big, (&a * &b).scale(&huge));
    }

    #[test]
    fn signature_mismatch_is_an_error() {
        let a = Multivector::identity(sig(2, 0));
        let b = Multivector::identity(sig(1, 1));
        assert!(matches!(
            a.geometric_product(&b),
            Err(Error::SignatureMismatch { .. })
        ));
        assert!(a.try_add(&b).is_err());
    }

    #[test]
    fn add_and_scale() {
        let s = sig(2, 0);
        let e1 = e(s, &[1]);
        let mut rng = seeded_rng(1);
        let u = random_multivector(s, &mut rng);
        assert_eq!(&u + &Multivector::zero(s), u);
        assert_eq!(u.scale(&Rational::one()), u);
        assert_eq!(&e1.scale(&q(2)) + &e1, e1.scale(&q(3)));
    }

    #[test]
    fn grade_projection() {
        let s = sig(3, 0);
        let u = Multivector::from_terms(
            s,
            [(BladeIndex(0), q(1)), (BladeIndex(1), q(2)), (BladeIndex(3), q(3))],
        )
        .unwrap();
        assert_eq!(u.grade_project(1).unwrap(), e(s, &[1]).scale(&q(2)));
        assert!(e(s, &[1, 2, 3]).grade_project(2).unwrap().is_zero());
        assert!(matches!(
            u.grade_project(4),
            Err(Error::GradeOutOfRange { .. })
        ));
        let mut rng = seeded_rng(2);
        let r = random_multivector(s, &mut rng);
        let sum = (0..=3).fold(Multivector::zero(s), |acc, k| &acc + &r.grade_project(k).unwrap());
        assert_eq!(sum, r);
    }

    #[test]
    fn scalar_part() {
        let s1 = sig(0, 1);
        let u = &Multivector::scalar(s1, q(5)) + &e(s1, &[1]);
        assert_eq!(u.scalar_part(), &q(5));
        let e1 = e(s1, &[1]);
        assert_eq!((&e1 * &e1).scalar_part(), &q(-1));
        let mut rng = seeded_rng(3);
        let s = sig(2, 2);
        for _ in 0..10 {
            let a = random_multivector(s, &mut rng);
            let b = random_multivector(s, &mut rng);
            assert_eq!((&a * &b).scalar_part(), (&b * &a).scalar_part());
        }
    }

    #[test]
    fn conjugation_examples() {
        let s = sig(4, 0);
        assert_eq!(e(s, &[1]).hat(), -e(s, &[1]));
        assert_eq!(e(s, &[1, 2]).tilde(), -e(s, &[1, 2]));
        assert_eq!(e(s, &[1, 2, 3, 4]).triangle(), -e(s, &[1, 2, 3, 4]));
        let mut rng = seeded_rng(4);
        let r = random_multivector(s, &mut rng);
        let low = (0..=3).fold(Multivector::zero(s), |acc, k| &acc + &r.grade_project(k).unwrap());
        assert_eq!(low.triangle(), low);
    }

    #[test]
    fn display_format() {
        let s = sig(2, 0);
        let u = Multivector::from_terms(
            s,
            [(BladeIndex(0), q(2)), (BladeIndex(3), Rational::new(3, 2))],
        )
        .unwrap();
        assert_eq!(u.to_string(), "2 + 3/2*e12");
        assert_eq!((-e(s, &[1])).to_string(), "-e1");
        assert_eq!(Multivector::zero(s).to_string(), "0");
        let w = &e(s, &[1]).scale(&Rational::new(1, 2)) - &e(s, &[2]);
        assert_eq!(w.to_string(), "1/2*e1 - e2");
    }
}
