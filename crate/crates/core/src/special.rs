//! Coefficient formulas for special classes of elements: scalars,
//! involutory-like elements and rotors.

use rand::Rng as _;

use crate::charpoly::CharPoly;
use crate::closed::scalars_of;
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::random::{seeded_rng, Rng};
use crate::rational::Rational;
use crate::signature::Signature;

fn binom(n: usize, k: usize) -> Rational {
    Rational::from((0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128))
}

fn alternate(i: usize, value: Rational) -> Rational {
    if i % 2 == 1 {
        value
    } else {
        -value
    }
}

/// `U = u e`: `C(i) = (-1)^(i+1) binom(N, i) u^i`.
pub fn charpoly_scalar(u: &Rational, sig: Signature) -> CharPoly {
    let big_n = sig.charpoly_degree();
    let coeffs = (1..=big_n)
        .map(|i| alternate(i, binom(big_n, i) * u.pow(i as u32)))
        .collect();
    CharPoly::for_signature(sig, coeffs).expect("N coefficients")
}

/// Elements with `<U>_0 = 0` and scalar `U^2`: odd coefficients vanish and
/// `C(2s) = (-1)^(s-1) binom(N/2, s) (U^2)^s`.
pub fn charpoly_involutory(u: &Multivector) -> Result<CharPoly> {
    let sq = u * u;
    if !u.scalar_part().is_zero() || !sq.is_scalar() {
        return Err(Error::NotInvolutoryLike);
    }
    let a = sq.scalar_part();
    let sig = u.signature();
    let big_n = sig.charpoly_degree();
    let coeffs = (1..=big_n)
        .map(|i| {
            if i % 2 == 1 {
                Rational::zero()
            } else {
                let s = i / 2;
                alternate(s, binom(big_n / 2, s) * a.pow(s as u32))
            }
        })
        .collect();
    CharPoly::for_signature(sig, coeffs)
}

/// Membership in `Spin+(p,q)`: even, `tilde(U) U = e`, and every generator
/// stays a vector under `x -> U x U^-1`.
pub fn is_rotor(u: &Multivector) -> bool {
    let sig = u.signature();
    if u.hat() != *u {
        return false;
    }
    let rev = u.tilde();
    if &rev * u != Multivector::identity(sig) {
        return false;
    }
    (1..=sig.dim()).all(|a| {
        let ea = Multivector::generator(sig, a).expect("generator in range");
        (&(u * &ea) * &rev).is_homogeneous(1)
    })
}

/// Simplified rotor formulas, `n <= 5`.
pub fn charpoly_rotor(u: &Multivector) -> Result<CharPoly> {
    let sig = u.signature();
    let dim = sig.dim();
    if dim > 5 {
        return Err(Error::UnsupportedDimension {
            operation: "rotor formulas",
            dim,
        });
    }
    if !is_rotor(u) {
        return Err(Error::NotARotor);
    }
    scalars_of(sig, rotor_coefficients(u))
}

fn rotor_coefficients(u: &Multivector) -> Vec<Multivector> {
    let sig = u.signature();
    let e = Multivector::identity(sig);
    let int = |k: i128| Rational::from(k);
    let ut = u.tilde();
    match sig.dim() {
        1 => vec![u.scale(&int(2)), -&e],
        2 => vec![u + &ut, -&e],
        3 => {
            let c1 = (u + &ut).scale(&int(2));
            let c2 = -(&(&e.scale(&int(4)) + &(u * u)) + &(&ut * &ut));
            vec![c1.clone(), c2, c1, -&e]
        }
        4 => {
            let (ua, uta) = (u.triangle(), ut.triangle());
            let c1 = &(&(u + &ut) + &ua) + &uta;
            let p = &(&(&(u * &ua) + &(u * &uta)) + &(&ut * &ua)) + &(&ut * &uta);
            let c2 = -(&e.scale(&int(2)) + &p);
            vec![c1.clone(), c2, c1, -&e]
        }
        _ => {
            let (ua, uta) = (u.triangle(), ut.triangle());
            let (u2, ut2) = (u * u, &ut * &ut);
            let (u2a, ut2a) = (u2.triangle(), ut2.triangle());
            let sum = |xs: &[Multivector]| {
                xs.iter()
                    .fold(Multivector::zero(sig), |acc, x| &acc + x)
            };
            let s1 = sum(&[u.clone(), ut.clone(), ua.clone(), uta.clone()]);
            let p = sum(&[u * &ua, u * &uta, &ut * &ua, &ut * &uta]);
            let q2 = sum(&[u2.clone(), ut2.clone(), u2a.clone(), ut2a.clone()]);
            let r = sum(&[
                &u2 * &ua,
                &u2 * &uta,
                &ut2 * &ua,
                &ut2 * &uta,
                u * &u2a,
                u * &ut2a,
                &ut * &u2a,
                &ut * &ut2a,
            ]);
            let s = sum(&[&u2 * &u2a, &u2 * &ut2a, &ut2 * &u2a, &ut2 * &ut2a]);

            let c1 = s1.scale(&int(2));
            let c2 = -sum(&[e.scale(&int(8)), q2.clone(), p.scale(&int(4))]);
            let c3 = &s1.scale(&int(10)) + &r.scale(&int(2));
            let c4 = -sum(&[e.scale(&int(18)), p.scale(&int(8)), q2.scale(&int(4)), s]);
            vec![
                c1.clone(),
                c2.clone(),
                c3.clone(),
                c4,
                c3,
                c2,
                c1,
                -&e,
            ]
        }
    }
}

/// A reproducible random rotor for `sig`.
pub fn random_rotor(sig: Signature, seed: u64) -> Multivector {
    random_rotor_with(sig, &mut seeded_rng(seed))
}

/// A product of two or four vectors with squares `+-1`, paired so that an even
/// number of them square to `-1`.
pub fn random_rotor_with(sig: Signature, rng: &mut Rng) -> Multivector {
    let pairs = rng.random_range(1..=2);
    let mut out = Multivector::identity(sig);
    for _ in 0..pairs {
        let negative = match (sig.p(), sig.q()) {
            (0, _) => true,
            (_, 0) => false,
            _ => rng.random_bool(0.5),
        };
        for _ in 0..2 {
            out = &out * &unit_vector(sig, negative, rng);
        }
    }
    out
}

/// Reflect a generator of the requested square in a random hyperplane; the
/// square is preserved and the coordinates stay rational.
fn unit_vector(sig: Signature, negative: bool, rng: &mut Rng) -> Multivector {
    let n = sig.dim();
    let b = if negative {
        rng.random_range(sig.p()..n)
    } else {
        rng.random_range(0..sig.p())
    };
    let eta = |a: usize| Rational::from(sig.generator_square(a));
    let d = loop {
        let d: Vec<Rational> = (0..n).map(|_| Rational::from(rng.random_range(-3..=3))).collect();
        let q: Rational = (0..n).map(|a| eta(a) * &d[a] * &d[a]).sum();
        if !q.is_zero() {
            break (d, q);
        }
    };
    let (d, q) = d;
    let factor = Rational::from(2) * eta(b) * &d[b] / q;
    let mut coeffs = vec![Rational::zero(); sig.blade_count()];
    for a in 0..n {
        coeffs[1 << a] = -(&factor * &d[a]);
    }
    coeffs[1 << b] += Rational::one();
    Multivector::from_coeffs(sig, coeffs).expect("blade count")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::random_vector;
    use crate::recursive::charpoly;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    fn ints(v: &[i128]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    fn rotation_345() -> Multivector {
        Multivector::from_terms(
            sig(2, 0),
            [
                (crate::BladeIndex(0), Rational::new(3, 5)),
                (crate::BladeIndex(0b11), Rational::new(4, 5)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn scalar_rows() {
        assert!(charpoly_scalar(&Rational::zero(), sig(3, 1))
            .coeffs()
            .iter()
            .all(Rational::is_zero));
        assert_eq!(
            charpoly_scalar(&Rational::one(), sig(5, 0)).coeffs(),
            &ints(&[8, -28, 56, -70, 56, -28, 8, -1])[..]
        );
        assert_eq!(
            charpoly_scalar(&Rational::from(2), sig(2, 0)).coeffs(),
            &ints(&[4, -4])[..]
        );
    }

    #[test]
    fn involutory_examples() {
        let s = sig(5, 0);
        let u = Multivector::from_blades(s, &[&[1], &[5], &[1, 5]]).unwrap();
        assert_eq!(
            charpoly_involutory(&u).unwrap().coeffs(),
            &ints(&[0, 4, 0, -6, 0, 4, 0, -1])[..]
        );
        let w = Multivector::from_blades(s, &[&[1], &[2], &[4, 5]]).unwrap();
        assert_eq!(charpoly_involutory(&w), Err(Error::NotInvolutoryLike));

        let mut rng = seeded_rng(51);
        for _ in 0..10 {
            let v = random_vector(sig(3, 0), &mut rng);
            assert_eq!(charpoly_involutory(&v).unwrap(), charpoly(&v));
        }
    }

    #[test]
    fn rotor_predicate() {
        let s = sig(2, 0);
        assert!(is_rotor(&Multivector::identity(s)));
        assert!(!is_rotor(&Multivector::generator(s, 1).unwrap()));
        let r = rotation_345();
        assert!(is_rotor(&r));
        assert!(!is_rotor(&Multivector::zero(s)));
        assert!(!is_rotor(&Multivector::scalar(s, Rational::from(2))));
    }

    #[test]
    fn rotor_formulas_on_identity_and_examples() {
        let s = sig(3, 0);
        assert_eq!(
            charpoly_rotor(&Multivector::identity(s)).unwrap().coeffs(),
            &ints(&[4, -6, 4, -1])[..]
        );
        let r = rotation_345();
        assert_eq!(charpoly_rotor(&r).unwrap(), charpoly(&r));
        assert_eq!(
            charpoly_rotor(&Multivector::generator(s, 1).unwrap()),
            Err(Error::NotARotor)
        );
    }

    #[test]
    fn random_rotors_are_rotors() {
        for s in Signature::all_up_to(5) {
            for seed in 0..4 {
                let r = random_rotor(s, seed);
                assert!(is_rotor(&r), "{s} seed {seed}: {r}");
                assert_eq!(charpoly_rotor(&r).unwrap(), charpoly(&r), "{s}");
            }
        }
        assert!(is_rotor(&random_rotor(sig(0, 2), 3)));
        assert_eq!(random_rotor(sig(3, 0), 9), random_rotor(sig(3, 0), 9));
    }

    #[test]
    fn unit_vectors_have_unit_square() {
        let mut rng = seeded_rng(52);
        let s = sig(2, 3);
        for negative in [false, true] {
            let v = unit_vector(s, negative, &mut rng);
            let expected = if negative { -1 } else { 1 };
            assert_eq!(&v * &v, Multivector::scalar(s, Rational::from(expected)));
        }
    }
}
