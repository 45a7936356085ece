//! The recursive characteristic-polynomial algorithm and what follows from
//! it: determinant, adjugate, inverse, interpolation recovery and the
//! Cayley–Hamilton residual.
//!
//! With `U(1) = U`:
//!
//! ```text
//! C(k)   = (N/k) <U(k)>_0
//! U(k+1) = U (U(k) - C(k))
//! Det(U) = -C(N),  Adj(U) = C(N-1) - U(N-1),  U^-1 = Adj(U) / Det(U)
//! ```

use crate::charpoly::CharPoly;
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::rational::Rational;

/// Intermediate elements of one run of the recursion.
#[derive(Clone, Debug)]
pub struct RecursionTrace {
    /// `U(1)..U(N)`.
    pub u_seq: Vec<Multivector>,
    /// `C(1)..C(N)`.
    pub c_seq: Vec<Rational>,
}

pub fn charpoly_recursive(u: &Multivector) -> (CharPoly, RecursionTrace) {
    let sig = u.signature();
    let big_n = sig.charpoly_degree();
    let mut u_seq = Vec::with_capacity(big_n);
    let mut c_seq = Vec::with_capacity(big_n);
    let mut uk = u.clone();
    for k in 1..=big_n {
        let ck = Rational::new(big_n as i128, k as i128) * uk.scalar_part();
        let next = u * &uk.add_scalar(&-&ck);
        u_seq.push(std::mem::replace(&mut uk, next));
        c_seq.push(ck);
    }
    let poly = CharPoly::for_signature(sig, c_seq.clone()).expect("N coefficients");
    (poly, RecursionTrace { u_seq, c_seq })
}

/// Coefficients only.
pub fn charpoly(u: &Multivector) -> CharPoly {
    charpoly_recursive(u).0
}

pub fn det(u: &Multivector) -> Rational {
    charpoly(u).det()
}

/// `Adj(U) = C(N-1) - U(N-1)`, so that `U Adj(U) = Det(U) e`.
pub fn adjugate(u: &Multivector) -> Multivector {
    let (_, trace) = charpoly_recursive(u);
    adjugate_from_trace(&trace)
}

fn adjugate_from_trace(trace: &RecursionTrace) -> Multivector {
    let big_n = trace.c_seq.len();
    let prev = &trace.u_seq[big_n - 2];
    (-prev).add_scalar(&trace.c_seq[big_n - 2])
}

/// `Adj(U) / Det(U)`; fails exactly when `Det(U) = 0`.
pub fn inverse(u: &Multivector) -> Result<Multivector> {
    let (poly, trace) = charpoly_recursive(u);
    let d = poly.det();
    if d.is_zero() {
        return Err(Error::SingularElement);
    }
    Ok(adjugate_from_trace(&trace).scale(&d.recip()?))
}

/// Recover the coefficients from values of `-Det(l e - U)` at `l = 0..=N`
/// by exact Newton interpolation.
pub fn charpoly_via_interpolation(u: &Multivector) -> CharPoly {
    let sig = u.signature();
    let big_n = sig.charpoly_degree();
    let nodes: Vec<Rational> = (0..=big_n).map(Rational::from).collect();
    let values: Vec<Rational> = nodes
        .iter()
        .map(|l| -det(&(-u).add_scalar(l)))
        .collect();
    let d = newton_interpolate(&nodes, &values);
    // D(l) = -phi(l) = -l^N + C(1) l^(N-1) + ... + C(N)
    debug_assert_eq!(d[big_n], Rational::from(-1));
    let coeffs = (1..=big_n).map(|k| d[big_n - k].clone()).collect();
    CharPoly::for_signature(sig, coeffs).expect("N coefficients")
}

/// Monomial coefficients (ascending powers) of the polynomial through the
/// points `(xs[i], ys[i])`, via divided differences.
pub fn newton_interpolate(xs: &[Rational], ys: &[Rational]) -> Vec<Rational> {
    assert_eq!(xs.len(), ys.len());
    let m = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..m {
        for i in (j..m).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    // Horner on the Newton form: p = dd[m-1]; p = p (x - x_i) + dd[i]
    let mut poly = vec![dd[m - 1].clone()];
    for i in (0..m - 1).rev() {
        let mut next = vec![Rational::zero(); poly.len() + 1];
        for (deg, c) in poly.iter().enumerate() {
            next[deg + 1] += c;
            next[deg] -= c * &xs[i];
        }
        next[0] += &dd[i];
        poly = next;
    }
    poly
}

/// `U^N - sum_i C(i) U^(N-i)`; identically zero.
pub fn cayley_hamilton_residual(u: &Multivector) -> Multivector {
    let poly = charpoly(u);
    let big_n = poly.degree();
    let mut powers = vec![Multivector::identity(u.signature())];
    for k in 1..=big_n {
        powers.push(&powers[k - 1] * u);
    }
    let mut residual = powers[big_n].clone();
    for (i, c) in poly.coeffs().iter().enumerate() {
        residual = &residual - &powers[big_n - (i + 1)].scale(c);
    }
    residual
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_multivector, seeded_rng};
    use crate::signature::Signature;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    fn ints(v: &[i128]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    fn binom(n: usize, k: usize) -> i128 {
        (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
    }

    #[test]
    fn identity_gives_signed_binomials() {
        for s in Signature::all_up_to(6) {
            let big_n = s.charpoly_degree();
            let expected: Vec<Rational> = (1..=big_n)
                .map(|i| Rational::from(if i % 2 == 1 { 1 } else { -1 } * binom(big_n, i)))
                .collect();
            assert_eq!(charpoly(&Multivector::identity(s)).coeffs(), &expected[..], "{s}");
        }
    }

    #[test]
    fn e1_in_cl20() {
        let s = sig(2, 0);
        let e1 = Multivector::generator(s, 1).unwrap();
        assert_eq!(charpoly(&e1).coeffs(), &ints(&[0, 1])[..]);
        assert_eq!(det(&e1), Rational::from(-1));
    }

    #[test]
    fn cl50_golden_examples() {
        let s = sig(5, 0);
        let u = Multivector::from_blades(s, &[&[1], &[5], &[1, 5]]).unwrap();
        assert_eq!(charpoly(&u).coeffs(), &ints(&[0, 4, 0, -6, 0, 4, 0, -1])[..]);

        let w = Multivector::from_blades(s, &[&[3], &[1, 2], &[1, 5], &[4, 5], &[2, 3, 4]])
            .unwrap();
        let c = charpoly(&w);
        assert!(c.get(1).is_zero());
        assert!(c.get(3).is_zero());
        assert_eq!(c.get(5), &Rational::from(-64));
    }

    #[test]
    fn trace_invariants() {
        let mut rng = seeded_rng(21);
        for s in Signature::all_up_to(5) {
            let u = random_multivector(s, &mut rng);
            let (poly, trace) = charpoly_recursive(&u);
            let big_n = s.charpoly_degree();
            assert_eq!(trace.u_seq[0], u);
            let last = &trace.u_seq[big_n - 1];
            assert!(last.is_scalar());
            assert_eq!(last.scalar_part(), &trace.c_seq[big_n - 1]);
            assert_eq!(
                poly.trace(),
                &(Rational::from(big_n) * u.scalar_part())
            );
        }
    }

    #[test]
    fn scalar_det_and_inverse() {
        let s = sig(1, 1);
        let two = Multivector::scalar(s, Rational::from(2));
        assert_eq!(det(&two), Rational::from(4));
        assert_eq!(
            inverse(&two).unwrap(),
            Multivector::scalar(s, Rational::new(1, 2))
        );
    }

    #[test]
    fn vector_inverse_in_cl20() {
        let s = sig(2, 0);
        let v = Multivector::from_blades(s, &[&[1], &[2]]).unwrap();
        assert_eq!(inverse(&v).unwrap(), v.scale(&Rational::new(1, 2)));
    }

    #[test]
    fn null_vector_is_singular() {
        let s = sig(1, 1);
        let v = Multivector::from_blades(s, &[&[1], &[2]]).unwrap();
        assert!(matches!(inverse(&v), Err(Error::SingularElement)));
    }

    #[test]
    fn adjugate_identity() {
        let mut rng = seeded_rng(22);
        for s in Signature::all_up_to(5) {
            let u = random_multivector(s, &mut rng);
            let adj = adjugate(&u);
            let d = det(&u);
            assert_eq!(&u * &adj, Multivector::scalar(s, d.clone()));
            assert_eq!(&adj * &u, Multivector::scalar(s, d));
        }
    }

    #[test]
    fn interpolation_matches_recursion() {
        let s = sig(2, 1);
        assert_eq!(
            charpoly_via_interpolation(&Multivector::identity(s)),
            charpoly(&Multivector::identity(s))
        );
        let u = Multivector::from_blades(sig(5, 0), &[&[1], &[5], &[1, 5]]).unwrap();
        assert_eq!(
            charpoly_via_interpolation(&u).coeffs(),
            &ints(&[0, 4, 0, -6, 0, 4, 0, -1])[..]
        );
        let mut rng = seeded_rng(23);
        for _ in 0..20 {
            let u = random_multivector(s, &mut rng);
            assert_eq!(charpoly_via_interpolation(&u), charpoly(&u));
        }
    }

    #[test]
    fn newton_recovers_known_polynomial() {
        // 3 - x + 2x^3
        let xs: Vec<Rational> = (0..4).map(Rational::from).collect();
        let ys: Vec<Rational> = xs
            .iter()
            .map(|x| Rational::from(3) - x + Rational::from(2) * x.pow(3))
            .collect();
        assert_eq!(newton_interpolate(&xs, &ys), ints(&[3, -1, 0, 2]));
    }

    #[test]
    fn cayley_hamilton_vanishes() {
        let s = sig(2, 0);
        assert!(cayley_hamilton_residual(&Multivector::identity(s)).is_zero());
        assert!(cayley_hamilton_residual(&Multivector::generator(s, 1).unwrap()).is_zero());
        let mut rng = seeded_rng(24);
        for _ in 0..10 {
            let u = random_multivector(sig(3, 0), &mut rng);
            assert!(cayley_hamilton_residual(&u).is_zero());
        }
    }

    #[test]
    fn powers_form_of_intermediates() {
        let mut rng = seeded_rng(25);
        for s in [sig(3, 1), sig(2, 3)] {
            let u = random_multivector(s, &mut rng);
            let (poly, trace) = charpoly_recursive(&u);
            let big_n = poly.degree();
            let powers: Vec<Multivector> = (0..=big_n as u32).map(|k| u.pow(k)).collect();
            for k in 1..=big_n {
                let mut expected = powers[k].clone();
                let mut ck = powers[k].scalar_part().clone();
                for i in 1..k {
                    expected = &expected - &powers[k - i].scale(poly.get(i));
                    ck -= poly.get(i) * powers[k - i].scalar_part();
                }
                assert_eq!(trace.u_seq[k - 1], expected);
                assert_eq!(poly.get(k), &(Rational::new(big_n as i128, k as i128) * ck));
            }
        }
    }
}
