//! The literal `n = 4` and `n = 5` coefficient formulas, evaluated term by term.

use std::collections::HashMap;

use super::scalars_of;
use super::terms::{TERMS_N4, TERMS_N5};
use crate::charpoly::CharPoly;
use crate::error::{Error, Result};
use crate::multivector::Multivector;

#[derive(Clone, Debug, PartialEq)]
enum Factor {
    Atom(char),
    Group(Vec<Factor>, bool),
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
}

impl Parser<'_> {
    fn product(&mut self) -> Vec<Factor> {
        let mut out = Vec::new();
        while let Some(&c) = self.chars.peek() {
            let factor = match c {
                'U' | 'H' | 'T' | 'C' => {
                    self.chars.next();
                    Factor::Atom(c)
                }
                '(' => {
                    self.chars.next();
                    let inner = self.product();
                    assert_eq!(self.chars.next(), Some(')'), "unbalanced term");
                    Factor::Group(inner, false)
                }
                ')' => break,
                _ => panic!("bad term character {c:?}"),
            };
            if self.chars.peek() == Some(&'^') {
                self.chars.next();
                out.push(match factor {
                    Factor::Group(inner, _) => Factor::Group(inner, true),
                    atom => Factor::Group(vec![atom], true),
                });
            } else {
                out.push(factor);
            }
        }
        out
    }
}

fn parse_term(term: &str) -> Vec<Factor> {
    let mut p = Parser {
        chars: term.chars().peekable(),
    };
    let out = p.product();
    assert!(p.chars.next().is_none(), "trailing input in {term}");
    out
}

struct Evaluator {
    atoms: [Multivector; 4],
    memo: HashMap<String, Multivector>,
}

impl Evaluator {
    fn new(u: &Multivector) -> Self {
        Evaluator {
            atoms: [u.clone(), u.hat(), u.tilde(), u.hat_tilde()],
            memo: HashMap::new(),
        }
    }

    fn atom(&self, c: char) -> &Multivector {
        &self.atoms[match c {
            'U' => 0,
            'H' => 1,
            'T' => 2,
            _ => 3,
        }]
    }

    /// Product of `factors`, memoized on every prefix.
    fn product(&mut self, factors: &[Factor], key: &str) -> Multivector {
        if let Some(v) = self.memo.get(key) {
            return v.clone();
        }
        let (last, init) = factors.split_last().expect("non-empty product");
        let last_value = match last {
            Factor::Atom(c) => self.atom(*c).clone(),
            Factor::Group(inner, tri) => {
                let v = self.product(inner, &render(inner));
                if *tri {
                    v.triangle()
                } else {
                    v
                }
            }
        };
        let value = if init.is_empty() {
            last_value
        } else {
            &self.product(init, &render(init)) * &last_value
        };
        self.memo.insert(key.to_string(), value.clone());
        value
    }
}

fn render(factors: &[Factor]) -> String {
    let mut s = String::new();
    for f in factors {
        match f {
            Factor::Atom(c) => s.push(*c),
            Factor::Group(inner, tri) => {
                s.push('(');
                s.push_str(&render(inner));
                s.push(')');
                if *tri {
                    s.push('^');
                }
            }
        }
    }
    s
}

fn term_lists(dim: usize) -> Result<&'static [&'static [&'static str]]> {
    match dim {
        4 => Ok(&TERMS_N4),
        5 => Ok(&TERMS_N5),
        _ => Err(Error::UnsupportedDimension {
            operation: "explicit formulas",
            dim,
        }),
    }
}

/// The multivector values of the explicit formulas, `C(1)..C(N)`.
pub fn explicit_coefficients(u: &Multivector) -> Result<Vec<Multivector>> {
    let lists = term_lists(u.signature().dim())?;
    let mut eval = Evaluator::new(u);
    let mut out = Vec::with_capacity(lists.len());
    for (i, terms) in lists.iter().enumerate() {
        let mut sum = Multivector::zero(u.signature());
        for term in terms.iter() {
            let factors = parse_term(term);
            let key = render(&factors);
            sum = &sum + &eval.product(&factors, &key);
        }
        out.push(if i % 2 == 0 { sum } else { -sum });
    }
    Ok(out)
}

/// Coefficients from the explicit formulas (`n` in `{4, 5}` only).
pub fn charpoly_explicit(u: &Multivector) -> Result<CharPoly> {
    let values = explicit_coefficients(u)?;
    scalars_of(u.signature(), values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed::charpoly_closed;
    use crate::random::{random_multivector, seeded_rng};
    use crate::rational::Rational;
    use crate::recursive::charpoly;
    use crate::signature::Signature;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn parses_groups_and_triangles() {
        assert_eq!(
            parse_term("UC(HT)^"),
            vec![
                Factor::Atom('U'),
                Factor::Atom('C'),
                Factor::Group(vec![Factor::Atom('H'), Factor::Atom('T')], true)
            ]
        );
        assert_eq!(render(&parse_term("H^")), "(H)^");
    }

    #[test]
    fn term_counts_are_binomial() {
        for (lists, big_n) in [(&TERMS_N4[..], 4), (&TERMS_N5[..], 8)] {
            for (i, terms) in lists.iter().enumerate() {
                assert_eq!(terms.len(), binom(big_n, i + 1));
                let mut sorted: Vec<_> = terms.to_vec();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), terms.len(), "duplicate term in C({})", i + 1);
            }
        }
    }

    #[test]
    fn identity_in_cl13() {
        let s = Signature::new(1, 3).unwrap();
        let expected: Vec<Rational> = [4, -6, 4, -1].map(Rational::from).to_vec();
        assert_eq!(
            charpoly_explicit(&Multivector::identity(s)).unwrap().coeffs(),
            &expected[..]
        );
    }

    #[test]
    fn golden_cl50() {
        let s = Signature::new(5, 0).unwrap();
        let u = Multivector::from_blades(s, &[&[1], &[5], &[1, 5]]).unwrap();
        let expected: Vec<Rational> = [0, 4, 0, -6, 0, 4, 0, -1].map(Rational::from).to_vec();
        assert_eq!(charpoly_explicit(&u).unwrap().coeffs(), &expected[..]);
    }

    #[test]
    fn agrees_with_other_paths() {
        let mut rng = seeded_rng(41);
        for (p, q) in [(4, 1), (2, 2), (0, 5)] {
            let s = Signature::new(p, q).unwrap();
            for _ in 0..3 {
                let u = random_multivector(s, &mut rng);
                let explicit = charpoly_explicit(&u).unwrap();
                assert_eq!(explicit, charpoly(&u));
                assert_eq!(explicit, charpoly_closed(&u).unwrap());
            }
        }
    }

    #[test]
    fn other_dimensions_rejected() {
        let s = Signature::new(3, 0).unwrap();
        assert!(matches!(
            charpoly_explicit(&Multivector::identity(s)),
            Err(Error::UnsupportedDimension { .. })
        ));
    }
}
