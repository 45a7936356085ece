use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// `re + im i` with exact rational parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ComplexRational {
    pub re: Rational,
    pub im: Rational,
}

impl ComplexRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        ComplexRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        ComplexRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::real(Rational::zero())
    }

    pub fn one() -> Self {
        Self::real(Rational::one())
    }

    /// `i^k`.
    pub fn i_pow(k: u8) -> Self {
        let (re, im) = match k % 4 {
            0 => (1, 0),
            1 => (0, 1),
            2 => (-1, 0),
            _ => (0, -1),
        };
        ComplexRational::new(Rational::from(re), Rational::from(im))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ComplexRational::new(&self.re * c, &self.im * c)
    }

    /// Multiply by `i^k`.
    pub fn rotate(&self, k: u8) -> Self {
        match k % 4 {
            0 => self.clone(),
            1 => ComplexRational::new(-&self.im, self.re.clone()),
            2 => -self,
            _ => ComplexRational::new(self.im.clone(), -&self.re),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        let norm = &self.re * &self.re + &self.im * &self.im;
        let inv = norm.recip()?;
        Ok(ComplexRational::new(&self.re * &inv, -(&self.im * &inv)))
    }
}

impl Add for &ComplexRational {
    type Output = ComplexRational;
    fn add(self, rhs: Self) -> ComplexRational {
        ComplexRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &ComplexRational {
    type Output = ComplexRational;
    fn sub(self, rhs: Self) -> ComplexRational {
        ComplexRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &ComplexRational {
    type Output = ComplexRational;
    fn mul(self, rhs: Self) -> ComplexRational {
        ComplexRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> ComplexRational {
        ComplexRational::new(-&self.re, -&self.im)
    }
}

impl fmt::Display for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) if self.im.is_negative() => {
                write!(f, "{}-{}i", self.re, self.im.abs())
            }
            _ => write!(f, "{}+{}i", self.re, self.im),
        }
    }
}

impl fmt::Debug for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Dense square matrix over [`ComplexRational`], row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<ComplexRational>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        ComplexMatrix {
            dim,
            entries: vec![ComplexRational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = ComplexRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<ComplexRational>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::MatrixSize {
                    expected: dim,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(ComplexMatrix { dim, entries })
    }

    /// Real integer matrix, handy in tests.
    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| ComplexRational::real(Rational::from(x)))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &ComplexRational {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: ComplexRational) {
        self.entries[row * self.dim + col] = value;
    }

    pub(crate) fn entry_mut(&mut self, row: usize, col: usize) -> &mut ComplexRational {
        &mut self.entries[row * self.dim + col]
    }

    pub fn trace(&self) -> ComplexRational {
        (0..self.dim).fold(ComplexRational::zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn add_scalar(&self, c: &ComplexRational) -> Self {
        let mut out = self.clone();
        for i in 0..self.dim {
            let v = out.get(i, i) + c;
            out.set(i, i, v);
        }
        out
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::MatrixSize {
                expected: self.dim,
                found: other.dim,
            });
        }
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = &out.entries[i * n + j] + &(a * b);
                        out.entries[i * n + j] = v;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Determinant by exact Gaussian elimination.
    pub fn determinant(&self) -> ComplexRational {
        let n = self.dim;
        let mut a = self.clone();
        let mut det = ComplexRational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return ComplexRational::zero();
            };
            if pivot != col {
                for j in 0..n {
                    a.entries.swap(pivot * n + j, col * n + j);
                }
                det = -&det;
            }
            let p = a.get(col, col).clone();
            det = &det * &p;
            let inv = p.recip().expect("nonzero pivot");
            for r in col + 1..n {
                let f = a.get(r, col) * &inv;
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = a.get(r, j) - &(&f * a.get(col, j));
                    a.set(r, j, v);
                }
            }
        }
        det
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: Self) -> ComplexMatrix {
        self.try_mul(rhs).expect("matrix sizes differ")
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: Self) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix sizes differ");
        ComplexMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{}", self.dim, self.dim)?;
        for r in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: i64, im: i64) -> ComplexRational {
        ComplexRational::new(Rational::from(re), Rational::from(im))
    }

    #[test]
    fn complex_field_ops() {
        assert_eq!(&c(1, 2) * &c(3, -1), c(5, 5));
        assert_eq!(&c(1, 2) * &c(1, 2).recip().unwrap(), c(1, 0));
        assert_eq!(c(2, 3).rotate(1), &c(2, 3) * &ComplexRational::i_pow(1));
        assert_eq!(c(2, 3).rotate(3), &c(2, 3) * &ComplexRational::i_pow(3));
        assert!(c(0, 0).recip().is_err());
        assert_eq!(c(1, -2).to_string(), "1-2i");
    }

    #[test]
    fn determinant_by_elimination() {
        let m = ComplexMatrix::from_int_rows(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]).unwrap();
        assert_eq!(m.determinant(), c(-2, 0));
        let s = ComplexMatrix::from_int_rows(&[&[1, 2], &[2, 4]]).unwrap();
        assert!(s.determinant().is_zero());
        assert!(ComplexMatrix::from_int_rows(&[&[1, 2], &[3]]).is_err());
    }
}
