//! Exact characteristic polynomial coefficients, determinants and inverses of
//! multivectors in real Clifford algebras `Cl(p,q)`.
//!
//! ```
//! use cliffchar::{charpoly, Multivector, Signature};
//!
//! let sig = Signature::new(5, 0).unwrap();
//! let u = Multivector::from_blades(sig, &[&[1], &[5], &[1, 5]]).unwrap();
//! assert_eq!(charpoly(&u).to_string(), "[0,4,0,-6,0,4,0,-1]");
//! ```

pub mod charpoly;
pub mod closed;
pub mod conjugation;
pub mod error;
pub mod multivector;
pub mod oracle;
pub mod random;
pub mod rational;
pub mod recursive;
pub mod signature;
pub mod special;

use std::fmt;
use std::str::FromStr;

pub use charpoly::CharPoly;
pub use closed::{
    charpoly_closed, charpoly_explicit, closed_coefficients, explicit_coefficients, generator_f,
    GeneratorForm, TupleSet,
};
pub use conjugation::ConjugationSpec;
pub use error::{Error, Result};
pub use multivector::Multivector;
pub use oracle::{
    beta, build_representation, matrix_charpoly, oracle_charpoly, oracle_compare,
    oracle_compare_with, ComplexMatrix, ComplexRational, OracleReport, PathOutcome,
    Representation,
};
pub use rational::Rational;
pub use recursive::{
    adjugate, cayley_hamilton_residual, charpoly, charpoly_recursive, charpoly_via_interpolation,
    det, inverse, RecursionTrace,
};
pub use signature::{blade_product, BladeIndex, Signature};
pub use special::{
    charpoly_involutory, charpoly_rotor, charpoly_scalar, is_rotor, random_rotor,
    random_rotor_with,
};

/// The interchangeable ways of computing the coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Recursive,
    Closed,
    Explicit,
    Interpolation,
    Oracle,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Recursive,
        Method::Closed,
        Method::Explicit,
        Method::Interpolation,
        Method::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Recursive => "recursive",
            Method::Closed => "closed",
            Method::Explicit => "explicit",
            Method::Interpolation => "interp",
            Method::Oracle => "oracle",
        }
    }

    /// Whether this method handles dimension `n`.
    pub fn supports(self, dim: usize) -> bool {
        match self {
            Method::Closed => dim <= 6,
            Method::Explicit => dim == 4 || dim == 5,
            _ => true,
        }
    }

    pub fn compute(self, u: &Multivector) -> Result<CharPoly> {
        match self {
            Method::Recursive => Ok(charpoly(u)),
            Method::Closed => charpoly_closed(u),
            Method::Explicit => charpoly_explicit(u),
            Method::Interpolation => Ok(charpoly_via_interpolation(u)),
            Method::Oracle => oracle_charpoly(u, &build_representation(u.signature())),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s || (s == "interpolation" && *m == Method::Interpolation))
            .ok_or_else(|| format!("unknown method {s:?}"))
    }
}
