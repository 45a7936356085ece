//! Basis-free coefficient formulas for `n <= 6`.
//!
//! Every coefficient is a signed sum of one generator function `F` of `N`
//! arguments over all tuples with `k` copies of `U` and `N-k` copies of `e`:
//!
//! ```text
//! C(k) = (-1)^(k+1) * sum_{X in X(k)} F(X)
//! ```
//!
//! `F` is stored as an expression tree so that tuple sums can reuse every
//! sub-product that only depends on part of the tuple.

mod explicit;
mod terms;

use std::collections::HashMap;
use std::rc::Rc;

use itertools::Itertools;

use crate::charpoly::CharPoly;
use crate::conjugation::ConjugationSpec;
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::rational::Rational;
use crate::signature::Signature;

pub use explicit::{charpoly_explicit, explicit_coefficients};

#[derive(Clone, Debug)]
enum Node {
    /// Argument `slot` under a conjugation.
    Arg { slot: usize, conj: ConjugationSpec },
    Mul(usize, usize),
    Triangle(usize),
}

/// The generator function `F` for one dimension `n`.
#[derive(Clone, Debug)]
pub struct GeneratorForm {
    dim: usize,
    arity: usize,
    nodes: Vec<Node>,
    /// Bit set of argument slots each node depends on.
    deps: Vec<u32>,
    /// Weighted roots; `F = sum w_i * root_i`.
    terms: Vec<(Rational, usize)>,
}

struct Builder {
    nodes: Vec<Node>,
    deps: Vec<u32>,
}

impl Builder {
    fn push(&mut self, node: Node, deps: u32) -> usize {
        self.nodes.push(node);
        self.deps.push(deps);
        self.nodes.len() - 1
    }

    fn x(&mut self, slot: usize) -> usize {
        self.arg(slot, ConjugationSpec::IDENTITY)
    }
    fn hat(&mut self, slot: usize) -> usize {
        self.arg(slot, ConjugationSpec::grade_involution())
    }
    fn tilde(&mut self, slot: usize) -> usize {
        self.arg(slot, ConjugationSpec::reversion())
    }
    fn hat_tilde(&mut self, slot: usize) -> usize {
        self.arg(slot, ConjugationSpec::clifford_conjugation())
    }

    fn arg(&mut self, slot: usize, conj: ConjugationSpec) -> usize {
        self.push(Node::Arg { slot, conj }, 1 << slot)
    }

    /// Left-nested product of the factors.
    fn mul(&mut self, factors: &[usize]) -> usize {
        let mut acc = factors[0];
        for &f in &factors[1..] {
            let deps = self.deps[acc] | self.deps[f];
            acc = self.push(Node::Mul(acc, f), deps);
        }
        acc
    }

    fn tri(&mut self, a: usize) -> usize {
        let deps = self.deps[a];
        self.push(Node::Triangle(a), deps)
    }
}

impl GeneratorForm {
    /// `F` for dimension `n` (1..=6).
    pub fn for_dim(dim: usize) -> Result<Self> {
        let mut b = Builder {
            nodes: Vec::new(),
            deps: Vec::new(),
        };
        let one = Rational::one();
        let (arity, terms) = match dim {
            // x1 hat(x2)
            1 => {
                let f = [b.x(0), b.hat(1)];
                (2, vec![(one, b.mul(&f))])
            }
            // x1 hat-tilde(x2)
            2 => {
                let f = [b.x(0), b.hat_tilde(1)];
                (2, vec![(one, b.mul(&f))])
            }
            // x1 hat(x2) tilde(x3) hat-tilde(x4)
            3 => {
                let f = [b.x(0), b.hat(1), b.tilde(2), b.hat_tilde(3)];
                (4, vec![(one, b.mul(&f))])
            }
            // x1 hat-tilde(x2) (hat(x3) tilde(x4))^T
            4 => {
                let inner = [b.hat(2), b.tilde(3)];
                let inner = b.mul(&inner);
                let f = [b.x(0), b.hat_tilde(1), b.tri(inner)];
                (4, vec![(one, b.mul(&f))])
            }
            // x1 hat-tilde(x2) hat(x3) tilde(x4) (hat(x5) tilde(x6) x7 hat-tilde(x8))^T
            5 => {
                let inner = [b.hat(4), b.tilde(5), b.x(6), b.hat_tilde(7)];
                let inner = b.mul(&inner);
                let f = [
                    b.x(0),
                    b.hat_tilde(1),
                    b.hat(2),
                    b.tilde(3),
                    b.tri(inner),
                ];
                (8, vec![(one, b.mul(&f))])
            }
            // 1/3 x1 tilde(x2) hat(x3) hat-tilde(x4) (hat(x5) hat-tilde(x6) x7 tilde(x8))^T
            // + 2/3 x1 tilde(x2) ((hat(x3) hat-tilde(x4))^T
            //       ((hat(x5) hat-tilde(x6))^T (x7 tilde(x8))^T)^T)^T
            6 => {
                let inner = [b.hat(4), b.hat_tilde(5), b.x(6), b.tilde(7)];
                let inner = b.mul(&inner);
                let first = [
                    b.x(0),
                    b.tilde(1),
                    b.hat(2),
                    b.hat_tilde(3),
                    b.tri(inner),
                ];
                let first = b.mul(&first);

                let a = [b.hat(2), b.hat_tilde(3)];
                let a = b.mul(&a);
                let a = b.tri(a);
                let bb = [b.hat(4), b.hat_tilde(5)];
                let bb = b.mul(&bb);
                let bb = b.tri(bb);
                let c = [b.x(6), b.tilde(7)];
                let c = b.mul(&c);
                let c = b.tri(c);
                let bc = b.mul(&[bb, c]);
                let bc = b.tri(bc);
                let abc = b.mul(&[a, bc]);
                let abc = b.tri(abc);
                let second = [b.x(0), b.tilde(1), abc];
                let second = b.mul(&second);
                (
                    8,
                    vec![(Rational::new(1, 3), first), (Rational::new(2, 3), second)],
                )
            }
            _ => {
                return Err(Error::UnsupportedDimension {
                    operation: "generator form",
                    dim,
                })
            }
        };
        Ok(GeneratorForm {
            dim,
            arity,
            nodes: b.nodes,
            deps: b.deps,
            terms,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of arguments, equal to `N`.
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// `F(xs)` for arbitrary arguments.
    pub fn evaluate(&self, xs: &[Multivector]) -> Result<Multivector> {
        if xs.len() != self.arity {
            return Err(Error::ArityMismatch {
                dim: self.dim,
                expected: self.arity,
                found: xs.len(),
            });
        }
        let sig = xs[0].signature();
        if sig.dim() != self.dim {
            return Err(Error::UnsupportedDimension {
                operation: "generator form of another dimension",
                dim: sig.dim(),
            });
        }
        for x in xs {
            if x.signature() != sig {
                return Err(Error::SignatureMismatch {
                    left: sig,
                    right: x.signature(),
                });
            }
        }
        let mut values: Vec<Option<Multivector>> = vec![None; self.nodes.len()];
        for (i, node) in self.nodes.iter().enumerate() {
            let v = match node {
                Node::Arg { slot, conj } => xs[*slot].conjugate(*conj),
                Node::Mul(a, b) => {
                    values[*a].as_ref().unwrap() * values[*b].as_ref().unwrap()
                }
                Node::Triangle(a) => values[*a].as_ref().unwrap().triangle(),
            };
            values[i] = Some(v);
        }
        let mut out = Multivector::zero(sig);
        for (w, root) in &self.terms {
            out = &out + &values[*root].as_ref().unwrap().scale(w);
        }
        Ok(out)
    }
}

/// All tuples with `k` copies of `U` among `arity` slots, as bit sets
/// (bit `i` set means slot `i` holds `U`), in lexicographic order of the
/// positions of `U`.
#[derive(Clone, Debug)]
pub struct TupleSet {
    arity: usize,
    k: usize,
    masks: Vec<u32>,
}

impl TupleSet {
    pub fn new(arity: usize, k: usize) -> Self {
        let masks = (0..arity)
            .combinations(k)
            .map(|pos| pos.iter().fold(0u32, |m, &i| m | (1 << i)))
            .collect();
        TupleSet { arity, k, masks }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn masks(&self) -> &[u32] {
        &self.masks
    }

    /// The tuples themselves, built from `u` and `e`.
    pub fn tuples<'a>(&'a self, u: &'a Multivector) -> impl Iterator<Item = Vec<Multivector>> + 'a {
        let e = Multivector::identity(u.signature());
        self.masks.iter().map(move |&m| {
            (0..self.arity)
                .map(|i| if m >> i & 1 == 1 { u.clone() } else { e.clone() })
                .collect()
        })
    }
}

/// Evaluates `F` on `{e, U}` tuples, sharing sub-products between tuples.
///
/// `None` stands for the identity `e`, which every conjugation fixes.
struct TupleEvaluator<'a> {
    form: &'a GeneratorForm,
    conjugates: HashMap<ConjugationSpec, Rc<Multivector>>,
    memo: HashMap<(usize, u32), Option<Rc<Multivector>>>,
}

impl<'a> TupleEvaluator<'a> {
    fn new(form: &'a GeneratorForm, u: &Multivector) -> Self {
        let mut conjugates = HashMap::new();
        for node in &form.nodes {
            if let Node::Arg { conj, .. } = node {
                conjugates
                    .entry(*conj)
                    .or_insert_with(|| Rc::new(u.conjugate(*conj)));
            }
        }
        TupleEvaluator {
            form,
            conjugates,
            memo: HashMap::new(),
        }
    }

    fn eval(&mut self, node: usize, mask: u32) -> Option<Rc<Multivector>> {
        let key = (node, mask & self.form.deps[node]);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let v = match &self.form.nodes[node] {
            Node::Arg { slot, conj } => {
                (mask >> slot & 1 == 1).then(|| self.conjugates[conj].clone())
            }
            Node::Mul(a, b) => {
                let (a, b) = (*a, *b);
                match (self.eval(a, mask), self.eval(b, mask)) {
                    (None, y) => y,
                    (x, None) => x,
                    (Some(x), Some(y)) => Some(Rc::new(&*x * &*y)),
                }
            }
            Node::Triangle(a) => self.eval(*a, mask).map(|x| Rc::new(x.triangle())),
        };
        self.memo.insert(key, v.clone());
        v
    }

    fn tuple_sum(&mut self, tuples: &TupleSet) -> Multivector {
        let sig = self
            .conjugates
            .values()
            .next()
            .expect("form has arguments")
            .signature();
        let terms = self.form.terms.clone();
        let mut acc = Multivector::zero(sig);
        for (weight, root) in &terms {
            let mut partial = Multivector::zero(sig);
            for &mask in tuples.masks() {
                partial = match self.eval(*root, mask) {
                    Some(v) => &partial + &*v,
                    None => partial.add_scalar(&Rational::one()),
                };
            }
            acc = &acc + &partial.scale(weight);
        }
        acc
    }
}

fn check_closed_dim(sig: Signature, operation: &'static str) -> Result<GeneratorForm> {
    if sig.dim() > 6 {
        return Err(Error::UnsupportedDimension {
            operation,
            dim: sig.dim(),
        });
    }
    GeneratorForm::for_dim(sig.dim())
}

/// `F(args)` for the dimension of the arguments' signature.
pub fn generator_f(xs: &[Multivector]) -> Result<Multivector> {
    let first = xs.first().ok_or(Error::ArityMismatch {
        dim: 0,
        expected: 1,
        found: 0,
    })?;
    check_closed_dim(first.signature(), "generator form")?.evaluate(xs)
}

/// The multivector-valued right-hand sides of the tuple-sum formulas, one per
/// `k = 1..=N`, before any projection onto grade 0.
pub fn closed_coefficients(u: &Multivector) -> Result<Vec<Multivector>> {
    let sig = u.signature();
    let form = check_closed_dim(sig, "closed-form coefficients")?;
    let mut eval = TupleEvaluator::new(&form, u);
    Ok((1..=form.arity)
        .map(|k| {
            let sum = eval.tuple_sum(&TupleSet::new(form.arity, k));
            if k % 2 == 1 {
                sum
            } else {
                -sum
            }
        })
        .collect())
}

/// Coefficients from the tuple-sum formulas; every `C(k)` must come out as a
/// pure scalar.
pub fn charpoly_closed(u: &Multivector) -> Result<CharPoly> {
    let values = closed_coefficients(u)?;
    scalars_of(u.signature(), values)
}

pub(crate) fn scalars_of(sig: Signature, values: Vec<Multivector>) -> Result<CharPoly> {
    let mut coeffs = Vec::with_capacity(values.len());
    for (i, v) in values.into_iter().enumerate() {
        if !v.is_scalar() {
            return Err(Error::NonScalarCoefficient { k: i + 1 });
        }
        coeffs.push(v.scalar_part().clone());
    }
    CharPoly::for_signature(sig, coeffs)
}
