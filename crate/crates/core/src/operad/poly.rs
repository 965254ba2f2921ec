//! Multilinear polynomials and the codec `σ ↦ x_{σ⁻¹(1)}⋯x_{σ⁻¹(n)}`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::operad::OperadElement;
use crate::symmetric::Permutation;
use crate::Rational;

/// A multilinear polynomial in `x₁,…,xₙ`, keyed by monomial words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultilinearPolynomial<T> {
    degree: usize,
    terms: BTreeMap<Vec<u8>, T>,
}

fn is_multilinear(word: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n + 1];
    word.len() == n
        && word
            .iter()
            .all(|&x| x >= 1 && x <= n && !std::mem::replace(&mut seen[x], true))
}

impl<T: Field> MultilinearPolynomial<T> {
    pub fn from_terms(
        degree: usize,
        terms: impl IntoIterator<Item = (Vec<usize>, T)>,
    ) -> Result<Self> {
        let mut out = MultilinearPolynomial {
            degree,
            terms: BTreeMap::new(),
        };
        for (w, c) in terms {
            if !is_multilinear(&w, degree) {
                return Err(Error::Invalid(format!(
                    "monomial {w:?} is not multilinear of degree {degree}"
                )));
            }
            out.add_term(w.into_iter().map(|x| x as u8).collect(), c);
        }
        Ok(out)
    }

    fn add_term(&mut self, w: Vec<u8>, c: T) {
        let s = self.terms.remove(&w).map_or(c.clone(), |x| x + c);
        if !s.is_zero() {
            self.terms.insert(w, s);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &T)> {
        self.terms
            .iter()
            .map(|(w, c)| (w.iter().map(|&x| x as usize).collect(), c))
    }

    /// Variable substitution `xᵢ ↦ x_{ρ⁻¹(i)}`, matching the right action on elements.
    pub fn act(&self, rho: &Permutation) -> Result<Self> {
        if rho.arity() != self.degree {
            return Err(Error::ArityMismatch(self.degree, rho.arity()));
        }
        let mut out = MultilinearPolynomial {
            degree: self.degree,
            terms: BTreeMap::new(),
        };
        for (w, c) in &self.terms {
            out.add_term(
                w.iter().map(|&x| rho.seq()[x as usize - 1]).collect(),
                c.clone(),
            );
        }
        Ok(out)
    }
}

/// Φ: element to polynomial.
pub fn phi<T: Field>(theta: &OperadElement<T>) -> MultilinearPolynomial<T> {
    MultilinearPolynomial {
        degree: theta.arity(),
        terms: theta
            .terms()
            .map(|(p, c)| (p.seq().to_vec(), c.clone()))
            .collect(),
    }
}

/// Ψ: polynomial to element.
pub fn psi<T: Field>(f: &MultilinearPolynomial<T>) -> OperadElement<T> {
    OperadElement::from_terms(
        f.degree,
        f.terms
            .iter()
            .map(|(w, c)| (Permutation::from_raw(w.clone()), c.clone())),
    )
    .expect("words are permutations of the degree")
}

type Words<T> = Vec<(Vec<u8>, T)>;

fn commutator<T: Field>(a: &Words<T>, b: &Words<T>) -> Words<T> {
    let mut out = Vec::with_capacity(2 * a.len() * b.len());
    for (u, c) in a {
        for (v, d) in b {
            let cd = c.clone() * d.clone();
            out.push(([u.as_slice(), v].concat(), cd.clone()));
            out.push(([v.as_slice(), u].concat(), -cd));
        }
    }
    out
}

/// Ψ of a product of left-normed commutators `[x_{a₁},…,x_{a_k}]⋯`.
pub fn proper_polynomial<T: Field>(brackets: &[Vec<usize>]) -> Result<OperadElement<T>> {
    let n: usize = brackets.iter().map(|b| b.len()).sum();
    let mut seen = vec![false; n + 1];
    for b in brackets {
        if b.len() < 2 {
            return Err(Error::Invalid(format!(
                "bracket {b:?} has fewer than two variables"
            )));
        }
        for &x in b {
            if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Invalid(format!(
                    "brackets {brackets:?} do not partition [{n}]"
                )));
            }
        }
    }
    let mut product: Words<T> = vec![(Vec::new(), T::one())];
    for b in brackets {
        let mut acc: Words<T> = vec![(vec![b[0] as u8], T::one())];
        for &x in &b[1..] {
            acc = commutator(&acc, &vec![(vec![x as u8], T::one())]);
        }
        product = product
            .iter()
            .flat_map(|(u, c)| {
                acc.iter()
                    .map(move |(v, d)| ([u.as_slice(), v].concat(), c.clone() * d.clone()))
            })
            .collect();
    }
    OperadElement::from_terms(
        n,
        product
            .into_iter()
            .map(|(w, c)| (Permutation::from_raw(w), c)),
    )
}

impl fmt::Display for MultilinearPolynomial<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let sep = match (k, c.is_negative()) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            write!(f, "{sep}")?;
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            if w.is_empty() {
                write!(f, "1")?;
            }
            let vars: Vec<String> = w.iter().map(|x| format!("x{x}")).collect();
            write!(f, "{}", vars.join("*"))?;
        }
        Ok(())
    }
}
