use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::symmetric::Permutation;

/// An element of `𝒰𝒜𝓈(n) = 𝕜𝕊ₙ`: a sparse combination of permutations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OperadElement<T> {
    arity: usize,
    terms: BTreeMap<Permutation, T>,
}

/// Block substitution on basis elements: position `k` of `outer` holding
/// variable `s` expands to `inners[s]` shifted by the arities before it.
pub(crate) fn compose_perms(outer: &Permutation, inners: &[&Permutation]) -> Permutation {
    let mut offsets = Vec::with_capacity(inners.len());
    let mut acc = 0u8;
    for p in inners {
        offsets.push(acc);
        acc += p.arity() as u8;
    }
    let mut seq = Vec::with_capacity(acc as usize);
    for s in outer.seq() {
        let i = *s as usize - 1;
        seq.extend(inners[i].seq().iter().map(|&x| x + offsets[i]));
    }
    Permutation::from_raw(seq)
}

fn check_subset(subset: &[usize], n: usize) -> Result<Vec<bool>> {
    let mut inside = vec![false; n + 1];
    for &i in subset {
        if i == 0 || i > n || inside[i] {
            return Err(Error::BadSubset(subset.to_vec(), n));
        }
        inside[i] = true;
    }
    Ok(inside)
}

impl<T: Field> OperadElement<T> {
    pub fn zero(arity: usize) -> Self {
        OperadElement {
            arity,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `𝟙ₙ`, i.e. the identity permutation.
    pub fn unit(arity: usize) -> Self {
        Self::basis(Permutation::identity(arity))
    }

    pub fn basis(sigma: Permutation) -> Self {
        Self::monomial(sigma, T::one())
    }

    pub fn monomial(sigma: Permutation, c: T) -> Self {
        let mut e = Self::zero(sigma.arity());
        if !c.is_zero() {
            e.terms.insert(sigma, c);
        }
        e
    }

    /// Sums repeated permutations and drops zeros.
    pub fn from_terms(
        arity: usize,
        terms: impl IntoIterator<Item = (Permutation, T)>,
    ) -> Result<Self> {
        let mut e = Self::zero(arity);
        for (p, c) in terms {
            if p.arity() != arity {
                return Err(Error::ArityMismatch(arity, p.arity()));
            }
            e.add_term(p, c);
        }
        Ok(e)
    }

    pub(crate) fn add_term(&mut self, p: Permutation, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(x) => {
                let s = x.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&p);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(p, c);
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &T)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, sigma: &Permutation) -> T {
        self.terms.get(sigma).cloned().unwrap_or_else(T::zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(self.arity, other.arity));
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_terms(|p, c| (p.clone(), -c.clone()))
    }

    pub fn scale(&self, s: &T) -> Self {
        if s.is_zero() {
            return Self::zero(self.arity);
        }
        self.map_terms(|p, c| (p.clone(), c.clone() * s.clone()))
    }

    fn map_terms(&self, f: impl Fn(&Permutation, &T) -> (Permutation, T)) -> Self {
        let mut out = Self::zero(self.arity);
        for (p, c) in &self.terms {
            let (q, d) = f(p, c);
            out.add_term(q, d);
        }
        out
    }

    /// Right action `θ∗σ`.
    pub fn act(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.arity() != self.arity {
            return Err(Error::ArityMismatch(self.arity, sigma.arity()));
        }
        Ok(self.map_terms(|p, c| (p.mul_unchecked(sigma), c.clone())))
    }

    /// Product in the group algebra, `θ∗x = Σ c_π θ∗π`.
    pub fn act_by(&self, x: &Self) -> Result<Self> {
        if x.arity != self.arity {
            return Err(Error::ArityMismatch(self.arity, x.arity));
        }
        let mut out = Self::zero(self.arity);
        for (p, c) in &self.terms {
            for (q, d) in &x.terms {
                out.add_term(p.mul_unchecked(q), c.clone() * d.clone());
            }
        }
        Ok(out)
    }

    /// Operadic composition `θ∘(ν₁,…,νₙ)`.
    pub fn compose(&self, inners: &[OperadElement<T>]) -> Result<Self> {
        if inners.len() != self.arity {
            return Err(Error::LengthMismatch {
                expected: self.arity,
                got: inners.len(),
            });
        }
        let arity = inners.iter().map(|e| e.arity).sum();
        let mut out = Self::zero(arity);
        if inners.iter().any(|e| e.is_zero()) {
            return Ok(out);
        }
        let lists: Vec<Vec<(&Permutation, &T)>> =
            inners.iter().map(|e| e.terms.iter().collect()).collect();
        let mut idx = vec![0usize; inners.len()];
        for (p, c) in &self.terms {
            idx.iter_mut().for_each(|i| *i = 0);
            loop {
                let picks: Vec<&Permutation> =
                    idx.iter().zip(&lists).map(|(&i, l)| l[i].0).collect();
                let coeff = idx
                    .iter()
                    .zip(&lists)
                    .fold(c.clone(), |acc, (&i, l)| acc * l[i].1.clone());
                out.add_term(compose_perms(p, &picks), coeff);
                // odometer over the inner term lists
                let mut k = 0;
                while k < idx.len() {
                    idx[k] += 1;
                    if idx[k] < lists[k].len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
                if k == idx.len() {
                    break;
                }
            }
        }
        Ok(out)
    }

    /// Partial composition `θ∘ᵢν` with 1-based slot `i`.
    pub fn partial(&self, i: usize, nu: &OperadElement<T>) -> Result<Self> {
        if i == 0 || i > self.arity {
            return Err(Error::SlotOutOfRange(i, self.arity));
        }
        let inners: Vec<Self> = (1..=self.arity)
            .map(|j| if j == i { nu.clone() } else { Self::unit(1) })
            .collect();
        self.compose(&inners)
    }

    /// Restriction `π^I`: delete the variables outside `I` and compress.
    pub fn restrict(&self, subset: &[usize]) -> Result<Self> {
        let inside = check_subset(subset, self.arity)?;
        let mut label = vec![0u8; self.arity + 1];
        let mut next = 0;
        for i in 1..=self.arity {
            if inside[i] {
                next += 1;
                label[i] = next;
            }
        }
        let mut out = Self::zero(next as usize);
        for (p, c) in &self.terms {
            let seq = p
                .seq()
                .iter()
                .filter(|&&s| inside[s as usize])
                .map(|&s| label[s as usize])
                .collect();
            out.add_term(Permutation::from_raw(seq), c.clone());
        }
        Ok(out)
    }

    /// Extension `Δ_I`: each variable in `I` becomes two adjacent variables.
    pub fn extend(&self, subset: &[usize]) -> Result<Self> {
        let inside = check_subset(subset, self.arity)?;
        let inners: Vec<Self> = (1..=self.arity)
            .map(|i| Self::unit(if inside[i] { 2 } else { 1 }))
            .collect();
        self.compose(&inners)
    }

    /// `ι^l_r(θ) = 𝟙₃∘(𝟙_l, θ, 𝟙_r)`.
    pub fn iota(&self, l: usize, r: usize) -> Self {
        let n = self.arity as u8;
        let (l8, r8) = (l as u8, r as u8);
        let mut out = Self::zero(l + self.arity + r);
        for (p, c) in &self.terms {
            let seq = (1..=l8)
                .chain(p.seq().iter().map(|&s| s + l8))
                .chain(l8 + n + 1..=l8 + n + r8)
                .collect();
            out.terms.insert(Permutation::from_raw(seq), c.clone());
        }
        out
    }

    /// Coordinates in the lexicographic basis of 𝕊ₙ.
    pub fn to_dense(&self) -> Vec<T> {
        let size: usize = (1..=self.arity).product();
        let mut v = vec![T::zero(); size];
        for (p, c) in &self.terms {
            v[p.rank()] = c.clone();
        }
        v
    }

    pub fn from_dense(arity: usize, v: &[T]) -> Result<Self> {
        let size: usize = (1..=arity).product();
        if v.len() != size {
            return Err(Error::LengthMismatch {
                expected: size,
                got: v.len(),
            });
        }
        let mut e = Self::zero(arity);
        for (r, c) in v.iter().enumerate() {
            if !c.is_zero() {
                e.terms.insert(Permutation::unrank(arity, r), c.clone());
            }
        }
        Ok(e)
    }
}

impl<T: Field> fmt::Debug for OperadElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0[{}]", self.arity);
        }
        let parts: Vec<String> = self.terms.iter().map(|(p, c)| format!("{c}*{p}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type E = OperadElement<Rational>;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn e(s: &str) -> E {
        s.parse().unwrap()
    }

    #[test]
    fn block_composition() {
        let outer = E::basis(p("(2,1)"));
        let inner = E::basis(p("(1,2)"));
        assert_eq!(
            outer.compose(&[inner.clone(), inner]).unwrap(),
            e("(3,4,1,2)")
        );
        let got = E::unit(2).compose(&[E::unit(1), E::unit(0)]).unwrap();
        assert_eq!(got, E::unit(1));
        assert_eq!(E::unit(2).partial(1, &E::unit(2)).unwrap(), E::unit(3));
        assert_eq!(E::unit(2).partial(2, &E::unit(2)).unwrap(), E::unit(3));
    }

    #[test]
    fn partial_compositions() {
        let tau = e("(1,2) - (2,1)");
        assert_eq!(
            tau.partial(1, &tau).unwrap(),
            e("(1,2,3) - (2,1,3) - (3,1,2) + (3,2,1)")
        );
        assert_eq!(tau.partial(1, &E::unit(0)).unwrap(), E::zero(1));
        let theta = e("2*(3,1,2) - (1,3,2)");
        for i in 1..=3 {
            assert_eq!(theta.partial(i, &E::unit(1)).unwrap(), theta);
        }
        assert!(matches!(
            theta.partial(4, &tau),
            Err(Error::SlotOutOfRange(4, 3))
        ));
        assert!(theta.compose(&[E::unit(1)]).is_err());
    }

    #[test]
    fn restriction_and_extension() {
        assert_eq!(
            E::basis(p("(3,1,2)")).restrict(&[1, 2]).unwrap(),
            E::unit(2)
        );
        let tau3 = e("(1,2,3) - (2,1,3) - (3,1,2) + (3,2,1)");
        for i in [[1, 2], [1, 3], [2, 3]] {
            assert!(tau3.restrict(&i).unwrap().is_zero());
        }
        assert_eq!(tau3.restrict(&[1, 2, 3]).unwrap(), tau3);
        assert!(tau3.restrict(&[4]).is_err());
        assert_eq!(E::basis(p("(2,1)")).extend(&[1]).unwrap(), e("(3,1,2)"));
    }

    #[test]
    fn iota_padding() {
        let tau = e("(1,2) - (2,1)");
        assert_eq!(tau.iota(0, 0), tau);
        assert_eq!(
            tau.iota(0, 1),
            E::unit(2).compose(&[tau.clone(), E::unit(1)]).unwrap()
        );
        assert_eq!(tau.iota(1, 2), e("(1,2,3,4,5) - (1,3,2,4,5)"));
    }

    #[test]
    fn action_is_right_action() {
        let theta = e("(2,1,3) + 1/2*(3,2,1)");
        let a = p("(2,3,1)");
        let b = p("(2,1,3)");
        let lhs = theta.act(&a).unwrap().act(&b).unwrap();
        assert_eq!(lhs, theta.act(&a.multiply(&b).unwrap()).unwrap());
        assert_eq!(theta.act(&Permutation::identity(3)).unwrap(), theta);
        assert_eq!(theta.act(&a).unwrap().act(&a.inverse()).unwrap(), theta);
        let x = e("(2,3,1) - 2*(2,1,3)");
        let expected = theta
            .act(&a)
            .unwrap()
            .sub(
                &theta
                    .act(&b)
                    .unwrap()
                    .scale(&Rational::from_integer(2.into())),
            )
            .unwrap();
        assert_eq!(theta.act_by(&x).unwrap(), expected);
        assert!(theta.act_by(&e("(1,2)")).is_err());
    }

    #[test]
    fn dense_round_trip() {
        let theta = e("(2,1,3) - 3*(3,2,1)");
        let v = theta.to_dense();
        assert_eq!(v.len(), 6);
        assert_eq!(E::from_dense(3, &v).unwrap(), theta);
    }
}
