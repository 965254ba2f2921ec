//! Coordinate tables for the monomial maps between arities.
//!
//! Every elementary ideal move sends a basis permutation to a single basis
//! permutation, so it acts on coordinate vectors through an index table.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::linalg::Field;
use crate::operad::element::compose_perms;
use crate::symmetric::Permutation;

/// A monomial map on basis permutations of a fixed source arity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    /// `θ∘ᵢ𝟙₀` (1-based slot)
    Delete(usize),
    /// `θ∘ᵢ𝟙₂`
    Double(usize),
    /// `𝟙₂∘(θ,𝟙₁)`
    Append,
    /// `𝟙₂∘(𝟙₁,θ)`
    Prepend,
    /// `θ∗σ`
    Act(Permutation),
    /// `π^I` for a sorted 1-based subset
    Restrict(Vec<usize>),
    /// `ι^l_r(θ∘(𝟙_{b₁},…,𝟙_{bₘ}))`
    Substitute {
        left: usize,
        blocks: Vec<usize>,
        right: usize,
    },
}

impl Move {
    pub fn target_arity(&self, n: usize) -> usize {
        match self {
            Move::Delete(_) => n - 1,
            Move::Double(_) | Move::Append | Move::Prepend => n + 1,
            Move::Act(_) => n,
            Move::Restrict(s) => s.len(),
            Move::Substitute {
                left,
                blocks,
                right,
            } => left + blocks.iter().sum::<usize>() + right,
        }
    }

    fn image(&self, p: &Permutation) -> Permutation {
        let n = p.arity();
        match self {
            Move::Delete(i) | Move::Double(i) => {
                let units: Vec<Permutation> = (1..=n)
                    .map(|j| match (self, j == *i) {
                        (Move::Delete(_), true) => Permutation::identity(0),
                        (Move::Double(_), true) => Permutation::identity(2),
                        _ => Permutation::identity(1),
                    })
                    .collect();
                let refs: Vec<&Permutation> = units.iter().collect();
                compose_perms(p, &refs)
            }
            Move::Append => {
                let mut seq = p.seq().to_vec();
                seq.push(n as u8 + 1);
                Permutation::from_raw(seq)
            }
            Move::Prepend => {
                let mut seq = vec![1u8];
                seq.extend(p.seq().iter().map(|&s| s + 1));
                Permutation::from_raw(seq)
            }
            Move::Act(sigma) => p.mul_unchecked(sigma),
            Move::Restrict(subset) => {
                let mut label = vec![0u8; n + 1];
                for (k, &i) in subset.iter().enumerate() {
                    label[i] = k as u8 + 1;
                }
                let seq = p
                    .seq()
                    .iter()
                    .map(|&s| label[s as usize])
                    .filter(|&s| s > 0)
                    .collect();
                Permutation::from_raw(seq)
            }
            Move::Substitute {
                left,
                blocks,
                right,
            } => {
                let units: Vec<Permutation> =
                    blocks.iter().map(|&b| Permutation::identity(b)).collect();
                let refs: Vec<&Permutation> = units.iter().collect();
                let inner = compose_perms(p, &refs);
                let (l, m) = (*left as u8, inner.arity() as u8);
                let seq = (1..=l)
                    .chain(inner.seq().iter().map(|&s| s + l))
                    .chain(l + m + 1..=l + m + *right as u8)
                    .collect();
                Permutation::from_raw(seq)
            }
        }
    }

    /// The same map as an exact linear operator on elements.
    pub fn apply_element<T: Field>(
        &self,
        theta: &crate::operad::OperadElement<T>,
    ) -> crate::operad::OperadElement<T> {
        let target = self.target_arity(theta.arity());
        crate::operad::OperadElement::from_terms(
            target,
            theta.terms().map(|(p, c)| (self.image(p), c.clone())),
        )
        .expect("image arity is the target arity")
    }
}

type TableCache = RwLock<HashMap<(usize, Move), Arc<Vec<u32>>>>;

/// Index table of `mv` on arity `n`: source rank ↦ target rank.
pub fn move_table(n: usize, mv: &Move) -> Arc<Vec<u32>> {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (n, mv.clone());
    if let Some(t) = cache.read().unwrap().get(&key) {
        return t.clone();
    }
    let table: Vec<u32> = Permutation::all(n)
        .iter()
        .map(|p| mv.image(p).rank() as u32)
        .collect();
    let table = Arc::new(table);
    cache.write().unwrap().entry(key).or_insert(table).clone()
}

/// Applies an index table to a sparse integer vector, merging collisions.
pub fn apply_int(table: &[u32], v: &[(u32, i64)]) -> Vec<(u32, i64)> {
    let mut out: Vec<(u32, i64)> = v.iter().map(|&(c, x)| (table[c as usize], x)).collect();
    out.sort_unstable_by_key(|&(c, _)| c);
    let mut merged: Vec<(u32, i64)> = Vec::with_capacity(out.len());
    for (c, x) in out {
        match merged.last_mut() {
            Some((d, y)) if *d == c => *y = y.checked_add(x).expect("coefficient overflow"),
            _ => merged.push((c, x)),
        }
    }
    merged.retain(|&(_, x)| x != 0);
    merged
}

/// Applies an index table to a dense vector over a field.
pub fn apply_dense<T: Field>(table: &[u32], v: &[T], target_len: usize) -> Vec<T> {
    let mut out = vec![T::zero(); target_len];
    for (c, x) in v.iter().enumerate() {
        if !x.is_zero() {
            let t = table[c] as usize;
            out[t] = out[t].clone() + x.clone();
        }
    }
    out
}

/// Rank of `a·b` in 𝕊ₙ from ranks, through a cached multiplication table
/// for `n ≤ 6`.
pub fn mul_rank(n: usize, a: usize, b: usize) -> usize {
    static TABLES: OnceLock<RwLock<HashMap<usize, Arc<Vec<u16>>>>> = OnceLock::new();
    if n > 6 {
        let p = Permutation::unrank(n, a).mul_unchecked(&Permutation::unrank(n, b));
        return p.rank();
    }
    let cache = TABLES.get_or_init(|| RwLock::new(HashMap::new()));
    let size: usize = (1..=n).product();
    let table = {
        let hit = cache.read().unwrap().get(&n).cloned();
        match hit {
            Some(t) => t,
            None => {
                let perms = Permutation::all(n);
                let mut t = Vec::with_capacity(size * size);
                for a in &perms {
                    for b in &perms {
                        t.push(a.mul_unchecked(b).rank() as u16);
                    }
                }
                let t = Arc::new(t);
                cache.write().unwrap().entry(n).or_insert(t).clone()
            }
        }
    };
    table[a * size + b] as usize
}

/// Group algebra product `v·y` of sparse integer vectors.
pub fn right_multiply_int(n: usize, v: &[(u32, i64)], y: &[(u32, i64)]) -> Vec<(u32, i64)> {
    let size: usize = (1..=n).product();
    let mut acc = vec![0i128; size];
    for &(p, c) in v {
        for &(q, d) in y {
            acc[mul_rank(n, p as usize, q as usize)] += c as i128 * d as i128;
        }
    }
    acc.into_iter()
        .enumerate()
        .filter(|(_, x)| *x != 0)
        .map(|(i, x)| (i as u32, i64::try_from(x).expect("coefficient overflow")))
        .collect()
}

/// The two generators `(2,1,3,…,n)` and `(2,3,…,n,1)` of 𝕊ₙ (fewer for n < 3).
pub fn symmetric_generators(n: usize) -> Vec<Permutation> {
    if n < 2 {
        return Vec::new();
    }
    let mut swap: Vec<usize> = (1..=n).collect();
    swap.swap(0, 1);
    let cycle: Vec<usize> = (2..=n).chain([1]).collect();
    let mut gens = vec![Permutation::new(swap).expect("transposition")];
    if n > 2 {
        gens.push(Permutation::new(cycle).expect("cycle"));
    }
    gens
}

/// Sparse integer form of an element; `None` if a coefficient is not an
/// integer that fits `i64`.
pub fn to_sparse_int(theta: &crate::operad::Element) -> Option<Vec<(u32, i64)>> {
    use num_traits::ToPrimitive;
    let mut v: Vec<(u32, i64)> = theta
        .terms()
        .map(|(p, c)| {
            if !c.is_integer() {
                return None;
            }
            Some((p.rank() as u32, c.to_integer().to_i64()?))
        })
        .collect::<Option<_>>()?;
    v.sort_unstable_by_key(|&(c, _)| c);
    Some(v)
}

/// Primitive integer multiple of an element as a sparse vector.
pub fn to_primitive_sparse(theta: &crate::operad::Element) -> Option<Vec<(u32, i64)>> {
    let dense = theta.to_dense();
    let ints = crate::linalg::modular::primitive_integer(&dense)?;
    Some(
        ints.into_iter()
            .enumerate()
            .filter(|(_, x)| *x != 0)
            .map(|(c, x)| (c as u32, x))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::{Element, OperadElement};

    #[test]
    fn tables_match_element_operations() {
        let theta: Element = "(2,3,1) - 2*(1,3,2) + (3,2,1)".parse().unwrap();
        let unit0 = OperadElement::unit(0);
        let unit2 = OperadElement::unit(2);
        let cases: Vec<(Move, Element)> = vec![
            (Move::Delete(2), theta.partial(2, &unit0).unwrap()),
            (Move::Double(1), theta.partial(1, &unit2).unwrap()),
            (
                Move::Append,
                unit2
                    .compose(&[theta.clone(), OperadElement::unit(1)])
                    .unwrap(),
            ),
            (
                Move::Prepend,
                unit2
                    .compose(&[OperadElement::unit(1), theta.clone()])
                    .unwrap(),
            ),
            (
                Move::Act("(3,1,2)".parse().unwrap()),
                theta.act(&"(3,1,2)".parse().unwrap()).unwrap(),
            ),
            (Move::Restrict(vec![1, 3]), theta.restrict(&[1, 3]).unwrap()),
            (
                Move::Substitute {
                    left: 1,
                    blocks: vec![2, 0, 1],
                    right: 2,
                },
                theta
                    .compose(&[
                        OperadElement::unit(2),
                        OperadElement::unit(0),
                        OperadElement::unit(1),
                    ])
                    .unwrap()
                    .iota(1, 2),
            ),
        ];
        let v = to_sparse_int(&theta).unwrap();
        for (mv, expected) in cases {
            assert_eq!(mv.apply_element(&theta), expected, "{mv:?}");
            let table = move_table(3, &mv);
            let got = apply_int(&table, &v);
            assert_eq!(got, to_sparse_int(&expected).unwrap(), "{mv:?}");
            let dense = apply_dense(&table, &theta.to_dense(), expected.to_dense().len());
            assert_eq!(dense, expected.to_dense());
        }
    }

    #[test]
    fn multiplication_table() {
        let perms = Permutation::all(4);
        for a in [0, 5, 17, 23] {
            for b in [1, 9, 22] {
                assert_eq!(mul_rank(4, a, b), perms[a].mul_unchecked(&perms[b]).rank());
            }
        }
        let v = vec![(3u32, 2i64)];
        let y = vec![(0u32, 1i64), (5, -1)];
        let got = right_multiply_int(3, &v, &y);
        let mut expected = vec![(3u32, 2i64), (mul_rank(3, 3, 5) as u32, -2)];
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn generators() {
        assert_eq!(symmetric_generators(1).len(), 0);
        assert_eq!(symmetric_generators(2).len(), 1);
        let g = symmetric_generators(4);
        assert_eq!(g[0].to_string(), "(2,1,3,4)");
        assert_eq!(g[1].to_string(), "(2,3,4,1)");
    }
}
