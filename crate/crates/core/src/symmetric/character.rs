use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symmetric::{Partition, Permutation};
use crate::Rational;

/// One conjugacy class of 𝕊ₙ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub cycle_type: Partition,
    pub size: u64,
    pub representative: Permutation,
}

/// Classes in canonical partition order. The representative has its cycles
/// on consecutive blocks `1..k₁`, `k₁+1..k₁+k₂`, ….
pub fn conjugacy_classes(n: usize) -> Vec<ClassInfo> {
    let fact: u64 = (1..=n as u64).product();
    Partition::all(n)
        .into_iter()
        .map(|mu| {
            let mut map = Vec::with_capacity(n);
            let mut start = 1;
            for &k in mu.parts() {
                for j in 0..k {
                    map.push(start + (j + 1) % k);
                }
                start += k;
            }
            ClassInfo {
                size: fact / mu.centralizer_order(),
                representative: Permutation::from_map(&map).expect("block cycles"),
                cycle_type: mu,
            }
        })
        .collect()
}

/// A class function on 𝕊ₙ, one value per class in canonical order.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterVector {
    pub n: usize,
    #[serde(with = "crate::serde_rational::vec")]
    pub values: Vec<Rational>,
}

impl CharacterVector {
    pub fn zero(n: usize) -> Self {
        CharacterVector {
            n,
            values: vec![Rational::zero(); Partition::all(n).len()],
        }
    }

    /// Value at the identity class, which comes first in canonical order.
    pub fn degree(&self) -> &Rational {
        &self.values[0]
    }

    pub fn add(&self, other: &CharacterVector) -> CharacterVector {
        assert_eq!(self.n, other.n);
        CharacterVector {
            n: self.n,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> CharacterVector {
        CharacterVector {
            n: self.n,
            values: self.values.iter().map(|a| a * c).collect(),
        }
    }

    /// Class-weighted inner product `Σ |C|·χ(C)·ψ(C) / n!`.
    pub fn inner(&self, other: &CharacterVector) -> Rational {
        let table = character_table(self.n);
        let fact = Rational::from_integer(table.order().into());
        let mut acc = Rational::zero();
        for ((a, b), size) in self
            .values
            .iter()
            .zip(&other.values)
            .zip(&table.class_sizes)
        {
            acc += a * b * Rational::from_integer((*size).into());
        }
        acc / fact
    }
}

impl fmt::Debug for CharacterVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "χ[n={}]({})", self.n, vals.join(","))
    }
}

/// Irreducible characters of 𝕊ₙ; row and column order are both canonical.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    pub class_sizes: Vec<u64>,
    pub values: Vec<Vec<i64>>,
    class_index: HashMap<Partition, usize>,
}

impl CharacterTable {
    fn build(n: usize) -> Self {
        let partitions = Partition::all(n);
        let classes = conjugacy_classes(n);
        let mut memo = HashMap::new();
        let values = partitions
            .iter()
            .map(|lambda| {
                classes
                    .iter()
                    .map(|c| murnaghan_nakayama(lambda.parts(), c.cycle_type.parts(), &mut memo))
                    .collect()
            })
            .collect();
        let class_index = partitions
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        CharacterTable {
            n,
            class_sizes: classes.iter().map(|c| c.size).collect(),
            partitions,
            values,
            class_index,
        }
    }

    pub fn order(&self) -> u64 {
        (1..=self.n as u64).product()
    }

    pub fn class_of(&self, cycle_type: &Partition) -> usize {
        self.class_index[cycle_type]
    }

    pub fn index_of(&self, lambda: &Partition) -> Result<usize> {
        self.class_index.get(lambda).copied().ok_or_else(|| {
            Error::InvalidPartition(format!("{lambda} is not a partition of {}", self.n))
        })
    }

    /// χ_λ(σ) for a permutation σ.
    pub fn value(&self, lambda: usize, sigma: &Permutation) -> i64 {
        self.values[lambda][self.class_of(&sigma.cycle_type())]
    }

    pub fn character(&self, lambda: usize) -> CharacterVector {
        CharacterVector {
            n: self.n,
            values: self.values[lambda]
                .iter()
                .map(|&v| Rational::from_integer(v.into()))
                .collect(),
        }
    }

    pub fn dimension(&self, lambda: usize) -> u64 {
        self.values[lambda][0] as u64
    }
}

/// χ_λ(μ) by removing rim hooks of length `μ₁`, tracked on beta-sets.
fn murnaghan_nakayama(
    lambda: &[usize],
    mu: &[usize],
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>,
) -> i64 {
    if mu.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = mu[0];
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut next = beta.clone();
        next[idx] = b - r;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let reduced: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(i, &c)| c - (len - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        total += sign * murnaghan_nakayama(&reduced, &mu[1..], memo);
    }
    memo.insert(key, total);
    total
}

static TABLES: OnceLock<RwLock<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();

/// Cached character table of 𝕊ₙ.
pub fn character_table(n: usize) -> Arc<CharacterTable> {
    let cache = TABLES.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = cache.read().unwrap().get(&n) {
        return t.clone();
    }
    let table = Arc::new(CharacterTable::build(n));
    cache.write().unwrap().entry(n).or_insert(table).clone()
}

/// The sign character as a class function.
pub fn sign_character(n: usize) -> CharacterVector {
    let values = conjugacy_classes(n)
        .iter()
        .map(|c| Rational::from_integer(c.representative.sign().into()))
        .collect();
    CharacterVector { n, values }
}

/// The regular character: `n!` at the identity and zero elsewhere.
pub fn regular_character(n: usize) -> CharacterVector {
    let mut chi = CharacterVector::zero(n);
    chi.values[0] = Rational::from_integer(character_table(n).order().into());
    chi
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetric::hook_dimension;
    use num_traits::One;

    #[test]
    fn class_sizes() {
        let sizes: Vec<u64> = conjugacy_classes(3).iter().map(|c| c.size).collect();
        assert_eq!(sizes, [1, 3, 2]);
        let sizes: Vec<u64> = conjugacy_classes(4).iter().map(|c| c.size).collect();
        assert_eq!(sizes, [1, 6, 3, 8, 6]);
        assert_eq!(conjugacy_classes(1).len(), 1);
        for n in 1..=7 {
            let total: u64 = conjugacy_classes(n).iter().map(|c| c.size).sum();
            assert_eq!(total, (1..=n as u64).product::<u64>());
        }
    }

    #[test]
    fn representatives_have_their_cycle_type() {
        for n in 1..=7 {
            for c in conjugacy_classes(n) {
                assert_eq!(c.representative.cycle_type(), c.cycle_type);
            }
        }
    }

    #[test]
    fn orthonormal_rows() {
        for n in 1..=7 {
            let t = character_table(n);
            for a in 0..t.partitions.len() {
                for b in 0..t.partitions.len() {
                    let ip = t.character(a).inner(&t.character(b));
                    let expected = if a == b {
                        Rational::one()
                    } else {
                        Rational::zero()
                    };
                    assert_eq!(ip, expected, "n={n} {a} {b}");
                }
            }
        }
    }

    #[test]
    fn identity_column_is_hook_dimension() {
        for n in 1..=7 {
            let t = character_table(n);
            for (i, lambda) in t.partitions.iter().enumerate() {
                assert_eq!(t.dimension(i), hook_dimension(lambda));
            }
        }
    }

    #[test]
    fn sign_row() {
        for n in 1..=7 {
            let t = character_table(n);
            let ones = Partition::new(vec![1; n]).unwrap();
            assert_eq!(t.character(t.index_of(&ones).unwrap()), sign_character(n));
        }
    }

    #[test]
    fn small_values() {
        let t = character_table(3);
        let i = t.index_of(&"2,1".parse().unwrap()).unwrap();
        assert_eq!(t.values[i], [2, 0, -1]);
        let t = character_table(4);
        let dims: Vec<u64> = (0..5).map(|i| t.dimension(i)).collect();
        assert_eq!(dims, [1, 3, 2, 3, 1]);
    }
}
