use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::symmetric::Partition;

/// A permutation of `[n]` stored as the sequence `(σ⁻¹(1), …, σ⁻¹(n))`.
///
/// The sequence is the word `x_{seq[1]} … x_{seq[n]}` of the associated
/// multilinear monomial. Ordering is lexicographic on the sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    seq: Vec<u8>,
}

impl Permutation {
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        let n = seq.len();
        if n > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("arity {n} too large")));
        }
        let mut seen = vec![false; n + 1];
        for &s in &seq {
            if s == 0 || s > n || seen[s] {
                return Err(Error::InvalidPermutation(format!("{seq:?}")));
            }
            seen[s] = true;
        }
        Ok(Permutation {
            seq: seq.into_iter().map(|s| s as u8).collect(),
        })
    }

    pub(crate) fn from_raw(seq: Vec<u8>) -> Self {
        debug_assert!(Permutation::new(seq.iter().map(|&s| s as usize).collect()).is_ok());
        Permutation { seq }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            seq: (1..=n as u8).collect(),
        }
    }

    /// Builds σ from its map form `map[i-1] = σ(i)`.
    pub fn from_map(map: &[usize]) -> Result<Self> {
        let n = map.len();
        let mut seq = vec![0usize; n];
        for (i, &m) in map.iter().enumerate() {
            if m == 0 || m > n || seq[m - 1] != 0 {
                return Err(Error::InvalidPermutation(format!("map {map:?}")));
            }
            seq[m - 1] = i + 1;
        }
        Permutation::new(seq)
    }

    pub fn to_map(&self) -> Vec<usize> {
        let mut map = vec![0; self.arity()];
        for (k, &s) in self.seq.iter().enumerate() {
            map[s as usize - 1] = k + 1;
        }
        map
    }

    pub fn arity(&self) -> usize {
        self.seq.len()
    }

    pub fn seq(&self) -> &[u8] {
        &self.seq
    }

    /// The sequence entries as 1-based indices.
    pub fn entries(&self) -> impl Iterator<Item = usize> + '_ {
        self.seq.iter().map(|&s| s as usize)
    }

    /// `seq[k]` for 1-based `k`, i.e. σ⁻¹(k).
    pub fn at(&self, k: usize) -> usize {
        self.seq[k - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.seq
            .iter()
            .enumerate()
            .all(|(k, &s)| s as usize == k + 1)
    }

    pub fn inverse(&self) -> Self {
        Permutation {
            seq: self.to_map().into_iter().map(|m| m as u8).collect(),
        }
    }

    /// Group product with `θ∗(ab) = (θ∗a)∗b`.
    pub fn multiply(&self, other: &Permutation) -> Result<Permutation> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch(self.arity(), other.arity()));
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            seq: self
                .seq
                .iter()
                .map(|&s| other.seq[s as usize - 1])
                .collect(),
        }
    }

    pub fn sign(&self) -> i64 {
        let n = self.arity();
        let mut seen = vec![false; n];
        let mut parity = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.seq[j] as usize - 1;
                len += 1;
            }
            parity += len - 1;
        }
        if parity % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.arity();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.seq[j] as usize - 1;
                len += 1;
            }
            parts.push(len);
        }
        Partition::from_unsorted(parts)
    }

    /// Position of this permutation in the lexicographic listing of 𝕊ₙ.
    pub fn rank(&self) -> usize {
        let n = self.arity();
        let mut used = 0u64;
        let mut rank = 0;
        for (k, &s) in self.seq.iter().enumerate() {
            let smaller = (1..s).filter(|&t| used & (1 << t) == 0).count();
            rank = rank * (n - k) + smaller;
            used |= 1 << s;
        }
        rank
    }

    /// Inverse of [`Permutation::rank`].
    pub fn unrank(n: usize, mut rank: usize) -> Permutation {
        let mut fact = vec![1usize; n + 1];
        for i in 1..=n {
            fact[i] = fact[i - 1] * i;
        }
        let mut avail: Vec<u8> = (1..=n as u8).collect();
        let mut seq = Vec::with_capacity(n);
        for k in (0..n).rev() {
            let q = rank / fact[k];
            rank %= fact[k];
            seq.push(avail.remove(q));
        }
        Permutation { seq }
    }

    /// All of 𝕊ₙ in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let total: usize = (1..=n).product();
        (0..total).map(|r| Permutation::unrank(n, r)).collect()
    }
}

/// The permutation `c_I`: `[n]∖I` ascending followed by `I` ascending.
pub fn c_permutation(subset: &[usize], n: usize) -> Result<Permutation> {
    let mut inside = vec![false; n + 1];
    for &i in subset {
        if i == 0 || i > n {
            return Err(Error::BadSubset(subset.to_vec(), n));
        }
        inside[i] = true;
    }
    let seq: Vec<usize> = (1..=n)
        .filter(|&i| !inside[i])
        .chain((1..=n).filter(|&i| inside[i]))
        .collect();
    Permutation::new(seq)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, s) in self.seq.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidPermutation(s.to_string()))?;
        if inner.trim().is_empty() {
            return Ok(Permutation::identity(0));
        }
        let seq = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPermutation(s.to_string()))?;
        Permutation::new(seq)
    }
}
