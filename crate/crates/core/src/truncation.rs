//! Truncation ideals `ᵏ𝔘`, the γ-sequence, Specht bases and the basis
//! theorem sets.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::IntSpanBuilder;
use crate::operad::index::to_sparse_int;
use crate::operad::{tau_composition, Element, OperadElement};
use crate::symmetric::{c_permutation, Permutation};
use crate::QSubspace;

/// Largest arity handled by the dense component computations.
pub const CAPACITY: usize = if cfg!(feature = "arity7") { 7 } else { 6 };

pub(crate) fn check_window(n: usize) -> Result<()> {
    if n > CAPACITY {
        return Err(Error::WindowExceeded(n, CAPACITY));
    }
    Ok(())
}

pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// `γₙ = Σₛ (−1)^{n−s} s! C(n,s)`, the number of derangements of `[n]`.
pub fn gamma(n: usize) -> u64 {
    let mut acc: i128 = 0;
    let mut fact: i128 = 1;
    for s in 0..=n {
        if s > 0 {
            fact *= s as i128;
        }
        let term = fact * binomial(n, s) as i128;
        acc += if (n - s) % 2 == 0 { term } else { -term };
    }
    acc as u64
}

/// `dim ᵏ𝔘(n)`.
pub fn truncation_dim(k: usize, n: usize) -> u64 {
    if n < k {
        return 0;
    }
    (k..=n).map(|i| binomial(n, i) * gamma(i)).sum()
}

/// Span of elements of a common arity, exactly.
pub fn span_elements(arity: usize, elems: &[Element]) -> QSubspace {
    let size: usize = (1..=arity).product();
    let mut b = IntSpanBuilder::new(size);
    let mut rational = Vec::new();
    for e in elems {
        assert_eq!(e.arity(), arity, "arity mismatch in span");
        match to_sparse_int(e).or_else(|| crate::operad::index::to_primitive_sparse(e)) {
            Some(v) => {
                b.offer_sparse(v);
            }
            None => rational.push(e.to_dense()),
        }
    }
    let s = b.finish();
    if rational.is_empty() {
        return s;
    }
    let mut rows = s.rows();
    rows.extend(rational);
    QSubspace::span(size, rows)
}

/// Basis rows of a subspace of `ℚ𝕊ₙ` as elements.
pub fn subspace_elements(arity: usize, s: &QSubspace) -> Vec<Element> {
    s.rows()
        .iter()
        .map(|r| OperadElement::from_dense(arity, r).expect("ambient is n!"))
        .collect()
}

type Cache = RwLock<HashMap<(usize, usize), Arc<QSubspace>>>;

/// `ᵏ𝔘(n) = ⋂_{|I|=k−1} ker π^I`, computed as the annihilator of the fibre
/// indicators of all restrictions.
pub fn truncation_kernel(k: usize, n: usize) -> Result<Arc<QSubspace>> {
    check_window(n)?;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(s) = cache.read().unwrap().get(&(k, n)) {
        return Ok(s.clone());
    }
    let size: usize = (1..=n).product();
    let s = if n < k {
        QSubspace::zero(size)
    } else if k == 0 {
        QSubspace::full(size)
    } else {
        let perms = Permutation::all(n);
        let mut b = IntSpanBuilder::new(size);
        for subset in subsets(n, k - 1) {
            let mv = crate::operad::Move::Restrict(subset);
            let table = crate::operad::index::move_table(n, &mv);
            let fibres = (1..k).product::<usize>();
            let mut rows = vec![Vec::new(); fibres];
            for (i, _) in perms.iter().enumerate() {
                rows[table[i] as usize].push((i as u32, 1i64));
            }
            for row in rows {
                b.offer_sparse(row);
            }
        }
        b.finish().orthogonal_complement()
    };
    let s = Arc::new(s);
    Ok(cache.write().unwrap().entry((k, n)).or_insert(s).clone())
}

/// All `r`-subsets of `[n]` (1-based) in lexicographic order.
pub fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            if n - i + 1 < r - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, r, &mut Vec::new(), &mut out);
    out
}

/// Index `(k₁ ≤ … ≤ k_m; σ)` of a Specht basis element `τ_{k₁,…,k_m}∗σ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SpechtIndex {
    pub composition: Vec<usize>,
    #[serde(serialize_with = "crate::truncation::serialize_display")]
    pub sigma: Permutation,
}

pub(crate) fn serialize_display<D: fmt::Display, S: serde::Serializer>(
    v: &D,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl SpechtIndex {
    /// The commutator blocks as variable lists, e.g. `[[2,1],[4,3]]`.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut pos = 0;
        for &k in &self.composition {
            out.push(
                self.sigma.seq()[pos..pos + k]
                    .iter()
                    .map(|&s| s as usize)
                    .collect(),
            );
            pos += k;
        }
        out
    }

    /// Specht length: the largest block length.
    pub fn length(&self) -> usize {
        self.composition.last().copied().unwrap_or(0)
    }

    pub fn element(&self) -> Element {
        tau_composition(&self.composition)
            .act(&self.sigma)
            .expect("composition weight is the arity")
    }
}

impl fmt::Display for SpechtIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ks: Vec<String> = self.composition.iter().map(|k| k.to_string()).collect();
        write!(f, "tau[{}]*{}", ks.join(","), self.sigma)
    }
}

/// Nondecreasing compositions of `n` with parts ≥ 2, lexicographic.
fn specht_compositions(n: usize) -> Vec<Vec<usize>> {
    fn rec(rem: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for k in min..=rem {
            cur.push(k);
            rec(rem - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 2 {
        rec(n, 2, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

fn is_specht_index(composition: &[usize], sigma: &Permutation) -> bool {
    let seq = sigma.seq();
    let mut pos = 0;
    let mut prev: Option<(usize, u8)> = None;
    for &k in composition {
        let block = &seq[pos..pos + k];
        let head = block[0];
        if block.iter().any(|&x| x > head) {
            return false;
        }
        if let Some((pk, ph)) = prev {
            if pk == k && ph > head {
                return false;
            }
        }
        prev = Some((k, head));
        pos += k;
    }
    true
}

/// Specht indices of arity `n` in canonical order.
pub fn specht_indices(n: usize) -> Result<Vec<SpechtIndex>> {
    check_window(n)?;
    let perms = Permutation::all(n);
    let mut out = Vec::new();
    for composition in specht_compositions(n) {
        for sigma in &perms {
            if is_specht_index(&composition, sigma) {
                out.push(SpechtIndex {
                    composition: composition.clone(),
                    sigma: sigma.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// The Specht basis of `ⁿ𝔘(n)`.
pub fn specht_basis(n: usize) -> Result<Vec<(SpechtIndex, Element)>> {
    Ok(specht_indices(n)?
        .into_iter()
        .map(|idx| {
            let e = idx.element();
            (idx, e)
        })
        .collect())
}

/// Basis of the top piece `ᵏ𝔘(k)`: `{𝟙₀}` for k = 0 and the Specht basis otherwise.
fn top_basis(k: usize) -> Result<Vec<Element>> {
    if k == 0 {
        return Ok(vec![OperadElement::unit(0)]);
    }
    Ok(specht_basis(k)?.into_iter().map(|(_, e)| e).collect())
}

/// `Lie(n)`, spanned by the Dynkin elements.
pub fn lie_component(n: usize) -> Result<QSubspace> {
    check_window(n)?;
    if n == 0 {
        return Ok(QSubspace::zero(1));
    }
    let elems: Vec<Element> = Permutation::all(n - 1)
        .iter()
        .map(crate::operad::dynkin)
        .collect();
    Ok(span_elements(n, &elems))
}

/// `𝐁ₖ(n) = {𝟙₂∘(θ, 𝟙_{n−k})∗c_I}` over the basis θ of `ᵏ𝔘(k)` and `|I| = n−k`.
pub fn basis_theorem_sets(k: usize, n: usize) -> Result<Vec<Element>> {
    check_window(n)?;
    if k > n {
        return Ok(Vec::new());
    }
    basis_from_top(&top_basis(k)?, n)
}

/// Pads each arity-k element by `𝟙₂∘(θ, 𝟙_{n−k})` and spreads it by all `c_I`.
pub fn basis_from_top(top: &[Element], n: usize) -> Result<Vec<Element>> {
    let mut out = Vec::new();
    for subset in top
        .first()
        .map_or(Vec::new(), |t| subsets(n, n - t.arity()))
    {
        let c = c_permutation(&subset, n)?;
        for theta in top {
            out.push(theta.iota(0, n - theta.arity()).act(&c)?);
        }
    }
    Ok(out)
}

/// `Mₜⁿ`: span of Specht basis elements of length at least `t`.
pub fn specht_filtration(n: usize, t: usize) -> Result<QSubspace> {
    if t < 2 || t > n {
        return Err(Error::Invalid(format!(
            "filtration index {t} outside 2..={n}"
        )));
    }
    let elems: Vec<Element> = specht_basis(n)?
        .into_iter()
        .filter(|(idx, _)| idx.length() >= t)
        .map(|(_, e)| e)
        .collect();
    Ok(span_elements(n, &elems))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_values() {
        let g: Vec<u64> = (0..=7).map(gamma).collect();
        assert_eq!(g, [1, 0, 1, 2, 9, 44, 265, 1854]);
    }

    #[test]
    fn truncation_dims() {
        assert_eq!(truncation_dim(3, 4), 17);
        assert_eq!(truncation_dim(5, 6), 529);
        assert_eq!(truncation_dim(4, 3), 0);
        assert_eq!(truncation_dim(0, 3), 6);
    }

    #[test]
    fn small_kernels() {
        assert_eq!(truncation_kernel(3, 3).unwrap().dim(), 2);
        assert_eq!(truncation_kernel(4, 4).unwrap().dim(), 9);
        assert_eq!(truncation_kernel(3, 4).unwrap().dim(), 17);
        assert_eq!(truncation_kernel(5, 4).unwrap().dim(), 0);
        assert_eq!(truncation_kernel(0, 3).unwrap().dim(), 6);
        assert_eq!(truncation_kernel(1, 3).unwrap().dim(), 5);
        assert!(truncation_kernel(2, CAPACITY + 1).is_err());
    }

    #[test]
    fn specht_listing() {
        let idx = specht_indices(4).unwrap();
        let text: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
        assert_eq!(
            text,
            [
                "tau[2,2]*(2,1,4,3)",
                "tau[2,2]*(3,1,4,2)",
                "tau[2,2]*(3,2,4,1)",
                "tau[4]*(4,1,2,3)",
                "tau[4]*(4,1,3,2)",
                "tau[4]*(4,2,1,3)",
                "tau[4]*(4,2,3,1)",
                "tau[4]*(4,3,1,2)",
                "tau[4]*(4,3,2,1)",
            ]
        );
        assert_eq!(specht_indices(2).unwrap().len(), 1);
        let five = specht_indices(5).unwrap();
        assert_eq!(five.iter().filter(|i| i.composition == [2, 3]).count(), 20);
        assert_eq!(five.iter().filter(|i| i.composition == [5]).count(), 24);
    }

    #[test]
    fn subsets_in_order() {
        assert_eq!(subsets(3, 2), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(subsets(2, 3).len(), 0);
    }

    #[test]
    fn filtration_dims() {
        let dims: Vec<usize> = (2..=4)
            .map(|t| specht_filtration(4, t).unwrap().dim())
            .collect();
        assert_eq!(dims, [9, 6, 6]);
        assert_eq!(specht_filtration(4, 4).unwrap(), lie_component(4).unwrap());
    }

    #[test]
    fn basis_sets() {
        assert_eq!(basis_theorem_sets(0, 3).unwrap(), vec![Element::unit(3)]);
        assert_eq!(basis_theorem_sets(2, 4).unwrap().len(), 6);
        assert_eq!(basis_theorem_sets(1, 4).unwrap().len(), 0);
    }
}
