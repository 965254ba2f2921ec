use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::operad::index::{apply_int, move_table, to_primitive_sparse};
use crate::operad::{Element, Move};
use crate::rep::{check_submodule, cyclic_generator, spin, SparseInt};
use crate::truncation::{check_window, truncation_kernel};
use crate::QSubspace;

/// One generator of an operadic ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Element(Element),
    /// An 𝕊-submodule of `ℚ𝕊ₘ`, standing for all of its elements.
    Module {
        arity: usize,
        space: Arc<QSubspace>,
    },
}

impl Generator {
    pub fn arity(&self) -> usize {
        match self {
            Generator::Element(e) => e.arity(),
            Generator::Module { arity, .. } => *arity,
        }
    }

    /// A single element generating the same ideal.
    fn cyclic(&self) -> Result<Option<Element>> {
        match self {
            Generator::Element(e) if e.is_zero() => Ok(None),
            Generator::Element(e) => Ok(Some(e.clone())),
            Generator::Module { space, .. } if space.is_zero() => Ok(None),
            Generator::Module { arity, space } => {
                static CACHE: OnceLock<RwLock<HashMap<Arc<QSubspace>, Element>>> = OnceLock::new();
                let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
                if let Some(e) = cache.read().unwrap().get(space) {
                    return Ok(Some(e.clone()));
                }
                let g = if space.is_full() {
                    Element::unit(*arity)
                } else {
                    cyclic_generator(space, 0)?
                };
                cache.write().unwrap().insert(space.clone(), g.clone());
                Ok(Some(g))
            }
        }
    }
}

/// Generators of an operadic ideal plus an optional certified tail `K`
/// asserting `ᴷ𝔘 ⊆ ℐ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IdealPresentation {
    pub generators: Vec<Generator>,
    pub tail: Option<usize>,
}

impl IdealPresentation {
    pub fn new() -> Self {
        Self::default()
    }

    /// `⟨θ⟩`
    pub fn element(theta: Element) -> Self {
        IdealPresentation {
            generators: vec![Generator::Element(theta)],
            tail: None,
        }
    }

    /// `⟨M⟩` for a submodule `M ⊆ ℚ𝕊ₘ`.
    pub fn module(arity: usize, space: QSubspace) -> Result<Self> {
        let size: usize = (1..=arity).product();
        if space.ambient() != size {
            return Err(Error::AmbientMismatch(size, space.ambient()));
        }
        check_submodule(&space)?;
        Ok(IdealPresentation {
            generators: vec![Generator::Module {
                arity,
                space: Arc::new(space),
            }],
            tail: None,
        })
    }

    /// The truncation ideal `ᵏ𝔘`, held entirely by the tail.
    pub fn truncation(k: usize) -> Self {
        IdealPresentation {
            generators: Vec::new(),
            tail: Some(k),
        }
    }

    /// `⟨ᵏ𝔘(k)⟩`
    pub fn truncation_module(k: usize) -> Result<Self> {
        let u = truncation_kernel(k, k)?;
        Ok(IdealPresentation {
            generators: vec![Generator::Module { arity: k, space: u }],
            tail: None,
        })
    }

    pub fn with_tail(mut self, k: usize) -> Self {
        self.tail = Some(self.tail.map_or(k, |t| t.min(k)));
        self
    }

    /// The sum of two ideals.
    pub fn plus(&self, other: &IdealPresentation) -> Self {
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().cloned());
        let tail = match (self.tail, other.tail) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        IdealPresentation { generators, tail }
    }

    pub fn max_arity(&self) -> usize {
        self.generators
            .iter()
            .map(Generator::arity)
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for IdealPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .generators
            .iter()
            .map(|g| match g {
                Generator::Element(e) => format!("<{e}>"),
                Generator::Module { arity, space } => format!("<M{arity}:{}>", space.dim()),
            })
            .collect();
        if let Some(k) = self.tail {
            parts.push(format!("U({k})"));
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// All ways to write `total` as an ordered sum of `parts` nonnegative
/// integers.
pub(crate) fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=left {
            cur.push(x);
            rec(left - x, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, parts, &mut Vec::new(), &mut out);
    out
}

/// The single-occurrence composites `ι^l_r(g∘(𝟙_{b₁},…,𝟙_{bₘ}))` of arity
/// `n`, as sparse integer vectors.
pub(crate) fn composite_seeds(g: &Element, n: usize) -> Result<Vec<SparseInt>> {
    let m = g.arity();
    let v = to_primitive_sparse(g)
        .ok_or_else(|| Error::Unsupported("generator coefficients exceed i64".into()))?;
    let mut seeds: Vec<SparseInt> = weak_compositions(n, m + 2)
        .into_iter()
        .map(|c| {
            let mv = Move::Substitute {
                left: c[0],
                blocks: c[1..=m].to_vec(),
                right: c[m + 1],
            };
            apply_int(&move_table(m, &mv), &v)
        })
        .filter(|s| !s.is_empty())
        .collect();
    seeds.sort();
    seeds.dedup();
    Ok(seeds)
}

type ComponentCache = RwLock<HashMap<(IdealPresentation, usize), Arc<QSubspace>>>;

/// The arity-`n` component of the ideal presented by `pres`: the 𝕊ₙ-span of
/// all single-occurrence composites of the generators, plus `ᴷ𝔘(n)`.
pub fn ideal_component(pres: &IdealPresentation, n: usize) -> Result<Arc<QSubspace>> {
    check_window(n)?;
    static CACHE: OnceLock<ComponentCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (pres.clone(), n);
    if let Some(s) = cache.read().unwrap().get(&key) {
        return Ok(s.clone());
    }
    let mut seeds = Vec::new();
    for g in &pres.generators {
        if let Some(e) = g.cyclic()? {
            seeds.extend(composite_seeds(&e, n)?);
        }
    }
    let mut s = spin(n, &seeds);
    if let Some(k) = pres.tail {
        if k <= n && !s.is_full() {
            s = s.sum(&*truncation_kernel(k, n)?)?;
        }
    }
    let s = Arc::new(s);
    Ok(cache.write().unwrap().entry(key).or_insert(s).clone())
}
