//! Classification of the ideals whose quotients have polynomial growth of a
//! fixed GK-dimension: generalized truncation ideals of type I and ideals
//! built from admissible sequences.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::degree::{gen_degree_certified, GenDegree};
use crate::ideal::gt::{admissible_check, gt_general, gt_type1, AdmissibleSequence};
use crate::ideal::presentation::{ideal_component, IdealPresentation};
use crate::ideal::window::IdealWindow;
use crate::rep::{
    character_of_subspace, decompose, enumerate_submodules, multiplicity_space, sub_decompositions,
    submodule_from_multiplicity, Decomposition, SubmoduleFamily,
};
use crate::symmetric::Partition;
use crate::truncation::truncation_kernel;
use crate::QSubspace;

/// A submodule of `ʲ𝔘(j)` together with its isotypic type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopModule {
    pub arity: usize,
    pub decomposition: Decomposition,
    pub space: Arc<QSubspace>,
}

impl TopModule {
    pub fn label(&self) -> String {
        self.decomposition.to_string()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_whole(&self) -> Result<bool> {
        Ok(self.space.dim() == truncation_kernel(self.arity, self.arity)?.dim())
    }
}

pub fn module_decomposition(arity: usize, space: &QSubspace) -> Result<Decomposition> {
    if space.is_zero() {
        return Ok(Decomposition {
            n: arity,
            ..Default::default()
        });
    }
    if arity == 0 {
        let mut d = Decomposition {
            n: 0,
            ..Default::default()
        };
        d.multiplicities.insert(Partition::new(Vec::new())?, 1);
        return Ok(d);
    }
    decompose(&character_of_subspace(space)?)
}

fn top_module(arity: usize, space: QSubspace) -> Result<TopModule> {
    Ok(TopModule {
        arity,
        decomposition: module_decomposition(arity, &space)?,
        space: Arc::new(space),
    })
}

/// Every submodule of `ʲ𝔘(j)`; requires `ʲ𝔘(j)` to be multiplicity-free,
/// which holds for `j ≤ 4`.
pub fn top_lattice(j: usize) -> Result<Arc<Vec<TopModule>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Vec<TopModule>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(l) = cache.read().unwrap().get(&j) {
        return Ok(l.clone());
    }
    let whole = truncation_kernel(j, j)?;
    let list = if j <= 1 {
        let mut out = vec![top_module(j, QSubspace::zero(whole.ambient()))?];
        if !whole.is_zero() {
            out.push(top_module(j, (*whole).clone())?);
        }
        out
    } else {
        let e = enumerate_submodules(&whole)?;
        let lattice = e.lattice.ok_or_else(|| {
            Error::Unsupported(format!("arity {j} truncation component has multiplicities"))
        })?;
        lattice
            .into_iter()
            .map(|(decomposition, space)| TopModule {
                arity: j,
                decomposition,
                space: Arc::new(space),
            })
            .collect()
    };
    let list = Arc::new(list);
    Ok(cache.write().unwrap().entry(j).or_insert(list).clone())
}

/// `(Σᵢ ⟨Mᵢ⟩(j)) ∩ ʲ𝔘(j)` for modules of arities below `j`.
pub fn forced_part(modules: &[TopModule], j: usize) -> Result<QSubspace> {
    let size: usize = (1..=j).product();
    let mut generated = QSubspace::zero(size);
    for m in modules {
        if !m.space.is_zero() {
            let pres = IdealPresentation::module(m.arity, (*m.space).clone())?;
            generated = generated.sum(&*ideal_component(&pres, j)?)?;
        }
    }
    generated.intersect(&*truncation_kernel(j, j)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IdealKind {
    /// `ᵐ𝔘^M` for a proper submodule `M`.
    TypeOne,
    /// Built from an admissible sequence of length at least two.
    TypeTwo,
}

/// One ideal of a classification, with its window and quotient γ-vector.
#[derive(Clone, Debug)]
pub struct ClassifiedIdeal {
    pub kind: IdealKind,
    pub m: usize,
    pub modules: Vec<TopModule>,
    pub window: IdealWindow,
    pub gamma: Vec<u64>,
}

impl ClassifiedIdeal {
    pub fn label(&self) -> &str {
        &self.window.label
    }

    pub fn gen_degree(&self) -> Result<GenDegree> {
        gen_degree_certified(&self.window)
    }

    pub fn sequence(&self) -> Result<AdmissibleSequence> {
        AdmissibleSequence::new(
            self.m,
            self.modules.iter().map(|t| (*t.space).clone()).collect(),
        )
    }
}

/// Chains `(M_{m−s},…,M_{m−1})` with `s ≥ 1`, nonzero bottom, and each
/// module containing the part forced by the ones below it.
pub fn admissible_prefixes(m: usize) -> Result<Vec<Vec<TopModule>>> {
    fn extend(
        prefix: &mut Vec<TopModule>,
        j: usize,
        m: usize,
        out: &mut Vec<Vec<TopModule>>,
    ) -> Result<()> {
        if j == m {
            out.push(prefix.clone());
            return Ok(());
        }
        let forced = forced_part(prefix, j)?;
        for cand in top_lattice(j)?.iter() {
            if cand.space.contains_subspace(&forced)? {
                prefix.push(cand.clone());
                extend(prefix, j + 1, m, out)?;
                prefix.pop();
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    for start in 0..m {
        for bottom in top_lattice(start)?.iter().filter(|t| !t.space.is_zero()) {
            let mut prefix = vec![bottom.clone()];
            extend(&mut prefix, start + 1, m, &mut out)?;
        }
    }
    Ok(out)
}

/// Admissible sequences of length at least two with top arity `m ≤ 4`.
pub fn admissible_sequences(m: usize) -> Result<Vec<Vec<TopModule>>> {
    let mut out = Vec::new();
    for prefix in admissible_prefixes(m)? {
        let forced = forced_part(&prefix, m)?;
        for cand in top_lattice(m)?.iter() {
            if cand.space.contains_subspace(&forced)? && !cand.is_whole()? {
                let mut seq = prefix.clone();
                seq.push(cand.clone());
                out.push(seq);
            }
        }
    }
    Ok(out)
}

/// All ideals whose quotient has GK-dimension `d` (`1 ≤ d ≤ 5`), with
/// components up to arity `w`.
pub fn classify_gkdim(d: usize, w: usize) -> Result<Vec<ClassifiedIdeal>> {
    if d == 0 || d > 5 {
        return Err(Error::Unsupported(format!(
            "explicit classification at GK-dimension {d}"
        )));
    }
    let m = d - 1;
    if w < m {
        return Err(Error::WindowExceeded(m, w));
    }
    let mut out = Vec::new();
    for t in top_lattice(m)?.iter() {
        if t.is_whole()? {
            continue;
        }
        let window = gt_type1(m, &t.space, w)?;
        let gamma = window.quotient_gamma()?;
        out.push(ClassifiedIdeal {
            kind: IdealKind::TypeOne,
            m,
            modules: vec![t.clone()],
            window,
            gamma,
        });
    }
    for seq in admissible_sequences(m)? {
        let s = AdmissibleSequence::new(m, seq.iter().map(|t| (*t.space).clone()).collect())?;
        let window = gt_general(&s, w)?;
        let gamma = window.quotient_gamma()?;
        out.push(ClassifiedIdeal {
            kind: IdealKind::TypeTwo,
            m,
            modules: seq,
            window,
            gamma,
        });
    }
    for c in &out {
        if c.gamma.len() != d {
            return Err(Error::Invalid(format!(
                "{} has quotient GK-dimension {}",
                c.label(),
                c.gamma.len()
            )));
        }
    }
    Ok(out)
}

/// Indices of the ideals not strictly contained in another of the list.
pub fn maximal_indices(ideals: &[ClassifiedIdeal]) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    'outer: for (i, a) in ideals.iter().enumerate() {
        for (j, b) in ideals.iter().enumerate() {
            if i != j && b.window.contains(&a.window)? && !a.window.contains(&b.window)? {
                continue 'outer;
            }
        }
        out.push(i);
    }
    Ok(out)
}

/// Number of top modules completing a sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PairCount {
    Finite(usize),
    Infinite,
}

impl std::fmt::Display for PairCount {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PairCount::Finite(k) => write!(f, "{k}"),
            PairCount::Infinite => write!(f, "infinite"),
        }
    }
}

/// A character type of the top module `M₅` over a fixed `M₄`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairType {
    pub top: Decomposition,
    /// Whether infinitely many submodules share this character.
    pub family: bool,
}

/// The completions `M₅` of a bottom module `M₄` to a 5-admissible pair,
/// grouped by character.
#[derive(Clone, Debug)]
pub struct PairClass {
    pub bottom: TopModule,
    pub forced: TopModule,
    pub count: PairCount,
    pub types: Vec<PairType>,
}

/// Character types `D` with `forced ⊆ D ⊊ ᵐ𝔘(m)` and the resulting count:
/// zero when nothing is left, infinite when some gap is at least two, and
/// `2^g − 1` for `g` gaps of one otherwise.
pub fn completion_types(
    forced: &Decomposition,
    whole: &Decomposition,
) -> (PairCount, Vec<PairType>) {
    let mut types = Vec::new();
    let mut infinite = false;
    for d in sub_decompositions(whole) {
        if d == *whole {
            continue;
        }
        let mut ok = true;
        let mut family = false;
        for (lambda, &m) in &whole.multiplicities {
            let n = forced.multiplicity(lambda);
            let k = d.multiplicity(lambda);
            if k < n {
                ok = false;
                break;
            }
            if n < k && k < m {
                family = true;
            }
        }
        if ok {
            infinite |= family;
            types.push(PairType { top: d, family });
        }
    }
    let count = if infinite {
        PairCount::Infinite
    } else {
        PairCount::Finite(types.len())
    };
    (count, types)
}

/// Completion types at arity `m` over every admissible prefix.
pub fn sequence_classes(m: usize) -> Result<Vec<(Vec<TopModule>, PairClass)>> {
    let whole = top_module(m, (*truncation_kernel(m, m)?).clone())?;
    let mut out = Vec::new();
    for prefix in admissible_prefixes(m)? {
        let forced = top_module(m, forced_part(&prefix, m)?)?;
        let (count, types) = completion_types(&forced.decomposition, &whole.decomposition);
        let bottom = prefix.last().expect("nonempty prefix").clone();
        out.push((
            prefix,
            PairClass {
                bottom,
                forced,
                count,
                types,
            },
        ));
    }
    Ok(out)
}

/// Pair classes for every nonzero `M₄ ⊆ ⁴𝔘(4)`.
pub fn pair_classes() -> Result<Vec<PairClass>> {
    let whole = top_module(5, (*truncation_kernel(5, 5)?).clone())?;
    let mut out = Vec::new();
    for bottom in top_lattice(4)?.iter().filter(|t| !t.space.is_zero()) {
        let forced = top_module(5, forced_part(std::slice::from_ref(bottom), 5)?)?;
        let (count, types) = completion_types(&forced.decomposition, &whole.decomposition);
        out.push(PairClass {
            bottom: bottom.clone(),
            forced,
            count,
            types,
        });
    }
    Ok(out)
}

/// A choice of member inside a family of top modules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum FamilyPoint {
    /// The canonical representative with this index.
    Representative(usize),
    Seeded(u64),
}

impl std::fmt::Display for FamilyPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilyPoint::Representative(i) => write!(f, "rep{i}"),
            FamilyPoint::Seeded(s) => write!(f, "seed{s}"),
        }
    }
}

/// A submodule `M` with `forced ⊆ M ⊆ ᵐ𝔘(m)` of character `ty`. Inside a
/// family the extra multiplicity vectors come from `point`; `None` when
/// the requested representative does not extend the forced part.
pub fn realize_completion(
    forced: &TopModule,
    ty: &Decomposition,
    point: &FamilyPoint,
) -> Result<Option<QSubspace>> {
    let m = forced.arity;
    let whole = truncation_kernel(m, m)?;
    let whole_dec = module_decomposition(m, &whole)?;
    let mut result = (*forced.space).clone();
    for (lambda, &mult) in &whole_dec.multiplicities {
        let n = forced.decomposition.multiplicity(lambda) as usize;
        let d = ty.multiplicity(lambda) as usize;
        if d < n || d > mult as usize {
            return Err(Error::Invalid(format!(
                "type {ty} does not lie between {} and the whole",
                forced.label()
            )));
        }
        if d == n {
            continue;
        }
        let w_mult = multiplicity_space(&whole, lambda)?;
        let extra: Vec<Vec<crate::Rational>> = if d == mult as usize {
            w_mult.rows()
        } else {
            let fam = SubmoduleFamily {
                n: m,
                lambda: lambda.clone(),
                multiplicity: mult as usize,
                dim_choice: d - n,
                space: w_mult.clone(),
            };
            let params = match point {
                FamilyPoint::Representative(i) => match fam.representatives().into_iter().nth(*i) {
                    Some(p) => p,
                    None => return Ok(None),
                },
                FamilyPoint::Seeded(s) => fam.sample_params(*s),
            };
            let member = fam.realize(&params)?;
            let forced_mult = multiplicity_space(&forced.space, lambda)?;
            let member_mult = multiplicity_space(&member, lambda)?;
            if forced_mult.sum(&member_mult)?.dim() != d {
                return Ok(None);
            }
            member_mult.rows()
        };
        result = result.sum(&submodule_from_multiplicity(m, &extra)?)?;
    }
    if module_decomposition(m, &result)? != *ty {
        return Err(Error::Invalid(format!(
            "realized module does not have type {ty}"
        )));
    }
    Ok(Some(result))
}

/// The ideal of the pair `(M₄, M₅)` up to arity `w`.
pub fn pair_ideal(bottom: &TopModule, top: QSubspace, w: usize) -> Result<IdealWindow> {
    let seq = AdmissibleSequence::new(bottom.arity + 1, vec![(*bottom.space).clone(), top])?;
    let report = admissible_check(&seq)?;
    if !report.admissible {
        return Err(Error::Inadmissible(report.reason.unwrap_or_default()));
    }
    gt_general(&seq, w)
}

/// Generating degree of one pair ideal, computed at window 6.
#[derive(Clone, Debug, Serialize)]
pub struct PairDegree {
    pub bottom: String,
    pub top: String,
    pub point: Option<FamilyPoint>,
    pub gamma: Vec<u64>,
    pub gd: usize,
}

/// Generating degrees over a pair type: one value for a unique module,
/// one per sampled member for a family (the canonical representatives
/// and `seeds` random members).
pub fn pair_type_degrees(
    class: &PairClass,
    ty: &PairType,
    seeds: &[u64],
) -> Result<Vec<PairDegree>> {
    let mut points: Vec<Option<FamilyPoint>> = Vec::new();
    if ty.family {
        points.extend((0..8).map(|i| Some(FamilyPoint::Representative(i))));
        points.extend(seeds.iter().map(|&s| Some(FamilyPoint::Seeded(s))));
    } else {
        points.push(None);
    }
    let mut out = Vec::new();
    for point in points {
        let p = point.clone().unwrap_or(FamilyPoint::Representative(0));
        let Some(top) = realize_completion(&class.forced, &ty.top, &p)? else {
            continue;
        };
        let window = pair_ideal(&class.bottom, top, 6)?;
        out.push(PairDegree {
            bottom: class.bottom.label(),
            top: ty.top.to_string(),
            point,
            gamma: window.quotient_gamma()?,
            gd: gen_degree_certified(&window)?.degree,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattices() {
        assert_eq!(top_lattice(0).unwrap().len(), 2);
        assert_eq!(top_lattice(1).unwrap().len(), 1);
        assert_eq!(top_lattice(2).unwrap().len(), 2);
        assert_eq!(top_lattice(3).unwrap().len(), 2);
        assert_eq!(top_lattice(4).unwrap().len(), 16);
    }

    #[test]
    fn small_classifications() {
        let one = classify_gkdim(1, 3).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].gamma, vec![1]);
        assert!(classify_gkdim(2, 3).unwrap().is_empty());
        let three = classify_gkdim(3, 4).unwrap();
        assert_eq!(three.len(), 1);
        assert_eq!(three[0].gamma, vec![1, 0, 1]);
        let four = classify_gkdim(4, 4).unwrap();
        assert_eq!(four.len(), 1);
        assert_eq!(four[0].gamma, vec![1, 0, 1, 2]);
        assert!(admissible_sequences(3).unwrap().is_empty());
    }

    #[test]
    fn completion_counts() {
        let whole = Decomposition::parse(5, "(4,1)+2(2,1^3)+2(3,2)+2(2^2,1)+2(3,1^2)").unwrap();
        let forced = Decomposition::parse(5, "2(2,1^3)+(2^2,1)+(3,1^2)").unwrap();
        let (count, types) = completion_types(&forced, &whole);
        assert_eq!(count, PairCount::Infinite);
        assert_eq!(types.len(), 23);
        assert_eq!(types.iter().filter(|t| t.family).count(), 8);
        let (count, _) = completion_types(&whole, &whole);
        assert_eq!(count, PairCount::Finite(0));
        let forced = Decomposition::parse(5, "(2,1^3)+2(3,2)+2(2^2,1)+2(3,1^2)").unwrap();
        assert_eq!(completion_types(&forced, &whole).0, PairCount::Finite(3));
    }
}
