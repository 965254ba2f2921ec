use std::collections::BTreeSet;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use uas_core::ideal::{
    classify_gkdim, forced_part, gen_degree_certified, generates, maximal_indices, pair_classes,
    pair_type_degrees, ClassifiedIdeal, IdealKind, IdealPresentation, IdealWindow, PairClass,
    PairCount,
};
use uas_core::operad::tau_n;
use uas_core::rep::Decomposition;
use uas_core::series::{
    catalog, gamma_series_of_quotient, grassmann_truncation_series, lambda_set,
};
use uas_core::truncation::truncation_kernel;
use uas_core::{Element, Error, Rational, Result};

use super::{data, job, Job};
use crate::cache;
use crate::report::Check;

fn join<T: ToString>(v: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = v.into_iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn antisymmetrizer(n: usize) -> Result<Element> {
    Element::from_terms(
        n,
        uas_core::symmetric::Permutation::all(n)
            .into_iter()
            .map(|s| {
                let c = Rational::from_integer(s.sign().into());
                (s, c)
            }),
    )
}

/// `𝟙₂∘(τ₃, 𝟙₃) + Σ sgn(σ)σ`
pub fn alpha() -> Result<Element> {
    Element::unit(2)
        .compose(&[tau_n(3), Element::unit(3)])?
        .add(&antisymmetrizer(6)?)
}

pub fn lie_truncation() -> Vec<Job> {
    vec![job("lie ideal", || {
        let d = data::lie_truncation();
        let lie = IdealPresentation::element(tau_n(3));
        let sum = lie.plus(&IdealPresentation::truncation(5));
        let (l, s) = rayon::join(
            || IdealWindow::generate(&lie, 6),
            || IdealWindow::generate(&sum, 6),
        );
        let (l, s) = (l?, s?);
        let l6 = l.component(6)?;
        let s6 = s.component(6)?;
        let contained = l6.contains_subspace(&*truncation_kernel(5, 6)?)?;
        let series = gamma_series_of_quotient(&s)?;
        let lambda = series.leading_lambda()?;
        let alpha_generates = generates(&s, &alpha()?)?;
        Ok(vec![
            Check::new("dim lie ideal n=6", d.lie_dim, l6.dim()),
            Check::new("dim sum n=6", d.sum_dim, s6.dim()),
            Check::new("dim quotient n=6", d.quotient_dim, 720 - s6.dim() as u64),
            Check::with("truncation not contained", "true", !contained, !contained),
            Check::new("quotient gamma", join(&d.gamma), join(series.gamma())),
            Check::new("quotient series", grassmann_truncation_series(2), &series),
            Check::new("leading constant", "1/24", &lambda),
            Check::new("alpha generates", "true", alpha_generates),
            Check::new(
                "generating degree",
                d.gen_degree,
                gen_degree_certified(&s)?.degree,
            ),
        ])
    })]
}

pub(crate) fn grade_four_ideals() -> Result<&'static [ClassifiedIdeal]> {
    static CELL: OnceLock<Result<Vec<ClassifiedIdeal>>> = OnceLock::new();
    CELL.get_or_init(|| classify_gkdim(5, 6))
        .as_ref()
        .map(|v| v.as_slice())
        .map_err(Clone::clone)
}

fn module_label(c: &ClassifiedIdeal) -> String {
    match c.kind {
        IdealKind::TypeOne => c.modules[0].decomposition.to_string(),
        IdealKind::TypeTwo => "pair".into(),
    }
}

fn canonical(text: &str) -> Result<String> {
    if text == "pair" {
        return Ok(text.into());
    }
    Ok(Decomposition::parse(4, text)?.to_string())
}

/// The listed single generator of the type I ideal over `module`.
pub fn type_one_generator(module: &str, gd: usize) -> Result<Element> {
    let g = data::generators();
    let dec = Decomposition::parse(4, module)?;
    let zeta = dec.multiplicities.keys().fold(Element::zero(4), |acc, l| {
        acc.add(&g.zeta_of(&l.label())).unwrap()
    });
    let unit2 = Element::unit(2);
    match gd {
        4 => Ok(zeta),
        5 => unit2.compose(&[zeta, Element::unit(1)])?.add(&g.top(5)),
        _ => {
            let lower = unit2
                .compose(&[zeta, Element::unit(2)])?
                .add(&unit2.compose(&[g.top(5), Element::unit(1)])?)?;
            lower.add(&g.top(6))
        }
    }
}

pub fn grade_four() -> Vec<Job> {
    let d = data::grade_four();
    let mut jobs = vec![job("ideals", || {
        let d = data::grade_four();
        let all = grade_four_ideals()?;
        let series = catalog(4)?;
        let type_one = all.iter().filter(|c| c.kind == IdealKind::TypeOne).count();
        Ok(vec![
            Check::new("ideal count", d.ideals, all.len()),
            Check::new("type I count", d.ideals - 1, type_one),
            Check::new("series count", d.series, series.len()),
        ])
    })];
    jobs.push(job("maximal ideals", || {
        let d = data::grade_four();
        let all = grade_four_ideals()?;
        let got: BTreeSet<String> = maximal_indices(all)?
            .into_iter()
            .map(|i| module_label(&all[i]))
            .collect();
        let want: BTreeSet<String> = d
            .maximal
            .iter()
            .map(|m| canonical(m))
            .collect::<Result<_>>()?;
        Ok(vec![Check::new("maximal ideals", join(&want), join(&got))])
    }));
    jobs.push(job("pair", || {
        let d = data::grade_four();
        let all = grade_four_ideals()?;
        let pairs: Vec<&ClassifiedIdeal> = all
            .iter()
            .filter(|c| c.kind == IdealKind::TypeTwo)
            .collect();
        let mut checks = vec![Check::new("pair count", 1, pairs.len())];
        if let [p] = pairs[..] {
            let top_forced = forced_part(&p.modules[..1], 4)? == *p.modules[1].space;
            checks.push(Check::new(
                "pair bottom",
                "(2,1)",
                &p.modules[0].decomposition,
            ));
            checks.push(Check::new("pair top is forced", "true", top_forced));
            checks.push(Check::new(
                "pair gamma",
                join(&d.pair_gamma),
                join(&p.gamma),
            ));
            checks.push(Check::new(
                "pair generating degree",
                d.pair_gen_degree,
                p.gen_degree()?.degree,
            ));
        }
        Ok(checks)
    }));
    for row in d.row {
        let name = format!("row {}", row.module);
        jobs.push(job(name.clone(), move || {
            let all = grade_four_ideals()?;
            let dec = Decomposition::parse(4, &row.module)?;
            let c = all
                .iter()
                .find(|c| c.kind == IdealKind::TypeOne && c.modules[0].decomposition == dec)
                .ok_or_else(|| Error::Invalid(format!("no ideal over {}", row.module)))?;
            let gen = type_one_generator(&row.module, row.gd)?;
            let ok = generates(&c.window, &gen)?;
            Ok(vec![
                Check::new(format!("{name} u"), row.u, c.gamma[4]),
                Check::new(format!("{name} gd"), row.gd, c.gen_degree()?.degree),
                Check::new(format!("{name} generator"), "true", ok),
            ])
        }));
    }
    jobs
}

fn classes() -> Result<&'static [PairClass]> {
    static CELL: OnceLock<Result<Vec<PairClass>>> = OnceLock::new();
    CELL.get_or_init(pair_classes)
        .as_ref()
        .map(|v| v.as_slice())
        .map_err(Clone::clone)
}

fn find_class(module: &str) -> Result<&'static PairClass> {
    let dec = Decomposition::parse(4, module)?;
    classes()?
        .iter()
        .find(|c| c.bottom.decomposition == dec)
        .ok_or_else(|| Error::Invalid(format!("no class over {module}")))
}

pub fn pair_counts() -> Vec<Job> {
    let p = data::pairs();
    let mut jobs = Vec::new();
    for module in p.none {
        let name = format!("count over {module}");
        jobs.push(job(name.clone(), move || {
            Ok(vec![Check::new(name, "0", find_class(&module)?.count)])
        }));
    }
    jobs.push(job("count over the whole component", || {
        let whole = classes()?
            .iter()
            .find(|c| c.bottom.is_whole().unwrap_or(false))
            .ok_or_else(|| Error::Invalid("no class over the whole component".into()))?;
        Ok(vec![Check::new(
            "count over the whole component",
            "0",
            whole.count,
        )])
    }));
    for b in p.bottom {
        let name = format!("count over {}", b.module);
        jobs.push(job(name.clone(), move || {
            let class = find_class(&b.module)?;
            let want: BTreeSet<String> = b
                .top
                .iter()
                .map(|t| Decomposition::parse(5, &t.character).map(|d| d.to_string()))
                .collect::<Result<_>>()?;
            let got: BTreeSet<String> = class.types.iter().map(|t| t.top.to_string()).collect();
            let count_ok = match class.count {
                PairCount::Finite(k) => k == want.len(),
                PairCount::Infinite => true,
            };
            Ok(vec![
                Check::new(name.clone(), &b.count, class.count),
                Check::with(
                    format!("types over {}", b.module),
                    format!("{} types", want.len()),
                    format!("{} types", got.len()),
                    want == got && count_ok,
                ),
            ])
        }));
    }
    jobs
}

#[derive(Serialize, Deserialize)]
struct CachedDegrees {
    gds: Vec<usize>,
}

fn cache_key(parts: &[&str]) -> String {
    parts
        .join("-")
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect()
}

/// Generating degrees over one completion type, from a unique module or
/// from sampled members of a family.
pub fn type_degrees(module: &str, top: &str, seed: u64) -> Result<BTreeSet<usize>> {
    let key = cache_key(&["pair-degrees", module, top, &seed.to_string()]);
    let found = cache::cached(&key, || {
        let class = find_class(module)?;
        let want = Decomposition::parse(5, top)?;
        let ty = class
            .types
            .iter()
            .find(|t| t.top == want)
            .ok_or_else(|| Error::Invalid(format!("{top} does not complete {module}")))?;
        let gds = pair_type_degrees(class, ty, &[seed])?
            .into_iter()
            .map(|d| d.gd)
            .collect();
        Ok::<_, Error>(CachedDegrees { gds })
    })?;
    Ok(found.gds.into_iter().collect())
}

pub fn pair_degrees(seed: u64) -> Vec<Job> {
    let mut jobs = Vec::new();
    for b in data::pairs().bottom {
        for t in b.top {
            let name = format!("gd {} under {}", t.character, b.module);
            let module = b.module.clone();
            jobs.push(job(name.clone(), move || {
                let got = type_degrees(&module, &t.character, seed)?;
                let want: BTreeSet<usize> = t.gd.iter().copied().collect();
                let ok = !got.is_empty() && got.is_subset(&want) && (want.len() > 1 || got == want);
                let expected = if want.len() > 1 {
                    format!("one of {}", join(&want))
                } else {
                    join(&want)
                };
                Ok(vec![Check::with(name, expected, join(&got), ok)])
            }));
        }
    }
    jobs
}

pub fn grade_five() -> Vec<Job> {
    vec![job("catalogue", || {
        let d = data::grade_five();
        let all = catalog(5)?;
        let with = |g4: u64| -> BTreeSet<u64> {
            all.iter()
                .filter(|s| s.gamma()[..4] == [1, 0, 1, 2] && s.gamma()[4] == g4)
                .map(|s| s.gamma()[5])
                .collect()
        };
        let excluded: BTreeSet<u64> = d.excluded_u.iter().copied().collect();
        let u: BTreeSet<u64> = (1..=44).filter(|u| !excluded.contains(u)).collect();
        let low: Vec<_> = all.iter().filter(|s| s.gamma()[4] < 7).collect();
        let z: BTreeSet<u64> = low.iter().map(|s| s.gamma()[4]).collect();
        let z_fixed = low.iter().all(|s| s.gamma()[5] == 4);
        let lambdas = lambda_set(5)?;
        let want_lambdas: BTreeSet<Rational> = u
            .iter()
            .map(|&u| Rational::new((u as i64).into(), 120.into()))
            .collect();
        Ok(vec![
            Check::new("series count", d.series, all.len()),
            Check::new("type I values", join(&u), join(with(9))),
            Check::new("x values", join(&d.x), join(with(8))),
            Check::new("y values", join(&d.y), join(with(7))),
            Check::with(
                "z values",
                join(&d.z),
                join(&z),
                z == d.z.iter().copied().collect() && z_fixed,
            ),
            Check::new("leading constants", join(&want_lambdas), join(&lambdas)),
        ])
    })]
}
