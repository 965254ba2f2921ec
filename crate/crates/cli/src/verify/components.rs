use uas_core::ideal::{forced_part, ideal_component, top_lattice, IdealPresentation, TopModule};
use uas_core::rep::{
    character_of_subspace, cyclic_span, decompose, isotypic_component, Decomposition,
};
use uas_core::symmetric::{Partition, Permutation};
use uas_core::truncation::{
    basis_theorem_sets, gamma, span_elements, specht_basis, truncation_dim, truncation_kernel,
};
use uas_core::{Element, QSubspace, Rational, Result};

use super::{data, job, Job};
use crate::report::Check;

fn chi(space: &QSubspace) -> Result<Decomposition> {
    decompose(&character_of_subspace(space)?)
}

fn compare(name: String, n: usize, expected: &str, space: &QSubspace) -> Result<Check> {
    let want = Decomposition::parse(n, expected)?;
    let got = chi(space)?;
    Ok(Check::with(name, expected, &got, got == want))
}

pub(crate) fn lattice_module(text: &str) -> Result<TopModule> {
    let d = Decomposition::parse(4, text)?;
    top_lattice(4)?
        .iter()
        .find(|t| t.decomposition == d)
        .cloned()
        .ok_or_else(|| uas_core::Error::Invalid(format!("{text} is not a submodule")))
}

pub fn truncation() -> Vec<Job> {
    let expected = data::truncation().gamma;
    let mut jobs = Vec::new();
    for (n, &g) in expected.iter().enumerate() {
        jobs.push(job(format!("gamma n={n}"), move || {
            Ok(vec![
                Check::new(format!("gamma n={n}"), g, gamma(n)),
                Check::new(
                    format!("top component n={n}"),
                    g,
                    truncation_kernel(n, n)?.dim(),
                ),
            ])
        }));
    }
    for n in 1..=6usize {
        jobs.push(job(format!("dimensions n={n}"), move || {
            (1..=n)
                .map(|k| {
                    Ok(Check::new(
                        format!("dim k={k} n={n}"),
                        truncation_dim(k, n),
                        truncation_kernel(k, n)?.dim(),
                    ))
                })
                .collect()
        }));
        jobs.push(job(format!("specht n={n}"), move || {
            let elems: Vec<Element> = specht_basis(n)?.into_iter().map(|(_, e)| e).collect();
            let span = span_elements(n, &elems);
            let whole = truncation_kernel(n, n)?;
            let mut union = Vec::new();
            for k in 0..=n {
                union.extend(basis_theorem_sets(k, n)?);
            }
            let size: usize = (1..=n).product();
            let full = span_elements(n, &union);
            Ok(vec![
                Check::with(
                    format!("specht basis n={n}"),
                    format!("{} independent vectors spanning the component", whole.dim()),
                    format!("{} vectors of rank {}", elems.len(), span.dim()),
                    elems.len() == whole.dim() && span == *whole,
                ),
                Check::with(
                    format!("basis theorem n={n}"),
                    format!("basis of size {size}"),
                    format!("{} vectors of rank {}", union.len(), full.dim()),
                    union.len() == size && full.dim() == size,
                ),
            ])
        }));
    }
    jobs
}

pub fn characters() -> Vec<Job> {
    let d = data::characters();
    let mut jobs = Vec::new();
    for row in d.truncation {
        let name = format!("truncation k={} n={}", row.k, row.n);
        jobs.push(job(name.clone(), move || {
            Ok(vec![compare(
                name,
                row.n,
                &row.character,
                &*truncation_kernel(row.k, row.n)?,
            )?])
        }));
    }
    for row in d.generated {
        let name = format!("generated by {} in arity {}", row.module, row.arity);
        jobs.push(job(name.clone(), move || {
            let m = lattice_module(&row.module)?;
            let pres = IdealPresentation::module(4, (*m.space).clone())?;
            let space = ideal_component(&pres, row.arity)?;
            Ok(vec![compare(name, row.arity, &row.character, &space)?])
        }));
    }
    for row in d.forced {
        let name = format!("forced by {}", row.module);
        jobs.push(job(name.clone(), move || {
            let m = lattice_module(&row.module)?;
            let f = forced_part(std::slice::from_ref(&m), 5)?;
            Ok(vec![compare(name, 5, &row.character, &f)?])
        }));
    }
    jobs
}

pub fn generators() -> Vec<Job> {
    let mut jobs = vec![job("specht vectors", || {
        let g = data::generators();
        let whole = truncation_kernel(4, 4)?;
        let rows: Vec<Vec<Rational>> = g.basis.iter().map(|t| t.element().to_dense()).collect();
        let span = QSubspace::span(24, rows);
        Ok(vec![Check::with(
            "specht vectors",
            "basis of the arity-4 component",
            format!("rank {}", span.dim()),
            span == *whole && g.basis.len() == whole.dim(),
        )])
    })];
    for lambda in data::generators().component.into_iter().map(|c| c.lambda) {
        jobs.push(job(format!("generator {lambda}"), move || {
            let g = data::generators();
            let zeta = g.zeta_of(&lambda);
            let whole = truncation_kernel(4, 4)?;
            let comp = isotypic_component(&whole, &lambda.parse::<Partition>()?)?;
            let inside = comp.contains(&zeta.to_dense())?;
            let cyclic = cyclic_span(&zeta)?;
            Ok(vec![
                Check::with(
                    format!("generator {lambda} lies in"),
                    "true",
                    inside,
                    inside,
                ),
                Check::with(
                    format!("generator {lambda} generates"),
                    format!("dim {}", comp.dim()),
                    format!("dim {}", cyclic.dim()),
                    cyclic == comp,
                ),
            ])
        }));
    }
    jobs.push(job("recovery of tau_4", || {
        let g = data::generators();
        let r = &g.recovery;
        let z = data::sum(&r.terms);
        let twist: Permutation = r.twist.parse()?;
        let x: Element = r.multiplier.parse()?;
        let scale: Rational = r
            .scale
            .parse()
            .map_err(|_| uas_core::Error::Invalid(r.scale.clone()))?;
        let lhs = z.add(&z.act(&twist)?)?.act_by(&x)?.scale(&scale);
        let tau4 = uas_core::operad::tau_n::<Rational>(4);
        let cyclic = cyclic_span(&z)?;
        let whole = truncation_kernel(4, 4)?;
        Ok(vec![
            Check::with("recovery of tau_4", &tau4, &lhs, lhs == tau4),
            Check::with(
                "recovery generator spans",
                format!("dim {}", whole.dim()),
                format!("dim {}", cyclic.dim()),
                cyclic == *whole,
            ),
        ])
    }));
    for arity in [5usize, 6] {
        jobs.push(job(format!("top generator n={arity}"), move || {
            let beta = data::generators().top(arity);
            let whole = truncation_kernel(arity, arity)?;
            let cyclic = cyclic_span(&beta)?;
            Ok(vec![Check::with(
                format!("top generator n={arity}"),
                format!("dim {}", whole.dim()),
                format!("dim {}", cyclic.dim()),
                cyclic == *whole,
            )])
        }));
    }
    jobs
}
