use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::presentation::{ideal_component, IdealPresentation};
use crate::ideal::window::IdealWindow;
use crate::linalg::modular::primitive_integer;
use crate::linalg::IntSpanBuilder;
use crate::operad::index::move_table;
use crate::operad::Move;
use crate::rep::{character_of_subspace, check_submodule, decompose};
use crate::truncation::{check_window, subsets, truncation_kernel};
use crate::QSubspace;

fn require_inside_truncation(m: usize, module: &QSubspace) -> Result<()> {
    let size: usize = (1..=m).product();
    if module.ambient() != size {
        return Err(Error::AmbientMismatch(size, module.ambient()));
    }
    check_submodule(module)?;
    if !truncation_kernel(m, m)?.contains_subspace(module)? {
        return Err(Error::NotSubmodule(format!(
            "module is not inside the {m}-th truncation component"
        )));
    }
    Ok(())
}

fn module_label(module: &QSubspace) -> String {
    match character_of_subspace(module).and_then(|c| decompose(&c)) {
        Ok(d) if d.multiplicities.is_empty() => "0".into(),
        Ok(d) => d.to_string(),
        Err(_) => format!("dim {}", module.dim()),
    }
}

/// `{μ ∈ ᵐ𝔘(n) : π^I(μ) ∈ M for all |I| = m}` as the annihilator of the fibre
/// indicators of the `(m−1)`-restrictions and the pulled back annihilator of
/// `M` along the `m`-restrictions.
pub fn pointwise_component(m: usize, module: &QSubspace, n: usize) -> Result<QSubspace> {
    check_window(n)?;
    let size: usize = (1..=n).product();
    if n < m {
        return Ok(QSubspace::zero(size));
    }
    let mut b = IntSpanBuilder::new(size);
    if m >= 1 {
        for subset in subsets(n, m - 1) {
            let table = move_table(n, &Move::Restrict(subset));
            let fibres: usize = (1..m).product();
            let mut rows = vec![Vec::new(); fibres];
            for (i, &t) in table.iter().enumerate() {
                rows[t as usize].push((i as u32, 1i64));
            }
            for row in rows {
                b.offer_sparse(row);
            }
        }
    }
    let annihilator: Vec<Vec<i64>> = module
        .orthogonal_complement()
        .rows()
        .iter()
        .map(|r| {
            primitive_integer(r).ok_or_else(|| Error::Unsupported("annihilator exceeds i64".into()))
        })
        .collect::<Result<_>>()?;
    for subset in subsets(n, m) {
        let table = move_table(n, &Move::Restrict(subset));
        for a in &annihilator {
            let row: Vec<(u32, i64)> = table
                .iter()
                .enumerate()
                .filter(|(_, &t)| a[t as usize] != 0)
                .map(|(i, &t)| (i as u32, a[t as usize]))
                .collect();
            b.offer_sparse(row);
        }
    }
    Ok(b.finish().orthogonal_complement())
}

/// The generalized truncation ideal `ᵐ𝔘^M` over arities `≤ w`, built both
/// pointwise and as `⟨M⟩ + ᵐ⁺¹𝔘`; the two must agree.
pub fn gt_type1(m: usize, module: &QSubspace, w: usize) -> Result<IdealWindow> {
    require_inside_truncation(m, module)?;
    let pres = IdealPresentation::module(m, module.clone())?.with_tail(m + 1);
    let mut components = Vec::with_capacity(w + 1);
    for n in 0..=w {
        let generated = ideal_component(&pres, n)?;
        let pointwise = pointwise_component(m, module, n)?;
        if *generated != pointwise {
            return Err(Error::Invalid(format!(
                "constructions disagree at arity {n}: {} vs {}",
                generated.dim(),
                pointwise.dim()
            )));
        }
        components.push(generated);
    }
    IdealWindow::from_components(
        format!("GT1({m}; {})", module_label(module)),
        components,
        Some(m + 1),
    )
}

/// Modules `(M_{m−s},…,M_m)` with `Mⱼ ⊆ ʲ𝔘(j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleSequence {
    pub m: usize,
    pub modules: Vec<Arc<QSubspace>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissibilityReport {
    pub admissible: bool,
    pub failing_arity: Option<usize>,
    pub reason: Option<String>,
}

impl AdmissibleSequence {
    pub fn new(m: usize, modules: Vec<QSubspace>) -> Result<Self> {
        if modules.is_empty() || modules.len() > m {
            return Err(Error::Inadmissible(format!(
                "{} modules for top arity {m}",
                modules.len()
            )));
        }
        let start = m + 1 - modules.len();
        for (j, module) in (start..).zip(&modules) {
            require_inside_truncation(j, module)?;
        }
        Ok(AdmissibleSequence {
            m,
            modules: modules.into_iter().map(Arc::new).collect(),
        })
    }

    pub fn depth(&self) -> usize {
        self.modules.len() - 1
    }

    pub fn start(&self) -> usize {
        self.m - self.depth()
    }

    pub fn module(&self, j: usize) -> &Arc<QSubspace> {
        &self.modules[j - self.start()]
    }

    /// `Σ ⟨Mᵢ⟩ + ᵐ⁺¹𝔘`
    pub fn presentation(&self) -> Result<IdealPresentation> {
        let mut pres = IdealPresentation::truncation(self.m + 1);
        for (j, module) in (self.start()..).zip(&self.modules) {
            if !module.is_zero() {
                pres = pres.plus(&IdealPresentation::module(j, (**module).clone())?);
            }
        }
        Ok(pres)
    }

    pub fn label(&self) -> String {
        let parts: Vec<String> = self.modules.iter().map(|m| module_label(m)).collect();
        format!("GT2({}; {})", self.m, parts.join(" | "))
    }
}

/// Checks nonvanishing of the first module, properness of the last, and
/// `(⟨M_{m−s}⟩(j)+⋯+⟨M_{j−1}⟩(j)) ∩ ʲ𝔘(j) ⊆ Mⱼ`.
pub fn admissible_check(seq: &AdmissibleSequence) -> Result<AdmissibilityReport> {
    let fail = |j: Option<usize>, reason: String| AdmissibilityReport {
        admissible: false,
        failing_arity: j,
        reason: Some(reason),
    };
    let start = seq.start();
    if seq.module(start).is_zero() {
        return Ok(fail(Some(start), format!("M_{start} is zero")));
    }
    if *seq.module(seq.m).as_ref() == *truncation_kernel(seq.m, seq.m)? {
        return Ok(fail(
            Some(seq.m),
            format!("M_{} is the whole truncation component", seq.m),
        ));
    }
    for j in start + 1..=seq.m {
        let size: usize = (1..=j).product();
        let mut generated = QSubspace::zero(size);
        for i in start..j {
            let pres = IdealPresentation::module(i, (**seq.module(i)).clone())?;
            generated = generated.sum(&*ideal_component(&pres, j)?)?;
        }
        let meet = generated.intersect(&*truncation_kernel(j, j)?)?;
        if !seq.module(j).contains_subspace(&meet)? {
            return Ok(fail(Some(j), format!("containment fails at arity {j}")));
        }
    }
    Ok(AdmissibilityReport {
        admissible: true,
        failing_arity: None,
        reason: None,
    })
}

/// `Σ ⟨Mᵢ⟩ + ᵐ⁺¹𝔘` for an admissible sequence, with `ℐ(j)∩ʲ𝔘(j) = Mⱼ`
/// checked on the sequence range.
pub fn gt_general(seq: &AdmissibleSequence, w: usize) -> Result<IdealWindow> {
    let report = admissible_check(seq)?;
    if !report.admissible {
        return Err(Error::Inadmissible(report.reason.unwrap_or_default()));
    }
    let window = IdealWindow::generate(&seq.presentation()?, w)?.with_label(seq.label());
    for j in seq.start()..=seq.m.min(w) {
        if window.top_part(j)? != **seq.module(j) {
            return Err(Error::Invalid(format!(
                "top part at arity {j} differs from the module"
            )));
        }
    }
    Ok(window)
}

/// `J ⊆ I` componentwise.
pub fn contains_ideal(i: &IdealWindow, j: &IdealWindow) -> Result<bool> {
    i.contains(j)
}

/// No candidate of the same quotient GK-dimension strictly contains `ideal`.
pub fn maximal_wrt_gkdim(ideal: &IdealWindow, candidates: &[IdealWindow]) -> Result<bool> {
    let d = ideal.gkdim_quotient()?;
    for c in candidates {
        if c.gkdim_quotient()? == d && c.contains(ideal)? && !ideal.contains(c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_modules() {
        let size = 24;
        let zero = gt_type1(4, &QSubspace::zero(size), 5).unwrap();
        let u5 = IdealWindow::generate(&IdealPresentation::truncation(5), 5).unwrap();
        assert_eq!(zero.dims(), u5.dims());
        let full = gt_type1(4, &truncation_kernel(4, 4).unwrap(), 5).unwrap();
        let u4 = IdealWindow::generate(&IdealPresentation::truncation(4), 5).unwrap();
        assert_eq!(full.dims(), u4.dims());
    }

    #[test]
    fn pair_from_lie_three() {
        let m3 = (*truncation_kernel(3, 3).unwrap()).clone();
        let gen = ideal_component(&IdealPresentation::truncation_module(3).unwrap(), 4).unwrap();
        let m4 = gen.intersect(&truncation_kernel(4, 4).unwrap()).unwrap();
        assert_eq!(m4.dim(), 8);
        let seq = AdmissibleSequence::new(4, vec![m3.clone(), m4]).unwrap();
        assert!(admissible_check(&seq).unwrap().admissible);
        let w = gt_general(&seq, 5).unwrap();
        assert_eq!(w.quotient_gamma().unwrap(), vec![1, 0, 1, 0, 1]);
        let bad = AdmissibleSequence::new(4, vec![m3, QSubspace::zero(24)]).unwrap();
        let r = admissible_check(&bad).unwrap();
        assert_eq!(r.failing_arity, Some(4));
    }
}
