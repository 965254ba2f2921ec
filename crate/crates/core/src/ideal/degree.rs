use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::presentation::{ideal_component, IdealPresentation};
use crate::ideal::window::IdealWindow;
use crate::operad::Element;
use crate::rep::cyclic_generator;

/// Arity `B` with `ℐ = ⟨ℐ(B)⟩` for an ideal whose quotient has GK-dimension
/// `d`: `d+1` for odd `d`, `d` for even `d` (at least 1).
pub fn theorem_bound(gkdim: usize) -> usize {
    if gkdim % 2 == 1 {
        gkdim + 1
    } else {
        gkdim.max(1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenDegree {
    pub degree: usize,
    pub bound: usize,
    /// How the bound was certified.
    pub certificate: String,
}

/// Least `n` with `⟨ℐ(n)⟩(B) = ℐ(B)`, scanning up from the minimal degree.
pub fn gen_degree(ideal: &IdealWindow, bound: usize) -> Result<GenDegree> {
    if bound > ideal.window() {
        return Err(Error::WindowExceeded(bound, ideal.window()));
    }
    let target = ideal.component(bound)?;
    let start = ideal.mdeg()?;
    for n in start..=bound {
        let pres = IdealPresentation::module(n, (**ideal.component(n)?).clone())?;
        if ideal_component(&pres, bound)?.dim() == target.dim() {
            return Ok(GenDegree {
                degree: n,
                bound,
                certificate: format!("assumes the ideal is generated in arity {bound}"),
            });
        }
    }
    Err(Error::Invalid(format!(
        "ideal not generated by its arity-{bound} component"
    )))
}

/// [`gen_degree`] with the bound taken from the GK-dimension of the quotient.
pub fn gen_degree_certified(ideal: &IdealWindow) -> Result<GenDegree> {
    let d = ideal.gkdim_quotient()?;
    let bound = theorem_bound(d);
    let mut gd = gen_degree(ideal, bound)?;
    gd.certificate = format!("bound {bound} from quotient GK-dimension {d}");
    Ok(gd)
}

/// `ζ^[m] = Σᵢ 𝟙₂∘(ζᵢ, 𝟙_{m−i})` for cyclic generators `ζᵢ` of
/// `ℐ(i)∩ⁱ𝔘(i)`.
pub fn single_generator(ideal: &IdealWindow, m: usize) -> Result<Element> {
    let mut zeta = Element::zero(m);
    for i in 1..=m {
        let top = ideal.top_part(i)?;
        if top.is_zero() {
            continue;
        }
        let z = cyclic_generator(&top, i as u64)?;
        zeta = zeta.add(&z.iota(0, m - i))?;
    }
    Ok(zeta)
}

/// Whether `⟨θ⟩` has the same components as `ideal` throughout the window.
pub fn generates(ideal: &IdealWindow, theta: &Element) -> Result<bool> {
    let pres = IdealPresentation::element(theta.clone());
    for n in 0..=ideal.window() {
        if ideal_component(&pres, n)?.as_ref() != ideal.component(n)?.as_ref() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds() {
        assert_eq!(theorem_bound(1), 2);
        assert_eq!(theorem_bound(3), 4);
        assert_eq!(theorem_bound(4), 4);
        assert_eq!(theorem_bound(5), 6);
    }

    #[test]
    fn truncation_degrees() {
        for (k, gd) in [(2, 2), (3, 4), (4, 4)] {
            let w = IdealWindow::generate(&IdealPresentation::truncation(k), 5).unwrap();
            assert_eq!(gen_degree_certified(&w).unwrap().degree, gd, "k={k}");
        }
    }

    #[test]
    fn single_generator_of_truncation() {
        let w = IdealWindow::generate(&IdealPresentation::truncation(3), 5).unwrap();
        let z = single_generator(&w, 4).unwrap();
        assert!(generates(&w, &z).unwrap());
        let tau: Element = "(1,2) - (2,1)".parse().unwrap();
        let u2 = IdealWindow::generate(&IdealPresentation::truncation(2), 4).unwrap();
        assert!(generates(&u2, &tau).unwrap());
    }
}
