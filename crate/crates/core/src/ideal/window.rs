use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::presentation::{ideal_component, IdealPresentation};
use crate::linalg::modular::{contains_exact, integer_rows};
use crate::linalg::IntegerView;
use crate::operad::index::{apply_dense, apply_int, move_table};
use crate::operad::Move;
use crate::rep::check_submodule;
use crate::truncation::{check_window, truncation_kernel};
use crate::QSubspace;

/// Components `ℐ(0),…,ℐ(W)` of an operadic ideal with an optional certified
/// tail `K` (`ᴷ𝔘 ⊆ ℐ`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealWindow {
    pub label: String,
    components: Vec<Arc<QSubspace>>,
    tail: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WindowSummary {
    pub label: String,
    pub dims: Vec<usize>,
    pub tail: Option<usize>,
}

impl IdealWindow {
    pub fn from_components(
        label: impl Into<String>,
        components: Vec<Arc<QSubspace>>,
        tail: Option<usize>,
    ) -> Result<Self> {
        let mut size = 1usize;
        for (n, c) in components.iter().enumerate() {
            if n > 0 {
                size *= n;
            }
            if c.ambient() != size {
                return Err(Error::AmbientMismatch(size, c.ambient()));
            }
        }
        if components.is_empty() {
            return Err(Error::Invalid("empty window".into()));
        }
        Ok(IdealWindow {
            label: label.into(),
            components,
            tail,
        })
    }

    /// Components of a presented ideal for all arities up to `w`.
    pub fn generate(pres: &IdealPresentation, w: usize) -> Result<Self> {
        check_window(w)?;
        let components = (0..=w)
            .map(|n| ideal_component(pres, n))
            .collect::<Result<_>>()?;
        IdealWindow::from_components(pres.to_string(), components, pres.tail)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn window(&self) -> usize {
        self.components.len() - 1
    }

    pub fn tail(&self) -> Option<usize> {
        self.tail
    }

    pub fn component(&self, n: usize) -> Result<&Arc<QSubspace>> {
        self.components
            .get(n)
            .ok_or(Error::WindowExceeded(n, self.window()))
    }

    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.dim()).collect()
    }

    pub fn summary(&self) -> WindowSummary {
        WindowSummary {
            label: self.label.clone(),
            dims: self.dims(),
            tail: self.tail,
        }
    }

    /// `ℐ(k) ∩ ᵏ𝔘(k)`
    pub fn top_part(&self, k: usize) -> Result<QSubspace> {
        let c = self.component(k)?;
        let u = truncation_kernel(k, k)?;
        c.intersect(&u)
    }

    /// Componentwise sum.
    pub fn sum(&self, other: &IdealWindow) -> Result<IdealWindow> {
        if self.window() != other.window() {
            return Err(Error::Invalid("incomparable windows".into()));
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.sum(b).map(Arc::new))
            .collect::<Result<_>>()?;
        let tail = match (self.tail, other.tail) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        IdealWindow::from_components(format!("{}+{}", self.label, other.label), components, tail)
    }

    /// Whether `other ⊆ self` componentwise.
    pub fn contains(&self, other: &IdealWindow) -> Result<bool> {
        if self.window() != other.window() {
            return Err(Error::Invalid("incomparable windows".into()));
        }
        for (a, b) in self.components.iter().zip(&other.components) {
            if !a.contains_subspace(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `min{n : ℐ(n) ≠ 0}`, checked against `min{n : ℐ(n)∩ⁿ𝔘(n) ≠ 0}` and
    /// `max{n : ℐ ⊆ ⁿ𝔘}` within the window.
    pub fn mdeg(&self) -> Result<usize> {
        let m = self
            .components
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| Error::Invalid("zero ideal within the window".into()))?;
        let via_top = (0..=self.window()).find(|&k| self.top_part(k).is_ok_and(|t| !t.is_zero()));
        if via_top != Some(m) {
            return Err(Error::Invalid(format!(
                "minimal degree {m} disagrees with {via_top:?}"
            )));
        }
        for (n, c) in self.components.iter().enumerate() {
            if !truncation_kernel(m, n)?.contains_subspace(c)? {
                return Err(Error::Invalid(format!(
                    "component {n} is not inside the {m}-th truncation"
                )));
            }
        }
        Ok(m)
    }

    fn require_tail(&self) -> Result<usize> {
        match self.tail {
            Some(k) if k <= self.window() + 1 => Ok(k),
            _ => Err(Error::MissingTail),
        }
    }

    /// `γₖ` of the quotient: `dim ᵏ𝔘(k) − dim(ℐ(k)∩ᵏ𝔘(k))` below the tail,
    /// trailing zeros removed.
    pub fn quotient_gamma(&self) -> Result<Vec<u64>> {
        let k_tail = self.require_tail()?;
        let mut gamma = Vec::with_capacity(k_tail);
        for k in 0..k_tail {
            let full = truncation_kernel(k, k)?.dim();
            gamma.push((full - self.top_part(k)?.dim()) as u64);
        }
        while gamma.last() == Some(&0) {
            gamma.pop();
        }
        Ok(gamma)
    }

    /// GK-dimension of the quotient operad.
    pub fn gkdim_quotient(&self) -> Result<usize> {
        Ok(self.quotient_gamma()?.len())
    }

    /// Verifies 𝕊-stability of every component and closure under deleting,
    /// doubling, appending and prepending within the window.
    pub fn check_closed(&self) -> Result<()> {
        for (n, c) in self.components.iter().enumerate() {
            check_submodule(c).map_err(|e| Error::NotInvariant(format!("component {n}: {e}")))?;
        }
        let views: Vec<Option<IntegerView>> = self
            .components
            .iter()
            .map(|c| IntegerView::new(c))
            .collect();
        for (n, c) in self.components.iter().enumerate() {
            let mut moves: Vec<(Move, usize)> = Vec::new();
            if n > 0 {
                moves.extend((1..=n).map(|i| (Move::Delete(i), n - 1)));
            }
            if n < self.window() {
                moves.extend((1..=n).map(|i| (Move::Double(i), n + 1)));
                moves.push((Move::Append, n + 1));
                moves.push((Move::Prepend, n + 1));
            }
            let rows = integer_rows(c);
            for (mv, target) in moves {
                let table = move_table(n, &mv);
                let dest = &self.components[target];
                for (i, row) in rows.iter().enumerate() {
                    let ok = match row {
                        Some(v) => {
                            contains_exact(dest, views[target].as_ref(), &apply_int(&table, v))
                        }
                        None => dest.contains(&apply_dense(&table, &c.row(i), dest.ambient()))?,
                    };
                    if !ok {
                        return Err(Error::NotInvariant(format!(
                            "{mv:?} moves component {n} outside component {target}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::tau_n;

    #[test]
    fn truncation_windows() {
        for k in 1..=5 {
            let w = IdealWindow::generate(&IdealPresentation::truncation(k), 5).unwrap();
            assert_eq!(w.mdeg().unwrap(), k.max(2));
            let expected = if k <= 2 { 1 } else { k };
            assert_eq!(w.gkdim_quotient().unwrap(), expected, "k={k}");
            w.check_closed().unwrap();
        }
    }

    #[test]
    fn tau_three_window() {
        let t3 = IdealPresentation::element(tau_n(3));
        let w = IdealWindow::generate(&t3, 5).unwrap();
        assert_eq!(w.mdeg().unwrap(), 3);
        w.check_closed().unwrap();
        assert!(matches!(w.gkdim_quotient(), Err(Error::MissingTail)));
        let with_tail = IdealWindow::generate(&t3.clone().with_tail(5), 5).unwrap();
        assert_eq!(with_tail.quotient_gamma().unwrap(), vec![1, 0, 1, 0, 1]);
        assert!(with_tail.contains(&w).unwrap());
        assert!(w.contains(&with_tail).unwrap());
    }
}
