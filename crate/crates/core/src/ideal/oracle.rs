use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::presentation::{Generator, IdealPresentation};
use crate::ideal::window::IdealWindow;
use crate::linalg::modular::integer_rows;
use crate::operad::index::{apply_int, move_table, to_primitive_sparse};
use crate::operad::Move;
use crate::rep::{spin_with_basis, SparseInt};
use crate::truncation::{check_window, truncation_kernel};
use crate::QSubspace;

/// Result of the closure fixpoint.
#[derive(Clone, Debug)]
pub struct OracleReport {
    pub window: IdealWindow,
    /// Whether components up to the window survive one more arity of
    /// headroom; `None` when that exceeds the capacity.
    pub stable: Option<bool>,
    pub rounds: usize,
}

fn integer_basis(s: &QSubspace) -> Result<Vec<SparseInt>> {
    integer_rows(s)
        .into_iter()
        .map(|r| r.ok_or_else(|| Error::Unsupported("basis exceeds i64".into())))
        .collect()
}

/// Least family of submodules over arities `0..=top` containing the
/// generators and closed under the elementary moves.
fn fixpoint(
    pres: &IdealPresentation,
    top: usize,
) -> Result<(Vec<(QSubspace, Vec<SparseInt>)>, usize)> {
    let mut seeds: Vec<Vec<SparseInt>> = vec![Vec::new(); top + 1];
    for g in &pres.generators {
        let a = g.arity();
        if a > top {
            return Err(Error::WindowExceeded(a, top));
        }
        match g {
            Generator::Element(e) => {
                if !e.is_zero() {
                    seeds[a].push(
                        to_primitive_sparse(e)
                            .ok_or_else(|| Error::Unsupported("coefficients exceed i64".into()))?,
                    );
                }
            }
            Generator::Module { space, .. } => seeds[a].extend(integer_basis(space)?),
        }
    }
    if let Some(k) = pres.tail {
        for (n, s) in seeds.iter_mut().enumerate().skip(k) {
            s.extend(integer_basis(&*truncation_kernel(k, n)?)?);
        }
    }
    let mut comps: Vec<(QSubspace, Vec<SparseInt>)> = seeds
        .iter()
        .enumerate()
        .map(|(n, s)| spin_with_basis(n, s))
        .collect();
    let mut rounds = 0;
    loop {
        rounds += 1;
        let mut changed = false;
        for n in 0..=top {
            let mut s = comps[n].1.clone();
            if n < top {
                for i in 1..=n + 1 {
                    let t = move_table(n + 1, &Move::Delete(i));
                    s.extend(comps[n + 1].1.iter().map(|v| apply_int(&t, v)));
                }
            }
            if n > 0 {
                let mut ups: Vec<Move> = (1..n).map(Move::Double).collect();
                ups.push(Move::Append);
                ups.push(Move::Prepend);
                for mv in ups {
                    let t = move_table(n - 1, &mv);
                    s.extend(comps[n - 1].1.iter().map(|v| apply_int(&t, v)));
                }
            }
            s.retain(|v| !v.is_empty());
            let next = spin_with_basis(n, &s);
            if next.0.dim() != comps[n].0.dim() {
                changed = true;
            }
            comps[n] = next;
        }
        if !changed {
            return Ok((comps, rounds));
        }
    }
}

/// Independent computation of an ideal window by iterating the elementary
/// moves to a fixpoint over arities `≤ w + headroom`.
pub fn closure_fixpoint_oracle(
    pres: &IdealPresentation,
    w: usize,
    headroom: usize,
) -> Result<OracleReport> {
    check_window(w + headroom)?;
    let (comps, rounds) = fixpoint(pres, w + headroom)?;
    let stable = if w + headroom < crate::truncation::CAPACITY {
        let (more, _) = fixpoint(pres, w + headroom + 1)?;
        Some((0..=w).all(|n| more[n].0 == comps[n].0))
    } else {
        None
    };
    if stable == Some(false) {
        return Err(Error::NoStabilization(format!(
            "components up to {w} change with more headroom"
        )));
    }
    let components = comps
        .into_iter()
        .take(w + 1)
        .map(|(s, _)| Arc::new(s))
        .collect();
    let window = IdealWindow::from_components(format!("fixpoint {pres}"), components, pres.tail)?;
    Ok(OracleReport {
        window,
        stable,
        rounds,
    })
}
