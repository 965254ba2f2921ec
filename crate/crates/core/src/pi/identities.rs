use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ideal::IdealWindow;
use crate::linalg::modular::span_rational;
use crate::linalg::IntSpanBuilder;
use crate::operad::Element;
use crate::pi::algebra::{multiply_with, FiniteAlgebra};
use crate::truncation::check_window;
use crate::{QSubspace, Rational};

/// Random combinations of the output coordinates kept per sample.
const MIXED_ROWS: usize = 4;

/// Default bound on `dim(A)ⁿ` for exhaustive evaluation.
pub const DEFAULT_CAP: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// All basis tuples, allowed when `dim(A)ⁿ ≤ cap`.
    Deterministic { cap: u64 },
    /// Random tuples with small integer coordinates; each sample adds a few
    /// random combinations of the output coordinates.
    MonteCarlo { seed: u64, samples: usize },
}

impl Mode {
    pub fn exact() -> Self {
        Mode::Deterministic { cap: DEFAULT_CAP }
    }

    /// Exhaustive when within `cap`, otherwise `factor·n!` random tuples.
    pub fn auto(alg: &FiniteAlgebra, n: usize, cap: u64, seed: u64, factor: usize) -> Self {
        match tuple_count(alg, n) {
            Some(c) if c <= cap => Mode::Deterministic { cap },
            _ => Mode::MonteCarlo {
                seed,
                samples: factor * (1..=n).product::<usize>(),
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Exact,
    Probabilistic { seed: u64, samples: usize },
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Exact => write!(f, "exact"),
            Status::Probabilistic { seed, samples } => {
                write!(f, "probabilistic(seed={seed}, samples={samples})")
            }
        }
    }
}

impl Serialize for Status {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn tuple_count(alg: &FiniteAlgebra, n: usize) -> Option<u64> {
    (alg.dim() as u64).checked_pow(n as u32)
}

/// `γₙ(θ)(r₁⊗⋯⊗rₙ) = Σ c_σ r_{σ⁻¹(1)}⋯r_{σ⁻¹(n)}`.
pub fn evaluate(
    alg: &FiniteAlgebra,
    theta: &Element,
    tuple: &[Vec<Rational>],
) -> Result<Vec<Rational>> {
    if tuple.len() != theta.arity() {
        return Err(Error::LengthMismatch {
            expected: theta.arity(),
            got: tuple.len(),
        });
    }
    let mut out = vec![Rational::zero(); alg.dim()];
    for (sigma, c) in theta.terms() {
        let mut acc = alg.unit().to_vec();
        for s in sigma.entries() {
            acc = alg.multiply(&acc, &tuple[s - 1])?;
        }
        for (o, x) in out.iter_mut().zip(acc) {
            *o += c * x;
        }
    }
    Ok(out)
}

/// Products `r_{s₁}⋯r_{sₙ}` for every sequence `s` in rank order, sharing
/// prefixes.
fn all_products<T: Clone>(
    unit: &[T],
    tuple: &[Vec<T>],
    mul: &dyn Fn(&[T], &[T]) -> Vec<T>,
) -> Vec<Vec<T>> {
    fn rec<T: Clone>(
        tuple: &[Vec<T>],
        mul: &dyn Fn(&[T], &[T]) -> Vec<T>,
        prefix: &[T],
        used: &mut Vec<bool>,
        depth: usize,
        out: &mut Vec<Vec<T>>,
    ) {
        if depth == tuple.len() {
            out.push(prefix.to_vec());
            return;
        }
        for i in 0..tuple.len() {
            if used[i] {
                continue;
            }
            used[i] = true;
            let next = mul(prefix, &tuple[i]);
            rec(tuple, mul, &next, used, depth + 1, out);
            used[i] = false;
        }
    }
    let mut out = Vec::new();
    let mut used = vec![false; tuple.len()];
    rec(tuple, mul, unit, &mut used, 0, &mut out);
    out
}

/// Nonzero structure constants `eᵢeⱼ = Σ c eₖ` as a flat list.
fn flat_table(table: &[Vec<(usize, i128)>], dim: usize) -> Vec<(usize, usize, usize, i128)> {
    let mut out = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            out.extend(table[i * dim + j].iter().map(|&(k, c)| (i, j, k, c)));
        }
    }
    out
}

/// Rows `σ ↦ (r_{σ⁻¹(1)}⋯r_{σ⁻¹(n)})ₖ`, one per output coordinate.
fn functionals<T: Clone + Zero>(products: &[Vec<T>], dim: usize) -> Vec<Vec<T>> {
    (0..dim)
        .map(|k| products.iter().map(|p| p[k].clone()).collect())
        .collect()
}

fn tuples(alg: &FiniteAlgebra, n: usize, mode: Mode) -> Result<Vec<Vec<usize>>> {
    let Mode::Deterministic { cap } = mode else {
        return Ok(Vec::new());
    };
    let count = tuple_count(alg, n).filter(|&c| c <= cap).ok_or_else(|| {
        Error::CapExceeded(
            format!("{} basis tuples of {} at arity {n}", alg.dim(), alg.name),
            cap,
        )
    })?;
    let mut out = Vec::with_capacity(count as usize);
    let mut cur = vec![0usize; n];
    loop {
        out.push(cur.clone());
        let mut k = 0;
        while k < n {
            cur[k] += 1;
            if cur[k] < alg.dim() {
                break;
            }
            cur[k] = 0;
            k += 1;
        }
        if k == n {
            return Ok(out);
        }
    }
}

/// Identities of degree `n` as a subspace of `ℚ𝕊ₙ`.
#[derive(Clone, Debug)]
pub struct IdentityComponent {
    pub n: usize,
    pub space: QSubspace,
    pub status: Status,
}

impl IdentityComponent {
    pub fn codim(&self) -> u64 {
        (self.space.ambient() - self.space.dim()) as u64
    }
}

/// `Vₙ(A)`: the kernel of evaluation at every basis tuple (exact) or at
/// random tuples (contains the true kernel).
pub fn identities_component(
    alg: &FiniteAlgebra,
    n: usize,
    mode: Mode,
) -> Result<IdentityComponent> {
    check_window(n)?;
    let size: usize = (1..=n).product();
    let dim = alg.dim();
    let basis_tuples = tuples(alg, n, mode)?;
    let status = match mode {
        Mode::Deterministic { .. } => Status::Exact,
        Mode::MonteCarlo { seed, samples } => Status::Probabilistic { seed, samples },
    };
    let mut rng = match mode {
        Mode::MonteCarlo { seed, .. } => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let rounds = match mode {
        Mode::Deterministic { .. } => basis_tuples.len(),
        Mode::MonteCarlo { samples, .. } => samples,
    };
    let span = if let Some(table) = alg.integer_table() {
        let unit: Vec<i128> = alg
            .unit()
            .iter()
            .map(|c| {
                c.is_integer()
                    .then(|| num_traits::ToPrimitive::to_i128(&c.to_integer()))
                    .flatten()
                    .ok_or_else(|| Error::Unsupported("non-integral unit".into()))
            })
            .collect::<Result<_>>()?;
        let flat = flat_table(&table, dim);
        let mul = |a: &[i128], b: &[i128]| {
            let mut out = vec![0i128; dim];
            for &(i, j, k, c) in &flat {
                if a[i] != 0 && b[j] != 0 {
                    out[k] += c * a[i] * b[j];
                }
            }
            out
        };
        let mut b = IntSpanBuilder::new(size);
        let mut seen: HashSet<Vec<(u32, i64)>> = HashSet::new();
        for r in 0..rounds {
            let tuple: Vec<Vec<i128>> = match rng.as_mut() {
                None => basis_tuples[r]
                    .iter()
                    .map(|&i| (0..dim).map(|k| (k == i) as i128).collect())
                    .collect(),
                Some(rng) => (0..n)
                    .map(|_| (0..dim).map(|_| rng.gen_range(-3i128..=3)).collect())
                    .collect(),
            };
            let mut rows = functionals(&all_products(&unit, &tuple, &mul), dim);
            if let Some(rng) = rng.as_mut().filter(|_| dim > MIXED_ROWS) {
                rows = (0..MIXED_ROWS)
                    .map(|_| {
                        let w: Vec<i128> = (0..dim).map(|_| rng.gen_range(-2i128..=2)).collect();
                        (0..size)
                            .map(|c| rows.iter().zip(&w).map(|(r, x)| r[c] * x).sum())
                            .collect()
                    })
                    .collect();
            }
            for row in rows {
                let mut sparse: Vec<(u32, i64)> = Vec::new();
                for (c, x) in row.into_iter().enumerate() {
                    if x != 0 {
                        let x = i64::try_from(x)
                            .map_err(|_| Error::Unsupported("evaluation exceeds i64".into()))?;
                        sparse.push((c as u32, x));
                    }
                }
                if sparse.first().is_some_and(|&(_, x)| x < 0) {
                    sparse.iter_mut().for_each(|e| e.1 = -e.1);
                }
                if !sparse.is_empty() && seen.insert(sparse.clone()) {
                    b.offer_sparse(sparse);
                }
            }
            if b.is_full() {
                break;
            }
        }
        b.finish()
    } else {
        let mut rows = Vec::new();
        for r in 0..rounds {
            let tuple: Vec<Vec<Rational>> = match rng.as_mut() {
                None => basis_tuples[r].iter().map(|&i| alg.basis(i)).collect(),
                Some(rng) => (0..n)
                    .map(|_| {
                        (0..dim)
                            .map(|_| Rational::from_integer(rng.gen_range(-3i64..=3).into()))
                            .collect()
                    })
                    .collect(),
            };
            let mul = |a: &[Rational], b: &[Rational]| multiply_with(alg.table(), dim, a, b);
            rows.extend(
                functionals(&all_products(alg.unit(), &tuple, &mul), dim)
                    .into_iter()
                    .filter(|r| r.iter().any(|x| !x.is_zero())),
            );
            if rows.len() > 4 * size {
                rows = span_rational(size, rows).rows();
            }
        }
        span_rational(size, rows)
    };
    Ok(IdentityComponent {
        n,
        space: span.orthogonal_complement(),
        status,
    })
}

/// `cₙ(A) = n! − dim Vₙ(A)`.
pub fn codim(alg: &FiniteAlgebra, n: usize, mode: Mode) -> Result<(u64, Status)> {
    let c = identities_component(alg, n, mode)?;
    Ok((c.codim(), c.status))
}

/// `Vₖ(A)` for `k ≤ w` as a window, for closure checks; reports the
/// weakest status used.
pub fn identities_window(
    alg: &FiniteAlgebra,
    w: usize,
    mode: Mode,
) -> Result<(IdealWindow, Status)> {
    let mut components = Vec::new();
    let mut status = Status::Exact;
    for n in 0..=w {
        let c = identities_component(alg, n, mode)?;
        if c.status != Status::Exact {
            status = c.status;
        }
        components.push(Arc::new(c.space));
    }
    Ok((
        IdealWindow::from_components(format!("V({})", alg.name), components, None)?,
        status,
    ))
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheck {
    pub algebra: String,
    pub ideal: String,
    pub n: usize,
    pub identities_dim: usize,
    pub ideal_dim: usize,
    pub identities_contain_ideal: bool,
    pub ideal_contains_identities: bool,
    pub equal: bool,
    pub status: Status,
}

/// Compares `Vₙ(A)` with `ℐ(n)`.
pub fn cross_check(
    alg: &FiniteAlgebra,
    ideal: &IdealWindow,
    n: usize,
    mode: Mode,
) -> Result<CrossCheck> {
    let v = identities_component(alg, n, mode)?;
    let i = ideal.component(n)?;
    let identities_contain_ideal = v.space.contains_subspace(i)?;
    let ideal_contains_identities = i.contains_subspace(&v.space)?;
    Ok(CrossCheck {
        algebra: alg.name.clone(),
        ideal: ideal.label.clone(),
        n,
        identities_dim: v.space.dim(),
        ideal_dim: i.dim(),
        identities_contain_ideal,
        ideal_contains_identities,
        equal: identities_contain_ideal && ideal_contains_identities,
        status: v.status,
    })
}
