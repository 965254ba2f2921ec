use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::modular::{integer_rows, primitive_integer};
use crate::linalg::IntSpanBuilder;
use crate::operad::index::{apply_int, move_table, symmetric_generators, to_primitive_sparse};
use crate::operad::{Element, Move, OperadElement};
use crate::{QSubspace, Rational};

/// Sparse integer vectors of arity `n`.
pub type SparseInt = Vec<(u32, i64)>;

fn spin_with_offset(
    n: usize,
    seeds: &[SparseInt],
    offset: usize,
) -> Option<(QSubspace, Vec<SparseInt>)> {
    let size: usize = (1..=n).product();
    let tables: Vec<_> = symmetric_generators(n)
        .into_iter()
        .map(|g| move_table(n, &Move::Act(g)))
        .collect();
    let mut b = IntSpanBuilder::with_prime_offset(size, offset);
    let mut basis: Vec<SparseInt> = Vec::new();
    for s in seeds {
        if b.offer_sparse(s.clone()) {
            basis.push(s.clone());
        }
    }
    let mut next = 0;
    while next < basis.len() && !b.is_full() {
        for t in &tables {
            let image = apply_int(t, &basis[next]);
            if b.offer_sparse(image.clone()) {
                basis.push(image);
            }
        }
        next += 1;
    }
    let s = if b.is_full() {
        QSubspace::full(size)
    } else {
        b.try_finish()?
    };
    Some((s, basis))
}

/// Exact closure with rational membership tests, used when the modular spin
/// fails to verify.
fn spin_exact(n: usize, seeds: &[SparseInt]) -> (QSubspace, Vec<SparseInt>) {
    let size: usize = (1..=n).product();
    let dense = |v: &SparseInt| {
        let mut out = vec![Rational::from_integer(0.into()); size];
        for &(c, x) in v {
            out[c as usize] = Rational::from_integer(x.into());
        }
        out
    };
    let tables: Vec<_> = symmetric_generators(n)
        .into_iter()
        .map(|g| move_table(n, &Move::Act(g)))
        .collect();
    let mut s = QSubspace::zero(size);
    let mut basis: Vec<SparseInt> = Vec::new();
    let accept = |v: SparseInt, s: &mut QSubspace, basis: &mut Vec<SparseInt>| {
        let d = dense(&v);
        if !s.contains(&d).expect("ambient n!") {
            *s = s.sum(&QSubspace::span(size, vec![d])).expect("ambient n!");
            basis.push(v);
        }
    };
    for v in seeds {
        accept(v.clone(), &mut s, &mut basis);
    }
    let mut next = 0;
    while next < basis.len() {
        for t in &tables {
            let image = apply_int(t, &basis[next]);
            accept(image, &mut s, &mut basis);
        }
        next += 1;
    }
    (s, basis)
}

/// The submodule of `ℚ𝕊ₙ` generated by integer vectors.
pub fn spin(n: usize, seeds: &[SparseInt]) -> QSubspace {
    spin_with_basis(n, seeds).0
}

/// [`spin`] together with a basis of independent sparse integer vectors
/// drawn from the seeds and their images.
pub fn spin_with_basis(n: usize, seeds: &[SparseInt]) -> (QSubspace, Vec<SparseInt>) {
    for offset in 0..3 {
        if let Some(found) = spin_with_offset(n, seeds, offset) {
            return found;
        }
    }
    spin_exact(n, seeds)
}

/// `span{v∗σ : σ ∈ 𝕊ₙ}`.
pub fn cyclic_span(v: &Element) -> Result<QSubspace> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let seed = to_primitive_sparse(v)
        .ok_or_else(|| Error::Unsupported("coefficients exceed i64".into()))?;
    Ok(spin(v.arity(), &[seed]))
}

/// Submodule generated by all elements of a subspace.
pub fn submodule_generated(n: usize, s: &QSubspace) -> QSubspace {
    let rows: Option<Vec<SparseInt>> = integer_rows(s).into_iter().collect();
    match rows {
        Some(rows) => spin(n, &rows),
        None => spin_exact_rational(n, s),
    }
}

fn spin_exact_rational(n: usize, s: &QSubspace) -> QSubspace {
    let size = s.ambient();
    let mut cur = s.clone();
    loop {
        let mut rows = cur.rows();
        for g in symmetric_generators(n) {
            let table = move_table(n, &Move::Act(g));
            for i in 0..cur.dim() {
                rows.push(crate::operad::index::apply_dense(&table, &cur.row(i), size));
            }
        }
        let next = QSubspace::span(size, rows);
        if next.dim() == cur.dim() {
            return next;
        }
        cur = next;
    }
}

/// A single generator of a submodule: a seeded random integer combination of
/// the basis, checked to spin out the whole submodule.
pub fn cyclic_generator(w: &QSubspace, seed: u64) -> Result<Element> {
    let n = super::arity_of_ambient(w.ambient())?;
    if w.is_zero() {
        return Err(Error::ZeroVector);
    }
    super::check_submodule(w)?;
    let rows: Vec<Vec<i64>> = (0..w.dim())
        .map(|i| {
            primitive_integer(&w.row(i))
                .ok_or_else(|| Error::Unsupported("basis exceeds i64".into()))
        })
        .collect::<Result<_>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..16 {
        let coeffs: Vec<i64> = (0..rows.len()).map(|_| rng.gen_range(-8..=8)).collect();
        let mut v = vec![0i64; w.ambient()];
        for (row, &c) in rows.iter().zip(&coeffs) {
            if c == 0 {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(row) {
                *x = x
                    .checked_add(
                        c.checked_mul(y)
                            .ok_or(Error::CapExceeded("coefficient".into(), i64::MAX as u64))?,
                    )
                    .ok_or(Error::CapExceeded("coefficient".into(), i64::MAX as u64))?;
            }
        }
        let g = OperadElement::from_dense(
            n,
            &v.iter()
                .map(|&x| Rational::from_integer(x.into()))
                .collect::<Vec<_>>(),
        )?;
        if g.is_zero() {
            continue;
        }
        if cyclic_span(&g)?.dim() == w.dim() {
            return Ok(g);
        }
    }
    Err(Error::NotSubmodule("no cyclic generator found".into()))
}
