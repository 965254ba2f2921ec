//! Multimodular row reduction with exact re-verification.
//!
//! Spans of integer vectors are echelonized modulo 30-bit primes, the RREF is
//! lifted to ℚ by CRT and rational reconstruction, and every input vector is
//! then checked for membership over the integers. Anything that fails falls
//! back to fraction-free elimination.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::linalg::{bareiss, gauss_jordan, Subspace};
use crate::Rational;

/// Updates folded into a `u64` accumulator before a reduction pass:
/// `(p-1) + LAZY·(p-1)² < 2^64` for `p < 2^30`.
const LAZY: usize = 15;

/// Primes just below `2^30`, largest first.
pub fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let is_prime = |n: u64| (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
        (1u64 << 29..1u64 << 30)
            .rev()
            .filter(|&n| is_prime(n))
            .take(64)
            .collect()
    })
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn residue(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

/// Semi-echelon basis modulo `p`, rows kept sorted by leading column with
/// leading coefficient 1.
#[derive(Clone)]
pub(crate) struct ModEchelon {
    p: u64,
    n: usize,
    leads: Vec<usize>,
    rows: Vec<Vec<u32>>,
}

impl ModEchelon {
    pub(crate) fn new(p: u64, n: usize) -> Self {
        ModEchelon {
            p,
            n,
            leads: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `acc` (entries `< p`) against the basis; entries end `< p`.
    pub(crate) fn reduce(&self, acc: &mut [u64]) {
        let p = self.p;
        let mut pending = 0;
        for (&c, row) in self.leads.iter().zip(&self.rows) {
            let f = acc[c] % p;
            if f == 0 {
                acc[c] = 0;
                continue;
            }
            let g = p - f;
            for (a, &r) in acc[c..].iter_mut().zip(&row[c..]) {
                *a += g * r as u64;
            }
            pending += 1;
            if pending == LAZY {
                for a in acc[c..].iter_mut() {
                    *a %= p;
                }
                pending = 0;
            }
        }
        for a in acc.iter_mut() {
            *a %= p;
        }
    }

    /// Inserts an already reduced vector; returns false if it is zero.
    pub(crate) fn insert_reduced(&mut self, acc: &[u64]) -> bool {
        let Some(lead) = acc.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(acc[lead], self.p);
        let row: Vec<u32> = acc.iter().map(|&x| (x * inv % self.p) as u32).collect();
        let at = self.leads.partition_point(|&c| c < lead);
        self.leads.insert(at, lead);
        self.rows.insert(at, row);
        true
    }

    pub(crate) fn offer(&mut self, v: &[i64]) -> bool {
        let mut acc: Vec<u64> = v.iter().map(|&x| residue(x, self.p)).collect();
        self.reduce(&mut acc);
        self.insert_reduced(&acc)
    }

    pub(crate) fn offer_sparse(&mut self, v: &[(u32, i64)]) -> bool {
        let mut acc = vec![0u64; self.n];
        for &(c, x) in v {
            acc[c as usize] = residue(x, self.p);
        }
        self.reduce(&mut acc);
        self.insert_reduced(&acc)
    }

    pub(crate) fn contains_sparse(&self, v: &[(u32, i64)]) -> bool {
        let mut acc = vec![0u64; self.n];
        for &(c, x) in v {
            acc[c as usize] = residue(x, self.p);
        }
        self.reduce(&mut acc);
        acc.iter().all(|&x| x == 0)
    }

    /// Back substitution to the reduced form: pivots and, per row, the
    /// entries at the non-pivot columns.
    pub(crate) fn rref(&self) -> (Vec<usize>, Vec<Vec<u32>>) {
        let p = self.p;
        let r = self.rows.len();
        let mut done: Vec<Vec<u32>> = vec![Vec::new(); r];
        for i in (0..r).rev() {
            let src = &self.rows[i];
            let mut acc: Vec<u64> = src.iter().map(|&x| x as u64).collect();
            let mut pending = 0;
            for j in i + 1..r {
                let c = self.leads[j];
                let f = src[c] as u64 % p;
                if f == 0 {
                    continue;
                }
                let g = p - f;
                for (a, &x) in acc[c..].iter_mut().zip(&done[j][c..]) {
                    *a += g * x as u64;
                }
                pending += 1;
                if pending == LAZY {
                    for a in acc[c..].iter_mut() {
                        *a %= p;
                    }
                    pending = 0;
                }
            }
            done[i] = acc.into_iter().map(|a| (a % p) as u32).collect();
        }
        let mut is_pivot = vec![false; self.n];
        for &c in &self.leads {
            is_pivot[c] = true;
        }
        let coeffs = done
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .enumerate()
                    .filter(|(c, _)| !is_pivot[*c])
                    .map(|(_, x)| x)
                    .collect()
            })
            .collect();
        (self.leads.clone(), coeffs)
    }
}

/// Wang's rational reconstruction of `x mod m` with both bounds `√(m/2)`.
fn reconstruct_u128(x: u128, m: u128) -> Option<(i128, i128)> {
    let bound = ((m / 2) as f64).sqrt() as u128;
    let (mut r0, mut r1) = (m as i128, x as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 as u128 > bound {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1.unsigned_abs() > bound || t1 == 0 {
        return None;
    }
    if r1.unsigned_abs().gcd(&t1.unsigned_abs()) != 1 {
        return None;
    }
    Some(if t1 < 0 { (-r1, -t1) } else { (r1, t1) })
}

fn reconstruct_big(x: &BigInt, m: &BigInt) -> Option<(BigInt, BigInt)> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), x.clone());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        (r0, r1) = (r1, r2);
        (t0, t1) = (t1, t2);
    }
    if t1.abs() > bound || t1.is_zero() || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(if t1.is_negative() {
        (-r1, -t1)
    } else {
        (r1, t1)
    })
}

enum Residues {
    Small { m: u128, xs: Vec<Vec<u128>> },
    Big { m: BigInt, xs: Vec<Vec<BigInt>> },
}

impl Residues {
    fn fold(&mut self, p: u64, ys: &[Vec<u32>]) {
        if let Residues::Small { m, xs } = self {
            if m.leading_zeros() < 32 {
                let m = BigInt::from(*m);
                let xs = xs
                    .iter()
                    .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
                    .collect();
                *self = Residues::Big { m, xs };
            }
        }
        match self {
            Residues::Small { m, xs } => {
                let m_inv = inv_mod((*m % p as u128) as u64, p);
                for (row, yrow) in xs.iter_mut().zip(ys) {
                    for (x, &y) in row.iter_mut().zip(yrow) {
                        let xm = (*x % p as u128) as u64;
                        let d = (y as u64 + p - xm) % p * m_inv % p;
                        *x += *m * d as u128;
                    }
                }
                *m *= p as u128;
            }
            Residues::Big { m, xs } => {
                let pb = BigInt::from(p);
                let m_inv = inv_mod((&*m % &pb).to_u64().unwrap(), p);
                for (row, yrow) in xs.iter_mut().zip(ys) {
                    for (x, &y) in row.iter_mut().zip(yrow) {
                        let xm = (&*x % &pb).to_u64().unwrap();
                        let d = (y as u64 + p - xm) % p * m_inv % p;
                        *x += &*m * BigInt::from(d);
                    }
                }
                *m *= pb;
            }
        }
    }

    fn reconstruct(&self) -> Option<Vec<Vec<Rational>>> {
        match self {
            Residues::Small { m, xs } => xs
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&x| {
                            reconstruct_u128(x, *m)
                                .map(|(a, b)| Rational::new(BigInt::from(a), BigInt::from(b)))
                        })
                        .collect()
                })
                .collect(),
            Residues::Big { m, xs } => xs
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|x| reconstruct_big(x, m).map(|(a, b)| Rational::new(a, b)))
                        .collect()
                })
                .collect(),
        }
    }
}

fn rational_mod(q: &Rational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let n = q.numer().mod_floor(&pb).to_u64()?;
    let d = q.denom().mod_floor(&pb).to_u64()?;
    if d == 0 {
        return None;
    }
    Some(n * inv_mod(d, p) % p)
}

/// Elementwise comparison of pivot sets of equal length.
fn pivots_le(a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Lifts the RREF of the span of independent integer vectors to ℚ.
fn lift(ambient: usize, accepted: &[Vec<i64>], skip: usize) -> Option<Subspace<Rational>> {
    let r = accepted.len();
    let mut best: Option<(Vec<usize>, Residues)> = None;
    let mut candidate: Option<Vec<Vec<Rational>>> = None;
    let mut folded = 0usize;
    for &p in primes().iter().skip(skip) {
        let mut ech = ModEchelon::new(p, ambient);
        for v in accepted {
            ech.offer(v);
        }
        if ech.rank() < r {
            continue;
        }
        let (piv, coeffs) = ech.rref();
        match &mut best {
            None => {
                let xs = coeffs
                    .iter()
                    .map(|row| row.iter().map(|&x| x as u128).collect())
                    .collect();
                best = Some((piv, Residues::Small { m: p as u128, xs }));
                folded = 1;
            }
            Some((bp, res)) => {
                if piv != *bp {
                    if pivots_le(&piv, bp) {
                        let xs = coeffs
                            .iter()
                            .map(|row| row.iter().map(|&x| x as u128).collect())
                            .collect();
                        best = Some((piv, Residues::Small { m: p as u128, xs }));
                        candidate = None;
                        folded = 1;
                    }
                    continue;
                }
                if let Some(cand) = &candidate {
                    let agrees = cand.iter().zip(&coeffs).all(|(crow, prow)| {
                        crow.iter()
                            .zip(prow)
                            .all(|(q, &x)| rational_mod(q, p) == Some(x as u64))
                    });
                    if agrees {
                        let (bp, _) = best.take().unwrap();
                        return Some(Subspace::from_parts(ambient, bp, candidate.take().unwrap()));
                    }
                }
                res.fold(p, &coeffs);
                folded += 1;
            }
        }
        // reconstruction is tried at geometrically spaced prime counts
        candidate = if folded.is_power_of_two() {
            best.as_ref().and_then(|(_, res)| res.reconstruct())
        } else {
            None
        };
    }
    None
}

/// Integer form of a rational subspace for fast exact membership tests.
pub struct IntegerView {
    ambient: usize,
    /// column → index into pivots, or `u32::MAX`
    pivot_pos: Vec<u32>,
    /// column → index into free columns, or `u32::MAX`
    free_pos: Vec<u32>,
    denoms: Vec<i64>,
    /// `numers[i][j] = coeffs[i][j]·denoms[j]`
    numers: Vec<Vec<i64>>,
    max_numer: u128,
    max_denom: u128,
}

impl IntegerView {
    pub fn new(s: &Subspace<Rational>) -> Option<IntegerView> {
        let n = s.ambient();
        let f = s.free_columns().len();
        let mut pivot_pos = vec![u32::MAX; n];
        for (i, &c) in s.pivots().iter().enumerate() {
            pivot_pos[c] = i as u32;
        }
        let mut free_pos = vec![u32::MAX; n];
        for (j, &c) in s.free_columns().iter().enumerate() {
            free_pos[c] = j as u32;
        }
        let mut denoms = Vec::with_capacity(f);
        for j in 0..f {
            let mut l = BigInt::one();
            for i in 0..s.dim() {
                l = l.lcm(s.coefficients(i)[j].denom());
            }
            denoms.push(l.to_i64()?);
        }
        let mut numers = Vec::with_capacity(s.dim());
        let mut max_numer = 0u128;
        for i in 0..s.dim() {
            let mut row = Vec::with_capacity(f);
            for (j, q) in s.coefficients(i).iter().enumerate() {
                let x = (q.numer() * (BigInt::from(denoms[j]) / q.denom())).to_i64()?;
                max_numer = max_numer.max(x.unsigned_abs() as u128);
                row.push(x);
            }
            numers.push(row);
        }
        let max_denom = denoms
            .iter()
            .map(|d| d.unsigned_abs() as u128)
            .max()
            .unwrap_or(1);
        Some(IntegerView {
            ambient: n,
            pivot_pos,
            free_pos,
            denoms,
            numers,
            max_numer,
            max_denom,
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Exact membership of a sparse integer vector; `None` if the check could
    /// overflow `i128`.
    pub fn contains_sparse(&self, v: &[(u32, i64)]) -> Option<bool> {
        let f = self.denoms.len();
        let max_v = v
            .iter()
            .map(|(_, x)| x.unsigned_abs() as u128)
            .max()
            .unwrap_or(0);
        let terms = v.len() as u128 + 1;
        let limit = 1u128 << 125;
        if max_v
            .saturating_mul(self.max_numer.max(self.max_denom))
            .saturating_mul(terms)
            >= limit
        {
            return None;
        }
        let mut acc = vec![0i128; f];
        let mut target = vec![0i128; f];
        for &(c, x) in v {
            let c = c as usize;
            let pi = self.pivot_pos[c];
            if pi != u32::MAX {
                for (a, &y) in acc.iter_mut().zip(&self.numers[pi as usize]) {
                    *a += x as i128 * y as i128;
                }
            } else {
                let j = self.free_pos[c] as usize;
                target[j] = x as i128 * self.denoms[j] as i128;
            }
        }
        Some(acc == target)
    }

    pub fn contains_dense(&self, v: &[i64]) -> Option<bool> {
        let sparse: Vec<(u32, i64)> = v
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(c, &x)| (c as u32, x))
            .collect();
        self.contains_sparse(&sparse)
    }
}

/// Membership with big integer numerators over per-column denominators.
struct BigView {
    pivot_pos: Vec<u32>,
    free_pos: Vec<u32>,
    denoms: Vec<BigInt>,
    numers: Vec<Vec<BigInt>>,
}

impl BigView {
    fn new(s: &Subspace<Rational>) -> BigView {
        let n = s.ambient();
        let mut pivot_pos = vec![u32::MAX; n];
        for (i, &c) in s.pivots().iter().enumerate() {
            pivot_pos[c] = i as u32;
        }
        let mut free_pos = vec![u32::MAX; n];
        for (j, &c) in s.free_columns().iter().enumerate() {
            free_pos[c] = j as u32;
        }
        let denoms: Vec<BigInt> = (0..s.free_columns().len())
            .map(|j| (0..s.dim()).fold(BigInt::one(), |l, i| l.lcm(s.coefficients(i)[j].denom())))
            .collect();
        let numers = (0..s.dim())
            .map(|i| {
                s.coefficients(i)
                    .iter()
                    .zip(&denoms)
                    .map(|(q, d)| q.numer() * (d / q.denom()))
                    .collect()
            })
            .collect();
        BigView {
            pivot_pos,
            free_pos,
            denoms,
            numers,
        }
    }

    fn contains_sparse(&self, v: &[(u32, i64)]) -> bool {
        let f = self.denoms.len();
        let mut acc = vec![BigInt::zero(); f];
        let mut target = vec![BigInt::zero(); f];
        for &(c, x) in v {
            let c = c as usize;
            let x = BigInt::from(x);
            let pi = self.pivot_pos[c];
            if pi != u32::MAX {
                for (a, y) in acc.iter_mut().zip(&self.numers[pi as usize]) {
                    if !y.is_zero() {
                        *a += &x * y;
                    }
                }
            } else {
                let j = self.free_pos[c] as usize;
                target[j] = &x * &self.denoms[j];
            }
        }
        acc == target
    }
}

fn sparse_to_rational(ambient: usize, v: &[(u32, i64)]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); ambient];
    for &(c, x) in v {
        out[c as usize] = Rational::from_integer(x.into());
    }
    out
}

/// Exact membership of an integer vector, using the integer view when it
/// exists and rational arithmetic otherwise.
pub fn contains_exact(
    s: &Subspace<Rational>,
    view: Option<&IntegerView>,
    v: &[(u32, i64)],
) -> bool {
    if let Some(ans) = view.and_then(|w| w.contains_sparse(v)) {
        return ans;
    }
    s.contains(&sparse_to_rational(s.ambient(), v))
        .expect("ambient checked")
}

/// Incremental span of integer vectors: rank decisions modulo a prime, the
/// final subspace exact.
pub struct IntSpanBuilder {
    ambient: usize,
    skip: usize,
    echelon: ModEchelon,
    accepted: Vec<Vec<i64>>,
    offered: Vec<Vec<(u32, i64)>>,
}

impl IntSpanBuilder {
    pub fn new(ambient: usize) -> Self {
        IntSpanBuilder::with_prime_offset(ambient, 0)
    }

    /// Starts from the `skip`-th prime; used to retry after a failed
    /// verification.
    pub fn with_prime_offset(ambient: usize, skip: usize) -> Self {
        let p = primes()[skip % primes().len()];
        IntSpanBuilder {
            ambient,
            skip,
            echelon: ModEchelon::new(p, ambient),
            accepted: Vec::new(),
            offered: Vec::new(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient
    }

    /// Offers a sparse vector; returns true when it raised the rank.
    pub fn offer_sparse(&mut self, v: Vec<(u32, i64)>) -> bool {
        if v.is_empty() {
            return false;
        }
        if self.is_full() {
            return false;
        }
        let accepted = self.echelon.offer_sparse(&v);
        if accepted {
            let mut dense = vec![0i64; self.ambient];
            for &(c, x) in &v {
                dense[c as usize] = x;
            }
            self.accepted.push(dense);
        }
        self.offered.push(v);
        accepted
    }

    pub fn offer(&mut self, v: &[i64]) -> bool {
        let sparse = v
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(c, &x)| (c as u32, x))
            .collect();
        self.offer_sparse(sparse)
    }

    /// Membership modulo the working prime.
    pub fn probably_contains(&self, v: &[(u32, i64)]) -> bool {
        self.echelon.contains_sparse(v)
    }

    /// Lifts and verifies; `None` when verification fails.
    pub fn try_finish(&self) -> Option<Subspace<Rational>> {
        if self.accepted.is_empty() {
            return Some(Subspace::zero(self.ambient));
        }
        if self.is_full() {
            return Some(Subspace::full(self.ambient));
        }
        let s = lift(self.ambient, &self.accepted, self.skip + 1)?;
        let ok = match IntegerView::new(&s) {
            Some(view) => self
                .offered
                .iter()
                .all(|v| contains_exact(&s, Some(&view), v)),
            None => {
                let view = BigView::new(&s);
                self.offered.iter().all(|v| view.contains_sparse(v))
            }
        };
        ok.then_some(s)
    }

    /// Exact span of everything offered.
    pub fn finish(self) -> Subspace<Rational> {
        if let Some(s) = self.try_finish() {
            return s;
        }
        let rows = self
            .offered
            .iter()
            .map(|v| sparse_to_rational(self.ambient, v))
            .collect();
        bareiss(self.ambient, rows)
    }

    pub fn offered(&self) -> &[Vec<(u32, i64)>] {
        &self.offered
    }
}

/// Scales a rational vector to a primitive integer vector, if it fits `i64`.
pub fn primitive_integer(v: &[Rational]) -> Option<Vec<i64>> {
    let mut l = BigInt::one();
    for q in v {
        if !q.is_zero() {
            l = l.lcm(q.denom());
        }
    }
    let ints: Vec<BigInt> = v.iter().map(|q| q.numer() * (&l / q.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return Some(vec![0; v.len()]);
    }
    ints.iter()
        .map(|x| {
            let y = (x / &g).to_i64()?;
            (y.unsigned_abs() < 1 << 62).then_some(y)
        })
        .collect()
}

/// Primitive integer multiples of the basis rows, sparse; `None` for rows
/// that do not fit `i64`.
pub fn integer_rows(s: &Subspace<Rational>) -> Vec<Option<Vec<(u32, i64)>>> {
    (0..s.dim())
        .map(|i| {
            primitive_integer(&s.row(i)).map(|v| {
                v.into_iter()
                    .enumerate()
                    .filter(|(_, x)| *x != 0)
                    .map(|(c, x)| (c as u32, x))
                    .collect()
            })
        })
        .collect()
}

/// The `Field::span` route for ℚ.
pub fn span_rational(ambient: usize, rows: Vec<Vec<Rational>>) -> Subspace<Rational> {
    if ambient * rows.len() <= 256 {
        return gauss_jordan(ambient, rows);
    }
    let mut builder = IntSpanBuilder::new(ambient);
    for row in &rows {
        match primitive_integer(row) {
            Some(v) => {
                builder.offer(&v);
            }
            None => return bareiss(ambient, rows),
        }
    }
    match builder.try_finish() {
        Some(s) => s,
        None => bareiss(ambient, rows),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn prime_table() {
        let ps = primes();
        assert_eq!(ps.len(), 64);
        assert!(ps.iter().all(|&p| p < 1 << 30 && p > 1 << 29));
        assert_eq!(ps[0], 1073741789);
    }

    #[test]
    fn reconstruction() {
        let m: u128 = 1073741789 * 1073741783;
        for (a, b) in [(3i128, 7i128), (-5, 12), (0, 1), (12345, 65537)] {
            let x = (a.rem_euclid(m as i128) as u128 * {
                // b⁻¹ mod m via extended Euclid on i128
                let (mut r0, mut r1) = (m as i128, b);
                let (mut t0, mut t1) = (0i128, 1i128);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (t0, t1) = (t1, t0 - q * t1);
                }
                t0.rem_euclid(m as i128) as u128
            }) % m;
            assert_eq!(reconstruct_u128(x, m), Some((a, b)));
        }
    }

    fn random_rows(rng: &mut ChaCha8Rng, n: usize, rank: usize, rows: usize) -> Vec<Vec<i64>> {
        let basis: Vec<Vec<i64>> = (0..rank)
            .map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect())
            .collect();
        (0..rows)
            .map(|_| {
                let c: Vec<i64> = (0..rank).map(|_| rng.gen_range(-2..=2)).collect();
                (0..n)
                    .map(|j| (0..rank).map(|i| c[i] * basis[i][j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn builder_matches_bareiss() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for trial in 0..12 {
            let n = 8 + trial * 2;
            let rank = rng.gen_range(0..n);
            let rows = random_rows(&mut rng, n, rank, rank + 5);
            let mut b = IntSpanBuilder::new(n);
            for r in &rows {
                b.offer(r);
            }
            let fast = b.try_finish().expect("verified");
            let q: Vec<Vec<Rational>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| Rational::from_integer(x.into()))
                        .collect()
                })
                .collect();
            assert_eq!(fast, bareiss(n, q.clone()));
            assert_eq!(fast, gauss_jordan(n, q));
        }
    }

    #[test]
    fn integer_view_membership() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let rows = random_rows(&mut rng, 30, 12, 12);
        let q: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| Rational::from_integer(x.into()))
                    .collect()
            })
            .collect();
        let s = gauss_jordan(30, q);
        let view = IntegerView::new(&s).unwrap();
        for r in &rows {
            assert_eq!(view.contains_dense(r), Some(true));
        }
        let mut outside = rows[0].clone();
        outside[s.free_columns()[0]] += 1;
        assert_eq!(view.contains_dense(&outside), Some(false));
    }

    #[test]
    fn primitive_scaling() {
        let v = vec![
            Rational::new(1.into(), 2.into()),
            Rational::new((-3).into(), 4.into()),
            Rational::zero(),
        ];
        assert_eq!(primitive_integer(&v), Some(vec![2, -3, 0]));
    }
}
