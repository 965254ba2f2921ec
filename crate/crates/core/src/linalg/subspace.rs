use crate::error::{Error, Result};
use crate::linalg::Field;

/// A subspace of `T^ambient` in canonical reduced row echelon form.
///
/// Row `i` is `e_{pivots[i]} + Σ_j coeffs[i][j]·e_{free[j]}`, pivots strictly
/// increasing and each row's pivot its leftmost nonzero entry. Equal
/// subspaces have identical fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<T> {
    ambient: usize,
    pivots: Vec<usize>,
    free: Vec<usize>,
    coeffs: Vec<Vec<T>>,
}

impl<T: Field> Subspace<T> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            pivots: Vec::new(),
            free: (0..ambient).collect(),
            coeffs: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            pivots: (0..ambient).collect(),
            free: Vec::new(),
            coeffs: vec![Vec::new(); ambient],
        }
    }

    /// Assembles a subspace from RREF data; `coeffs` is indexed by the free
    /// columns (the complement of `pivots`).
    pub(crate) fn from_parts(ambient: usize, pivots: Vec<usize>, coeffs: Vec<Vec<T>>) -> Self {
        let mut is_pivot = vec![false; ambient];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..ambient).filter(|&c| !is_pivot[c]).collect();
        debug_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(coeffs.iter().all(|r| r.len() == free.len()));
        debug_assert!(pivots
            .iter()
            .zip(&coeffs)
            .all(|(&p, row)| { free.iter().zip(row).all(|(&c, x)| c > p || x.is_zero()) }));
        Subspace {
            ambient,
            pivots,
            free,
            coeffs,
        }
    }

    /// Canonical RREF of the span of `rows`.
    pub fn span(ambient: usize, rows: Vec<Vec<T>>) -> Self {
        T::span(ambient, rows)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.pivots.len() == self.ambient
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    /// Row `i` restricted to the free columns.
    pub fn coefficients(&self, i: usize) -> &[T] {
        &self.coeffs[i]
    }

    /// Basis row `i` as a dense vector.
    pub fn row(&self, i: usize) -> Vec<T> {
        let mut v = vec![T::zero(); self.ambient];
        v[self.pivots[i]] = T::one();
        for (&c, x) in self.free.iter().zip(&self.coeffs[i]) {
            v[c] = x.clone();
        }
        v
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        (0..self.dim()).map(|i| self.row(i)).collect()
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.ambient {
            return Err(Error::AmbientMismatch(self.ambient, len));
        }
        Ok(())
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[T]) -> Result<Option<Vec<T>>> {
        self.check_len(v.len())?;
        let coords: Vec<T> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        for (j, &c) in self.free.iter().enumerate() {
            let mut acc = T::zero();
            for (i, x) in coords.iter().enumerate() {
                if !x.is_zero() && !self.coeffs[i][j].is_zero() {
                    acc = acc + x.clone() * self.coeffs[i][j].clone();
                }
            }
            if acc != v[c] {
                return Ok(None);
            }
        }
        Ok(Some(coords))
    }

    pub fn contains(&self, v: &[T]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn contains_subspace(&self, other: &Subspace<T>) -> Result<bool> {
        self.check_len(other.ambient)?;
        for i in 0..other.dim() {
            if !self.contains(&other.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A basis of the orthogonal complement under the standard pairing.
    pub fn complement_vectors(&self) -> Vec<Vec<T>> {
        self.free
            .iter()
            .enumerate()
            .map(|(j, &c)| {
                let mut v = vec![T::zero(); self.ambient];
                v[c] = T::one();
                for (i, &p) in self.pivots.iter().enumerate() {
                    v[p] = -self.coeffs[i][j].clone();
                }
                v
            })
            .collect()
    }

    pub fn orthogonal_complement(&self) -> Subspace<T> {
        Subspace::span(self.ambient, self.complement_vectors())
    }

    pub fn sum(&self, other: &Subspace<T>) -> Result<Subspace<T>> {
        self.check_len(other.ambient)?;
        let mut rows = self.rows();
        rows.extend(other.rows());
        Ok(Subspace::span(self.ambient, rows))
    }

    /// `a ∩ b = (a^⊥ + b^⊥)^⊥`.
    pub fn intersect(&self, other: &Subspace<T>) -> Result<Subspace<T>> {
        self.check_len(other.ambient)?;
        if self.is_full() {
            return Ok(other.clone());
        }
        if other.is_full() {
            return Ok(self.clone());
        }
        let mut perp = self.complement_vectors();
        perp.extend(other.complement_vectors());
        Ok(Subspace::span(self.ambient, perp).orthogonal_complement())
    }

    /// Trace of a linear map restricted to this subspace. Each image of a
    /// basis row must lie in the subspace.
    pub fn trace_of<F>(&self, map: F) -> Result<T>
    where
        F: Fn(&[T]) -> Vec<T>,
    {
        let mut trace = T::zero();
        for i in 0..self.dim() {
            let image = map(&self.row(i));
            let coords = self.coordinates(&image)?.ok_or_else(|| {
                Error::NotInvariant(format!("image of basis row {i} leaves the subspace"))
            })?;
            trace = trace + coords[i].clone();
        }
        Ok(trace)
    }
}

/// Plain Gauss–Jordan elimination to canonical RREF.
pub fn gauss_jordan<T: Field>(ambient: usize, mut rows: Vec<Vec<T>>) -> Subspace<T> {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ambient {
        if rank == rows.len() {
            break;
        }
        let Some(found) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = T::one() / rows[rank][col].clone();
        for x in rows[rank].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    let mut is_pivot = vec![false; ambient];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let coeffs = rows
        .into_iter()
        .map(|row| {
            row.into_iter()
                .enumerate()
                .filter(|(c, _)| !is_pivot[*c])
                .map(|(_, x)| x)
                .collect()
        })
        .collect();
    Subspace::from_parts(ambient, pivots, coeffs)
}

/// Canonical RREF of the row space and its rank.
pub fn rref<T: Field>(ambient: usize, rows: Vec<Vec<T>>) -> (Subspace<T>, usize) {
    let s = Subspace::span(ambient, rows);
    let rank = s.dim();
    (s, rank)
}

/// Null space `{x : M·x = 0}` of a matrix given by its rows.
pub fn kernel<T: Field>(cols: usize, rows: Vec<Vec<T>>) -> Subspace<T> {
    Subspace::span(cols, rows).orthogonal_complement()
}

/// Trace of the matrix `l` (acting on column vectors) restricted to `w`.
pub fn trace_on_invariant_subspace<T: Field>(w: &Subspace<T>, l: &[Vec<T>]) -> Result<T> {
    if l.len() != w.ambient() || l.iter().any(|r| r.len() != w.ambient()) {
        return Err(Error::AmbientMismatch(w.ambient(), l.len()));
    }
    w.trace_of(|v| {
        l.iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Fp;
    use crate::Rational;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn qrows(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect()
    }

    #[test]
    fn rref_examples() {
        let (s, rank) = rref(3, qrows(&[&[0, 0, 0], &[0, 0, 0]]));
        assert_eq!(rank, 0);
        assert!(s.is_zero());
        let (s, rank) = rref(3, qrows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(rank, 3);
        assert!(s.is_full());
        let (s, rank) = rref(2, qrows(&[&[1, 2], &[2, 4]]));
        assert_eq!(rank, 1);
        assert_eq!(s.rows(), qrows(&[&[1, 2]]));
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel(2, qrows(&[&[0, 0]])).is_full());
        assert!(kernel(2, qrows(&[&[1, 0], &[0, 1]])).is_zero());
        let k = kernel(2, qrows(&[&[1, 1]]));
        assert_eq!(k.rows(), qrows(&[&[1, -1]]));
    }

    #[test]
    fn intersections() {
        let a = Subspace::span(3, qrows(&[&[1, 1, 0], &[0, 1, 1]]));
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert!(a.intersect(&Subspace::zero(3)).unwrap().is_zero());
        let l1 = Subspace::span(2, qrows(&[&[1, 0]]));
        let l2 = Subspace::span(2, qrows(&[&[1, 1]]));
        assert!(l1.intersect(&l2).unwrap().is_zero());
        assert!(l1.intersect(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn membership() {
        let a = Subspace::span(2, qrows(&[&[0, 1]]));
        assert!(a.contains(&[q(0), q(0)]).unwrap());
        assert!(a.contains(&a.row(0)).unwrap());
        assert!(!a.contains(&[q(1), q(0)]).unwrap());
        assert!(a.contains(&[q(1)]).is_err());
    }

    #[test]
    fn traces() {
        let w = Subspace::span(4, qrows(&[&[1, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]));
        let id: Vec<Vec<Rational>> = (0..4)
            .map(|i| (0..4).map(|j| q((i == j) as i64)).collect())
            .collect();
        assert_eq!(trace_on_invariant_subspace(&w, &id).unwrap(), q(3));
        let two: Vec<Vec<Rational>> = id
            .iter()
            .map(|r| r.iter().map(|x| x * q(2)).collect())
            .collect();
        assert_eq!(trace_on_invariant_subspace(&w, &two).unwrap(), q(6));
        let full = Subspace::<Rational>::full(2);
        let l = qrows(&[&[1, 2], &[3, 4]]);
        assert_eq!(trace_on_invariant_subspace(&full, &l).unwrap(), q(5));
        let swap = qrows(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let bad = Subspace::span(4, qrows(&[&[1, 0, 0, 0]]));
        assert!(trace_on_invariant_subspace(&bad, &swap).is_err());
    }

    #[test]
    fn generic_over_prime_field() {
        type F = Fp<101>;
        let rows: Vec<Vec<F>> = vec![
            vec![F::new(1), F::new(2), F::new(3)],
            vec![F::new(2), F::new(4), F::new(6)],
            vec![F::new(0), F::new(1), F::new(1)],
        ];
        let s = Subspace::span(3, rows);
        assert_eq!(s.dim(), 2);
        assert_eq!(s.pivots(), &[0, 1]);
        assert_eq!(s.orthogonal_complement().dim(), 1);
    }
}
