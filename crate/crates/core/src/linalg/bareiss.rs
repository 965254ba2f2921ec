//! Fraction-free elimination over ℤ, used when the modular route gives up.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::linalg::Subspace;
use crate::Rational;

/// Exact RREF of the span of rational rows via Bareiss elimination.
pub fn bareiss(ambient: usize, rows: Vec<Vec<Rational>>) -> Subspace<Rational> {
    let mut a: Vec<Vec<BigInt>> = rows
        .into_iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
            row.iter().map(|q| q.numer() * (&l / q.denom())).collect()
        })
        .filter(|row: &Vec<BigInt>| row.iter().any(|x| !x.is_zero()))
        .collect();
    let m = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ambient {
        if r == m {
            break;
        }
        let Some(found) = (r..m).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, found);
        for i in r + 1..m {
            for j in col + 1..ambient {
                let v = (&a[r][col] * &a[i][j] - &a[i][col] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[r][col].clone();
        pivots.push(col);
        r += 1;
    }
    let mut q: Vec<Vec<Rational>> = a
        .into_iter()
        .take(r)
        .map(|row| row.into_iter().map(Rational::from_integer).collect())
        .collect();
    for i in (0..r).rev() {
        let p = pivots[i];
        let inv = Rational::one() / q[i][p].clone();
        for x in q[i][p..].iter_mut() {
            *x = &*x * &inv;
        }
        for k in 0..i {
            let f = q[k][p].clone();
            if f.is_zero() {
                continue;
            }
            let (top, bottom) = q.split_at_mut(i);
            for (x, y) in top[k][p..].iter_mut().zip(&bottom[0][p..]) {
                *x -= &f * y;
            }
        }
    }
    let mut is_pivot = vec![false; ambient];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let coeffs = q
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::gauss_jordan;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter()
            .map(|&x| Rational::from_integer(x.into()))
            .collect()
    }

    #[test]
    fn agrees_with_gauss_jordan() {
        let rows = vec![
            q(&[2, 4, 1, 0]),
            q(&[1, 2, 0, 3]),
            q(&[3, 6, 1, 3]),
            q(&[0, 0, 5, 1]),
        ];
        assert_eq!(bareiss(4, rows.clone()), gauss_jordan(4, rows));
        let rows = vec![q(&[0, 0, 0]), q(&[0, 3, 6])];
        let s = bareiss(3, rows);
        assert_eq!(s.pivots(), &[1]);
        assert_eq!(s.row(0), q(&[0, 1, 2]));
    }
}
