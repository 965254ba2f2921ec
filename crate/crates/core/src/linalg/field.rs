use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::linalg::{gauss_jordan, modular, Subspace};
use crate::Rational;

/// Exact scalar fields usable by the generic linear algebra.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_i64(v: i64) -> Self;

    /// Image of a rational, or `None` when the denominator vanishes.
    fn from_rational(q: &Rational) -> Option<Self>;

    /// Canonical reduced row echelon form of the span of `rows`.
    fn span(ambient: usize, rows: Vec<Vec<Self>>) -> Subspace<Self> {
        gauss_jordan(ambient, rows)
    }
}

impl Field for Rational {
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(v.into())
    }

    fn from_rational(q: &Rational) -> Option<Self> {
        Some(q.clone())
    }

    fn span(ambient: usize, rows: Vec<Vec<Self>>) -> Subspace<Self> {
        modular::span_rational(ambient, rows)
    }
}

/// The prime field 𝔽_P for a prime `P < 2^63`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let s = self.0 + o.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp(if self.0 >= o.0 {
            self.0 - o.0
        } else {
            self.0 + P - o.0
        })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self * o.inv().expect("division by zero in Fp")
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    fn from_rational(q: &Rational) -> Option<Self> {
        let p = num_bigint::BigInt::from(P);
        let reduce = |x: &num_bigint::BigInt| -> u64 {
            let r = ((x % &p) + &p) % &p;
            r.try_into().expect("residue fits")
        };
        let den = Fp::<P>(reduce(q.denom()));
        den.inv().map(|d| Fp::<P>(reduce(q.numer())) * d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = Fp<7>;

    #[test]
    fn arithmetic() {
        assert_eq!(F7::new(3) + F7::new(5), F7::new(1));
        assert_eq!(F7::new(3) - F7::new(5), F7::new(5));
        assert_eq!(F7::new(3) * F7::new(5), F7::new(1));
        assert_eq!(F7::new(3) / F7::new(5), F7::new(2));
        assert_eq!(-F7::new(3), F7::new(4));
        assert_eq!(F7::new(0).inv(), None);
        assert_eq!(F7::from_i64(-1), F7::new(6));
    }

    #[test]
    fn rational_images() {
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(F7::from_rational(&half), Some(F7::new(4)));
        let seventh = Rational::new(1.into(), 7.into());
        assert_eq!(F7::from_rational(&seventh), None);
    }
}
