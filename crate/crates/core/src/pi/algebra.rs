use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::serde_rational;
use crate::Rational;

/// Largest dimension accepted for built-in algebras.
pub const MAX_BUILTIN_DIM: usize = 128;

/// A finite-dimensional unital associative algebra given by structure
/// constants `eᵢ·eⱼ = Σₖ c[i][j][k]·eₖ`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    pub name: String,
    dim: usize,
    unit: Vec<Rational>,
    table: Vec<Vec<(usize, Rational)>>,
}

impl fmt::Debug for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteAlgebra({}, dim {})", self.name, self.dim)
    }
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// `a·b` through a sparse product table.
pub(crate) fn multiply_with<T>(table: &[Vec<(usize, T)>], dim: usize, a: &[T], b: &[T]) -> Vec<T>
where
    T: Clone + Zero + Add<Output = T> + Mul<Output = T>,
{
    let mut out = vec![T::zero(); dim];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let xy = x.clone() * y.clone();
            for (k, c) in &table[i * dim + j] {
                out[*k] = out[*k].clone() + xy.clone() * c.clone();
            }
        }
    }
    out
}

impl FiniteAlgebra {
    /// Builds and verifies an algebra from `(i, j, k, c)` entries; repeated
    /// entries add up.
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        unit: Vec<Rational>,
        entries: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Invalid("algebra of dimension zero".into()));
        }
        if unit.len() != dim {
            return Err(Error::LengthMismatch {
                expected: dim,
                got: unit.len(),
            });
        }
        let mut dense = vec![vec![Rational::zero(); dim]; dim * dim];
        for (i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Invalid(format!(
                    "structure constant index ({i},{j},{k}) out of range"
                )));
            }
            dense[i * dim + j][k] += c;
        }
        let table = dense
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            })
            .collect();
        let a = FiniteAlgebra {
            name: name.into(),
            dim,
            unit,
            table,
        };
        a.verify()?;
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Rational] {
        &self.unit
    }

    pub fn basis(&self, i: usize) -> Vec<Rational> {
        (0..self.dim).map(|k| int((k == i) as i64)).collect()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i * self.dim + j]
    }

    pub fn multiply(&self, a: &[Rational], b: &[Rational]) -> Result<Vec<Rational>> {
        for v in [a, b] {
            if v.len() != self.dim {
                return Err(Error::LengthMismatch {
                    expected: self.dim,
                    got: v.len(),
                });
            }
        }
        Ok(multiply_with(&self.table, self.dim, a, b))
    }

    /// The product table over `i128` when every structure constant is an
    /// integer.
    pub(crate) fn integer_table(&self) -> Option<Vec<Vec<(usize, i128)>>> {
        self.table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(k, c)| {
                        c.is_integer()
                            .then(|| c.to_integer().to_i128())
                            .flatten()
                            .map(|x| (*k, x))
                    })
                    .collect()
            })
            .collect()
    }

    pub(crate) fn table(&self) -> &[Vec<(usize, Rational)>] {
        &self.table
    }

    /// Unit laws and associativity on all basis triples.
    pub fn verify(&self) -> Result<()> {
        for i in 0..self.dim {
            let e = self.basis(i);
            if multiply_with(&self.table, self.dim, &self.unit, &e) != e
                || multiply_with(&self.table, self.dim, &e, &self.unit) != e
            {
                return Err(Error::Invalid(format!("unit law fails on e{i}")));
            }
        }
        let times = |v: &[(usize, Rational)], j: usize, left: bool| {
            let mut out = vec![Rational::zero(); self.dim];
            for (i, c) in v {
                let prod = if left {
                    self.basis_product(*i, j)
                } else {
                    self.basis_product(j, *i)
                };
                for (k, d) in prod {
                    out[*k] += c * d;
                }
            }
            out
        };
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.basis_product(i, j);
                for k in 0..self.dim {
                    let left = times(ij, k, true);
                    let right = times(self.basis_product(j, k), i, false);
                    if left != right {
                        return Err(Error::Invalid(format!(
                            "associativity fails on (e{i},e{j},e{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim)
            .all(|i| (0..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn field() -> Self {
        FiniteAlgebra::new("field", 1, vec![int(1)], [(0, 0, 0, int(1))]).expect("field")
    }

    /// Exterior algebra on `k` anticommuting generators; basis `e_S` for
    /// subsets `S` encoded as bitmasks.
    pub fn grassmann(k: usize) -> Result<Self> {
        let dim = 1usize.checked_shl(k as u32).unwrap_or(usize::MAX);
        if dim > MAX_BUILTIN_DIM {
            return Err(Error::CapExceeded(
                format!("grassmann({k})"),
                MAX_BUILTIN_DIM as u64,
            ));
        }
        let mut entries = Vec::new();
        for s in 0..dim {
            for t in 0..dim {
                if s & t == 0 {
                    entries.push((s, t, s | t, int(grassmann_sign(s, t))));
                }
            }
        }
        let mut unit = vec![int(0); dim];
        unit[0] = int(1);
        FiniteAlgebra::new(format!("grassmann({k})"), dim, unit, entries)
    }

    /// Upper triangular `k×k` matrices, basis `E_{ab}` with `a ≤ b` in
    /// row-major order.
    pub fn ut(k: usize) -> Result<Self> {
        let cells: Vec<(usize, usize)> = (0..k).flat_map(|a| (a..k).map(move |b| (a, b))).collect();
        Self::matrix_units(format!("ut({k})"), k, cells)
    }

    pub fn mat(k: usize) -> Result<Self> {
        let cells: Vec<(usize, usize)> = (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).collect();
        Self::matrix_units(format!("mat({k})"), k, cells)
    }

    fn matrix_units(name: String, k: usize, cells: Vec<(usize, usize)>) -> Result<Self> {
        if k == 0 || cells.len() > MAX_BUILTIN_DIM {
            return Err(Error::CapExceeded(name, MAX_BUILTIN_DIM as u64));
        }
        let index = |a: usize, b: usize| cells.iter().position(|&c| c == (a, b));
        let mut entries = Vec::new();
        for (i, &(a, b)) in cells.iter().enumerate() {
            for (j, &(c, d)) in cells.iter().enumerate() {
                if b == c {
                    let k = index(a, d).expect("closed under products");
                    entries.push((i, j, k, int(1)));
                }
            }
        }
        let mut unit = vec![int(0); cells.len()];
        for a in 0..k {
            unit[index(a, a).expect("diagonal")] = int(1);
        }
        FiniteAlgebra::new(name, cells.len(), unit, entries)
    }

    pub fn builtin(name: &str, k: usize) -> Result<Self> {
        match name {
            "field" => Ok(Self::field()),
            "grassmann" => Self::grassmann(k),
            "ut" => Self::ut(k),
            "mat" => Self::mat(k),
            _ => Err(Error::Invalid(format!("unknown builtin algebra {name}"))),
        }
    }

    /// `builtin:grassmann:4`, `builtin:field`.
    pub fn from_uri(uri: &str) -> Result<Self> {
        let rest = uri
            .strip_prefix("builtin:")
            .ok_or_else(|| Error::Invalid(format!("not a builtin uri: {uri}")))?;
        let mut parts = rest.split(':');
        let name = parts.next().unwrap_or_default();
        let k = match parts.next() {
            Some(k) => k
                .parse()
                .map_err(|_| Error::Invalid(format!("bad size in {uri}")))?,
            None if name == "field" => 1,
            None => return Err(Error::Invalid(format!("missing size in {uri}"))),
        };
        if parts.next().is_some() {
            return Err(Error::Invalid(format!("trailing components in {uri}")));
        }
        Self::builtin(name, k)
    }

    /// `{"dim":d, "unit":[...], "mult":[[i,j,k,"p/q"],...]}`; scalars may be
    /// JSON integers or `"p/q"` strings.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            col: e.column(),
            msg: e.to_string(),
        })?;
        let scalar = |x: &Value| -> Result<Rational> {
            match x {
                Value::Number(n) => n
                    .as_i64()
                    .map(int)
                    .ok_or_else(|| Error::Invalid(format!("non-integer number {n}; use \"p/q\""))),
                Value::String(s) => serde_rational::parse(s).map_err(Error::Invalid),
                _ => Err(Error::Invalid(format!("bad scalar {x}"))),
            }
        };
        let index = |x: &Value| -> Result<usize> {
            x.as_u64()
                .map(|i| i as usize)
                .ok_or_else(|| Error::Invalid(format!("bad index {x}")))
        };
        let dim = index(
            v.get("dim")
                .ok_or_else(|| Error::Invalid("missing dim".into()))?,
        )?;
        let unit = v
            .get("unit")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Invalid("missing unit".into()))?
            .iter()
            .map(scalar)
            .collect::<Result<Vec<_>>>()?;
        let mut entries = Vec::new();
        for e in v
            .get("mult")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Invalid("missing mult".into()))?
        {
            let e = e
                .as_array()
                .filter(|e| e.len() == 4)
                .ok_or_else(|| Error::Invalid(format!("bad entry {e}")))?;
            entries.push((index(&e[0])?, index(&e[1])?, index(&e[2])?, scalar(&e[3])?));
        }
        let name = v
            .get("name")
            .and_then(Value::as_str)
            .unwrap_or("algebra")
            .to_string();
        FiniteAlgebra::new(name, dim, unit, entries)
    }

    pub fn to_json(&self) -> Value {
        let mut mult = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in self.basis_product(i, j) {
                    mult.push(json!([i, j, k, c.to_string()]));
                }
            }
        }
        json!({
            "name": self.name,
            "dim": self.dim,
            "unit": self.unit.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "mult": mult,
        })
    }
}

/// Sign of `e_S·e_T` for disjoint `S`, `T`: the parity of pairs
/// `s ∈ S`, `t ∈ T` with `s > t`.
fn grassmann_sign(s: usize, t: usize) -> i64 {
    let mut inversions = 0;
    for bit in 0..usize::BITS {
        if t >> bit & 1 == 1 {
            inversions += (s >> (bit + 1)).count_ones();
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}
