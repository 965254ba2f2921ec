use std::collections::BTreeMap;
use std::fmt;

use num_traits::{ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::modular::{contains_exact, integer_rows};
use crate::linalg::IntegerView;
use crate::operad::index::{apply_int, move_table, symmetric_generators};
use crate::operad::Move;
use crate::symmetric::{character_table, conjugacy_classes, CharacterVector, Partition};
use crate::{QSubspace, Rational};

/// `n` with `n! = size`.
pub fn arity_of_ambient(size: usize) -> Result<usize> {
    let mut f = 1;
    for n in 0..=12 {
        if n > 0 {
            f *= n;
        }
        if f == size {
            return Ok(n);
        }
        if f > size {
            break;
        }
    }
    Err(Error::Invalid(format!("{size} is not a factorial")))
}

/// Checks that `w ⊆ ℚ𝕊ₙ` is closed under the right action.
pub fn check_submodule(w: &QSubspace) -> Result<()> {
    let n = arity_of_ambient(w.ambient())?;
    if w.is_zero() || w.is_full() {
        return Ok(());
    }
    let rows = integer_rows(w);
    let view = IntegerView::new(w);
    for g in symmetric_generators(n) {
        let table = move_table(n, &Move::Act(g.clone()));
        for (i, row) in rows.iter().enumerate() {
            let image = match row {
                Some(v) => apply_int(&table, v),
                None => {
                    let moved = crate::operad::index::apply_dense(&table, &w.row(i), w.ambient());
                    if !w.contains(&moved)? {
                        return Err(Error::NotSubmodule(format!(
                            "row {i} moved by {g} leaves the subspace"
                        )));
                    }
                    continue;
                }
            };
            if !contains_exact(w, view.as_ref(), &image) {
                return Err(Error::NotSubmodule(format!(
                    "row {i} moved by {g} leaves the subspace"
                )));
            }
        }
    }
    Ok(())
}

/// The character `σ ↦ tr(ρ_σ|_W)` of a submodule.
pub fn character_of_subspace(w: &QSubspace) -> Result<CharacterVector> {
    check_submodule(w)?;
    let n = arity_of_ambient(w.ambient())?;
    let mut free_pos = vec![usize::MAX; w.ambient()];
    for (j, &c) in w.free_columns().iter().enumerate() {
        free_pos[c] = j;
    }
    let values = conjugacy_classes(n)
        .iter()
        .map(|class| {
            let table = move_table(n, &Move::Act(class.representative.clone()));
            let mut inverse = vec![0usize; table.len()];
            for (c, &t) in table.iter().enumerate() {
                inverse[t as usize] = c;
            }
            // tr = Σᵢ Rᵢ[ρ⁻¹(pᵢ)]
            let mut acc = Rational::zero();
            for (i, &p) in w.pivots().iter().enumerate() {
                let c = inverse[p];
                if c == p {
                    acc += Rational::from_integer(1.into());
                } else if free_pos[c] != usize::MAX {
                    acc += &w.coefficients(i)[free_pos[c]];
                }
            }
            acc
        })
        .collect();
    Ok(CharacterVector { n, values })
}

/// Multiplicities of irreducible constituents.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Decomposition {
    pub n: usize,
    pub multiplicities: BTreeMap<Partition, u64>,
}

impl Decomposition {
    pub fn multiplicity(&self, lambda: &Partition) -> u64 {
        self.multiplicities.get(lambda).copied().unwrap_or(0)
    }

    /// `Σ mult·dim χ_λ`.
    pub fn dimension(&self) -> u64 {
        self.multiplicities
            .iter()
            .map(|(l, &m)| m * crate::symmetric::hook_dimension(l))
            .sum()
    }

    pub fn character(&self) -> CharacterVector {
        let table = character_table(self.n);
        let mut chi = CharacterVector::zero(self.n);
        for (l, &m) in &self.multiplicities {
            let idx = table.index_of(l).expect("partition of n");
            chi = chi.add(
                &table
                    .character(idx)
                    .scale(&Rational::from_integer(m.into())),
            );
        }
        chi
    }

    /// Parses `(1^4)+2(2^2)+(3,1)`; terms may carry a leading multiplicity.
    pub fn parse(n: usize, text: &str) -> Result<Decomposition> {
        let mut multiplicities = BTreeMap::new();
        let t = text.trim();
        if t.is_empty() || t == "0" {
            return Ok(Decomposition { n, multiplicities });
        }
        for term in t.split('+') {
            let term = term.trim();
            let split = term
                .find(|c: char| !c.is_ascii_digit())
                .unwrap_or(term.len());
            let (mult, rest) = term.split_at(split);
            let m: u64 = if mult.is_empty() {
                1
            } else {
                mult.parse()
                    .map_err(|_| Error::Invalid(format!("bad multiplicity in {term}")))?
            };
            let lambda: Partition = rest.trim().parse()?;
            if lambda.weight() != n {
                return Err(Error::InvalidPartition(format!(
                    "{lambda} is not a partition of {n}"
                )));
            }
            *multiplicities.entry(lambda).or_insert(0) += m;
        }
        Ok(Decomposition { n, multiplicities })
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplicities.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .multiplicities
            .iter()
            .map(|(l, &m)| {
                if m == 1 {
                    format!("({})", l.label())
                } else {
                    format!("{m}({})", l.label())
                }
            })
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl Serialize for Decomposition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.multiplicities.len()))?;
        for (l, m) in &self.multiplicities {
            map.serialize_entry(&l.label(), m)?;
        }
        map.end()
    }
}

/// Multiplicities `⟨χ, χ_λ⟩`, which must be nonnegative integers.
pub fn decompose(chi: &CharacterVector) -> Result<Decomposition> {
    let table = character_table(chi.n);
    let mut multiplicities = BTreeMap::new();
    for (i, lambda) in table.partitions.iter().enumerate() {
        let ip = chi.inner(&table.character(i));
        if !ip.is_integer() || ip < Rational::zero() {
            return Err(Error::NonIntegralMultiplicity(format!("{lambda}: {ip}")));
        }
        let m = ip.to_integer().to_u64().expect("small multiplicity");
        if m > 0 {
            multiplicities.insert(lambda.clone(), m);
        }
    }
    Ok(Decomposition {
        n: chi.n,
        multiplicities,
    })
}
