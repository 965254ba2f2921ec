use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::modular::integer_rows;
use crate::linalg::IntSpanBuilder;
use crate::operad::index::{right_multiply_int, to_primitive_sparse};
use crate::operad::{Element, OperadElement};
use crate::rep::spin::{spin, SparseInt};
use crate::rep::{arity_of_ambient, character_of_subspace, decompose, Decomposition};
use crate::symmetric::{character_table, hook_dimension, Partition, Permutation};
use crate::{QSubspace, Rational};

/// `φ_λ = Σ_σ χ_λ(σ)·σ` as a group algebra element.
pub fn isotypic_projector(lambda: &Partition) -> Element {
    let n = lambda.weight();
    let table = character_table(n);
    let idx = table.index_of(lambda).expect("partition of its weight");
    OperadElement::from_terms(
        n,
        Permutation::all(n).into_iter().map(|s| {
            let v = table.value(idx, &s);
            (s, Rational::from_integer(v.into()))
        }),
    )
    .expect("arity n")
}

fn as_sparse(e: &Element) -> SparseInt {
    to_primitive_sparse(e).expect("small integer coefficients")
}

fn rows_of(w: &QSubspace) -> Result<Vec<SparseInt>> {
    integer_rows(w)
        .into_iter()
        .map(|r| r.ok_or_else(|| Error::Unsupported("basis exceeds i64".into())))
        .collect()
}

/// Span of `{w·y : w ∈ basis}` stopping once `target` dimensions are reached.
fn image_under(n: usize, w: &QSubspace, y: &SparseInt, target: usize) -> Result<QSubspace> {
    let mut b = IntSpanBuilder::new(w.ambient());
    if target > 0 {
        for row in rows_of(w)? {
            b.offer_sparse(right_multiply_int(n, &row, y));
            if b.rank() == target {
                break;
            }
        }
    }
    if b.rank() != target {
        return Err(Error::Invalid(format!(
            "image has rank {} instead of {target}",
            b.rank()
        )));
    }
    Ok(b.finish())
}

fn weight_check(w: &QSubspace, lambda: &Partition) -> Result<usize> {
    let n = arity_of_ambient(w.ambient())?;
    if lambda.weight() != n {
        return Err(Error::InvalidPartition(format!(
            "{lambda} is not a partition of {n}"
        )));
    }
    Ok(n)
}

/// The λ-isotypic component of a submodule, as the image of `φ_λ`.
pub fn isotypic_component(w: &QSubspace, lambda: &Partition) -> Result<QSubspace> {
    let n = weight_check(w, lambda)?;
    let mult = decompose(&character_of_subspace(w)?)?.multiplicity(lambda) as usize;
    let target = mult * hook_dimension(lambda) as usize;
    image_under(n, w, &as_sparse(&isotypic_projector(lambda)), target)
}

/// Young symmetrizer `y_T` of the row-reading tableau: row sum times signed
/// column sum.
pub fn young_symmetrizer(lambda: &Partition) -> Element {
    let n = lambda.weight();
    let mut row_of = vec![0usize; n + 1];
    let mut col_of = vec![0usize; n + 1];
    let mut next = 1;
    for (r, &len) in lambda.parts().iter().enumerate() {
        for c in 0..len {
            row_of[next] = r;
            col_of[next] = c;
            next += 1;
        }
    }
    let perms = Permutation::all(n);
    let keeps = |p: &Permutation, label: &[usize]| {
        p.entries()
            .enumerate()
            .all(|(k, s)| label[k + 1] == label[s])
    };
    let rows: Vec<&Permutation> = perms.iter().filter(|p| keeps(p, &row_of)).collect();
    let cols: Vec<&Permutation> = perms.iter().filter(|p| keeps(p, &col_of)).collect();
    let mut y = OperadElement::zero(n);
    for r in &rows {
        for c in &cols {
            y.add_term(r.mul_unchecked(c), Rational::from_integer(c.sign().into()));
        }
    }
    y
}

/// `W·y_T`, whose dimension is the multiplicity of λ in `W`.
pub fn multiplicity_space(w: &QSubspace, lambda: &Partition) -> Result<QSubspace> {
    let n = weight_check(w, lambda)?;
    let mult = decompose(&character_of_subspace(w)?)?.multiplicity(lambda) as usize;
    image_under(n, w, &as_sparse(&young_symmetrizer(lambda)), mult)
}

/// Submodule generated by vectors of a multiplicity space.
pub fn submodule_from_multiplicity(n: usize, vectors: &[Vec<Rational>]) -> Result<QSubspace> {
    let size: usize = (1..=n).product();
    let seeds: Vec<SparseInt> = vectors
        .iter()
        .filter(|v| v.iter().any(|x| *x != Rational::from_integer(0.into())))
        .map(|v| {
            if v.len() != size {
                return Err(Error::AmbientMismatch(size, v.len()));
            }
            Ok(as_sparse(&OperadElement::from_dense(n, v)?))
        })
        .collect::<Result<_>>()?;
    Ok(spin(n, &seeds))
}

/// The submodules sharing one λ-multiplicity choice: `d`-dimensional
/// subspaces `U` of the multiplicity space, realized as `⟨U⟩`.
#[derive(Clone, Debug)]
pub struct SubmoduleFamily {
    pub n: usize,
    pub lambda: Partition,
    pub multiplicity: usize,
    pub dim_choice: usize,
    pub space: QSubspace,
}

impl SubmoduleFamily {
    /// Submodule for parameter vectors given in the RREF coordinates of the
    /// multiplicity space.
    pub fn realize(&self, params: &[Vec<Rational>]) -> Result<QSubspace> {
        let vectors: Vec<Vec<Rational>> = params
            .iter()
            .map(|c| {
                if c.len() != self.multiplicity {
                    return Err(Error::LengthMismatch {
                        expected: self.multiplicity,
                        got: c.len(),
                    });
                }
                let mut v = vec![Rational::from_integer(0.into()); self.space.ambient()];
                for (i, x) in c.iter().enumerate() {
                    for (acc, r) in v.iter_mut().zip(self.space.row(i)) {
                        *acc += x * r;
                    }
                }
                Ok(v)
            })
            .collect::<Result<_>>()?;
        let u = QSubspace::span(self.space.ambient(), vectors);
        if u.dim() != self.dim_choice {
            return Err(Error::Invalid(format!(
                "parameters span {} dimensions, expected {}",
                u.dim(),
                self.dim_choice
            )));
        }
        submodule_from_multiplicity(self.n, &u.rows())
    }

    /// Coordinate axes and, for lines, the all-ones vector.
    pub fn representatives(&self) -> Vec<Vec<Vec<Rational>>> {
        let m = self.multiplicity;
        let d = self.dim_choice;
        let axis = |i: usize| {
            (0..m)
                .map(|j| Rational::from_integer(((i == j) as i64).into()))
                .collect::<Vec<_>>()
        };
        let mut out: Vec<Vec<Vec<Rational>>> = crate::truncation::subsets(m, d)
            .into_iter()
            .map(|s| s.into_iter().map(|i| axis(i - 1)).collect())
            .collect();
        if d == 1 && m > 1 {
            out.push(vec![vec![Rational::from_integer(1.into()); m]]);
        }
        out
    }

    /// Seeded random parameters with small integer entries.
    pub fn sample_params(&self, seed: u64) -> Vec<Vec<Rational>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let params: Vec<Vec<Rational>> = (0..self.dim_choice)
                .map(|_| {
                    (0..self.multiplicity)
                        .map(|_| Rational::from_integer(rng.gen_range(-5i64..=5).into()))
                        .collect()
                })
                .collect();
            if QSubspace::span(self.multiplicity, params.clone()).dim() == self.dim_choice {
                return params;
            }
        }
    }
}

/// Submodules of `W`: the complete lattice when multiplicity-free, otherwise
/// the achievable decompositions with family descriptors.
#[derive(Clone, Debug)]
pub struct SubmoduleEnumeration {
    pub decomposition: Decomposition,
    pub components: Vec<(Partition, QSubspace)>,
    /// All submodules, present when every multiplicity is at most one.
    pub lattice: Option<Vec<(Decomposition, QSubspace)>>,
    pub achievable: Vec<Decomposition>,
    pub families: Vec<SubmoduleFamily>,
}

impl SubmoduleEnumeration {
    /// Dimensions of all submodules, ascending and deduplicated.
    pub fn achievable_dims(&self) -> Vec<u64> {
        let mut dims: Vec<u64> = self.achievable.iter().map(|d| d.dimension()).collect();
        dims.sort_unstable();
        dims.dedup();
        dims
    }
}

/// Every multiplicity vector `0 ≤ d_λ ≤ m_λ`, in lexicographic order.
pub fn sub_decompositions(total: &Decomposition) -> Vec<Decomposition> {
    let entries: Vec<(&Partition, u64)> =
        total.multiplicities.iter().map(|(l, &m)| (l, m)).collect();
    let mut out = Vec::new();
    let mut cur = vec![0u64; entries.len()];
    loop {
        out.push(Decomposition {
            n: total.n,
            multiplicities: entries
                .iter()
                .zip(&cur)
                .filter(|(_, &d)| d > 0)
                .map(|((l, _), &d)| ((*l).clone(), d))
                .collect(),
        });
        let mut k = 0;
        while k < cur.len() {
            cur[k] += 1;
            if cur[k] <= entries[k].1 {
                break;
            }
            cur[k] = 0;
            k += 1;
        }
        if k == cur.len() {
            return out;
        }
    }
}

pub fn enumerate_submodules(w: &QSubspace) -> Result<SubmoduleEnumeration> {
    let n = arity_of_ambient(w.ambient())?;
    let decomposition = decompose(&character_of_subspace(w)?)?;
    let mut components = Vec::new();
    let mut families = Vec::new();
    for (lambda, &m) in &decomposition.multiplicities {
        components.push((lambda.clone(), isotypic_component(w, lambda)?));
        if m >= 2 {
            let space = multiplicity_space(w, lambda)?;
            for d in 1..m as usize {
                families.push(SubmoduleFamily {
                    n,
                    lambda: lambda.clone(),
                    multiplicity: m as usize,
                    dim_choice: d,
                    space: space.clone(),
                });
            }
        }
    }
    let achievable = sub_decompositions(&decomposition);
    let lattice = if decomposition.multiplicities.values().all(|&m| m <= 1) {
        let c = components.len();
        let mut out = Vec::with_capacity(1 << c);
        for mask in 0u32..(1 << c) {
            let mut rows = Vec::new();
            let mut dec = Decomposition {
                n,
                ..Default::default()
            };
            for (i, (lambda, comp)) in components.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    rows.extend(comp.rows());
                    dec.multiplicities.insert(lambda.clone(), 1);
                }
            }
            out.push((dec, QSubspace::span(w.ambient(), rows)));
        }
        Some(out)
    } else {
        None
    };
    Ok(SubmoduleEnumeration {
        decomposition,
        components,
        lattice,
        achievable,
        families,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::truncation::truncation_kernel;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn isotypic_components_of_group_algebra() {
        let full = QSubspace::full(6);
        assert_eq!(isotypic_component(&full, &part("2,1")).unwrap().dim(), 4);
        assert_eq!(isotypic_component(&full, &part("3")).unwrap().dim(), 1);
    }

    #[test]
    fn multiplicity_spaces() {
        let w = truncation_kernel(4, 4).unwrap();
        for l in ["1^4", "2,1^2", "2^2", "3,1"] {
            assert_eq!(multiplicity_space(&w, &part(l)).unwrap().dim(), 1, "{l}");
        }
        assert_eq!(multiplicity_space(&w, &part("4")).unwrap().dim(), 0);
        let full = QSubspace::full(24);
        let m = multiplicity_space(&full, &part("3,1")).unwrap();
        assert_eq!(m.dim(), 3);
        let iso = isotypic_component(&full, &part("3,1")).unwrap();
        assert_eq!(submodule_from_multiplicity(4, &m.rows()).unwrap(), iso);
        let one = submodule_from_multiplicity(4, &m.rows()[..1]).unwrap();
        assert_eq!(one.dim(), 3);
    }

    #[test]
    fn lattice_of_multiplicity_free_module() {
        let w = truncation_kernel(4, 4).unwrap();
        let e = enumerate_submodules(&w).unwrap();
        let lattice = e.lattice.unwrap();
        assert_eq!(lattice.len(), 16);
        for (dec, s) in &lattice {
            assert_eq!(dec.dimension() as usize, s.dim());
        }
        assert!(e.families.is_empty());
    }

    #[test]
    fn arity_five_kernel() {
        let w = truncation_kernel(5, 5).unwrap();
        assert_eq!(multiplicity_space(&w, &part("4,1")).unwrap().dim(), 1);
        assert_eq!(multiplicity_space(&w, &part("2,1^3")).unwrap().dim(), 2);
        let e = enumerate_submodules(&w).unwrap();
        assert_eq!(e.families.len(), 4);
        let fam = e.families.iter().find(|f| f.lambda == part("3,2")).unwrap();
        assert_eq!(fam.realize(&fam.sample_params(11)).unwrap().dim(), 5);
    }

    #[test]
    fn families_realize_their_dimension() {
        let full = QSubspace::full(6);
        let e = enumerate_submodules(&full).unwrap();
        assert!(e.lattice.is_none());
        assert_eq!(e.families.len(), 1);
        let fam = &e.families[0];
        assert_eq!(fam.representatives().len(), 3);
        for params in fam.representatives() {
            assert_eq!(fam.realize(&params).unwrap().dim(), 2);
        }
        assert_eq!(fam.realize(&fam.sample_params(3)).unwrap().dim(), 2);
        assert_eq!(e.achievable_dims(), vec![0, 1, 2, 3, 4, 5, 6]);
    }
}
