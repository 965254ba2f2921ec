use crate::linalg::Field;
use crate::operad::OperadElement;
use crate::symmetric::Permutation;

/// The commutator `τ = (1,2) − (2,1)`.
pub fn tau<T: Field>() -> OperadElement<T> {
    let mut e = OperadElement::unit(2);
    e.add_term(Permutation::from_raw(vec![2, 1]), -T::one());
    e
}

/// Left-normed commutator `τₙ = τ∘₁τₙ₋₁`, with `τ₁ = 𝟙₁`.
pub fn tau_n<T: Field>(n: usize) -> OperadElement<T> {
    assert!(n >= 1, "τₙ needs n ≥ 1");
    let t = tau::<T>();
    let mut acc = OperadElement::unit(1);
    for _ in 1..n {
        acc = t.partial(1, &acc).expect("slot 1 exists");
    }
    acc
}

/// `τ_{k₁,…,k_m} = 𝟙_m∘(τ_{k₁},…,τ_{k_m})`.
pub fn tau_composition<T: Field>(ks: &[usize]) -> OperadElement<T> {
    let inners: Vec<OperadElement<T>> = ks.iter().map(|&k| tau_n(k)).collect();
    OperadElement::unit(ks.len())
        .compose(&inners)
        .expect("arity matches")
}

/// The Dynkin element `[[…[xₙ, x_{σ⁻¹(1)}],…], x_{σ⁻¹(n−1)}]` for σ ∈ 𝕊ₙ₋₁.
pub fn dynkin<T: Field>(sigma: &Permutation) -> OperadElement<T> {
    let n = sigma.arity() + 1;
    let mut seq = vec![n as u8];
    seq.extend_from_slice(sigma.seq());
    tau_n::<T>(n)
        .act(&Permutation::from_raw(seq))
        .expect("arity matches")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type E = OperadElement<Rational>;

    #[test]
    fn small_commutators() {
        assert_eq!(tau::<Rational>(), "(1,2) - (2,1)".parse::<E>().unwrap());
        assert_eq!(
            tau_n::<Rational>(3),
            "(1,2,3) - (2,1,3) - (3,1,2) + (3,2,1)"
                .parse::<E>()
                .unwrap()
        );
        assert_eq!(tau_n::<Rational>(4).len(), 8);
        assert_eq!(tau_n::<Rational>(1), E::unit(1));
    }

    #[test]
    fn compositions_of_commutators() {
        let t22 = tau_composition::<Rational>(&[2, 2]);
        assert_eq!(
            t22,
            "(1,2,3,4) - (1,2,4,3) - (2,1,3,4) + (2,1,4,3)"
                .parse::<E>()
                .unwrap()
        );
        assert_eq!(tau_composition::<Rational>(&[2, 3]).arity(), 5);
    }

    #[test]
    fn dynkin_elements() {
        let d = dynkin::<Rational>(&Permutation::identity(1));
        assert_eq!(d, "(2,1) - (1,2)".parse::<E>().unwrap());
        let d = dynkin::<Rational>(&"(2,1)".parse().unwrap());
        // [[x3,x2],x1]
        assert_eq!(
            d,
            "(3,2,1) - (2,3,1) - (1,3,2) + (1,2,3)"
                .parse::<E>()
                .unwrap()
        );
    }
}
