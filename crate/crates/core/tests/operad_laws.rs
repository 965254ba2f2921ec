use proptest::prelude::*;

use uas_core::symmetric::Permutation;
use uas_core::{Element, Rational};

fn element(n: usize) -> impl Strategy<Value = Element> {
    let count: usize = (1..=n).product();
    proptest::collection::vec((0..count, -3i64..=3), 1..4).prop_map(move |terms| {
        let all = Permutation::all(n);
        Element::from_terms(
            n,
            terms
                .into_iter()
                .map(|(i, c)| (all[i].clone(), Rational::from_integer(c.into()))),
        )
        .unwrap()
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just(Permutation::all(n)).prop_flat_map(|all| proptest::sample::select(all))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn composition_is_associative(
        theta in element(2),
        a in element(2),
        b in element(1),
        c in (element(1), element(2), element(0)),
    ) {
        let inner = theta.compose(&[a.clone(), b.clone()]).unwrap();
        let lhs = inner.compose(&[c.0.clone(), c.1.clone(), c.2.clone()]).unwrap();
        let rhs = theta
            .compose(&[
                a.compose(&[c.0.clone(), c.1.clone()]).unwrap(),
                b.compose(&[c.2.clone()]).unwrap(),
            ])
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn units_are_neutral(theta in element(3)) {
        let one = Element::unit(1);
        prop_assert_eq!(one.compose(&[theta.clone()]).unwrap(), theta.clone());
        let ones = vec![one; 3];
        prop_assert_eq!(theta.compose(&ones).unwrap(), theta);
    }

    #[test]
    fn partial_is_composition_with_units(theta in element(3), nu in element(2), i in 1usize..=3) {
        let mut inners = vec![Element::unit(1); 3];
        inners[i - 1] = nu.clone();
        prop_assert_eq!(theta.partial(i, &nu).unwrap(), theta.compose(&inners).unwrap());
    }

    #[test]
    fn right_action(theta in element(4), s in permutation(4), t in permutation(4)) {
        let lhs = theta.act(&s).unwrap().act(&t).unwrap();
        prop_assert_eq!(lhs, theta.act(&s.multiply(&t).unwrap()).unwrap());
    }

    #[test]
    fn group_algebra_product_is_associative(x in element(3), y in element(3), z in element(3)) {
        let lhs = x.act_by(&y).unwrap().act_by(&z).unwrap();
        let rhs = x.act_by(&y.act_by(&z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn composition_is_bilinear(theta in element(2), phi in element(2), a in element(2), b in element(1)) {
        let sum = theta.add(&phi).unwrap().compose(&[a.clone(), b.clone()]).unwrap();
        let parts = theta
            .compose(&[a.clone(), b.clone()])
            .unwrap()
            .add(&phi.compose(&[a, b]).unwrap())
            .unwrap();
        prop_assert_eq!(sum, parts);
    }

    #[test]
    fn text_round_trip(theta in element(4)) {
        let again: Element = theta.to_string().parse().unwrap();
        prop_assert_eq!(again, theta);
    }
}
