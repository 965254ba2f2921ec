use std::collections::BTreeSet;

use uas_core::series::{catalog, grassmann_truncation_series, lambda_set, GammaSeries};
use uas_core::Rational;

fn set(v: &[u64]) -> BTreeSet<u64> {
    v.iter().copied().collect()
}

#[test]
fn grade_four_catalogue() {
    let got: BTreeSet<GammaSeries> = catalog(4).unwrap().into_iter().collect();
    let mut expected: BTreeSet<GammaSeries> = (1..=9)
        .map(|u| GammaSeries::new(vec![1, 0, 1, 2, u]))
        .collect();
    expected.insert(grassmann_truncation_series(2));
    assert_eq!(got, expected);
}

#[test]
fn grade_five_catalogue() {
    let all = catalog(5).unwrap();
    assert_eq!(all.len(), 55);
    let with = |g4: u64| -> BTreeSet<u64> {
        all.iter()
            .filter(|s| s.gamma()[..4] == [1, 0, 1, 2] && s.gamma()[4] == g4)
            .map(|s| s.gamma()[5])
            .collect()
    };
    let excluded = set(&[1, 2, 3, 7, 37, 41, 42, 43]);
    let u: BTreeSet<u64> = (1..=44).filter(|u| !excluded.contains(u)).collect();
    assert_eq!(with(9), u);
    assert_eq!(
        with(8),
        set(&[4, 5, 6, 9, 10, 11, 14, 15, 16, 19, 20, 21, 25])
    );
    assert_eq!(with(7), set(&[4, 8]));
    let z: BTreeSet<u64> = all
        .iter()
        .filter(|s| s.gamma()[5] == 4)
        .map(|s| s.gamma()[4])
        .collect();
    assert_eq!(z, set(&[3, 4, 5, 6, 7, 8, 9]));
    assert!(with(6)
        .iter()
        .chain(&with(5))
        .chain(&with(4))
        .chain(&with(3))
        .all(|&x| x == 4));
    let lambdas = lambda_set(5).unwrap();
    let expected: BTreeSet<Rational> = u
        .iter()
        .map(|&u| Rational::new((u as i64).into(), 120.into()))
        .collect();
    assert_eq!(lambdas, expected);
}

#[test]
fn catalogued_dimensions_are_nondecreasing() {
    for s in catalog(5).unwrap() {
        for n in 6..30 {
            assert!(s.dims_at(n + 1) >= s.dims_at(n), "{s}");
        }
    }
}
