use uas_core::ideal::{ideal_component, IdealPresentation};
use uas_core::operad::{tau_composition, tau_n};
use uas_core::rep::{
    character_of_subspace, component_generator, cyclic_span, decompose, enumerate_submodules,
    isotypic_component, isotypic_projector, multiplicity_space, Decomposition,
};
use uas_core::symmetric::{Partition, Permutation};
use uas_core::truncation::truncation_kernel;
use uas_core::{Element, QSubspace, Rational};

fn p(text: &str) -> Partition {
    text.parse().unwrap()
}

fn dec(n: usize, text: &str) -> Decomposition {
    Decomposition::parse(n, text).unwrap()
}

fn perm(seq: &[usize]) -> Permutation {
    Permutation::new(seq.to_vec()).unwrap()
}

fn chi(space: &QSubspace) -> Decomposition {
    decompose(&character_of_subspace(space).unwrap()).unwrap()
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// The Specht basis of the arity-4 truncation component, in fixed order.
fn thetas() -> Vec<Element> {
    let t22 = tau_composition::<Rational>(&[2, 2]);
    let t4 = tau_n::<Rational>(4);
    let mut out = Vec::new();
    for s in [[2, 1, 4, 3], [3, 1, 4, 2], [3, 2, 4, 1]] {
        out.push(t22.act(&perm(&s)).unwrap());
    }
    for s in [
        [4, 1, 2, 3],
        [4, 1, 3, 2],
        [4, 2, 1, 3],
        [4, 2, 3, 1],
        [4, 3, 1, 2],
        [4, 3, 2, 1],
    ] {
        out.push(t4.act(&perm(&s)).unwrap());
    }
    out
}

fn combination(coeffs: &[i64]) -> Element {
    thetas()
        .iter()
        .zip(coeffs)
        .fold(Element::zero(4), |acc, (t, &c)| {
            acc.add(&t.scale(&int(c))).unwrap()
        })
}

fn zetas() -> Vec<(Partition, Element)> {
    vec![
        (p("1^4"), combination(&[2, -2, 2, -1, 1, 1, -1, -1, 1])),
        (p("2^2"), combination(&[2, 4, 2, -1, 1, -2, 2, -1, 1])),
        (p("3,1"), combination(&[0, 0, 0, 1, 3, -2, 2, -3, -1])),
        (p("2,1^2"), combination(&[0, 0, 0, 1, -1, -1, 1, 1, -1])),
    ]
}

#[test]
fn truncation_characters_in_low_arity() {
    assert_eq!(chi(&truncation_kernel(3, 3).unwrap()), dec(3, "(2,1)"));
    assert_eq!(
        chi(&truncation_kernel(4, 4).unwrap()),
        dec(4, "(1^4)+(2^2)+(2,1^2)+(3,1)")
    );
    assert_eq!(
        chi(&truncation_kernel(3, 4).unwrap()),
        dec(4, "(1^4)+2(2^2)+2(2,1^2)+2(3,1)")
    );
    assert_eq!(
        chi(&truncation_kernel(5, 5).unwrap()),
        dec(5, "(4,1)+2(2,1^3)+2(3,2)+2(2^2,1)+2(3,1^2)")
    );
}

#[test]
fn top_character_in_arity_six() {
    assert_eq!(
        chi(&truncation_kernel(6, 6).unwrap()),
        dec(
            6,
            "(1^6)+(5,1)+2(2,1^4)+2(3^2)+2(2^3)+3(4,2)+4(2^2,1^2)+4(3,1^3)+3(4,1^2)+6(3,2,1)"
        )
    );
}

#[test]
fn specht_vectors_span_the_component() {
    let whole = truncation_kernel(4, 4).unwrap();
    let rows: Vec<Vec<Rational>> = thetas().iter().map(|t| t.to_dense()).collect();
    assert_eq!(QSubspace::span(24, rows), *whole);
}

#[test]
fn listed_generators_of_irreducible_components() {
    let whole = truncation_kernel(4, 4).unwrap();
    let mut total = QSubspace::zero(24);
    for (lambda, zeta) in zetas() {
        let comp = isotypic_component(&whole, &lambda).unwrap();
        assert!(comp.contains(&zeta.to_dense()).unwrap(), "{lambda}");
        assert_eq!(cyclic_span(&zeta).unwrap(), comp, "{lambda}");
        let g = component_generator(&lambda, &whole).unwrap();
        assert_eq!(cyclic_span(&g).unwrap(), comp);
        total = total.sum(&comp).unwrap();
    }
    assert_eq!(total, *whole);
}

#[test]
fn commutator_recovered_from_single_generator() {
    let t22 = tau_composition::<Rational>(&[2, 2]);
    let t4 = tau_n::<Rational>(4);
    let zeta = t22
        .act(&perm(&[2, 1, 4, 3]))
        .unwrap()
        .add(&t4.act(&perm(&[4, 3, 2, 1])).unwrap())
        .unwrap();
    let x: Element = "(1,4,2,3) - (1,3,2,4) + (2,3,1,4) - (2,4,1,3) - 2*(3,4,1,2)"
        .parse()
        .unwrap();
    let lhs = zeta
        .add(&zeta.act(&perm(&[2, 1, 3, 4])).unwrap())
        .unwrap()
        .act_by(&x)
        .unwrap()
        .scale(&Rational::new(1.into(), 4.into()));
    assert_eq!(lhs, t4);
    assert_eq!(
        cyclic_span(&zeta).unwrap(),
        *truncation_kernel(4, 4).unwrap()
    );
}

#[test]
fn projectors_split_the_arity_four_component() {
    let whole = truncation_kernel(4, 4).unwrap();
    for lambda in Partition::all(4) {
        let comp = isotypic_component(&whole, &lambda).unwrap();
        let expected =
            chi(&whole).multiplicity(&lambda) * uas_core::symmetric::hook_dimension(&lambda);
        assert_eq!(comp.dim() as u64, expected, "{lambda}");
        for mu in Partition::all(4) {
            if mu != lambda {
                let prod = isotypic_projector(&lambda)
                    .act_by(&isotypic_projector(&mu))
                    .unwrap();
                assert!(prod.is_zero());
            }
        }
    }
    let regular = QSubspace::full(6);
    assert_eq!(isotypic_component(&regular, &p("2,1")).unwrap().dim(), 4);
}

#[test]
fn multiplicity_spaces_of_truncation_components() {
    let five = truncation_kernel(5, 5).unwrap();
    assert_eq!(multiplicity_space(&five, &p("3,2")).unwrap().dim(), 2);
    let four = truncation_kernel(4, 4).unwrap();
    for lambda in ["1^4", "2^2", "2,1^2", "3,1"] {
        assert_eq!(multiplicity_space(&four, &p(lambda)).unwrap().dim(), 1);
    }
    assert_eq!(
        multiplicity_space(&QSubspace::zero(24), &p("3,1"))
            .unwrap()
            .dim(),
        0
    );
}

#[test]
fn submodule_dimensions_of_arity_five_component() {
    let e = enumerate_submodules(&truncation_kernel(5, 5).unwrap()).unwrap();
    assert!(e.lattice.is_none());
    let dims = e.achievable_dims();
    // independent count: 4a + 4b + 5c + 5d + 6e with a ≤ 1 and the rest ≤ 2
    let mut expected = std::collections::BTreeSet::new();
    for a in 0..=1u64 {
        for b in 0..=2 {
            for c in 0..=2 {
                for d in 0..=2 {
                    for f in 0..=2 {
                        expected.insert(4 * a + 4 * b + 5 * c + 5 * d + 6 * f);
                    }
                }
            }
        }
    }
    assert_eq!(dims, expected.into_iter().collect::<Vec<_>>());
    let codims: Vec<u64> = (1..=44u64).filter(|u| !dims.contains(&(44 - u))).collect();
    assert_eq!(codims, vec![1, 2, 3, 7, 37, 41, 42, 43]);
}

#[test]
fn generated_ideal_in_arity_six() {
    let whole = truncation_kernel(4, 4).unwrap();
    let mut m = QSubspace::zero(24);
    for lambda in ["1^4", "2^2", "2,1^2"] {
        m = m
            .sum(&isotypic_component(&whole, &p(lambda)).unwrap())
            .unwrap();
    }
    let pres = IdealPresentation::module(4, m).unwrap();
    let six = ideal_component(&pres, 6).unwrap();
    assert_eq!(
        chi(&six),
        dec(
            6,
            "(1^6)+5(2,1^4)+4(3^2)+5(2^3)+6(4,2)+9(2^2,1^2)+10(3,1^3)+6(4,1^2)+14(3,2,1)"
        )
    );
}

#[test]
fn forced_parts_over_arity_four_modules() {
    use uas_core::ideal::{forced_part, top_lattice};
    let s = "2(2,1^3)+2(3,2)+2(2^2,1)+2(3,1^2)";
    let whole = "(4,1)+2(2,1^3)+2(3,2)+2(2^2,1)+2(3,1^2)";
    let rows = [
        ("(1^4)+(2^2)+(2,1^2)", s),
        ("(1^4)+(2,1^2)", s),
        ("(1^4)+(2^2)", s),
        ("(1^4)", "2(2,1^3)+(2^2,1)+(3,1^2)"),
        ("(2^2)+(3,1)+(2,1^2)", whole),
        ("(3,1)+(2,1^2)", whole),
        ("(2^2)+(2,1^2)", s),
        ("(2^2)+(3,1)", whole),
        ("(3,1)", "(4,1)+(2,1^3)+2(3,2)+2(2^2,1)+2(3,1^2)"),
        ("(2,1^2)", s),
        ("(2^2)", "(2,1^3)+2(3,2)+2(2^2,1)+2(3,1^2)"),
    ];
    let lattice = top_lattice(4).unwrap();
    for (bottom, forced) in rows {
        let m = lattice
            .iter()
            .find(|t| t.decomposition == dec(4, bottom))
            .unwrap();
        let f = forced_part(std::slice::from_ref(m), 5).unwrap();
        assert_eq!(chi(&f), dec(5, forced), "{bottom}");
    }
}
