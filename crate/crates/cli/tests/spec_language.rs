use uas_cli::spec::{parse_sequence, IdealSpec, ModuleItem, Term};
use uas_core::Error;

#[test]
fn terms_and_sums() {
    let s: IdealSpec = "T(3) + U(5) + GT1(4; V[2^2]+V[3,1])".parse().unwrap();
    assert_eq!(s.terms.len(), 3);
    assert_eq!(s.terms[0], Term::TopModule(3));
    assert_eq!(s.terms[1], Term::Truncation(5));
    let Term::TypeOne { m, module } = &s.terms[2] else {
        panic!("{:?}", s.terms[2])
    };
    assert_eq!(*m, 4);
    assert!(matches!(module.items[0], ModuleItem::Component(_)));
    assert_eq!(s.to_string().parse::<IdealSpec>().unwrap(), s);
}

#[test]
fn positioned_errors() {
    for (text, line, col) in [
        ("U(4", 1, 4),
        ("", 1, 1),
        ("U(3)+", 1, 6),
        ("GT1(4 V[3,1])", 1, 7),
        ("GT1(3; V[2,1]", 1, 14),
        ("T(3)\n  + Q", 2, 5),
    ] {
        match text.parse::<IdealSpec>() {
            Err(Error::Parse {
                line: l, col: c, ..
            }) => assert_eq!((l, c), (line, col), "{text:?}"),
            other => panic!("{text:?}: {other:?}"),
        }
    }
}

#[test]
fn unknown_labels() {
    assert!("GT1(4; V[5])".parse::<IdealSpec>().is_err());
    let s: IdealSpec = "GT1(4; V[4])".parse().unwrap();
    assert!(s.window(5).is_err());
}

#[test]
fn inadmissible_sequences() {
    use uas_core::ideal::admissible_check;
    for text in ["3: 0\n4: V[1^4]", "3: V[2,1]\n4: V[1^4]"] {
        let seq = parse_sequence(4, text).unwrap();
        assert!(!admissible_check(&seq).unwrap().admissible, "{text}");
    }
    let ok = parse_sequence(4, "3: V[2,1]\n4: V[2^2]+V[2,1^2]+V[3,1]").unwrap();
    assert!(admissible_check(&ok).unwrap().admissible);
}

#[test]
fn sums_match_core_windows() {
    use uas_core::ideal::{IdealPresentation, IdealWindow};
    use uas_core::operad::tau_n;
    let s: IdealSpec = "elem:{(1,2,3) - (1,3,2) - (2,3,1) + (3,2,1)}+U(5)"
        .parse()
        .unwrap();
    let direct = IdealWindow::generate(
        &IdealPresentation::element(tau_n(3)).plus(&IdealPresentation::truncation(5)),
        5,
    )
    .unwrap();
    assert_eq!(s.window(5).unwrap().dims(), direct.dims());
}
