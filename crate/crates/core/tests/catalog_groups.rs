use modsing_core::catalog;
use modsing_core::invariants::PolynomialityOptions;
use modsing_core::singularity::{analyze, MainGenCase};
use modsing_core::{SquareMatrix, Verdict};

#[test]
fn three_dimensional_reflection_groups_are_never_isolated() {
    let opts = PolynomialityOptions::default();
    for name in catalog::names() {
        let g = catalog::build(name).unwrap();
        if g.dim() != 3 || !g.is_generated_by_pseudoreflections() {
            continue;
        }
        let report = analyze(&g, &opts).unwrap();
        let case = report.case.expect("case analysis runs for 3-dimensional reflection groups");
        if case.kind != MainGenCase::Other {
            assert_ne!(report.singularity.verdict, Verdict::Isolated, "{name}");
        }
    }
}

#[test]
fn generators_match_the_displayed_matrices() {
    let g = catalog::example_sec3().unwrap();
    let f = g.field();
    assert_eq!(g.generators()[0], SquareMatrix::from_ints(f, &[&[2, 0], &[0, 2]]));
    assert_eq!(g.generators()[1], SquareMatrix::from_ints(f, &[&[1, 1], &[0, 1]]));

    let sl = catalog::sl2(9).unwrap();
    let f = sl.field();
    assert_eq!(sl.generators()[0].to_string(), "[[1, 1], [0, 1]]");
    assert_eq!(sl.generators()[1].to_string(), "[[1, 0], [a, 1]]");
    let l = sl.generators()[1].get(1, 0);
    assert_ne!(f.mul(l, l), f.neg(modsing_core::Fe::ONE));

    let ico = catalog::binary_icosahedral_char3().unwrap();
    let f = ico.field();
    let l = ico.generators()[1].get(1, 0);
    assert_eq!(f.mul(l, l), f.neg(modsing_core::Fe::ONE));

    let ext = catalog::build("ext-case3-sl2-3").unwrap();
    assert_eq!(ext.generators()[0].to_string(), "[[1, 1, 0], [0, 1, 0], [0, 0, 1]]");
    assert!(ext.generators().iter().any(|m| m.to_string() == "[[1, 0, 1], [0, 1, 0], [0, 0, 1]]"));
    let dual = catalog::build("ext-case2-dual-sl2-3").unwrap();
    assert_eq!(dual.generators()[0].to_string(), "[[1, 0, 0], [0, 1, 1], [0, 0, 1]]");
    assert!(dual.generators().iter().any(|m| m.to_string() == "[[1, 1, 0], [0, 1, 0], [0, 0, 1]]"));
}
