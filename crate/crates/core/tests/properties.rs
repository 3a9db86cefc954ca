use modsing_core::group::ClosureOptions;
use modsing_core::invariants::{
    decide_polynomiality, hilbert_series_of_polynomial_ring, invariant_space, PolynomialityOptions,
};
use modsing_core::poly::act;
use modsing_core::singularity::{classify, fixed_space_lattice};
use modsing_core::{Fe, Field, MatrixGroup, Multipoly, SquareMatrix, Subspace, Verdict};
use proptest::prelude::*;

fn field(q: usize) -> Field {
    match q {
        4 => Field::standard(2, 2).unwrap(),
        9 => Field::standard(3, 2).unwrap(),
        p => Field::prime(p as u32).unwrap(),
    }
}

fn matrix(q: usize, n: usize) -> impl Strategy<Value = SquareMatrix> {
    prop::collection::vec(0..q as u16, n * n).prop_map(move |e| {
        let f = field(q);
        SquareMatrix::from_entries(&f, n, e.into_iter().map(Fe).collect()).unwrap()
    })
}

fn invertible(q: usize, n: usize) -> impl Strategy<Value = SquareMatrix> {
    matrix(q, n).prop_filter("singular", |m| !m.det().is_zero())
}

fn small_group(q: usize, n: usize) -> impl Strategy<Value = MatrixGroup> {
    prop::collection::vec(invertible(q, n), 1..3).prop_filter_map("too large", move |gens| {
        let opts = ClosureOptions { cap: 200, parallel: true };
        MatrixGroup::generate_with(&field(q), n, gens, &opts).ok()
    })
}

fn poly(q: usize, nvars: usize) -> impl Strategy<Value = Multipoly> {
    prop::collection::vec((prop::collection::vec(0u32..3, nvars), 1..q as u16), 0..5).prop_map(move |terms| {
        let f = field(q);
        Multipoly::from_terms(&f, nvars, terms.into_iter().map(|(e, c)| (e, Fe(c)))).unwrap()
    })
}

fn group_and_conjugator(q: usize) -> impl Strategy<Value = (MatrixGroup, SquareMatrix)> {
    (small_group(q, 2), invertible(q, 2))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn action_is_a_homomorphism(g in invertible(3, 3), h in invertible(3, 3), f in poly(3, 3)) {
        prop_assert_eq!(act(&g.mul(&h), &f).unwrap(), act(&g, &act(&h, &f).unwrap()).unwrap());
    }

    #[test]
    fn action_is_multiplicative(g in invertible(9, 2), a in poly(9, 2), b in poly(9, 2)) {
        prop_assert_eq!(act(&g, &a.mul(&b)).unwrap(), act(&g, &a).unwrap().mul(&act(&g, &b).unwrap()));
        prop_assert_eq!(act(&g, &a.add(&b)).unwrap(), act(&g, &a).unwrap().add(&act(&g, &b).unwrap()));
    }

    #[test]
    fn fixed_space_and_rank(m in matrix(5, 3)) {
        let fixed = m.fixed_space();
        prop_assert_eq!(fixed.dim() + m.minus_identity().rank(), 3);
        for v in fixed.basis() {
            prop_assert_eq!(&m.apply(v), v);
        }
    }

    #[test]
    fn closure_is_deterministic(gens in prop::collection::vec(invertible(3, 2), 1..4)) {
        let f = field(3);
        let par = MatrixGroup::generate_with(&f, 2, gens.clone(), &ClosureOptions { parallel: true, ..Default::default() }).unwrap();
        let mut reversed = gens.clone();
        reversed.reverse();
        let seq = MatrixGroup::generate_with(&f, 2, reversed, &ClosureOptions { parallel: false, ..Default::default() }).unwrap();
        prop_assert_eq!(par.elements(), seq.elements());
    }

    #[test]
    fn distinguished_subgroups_are_normal(g in small_group(3, 2)) {
        let gp = g.p_subgroup();
        let h = g.pseudoreflection_subgroup();
        prop_assert!(g.is_normal_subgroup(&gp));
        prop_assert!(g.is_normal_subgroup(&h));
        prop_assert_eq!(g.order() % gp.order(), 0);
        prop_assert_eq!(g.order() % h.order(), 0);
    }

    #[test]
    fn fixators_shrink_as_subspaces_grow(g in small_group(3, 3), v in prop::collection::vec(0u16..3, 3), w in prop::collection::vec(0u16..3, 3)) {
        let f = field(3);
        let v: Vec<Fe> = v.into_iter().map(Fe).collect();
        let w: Vec<Fe> = w.into_iter().map(Fe).collect();
        let small = Subspace::span(&f, 3, std::slice::from_ref(&v)).unwrap();
        let big = Subspace::span(&f, 3, &[v, w]).unwrap();
        let fs = g.fixator(&small).unwrap();
        let fb = g.fixator(&big).unwrap();
        prop_assert!(fb.is_subgroup_of(&fs));
        prop_assert_eq!(fs.order() % fb.order(), 0);
    }

    #[test]
    fn subgroups_divide(g in small_group(5, 2), k in 0usize..4) {
        let gens: Vec<SquareMatrix> = g.elements().iter().skip(k).step_by(3).take(2).cloned().collect();
        let h = g.subgroup(gens).unwrap();
        prop_assert!(h.is_subgroup_of(&g));
        prop_assert_eq!(g.order() % h.order(), 0);
    }

    #[test]
    fn polynomial_rings_have_the_product_series(g in small_group(3, 2)) {
        let v = decide_polynomiality(&g, &PolynomialityOptions::default()).unwrap();
        if v.is_polynomial() {
            let max = 8;
            let series = hilbert_series_of_polynomial_ring(&v.generator_degrees, max);
            for d in 0..=max {
                prop_assert_eq!(invariant_space(&g, d).unwrap().dim() as u128, series[d as usize]);
            }
        }
    }

    #[test]
    fn classification_is_conjugation_invariant((g, b) in group_and_conjugator(3)) {
        let opts = PolynomialityOptions::default();
        let conj = g.conjugate(&b).unwrap();
        prop_assert_eq!(classify(&g, &opts).unwrap().verdict, classify(&conj, &opts).unwrap().verdict);
        let mut moved: Vec<Subspace> = fixed_space_lattice(&g).iter().map(|u| u.image(&b)).collect();
        moved.sort();
        prop_assert_eq!(moved, fixed_space_lattice(&conj));
    }

    #[test]
    fn smooth_quotients_have_polynomial_fixators(g in small_group(5, 2)) {
        let r = classify(&g, &PolynomialityOptions::default()).unwrap();
        if r.verdict == Verdict::Smooth {
            prop_assert_eq!(r.all_fixators_polynomial(), Some(true));
        }
        if r.verdict == Verdict::Nonisolated {
            prop_assert!(r.witness.is_some());
        }
    }

    #[test]
    fn nonmodular_smooth_iff_reflection_group(g in small_group(4, 2)) {
        prop_assume!(g.order() % 2 != 0);
        let r = classify(&g, &PolynomialityOptions::default()).unwrap();
        prop_assert_eq!(r.verdict == Verdict::Smooth, g.is_generated_by_pseudoreflections());
    }
}
