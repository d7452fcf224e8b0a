use hombra::convolution::ConvContext;
use hombra::fixtures::{build, example_2dbi, NAMES};
use hombra::structures::HomBialgebra;
use hombra::{LinMap, Scalar, SparseVec};
use proptest::prelude::*;

fn bialgebras() -> Vec<(&'static str, HomBialgebra)> {
    NAMES
        .iter()
        .filter(|n| **n != "qmatrix_d4")
        .filter_map(|n| build(n).unwrap().bialgebra().ok().map(|b| (*n, b)))
        .collect()
}

fn small_map(n: usize) -> impl Strategy<Value = LinMap> {
    proptest::collection::vec(-2i64..3, n * n).prop_map(move |entries| {
        let cols = (0..n)
            .map(|c| {
                let mut v = SparseVec::new();
                for r in 0..n {
                    v.add_term(r, &Scalar::from_int(entries[r * n + c]));
                }
                v
            })
            .collect();
        LinMap::from_columns(n, cols).unwrap()
    })
}

fn instance() -> impl Strategy<Value = (&'static str, HomBialgebra, LinMap, LinMap, LinMap)> {
    let all = bialgebras();
    (0..all.len()).prop_flat_map(move |i| {
        let (name, b) = all[i].clone();
        let n = b.dim();
        (
            Just(name),
            Just(b),
            small_map(n),
            small_map(n),
            small_map(n),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// `γ(f) ⋆ (g ⋆ h) = (f ⋆ g) ⋆ γ(h)` on every Hom-bialgebra whose
    /// axioms hold.
    #[test]
    fn convolution_is_hom_associative((name, b, f, g, h) in instance()) {
        prop_assume!(b.check_axioms().all_pass());
        let ctx = ConvContext::new(&b.coalgebra, &b.algebra);
        let lhs = ctx.convolve(&ctx.gamma(&f).unwrap(), &ctx.convolve(&g, &h).unwrap()).unwrap();
        let rhs = ctx.convolve(&ctx.convolve(&f, &g).unwrap(), &ctx.gamma(&h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs, "{}", name);
    }

    #[test]
    fn convolution_laws((name, b, f, g, _h) in instance(), n in 0u32..3) {
        let ctx = ConvContext::new(&b.coalgebra, &b.algebra);
        let report = ctx.check_convolution_laws(&f, &g, n).unwrap();
        prop_assert!(report.all_pass(), "{}: {:?}", name, report.failures().next());
    }
}

#[test]
fn laws_are_reported_but_not_asserted_without_hypotheses() {
    let b = example_2dbi();
    let ctx = ConvContext::new(&b.coalgebra, &b.algebra);
    let id = LinMap::identity(2);
    let report = ctx.check_convolution_laws(&id, &id, 1).unwrap();
    let unit = report.entry("unit_right").unwrap();
    assert!(!unit.hypothesis_met);
}

#[test]
fn identity_on_example_2dbi_is_its_own_inverse() {
    let b = example_2dbi();
    let ctx = ConvContext::new(&b.coalgebra, &b.algebra);
    let id = LinMap::identity(2);
    assert!(ctx.is_relative_inverse(&id, &id, 0).unwrap());
    let found = ctx.solve_relative_inverse(&id, 3).unwrap().unwrap();
    assert_eq!(found.exponent, 0);
    assert_eq!(found.inverse, id);
    assert_eq!(found.nullspace_dim(), 0);
}

#[test]
fn solver_exponent_is_minimal_and_solutions_agree_after_twist() {
    for (name, b) in bialgebras() {
        let ctx = ConvContext::new(&b.coalgebra, &b.algebra);
        let id = LinMap::identity(b.dim());
        let Some(found) = ctx.solve_relative_inverse(&id, 4).unwrap() else {
            continue;
        };
        if found.exponent > 0 {
            assert!(ctx
                .solve_relative_inverse_at(&id, found.exponent - 1)
                .unwrap()
                .is_none());
        }
        assert!(ctx
            .is_relative_inverse(&id, &found.inverse, found.exponent)
            .unwrap());
        for v in &found.nullspace {
            let other = found.inverse.add(v).unwrap();
            assert!(
                ctx.is_relative_inverse(&id, &other, found.exponent)
                    .unwrap(),
                "{name}"
            );
        }
        let u = ctx.uniqueness_up_to_twist(&found).unwrap();
        assert!(u.holds(), "{name}");
    }
}

#[test]
fn nontrivial_nullspace_is_exercised() {
    let b = build("prim3").unwrap().bialgebra().unwrap();
    let ctx = ConvContext::new(&b.coalgebra, &b.algebra);
    let found = ctx
        .solve_relative_inverse(&LinMap::identity(3), 2)
        .unwrap()
        .unwrap();
    assert!(found.nullspace_dim() > 0);
    let u = ctx.uniqueness_up_to_twist(&found).unwrap();
    assert!(u.holds() && !u.is_vacuous());
}
