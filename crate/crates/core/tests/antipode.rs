use hombra::antipode::{
    check_grouplike, check_primitive, find_relative_antipode, prop_anti_algebra,
    prop_anti_coalgebra, prop_grouplike_inverse, prop_hopf_map, prop_primitive_image,
    prop_s_squared, run_propositions, uniform_exponent, verify_relative_antipode,
    verify_strict_antipode,
};
use hombra::constructions::{group_algebra, pushforward, yau_twist_hopf, FiniteGroup};
use hombra::fixtures::{build, example_2dbi, NAMES};
use hombra::structures::{compute_flags, HomHopfCandidate};
use hombra::{Error, LinMap, Vector};

fn hopf_fixtures() -> Vec<(&'static str, HomHopfCandidate)> {
    NAMES
        .iter()
        .filter_map(|n| build(n).unwrap().hopf().ok().map(|h| (*n, h)))
        .collect()
}

#[test]
fn classical_group_algebras_have_exponent_zero_everywhere() {
    for n in [2, 3] {
        let h = group_algebra(&FiniteGroup::cyclic(n).unwrap());
        assert!(verify_strict_antipode(&h).all_pass());
        let found = find_relative_antipode(&h.bialgebra, 4).unwrap().unwrap();
        assert_eq!(found.exponent, 0);
        assert_eq!(found.inverse, h.antipode);
        assert_eq!(
            h.antipode.compose(&h.antipode).unwrap(),
            LinMap::identity(n)
        );
        for p in run_propositions(&h, 4) {
            assert_eq!(p.min_exponent, Some(0), "{}", p.name);
            assert!(p.hypotheses_met(), "{}", p.name);
        }
    }
}

#[test]
fn identity_is_a_strict_antipode_of_example_2dbi() {
    let h = HomHopfCandidate::new(example_2dbi(), LinMap::identity(2)).unwrap();
    let strict = verify_strict_antipode(&h);
    assert!(strict.entry("left_inverse").unwrap().passed());
    assert!(strict.entry("right_inverse").unwrap().passed());
    let r = verify_relative_antipode(&h, 2);
    assert!(r.passes());
    assert_eq!(r.uniform, Some(0));
    let found = find_relative_antipode(&h.bialgebra, 2).unwrap().unwrap();
    assert_eq!((found.inverse, found.exponent), (LinMap::identity(2), 0));
}

#[test]
fn exponent_bounds_hold_on_every_fixture() {
    for (name, h) in hopf_fixtures() {
        let k_max = 8;
        let k = uniform_exponent(&h, k_max).expect(name);
        let flags = compute_flags(&h.bialgebra);
        for p in [prop_anti_algebra(&h, k_max), prop_anti_coalgebra(&h, k_max)] {
            if p.hypotheses_met() {
                let found = p.min_exponent.expect(name);
                assert!(found <= k + 2, "{name} {}: {found} > {k} + 2", p.name);
            }
        }
        let s2 = prop_s_squared(&h, k_max);
        if flags.commutative || flags.cocommutative {
            assert!(s2.found(), "{name}");
        }
        if flags.twists_invertible() {
            assert_eq!(s2.strict, Some(true), "{name}");
        } else {
            assert_eq!(s2.strict, None, "{name}");
        }
        for p in run_propositions(&h, k_max) {
            if p.hypotheses_met() {
                assert!(p.found(), "{name} {}", p.name);
            }
        }
    }
}

#[test]
fn every_basis_grouplike_and_primitive_has_its_image() {
    let mut seen = (0, 0);
    for (name, h) in hopf_fixtures() {
        let n = h.dim();
        for i in 0..n {
            let e = Vector::basis(n, i);
            let g = check_grouplike(&h.bialgebra, &e);
            if g.grouplike {
                assert!(g.counit.is_one(), "{name}");
                assert!(
                    prop_grouplike_inverse(&h, &e, 8).unwrap().found(),
                    "{name} {i}"
                );
                seen.0 += 1;
            }
            if check_primitive(&h.bialgebra, &e).primitive {
                assert!(
                    prop_primitive_image(&h, &e, 8).unwrap().found(),
                    "{name} {i}"
                );
                seen.1 += 1;
            }
        }
    }
    assert!(seen.0 > 0 && seen.1 > 0);
}

#[test]
fn grouplike_exponent_is_the_hom_group_index() {
    let h = build("homgroup_c4_index").unwrap().hopf().unwrap();
    let exps: Vec<Option<u32>> = (0..4)
        .map(|i| {
            prop_grouplike_inverse(&h, &Vector::basis(4, i), 4)
                .unwrap()
                .min_exponent
        })
        .collect();
    assert_eq!(exps, vec![Some(0), Some(1), Some(0), Some(1)]);
}

#[test]
fn non_grouplike_is_rejected() {
    let h = build("prim3").unwrap().hopf().unwrap();
    let x = Vector::basis(3, 1);
    assert!(matches!(
        prop_grouplike_inverse(&h, &x, 2),
        Err(Error::HypothesisFailed(_))
    ));
    let one = Vector::basis(3, 0);
    assert!(matches!(
        prop_primitive_image(&h, &one, 2),
        Err(Error::HypothesisFailed(_))
    ));
}

#[test]
fn bialgebra_maps_intertwine_antipodes() {
    let g = FiniteGroup::cyclic(4).unwrap();
    let src = group_algebra(&g);
    let dst = yau_twist_hopf(&src, &pushforward(&[0, 3, 2, 1])).unwrap();
    // the twist map itself is a map of Hom-bialgebras from the twisted
    // structure to itself
    let f = pushforward(&[0, 3, 2, 1]);
    let p = prop_hopf_map(&f, &dst, &dst, 4).unwrap();
    assert!(p.hypotheses_met());
    assert_eq!(p.min_exponent, Some(0));
    assert_eq!(p.strict, Some(true));
    // swapping g and g^2 is not multiplicative
    let bad = pushforward(&[0, 2, 1, 3]);
    assert!(prop_hopf_map(&bad, &src, &src, 4).is_err());
}

#[test]
fn qmatrix_has_no_antipode_in_bounded_search() {
    let b = build("qmatrix_d2").unwrap().bialgebra().unwrap();
    assert!(find_relative_antipode(&b, 3).unwrap().is_none());
}

#[test]
fn propositions_are_deterministic() {
    let h = build("c3_twist").unwrap().hopf().unwrap();
    assert_eq!(run_propositions(&h, 4), run_propositions(&h, 4));
}
