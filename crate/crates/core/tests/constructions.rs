use hombra::antipode::verify_relative_antipode;
use hombra::constructions::{
    function_algebra, group_algebra, hom_group_algebra, pullback, pushforward, tensor_hopf,
    trivial_hopf, twist_group, yau_twist, yau_twist_hopf, ClassicalBialgebra, FiniteGroup,
};
use hombra::fixtures::homgroup_c4_index_group;
use hombra::structures::{check_axioms, compute_flags, Structure};
use hombra::LinMap;
use proptest::prelude::*;

fn groups() -> Vec<FiniteGroup> {
    let mut gs: Vec<FiniteGroup> = (1..=6).map(|n| FiniteGroup::cyclic(n).unwrap()).collect();
    gs.push(FiniteGroup::klein());
    gs.push(FiniteGroup::symmetric3());
    gs
}

#[test]
fn endomorphism_counts() {
    assert_eq!(FiniteGroup::cyclic(4).unwrap().endomorphisms().len(), 4);
    assert_eq!(FiniteGroup::cyclic(6).unwrap().endomorphisms().len(), 6);
    assert_eq!(FiniteGroup::klein().endomorphisms().len(), 16);
    assert_eq!(FiniteGroup::symmetric3().endomorphisms().len(), 10);
    assert_eq!(FiniteGroup::symmetric3().automorphisms().len(), 6);
}

#[test]
fn yau_twists_of_group_and_function_algebras_pass_all_axioms() {
    let mut pairs = 0;
    for g in groups() {
        let qg = ClassicalBialgebra::new(group_algebra(&g).bialgebra).unwrap();
        let fg = ClassicalBialgebra::new(function_algebra(&g).bialgebra).unwrap();
        for phi in g.endomorphisms() {
            for (b, map) in [(&qg, pushforward(&phi)), (&fg, pullback(&phi))] {
                let twisted = yau_twist(b, &map).unwrap();
                let report = check_axioms(Structure::Bialgebra(&twisted));
                assert!(
                    report.all_pass(),
                    "{} {phi:?}: {:?}",
                    g.name,
                    report.failures().next()
                );
                assert!(report.entries.iter().all(|e| e.passed()));
                pairs += 1;
            }
        }
    }
    assert!(pairs >= 20, "{pairs}");
}

#[test]
fn twist_by_non_morphism_is_rejected() {
    let g = FiniteGroup::cyclic(3).unwrap();
    let qg = ClassicalBialgebra::new(group_algebra(&g).bialgebra).unwrap();
    // swaps 1 and g: not unital
    let bad = pushforward(&[1, 0, 2]);
    assert!(yau_twist(&qg, &bad).is_err());
    assert!(twist_group(&g, &[1, 0, 2]).is_err());
}

#[test]
fn twisted_classical_antipode_stays_strict() {
    for g in groups() {
        for phi in g.endomorphisms() {
            let h = yau_twist_hopf(&group_algebra(&g), &pushforward(&phi)).unwrap();
            let r = verify_relative_antipode(&h, 2);
            assert!(r.passes(), "{} {phi:?}", g.name);
            assert_eq!(r.uniform, Some(0));
        }
    }
}

#[test]
fn hom_group_indices_are_per_basis_exponents() {
    let hg = homgroup_c4_index_group();
    assert_eq!(hg.index, vec![0, 1, 0, 1]);
    assert!(hg.alpha_multiplicative);
    let h = hom_group_algebra(&hg, false).unwrap();
    assert!(check_axioms(Structure::Bialgebra(&h.bialgebra)).all_pass());
    let r = verify_relative_antipode(&h, 4);
    assert!(r.passes());
    let expected: Vec<Option<u32>> = hg.index.iter().map(|&k| Some(k)).collect();
    assert_eq!(r.per_basis, expected);
    assert_eq!(r.uniform, Some(1));
}

#[test]
fn twisted_groups_give_hom_hopf_algebras() {
    for g in groups() {
        for phi in g.endomorphisms() {
            let hg = twist_group(&g, &phi).unwrap();
            for comul_alpha in [false, true] {
                let h = hom_group_algebra(&hg, comul_alpha).unwrap();
                let report = check_axioms(Structure::Bialgebra(&h.bialgebra));
                assert!(report.all_pass(), "{} {phi:?} {comul_alpha}", g.name);
                let r = verify_relative_antipode(&h, 3);
                assert!(r.passes(), "{} {phi:?} {comul_alpha}", g.name);
                let expected: Vec<Option<u32>> = hg.index.iter().map(|&k| Some(k)).collect();
                assert_eq!(r.per_basis, expected);
            }
        }
    }
}

#[test]
fn tensor_with_trivial_is_a_copy() {
    let c3 = group_algebra(&FiniteGroup::cyclic(3).unwrap());
    let t = tensor_hopf(&c3, &trivial_hopf()).unwrap();
    assert_eq!(t, c3);
    let k4 = group_algebra(&FiniteGroup::klein());
    let c2 = group_algebra(&FiniteGroup::cyclic(2).unwrap());
    let p = tensor_hopf(&c2, &c2).unwrap();
    assert_eq!(p.dim(), 4);
    assert!(check_axioms(Structure::Bialgebra(&p.bialgebra)).all_pass());
    assert_eq!(compute_flags(&p.bialgebra), compute_flags(&k4.bialgebra));
    assert!(verify_relative_antipode(&p, 1).passes());
}

#[test]
fn tensor_of_hom_structures_passes() {
    let c4 = FiniteGroup::cyclic(4).unwrap();
    let a = yau_twist_hopf(&group_algebra(&c4), &pushforward(&[0, 2, 0, 2])).unwrap();
    let b = hom_group_algebra(&homgroup_c4_index_group(), false).unwrap();
    let t = tensor_hopf(&a, &b).unwrap();
    assert!(check_axioms(Structure::Bialgebra(&t.bialgebra)).all_pass());
    let r = verify_relative_antipode(&t, 3);
    assert!(r.passes());
    assert_eq!(r.uniform, Some(1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn twist_then_twist_again_composes(n in 1usize..7, a in 0usize..7, b in 0usize..7) {
        // x ↦ ax and x ↦ bx on C_n; twisting the group algebra by each is
        // valid and the twist maps compose to x ↦ abx
        let g = FiniteGroup::cyclic(n).unwrap();
        let pa: Vec<usize> = (0..n).map(|x| (a * x) % n).collect();
        let pb: Vec<usize> = (0..n).map(|x| (b * x) % n).collect();
        let pab: Vec<usize> = (0..n).map(|x| (a * b * x) % n).collect();
        prop_assert_eq!(pushforward(&pa).compose(&pushforward(&pb)).unwrap(), pushforward(&pab));
        let qg = ClassicalBialgebra::new(group_algebra(&g).bialgebra).unwrap();
        let t = yau_twist(&qg, &pushforward(&pab)).unwrap();
        prop_assert!(check_axioms(Structure::Bialgebra(&t)).all_pass());
        let id = yau_twist(&qg, &LinMap::identity(n)).unwrap();
        prop_assert_eq!(&id, qg.inner());
    }
}
