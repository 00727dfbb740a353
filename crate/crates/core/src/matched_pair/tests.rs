use super::*;
use crate::config::{Caps, DEFAULT_SEED};
use crate::groups::{is_isomorphic_small, FiniteGroup};
use crate::standard;
use proptest::prelude::*;

#[test]
fn normality_controls_triviality_of_actions() {
    let a = standard::s3_z2_z3();
    assert!(a.is_beta_trivial() && !a.is_alpha_trivial());
    let b = standard::s3_z3_z2();
    assert!(b.is_alpha_trivial() && !b.is_beta_trivial());
    let c = standard::s4_s3_z4();
    assert!(!c.is_alpha_trivial() && !c.is_beta_trivial());
}

#[test]
fn factorization_identity_holds_in_the_ambient_group() {
    let s4 = FiniteGroup::symmetric(4);
    let gamma = s4.subgroup_closure(&[s4.find_label("(1 2)").unwrap(), s4.find_label("(1 2 3)").unwrap()]);
    let g = s4.subgroup_closure(&[s4.find_label("(1 2 3 4)").unwrap()]);
    let mp = MatchedPair::derive_actions(&s4, &gamma, &g).unwrap();
    for (j, &r) in gamma.iter().enumerate() {
        for (i, &x) in g.iter().enumerate() {
            let lhs = s4.mul(r, x);
            let rhs = s4.mul(g[mp.alpha(j, i)], gamma[mp.beta(i, j)]);
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn zappa_szep_round_trip() {
    for (name, mp) in standard::corpus() {
        let h = mp.zappa_szep(&Caps::default(), DEFAULT_SEED).unwrap();
        let (gamma, g) = mp.zappa_szep_factors();
        let back = MatchedPair::derive_actions(&h, &gamma, &g).unwrap();
        assert_eq!(back.alpha_table(), mp.alpha_table(), "{name}");
        assert_eq!(back.beta_table(), mp.beta_table(), "{name}");
    }
}

#[test]
fn zappa_szep_recovers_the_ambient_group() {
    let mp = standard::s4_s3_z4();
    let h = mp.zappa_szep(&Caps::default(), DEFAULT_SEED).unwrap();
    assert!(is_isomorphic_small(&h, &FiniteGroup::symmetric(4), &Caps::default())
        .unwrap()
        .is_some());
}

#[test]
fn non_factorizations_are_rejected() {
    let s3 = FiniteGroup::symmetric(3);
    let t = s3.subgroup_closure(&[s3.find_label("(1 2)").unwrap()]);
    let u = s3.subgroup_closure(&[s3.find_label("(1 3)").unwrap()]);
    let err = MatchedPair::derive_actions(&s3, &t, &u).unwrap_err();
    assert!(matches!(err, crate::Error::NotMatched(_)), "{err}");
    let err = MatchedPair::derive_actions(&s3, &t, &t).unwrap_err();
    assert!(matches!(err, crate::Error::NotMatched(_)));
    let not_sub = vec![0, s3.find_label("(1 2)").unwrap(), s3.find_label("(1 3)").unwrap()];
    assert!(MatchedPair::derive_actions(&s3, &not_sub, &t).is_err());
}

#[test]
fn corrupted_tables_fail_validation() {
    let mp = standard::s4_s3_z4();
    let mut beta = mp.beta_table();
    let x = 1;
    let (a, b) = (1, 2);
    beta[x].swap(a, b);
    let err = MatchedPair::from_tables(mp.gamma().clone(), mp.g().clone(), mp.alpha_table(), beta)
        .unwrap_err();
    assert!(matches!(err, crate::Error::InvalidPair(_)), "{err}");
    let mut alpha = mp.alpha_table();
    alpha[1][1] = 0;
    assert!(MatchedPair::from_tables(mp.gamma().clone(), mp.g().clone(), alpha, mp.beta_table()).is_err());
}

#[test]
fn orbits_partition_gamma_with_stabilizer_counts() {
    for (name, mp) in standard::corpus() {
        let orbits = mp.orbits();
        let total: usize = orbits.iter().map(|o| o.len()).sum();
        assert_eq!(total, mp.gamma().order(), "{name}");
        for o in &orbits {
            for &r in o {
                assert_eq!(o.len() * mp.stabilizer(r).len(), mp.g().order(), "{name}");
            }
        }
        let fixed = mp.gamma_fixed();
        assert_eq!(
            fixed.len(),
            orbits.iter().filter(|o| o.len() == 1).count(),
            "{name}"
        );
    }
}

#[test]
fn fixed_subgroups_are_subgroups() {
    for (name, mp) in standard::corpus() {
        assert!(mp.gamma().is_subgroup(&mp.gamma_fixed()), "{name}");
        assert!(mp.g().is_subgroup(&mp.g_fixed()), "{name}");
        let k = mp.beta_kernel();
        assert!(mp.g().is_subgroup(&k) && mp.g().is_normal(&k), "{name}");
    }
}

#[test]
fn magic_unitaries_satisfy_all_relations() {
    for (name, mp) in standard::corpus() {
        for o in mp.orbits() {
            let u = mp.magic_unitary(&o);
            for check in u.check_relations(mp.g()) {
                assert!(check.holds, "{name}: {} {:?}", check.relation, check.witness);
            }
        }
    }
}

#[test]
fn magic_unitary_detects_a_broken_coproduct() {
    let mp = standard::s4_s3_z4();
    let orbit = mp.orbits().into_iter().find(|o| o.len() > 2).unwrap();
    let mut u = mp.magic_unitary(&orbit);
    // Swap two entries of a row: sums survive, the coproduct relation does not.
    u.entries[0].swap(0, 1);
    let checks = u.check_relations(mp.g());
    assert!(checks.iter().any(|c| !c.holds));
}

#[test]
fn b_sets_contain_identity_and_are_full_on_fixed_points() {
    let mp = standard::s4_s3_z4();
    for r in mp.gamma().elements() {
        for s in mp.gamma().elements() {
            assert!(mp.b_set(r, s).contains(&mp.g().identity()));
        }
    }
    let e = mp.gamma().identity();
    assert_eq!(mp.b_set(e, e).len(), mp.g().order());
}

#[test]
fn lambda_deformation_gives_a_dihedral_group() {
    let mp = standard::lambda_sign_deformed();
    assert_eq!(mp.g().order(), 14);
    assert!(!mp.g().is_abelian());
    assert!(is_isomorphic_small(mp.g(), &FiniteGroup::dihedral(7), &Caps::default())
        .unwrap()
        .is_some());
    // β_(r,g)(γ) = r⁻¹ γ r
    let (base, chi) = standard::lambda_sign_base();
    let gm = base.gamma();
    for x in mp.g().elements() {
        for r in gm.elements() {
            assert_eq!(mp.beta(x, r), gm.mul(gm.mul(gm.inv(chi[x]), r), chi[x]));
        }
    }
}

#[test]
fn quotient_deformation_has_the_twisted_law() {
    let mp = standard::quotient_s3_deformed();
    let g = mp.g();
    let n = g.order();
    let gm = mp.gamma();
    for a in gm.elements() {
        for b in gm.elements() {
            let (r, x) = (a / n, a % n);
            let (s, y) = (b / n, b % n);
            let expected = g.mul(r, s) * n + g.mul(g.mul(g.mul(g.inv(s), x), s), y);
            assert_eq!(gm.mul(a, b), expected);
        }
    }
    for r in gm.elements() {
        for x in g.elements() {
            let q = r / n;
            assert_eq!(mp.alpha(r, x), g.conj(q, x));
        }
    }
}

#[test]
fn deformation_preconditions_are_checked() {
    let mp = standard::s4_s3_z4();
    let chi = vec![0; mp.g().order()];
    assert!(matches!(
        mp.deform_by_chi_g(&chi, &Caps::default(), 1),
        Err(crate::Error::DeformationPrecondition(_))
    ));
    let (base, mut chi) = standard::lambda_sign_base();
    chi[1] = 1;
    assert!(matches!(
        base.deform_by_chi_g(&chi, &Caps::default(), 1),
        Err(crate::Error::NotCrossedHom(_))
    ));
    let (qbase, mut qchi) = standard::quotient_s3_base();
    qchi[1] = 3;
    assert!(matches!(
        qbase.deform_by_chi_gamma(&qchi, &Caps::default(), 1),
        Err(crate::Error::NotCrossedHom(_))
    ));
}

#[test]
fn trivial_crossed_homomorphism_changes_nothing() {
    let (base, chi) = standard::lambda_sign_base();
    let e = base.gamma().identity();
    let triv = vec![e; chi.len()];
    let same = base.deform_by_chi_g(&triv, &Caps::default(), 1).unwrap();
    assert_eq!(same.beta_table(), base.beta_table());
    assert_eq!(same.g(), base.g());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn exact_factorizations_of_s4_give_valid_pairs(
        a in 0usize..24, b in 0usize..24, c in 0usize..24, d in 0usize..24
    ) {
        let s4 = FiniteGroup::symmetric(4);
        let gamma = s4.subgroup_closure(&[a, b]);
        let g = s4.subgroup_closure(&[c, d]);
        let exact = gamma.len() * g.len() == 24
            && gamma.iter().filter(|x| g.contains(x)).count() == 1;
        match MatchedPair::derive_actions(&s4, &gamma, &g) {
            Ok(mp) => {
                prop_assert!(exact);
                prop_assert!(mp.validate().is_ok());
                prop_assert_eq!(mp.is_beta_trivial(), s4.is_normal(&g));
                prop_assert_eq!(mp.is_alpha_trivial(), s4.is_normal(&gamma));
            }
            Err(_) => prop_assert!(!exact),
        }
    }
}
