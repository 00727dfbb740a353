use super::*;
use crate::bicrossed::{AlgebraMorphism, KacAlgebra};
use crate::config::RunConfig;
use crate::groups::{is_isomorphic_small, FiniteGroup};
use crate::linalg::CMat;
use crate::matched_pair::MatchedPair;
use crate::standard;
use num_complex::Complex64;

fn catalog_of(mp: MatchedPair) -> (KacAlgebra, IrrepCatalog) {
    let a = KacAlgebra::new(mp);
    let c = enumerate_irreps(&a, &RunConfig::default()).expect("catalog");
    (a, c)
}

fn iso(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    is_isomorphic_small(a, b, &RunConfig::default().caps).unwrap().is_some()
}

#[test]
fn orbit_corepresentation_of_the_two_orbit() {
    let a = KacAlgebra::new(standard::s3_z3_z2());
    let mp = a.pair();
    let orbits = mp.orbits();
    let o = orbits.iter().find(|o| o.len() == 2).expect("orbit of size 2");
    let v = orbit_corep(&a, o);
    check_corep(&a, &v, 1e-12).unwrap();
    // Entries u_r δ_g with g running over a single coset pattern.
    for e in &v.entries {
        assert_eq!(e.support().count(), 1);
    }
    assert_eq!(corep_defect(&a, &v), 0.0);
}

#[test]
fn catalog_of_the_flipped_s3_pair_has_dims_1_1_2() {
    let (a, c) = catalog_of(standard::s3_z3_z2());
    assert_eq!(c.dim_multiset(), vec![1, 1, 2]);
    assert_eq!(c.peter_weyl_sum(), 6);
    let audit = audit_candidates(&c);
    let bad: Vec<&AuditEntry> = audit
        .iter()
        .filter(|e| e.status == AuditStatus::Disagree && e.claim.contains("inequivalent"))
        .collect();
    assert_eq!(bad.len(), 1, "{audit:#?}");
    let w = bad[0].witness.as_ref().expect("witness");
    assert!(w.contains("-1.000000"), "{w}");
    // The two 2-dimensional candidates are intertwined by diag(1, -1) up to phase.
    let two: Vec<&Candidate> = c.candidates.iter().filter(|k| k.corep.dim == 2).collect();
    assert_eq!(two.len(), 2);
    let basis = intertwiners(&two[0].corep, &two[1].corep, SOLVER_TOL);
    assert_eq!(basis.len(), 1);
    let t = normalize_phase(&basis[0]);
    let d = CMat::from_diagonal(&nalgebra::DVector::from_vec(vec![
        Complex64::new(1.0, 0.0),
        Complex64::new(-1.0, 0.0),
    ]));
    let dist = (&t - &d).norm().min((&t + &d).norm());
    assert!(dist < 1e-8, "{t}");
    assert_eq!(mor_dim_haar(&a, &two[0].corep, &two[1].corep, 1e-6).unwrap(), 1);
}

#[test]
fn peter_weyl_on_the_corpus() {
    for (name, mp) in standard::corpus() {
        let (a, c) = catalog_of(mp);
        assert_eq!(c.peter_weyl_sum(), a.dim(), "{name}");
        assert_eq!(coefficient_rank(&a, &c.canonical), a.dim(), "{name}");
        for u in &c.canonical {
            check_corep(&a, u, 1e-8).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(mor_dim_haar(&a, u, u, 1e-6).unwrap(), 1, "{name}");
        }
    }
}

#[test]
fn haar_and_solver_agree() {
    for mp in [standard::s3_z2_z3(), standard::s3_z3_z2(), standard::a4_z3_v4()] {
        let (a, c) = catalog_of(mp);
        let check = fusion_consistency(&a, &c, 1e-6, 400).unwrap();
        assert!(check.checked > 0);
        assert!(check.passed(), "{:?}", check.mismatches);
    }
}

#[test]
fn crossed_s3_pair_is_all_one_dimensional() {
    let (a, c) = catalog_of(standard::s3_z2_z3());
    assert_eq!(c.dim_multiset(), vec![1; 6]);
    let inv = invariant_groups(&a, &c, &RunConfig::default()).unwrap();
    assert!(inv.report.passed(), "{:?}", inv.report);
    assert!(iso(&inv.intrinsic.group, &FiniteGroup::symmetric(3)));
    assert!(iso(&inv.spectrum.group, &FiniteGroup::cyclic(2)));
    assert!(audit_candidates(&c).iter().all(|e| e.status == AuditStatus::Agree));
    assert!(audit_fusion_formula(&a, &c).iter().all(|e| e.status == AuditStatus::Agree));
}

#[test]
fn conjugation_pair_invariants() {
    let mp = standard::s3_conjugation_z3();
    let (a, c) = catalog_of(mp.clone());
    let inv = invariant_groups(&a, &c, &RunConfig::default()).unwrap();
    assert!(inv.report.passed(), "{:?}", inv.report);
    assert!(iso(&inv.intrinsic.group, &FiniteGroup::cyclic(6)));
    let z3 = FiniteGroup::cyclic(3);
    assert!(iso(&inv.spectrum.group, &FiniteGroup::direct_product(&z3, &z3)));
    assert!(iso(&inv.intrinsic.group, &crossed_intrinsic_model(&mp).unwrap()));
    assert!(iso(&inv.spectrum.group, &crossed_spectrum_model(&mp).unwrap()));
}

#[test]
fn untwisted_pair_gives_direct_products() {
    let z2 = FiniteGroup::cyclic(2);
    let s3 = FiniteGroup::symmetric(3);
    let mp = MatchedPair::from_tables(
        z2.clone(),
        s3.clone(),
        vec![(0..6).collect(); 2],
        vec![(0..2).collect(); 6],
    )
    .unwrap();
    let (a, c) = catalog_of(mp);
    let inv = invariant_groups(&a, &c, &RunConfig::default()).unwrap();
    assert!(inv.report.passed());
    let z2z2 = FiniteGroup::direct_product(&z2, &z2);
    assert!(iso(&inv.intrinsic.group, &z2z2));
    assert!(iso(&inv.spectrum.group, &FiniteGroup::direct_product(&s3, &z2)));
}

#[test]
fn deformed_families_have_the_predicted_orders() {
    let (a, c) = catalog_of(standard::lambda_sign_deformed());
    let inv = invariant_groups(&a, &c, &RunConfig::default()).unwrap();
    assert!(inv.report.passed(), "{:?}", inv.report);
    assert_eq!(inv.spectrum.group.order(), 4);
    assert!(!inv.spectrum.group.elements().any(|x| inv.spectrum.group.element_order(x) == 4));

    let (a, c) = catalog_of(standard::quotient_s3_deformed());
    let inv = invariant_groups(&a, &c, &RunConfig::default()).unwrap();
    assert!(inv.report.passed(), "{:?}", inv.report);
    assert_eq!(inv.intrinsic.group.order(), 12);
    assert_eq!(inv.spectrum.group.order(), 4);
}

#[test]
fn trivial_pair_recovers_clebsch_gordan() {
    let triv = FiniteGroup::trivial();
    let s3 = FiniteGroup::symmetric(3);
    let mp = MatchedPair::from_tables(triv, s3, vec![(0..6).collect()], vec![vec![0]; 6]).unwrap();
    let (a, c) = catalog_of(mp);
    assert_eq!(c.dim_multiset(), vec![1, 1, 2]);
    let two = c.canonical.iter().find(|u| u.dim == 2).unwrap();
    let sq = tensor(&a, two, two);
    let mult: Vec<usize> = c
        .canonical
        .iter()
        .map(|u| mor_dim_haar(&a, u, &sq, 1e-6).unwrap())
        .collect();
    assert_eq!(mult, vec![1; 3]);
}

#[test]
fn flip_audit_runs_and_finds_matches_for_crossed_pairs() {
    let (a, c) = catalog_of(standard::s3_z2_z3());
    let flips = audit_flip(&a, &c, 1e-6).unwrap();
    assert_eq!(flips.len(), c.candidates.len());
    assert!(flips.iter().all(|e| e.status == AuditStatus::Agree));
}

#[test]
fn branching_along_identity_and_counit() {
    let (a, c) = catalog_of(standard::s4_d4_z3());
    let id = AlgebraMorphism::identity(&a);
    for y in 0..c.canonical.len() {
        assert_eq!(branching_sets(&a, &c, &id, &c, y, 1e-9).unwrap(), vec![y]);
    }
    let eps = AlgebraMorphism::counit(&a);
    let (_, tc) = catalog_of(eps.target.pair().clone());
    let all = branching_sets(&a, &c, &eps, &tc, 0, 1e-9).unwrap();
    assert_eq!(all, (0..c.canonical.len()).collect::<Vec<_>>());
}

#[test]
fn branching_to_the_kernel_of_beta() {
    let (a, c) = catalog_of(standard::s3_z3_z2());
    let ker = a.pair().beta_kernel();
    let rho = AlgebraMorphism::restriction(&a, &ker).unwrap();
    let (_, tc) = catalog_of(rho.target.pair().clone());
    let m = branching_matrix(&a, &c, &rho, &tc, 1e-9).unwrap();
    let check = branching_consistency(&c, &tc, &m);
    assert!(check.dimensions_match && check.covers_target, "{check:?}");
}

#[test]
fn kazhdan_pairs_combine_by_union_and_min() {
    let p1 = KazhdanPair::new(["x".to_string()], 0.5).unwrap();
    let p2 = KazhdanPair::new(["g".to_string()], 0.3).unwrap();
    let c = kazhdan_combine(&p1, &p2);
    assert_eq!(c.set.len(), 2);
    assert_eq!(c.delta, 0.3);
    assert_eq!(kazhdan_combine(&p1, &p1), p1);
    let empty = KazhdanPair::new(Vec::<String>::new(), 0.9).unwrap();
    assert_eq!(kazhdan_combine(&p1, &empty), p1);
    assert!(KazhdanPair::new(["x".to_string()], 0.0).is_err());
}
