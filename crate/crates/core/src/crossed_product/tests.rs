use super::*;
use crate::config::{Caps, RunConfig};
use crate::error::Error;
use crate::groups::{is_isomorphic_small, FiniteGroup};
use crate::linalg::CMat;
use crate::rep_theory::{mor_dim_haar, tensor};
use crate::standard;
use num_bigint::BigInt;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cfg() -> RunConfig {
    RunConfig::default()
}

fn inversion_instance() -> CrossedInstance {
    CrossedInstance::from_pair(standard::z2_inverting_z3(), &cfg()).unwrap()
}

fn conj_instance() -> CrossedInstance {
    let s3 = FiniteGroup::symmetric(3);
    let z3 = s3.subgroup_closure(&[s3.find_label("(1 2 3)").unwrap()]);
    conj_action_builder(&s3, &z3, &cfg()).unwrap()
}

#[test]
fn group_and_dual_group_rings_validate() {
    let s3 = FiniteGroup::symmetric(3);
    group_ring(&s3).validate().unwrap();
    let (ring, table) = dual_group_ring(&s3, &Caps::default(), 1).unwrap();
    ring.validate().unwrap();
    let two = table.dims.iter().position(|&d| d == 2).unwrap();
    let sq = ring.fuse(two, two).unwrap();
    assert_eq!(sq.len(), 3);
    assert!(sq.iter().all(|&(_, m)| m == 1));
}

#[test]
fn free_orthogonal_ring_truncates() {
    let ring = free_orthogonal(3, 10).unwrap();
    ring.validate().unwrap();
    assert!(chebyshev_recursion_holds(&ring, 3));
    let d = ring.exact_dims.as_ref().unwrap();
    assert_eq!(d[..5], [1, 3, 8, 21, 55].map(BigInt::from));
    assert_eq!(ring.fuse(2, 3).unwrap(), vec![(1, 1), (3, 1), (5, 1)]);
    assert!(matches!(ring.fuse(6, 6), Err(Error::TruncationOverflow { .. })));
    assert_eq!(ring.fuse_truncated(6, 6), vec![(0, 1), (2, 1), (4, 1), (6, 1), (8, 1), (10, 1)]);
    assert!(free_orthogonal(1, 4).is_err());
}

#[test]
fn trivial_group_leaves_the_ring_unchanged() {
    let s3 = FiniteGroup::symmetric(3);
    let (ring, _) = dual_group_ring(&s3, &Caps::default(), 1).unwrap();
    let crossed = crossed_ring(ring.clone(), RingAction::trivial(FiniteGroup::trivial(), &ring)).unwrap();
    let flat = crossed.flatten();
    flat.validate().unwrap();
    assert_eq!(flat.products, ring.products);
}

#[test]
fn incompatible_action_is_rejected() {
    let s3 = FiniteGroup::symmetric(3);
    let (ring, _) = dual_group_ring(&s3, &Caps::default(), 1).unwrap();
    // Swapping the trivial and sign characters moves the unit.
    let action = RingAction {
        group: FiniteGroup::cyclic(2),
        perms: vec![vec![0, 1, 2], vec![1, 0, 2]],
    };
    assert!(matches!(crossed_ring(ring, action), Err(Error::ActionNotCompatible(_))));
}

#[test]
fn conjugation_acts_trivially_on_labels() {
    let inst = conj_instance();
    for p in &inst.ring.action.perms {
        assert_eq!(p, &(0..p.len()).collect::<Vec<_>>());
    }
    let flat = inst.ring.flatten();
    flat.validate().unwrap();
    for i in 0..inst.ring.len() {
        assert_eq!(inst.ring.n(inst.ring.dual(i), i, inst.ring.unit()).unwrap(), 1);
    }
}

#[test]
fn crossed_fusion_matches_intertwiner_dimensions() {
    for inst in [inversion_instance(), conj_instance()] {
        let a = &inst.algebra;
        inst.ring.flatten().validate().unwrap();
        let coreps: Vec<_> = (0..inst.ring.len()).map(|l| inst.corep(l)).collect();
        for c in &coreps {
            crate::rep_theory::check_corep(a, c, 1e-9).unwrap();
        }
        for x in 0..coreps.len() {
            for y in 0..coreps.len() {
                let t = tensor(a, &coreps[x], &coreps[y]);
                for z in 0..coreps.len() {
                    let m = mor_dim_haar(a, &coreps[z], &t, 1e-6).unwrap() as u64;
                    assert_eq!(inst.ring.n(x, y, z).unwrap(), m, "({x}, {y}, {z})");
                }
            }
        }
    }
}

#[test]
fn lengths_on_crossed_rings() {
    let inst = inversion_instance();
    let gamma = inst.ring.action.group.clone();
    let lg = word_length(&gamma, &gamma.generators()).unwrap();
    let l = LengthFunction::zero(inst.ring.base.len());
    let l0 = length_l0(&inst.ring, &lg, &l).unwrap();
    for i in 0..inst.ring.len() {
        assert_eq!(l0.values[i], lg.values[inst.ring.split(i).0]);
    }
    assert_eq!(l0.values[inst.ring.unit()], 0.0);
    l0.validate(&inst.ring.flatten()).unwrap();

    // A length that distinguishes the two nontrivial characters of Z/3 is not invariant.
    let mut l = LengthFunction::zero(3);
    l.values[1] = 1.0;
    assert!(matches!(length_l0(&inst.ring, &lg, &l), Err(Error::InvalidLength(_))));
    let inv = invariantize(&l, &inst.ring.action, &inst.ring.base.labels, 2).unwrap();
    assert_eq!(inv.values, vec![0.0, 1.0, 1.0]);
    assert!(matches!(
        invariantize(&l, &inst.ring.action, &inst.ring.base.labels, 1),
        Err(Error::OrbitInfinite { .. })
    ));
}

#[test]
fn free_orthogonal_length_with_trivial_action() {
    let ring = free_orthogonal(3, 8).unwrap();
    let z3 = FiniteGroup::cyclic(3);
    let crossed = crossed_ring(ring.clone(), RingAction::trivial(z3.clone(), &ring)).unwrap();
    let lg = word_length(&z3, &[1]).unwrap();
    let l = LengthFunction {
        values: (0..=8).map(|k| k as f64).collect(),
    };
    l.validate(&ring).unwrap();
    let l0 = length_l0(&crossed, &lg, &l).unwrap();
    for i in 0..crossed.len() {
        let (g, k) = crossed.split(i);
        assert_eq!(l0.values[i], lg.values[g] + k as f64);
    }
    let flat = crossed.flatten();
    flat.validate().unwrap();
    l0.validate(&flat).unwrap();
}

#[test]
fn fourier_transform_basics() {
    let s3 = FiniteGroup::symmetric(3);
    let ctx = FourierContext::new(&s3, &Caps::default(), 3).unwrap();
    let one = fourier_transform(&ctx, &ctx.projection(0));
    assert!(one.iter().all(|z| (z - 1.0).norm() < 1e-12));
    let peak = fourier_transform(&ctx, &ctx.identity());
    for g in s3.elements() {
        let expected = if g == s3.identity() { 6.0 } else { 0.0 };
        assert!((peak[g] - expected).norm() < 1e-10);
    }
    assert!((sobolev0_norm(&ctx, &ctx.projection(0)) - 1.0).abs() < 1e-12);
    assert!((sobolev0_norm(&ctx, &ctx.projection(2)) - 2.0).abs() < 1e-12);
}

#[test]
fn fourier_round_trip_and_parseval() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let caps = Caps::default();
    let groups = [
        FiniteGroup::symmetric(3),
        FiniteGroup::symmetric(4),
        FiniteGroup::special_linear(2, 3, &caps).unwrap(),
        FiniteGroup::direct_product(&FiniteGroup::symmetric(4), &FiniteGroup::cyclic(2)),
    ];
    for g in &groups {
        let ctx = FourierContext::new(g, &caps, 5).unwrap();
        for _ in 0..5 {
            let a = DualElement::random(&ctx.labels_with_dims(), &mut rng);
            let b = DualElement::random(&ctx.labels_with_dims(), &mut rng);
            let f = fourier_transform(&ctx, &a);
            assert!(inverse_fourier(&ctx, &f).distance(&a) < 1e-9);
            assert!((sobolev0_norm(&ctx, &a) - haar_l2(&f)).abs() < 1e-9);
            let sum = fourier_transform(&ctx, &a.add(&b));
            let fb = fourier_transform(&ctx, &b);
            assert!(sum.iter().zip(f.iter().zip(&fb)).all(|(s, (x, y))| (s - x - y).norm() < 1e-9));
        }
    }
}

#[test]
fn fourier_lemma_on_two_crossed_instances() {
    for inst in [inversion_instance(), conj_instance()] {
        let report = check_lemma_fourier(&inst, &cfg(), 10, 1e-9).unwrap();
        assert!(report.transform_deviation < 1e-9 && report.norm_deviation < 1e-9);
    }
}

#[test]
fn single_block_fourier_is_u_gamma_alpha() {
    let inst = inversion_instance();
    let l = inst.ring.index(1, 1);
    let block = CMat::from_element(1, 1, Complex64::new(0.5, -0.25));
    let a = DualElement::single(l, block.clone());
    let lhs = inst.fourier_transform(&a);
    let rhs = inst.u_alpha(1, &fourier_transform(&inst.fourier, &DualElement::single(1, block)));
    assert!(lhs.distance(&rhs) < 1e-12);
}

#[test]
fn rd_harness() {
    let inst = inversion_instance();
    let gamma = inst.ring.action.group.clone();
    let lg = word_length(&gamma, &gamma.generators()).unwrap();
    let l = LengthFunction::zero(inst.ring.base.len());
    let l0 = length_l0(&inst.ring, &lg, &l).unwrap();
    let dim = inst.algebra.dim() as f64;
    let report = rd_inequality_sample(&inst, &l0, &[dim.sqrt()], 40, 9).unwrap();
    assert!(report.passed, "{}", report.max_ratio);
    let unit = DualElement::single(inst.ring.unit(), CMat::identity(1, 1));
    let f = inst.fourier_transform(&unit);
    assert!((operator_norm(&inst.algebra, &f) - 1.0).abs() < 1e-10);
    assert!((inst.sobolev0_norm(&unit) - 1.0).abs() < 1e-12);

    // Classical case: the crude bound sqrt|G| always holds.
    let s3 = FiniteGroup::symmetric(3);
    let plain = conj_action_builder(&s3, &[s3.identity()], &cfg()).unwrap();
    let l0 = LengthFunction {
        values: (0..plain.ring.len()).map(|i| i as f64).collect(),
    };
    let report = rd_inequality_sample(&plain, &l0, &[6f64.sqrt()], 30, 2).unwrap();
    assert!(report.passed);
}

#[test]
fn crossed_invariants_of_the_conjugation_example() {
    let (inv, report) = crossed_invariant_groups(&conj_instance(), &cfg()).unwrap();
    assert!(report.intrinsic_matches && report.spectrum_matches);
    assert!(inv.report.passed());
    let caps = Caps::default();
    let z3 = FiniteGroup::cyclic(3);
    assert!(is_isomorphic_small(&inv.intrinsic.group, &FiniteGroup::cyclic(6), &caps).unwrap().is_some());
    let z3z3 = FiniteGroup::direct_product(&z3, &z3);
    assert!(is_isomorphic_small(&inv.spectrum.group, &z3z3, &caps).unwrap().is_some());
}

#[test]
fn degenerate_conjugation_examples() {
    let s3 = FiniteGroup::symmetric(3);
    let plain = conj_action_builder(&s3, &[s3.identity()], &cfg()).unwrap();
    assert_eq!(plain.algebra.dim(), 6);
    let catalog = crate::rep_theory::enumerate_irreps(&plain.algebra, &cfg()).unwrap();
    assert_eq!(catalog.dim_multiset(), vec![1, 1, 2]);

    // Abelian G: conjugation is trivial and the spectrum has |G| |Sp(Γ)| points.
    let z6 = FiniteGroup::cyclic(6);
    let sub = z6.subgroup_closure(&[2]);
    let inst = conj_action_builder(&z6, &sub, &cfg()).unwrap();
    let (inv, report) = crossed_invariant_groups(&inst, &cfg()).unwrap();
    assert!(report.spectrum_matches && report.intrinsic_matches);
    assert_eq!(inv.spectrum.group.order(), 6 * 3);

    // Nonabelian Γ acting trivially: spectrum is χ(G) × Sp(Γ).
    let z2 = FiniteGroup::cyclic(2);
    let inst = CrossedInstance::new(s3.clone(), z2.clone(), vec![vec![0, 1]; 6], &cfg()).unwrap();
    let (inv, report) = crossed_invariant_groups(&inst, &cfg()).unwrap();
    assert!(report.spectrum_matches && report.intrinsic_matches);
    let expected = FiniteGroup::direct_product(&z2, &z2);
    assert!(is_isomorphic_small(&inv.spectrum.group, &expected, &Caps::default()).unwrap().is_some());
}
