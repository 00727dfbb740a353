use super::*;
use crate::config::Caps;
use crate::crossed_product::{FourierContext, RingAction};
use crate::groups::FiniteGroup;
use crate::linalg::CMat;
use crate::standard;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(d))
}

#[test]
fn measures_validate() {
    assert!(FiniteMeasure::from_strs(&["0", "0.7", "0.3"]).is_ok());
    assert!(FiniteMeasure::from_strs(&["1/2", "1/2"]).is_ok());
    assert!(FiniteMeasure::from_strs(&["0.5", "0.6"]).is_err());
    assert!(FiniteMeasure::from_strs(&["-1/2", "3/2"]).is_err());
    assert!(FiniteMeasure::from_strs(&["x"]).is_err());
    assert_eq!(parse_rational("-1.25"), Some(q(-5, 4)));
}

#[test]
fn pushforward_under_inversion() {
    let mp = standard::z2_inverting_z3();
    let mu = FiniteMeasure::from_strs(&["0", "0.7", "0.3"]).unwrap();
    let pushed = pushforward(&mu, 1, &mp);
    assert_eq!(pushed, FiniteMeasure::from_strs(&["0", "0.3", "0.7"]).unwrap());
    assert_eq!(tv_distance(&mu, &pushed), q(4, 5));
    let u = FiniteMeasure::uniform(3);
    assert_eq!(pushforward(&u, 1, &mp), u);
    assert_eq!(pushforward(&FiniteMeasure::dirac(3, 1), 1, &mp), FiniteMeasure::dirac(3, 2));
}

#[test]
fn tv_of_disjoint_diracs_is_two() {
    let d0 = FiniteMeasure::dirac(6, 0);
    assert_eq!(tv_distance(&d0, &d0), BigRational::zero());
    assert_eq!(tv_distance(&d0, &FiniteMeasure::dirac(6, 4)), q(2, 1));
}

#[test]
fn obstruction_over_small_groups() {
    for g in [FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)] {
        let report = rel_t_obstruction(&g, 6, 50, 3);
        assert!(report.passed(), "{report:?}");
        assert!(report.avoiding_identity > 0);
    }
}

#[test]
fn uniform_measure_transforms_to_the_unit_projection() {
    let g = FiniteGroup::symmetric(4);
    let ctx = FourierContext::new(&g, &Caps::default(), 1).unwrap();
    let hat = measure_fourier(&ctx, &FiniteMeasure::uniform(24));
    assert!(hat.distance(&ctx.projection(0)) < 1e-10);
    let id = measure_fourier(&ctx, &FiniteMeasure::dirac(24, g.identity()));
    assert!(id.distance(&ctx.identity()) < 1e-12);
    let norms = block_norms(&hat);
    assert!((norms[0].1 - 1.0).abs() < 1e-12 && norms[1..].iter().all(|(_, n)| *n < 1e-10));
}

#[test]
fn smoothing_is_a_convex_combination_of_pushforwards() {
    let mp = standard::z2_inverting_z3();
    let mu = FiniteMeasure::from_strs(&["0", "0.7", "0.3"]).unwrap();
    let f = FiniteMeasure::uniform(2);
    let s = smooth(&mu, &f, &mp);
    assert_eq!(s, FiniteMeasure::from_strs(&["0", "0.5", "0.5"]).unwrap());
    assert_eq!(smooth(&mu, &FiniteMeasure::dirac(2, 0), &mp), mu);
}

#[test]
fn chebyshev_values_at_three_and_two() {
    let st = chebyshev_state(3, &q(2, 1), 30).unwrap();
    assert_eq!(st.values[..3], [BigRational::one(), q(2, 3), q(3, 8)]);
    assert!(st.strictly_decreasing_from_one());
    assert!(st.recursion_holds());
    assert_eq!(st.values[1], q(2, 3));
    // P_k(2) = k + 1 and P_4(3) = 55.
    assert_eq!(st.values[4], q(5, 55));
    assert!(st.c0_profile(&q(1, 1000)).is_some());
    let ring = crate::crossed_product::free_orthogonal(3, 30).unwrap();
    assert!(st.invariant_under(&RingAction::trivial(FiniteGroup::cyclic(2), &ring)));
}

#[test]
fn chebyshev_domain() {
    assert!(chebyshev_state(3, &q(0, 1), 5).is_err());
    assert!(chebyshev_state(3, &q(3, 1), 5).is_err());
    assert!(chebyshev_state(1, &q(1, 2), 5).is_err());
    let near = chebyshev_state(3, &q(2999, 1000), 10).unwrap();
    assert!(near.values.iter().all(|v| v > &q(9, 10)));
    let st = chebyshev_state(4, &q(1, 2), 1).unwrap();
    assert_eq!(st.values[1], q(1, 8));
}

fn measure_strategy(n: usize) -> impl Strategy<Value = FiniteMeasure> {
    prop::collection::vec(0u32..20, n).prop_filter_map("nonzero", |raw| {
        let total: u32 = raw.iter().sum();
        (total > 0).then(|| FiniteMeasure {
            weights: raw.iter().map(|&k| q(k as i64, total as i64)).collect(),
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pushforward_is_an_action(mu in measure_strategy(4), a in 0usize..6, b in 0usize..6) {
        // Γ = S_3 acting on G = Z/4.
        let mp = standard::s4_s3_z4();
        let ab = mp.gamma().mul(a, b);
        prop_assert_eq!(pushforward(&mu, ab, &mp), pushforward(&pushforward(&mu, b, &mp), a, &mp));
    }

    #[test]
    fn tv_is_a_metric(mu in measure_strategy(6), nu in measure_strategy(6), rho in measure_strategy(6)) {
        prop_assert_eq!(tv_distance(&mu, &nu), tv_distance(&nu, &mu));
        prop_assert!(tv_distance(&mu, &rho) <= tv_distance(&mu, &nu) + tv_distance(&nu, &rho));
        prop_assert_eq!(tv_distance(&mu, &mu), BigRational::zero());
    }

    #[test]
    fn convolution_is_associative_and_transforms_to_products(
        mu in measure_strategy(6), nu in measure_strategy(6), rho in measure_strategy(6)
    ) {
        let g = FiniteGroup::symmetric(3);
        let left = convolution(&g, &convolution(&g, &mu, &nu), &rho);
        let right = convolution(&g, &mu, &convolution(&g, &nu, &rho));
        prop_assert_eq!(&left, &right);
        let ctx = FourierContext::new(&g, &Caps::default(), 1).unwrap();
        let conv = measure_fourier(&ctx, &convolution(&g, &mu, &nu));
        let a = measure_fourier(&ctx, &mu);
        let b = measure_fourier(&ctx, &nu);
        for (x, m) in &conv.blocks {
            let prod: CMat = &a.blocks[x] * &b.blocks[x];
            prop_assert!((m - prod).iter().all(|z| z.norm() < 1e-9));
        }
    }
}
