use super::*;
use crate::config::Caps;
use proptest::prelude::*;

fn caps() -> Caps {
    Caps::default()
}

fn quaternion() -> FiniteGroup {
    // Q8 inside SL_2(F_3).
    let i = Matrix::new(&[vec![0, 2], vec![1, 0]], 3).unwrap();
    let j = Matrix::new(&[vec![1, 1], vec![1, 2]], 3).unwrap();
    FiniteGroup::from_matrices_mod(&[i, j], 3, &caps()).unwrap()
}

fn alternating4() -> FiniteGroup {
    let a = parse_cycles("(1 2 3)", 4).unwrap();
    let b = parse_cycles("(1 2)(3 4)", 4).unwrap();
    FiniteGroup::from_permutations(&[a, b], 4, &caps()).unwrap()
}

#[test]
fn builders_have_expected_orders() {
    assert_eq!(FiniteGroup::cyclic(7).order(), 7);
    assert_eq!(FiniteGroup::symmetric(3).order(), 6);
    assert_eq!(FiniteGroup::symmetric(4).order(), 24);
    assert_eq!(FiniteGroup::dihedral(4).order(), 8);
    assert_eq!(quaternion().order(), 8);
    assert_eq!(alternating4().order(), 12);
    assert_eq!(FiniteGroup::special_linear(2, 3, &caps()).unwrap().order(), 24);
    assert_eq!(FiniteGroup::special_linear(2, 5, &caps()).unwrap().order(), 120);
    assert_eq!(FiniteGroup::special_linear(3, 2, &caps()).unwrap().order(), 168);
}

#[test]
fn cycle_notation_round_trips_and_composes_right_to_left() {
    let p = parse_cycles("(1 2)(2 3)", 3).unwrap();
    // (2 3) first: 1->1->2, 2->3->3, 3->2->1
    assert_eq!(p, vec![1, 2, 0]);
    assert_eq!(perm_label(&p), "(1 2 3)");
    assert_eq!(parse_cycles("(1,3)", 3).unwrap(), vec![2, 1, 0]);
    assert!(parse_cycles("(1 4)", 3).is_err());
    assert!(parse_cycles("(1 1)", 3).is_err());
}

#[test]
fn cayley_validation_rejects_non_groups() {
    let bad = vec![vec![0, 1], vec![1, 1]];
    assert!(FiniteGroup::from_cayley(bad, None, &caps(), 1).is_err());
    // A Latin square with identity that is not associative (order 5 loop).
    let loop5 = vec![
        vec![0, 1, 2, 3, 4],
        vec![1, 0, 3, 4, 2],
        vec![2, 4, 0, 1, 3],
        vec![3, 2, 4, 0, 1],
        vec![4, 3, 1, 2, 0],
    ];
    let err = FiniteGroup::from_cayley(loop5, None, &caps(), 1).unwrap_err();
    assert!(err.to_string().contains("associativity"), "{err}");
    let ok = vec![vec![0, 1], vec![1, 0]];
    assert!(FiniteGroup::from_cayley(ok, None, &caps(), 1).is_ok());
}

#[test]
fn closure_cap_is_enforced() {
    let small = Caps {
        closure: 10,
        ..Caps::default()
    };
    let err = FiniteGroup::special_linear(2, 3, &small).unwrap_err();
    assert!(matches!(err, crate::Error::ClosureTooLarge { cap: 10 }));
}

#[test]
fn sampled_associativity_above_the_exhaustive_bound() {
    let s5 = FiniteGroup::symmetric(5);
    let table: Vec<Vec<usize>> = s5
        .elements()
        .map(|a| s5.elements().map(|b| s5.mul(a, b)).collect())
        .collect();
    assert!(FiniteGroup::from_cayley(table, None, &caps(), 3).is_ok());
}

#[test]
fn sl2z_abelianizes_to_z12() {
    let p = Presentation {
        n_generators: 2,
        relators: vec![vec![4, 0], vec![0, 6], vec![2, -3]],
    };
    let ab = abelian_invariants(&p).unwrap();
    assert_eq!(ab.invariant_factors, vec![12]);
    assert_eq!(ab.free_rank, 0);
    assert_eq!(ab.to_string(), "Z/12");
}

#[test]
fn free_part_is_reported() {
    let p = Presentation {
        n_generators: 3,
        relators: vec![vec![2, 0, 0]],
    };
    let ab = abelian_invariants(&p).unwrap();
    assert_eq!(ab.invariant_factors, vec![2]);
    assert_eq!(ab.free_rank, 2);
    assert_eq!(ab.order(), None);
}

#[test]
fn abelianization_of_small_groups() {
    let cases: Vec<(FiniteGroup, Vec<u64>)> = vec![
        (FiniteGroup::symmetric(3), vec![2]),
        (FiniteGroup::symmetric(4), vec![2]),
        (alternating4(), vec![3]),
        (quaternion(), vec![2, 2]),
        (FiniteGroup::dihedral(4), vec![2, 2]),
        (
            FiniteGroup::direct_product(&FiniteGroup::cyclic(4), &FiniteGroup::cyclic(6)),
            vec![2, 12],
        ),
        (FiniteGroup::special_linear(2, 3, &caps()).unwrap(), vec![3]),
        (FiniteGroup::special_linear(2, 5, &caps()).unwrap(), vec![]),
    ];
    for (g, expected) in cases {
        assert_eq!(abelianization(&g).invariant_factors, expected, "order {}", g.order());
    }
}

#[test]
fn linear_characters_are_homomorphisms_and_complete() {
    for g in [FiniteGroup::symmetric(4), quaternion(), alternating4(), FiniteGroup::cyclic(6)] {
        let chars = linear_characters(&g);
        let ab_order: u64 = abelianization(&g).invariant_factors.iter().product();
        assert_eq!(chars.len() as u64, ab_order);
        assert!(chars[0].is_trivial());
        for c in &chars {
            for a in g.elements() {
                for b in g.elements() {
                    let lhs = c.value(g.mul(a, b));
                    let rhs = c.value(a) * c.value(b);
                    assert!((lhs - rhs).norm() < 1e-12);
                }
            }
        }
    }
}

#[test]
fn dual_group_is_isomorphic_to_abelianization() {
    for g in [FiniteGroup::symmetric(3), quaternion(), FiniteGroup::cyclic(12)] {
        let d = dual_group(&g);
        let model = d.invariants.to_finite_group().unwrap();
        assert!(is_isomorphic_small(&d.group, &model, &caps()).unwrap().is_some());
    }
}

fn column_orthogonality(t: &CharacterTable) -> f64 {
    // Σ_x χ_x(g_k) conj χ_x(g_l) = δ_kl |C_G(g_k)|
    let mut worst = 0.0f64;
    for k in 0..t.classes.len() {
        for l in 0..t.classes.len() {
            let s: num_complex::Complex64 = (0..t.len())
                .map(|x| t.values[x][k] * t.values[x][l].conj())
                .sum();
            let expected = if k == l {
                (t.group_order / t.classes.classes[k].len()) as f64
            } else {
                0.0
            };
            worst = worst.max((s - expected).norm());
        }
    }
    worst
}

#[test]
fn character_tables_of_small_groups() {
    let cases: Vec<(FiniteGroup, Vec<usize>)> = vec![
        (FiniteGroup::symmetric(3), vec![1, 1, 2]),
        (FiniteGroup::symmetric(4), vec![1, 1, 2, 3, 3]),
        (alternating4(), vec![1, 1, 1, 3]),
        (quaternion(), vec![1, 1, 1, 1, 2]),
        (FiniteGroup::cyclic(5), vec![1; 5]),
        (FiniteGroup::special_linear(2, 3, &caps()).unwrap(), vec![1, 1, 1, 2, 2, 2, 3]),
    ];
    for (g, dims) in cases {
        let t = character_table(&g, &caps(), 0xC0FFEE).unwrap();
        assert_eq!(t.dims, dims);
        assert!(column_orthogonality(&t) < 1e-8);
        assert!(t.values[0].iter().all(|z| (z - 1.0).norm() < 1e-9));
    }
}

#[test]
fn character_table_respects_order_bound() {
    let tight = Caps {
        character_table: 5,
        ..Caps::default()
    };
    let err = character_table(&FiniteGroup::symmetric(3), &tight, 1).unwrap_err();
    assert!(matches!(err, crate::Error::SizeBound { order: 6, bound: 5 }));
}

#[test]
fn fusion_and_duals_from_characters() {
    let g = FiniteGroup::symmetric(3);
    let t = character_table(&g, &caps(), 7).unwrap();
    // 2 ⊗ 2 = 1 ⊕ sgn ⊕ 2
    assert_eq!(t.fusion(2, 2, 0), 1);
    assert_eq!(t.fusion(2, 2, 1), 1);
    assert_eq!(t.fusion(2, 2, 2), 1);
    let a4 = alternating4();
    let t4 = character_table(&a4, &caps(), 7).unwrap();
    assert_eq!(t4.dual(1), 2);
    assert_eq!(t4.dual(3), 3);
}

#[test]
fn matrix_irreps_are_unitary_homomorphisms() {
    for g in [
        FiniteGroup::symmetric(3),
        FiniteGroup::symmetric(4),
        quaternion(),
        alternating4(),
        FiniteGroup::dihedral(5),
    ] {
        let t = character_table(&g, &caps(), 11).unwrap();
        let irreps = matrix_irreps(&g, &t, 11).unwrap();
        assert_eq!(irreps.len(), t.len());
        for u in &irreps {
            assert!(u.multiplicativity_defect(&g) < 1e-7);
            for e in g.elements() {
                assert!((u.matrices[e].trace() - t.value(u.character, e)).norm() < 1e-8);
            }
        }
    }
}

#[test]
fn isomorphism_tests_with_witnesses() {
    let c = caps();
    let z6 = FiniteGroup::cyclic(6);
    let z2z3 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(3));
    let w = is_isomorphic_small(&z6, &z2z3, &c).unwrap().unwrap();
    assert!(w.verify(&z6, &z2z3));
    let z4 = FiniteGroup::cyclic(4);
    let v4 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
    assert!(is_isomorphic_small(&z4, &v4, &c).unwrap().is_none());
    assert!(is_isomorphic_small(&FiniteGroup::dihedral(4), &quaternion(), &c)
        .unwrap()
        .is_none());
    let s3 = FiniteGroup::symmetric(3);
    let d3 = FiniteGroup::dihedral(3);
    assert!(is_isomorphic_small(&s3, &d3, &c).unwrap().unwrap().verify(&s3, &d3));
    let tight = Caps {
        isomorphism: 4,
        ..Caps::default()
    };
    assert!(is_isomorphic_small(&s3, &d3, &tight).is_err());
}

#[test]
fn semidirect_product_by_inversion_is_s3() {
    let n = FiniteGroup::cyclic(3);
    let q = FiniteGroup::cyclic(2);
    let action = vec![vec![0, 1, 2], vec![0, 2, 1]];
    let g = FiniteGroup::semidirect_product(&n, &q, &action).unwrap();
    let s3 = FiniteGroup::symmetric(3);
    assert!(is_isomorphic_small(&g, &s3, &caps()).unwrap().is_some());
    let not_hom = vec![vec![0, 2, 1], vec![0, 2, 1]];
    assert!(matches!(
        FiniteGroup::semidirect_product(&n, &q, &not_hom),
        Err(crate::Error::NotAnAction(_))
    ));
}

#[test]
fn centers_of_special_linear_groups_match_gcd() {
    for (n, p) in [(2usize, 3u64), (2, 5), (3, 2)] {
        let g = FiniteGroup::special_linear(n, p, &caps()).unwrap();
        let expected = num_integer::gcd(n as u64, p - 1) as usize;
        let z = g.center();
        assert_eq!(z.len(), expected);
        let (zg, _) = g.restrict(&z).unwrap();
        assert!(is_isomorphic_small(&zg, &FiniteGroup::cyclic(expected), &caps())
            .unwrap()
            .is_some());
    }
}

#[test]
fn quotients_and_restrictions() {
    let s4 = FiniteGroup::symmetric(4);
    let v = s4.subgroup_closure(&[
        s4.find_label("(1 2)(3 4)").unwrap(),
        s4.find_label("(1 3)(2 4)").unwrap(),
    ]);
    assert_eq!(v.len(), 4);
    assert!(s4.is_normal(&v));
    let (q, proj) = s4.quotient(&v).unwrap();
    assert_eq!(q.order(), 6);
    assert!(is_isomorphic_small(&q, &FiniteGroup::symmetric(3), &caps()).unwrap().is_some());
    for a in s4.elements() {
        for b in s4.elements() {
            assert_eq!(proj[s4.mul(a, b)], q.mul(proj[a], proj[b]));
        }
    }
    assert!(s4.quotient(&s4.subgroup_closure(&[s4.find_label("(1 2)").unwrap()])).is_err());
}

fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|c| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, &x)| x).collect())
                    .collect();
                let s = if c % 2 == 0 { 1 } else { -1 };
                s * m[0][c] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (0..n)
        .flat_map(|first| {
            subsets(n, k - 1)
                .into_iter()
                .filter(move |s| s.first().is_none_or(|&x| x > first))
                .map(move |mut s| {
                    s.insert(0, first);
                    s
                })
        })
        .collect()
}

/// gcd of all k x k minors, the k-th determinantal divisor.
fn determinantal_divisor(m: &[Vec<i64>], k: usize) -> i64 {
    let rows = subsets(m.len(), k);
    let cols = subsets(m[0].len(), k);
    let mut g = 0i64;
    for r in &rows {
        for c in &cols {
            let sub: Vec<Vec<i64>> = r.iter().map(|&i| c.iter().map(|&j| m[i][j]).collect()).collect();
            g = num_integer::gcd(g, det(&sub));
        }
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_form_matches_determinantal_divisors(
        entries in proptest::collection::vec(-9i64..10, 12)
    ) {
        let m: Vec<Vec<i64>> = entries.chunks(3).map(|c| c.to_vec()).collect();
        let diag = smith_normal_form(&m);
        let mut prod = num_bigint::BigInt::from(1);
        for k in 1..=3 {
            let dk = determinantal_divisor(&m, k);
            if k <= diag.len() {
                prod *= &diag[k - 1];
                prop_assert_eq!(prod.clone(), num_bigint::BigInt::from(dk));
            } else {
                prop_assert_eq!(dk, 0);
            }
        }
        for w in diag.windows(2) {
            prop_assert!((&w[1] % &w[0]) == num_bigint::BigInt::from(0));
        }
    }

    #[test]
    fn relabelled_groups_are_isomorphic(seed in 0u64..1000) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let g = FiniteGroup::symmetric(4);
        let mut perm: Vec<usize> = g.elements().collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = g.permuted(&perm).unwrap();
        let w = is_isomorphic_small(&g, &h, &Caps::default()).unwrap().unwrap();
        prop_assert!(w.verify(&g, &h));
    }

    #[test]
    fn generated_permutation_groups_are_groups(
        a in Just((0..5).collect::<Vec<usize>>()).prop_shuffle(),
        b in Just((0..5).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let g = FiniteGroup::from_permutations(&[a, b], 5, &Caps::default()).unwrap();
        prop_assert_eq!(120 % g.order(), 0);
        prop_assert!(g.check_associative(&Caps::default(), 5).is_ok());
        let ab = abelianization(&g);
        let n: u64 = ab.invariant_factors.iter().product();
        prop_assert_eq!(g.order() as u64 % n, 0);
    }
}
