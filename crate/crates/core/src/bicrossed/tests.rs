use super::*;
use crate::standard;
use num_complex::Complex64;

fn algebra(mp: crate::matched_pair::MatchedPair) -> KacAlgebra {
    KacAlgebra::new(mp)
}

fn delta_fn(a: &KacAlgebra, g: usize) -> Element {
    let mut f = vec![Complex64::new(0.0, 0.0); a.pair().g().order()];
    f[g] = Complex64::new(1.0, 0.0);
    a.function(&f)
}

#[test]
fn axioms_hold_on_the_corpus() {
    for (name, mp) in standard::corpus() {
        let a = algebra(mp);
        let report = a.check_axioms(1e-9).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(report.passed());
        assert_eq!(report.max_residual(), 0.0, "{name}");
    }
}

#[test]
fn defining_relations_of_the_crossed_product() {
    for (name, mp) in standard::corpus().into_iter().take(8) {
        let a = algebra(mp);
        let (gm, g) = (a.pair().gamma().clone(), a.pair().g().clone());
        for r in gm.elements() {
            for s in gm.elements() {
                assert_eq!(a.mul(&a.u(r), &a.u(s)), a.u(gm.mul(r, s)), "{name}");
            }
            for x in g.elements() {
                // u_γ δ_g u_γ* = δ_{α_γ(g)}
                let conj = a.mul(&a.mul(&a.u(r), &delta_fn(&a, x)), &a.star(&a.u(r)));
                assert_eq!(conj, delta_fn(&a, a.pair().alpha(r, x)), "{name}");
                assert_eq!(a.mul(&a.u(r), &delta_fn(&a, x)), Element::basis(a.index(r, x)));
            }
        }
        for x in g.elements() {
            for y in g.elements() {
                let p = a.mul(&delta_fn(&a, x), &delta_fn(&a, y));
                let expected = if x == y { delta_fn(&a, x) } else { Element::zero() };
                assert_eq!(p, expected);
                // Δ(δ_g) = Σ_{ab=g} δ_a ⊗ δ_b
            }
            let mut expected = Tensor2::zero();
            for y in g.elements() {
                let z = g.mul(g.inv(y), x);
                expected = expected.add(&a.tensor(&delta_fn(&a, y), &delta_fn(&a, z)));
            }
            assert_eq!(a.coproduct(&delta_fn(&a, x)), expected);
        }
    }
}

#[test]
fn antipode_transposes_and_stars_the_magic_unitary() {
    // S(u_r 1_{A_{r,s}}) = 1_{A_{s,r}} u_{s⁻¹}
    for (name, mp) in standard::corpus().into_iter().take(8) {
        let a = algebra(mp);
        let mp = a.pair().clone();
        for o in mp.orbits() {
            for &r in &o {
                for &s in &o {
                    let ind = |p: usize, q: usize| {
                        let mut f = vec![Complex64::new(0.0, 0.0); mp.g().order()];
                        for x in mp.a_set(p, q) {
                            f[x] = Complex64::new(1.0, 0.0);
                        }
                        a.function(&f)
                    };
                    let w = a.mul(&a.u(r), &ind(r, s));
                    let expected = a.mul(&ind(s, r), &a.u(mp.gamma().inv(s)));
                    assert_eq!(a.antipode(&w), expected, "{name}");
                }
            }
        }
    }
}

#[test]
fn haar_gram_matrix_is_scaled_identity() {
    let a = algebra(standard::s4_s3_z4());
    let n = a.pair().g().order() as f64;
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let v = a.inner(&Element::basis(j), &Element::basis(i));
            let expected = if i == j { 1.0 / n } else { 0.0 };
            assert!((v - expected).norm() < 1e-15);
        }
    }
    assert!((a.haar(&a.unit()) - 1.0).norm() < 1e-15);
}

#[test]
fn corrupted_beta_breaks_coassociativity_with_a_witness() {
    let mp = standard::s4_s3_z4();
    let mut beta = mp.beta_table();
    let gen = mp.g().generators()[0];
    beta[gen] = (0..mp.gamma().order()).collect();
    let broken = crate::matched_pair::MatchedPair::from_tables_unchecked(
        mp.gamma().clone(),
        mp.g().clone(),
        mp.alpha_table(),
        beta,
    )
    .unwrap();
    let a = KacAlgebra::new(broken);
    match a.check_axioms(1e-9) {
        Err(crate::Error::AxiomViolation { axiom, witness, residual }) => {
            assert_eq!(axiom, "coassociativity");
            assert!(!witness.is_empty());
            assert!(residual >= 1.0);
        }
        other => panic!("expected an axiom violation, got {other:?}"),
    }
}

#[test]
fn group_like_unitaries_are_the_fixed_points() {
    for (name, mp) in standard::corpus() {
        let a = algebra(mp);
        let r = a.group_subalgebra_check();
        assert!(r.passed(), "{name}: {r:?}");
    }
}

#[test]
fn coset_space_dimensions() {
    let a = algebra(standard::s4_s3_z4());
    assert_eq!(a.coset_space_dimension(&AlgebraMorphism::identity(&a), 1e-9).unwrap(), 1);
    assert_eq!(
        a.coset_space_dimension(&AlgebraMorphism::counit(&a), 1e-9).unwrap(),
        a.dim()
    );
    let ker = a.pair().beta_kernel();
    let rho = AlgebraMorphism::restriction(&a, &ker).unwrap();
    let dim = a.coset_space_dimension(&rho, 1e-9).unwrap();
    assert_eq!(dim, a.pair().g().order() / ker.len());

    let b = algebra(standard::s3_z2_z3());
    let triv = vec![b.pair().g().identity()];
    let rho = AlgebraMorphism::restriction(&b, &triv).unwrap();
    assert_eq!(b.coset_space_dimension(&rho, 1e-9).unwrap(), 3);
}

#[test]
fn non_morphisms_are_rejected() {
    let a = algebra(standard::s4_s3_z4());
    let mut rho = AlgebraMorphism::identity(&a);
    rho.images.swap(0, 1);
    assert!(matches!(
        a.coset_space_dimension(&rho, 1e-9),
        Err(crate::Error::NotAMorphism(_))
    ));
    // A subgroup outside ker β does not give a quantum subgroup.
    let ker = a.pair().beta_kernel();
    let outside = a.pair().g().elements().find(|x| !ker.contains(x)).unwrap();
    let sub = a.pair().g().subgroup_closure(&[outside]);
    assert!(matches!(
        AlgebraMorphism::restriction(&a, &sub),
        Err(crate::Error::NotAMorphism(_))
    ));
}
