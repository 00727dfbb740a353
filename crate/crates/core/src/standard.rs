//! Standard example groups and pairs.

use crate::config::Caps;
use crate::error::Result;
use crate::groups::{linear_characters, parse_cycles, FiniteGroup};
use crate::matched_pair::{lambda_instance, quotient_instance, MatchedPair};

fn perm_group(gens: &[&str], degree: usize) -> FiniteGroup {
    let gens: Vec<Vec<usize>> = gens
        .iter()
        .map(|g| parse_cycles(g, degree).expect("valid cycle notation"))
        .collect();
    FiniteGroup::from_permutations(&gens, degree, &Caps::default()).expect("permutation group")
}

fn subgroup(h: &FiniteGroup, gens: &[&str]) -> Vec<usize> {
    let idx: Vec<usize> = gens
        .iter()
        .map(|g| h.find_label(g).unwrap_or_else(|| panic!("{g} is an element")))
        .collect();
    h.subgroup_closure(&idx)
}

/// Matched pair from generators of two subgroups of a permutation group.
pub fn pair_in(h: &FiniteGroup, gamma_gens: &[&str], g_gens: &[&str]) -> Result<MatchedPair> {
    MatchedPair::derive_actions(h, &subgroup(h, gamma_gens), &subgroup(h, g_gens))
}

/// `S_3 = Z/2 · Z/3`: `Γ = ⟨(1 2)⟩`, `G = ⟨(1 2 3)⟩`; `β` trivial.
pub fn s3_z2_z3() -> MatchedPair {
    pair_in(&FiniteGroup::symmetric(3), &["(1 2)"], &["(1 2 3)"]).expect("exact factorization")
}

/// `S_3 = Z/3 · Z/2`: `Γ = ⟨(1 2 3)⟩`, `G = ⟨(1 2)⟩`; `α` trivial.
pub fn s3_z3_z2() -> MatchedPair {
    pair_in(&FiniteGroup::symmetric(3), &["(1 2 3)"], &["(1 2)"]).expect("exact factorization")
}

/// `S_4 = S_3 · Z/4`: `Γ` the stabilizer of 4, `G = ⟨(1 2 3 4)⟩`; both actions nontrivial.
pub fn s4_s3_z4() -> MatchedPair {
    pair_in(&FiniteGroup::symmetric(4), &["(1 2)", "(1 2 3)"], &["(1 2 3 4)"])
        .expect("exact factorization")
}

/// `S_4 = Z/4 · S_3`, the flipped factorization.
pub fn s4_z4_s3() -> MatchedPair {
    pair_in(&FiniteGroup::symmetric(4), &["(1 2 3 4)"], &["(1 2)", "(1 2 3)"])
        .expect("exact factorization")
}

/// `A_4 = Z/3 · V_4`.
pub fn a4_z3_v4() -> MatchedPair {
    let a4 = perm_group(&["(1 2 3)", "(1 2)(3 4)"], 4);
    pair_in(&a4, &["(1 2 3)"], &["(1 2)(3 4)", "(1 3)(2 4)"]).expect("exact factorization")
}

/// `S_4 = Z/2 · A_4`, with `Γ = ⟨(1 2)⟩`.
pub fn s4_z2_a4() -> MatchedPair {
    pair_in(&FiniteGroup::symmetric(4), &["(1 2)"], &["(1 2 3)", "(1 2)(3 4)"])
        .expect("exact factorization")
}

/// `S_4 = D_4 · Z/3`, with `D_4` the stabilizer of the pairing {12|34}.
pub fn s4_d4_z3() -> MatchedPair {
    pair_in(&FiniteGroup::symmetric(4), &["(1 2)", "(1 3 2 4)"], &["(1 2 3)"])
        .expect("exact factorization")
}

/// `Z/3` acting on `S_3` by conjugation through `⟨(1 2 3)⟩ ≤ S_3`.
pub fn s3_conjugation_z3() -> MatchedPair {
    let s3 = FiniteGroup::symmetric(3);
    let z3 = subgroup(&s3, &["(1 2 3)"]);
    MatchedPair::conjugation(&s3, &z3).expect("conjugation action")
}

/// `Z/2` acting on `Z/3` by inversion; the crossed product of this action.
pub fn z2_inverting_z3() -> MatchedPair {
    let z2 = FiniteGroup::cyclic(2);
    let z3 = FiniteGroup::cyclic(3);
    MatchedPair::from_action(z2, z3, vec![vec![0, 1, 2], vec![0, 2, 1]]).expect("inversion action")
}

/// The sign action of `S_3` on `Z/7` with `Λ = ⟨(1 2)⟩`: base pair and crossed
/// homomorphism for the deformation of `Λ × Z/7`.
pub fn lambda_sign_base() -> (MatchedPair, Vec<usize>) {
    let s3 = FiniteGroup::symmetric(3);
    let z7 = FiniteGroup::cyclic(7);
    let sign = linear_characters(&s3)
        .into_iter()
        .find(|c| !c.is_trivial())
        .expect("S_3 has a sign character");
    let alpha: Vec<Vec<usize>> = s3
        .elements()
        .map(|r| {
            z7.elements()
                .map(|x| if sign.values[r] == 0 { x } else { (7 - x) % 7 })
                .collect()
        })
        .collect();
    let lambda = subgroup(&s3, &["(1 2)"]);
    lambda_instance(&s3, &z7, &alpha, &lambda).expect("lambda instance")
}

/// The deformed pair `(S_3, (Λ × Z/7)_χ)`; the deformed group is dihedral of order 14.
pub fn lambda_sign_deformed() -> MatchedPair {
    let (base, chi) = lambda_sign_base();
    base.deform_by_chi_g(&chi, &Caps::default(), crate::config::DEFAULT_SEED)
        .expect("crossed homomorphism")
}

/// `Γ₀ = G = S_3`, `q = id`: base pair `(S_3 × S_3, S_3)` and its crossed homomorphism.
pub fn quotient_s3_base() -> (MatchedPair, Vec<usize>) {
    let s3 = FiniteGroup::symmetric(3);
    let q: Vec<usize> = s3.elements().collect();
    quotient_instance(&s3, &s3, &q).expect("quotient instance")
}

/// The deformed pair `((S_3 × S_3)_χ, S_3)`.
pub fn quotient_s3_deformed() -> MatchedPair {
    let (base, chi) = quotient_s3_base();
    base.deform_by_chi_gamma(&chi, &Caps::default(), crate::config::DEFAULT_SEED)
        .expect("crossed homomorphism")
}

/// Named pairs with `|Γ||G| ≤ 256` used for whole-corpus checks.
pub fn corpus() -> Vec<(&'static str, MatchedPair)> {
    vec![
        ("S3 = Z2.Z3", s3_z2_z3()),
        ("S3 = Z3.Z2", s3_z3_z2()),
        ("S4 = S3.Z4", s4_s3_z4()),
        ("S4 = Z4.S3", s4_z4_s3()),
        ("A4 = Z3.V4", a4_z3_v4()),
        ("S4 = Z2.A4", s4_z2_a4()),
        ("S4 = D4.Z3", s4_d4_z3()),
        ("Z3 conj S3", s3_conjugation_z3()),
        ("Z2 inv Z3", z2_inverting_z3()),
        ("lambda deformed", lambda_sign_deformed()),
        ("quotient deformed", quotient_s3_deformed()),
    ]
}
