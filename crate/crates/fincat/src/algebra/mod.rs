//! Algebras, coalgebras, bialgebras, and Hopf algebras in a computable
//! symmetric monoidal category, with the shear-map calculus as executable
//! identities.

pub mod describe;
pub mod hopf;
pub mod monoid;
pub mod structures;

pub use hopf::{
    antipode_from_shear, check_antipode, is_hopf, left_shear, right_shear,
    shear_inverse_from_antipode, shear_multiplication_identities, shear_unit_identities,
    HopfDecision,
};
pub use monoid::{
    enumerate_monoids, finset_inversion, finset_monoid_bialgebra, linearize_function,
    linearize_group, monoid_bialgebra, up_to_isomorphism, MonoidTable,
};
pub use structures::{
    check_algebra, check_algebra_map, check_bialgebra, check_coalgebra, coproduct_insertions,
    coproduct_universal_map, tensor_algebras, AlgebraStructure, BialgebraPresentation,
    CoalgebraStructure, OperadAlgebra,
};

use crate::monoidal::{DecideInvertible, HomEnumerable, SymmetricMonoidalCategory};

/// Exhaustive uniqueness leg of the coproduct universal property: enumerate
/// every morphism `carrier(R⊗S) → carrier(T)`, keep the algebra maps whose
/// restrictions along the insertions are `f` and `g`, and demand exactly
/// one survivor (which must be the constructed universal map).
pub fn coproduct_uniqueness_search<C>(
    cat: &C,
    r: &AlgebraStructure<C>,
    s: &AlgebraStructure<C>,
    t: &AlgebraStructure<C>,
    f: &C::Mor,
    g: &C::Mor,
) -> Result<usize, String>
where
    C: SymmetricMonoidalCategory + HomEnumerable,
{
    let h = coproduct_universal_map(cat, r, s, t, f, g).map_err(|e| e.to_string())?;
    let product = tensor_algebras(cat, r, s).map_err(|e| e.to_string())?;
    let (ins_r, ins_s) = coproduct_insertions(cat, r, s);
    let candidates = cat.enumerate_hom(&product.carrier, &t.carrier);
    let total = candidates.len();
    let mut survivors = Vec::new();
    for cand in candidates {
        if !check_algebra_map(cat, &cand, &product, t).passed() {
            continue;
        }
        if cat.compose_unchecked(&cand, &ins_r) != *f {
            continue;
        }
        if cat.compose_unchecked(&cand, &ins_s) != *g {
            continue;
        }
        survivors.push(cand);
    }
    match survivors.len() {
        1 if survivors[0] == h => Ok(total),
        1 => Err("the unique mediating map differs from μ_T∘(f⊗g)".into()),
        0 => Err("no mediating algebra map found".into()),
        k => Err(format!("{k} mediating algebra maps found; expected exactly one")),
    }
}

/// The Hopf-iff-group sweep: over the supplied monoids, linearization over
/// `F_p` passes the Hopf decision exactly for the group tables. Returns
/// `(groups, non_groups)` counted, or the offending monoid.
pub fn hopf_iff_group_sweep<R>(
    cat: &crate::monoidal::matcat::MatrixCategory<R>,
    monoids: &[MonoidTable],
) -> Result<(usize, usize), String>
where
    R: crate::monoidal::ring::Ring,
{
    let mut groups = 0usize;
    let mut non_groups = 0usize;
    for m in monoids {
        let b = monoid_bialgebra(cat, m);
        let decision = is_hopf(cat, &b).map_err(|e| e.to_string())?;
        if decision.is_hopf != m.is_group() {
            return Err(format!(
                "{m}: linearization is {} but the table is {}",
                if decision.is_hopf { "Hopf" } else { "not Hopf" },
                if m.is_group() { "a group" } else { "not a group" },
            ));
        }
        if m.is_group() {
            groups += 1;
        } else {
            non_groups += 1;
        }
    }
    Ok((groups, non_groups))
}

/// Run the shear-calculus identity suite on one bialgebra: the two
/// multiplication identities and the two unit identities of the shear map.
pub fn shear_identity_suite<C: SymmetricMonoidalCategory>(
    cat: &C,
    b: &BialgebraPresentation<C>,
) -> crate::report::CheckSet {
    let mut out = shear_multiplication_identities(cat, b);
    out.extend(shear_unit_identities(cat, b));
    out
}

/// Round-trip of the constructive conversions on a Hopf bialgebra:
/// the derived antipode passes the antipode axiom, and the shear inverse
/// rebuilt from it composes with the shear to the identity on both sides.
pub fn hopf_round_trip<C>(cat: &C, b: &BialgebraPresentation<C>) -> Result<C::Mor, String>
where
    C: SymmetricMonoidalCategory + DecideInvertible,
{
    let alpha = antipode_from_shear(cat, b).map_err(|e| e.to_string())?;
    let axiom = check_antipode(cat, b, &alpha);
    if !axiom.passed() {
        return Err("derived antipode fails the antipode axiom".into());
    }
    // shear_inverse_from_antipode asserts both compositions internally.
    let _phi = shear_inverse_from_antipode(cat, b, &alpha).map_err(|e| e.to_string())?;
    Ok(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoidal::finset::{FinFunction, FinSetCategory};
    use crate::monoidal::matcat::{basis_permutation, Dim, MatrixCategory};
    use crate::monoidal::matrix::{mat_mul, Matrix};
    use crate::monoidal::ring::{PrimeField, Rationals};
    use crate::monoidal::{ComputableCategory, Invertibility, InvertibilityWitness};

    type FpCat = MatrixCategory<PrimeField>;

    fn f2cat() -> FpCat {
        MatrixCategory::new(PrimeField::new(2).unwrap())
    }

    fn c2_bialgebra(cat: &FpCat) -> BialgebraPresentation<FpCat> {
        monoid_bialgebra(cat, &MonoidTable::cyclic(2))
    }

    #[test]
    fn group_bialgebras_pass_the_axioms() {
        let cat = f2cat();
        for m in [MonoidTable::cyclic(2), MonoidTable::cyclic(3), MonoidTable::symmetric3()] {
            let b = monoid_bialgebra(&cat, &m);
            let report = check_bialgebra(&cat, &b);
            assert!(report.passed(), "{:?}", report.first_failure());
        }
    }

    #[test]
    fn right_shear_of_c2_is_the_expected_permutation() {
        // Basis evaluation oracle: sh(x⊗y) = x⊗xy on the 4 basis pairs of
        // F_2[C_2].
        let cat = f2cat();
        let b = c2_bialgebra(&cat);
        let sh = right_shear(&cat, &b);
        let table = [[0usize, 1], [1, 0]];
        let mut perm = vec![0usize; 4];
        for x in 0..2 {
            for y in 0..2 {
                perm[x * 2 + y] = x * 2 + table[x][y];
            }
        }
        assert_eq!(sh, basis_permutation(cat.ring(), &perm));
    }

    #[test]
    fn left_shear_of_c2_is_the_mirror_permutation() {
        // Basis evaluation: left shear sends x⊗y ↦ xy⊗y.
        let cat = f2cat();
        let b = c2_bialgebra(&cat);
        let sh = left_shear(&cat, &b);
        let table = [[0usize, 1], [1, 0]];
        let mut perm = vec![0usize; 4];
        for x in 0..2 {
            for y in 0..2 {
                perm[x * 2 + y] = table[x][y] * 2 + y;
            }
        }
        assert_eq!(sh, basis_permutation(cat.ring(), &perm));
    }

    #[test]
    fn unit_bialgebra_has_identity_shears() {
        let cat = f2cat();
        let b = BialgebraPresentation::unit_bialgebra(&cat);
        assert_eq!(right_shear(&cat, &b), cat.identity(&Dim(1)));
        assert_eq!(left_shear(&cat, &b), cat.identity(&Dim(1)));
        let alpha = antipode_from_shear(&cat, &b).unwrap();
        assert_eq!(alpha, cat.identity(&Dim(1)));
    }

    #[test]
    fn idempotent_monoid_shear_collapses() {
        // Basis evaluation: x⊗e and x⊗x both map to x⊗x.
        let cat = f2cat();
        let b = monoid_bialgebra(&cat, &MonoidTable::idempotent2());
        let sh = right_shear(&cat, &b);
        // Columns: (e,e)↦(e,e), (e,x)↦(e,x), (x,e)↦(x,x), (x,x)↦(x,x).
        let expected = Matrix::from_rows(vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 0, 0],
            vec![0, 0, 1, 1],
        ])
        .unwrap();
        assert_eq!(sh, expected);
    }

    #[test]
    fn hopf_decisions_with_witnesses() {
        let cat = f2cat();
        // Positive: F_2[C_2].
        let b = c2_bialgebra(&cat);
        let decision = is_hopf(&cat, &b).unwrap();
        assert!(decision.is_hopf);
        // Negative: the idempotent monoid, kernel witness x⊗(e+x),
        // i.e. the vector (0,0,1,1) in the basis (e,e),(e,x),(x,e),(x,x).
        // Oracle: over F_2^4 the shear kernel is exactly {0, (0,0,1,1)}.
        let b = monoid_bialgebra(&cat, &MonoidTable::idempotent2());
        let sh = right_shear(&cat, &b);
        let mut kernel = vec![];
        for v in 0..16u32 {
            let vec = Matrix::from_fn(4, 1, |i, _| ((v >> i) & 1) as u64);
            let image = mat_mul(cat.ring(), &sh, &vec);
            if image.to_rows().iter().all(|r| r[0] == 0) && v != 0 {
                kernel.push(vec);
            }
        }
        assert_eq!(kernel.len(), 1);
        assert_eq!(
            kernel[0].to_rows(),
            vec![vec![0], vec![0], vec![1], vec![1]]
        );
        let decision = is_hopf(&cat, &b).unwrap();
        assert!(!decision.is_hopf);
        match &decision.right {
            Invertibility::NotInvertible {
                witness: InvertibilityWitness::KernelVector { vector },
            } => assert_eq!(vector, &kernel[0]),
            other => panic!("expected kernel witness, got {other:?}"),
        }
        assert!(!decision.left.is_invertible());
    }

    #[test]
    fn finset_group_passes_and_truncated_monoid_fails() {
        let cat = FinSetCategory;
        let c3 = finset_monoid_bialgebra(&MonoidTable::cyclic(3));
        let decision = is_hopf(&cat, &c3).unwrap();
        assert!(decision.is_hopf);
        // Left shear of a group object is (g,h) ↦ (gh, h): a bijection.
        // Oracle: enumerate the table directly.
        let lsh = left_shear(&cat, &c3);
        let mut expected = vec![0usize; 9];
        for g in 0..3 {
            for h in 0..3 {
                expected[g * 3 + h] = ((g + h) % 3) * 3 + h;
            }
        }
        assert_eq!(lsh.table, expected);

        let trunc = finset_monoid_bialgebra(&MonoidTable::truncated_addition(3));
        let decision = is_hopf(&cat, &trunc).unwrap();
        assert!(!decision.is_hopf);
        match &decision.right {
            Invertibility::NotInvertible {
                witness: InvertibilityWitness::Collision { first, second },
            } => {
                assert_ne!(first, second);
                let sh = right_shear(&cat, &trunc);
                assert_eq!(
                    cat.compose(&sh, first).unwrap(),
                    cat.compose(&sh, second).unwrap()
                );
            }
            other => panic!("expected collision witness, got {other:?}"),
        }
    }

    #[test]
    fn derived_antipodes_are_the_inversions() {
        let cat = f2cat();
        // F_2[C_2]: inversion is the identity on the basis.
        let b = c2_bialgebra(&cat);
        let alpha = antipode_from_shear(&cat, &b).unwrap();
        assert_eq!(alpha, cat.identity(&Dim(2)));
        // C_3 in finite sets: inversion table g ↦ g⁻¹.
        let fs = FinSetCategory;
        let c3 = finset_monoid_bialgebra(&MonoidTable::cyclic(3));
        let alpha = antipode_from_shear(&fs, &c3).unwrap();
        assert_eq!(
            alpha,
            finset_inversion(&MonoidTable::cyclic(3)).unwrap()
        );
        assert_eq!(alpha.table, vec![0, 2, 1]);
    }

    #[test]
    fn antipode_check_rejects_the_basis_swap() {
        let cat = f2cat();
        let b = c2_bialgebra(&cat);
        // id on basis passes; the non-unital swap does not.
        assert!(check_antipode(&cat, &b, &cat.identity(&Dim(2))).passed());
        let swap = cat.mor_from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert!(!check_antipode(&cat, &b, &swap).passed());
    }

    #[test]
    fn shear_inverse_round_trips() {
        let cat = f2cat();
        let b = c2_bialgebra(&cat);
        let alpha = cat.identity(&Dim(2));
        let phi = shear_inverse_from_antipode(&cat, &b, &alpha).unwrap();
        // For F_2[C_2] the shear is an involution, so φ = sh.
        assert_eq!(phi, right_shear(&cat, &b));
        // C_3 in finite sets, checked on all 9 pairs inside the assertion.
        let fs = FinSetCategory;
        let c3 = finset_monoid_bialgebra(&MonoidTable::cyclic(3));
        let inv = finset_inversion(&MonoidTable::cyclic(3)).unwrap();
        let phi = shear_inverse_from_antipode(&fs, &c3, &inv).unwrap();
        let sh = right_shear(&fs, &c3);
        assert_eq!(fs.compose(&phi, &sh).unwrap(), fs.identity(&fs.dom(&sh)));
    }

    #[test]
    fn shear_identities_hold_on_positives_and_negatives() {
        let cat = f2cat();
        for m in [
            MonoidTable::cyclic(2),
            MonoidTable::cyclic(3),
            MonoidTable::symmetric3(),
            MonoidTable::idempotent2(),
        ] {
            let b = monoid_bialgebra(&cat, &m);
            let suite = shear_identity_suite(&cat, &b);
            assert!(suite.passed(), "{m}: {:?}", suite.first_failure());
        }
        let fs = FinSetCategory;
        for m in [MonoidTable::cyclic(3), MonoidTable::truncated_addition(3)] {
            let b = finset_monoid_bialgebra(&m);
            let suite = shear_identity_suite(&fs, &b);
            assert!(suite.passed(), "{m}: {:?}", suite.first_failure());
        }
    }

    #[test]
    fn linearize_group_refuses_non_groups() {
        let cat = f2cat();
        let err = linearize_group(&cat, &MonoidTable::idempotent2()).unwrap_err();
        assert!(err.to_string().contains("no inverse"));
        // Trivial group gives the unit-object bialgebra up to carrier dim 1.
        let (b, inv) = linearize_group(&cat, &MonoidTable::cyclic(1)).unwrap();
        assert_eq!(b.carrier(), &Dim(1));
        assert_eq!(inv, cat.identity(&Dim(1)));
        // S_3 over F_2: antipode is the permutation matrix of inversion.
        let (b, inversion) = linearize_group(&cat, &MonoidTable::symmetric3()).unwrap();
        let alpha = antipode_from_shear(&cat, &b).unwrap();
        assert_eq!(alpha, inversion);
    }

    #[test]
    fn rational_group_algebra_is_hopf() {
        let cat = MatrixCategory::new(Rationals);
        let b = monoid_bialgebra(&cat, &MonoidTable::cyclic(2));
        let decision = is_hopf(&cat, &b).unwrap();
        assert!(decision.is_hopf);
        hopf_round_trip(&cat, &b).unwrap();
    }

    #[test]
    fn monoid_sweep_size_up_to_three() {
        // Counts up to isomorphism are known: 1, 2, 7 monoids of orders
        // 1, 2, 3, of which exactly one per order is a group.
        let cat = f2cat();
        for (order, expected_monoids) in [(1usize, 1usize), (2, 2), (3, 7)] {
            let all = enumerate_monoids(order);
            let reps = up_to_isomorphism(all);
            assert_eq!(reps.len(), expected_monoids, "order {order}");
            let (groups, non_groups) = hopf_iff_group_sweep(&cat, &reps).unwrap();
            assert_eq!(groups, 1);
            assert_eq!(groups + non_groups, expected_monoids);
        }
    }

    #[test]
    fn monoid_sweep_size_four_exhaustive() {
        // Every monoid table of order ≤ 4 with identity fixed: Hopf iff
        // group, checked raw (not up to isomorphism).
        let cat = f2cat();
        for order in 1..=4usize {
            let all = enumerate_monoids(order);
            hopf_iff_group_sweep(&cat, &all).unwrap();
        }
    }

    #[test]
    fn coproduct_uniqueness_by_exhaustive_search() {
        let cat = f2cat();
        let alg = c2_bialgebra(&cat).algebra;
        let id = cat.identity(&Dim(2));
        let candidates =
            coproduct_uniqueness_search(&cat, &alg, &alg, &alg, &id, &id).unwrap();
        assert_eq!(candidates, 256, "2x4 matrices over F_2");
    }

    #[test]
    fn commutative_operad_algebra_passes_the_operad_checks() {
        use crate::operators::Comm;
        let cat = f2cat();
        let alg = c2_bialgebra(&cat).algebra;
        let oa = OperadAlgebra::from_commutative(&cat, Comm::new(4), &alg).unwrap();
        let report = structures::check_operad_algebra(&cat, &oa);
        assert!(report.passed(), "{:?}", report.first_failure());
        // Spot-check arities 3 and 4: the unique operation acts by the
        // iterated multiplication.
        assert_eq!(oa.structure_map(3, 0), &alg.mul_power(&cat, 3));
        assert_eq!(oa.structure_map(4, 0), &alg.mul_power(&cat, 4));
    }

    #[test]
    fn linearization_is_strong_monoidal_on_samples() {
        let cat = f2cat();
        let f = FinFunction::new(2, 3, vec![2, 0]).unwrap();
        let g = FinFunction::new(3, 2, vec![1, 1, 0]).unwrap();
        assert!(monoid::linearization_is_strong_monoidal(&cat, &f, &g));
    }
}
