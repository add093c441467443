//! Categories of operators over the pointed-set skeleton: `C^⊗` for a
//! symmetric monoidal instance, `O^⊗` for a set operad, cocartesian lifts
//! and pushforwards, and the Segal comparison.

pub mod opcat;
pub mod operad;
pub mod pointed;

pub use opcat::{
    fiber_pushforward, segal_check, tuples_over, ObjTuple, OpMorphism, OperatorCategory,
    SegalReport,
};
pub use operad::{
    Arity, Assoc, AssocOp, Comm, CommOp, OperadMorphism, OperadOperatorCategory, SetOperad,
};
pub use pointed::{count_pointed_maps, PointedMap};

use crate::monoidal::{ComputableCategory, HomEnumerable, SymmetricMonoidalCategory};

/// Deterministic population of operator morphisms for audits: for each pair
/// of object tuples with arities up to `max_arity` and each pointed map
/// between them, the cocartesian lift plus up to `per_hom` enumerated
/// morphisms.
pub fn operator_population<C>(
    opcat: &OperatorCategory<C>,
    objects: &[C::Obj],
    max_arity: usize,
    per_hom: usize,
) -> Vec<OpMorphism<C::Obj, C::Mor>>
where
    C: SymmetricMonoidalCategory + HomEnumerable,
{
    let mut population = Vec::new();
    let mut tuples = Vec::new();
    for n in 0..=max_arity {
        tuples.extend(tuples_over(objects, n));
    }
    for dom in &tuples {
        for cod in &tuples {
            for map in PointedMap::enumerate(dom.len(), cod.len()) {
                let lift = opcat.cocartesian_lift(&map, dom);
                if opcat.pushforward(&map, dom) == *cod {
                    population.push(lift);
                }
                population.extend(
                    opcat
                        .enumerate_hom_over(&map, dom, cod)
                        .into_iter()
                        .take(per_hom),
                );
            }
        }
    }
    population.sort_by(|a, b| format!("{a}").cmp(&format!("{b}")));
    population.dedup();
    population
}

/// Exhaustive associativity check over the composable triples of a supplied
/// population. Returns the number of triples checked.
pub fn operator_associativity_audit<C>(
    opcat: &OperatorCategory<C>,
    population: &[OpMorphism<C::Obj, C::Mor>],
) -> Result<usize, String>
where
    C: SymmetricMonoidalCategory,
{
    let mut triples = 0usize;
    for f in population {
        let cod_f = opcat.cod(f);
        for g in population {
            if opcat.dom(g) != cod_f {
                continue;
            }
            let gf = opcat.compose_unchecked(g, f);
            let cod_g = opcat.cod(g);
            for h in population {
                if opcat.dom(h) != cod_g {
                    continue;
                }
                triples += 1;
                let hg = opcat.compose_unchecked(h, g);
                let left = opcat.compose_unchecked(&hg, f);
                let right = opcat.compose_unchecked(h, &gf);
                if left != right {
                    return Err(format!(
                        "associativity fails on h={h}, g={g}, f={f}"
                    ));
                }
            }
        }
    }
    Ok(triples)
}

/// Associativity over every composable chain of pointed maps with arities up
/// to `max_arity`, with morphism components instantiated deterministically
/// over the object population: object assignments cycle through the
/// population by position, and each component is drawn from the hom-set
/// enumeration with an index seeded by the chain counter.
///
/// This makes the combinatorial content (all preimage shapes, hence all
/// reordering cases in composition) exhaustive while keeping component data
/// finite. Returns the number of triples checked.
pub fn operator_triple_audit<C>(
    opcat: &OperatorCategory<C>,
    objects: &[C::Obj],
    max_arity: usize,
) -> Result<usize, String>
where
    C: SymmetricMonoidalCategory + HomEnumerable,
{
    assert!(!objects.is_empty());
    let assign = |arity: usize, salt: usize| -> Vec<C::Obj> {
        (0..arity)
            .map(|i| objects[(i + salt) % objects.len()].clone())
            .collect()
    };
    let base = opcat.base();
    let pick = |map: &PointedMap, dom: &[C::Obj], cod: &[C::Obj], salt: usize| -> OpMorphism<C::Obj, C::Mor> {
        let components: Vec<C::Mor> = (0..map.tgt())
            .map(|j| {
                let pre: Vec<C::Obj> = map.preimage(j).into_iter().map(|i| dom[i].clone()).collect();
                let src = base.tensor_all_obj(&pre);
                let size = base.hom_size(&src, &cod[j]);
                assert!(size > 0, "hom-sets of the audit instances are never empty");
                base.hom_element(&src, &cod[j], (salt + 7 * j) % size)
                    .expect("index reduced modulo the hom size")
            })
            .collect();
        OpMorphism {
            dom: dom.to_vec(),
            map: map.clone(),
            components,
        }
    };
    let mut triples = 0usize;
    for m in 0..=max_arity {
        for k in 0..=max_arity {
            for l in 0..=max_arity {
                for n in 0..=max_arity {
                    for alpha in PointedMap::enumerate(m, k) {
                        for beta in PointedMap::enumerate(k, l) {
                            for gamma in PointedMap::enumerate(l, n) {
                                let t0 = assign(m, triples);
                                let t1 = assign(k, triples + 1);
                                let t2 = assign(l, triples + 2);
                                let t3 = assign(n, triples + 3);
                                let f = pick(&alpha, &t0, &t1, triples);
                                let g = pick(&beta, &t1, &t2, triples / 2);
                                let h = pick(&gamma, &t2, &t3, triples / 3);
                                let left = opcat.compose_unchecked(
                                    &h,
                                    &opcat.compose_unchecked(&g, &f),
                                );
                                let right = opcat.compose_unchecked(
                                    &opcat.compose_unchecked(&h, &g),
                                    &f,
                                );
                                if left != right {
                                    return Err(format!(
                                        "associativity fails on γ={gamma}, β={beta}, α={alpha}"
                                    ));
                                }
                                triples += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(triples)
}

/// Every morphism over `α` factors uniquely as the cocartesian lift of `α`
/// followed by a fiber morphism over the identity. Checked by enumeration.
pub fn unique_factorization_audit<C>(
    opcat: &OperatorCategory<C>,
    objects: &[C::Obj],
    max_arity: usize,
) -> Result<usize, String>
where
    C: SymmetricMonoidalCategory + HomEnumerable,
{
    let mut checked = 0usize;
    let mut tuples = Vec::new();
    for n in 0..=max_arity {
        tuples.extend(tuples_over(objects, n));
    }
    for dom in &tuples {
        for cod in &tuples {
            for map in PointedMap::enumerate(dom.len(), cod.len()) {
                let lift = opcat.cocartesian_lift(&map, dom);
                let mid = opcat.pushforward(&map, dom);
                let id_map = PointedMap::identity(cod.len());
                let fiber = opcat.enumerate_hom_over(&id_map, &mid, cod);
                let total = opcat.enumerate_hom_over(&map, dom, cod);
                let mut seen = Vec::new();
                for m in &fiber {
                    let composite = opcat.compose_unchecked(m, &lift);
                    if !total.contains(&composite) {
                        return Err(format!("factored composite {composite} is not over {map}"));
                    }
                    if seen.contains(&composite) {
                        return Err(format!("factorization through {map} is not unique"));
                    }
                    seen.push(composite);
                }
                if seen.len() != total.len() {
                    return Err(format!(
                        "{} of {} morphisms over {map} factor through the lift",
                        seen.len(),
                        total.len()
                    ));
                }
                checked += total.len();
            }
        }
    }
    Ok(checked)
}

/// The projection `Comm^⊗ → Fin_*` is an isomorphism of categories on the
/// skeleton up to `max_arity`: hom-sets biject with pointed maps and the
/// bijection is functorial.
pub fn comm_is_finstar_audit(max_arity: usize) -> Result<usize, String> {
    let comm = OperadOperatorCategory::new(Comm::new(max_arity));
    let mut checked = 0usize;
    for m in 0..=max_arity {
        for n in 0..=max_arity {
            let hom = comm.enumerate_hom(&Arity(m), &Arity(n));
            let maps = PointedMap::enumerate(m, n);
            if hom.len() != maps.len() {
                return Err(format!(
                    "hom([{m}]+,[{n}]+) has {} morphisms, Fin_* has {}",
                    hom.len(),
                    maps.len()
                ));
            }
            for mor in &hom {
                if !maps.contains(&mor.map) {
                    return Err(format!("projection misses {mor}"));
                }
            }
            // Injectivity of the projection on this hom-set.
            let mut projected: Vec<&PointedMap> = hom.iter().map(|m| &m.map).collect();
            projected.sort_by_key(|m| format!("{m}"));
            projected.dedup();
            if projected.len() != hom.len() {
                return Err(format!("projection is not injective on hom([{m}]+,[{n}]+)"));
            }
            checked += hom.len();
        }
    }
    // Functoriality: composition in Comm^⊗ projects to composition of maps,
    // and the unique lift of each map composes accordingly.
    for m in 0..=max_arity {
        for k in 0..=max_arity {
            for n in 0..=max_arity {
                for f in comm.enumerate_hom(&Arity(m), &Arity(k)) {
                    for g in comm.enumerate_hom(&Arity(k), &Arity(n)) {
                        let gf = comm.compose_unchecked(&g, &f);
                        let expected = g.map.compose(&f.map).map_err(|e| e.to_string())?;
                        if gf.map != expected {
                            return Err(format!("projection not functorial at {g} ∘ {f}"));
                        }
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(checked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoidal::finset::{FinSetCategory, SetSize};
    use crate::monoidal::matcat::{Dim, MatrixCategory};
    use crate::monoidal::ring::PrimeField;
    use crate::monoidal::ComputableCategory;

    fn f2_opcat() -> OperatorCategory<MatrixCategory<PrimeField>> {
        OperatorCategory::new(MatrixCategory::new(PrimeField::new(2).unwrap()))
    }

    #[test]
    fn pushforward_examples() {
        let opcat = f2_opcat();
        // identity leaves the tuple alone
        let tuple = vec![Dim(2), Dim(3)];
        assert_eq!(
            opcat.pushforward(&PointedMap::identity(2), &tuple),
            tuple
        );
        // fold multiplies dimensions: (F_2^2, F_2^3) ↦ F_2^6
        assert_eq!(
            opcat.pushforward(&PointedMap::fold(2), &tuple),
            vec![Dim(6)]
        );
        // empty tuple pushed into [1]_+ gives the unit object
        assert_eq!(
            opcat.pushforward(&PointedMap::new(0, 1, vec![]).unwrap(), &[]),
            vec![Dim(1)]
        );
    }

    #[test]
    fn cocartesian_lift_components_are_identities() {
        let opcat = f2_opcat();
        let tuple = vec![Dim(2), Dim(2)];
        let lift = opcat.cocartesian_lift(&PointedMap::fold(2), &tuple);
        assert_eq!(lift.components.len(), 1);
        assert_eq!(lift.components[0], opcat.base().identity(&Dim(4)));
        // α = id gives the identity morphism
        let id_lift = opcat.cocartesian_lift(&PointedMap::identity(2), &tuple);
        assert_eq!(id_lift, opcat.identity(&ObjTuple(tuple.clone())));
        // inert collapse of the second point keeps the first object
        let inert = PointedMap::new(2, 1, vec![Some(0), None]).unwrap();
        let lift = opcat.cocartesian_lift(&inert, &[Dim(2), Dim(3)]);
        assert_eq!(lift.components[0], opcat.base().identity(&Dim(2)));
    }

    #[test]
    fn cocartesian_bijection_on_small_instance() {
        let opcat = f2_opcat();
        // inert collapse on (A,B), then any β out of the middle object
        let alpha = PointedMap::new(2, 1, vec![Some(0), None]).unwrap();
        let tuple = vec![Dim(2), Dim(1)];
        for beta in PointedMap::enumerate(1, 1) {
            opcat
                .check_cocartesian(&alpha, &tuple, &beta, &[Dim(2)])
                .unwrap();
        }
        // and the fold
        let fold = PointedMap::fold(2);
        for beta in PointedMap::enumerate(1, 1) {
            opcat
                .check_cocartesian(&fold, &[Dim(1), Dim(2)], &beta, &[Dim(2)])
                .unwrap();
        }
    }

    #[test]
    fn stacked_folds_compose_to_iterated_multiplication() {
        // Components built from a fixed μ: the composite of
        // [3]_+ → [2]_+ → [1]_+ has component μ∘(μ⊗id).
        let opcat = f2_opcat();
        let base = opcat.base().clone();
        // μ for the group algebra F_2[C_2]: 2x4 matrix
        let mu = base
            .mor_from_rows(vec![vec![1, 0, 0, 1], vec![0, 1, 1, 0]])
            .unwrap();
        let r = Dim(2);
        let fold32 = PointedMap::new(3, 2, vec![Some(0), Some(0), Some(1)]).unwrap();
        let inner = OpMorphism {
            dom: vec![r, r, r],
            map: fold32,
            components: vec![mu.clone(), base.identity(&r)],
        };
        let outer = OpMorphism {
            dom: vec![r, r],
            map: PointedMap::fold(2),
            components: vec![mu.clone()],
        };
        let composite = opcat.compose(&outer, &inner).unwrap();
        let mu_mu_id = base
            .compose(&mu, &base.tensor_mor(&mu, &base.identity(&r)).unwrap())
            .unwrap();
        assert_eq!(composite.map, PointedMap::fold(3));
        assert_eq!(composite.components, vec![mu_mu_id]);
    }

    #[test]
    fn identity_is_neutral_for_composition() {
        let opcat = f2_opcat();
        let mu = opcat
            .base()
            .mor_from_rows(vec![vec![1, 0, 0, 1], vec![0, 1, 1, 0]])
            .unwrap();
        let f = OpMorphism {
            dom: vec![Dim(2), Dim(2)],
            map: PointedMap::fold(2),
            components: vec![mu],
        };
        let id_cod = opcat.identity(&opcat.cod(&f));
        let id_dom = opcat.identity(&opcat.dom(&f));
        assert_eq!(opcat.compose(&id_cod, &f).unwrap(), f);
        assert_eq!(opcat.compose(&f, &id_dom).unwrap(), f);
    }

    #[test]
    fn associativity_with_interleaved_preimages() {
        // α: [3]_+ → [2]_+ with interleaved preimages (1,3 ↦ 1; 2 ↦ 2)
        // requires the canonical shuffle; check h∘(g∘f) = (h∘g)∘f directly.
        let opcat = f2_opcat();
        let base = opcat.base().clone();
        let r = Dim(2);
        let alpha = PointedMap::new(3, 2, vec![Some(0), Some(1), Some(0)]).unwrap();
        let mu = base
            .mor_from_rows(vec![vec![1, 0, 0, 1], vec![0, 1, 1, 0]])
            .unwrap();
        let swap = base.mor_from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        let f = OpMorphism {
            dom: vec![r, r, r],
            map: alpha,
            components: vec![mu.clone(), swap.clone()],
        };
        let g = OpMorphism {
            dom: vec![r, r],
            map: PointedMap::fold(2),
            components: vec![mu.clone()],
        };
        let h = OpMorphism {
            dom: vec![r],
            map: PointedMap::identity(1),
            components: vec![swap],
        };
        let left = opcat
            .compose(&h, &opcat.compose(&g, &f).unwrap())
            .unwrap();
        let right = opcat
            .compose(&opcat.compose(&h, &g).unwrap(), &f)
            .unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn exhaustive_associativity_on_tiny_population() {
        let opcat = f2_opcat();
        let population = operator_population(&opcat, &[Dim(1)], 2, 2);
        let triples = operator_associativity_audit(&opcat, &population).unwrap();
        assert!(triples > 100, "expected >100 triples, got {triples}");
    }

    #[test]
    fn shape_exhaustive_triple_audit_small() {
        let opcat = f2_opcat();
        let triples = operator_triple_audit(&opcat, &[Dim(1), Dim(2)], 2).unwrap();
        // All composable chains of pointed maps with arities ≤ 2.
        assert_eq!(triples, {
            let mut total = 0usize;
            for m in 0..=2usize {
                for k in 0..=2usize {
                    for l in 0..=2usize {
                        for n in 0..=2usize {
                            total += (k + 1).pow(m as u32) * (l + 1).pow(k as u32) * (n + 1).pow(l as u32);
                        }
                    }
                }
            }
            total
        });
    }

    #[test]
    fn unique_factorization_on_small_instance() {
        let opcat = f2_opcat();
        let checked = unique_factorization_audit(&opcat, &[Dim(1), Dim(2)], 2).unwrap();
        assert!(checked > 0);
    }

    #[test]
    fn segal_on_matrix_and_finset_instances() {
        let opcat = f2_opcat();
        for n in 1..=2 {
            let report = segal_check(&opcat, n, &[Dim(1), Dim(2)]);
            assert!(report.passed(), "{:?}", report.failure);
        }
        let finset = OperatorCategory::new(FinSetCategory);
        for n in 1..=3 {
            let report = segal_check(&finset, n, &[SetSize(1), SetSize(2)]);
            assert!(report.passed(), "{:?}", report.failure);
        }
    }

    #[test]
    fn comm_operator_category_is_finstar() {
        let checked = comm_is_finstar_audit(4).unwrap();
        assert!(checked > 0);
    }

    #[test]
    fn comm_hom_counts_are_pointed_map_counts() {
        let comm = OperadOperatorCategory::new(Comm::new(4));
        for m in 0..=3 {
            for n in 0..=3 {
                assert_eq!(
                    comm.enumerate_hom(&Arity(m), &Arity(n)).len(),
                    ((n + 1) as usize).pow(m as u32)
                );
            }
        }
        // identity map of [1]_+ has a singleton component
        let id_mor = comm.identity(&Arity(1));
        assert_eq!(id_mor.ops, vec![CommOp(1)]);
    }

    #[test]
    fn assoc_hom_counts() {
        // hom([2]_+, [1]_+): 2 morphisms over the fold (the two orderings),
        // plus one over each of the 3 other pointed maps. Oracle: enumerate
        // pointed maps and count orderings of each preimage.
        let assoc = OperadOperatorCategory::new(Assoc::new(4));
        let hom = assoc.enumerate_hom(&Arity(2), &Arity(1));
        let mut oracle = 0usize;
        for map in PointedMap::enumerate(2, 1) {
            let mut contribution = 1usize;
            let k = map.preimage(0).len();
            contribution *= (1..=k).product::<usize>().max(1);
            oracle += contribution;
        }
        assert_eq!(oracle, 5);
        assert_eq!(hom.len(), 5);
        let over_fold: Vec<_> = hom
            .iter()
            .filter(|m| m.map == PointedMap::fold(2))
            .collect();
        assert_eq!(over_fold.len(), 2);
    }

    #[test]
    fn operad_laws_hold_for_comm_and_assoc() {
        let comm_cases = operad::check_operad_laws(&Comm::new(4), 4).unwrap();
        let assoc_cases = operad::check_operad_laws(&Assoc::new(4), 4).unwrap();
        assert!(comm_cases > 0 && assoc_cases > 0);
    }

    #[test]
    fn operad_operator_composition_is_associative() {
        for max in [3usize] {
            let assoc = OperadOperatorCategory::new(Assoc::new(max));
            let mut population = Vec::new();
            for m in 0..=2 {
                for n in 0..=2 {
                    population.extend(assoc.enumerate_hom(&Arity(m), &Arity(n)));
                }
            }
            let mut triples = 0usize;
            for f in &population {
                for g in &population {
                    if assoc.dom(g) != assoc.cod(f) {
                        continue;
                    }
                    for h in &population {
                        if assoc.dom(h) != assoc.cod(g) {
                            continue;
                        }
                        let left = assoc.compose_unchecked(
                            h,
                            &assoc.compose_unchecked(g, f),
                        );
                        let right = assoc.compose_unchecked(
                            &assoc.compose_unchecked(h, g),
                            f,
                        );
                        assert_eq!(left, right, "h={h}, g={g}, f={f}");
                        triples += 1;
                    }
                }
            }
            assert!(triples > 1000);
        }
    }

    #[test]
    fn arity_overflow_is_loud() {
        let comm = Comm::new(2);
        assert!(comm.operations(3).is_err());
    }
}
