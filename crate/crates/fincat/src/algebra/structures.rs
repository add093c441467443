//! Algebras, coalgebras, and bialgebras in a computable symmetric monoidal
//! instance, with all axioms decided by morphism equality.
//!
//! The strict-unitor convention is used throughout: since shipped instances
//! satisfy `𝟙⊗R = R = R⊗𝟙` on the nose, formulas like `μ∘(η⊗id)` typecheck
//! without explicit unitors. This is the one place coherence is assumed.

use crate::error::FincatError;
use crate::monoidal::SymmetricMonoidalCategory;
use crate::operators::SetOperad;
use crate::report::{equality_check, Check, CheckSet};

#[derive(Debug, Clone)]
pub struct AlgebraStructure<C: SymmetricMonoidalCategory> {
    pub carrier: C::Obj,
    pub mul: C::Mor,
    pub unit: C::Mor,
    pub commutative: bool,
}

impl<C: SymmetricMonoidalCategory> PartialEq for AlgebraStructure<C> {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier
            && self.mul == other.mul
            && self.unit == other.unit
            && self.commutative == other.commutative
    }
}

impl<C: SymmetricMonoidalCategory> Eq for AlgebraStructure<C> {}

impl<C: SymmetricMonoidalCategory> PartialEq for CoalgebraStructure<C> {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier
            && self.comul == other.comul
            && self.counit == other.counit
    }
}

impl<C: SymmetricMonoidalCategory> Eq for CoalgebraStructure<C> {}

impl<C: SymmetricMonoidalCategory> PartialEq for BialgebraPresentation<C> {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra
            && self.coalgebra == other.coalgebra
            && self.antipode == other.antipode
    }
}

impl<C: SymmetricMonoidalCategory> Eq for BialgebraPresentation<C> {}

impl<C: SymmetricMonoidalCategory> AlgebraStructure<C> {
    /// Shape-validates the structure maps: `μ: R⊗R → R`, `η: 𝟙 → R`.
    pub fn new(
        cat: &C,
        carrier: C::Obj,
        mul: C::Mor,
        unit: C::Mor,
        commutative: bool,
    ) -> Result<Self, FincatError> {
        cat.validate_mor(&mul)?;
        cat.validate_mor(&unit)?;
        let rr = cat.tensor_obj(&carrier, &carrier);
        if cat.dom(&mul) != rr || cat.cod(&mul) != carrier {
            return Err(FincatError::Precondition(format!(
                "multiplication must map {rr} to {carrier}, found {} to {}",
                cat.dom(&mul),
                cat.cod(&mul)
            )));
        }
        if cat.dom(&unit) != cat.unit_object() || cat.cod(&unit) != carrier {
            return Err(FincatError::Precondition(format!(
                "unit must map {} to {carrier}, found {} to {}",
                cat.unit_object(),
                cat.dom(&unit),
                cat.cod(&unit)
            )));
        }
        Ok(AlgebraStructure {
            carrier,
            mul,
            unit,
            commutative,
        })
    }

    /// The algebra on the unit object: multiplication and unit are the
    /// identity of `𝟙` (strictly, `𝟙⊗𝟙 = 𝟙`).
    pub fn unit_algebra(cat: &C) -> Self {
        let one = cat.unit_object();
        AlgebraStructure {
            carrier: one.clone(),
            mul: cat.identity(&one),
            unit: cat.identity(&one),
            commutative: true,
        }
    }

    /// Iterated multiplication `R^⊗k → R`: the unit for `k = 0`, the
    /// identity for `k = 1`, and left-nested `μ∘(μ_{k-1}⊗id)` above.
    pub fn mul_power(&self, cat: &C, k: usize) -> C::Mor {
        match k {
            0 => self.unit.clone(),
            1 => cat.identity(&self.carrier),
            _ => {
                let lower = self.mul_power(cat, k - 1);
                let id = cat.identity(&self.carrier);
                cat.compose_unchecked(&self.mul, &cat.tensor_mor_unchecked(&lower, &id))
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct CoalgebraStructure<C: SymmetricMonoidalCategory> {
    pub carrier: C::Obj,
    pub comul: C::Mor,
    pub counit: C::Mor,
}

impl<C: SymmetricMonoidalCategory> CoalgebraStructure<C> {
    pub fn new(
        cat: &C,
        carrier: C::Obj,
        comul: C::Mor,
        counit: C::Mor,
    ) -> Result<Self, FincatError> {
        cat.validate_mor(&comul)?;
        cat.validate_mor(&counit)?;
        let rr = cat.tensor_obj(&carrier, &carrier);
        if cat.dom(&comul) != carrier || cat.cod(&comul) != rr {
            return Err(FincatError::Precondition(format!(
                "comultiplication must map {carrier} to {rr}"
            )));
        }
        if cat.dom(&counit) != carrier || cat.cod(&counit) != cat.unit_object() {
            return Err(FincatError::Precondition(format!(
                "counit must map {carrier} to {}",
                cat.unit_object()
            )));
        }
        Ok(CoalgebraStructure {
            carrier,
            comul,
            counit,
        })
    }
}

/// One carrier with both structures, and optionally an antipode.
#[derive(Debug, Clone)]
pub struct BialgebraPresentation<C: SymmetricMonoidalCategory> {
    pub algebra: AlgebraStructure<C>,
    pub coalgebra: CoalgebraStructure<C>,
    pub antipode: Option<C::Mor>,
}

impl<C: SymmetricMonoidalCategory> BialgebraPresentation<C> {
    pub fn new(
        algebra: AlgebraStructure<C>,
        coalgebra: CoalgebraStructure<C>,
        antipode: Option<C::Mor>,
    ) -> Result<Self, FincatError> {
        if algebra.carrier != coalgebra.carrier {
            return Err(FincatError::Precondition(format!(
                "algebra carrier {} differs from coalgebra carrier {}",
                algebra.carrier, coalgebra.carrier
            )));
        }
        Ok(BialgebraPresentation {
            algebra,
            coalgebra,
            antipode,
        })
    }

    pub fn carrier(&self) -> &C::Obj {
        &self.algebra.carrier
    }

    pub fn unit_bialgebra(cat: &C) -> Self {
        let one = cat.unit_object();
        BialgebraPresentation {
            algebra: AlgebraStructure::unit_algebra(cat),
            coalgebra: CoalgebraStructure {
                carrier: one.clone(),
                comul: cat.identity(&one),
                counit: cat.identity(&one),
            },
            antipode: Some(cat.identity(&one)),
        }
    }
}

pub fn check_algebra<C: SymmetricMonoidalCategory>(
    cat: &C,
    a: &AlgebraStructure<C>,
) -> CheckSet {
    let mut out = CheckSet::new();
    let id = cat.identity(&a.carrier);
    let assoc_l = cat.compose_unchecked(&a.mul, &cat.tensor_mor_unchecked(&a.mul, &id));
    let assoc_r = cat.compose_unchecked(&a.mul, &cat.tensor_mor_unchecked(&id, &a.mul));
    out.push(equality_check("associativity", &assoc_l, &assoc_r));
    let left_unit = cat.compose_unchecked(&a.mul, &cat.tensor_mor_unchecked(&a.unit, &id));
    out.push(equality_check("left unit", &left_unit, &id));
    let right_unit = cat.compose_unchecked(&a.mul, &cat.tensor_mor_unchecked(&id, &a.unit));
    out.push(equality_check("right unit", &right_unit, &id));
    if a.commutative {
        let twisted =
            cat.compose_unchecked(&a.mul, &cat.braiding(&a.carrier, &a.carrier));
        out.push(equality_check("commutativity", &twisted, &a.mul));
    }
    out
}

pub fn check_coalgebra<C: SymmetricMonoidalCategory>(
    cat: &C,
    c: &CoalgebraStructure<C>,
) -> CheckSet {
    let mut out = CheckSet::new();
    let id = cat.identity(&c.carrier);
    let coassoc_l =
        cat.compose_unchecked(&cat.tensor_mor_unchecked(&c.comul, &id), &c.comul);
    let coassoc_r =
        cat.compose_unchecked(&cat.tensor_mor_unchecked(&id, &c.comul), &c.comul);
    out.push(equality_check("coassociativity", &coassoc_l, &coassoc_r));
    let left_counit =
        cat.compose_unchecked(&cat.tensor_mor_unchecked(&c.counit, &id), &c.comul);
    out.push(equality_check("left counit", &left_counit, &id));
    let right_counit =
        cat.compose_unchecked(&cat.tensor_mor_unchecked(&id, &c.counit), &c.comul);
    out.push(equality_check("right counit", &right_counit, &id));
    out
}

/// The compatibility axioms making (μ, η, δ, ε) a bialgebra: δ and ε are
/// algebra homomorphisms. Antipode correctness is included when one is
/// present.
pub fn check_bialgebra<C: SymmetricMonoidalCategory>(
    cat: &C,
    b: &BialgebraPresentation<C>,
) -> CheckSet {
    let mut out = check_algebra(cat, &b.algebra);
    out.extend(check_coalgebra(cat, &b.coalgebra));
    let r = b.carrier().clone();
    let id = cat.identity(&r);
    let mul = &b.algebra.mul;
    let unit = &b.algebra.unit;
    let comul = &b.coalgebra.comul;
    let counit = &b.coalgebra.counit;

    // δ∘μ = (μ⊗μ)∘(id⊗σ⊗id)∘(δ⊗δ)
    let lhs = cat.compose_unchecked(comul, mul);
    let middle = cat.tensor_mor_unchecked(
        &cat.tensor_mor_unchecked(&id, &cat.braiding(&r, &r)),
        &id,
    );
    let rhs = cat.compose_unchecked(
        &cat.tensor_mor_unchecked(mul, mul),
        &cat.compose_unchecked(&middle, &cat.tensor_mor_unchecked(comul, comul)),
    );
    out.push(equality_check("comultiplication is an algebra map", &lhs, &rhs));

    // ε∘μ = ε⊗ε (strict unitors)
    let lhs = cat.compose_unchecked(counit, mul);
    let rhs = cat.tensor_mor_unchecked(counit, counit);
    out.push(equality_check("counit is multiplicative", &lhs, &rhs));

    // δ∘η = η⊗η
    let lhs = cat.compose_unchecked(comul, unit);
    let rhs = cat.tensor_mor_unchecked(unit, unit);
    out.push(equality_check("comultiplication preserves the unit", &lhs, &rhs));

    // ε∘η = id_𝟙
    let lhs = cat.compose_unchecked(counit, unit);
    let rhs = cat.identity(&cat.unit_object());
    out.push(equality_check("counit of the unit", &lhs, &rhs));

    if let Some(alpha) = &b.antipode {
        out.extend(super::hopf::check_antipode(cat, b, alpha));
    }
    out
}

/// Is `f : carrier(R) → carrier(S)` an algebra homomorphism?
pub fn check_algebra_map<C: SymmetricMonoidalCategory>(
    cat: &C,
    f: &C::Mor,
    r: &AlgebraStructure<C>,
    s: &AlgebraStructure<C>,
) -> CheckSet {
    let mut out = CheckSet::new();
    if cat.dom(f) != r.carrier || cat.cod(f) != s.carrier {
        out.push(Check::fail(
            "algebra map shape",
            vec![format!(
                "map goes {} → {}, expected {} → {}",
                cat.dom(f),
                cat.cod(f),
                r.carrier,
                s.carrier
            )],
        ));
        return out;
    }
    let lhs = cat.compose_unchecked(f, &r.mul);
    let rhs = cat.compose_unchecked(&s.mul, &cat.tensor_mor_unchecked(f, f));
    out.push(equality_check("multiplication is preserved", &lhs, &rhs));
    let lhs = cat.compose_unchecked(f, &r.unit);
    out.push(equality_check("unit is preserved", &lhs, &s.unit));
    out
}

/// The tensor product of algebras:
/// `μ_{R⊗S} = (μ_R⊗μ_S)∘(id⊗σ⊗id)`, `η_{R⊗S} = η_R⊗η_S`.
pub fn tensor_algebras<C: SymmetricMonoidalCategory>(
    cat: &C,
    r: &AlgebraStructure<C>,
    s: &AlgebraStructure<C>,
) -> Result<AlgebraStructure<C>, FincatError> {
    let carrier = cat.tensor_obj(&r.carrier, &s.carrier);
    let middle = cat.tensor_mor(
        &cat.tensor_mor(
            &cat.identity(&r.carrier),
            &cat.braiding(&s.carrier, &r.carrier),
        )?,
        &cat.identity(&s.carrier),
    )?;
    let mul = cat.compose(
        &cat.tensor_mor(&r.mul, &s.mul)?,
        &middle,
    )?;
    let unit = cat.tensor_mor(&r.unit, &s.unit)?;
    AlgebraStructure::new(
        cat,
        carrier,
        mul,
        unit,
        r.commutative && s.commutative,
    )
}

/// The two insertions `R → R⊗S ← S` of the coproduct of commutative
/// algebras: `id⊗η_S` and `η_R⊗id`.
pub fn coproduct_insertions<C: SymmetricMonoidalCategory>(
    cat: &C,
    r: &AlgebraStructure<C>,
    s: &AlgebraStructure<C>,
) -> (C::Mor, C::Mor) {
    (
        cat.tensor_mor_unchecked(&cat.identity(&r.carrier), &s.unit),
        cat.tensor_mor_unchecked(&r.unit, &cat.identity(&s.carrier)),
    )
}

/// Build the universal map out of the coproduct: for algebra maps
/// `f: R → T`, `g: S → T` with `T` commutative, `h = μ_T ∘ (f⊗g)` is the
/// unique algebra map `R⊗S → T` restricting to `f` and `g` along the
/// insertions. The restriction identities are verified before returning.
pub fn coproduct_universal_map<C: SymmetricMonoidalCategory>(
    cat: &C,
    r: &AlgebraStructure<C>,
    s: &AlgebraStructure<C>,
    t: &AlgebraStructure<C>,
    f: &C::Mor,
    g: &C::Mor,
) -> Result<C::Mor, FincatError> {
    for (name, alg) in [("R", r), ("S", s), ("T", t)] {
        if !alg.commutative {
            return Err(FincatError::Precondition(format!(
                "{name} must be a commutative algebra for the coproduct"
            )));
        }
    }
    for (name, map, src) in [("f", f, r), ("g", g, s)] {
        let checks = check_algebra_map(cat, map, src, t);
        if !checks.passed() {
            return Err(FincatError::Precondition(format!(
                "{name} is not an algebra map: {}",
                checks.first_failure().map(|c| c.name.clone()).unwrap_or_default()
            )));
        }
    }
    let h = cat.compose(&t.mul, &cat.tensor_mor(f, g)?)?;
    let (ins_r, ins_s) = coproduct_insertions(cat, r, s);
    let restrict_r = cat.compose(&h, &ins_r)?;
    if restrict_r != *f {
        return Err(FincatError::Precondition(
            "universal map does not restrict to f along R → R⊗S".into(),
        ));
    }
    let restrict_s = cat.compose(&h, &ins_s)?;
    if restrict_s != *g {
        return Err(FincatError::Precondition(
            "universal map does not restrict to g along S → R⊗S".into(),
        ));
    }
    Ok(h)
}

/// An algebra over a set operad: one structure map per operation, stored up
/// to the operad's arity bound.
#[derive(Debug, Clone)]
pub struct OperadAlgebra<C: SymmetricMonoidalCategory, O: SetOperad> {
    pub carrier: C::Obj,
    /// `ops[n]` is aligned with `operad.operations(n)`.
    pub ops: Vec<Vec<C::Mor>>,
    pub operad: O,
}

impl<C: SymmetricMonoidalCategory, O: SetOperad> OperadAlgebra<C, O> {
    pub fn structure_map(&self, arity: usize, op_index: usize) -> &C::Mor {
        &self.ops[arity][op_index]
    }

    /// A commutative algebra determines its whole tower of structure maps:
    /// the unique arity-`n` operation acts by iterated multiplication.
    pub fn from_commutative(
        cat: &C,
        operad: O,
        alg: &AlgebraStructure<C>,
    ) -> Result<Self, FincatError> {
        if !alg.commutative {
            return Err(FincatError::Precondition(
                "expected a commutative algebra".into(),
            ));
        }
        let mut ops = Vec::new();
        for n in 0..=operad.max_arity() {
            let level = operad.operations(n)?;
            ops.push(
                level
                    .iter()
                    .map(|_| alg.mul_power(cat, n))
                    .collect(),
            );
        }
        Ok(OperadAlgebra {
            carrier: alg.carrier.clone(),
            ops,
            operad,
        })
    }
}

impl<C: SymmetricMonoidalCategory, O: SetOperad> OperadAlgebra<C, O> {
    fn map_for(&self, op: &O::Op) -> C::Mor {
        let n = self.operad.arity_of(op);
        let index = self
            .operad
            .operations(n)
            .expect("within bound")
            .iter()
            .position(|q| q == op)
            .expect("operation belongs to the operad");
        self.ops[n][index].clone()
    }
}

/// Structure maps respect the operad: the unit acts as the identity,
/// operadic composites act as composites of tensor products, and the
/// symmetric action acts by permuting tensor factors. All checks are
/// morphism equalities, quantified over everything within the arity bound.
pub fn check_operad_algebra<C, O>(cat: &C, oa: &OperadAlgebra<C, O>) -> CheckSet
where
    C: SymmetricMonoidalCategory,
    O: SetOperad,
{
    let mut out = CheckSet::new();
    let bound = oa.operad.max_arity();
    out.push(equality_check(
        "operad unit acts as the identity",
        &oa.map_for(&oa.operad.unit_op()),
        &cat.identity(&oa.carrier),
    ));

    // Symmetric action: μ_{σ·ρ} = μ_ρ ∘ P_σ.
    for n in 0..=bound {
        let carriers = vec![oa.carrier.clone(); n];
        for op in oa.operad.operations(n).expect("within bound") {
            for sigma in crate::operators::operad::all_permutations(n) {
                let lhs = oa.map_for(&oa.operad.act(&sigma, &op));
                let rhs = cat.compose_unchecked(
                    &oa.map_for(&op),
                    &cat.permute_factors(&carriers, &sigma),
                );
                out.push(equality_check(
                    format!("symmetric action on {op} by {sigma:?}"),
                    &lhs,
                    &rhs,
                ));
            }
        }
    }

    // Operadic composition: μ_{γ(g; f⃗)} = μ_g ∘ (μ_{f_1} ⊗ … ⊗ μ_{f_r}),
    // over tuples whose composite arity stays within the bound.
    for r in 0..=bound.min(2) {
        for g in oa.operad.operations(r).expect("within bound") {
            let mut slots: Vec<Vec<O::Op>> = Vec::new();
            for _ in 0..r {
                let mut ops = Vec::new();
                for k in 0..=2usize.min(bound) {
                    ops.extend(oa.operad.operations(k).expect("within bound"));
                }
                slots.push(ops);
            }
            for inners in cartesian_ops(&slots) {
                let total: usize = inners.iter().map(|f| oa.operad.arity_of(f)).sum();
                if total > bound {
                    continue;
                }
                let composite = oa.operad.compose_op(&g, &inners);
                let lhs = oa.map_for(&composite);
                let tensor = cat.tensor_all_mor(
                    &inners.iter().map(|f| oa.map_for(f)).collect::<Vec<_>>(),
                );
                let rhs = cat.compose_unchecked(&oa.map_for(&g), &tensor);
                out.push(equality_check(
                    format!("composition under {g}"),
                    &lhs,
                    &rhs,
                ));
            }
        }
    }
    out
}

fn cartesian_ops<T: Clone>(slots: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![vec![]];
    for slot in slots {
        let mut next = Vec::new();
        for prefix in &out {
            for item in slot {
                let mut extended = prefix.clone();
                extended.push(item.clone());
                next.push(extended);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoidal::matcat::{Dim, MatrixCategory};
    use crate::monoidal::matrix::Matrix;
    use crate::monoidal::ring::PrimeField;
    use crate::monoidal::ComputableCategory;

    type Cat = MatrixCategory<PrimeField>;

    fn f2cat() -> Cat {
        MatrixCategory::new(PrimeField::new(2).unwrap())
    }

    /// F_2[C_2] on the basis {e, g}.
    pub(crate) fn c2_algebra(cat: &Cat) -> AlgebraStructure<Cat> {
        let mul = cat
            .mor_from_rows(vec![vec![1, 0, 0, 1], vec![0, 1, 1, 0]])
            .unwrap();
        let unit = cat.mor_from_rows(vec![vec![1], vec![0]]).unwrap();
        AlgebraStructure::new(cat, Dim(2), mul, unit, true).unwrap()
    }

    #[test]
    fn group_algebra_passes_by_basis_evaluation() {
        // Oracle: evaluate the C_2 multiplication table on all basis pairs
        // and rebuild μ; then the axioms are table identities.
        let cat = f2cat();
        let table = [[0usize, 1], [1, 0]];
        let mut mu = vec![vec![0u64; 4]; 2];
        for a in 0..2 {
            for b in 0..2 {
                mu[table[a][b]][a * 2 + b] = 1;
            }
        }
        let alg = c2_algebra(&cat);
        assert_eq!(alg.mul, Matrix::from_rows(mu).unwrap());
        assert!(check_algebra(&cat, &alg).passed());
    }

    #[test]
    fn unit_object_algebra_passes() {
        let cat = f2cat();
        let alg = AlgebraStructure::unit_algebra(&cat);
        assert!(check_algebra(&cat, &alg).passed());
    }

    #[test]
    fn non_associative_multiplication_fails_with_witness() {
        // Brute-force search, frozen: the first 2x4 matrix over F_2 (in
        // enumeration order) whose multiplication is non-associative.
        let cat = f2cat();
        let mut found = None;
        'search: for idx in 0..(1 << 8) {
            let mut rows = vec![vec![0u64; 4]; 2];
            for cell in 0..8 {
                rows[cell / 4][cell % 4] = (idx >> cell) & 1;
            }
            let mul = cat.mor_from_rows(rows).unwrap();
            let id = cat.identity(&Dim(2));
            let l = cat
                .compose(&mul, &cat.tensor_mor(&mul, &id).unwrap())
                .unwrap();
            let r = cat
                .compose(&mul, &cat.tensor_mor(&id, &mul).unwrap())
                .unwrap();
            if l != r {
                found = Some((idx, mul));
                break 'search;
            }
        }
        let (idx, mul) = found.expect("non-associative products exist");
        assert_eq!(idx, 2, "enumeration order is stable");
        let unit = cat.mor_from_rows(vec![vec![1], vec![0]]).unwrap();
        let alg = AlgebraStructure::new(&cat, Dim(2), mul, unit, false).unwrap();
        let report = check_algebra(&cat, &alg);
        let assoc = report
            .checks
            .iter()
            .find(|c| c.name == "associativity")
            .unwrap();
        assert!(!assoc.passed());
        assert!(!assoc.details.is_empty(), "violating composites rendered");
    }

    #[test]
    fn tensor_of_group_algebras_is_the_product_group_algebra() {
        // Build F_2[C_2×C_2] directly and compare all four structure maps.
        let cat = f2cat();
        let alg = c2_algebra(&cat);
        let squared = tensor_algebras(&cat, &alg, &alg).unwrap();
        assert_eq!(squared.carrier, Dim(4));
        // Direct construction: elements are pairs (a,b) at index 2a+b,
        // multiplication is componentwise xor.
        let mut mu = vec![vec![0u64; 16]; 4];
        for x in 0..4usize {
            for y in 0..4usize {
                let (a1, b1) = (x / 2, x % 2);
                let (a2, b2) = (y / 2, y % 2);
                let prod = ((a1 ^ a2) << 1) | (b1 ^ b2);
                mu[prod][x * 4 + y] = 1;
            }
        }
        assert_eq!(squared.mul, Matrix::from_rows(mu).unwrap());
        let mut eta = vec![vec![0u64]; 4];
        eta[0][0] = 1;
        assert_eq!(squared.unit, Matrix::from_rows(eta).unwrap());
        assert!(check_algebra(&cat, &squared).passed());
        assert!(squared.commutative);
    }

    #[test]
    fn tensor_of_unit_algebras_is_the_unit_algebra() {
        let cat = f2cat();
        let one = AlgebraStructure::unit_algebra(&cat);
        let sq = tensor_algebras(&cat, &one, &one).unwrap();
        assert_eq!(sq, one);
    }

    #[test]
    fn algebra_map_checks() {
        let cat = f2cat();
        let alg = c2_algebra(&cat);
        // identity is an algebra map
        let id = cat.identity(&Dim(2));
        assert!(check_algebra_map(&cat, &id, &alg, &alg).passed());
        // the augmentation to F_2 (both basis elements ↦ 1)
        let f2_alg = AlgebraStructure::unit_algebra(&cat);
        let aug = cat.mor_from_rows(vec![vec![1, 1]]).unwrap();
        assert!(check_algebra_map(&cat, &aug, &alg, &f2_alg).passed());
        // the basis swap does not preserve the unit
        let swap = cat.mor_from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        let report = check_algebra_map(&cat, &swap, &alg, &alg);
        assert!(!report.passed());
        let unit_check = report
            .checks
            .iter()
            .find(|c| c.name == "unit is preserved")
            .unwrap();
        assert!(!unit_check.passed());
    }

    #[test]
    fn universal_map_for_the_fold_is_multiplication() {
        let cat = f2cat();
        let alg = c2_algebra(&cat);
        let id = cat.identity(&Dim(2));
        let h = coproduct_universal_map(&cat, &alg, &alg, &alg, &id, &id).unwrap();
        assert_eq!(h, alg.mul);
    }

    #[test]
    fn universal_map_for_insertions_is_identity() {
        let cat = f2cat();
        let alg = c2_algebra(&cat);
        let prod = tensor_algebras(&cat, &alg, &alg).unwrap();
        let (ins_r, ins_s) = coproduct_insertions(&cat, &alg, &alg);
        let h = coproduct_universal_map(&cat, &alg, &alg, &prod, &ins_r, &ins_s).unwrap();
        assert_eq!(h, cat.identity(&Dim(4)));
    }

    #[test]
    fn universal_map_from_unit_algebra_is_the_other_leg() {
        let cat = f2cat();
        let one = AlgebraStructure::unit_algebra(&cat);
        let alg = c2_algebra(&cat);
        let g = cat.identity(&Dim(2));
        let f = alg.unit.clone(); // the unique algebra map 𝟙 → R
        let h = coproduct_universal_map(&cat, &one, &alg, &alg, &f, &g).unwrap();
        assert_eq!(h, g, "under strict unitors 𝟙⊗R = R");
    }

    #[test]
    fn mul_power_tower() {
        let cat = f2cat();
        let alg = c2_algebra(&cat);
        assert_eq!(alg.mul_power(&cat, 0), alg.unit);
        assert_eq!(alg.mul_power(&cat, 1), cat.identity(&Dim(2)));
        assert_eq!(alg.mul_power(&cat, 2), alg.mul);
        // μ₃ = μ∘(μ⊗id) = μ∘(id⊗μ) by associativity
        let id = cat.identity(&Dim(2));
        let right_nested = cat
            .compose(&alg.mul, &cat.tensor_mor(&id, &alg.mul).unwrap())
            .unwrap();
        assert_eq!(alg.mul_power(&cat, 3), right_nested);
    }
}
