//! Law audits for symmetric monoidal instances: associativity and unit laws
//! over generated morphism populations, the interchange law, braiding
//! symmetry and naturality, and strict associativity of the tensor.
//!
//! Populations are generated deterministically (hom-sets are enumerated in a
//! fixed order and truncated), so reports are reproducible byte for byte.

use super::{ComputableCategory, HomEnumerable, SymmetricMonoidalCategory};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawCheck {
    pub name: String,
    pub cases: usize,
    pub failure: Option<String>,
}

impl LawCheck {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalLawReport {
    pub checks: Vec<LawCheck>,
}

impl MonoidalLawReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(LawCheck::passed)
    }
}

/// Deterministic morphism population: up to `per_hom` morphisms from each
/// hom-set between population objects, in enumeration order.
pub fn enumerate_population<C: HomEnumerable>(
    cat: &C,
    objects: &[C::Obj],
    per_hom: usize,
) -> Vec<C::Mor> {
    let mut mors = Vec::new();
    for a in objects {
        for b in objects {
            let hom = cat.enumerate_hom(a, b);
            mors.extend(hom.into_iter().take(per_hom));
        }
    }
    mors
}

/// Category-law audit (associativity, two-sided units) over a supplied
/// population. `min_triples` is the floor the caller expects the population
/// to reach; falling short is reported as a failure so thin populations
/// cannot silently pass.
pub fn audit_category_laws<C: ComputableCategory>(
    cat: &C,
    population: &[C::Mor],
    min_triples: usize,
    max_triples: usize,
) -> Vec<LawCheck> {
    let mut checks = Vec::new();

    let mut unit_failure = None;
    for f in population {
        let id_cod = cat.identity(&cat.cod(f));
        let id_dom = cat.identity(&cat.dom(f));
        let left = cat.compose(&id_cod, f).expect("boundaries match");
        let right = cat.compose(f, &id_dom).expect("boundaries match");
        if left != *f || right != *f {
            unit_failure = Some(format!("unit law fails on {f}"));
            break;
        }
    }
    checks.push(LawCheck {
        name: "unit laws".into(),
        cases: population.len(),
        failure: unit_failure,
    });

    let mut triples = 0usize;
    let mut assoc_failure = None;
    'outer: for f in population {
        for g in population {
            if cat.dom(g) != cat.cod(f) {
                continue;
            }
            for h in population {
                if cat.dom(h) != cat.cod(g) {
                    continue;
                }
                triples += 1;
                let hg = cat.compose(h, g).expect("checked");
                let gf = cat.compose(g, f).expect("checked");
                let left = cat.compose(&hg, f).expect("checked");
                let right = cat.compose(h, &gf).expect("checked");
                if left != right {
                    assoc_failure =
                        Some(format!("associativity fails on h={h}, g={g}, f={f}"));
                    break 'outer;
                }
                if triples >= max_triples {
                    break 'outer;
                }
            }
        }
    }
    if assoc_failure.is_none() && triples < min_triples {
        assoc_failure = Some(format!(
            "population only produced {triples} composable triples (need {min_triples})"
        ));
    }
    checks.push(LawCheck {
        name: "composition associativity".into(),
        cases: triples,
        failure: assoc_failure,
    });

    checks
}

/// Symmetric monoidal law audit: interchange, braiding symmetry and
/// naturality, and strict tensor associativity, over a supplied population.
pub fn audit_monoidal_laws<C: SymmetricMonoidalCategory>(
    cat: &C,
    objects: &[C::Obj],
    population: &[C::Mor],
    max_cases: usize,
) -> Vec<LawCheck> {
    let mut checks = Vec::new();

    // Interchange: (g∘f) ⊗ (g'∘f') = (g⊗g') ∘ (f⊗f').
    let mut cases = 0usize;
    let mut failure = None;
    'inter: for f in population {
        for g in population {
            if cat.dom(g) != cat.cod(f) {
                continue;
            }
            for f2 in population {
                for g2 in population {
                    if cat.dom(g2) != cat.cod(f2) {
                        continue;
                    }
                    cases += 1;
                    let lhs = cat
                        .tensor_mor(&cat.compose(g, f).expect("checked"), &cat.compose(g2, f2).expect("checked"))
                        .expect("valid");
                    let rhs = cat
                        .compose(
                            &cat.tensor_mor(g, g2).expect("valid"),
                            &cat.tensor_mor(f, f2).expect("valid"),
                        )
                        .expect("tensor boundaries match");
                    if lhs != rhs {
                        failure = Some(format!("interchange fails on f={f}, g={g}, f'={f2}, g'={g2}"));
                        break 'inter;
                    }
                    if cases >= max_cases {
                        break 'inter;
                    }
                }
            }
        }
    }
    checks.push(LawCheck {
        name: "tensor/composition interchange".into(),
        cases,
        failure,
    });

    // Braiding symmetry: σ_{B,A} ∘ σ_{A,B} = id.
    let mut cases = 0usize;
    let mut failure = None;
    for a in objects {
        for b in objects {
            cases += 1;
            let s = cat.braiding(a, b);
            let s_back = cat.braiding(b, a);
            let round = cat.compose(&s_back, &s).expect("σ boundaries");
            let id = cat.identity(&cat.tensor_obj(a, b));
            if round != id {
                failure = Some(format!("σ_{{{b},{a}}} ∘ σ_{{{a},{b}}} is not the identity"));
            }
        }
    }
    checks.push(LawCheck {
        name: "braiding symmetry".into(),
        cases,
        failure,
    });

    // Braiding naturality: σ ∘ (f⊗g) = (g⊗f) ∘ σ.
    let mut cases = 0usize;
    let mut failure = None;
    'nat: for f in population {
        for g in population {
            cases += 1;
            let lhs = cat
                .compose(
                    &cat.braiding(&cat.cod(f), &cat.cod(g)),
                    &cat.tensor_mor(f, g).expect("valid"),
                )
                .expect("boundaries");
            let rhs = cat
                .compose(
                    &cat.tensor_mor(g, f).expect("valid"),
                    &cat.braiding(&cat.dom(f), &cat.dom(g)),
                )
                .expect("boundaries");
            if lhs != rhs {
                failure = Some(format!("braiding naturality fails on f={f}, g={g}"));
                break 'nat;
            }
            if cases >= max_cases {
                break 'nat;
            }
        }
    }
    checks.push(LawCheck {
        name: "braiding naturality".into(),
        cases,
        failure,
    });

    // Strict associativity of the tensor on morphisms.
    let mut cases = 0usize;
    let mut failure = None;
    'assoc: for f in population {
        for g in population {
            for h in population {
                cases += 1;
                let left = cat
                    .tensor_mor(&cat.tensor_mor(f, g).expect("valid"), h)
                    .expect("valid");
                let right = cat
                    .tensor_mor(f, &cat.tensor_mor(g, h).expect("valid"))
                    .expect("valid");
                if left != right {
                    failure = Some(format!("tensor associativity fails on f={f}, g={g}, h={h}"));
                    break 'assoc;
                }
                if cases >= max_cases {
                    break 'assoc;
                }
            }
        }
    }
    checks.push(LawCheck {
        name: "strict tensor associativity".into(),
        cases,
        failure,
    });

    // Unit object is strict: 𝟙 ⊗ A = A = A ⊗ 𝟙 on objects and identities.
    let mut failure = None;
    let unit = cat.unit_object();
    for a in objects {
        if cat.tensor_obj(&unit, a) != *a || cat.tensor_obj(a, &unit) != *a {
            failure = Some(format!("unit object is not strict at {a}"));
        }
    }
    checks.push(LawCheck {
        name: "strict unit object".into(),
        cases: objects.len(),
        failure,
    });

    checks
}

/// Full audit with population generated by enumeration.
pub fn full_audit<C>(
    cat: &C,
    objects: &[C::Obj],
    per_hom: usize,
    min_triples: usize,
) -> MonoidalLawReport
where
    C: SymmetricMonoidalCategory + HomEnumerable,
{
    let population = enumerate_population(cat, objects, per_hom);
    let mut checks = audit_category_laws(cat, &population, min_triples, 20_000);
    checks.extend(audit_monoidal_laws(cat, objects, &population, 20_000));
    MonoidalLawReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoidal::finset::{FinSetCategory, SetSize};
    use crate::monoidal::matcat::{Dim, MatrixCategory};
    use crate::monoidal::ring::PrimeField;

    #[test]
    fn matrix_instance_passes_all_laws_on_small_dims() {
        let cat = MatrixCategory::new(PrimeField::new(2).unwrap());
        let report = full_audit(&cat, &[Dim(0), Dim(1), Dim(2)], 4, 100);
        for check in &report.checks {
            assert!(check.passed(), "{}: {:?}", check.name, check.failure);
        }
        let assoc = report
            .checks
            .iter()
            .find(|c| c.name == "composition associativity")
            .unwrap();
        assert!(assoc.cases >= 100, "want ≥100 triples, got {}", assoc.cases);
    }

    #[test]
    fn finset_instance_passes_all_laws_on_small_sizes() {
        let cat = FinSetCategory;
        let report = full_audit(&cat, &[SetSize(1), SetSize(2)], 4, 100);
        for check in &report.checks {
            assert!(check.passed(), "{}: {:?}", check.name, check.failure);
        }
    }
}
