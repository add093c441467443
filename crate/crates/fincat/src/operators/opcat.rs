//! The category of operators `C^⊗` of a symmetric monoidal instance `C`.
//!
//! Objects are finite tuples of base objects, lying over `[n]_+` where `n`
//! is the tuple length. A morphism over a pointed map `α` is a component
//! `f_j : ⊗_{i ∈ α⁻¹(j)} A_i → B_j` for every target point, with preimages
//! always tensored in increasing index order.
//!
//! Because preimages are tensored in increasing order, composing
//! `(β,{g_k}) ∘ (α,{f_j})` must reorder factors: the composite's component
//! at `k` is `g_k ∘ (⊗_{j∈β⁻¹(k)} f_j) ∘ sh` where `sh` is the canonical
//! permutation of tensor factors from the increasing enumeration of
//! `(β∘α)⁻¹(k)` to the block-by-block enumeration. This is the unique
//! convention under which composition is associative while keeping the
//! increasing-order normal form for components.

use std::fmt;

use super::pointed::PointedMap;
use crate::error::FincatError;
use crate::monoidal::{
    ComputableCategory, HomEnumerable, SymmetricMonoidalCategory,
};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ObjTuple<O>(pub Vec<O>);

impl<O: fmt::Display> fmt::Display for ObjTuple<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, o) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{o}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OpMorphism<O, M> {
    pub dom: Vec<O>,
    pub map: PointedMap,
    pub components: Vec<M>,
}

impl<O: fmt::Display, M: fmt::Display> fmt::Display for OpMorphism<O, M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; ", self.map)?;
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug)]
pub struct OperatorCategory<C> {
    base: C,
}

impl<C: SymmetricMonoidalCategory> OperatorCategory<C> {
    pub fn new(base: C) -> Self {
        OperatorCategory { base }
    }

    pub fn base(&self) -> &C {
        &self.base
    }

    /// `α_!(tuple)`: tensor the tuple along preimages; an empty preimage
    /// yields the unit object.
    pub fn pushforward(&self, alpha: &PointedMap, tuple: &[C::Obj]) -> Vec<C::Obj> {
        assert_eq!(alpha.src(), tuple.len(), "tuple must lie over the source of α");
        (0..alpha.tgt())
            .map(|j| {
                let objs: Vec<C::Obj> = alpha
                    .preimage(j)
                    .into_iter()
                    .map(|i| tuple[i].clone())
                    .collect();
                self.base.tensor_all_obj(&objs)
            })
            .collect()
    }

    /// The cocartesian lift `ᾱ`: target `α_!(tuple)`, every component an
    /// identity.
    pub fn cocartesian_lift(
        &self,
        alpha: &PointedMap,
        tuple: &[C::Obj],
    ) -> OpMorphism<C::Obj, C::Mor> {
        let target = self.pushforward(alpha, tuple);
        OpMorphism {
            dom: tuple.to_vec(),
            map: alpha.clone(),
            components: target.iter().map(|o| self.base.identity(o)).collect(),
        }
    }

    /// The factor permutation from the increasing enumeration of
    /// `(outer∘inner)⁻¹(k)` to the block-by-block enumeration given by
    /// `outer⁻¹(k)`. Returns the permutation list (position `t` of the block
    /// order names a position in the increasing order) and the increasing
    /// object list.
    fn composition_shuffle(
        &self,
        outer: &PointedMap,
        inner: &PointedMap,
        dom: &[C::Obj],
        k: usize,
    ) -> (Vec<usize>, Vec<C::Obj>) {
        let blocks = outer.preimage(k);
        let block_concat: Vec<usize> = blocks
            .iter()
            .flat_map(|&j| inner.preimage(j))
            .collect();
        let mut increasing = block_concat.clone();
        increasing.sort_unstable();
        let perm: Vec<usize> = block_concat
            .iter()
            .map(|i| increasing.iter().position(|x| x == i).unwrap())
            .collect();
        let objs: Vec<C::Obj> = increasing.iter().map(|&i| dom[i].clone()).collect();
        (perm, objs)
    }

    /// Factor `g` (over `outer ∘ α`) through the cocartesian lift of `α`:
    /// the unique `h` over `outer` with `h ∘ ᾱ = g`.
    pub fn factor_through_lift(
        &self,
        alpha: &PointedMap,
        outer: &PointedMap,
        g: &OpMorphism<C::Obj, C::Mor>,
    ) -> Result<OpMorphism<C::Obj, C::Mor>, FincatError> {
        let composite = outer.compose(alpha)?;
        if composite != g.map {
            return Err(FincatError::Precondition(format!(
                "morphism lies over {} but the factorization needs {}",
                g.map, composite
            )));
        }
        let mid = self.pushforward(alpha, &g.dom);
        let mut components = Vec::with_capacity(outer.tgt());
        for k in 0..outer.tgt() {
            let (perm, objs) = self.composition_shuffle(outer, alpha, &g.dom, k);
            // Invert the shuffle: block order back to increasing order.
            let mut inv = vec![0usize; perm.len()];
            for (t, &p) in perm.iter().enumerate() {
                inv[p] = t;
            }
            let block_objs: Vec<C::Obj> = perm.iter().map(|&p| objs[p].clone()).collect();
            let unshuffle = self.base.permute_factors(&block_objs, &inv);
            components.push(self.base.compose(&g.components[k], &unshuffle)?);
        }
        Ok(OpMorphism {
            dom: mid,
            map: outer.clone(),
            components,
        })
    }
}

impl<C: SymmetricMonoidalCategory> ComputableCategory for OperatorCategory<C> {
    type Obj = ObjTuple<C::Obj>;
    type Mor = OpMorphism<C::Obj, C::Mor>;

    fn dom(&self, f: &Self::Mor) -> Self::Obj {
        ObjTuple(f.dom.clone())
    }
    fn cod(&self, f: &Self::Mor) -> Self::Obj {
        ObjTuple(f.components.iter().map(|c| self.base.cod(c)).collect())
    }
    fn identity(&self, a: &Self::Obj) -> Self::Mor {
        OpMorphism {
            dom: a.0.clone(),
            map: PointedMap::identity(a.0.len()),
            components: a.0.iter().map(|o| self.base.identity(o)).collect(),
        }
    }
    fn compose_unchecked(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor {
        let map = g.map.compose(&f.map).expect("boundaries checked");
        let mut components = Vec::with_capacity(g.map.tgt());
        for k in 0..g.map.tgt() {
            let blocks = g.map.preimage(k);
            let tensor_f = self
                .base
                .tensor_all_mor(&blocks.iter().map(|&j| f.components[j].clone()).collect::<Vec<_>>());
            let (perm, objs) = self.composition_shuffle(&g.map, &f.map, &f.dom, k);
            let shuffle = self.base.permute_factors(&objs, &perm);
            let inner = self.base.compose_unchecked(&tensor_f, &shuffle);
            components.push(self.base.compose_unchecked(&g.components[k], &inner));
        }
        OpMorphism {
            dom: f.dom.clone(),
            map,
            components,
        }
    }
    fn validate_mor(&self, f: &Self::Mor) -> Result<(), FincatError> {
        if f.map.src() != f.dom.len() {
            return Err(FincatError::MalformedMorphism(format!(
                "domain tuple has {} entries but the pointed map has source arity {}",
                f.dom.len(),
                f.map.src()
            )));
        }
        if f.components.len() != f.map.tgt() {
            return Err(FincatError::MalformedMorphism(format!(
                "{} components for target arity {}",
                f.components.len(),
                f.map.tgt()
            )));
        }
        for (k, c) in f.components.iter().enumerate() {
            self.base
                .validate_mor(c)
                .map_err(|e| FincatError::Component {
                    index: k,
                    message: e.to_string(),
                })?;
            let expected: Vec<C::Obj> = f
                .map
                .preimage(k)
                .into_iter()
                .map(|i| f.dom[i].clone())
                .collect();
            let expected_dom = self.base.tensor_all_obj(&expected);
            if self.base.dom(c) != expected_dom {
                return Err(FincatError::Component {
                    index: k,
                    message: format!(
                        "component domain {} differs from the preimage tensor {}",
                        self.base.dom(c),
                        expected_dom
                    ),
                });
            }
        }
        Ok(())
    }
}

impl<C> HomEnumerable for OperatorCategory<C>
where
    C: SymmetricMonoidalCategory + HomEnumerable,
{
    fn enumerate_hom(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::Mor> {
        let mut out = Vec::new();
        for map in PointedMap::enumerate(a.0.len(), b.0.len()) {
            out.extend(self.enumerate_hom_over(&map, &a.0, &b.0));
        }
        out
    }
}

impl<C> OperatorCategory<C>
where
    C: SymmetricMonoidalCategory + HomEnumerable,
{
    /// All morphisms from `dom` to `cod` lying over the given pointed map.
    pub fn enumerate_hom_over(
        &self,
        map: &PointedMap,
        dom: &[C::Obj],
        cod: &[C::Obj],
    ) -> Vec<OpMorphism<C::Obj, C::Mor>> {
        assert_eq!(map.src(), dom.len());
        assert_eq!(map.tgt(), cod.len());
        let choices: Vec<Vec<C::Mor>> = (0..map.tgt())
            .map(|j| {
                let objs: Vec<C::Obj> =
                    map.preimage(j).into_iter().map(|i| dom[i].clone()).collect();
                self.base
                    .enumerate_hom(&self.base.tensor_all_obj(&objs), &cod[j])
            })
            .collect();
        let mut out = Vec::new();
        let mut idx = vec![0usize; choices.len()];
        if choices.iter().any(Vec::is_empty) {
            return out;
        }
        loop {
            out.push(OpMorphism {
                dom: dom.to_vec(),
                map: map.clone(),
                components: idx
                    .iter()
                    .enumerate()
                    .map(|(j, &i)| choices[j][i].clone())
                    .collect(),
            });
            let mut pos = 0;
            loop {
                if pos == choices.len() {
                    return out;
                }
                idx[pos] += 1;
                if idx[pos] < choices[pos].len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
        }
    }

    /// The defining property of the cocartesian lift `ᾱ` of `tuple`:
    /// for each candidate codomain and each pointed map `β` out of the
    /// middle object, composition with `ᾱ` is a bijection between morphisms
    /// over `β` from `α_!(tuple)` and morphisms over `β∘α` from `tuple`.
    pub fn check_cocartesian(
        &self,
        alpha: &PointedMap,
        tuple: &[C::Obj],
        beta: &PointedMap,
        cod: &[C::Obj],
    ) -> Result<(), String> {
        let lift = self.cocartesian_lift(alpha, tuple);
        let mid = self.pushforward(alpha, tuple);
        let over_beta = self.enumerate_hom_over(beta, &mid, cod);
        let composite_map = beta.compose(alpha).expect("arities match");
        let over_composite = self.enumerate_hom_over(&composite_map, tuple, cod);
        let mut images = Vec::with_capacity(over_beta.len());
        for m in &over_beta {
            let composed = self.compose_unchecked(m, &lift);
            if !over_composite.contains(&composed) {
                return Err(format!(
                    "composite {composed} with the lift is not a morphism over {composite_map}"
                ));
            }
            if images.contains(&composed) {
                return Err(format!("composition with the lift is not injective at {m}"));
            }
            images.push(composed);
        }
        if images.len() != over_composite.len() {
            return Err(format!(
                "composition with the lift hits {} of {} morphisms over {composite_map}",
                images.len(),
                over_composite.len()
            ));
        }
        Ok(())
    }
}

/// Pushforward of a fiber morphism (one lying over an identity) along `α`:
/// tensor the components along preimages.
pub fn fiber_pushforward<C: SymmetricMonoidalCategory>(
    opcat: &OperatorCategory<C>,
    alpha: &PointedMap,
    fiber_mor: &OpMorphism<C::Obj, C::Mor>,
) -> OpMorphism<C::Obj, C::Mor> {
    assert!(
        fiber_mor.map == PointedMap::identity(fiber_mor.map.src()),
        "fiber morphisms lie over an identity"
    );
    let dom = opcat.pushforward(alpha, &fiber_mor.dom);
    let components: Vec<C::Mor> = (0..alpha.tgt())
        .map(|j| {
            let mors: Vec<C::Mor> = alpha
                .preimage(j)
                .into_iter()
                .map(|i| fiber_mor.components[i].clone())
                .collect();
            opcat.base().tensor_all_mor(&mors)
        })
        .collect();
    OpMorphism {
        dom,
        map: PointedMap::identity(alpha.tgt()),
        components,
    }
}

/// Report from the Segal comparison at a fixed arity.
#[derive(Debug, Clone)]
pub struct SegalReport {
    pub arity: usize,
    pub objects_checked: usize,
    pub hom_sets_checked: usize,
    pub failure: Option<String>,
}

impl SegalReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Check that the `n` pushforwards `ρ^i_!` jointly identify the fiber over
/// `[n]_+` (objects: `n`-tuples drawn from `population`) with the `n`-fold
/// product of the fiber over `[1]_+`, on objects and on hom-sets.
pub fn segal_check<C>(
    opcat: &OperatorCategory<C>,
    n: usize,
    population: &[C::Obj],
) -> SegalReport
where
    C: SymmetricMonoidalCategory + HomEnumerable,
{
    let mut report = SegalReport {
        arity: n,
        objects_checked: 0,
        hom_sets_checked: 0,
        failure: None,
    };
    let tuples = tuples_over(population, n);
    // Objects: the joint pushforward must be a bijection onto n-tuples.
    let mut seen = Vec::new();
    for t in &tuples {
        let image: Vec<Vec<C::Obj>> = (0..n)
            .map(|i| opcat.pushforward(&PointedMap::rho(n, i), t))
            .collect();
        let flat: Vec<C::Obj> = image.into_iter().map(|mut v| v.remove(0)).collect();
        if flat != *t {
            report.failure = Some(format!(
                "pushforwards do not recover the tuple {}",
                ObjTuple(t.clone())
            ));
            return report;
        }
        if seen.contains(&flat) {
            report.failure = Some("joint pushforward is not injective on objects".into());
            return report;
        }
        seen.push(flat);
        report.objects_checked += 1;
    }
    // Hom-sets: morphisms over id_[n]+ against products of base hom-sets.
    let id_n = PointedMap::identity(n);
    for a in &tuples {
        for b in &tuples {
            let fiber_hom = opcat.enumerate_hom_over(&id_n, a, b);
            let expected: usize = (0..n)
                .map(|i| opcat.base().enumerate_hom(&a[i], &b[i]).len())
                .product();
            if fiber_hom.len() != expected {
                report.failure = Some(format!(
                    "fiber hom {} → {} has {} morphisms, product of components has {expected}",
                    ObjTuple(a.clone()),
                    ObjTuple(b.clone()),
                    fiber_hom.len()
                ));
                return report;
            }
            // The joint ρ-pushforward must be injective (hence bijective by
            // the count above).
            let mut images: Vec<Vec<OpMorphism<C::Obj, C::Mor>>> = Vec::new();
            for m in &fiber_hom {
                let image: Vec<OpMorphism<C::Obj, C::Mor>> = (0..n)
                    .map(|i| fiber_pushforward(opcat, &PointedMap::rho(n, i), m))
                    .collect();
                if images.contains(&image) {
                    report.failure = Some(format!(
                        "joint pushforward identifies distinct fiber morphisms over {}",
                        ObjTuple(a.clone())
                    ));
                    return report;
                }
                images.push(image);
            }
            report.hom_sets_checked += 1;
        }
    }
    report
}

/// All `n`-tuples over a population, lexicographically.
pub fn tuples_over<T: Clone>(population: &[T], n: usize) -> Vec<Vec<T>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for t in &out {
            for p in population {
                let mut t2 = t.clone();
                t2.push(p.clone());
                next.push(t2);
            }
        }
        out = next;
    }
    out
}
