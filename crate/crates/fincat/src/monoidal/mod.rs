//! Exact, finitely computable symmetric monoidal categories.
//!
//! A category instance is a value: it carries the scalar ring or other
//! context, and objects/morphisms are plain data manipulated through it.
//! Morphism equality is structural equality of exact data, which is what
//! makes "this diagram commutes" decidable. The shipped instances are
//! strict: associators and unitors are identities, so all diagram checks in
//! the rest of the crate are plain equality checks.

pub mod describe;
pub mod finset;
pub mod laws;
pub mod matcat;
pub mod matrix;
pub mod ring;
pub mod table;

use std::fmt;
use std::hash::Hash;

use crate::error::FincatError;

/// A category whose objects and morphisms are finite data with decidable
/// equality, computable composition, and computable identities.
pub trait ComputableCategory {
    type Obj: Clone + Eq + Hash + fmt::Debug + fmt::Display;
    type Mor: Clone + Eq + Hash + fmt::Debug + fmt::Display;

    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn cod(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, a: &Self::Obj) -> Self::Mor;

    /// `g ∘ f`, defined exactly when `cod(f) = dom(g)`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor, FincatError> {
        if self.cod(f) != self.dom(g) {
            return Err(FincatError::compose_mismatch(
                f,
                g,
                self.cod(f),
                self.dom(g),
            ));
        }
        Ok(self.compose_unchecked(g, f))
    }

    /// Composition after the boundary check has already been done.
    fn compose_unchecked(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor;

    /// Validate that a morphism's internal data is consistent with this
    /// instance (entry ranges, table bounds, recorded shapes).
    fn validate_mor(&self, f: &Self::Mor) -> Result<(), FincatError>;
}

/// Strict symmetric monoidal structure on a computable category.
pub trait SymmetricMonoidalCategory: ComputableCategory {
    fn unit_object(&self) -> Self::Obj;
    fn tensor_obj(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj;

    /// `f ⊗ g`. Fails only when the operands are not valid morphisms of this
    /// instance (the cross-instance case).
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor, FincatError> {
        self.validate_mor(f)?;
        self.validate_mor(g)?;
        Ok(self.tensor_mor_unchecked(f, g))
    }

    fn tensor_mor_unchecked(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;

    /// The braiding `σ_{A,B}: A⊗B → B⊗A`. Applying it twice is the identity.
    fn braiding(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor;

    /// Tensor a list of objects in the given order; the empty list yields
    /// the unit object.
    fn tensor_all_obj(&self, objs: &[Self::Obj]) -> Self::Obj {
        objs.iter()
            .fold(self.unit_object(), |acc, o| self.tensor_obj(&acc, o))
    }

    /// Tensor a list of morphisms in the given order; the empty list yields
    /// the identity of the unit object.
    fn tensor_all_mor(&self, mors: &[Self::Mor]) -> Self::Mor {
        let mut acc = self.identity(&self.unit_object());
        for m in mors {
            acc = self.tensor_mor_unchecked(&acc, m);
        }
        acc
    }

    /// The permutation-of-factors isomorphism
    /// `A_0 ⊗ ... ⊗ A_{n-1} → A_{perm[0]} ⊗ ... ⊗ A_{perm[n-1]}`,
    /// built from adjacent braidings. `perm[t]` names which original factor
    /// lands in position `t` of the target.
    fn permute_factors(&self, objs: &[Self::Obj], perm: &[usize]) -> Self::Mor {
        assert_eq!(objs.len(), perm.len());
        if perm.windows(2).all(|w| w[0] < w[1]) {
            return self.identity(&self.tensor_all_obj(objs));
        }
        // Bubble the desired sequence into place with adjacent transpositions.
        let mut current: Vec<usize> = (0..objs.len()).collect();
        let mut acc = self.identity(&self.tensor_all_obj(objs));
        for target_pos in 0..perm.len() {
            let src_pos = current
                .iter()
                .position(|&x| x == perm[target_pos])
                .expect("perm must be a permutation");
            // Move the factor left one swap at a time.
            for k in (target_pos..src_pos).rev() {
                let mut parts: Vec<Self::Mor> = Vec::with_capacity(objs.len() - 1);
                for (idx, &orig) in current.iter().enumerate() {
                    if idx == k {
                        let a = &objs[current[k]];
                        let b = &objs[current[k + 1]];
                        parts.push(self.braiding(a, b));
                    } else if idx == k + 1 {
                        continue;
                    } else {
                        parts.push(self.identity(&objs[orig]));
                    }
                }
                let step = self.tensor_all_mor(&parts);
                acc = self.compose_unchecked(&step, &acc);
                current.swap(k, k + 1);
            }
        }
        acc
    }
}

/// Invertibility decisions with auditable witnesses.
///
/// Witnesses are themselves morphisms of the instance (kernel vectors are
/// morphisms out of the unit object, colliding elements are points), so a
/// failing report can be re-fed as input data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Invertibility<M> {
    Invertible { inverse: M },
    NotInvertible { witness: InvertibilityWitness<M> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvertibilityWitness<M> {
    /// Shapes already rule invertibility out.
    ShapeMismatch { detail: String },
    /// A nonzero vector killed by the morphism.
    KernelVector { vector: M },
    /// Two distinct points with the same image.
    Collision { first: M, second: M },
    /// A point of the codomain that is never hit.
    Missed { point: M },
}

impl<M> Invertibility<M> {
    pub fn is_invertible(&self) -> bool {
        matches!(self, Invertibility::Invertible { .. })
    }

    pub fn inverse(&self) -> Option<&M> {
        match self {
            Invertibility::Invertible { inverse } => Some(inverse),
            Invertibility::NotInvertible { .. } => None,
        }
    }
}

impl<M: fmt::Display> fmt::Display for InvertibilityWitness<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvertibilityWitness::ShapeMismatch { detail } => write!(f, "shape mismatch: {detail}"),
            InvertibilityWitness::KernelVector { vector } => {
                write!(f, "nonzero kernel vector {vector}")
            }
            InvertibilityWitness::Collision { first, second } => {
                write!(f, "collision: {first} and {second} have the same image")
            }
            InvertibilityWitness::Missed { point } => write!(f, "never hits {point}"),
        }
    }
}

/// Instances that can decide invertibility exactly.
pub trait DecideInvertible: ComputableCategory {
    fn is_invertible(&self, f: &Self::Mor) -> Invertibility<Self::Mor>;
}

/// Instances whose hom-sets can be exhaustively enumerated (for the
/// enumeration-based audits: Segal conditions, cocartesian criteria,
/// uniqueness searches).
pub trait HomEnumerable: ComputableCategory {
    fn enumerate_hom(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::Mor>;

    /// Size of the hom-set, saturating at `usize::MAX`.
    fn hom_size(&self, a: &Self::Obj, b: &Self::Obj) -> usize {
        self.enumerate_hom(a, b).len()
    }

    /// The `index`-th morphism in enumeration order, without materializing
    /// the whole hom-set when the instance can do better.
    fn hom_element(&self, a: &Self::Obj, b: &Self::Obj, index: usize) -> Option<Self::Mor> {
        self.enumerate_hom(a, b).into_iter().nth(index)
    }
}

/// A category with finitely many objects, enumerable end to end; what the
/// nerve construction consumes.
pub trait FiniteCategory: ComputableCategory + HomEnumerable {
    fn objects(&self) -> Vec<Self::Obj>;

    fn all_morphisms(&self) -> Vec<Self::Mor> {
        let objs = self.objects();
        let mut out = Vec::new();
        for a in &objs {
            for b in &objs {
                out.extend(self.enumerate_hom(a, b));
            }
        }
        out
    }
}
