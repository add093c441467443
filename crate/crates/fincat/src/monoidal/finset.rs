//! The finite-set instance: objects are canonical ranges `{0..n}`, morphisms
//! are total functions as lookup tables, monoidal product is the cartesian
//! product with lexicographic flattening (pair `(i,j)` of `A×B` sits at flat
//! index `i * |B| + j`).

use std::fmt;

use super::{
    ComputableCategory, DecideInvertible, HomEnumerable, Invertibility, InvertibilityWitness,
    SymmetricMonoidalCategory,
};
use crate::error::FincatError;

#[derive(Clone, Debug, Default)]
pub struct FinSetCategory;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SetSize(pub usize);

impl fmt::Display for SetSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "set of size {}", self.0)
    }
}

/// A total function `{0..dom} → {0..cod}` as a lookup table.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FinFunction {
    pub dom: usize,
    pub cod: usize,
    pub table: Vec<usize>,
}

impl FinFunction {
    pub fn new(dom: usize, cod: usize, table: Vec<usize>) -> Result<Self, FincatError> {
        if table.len() != dom {
            return Err(FincatError::MalformedMorphism(format!(
                "table has {} entries for a domain of size {dom}",
                table.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= cod) {
            return Err(FincatError::MalformedMorphism(format!(
                "table value {bad} is outside the codomain of size {cod}"
            )));
        }
        Ok(FinFunction { dom, cod, table })
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }
}

impl fmt::Display for FinFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.table.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}→{v}")?;
        }
        write!(f, "]: {} -> {}", self.dom, self.cod)
    }
}

impl ComputableCategory for FinSetCategory {
    type Obj = SetSize;
    type Mor = FinFunction;

    fn dom(&self, f: &FinFunction) -> SetSize {
        SetSize(f.dom)
    }
    fn cod(&self, f: &FinFunction) -> SetSize {
        SetSize(f.cod)
    }
    fn identity(&self, a: &SetSize) -> FinFunction {
        FinFunction {
            dom: a.0,
            cod: a.0,
            table: (0..a.0).collect(),
        }
    }
    fn compose_unchecked(&self, g: &FinFunction, f: &FinFunction) -> FinFunction {
        FinFunction {
            dom: f.dom,
            cod: g.cod,
            table: f.table.iter().map(|&x| g.table[x]).collect(),
        }
    }
    fn validate_mor(&self, f: &FinFunction) -> Result<(), FincatError> {
        FinFunction::new(f.dom, f.cod, f.table.clone()).map(|_| ())
    }
}

impl SymmetricMonoidalCategory for FinSetCategory {
    fn unit_object(&self) -> SetSize {
        SetSize(1)
    }
    fn tensor_obj(&self, a: &SetSize, b: &SetSize) -> SetSize {
        SetSize(a.0 * b.0)
    }
    fn tensor_mor_unchecked(&self, f: &FinFunction, g: &FinFunction) -> FinFunction {
        let dom = f.dom * g.dom;
        let cod = f.cod * g.cod;
        let mut table = Vec::with_capacity(dom);
        for i in 0..f.dom {
            for j in 0..g.dom {
                table.push(f.table[i] * g.cod + g.table[j]);
            }
        }
        FinFunction { dom, cod, table }
    }
    fn braiding(&self, a: &SetSize, b: &SetSize) -> FinFunction {
        let mut table = vec![0; a.0 * b.0];
        for i in 0..a.0 {
            for j in 0..b.0 {
                table[i * b.0 + j] = j * a.0 + i;
            }
        }
        FinFunction {
            dom: a.0 * b.0,
            cod: a.0 * b.0,
            table,
        }
    }
}

impl DecideInvertible for FinSetCategory {
    fn is_invertible(&self, f: &FinFunction) -> Invertibility<FinFunction> {
        let point = |set: usize, x: usize| FinFunction {
            dom: 1,
            cod: set,
            table: vec![x],
        };
        if f.dom != f.cod {
            return Invertibility::NotInvertible {
                witness: InvertibilityWitness::ShapeMismatch {
                    detail: format!("sizes differ: {} vs {}", f.dom, f.cod),
                },
            };
        }
        let mut seen: Vec<Option<usize>> = vec![None; f.cod];
        for (x, &y) in f.table.iter().enumerate() {
            if let Some(prev) = seen[y] {
                return Invertibility::NotInvertible {
                    witness: InvertibilityWitness::Collision {
                        first: point(f.dom, prev),
                        second: point(f.dom, x),
                    },
                };
            }
            seen[y] = Some(x);
        }
        if let Some(miss) = seen.iter().position(Option::is_none) {
            return Invertibility::NotInvertible {
                witness: InvertibilityWitness::Missed {
                    point: point(f.cod, miss),
                },
            };
        }
        let mut inv = vec![0; f.dom];
        for (x, &y) in f.table.iter().enumerate() {
            inv[y] = x;
        }
        Invertibility::Invertible {
            inverse: FinFunction {
                dom: f.cod,
                cod: f.dom,
                table: inv,
            },
        }
    }
}

impl HomEnumerable for FinSetCategory {
    fn hom_size(&self, a: &SetSize, b: &SetSize) -> usize {
        if a.0 == 0 {
            return 1;
        }
        let mut size = 1usize;
        for _ in 0..a.0 {
            size = size.saturating_mul(b.0);
        }
        size
    }

    fn hom_element(&self, a: &SetSize, b: &SetSize, index: usize) -> Option<FinFunction> {
        if index >= self.hom_size(a, b) {
            return None;
        }
        let mut table = Vec::with_capacity(a.0);
        let mut rest = index;
        for _ in 0..a.0 {
            table.push(rest % b.0);
            rest /= b.0;
        }
        Some(FinFunction {
            dom: a.0,
            cod: b.0,
            table,
        })
    }

    fn enumerate_hom(&self, a: &SetSize, b: &SetSize) -> Vec<FinFunction> {
        if a.0 == 0 {
            return vec![FinFunction {
                dom: 0,
                cod: b.0,
                table: vec![],
            }];
        }
        if b.0 == 0 {
            return vec![]; // no map from a nonempty set to the empty set
        }
        let mut out = Vec::new();
        let mut table = vec![0usize; a.0];
        loop {
            out.push(FinFunction {
                dom: a.0,
                cod: b.0,
                table: table.clone(),
            });
            let mut pos = 0;
            loop {
                if pos == a.0 {
                    return out;
                }
                table[pos] += 1;
                if table[pos] < b.0 {
                    break;
                }
                table[pos] = 0;
                pos += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braiding_on_two_by_three_is_the_transposition_table() {
        // Oracle: enumerate the 6 pairs of {0,1}×{0,1,2} directly.
        let c = FinSetCategory;
        let sigma = c.braiding(&SetSize(2), &SetSize(3));
        let mut expected = vec![0usize; 6];
        for i in 0..2 {
            for j in 0..3 {
                expected[i * 3 + j] = j * 2 + i;
            }
        }
        assert_eq!(sigma.table, expected);
        let back = c.braiding(&SetSize(3), &SetSize(2));
        assert_eq!(c.compose(&back, &sigma).unwrap(), c.identity(&SetSize(6)));
    }

    #[test]
    fn constant_function_yields_collision_witness() {
        let c = FinSetCategory;
        let constant = FinFunction::new(2, 2, vec![0, 0]).unwrap();
        match c.is_invertible(&constant) {
            Invertibility::NotInvertible {
                witness: InvertibilityWitness::Collision { first, second },
            } => {
                assert_eq!(first.table, vec![0]);
                assert_eq!(second.table, vec![1]);
            }
            other => panic!("expected collision, got {other:?}"),
        }
    }

    #[test]
    fn bijection_inverts() {
        let c = FinSetCategory;
        let cycle = FinFunction::new(3, 3, vec![1, 2, 0]).unwrap();
        match c.is_invertible(&cycle) {
            Invertibility::Invertible { inverse } => {
                assert_eq!(inverse.table, vec![2, 0, 1]);
            }
            other => panic!("expected invertible, got {other:?}"),
        }
    }

    #[test]
    fn hom_enumeration_counts() {
        let c = FinSetCategory;
        assert_eq!(c.enumerate_hom(&SetSize(2), &SetSize(3)).len(), 9);
        assert_eq!(c.enumerate_hom(&SetSize(0), &SetSize(3)).len(), 1);
        assert_eq!(c.enumerate_hom(&SetSize(2), &SetSize(0)).len(), 0);
    }

    #[test]
    fn out_of_range_table_is_rejected() {
        assert!(FinFunction::new(2, 2, vec![0, 2]).is_err());
        assert!(FinFunction::new(2, 2, vec![0]).is_err());
    }
}
