//! The matrix instance: objects are dimensions, morphisms are exact
//! matrices over a prime field or the rationals, tensor is the Kronecker
//! product, braiding is the perfect shuffle.

use std::fmt;

use super::matrix::{
    self, eliminate, identity, kron, mat_mul, shuffle_braiding, Elimination, Matrix,
};
use super::ring::{FiniteRing, Ring};
use super::{
    ComputableCategory, DecideInvertible, HomEnumerable, Invertibility, InvertibilityWitness,
    SymmetricMonoidalCategory,
};
use crate::error::FincatError;

#[derive(Clone, Debug)]
pub struct MatrixCategory<R: Ring> {
    ring: R,
}

/// Objects: non-negative dimensions, displayed like `F_2^3`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Dim(pub usize);

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {}", self.0)
    }
}

impl<R: Ring> MatrixCategory<R> {
    pub fn new(ring: R) -> Self {
        MatrixCategory { ring }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// A morphism `dim m → dim n` is an `n × m` matrix acting on column
    /// vectors.
    pub fn mor_from_rows(&self, rows: Vec<Vec<R::Elem>>) -> Option<Matrix<R::Elem>> {
        Matrix::from_rows(rows)
    }
}

impl<R: Ring> ComputableCategory for MatrixCategory<R> {
    type Obj = Dim;
    type Mor = Matrix<R::Elem>;

    fn dom(&self, f: &Self::Mor) -> Dim {
        Dim(f.cols())
    }
    fn cod(&self, f: &Self::Mor) -> Dim {
        Dim(f.rows())
    }
    fn identity(&self, a: &Dim) -> Self::Mor {
        identity(&self.ring, a.0)
    }
    fn compose_unchecked(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor {
        mat_mul(&self.ring, g, f)
    }
    fn validate_mor(&self, f: &Self::Mor) -> Result<(), FincatError> {
        // Canonical-form check (e.g. entries reduced mod p) catches data from
        // a different instance of the same element type.
        for i in 0..f.rows() {
            for j in 0..f.cols() {
                let e = f.at(i, j);
                let canon = self.ring.add(e, &self.ring.zero());
                if canon != *e {
                    return Err(FincatError::InstanceMismatch(format!(
                        "entry {e} at ({i},{j}) is not canonical for {}",
                        self.ring.tag()
                    )));
                }
            }
        }
        Ok(())
    }
}

impl<R: Ring> SymmetricMonoidalCategory for MatrixCategory<R> {
    fn unit_object(&self) -> Dim {
        Dim(1)
    }
    fn tensor_obj(&self, a: &Dim, b: &Dim) -> Dim {
        Dim(a.0 * b.0)
    }
    fn tensor_mor_unchecked(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor {
        kron(&self.ring, f, g)
    }
    fn braiding(&self, a: &Dim, b: &Dim) -> Self::Mor {
        shuffle_braiding(&self.ring, a.0, b.0)
    }
}

impl<R: Ring> DecideInvertible for MatrixCategory<R> {
    fn is_invertible(&self, f: &Self::Mor) -> Invertibility<Self::Mor> {
        if f.rows() != f.cols() {
            // A strictly wide matrix still has a kernel vector; surface it.
            if f.cols() > f.rows() {
                if let Elimination::Singular { kernel_vector } = eliminate(&self.ring, f) {
                    return Invertibility::NotInvertible {
                        witness: InvertibilityWitness::KernelVector {
                            vector: kernel_vector,
                        },
                    };
                }
            }
            return Invertibility::NotInvertible {
                witness: InvertibilityWitness::ShapeMismatch {
                    detail: format!("{}x{} is not square", f.rows(), f.cols()),
                },
            };
        }
        match eliminate(&self.ring, f) {
            Elimination::Invertible { inverse } => Invertibility::Invertible { inverse },
            Elimination::Singular { kernel_vector } => Invertibility::NotInvertible {
                witness: InvertibilityWitness::KernelVector {
                    vector: kernel_vector,
                },
            },
            Elimination::NotSurjective => unreachable!("square matrices have full row rank or a kernel"),
        }
    }
}

impl<R: FiniteRing> HomEnumerable for MatrixCategory<R> {
    fn hom_size(&self, a: &Dim, b: &Dim) -> usize {
        let q = self.ring.elements().len();
        let mut size = 1usize;
        for _ in 0..a.0 * b.0 {
            size = size.saturating_mul(q);
        }
        size
    }

    fn hom_element(&self, a: &Dim, b: &Dim, index: usize) -> Option<Self::Mor> {
        if index >= self.hom_size(a, b) {
            return None;
        }
        let elems = self.ring.elements();
        let q = elems.len();
        let mut digits = Vec::with_capacity(a.0 * b.0);
        let mut rest = index;
        for _ in 0..a.0 * b.0 {
            digits.push(rest % q);
            rest /= q;
        }
        // Cell order matches `enumerate_hom`: the odometer increments cell
        // (i*a + j) with position 0 fastest.
        Some(Matrix::from_fn(b.0, a.0, |i, j| {
            elems[digits[i * a.0 + j]].clone()
        }))
    }

    fn enumerate_hom(&self, a: &Dim, b: &Dim) -> Vec<Self::Mor> {
        let elems = self.ring.elements();
        let cells = a.0 * b.0;
        let mut out = Vec::new();
        let mut counter = vec![0usize; cells];
        loop {
            let snapshot = counter.clone();
            out.push(Matrix::from_fn(b.0, a.0, |i, j| {
                elems[snapshot[i * a.0 + j]].clone()
            }));
            // Odometer increment.
            let mut pos = 0;
            loop {
                if pos == cells {
                    return out;
                }
                counter[pos] += 1;
                if counter[pos] < elems.len() {
                    break;
                }
                counter[pos] = 0;
                pos += 1;
            }
        }
    }
}

/// Column vector convenience for witnesses and unit maps.
pub fn column<R: Ring>(ring: &R, entries: &[R::Elem]) -> Matrix<R::Elem> {
    let _ = ring;
    Matrix::from_fn(entries.len(), 1, |i, _| entries[i].clone())
}

/// Standard basis column `e_i` of `F^n`.
pub fn basis_column<R: Ring>(ring: &R, n: usize, i: usize) -> Matrix<R::Elem> {
    Matrix::from_fn(n, 1, |r, _| if r == i { ring.one() } else { ring.zero() })
}

pub use matrix::basis_permutation;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoidal::ring::PrimeField;

    fn cat() -> MatrixCategory<PrimeField> {
        MatrixCategory::new(PrimeField::new(2).unwrap())
    }

    #[test]
    fn compose_respects_boundaries() {
        let c = cat();
        let g = c.mor_from_rows(vec![vec![1, 1], vec![0, 1]]).unwrap();
        let f = c.mor_from_rows(vec![vec![1, 0], vec![1, 1]]).unwrap();
        let gf = c.compose(&g, &f).unwrap();
        assert_eq!(gf.to_rows(), vec![vec![0, 1], vec![1, 1]]);

        let wide = c.mor_from_rows(vec![vec![1, 0, 1]]).unwrap();
        let err = c.compose(&g, &wide).unwrap_err();
        assert!(matches!(err, FincatError::ComposeMismatch { .. }));
    }

    #[test]
    fn unit_laws_hold() {
        let c = cat();
        let f = c.mor_from_rows(vec![vec![1, 0], vec![1, 1]]).unwrap();
        let id2 = c.identity(&Dim(2));
        assert_eq!(c.compose(&id2, &f).unwrap(), f);
        assert_eq!(c.compose(&f, &id2).unwrap(), f);
    }

    #[test]
    fn tensor_with_unit_is_identity_on_the_nose() {
        let c = cat();
        let f = c.mor_from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        let id_unit = c.identity(&c.unit_object());
        assert_eq!(c.tensor_mor(&id_unit, &f).unwrap(), f);
        assert_eq!(c.tensor_mor(&f, &id_unit).unwrap(), f);
        assert_eq!(c.tensor_obj(&c.unit_object(), &Dim(5)), Dim(5));
    }

    #[test]
    fn braiding_is_an_involution() {
        let c = cat();
        let s = c.braiding(&Dim(2), &Dim(3));
        let s_back = c.braiding(&Dim(3), &Dim(2));
        let round = c.compose(&s_back, &s).unwrap();
        assert_eq!(round, c.identity(&Dim(6)));
        // σ with the unit object is the identity, strictly.
        assert_eq!(c.braiding(&c.unit_object(), &Dim(4)), c.identity(&Dim(4)));
    }

    #[test]
    fn non_canonical_entries_are_flagged_as_foreign() {
        let c = cat();
        let foreign = Matrix::from_rows(vec![vec![2u64]]).unwrap(); // entry from F_3, say
        assert!(c.validate_mor(&foreign).is_err());
        assert!(c.tensor_mor(&foreign, &foreign).is_err());
    }

    #[test]
    fn invertibility_decisions_carry_witnesses() {
        let c = cat();
        let id = c.identity(&Dim(2));
        assert_eq!(
            c.is_invertible(&id),
            Invertibility::Invertible { inverse: id.clone() }
        );
        let m = c.mor_from_rows(vec![vec![1, 1], vec![1, 1]]).unwrap();
        match c.is_invertible(&m) {
            Invertibility::NotInvertible {
                witness: InvertibilityWitness::KernelVector { vector },
            } => {
                assert_eq!(vector.to_rows(), vec![vec![1], vec![1]]);
            }
            other => panic!("expected kernel witness, got {other:?}"),
        }
        let tall = c.mor_from_rows(vec![vec![1], vec![0]]).unwrap();
        match c.is_invertible(&tall) {
            Invertibility::NotInvertible {
                witness: InvertibilityWitness::ShapeMismatch { .. },
            } => {}
            other => panic!("expected shape witness, got {other:?}"),
        }
    }

    #[test]
    fn hom_enumeration_has_field_size_to_the_cells() {
        let c = cat();
        assert_eq!(c.enumerate_hom(&Dim(2), &Dim(2)).len(), 16);
        assert_eq!(c.enumerate_hom(&Dim(0), &Dim(2)).len(), 1);
        assert_eq!(c.enumerate_hom(&Dim(3), &Dim(0)).len(), 1);
    }

    #[test]
    fn permute_factors_matches_direct_permutation_matrix() {
        // Oracle: enumerate flattened basis triples directly.
        let c = cat();
        let objs = [Dim(2), Dim(2), Dim(2)];
        let perm = [2usize, 0, 1];
        let got = c.permute_factors(&objs, &perm);
        // Basis (i0,i1,i2) at flat 4*i0+2*i1+i2 maps to (i2,i0,i1).
        let mut table = vec![0usize; 8];
        for i0 in 0..2 {
            for i1 in 0..2 {
                for i2 in 0..2 {
                    let src = 4 * i0 + 2 * i1 + i2;
                    let dst = 4 * i2 + 2 * i0 + i1;
                    table[src] = dst;
                }
            }
        }
        let expected = basis_permutation(c.ring(), &table);
        assert_eq!(got, expected);
    }
}
