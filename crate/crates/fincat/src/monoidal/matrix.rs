//! Dense exact matrices over a [`Ring`], with the Kronecker product and
//! exact elimination.
//!
//! Flattening convention, fixed globally: tensor factors are flattened
//! row-major lexicographically, i.e. the basis vector `e_i ⊗ e_j` of
//! `F^a ⊗ F^b` sits at flat index `i * b + j`. Under this convention the
//! Kronecker product is strictly associative as a matrix identity.

use std::fmt;

use super::ring::Ring;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>, // row-major
}

impl<E: Clone> Matrix<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Option<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return None;
        }
        Some(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn at(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

impl<E: fmt::Display + Clone> fmt::Display for Matrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<E: fmt::Display + Clone> fmt::Debug for Matrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} {}", self.rows, self.cols, self)
    }
}

pub fn zero<R: Ring>(ring: &R, rows: usize, cols: usize) -> Matrix<R::Elem> {
    Matrix::from_fn(rows, cols, |_, _| ring.zero())
}

pub fn identity<R: Ring>(ring: &R, n: usize) -> Matrix<R::Elem> {
    Matrix::from_fn(n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
}

pub fn mat_mul<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    assert_eq!(a.cols, b.rows, "matrix shape mismatch in multiplication");
    Matrix::from_fn(a.rows, b.cols, |i, j| {
        let mut acc = ring.zero();
        for k in 0..a.cols {
            acc = ring.add(&acc, &ring.mul(a.at(i, k), b.at(k, j)));
        }
        acc
    })
}

/// Kronecker product under the row-major flattening convention:
/// `(a ⊗ b)[(i1,i2),(j1,j2)] = a[i1,j1] * b[i2,j2]` with flat row index
/// `i1 * b.rows + i2`.
pub fn kron<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    Matrix::from_fn(a.rows * b.rows, a.cols * b.cols, |i, j| {
        let (i1, i2) = (i / b.rows, i % b.rows);
        let (j1, j2) = (j / b.cols, j % b.cols);
        ring.mul(a.at(i1, j1), b.at(i2, j2))
    })
}

/// The perfect-shuffle permutation matrix `F^a ⊗ F^b → F^b ⊗ F^a`
/// sending `e_i ⊗ e_j` to `e_j ⊗ e_i`.
pub fn shuffle_braiding<R: Ring>(ring: &R, a: usize, b: usize) -> Matrix<R::Elem> {
    let mut m = zero(ring, a * b, a * b);
    for i in 0..a {
        for j in 0..b {
            m.set(j * a + i, i * b + j, ring.one());
        }
    }
    m
}

/// Permutation matrix on `F^n` induced by a permutation of basis indices:
/// column `j` carries a one in row `perm[j]`.
pub fn basis_permutation<R: Ring>(ring: &R, perm: &[usize]) -> Matrix<R::Elem> {
    let n = perm.len();
    let mut m = zero(ring, n, n);
    for (j, &i) in perm.iter().enumerate() {
        m.set(i, j, ring.one());
    }
    m
}

/// Outcome of exact invertibility analysis.
pub enum Elimination<E> {
    Invertible { inverse: Matrix<E> },
    /// A nonzero column vector `v` with `m v = 0`.
    Singular { kernel_vector: Matrix<E> },
    /// Injective but not surjective (only possible for strictly tall shapes).
    NotSurjective,
}

/// Gauss–Jordan over the (field) ring. Deterministic: pivots are chosen as
/// the first nonzero entry scanning down each column in order.
pub fn eliminate<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Elimination<R::Elem> {
    let rows = m.rows;
    let cols = m.cols;
    // Augment with the identity to read off the inverse when square.
    let mut a = m.clone();
    let mut aug = identity(ring, rows);
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let mut pivot = None;
        for i in r..rows {
            if !ring.is_zero(a.at(i, c)) {
                pivot = Some(i);
                break;
            }
        }
        let Some(p) = pivot else { continue };
        if p != r {
            for j in 0..cols {
                let (x, y) = (a.at(r, j).clone(), a.at(p, j).clone());
                a.set(r, j, y);
                a.set(p, j, x);
            }
            for j in 0..rows {
                let (x, y) = (aug.at(r, j).clone(), aug.at(p, j).clone());
                aug.set(r, j, y);
                aug.set(p, j, x);
            }
        }
        let inv = ring
            .inv(a.at(r, c))
            .expect("pivot must be a unit in a field");
        for j in 0..cols {
            a.set(r, j, ring.mul(a.at(r, j), &inv));
        }
        for j in 0..rows {
            aug.set(r, j, ring.mul(aug.at(r, j), &inv));
        }
        for i in 0..rows {
            if i != r && !ring.is_zero(a.at(i, c)) {
                let factor = a.at(i, c).clone();
                for j in 0..cols {
                    let v = ring.sub(a.at(i, j), &ring.mul(&factor, a.at(r, j)));
                    a.set(i, j, v);
                }
                for j in 0..rows {
                    let v = ring.sub(aug.at(i, j), &ring.mul(&factor, aug.at(r, j)));
                    aug.set(i, j, v);
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let rank = pivot_cols.len();
    if rank == cols && rank == rows {
        return Elimination::Invertible { inverse: aug };
    }
    if rank < cols {
        // Free column exists; construct the canonical kernel vector from the
        // first free column.
        let free = (0..cols).find(|c| !pivot_cols.contains(c)).unwrap();
        let mut v = zero(ring, cols, 1);
        v.set(free, 0, ring.one());
        for (row_idx, &pc) in pivot_cols.iter().enumerate() {
            let coeff = ring.neg(a.at(row_idx, free));
            v.set(pc, 0, coeff);
        }
        return Elimination::Singular { kernel_vector: v };
    }
    Elimination::NotSurjective
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoidal::ring::{PrimeField, Rationals};
    use proptest::prelude::*;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    /// Independent oracle: schoolbook multiplication mod p on raw nested vecs.
    fn naive_mul_mod(p: u64, a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let n = a.len();
        let k = b.len();
        let m = b[0].len();
        let mut out = vec![vec![0u64; m]; n];
        for i in 0..n {
            for j in 0..m {
                let mut acc = 0u64;
                for t in 0..k {
                    acc = (acc + a[i][t] * b[t][j]) % p;
                }
                out[i][j] = acc;
            }
        }
        out
    }

    #[test]
    fn mul_matches_oracle_on_fixed_example() {
        // g = [[1,1],[0,1]], f = [[1,0],[1,1]] over F_2.
        let ring = f2();
        let g = Matrix::from_rows(vec![vec![1, 1], vec![0, 1]]).unwrap();
        let f = Matrix::from_rows(vec![vec![1, 0], vec![1, 1]]).unwrap();
        let gf = mat_mul(&ring, &g, &f);
        let oracle = naive_mul_mod(2, &g.to_rows(), &f.to_rows());
        assert_eq!(gf.to_rows(), oracle);
        assert_eq!(gf.to_rows(), vec![vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn kron_shape_and_one_by_one() {
        let ring = f2();
        let one = identity(&ring, 1);
        let swap = Matrix::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(kron(&ring, &one, &swap), swap);
        let f = Matrix::from_rows(vec![vec![1, 1], vec![0, 1]]).unwrap();
        let fg = kron(&ring, &f, &swap);
        assert_eq!((fg.rows(), fg.cols()), (4, 4));
    }

    #[test]
    fn braiding_on_two_by_two_fixes_diagonal_pairs() {
        // Enumerating basis pairs of F_2^2 ⊗ F_2^2: (0,0) and (1,1) are fixed,
        // (0,1) and (1,0) swap.
        let ring = f2();
        let sigma = shuffle_braiding(&ring, 2, 2);
        let mut expected = zero(&ring, 4, 4);
        for i in 0..2 {
            for j in 0..2 {
                expected.set(j * 2 + i, i * 2 + j, 1);
            }
        }
        assert_eq!(sigma, expected);
        assert_eq!(*sigma.at(0, 0), 1);
        assert_eq!(*sigma.at(3, 3), 1);
        assert_eq!(*sigma.at(2, 1), 1);
        assert_eq!(*sigma.at(1, 2), 1);
    }

    #[test]
    fn singular_matrix_yields_kernel_witness() {
        // Exhaustive oracle over F_2^2: the kernel of [[1,1],[1,1]] is {0,(1,1)}.
        let ring = f2();
        let m = Matrix::from_rows(vec![vec![1, 1], vec![1, 1]]).unwrap();
        let mut kernel_oracle = vec![];
        for x in 0..2u64 {
            for y in 0..2u64 {
                if (x + y) % 2 == 0 && (x, y) != (0, 0) {
                    kernel_oracle.push(vec![x, y]);
                }
            }
        }
        assert_eq!(kernel_oracle, vec![vec![1, 1]]);
        match eliminate(&ring, &m) {
            Elimination::Singular { kernel_vector } => {
                assert_eq!(kernel_vector.to_rows(), vec![vec![1], vec![1]]);
                let prod = mat_mul(&ring, &m, &kernel_vector);
                assert!(prod.to_rows().iter().all(|r| r.iter().all(|&x| x == 0)));
            }
            _ => panic!("expected singular"),
        }
    }

    #[test]
    fn identity_inverts_to_itself() {
        let ring = f2();
        let id = identity(&ring, 3);
        match eliminate(&ring, &id) {
            Elimination::Invertible { inverse } => assert_eq!(inverse, id),
            _ => panic!("identity must be invertible"),
        }
    }

    #[test]
    fn rational_elimination_exact() {
        let q = Rationals;
        let half = q.parse("1/2").unwrap();
        let third = q.parse("1/3").unwrap();
        let m = Matrix::from_rows(vec![
            vec![half.clone(), q.one()],
            vec![q.zero(), third.clone()],
        ])
        .unwrap();
        match eliminate(&q, &m) {
            Elimination::Invertible { inverse } => {
                let prod = mat_mul(&q, &m, &inverse);
                assert_eq!(prod, identity(&q, 2));
            }
            _ => panic!("expected invertible"),
        }
    }

    fn arb_matrix(p: u64, rows: usize, cols: usize) -> impl Strategy<Value = Matrix<u64>> {
        proptest::collection::vec(0..p, rows * cols).prop_map(move |data| {
            Matrix::from_fn(rows, cols, |i, j| data[i * cols + j])
        })
    }

    proptest! {
        #[test]
        fn kron_is_strictly_associative(
            a in arb_matrix(3, 2, 2),
            b in arb_matrix(3, 1, 2),
            c in arb_matrix(3, 2, 1),
        ) {
            let ring = PrimeField::new(3).unwrap();
            let left = kron(&ring, &kron(&ring, &a, &b), &c);
            let right = kron(&ring, &a, &kron(&ring, &b, &c));
            prop_assert_eq!(left, right);
        }

        #[test]
        fn kron_interchange_with_mul(
            a in arb_matrix(2, 2, 2),
            b in arb_matrix(2, 2, 2),
            c in arb_matrix(2, 2, 2),
            d in arb_matrix(2, 2, 2),
        ) {
            // (a∘b) ⊗ (c∘d) = (a⊗c) ∘ (b⊗d)
            let ring = f2();
            let lhs = kron(&ring, &mat_mul(&ring, &a, &b), &mat_mul(&ring, &c, &d));
            let rhs = mat_mul(&ring, &kron(&ring, &a, &c), &kron(&ring, &b, &d));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn elimination_inverse_is_two_sided(m in arb_matrix(5, 3, 3)) {
            let ring = PrimeField::new(5).unwrap();
            match eliminate(&ring, &m) {
                Elimination::Invertible { inverse } => {
                    prop_assert_eq!(mat_mul(&ring, &m, &inverse), identity(&ring, 3));
                    prop_assert_eq!(mat_mul(&ring, &inverse, &m), identity(&ring, 3));
                }
                Elimination::Singular { kernel_vector } => {
                    let z = mat_mul(&ring, &m, &kernel_vector);
                    prop_assert!(z.to_rows().iter().all(|r| r.iter().all(|x| *x == 0)));
                    prop_assert!(kernel_vector.to_rows().iter().any(|r| r.iter().any(|x| *x != 0)));
                }
                Elimination::NotSurjective => prop_assert!(false, "square matrices are singular or invertible"),
            }
        }
    }
}
