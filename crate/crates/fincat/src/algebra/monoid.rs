//! Finite monoid and group tables, their linearizations to group bialgebras
//! `F_p[M]`, and the cartesian bialgebra of a monoid object in finite sets.
//!
//! Linearization is the strong monoidal functor from finite sets to
//! matrices sending a set to the free module on it; it preserves bialgebra
//! data, and it sends monoid objects to monoid bialgebras with the diagonal
//! comultiplication and the all-ones counit.

use std::fmt;

use crate::error::FincatError;
use crate::monoidal::finset::{FinFunction, FinSetCategory, SetSize};
use crate::monoidal::matcat::{Dim, MatrixCategory};
use crate::monoidal::matrix::{zero, Matrix};
use crate::monoidal::ring::Ring;
use crate::monoidal::SymmetricMonoidalCategory;

use super::structures::{AlgebraStructure, BialgebraPresentation, CoalgebraStructure};

/// A finite monoid given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonoidTable {
    pub names: Vec<String>,
    /// `table[a][b]` is the index of `a·b`.
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

impl fmt::Display for MonoidTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "monoid of order {} with table {:?}", self.order(), self.table)
    }
}

impl MonoidTable {
    /// Validates totality, the identity element, and associativity.
    pub fn new(
        names: Vec<String>,
        table: Vec<Vec<usize>>,
        identity: usize,
    ) -> Result<Self, FincatError> {
        let n = names.len();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(FincatError::InvalidInput(format!(
                "multiplication table must be {n}x{n}"
            )));
        }
        if let Some(&bad) = table.iter().flatten().find(|&&v| v >= n) {
            return Err(FincatError::InvalidInput(format!(
                "table entry {bad} out of range"
            )));
        }
        if identity >= n {
            return Err(FincatError::InvalidInput("identity index out of range".into()));
        }
        let m = MonoidTable {
            names,
            table,
            identity,
        };
        for a in 0..n {
            if m.table[m.identity][a] != a || m.table[a][m.identity] != a {
                return Err(FincatError::InvalidInput(format!(
                    "element {} is not a two-sided identity",
                    m.names[m.identity]
                )));
            }
        }
        if let Some((a, b, c)) = m.associativity_violation() {
            return Err(FincatError::InvalidInput(format!(
                "not associative at ({}, {}, {})",
                m.names[a], m.names[b], m.names[c]
            )));
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.order();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]] {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// Inversion table when every element has a two-sided inverse.
    pub fn inverses(&self) -> Option<Vec<usize>> {
        let n = self.order();
        let mut inv = Vec::with_capacity(n);
        for a in 0..n {
            let found = (0..n).find(|&b| {
                self.table[a][b] == self.identity && self.table[b][a] == self.identity
            })?;
            inv.push(found);
        }
        Some(inv)
    }

    pub fn is_group(&self) -> bool {
        self.inverses().is_some()
    }

    /// The cyclic group of order `n`.
    pub fn cyclic(n: usize) -> Self {
        let names = (0..n)
            .map(|i| if i == 0 { "e".to_string() } else { format!("g{i}") })
            .collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        MonoidTable::new(names, table, 0).expect("cyclic groups are monoids")
    }

    /// The symmetric group on three letters, elements as permutations of
    /// `{0,1,2}` in lexicographic order.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let names = perms
            .iter()
            .map(|p| format!("({}{}{})", p[0], p[1], p[2]))
            .collect();
        let index = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
        // (a·b)(x) = a(b(x)): apply b first.
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| index(&[a[b[0]], a[b[1]], a[b[2]]]))
                    .collect()
            })
            .collect();
        MonoidTable::new(names, table, 0).expect("S_3 is a group")
    }

    /// The idempotent monoid `{e, x | x² = x}`.
    pub fn idempotent2() -> Self {
        MonoidTable::new(
            vec!["e".into(), "x".into()],
            vec![vec![0, 1], vec![1, 1]],
            0,
        )
        .expect("the idempotent monoid is a monoid")
    }

    /// Saturating addition on `{0, 1, …, n-1}`: a truncation of the natural
    /// numbers under addition.
    pub fn truncated_addition(n: usize) -> Self {
        let names = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b).min(n - 1)).collect())
            .collect();
        MonoidTable::new(names, table, 0).expect("truncated addition is associative")
    }

    /// Canonical form under relabelling (identity stays fixed): the
    /// lexicographically least table over all permutations.
    pub fn canonical_form(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let others: Vec<usize> = (0..n).filter(|&i| i != self.identity).collect();
        let mut best: Option<Vec<Vec<usize>>> = None;
        for perm in permutations_of(&others) {
            // old index -> new index; identity goes to 0
            let mut relabel = vec![0usize; n];
            relabel[self.identity] = 0;
            for (new_minus_one, &old) in perm.iter().enumerate() {
                relabel[old] = new_minus_one + 1;
            }
            let mut new_table = vec![vec![0usize; n]; n];
            for a in 0..n {
                for b in 0..n {
                    new_table[relabel[a]][relabel[b]] = relabel[self.table[a][b]];
                }
            }
            if best.as_ref().map_or(true, |b| new_table < *b) {
                best = Some(new_table);
            }
        }
        best.unwrap_or_default()
    }
}

fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations_of(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

/// All monoid tables of the given order with the identity fixed at index 0.
pub fn enumerate_monoids(order: usize) -> Vec<MonoidTable> {
    assert!(order >= 1);
    let names: Vec<String> = (0..order).map(|i| format!("a{i}")).collect();
    let free_cells: Vec<(usize, usize)> = (1..order)
        .flat_map(|a| (1..order).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    let mut assignment = vec![0usize; free_cells.len()];
    loop {
        let mut table = vec![vec![0usize; order]; order];
        for a in 0..order {
            table[0][a] = a;
            table[a][0] = a;
        }
        for (idx, &(a, b)) in free_cells.iter().enumerate() {
            table[a][b] = assignment[idx];
        }
        if let Ok(m) = MonoidTable::new(names.clone(), table, 0) {
            out.push(m);
        }
        let mut pos = 0;
        loop {
            if pos == assignment.len() {
                return out;
            }
            assignment[pos] += 1;
            if assignment[pos] < order {
                break;
            }
            assignment[pos] = 0;
            pos += 1;
        }
    }
}

/// Deduplicate monoid tables up to isomorphism.
pub fn up_to_isomorphism(monoids: Vec<MonoidTable>) -> Vec<MonoidTable> {
    let mut seen: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut out = Vec::new();
    for m in monoids {
        let canon = m.canonical_form();
        if !seen.contains(&canon) {
            seen.push(canon);
            out.push(m);
        }
    }
    out
}

/// The monoid bialgebra `F_p[M]`: basis indexed by elements, multiplication
/// from the table, diagonal comultiplication, all-ones counit.
pub fn monoid_bialgebra<R: Ring>(
    cat: &MatrixCategory<R>,
    monoid: &MonoidTable,
) -> BialgebraPresentation<MatrixCategory<R>> {
    let ring = cat.ring().clone();
    let n = monoid.order();
    let mut mul = zero(&ring, n, n * n);
    for a in 0..n {
        for b in 0..n {
            mul.set(monoid.mul(a, b), a * n + b, ring.one());
        }
    }
    let mut unit = zero(&ring, n, 1);
    unit.set(monoid.identity, 0, ring.one());
    let mut comul = zero(&ring, n * n, n);
    for a in 0..n {
        comul.set(a * n + a, a, ring.one());
    }
    let counit = Matrix::from_fn(1, n, |_, _| ring.one());
    let algebra = AlgebraStructure::new(cat, Dim(n), mul, unit, monoid.is_commutative())
        .expect("shapes by construction");
    let coalgebra =
        CoalgebraStructure::new(cat, Dim(n), comul, counit).expect("shapes by construction");
    BialgebraPresentation::new(algebra, coalgebra, None).expect("same carrier")
}

/// Linearize a group: the bialgebra `F_p[G]` together with the permutation
/// matrix of group inversion (the expected antipode). Refuses monoids
/// without inverses.
pub fn linearize_group<R: Ring>(
    cat: &MatrixCategory<R>,
    group: &MonoidTable,
) -> Result<(BialgebraPresentation<MatrixCategory<R>>, Matrix<R::Elem>), FincatError> {
    let Some(inverses) = group.inverses() else {
        let missing = (0..group.order())
            .find(|&a| {
                !(0..group.order()).any(|b| {
                    group.table[a][b] == group.identity && group.table[b][a] == group.identity
                })
            })
            .expect("a non-group has an element without a two-sided inverse");
        return Err(FincatError::Precondition(format!(
            "table is not a group: `{}` has no inverse",
            group.names[missing]
        )));
    };
    let ring = cat.ring().clone();
    let n = group.order();
    let mut inversion = zero(&ring, n, n);
    for (a, &ai) in inverses.iter().enumerate() {
        inversion.set(ai, a, ring.one());
    }
    Ok((monoid_bialgebra(cat, group), inversion))
}

/// The cartesian bialgebra of a monoid object in finite sets: diagonal
/// comultiplication, terminal counit.
pub fn finset_monoid_bialgebra(
    monoid: &MonoidTable,
) -> BialgebraPresentation<FinSetCategory> {
    let cat = FinSetCategory;
    let n = monoid.order();
    let mul = FinFunction::new(
        n * n,
        n,
        (0..n * n).map(|i| monoid.mul(i / n, i % n)).collect(),
    )
    .expect("total by construction");
    let unit = FinFunction::new(1, n, vec![monoid.identity]).expect("point");
    let comul = FinFunction::new(n, n * n, (0..n).map(|a| a * n + a).collect()).expect("diagonal");
    let counit = FinFunction::new(n, 1, vec![0; n]).expect("terminal");
    let algebra = AlgebraStructure::new(
        &cat,
        SetSize(n),
        mul,
        unit,
        monoid.is_commutative(),
    )
    .expect("shapes by construction");
    let coalgebra =
        CoalgebraStructure::new(&cat, SetSize(n), comul, counit).expect("shapes by construction");
    BialgebraPresentation::new(algebra, coalgebra, None).expect("same carrier")
}

/// Inversion of a group as a finite-set morphism.
pub fn finset_inversion(group: &MonoidTable) -> Result<FinFunction, FincatError> {
    let inverses = group
        .inverses()
        .ok_or_else(|| FincatError::Precondition("not a group".into()))?;
    FinFunction::new(group.order(), group.order(), inverses)
}

/// The linearization functor on objects/morphisms: a finite set becomes the
/// free module on it, a function becomes its permutation-style 0/1 matrix.
pub fn linearize_function<R: Ring>(
    cat: &MatrixCategory<R>,
    f: &FinFunction,
) -> Matrix<R::Elem> {
    let ring = cat.ring().clone();
    let mut m = zero(&ring, f.cod, f.dom);
    for x in 0..f.dom {
        m.set(f.apply(x), x, ring.one());
    }
    m
}

/// Linearization is strong monoidal: it takes tensor products to Kronecker
/// products and the braiding to the shuffle, exactly. Spot-checkable on any
/// pair of functions.
pub fn linearization_is_strong_monoidal<R: Ring>(
    cat: &MatrixCategory<R>,
    f: &FinFunction,
    g: &FinFunction,
) -> bool {
    let fs = FinSetCategory;
    let lhs = linearize_function(cat, &fs.tensor_mor_unchecked(f, g));
    let rhs = cat.tensor_mor_unchecked(&linearize_function(cat, f), &linearize_function(cat, g));
    if lhs != rhs {
        return false;
    }
    let sa = SetSize(f.dom);
    let sb = SetSize(g.dom);
    linearize_function(cat, &fs.braiding(&sa, &sb))
        == cat.braiding(&Dim(sa.0), &Dim(sb.0))
}
