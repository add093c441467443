//! Operads in sets, stored up to a configured maximum arity, and their
//! categories of operators.
//!
//! `Comm` has a single operation in every arity; `Assoc` has one operation
//! per linear ordering of the inputs. Operations are relabelled by
//! symmetric-group actions through [`SetOperad::act`], where the permutation
//! is given as a list `perm` with "letter `ℓ` becomes letter `perm[ℓ]`".

use std::fmt;
use std::hash::Hash;

use super::pointed::PointedMap;
use crate::error::FincatError;
use crate::monoidal::{ComputableCategory, FiniteCategory, HomEnumerable};

pub trait SetOperad: Clone + fmt::Debug {
    type Op: Clone + Eq + Hash + fmt::Debug + fmt::Display;

    fn name(&self) -> String;
    fn max_arity(&self) -> usize;

    /// The finite set of operations of the given arity, in a fixed order.
    fn operations(&self, arity: usize) -> Result<Vec<Self::Op>, FincatError>;
    fn arity_of(&self, op: &Self::Op) -> usize;
    fn unit_op(&self) -> Self::Op;

    /// Full operadic composition: `outer` has arity `inners.len()`, inputs
    /// of the result are indexed block by block.
    fn compose_op(&self, outer: &Self::Op, inners: &[Self::Op]) -> Self::Op;

    /// Relabel the inputs: letter `ℓ` becomes `perm[ℓ]`.
    fn act(&self, perm: &[usize], op: &Self::Op) -> Self::Op;

    fn check_arity(&self, arity: usize) -> Result<(), FincatError> {
        if arity > self.max_arity() {
            Err(FincatError::BoundExceeded(format!(
                "operad {} is stored up to arity {}, requested {arity}",
                self.name(),
                self.max_arity()
            )))
        } else {
            Ok(())
        }
    }
}

/// The commutative operad: one operation per arity.
#[derive(Clone, Debug)]
pub struct Comm {
    max_arity: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CommOp(pub usize);

impl fmt::Display for CommOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mul[{}]", self.0)
    }
}

impl Comm {
    pub fn new(max_arity: usize) -> Self {
        Comm { max_arity }
    }
}

impl SetOperad for Comm {
    type Op = CommOp;

    fn name(&self) -> String {
        "Comm".into()
    }
    fn max_arity(&self) -> usize {
        self.max_arity
    }
    fn operations(&self, arity: usize) -> Result<Vec<CommOp>, FincatError> {
        self.check_arity(arity)?;
        Ok(vec![CommOp(arity)])
    }
    fn arity_of(&self, op: &CommOp) -> usize {
        op.0
    }
    fn unit_op(&self) -> CommOp {
        CommOp(1)
    }
    fn compose_op(&self, _outer: &CommOp, inners: &[CommOp]) -> CommOp {
        CommOp(inners.iter().map(|o| o.0).sum())
    }
    fn act(&self, _perm: &[usize], op: &CommOp) -> CommOp {
        *op
    }
}

/// The associative operad: operations of arity `n` are the linear orders on
/// `n` letters, written as the sequence in which the inputs are multiplied.
#[derive(Clone, Debug)]
pub struct Assoc {
    max_arity: usize,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AssocOp(pub Vec<usize>);

impl fmt::Display for AssocOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ord[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl Assoc {
    pub fn new(max_arity: usize) -> Self {
        Assoc { max_arity }
    }
}

/// All permutations of `{0..n}` as relabelling lists, sorted.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    permutations(n)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permute(&mut items, n, &mut out);
    out.sort();
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

impl SetOperad for Assoc {
    type Op = AssocOp;

    fn name(&self) -> String {
        "Assoc".into()
    }
    fn max_arity(&self) -> usize {
        self.max_arity
    }
    fn operations(&self, arity: usize) -> Result<Vec<AssocOp>, FincatError> {
        self.check_arity(arity)?;
        Ok(permutations(arity).into_iter().map(AssocOp).collect())
    }
    fn arity_of(&self, op: &AssocOp) -> usize {
        op.0.len()
    }
    fn unit_op(&self) -> AssocOp {
        AssocOp(vec![0])
    }
    fn compose_op(&self, outer: &AssocOp, inners: &[AssocOp]) -> AssocOp {
        assert_eq!(outer.0.len(), inners.len(), "outer arity must match inner count");
        let mut offsets = Vec::with_capacity(inners.len());
        let mut total = 0usize;
        for inner in inners {
            offsets.push(total);
            total += inner.0.len();
        }
        let mut seq = Vec::with_capacity(total);
        for &block in &outer.0 {
            for &letter in &inners[block].0 {
                seq.push(offsets[block] + letter);
            }
        }
        AssocOp(seq)
    }
    fn act(&self, perm: &[usize], op: &AssocOp) -> AssocOp {
        AssocOp(op.0.iter().map(|&l| perm[l]).collect())
    }
}

/// Block-sum of permutations: letter `s` inside block `t` becomes
/// `offset_t + perms[t][s]`.
pub fn block_sum(perms: &[Vec<usize>]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut offset = 0usize;
    for p in perms {
        out.extend(p.iter().map(|&v| offset + v));
        offset += p.len();
    }
    out
}

/// The permutation of `Σ arities` letters induced by permuting blocks:
/// the old letter at offset `s` of block `t` becomes the letter at the same
/// offset of wherever block `t` lands (`t ↦ block_perm[t]`).
pub fn block_permutation(block_perm: &[usize], arities: &[usize]) -> Vec<usize> {
    let r = block_perm.len();
    assert_eq!(arities.len(), r);
    // New offsets: block t lands at position block_perm[t]; the new layout
    // orders blocks by their landing position.
    let mut landing: Vec<usize> = vec![0; r]; // landing[new_pos] = old block
    for (old, &new) in block_perm.iter().enumerate() {
        landing[new] = old;
    }
    let mut new_offsets = vec![0usize; r];
    let mut acc = 0usize;
    for &old_block in &landing {
        new_offsets[old_block] = acc;
        acc += arities[old_block];
    }
    let mut out = Vec::new();
    for (t, &k) in arities.iter().enumerate() {
        for s in 0..k {
            out.push(new_offsets[t] + s);
        }
    }
    out
}

/// Operad law audit: unit, associativity, and the two equivariance laws, on
/// all composable tuples with total arity within the bound.
pub fn check_operad_laws<O: SetOperad>(operad: &O, bound: usize) -> Result<usize, String> {
    let mut cases = 0usize;
    let unit = operad.unit_op();

    let level = |n: usize| operad.operations(n).map_err(|e| e.to_string());

    // Unit laws.
    for n in 0..=bound {
        for op in level(n)? {
            let left = operad.compose_op(&unit, &[op.clone()]);
            if left != op {
                return Err(format!("unit ∘ {op} ≠ {op}"));
            }
            let right = operad.compose_op(&op, &vec![unit.clone(); n]);
            if right != op {
                return Err(format!("{op} ∘ units ≠ {op}"));
            }
            cases += 2;
        }
    }

    // Associativity: γ(γ(a; b⃗); c⃗) = γ(a; γ(b_t; c-blocks)).
    // Keep arities tiny; the composite arity must stay within the bound.
    for r in 0..=2usize {
        for a in level(r)? {
            for bs in tuples_of_ops(operad, r, bound)? {
                let total_b: usize = bs.iter().map(|b| operad.arity_of(b)).sum();
                if total_b > bound {
                    continue;
                }
                for cs in tuples_of_ops(operad, total_b, bound)? {
                    let total_c: usize = cs.iter().map(|c| operad.arity_of(c)).sum();
                    if total_c > bound {
                        continue;
                    }
                    let left = operad.compose_op(&operad.compose_op(&a, &bs), &cs);
                    // Split cs into blocks matching each b's arity.
                    let mut split = Vec::new();
                    let mut cursor = 0usize;
                    for b in &bs {
                        let k = operad.arity_of(b);
                        split.push(cs[cursor..cursor + k].to_vec());
                        cursor += k;
                    }
                    let inner: Vec<O::Op> = bs
                        .iter()
                        .zip(&split)
                        .map(|(b, chunk)| operad.compose_op(b, chunk))
                        .collect();
                    let right = operad.compose_op(&a, &inner);
                    if left != right {
                        return Err(format!("associativity fails at outer {a}"));
                    }
                    cases += 1;
                }
            }
        }
    }

    // Outer equivariance: relabelling the outer operation's letters by σ and
    // permuting the inner operations accordingly relabels the composite by
    // the block permutation.
    for r in 1..=3usize.min(bound) {
        for g in level(r)? {
            for bs in tuples_of_ops(operad, r, bound)? {
                let total: usize = bs.iter().map(|b| operad.arity_of(b)).sum();
                if total > bound {
                    continue;
                }
                for sigma in permutations(r) {
                    let g2 = operad.act(&sigma, &g);
                    // inner at new position p is the old inner σ⁻¹(p)
                    let mut inv = vec![0usize; r];
                    for (old, &new) in sigma.iter().enumerate() {
                        inv[new] = old;
                    }
                    let bs2: Vec<O::Op> = (0..r).map(|p| bs[inv[p]].clone()).collect();
                    let arities: Vec<usize> = bs.iter().map(|b| operad.arity_of(b)).collect();
                    let big = block_permutation(&sigma, &arities);
                    let lhs = operad.compose_op(&g2, &bs2);
                    let rhs = operad.act(&big, &operad.compose_op(&g, &bs));
                    if lhs != rhs {
                        return Err(format!("outer equivariance fails at {g} with σ={sigma:?}"));
                    }
                    cases += 1;
                }
            }
        }
    }

    // Inner equivariance: γ(g; act(τ_t, f_t)) = act(⊕τ_t, γ(g; f⃗)).
    for r in 1..=2usize.min(bound) {
        for g in level(r)? {
            for bs in tuples_of_ops(operad, r, bound)? {
                let total: usize = bs.iter().map(|b| operad.arity_of(b)).sum();
                if total > bound {
                    continue;
                }
                let tau_choices: Vec<Vec<Vec<usize>>> = bs
                    .iter()
                    .map(|b| permutations(operad.arity_of(b)))
                    .collect();
                for taus in cartesian(&tau_choices) {
                    let twisted: Vec<O::Op> = bs
                        .iter()
                        .zip(&taus)
                        .map(|(b, tau)| operad.act(tau, b))
                        .collect();
                    let lhs = operad.compose_op(&g, &twisted);
                    let rhs = operad.act(&block_sum(&taus), &operad.compose_op(&g, &bs));
                    if lhs != rhs {
                        return Err(format!("inner equivariance fails at {g}"));
                    }
                    cases += 1;
                }
            }
        }
    }

    Ok(cases)
}

fn tuples_of_ops<O: SetOperad>(
    operad: &O,
    r: usize,
    bound: usize,
) -> Result<Vec<Vec<O::Op>>, String> {
    let mut per_slot = Vec::new();
    for _ in 0..r {
        let mut ops = Vec::new();
        for n in 0..=bound.min(2) {
            ops.extend(operad.operations(n).map_err(|e| e.to_string())?);
        }
        per_slot.push(ops);
    }
    Ok(cartesian(&per_slot))
}

fn cartesian<T: Clone>(choices: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![vec![]];
    for slot in choices {
        let mut next = Vec::new();
        for t in &out {
            for c in slot {
                let mut t2 = t.clone();
                t2.push(c.clone());
                next.push(t2);
            }
        }
        out = next;
    }
    out
}

// --- category of operators of an operad ----------------------------------

/// The object `[n]_+` of an operad's category of operators.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Arity(pub usize);

impl fmt::Display for Arity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]+", self.0)
    }
}

/// A morphism of `O^⊗`: a pointed map together with one operation per
/// target point, indexed on the preimage in increasing order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OperadMorphism<Op> {
    pub map: PointedMap,
    pub ops: Vec<Op>,
}

impl<Op: fmt::Display> fmt::Display for OperadMorphism<Op> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; ", self.map)?;
        for (k, o) in self.ops.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{o}")?;
        }
        write!(f, ")")
    }
}

/// The category of operators of a set operad, with hom-sets
/// `∐_α ∏_j O(α⁻¹(j))` over the skeleton of pointed sets.
#[derive(Clone, Debug)]
pub struct OperadOperatorCategory<O: SetOperad> {
    operad: O,
}

impl<O: SetOperad> OperadOperatorCategory<O> {
    pub fn new(operad: O) -> Self {
        OperadOperatorCategory { operad }
    }

    pub fn operad(&self) -> &O {
        &self.operad
    }
}

impl<O: SetOperad> ComputableCategory for OperadOperatorCategory<O> {
    type Obj = Arity;
    type Mor = OperadMorphism<O::Op>;

    fn dom(&self, f: &Self::Mor) -> Arity {
        Arity(f.map.src())
    }
    fn cod(&self, f: &Self::Mor) -> Arity {
        Arity(f.map.tgt())
    }
    fn identity(&self, a: &Arity) -> Self::Mor {
        OperadMorphism {
            map: PointedMap::identity(a.0),
            ops: vec![self.operad.unit_op(); a.0],
        }
    }
    fn compose_unchecked(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor {
        let map = g.map.compose(&f.map).expect("boundaries checked");
        let mut ops = Vec::with_capacity(g.map.tgt());
        for k in 0..g.map.tgt() {
            let blocks = g.map.preimage(k);
            let inners: Vec<O::Op> = blocks.iter().map(|&j| f.ops[j].clone()).collect();
            let composed = self.operad.compose_op(&g.ops[k], &inners);
            // Inputs of `composed` are indexed block by block; relabel to the
            // increasing enumeration of the composite preimage.
            let block_concat: Vec<usize> = blocks
                .iter()
                .flat_map(|&j| f.map.preimage(j))
                .collect();
            let mut increasing = block_concat.clone();
            increasing.sort_unstable();
            let perm: Vec<usize> = block_concat
                .iter()
                .map(|i| increasing.iter().position(|x| x == i).unwrap())
                .collect();
            ops.push(self.operad.act(&perm, &composed));
        }
        OperadMorphism { map, ops }
    }
    fn validate_mor(&self, f: &Self::Mor) -> Result<(), FincatError> {
        if f.ops.len() != f.map.tgt() {
            return Err(FincatError::MalformedMorphism(format!(
                "{} operations for target arity {}",
                f.ops.len(),
                f.map.tgt()
            )));
        }
        for (k, op) in f.ops.iter().enumerate() {
            let expected = f.map.preimage(k).len();
            if self.operad.arity_of(op) != expected {
                return Err(FincatError::Component {
                    index: k,
                    message: format!(
                        "operation {op} has arity {}, preimage has {expected} points",
                        self.operad.arity_of(op)
                    ),
                });
            }
        }
        Ok(())
    }
}

impl<O: SetOperad> HomEnumerable for OperadOperatorCategory<O> {
    fn enumerate_hom(&self, a: &Arity, b: &Arity) -> Vec<Self::Mor> {
        let mut out = Vec::new();
        for map in PointedMap::enumerate(a.0, b.0) {
            let per_point: Vec<Vec<O::Op>> = (0..b.0)
                .map(|j| {
                    self.operad
                        .operations(map.preimage(j).len())
                        .expect("arity within the stored bound")
                })
                .collect();
            for ops in cartesian(&per_point) {
                out.push(OperadMorphism {
                    map: map.clone(),
                    ops,
                });
            }
        }
        out
    }
}

impl<O: SetOperad> FiniteCategory for OperadOperatorCategory<O> {
    fn objects(&self) -> Vec<Arity> {
        (0..=self.operad.max_arity()).map(Arity).collect()
    }
}
