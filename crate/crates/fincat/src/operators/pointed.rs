//! The skeleton of the category of finite pointed sets.
//!
//! Objects are arities `n`, standing for the pointed set `[n]_+ = {1,…,n,*}`.
//! Points are stored 0-based internally; the basepoint is `None` in value
//! tables. Only the canonical objects `[n]_+` are represented; arbitrary
//! finite pointed sets add no checkable content and are handled by callers
//! through reindexing.

use std::fmt;

use crate::error::FincatError;

/// A basepoint-preserving map `[src]_+ → [tgt]_+`, recorded by the images of
/// the non-basepoint elements.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PointedMap {
    src: usize,
    tgt: usize,
    table: Vec<Option<usize>>,
}

impl PointedMap {
    pub fn new(src: usize, tgt: usize, table: Vec<Option<usize>>) -> Result<Self, FincatError> {
        if table.len() != src {
            return Err(FincatError::MalformedMorphism(format!(
                "pointed map table has {} entries for source arity {src}",
                table.len()
            )));
        }
        if let Some(bad) = table.iter().flatten().find(|&&v| v >= tgt) {
            return Err(FincatError::MalformedMorphism(format!(
                "pointed map value {} exceeds target arity {tgt}",
                bad + 1
            )));
        }
        Ok(PointedMap { src, tgt, table })
    }

    pub fn identity(n: usize) -> Self {
        PointedMap {
            src: n,
            tgt: n,
            table: (0..n).map(Some).collect(),
        }
    }

    /// The fold `[m]_+ → [1]_+` sending every point to the single point.
    pub fn fold(m: usize) -> Self {
        PointedMap {
            src: m,
            tgt: 1,
            table: vec![Some(0); m],
        }
    }

    /// `ρ^i : [n]_+ → [1]_+` keeps point `i` (0-based) and folds all other
    /// points into the basepoint.
    pub fn rho(n: usize, i: usize) -> Self {
        assert!(i < n);
        PointedMap {
            src: n,
            tgt: 1,
            table: (0..n).map(|j| if j == i { Some(0) } else { None }).collect(),
        }
    }

    pub fn src(&self) -> usize {
        self.src
    }
    pub fn tgt(&self) -> usize {
        self.tgt
    }
    pub fn apply(&self, i: usize) -> Option<usize> {
        self.table[i]
    }

    pub fn compose(&self, inner: &PointedMap) -> Result<PointedMap, FincatError> {
        if inner.tgt != self.src {
            return Err(FincatError::compose_mismatch(
                inner,
                self,
                format!("[{}]+", inner.tgt),
                format!("[{}]+", self.src),
            ));
        }
        Ok(PointedMap {
            src: inner.src,
            tgt: self.tgt,
            table: inner
                .table
                .iter()
                .map(|v| v.and_then(|x| self.table[x]))
                .collect(),
        })
    }

    /// Source points mapping to target point `j`, in increasing order.
    pub fn preimage(&self, j: usize) -> Vec<usize> {
        (0..self.src).filter(|&i| self.table[i] == Some(j)).collect()
    }

    /// Source points folded into the basepoint, in increasing order.
    pub fn basepoint_preimage(&self) -> Vec<usize> {
        (0..self.src).filter(|&i| self.table[i].is_none()).collect()
    }

    /// Inert: every point of the target has exactly one preimage point.
    pub fn is_inert(&self) -> bool {
        (0..self.tgt).all(|j| self.preimage(j).len() == 1)
    }

    /// Active: only the basepoint maps to the basepoint.
    pub fn is_active(&self) -> bool {
        self.table.iter().all(Option::is_some)
    }

    /// Factor as `active ∘ inert`. The inert part collapses exactly the
    /// basepoint preimage; the middle object is the set of surviving points
    /// reindexed in increasing order.
    pub fn inert_active_factorize(&self) -> (PointedMap, PointedMap) {
        let survivors: Vec<usize> = (0..self.src).filter(|&i| self.table[i].is_some()).collect();
        let mid = survivors.len();
        let mut inert_table = vec![None; self.src];
        for (new_idx, &old_idx) in survivors.iter().enumerate() {
            inert_table[old_idx] = Some(new_idx);
        }
        let inert = PointedMap {
            src: self.src,
            tgt: mid,
            table: inert_table,
        };
        let active = PointedMap {
            src: mid,
            tgt: self.tgt,
            table: survivors.iter().map(|&i| self.table[i]).collect(),
        };
        (inert, active)
    }

    /// The smash product `[a]_+ ∧ [b]_+ ≅ [ab]_+`, pairing `(i,j)` at flat
    /// index `i*b + j`, applied to two maps.
    pub fn smash(&self, other: &PointedMap) -> PointedMap {
        let src = self.src * other.src;
        let tgt = self.tgt * other.tgt;
        let mut table = vec![None; src];
        for i in 0..self.src {
            for j in 0..other.src {
                table[i * other.src + j] = match (self.table[i], other.table[j]) {
                    (Some(x), Some(y)) => Some(x * other.tgt + y),
                    _ => None,
                };
            }
        }
        PointedMap { src, tgt, table }
    }

    /// All basepoint-preserving maps `[m]_+ → [n]_+`, in lexicographic order
    /// of their value tables (basepoint sorts first).
    pub fn enumerate(m: usize, n: usize) -> Vec<PointedMap> {
        let mut out = Vec::new();
        let mut digits = vec![0usize; m]; // 0 = basepoint, v+1 = point v
        loop {
            out.push(PointedMap {
                src: m,
                tgt: n,
                table: digits
                    .iter()
                    .map(|&d| if d == 0 { None } else { Some(d - 1) })
                    .collect(),
            });
            let mut pos = 0;
            loop {
                if pos == m {
                    return out;
                }
                digits[pos] += 1;
                if digits[pos] <= n {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
        }
    }
}

impl fmt::Display for PointedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]+→[{}]+ {{", self.src, self.tgt)?;
        for (i, v) in self.table.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            match v {
                Some(x) => write!(f, "{}↦{}", i + 1, x + 1)?,
                None => write!(f, "{}↦*", i + 1)?,
            }
        }
        write!(f, "}}")
    }
}

/// Number of pointed maps `[m]_+ → [n]_+`, computed by enumeration and
/// cross-checked against the closed form `(n+1)^m`.
pub fn count_pointed_maps(m: usize, n: usize) -> u64 {
    let counted = PointedMap::enumerate(m, n).len() as u64;
    let closed_form = ((n + 1) as u64).pow(m as u32);
    assert_eq!(
        counted, closed_form,
        "enumeration of pointed maps disagrees with (n+1)^m"
    );
    counted
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn counts_match_closed_form() {
        assert_eq!(count_pointed_maps(0, 7), 1);
        assert_eq!(count_pointed_maps(2, 1), 4);
        assert_eq!(count_pointed_maps(3, 2), 27);
        for m in 0..=4 {
            for n in 0..=4 {
                count_pointed_maps(m, n);
            }
        }
    }

    #[test]
    fn inert_and_active_predicates() {
        // ρ^i is inert, the fold is active, the identity is both.
        assert!(PointedMap::rho(3, 1).is_inert());
        assert!(!PointedMap::rho(3, 1).is_active());
        assert!(PointedMap::fold(3).is_active());
        assert!(!PointedMap::fold(3).is_inert());
        assert!(PointedMap::identity(2).is_inert());
        assert!(PointedMap::identity(2).is_active());
    }

    #[test]
    fn factorization_on_spec_example() {
        // α: [3]_+ → [1]_+ with α(1)=*, α(2)=α(3)=1.
        let alpha = PointedMap::new(3, 1, vec![None, Some(0), Some(0)]).unwrap();
        let (inert, active) = alpha.inert_active_factorize();
        assert!(inert.is_inert());
        assert!(active.is_active());
        assert_eq!(inert.tgt(), 2);
        assert_eq!(active, PointedMap::fold(2));
        assert_eq!(active.compose(&inert).unwrap(), alpha);
        // inert collapses exactly point 1 (0-based point 0)
        assert_eq!(inert.basepoint_preimage(), vec![0]);
    }

    #[test]
    fn trivial_factorizations() {
        let inert = PointedMap::rho(2, 0);
        let (i, a) = inert.inert_active_factorize();
        assert_eq!(i, inert);
        assert_eq!(a, PointedMap::identity(1));

        let active = PointedMap::fold(2);
        let (i, a) = active.inert_active_factorize();
        assert_eq!(i, PointedMap::identity(2));
        assert_eq!(a, active);
    }

    proptest! {
        #[test]
        fn factorization_composes_back(
            m in 0usize..5,
            n in 0usize..4,
            seed in proptest::collection::vec(0usize..5, 5),
        ) {
            let table: Vec<Option<usize>> = (0..m)
                .map(|i| {
                    let d = seed[i] % (n + 1);
                    if d == 0 { None } else { Some(d - 1) }
                })
                .collect();
            let alpha = PointedMap::new(m, n, table).unwrap();
            let (inert, active) = alpha.inert_active_factorize();
            prop_assert!(inert.is_inert());
            prop_assert!(active.is_active());
            prop_assert_eq!(active.compose(&inert).unwrap(), alpha);
        }

        #[test]
        fn smash_is_functorial(
            a in 1usize..4,
            b in 1usize..4,
        ) {
            let f = PointedMap::fold(a);
            let g = PointedMap::identity(b);
            let smashed = f.smash(&g);
            prop_assert_eq!(smashed.src(), a * b);
            prop_assert_eq!(smashed.tgt(), b);
            // (f∧g)∘(f'∧g') = (f∘f')∧(g∘g') on composable samples.
            let f2 = PointedMap::identity(a);
            let g2 = PointedMap::identity(b);
            let lhs = f.smash(&g).compose(&f2.smash(&g2)).unwrap();
            let rhs = f.compose(&f2).unwrap().smash(&g.compose(&g2).unwrap());
            prop_assert_eq!(lhs, rhs);

            let outer = PointedMap::identity(1).smash(&PointedMap::identity(1));
            let inner = PointedMap::fold(a).smash(&PointedMap::fold(b));
            let lhs = outer.compose(&inner).unwrap();
            let rhs = PointedMap::fold(a).smash(&PointedMap::fold(b));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn exhaustive_factorization_small() {
        for m in 0..=4 {
            for n in 0..=4 {
                for alpha in PointedMap::enumerate(m, n) {
                    let (inert, active) = alpha.inert_active_factorize();
                    assert!(inert.is_inert());
                    assert!(active.is_active());
                    assert_eq!(active.compose(&inert).unwrap(), alpha);
                }
            }
        }
    }
}
