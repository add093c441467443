//! Truncated simplicial sets: graded finite sets with face and degeneracy
//! tables up to a dimension bound, with the simplicial identities checkable
//! exhaustively. Everything any construction claims about a simplicial set
//! is a claim up to its bound, never beyond.

use std::collections::HashMap;

use crate::error::FincatError;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSimplicialSet {
    dim: usize,
    cards: Vec<usize>,
    /// `faces[n][i][x] = d_i(x)` for `1 ≤ n ≤ dim`, `0 ≤ i ≤ n`; `faces[0]` empty.
    faces: Vec<Vec<Vec<usize>>>,
    /// `degens[n][i][x] = s_i(x)` for `0 ≤ n < dim`, `0 ≤ i ≤ n`.
    degens: Vec<Vec<Vec<usize>>>,
    labels: Vec<Vec<String>>,
    /// Explicit bookkeeping: which simplices are in the image of a degeneracy.
    degenerate: Vec<Vec<bool>>,
}

impl TruncatedSimplicialSet {
    pub fn new(
        dim: usize,
        cards: Vec<usize>,
        faces: Vec<Vec<Vec<usize>>>,
        degens: Vec<Vec<Vec<usize>>>,
        labels: Vec<Vec<String>>,
    ) -> Result<Self, FincatError> {
        if cards.len() != dim + 1 || faces.len() != dim + 1 || degens.len() != dim.max(1) {
            return Err(FincatError::InvalidInput(
                "level tables must cover exactly the dimension bound".into(),
            ));
        }
        let mut degenerate: Vec<Vec<bool>> = cards.iter().map(|&c| vec![false; c]).collect();
        for n in 0..dim {
            if degens[n].len() != n + 1 {
                return Err(FincatError::InvalidInput(format!(
                    "level {n} needs degeneracies s_0..s_{n}"
                )));
            }
            for (i, table) in degens[n].iter().enumerate() {
                if table.len() != cards[n] {
                    return Err(FincatError::InvalidInput(format!(
                        "s_{i} at level {n} has the wrong source cardinality"
                    )));
                }
                for &y in table {
                    if y >= cards[n + 1] {
                        return Err(FincatError::InvalidInput(format!(
                            "s_{i} at level {n} exceeds the next level"
                        )));
                    }
                    degenerate[n + 1][y] = true;
                }
            }
        }
        for n in 1..=dim {
            if faces[n].len() != n + 1 {
                return Err(FincatError::InvalidInput(format!(
                    "level {n} needs faces d_0..d_{n}"
                )));
            }
            for (i, table) in faces[n].iter().enumerate() {
                if table.len() != cards[n] {
                    return Err(FincatError::InvalidInput(format!(
                        "d_{i} at level {n} has the wrong source cardinality"
                    )));
                }
                if table.iter().any(|&y| y >= cards[n - 1]) {
                    return Err(FincatError::InvalidInput(format!(
                        "d_{i} at level {n} exceeds the previous level"
                    )));
                }
            }
        }
        let labels = if labels.is_empty() {
            cards
                .iter()
                .enumerate()
                .map(|(n, &c)| (0..c).map(|x| format!("{n}#{x}")).collect())
                .collect()
        } else {
            labels
        };
        Ok(TruncatedSimplicialSet {
            dim,
            cards,
            faces,
            degens,
            labels,
            degenerate,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn card(&self, n: usize) -> usize {
        self.cards[n]
    }
    pub fn face(&self, n: usize, i: usize, x: usize) -> usize {
        self.faces[n][i][x]
    }
    pub fn degeneracy(&self, n: usize, i: usize, x: usize) -> usize {
        self.degens[n][i][x]
    }
    pub fn label(&self, n: usize, x: usize) -> &str {
        &self.labels[n][x]
    }
    pub fn is_degenerate(&self, n: usize, x: usize) -> bool {
        self.degenerate[n][x]
    }

    /// All simplicial identities among faces and degeneracies, wherever both
    /// sides are defined within the bound.
    pub fn check_identities(&self) -> Result<usize, String> {
        let mut checked = 0usize;
        // d_i d_j = d_{j-1} d_i for i < j
        for n in 2..=self.dim {
            for j in 0..=n {
                for i in 0..j {
                    for x in 0..self.cards[n] {
                        let lhs = self.face(n - 1, i, self.face(n, j, x));
                        let rhs = self.face(n - 1, j - 1, self.face(n, i, x));
                        if lhs != rhs {
                            return Err(format!(
                                "d_{i} d_{j} ≠ d_{} d_{i} at {}",
                                j - 1,
                                self.label(n, x)
                            ));
                        }
                        checked += 1;
                    }
                }
            }
        }
        // s_i s_j = s_{j+1} s_i for i ≤ j
        for n in 0..self.dim.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    for x in 0..self.cards[n] {
                        let lhs = self.degeneracy(n + 1, i, self.degeneracy(n, j, x));
                        let rhs = self.degeneracy(n + 1, j + 1, self.degeneracy(n, i, x));
                        if lhs != rhs {
                            return Err(format!(
                                "s_{i} s_{j} ≠ s_{} s_{i} at {}",
                                j + 1,
                                self.label(n, x)
                            ));
                        }
                        checked += 1;
                    }
                }
            }
        }
        // d_i s_j relations
        for n in 0..self.dim {
            for j in 0..=n {
                for i in 0..=n + 1 {
                    for x in 0..self.cards[n] {
                        let lhs = self.face(n + 1, i, self.degeneracy(n, j, x));
                        let rhs = if i < j {
                            // s_{j-1} d_i, defined when n ≥ 1
                            self.degeneracy(n - 1, j - 1, self.face(n, i, x))
                        } else if i == j || i == j + 1 {
                            x
                        } else {
                            self.degeneracy(n - 1, j, self.face(n, i - 1, x))
                        };
                        if lhs != rhs {
                            return Err(format!(
                                "d_{i} s_{j} relation fails at {}",
                                self.label(n, x)
                            ));
                        }
                        checked += 1;
                    }
                }
            }
        }
        Ok(checked)
    }

    /// Binary product, levelwise; the pair `(x, y)` sits at `x*|Y_n| + y`.
    pub fn product(&self, other: &TruncatedSimplicialSet) -> TruncatedSimplicialSet {
        let dim = self.dim.min(other.dim);
        let cards: Vec<usize> = (0..=dim).map(|n| self.cards[n] * other.cards[n]).collect();
        let pair = |n: usize, x: usize, y: usize| x * other.cards[n] + y;
        let mut faces = vec![vec![]];
        for n in 1..=dim {
            let mut level = Vec::with_capacity(n + 1);
            for i in 0..=n {
                let mut table = Vec::with_capacity(cards[n]);
                for x in 0..self.cards[n] {
                    for y in 0..other.cards[n] {
                        table.push(pair(n - 1, self.face(n, i, x), other.face(n, i, y)));
                    }
                }
                level.push(table);
            }
            faces.push(level);
        }
        let mut degens = Vec::new();
        for n in 0..dim {
            let mut level = Vec::with_capacity(n + 1);
            for i in 0..=n {
                let mut table = Vec::with_capacity(cards[n]);
                for x in 0..self.cards[n] {
                    for y in 0..other.cards[n] {
                        table.push(pair(
                            n + 1,
                            self.degeneracy(n, i, x),
                            other.degeneracy(n, i, y),
                        ));
                    }
                }
                level.push(table);
            }
            degens.push(level);
        }
        if degens.is_empty() {
            degens.push(vec![]);
        }
        let labels = (0..=dim)
            .map(|n| {
                let mut level = Vec::with_capacity(cards[n]);
                for x in 0..self.cards[n] {
                    for y in 0..other.cards[n] {
                        level.push(format!("({},{})", self.label(n, x), other.label(n, y)));
                    }
                }
                level
            })
            .collect();
        TruncatedSimplicialSet::new(dim, cards, faces, degens, labels)
            .expect("product of valid simplicial sets is valid")
    }

    /// The constant simplicial set on a finite set: all faces and
    /// degeneracies are the identity.
    pub fn constant(dim: usize, size: usize, labels: Vec<String>) -> TruncatedSimplicialSet {
        let cards = vec![size; dim + 1];
        let mut faces = vec![vec![]];
        for n in 1..=dim {
            faces.push(vec![(0..size).collect::<Vec<_>>(); n + 1]);
        }
        let mut degens = Vec::new();
        for n in 0..dim {
            degens.push(vec![(0..size).collect::<Vec<_>>(); n + 1]);
        }
        if degens.is_empty() {
            degens.push(vec![]);
        }
        let labels = (0..=dim).map(|_| labels.clone()).collect();
        TruncatedSimplicialSet::new(dim, cards, faces, degens, labels)
            .expect("constant simplicial sets are valid")
    }
}

/// The standard simplex `Δ^n`, truncated: `k`-simplices are weakly
/// increasing `(k+1)`-tuples in `{0..n}`.
pub struct StandardSimplex {
    pub sset: TruncatedSimplicialSet,
    pub tuples: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

impl StandardSimplex {
    pub fn new(n: usize, dim: usize) -> Self {
        let mut tuples: Vec<Vec<Vec<usize>>> = Vec::with_capacity(dim + 1);
        for k in 0..=dim {
            tuples.push(weakly_increasing_tuples(n, k + 1));
        }
        let index: Vec<HashMap<Vec<usize>, usize>> = tuples
            .iter()
            .map(|level| {
                level
                    .iter()
                    .enumerate()
                    .map(|(i, t)| (t.clone(), i))
                    .collect()
            })
            .collect();
        let cards: Vec<usize> = tuples.iter().map(Vec::len).collect();
        let mut faces = vec![vec![]];
        for k in 1..=dim {
            let mut level = Vec::with_capacity(k + 1);
            for i in 0..=k {
                level.push(
                    tuples[k]
                        .iter()
                        .map(|t| {
                            let mut s = t.clone();
                            s.remove(i);
                            index[k - 1][&s]
                        })
                        .collect(),
                );
            }
            faces.push(level);
        }
        let mut degens = Vec::new();
        for k in 0..dim {
            let mut level = Vec::with_capacity(k + 1);
            for i in 0..=k {
                level.push(
                    tuples[k]
                        .iter()
                        .map(|t| {
                            let mut s = t.clone();
                            s.insert(i, t[i]);
                            index[k + 1][&s]
                        })
                        .collect(),
                );
            }
            degens.push(level);
        }
        if degens.is_empty() {
            degens.push(vec![]);
        }
        let labels = tuples
            .iter()
            .map(|level| level.iter().map(|t| format!("{t:?}")).collect())
            .collect();
        let sset = TruncatedSimplicialSet::new(dim, cards, faces, degens, labels)
            .expect("standard simplices are valid");
        StandardSimplex {
            sset,
            tuples,
            index,
        }
    }

    pub fn index_of(&self, k: usize, tuple: &[usize]) -> usize {
        self.index[k][tuple]
    }
}

fn weakly_increasing_tuples(max: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; len];
    loop {
        if current.windows(2).all(|w| w[0] <= w[1]) {
            out.push(current.clone());
        }
        let mut pos = len;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            current[pos] += 1;
            if current[pos] <= max {
                break;
            }
            current[pos] = 0;
        }
    }
}

/// A levelwise map of truncated simplicial sets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialMap {
    pub levels: Vec<Vec<usize>>,
}

impl SimplicialMap {
    pub fn apply(&self, n: usize, x: usize) -> usize {
        self.levels[n][x]
    }

    /// Does the map commute with all faces and degeneracies within the
    /// common bound?
    pub fn validate(
        &self,
        src: &TruncatedSimplicialSet,
        tgt: &TruncatedSimplicialSet,
    ) -> Result<(), String> {
        let dim = src.dim().min(tgt.dim());
        if self.levels.len() < dim + 1 {
            return Err("map does not cover every level".into());
        }
        for n in 0..=dim {
            if self.levels[n].len() != src.card(n) {
                return Err(format!("level {n} has the wrong source cardinality"));
            }
            if self.levels[n].iter().any(|&y| y >= tgt.card(n)) {
                return Err(format!("level {n} exceeds the target"));
            }
        }
        for n in 1..=dim {
            for i in 0..=n {
                for x in 0..src.card(n) {
                    if self.levels[n - 1][src.face(n, i, x)] != tgt.face(n, i, self.levels[n][x]) {
                        return Err(format!("does not commute with d_{i} at level {n}"));
                    }
                }
            }
        }
        for n in 0..dim {
            for i in 0..=n {
                for x in 0..src.card(n) {
                    if self.levels[n + 1][src.degeneracy(n, i, x)]
                        != tgt.degeneracy(n, i, self.levels[n][x])
                    {
                        return Err(format!("does not commute with s_{i} at level {n}"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// All simplicial maps `src → tgt`, by levelwise backtracking: level-`k`
/// images are constrained by the already-chosen images of their faces, and
/// degeneracy equations are enforced as levels complete.
pub fn enumerate_simplicial_maps(
    src: &TruncatedSimplicialSet,
    tgt: &TruncatedSimplicialSet,
) -> Vec<SimplicialMap> {
    let dim = src.dim().min(tgt.dim());
    let mut results = Vec::new();
    let mut partial: Vec<Vec<usize>> = Vec::new();
    extend_level(src, tgt, dim, &mut partial, &mut results);
    results
}

fn extend_level(
    src: &TruncatedSimplicialSet,
    tgt: &TruncatedSimplicialSet,
    dim: usize,
    partial: &mut Vec<Vec<usize>>,
    results: &mut Vec<SimplicialMap>,
) {
    let n = partial.len();
    if n > dim {
        results.push(SimplicialMap {
            levels: partial.clone(),
        });
        return;
    }
    // Choose images for level n simplices one at a time.
    let mut level = vec![usize::MAX; src.card(n)];
    assign_simplex(src, tgt, dim, n, 0, &mut level, partial, results);
}

#[allow(clippy::too_many_arguments)]
fn assign_simplex(
    src: &TruncatedSimplicialSet,
    tgt: &TruncatedSimplicialSet,
    dim: usize,
    n: usize,
    x: usize,
    level: &mut Vec<usize>,
    partial: &mut Vec<Vec<usize>>,
    results: &mut Vec<SimplicialMap>,
) {
    if x == src.card(n) {
        // Level complete: enforce degeneracy equations into this level.
        if n >= 1 {
            for i in 0..n {
                for y in 0..src.card(n - 1) {
                    let expected = tgt.degeneracy(n - 1, i, partial[n - 1][y]);
                    if level[src.degeneracy(n - 1, i, y)] != expected {
                        return;
                    }
                }
            }
        }
        partial.push(level.clone());
        extend_level(src, tgt, dim, partial, results);
        partial.pop();
        return;
    }
    // Forced by a degeneracy?
    if n >= 1 {
        for i in 0..n {
            for y in 0..src.card(n - 1) {
                if src.degeneracy(n - 1, i, y) == x {
                    let forced = tgt.degeneracy(n - 1, i, partial[n - 1][y]);
                    if face_compatible(src, tgt, n, x, forced, partial) {
                        level[x] = forced;
                        assign_simplex(src, tgt, dim, n, x + 1, level, partial, results);
                        level[x] = usize::MAX;
                    }
                    return;
                }
            }
        }
    }
    for candidate in 0..tgt.card(n) {
        if face_compatible(src, tgt, n, x, candidate, partial) {
            level[x] = candidate;
            assign_simplex(src, tgt, dim, n, x + 1, level, partial, results);
            level[x] = usize::MAX;
        }
    }
}

fn face_compatible(
    src: &TruncatedSimplicialSet,
    tgt: &TruncatedSimplicialSet,
    n: usize,
    x: usize,
    candidate: usize,
    partial: &[Vec<usize>],
) -> bool {
    if n == 0 {
        return true;
    }
    (0..=n).all(|i| partial[n - 1][src.face(n, i, x)] == tgt.face(n, i, candidate))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_simplex_counts_and_identities() {
        for n in 0..=3 {
            let delta = StandardSimplex::new(n, 3);
            delta.sset.check_identities().unwrap();
        }
        let d1 = StandardSimplex::new(1, 3);
        assert_eq!(d1.sset.card(0), 2);
        assert_eq!(d1.sset.card(1), 3);
        assert_eq!(d1.sset.card(2), 4);
        // Nondegenerate simplices of Δ¹: the two vertices and one edge.
        assert!(!d1.sset.is_degenerate(1, d1.index_of(1, &[0, 1])));
        assert!(d1.sset.is_degenerate(1, d1.index_of(1, &[0, 0])));
    }

    #[test]
    fn product_satisfies_identities() {
        let a = StandardSimplex::new(1, 3).sset;
        let b = StandardSimplex::new(2, 3).sset;
        let p = a.product(&b);
        p.check_identities().unwrap();
        assert_eq!(p.card(0), a.card(0) * b.card(0));
    }

    #[test]
    fn simplicial_maps_delta1_to_delta1() {
        // Maps Δ¹ → Δ¹ correspond to monotone maps [1] → [1]: there are 3.
        let d1 = StandardSimplex::new(1, 3).sset;
        let maps = enumerate_simplicial_maps(&d1, &d1);
        assert_eq!(maps.len(), 3);
        for m in &maps {
            m.validate(&d1, &d1).unwrap();
        }
    }

    #[test]
    fn simplicial_maps_delta2_to_delta1_count() {
        // Monotone maps [2] → [1]: 4 of them.
        let d2 = StandardSimplex::new(2, 3).sset;
        let d1 = StandardSimplex::new(1, 3).sset;
        let maps = enumerate_simplicial_maps(&d2, &d1);
        assert_eq!(maps.len(), 4);
    }

    #[test]
    fn constant_sset_is_valid() {
        let c = TruncatedSimplicialSet::constant(3, 5, (0..5).map(|i| i.to_string()).collect());
        c.check_identities().unwrap();
        assert_eq!(c.card(3), 5);
    }
}
