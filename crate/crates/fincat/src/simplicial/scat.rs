//! Truncated simplicial categories: a fixed object set, one mapping space
//! per ordered pair of objects, levelwise composition tables, and identity
//! vertices. Equivalently level categories `C_0..C_D` sharing objects, with
//! face/degeneracy functors constant on objects.

use crate::error::FincatError;
use crate::monoidal::{ComputableCategory, FiniteCategory};

use super::horn::{horn_check, HornKind, HornReport};
use super::sset::TruncatedSimplicialSet;

#[derive(Clone, Debug)]
pub struct SimplicialCategory {
    dim: usize,
    obj_labels: Vec<String>,
    /// `maps[a][b]` is the mapping space `Map(a, b)`.
    maps: Vec<Vec<TruncatedSimplicialSet>>,
    /// `comp[a][b][c][k][g][f]` composes `g ∈ Map(b,c)_k` after `f ∈ Map(a,b)_k`.
    comp: Vec<Vec<Vec<Vec<Vec<Vec<usize>>>>>>,
    /// Identity vertices `ids[a] ∈ Map(a,a)_0`.
    ids: Vec<usize>,
}

impl SimplicialCategory {
    pub fn new(
        dim: usize,
        obj_labels: Vec<String>,
        maps: Vec<Vec<TruncatedSimplicialSet>>,
        comp: Vec<Vec<Vec<Vec<Vec<Vec<usize>>>>>>,
        ids: Vec<usize>,
    ) -> Result<Self, FincatError> {
        let cat = SimplicialCategory {
            dim,
            obj_labels,
            maps,
            comp,
            ids,
        };
        cat.validate().map_err(FincatError::Precondition)?;
        Ok(cat)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn object_count(&self) -> usize {
        self.obj_labels.len()
    }
    pub fn object_label(&self, a: usize) -> &str {
        &self.obj_labels[a]
    }
    pub fn mapping_space(&self, a: usize, b: usize) -> &TruncatedSimplicialSet {
        &self.maps[a][b]
    }
    pub fn identity_vertex(&self, a: usize) -> usize {
        self.ids[a]
    }
    pub fn compose_at(&self, a: usize, b: usize, c: usize, k: usize, g: usize, f: usize) -> usize {
        self.comp[a][b][c][k][g][f]
    }

    /// The identity of `a` at level `k`: the `k`-fold degeneracy of the
    /// identity vertex.
    pub fn identity_at_level(&self, a: usize, k: usize) -> usize {
        let mut value = self.ids[a];
        for level in 0..k {
            value = self.maps[a][a].degeneracy(level, 0, value);
        }
        value
    }

    /// Validate mapping spaces, functoriality of faces/degeneracies with
    /// respect to composition, unit laws, and levelwise associativity.
    pub fn validate(&self) -> Result<(), String> {
        let n = self.object_count();
        for a in 0..n {
            for b in 0..n {
                self.maps[a][b]
                    .check_identities()
                    .map_err(|e| format!("Map({a},{b}): {e}"))?;
            }
        }
        // Unit laws at every level.
        for a in 0..n {
            for b in 0..n {
                for k in 0..=self.dim {
                    let id_a = self.identity_at_level(a, k);
                    let id_b = self.identity_at_level(b, k);
                    for f in 0..self.maps[a][b].card(k) {
                        if self.compose_at(a, a, b, k, f, id_a) != f {
                            return Err(format!("right unit law fails at level {k}"));
                        }
                        if self.compose_at(a, b, b, k, id_b, f) != f {
                            return Err(format!("left unit law fails at level {k}"));
                        }
                    }
                }
            }
        }
        // Associativity at every level.
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        for k in 0..=self.dim {
                            for f in 0..self.maps[a][b].card(k) {
                                for g in 0..self.maps[b][c].card(k) {
                                    for h in 0..self.maps[c][d].card(k) {
                                        let hg = self.compose_at(b, c, d, k, h, g);
                                        let gf = self.compose_at(a, b, c, k, g, f);
                                        if self.compose_at(a, b, d, k, hg, f)
                                            != self.compose_at(a, c, d, k, h, gf)
                                        {
                                            return Err(format!(
                                                "associativity fails at level {k}"
                                            ));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        // Faces and degeneracies are functors: they preserve composition
        // (levelwise) and identities.
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for k in 1..=self.dim {
                        for i in 0..=k {
                            for f in 0..self.maps[a][b].card(k) {
                                for g in 0..self.maps[b][c].card(k) {
                                    let composed = self.compose_at(a, b, c, k, g, f);
                                    let lhs = self.maps[a][c].face(k, i, composed);
                                    let rhs = self.compose_at(
                                        a,
                                        b,
                                        c,
                                        k - 1,
                                        self.maps[b][c].face(k, i, g),
                                        self.maps[a][b].face(k, i, f),
                                    );
                                    if lhs != rhs {
                                        return Err(format!(
                                            "face d_{i} is not functorial at level {k}"
                                        ));
                                    }
                                }
                            }
                        }
                    }
                    for k in 0..self.dim {
                        for i in 0..=k {
                            for f in 0..self.maps[a][b].card(k) {
                                for g in 0..self.maps[b][c].card(k) {
                                    let composed = self.compose_at(a, b, c, k, g, f);
                                    let lhs = self.maps[a][c].degeneracy(k, i, composed);
                                    let rhs = self.compose_at(
                                        a,
                                        b,
                                        c,
                                        k + 1,
                                        self.maps[b][c].degeneracy(k, i, g),
                                        self.maps[a][b].degeneracy(k, i, f),
                                    );
                                    if lhs != rhs {
                                        return Err(format!(
                                            "degeneracy s_{i} is not functorial at level {k}"
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Is every mapping space a Kan complex up to the bound? The fibrancy
    /// check behind "the coherent nerve is an ∞-category".
    pub fn fibrancy_report(&self, max_dim: usize) -> Vec<((usize, usize), HornReport)> {
        let mut out = Vec::new();
        for a in 0..self.object_count() {
            for b in 0..self.object_count() {
                out.push((
                    (a, b),
                    horn_check(&self.maps[a][b], HornKind::All, max_dim.min(self.dim)),
                ));
            }
        }
        out
    }

    /// A discrete simplicial category from a finite category: constant
    /// mapping spaces.
    pub fn discrete<C: FiniteCategory>(cat: &C, dim: usize) -> DiscreteScat<C> {
        let objects = cat.objects();
        let n = objects.len();
        let mut homs: Vec<Vec<Vec<C::Mor>>> = vec![vec![vec![]; n]; n];
        let mut maps = Vec::with_capacity(n);
        for (a, oa) in objects.iter().enumerate() {
            let mut row = Vec::with_capacity(n);
            for ob in objects.iter() {
                let hom = cat.enumerate_hom(oa, ob);
                let labels = hom.iter().map(|m| format!("{m}")).collect();
                row.push(TruncatedSimplicialSet::constant(dim, hom.len(), labels));
                homs[a][objects.iter().position(|o| o == ob).unwrap()] = hom;
            }
            maps.push(row);
        }
        let mut comp = vec![vec![vec![vec![]; n]; n]; n];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let mut by_level = Vec::with_capacity(dim + 1);
                    let mut table = vec![vec![0usize; homs[a][b].len()]; homs[b][c].len()];
                    for (gi, g) in homs[b][c].iter().enumerate() {
                        for (fi, f) in homs[a][b].iter().enumerate() {
                            let gf = cat.compose(g, f).expect("boundaries match");
                            table[gi][fi] = homs[a][c]
                                .iter()
                                .position(|m| *m == gf)
                                .expect("hom-sets are closed under composition");
                        }
                    }
                    for _ in 0..=dim {
                        by_level.push(table.clone());
                    }
                    comp[a][b][c] = by_level;
                }
            }
        }
        let ids = objects
            .iter()
            .enumerate()
            .map(|(a, o)| {
                homs[a][a]
                    .iter()
                    .position(|m| *m == cat.identity(o))
                    .expect("identities are in the hom-sets")
            })
            .collect();
        let labels = objects.iter().map(|o| format!("{o}")).collect();
        let scat = SimplicialCategory::new(dim, labels, maps, comp, ids)
            .expect("discrete simplicial categories are valid");
        DiscreteScat {
            scat,
            objects,
            homs,
        }
    }

    /// Product of simplicial categories: objects are pairs, mapping spaces
    /// are products.
    pub fn product(&self, other: &SimplicialCategory) -> SimplicialCategory {
        let dim = self.dim.min(other.dim);
        let n1 = self.object_count();
        let n2 = other.object_count();
        let n = n1 * n2;
        let obj_labels: Vec<String> = (0..n)
            .map(|x| format!("({},{})", self.obj_labels[x / n2], other.obj_labels[x % n2]))
            .collect();
        let mut maps = Vec::with_capacity(n);
        for x in 0..n {
            let mut row = Vec::with_capacity(n);
            for y in 0..n {
                row.push(self.maps[x / n2][y / n2].product(&other.maps[x % n2][y % n2]));
            }
            maps.push(row);
        }
        let mut comp = vec![vec![vec![vec![]; n]; n]; n];
        #[allow(clippy::needless_range_loop)]
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (a1, a2) = (x / n2, x % n2);
                    let (b1, b2) = (y / n2, y % n2);
                    let (c1, c2) = (z / n2, z % n2);
                    let mut by_level = Vec::with_capacity(dim + 1);
                    for k in 0..=dim {
                        let gcard1 = self.maps[b1][c1].card(k);
                        let gcard2 = other.maps[b2][c2].card(k);
                        let fcard1 = self.maps[a1][b1].card(k);
                        let fcard2 = other.maps[a2][b2].card(k);
                        let mut table = vec![vec![0usize; fcard1 * fcard2]; gcard1 * gcard2];
                        for g1 in 0..gcard1 {
                            for g2 in 0..gcard2 {
                                for f1 in 0..fcard1 {
                                    for f2 in 0..fcard2 {
                                        let c_first = self.compose_at(a1, b1, c1, k, g1, f1);
                                        let c_second = other.compose_at(a2, b2, c2, k, g2, f2);
                                        table[g1 * gcard2 + g2][f1 * fcard2 + f2] =
                                            c_first * other.maps[a2][c2].card(k) + c_second;
                                    }
                                }
                            }
                        }
                        by_level.push(table);
                    }
                    comp[x][y][z] = by_level;
                }
            }
        }
        let ids = (0..n)
            .map(|x| {
                self.ids[x / n2] * other.maps[x % n2][x % n2].card(0) + other.ids[x % n2]
            })
            .collect();
        SimplicialCategory::new(dim, obj_labels, maps, comp, ids)
            .expect("products of valid simplicial categories are valid")
    }

    /// A two-object simplicial category whose only interesting mapping
    /// space is an interval: two parallel vertices `f, g` joined by one
    /// nondegenerate edge. The smallest non-discrete example.
    pub fn interval_example(dim: usize) -> SimplicialCategory {
        let point = || TruncatedSimplicialSet::constant(dim, 1, vec!["id".into()]);
        let empty = || TruncatedSimplicialSet::constant(dim, 0, vec![]);
        let interval = super::sset::StandardSimplex::new(1, dim).sset;
        let maps = vec![
            vec![point(), interval.clone()],
            vec![empty(), point()],
        ];
        let mut comp = vec![vec![vec![vec![]; 2]; 2]; 2];
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    let mut by_level = Vec::with_capacity(dim + 1);
                    for k in 0..=dim {
                        let gcard = maps[b][c].card(k);
                        let fcard = maps[a][b].card(k);
                        let mut table = vec![vec![0usize; fcard]; gcard];
                        for (g, row) in table.iter_mut().enumerate() {
                            for (f, cell) in row.iter_mut().enumerate() {
                                // With at most one non-point mapping space on
                                // any composite path, composition is the
                                // projection onto the interval coordinate.
                                *cell = if maps[a][c].card(k) == maps[a][b].card(k) {
                                    f
                                } else {
                                    g
                                };
                            }
                        }
                        by_level.push(table);
                    }
                    comp[a][b][c] = by_level;
                }
            }
        }
        SimplicialCategory::new(dim, vec!["a".into(), "b".into()], maps, comp, vec![0, 0])
            .expect("the interval example is a valid simplicial category")
    }
}

/// A discrete simplicial category together with the finite category data it
/// came from.
pub struct DiscreteScat<C: FiniteCategory> {
    pub scat: SimplicialCategory,
    pub objects: Vec<C::Obj>,
    pub homs: Vec<Vec<Vec<C::Mor>>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoidal::table::TableCategory;

    #[test]
    fn discrete_category_validates() {
        let c2 = TableCategory::from_monoid(
            &["e".to_string(), "g".to_string()],
            &[vec![0, 1], vec![1, 0]],
            0,
        )
        .unwrap();
        let d = SimplicialCategory::discrete(&c2, 3);
        assert_eq!(d.scat.object_count(), 1);
        assert_eq!(d.scat.mapping_space(0, 0).card(2), 2);
    }

    #[test]
    fn interval_example_validates_and_is_not_fibrant() {
        let c = SimplicialCategory::interval_example(3);
        assert_eq!(c.mapping_space(0, 1).card(0), 2);
        assert_eq!(c.mapping_space(0, 1).card(1), 3);
        // Δ¹ is the nerve of a non-groupoid poset, so some outer horn fails.
        let fib = c.fibrancy_report(2);
        let bad = fib
            .iter()
            .find(|((a, b), report)| (*a, *b) == (0, 1) && !report.passed());
        assert!(bad.is_some());
    }

    #[test]
    fn products_of_discrete_categories_validate() {
        let arrow = TableCategory::arrow();
        let d = SimplicialCategory::discrete(&arrow, 2);
        let p = d.scat.product(&d.scat);
        assert_eq!(p.object_count(), 4);
    }
}
