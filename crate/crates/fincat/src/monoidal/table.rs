//! Finite categories presented by explicit tables: a list of objects, a
//! list of morphisms with boundaries, identities, and a composition table.
//! This is the input type for nerves and horn audits.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::{ComputableCategory, FiniteCategory, HomEnumerable};
use crate::error::FincatError;

#[derive(Clone, Debug)]
pub struct TableCategory {
    inner: Arc<TableData>,
}

#[derive(Debug)]
struct TableData {
    objects: Vec<String>,
    mor_names: Vec<String>,
    mor_dom: Vec<usize>,
    mor_cod: Vec<usize>,
    identities: Vec<usize>,
    // composition[g][f] = g∘f, only where cod(f) = dom(g)
    composition: HashMap<(usize, usize), usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ObjId(pub usize);

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct MorId(pub usize);

impl fmt::Display for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for MorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{}", self.0)
    }
}

pub struct TableCategoryBuilder {
    objects: Vec<String>,
    mor_names: Vec<String>,
    mor_dom: Vec<usize>,
    mor_cod: Vec<usize>,
    composes: Vec<(usize, usize, usize)>,
    identities: Vec<usize>,
}

impl TableCategoryBuilder {
    pub fn new() -> Self {
        TableCategoryBuilder {
            objects: vec![],
            mor_names: vec![],
            mor_dom: vec![],
            mor_cod: vec![],
            composes: vec![],
            identities: vec![],
        }
    }

    pub fn object(&mut self, name: impl Into<String>) -> usize {
        self.objects.push(name.into());
        self.objects.len() - 1
    }

    pub fn morphism(&mut self, name: impl Into<String>, dom: usize, cod: usize) -> usize {
        self.mor_names.push(name.into());
        self.mor_dom.push(dom);
        self.mor_cod.push(cod);
        self.mor_names.len() - 1
    }

    pub fn identity(&mut self, obj: usize, mor: usize) {
        if self.identities.len() <= obj {
            self.identities.resize(obj + 1, usize::MAX);
        }
        self.identities[obj] = mor;
    }

    pub fn compose(&mut self, g: usize, f: usize, gf: usize) {
        self.composes.push((g, f, gf));
    }

    /// Validates the category laws exhaustively before handing the table out.
    pub fn build(self) -> Result<TableCategory, FincatError> {
        let n_mor = self.mor_names.len();
        if self.identities.len() != self.objects.len()
            || self.identities.iter().any(|&m| m == usize::MAX)
        {
            return Err(FincatError::InvalidInput(
                "every object needs an identity morphism".into(),
            ));
        }
        let mut composition = HashMap::new();
        for (g, f, gf) in &self.composes {
            composition.insert((*g, *f), *gf);
        }
        let data = TableData {
            objects: self.objects,
            mor_names: self.mor_names,
            mor_dom: self.mor_dom,
            mor_cod: self.mor_cod,
            identities: self.identities,
            composition,
        };
        // Totality: every boundary-compatible pair has a composite with the
        // right boundaries.
        for g in 0..n_mor {
            for f in 0..n_mor {
                if data.mor_cod[f] == data.mor_dom[g] {
                    let gf = *data.composition.get(&(g, f)).ok_or_else(|| {
                        FincatError::InvalidInput(format!(
                            "missing composite {} ∘ {}",
                            data.mor_names[g], data.mor_names[f]
                        ))
                    })?;
                    if data.mor_dom[gf] != data.mor_dom[f] || data.mor_cod[gf] != data.mor_cod[g] {
                        return Err(FincatError::InvalidInput(format!(
                            "composite {} ∘ {} has wrong boundaries",
                            data.mor_names[g], data.mor_names[f]
                        )));
                    }
                }
            }
        }
        // Identity laws.
        for f in 0..n_mor {
            let id_cod = data.identities[data.mor_cod[f]];
            let id_dom = data.identities[data.mor_dom[f]];
            if data.composition[&(id_cod, f)] != f || data.composition[&(f, id_dom)] != f {
                return Err(FincatError::InvalidInput(format!(
                    "identity laws fail at {}",
                    data.mor_names[f]
                )));
            }
        }
        // Associativity over all composable triples.
        for f in 0..n_mor {
            for g in 0..n_mor {
                if data.mor_cod[f] != data.mor_dom[g] {
                    continue;
                }
                for h in 0..n_mor {
                    if data.mor_cod[g] != data.mor_dom[h] {
                        continue;
                    }
                    let hg = data.composition[&(h, g)];
                    let gf = data.composition[&(g, f)];
                    if data.composition[&(hg, f)] != data.composition[&(h, gf)] {
                        return Err(FincatError::InvalidInput(format!(
                            "associativity fails on ({}, {}, {})",
                            data.mor_names[h], data.mor_names[g], data.mor_names[f]
                        )));
                    }
                }
            }
        }
        Ok(TableCategory { inner: Arc::new(data) })
    }
}

impl Default for TableCategoryBuilder {
    fn default() -> Self {
        Self::new()
    }
}

impl TableCategory {
    pub fn object_count(&self) -> usize {
        self.inner.objects.len()
    }
    pub fn morphism_count(&self) -> usize {
        self.inner.mor_names.len()
    }
    pub fn object_name(&self, o: ObjId) -> &str {
        &self.inner.objects[o.0]
    }
    pub fn morphism_name(&self, m: MorId) -> &str {
        &self.inner.mor_names[m.0]
    }
    pub fn is_identity(&self, m: MorId) -> bool {
        self.inner.identities.contains(&m.0)
    }

    /// One-object category with morphisms a finite monoid given by its
    /// multiplication table (`table[a][b] = a·b`).
    pub fn from_monoid(
        names: &[String],
        table: &[Vec<usize>],
        identity: usize,
    ) -> Result<Self, FincatError> {
        let n = names.len();
        let mut b = TableCategoryBuilder::new();
        let star = b.object("*");
        for name in names {
            b.morphism(name.clone(), star, star);
        }
        b.identity(star, identity);
        for g in 0..n {
            for f in 0..n {
                // Morphism composition g∘f acts as "first f, then g"; for a
                // monoid element acting by left translation this is g·f.
                b.compose(g, f, table[g][f]);
            }
        }
        b.build()
    }

    /// The walking arrow `0 → 1`.
    pub fn arrow() -> Self {
        let mut b = TableCategoryBuilder::new();
        let o0 = b.object("0");
        let o1 = b.object("1");
        let id0 = b.morphism("id0", o0, o0);
        let id1 = b.morphism("id1", o1, o1);
        let u = b.morphism("u", o0, o1);
        b.identity(o0, id0);
        b.identity(o1, id1);
        b.compose(id0, id0, id0);
        b.compose(id1, id1, id1);
        b.compose(u, id0, u);
        b.compose(id1, u, u);
        b.build().expect("walking arrow is a category")
    }

    /// The poset 0 → 1 → 2 as a three-object category.
    pub fn chain3() -> Self {
        let mut b = TableCategoryBuilder::new();
        let o: Vec<usize> = (0..3).map(|i| b.object(i.to_string())).collect();
        let mut arrows = HashMap::new();
        for i in 0..3 {
            for j in i..3 {
                let m = b.morphism(format!("{i}to{j}"), o[i], o[j]);
                arrows.insert((i, j), m);
            }
        }
        for i in 0..3 {
            b.identity(o[i], arrows[&(i, i)]);
        }
        for i in 0..3 {
            for j in i..3 {
                for k in j..3 {
                    b.compose(arrows[&(j, k)], arrows[&(i, j)], arrows[&(i, k)]);
                }
            }
        }
        b.build().expect("chain poset is a category")
    }

    /// Product of two table categories.
    pub fn product(&self, other: &TableCategory) -> TableCategory {
        let mut b = TableCategoryBuilder::new();
        let n_o2 = other.object_count();
        for a in 0..self.object_count() {
            for x in 0..n_o2 {
                b.object(format!(
                    "({},{})",
                    self.inner.objects[a], other.inner.objects[x]
                ));
            }
        }
        let n_m2 = other.morphism_count();
        for f in 0..self.morphism_count() {
            for u in 0..n_m2 {
                b.morphism(
                    format!("({},{})", self.inner.mor_names[f], other.inner.mor_names[u]),
                    self.inner.mor_dom[f] * n_o2 + other.inner.mor_dom[u],
                    self.inner.mor_cod[f] * n_o2 + other.inner.mor_cod[u],
                );
            }
        }
        for a in 0..self.object_count() {
            for x in 0..n_o2 {
                b.identity(
                    a * n_o2 + x,
                    self.inner.identities[a] * n_m2 + other.inner.identities[x],
                );
            }
        }
        for (&(g, f), &gf) in &self.inner.composition {
            for (&(v, u), &vu) in &other.inner.composition {
                b.compose(g * n_m2 + v, f * n_m2 + u, gf * n_m2 + vu);
            }
        }
        b.build().expect("product of categories is a category")
    }
}

impl ComputableCategory for TableCategory {
    type Obj = ObjId;
    type Mor = MorId;

    fn dom(&self, f: &MorId) -> ObjId {
        ObjId(self.inner.mor_dom[f.0])
    }
    fn cod(&self, f: &MorId) -> ObjId {
        ObjId(self.inner.mor_cod[f.0])
    }
    fn identity(&self, a: &ObjId) -> MorId {
        MorId(self.inner.identities[a.0])
    }
    fn compose_unchecked(&self, g: &MorId, f: &MorId) -> MorId {
        MorId(self.inner.composition[&(g.0, f.0)])
    }
    fn validate_mor(&self, f: &MorId) -> Result<(), FincatError> {
        if f.0 < self.inner.mor_names.len() {
            Ok(())
        } else {
            Err(FincatError::MalformedMorphism(format!(
                "morphism index {} out of range",
                f.0
            )))
        }
    }
}

impl HomEnumerable for TableCategory {
    fn enumerate_hom(&self, a: &ObjId, b: &ObjId) -> Vec<MorId> {
        (0..self.inner.mor_names.len())
            .filter(|&m| self.inner.mor_dom[m] == a.0 && self.inner.mor_cod[m] == b.0)
            .map(MorId)
            .collect()
    }
}

impl FiniteCategory for TableCategory {
    fn objects(&self) -> Vec<ObjId> {
        (0..self.inner.objects.len()).map(ObjId).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_group_deloops() {
        let names: Vec<String> = ["e", "g"].iter().map(|s| s.to_string()).collect();
        let table = vec![vec![0, 1], vec![1, 0]];
        let c2 = TableCategory::from_monoid(&names, &table, 0).unwrap();
        assert_eq!(c2.object_count(), 1);
        assert_eq!(c2.morphism_count(), 2);
        let g = MorId(1);
        assert_eq!(c2.compose(&g, &g).unwrap(), MorId(0));
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // table[a][b] with a "subtraction-like" defect: not associative.
        let names: Vec<String> = ["e", "a", "b"].iter().map(|s| s.to_string()).collect();
        let mut table = vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 1]];
        table[1][1] = 2; // keep identity row/col intact, break associativity
        assert!(TableCategory::from_monoid(&names, &table, 0).is_err());
    }

    #[test]
    fn product_with_arrow_doubles_objects() {
        let arrow = TableCategory::arrow();
        let c2 = TableCategory::from_monoid(
            &["e".to_string(), "g".to_string()],
            &[vec![0, 1], vec![1, 0]],
            0,
        )
        .unwrap();
        let prod = arrow.product(&c2);
        assert_eq!(prod.object_count(), 2);
        assert_eq!(prod.morphism_count(), 6);
    }
}
