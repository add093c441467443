//! Declarative description files (JSON) for category instances.
//!
//! Schema `fincat.category/1`:
//!
//! ```json
//! {
//!   "schema": "fincat.category/1",
//!   "ring": {"kind": "prime_field", "p": 2},
//!   "objects": [{"name": "A", "dim": 2}],
//!   "morphisms": [{"name": "f", "dom": "A", "cod": "A", "matrix": [[0,1],[1,0]]}]
//! }
//! ```
//!
//! With `"ring": {"kind": "finite_sets"}` objects carry `"size"` and
//! morphisms carry `"table"` (a list of images). Matrix entries are JSON
//! integers, or strings like `"3/4"` over the rationals.
//!
//! Schema `fincat.category_table/1` describes a finite category for nerve
//! and horn commands, either as an explicit table or through the
//! `"monoid"` / `"builtin"` shortcuts.

use std::collections::HashMap;

use serde::Deserialize;
use serde_json::Value;

use super::finset::{FinFunction, SetSize};
use super::matcat::{Dim, MatrixCategory};
use super::matrix::Matrix;
use super::ring::{PrimeField, Rationals, Ring};
use super::table::TableCategory;
use crate::error::FincatError;

pub const CATEGORY_SCHEMA: &str = "fincat.category/1";
pub const CATEGORY_TABLE_SCHEMA: &str = "fincat.category_table/1";

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RingSpec {
    PrimeField { p: u64 },
    Rationals,
    FiniteSets,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryFile {
    pub schema: String,
    pub ring: RingSpec,
    #[serde(default)]
    pub objects: Vec<ObjectSpec>,
    #[serde(default)]
    pub morphisms: Vec<MorphismSpec>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectSpec {
    pub name: String,
    #[serde(default)]
    pub dim: Option<usize>,
    #[serde(default)]
    pub size: Option<usize>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismSpec {
    pub name: String,
    pub dom: String,
    pub cod: String,
    #[serde(default)]
    pub matrix: Option<Vec<Vec<Value>>>,
    #[serde(default)]
    pub table: Option<Vec<usize>>,
}

/// Parse one matrix entry: a JSON integer, or a string handed to the ring.
pub fn parse_entry<R: Ring>(ring: &R, v: &Value) -> Result<R::Elem, FincatError> {
    match v {
        Value::Number(n) => {
            let s = n.to_string();
            ring.parse(&s)
        }
        Value::String(s) => ring.parse(s),
        other => Err(FincatError::InvalidInput(format!(
            "matrix entries must be integers or strings, found {other}"
        ))),
    }
}

pub fn parse_matrix<R: Ring>(
    ring: &R,
    rows: &[Vec<Value>],
) -> Result<Matrix<R::Elem>, FincatError> {
    let mut parsed = Vec::with_capacity(rows.len());
    for row in rows {
        let mut r = Vec::with_capacity(row.len());
        for v in row {
            r.push(parse_entry(ring, v)?);
        }
        parsed.push(r);
    }
    Matrix::from_rows(parsed)
        .ok_or_else(|| FincatError::InvalidInput("matrix rows have unequal lengths".into()))
}

/// A loaded category instance with its named objects and morphisms.
pub enum LoadedCategory {
    PrimeField {
        cat: MatrixCategory<PrimeField>,
        objects: Vec<(String, Dim)>,
        morphisms: Vec<(String, Matrix<u64>)>,
    },
    Rationals {
        cat: MatrixCategory<Rationals>,
        objects: Vec<(String, Dim)>,
        morphisms: Vec<(String, Matrix<num::BigRational>)>,
    },
    FiniteSets {
        objects: Vec<(String, SetSize)>,
        morphisms: Vec<(String, FinFunction)>,
    },
}

fn load_matrix_world<R: Ring>(
    ring: &R,
    file: &CategoryFile,
) -> Result<(Vec<(String, Dim)>, Vec<(String, Matrix<R::Elem>)>), FincatError> {
    let mut objects = Vec::new();
    let mut by_name: HashMap<&str, usize> = HashMap::new();
    for spec in &file.objects {
        let dim = spec.dim.ok_or_else(|| {
            FincatError::InvalidInput(format!("object `{}` needs a `dim` field", spec.name))
        })?;
        by_name.insert(spec.name.as_str(), dim);
        objects.push((spec.name.clone(), Dim(dim)));
    }
    let mut morphisms = Vec::new();
    for spec in &file.morphisms {
        let rows = spec.matrix.as_ref().ok_or_else(|| {
            FincatError::InvalidInput(format!("morphism `{}` needs a `matrix` field", spec.name))
        })?;
        let m = parse_matrix(ring, rows)?;
        let dom = *by_name.get(spec.dom.as_str()).ok_or_else(|| {
            FincatError::InvalidInput(format!("morphism `{}`: unknown object `{}`", spec.name, spec.dom))
        })?;
        let cod = *by_name.get(spec.cod.as_str()).ok_or_else(|| {
            FincatError::InvalidInput(format!("morphism `{}`: unknown object `{}`", spec.name, spec.cod))
        })?;
        if m.cols() != dom || m.rows() != cod {
            return Err(FincatError::InvalidInput(format!(
                "morphism `{}`: matrix is {}x{} but {} -> {} needs {}x{}",
                spec.name,
                m.rows(),
                m.cols(),
                spec.dom,
                spec.cod,
                cod,
                dom
            )));
        }
        morphisms.push((spec.name.clone(), m));
    }
    Ok((objects, morphisms))
}

pub fn load_category(file: &CategoryFile) -> Result<LoadedCategory, FincatError> {
    if file.schema != CATEGORY_SCHEMA {
        return Err(FincatError::InvalidInput(format!(
            "expected schema `{CATEGORY_SCHEMA}`, found `{}`",
            file.schema
        )));
    }
    match &file.ring {
        RingSpec::PrimeField { p } => {
            let ring = PrimeField::new(*p)?;
            let cat = MatrixCategory::new(ring.clone());
            let (objects, morphisms) = load_matrix_world(&ring, file)?;
            Ok(LoadedCategory::PrimeField {
                cat,
                objects,
                morphisms,
            })
        }
        RingSpec::Rationals => {
            let ring = Rationals;
            let cat = MatrixCategory::new(ring.clone());
            let (objects, morphisms) = load_matrix_world(&ring, file)?;
            Ok(LoadedCategory::Rationals {
                cat,
                objects,
                morphisms,
            })
        }
        RingSpec::FiniteSets => {
            let mut objects = Vec::new();
            let mut by_name: HashMap<&str, usize> = HashMap::new();
            for spec in &file.objects {
                let size = spec.size.ok_or_else(|| {
                    FincatError::InvalidInput(format!("object `{}` needs a `size` field", spec.name))
                })?;
                by_name.insert(spec.name.as_str(), size);
                objects.push((spec.name.clone(), SetSize(size)));
            }
            let mut morphisms = Vec::new();
            for spec in &file.morphisms {
                let table = spec.table.clone().ok_or_else(|| {
                    FincatError::InvalidInput(format!("morphism `{}` needs a `table` field", spec.name))
                })?;
                let dom = *by_name.get(spec.dom.as_str()).ok_or_else(|| {
                    FincatError::InvalidInput(format!("unknown object `{}`", spec.dom))
                })?;
                let cod = *by_name.get(spec.cod.as_str()).ok_or_else(|| {
                    FincatError::InvalidInput(format!("unknown object `{}`", spec.cod))
                })?;
                morphisms.push((spec.name.clone(), FinFunction::new(dom, cod, table)?));
            }
            Ok(LoadedCategory::FiniteSets { objects, morphisms })
        }
    }
}

/// JSON rendering of a prime-field matrix (entries as numbers).
pub fn fp_matrix_to_json(m: &Matrix<u64>) -> Value {
    Value::Array(
        m.to_rows()
            .into_iter()
            .map(|row| Value::Array(row.into_iter().map(|e| Value::from(e)).collect()))
            .collect(),
    )
}

/// JSON rendering of a rational matrix (entries as strings).
pub fn rat_matrix_to_json(m: &Matrix<num::BigRational>) -> Value {
    Value::Array(
        m.to_rows()
            .into_iter()
            .map(|row| {
                Value::Array(
                    row.into_iter()
                        .map(|e| Value::from(super::ring::rational_display(&e)))
                        .collect(),
                )
            })
            .collect(),
    )
}

pub fn finfunction_to_json(f: &FinFunction) -> Value {
    serde_json::json!({
        "dom": f.dom,
        "cod": f.cod,
        "table": f.table,
    })
}

// --- finite category tables ---------------------------------------------

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryTableFile {
    pub schema: String,
    #[serde(default)]
    pub builtin: Option<String>,
    #[serde(default)]
    pub monoid: Option<MonoidSpec>,
    #[serde(default)]
    pub objects: Option<Vec<String>>,
    #[serde(default)]
    pub morphisms: Option<Vec<TableMorSpec>>,
    #[serde(default)]
    pub identities: Option<HashMap<String, String>>,
    #[serde(default)]
    pub composition: Option<Vec<[String; 3]>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidSpec {
    pub elements: Vec<String>,
    /// `table[a][b]` is the element name of `a · b`.
    pub table: Vec<Vec<String>>,
    pub identity: String,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableMorSpec {
    pub name: String,
    pub dom: String,
    pub cod: String,
}

impl MonoidSpec {
    pub fn to_index_table(&self) -> Result<(Vec<String>, Vec<Vec<usize>>, usize), FincatError> {
        let idx = |name: &str| {
            self.elements
                .iter()
                .position(|e| e == name)
                .ok_or_else(|| FincatError::InvalidInput(format!("unknown element `{name}`")))
        };
        let n = self.elements.len();
        if self.table.len() != n || self.table.iter().any(|r| r.len() != n) {
            return Err(FincatError::InvalidInput(format!(
                "multiplication table must be {n}x{n}"
            )));
        }
        let mut table = vec![vec![0usize; n]; n];
        for (a, row) in self.table.iter().enumerate() {
            for (b, name) in row.iter().enumerate() {
                table[a][b] = idx(name)?;
            }
        }
        Ok((self.elements.clone(), table, idx(&self.identity)?))
    }
}

pub fn load_category_table(file: &CategoryTableFile) -> Result<TableCategory, FincatError> {
    if file.schema != CATEGORY_TABLE_SCHEMA {
        return Err(FincatError::InvalidInput(format!(
            "expected schema `{CATEGORY_TABLE_SCHEMA}`, found `{}`",
            file.schema
        )));
    }
    if let Some(builtin) = &file.builtin {
        return match builtin.as_str() {
            "arrow" => Ok(TableCategory::arrow()),
            "chain3" => Ok(TableCategory::chain3()),
            other => Err(FincatError::InvalidInput(format!(
                "unknown builtin category `{other}` (expected `arrow` or `chain3`)"
            ))),
        };
    }
    if let Some(monoid) = &file.monoid {
        let (names, table, id) = monoid.to_index_table()?;
        return TableCategory::from_monoid(&names, &table, id);
    }
    let (Some(objects), Some(morphisms), Some(identities), Some(composition)) = (
        &file.objects,
        &file.morphisms,
        &file.identities,
        &file.composition,
    ) else {
        return Err(FincatError::InvalidInput(
            "category table needs `builtin`, `monoid`, or explicit objects/morphisms/identities/composition".into(),
        ));
    };
    let mut b = super::table::TableCategoryBuilder::new();
    let mut obj_idx = HashMap::new();
    for name in objects {
        obj_idx.insert(name.clone(), b.object(name.clone()));
    }
    let mut mor_idx = HashMap::new();
    for spec in morphisms {
        let dom = *obj_idx
            .get(&spec.dom)
            .ok_or_else(|| FincatError::InvalidInput(format!("unknown object `{}`", spec.dom)))?;
        let cod = *obj_idx
            .get(&spec.cod)
            .ok_or_else(|| FincatError::InvalidInput(format!("unknown object `{}`", spec.cod)))?;
        mor_idx.insert(spec.name.clone(), b.morphism(spec.name.clone(), dom, cod));
    }
    for (obj, mor) in identities {
        let o = *obj_idx
            .get(obj)
            .ok_or_else(|| FincatError::InvalidInput(format!("unknown object `{obj}`")))?;
        let m = *mor_idx
            .get(mor)
            .ok_or_else(|| FincatError::InvalidInput(format!("unknown morphism `{mor}`")))?;
        b.identity(o, m);
    }
    for [g, f, gf] in composition {
        let lookup = |name: &String| {
            mor_idx
                .get(name)
                .copied()
                .ok_or_else(|| FincatError::InvalidInput(format!("unknown morphism `{name}`")))
        };
        b.compose(lookup(g)?, lookup(f)?, lookup(gf)?);
    }
    b.build()
}
