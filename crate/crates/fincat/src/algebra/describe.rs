//! Description files (JSON) for algebras and bialgebras.
//!
//! Schema `fincat.algebra/1`:
//!
//! ```json
//! {
//!   "schema": "fincat.algebra/1",
//!   "ring": {"kind": "prime_field", "p": 2},
//!   "presentation": {
//!     "kind": "structure_maps",
//!     "dim": 2,
//!     "mul": [[1,0,0,1],[0,1,1,0]],
//!     "unit": [[1],[0]],
//!     "comul": [[1,0],[0,0],[0,0],[0,1]],
//!     "counit": [[1,1]],
//!     "commutative": true
//!   }
//! }
//! ```
//!
//! `comul`/`counit`/`antipode` are optional (algebra-only files omit them);
//! the commands that need coalgebra data refuse files without it. The
//! alternative presentation `{"kind": "monoid_algebra", "elements": [...],
//! "identity": "e", "table": [["e","x"],["x","x"]]}` linearizes a monoid
//! table; with `"ring": {"kind": "finite_sets"}` the same presentation
//! builds the cartesian bialgebra of the monoid object in finite sets.

use serde::Deserialize;
use serde_json::Value;

use crate::error::FincatError;
use crate::monoidal::describe::{parse_matrix, MonoidSpec, RingSpec};
use crate::monoidal::finset::FinSetCategory;
use crate::monoidal::matcat::{Dim, MatrixCategory};
use crate::monoidal::ring::{PrimeField, Rationals, Ring};

use super::monoid::{finset_monoid_bialgebra, monoid_bialgebra, MonoidTable};
use super::structures::{AlgebraStructure, BialgebraPresentation, CoalgebraStructure};

pub const ALGEBRA_SCHEMA: &str = "fincat.algebra/1";

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub schema: String,
    pub ring: RingSpec,
    pub presentation: Presentation,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Presentation {
    StructureMaps {
        dim: usize,
        mul: Vec<Vec<Value>>,
        unit: Vec<Vec<Value>>,
        #[serde(default)]
        comul: Option<Vec<Vec<Value>>>,
        #[serde(default)]
        counit: Option<Vec<Vec<Value>>>,
        #[serde(default)]
        antipode: Option<Vec<Vec<Value>>>,
        #[serde(default)]
        commutative: bool,
    },
    MonoidAlgebra {
        elements: Vec<String>,
        table: Vec<Vec<String>>,
        identity: String,
    },
}

/// An algebra, possibly with coalgebra data, loaded into one of the shipped
/// instances.
pub enum LoadedAlgebra {
    PrimeField {
        cat: MatrixCategory<PrimeField>,
        algebra: AlgebraStructure<MatrixCategory<PrimeField>>,
        bialgebra: Option<BialgebraPresentation<MatrixCategory<PrimeField>>>,
    },
    Rationals {
        cat: MatrixCategory<Rationals>,
        algebra: AlgebraStructure<MatrixCategory<Rationals>>,
        bialgebra: Option<BialgebraPresentation<MatrixCategory<Rationals>>>,
    },
    FiniteSets {
        bialgebra: BialgebraPresentation<FinSetCategory>,
    },
}

fn monoid_from_spec(
    elements: &[String],
    table: &[Vec<String>],
    identity: &str,
) -> Result<MonoidTable, FincatError> {
    let spec = MonoidSpec {
        elements: elements.to_vec(),
        table: table.to_vec(),
        identity: identity.to_string(),
    };
    let (names, idx_table, id) = spec.to_index_table()?;
    MonoidTable::new(names, idx_table, id)
}

fn load_matrix_algebra<R: Ring>(
    cat: &MatrixCategory<R>,
    presentation: &Presentation,
) -> Result<
    (
        AlgebraStructure<MatrixCategory<R>>,
        Option<BialgebraPresentation<MatrixCategory<R>>>,
    ),
    FincatError,
> {
    match presentation {
        Presentation::StructureMaps {
            dim,
            mul,
            unit,
            comul,
            counit,
            antipode,
            commutative,
        } => {
            let ring = cat.ring().clone();
            let mul = parse_matrix(&ring, mul)?;
            let unit = parse_matrix(&ring, unit)?;
            let algebra =
                AlgebraStructure::new(cat, Dim(*dim), mul, unit, *commutative)?;
            let bialgebra = match (comul, counit) {
                (Some(comul), Some(counit)) => {
                    let comul = parse_matrix(&ring, comul)?;
                    let counit = parse_matrix(&ring, counit)?;
                    let coalgebra = CoalgebraStructure::new(cat, Dim(*dim), comul, counit)?;
                    let antipode = antipode
                        .as_ref()
                        .map(|a| parse_matrix(&ring, a))
                        .transpose()?;
                    Some(BialgebraPresentation::new(
                        algebra.clone(),
                        coalgebra,
                        antipode,
                    )?)
                }
                (None, None) => None,
                _ => {
                    return Err(FincatError::InvalidInput(
                        "comul and counit must be given together".into(),
                    ))
                }
            };
            Ok((algebra, bialgebra))
        }
        Presentation::MonoidAlgebra {
            elements,
            table,
            identity,
        } => {
            let monoid = monoid_from_spec(elements, table, identity)?;
            let bialgebra = monoid_bialgebra(cat, &monoid);
            Ok((bialgebra.algebra.clone(), Some(bialgebra)))
        }
    }
}

pub fn load_algebra(file: &AlgebraFile) -> Result<LoadedAlgebra, FincatError> {
    if file.schema != ALGEBRA_SCHEMA {
        return Err(FincatError::InvalidInput(format!(
            "expected schema `{ALGEBRA_SCHEMA}`, found `{}`",
            file.schema
        )));
    }
    match &file.ring {
        RingSpec::PrimeField { p } => {
            let cat = MatrixCategory::new(PrimeField::new(*p)?);
            let (algebra, bialgebra) = load_matrix_algebra(&cat, &file.presentation)?;
            Ok(LoadedAlgebra::PrimeField {
                cat,
                algebra,
                bialgebra,
            })
        }
        RingSpec::Rationals => {
            let cat = MatrixCategory::new(Rationals);
            let (algebra, bialgebra) = load_matrix_algebra(&cat, &file.presentation)?;
            Ok(LoadedAlgebra::Rationals {
                cat,
                algebra,
                bialgebra,
            })
        }
        RingSpec::FiniteSets => match &file.presentation {
            Presentation::MonoidAlgebra {
                elements,
                table,
                identity,
            } => {
                let monoid = monoid_from_spec(elements, table, identity)?;
                Ok(LoadedAlgebra::FiniteSets {
                    bialgebra: finset_monoid_bialgebra(&monoid),
                })
            }
            Presentation::StructureMaps { .. } => Err(FincatError::InvalidInput(
                "the finite-set instance takes a `monoid_algebra` presentation".into(),
            )),
        },
    }
}
