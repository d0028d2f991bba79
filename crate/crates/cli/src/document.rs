//! Output documents shared by the json, csv and text renderers.

use redei::{ConstructionRow, CycleStructure, TableReport};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub d: u64,
    #[serde(rename = "Md")]
    pub md: u64,
    pub n: Vec<u64>,
    pub fixed_points: u64,
    pub j_cycles: u64,
}

impl From<&ConstructionRow> for Row {
    fn from(r: &ConstructionRow) -> Self {
        Row {
            d: r.d,
            md: r.md,
            n: r.n_values.clone(),
            fixed_points: r.fixed_points,
            j_cycles: r.j_cycles,
        }
    }
}

/// One `j` of a table.
#[derive(Debug, Clone, Serialize)]
pub struct Section {
    pub j: u64,
    pub exists: bool,
    #[serde(rename = "total_M")]
    pub total_m: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_primes: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j_squared_divides: Option<bool>,
    pub rows: Vec<Row>,
}

impl From<&TableReport> for Section {
    fn from(t: &TableReport) -> Self {
        Section {
            j: t.j,
            exists: t.exists,
            total_m: t.total_m,
            witness_primes: t.witness_primes.clone(),
            j_squared_divides: t.j_squared_divides,
            rows: t.rows.iter().map(Row::from).collect(),
        }
    }
}

/// `table` with a single `--j`.
#[derive(Debug, Clone, Serialize)]
pub struct TableDoc {
    pub q: u64,
    pub chi: i64,
    pub j: u64,
    pub exists: bool,
    #[serde(rename = "total_M")]
    pub total_m: u64,
    pub field_modulus: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_primes: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j_squared_divides: Option<bool>,
    pub rows: Vec<Row>,
}

impl TableDoc {
    pub fn new(q: u64, chi: i64, field_modulus: String, s: Section) -> Self {
        TableDoc {
            q,
            chi,
            j: s.j,
            exists: s.exists,
            total_m: s.total_m,
            field_modulus,
            witness_primes: s.witness_primes,
            j_squared_divides: s.j_squared_divides,
            rows: s.rows,
        }
    }
}

/// `table` over every length: 2, 3, 4, then odd primes up to the last one that occurs.
#[derive(Debug, Clone, Serialize)]
pub struct FullTableDoc {
    pub q: u64,
    pub chi: i64,
    pub qminus: u64,
    pub qminus_factorization: String,
    pub field_modulus: String,
    pub sections: Vec<Section>,
    /// No prime `j` at or above this value admits 1- and `j`-cycles.
    pub no_prime_from: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstructDoc {
    pub q: u64,
    pub chi: i64,
    pub j: u64,
    pub d: u64,
    #[serde(rename = "Md")]
    pub md: u64,
    pub n: Vec<u64>,
    pub fixed_points: u64,
    pub j_cycles: u64,
    pub field_modulus: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyDoc {
    pub q: u64,
    pub chi: i64,
    pub n: u64,
    pub a: String,
    pub modulus: u64,
    pub field_modulus: String,
    pub empirical: StructureMap,
    pub theoretical: StructureMap,
    pub fixed_points: u64,
    pub fixed_point_formula: u64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycles: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FieldDoc {
    pub q: u64,
    pub p: u64,
    pub k: usize,
    pub modulus: Vec<u64>,
    pub field_modulus: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CyclesDoc {
    pub q: u64,
    pub chi: i64,
    pub n: u64,
    pub a: String,
    pub field_modulus: String,
    pub permutation: bool,
    /// Cycle type, present for permutations.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structure: Option<StructureMap>,
    /// Cycles for permutations.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycles: Option<Vec<Vec<String>>>,
    /// The point map `x -> R(x)` when `R` is not a permutation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<Vec<(String, String)>>,
}

/// Cycle length to count, serialized as a JSON object with keys in numeric order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureMap(pub Vec<(u64, u64)>);

impl From<&CycleStructure> for StructureMap {
    fn from(s: &CycleStructure) -> Self {
        StructureMap(s.iter().collect())
    }
}

impl Serialize for StructureMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (len, count) in &self.0 {
            map.serialize_entry(&len.to_string(), count)?;
        }
        map.end()
    }
}
