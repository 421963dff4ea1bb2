//! JSON output documents.
//!
//! Every document carries `schema = "gorenstein-kit.<command>.v1"`. Rationals
//! are strings `"p/q"` (or `"p"` when integral) so no value passes through a
//! float. Series are `numerator / Π (1 - t^d)` with the numerator as a list of
//! `{exponent, coefficient}` terms.

use gorenstein_core::graded_ring::{krull_dimension, GradedModuleSeries, RingPresentation};
use gorenstein_core::series::HilbertSeries;
use gorenstein_core::BigRational;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

pub fn schema_tag(command: &str) -> String {
    format!("gorenstein-kit.{command}.v{SCHEMA_VERSION}")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponent: i64,
    pub coefficient: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub display: String,
    pub numerator: Vec<TermJson>,
    pub denominator_degrees: Vec<u32>,
}

impl From<&HilbertSeries> for SeriesJson {
    fn from(s: &HilbertSeries) -> Self {
        Self {
            display: s.to_string(),
            numerator: s
                .numerator()
                .terms()
                .map(|(exponent, c)| TermJson {
                    exponent,
                    coefficient: c.to_string(),
                })
                .collect(),
            denominator_degrees: s.denominator_degrees().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientJson {
    pub degree: i64,
    pub value: String,
}

pub fn coefficients(from: i64, values: &[BigRational]) -> Vec<CoefficientJson> {
    values
        .iter()
        .zip(from..)
        .map(|(v, degree)| CoefficientJson {
            degree,
            value: v.to_string(),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolJson {
    pub symbol: String,
    pub degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingJson {
    pub name: String,
    pub coefficients: String,
    pub generators: Vec<SymbolJson>,
    pub relations: Vec<SymbolJson>,
    pub krull_dimension: usize,
}

impl From<&RingPresentation> for RingJson {
    fn from(p: &RingPresentation) -> Self {
        let symbols = |v: &[gorenstein_core::graded_ring::GradedSymbol]| {
            v.iter()
                .map(|s| SymbolJson {
                    symbol: s.symbol.clone(),
                    degree: s.degree,
                })
                .collect()
        };
        Self {
            name: p.name().to_string(),
            coefficients: p.coefficient_label().to_string(),
            generators: symbols(p.generators()),
            relations: symbols(p.relations()),
            krull_dimension: krull_dimension(p),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertJson {
    pub schema: String,
    pub ring: RingJson,
    pub series: SeriesJson,
    pub coefficients: Vec<CoefficientJson>,
    pub warning: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftJson {
    pub schema: String,
    pub ring: String,
    pub krull_dimension: usize,
    pub formula: i64,
    pub stanley: Option<i64>,
    pub stanley_error: Option<String>,
    pub agree: bool,
}

/// A graded module: effective series `t^shift · S(1/t)` when `dualized`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub label: String,
    pub shift: i64,
    pub dualized: bool,
    pub series: SeriesJson,
    pub coefficients: Vec<CoefficientJson>,
}

impl ModuleJson {
    pub fn new(m: &GradedModuleSeries, window: i64) -> Self {
        Self {
            label: m.label.clone(),
            shift: m.shift,
            dualized: m.dualized,
            series: (&m.series).into(),
            coefficients: coefficients(-window, &m.coefficients(-window, window)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalCohomologyJson {
    pub cohomological_degree: usize,
    pub det_twisted: bool,
    pub module: ModuleJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityJson {
    pub schema: String,
    pub ring: RingJson,
    pub shift_a: i64,
    pub local_cohomology: LocalCohomologyJson,
    pub gamma: ModuleJson,
    pub cech_ring_part: ModuleJson,
    pub cech_dual_part: ModuleJson,
    pub splitting: String,
    /// Exponent in `K^R ≃ Σ^{anderson_shift} R`, i.e. `-a-1`.
    pub anderson_shift: i64,
    /// `a+1`, the "self-dual of shift" convention.
    pub anderson_display_shift: i64,
    pub vanishing_hypotheses_hold: bool,
    pub regularity_warning: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MolienJson {
    pub schema: String,
    pub ring: String,
    pub group: String,
    pub order: usize,
    pub twist: String,
    pub series: SeriesJson,
    pub coefficients: Vec<CoefficientJson>,
    pub polynomial_degrees: Option<Vec<u32>>,
    pub pseudoreflection_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SympowRowJson {
    pub n: usize,
    pub multiplicities: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SympowJson {
    pub schema: String,
    pub group: String,
    pub irreducibles: Vec<String>,
    pub rows: Vec<SympowRowJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialTermJson {
    pub exponents: Vec<u32>,
    pub coefficient: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantJson {
    pub display: String,
    pub terms: Vec<MonomialTermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvgenJson {
    pub schema: String,
    pub group: String,
    pub variables: Vec<String>,
    pub degree: u32,
    pub dimension: usize,
    pub basis: Vec<InvariantJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictionJson {
    pub invariant_degrees: Vec<u32>,
    pub solomon_b: i64,
    pub descended_gorenstein_shift: i64,
    pub descended_anderson_shift: i64,
    pub solomon_verified: bool,
    pub cross_check: bool,
    pub molien: SeriesJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentJson {
    pub schema: String,
    pub ring: String,
    pub group: String,
    pub base_shift_a: i64,
    pub base_anderson_display_shift: i64,
    /// Absent when the base ring is outside the polynomial regime.
    pub prediction: Option<PredictionJson>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRowJson {
    pub name: String,
    pub prime: String,
    pub group: String,
    pub generator_degrees: Vec<u32>,
    pub relation_degree: Option<u32>,
    pub computed_shift_a: i64,
    pub expected_shift_a: i64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub schema: String,
    pub rows: Vec<TableRowJson>,
    pub all_pass: bool,
}
