use std::fmt::Write as _;

use gorenstein_core::dataset::{self, GORENSTEIN_TABLE};
use gorenstein_core::descent::{cross_check_invariant_shift, descent_report, DescentError};
use gorenstein_core::duality::{duality_report, local_cohomology_series};
use gorenstein_core::graded_ring::{
    gorenstein_shift_formula, gorenstein_shift_stanley, hilbert_series, krull_dimension,
    regularity_warning, RingPresentation,
};
use gorenstein_core::input::{GroupInputRecord, LoadedGroup, RingInputRecord};
use gorenstein_core::invariants::{
    decompose, invariant_basis, molien_series, sym_power_character, InvariantsError, Twist,
    DEFAULT_MONOMIAL_BOUND,
};
use gorenstein_core::Error;

use crate::schema::*;
use crate::CliError;

/// Where rings and groups come from, and the group-order cap.
#[derive(Debug, Clone)]
pub struct Context {
    pub max_order: usize,
}

const BUILTIN: &str = "builtin:";

fn read_source(
    kind: &'static str,
    arg: &str,
    lookup: fn(&str) -> Option<&'static str>,
) -> Result<String, CliError> {
    match arg.strip_prefix(BUILTIN) {
        Some(key) => lookup(key)
            .map(str::to_string)
            .ok_or_else(|| CliError::UnknownFixture {
                kind,
                key: key.to_string(),
            }),
        None => std::fs::read_to_string(arg).map_err(|e| CliError::Io {
            path: arg.to_string(),
            message: e.to_string(),
        }),
    }
}

pub fn load_ring(arg: &str) -> Result<RingPresentation, CliError> {
    let text = read_source("ring", arg, dataset::ring_text)?;
    let record = RingInputRecord::parse(&text).map_err(Error::from)?;
    Ok(record.to_presentation().map_err(Error::from)?)
}

pub fn load_group(
    arg: &str,
    ring: &RingPresentation,
    ctx: &Context,
) -> Result<LoadedGroup, CliError> {
    let text = read_source("group", arg, dataset::group_text)?;
    let record = GroupInputRecord::parse(&text).map_err(Error::from)?;
    let loaded = record.load(ctx.max_order)?;
    let group = loaded.group.generator_degrees();
    if group != ring.generator_degrees() {
        return Err(Error::from(DescentError::BlockMismatch {
            group,
            ring: ring.generator_degrees(),
        })
        .into());
    }
    Ok(loaded)
}

fn symbols(p: &RingPresentation) -> Vec<String> {
    p.generators().iter().map(|g| g.symbol.clone()).collect()
}

pub fn hilbert(ring: &RingPresentation, max_degree: u32) -> HilbertJson {
    let series = hilbert_series(ring);
    let top = i64::from(max_degree);
    HilbertJson {
        schema: schema_tag("hilbert"),
        ring: ring.into(),
        series: (&series).into(),
        coefficients: coefficients(0, &series.expand(0, top)),
        warning: regularity_warning(
            ring,
            top.max(gorenstein_core::graded_ring::DEFAULT_NONNEGATIVITY_DEGREE),
        ),
    }
}

pub fn shift(ring: &RingPresentation) -> ShiftJson {
    let dim = krull_dimension(ring);
    let formula = gorenstein_shift_formula(ring);
    let stanley = gorenstein_shift_stanley(&hilbert_series(ring), dim);
    ShiftJson {
        schema: schema_tag("shift"),
        ring: ring.name().to_string(),
        krull_dimension: dim,
        formula,
        agree: stanley == Ok(formula),
        stanley: stanley.as_ref().ok().copied(),
        stanley_error: stanley.err().map(|e| e.to_string()),
    }
}

pub fn duality(ring: &RingPresentation, max_degree: u32) -> Result<DualityJson, CliError> {
    let report = duality_report(ring).map_err(Error::from)?;
    let lc = local_cohomology_series(ring).map_err(Error::from)?;
    let w = i64::from(max_degree);
    Ok(DualityJson {
        schema: schema_tag("duality"),
        ring: ring.into(),
        shift_a: report.shift_a,
        local_cohomology: LocalCohomologyJson {
            cohomological_degree: lc.cohomological_degree,
            det_twisted: lc.det_twisted,
            module: ModuleJson::new(&lc.module, w),
        },
        gamma: ModuleJson::new(&report.gamma_series, w),
        cech_ring_part: ModuleJson::new(&report.cech_ring_part, w),
        cech_dual_part: ModuleJson::new(&report.cech_dual_part, w),
        splitting: report.splitting.name().to_string(),
        anderson_shift: report.anderson_shift,
        anderson_display_shift: report.anderson_display_shift(),
        vanishing_hypotheses_hold: report.vanishing_hypotheses_hold,
        regularity_warning: regularity_warning(
            ring,
            gorenstein_core::graded_ring::DEFAULT_NONNEGATIVITY_DEGREE,
        ),
    })
}

pub fn parse_twist(name: &str, group: &LoadedGroup) -> Result<Twist, CliError> {
    match name {
        "trivial" => Ok(Twist::Trivial),
        "det" => Ok(Twist::Det),
        other => {
            let values = group
                .table
                .as_ref()
                .and_then(|t| t.character(other))
                .ok_or_else(|| {
                    Error::from(InvariantsError::InvalidCharacterTable(format!(
                        "no character named {other:?} for group {}",
                        group.group.name()
                    )))
                })?;
            Ok(Twist::Character {
                name: other.to_string(),
                values: values.clone(),
            })
        }
    }
}

pub fn molien(
    ring: &RingPresentation,
    group: &LoadedGroup,
    twist: &Twist,
    max_degree: u32,
) -> Result<MolienJson, CliError> {
    let report = molien_series(&group.group, twist).map_err(Error::from)?;
    Ok(MolienJson {
        schema: schema_tag("molien"),
        ring: ring.name().to_string(),
        group: group.group.name().to_string(),
        order: group.group.order(),
        twist: twist.label().to_string(),
        series: (&report.series).into(),
        coefficients: coefficients(0, &report.series.expand(0, i64::from(max_degree))),
        polynomial_degrees: report.polynomial_degrees,
        pseudoreflection_count: report.pseudoreflection_count,
    })
}

pub fn sympow(group: &LoadedGroup, n: usize) -> Result<SympowJson, CliError> {
    let table = group.table.as_ref().ok_or_else(|| {
        Error::from(InvariantsError::InvalidCharacterTable(format!(
            "group {} has no character table",
            group.group.name()
        )))
    })?;
    let rows = (0..=n)
        .map(|k| {
            let chi = sym_power_character(&group.group, k);
            Ok(SympowRowJson {
                n: k,
                multiplicities: decompose(&chi, table).map_err(Error::from)?,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(SympowJson {
        schema: schema_tag("sympow"),
        group: group.group.name().to_string(),
        irreducibles: table.names().into_iter().map(str::to_string).collect(),
        rows,
    })
}

pub fn invgen(
    ring: &RingPresentation,
    group: &LoadedGroup,
    degree: u32,
) -> Result<InvgenJson, CliError> {
    let basis =
        invariant_basis(&group.group, degree, DEFAULT_MONOMIAL_BOUND).map_err(Error::from)?;
    let variables = symbols(ring);
    Ok(InvgenJson {
        schema: schema_tag("invgen"),
        group: group.group.name().to_string(),
        degree,
        dimension: basis.len(),
        basis: basis
            .iter()
            .map(|p| InvariantJson {
                display: p.render(&variables),
                terms: p
                    .terms
                    .iter()
                    .map(|(m, c)| MonomialTermJson {
                        exponents: m.clone(),
                        coefficient: c.to_string(),
                    })
                    .collect(),
            })
            .collect(),
        variables,
    })
}

pub const OUT_OF_REGIME: &str =
    "descent prediction out of the stated regime: the base ring has relations, so only the base-ring shifts are reported";

pub fn descent(ring: &RingPresentation, group: &LoadedGroup) -> Result<DescentJson, CliError> {
    let base_shift_a = gorenstein_shift_formula(ring);
    let mut doc = DescentJson {
        schema: schema_tag("descent"),
        ring: ring.name().to_string(),
        group: group.group.name().to_string(),
        base_shift_a,
        base_anderson_display_shift: base_shift_a + 1,
        prediction: None,
        note: None,
    };
    match descent_report(ring, &group.group) {
        Ok(r) => {
            doc.prediction = Some(PredictionJson {
                invariant_degrees: r.invariant_degrees.clone(),
                solomon_b: r.solomon_b,
                descended_gorenstein_shift: r.descended_gorenstein_shift,
                descended_anderson_shift: r.descended_anderson_shift,
                solomon_verified: r.solomon_verified,
                cross_check: cross_check_invariant_shift(&r),
                molien: (&r.molien).into(),
            });
        }
        Err(DescentError::NotPolynomialBase(_)) => doc.note = Some(OUT_OF_REGIME.to_string()),
        Err(e) => return Err(Error::from(e).into()),
    }
    Ok(doc)
}

/// Shifts recomputed from the degree columns only.
pub fn table_shifts() -> Vec<i64> {
    GORENSTEIN_TABLE
        .iter()
        .map(|row| gorenstein_shift_formula(&row.presentation().expect("table rows are valid")))
        .collect()
}

pub fn table() -> TableJson {
    let computed = table_shifts();
    let rows: Vec<TableRowJson> = GORENSTEIN_TABLE
        .iter()
        .zip(computed)
        .map(|(row, a)| TableRowJson {
            name: row.name.to_string(),
            prime: row.prime_label.to_string(),
            group: row.group_label.to_string(),
            generator_degrees: row.generator_degrees.to_vec(),
            relation_degree: row.relation_degree,
            computed_shift_a: a,
            expected_shift_a: row.expected_shift_a,
            pass: a == row.expected_shift_a,
        })
        .collect();
    TableJson {
        schema: schema_tag("table"),
        all_pass: rows.iter().all(|r| r.pass),
        rows,
    }
}

// ---- text rendering ----

fn ring_line(r: &RingJson) -> String {
    let list = |v: &[SymbolJson]| {
        v.iter()
            .map(|s| s.symbol.as_str())
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut s = format!("{}[{}]", r.coefficients, list(&r.generators));
    if !r.relations.is_empty() {
        let _ = write!(s, "/({})", list(&r.relations));
    }
    let degrees: Vec<String> = r
        .generators
        .iter()
        .chain(&r.relations)
        .map(|g| format!("|{}|={}", g.symbol, g.degree))
        .collect();
    format!("{} = {}  {}", r.name, s, degrees.join(", "))
}

pub fn render_hilbert(doc: &HilbertJson) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "ring    {}", ring_line(&doc.ring));
    let _ = writeln!(out, "series  {}", doc.series.display);
    if let Some(w) = &doc.warning {
        let _ = writeln!(out, "warning {w}");
    }
    let _ = writeln!(out, "degree  rank");
    for c in &doc.coefficients {
        let _ = writeln!(out, "{:>6}  {}", c.degree, c.value);
    }
    out
}

pub fn render_shift(doc: &ShiftJson) -> String {
    let stanley = match (&doc.stanley, &doc.stanley_error) {
        (Some(a), _) => a.to_string(),
        (None, Some(e)) => format!("error: {e}"),
        (None, None) => "-".into(),
    };
    let mut out = format!(
        "{}  (Krull dimension {})\na by degree formula      {}\na by functional equation {}\n",
        doc.ring, doc.krull_dimension, doc.formula, stanley
    );
    if !doc.agree {
        out.push_str("MISMATCH: the two computations disagree\n");
    }
    out
}

fn support(m: &ModuleJson) -> String {
    let degrees: Vec<String> = m
        .coefficients
        .iter()
        .filter(|c| c.value != "0")
        .map(|c| {
            if c.value == "1" {
                c.degree.to_string()
            } else {
                format!("{}({})", c.degree, c.value)
            }
        })
        .collect();
    if degrees.is_empty() {
        "(zero)".into()
    } else {
        degrees.join(" ")
    }
}

pub fn render_duality(doc: &DualityJson) -> String {
    let mut out = String::new();
    let lc = &doc.local_cohomology;
    let _ = writeln!(out, "ring        {}", ring_line(&doc.ring));
    let _ = writeln!(out, "dimension   {}", doc.ring.krull_dimension);
    let _ = writeln!(out, "shift a     {}", doc.shift_a);
    let _ = writeln!(
        out,
        "H^{}_n(r_*)  = {}{}",
        lc.cohomological_degree,
        lc.module.label,
        if lc.det_twisted { " ⊗ det" } else { "" }
    );
    let _ = writeln!(out, "π_*(Γ_n r) = Σ^{{{}}} r_*^∨", doc.gamma.shift);
    let _ = writeln!(
        out,
        "π_*(Č_n r) = {} ⊕ {}  [{}]",
        doc.cech_ring_part.label, doc.cech_dual_part.label, doc.splitting
    );
    let _ = writeln!(
        out,
        "Anderson self-dual of shift {}  (K^R ≃ Σ^{{{}}} R)",
        doc.anderson_display_shift, doc.anderson_shift
    );
    let _ = writeln!(
        out,
        "vanishing hypotheses (a ≤ -2, Γ zero above a): {}",
        if doc.vanishing_hypotheses_hold {
            "hold"
        } else {
            "fail"
        }
    );
    if let Some(w) = &doc.regularity_warning {
        let _ = writeln!(out, "warning     {w}");
    }
    let window = doc.gamma.coefficients.last().map_or(0, |c| c.degree);
    let _ = writeln!(out, "nonzero degrees in -{window}..{window}:");
    for m in [
        &lc.module,
        &doc.gamma,
        &doc.cech_ring_part,
        &doc.cech_dual_part,
    ] {
        let _ = writeln!(out, "  {:<14} {}", m.label, support(m));
    }
    out
}

pub fn render_molien(doc: &MolienJson) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "group     {} (order {}) acting on {}",
        doc.group, doc.order, doc.ring
    );
    let _ = writeln!(out, "twist     {}", doc.twist);
    let _ = writeln!(out, "series    {}", doc.series.display);
    let _ = writeln!(out, "pseudoreflections {}", doc.pseudoreflection_count);
    match &doc.polynomial_degrees {
        Some(d) => {
            let list: Vec<String> = d.iter().map(u32::to_string).collect();
            let _ = writeln!(out, "polynomial, degrees [{}]", list.join(", "));
        }
        None => {
            let _ = writeln!(out, "not of the form 1/Π(1 - t^e)");
        }
    }
    let _ = writeln!(out, "degree  dimension");
    for c in &doc.coefficients {
        if c.value != "0" {
            let _ = writeln!(out, "{:>6}  {}", c.degree, c.value);
        }
    }
    out
}

pub fn render_sympow(doc: &SympowJson) -> String {
    let mut out = format!(
        "Sym^n of {} in terms of ({})\n",
        doc.group,
        doc.irreducibles.join(", ")
    );
    for row in &doc.rows {
        let m: Vec<String> = row.multiplicities.iter().map(u64::to_string).collect();
        let _ = writeln!(out, "{:>4}  ({})", row.n, m.join(","));
    }
    out
}

pub fn render_invgen(doc: &InvgenJson) -> String {
    let mut out = format!(
        "invariants of {} in degree {}: dimension {}\n",
        doc.group, doc.degree, doc.dimension
    );
    for p in &doc.basis {
        let _ = writeln!(out, "  {}", p.display);
    }
    out
}

pub fn render_descent(doc: &DescentJson) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} with {}", doc.ring, doc.group);
    let _ = writeln!(out, "base Gorenstein shift a       {}", doc.base_shift_a);
    let _ = writeln!(
        out,
        "base Anderson self-dual shift {}",
        doc.base_anderson_display_shift
    );
    if let Some(p) = &doc.prediction {
        let list: Vec<String> = p.invariant_degrees.iter().map(u32::to_string).collect();
        let _ = writeln!(out, "invariant degrees             [{}]", list.join(", "));
        let _ = writeln!(out, "Solomon supplement b          {}", p.solomon_b);
        let _ = writeln!(
            out,
            "predicted Gorenstein shift    {} = {} + ({})",
            p.descended_gorenstein_shift, doc.base_shift_a, p.solomon_b
        );
        let _ = writeln!(
            out,
            "predicted Anderson shift      {}",
            p.descended_anderson_shift
        );
        let _ = writeln!(
            out,
            "Solomon identity              {}",
            if p.solomon_verified {
                "verified"
            } else {
                "FAILED"
            }
        );
        let _ = writeln!(
            out,
            "invariant-ring cross-check    {}",
            if p.cross_check { "agrees" } else { "DISAGREES" }
        );
        let _ = writeln!(
            out,
            "these are rational predictions, not statements about the integral ring"
        );
    }
    if let Some(n) = &doc.note {
        let _ = writeln!(out, "note: {n}");
    }
    out
}

pub fn render_table(doc: &TableJson) -> String {
    let mut out = format!(
        "{:<14} {:<10} {:<9} {:<12} {:>4} {:>5} {:>9}  {}\n",
        "ring", "prime", "group", "degrees", "|f|", "a", "expected", "check"
    );
    for r in &doc.rows {
        let degrees: Vec<String> = r.generator_degrees.iter().map(u32::to_string).collect();
        let rel = r.relation_degree.map_or("-".to_string(), |d| d.to_string());
        let _ = writeln!(
            out,
            "{:<14} {:<10} {:<9} {:<12} {:>4} {:>5} {:>9}  {}",
            r.name,
            r.prime,
            if r.group.is_empty() { "-" } else { &r.group },
            degrees.join(","),
            rel,
            r.computed_shift_a,
            r.expected_shift_a,
            if r.pass { "PASS" } else { "FAIL" }
        );
    }
    out
}
