//! Request handling shared by the command line and the HTTP API. Both front
//! ends build the same request, call the same function and serialize the
//! same view, so their JSON output is byte-identical.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::advantage::{
    analyze, convert_size_semantics, effective_quantum_runtime, qaps, AlgorithmPair,
    QapsInterval, SizeSemantics,
};
use crate::catalog::{classify_catalog, CatalogEntry};
use crate::crossover::{
    solve_threshold, threshold_grid, ProblemSize, Threshold, TrafficLight, CANONICAL_RUNTIMES,
};
use crate::data::DataStore;
use crate::error::Error;
use crate::expr::X_MIN;
use crate::expr::{eval_log10_raw, parse, ComplexityExpr};
use crate::hardware::{
    logical_qubits_available, project_qubits, year_for_qubits, GrowthModel, HardwareScenario,
    RoadmapPoint, RoadmapStatus,
};
use crate::magnitude::{format_sig, round_sig, LogMagnitude};

const SIG: u32 = 6;
const DEFAULT_PROVIDER: &str = "ibm";
const DEFAULT_SCENARIO: &str = "base";
const DEFAULT_YEARS: (i64, i64) = (2020, 2050);
const PLOT_POINTS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
    Markdown,
    SvgPlotData,
}

impl Format {
    pub fn as_str(&self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Markdown => "markdown",
            Format::SvgPlotData => "svg-plot-data",
        }
    }

    pub fn content_type(&self) -> &'static str {
        match self {
            Format::Json | Format::SvgPlotData => "application/json",
            Format::Csv => "text/csv; charset=utf-8",
            Format::Markdown => "text/markdown; charset=utf-8",
            Format::Text => "text/plain; charset=utf-8",
        }
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "text" | "txt" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "markdown" | "md" => Ok(Format::Markdown),
            "svg-plot-data" | "svg" => Ok(Format::SvgPlotData),
            other => Err(Error::InvalidParameter {
                name: "format",
                message: format!("unknown format `{other}` (text, json, csv, markdown, svg-plot-data)"),
            }),
        }
    }
}

fn unsupported(format: Format, command: &str) -> Error {
    Error::InvalidParameter {
        name: "format",
        message: format!("`{}` output is not available for {command}", format.as_str()),
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("views serialize");
    s.push('\n');
    s
}

// ---------------------------------------------------------------- parameters

/// Parses an overhead literal: a plain number (`1e6`, `250000`) or a power
/// of ten (`10^5.5`). Must be at least 1.
pub fn parse_constant(text: &str) -> Result<LogMagnitude, Error> {
    let bad = |message: String| Error::InvalidParameter { name: "C", message };
    let t = text.trim();
    let log10 = if let Some(exp) = t.strip_prefix("10^") {
        exp.trim()
            .parse::<f64>()
            .map_err(|_| bad(format!("cannot read `{t}` as 10^k")))?
    } else {
        let v: f64 = t.parse().map_err(|_| bad(format!("cannot read `{t}` as a number")))?;
        if !(v > 0.0) {
            return Err(Error::InvalidConstant { log10: f64::NAN });
        }
        v.log10()
    };
    if !log10.is_finite() || log10 > 300.0 {
        return Err(bad(format!("`{t}` is out of range")));
    }
    if log10 < 0.0 {
        return Err(Error::InvalidConstant { log10 });
    }
    Ok(LogMagnitude::from_log10(log10))
}

/// The scenario named by `scenario` (default `base`), with its constant
/// replaced by `c` when given.
pub fn resolve_scenario(
    store: &DataStore,
    scenario: Option<&str>,
    c: Option<&str>,
) -> Result<HardwareScenario, Error> {
    let named = store.scenario(scenario.unwrap_or(DEFAULT_SCENARIO))?;
    match c {
        None => Ok(named.clone()),
        Some(text) => {
            let mut s = HardwareScenario::with_constant("custom", parse_constant(text)?);
            s.ec_qubit_ratio = named.ec_qubit_ratio;
            Ok(s)
        }
    }
}

/// Reads a year list such as `2024,2026..2030`. Ranges are inclusive.
pub fn parse_years(text: &str) -> Result<Vec<f64>, Error> {
    let bad = |item: &str| Error::InvalidParameter {
        name: "years",
        message: format!("cannot read `{item}` as a year or range"),
    };
    let mut years = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if let Some((a, b)) = item.split_once("..") {
            let a: i64 = a.trim().parse().map_err(|_| bad(item))?;
            let b: i64 = b.trim().parse().map_err(|_| bad(item))?;
            if b < a || b - a > 1000 {
                return Err(bad(item));
            }
            years.extend((a..=b).map(|y| y as f64));
        } else {
            years.push(item.parse::<f64>().map_err(|_| bad(item))?);
        }
    }
    if years.iter().any(|y| !y.is_finite()) {
        return Err(bad(text));
    }
    Ok(years)
}

fn default_years() -> Vec<f64> {
    (DEFAULT_YEARS.0..=DEFAULT_YEARS.1).map(|y| y as f64).collect()
}

fn required<'a>(value: &'a Option<String>, name: &'static str) -> Result<&'a str, Error> {
    value.as_deref().ok_or_else(|| Error::InvalidParameter {
        name,
        message: "missing".into(),
    })
}

// ---------------------------------------------------------------- shared views

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SizeView {
    pub display: String,
    /// Present below `10^15`.
    pub exact: Option<u64>,
    pub log10: f64,
}

impl From<ProblemSize> for SizeView {
    fn from(p: ProblemSize) -> Self {
        SizeView {
            display: p.to_string(),
            exact: p.exact(),
            log10: round_sig(p.log10(), SIG),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThresholdFields {
    pub threshold: String,
    pub log10_root: Option<f64>,
    pub n_star: Option<SizeView>,
    pub class: TrafficLight,
}

impl From<&Threshold> for ThresholdFields {
    fn from(t: &Threshold) -> Self {
        ThresholdFields {
            threshold: t.to_string(),
            log10_root: t.crossover().map(|c| round_sig(c.log10_root, SIG)),
            n_star: t.n_star().map(SizeView::from),
            class: t.class(),
        }
    }
}

impl ThresholdFields {
    /// A crossing past the solver's search cap.
    fn beyond_cap() -> Self {
        ThresholdFields {
            threshold: format!("> 10^{}", crate::crossover::X_CAP),
            log10_root: None,
            n_star: None,
            class: TrafficLight::Yellow,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScenarioView {
    pub name: String,
    pub log10_c: f64,
    pub ec_qubit_ratio: f64,
}

impl From<&HardwareScenario> for ScenarioView {
    fn from(s: &HardwareScenario) -> Self {
        ScenarioView {
            name: s.name.clone(),
            log10_c: round_sig(s.constant().log10(), SIG),
            ec_qubit_ratio: s.ec_qubit_ratio,
        }
    }
}

fn magnitude_text(m: LogMagnitude) -> String {
    match m.to_exact_integer() {
        Some(v) if m.log10() < 6.0 => v.to_string(),
        _ => format!("10^{}", format_sig(m.log10(), 4)),
    }
}

// ---------------------------------------------------------------- threshold

#[derive(Debug, Clone, Default, Deserialize)]
pub struct ThresholdRequest {
    pub classical: Option<String>,
    pub quantum: Option<String>,
    pub scenario: Option<String>,
    #[serde(rename = "C", alias = "c")]
    pub c: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThresholdView {
    pub classical: String,
    pub quantum: String,
    pub scenario: ScenarioView,
    #[serde(flatten)]
    pub result: ThresholdFields,
}

pub fn threshold(store: &DataStore, req: &ThresholdRequest) -> Result<ThresholdView, Error> {
    let classical = parse(required(&req.classical, "classical")?)?;
    let quantum = parse(required(&req.quantum, "quantum")?)?;
    let scenario = resolve_scenario(store, req.scenario.as_deref(), req.c.as_deref())?;
    let t = solve_threshold(&classical, &quantum, scenario.constant())?;
    Ok(ThresholdView {
        classical: classical.render(),
        quantum: quantum.render(),
        scenario: ScenarioView::from(&scenario),
        result: ThresholdFields::from(&t),
    })
}

pub fn render_threshold(v: &ThresholdView, format: Format) -> Result<String, Error> {
    let r = &v.result;
    let root = r.log10_root.map(|x| format_sig(x, SIG)).unwrap_or_default();
    Ok(match format {
        Format::Json => to_json(v),
        Format::Text => {
            let mut s = format!("{}\n", r.threshold);
            if r.log10_root.is_some() {
                let _ = writeln!(s, "log10 root: {root}");
            }
            let _ = writeln!(s, "class: {}", r.class);
            s
        }
        Format::Csv => format!(
            "classical,quantum,log10_c,threshold,log10_root,class\n{},{},{},{},{},{}\n",
            csv_field(&v.classical),
            csv_field(&v.quantum),
            v.scenario.log10_c,
            r.threshold,
            root,
            r.class
        ),
        Format::Markdown => format!(
            "| classical | quantum | log10 C | threshold | log10 root | class |\n|---|---|---|---|---|---|\n| `{}` | `{}` | {} | {} | {} | {} |\n",
            v.classical, v.quantum, v.scenario.log10_c, r.threshold, root, r.class
        ),
        Format::SvgPlotData => return Err(unsupported(format, "threshold")),
    })
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

// ---------------------------------------------------------------- grid

#[derive(Debug, Clone, Default, Deserialize)]
pub struct GridRequest {
    pub scenario: Option<String>,
    #[serde(rename = "C", alias = "c")]
    pub c: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridView {
    pub scenario: ScenarioView,
    pub classical: Vec<String>,
    pub quantum: Vec<String>,
    /// `cells[i][j]` pairs `classical[i]` with `quantum[j]`.
    pub cells: Vec<Vec<ThresholdFields>>,
}

pub fn grid(store: &DataStore, req: &GridRequest) -> Result<GridView, Error> {
    let scenario = resolve_scenario(store, req.scenario.as_deref(), req.c.as_deref())?;
    let runtimes = crate::crossover::canonical_runtimes();
    let g = threshold_grid(&runtimes, &runtimes, scenario.constant())?;
    let labels: Vec<String> = CANONICAL_RUNTIMES.iter().map(|(l, _)| l.to_string()).collect();
    Ok(GridView {
        scenario: ScenarioView::from(&scenario),
        classical: labels.clone(),
        quantum: labels,
        cells: g
            .cells
            .iter()
            .map(|row| row.iter().map(|c| ThresholdFields::from(&c.threshold)).collect())
            .collect(),
    })
}

pub fn render_grid(v: &GridView, format: Format) -> Result<String, Error> {
    let mut s = String::new();
    match format {
        Format::Json => return Ok(to_json(v)),
        Format::Csv => {
            s.push_str("classical,quantum,threshold,log10_root,class\n");
            for (i, row) in v.cells.iter().enumerate() {
                for (j, cell) in row.iter().enumerate() {
                    let root = cell.log10_root.map(|x| format_sig(x, SIG)).unwrap_or_default();
                    let _ = writeln!(
                        s,
                        "{},{},{},{},{}",
                        v.classical[i], v.quantum[j], cell.threshold, root, cell.class
                    );
                }
            }
        }
        Format::Markdown | Format::Text => {
            let _ = writeln!(
                s,
                "Threshold n* by classical (rows) and quantum (columns) runtime, log10 C = {}\n",
                v.scenario.log10_c
            );
            let _ = writeln!(s, "| classical \\ quantum | {} |", v.quantum.join(" | "));
            let _ = writeln!(s, "|---|{}", "---|".repeat(v.quantum.len()));
            for (label, row) in v.classical.iter().zip(&v.cells) {
                let cells: Vec<String> = row
                    .iter()
                    .map(|c| match c.class {
                        TrafficLight::Red => "-".to_string(),
                        class => format!("{} ({class})", c.threshold),
                    })
                    .collect();
                let _ = writeln!(s, "| {label} | {} |", cells.join(" | "));
            }
        }
        Format::SvgPlotData => return Err(unsupported(format, "grid")),
    }
    Ok(s)
}

// ---------------------------------------------------------------- analyze / qaps

#[derive(Debug, Clone, Default, Deserialize)]
pub struct AnalyzeRequest {
    /// Catalog entry with a quantum pair. Otherwise the expressions below
    /// describe an ad-hoc pair.
    pub id: Option<String>,
    pub classical: Option<String>,
    pub quantum: Option<String>,
    pub qubits: Option<String>,
    pub loading: Option<String>,
    pub semantics: Option<String>,
    pub scenario: Option<String>,
    #[serde(rename = "C", alias = "c")]
    pub c: Option<String>,
    pub provider: Option<String>,
    pub years: Option<String>,
    /// Single year, used by the QAPS query.
    pub year: Option<f64>,
}

impl AnalyzeRequest {
    fn pair(&self, store: &DataStore) -> Result<AlgorithmPair, Error> {
        if let Some(id) = &self.id {
            let entry = store.entry(id)?;
            return entry.pair().ok_or_else(|| Error::InvalidParameter {
                name: "id",
                message: format!("catalog entry `{id}` has no quantum algorithm"),
            });
        }
        let semantics = match self.semantics.as_deref() {
            None => SizeSemantics::Elements,
            Some(s) => serde_json::from_value(serde_json::Value::String(s.to_string())).map_err(
                |_| Error::InvalidParameter {
                    name: "semantics",
                    message: format!("unknown size semantics `{s}` (elements, bits, variables_log2)"),
                },
            )?,
        };
        Ok(AlgorithmPair {
            id: "custom".into(),
            problem_name: "custom".into(),
            classical_runtime: parse(required(&self.classical, "classical")?)?,
            quantum_runtime: parse(required(&self.quantum, "quantum")?)?,
            qubit_requirement: match &self.qubits {
                Some(q) => parse(q)?,
                None => ComplexityExpr::Var,
            },
            data_loading: self.loading.as_deref().map(parse).transpose()?,
            size_semantics: semantics,
            citation: String::new(),
        })
    }

    fn context(&self, store: &DataStore) -> Result<(AlgorithmPair, HardwareScenario, GrowthModel), Error> {
        let pair = self.pair(store)?;
        let scenario = resolve_scenario(store, self.scenario.as_deref(), self.c.as_deref())?;
        let model = store.growth_model(self.provider.as_deref().unwrap_or(DEFAULT_PROVIDER))?;
        Ok((pair, scenario, model))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairView {
    pub id: String,
    pub problem_name: String,
    pub classical_runtime: String,
    pub quantum_runtime: String,
    pub effective_quantum_runtime: String,
    pub qubit_requirement: String,
    pub data_loading: Option<String>,
    pub size_semantics: SizeSemantics,
}

impl PairView {
    fn new(pair: &AlgorithmPair, effective: &ComplexityExpr) -> Self {
        PairView {
            id: pair.id.clone(),
            problem_name: pair.problem_name.clone(),
            classical_runtime: pair.classical_runtime.render(),
            quantum_runtime: pair.quantum_runtime.render(),
            effective_quantum_runtime: effective.render(),
            qubit_requirement: pair.qubit_requirement.render(),
            data_loading: pair.data_loading.as_ref().map(ComplexityExpr::render),
            size_semantics: pair.size_semantics,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModelView {
    pub provider: String,
    pub reference_year: f64,
    pub intercept: f64,
    pub slope: f64,
    pub r_squared: Option<f64>,
    pub points_used: usize,
    /// Years for the physical qubit count to grow tenfold.
    pub years_per_decade: f64,
}

impl From<&GrowthModel> for ModelView {
    fn from(m: &GrowthModel) -> Self {
        ModelView {
            provider: m.provider.clone(),
            reference_year: m.reference_year,
            intercept: round_sig(m.intercept, 10),
            slope: round_sig(m.slope, 10),
            r_squared: m.r_squared.map(|r| round_sig(r, 10)),
            points_used: m.points_used,
            years_per_decade: round_sig(1.0 / m.slope, SIG),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QapsView {
    /// `"empty"` or `"range"`.
    pub kind: &'static str,
    pub lower: Option<SizeView>,
    /// Absent for an empty interval; `null` upper with kind `range` means
    /// unbounded.
    pub upper: Option<SizeView>,
    pub unbounded: bool,
}

impl From<&QapsInterval> for QapsView {
    fn from(q: &QapsInterval) -> Self {
        match q {
            QapsInterval::Empty => QapsView {
                kind: "empty",
                lower: None,
                upper: None,
                unbounded: false,
            },
            QapsInterval::Range { lower, upper } => QapsView {
                kind: "range",
                lower: Some((*lower).into()),
                upper: upper.map(SizeView::from),
                unbounded: upper.is_none(),
            },
        }
    }
}

impl QapsView {
    fn text(&self) -> String {
        match (&self.lower, &self.upper) {
            (None, _) => "empty".into(),
            (Some(l), Some(u)) => format!("[{}, {}]", l.display, u.display),
            (Some(l), None) => format!("[{}, unbounded)", l.display),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct YearView {
    pub year: f64,
    pub log10_logical_qubits_available: f64,
    pub qaps: QapsView,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SizeConversionView {
    pub semantics: SizeSemantics,
    pub size: SizeView,
    /// For bit-length sizes, `log10` of the largest value the bits express.
    pub log10_value: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalyzeView {
    pub pair: PairView,
    pub scenario: ScenarioView,
    pub model: ModelView,
    #[serde(flatten)]
    pub result: ThresholdFields,
    pub size_conversion: Option<SizeConversionView>,
    pub logical_qubits: Option<String>,
    pub log10_logical_qubits: Option<f64>,
    pub physical_qubits: Option<String>,
    pub log10_physical_qubits: Option<f64>,
    pub first_advantage_year: Option<f64>,
    /// `floor-ceil` of the first advantage year, e.g. `2026-2027`.
    pub first_advantage_range: Option<String>,
    pub loading_bound_applied: bool,
    pub qaps_by_year: Vec<YearView>,
}

pub fn analyze_pair(store: &DataStore, req: &AnalyzeRequest) -> Result<AnalyzeView, Error> {
    let (pair, scenario, model) = req.context(store)?;
    let years = match &req.years {
        Some(text) => parse_years(text)?,
        None => default_years(),
    };
    let report = analyze(&pair, &scenario, &model, &years)?;
    let (effective, _) = effective_quantum_runtime(&pair)?;
    let conversion = report.threshold.n_star().map(|n| {
        let c = convert_size_semantics(n, pair.size_semantics);
        SizeConversionView {
            semantics: c.semantics,
            size: c.size.into(),
            log10_value: c.value.map(|v| round_sig(v.log10(), SIG)),
        }
    });
    let qaps_by_year = report
        .qaps_by_year
        .iter()
        .map(|y| YearView {
            year: y.year,
            log10_logical_qubits_available: round_sig(
                logical_qubits_available(&model, y.year, scenario.ec_qubit_ratio).log10(),
                SIG,
            ),
            qaps: (&y.qaps).into(),
        })
        .collect();
    Ok(AnalyzeView {
        pair: PairView::new(&pair, &effective),
        scenario: ScenarioView::from(&scenario),
        model: ModelView::from(&model),
        result: ThresholdFields::from(&report.threshold),
        size_conversion: conversion,
        logical_qubits: report.logical_qubits_at_threshold.map(magnitude_text),
        log10_logical_qubits: report.logical_qubits_at_threshold.map(|m| round_sig(m.log10(), SIG)),
        physical_qubits: report.physical_qubits_at_threshold.map(magnitude_text),
        log10_physical_qubits: report.physical_qubits_at_threshold.map(|m| round_sig(m.log10(), SIG)),
        first_advantage_year: report.first_advantage_year.map(|y| round_sig(y, 8)),
        first_advantage_range: report.first_advantage_range().map(|(a, b)| format!("{a}-{b}")),
        loading_bound_applied: report.loading_bound_applied,
        qaps_by_year,
    })
}

pub fn render_analyze(v: &AnalyzeView, format: Format) -> Result<String, Error> {
    let mut s = String::new();
    match format {
        Format::Json => return Ok(to_json(v)),
        Format::Text | Format::Markdown => {
            let md = format == Format::Markdown;
            if md {
                let _ = writeln!(s, "## {} ({})\n", v.pair.problem_name, v.pair.id);
            } else {
                let _ = writeln!(s, "{} ({})", v.pair.problem_name, v.pair.id);
            }
            let bullet = if md { "- " } else { "  " };
            let mut line = |k: &str, val: String| {
                let _ = writeln!(s, "{bullet}{k}: {val}");
            };
            line("classical", v.pair.classical_runtime.clone());
            line("quantum", v.pair.effective_quantum_runtime.clone());
            if v.loading_bound_applied {
                line("data loading bound applied", "yes".into());
            }
            line("scenario", format!("{} (log10 C = {})", v.scenario.name, v.scenario.log10_c));
            line("provider", v.model.provider.clone());
            line("threshold", format!("{} ({})", v.result.threshold, v.result.class));
            if let Some(root) = v.result.log10_root {
                line("log10 root", format_sig(root, SIG));
            }
            if let Some(c) = &v.size_conversion {
                match c.semantics {
                    SizeSemantics::VariablesLog2 => line("variables", c.size.display.clone()),
                    SizeSemantics::Bits => {
                        if let Some(lv) = c.log10_value {
                            line("largest value", format!("10^{}", format_sig(lv, 4)));
                        }
                    }
                    SizeSemantics::Elements => {}
                }
            }
            if let (Some(l), Some(p)) = (&v.logical_qubits, &v.physical_qubits) {
                line("qubits at threshold", format!("{l} logical, {p} physical"));
            }
            if let (Some(y), Some(r)) = (v.first_advantage_year, &v.first_advantage_range) {
                line("first advantage year", format!("{} ({r})", format_sig(y, 6)));
            }
            let feasible: Vec<&YearView> =
                v.qaps_by_year.iter().filter(|y| y.qaps.kind == "range").collect();
            if let (Some(first), Some(last)) = (feasible.first(), feasible.last()) {
                line(
                    "QAPS",
                    format!(
                        "{} {} ... {} {}",
                        first.year,
                        first.qaps.text(),
                        last.year,
                        last.qaps.text()
                    ),
                );
            }
        }
        Format::Csv => {
            s.push_str("year,log10_logical_qubits_available,qaps_lower,qaps_upper\n");
            for y in &v.qaps_by_year {
                let lower = y.qaps.lower.as_ref().map(|l| l.display.clone()).unwrap_or_default();
                let upper = match (&y.qaps.upper, y.qaps.unbounded) {
                    (Some(u), _) => u.display.clone(),
                    (None, true) => "unbounded".into(),
                    (None, false) => String::new(),
                };
                let _ = writeln!(s, "{},{},{},{}", y.year, y.log10_logical_qubits_available, lower, upper);
            }
        }
        Format::SvgPlotData => return Err(unsupported(format, "analyze")),
    }
    Ok(s)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QapsQueryView {
    pub pair_id: String,
    pub provider: String,
    pub scenario: ScenarioView,
    pub year: f64,
    pub log10_logical_qubits_available: f64,
    pub qaps: QapsView,
}

pub fn qaps_query(store: &DataStore, req: &AnalyzeRequest) -> Result<QapsQueryView, Error> {
    let year = req.year.ok_or_else(|| Error::InvalidParameter {
        name: "year",
        message: "missing".into(),
    })?;
    if !year.is_finite() {
        return Err(Error::InvalidParameter {
            name: "year",
            message: "must be finite".into(),
        });
    }
    let (pair, scenario, model) = req.context(store)?;
    let interval = qaps(&pair, &scenario, &model, year)?;
    Ok(QapsQueryView {
        pair_id: pair.id,
        provider: model.provider.clone(),
        scenario: ScenarioView::from(&scenario),
        year,
        log10_logical_qubits_available: round_sig(
            logical_qubits_available(&model, year, scenario.ec_qubit_ratio).log10(),
            SIG,
        ),
        qaps: (&interval).into(),
    })
}

pub fn render_qaps(v: &QapsQueryView, format: Format) -> Result<String, Error> {
    Ok(match format {
        Format::Json => to_json(v),
        Format::Text | Format::Markdown => format!(
            "{} {}: {}\n",
            v.pair_id,
            v.year,
            v.qaps.text()
        ),
        Format::Csv => format!(
            "pair,year,lower,upper\n{},{},{},{}\n",
            v.pair_id,
            v.year,
            v.qaps.lower.as_ref().map(|l| l.display.as_str()).unwrap_or(""),
            match (&v.qaps.upper, v.qaps.unbounded) {
                (Some(u), _) => u.display.clone(),
                (None, true) => "unbounded".into(),
                (None, false) => String::new(),
            }
        ),
        Format::SvgPlotData => return Err(unsupported(format, "qaps")),
    })
}

// ---------------------------------------------------------------- roadmap

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RoadmapAction {
    #[default]
    Fit,
    Project,
    YearFor,
}

#[derive(Debug, Clone, Default, Deserialize)]
pub struct RoadmapRequest {
    #[serde(default)]
    pub action: RoadmapAction,
    pub provider: Option<String>,
    /// Year to project the physical qubit count to.
    pub year: Option<f64>,
    /// Physical qubit count to find the year for.
    pub qubits: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProjectionView {
    pub year: f64,
    pub log10_physical_qubits: f64,
    pub physical_qubits: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct YearForView {
    pub physical_qubits: f64,
    pub year: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RoadmapView {
    pub provider: String,
    pub model: ModelView,
    pub points: Vec<RoadmapPoint>,
    pub projection: Option<ProjectionView>,
    pub year_for: Option<YearForView>,
}

pub fn roadmap(store: &DataStore, req: &RoadmapRequest) -> Result<RoadmapView, Error> {
    let missing = |name: &'static str| Error::InvalidParameter {
        name,
        message: "missing".into(),
    };
    match req.action {
        RoadmapAction::Project if req.year.is_none() => return Err(missing("year")),
        RoadmapAction::YearFor if req.qubits.is_none() => return Err(missing("qubits")),
        _ => {}
    }
    let provider = req.provider.as_deref().unwrap_or(DEFAULT_PROVIDER);
    let points = store.roadmap(provider)?.to_vec();
    let model = store.growth_model(provider)?;
    let projection = req.year.map(|year| {
        let q = project_qubits(&model, year);
        ProjectionView {
            year,
            log10_physical_qubits: round_sig(q.log10(), 10),
            physical_qubits: magnitude_text(q),
        }
    });
    let year_for = match req.qubits {
        None => None,
        Some(q) if q >= 1.0 && q.is_finite() => Some(YearForView {
            physical_qubits: q,
            year: round_sig(year_for_qubits(&model, LogMagnitude::from_log10(q.log10())), 10),
        }),
        Some(q) => {
            return Err(Error::InvalidParameter {
                name: "qubits",
                message: format!("must be at least 1 (got {q})"),
            })
        }
    };
    Ok(RoadmapView {
        provider: provider.to_lowercase(),
        model: ModelView::from(&model),
        points,
        projection,
        year_for,
    })
}

pub fn render_roadmap(v: &RoadmapView, format: Format) -> Result<String, Error> {
    let mut s = String::new();
    match format {
        Format::Json => return Ok(to_json(v)),
        Format::Text | Format::Markdown => {
            let m = &v.model;
            let _ = writeln!(
                s,
                "{}: log10(qubits) = {} + {} * (year - {}), r^2 = {}, {} points",
                v.provider,
                format_sig(m.intercept, SIG),
                format_sig(m.slope, SIG),
                m.reference_year,
                m.r_squared.map(|r| format_sig(r, 4)).unwrap_or_else(|| "n/a".into()),
                m.points_used
            );
            let _ = writeln!(s, "tenfold growth every {} years", format_sig(m.years_per_decade, 3));
            if let Some(p) = &v.projection {
                let _ = writeln!(s, "{}: {} physical qubits", p.year, p.physical_qubits);
            }
            if let Some(y) = &v.year_for {
                let _ = writeln!(s, "{} physical qubits in {}", y.physical_qubits, format_sig(y.year, 6));
            }
        }
        Format::Csv => {
            s.push_str("provider,year,physical_qubits,status\n");
            for p in &v.points {
                let status = serde_json::to_value(p.status).expect("status serializes");
                let _ = writeln!(
                    s,
                    "{},{},{},{}",
                    p.provider,
                    p.year,
                    p.physical_qubits,
                    status.as_str().unwrap_or_default()
                );
            }
        }
        Format::SvgPlotData => return Err(unsupported(format, "roadmap")),
    }
    Ok(s)
}

// ---------------------------------------------------------------- catalog

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CatalogAction {
    #[default]
    List,
    /// Classify under a scenario.
    Classify,
}

#[derive(Debug, Clone, Default, Deserialize)]
pub struct CatalogRequest {
    #[serde(default)]
    pub action: CatalogAction,
    /// With `classify`: also compare unpaired entries against the canonical
    /// quantum runtimes.
    #[serde(default)]
    pub include_unpaired: bool,
    pub tag: Option<String>,
    pub scenario: Option<String>,
    #[serde(rename = "C", alias = "c")]
    pub c: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassifiedView {
    pub id: String,
    pub problem_name: String,
    pub classical_runtime: String,
    pub quantum_runtime: String,
    pub paired: bool,
    #[serde(flatten)]
    pub result: ThresholdFields,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassCounts {
    pub green: usize,
    pub yellow: usize,
    pub red: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum CatalogView {
    List {
        count: usize,
        entries: Vec<CatalogEntry>,
    },
    Classified {
        scenario: ScenarioView,
        counts: ClassCounts,
        entries: Vec<ClassifiedView>,
    },
}

pub fn catalog(store: &DataStore, req: &CatalogRequest) -> Result<CatalogView, Error> {
    let entries: Vec<CatalogEntry> = store
        .catalog
        .iter()
        .filter(|e| req.tag.as_ref().is_none_or(|t| e.tags.iter().any(|x| x.eq_ignore_ascii_case(t))))
        .cloned()
        .collect();
    if req.action == CatalogAction::List {
        return Ok(CatalogView::List {
            count: entries.len(),
            entries,
        });
    }
    let scenario = resolve_scenario(store, req.scenario.as_deref(), req.c.as_deref())?;
    let classified = classify_catalog(&entries, &scenario, req.include_unpaired)?;
    let count = |t: TrafficLight| classified.iter().filter(|c| c.class == t).count();
    Ok(CatalogView::Classified {
        scenario: ScenarioView::from(&scenario),
        counts: ClassCounts {
            green: count(TrafficLight::Green),
            yellow: count(TrafficLight::Yellow),
            red: count(TrafficLight::Red),
        },
        entries: classified
            .iter()
            .map(|c| ClassifiedView {
                id: c.id.clone(),
                problem_name: c.problem_name.clone(),
                classical_runtime: c.classical_runtime.render(),
                quantum_runtime: c.quantum_runtime.render(),
                paired: c.paired,
                result: match &c.threshold {
                    Some(t) => ThresholdFields::from(t),
                    None => ThresholdFields::beyond_cap(),
                },
            })
            .collect(),
    })
}

pub fn render_catalog_view(v: &CatalogView, format: Format) -> Result<String, Error> {
    let mut s = String::new();
    match (v, format) {
        (_, Format::Json) => return Ok(to_json(v)),
        (_, Format::SvgPlotData) => return Err(unsupported(format, "catalog")),
        (CatalogView::List { entries, .. }, Format::Csv) => {
            s.push_str("id,problem_name,classical_runtime,quantum_runtime,runtime_class_label,tags\n");
            for e in entries {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{}",
                    csv_field(&e.id),
                    csv_field(&e.problem_name),
                    csv_field(&e.classical_runtime.render()),
                    csv_field(&e.quantum_runtime.as_ref().map(|q| q.render()).unwrap_or_default()),
                    csv_field(&e.runtime_class_label),
                    csv_field(&e.tags.join(";"))
                );
            }
        }
        (CatalogView::List { entries, .. }, _) => {
            s.push_str("| id | problem | classical | quantum |\n|---|---|---|---|\n");
            for e in entries {
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | {} |",
                    e.id,
                    e.problem_name,
                    e.runtime_class_label,
                    e.quantum_runtime.as_ref().map(|q| q.render()).unwrap_or_else(|| "-".into())
                );
            }
        }
        (CatalogView::Classified { entries, .. }, Format::Csv) => {
            s.push_str("id,problem_name,classical_runtime,quantum_runtime,paired,threshold,log10_root,class\n");
            for e in entries {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{},{}",
                    csv_field(&e.id),
                    csv_field(&e.problem_name),
                    csv_field(&e.classical_runtime),
                    csv_field(&e.quantum_runtime),
                    e.paired,
                    e.result.threshold,
                    e.result.log10_root.map(|x| format_sig(x, SIG)).unwrap_or_default(),
                    e.result.class
                );
            }
        }
        (CatalogView::Classified { scenario, counts, entries }, _) => {
            let _ = writeln!(
                s,
                "log10 C = {}: {} green, {} yellow, {} red\n",
                scenario.log10_c, counts.green, counts.yellow, counts.red
            );
            s.push_str("| id | classical | quantum | threshold | class |\n|---|---|---|---|---|\n");
            for e in entries {
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | {} | {} |",
                    e.id, e.classical_runtime, e.quantum_runtime, e.result.threshold, e.result.class
                );
            }
        }
    }
    Ok(s)
}

// ---------------------------------------------------------------- plots

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PlotKind {
    /// Classical and overhead-scaled quantum cost against problem size.
    Crossover,
    /// The per-year QAPS interval.
    Wedge,
    /// Provider qubit counts and the fitted trend.
    Roadmap,
}

impl FromStr for PlotKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        serde_json::from_value(serde_json::Value::String(s.to_ascii_lowercase())).map_err(|_| {
            Error::InvalidParameter {
                name: "kind",
                message: format!("unknown plot `{s}` (crossover, wedge, roadmap)"),
            }
        })
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Series {
    pub name: String,
    /// `[x, y]` pairs.
    pub points: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Marker {
    pub label: String,
    pub x: f64,
    pub y: Option<f64>,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct PlotData {
    pub kind: &'static str,
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub series: Vec<Series>,
    pub markers: Vec<Marker>,
}

/// Crossover plot of `log10 f(n)` and `log10 (C g(n))` against `log10 n`.
/// The range extends past the root so the crossing is visible.
pub fn crossover_plot(store: &DataStore, req: &AnalyzeRequest) -> Result<PlotData, Error> {
    let pair = req.pair(store)?;
    let classical = pair.classical_runtime.clone();
    let (quantum, _) = effective_quantum_runtime(&pair)?;
    let scenario = resolve_scenario(store, req.scenario.as_deref(), req.c.as_deref())?;
    let c = scenario.constant().log10();
    let t = solve_threshold(&classical, &quantum, scenario.constant())?;
    let x_max = match t.crossover() {
        Some(cr) => (cr.log10_root * 2.0).max(cr.log10_root + 2.0).min(crate::crossover::X_CAP),
        None => 12.0,
    };
    let xs: Vec<f64> = (0..PLOT_POINTS)
        .map(|i| X_MIN + (x_max - X_MIN) * i as f64 / (PLOT_POINTS - 1) as f64)
        .collect();
    let sample = |e: &ComplexityExpr, shift: f64| -> Vec<[f64; 2]> {
        xs.iter()
            .map(|&x| [x, eval_log10_raw(e, x) + shift])
            .filter(|p| p[1].is_finite())
            .collect()
    };
    let markers = t
        .crossover()
        .map(|cr| Marker {
            label: format!("n* = {}", cr.n_star),
            x: cr.log10_root,
            y: Some(eval_log10_raw(&classical, cr.log10_root)),
        })
        .into_iter()
        .collect();
    Ok(PlotData {
        kind: "crossover",
        title: format!("{} vs {} (log10 C = {})", classical.render(), quantum.render(), format_sig(c, SIG)),
        x_label: "log10 n".into(),
        y_label: "log10 operations".into(),
        series: vec![
            Series {
                name: "classical".into(),
                points: sample(&classical, 0.0),
            },
            Series {
                name: "quantum".into(),
                points: sample(&quantum, c),
            },
        ],
        markers,
    })
}

fn year_span(req: &AnalyzeRequest, from: f64) -> Result<Vec<f64>, Error> {
    match &req.years {
        Some(text) => parse_years(text),
        None => Ok((from as i64..=DEFAULT_YEARS.1).map(|y| y as f64).collect()),
    }
}

/// Lower and upper QAPS bounds (`log10 n`) per year. Years with an empty
/// interval are skipped.
pub fn wedge_plot(store: &DataStore, req: &AnalyzeRequest) -> Result<PlotData, Error> {
    let (pair, scenario, model) = req.context(store)?;
    let years = year_span(req, DEFAULT_YEARS.0 as f64)?;
    let report = analyze(&pair, &scenario, &model, &years)?;
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    for y in &report.qaps_by_year {
        if let QapsInterval::Range { lower: l, upper: u } = y.qaps {
            lower.push([y.year, l.log10()]);
            if let Some(u) = u {
                upper.push([y.year, u.log10()]);
            }
        }
    }
    let markers = report
        .first_advantage_year
        .map(|y| Marker {
            label: "first advantage".into(),
            x: y,
            y: report.threshold.n_star().map(|n| n.log10()),
        })
        .into_iter()
        .collect();
    Ok(PlotData {
        kind: "wedge",
        title: format!("Quantum-advantaged problem sizes: {} on {}", pair.id, model.provider),
        x_label: "year".into(),
        y_label: "log10 n".into(),
        series: vec![
            Series {
                name: "lower".into(),
                points: lower,
            },
            Series {
                name: "upper".into(),
                points: upper,
            },
        ],
        markers,
    })
}

pub fn roadmap_plot(store: &DataStore, req: &AnalyzeRequest) -> Result<PlotData, Error> {
    let provider = req.provider.as_deref().unwrap_or(DEFAULT_PROVIDER);
    let points = store.roadmap(provider)?;
    let model = store.growth_model(provider)?;
    let years = year_span(req, model.reference_year)?;
    let by_status = |status: RoadmapStatus| -> Vec<[f64; 2]> {
        points
            .iter()
            .filter(|p| p.status == status)
            .map(|p| [p.year, (p.physical_qubits as f64).log10()])
            .collect()
    };
    Ok(PlotData {
        kind: "roadmap",
        title: format!("{} physical qubits", provider.to_lowercase()),
        x_label: "year".into(),
        y_label: "log10 physical qubits".into(),
        series: vec![
            Series {
                name: "realized".into(),
                points: by_status(RoadmapStatus::Realized),
            },
            Series {
                name: "roadmap".into(),
                points: by_status(RoadmapStatus::Roadmap),
            },
            Series {
                name: "fit".into(),
                points: years.iter().map(|&y| [y, project_qubits(&model, y).log10()]).collect(),
            },
        ],
        markers: Vec::new(),
    })
}

pub fn plot(store: &DataStore, kind: PlotKind, req: &AnalyzeRequest) -> Result<PlotData, Error> {
    match kind {
        PlotKind::Crossover => crossover_plot(store, req),
        PlotKind::Wedge => wedge_plot(store, req),
        PlotKind::Roadmap => roadmap_plot(store, req),
    }
}

pub fn render_plot(v: &PlotData, format: Format) -> Result<String, Error> {
    match format {
        Format::Json | Format::SvgPlotData => Ok(to_json(v)),
        Format::Csv => {
            let mut s = String::from("series,x,y\n");
            for series in &v.series {
                for [x, y] in &series.points {
                    let _ = writeln!(s, "{},{x},{y}", series.name);
                }
            }
            Ok(s)
        }
        Format::Text | Format::Markdown => Err(unsupported(format, "plot")),
    }
}
