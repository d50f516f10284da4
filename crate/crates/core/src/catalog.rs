//! Data file of classical runtimes for common problems, some paired with a
//! known quantum algorithm.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::advantage::{effective_quantum_runtime, AlgorithmPair, SizeSemantics};
use crate::crossover::{canonical_runtimes, solve_threshold, Threshold, TrafficLight};
use crate::error::Error;
use crate::expr::{asymptotic_compare, parse, Asymptotic, ComplexityExpr};
use crate::hardware::HardwareScenario;

/// One row of the catalog file, expressions in DSL text form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    id: String,
    problem_name: String,
    classical_runtime: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    quantum_runtime: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    qubit_requirement: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    data_loading: Option<String>,
    size_semantics: SizeSemantics,
    runtime_class_label: String,
    tags: Vec<String>,
    citation: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CatalogEntry {
    pub id: String,
    pub problem_name: String,
    pub classical_runtime: ComplexityExpr,
    pub quantum_runtime: Option<ComplexityExpr>,
    pub qubit_requirement: Option<ComplexityExpr>,
    pub data_loading: Option<ComplexityExpr>,
    pub size_semantics: SizeSemantics,
    pub runtime_class_label: String,
    pub tags: Vec<String>,
    pub citation: String,
}

impl CatalogEntry {
    /// The quantum pair, when the entry has one. Entries without an explicit
    /// qubit requirement assume `n` logical qubits.
    pub fn pair(&self) -> Option<AlgorithmPair> {
        let quantum = self.quantum_runtime.clone()?;
        Some(AlgorithmPair {
            id: self.id.clone(),
            problem_name: self.problem_name.clone(),
            classical_runtime: self.classical_runtime.clone(),
            quantum_runtime: quantum,
            qubit_requirement: self
                .qubit_requirement
                .clone()
                .unwrap_or(ComplexityExpr::Var),
            data_loading: self.data_loading.clone(),
            size_semantics: self.size_semantics,
            citation: self.citation.clone(),
        })
    }

    fn to_raw(&self) -> RawEntry {
        RawEntry {
            id: self.id.clone(),
            problem_name: self.problem_name.clone(),
            classical_runtime: self.classical_runtime.render(),
            quantum_runtime: self.quantum_runtime.as_ref().map(ComplexityExpr::render),
            qubit_requirement: self.qubit_requirement.as_ref().map(ComplexityExpr::render),
            data_loading: self.data_loading.as_ref().map(ComplexityExpr::render),
            size_semantics: self.size_semantics,
            runtime_class_label: self.runtime_class_label.clone(),
            tags: self.tags.clone(),
            citation: self.citation.clone(),
        }
    }
}

fn parse_field(row: usize, field: &'static str, text: &str) -> Result<ComplexityExpr, Error> {
    parse(text).map_err(|e| Error::Expression {
        row,
        field,
        source: Box::new(e),
    })
}

fn parse_optional(
    row: usize,
    field: &'static str,
    text: &Option<String>,
) -> Result<Option<ComplexityExpr>, Error> {
    text.as_deref().map(|t| parse_field(row, field, t)).transpose()
}

/// Parses and validates catalog JSON. Rows are numbered from 1.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, Error> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let rows: Vec<serde_json::Value> = serde_json::from_str(text).map_err(|e| Error::Schema {
        row: 0,
        message: e.to_string(),
    })?;
    let mut seen = std::collections::HashSet::new();
    rows.into_iter()
        .enumerate()
        .map(|(i, value)| {
            let row = i + 1;
            let raw: RawEntry = serde_json::from_value(value).map_err(|e| Error::Schema {
                row,
                message: e.to_string(),
            })?;
            if !seen.insert(raw.id.clone()) {
                return Err(Error::Schema {
                    row,
                    message: format!("duplicate id `{}`", raw.id),
                });
            }
            let classical_runtime = parse_field(row, "classical_runtime", &raw.classical_runtime)?;
            let label = parse_field(row, "runtime_class_label", &raw.runtime_class_label)?;
            if asymptotic_compare(&label, &classical_runtime)? != Asymptotic::Equal {
                return Err(Error::LabelMismatch {
                    row,
                    label: raw.runtime_class_label.clone(),
                });
            }
            Ok(CatalogEntry {
                id: raw.id,
                problem_name: raw.problem_name,
                classical_runtime,
                quantum_runtime: parse_optional(row, "quantum_runtime", &raw.quantum_runtime)?,
                qubit_requirement: parse_optional(row, "qubit_requirement", &raw.qubit_requirement)?,
                data_loading: parse_optional(row, "data_loading", &raw.data_loading)?,
                size_semantics: raw.size_semantics,
                runtime_class_label: raw.runtime_class_label,
                tags: raw.tags,
                citation: raw.citation,
            })
        })
        .collect()
}

pub fn load_catalog(path: &Path) -> Result<Vec<CatalogEntry>, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_catalog(&text)
}

/// Canonical text of a catalog: pretty JSON, expressions rendered, absent
/// optional fields omitted, trailing newline.
pub fn render_catalog(entries: &[CatalogEntry]) -> String {
    let raw: Vec<RawEntry> = entries.iter().map(CatalogEntry::to_raw).collect();
    let mut text = serde_json::to_string_pretty(&raw).expect("catalog serializes");
    text.push('\n');
    text
}

pub fn save_catalog(path: &Path, entries: &[CatalogEntry]) -> Result<(), Error> {
    std::fs::write(path, render_catalog(entries))?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassifiedEntry {
    pub id: String,
    pub problem_name: String,
    pub classical_runtime: ComplexityExpr,
    pub quantum_runtime: ComplexityExpr,
    /// True when the quantum side came from the catalog rather than the
    /// canonical runtime list.
    pub paired: bool,
    pub class: TrafficLight,
    /// `None` when the crossing lies beyond the solver's search cap: the
    /// advantage is real but astronomically far out.
    pub threshold: Option<Threshold>,
}

fn solve_capped(
    classical: &ComplexityExpr,
    quantum: &ComplexityExpr,
    c: crate::magnitude::LogMagnitude,
) -> Result<(Option<Threshold>, TrafficLight), Error> {
    match solve_threshold(classical, quantum, c) {
        Ok(t) => Ok((Some(t), t.class())),
        Err(Error::BracketFailed { .. }) => Ok((None, TrafficLight::Yellow)),
        Err(e) => Err(e),
    }
}

/// Classifies every paired entry under `scenario`. With
/// `include_unpaired`, entries lacking a quantum algorithm are compared
/// against each canonical quantum runtime instead.
pub fn classify_catalog(
    entries: &[CatalogEntry],
    scenario: &HardwareScenario,
    include_unpaired: bool,
) -> Result<Vec<ClassifiedEntry>, Error> {
    let c = scenario.constant();
    let canonical = canonical_runtimes();
    let mut out = Vec::new();
    for entry in entries {
        match entry.pair() {
            Some(pair) => {
                let (quantum, _) = effective_quantum_runtime(&pair)?;
                let (threshold, class) = solve_capped(&pair.classical_runtime, &quantum, c)?;
                out.push(ClassifiedEntry {
                    id: entry.id.clone(),
                    problem_name: entry.problem_name.clone(),
                    classical_runtime: entry.classical_runtime.clone(),
                    quantum_runtime: quantum,
                    paired: true,
                    class,
                    threshold,
                });
            }
            None if include_unpaired => {
                for quantum in &canonical {
                    let (threshold, class) = solve_capped(&entry.classical_runtime, quantum, c)?;
                    out.push(ClassifiedEntry {
                        id: entry.id.clone(),
                        problem_name: entry.problem_name.clone(),
                        classical_runtime: entry.classical_runtime.clone(),
                        quantum_runtime: quantum.clone(),
                        paired: false,
                        class,
                        threshold,
                    });
                }
            }
            None => {}
        }
    }
    Ok(out)
}
