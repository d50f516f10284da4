//! Command line and HTTP front ends. Both go through
//! [`qx_core::service`], so a request made either way yields the same bytes.

pub mod args;
pub mod http;

use qx_core::service::{self, CatalogRequest, Format, GridRequest, RoadmapRequest, ThresholdRequest};
use qx_core::{DataStore, Error};

use args::Command;

/// Runs one non-server command and returns its output.
pub fn execute(store: &DataStore, command: &Command, format: Option<&str>) -> Result<String, Error> {
    let fmt = |default: Format| -> Result<Format, Error> {
        format.map(str::parse).transpose().map(|f| f.unwrap_or(default))
    };
    match command {
        Command::Threshold {
            classical,
            quantum,
            overhead,
        } => {
            let req = ThresholdRequest {
                classical: Some(classical.clone()),
                quantum: Some(quantum.clone()),
                scenario: overhead.scenario.clone(),
                c: overhead.c.clone(),
            };
            service::render_threshold(&service::threshold(store, &req)?, fmt(Format::Text)?)
        }
        Command::Grid { overhead } => {
            let req = GridRequest {
                scenario: overhead.scenario.clone(),
                c: overhead.c.clone(),
            };
            service::render_grid(&service::grid(store, &req)?, fmt(Format::Markdown)?)
        }
        Command::Analyze { pair } => {
            let view = service::analyze_pair(store, &pair.request(None))?;
            service::render_analyze(&view, fmt(Format::Text)?)
        }
        Command::Qaps { pair, year } => {
            let view = service::qaps_query(store, &pair.request(Some(*year)))?;
            service::render_qaps(&view, fmt(Format::Text)?)
        }
        Command::Roadmap {
            action,
            provider,
            year,
            qubits,
        } => {
            let req = RoadmapRequest {
                action: (*action).into(),
                provider: provider.clone(),
                year: *year,
                qubits: *qubits,
            };
            service::render_roadmap(&service::roadmap(store, &req)?, fmt(Format::Text)?)
        }
        Command::Catalog {
            action,
            tag,
            include_unpaired,
            overhead,
        } => {
            let req = CatalogRequest {
                action: (*action).into(),
                include_unpaired: *include_unpaired,
                tag: tag.clone(),
                scenario: overhead.scenario.clone(),
                c: overhead.c.clone(),
            };
            service::render_catalog_view(&service::catalog(store, &req)?, fmt(Format::Markdown)?)
        }
        Command::Plot { kind, pair } => {
            let data = service::plot(store, (*kind).into(), &pair.request(None))?;
            service::render_plot(&data, fmt(Format::SvgPlotData)?)
        }
        Command::Serve { .. } => Err(Error::InvalidParameter {
            name: "command",
            message: "serve is not a one-shot command".into(),
        }),
    }
}
