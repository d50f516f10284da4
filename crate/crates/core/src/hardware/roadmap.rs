use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::magnitude::LogMagnitude;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RoadmapStatus {
    Realized,
    Roadmap,
    Extrapolated,
}

/// One machine on a provider's qubit-count timeline. Field order matches the
/// CSV header `provider,year,physical_qubits,status`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RoadmapPoint {
    pub provider: String,
    pub year: f64,
    pub physical_qubits: u64,
    pub status: RoadmapStatus,
}

impl RoadmapPoint {
    pub fn new(provider: &str, year: f64, physical_qubits: u64, status: RoadmapStatus) -> Self {
        RoadmapPoint {
            provider: provider.to_string(),
            year,
            physical_qubits,
            status,
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.physical_qubits < 1 {
            return Err(Error::InvalidRoadmapPoint(format!(
                "{} {}: physical_qubits must be >= 1",
                self.provider, self.year
            )));
        }
        if !(1990.0..=2100.0).contains(&self.year) {
            return Err(Error::InvalidRoadmapPoint(format!(
                "{}: year {} outside 1990..=2100",
                self.provider, self.year
            )));
        }
        Ok(())
    }
}

pub fn read_roadmap_csv<R: Read>(reader: R) -> Result<Vec<RoadmapPoint>, Error> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let headers = rdr
        .headers()
        .map_err(|e| Error::InvalidRoadmapPoint(e.to_string()))?
        .clone();
    if headers.iter().collect::<Vec<_>>() != ["provider", "year", "physical_qubits", "status"] {
        return Err(Error::InvalidRoadmapPoint(format!(
            "expected header provider,year,physical_qubits,status, found {}",
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut points = Vec::new();
    for (i, rec) in rdr.deserialize::<RoadmapPoint>().enumerate() {
        let p = rec.map_err(|e| Error::InvalidRoadmapPoint(format!("row {}: {e}", i + 1)))?;
        p.validate()?;
        points.push(p);
    }
    Ok(points)
}

pub fn load_roadmap_csv(path: &Path) -> Result<Vec<RoadmapPoint>, Error> {
    let file = std::fs::File::open(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    read_roadmap_csv(file)
}

pub fn write_roadmap_csv<W: Write>(writer: W, points: &[RoadmapPoint]) -> Result<(), Error> {
    let mut wtr = csv::Writer::from_writer(writer);
    for p in points {
        wtr.serialize(p).map_err(|e| Error::Io(e.to_string()))?;
    }
    wtr.flush()?;
    Ok(())
}

/// `log10(qubits) = intercept + slope * (year - reference_year)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthModel {
    pub provider: String,
    pub reference_year: f64,
    pub intercept: f64,
    /// Decades of qubits per year.
    pub slope: f64,
    /// Absent when fitted on exactly two points.
    pub r_squared: Option<f64>,
    pub points_used: usize,
}

/// Ordinary least squares of `log10(physical_qubits)` on year, using the
/// realized and roadmap points only.
pub fn fit_growth(points: &[RoadmapPoint]) -> Result<GrowthModel, Error> {
    let usable: Vec<&RoadmapPoint> = points
        .iter()
        .filter(|p| p.status != RoadmapStatus::Extrapolated)
        .collect();
    if usable.len() < 2 {
        return Err(Error::InsufficientData(usable.len()));
    }
    for p in &usable {
        p.validate()?;
    }
    let reference_year = usable.iter().map(|p| p.year).fold(f64::INFINITY, f64::min);
    let xs: Vec<f64> = usable.iter().map(|p| p.year - reference_year).collect();
    let ys: Vec<f64> = usable.iter().map(|p| (p.physical_qubits as f64).log10()).collect();
    let n = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / n;
    let mean_y = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mean_x).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::DegenerateData);
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mean_x) * (y - mean_y)).sum();
    let slope = sxy / sxx;
    if !(slope > 0.0) {
        return Err(Error::NonIncreasingGrowth(slope));
    }
    let intercept = mean_y - slope * mean_x;

    let r_squared = if usable.len() >= 3 {
        let ss_tot: f64 = ys.iter().map(|y| (y - mean_y).powi(2)).sum();
        let ss_res: f64 = xs
            .iter()
            .zip(&ys)
            .map(|(x, y)| (y - intercept - slope * x).powi(2))
            .sum();
        Some((1.0 - ss_res / ss_tot).clamp(0.0, 1.0))
    } else {
        None
    };

    Ok(GrowthModel {
        provider: usable[0].provider.clone(),
        reference_year,
        intercept,
        slope,
        r_squared,
        points_used: usable.len(),
    })
}

pub fn project_qubits(m: &GrowthModel, year: f64) -> LogMagnitude {
    LogMagnitude::from_log10(m.intercept + m.slope * (year - m.reference_year))
}

/// Fractional year at which the fitted curve reaches `physical_qubits`.
pub fn year_for_qubits(m: &GrowthModel, physical_qubits: LogMagnitude) -> f64 {
    m.reference_year + (physical_qubits.log10() - m.intercept) / m.slope
}

pub fn logical_qubits_available(m: &GrowthModel, year: f64, ec_qubit_ratio: f64) -> LogMagnitude {
    project_qubits(m, year) / LogMagnitude::from_log10(ec_qubit_ratio.log10())
}
