//! Scenario presets, provider roadmaps and the problem catalog, loaded from a
//! data directory or from the copies compiled into the binary.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::catalog::{parse_catalog, CatalogEntry};
use crate::error::Error;
use crate::hardware::{
    fit_growth, parse_scenarios_json, read_roadmap_csv, GrowthModel, HardwareScenario,
    RoadmapPoint,
};

/// Environment variable naming the data directory.
pub const DATA_DIR_ENV: &str = "QX_DATA_DIR";

const EMBEDDED_SCENARIOS: &str = include_str!("../../../data/scenarios.json");
const EMBEDDED_CATALOG: &str = include_str!("../../../data/catalog.json");
const EMBEDDED_ROADMAPS: [(&str, &str); 2] = [
    ("ibm", include_str!("../../../data/roadmaps/ibm.csv")),
    ("ionq", include_str!("../../../data/roadmaps/ionq.csv")),
];

#[derive(Debug, Clone, PartialEq)]
pub struct DataStore {
    pub scenarios: Vec<HardwareScenario>,
    /// Provider name to its points, in file order.
    pub roadmaps: BTreeMap<String, Vec<RoadmapPoint>>,
    pub catalog: Vec<CatalogEntry>,
    /// Where the data came from; `None` for the embedded defaults.
    pub source: Option<PathBuf>,
}

impl DataStore {
    pub fn embedded() -> Self {
        let roadmaps = EMBEDDED_ROADMAPS
            .iter()
            .map(|(name, text)| {
                let points = read_roadmap_csv(text.as_bytes()).expect("embedded roadmap is valid");
                (name.to_string(), points)
            })
            .collect();
        DataStore {
            scenarios: parse_scenarios_json(EMBEDDED_SCENARIOS).expect("embedded scenarios are valid"),
            roadmaps,
            catalog: parse_catalog(EMBEDDED_CATALOG).expect("embedded catalog is valid"),
            source: None,
        }
    }

    /// Reads `scenarios.json`, `catalog.json` and `roadmaps/*.csv` from
    /// `dir`. A file that is absent falls back to the embedded copy; one that
    /// is present but invalid is an error.
    pub fn from_dir(dir: &Path) -> Result<Self, Error> {
        if !dir.is_dir() {
            return Err(Error::Io(format!("{}: not a directory", dir.display())));
        }
        let mut store = DataStore::embedded();
        store.source = Some(dir.to_path_buf());

        let scenarios = dir.join("scenarios.json");
        if scenarios.exists() {
            store.scenarios = parse_scenarios_json(&read(&scenarios)?)?;
        }
        let catalog = dir.join("catalog.json");
        if catalog.exists() {
            store.catalog = parse_catalog(&read(&catalog)?)?;
        }
        let roadmaps = dir.join("roadmaps");
        if roadmaps.is_dir() {
            let mut files: Vec<PathBuf> = std::fs::read_dir(&roadmaps)?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|ext| ext == "csv"))
                .collect();
            files.sort();
            for path in files {
                let text = read(&path)?;
                let points = read_roadmap_csv(text.as_bytes())
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                let name = path
                    .file_stem()
                    .map(|s| s.to_string_lossy().to_lowercase())
                    .unwrap_or_default();
                store.roadmaps.insert(name, points);
            }
        }
        Ok(store)
    }

    /// The explicit directory if given, else `$QX_DATA_DIR`, else the
    /// embedded defaults.
    pub fn discover(flag: Option<&Path>) -> Result<Self, Error> {
        if let Some(dir) = flag {
            return DataStore::from_dir(dir);
        }
        match std::env::var_os(DATA_DIR_ENV) {
            Some(dir) if !dir.is_empty() => DataStore::from_dir(Path::new(&dir)),
            _ => Ok(DataStore::embedded()),
        }
    }

    pub fn scenario(&self, name: &str) -> Result<&HardwareScenario, Error> {
        self.scenarios
            .iter()
            .find(|s| s.name.eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::UnknownScenario(name.to_string()))
    }

    pub fn roadmap(&self, provider: &str) -> Result<&[RoadmapPoint], Error> {
        self.roadmaps
            .get(&provider.to_lowercase())
            .map(Vec::as_slice)
            .ok_or_else(|| Error::UnknownProvider(provider.to_string()))
    }

    pub fn growth_model(&self, provider: &str) -> Result<GrowthModel, Error> {
        fit_growth(self.roadmap(provider)?)
    }

    pub fn entry(&self, id: &str) -> Result<&CatalogEntry, Error> {
        self.catalog
            .iter()
            .find(|e| e.id == id)
            .ok_or_else(|| Error::UnknownEntry(id.to_string()))
    }
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}
