//! JSON fan files and the bundled fan library.
//!
//! ```json
//! { "name": "P^2", "rank": 2, "rays": [[1, 0], [0, 1], [-1, -1]],
//!   "max_cones": [[1, 2], [1, 3], [2, 3]] }
//! ```
//!
//! Cone entries are 1-based ray indices.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use toric_cobordism::fan::{Fan, FanData};
use toric_cobordism::lattice::LatticeVector;

use crate::error::{CliError, CliResult};

/// Directory searched for `<name>.json` before the bundled fans.
pub const LIBRARY_ENV: &str = "TORIC_FAN_LIBRARY";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub rank: usize,
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
}

impl FanFile {
    pub fn parse(text: &str) -> CliResult<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Convert to 0-based fan data. Index and length errors are reported here;
    /// geometric problems are left to validation.
    pub fn to_data(&self) -> CliResult<FanData> {
        for (i, r) in self.rays.iter().enumerate() {
            if r.len() != self.rank {
                return Err(CliError::Input(format!("ray {} has length {}, expected {}", i + 1, r.len(), self.rank)));
            }
        }
        let mut max_cones = Vec::with_capacity(self.max_cones.len());
        for (c, cone) in self.max_cones.iter().enumerate() {
            let mut out = Vec::with_capacity(cone.len());
            for &r in cone {
                if r == 0 || r > self.rays.len() {
                    return Err(CliError::Input(format!(
                        "cone {} refers to ray {r}, but rays are numbered 1..{}",
                        c + 1,
                        self.rays.len()
                    )));
                }
                out.push(r - 1);
            }
            max_cones.push(out);
        }
        Ok(FanData {
            rank: self.rank,
            rays: self.rays.iter().cloned().map(LatticeVector::new).collect(),
            max_cones,
        })
    }

    pub fn to_fan(&self) -> CliResult<Fan> {
        Ok(Fan::new(self.to_data()?)?)
    }

    pub fn from_fan(fan: &Fan, name: Option<String>) -> Self {
        FanFile {
            name,
            rank: fan.rank(),
            rays: fan.rays().iter().map(|v| v.coords.clone()).collect(),
            max_cones: fan.max_cones().iter().map(|c| c.rays().iter().map(|r| r + 1).collect()).collect(),
        }
    }

    pub fn display_name(&self) -> String {
        self.name.clone().unwrap_or_else(|| "fan".to_string())
    }
}

/// Bundled fans: file stem and contents.
pub const BUNDLED: &[(&str, &str)] = &[
    ("a1", include_str!("../fans/a1.json")),
    ("a2", include_str!("../fans/a2.json")),
    ("a3", include_str!("../fans/a3.json")),
    ("p1", include_str!("../fans/p1.json")),
    ("p2", include_str!("../fans/p2.json")),
    ("p3", include_str!("../fans/p3.json")),
    ("p4", include_str!("../fans/p4.json")),
    ("p1xp1", include_str!("../fans/p1xp1.json")),
    ("f0", include_str!("../fans/f0.json")),
    ("f1", include_str!("../fans/f1.json")),
    ("f2", include_str!("../fans/f2.json")),
    ("f3", include_str!("../fans/f3.json")),
    ("blowup-p2", include_str!("../fans/blowup-p2.json")),
];

pub fn bundled(stem: &str) -> Option<FanFile> {
    BUNDLED.iter().find(|(s, _)| *s == stem).map(|(_, text)| FanFile::parse(text).expect("bundled fan parses"))
}

/// All bundled fans in library order.
pub fn bundled_fans() -> Vec<(String, FanFile)> {
    BUNDLED.iter().map(|(s, text)| (s.to_string(), FanFile::parse(text).expect("bundled fan parses"))).collect()
}

/// Resolve `--fan`: an existing path, then `<name>.json` in the library
/// directory, then a bundled fan.
pub fn resolve(spec: &str, library: Option<&Path>) -> CliResult<FanFile> {
    let path = PathBuf::from(spec);
    if path.is_file() {
        return FanFile::parse(&std::fs::read_to_string(&path)?);
    }
    if let Some(dir) = library {
        let candidate = dir.join(format!("{spec}.json"));
        if candidate.is_file() {
            return FanFile::parse(&std::fs::read_to_string(candidate)?);
        }
    }
    bundled(spec).ok_or_else(|| {
        let names: Vec<&str> = BUNDLED.iter().map(|(s, _)| *s).collect();
        CliError::Input(format!("no fan file or bundled fan named '{spec}' (bundled: {})", names.join(", ")))
    })
}
