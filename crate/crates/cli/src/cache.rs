//! Append-only result cache: one JSON record per line in `hurwitz-cache.jsonl`.
//!
//! Every write rewrites the file into a temporary sibling and renames it over
//! the original, so readers never see a torn line.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};

use hurwitz::{CountReport, HurwitzInstance, Method, Partition, ENGINE_VERSION};

pub const CACHE_FILE: &str = "hurwitz-cache.jsonl";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub engine_version: String,
    pub genus: u32,
    pub partition: Vec<usize>,
    pub method: String,
    pub tuple_count: String,
    pub hurwitz_number: String,
}

impl CacheEntry {
    pub fn from_report(report: &CountReport) -> Self {
        Self {
            engine_version: ENGINE_VERSION.to_string(),
            genus: report.instance.genus(),
            partition: report.instance.alpha().parts().to_vec(),
            method: report.method.to_string(),
            tuple_count: report.tuple_count.to_string(),
            hurwitz_number: crate::output::fraction(&report.hurwitz_number),
        }
    }

    fn matches(&self, genus: u32, alpha: &Partition, method: Method) -> bool {
        self.engine_version == ENGINE_VERSION
            && self.genus == genus
            && self.partition == alpha.parts()
            && self.method == method.as_str()
    }

    pub fn to_report(&self) -> Result<CountReport> {
        let alpha = Partition::new(self.partition.clone())?;
        let instance = HurwitzInstance::new(self.genus.into(), alpha)?;
        let method: Method = self.method.parse().map_err(anyhow::Error::msg)?;
        let count = self.tuple_count.parse().context("cached tuple_count")?;
        let report = CountReport::new(instance, count, method);
        anyhow::ensure!(
            crate::output::fraction(&report.hurwitz_number) == self.hurwitz_number,
            "cache record for g={} {:?} is internally inconsistent",
            self.genus,
            self.partition
        );
        Ok(report)
    }
}

pub struct Cache {
    path: PathBuf,
}

impl Cache {
    pub fn open(dir: &Path) -> Result<Self> {
        fs::create_dir_all(dir).with_context(|| format!("creating cache directory {}", dir.display()))?;
        Ok(Self { path: dir.join(CACHE_FILE) })
    }

    pub fn entries(&self) -> Result<Vec<CacheEntry>> {
        let text = match fs::read_to_string(&self.path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(e).with_context(|| format!("reading {}", self.path.display())),
        };
        text.lines()
            .filter(|l| !l.trim().is_empty())
            .enumerate()
            .map(|(i, l)| serde_json::from_str(l).with_context(|| format!("cache line {}", i + 1)))
            .collect()
    }

    pub fn lookup(&self, genus: u32, alpha: &Partition, method: Method) -> Result<Option<CountReport>> {
        self.entries()?
            .iter()
            .find(|e| e.matches(genus, alpha, method))
            .map(CacheEntry::to_report)
            .transpose()
    }

    pub fn store(&self, report: &CountReport) -> Result<()> {
        let mut entries = self.entries()?;
        let entry = CacheEntry::from_report(report);
        if entries.contains(&entry) {
            return Ok(());
        }
        entries.push(entry);
        let dir = self.path.parent().expect("cache file has a parent");
        let tmp = dir.join(format!(".{CACHE_FILE}.{}.tmp", std::process::id()));
        {
            let mut f = fs::File::create(&tmp).with_context(|| format!("creating {}", tmp.display()))?;
            for e in &entries {
                serde_json::to_writer(&mut f, e)?;
                f.write_all(b"\n")?;
            }
            f.sync_all()?;
        }
        fs::rename(&tmp, &self.path).with_context(|| format!("renaming into {}", self.path.display()))?;
        Ok(())
    }
}
