//! On-disk cache of Nichols bases, one JSON document per sealed degree.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use nqf_core::braided::NcWord;
use nqf_core::linalg::SparseVec;
use nqf_core::{NicholsBasis, Rational, RootSystem};
use serde::{Deserialize, Serialize};

use crate::config::{EngineConfig, Instance};

pub const FORMAT: &str = "nqf-basis";
pub const VERSION: u32 = 1;

/// Serialized form of one degree.
#[derive(Debug, Serialize, Deserialize)]
pub struct DegreeDoc {
    pub format: String,
    pub version: u32,
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
    pub degree: usize,
    /// Dimensions of degrees `0..=degree`.
    pub dims: Vec<usize>,
    pub words: Vec<Vec<u16>>,
    /// `expansion[γ][b]`: coordinates of `b·[γ]` as `(index, coefficient)` pairs.
    pub expansion: Vec<Vec<Vec<(usize, String)>>>,
}

/// What happened while obtaining a basis.
#[derive(Debug, Default, Clone)]
pub struct CacheOutcome {
    pub loaded_degrees: usize,
    pub written_degrees: usize,
    pub warnings: Vec<String>,
}

pub fn instance_dir(root: &Path, inst: Instance) -> PathBuf {
    root.join(inst.to_string())
}

fn degree_path(dir: &Path, k: usize) -> PathBuf {
    dir.join(format!("degree-{k:02}.json"))
}

pub fn degree_doc(nb: &NicholsBasis, k: usize) -> DegreeDoc {
    let rs = nb.root_system();
    let data = nb.degree(k);
    DegreeDoc {
        format: FORMAT.into(),
        version: VERSION,
        kind: rs.kind.letter().to_string(),
        rank: rs.rank,
        degree: k,
        dims: (0..=k).map(|j| nb.dim(j)).collect(),
        words: data.words.iter().map(|w| w.0.clone()).collect(),
        expansion: data
            .rmul
            .iter()
            .map(|col| col.iter().map(|v| v.iter().map(|(i, c)| (i, c.to_string())).collect()).collect())
            .collect(),
    }
}

fn parse_doc(rs: &RootSystem, k: usize, doc: DegreeDoc) -> Result<(Vec<NcWord>, Vec<Vec<SparseVec>>), String> {
    if doc.format != FORMAT || doc.version != VERSION {
        return Err(format!("unsupported format {} v{}", doc.format, doc.version));
    }
    if doc.kind != rs.kind.letter().to_string() || doc.rank != rs.rank || doc.degree != k {
        return Err(format!("header mismatch in degree {k}"));
    }
    if doc.dims.len() != k + 1 || doc.dims[k] != doc.words.len() {
        return Err(format!("dimension record mismatch in degree {k}"));
    }
    let words = doc.words.into_iter().map(NcWord).collect();
    let mut rmul = Vec::with_capacity(doc.expansion.len());
    for col in doc.expansion {
        let mut vs = Vec::with_capacity(col.len());
        for entries in col {
            let mut parsed = Vec::with_capacity(entries.len());
            for (i, c) in entries {
                let c: Rational = c.parse().map_err(|e| format!("bad coefficient: {e}"))?;
                parsed.push((i, c));
            }
            vs.push(SparseVec::from_entries(parsed));
        }
        rmul.push(vs);
    }
    Ok((words, rmul))
}

fn try_load(rs: &RootSystem, dir: &Path, max_degree: Option<usize>) -> Result<Option<NicholsBasis>, String> {
    let mut tables = vec![(Vec::new(), Vec::new())];
    let mut k = 1;
    loop {
        if max_degree.is_some_and(|d| k > d) {
            break;
        }
        let path = degree_path(dir, k);
        if !path.exists() {
            break;
        }
        let text = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        let doc: DegreeDoc = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        let (words, rmul) = parse_doc(rs, k, doc)?;
        let empty = words.is_empty();
        tables.push((words, rmul));
        if empty {
            break;
        }
        k += 1;
    }
    if tables.len() == 1 {
        return Ok(None);
    }
    NicholsBasis::from_tables(rs, max_degree, tables).map(Some).map_err(|e| e.to_string())
}

fn write_atomic(path: &Path, text: &str) -> io::Result<()> {
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)
}

/// Loads what the cache holds, extends to the requested degree, and writes
/// back every sealed degree. A corrupt cache is discarded and rebuilt.
pub fn load_or_build(cfg: &EngineConfig, rs: &RootSystem) -> io::Result<(NicholsBasis, CacheOutcome)> {
    let mut outcome = CacheOutcome::default();
    let Some(root) = &cfg.cache_dir else {
        return Ok((NicholsBasis::build(rs, cfg.max_degree), outcome));
    };
    let dir = instance_dir(root, cfg.instance());
    let nb = match try_load(rs, &dir, cfg.max_degree) {
        Ok(Some(nb)) => {
            outcome.loaded_degrees = (1..=nb.built_degree()).filter(|&k| degree_path(&dir, k).exists()).count();
            nb
        }
        Ok(None) => NicholsBasis::build(rs, cfg.max_degree),
        Err(e) => {
            outcome.warnings.push(format!("discarding corrupt basis cache in {}: {e}", dir.display()));
            let _ = fs::remove_dir_all(&dir);
            NicholsBasis::build(rs, cfg.max_degree)
        }
    };
    fs::create_dir_all(&dir)?;
    for k in 1..=nb.built_degree() {
        let path = degree_path(&dir, k);
        if path.exists() {
            continue;
        }
        let text = serde_json::to_string_pretty(&degree_doc(&nb, k)).expect("serializable") + "\n";
        write_atomic(&path, &text)?;
        outcome.written_degrees += 1;
    }
    Ok((nb, outcome))
}
