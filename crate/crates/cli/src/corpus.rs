use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use d2kit_core::fp::Presentation;
use d2kit_core::invariants::AnalysisReport;

use crate::CliError;

pub const CORPUS_ENV: &str = "D2KIT_CORPUS";

/// A presentation file and its optional golden values.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub path: PathBuf,
    pub presentation: Presentation,
    pub expected: Option<BTreeMap<String, String>>,
}

pub fn default_dir(dir: Option<&Path>) -> PathBuf {
    match dir {
        Some(d) => d.to_path_buf(),
        None => std::env::var_os(CORPUS_ENV).map_or_else(|| PathBuf::from("corpus"), PathBuf::from),
    }
}

/// `path` as given, or relative to `$D2KIT_CORPUS` when it does not exist.
pub fn resolve(path: &Path) -> PathBuf {
    if path.exists() || path.is_absolute() {
        return path.to_path_buf();
    }
    match std::env::var_os(CORPUS_ENV) {
        Some(root) if Path::new(&root).join(path).exists() => Path::new(&root).join(path),
        _ => path.to_path_buf(),
    }
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(resolve(path)).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn expect_path(fp: &Path) -> PathBuf {
    fp.with_extension("expect")
}

/// `key: value` lines; `#` starts a comment.
pub fn parse_expectations(text: &str) -> Result<BTreeMap<String, String>, String> {
    let mut out = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once(':')
            .ok_or_else(|| format!("line {}: expected `key: value`", i + 1))?;
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

impl CorpusEntry {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let path = resolve(path);
        let presentation = read_text(&path)?
            .parse()
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let exp = expect_path(&path);
        let expected = if exp.exists() {
            let text = read_text(&exp)?;
            Some(parse_expectations(&text).map_err(|e| CliError::Input(format!("{}: {e}", exp.display())))?)
        } else {
            None
        };
        Ok(CorpusEntry {
            path,
            presentation,
            expected,
        })
    }

    /// Keys whose expected value differs from the report, as `key: expected ≠ found`.
    pub fn mismatches(&self, report: &AnalysisReport) -> Vec<String> {
        let found = report_fields(report);
        self.expected
            .iter()
            .flatten()
            .filter_map(|(k, v)| match found.iter().find(|(name, _)| name == k) {
                Some((_, f)) if f == v => None,
                Some((_, f)) => Some(format!("{k}: expected {v}, found {f}")),
                None => Some(format!("{k}: unknown key")),
            })
            .collect()
    }
}

/// The scalar report fields in their text form, in report order.
pub fn report_fields(r: &AnalysisReport) -> Vec<(String, String)> {
    [
        ("order", r.order.map_or("unknown".to_string(), |n| n.to_string())),
        ("h1", r.h1.clone()),
        ("perfect", r.perfect.to_string()),
        ("def_found", r.def_found.value.to_string()),
        ("mu2_lower", r.mu2_lower.value.to_string()),
        ("mu2_upper", r.mu2_upper.value.to_string()),
        ("tight", r.tight.to_string()),
        ("d2n_upper", r.d2n_upper.as_ref().map_or("n/a".to_string(), |b| b.value.to_string())),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect()
}

/// `.fp` files directly inside `dir`, sorted by name.
pub fn fp_files(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let rd = fs::read_dir(dir).map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = rd
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "fp"))
        .collect();
    files.sort();
    Ok(files)
}
