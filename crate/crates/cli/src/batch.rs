//! Batch manifests: many requests, one deterministic aggregated report.
//!
//! ```json
//! {"jobs": 2, "entries": [{"id": "u1", "command": "classify", "payload": {"input": "u1.json"}}]}
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;
use std::path::Path;

use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::{analyze, render_error, render_report, AnalysisRequest, CliError, Format, Options, Report, EXIT_OK};

#[derive(Debug, Clone)]
pub struct BatchManifest {
    /// Entries in manifest order; malformed ones carry their error.
    pub entries: Vec<(String, Result<AnalysisRequest, CliError>)>,
    pub jobs: Option<usize>,
}

impl BatchManifest {
    /// Parses a manifest. Entry-level problems are kept per entry; only a
    /// malformed top level or a duplicate identifier rejects the whole file.
    pub fn from_json(value: &Value, base_dir: &Path) -> Result<BatchManifest, CliError> {
        let obj = value.as_object().ok_or_else(|| CliError::invalid("manifest must be a JSON object"))?;
        let jobs = match obj.get("jobs") {
            None | Some(Value::Null) => None,
            Some(v) => Some(
                v.as_u64().filter(|&j| j > 0).ok_or_else(|| CliError::invalid("`jobs` must be a positive integer"))?
                    as usize,
            ),
        };
        let raw = match obj.get("entries") {
            None => &[][..],
            Some(Value::Array(a)) => a.as_slice(),
            Some(_) => return Err(CliError::invalid("`entries` must be an array")),
        };
        let mut seen = BTreeSet::new();
        let mut entries = Vec::with_capacity(raw.len());
        for (i, entry) in raw.iter().enumerate() {
            let id = entry.get("id").and_then(Value::as_str).map_or_else(|| format!("#{i}"), str::to_string);
            if !seen.insert(id.clone()) {
                return Err(CliError::invalid(format!("duplicate entry id `{id}`")));
            }
            entries.push((id, parse_entry(entry, base_dir)));
        }
        Ok(BatchManifest { entries, jobs })
    }

    pub fn load(path: &Path) -> Result<BatchManifest, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::invalid(format!("cannot read {}: {e}", path.display())))?;
        let value: Value =
            serde_json::from_str(&text).map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))?;
        let base = path.parent().unwrap_or_else(|| Path::new("."));
        BatchManifest::from_json(&value, base)
    }
}

fn parse_entry(entry: &Value, base_dir: &Path) -> Result<AnalysisRequest, CliError> {
    if entry.get("id").and_then(Value::as_str).is_none() {
        return Err(CliError::invalid("entry needs a string `id`"));
    }
    let command = entry
        .get("command")
        .and_then(Value::as_str)
        .ok_or_else(|| CliError::invalid("entry needs a string `command`"))?
        .parse()?;
    let payload = entry.get("payload").cloned().unwrap_or_else(|| Value::Object(Map::new()));
    Ok(AnalysisRequest { command, payload, base_dir: base_dir.to_path_buf() })
}

#[derive(Debug, Clone)]
pub struct BatchOutcome {
    pub results: BTreeMap<String, Result<Report, CliError>>,
    pub code: i32,
}

impl BatchOutcome {
    pub fn entry_code(result: &Result<Report, CliError>) -> i32 {
        match result {
            Ok(r) => r.exit_code(),
            Err(e) => e.code,
        }
    }

    pub fn to_json(&self) -> Value {
        let results: Map<String, Value> = self
            .results
            .iter()
            .map(|(id, r)| {
                let body = match r {
                    Ok(report) => json!({ "exit_code": report.exit_code(), "result": report.to_json() }),
                    Err(e) => json!({ "exit_code": e.code, "error": { "kind": e.kind, "message": e.message } }),
                };
                (id.clone(), body)
            })
            .collect();
        json!({ "exit_code": self.code, "results": results })
    }

    pub fn render(&self, options: Options) -> String {
        match options.format {
            Format::Json => crate::to_json_text(&self.to_json()),
            Format::Text => {
                let mut out = String::new();
                for (id, r) in &self.results {
                    writeln!(out, "== {id} (exit {}) ==", BatchOutcome::entry_code(r)).unwrap();
                    match r {
                        Ok(report) => out.push_str(&render_report(report, options)),
                        Err(e) => out.push_str(&render_error(e, options)),
                    }
                }
                writeln!(out, "batch exit code: {}", self.code).unwrap();
                out
            }
        }
    }
}

/// Runs every entry, in parallel when `jobs` allows. `jobs_override`
/// takes precedence over the manifest's hint.
pub fn run_batch(manifest: &BatchManifest, jobs_override: Option<usize>) -> BatchOutcome {
    let run_all = || -> Vec<(String, Result<Report, CliError>)> {
        manifest
            .entries
            .par_iter()
            .map(|(id, request)| (id.clone(), request.as_ref().map_err(Clone::clone).and_then(analyze)))
            .collect()
    };
    let collected = match jobs_override.or(manifest.jobs) {
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(run_all),
            Err(_) => run_all(),
        },
        None => run_all(),
    };
    let results: BTreeMap<_, _> = collected.into_iter().collect();
    let code = results.values().map(BatchOutcome::entry_code).max().unwrap_or(EXIT_OK);
    BatchOutcome { results, code }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn manifest(v: Value) -> BatchManifest {
        BatchManifest::from_json(&v, Path::new(".")).unwrap()
    }

    #[test]
    fn empty_manifest_is_fine() {
        let out = run_batch(&manifest(json!({ "entries": [] })), None);
        assert_eq!(out.code, 0);
        assert_eq!(out.to_json(), json!({ "exit_code": 0, "results": {} }));
    }

    #[test]
    fn malformed_entry_is_isolated() {
        let m = manifest(json!({ "entries": [
            { "id": "good", "command": "newton-number", "payload": { "diagram": { "dim": 2, "generators": [["2","0"],["0","2"]] } } },
            { "id": "bad", "command": "no-such-command" },
            { "command": "decompose" },
        ]}));
        let out = run_batch(&m, Some(2));
        assert_eq!(out.code, 2);
        assert_eq!(out.to_json()["results"]["good"]["result"]["newton_number"], "4");
        assert_eq!(out.to_json()["results"]["bad"]["exit_code"], 2);
        assert_eq!(out.to_json()["results"]["#2"]["exit_code"], 2);
    }

    #[test]
    fn duplicate_ids_are_rejected() {
        let v = json!({ "entries": [{ "id": "a", "command": "sum" }, { "id": "a", "command": "sum" }] });
        assert!(BatchManifest::from_json(&v, Path::new(".")).is_err());
    }

    #[test]
    fn exit_code_is_the_maximum() {
        let m = manifest(json!({ "entries": [
            { "id": "inf", "command": "newton-number", "payload": { "diagram": { "dim": 2, "generators": [["1","1"]] } } },
            { "id": "bad", "command": "sum", "payload": {} },
        ]}));
        assert_eq!(run_batch(&m, None).code, 3);
    }
}
