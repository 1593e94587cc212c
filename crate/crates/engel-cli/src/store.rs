//! Append-only result store: one JSON record per line with a checksum
//! suffix, so surveys can resume and corruption is detected per line.

use std::collections::HashSet;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use anyhow::{Context, Result};
use sha2::{Digest, Sha256};

use crate::record::ResultRecord;

const CHECKSUM_LEN: usize = 16;

fn checksum(payload: &str) -> String {
    let digest = Sha256::digest(payload.as_bytes());
    let mut out = String::with_capacity(CHECKSUM_LEN);
    for b in digest.iter().take(CHECKSUM_LEN / 2) {
        out.push_str(&format!("{b:02x}"));
    }
    out
}

/// Outcome of reading a store file.
#[derive(Debug, Default)]
pub struct LoadedStore {
    pub records: Vec<ResultRecord>,
    /// 1-based line numbers that failed the checksum or did not parse.
    pub corrupt_lines: Vec<usize>,
}

impl LoadedStore {
    /// Keys already present, for resume: (expr, mode, n).
    pub fn seen_keys(&self) -> HashSet<(String, String, Option<u32>)> {
        self.records
            .iter()
            .map(|r| (r.expr.clone(), r.mode.clone(), r.n))
            .collect()
    }
}

pub fn load(path: &Path) -> Result<LoadedStore> {
    let mut out = LoadedStore::default();
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(out),
        Err(e) => return Err(e).context("opening result store"),
    };
    for (lineno, line) in BufReader::new(file).lines().enumerate() {
        let line = line.context("reading result store")?;
        if line.trim().is_empty() {
            continue;
        }
        let parsed = line.rsplit_once('\t').and_then(|(payload, sum)| {
            (checksum(payload) == sum)
                .then(|| serde_json::from_str::<ResultRecord>(payload).ok())
                .flatten()
        });
        match parsed {
            Some(rec) => out.records.push(rec),
            None => out.corrupt_lines.push(lineno + 1),
        }
    }
    Ok(out)
}

/// Append records under an exclusive file lock.
pub fn append(path: &Path, records: &[ResultRecord]) -> Result<()> {
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .context("opening result store for append")?;
    file.lock().context("locking result store")?;
    let result = (|| -> Result<()> {
        for rec in records {
            let payload = serde_json::to_string(rec)?;
            writeln!(file, "{payload}\t{}", checksum(&payload))?;
        }
        file.flush()?;
        Ok(())
    })();
    let _ = file.unlock();
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::record::tool_version;

    fn rec(expr: &str) -> ResultRecord {
        ResultRecord {
            expr: expr.into(),
            group_order: 24,
            mode: "gamma".into(),
            n: None,
            vertex_count: 23,
            strongly_connected: true,
            weakly_connected: true,
            scc_count: 1,
            undirected_diameter: Some(2),
            directed_diameter: None,
            wall_time_ms: 1,
            tool_version: tool_version(),
            equivariance: true,
            sylow_seed: 0,
        }
    }

    #[test]
    fn append_then_load_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("store.jsonl");
        append(&path, &[rec("S(4)"), rec("S(5)")]).unwrap();
        append(&path, &[rec("A(5)")]).unwrap();
        let loaded = load(&path).unwrap();
        assert_eq!(loaded.records.len(), 3);
        assert!(loaded.corrupt_lines.is_empty());
        assert!(loaded.seen_keys().contains(&("A(5)".into(), "gamma".into(), None)));
    }

    #[test]
    fn corrupt_lines_are_skipped_and_reported() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("store.jsonl");
        append(&path, &[rec("S(4)"), rec("S(5)"), rec("S(6)")]).unwrap();
        // flip a byte in the middle line's payload
        let text = std::fs::read_to_string(&path).unwrap();
        let mut lines: Vec<String> = text.lines().map(String::from).collect();
        lines[1] = lines[1].replacen("24", "25", 1);
        std::fs::write(&path, lines.join("\n") + "\n").unwrap();
        let loaded = load(&path).unwrap();
        assert_eq!(loaded.records.len(), 2);
        assert_eq!(loaded.corrupt_lines, vec![2]);
    }

    #[test]
    fn missing_store_is_empty_not_an_error() {
        let loaded = load(Path::new("/nonexistent/store.jsonl")).unwrap();
        assert!(loaded.records.is_empty());
    }
}
