//! Append-only cop-number cache keyed by the literal graph6 line.
//!
//! File format: one entry per line, `graph6<TAB>copnumber`. Re-opening
//! replays the entries; corrupt lines are skipped (and counted), never
//! served.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::harness::HarnessError;

#[derive(Debug, Default)]
pub struct CopNumberCache {
    map: HashMap<String, usize>,
    writer: Option<BufWriter<File>>,
    skipped_lines: usize,
}

impl CopNumberCache {
    /// Purely in-memory cache (no backing file).
    pub fn in_memory() -> Self {
        CopNumberCache::default()
    }

    /// Opens (creating if absent) a file-backed cache and replays it.
    pub fn open(path: &Path) -> Result<Self, HarnessError> {
        let mut map = HashMap::new();
        let mut skipped = 0usize;
        if path.exists() {
            let reader = BufReader::new(
                File::open(path).map_err(|e| HarnessError::Io { line: 0, source: e })?,
            );
            for line in reader.lines() {
                let line = line.map_err(|e| HarnessError::Io { line: 0, source: e })?;
                if line.trim().is_empty() {
                    continue;
                }
                match line.split_once('\t') {
                    Some((g6, c)) => match c.trim().parse::<usize>() {
                        Ok(c) if c >= 1 => {
                            map.insert(g6.to_string(), c);
                        }
                        _ => skipped += 1,
                    },
                    None => skipped += 1,
                }
            }
        }
        let file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .map_err(|e| HarnessError::Io { line: 0, source: e })?;
        Ok(CopNumberCache { map, writer: Some(BufWriter::new(file)), skipped_lines: skipped })
    }

    /// Corrupt lines skipped while replaying the file.
    pub fn skipped_lines(&self) -> usize {
        self.skipped_lines
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn lookup(&self, graph6: &str) -> Option<usize> {
        self.map.get(graph6).copied()
    }

    pub fn store(&mut self, graph6: &str, cop_number: usize) -> Result<(), HarnessError> {
        if self.map.insert(graph6.to_string(), cop_number).is_none() {
            if let Some(w) = &mut self.writer {
                writeln!(w, "{graph6}\t{cop_number}")
                    .and_then(|_| w.flush())
                    .map_err(|e| HarnessError::Io { line: 0, source: e })?;
            }
        }
        Ok(())
    }
}
