//! Schema-versioned result records.
//!
//! Every command that produces reusable output wraps it in a [`ResultRecord`]
//! and serializes one record per line (JSONL).  Numeric payloads are stored
//! as decimal strings so that arbitrarily large coordinates survive the trip
//! through JSON unchanged, and the maps are ordered so that serialization is
//! byte-deterministic: re-running a sweep with a different shard count must
//! reproduce the identical file.

use std::collections::BTreeMap;
use std::io::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

/// Version stamp embedded in every record.
pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

/// One self-describing result row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    /// What kind of computation produced this record (`"enumeration"`,
    /// `"rank1_report"`, `"sweep_check"`, ...).
    pub kind: String,
    /// Input parameters, as decimal strings keyed by name.
    pub inputs: BTreeMap<String, String>,
    /// Computed outputs, as strings keyed by name.
    pub outputs: BTreeMap<String, String>,
    /// Crate version that wrote the record.
    pub artifact_version: String,
    /// Caller-supplied timestamp; sweeps pass one shared stamp to all
    /// records so shard layout cannot leak into the bytes.
    pub timestamp: String,
}

impl ResultRecord {
    /// Starts an empty record of the given kind.
    pub fn new(kind: &str, timestamp: &str) -> Self {
        ResultRecord {
            kind: kind.to_owned(),
            inputs: BTreeMap::new(),
            outputs: BTreeMap::new(),
            artifact_version: ARTIFACT_VERSION.to_owned(),
            timestamp: timestamp.to_owned(),
        }
    }

    /// Adds an input parameter.
    pub fn with_input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.insert(key.to_owned(), value.to_string());
        self
    }

    /// Adds an output value.
    pub fn with_output(mut self, key: &str, value: impl ToString) -> Self {
        self.outputs.insert(key.to_owned(), value.to_string());
        self
    }
}

/// Serializes records as one JSON object per line.
pub fn to_jsonl(records: &[ResultRecord]) -> serde_json::Result<String> {
    let mut out = String::new();
    for rec in records {
        out.push_str(&serde_json::to_string(rec)?);
        out.push('\n');
    }
    Ok(out)
}

/// Parses a JSONL string back into records, skipping blank lines.
pub fn from_jsonl(text: &str) -> serde_json::Result<Vec<ResultRecord>> {
    text.lines()
        .filter(|line| !line.trim().is_empty())
        .map(serde_json::from_str)
        .collect()
}

/// Writes records to a file, one per line.
pub fn write_jsonl(path: &Path, records: &[ResultRecord]) -> std::io::Result<()> {
    let body = to_jsonl(records).map_err(std::io::Error::other)?;
    let mut file = std::fs::File::create(path)?;
    file.write_all(body.as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn round_trip_preserves_everything() {
        let rec = ResultRecord::new("enumeration", "2024-05-01T00:00:00Z")
            .with_input("b", 108)
            .with_input("x_max", 1_000_000)
            .with_output("count", 8)
            .with_output("big", BigInt::from(3_086_626_985i64) * BigInt::from(7i32).pow(30));

        let text = to_jsonl(std::slice::from_ref(&rec)).unwrap();
        let back = from_jsonl(&text).unwrap();
        assert_eq!(back, vec![rec]);
        assert_eq!(back[0].artifact_version, ARTIFACT_VERSION);
    }

    #[test]
    fn big_numbers_stay_decimal_strings() {
        let huge = BigInt::from(10i32).pow(40) + 7;
        let rec = ResultRecord::new("probe", "t").with_output("value", &huge);
        let line = serde_json::to_string(&rec).unwrap();
        assert!(line.contains(&format!("\"{huge}\"")));
    }

    #[test]
    fn serialization_is_insertion_order_independent() {
        let a = ResultRecord::new("k", "t")
            .with_input("b", 1)
            .with_input("a", 2)
            .with_output("z", 3)
            .with_output("y", 4);
        let b = ResultRecord::new("k", "t")
            .with_output("y", 4)
            .with_output("z", 3)
            .with_input("a", 2)
            .with_input("b", 1);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn blank_lines_are_tolerated() {
        let rec = ResultRecord::new("k", "t").with_input("b", 8);
        let text = format!("\n{}\n\n", serde_json::to_string(&rec).unwrap());
        assert_eq!(from_jsonl(&text).unwrap(), vec![rec]);
    }
}
