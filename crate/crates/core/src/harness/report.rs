//! Deterministic report serialization.
//!
//! CSV: header `spec,params,graphs_seen,matching,violations,divergences,
//! wall_ms`, one summary row per nonempty report, then one row per
//! violation (and per divergence) carrying its graph6 witness in the
//! corresponding column. A report over zero graphs emits the header only.
//! JSON mirrors every field of the report and round-trips through serde.

use crate::harness::VerificationReport;

pub const CSV_HEADER: &str = "spec,params,graphs_seen,matching,violations,divergences,wall_ms";

pub fn emit_csv(r: &VerificationReport) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    if r.graphs_seen == 0 {
        return out;
    }
    out.push_str(&format!(
        "{},{},{},{},{},{},{}\n",
        field(&r.spec),
        field(&r.params),
        r.graphs_seen,
        r.matching,
        r.violations.len(),
        r.divergences.len(),
        r.wall_ms
    ));
    for v in &r.violations {
        out.push_str(&format!(
            "{},{},{},{},{},,\n",
            field(&r.spec),
            field(&r.params),
            r.graphs_seen,
            r.matching,
            field(&format!("{}|c={}|bound={}", v.graph6, v.cop_number, v.bound)),
        ));
    }
    for d in &r.divergences {
        out.push_str(&format!(
            "{},{},{},{},,{},\n",
            field(&r.spec),
            field(&r.params),
            r.graphs_seen,
            r.matching,
            field(&format!("{}|{}", d.graph6, d.reason)),
        ));
    }
    out
}

pub fn emit_json(r: &VerificationReport) -> String {
    serde_json::to_string_pretty(r).expect("report serializes")
}

pub fn parse_json(s: &str) -> Result<VerificationReport, serde_json::Error> {
    serde_json::from_str(s)
}

/// Minimal CSV quoting; graph6 text never needs it (its alphabet excludes
/// commas and quotes) but divergence reasons may.
fn field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{Divergence, VerificationReport, Violation};

    fn sample(graphs_seen: usize) -> VerificationReport {
        VerificationReport {
            spec: "T1".into(),
            params: "k=4".into(),
            bound: 2,
            graphs_seen,
            disconnected_skipped: 0,
            matching: graphs_seen.min(3),
            verified: graphs_seen == 0,
            violations: if graphs_seen == 0 {
                vec![]
            } else {
                vec![Violation { graph6: "Cl".into(), cop_number: 3, bound: 2 }]
            },
            divergences: if graphs_seen == 0 {
                vec![]
            } else {
                vec![Divergence { graph6: "Cl".into(), reason: "budget, exhausted".into() }]
            },
            extremal_witnesses: vec![],
            wall_ms: 5,
        }
    }

    #[test]
    fn empty_report_is_header_only() {
        let csv = emit_csv(&sample(0));
        assert_eq!(csv.trim(), CSV_HEADER);
    }

    #[test]
    fn violation_rows_carry_the_witness() {
        let csv = emit_csv(&sample(5));
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 4); // header, summary, violation, divergence
        assert_eq!(lines[0], CSV_HEADER);
        assert!(lines[1].starts_with("T1,k=4,5,3,1,1,"));
        assert!(lines[2].contains("Cl|c=3|bound=2"));
        assert!(lines[3].contains("\"Cl|budget, exhausted\""));
    }

    #[test]
    fn json_round_trips_every_field() {
        let r = sample(5);
        let parsed = parse_json(&emit_json(&r)).unwrap();
        assert_eq!(parsed, r);
    }
}
