//! Rendering of reports as newline-delimited JSON or aligned tables.

use serde_json::{json, Value};

use crate::verify::{BoundsReport, CheckOutcome};

/// One JSON object per outcome, then a summary record.
pub fn to_jsonl(report: &BoundsReport) -> String {
    let mut out = String::new();
    for o in &report.outcomes {
        out.push_str(&serde_json::to_string(o).expect("serializable"));
        out.push('\n');
    }
    let summary = json!({
        "summary": report.summary,
        "seed": report.seed,
        "config": report.config,
    });
    out.push_str(&summary.to_string());
    out.push('\n');
    out
}

fn status(o: &CheckOutcome) -> &'static str {
    if o.is_skipped() {
        "SKIP"
    } else if o.passed {
        "PASS"
    } else {
        "FAIL"
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// Rows of cells rendered with left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let mut parts: Vec<String> = cells
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        if let Some(last) = parts.last_mut() {
            *last = last.trim_end().to_string();
        }
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(&mut header.iter().copied());
    for row in rows {
        line(&mut row.iter().map(String::as_str));
    }
    out
}

pub fn to_table(report: &BoundsReport) -> String {
    let rows: Vec<Vec<String>> = report
        .outcomes
        .iter()
        .map(|o| {
            vec![
                o.check_id.as_str().to_string(),
                status(o).to_string(),
                o.curve.clone(),
                compact(&o.inputs),
                compact(&o.observed),
                compact(&o.bound),
            ]
        })
        .collect();
    let mut out = table(&["check", "status", "curve", "inputs", "observed", "bound"], &rows);
    let s = &report.summary;
    out.push_str(&format!(
        "total {}  passed {}  failed {}  skipped {}  seed {}\n",
        s.total, s.passed, s.failed, s.skipped, report.seed
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{check_cor5_semigroup, BoundsReport};

    #[test]
    fn jsonl_has_exact_fields() {
        let o = check_cor5_semigroup(3, 4).unwrap();
        let report = BoundsReport::new(vec![o], 7, json!({}));
        let text = to_jsonl(&report);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        let rec: serde_json::Map<String, Value> = serde_json::from_str(lines[0]).unwrap();
        let mut keys: Vec<&str> = rec.keys().map(String::as_str).collect();
        keys.sort();
        assert_eq!(keys, ["bound", "check_id", "curve", "inputs", "observed", "passed", "witness"]);
        assert_eq!(rec["check_id"], "COR5_SEMIGROUP");
        let summary: Value = serde_json::from_str(lines[1]).unwrap();
        assert_eq!(summary["summary"]["passed"], 1);
        assert_eq!(summary["seed"], 7);
    }

    #[test]
    fn table_aligns() {
        let t = table(&["a", "bb"], &[vec!["xxx".into(), "y".into()]]);
        assert_eq!(t, "a    bb\nxxx  y\n");
    }
}
