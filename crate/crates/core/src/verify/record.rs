use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// One named, parameterized numeric check.
///
/// `verdict` is `Pass` iff `scaled_residual <= tolerance`, unless the check
/// decided otherwise for a reason given in `note`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub check_id: String,
    pub parameters: BTreeMap<String, String>,
    pub observed: Vec<f64>,
    pub predicted: Vec<f64>,
    pub residual: f64,
    pub scaled_residual: f64,
    pub tolerance: f64,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckRecord {
    pub fn new(check_id: &str) -> Self {
        CheckRecord {
            check_id: check_id.to_string(),
            parameters: BTreeMap::new(),
            observed: Vec::new(),
            predicted: Vec::new(),
            residual: f64::NAN,
            scaled_residual: f64::NAN,
            tolerance: f64::NAN,
            verdict: Verdict::Inconclusive,
            note: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn values(mut self, observed: Vec<f64>, predicted: Vec<f64>) -> Self {
        self.observed = observed;
        self.predicted = predicted;
        self
    }

    /// Sets the residuals and derives the verdict from the tolerance.
    pub fn judge(mut self, residual: f64, scaled_residual: f64, tolerance: f64) -> Self {
        self.residual = residual;
        self.scaled_residual = scaled_residual;
        self.tolerance = tolerance;
        self.verdict = if scaled_residual.is_finite() && scaled_residual <= tolerance {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        self
    }

    pub fn with_verdict(mut self, verdict: Verdict, note: impl Into<String>) -> Self {
        self.verdict = verdict;
        self.note = Some(note.into());
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    fn parameter_string(&self) -> String {
        self.parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }

    pub const CSV_HEADER: &'static str =
        "check_id,parameters,observed,predicted,residual,scaled_residual,tolerance,verdict,note";

    pub fn csv_row(&self) -> String {
        let join = |v: &[f64]| v.iter().map(|x| format!("{x:.12e}")).collect::<Vec<_>>().join(";");
        format!(
            "{},\"{}\",\"{}\",\"{}\",{:.6e},{:.6e},{:.6e},{},\"{}\"",
            self.check_id,
            self.parameter_string(),
            join(&self.observed),
            join(&self.predicted),
            self.residual,
            self.scaled_residual,
            self.tolerance,
            self.verdict,
            self.note.as_deref().unwrap_or("").replace('"', "'"),
        )
    }
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<12} {:<28} {:<12} residual {:.3e}  scaled {:.3e}  tol {:.3e}",
            self.check_id,
            self.parameter_string(),
            self.verdict,
            self.residual,
            self.scaled_residual,
            self.tolerance
        )?;
        if let Some(n) = &self.note {
            write!(f, "  ({n})")?;
        }
        Ok(())
    }
}

pub fn records_to_csv(records: &[CheckRecord]) -> String {
    let mut out = String::from(CheckRecord::CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_follows_tolerance() {
        let r = CheckRecord::new("x").judge(0.1, 0.2, 0.2);
        assert_eq!(r.verdict, Verdict::Pass);
        let r = CheckRecord::new("x").judge(0.1, 0.21, 0.2);
        assert_eq!(r.verdict, Verdict::Fail);
        let r = CheckRecord::new("x").judge(f64::NAN, f64::NAN, 1.0);
        assert_eq!(r.verdict, Verdict::Fail);
    }

    #[test]
    fn csv_shape() {
        let r = CheckRecord::new("lopo").param("n", 5).param("q", 2).values(vec![1.0], vec![2.0]).judge(1.0, 1.0, 2.0);
        let csv = records_to_csv(&[r]);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[1].starts_with("lopo,\"n=5;q=2\""));
        assert!(lines[1].contains(",pass,"));
    }
}
