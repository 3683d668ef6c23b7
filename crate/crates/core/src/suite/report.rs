use serde::{Deserialize, Serialize};

use super::{check_info, CheckResult, Status, SuiteReport, Witness};

/// Serialized form of one [`CheckResult`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check_id: String,
    pub anchor: String,
    pub status: Status,
    pub cases_checked: u64,
    pub millis: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl From<&CheckResult> for CheckRecord {
    fn from(r: &CheckResult) -> Self {
        CheckRecord {
            check_id: r.check_id.clone(),
            anchor: r.anchor.clone(),
            status: r.status,
            cases_checked: r.cases_checked,
            millis: r.elapsed.as_millis() as u64,
            counterexample: r.counterexample.clone(),
            note: r.note.clone(),
        }
    }
}

/// One JSON array with a record per check, in id order.
pub fn render_json(report: &SuiteReport) -> String {
    let records: Vec<CheckRecord> = report.results.iter().map(CheckRecord::from).collect();
    serde_json::to_string_pretty(&records).expect("records serialize")
}

pub fn render_text(report: &SuiteReport) -> String {
    let mut out = format!("suite {:?} q={}\n", report.kind, report.q);
    let width = report.results.iter().map(|r| r.check_id.len()).max().unwrap_or(0);
    for r in &report.results {
        let expected = r.status == Status::Vacuous && check_info(&r.check_id).is_some_and(|i| i.vacuity_expected(report.kind));
        let status = if expected { "vacuous*".to_string() } else { r.status.to_string() };
        out.push_str(&format!(
            "{:<width$}  {:<8}  {:>10} cases  {:>7} ms  {}\n",
            r.check_id,
            status,
            r.cases_checked,
            r.elapsed.as_millis(),
            r.anchor,
        ));
        if let Some(note) = &r.note {
            out.push_str(&format!("{:<width$}  note: {note}\n", ""));
        }
        if let Some(w) = &r.counterexample {
            out.push_str(&format!("{:<width$}  counterexample: {}\n", "", w.description));
            for e in &w.elements {
                out.push_str(&format!("{:<width$}    {} = {}\n", "", e.name, e.value));
            }
        }
    }
    let count = |s| report.results.iter().filter(|r| r.status == s).count();
    out.push_str(&format!(
        "{} pass, {} fail, {} vacuous, {} n/a in {} ms (* = vacuity expected for this family)\n",
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Vacuous),
        count(Status::Inapplicable),
        report.total_elapsed().as_millis(),
    ));
    out.push_str(if report.passed() { "suite: ok\n" } else { "suite: FAILED\n" });
    out
}
