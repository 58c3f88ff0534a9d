//! Human-readable Markdown renderings of command results.

use std::fmt::Write;

use aqm_core::assurance::{Checklist, ConformanceReport, GuidelineKind, GuidelineSet, TraceabilityReport, Verdict};
use aqm_core::model::preorder;
use aqm_core::{Diagnostic, QualityModel, RefinedRequirement, Severity};

/// ANSI styling, off unless explicitly enabled.
#[derive(Debug, Clone, Copy, Default)]
pub struct Style {
    pub color: bool,
}

impl Style {
    fn paint(self, code: &str, text: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_owned()
        }
    }

    fn verdict(self, v: Verdict) -> String {
        let code = match v {
            Verdict::Pass => "32",
            Verdict::Fail => "1;31",
            Verdict::NoData => "33",
            Verdict::ManualOnly => "36",
        };
        self.paint(code, v.as_str())
    }

    fn severity(self, s: Severity) -> &'static str {
        match s {
            Severity::Error => "error",
            Severity::Warning => "warning",
        }
    }
}

fn cell(text: &str) -> String {
    text.replace('|', "\\|").replace(['\r', '\n'], " ")
}

pub fn diagnostics(diags: &[Diagnostic], style: Style) -> String {
    let mut out = String::new();
    for d in diags {
        let level = style.severity(d.severity);
        let level = match d.severity {
            Severity::Error => style.paint("31", level),
            Severity::Warning => style.paint("33", level),
        };
        let _ = writeln!(out, "{level}[{}] {}: {}", d.code, d.path, d.message);
    }
    out
}

pub fn refined(reqs: &[RefinedRequirement]) -> String {
    let mut out = String::from("| Via | Fact | Dir | Statement |\n|---|---|---|---|\n");
    for r in reqs {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} |",
            r.via,
            cell(&r.fact.to_string()),
            r.direction.symbol(),
            cell(&r.statement)
        );
    }
    out
}

/// One section per impacted activity, in activity pre-order.
pub fn guidelines(model: &QualityModel, set: &GuidelineSet) -> String {
    let mut out = String::from("# Guidelines\n");
    for node in preorder(&model.activities) {
        let items: Vec<_> = set.items.iter().filter(|g| g.activity == node.id).collect();
        if items.is_empty() {
            continue;
        }
        let _ = writeln!(out, "\n## {} (`{}`)\n", cell(&node.label), node.id);
        for g in items {
            let tag = match g.kind {
                GuidelineKind::Do => "DO",
                GuidelineKind::Dont => "DON'T",
            };
            let _ = writeln!(out, "- **{tag}** {}", cell(&g.text));
        }
    }
    out
}

pub fn checklist(list: &Checklist, style: Style) -> String {
    let mut out = format!("# Review checklist: `{}`\n\n", list.artifact_type);
    if list.items.is_empty() {
        out.push_str("_No manual checks._\n");
    }
    for item in &list.items {
        let _ = writeln!(out, "- [ ] {}", cell(&item.question));
    }
    if !list.warnings.is_empty() {
        out.push('\n');
        out.push_str(&diagnostics(&list.warnings, style));
    }
    out
}

fn observed(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_else(|| "-".into())
}

pub fn conformance(report: &ConformanceReport, style: Style) -> String {
    let mut out = format!(
        "# Conformance: {}\n\n| # | Requirement | Observed | Verdict |\n|---|---|---|---|\n",
        cell(&report.tool)
    );
    for e in &report.evaluations {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} |",
            e.index,
            cell(&e.requirement.to_string()),
            observed(e.observed),
            style.verdict(e.verdict)
        );
    }
    if !report.diagnostics.is_empty() {
        out.push('\n');
        out.push_str(&diagnostics(&report.diagnostics, style));
    }
    out
}

pub fn trace(report: &TraceabilityReport, style: Style) -> String {
    let mut out = String::from("# Traceability\n");
    for (rank, row) in report.rows.iter().enumerate() {
        let _ = writeln!(out, "\n## {}. {} (`{}`)\n", rank + 1, cell(&row.label), row.activity);
        match &row.ratings {
            Some(r) => {
                let _ = writeln!(out, "Ratings: {}\n", cell(&r.to_string()));
            }
            None => out.push_str("Ratings: not set\n\n"),
        }
        if row.refined.is_empty() {
            out.push_str("No impacting facts.\n");
        } else {
            out.push_str(&refined(&row.refined));
        }
        if !row.quantified.is_empty() {
            out.push_str("\n| # | Quantified requirement | Verdict |\n|---|---|---|\n");
            for q in &row.quantified {
                let verdict = q.verdict.map(|v| style.verdict(v)).unwrap_or_else(|| "-".into());
                let _ = writeln!(out, "| {} | {} | {} |", q.index, cell(&q.requirement.to_string()), verdict);
            }
        }
    }
    if !report.diagnostics.is_empty() {
        out.push('\n');
        out.push_str(&diagnostics(&report.diagnostics, style));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use aqm_core::assurance::{generate_checklist, generate_guidelines};
    use aqm_core::{fixtures, refine, NodeId};

    #[test]
    fn refine_table_lists_statements() {
        let model = fixtures::instrument_cluster();
        let text = refined(&refine(&model, &NodeId::from_raw("tics_dialog")).unwrap());
        assert_eq!(text.lines().count(), 4);
        assert!(text.contains("| tics_dialog.processing | vehicle.tics.software.output_data.representation \\| unambiguousness | + |"));
    }

    #[test]
    fn guidelines_are_grouped_by_activity() {
        let model = fixtures::maintainability();
        let text = guidelines(&model, &generate_guidelines(&model));
        let concept = text.find("(`maintenance.concept_location`)").unwrap();
        let modification = text.find("(`maintenance.modification`)").unwrap();
        assert!(concept < modification);
        assert!(text.contains("- **DON'T** Avoid"));
    }

    #[test]
    fn color_only_when_enabled() {
        let model = fixtures::instrument_cluster();
        let list = generate_checklist(&model, "firmware");
        assert!(!checklist(&list, Style::default()).contains('\x1b'));
        assert!(checklist(&list, Style { color: true }).contains("\x1b[33mwarning"));
    }

    #[test]
    fn newlines_in_cells_are_flattened() {
        assert_eq!(cell("a|b\nc"), "a\\|b c");
    }
}
