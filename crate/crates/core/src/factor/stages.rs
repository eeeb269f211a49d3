use crate::report::ValidationReport;

pub const TIER_PIPELINE: &str = "pipeline";

/// Collects stage reports under `stage/tier` names and notes where the chain
/// stopped.
pub(crate) struct Pipeline {
    report: ValidationReport,
    halted: Option<String>,
}

impl Pipeline {
    pub(crate) fn new(subject: String) -> Self {
        Pipeline { report: ValidationReport::new(subject), halted: None }
    }

    /// Absorbs `r`; returns whether every entry passed.
    pub(crate) fn stage(&mut self, name: &str, r: ValidationReport) -> bool {
        let ok = r.all_passed();
        self.report.absorb(name, r);
        if !ok && self.halted.is_none() {
            self.halted = Some(name.to_string());
        }
        ok
    }

    /// Records a stage that could not run at all and finishes.
    pub(crate) fn refuse(mut self, name: &str, why: &str) -> ValidationReport {
        self.report.record_flag(name, "refused", false, Some(why.to_string()));
        self.halted.get_or_insert_with(|| name.to_string());
        self.finish()
    }

    pub(crate) fn finish(mut self) -> ValidationReport {
        let detail = match &self.halted {
            Some(s) => format!("halted at stage {s}"),
            None => "all stages passed".to_string(),
        };
        self.report.record_flag(TIER_PIPELINE, "completed", self.halted.is_none(), Some(detail));
        self.report
    }
}

/// The stage at which a theorem pipeline stopped, if it did.
pub fn halted_stage(report: &ValidationReport) -> Option<&str> {
    let e = report.entries.iter().rev().find(|e| e.tier == TIER_PIPELINE)?;
    e.detail.as_deref()?.strip_prefix("halted at stage ")
}
