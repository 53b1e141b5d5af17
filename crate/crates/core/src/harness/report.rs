//! Check reports and their JSON-lines serialization.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::degree::ExtInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Holds,
    HypothesisNotMet,
    Violated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    pub value: String,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub instance_id: String,
    pub hypotheses: Vec<Hypothesis>,
    pub quantities: BTreeMap<String, ExtInt>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Corpus text of the failing instance, present exactly when `VIOLATED`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckReport {
    pub fn new(check: &str, instance_id: &str) -> Self {
        CheckReport {
            check: check.to_string(),
            instance_id: instance_id.to_string(),
            hypotheses: Vec::new(),
            quantities: BTreeMap::new(),
            verdict: Verdict::Holds,
            notes: Vec::new(),
            witness: None,
        }
    }

    pub fn hypothesis(&mut self, name: impl Into<String>, value: impl ToString, satisfied: bool) -> bool {
        self.hypotheses.push(Hypothesis { name: name.into(), value: value.to_string(), satisfied });
        satisfied
    }

    pub fn quantity(&mut self, name: impl Into<String>, value: impl Into<ExtInt>) -> ExtInt {
        let v = value.into();
        self.quantities.insert(name.into(), v);
        v
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn hypotheses_met(&self) -> bool {
        self.hypotheses.iter().all(|h| h.satisfied)
    }

    /// Records a conclusion; the first failed one makes the report `VIOLATED`.
    pub fn conclude(&mut self, name: &str, holds: bool) {
        if !holds && self.verdict != Verdict::Violated {
            self.verdict = Verdict::Violated;
            self.note(format!("conclusion failed: {name}"));
        }
    }

    /// Marks the report `HYPOTHESIS_NOT_MET` if some hypothesis failed.
    /// Returns whether the conclusions should be asserted.
    pub fn gate(&mut self) -> bool {
        if self.hypotheses_met() {
            return true;
        }
        if self.verdict == Verdict::Holds {
            self.verdict = Verdict::HypothesisNotMet;
        }
        false
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub holds: usize,
    pub not_met: usize,
    pub violated: usize,
}

impl Tally {
    pub fn of<'a>(reports: impl IntoIterator<Item = &'a CheckReport>) -> Self {
        let mut t = Tally::default();
        for r in reports {
            match r.verdict {
                Verdict::Holds => t.holds += 1,
                Verdict::HypothesisNotMet => t.not_met += 1,
                Verdict::Violated => t.violated += 1,
            }
        }
        t
    }
}

impl std::fmt::Display for Tally {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} HOLDS, {} HYPOTHESIS_NOT_MET, {} VIOLATED", self.holds, self.not_met, self.violated)
    }
}
