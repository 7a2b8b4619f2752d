//! The checker pipelines run by the command-line tool and the acceptance
//! suite. Each checker samples instances from a tower with a seed, verifies
//! identities exactly and returns a deterministic JSON report.

mod covers;
mod field;
mod ideals;
mod pic;

pub use pic::group_law_oracle;

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::tower::Tower;

/// Names accepted by [`run_checker`].
pub const CHECKERS: [&str; 9] = [
    "norm-compat",
    "pull-push",
    "lemma-ic3",
    "lemma-ic6",
    "ideal-dict",
    "two-gen",
    "field-reconstruct",
    "phi-shrink",
    "divisible-torsionfree",
];

/// At most this many failing instances are listed per identity.
const MAX_LISTED: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Unknown,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Unknown => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CheckOptions {
    pub seed: u64,
    /// Overrides the tower's torsion bound.
    pub torsion_bound: Option<u32>,
}

/// Tally of one identity over sampled instances.
#[derive(Clone, Debug, Serialize)]
pub struct Identity {
    pub name: String,
    pub scope: String,
    pub checked: usize,
    pub passed: usize,
    pub unknown: usize,
    pub summary: String,
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub unknowns: Vec<String>,
}

impl Identity {
    pub fn new(name: impl Into<String>, scope: impl Into<String>) -> Self {
        Identity {
            name: name.into(),
            scope: scope.into(),
            checked: 0,
            passed: 0,
            unknown: 0,
            summary: String::new(),
            failures: Vec::new(),
            unknowns: Vec::new(),
        }
    }

    pub fn pass(&mut self) {
        self.checked += 1;
        self.passed += 1;
    }

    pub fn fail(&mut self, instance: impl FnOnce() -> String) {
        self.checked += 1;
        if self.failures.len() < MAX_LISTED {
            self.failures.push(instance());
        }
    }

    pub fn undecided(&mut self, instance: impl FnOnce() -> String) {
        self.checked += 1;
        self.unknown += 1;
        if self.unknowns.len() < MAX_LISTED {
            self.unknowns.push(instance());
        }
    }

    pub fn record(&mut self, ok: bool, instance: impl FnOnce() -> String) {
        if ok {
            self.pass()
        } else {
            self.fail(instance)
        }
    }

    /// Records an instance whose computation may itself fail; an error is a
    /// failure of the identity, reported with the instance.
    pub fn record_result(&mut self, r: Result<bool>, instance: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.record(ok, instance),
            Err(e) => self.fail(|| format!("{}: {e}", instance())),
        }
    }

    fn verdict(&self) -> Verdict {
        if self.passed + self.unknown < self.checked || self.checked == 0 {
            Verdict::Fail
        } else if self.unknown > 0 {
            Verdict::Unknown
        } else {
            Verdict::Pass
        }
    }

    fn finish(&mut self) {
        self.summary = format!("{}: {}/{}", self.name, self.passed, self.checked);
        if self.unknown > 0 {
            self.summary.push_str(&format!(" ({} unknown)", self.unknown));
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub checker: String,
    pub tower: String,
    pub seed: u64,
    pub torsion_bound: u32,
    pub verdict: Verdict,
    pub identities: Vec<Identity>,
    pub certificates: BTreeMap<String, Value>,
}

impl Report {
    fn new(checker: &str, tower: &Tower, opts: &CheckOptions) -> Self {
        Report {
            checker: checker.into(),
            tower: tower.name.clone(),
            seed: opts.seed,
            torsion_bound: torsion_bound(tower, opts),
            verdict: Verdict::Pass,
            identities: Vec::new(),
            certificates: BTreeMap::new(),
        }
    }

    fn push(&mut self, id: Identity) {
        self.identities.push(id);
    }

    fn certify(&mut self, key: &str, v: impl Serialize) {
        self.certificates
            .insert(key.into(), serde_json::to_value(v).expect("serializable certificate"));
    }

    /// Fail beats unknown beats pass.
    fn finish(mut self) -> Self {
        for id in &mut self.identities {
            id.finish();
        }
        let vs: Vec<Verdict> = self.identities.iter().map(Identity::verdict).collect();
        self.verdict = if vs.is_empty() || vs.contains(&Verdict::Fail) {
            Verdict::Fail
        } else if vs.contains(&Verdict::Unknown) {
            Verdict::Unknown
        } else {
            Verdict::Pass
        };
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable report") + "\n"
    }

    /// One line per identity.
    pub fn summary_lines(&self) -> Vec<String> {
        self.identities
            .iter()
            .map(|i| {
                if i.scope.is_empty() {
                    i.summary.clone()
                } else {
                    format!("[{}] {}", i.scope, i.summary)
                }
            })
            .collect()
    }
}

fn torsion_bound(tower: &Tower, opts: &CheckOptions) -> u32 {
    opts.torsion_bound.unwrap_or(tower.params.torsion_bound)
}

pub fn run_checker(name: &str, tower: &Tower, opts: &CheckOptions) -> Result<Report> {
    let report = Report::new(name, tower, opts);
    let report = match name {
        "pull-push" => covers::pull_push(tower, opts, report)?,
        "norm-compat" => covers::norm_compat(tower, opts, report)?,
        "lemma-ic3" => covers::decomposition(tower, opts, report)?,
        "two-gen" => ideals::two_gen(tower, opts, report)?,
        "ideal-dict" => ideals::dictionary(tower, opts, report)?,
        "lemma-ic6" => pic::trace(tower, opts, report)?,
        "divisible-torsionfree" => pic::divisible_torsionfree(tower, opts, report)?,
        "field-reconstruct" => field::reconstruct(tower, opts, report)?,
        "phi-shrink" => field::phi_shrink(tower, opts, report)?,
        other => {
            return Err(Error::Config(format!(
                "unknown checker `{other}`; expected one of {}",
                CHECKERS.join(", ")
            )))
        }
    };
    Ok(report.finish())
}
