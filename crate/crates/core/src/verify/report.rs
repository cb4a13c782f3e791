use serde::Serialize;
use serde_json::Value;

use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Mixed,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Mixed => "MIXED",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub inputs: Value,
    pub lhs: String,
    pub rhs: String,
}

/// One identity evaluated over a set of instances.
///
/// `verdict` is `PASS` when every instance holds, `FAIL` when none does and
/// `MIXED` otherwise. `expected` records the verdict the check is known to
/// produce, so documented discrepancies do not count as regressions.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub statement: String,
    pub instances: usize,
    pub verdict: Verdict,
    pub expected: Verdict,
    pub counterexamples: Vec<Counterexample>,
}

impl Check {
    pub fn as_expected(&self) -> bool {
        self.verdict == self.expected
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl IdentityReport {
    pub fn unexpected(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.as_expected())
    }

    pub fn all_as_expected(&self) -> bool {
        self.unexpected().next().is_none()
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Pretty JSON with a trailing newline; byte-stable for a given report.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Accumulates instances for one check.
pub struct CheckBuilder {
    id: String,
    statement: String,
    expected: Verdict,
    instances: usize,
    counterexamples: Vec<Counterexample>,
}

impl CheckBuilder {
    pub fn new(id: &str, statement: &str, expected: Verdict) -> Self {
        Self {
            id: id.to_string(),
            statement: statement.to_string(),
            expected,
            instances: 0,
            counterexamples: Vec::new(),
        }
    }

    /// Records one instance; a counterexample is kept when `lhs != rhs`.
    pub fn compare(&mut self, inputs: Value, lhs: &Rational, rhs: &Rational) -> bool {
        self.instances += 1;
        let holds = lhs == rhs;
        if !holds {
            self.counterexamples.push(Counterexample {
                inputs,
                lhs: rational::render(lhs),
                rhs: rational::render(rhs),
            });
        }
        holds
    }

    pub fn finish(self) -> Check {
        let failures = self.counterexamples.len();
        let verdict = if failures == 0 {
            Verdict::Pass
        } else if failures == self.instances {
            Verdict::Fail
        } else {
            Verdict::Mixed
        };
        Check {
            id: self.id,
            statement: self.statement,
            instances: self.instances,
            verdict,
            expected: self.expected,
            counterexamples: self.counterexamples,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use serde_json::json;

    #[test]
    fn verdicts_follow_counterexamples() {
        let mut b = CheckBuilder::new("a", "x = x", Verdict::Pass);
        b.compare(json!({}), &int(1), &int(1));
        let c = b.finish();
        assert_eq!((c.verdict, c.counterexamples.len()), (Verdict::Pass, 0));

        let mut b = CheckBuilder::new("b", "", Verdict::Fail);
        b.compare(json!({"n": 1}), &int(0), &ratio(1, 6));
        let c = b.finish();
        assert_eq!(c.verdict, Verdict::Fail);
        assert_eq!(c.counterexamples[0].rhs, "1/6");

        let mut b = CheckBuilder::new("c", "", Verdict::Pass);
        b.compare(json!({}), &int(0), &int(0));
        b.compare(json!({}), &int(0), &int(1));
        let c = b.finish();
        assert_eq!(c.verdict, Verdict::Mixed);
        assert!(!c.as_expected());
    }

    #[test]
    fn json_key_order() {
        let mut b = CheckBuilder::new("id", "stmt", Verdict::Fail);
        b.compare(json!({"alpha": ["0"], "r": [2], "k": 1}), &int(0), &ratio(1, 6));
        let report = IdentityReport { suite: "s".into(), checks: vec![b.finish()] };
        let v = report.to_json();
        let pos = |needle: &str| v.find(needle).unwrap();
        assert!(pos("\"suite\"") < pos("\"checks\""));
        assert!(pos("\"id\"") < pos("\"statement\""));
        assert!(pos("\"statement\"") < pos("\"instances\""));
        assert!(pos("\"instances\"") < pos("\"verdict\""));
        assert!(pos("\"verdict\"") < pos("\"expected\""));
        assert!(pos("\"expected\"") < pos("\"counterexamples\""));
        assert!(pos("\"alpha\"") < pos("\"k\""));
        assert!(v.ends_with('\n'));
    }
}
