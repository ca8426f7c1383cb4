//! Exhaustive property checks over the catalog, the small-semigroup corpus
//! and the structural descriptions of `Inn(S)`.
//!
//! Every suite returns a [`SuiteReport`]; each [`Check`] counts the cases it
//! examined and keeps the first counterexample.

mod examples;
mod gset;
mod rees;
mod semigroups;
mod tx;

use std::fmt;

pub use examples::examples_suite;
pub use gset::{gset_suite, trivial_gset_regression, z2_on_four};
pub use rees::{rees_suite, z2_rees_example};
pub use semigroups::{catalog_semigroups, conjugacy_suite, inner_suite};
pub use tx::tx_suite;

use crate::corpus::{test_corpus, DEFAULT_SEED};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl Check {
    pub fn new(name: &str) -> Self {
        Check {
            name: name.to_string(),
            cases: 0,
            failures: 0,
            first_failure: None,
        }
    }

    pub fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            checks: Vec::new(),
        }
    }

    /// The check called `name`, created on first use.
    pub fn check(&mut self, name: &str) -> &mut Check {
        match self.checks.iter().position(|c| c.name == name) {
            Some(k) => &mut self.checks[k],
            None => {
                self.checks.push(Check::new(name));
                self.checks.last_mut().unwrap()
            }
        }
    }

    pub fn record(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.check(name).record(ok, detail);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> u64 {
        self.checks.iter().map(|c| c.failures).sum()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.suite, if self.passed() { "pass" } else { "FAIL" })?;
        for c in &self.checks {
            write!(
                f,
                "  {} {} ({} cases, {} failures)",
                if c.passed() { "ok  " } else { "FAIL" },
                c.name,
                c.cases,
                c.failures
            )?;
            if let Some(d) = &c.first_failure {
                write!(f, ": {d}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The conjugacy and inner-automorphism suites over the catalog and the
/// corpus up to `max_order`.
pub fn semigroup_suites(max_order: usize) -> Vec<SuiteReport> {
    let mut conj = SuiteReport::new("conjugacy");
    let mut inner = SuiteReport::new("inner automorphisms");
    let subjects = catalog_semigroups()
        .into_iter()
        .chain(test_corpus(max_order, DEFAULT_SEED));
    for (name, s) in subjects {
        conjugacy_suite(&mut conj, &name, &s);
        inner_suite(&mut inner, &name, &s);
    }
    vec![conj, inner]
}

/// Every suite: the named examples, the property suites up to
/// `max_order`, the Rees example, `T(2)`, `T(3)`, and the G-set example
/// with its trivial-group regression.
pub fn verify_all(max_order: usize) -> Vec<SuiteReport> {
    let mut out = vec![examples_suite()];
    out.extend(semigroup_suites(max_order));
    out.push(rees_suite(&z2_rees_example()));
    for n in [2, 3] {
        out.push(tx_suite(n, true));
    }
    out.push(gset_suite(&z2_on_four()));
    for n in 1..=3 {
        out.push(trivial_gset_regression(n));
    }
    out
}
