//! Shared bookkeeping for exhaustive law checks.

use serde::{Deserialize, Serialize};

use crate::approx::{scan_tuples, Witness};
use crate::lattice::FiniteLattice;

/// Outcome of one law over every tuple of the carrier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawResult {
    pub law: String,
    pub statement: String,
    pub passed: bool,
    pub violations: usize,
    /// Lexicographically first violating tuples.
    pub witnesses: Vec<Witness>,
}

/// A named battery of law outcomes.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct LawFlags {
    pub results: Vec<LawResult>,
    /// Reading conventions applied while evaluating the battery.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl LawFlags {
    pub fn get(&self, law: &str) -> Option<&LawResult> {
        self.results.iter().find(|r| r.law == law)
    }

    /// Panics on an unknown law name; use for names the battery always emits.
    pub fn holds(&self, law: &str) -> bool {
        self.get(law)
            .unwrap_or_else(|| panic!("law {law} not in battery"))
            .passed
    }

    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawResult> {
        self.results.iter().filter(|r| !r.passed)
    }

    pub(crate) fn check(
        &mut self,
        lattice: &FiniteLattice,
        law: &str,
        statement: &str,
        arity: usize,
        holds: impl FnMut(&[usize]) -> bool,
    ) {
        let (violations, witnesses) = scan_tuples(lattice.len(), arity, holds);
        self.results.push(LawResult {
            law: law.to_string(),
            statement: statement.to_string(),
            passed: violations == 0,
            violations,
            witnesses: witnesses.iter().map(|w| Witness::new(lattice, w)).collect(),
        });
    }
}
