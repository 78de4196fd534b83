//! Exhaustive finite-model search and the claims engine.

pub mod claims;
pub mod lattices;
pub mod structures;

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::approx::{RclStructure, StructureFile};
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

pub use claims::{find_claim, Assertion, Claim, Eval, Violation, REGISTRY};
pub use lattices::{count_lattices, enumerate_lattices, search_names, MAX_SEARCH_SIZE};
pub use structures::{enumerate_structures, lower_candidates, upper_candidates, AxiomSet, StructureSpace};

/// Environment variable overriding the worker count.
pub const THREADS_ENV: &str = "RCLKIT_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    ConfirmedUpToBound,
    Counterexample,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeCount {
    pub size: usize,
    pub lattices: usize,
    pub structures: usize,
    pub violating_structures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchCounts {
    pub lattices: usize,
    pub structures: usize,
    pub violating_structures: usize,
    pub violations: usize,
    pub per_size: Vec<SizeCount>,
}

/// How violations relate to unattained `¬` values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttainmentCorrelation {
    pub violations: usize,
    pub violations_with_unattained_negation: usize,
    pub violations_with_attained_negation: usize,
    pub structures_with_unattained_negation: usize,
    pub violating_structures_with_unattained_negation: usize,
}

/// The first violation found, with everything needed to re-check it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimWitness {
    pub size: usize,
    /// Position of the lattice among the iso-class representatives of its size.
    pub lattice_index: usize,
    pub law: String,
    pub tuple: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub negation_attained: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<serde_json::Value>,
    pub structure: StructureFile,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim: String,
    pub statement: String,
    pub space: AxiomSet,
    pub max_size: usize,
    /// Largest lattice size actually searched.
    pub searched_max_size: usize,
    pub status: ClaimStatus,
    pub assertion: Assertion,
    /// Whether the status agrees with the assertion; absent for open questions.
    pub agrees_with_assertion: Option<bool>,
    pub counts: SearchCounts,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub attainment: Option<AttainmentCorrelation>,
    pub witness: Option<ClaimWitness>,
}

impl ClaimResult {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("claim result serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Runs `f` on a pool sized by `RCLKIT_THREADS` when set, else on the global pool.
pub fn with_configured_pool<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let threads = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok());
    match threads.filter(|&t| t > 0) {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        },
        None => f(),
    }
}

struct Unit {
    size: usize,
    lattice_index: usize,
    space: Arc<StructureSpace>,
    lower: usize,
}

#[derive(Default)]
struct UnitResult {
    structures: usize,
    violating: usize,
    violations: usize,
    unattained_violations: usize,
    with_unattained: usize,
    violating_with_unattained: usize,
    first: Option<(RclStructure, Violation)>,
}

fn run_unit(claim: &Claim, unit: &Unit) -> UnitResult {
    let mut r = UnitResult::default();
    for ui in 0..unit.space.uppers.len() {
        let s = unit.space.structure(unit.lower, ui);
        let e = (claim.check)(&s);
        r.structures += 1;
        r.violations += e.violations;
        r.unattained_violations += e.unattained_violations;
        r.with_unattained += e.has_unattained as usize;
        if e.violations > 0 {
            r.violating += 1;
            r.violating_with_unattained += e.has_unattained as usize;
            if r.first.is_none() {
                if let Some(v) = e.first {
                    r.first = Some((s, v));
                }
            }
        }
    }
    r
}

fn witness(size: usize, lattice_index: usize, s: RclStructure, v: Violation) -> Result<ClaimWitness> {
    let s = match v.complement {
        Some(c) => s.with_complement(c)?,
        None => s,
    };
    Ok(ClaimWitness {
        size,
        lattice_index,
        tuple: v.tuple.iter().map(|&i| s.lattice().name(i).to_string()).collect(),
        law: v.law,
        negation_attained: v.unattained.map(|u| !u),
        detail: v.extra,
        structure: s.to_file(),
    })
}

/// Evaluates a claim over every structure of its space on lattices of
/// size `1..=max_size` (iso-class representatives). Units are evaluated
/// in parallel and merged in enumeration order.
pub fn run_claim(claim: &Claim, max_size: usize) -> Result<ClaimResult> {
    if max_size == 0 || max_size > MAX_SEARCH_SIZE {
        return Err(Error::BoundExceeded(max_size, MAX_SEARCH_SIZE));
    }
    let searched = claim.size_cap.map_or(max_size, |c| c.min(max_size));
    let mut units = Vec::new();
    let mut lattice_counts = Vec::new();
    for size in 1..=searched {
        let lattices = enumerate_lattices(size, true)?;
        lattice_counts.push(lattices.len());
        for (lattice_index, lat) in lattices.into_iter().enumerate() {
            let space = Arc::new(StructureSpace::new(Arc::new(lat), claim.space));
            for lower in 0..space.lowers.len() {
                units.push(Unit {
                    size,
                    lattice_index,
                    space: space.clone(),
                    lower,
                });
            }
        }
    }
    let results: Vec<UnitResult> = with_configured_pool(|| units.par_iter().map(|u| run_unit(claim, u)).collect());

    let mut per_size: Vec<SizeCount> = (1..=searched)
        .map(|size| SizeCount {
            size,
            lattices: lattice_counts[size - 1],
            structures: 0,
            violating_structures: 0,
        })
        .collect();
    let mut totals = UnitResult::default();
    let mut first = None;
    for (u, r) in units.iter().zip(results) {
        let sc = &mut per_size[u.size - 1];
        sc.structures += r.structures;
        sc.violating_structures += r.violating;
        totals.structures += r.structures;
        totals.violating += r.violating;
        totals.violations += r.violations;
        totals.unattained_violations += r.unattained_violations;
        totals.with_unattained += r.with_unattained;
        totals.violating_with_unattained += r.violating_with_unattained;
        if first.is_none() {
            if let Some((s, v)) = r.first {
                first = Some(witness(u.size, u.lattice_index, s, v)?);
            }
        }
    }
    let status = if totals.violating == 0 {
        ClaimStatus::ConfirmedUpToBound
    } else {
        ClaimStatus::Counterexample
    };
    let agrees = match claim.assertion {
        Assertion::Holds => Some(status == ClaimStatus::ConfirmedUpToBound),
        Assertion::FailsInGeneral => Some(status == ClaimStatus::Counterexample),
        Assertion::Open => None,
    };
    Ok(ClaimResult {
        claim: claim.id.to_string(),
        statement: claim.statement.to_string(),
        space: claim.space,
        max_size,
        searched_max_size: searched,
        status,
        assertion: claim.assertion,
        agrees_with_assertion: agrees,
        counts: SearchCounts {
            lattices: lattice_counts.iter().sum(),
            structures: totals.structures,
            violating_structures: totals.violating,
            violations: totals.violations,
            per_size,
        },
        attainment: claim.tracks_attainment.then(|| AttainmentCorrelation {
            violations: totals.violations,
            violations_with_unattained_negation: totals.unattained_violations,
            violations_with_attained_negation: totals.violations - totals.unattained_violations,
            structures_with_unattained_negation: totals.with_unattained,
            violating_structures_with_unattained_negation: totals.violating_with_unattained,
        }),
        witness: first,
    })
}

pub fn test_claim(id: &str, max_size: usize) -> Result<ClaimResult> {
    let claim = find_claim(id).ok_or_else(|| Error::UnknownClaim(id.to_string()))?;
    run_claim(claim, max_size)
}

/// Reloads the witness structure and re-runs the claim on it: the structure
/// must lie in the claim's space and reproduce the recorded first violation.
pub fn reverify(result: &ClaimResult) -> Result<bool> {
    let claim = find_claim(&result.claim).ok_or_else(|| Error::UnknownClaim(result.claim.clone()))?;
    let Some(w) = &result.witness else {
        return Ok(false);
    };
    let s = RclStructure::from_file(&w.structure)?;
    let in_space = match claim.space {
        AxiomSet::Core => s.is_core(),
        AxiomSet::FullRcl => s.is_rcl(),
    };
    let e = (claim.check)(&s);
    let reproduced = e.first.is_some_and(|v| {
        let names: Vec<&str> = v.tuple.iter().map(|&i| s.lattice().name(i)).collect();
        v.law == w.law && names == w.tuple
    });
    Ok(in_space && reproduced)
}

/// The iso-class representatives of every size up to `max_size`, in search order.
pub fn search_lattices(max_size: usize) -> Result<Vec<(usize, FiniteLattice)>> {
    let mut out = Vec::new();
    for n in 1..=max_size {
        out.extend(enumerate_lattices(n, true)?.into_iter().map(|l| (n, l)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx::{check_rcl_axioms, Axiom};

    #[test]
    fn lu2_equality_is_refuted_at_five() {
        let r = test_claim("prop1-lu2eq", 5).unwrap();
        assert_eq!(r.status, ClaimStatus::Counterexample);
        assert_eq!(r.agrees_with_assertion, Some(false));
        let w = r.witness.as_ref().unwrap();
        assert_eq!(w.size, 5);
        let s = RclStructure::from_file(&w.structure).unwrap();
        let rep = check_rcl_axioms(&s);
        assert!(rep.is_core);
        assert!(!rep.passes(Axiom::Lu2Eq));
        assert!(reverify(&r).unwrap());
    }

    #[test]
    fn lu2_equality_holds_below_five() {
        assert_eq!(
            test_claim("prop1-lu2eq", 4).unwrap().status,
            ClaimStatus::ConfirmedUpToBound
        );
    }

    #[test]
    fn unknown_claim_and_bounds() {
        assert_eq!(test_claim("zzz", 3), Err(Error::UnknownClaim("zzz".into())));
        assert_eq!(
            test_claim("thm1-laws", 0),
            Err(Error::BoundExceeded(0, MAX_SEARCH_SIZE))
        );
        assert_eq!(
            test_claim("thm1-laws", 8),
            Err(Error::BoundExceeded(8, MAX_SEARCH_SIZE))
        );
    }

    #[test]
    fn results_round_trip_through_json() {
        let r = test_claim("rough-order-top", 3).unwrap();
        let text = r.to_json();
        assert_eq!(ClaimResult::from_json(&text).unwrap(), r);
    }

    #[test]
    fn representability_finds_a_non_concrete_model() {
        let r = test_claim("representability", 5).unwrap();
        assert_eq!(r.searched_max_size, 3);
        assert_eq!(r.status, ClaimStatus::Counterexample);
        assert!(r.agrees_with_assertion.is_none());
        assert!(reverify(&r).unwrap());
    }
}
