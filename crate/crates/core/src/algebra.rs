//! Abstract aggregation algebras: checking the defining conditions and
//! whether the given operations coincide with those derived from `l`, `u`.

use serde::{Deserialize, Serialize};

use crate::aggregation::{check_cca_laws, check_oa_laws, operation_table, AggregationOp, OperationTable};
use crate::approx::RclStructure;
use crate::error::{Error, Result};
use crate::laws::LawFlags;
use crate::negation::{
    check_implication_laws, check_negation_laws, implication_table, ImplicationKind, NegationKind, UnaryTable,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Signature {
    /// `·`, `⊗`, `¬`, `~` over an approximation structure.
    Negation,
    /// `·`, `⊗`, `⊨_¬`, `⊨_~` over an approximation structure.
    Implication,
}

#[derive(Debug, Clone)]
pub enum SignatureOps {
    Negation {
        neg: UnaryTable,
        sim: UnaryTable,
    },
    Implication {
        imp_neg: OperationTable,
        imp_sim: OperationTable,
    },
}

/// An algebra given by tables rather than by formulas.
#[derive(Debug, Clone)]
pub struct AbstractAlgebra {
    pub base: RclStructure,
    pub cca: OperationTable,
    pub oa: OperationTable,
    pub ops: SignatureOps,
}

impl AbstractAlgebra {
    pub fn signature(&self) -> Signature {
        match self.ops {
            SignatureOps::Negation { .. } => Signature::Negation,
            SignatureOps::Implication { .. } => Signature::Implication,
        }
    }

    /// The concrete algebra: every operation derived from the base structure.
    pub fn derived(base: RclStructure, signature: Signature) -> Self {
        let ops = match signature {
            Signature::Negation => SignatureOps::Negation {
                neg: UnaryTable::derived(&base, NegationKind::Neg),
                sim: UnaryTable::derived(&base, NegationKind::Sim),
            },
            Signature::Implication => SignatureOps::Implication {
                imp_neg: implication_table(&base, ImplicationKind::Neg),
                imp_sim: implication_table(&base, ImplicationKind::Sim),
            },
        };
        AbstractAlgebra {
            cca: operation_table(&base, AggregationOp::Cca),
            oa: operation_table(&base, AggregationOp::Oa),
            base,
            ops,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionResult {
    pub condition: String,
    pub passed: bool,
    pub failed_laws: Vec<String>,
}

/// Where a given operation differs from its derived counterpart.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperationMismatch {
    pub operation: String,
    pub differing_entries: usize,
    /// First differing argument tuple.
    pub at: Vec<String>,
    pub given: String,
    pub derived: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentabilityReport {
    pub signature: Signature,
    pub conditions: Vec<ConditionResult>,
    /// All defining conditions hold.
    pub is_model: bool,
    pub mismatches: Vec<OperationMismatch>,
    /// A model whose operations all equal the derived ones.
    pub representable: bool,
}

fn condition(name: &str, flags: &LawFlags, laws: &[&str]) -> ConditionResult {
    let failed_laws: Vec<String> = laws
        .iter()
        .filter(|law| !flags.holds(law))
        .map(|law| law.to_string())
        .collect();
    ConditionResult {
        condition: name.to_string(),
        passed: failed_laws.is_empty(),
        failed_laws,
    }
}

/// The defining conditions of the abstract algebra, in declaration order.
pub fn check_conditions(alg: &AbstractAlgebra) -> Vec<ConditionResult> {
    let s = &alg.base;
    let rcl = s.axiom_report();
    let mut out = vec![ConditionResult {
        condition: "rcl".into(),
        passed: rcl.is_rcl,
        failed_laws: rcl.failures().map(|f| f.axiom.tag().to_string()).collect(),
    }];
    out.push(condition(
        "cdotc",
        &check_cca_laws(&alg.cca),
        &["Ccomm", "Casso", "Cm", "Cb"],
    ));
    out.push(condition(
        "otimc",
        &check_oa_laws(s, &alg.oa),
        &["Acomm", "wAsso1", "wAsso2", "Am", "Ab"],
    ));
    match &alg.ops {
        SignatureOps::Negation { neg, sim } => {
            out.push(condition(
                "negc",
                &check_negation_laws(s, neg),
                &["WN1-N", "WN2-N", "WN3-N"],
            ));
            out.push(condition("simc", &check_negation_laws(s, sim), &["WN2-S", "WN3-S"]));
        }
        SignatureOps::Implication { imp_neg, imp_sim } => {
            out.push(condition(
                "imsc",
                &check_implication_laws(imp_sim),
                &["FPA", "SPM", "BC3", "IBL"],
            ));
            out.push(condition(
                "inegc",
                &check_implication_laws(imp_neg),
                &["FPA", "IP", "SPM", "BC1", "BC2", "BC3"],
            ));
        }
    }
    out
}

fn binary_mismatch(name: &str, given: &OperationTable, derived: &OperationTable) -> Option<OperationMismatch> {
    let l = given.lattice();
    let n = l.len();
    let diffs: Vec<usize> = (0..n * n)
        .filter(|&i| given.entries()[i] != derived.entries()[i])
        .collect();
    let &first = diffs.first()?;
    let (a, b) = (first / n, first % n);
    Some(OperationMismatch {
        operation: name.to_string(),
        differing_entries: diffs.len(),
        at: vec![l.name(a).to_string(), l.name(b).to_string()],
        given: l.name(given.get(a, b)).to_string(),
        derived: l.name(derived.get(a, b)).to_string(),
    })
}

fn unary_mismatch(name: &str, given: &UnaryTable, derived: &UnaryTable) -> Option<OperationMismatch> {
    let l = given.lattice();
    let diffs: Vec<usize> = (0..l.len()).filter(|&a| given.get(a) != derived.get(a)).collect();
    let &a = diffs.first()?;
    Some(OperationMismatch {
        operation: name.to_string(),
        differing_entries: diffs.len(),
        at: vec![l.name(a).to_string()],
        given: l.name(given.get(a)).to_string(),
        derived: l.name(derived.get(a)).to_string(),
    })
}

/// Checks the defining conditions and compares every operation with the
/// one derived from the algebra's own `l` and `u`.
pub fn check_representability(alg: &AbstractAlgebra) -> Result<RepresentabilityReport> {
    let host = alg.base.lattice_arc();
    let tables = [&alg.cca, &alg.oa];
    let host_ok = match &alg.ops {
        SignatureOps::Negation { neg, sim } => {
            neg.lattice().names() == host.names() && sim.lattice().names() == host.names()
        }
        SignatureOps::Implication { imp_neg, imp_sim } => {
            imp_neg.lattice().names() == host.names() && imp_sim.lattice().names() == host.names()
        }
    };
    if !host_ok || tables.iter().any(|t| t.lattice().names() != host.names()) {
        return Err(Error::HostMismatch);
    }
    let conditions = check_conditions(alg);
    let is_model = conditions.iter().all(|c| c.passed);
    let concrete = AbstractAlgebra::derived(alg.base.clone(), alg.signature());
    let mut mismatches = Vec::new();
    mismatches.extend(binary_mismatch("·", &alg.cca, &concrete.cca));
    mismatches.extend(binary_mismatch("⊗", &alg.oa, &concrete.oa));
    match (&alg.ops, &concrete.ops) {
        (SignatureOps::Negation { neg, sim }, SignatureOps::Negation { neg: dn, sim: ds }) => {
            mismatches.extend(unary_mismatch("¬", neg, dn));
            mismatches.extend(unary_mismatch("~", sim, ds));
        }
        (
            SignatureOps::Implication { imp_neg, imp_sim },
            SignatureOps::Implication {
                imp_neg: dn,
                imp_sim: ds,
            },
        ) => {
            mismatches.extend(binary_mismatch("⊨¬", imp_neg, dn));
            mismatches.extend(binary_mismatch("⊨~", imp_sim, ds));
        }
        _ => unreachable!("derived algebra has the same signature"),
    }
    Ok(RepresentabilityReport {
        signature: alg.signature(),
        representable: is_model && mismatches.is_empty(),
        is_model,
        conditions,
        mismatches,
    })
}

/// Largest carrier for which alternative operations are enumerated.
pub const MAX_ALTERNATIVE_SIZE: usize = 3;

/// Valid tables for one operation slot of a signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotSearch {
    pub operation: &'static str,
    /// Number of tables satisfying the slot's defining condition.
    pub valid_tables: usize,
    pub derived_valid: bool,
    pub first_valid: Option<Vec<usize>>,
    /// First valid table different from the derived one.
    pub first_alternative: Option<Vec<usize>>,
}

impl SlotSearch {
    pub fn alternatives(&self) -> usize {
        self.valid_tables - self.derived_valid as usize
    }
}

fn all_tables(n: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.pow(len as u32);
    (0..total).map(move |mut k| {
        let mut t = vec![0; len];
        // first entry varies slowest, giving lexicographic order
        for slot in t.iter_mut().rev() {
            *slot = k % n;
            k /= n;
        }
        t
    })
}

fn search_slot(
    operation: &'static str,
    derived: &[usize],
    arity: u32,
    n: usize,
    valid: impl Fn(&[usize]) -> bool,
) -> SlotSearch {
    let mut out = SlotSearch {
        operation,
        valid_tables: 0,
        derived_valid: valid(derived),
        first_valid: None,
        first_alternative: None,
    };
    for t in all_tables(n, n.pow(arity)) {
        if valid(&t) {
            out.valid_tables += 1;
            if out.first_valid.is_none() {
                out.first_valid = Some(t.clone());
            }
            if out.first_alternative.is_none() && t != derived {
                out.first_alternative = Some(t);
            }
        }
    }
    out
}

/// Early-exit validity predicates for raw tables, used by the enumeration.
/// They must agree with the law batteries; a test cross-checks them.
mod quick {
    use crate::approx::RclStructure;

    fn all3(n: usize, f: impl Fn(usize, usize, usize) -> bool) -> bool {
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| f(a, b, c))))
    }

    fn all2(n: usize, f: impl Fn(usize, usize) -> bool) -> bool {
        (0..n).all(|a| (0..n).all(|b| f(a, b)))
    }

    pub fn cca(s: &RclStructure, t: &[usize]) -> bool {
        let l = s.lattice();
        let n = l.len();
        let d = |a: usize, b: usize| t[a * n + b];
        all2(n, |a, b| d(a, b) == d(b, a))
            && (0..n).all(|a| d(a, l.bottom()) == l.bottom())
            && all3(n, |a, b, e| !l.leq(a, b) || l.leq(d(a, e), d(b, e)))
            && all3(n, |a, b, e| d(a, d(b, e)) == d(d(a, b), e))
    }

    pub fn oa(s: &RclStructure, t: &[usize]) -> bool {
        let l = s.lattice();
        let n = l.len();
        let o = |a: usize, b: usize| t[a * n + b];
        let fixed = |x: usize| s.upper(s.upper(x)) == s.upper(x);
        all2(n, |a, b| o(a, b) == o(b, a))
            && (0..n).all(|a| o(a, l.top()) == l.top())
            && all3(n, |a, b, e| !l.leq(a, b) || l.leq(o(a, e), o(b, e)))
            && all3(n, |a, b, e| {
                !(fixed(a) && fixed(b) && fixed(e)) || o(a, o(b, e)) == o(o(a, b), e)
            })
            && all3(n, |a, b, e| o(a, o(l.join(b, e), a)) == o(o(l.join(a, b), e), e))
    }

    pub fn neg(s: &RclStructure, t: &[usize]) -> bool {
        let l = s.lattice();
        let n = l.len();
        let (bot, top) = (l.bottom(), l.top());
        let u = |x: usize| s.upper(x);
        l.leq(t[bot], top)
            && t[top] == bot
            && all2(n, |a, b| {
                !l.leq(a, b) || (l.leq(t[b], u(t[b])) && l.leq(u(t[b]), u(t[a])))
            })
            && (0..n).all(|a| l.leq(t[t[a]], u(a)))
    }

    pub fn sim(s: &RclStructure, t: &[usize]) -> bool {
        let l = s.lattice();
        let n = l.len();
        let lo = |x: usize| s.lower(x);
        l.leq(l.bottom(), t[l.top()])
            && t[l.bottom()] == l.top()
            && all2(n, |a, b| {
                !l.leq(a, b) || (l.leq(lo(t[b]), lo(t[a])) && l.leq(lo(t[a]), t[a]))
            })
    }

    fn fpa_spm(s: &RclStructure, t: &[usize]) -> bool {
        let l = s.lattice();
        let n = l.len();
        let i = |a: usize, b: usize| t[a * n + b];
        all3(n, |a, b, c| !l.leq(a, b) || l.leq(i(b, c), i(a, c)))
            && all3(n, |a, b, c| !l.leq(b, c) || l.leq(i(a, b), i(a, c)))
    }

    pub fn imp_neg(s: &RclStructure, t: &[usize]) -> bool {
        let l = s.lattice();
        let n = l.len();
        let (bot, top) = (l.bottom(), l.top());
        let i = |a: usize, b: usize| t[a * n + b];
        i(bot, bot) == top
            && i(top, top) == top
            && i(top, bot) == bot
            && (0..n).all(|a| i(a, a) == top)
            && fpa_spm(s, t)
    }

    pub fn imp_sim(s: &RclStructure, t: &[usize]) -> bool {
        let l = s.lattice();
        let n = l.len();
        let i = |a: usize, b: usize| t[a * n + b];
        i(l.top(), l.bottom()) == l.bottom() && all2(n, |a, b| i(a, i(a, b)) == i(a, b)) && fpa_spm(s, t)
    }
}

/// For every operation of the signature, enumerates all tables on the
/// carrier that satisfy that operation's defining condition.
pub fn search_alternatives(base: &RclStructure, signature: Signature) -> Result<Vec<SlotSearch>> {
    let n = base.len();
    if n > MAX_ALTERNATIVE_SIZE {
        return Err(Error::BoundExceeded(n, MAX_ALTERNATIVE_SIZE));
    }
    let concrete = AbstractAlgebra::derived(base.clone(), signature);
    let mut slots = vec![
        search_slot("·", concrete.cca.entries(), 2, n, |t| quick::cca(base, t)),
        search_slot("⊗", concrete.oa.entries(), 2, n, |t| quick::oa(base, t)),
    ];
    match &concrete.ops {
        SignatureOps::Negation { neg, sim } => {
            slots.push(search_slot("¬", neg.entries(), 1, n, |t| quick::neg(base, t)));
            slots.push(search_slot("~", sim.entries(), 1, n, |t| quick::sim(base, t)));
        }
        SignatureOps::Implication { imp_neg, imp_sim } => {
            slots.push(search_slot("⊨¬", imp_neg.entries(), 2, n, |t| {
                quick::imp_neg(base, t)
            }));
            slots.push(search_slot("⊨~", imp_sim.entries(), 2, n, |t| {
                quick::imp_sim(base, t)
            }));
        }
    }
    Ok(slots)
}

/// A model of the abstract signature that is not the concrete algebra, if
/// one exists: the first slot with an alternative takes its first
/// alternative, every other slot its derived table when valid.
pub fn non_concrete_model(
    base: &RclStructure,
    signature: Signature,
) -> Result<Option<(AbstractAlgebra, &'static str)>> {
    let slots = search_alternatives(base, signature)?;
    if slots.iter().any(|s| s.valid_tables == 0) {
        return Ok(None);
    }
    let Some(k) = slots.iter().position(|s| s.first_alternative.is_some()) else {
        return Ok(None);
    };
    let concrete = AbstractAlgebra::derived(base.clone(), signature);
    let lat = base.lattice_arc().clone();
    let pick = |i: usize, derived: &[usize]| -> Vec<usize> {
        if i == k {
            slots[i].first_alternative.clone().unwrap()
        } else if slots[i].derived_valid {
            derived.to_vec()
        } else {
            slots[i].first_valid.clone().unwrap()
        }
    };
    let table = |i: usize, derived: &OperationTable| {
        OperationTable::from_entries(
            lat.clone(),
            crate::aggregation::TableKind::Custom(slots[i].operation.into()),
            pick(i, derived.entries()),
        )
    };
    let unary = |i: usize, derived: &UnaryTable| {
        UnaryTable::custom(lat.clone(), slots[i].operation, pick(i, derived.entries()))
    };
    let ops = match &concrete.ops {
        SignatureOps::Negation { neg, sim } => SignatureOps::Negation {
            neg: unary(2, neg)?,
            sim: unary(3, sim)?,
        },
        SignatureOps::Implication { imp_neg, imp_sim } => SignatureOps::Implication {
            imp_neg: table(2, imp_neg)?,
            imp_sim: table(3, imp_sim)?,
        },
    };
    let alg = AbstractAlgebra {
        cca: table(0, &concrete.cca)?,
        oa: table(1, &concrete.oa)?,
        base: base.clone(),
        ops,
    };
    Ok(Some((alg, slots[k].operation)))
}
