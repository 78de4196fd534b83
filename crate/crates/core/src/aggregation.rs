//! The derived binary operations `·`, `⊗`, `⊙`, `×`: evaluation, tables,
//! law checks and norm classification.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::approx::RclStructure;
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::laws::LawFlags;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AggregationOp {
    /// Cautious co-aggregation `a·b = a^l ∧ b^l`.
    Cca,
    /// Optimistic aggregation `a⊗b = a^u ∨ b^u`.
    Oa,
    /// `a⊙b = a^l ∨ b^l`.
    Odot,
    /// `a×b = a^u ∧ b^u`.
    Cross,
}

impl AggregationOp {
    pub const ALL: [AggregationOp; 4] = [
        AggregationOp::Cca,
        AggregationOp::Oa,
        AggregationOp::Odot,
        AggregationOp::Cross,
    ];

    pub fn kind(self) -> TableKind {
        match self {
            AggregationOp::Cca => TableKind::Cca,
            AggregationOp::Oa => TableKind::Oa,
            AggregationOp::Odot => TableKind::Odot,
            AggregationOp::Cross => TableKind::Cross,
        }
    }
}

pub fn aggregate(s: &RclStructure, op: AggregationOp, a: usize, b: usize) -> usize {
    let l = s.lattice();
    match op {
        AggregationOp::Cca => l.meet(s.lower(a), s.lower(b)),
        AggregationOp::Oa => l.join(s.upper(a), s.upper(b)),
        AggregationOp::Odot => l.join(s.lower(a), s.lower(b)),
        AggregationOp::Cross => l.meet(s.upper(a), s.upper(b)),
    }
}

/// Name-level evaluation.
pub fn aggregate_by_name(s: &RclStructure, op: AggregationOp, a: &str, b: &str) -> Result<String> {
    let l = s.lattice();
    let (a, b) = (l.index_of(a)?, l.index_of(b)?);
    Ok(l.name(aggregate(s, op, a, b)).to_string())
}

/// What a binary table holds.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableKind {
    Cca,
    Oa,
    Odot,
    Cross,
    Meet,
    Join,
    ImpNeg,
    ImpO,
    ImpSim,
    ImpS,
    ImpTop,
    ImpBottom,
    Custom(String),
}

impl TableKind {
    pub fn symbol(&self) -> &str {
        match self {
            TableKind::Cca => "·",
            TableKind::Oa => "⊗",
            TableKind::Odot => "⊙",
            TableKind::Cross => "×",
            TableKind::Meet => "∧",
            TableKind::Join => "∨",
            TableKind::ImpNeg => "⊨¬",
            TableKind::ImpO => "⊨o",
            TableKind::ImpSim => "⊨~",
            TableKind::ImpS => "⊨s",
            TableKind::ImpTop => "⊨⊤",
            TableKind::ImpBottom => "⊨⊥",
            TableKind::Custom(name) => name,
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A total binary operation on a lattice carrier, row = left operand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperationTable {
    lattice: Arc<FiniteLattice>,
    kind: TableKind,
    entries: Vec<usize>,
}

impl OperationTable {
    pub fn from_fn(lattice: Arc<FiniteLattice>, kind: TableKind, f: impl Fn(usize, usize) -> usize) -> Self {
        let n = lattice.len();
        let entries = (0..n * n).map(|i| f(i / n, i % n)).collect();
        OperationTable { lattice, kind, entries }
    }

    pub fn from_entries(lattice: Arc<FiniteLattice>, kind: TableKind, entries: Vec<usize>) -> Result<Self> {
        let n = lattice.len();
        if entries.len() != n * n || entries.iter().any(|&v| v >= n) {
            return Err(Error::PartialTable {
                table: kind.symbol().to_string(),
                element: String::from("(binary table)"),
            });
        }
        Ok(OperationTable { lattice, kind, entries })
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn lattice_arc(&self) -> &Arc<FiniteLattice> {
        &self.lattice
    }

    pub fn kind(&self) -> &TableKind {
        &self.kind
    }

    pub fn get(&self, a: usize, b: usize) -> usize {
        self.entries[a * self.lattice.len() + b]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Row-major element names.
    pub fn name_rows(&self) -> Vec<Vec<String>> {
        let n = self.lattice.len();
        (0..n)
            .map(|a| (0..n).map(|b| self.lattice.name(self.get(a, b)).to_string()).collect())
            .collect()
    }

    pub fn same_host(&self, other: &OperationTable) -> bool {
        Arc::ptr_eq(&self.lattice, &other.lattice) || self.lattice == other.lattice
    }
}

pub fn operation_table(s: &RclStructure, op: AggregationOp) -> OperationTable {
    OperationTable::from_fn(s.lattice_arc().clone(), op.kind(), |a, b| aggregate(s, op, a, b))
}

pub fn lattice_table(lattice: Arc<FiniteLattice>, op: crate::lattice::LatticeOp) -> OperationTable {
    let kind = match op {
        crate::lattice::LatticeOp::Meet => TableKind::Meet,
        crate::lattice::LatticeOp::Join => TableKind::Join,
    };
    let l = lattice.clone();
    OperationTable::from_fn(lattice, kind, move |a, b| l.op(op, a, b))
}

/// Checks the CCA laws (Ccomm, Casso, Cm, Cb) and the OA laws (Acomm,
/// premise-guarded wAsso1, wAsso2, Am, Ab) exhaustively.
pub fn check_aggregation_laws(s: &RclStructure) -> LawFlags {
    let mut flags = check_cca_laws(&operation_table(s, AggregationOp::Cca));
    let oa = check_oa_laws(s, &operation_table(s, AggregationOp::Oa));
    flags.results.extend(oa.results);
    flags.notes.extend(oa.notes);
    flags
}

/// Ccomm, Casso, Cm and Cb for an arbitrary table `·`.
pub fn check_cca_laws(t: &OperationTable) -> LawFlags {
    let l = t.lattice();
    let dot = |a, b| t.get(a, b);
    let mut flags = LawFlags::default();
    flags.check(l, "Ccomm", "a·b = b·a", 2, |t| dot(t[0], t[1]) == dot(t[1], t[0]));
    flags.check(l, "Casso", "a·(b·e) = (a·b)·e", 3, |t| {
        dot(t[0], dot(t[1], t[2])) == dot(dot(t[0], t[1]), t[2])
    });
    flags.check(l, "Cm", "a ≤ b → a·e ≤ b·e", 3, |t| {
        !l.leq(t[0], t[1]) || l.leq(dot(t[0], t[2]), dot(t[1], t[2]))
    });
    flags.check(l, "Cb", "a·⊥ = ⊥", 1, |t| dot(t[0], l.bottom()) == l.bottom());
    flags
}

/// Acomm, wAsso1, wAsso2, Am and Ab for an arbitrary table `⊗`; the
/// wAsso1 premise uses the upper approximation of `s`.
pub fn check_oa_laws(s: &RclStructure, t: &OperationTable) -> LawFlags {
    let l = s.lattice();
    let ot = |a, b| t.get(a, b);
    let fixed_uu = |x: usize| s.upper(s.upper(x)) == s.upper(x);
    let mut flags = LawFlags::default();
    flags.check(l, "Acomm", "a⊗b = b⊗a", 2, |t| ot(t[0], t[1]) == ot(t[1], t[0]));
    flags.check(
        l,
        "wAsso1",
        "a^uu = a^u & b^uu = b^u & e^uu = e^u → a⊗(b⊗e) = (a⊗b)⊗e",
        3,
        |t| {
            !(fixed_uu(t[0]) && fixed_uu(t[1]) && fixed_uu(t[2]))
                || ot(t[0], ot(t[1], t[2])) == ot(ot(t[0], t[1]), t[2])
        },
    );
    flags.check(l, "wAsso2", "a⊗((b∨e)⊗a) = ((a∨b)⊗e)⊗e", 3, |t| {
        let (a, b, e) = (t[0], t[1], t[2]);
        ot(a, ot(l.join(b, e), a)) == ot(ot(l.join(a, b), e), e)
    });
    flags.check(l, "Am", "a ≤ b → a⊗e ≤ b⊗e", 3, |t| {
        !l.leq(t[0], t[1]) || l.leq(ot(t[0], t[2]), ot(t[1], t[2]))
    });
    flags.check(l, "Ab", "a⊗⊤ = ⊤", 1, |t| ot(t[0], l.top()) == l.top());
    flags
        .notes
        .push("wAsso2 is read with a single third variable e on both sides: a⊗((b∨e)⊗a) = ((a∨b)⊗e)⊗e".into());
    flags
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormClass {
    PseudoUninorm,
    Uninorm,
    PseudoTNorm,
    TNorm,
    PseudoSNorm,
    SNorm,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormClassification {
    pub class: NormClass,
    pub failed: Vec<String>,
}

/// Classifies a binary operation with candidate identity `e`.
pub fn classify_norm(table: &OperationTable, e: usize) -> NormClassification {
    let l = table.lattice();
    let n = l.len();
    let t = |a, b| table.get(a, b);
    let mut failed = Vec::new();
    let order_compatible = (0..n)
        .all(|a| (0..n).all(|b| !l.leq(a, b) || (0..n).all(|c| l.leq(t(a, c), t(b, c)) && l.leq(t(c, a), t(c, b)))));
    if !order_compatible {
        failed.push("order-compatibility".to_string());
    }
    let associative = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t(a, t(b, c)) == t(t(a, b), c))));
    if !associative {
        failed.push("associativity".to_string());
    }
    let identity = (0..n).all(|x| t(e, x) == x && t(x, e) == x);
    if !identity {
        failed.push("identity".to_string());
    }
    let commutative = (0..n).all(|a| (0..n).all(|b| t(a, b) == t(b, a)));
    if !commutative {
        failed.push("commutativity".to_string());
    }
    let class = if !(order_compatible && associative && identity) {
        NormClass::None
    } else if e == l.top() {
        if commutative {
            NormClass::TNorm
        } else {
            NormClass::PseudoTNorm
        }
    } else if e == l.bottom() {
        if commutative {
            NormClass::SNorm
        } else {
            NormClass::PseudoSNorm
        }
    } else if commutative {
        NormClass::Uninorm
    } else {
        NormClass::PseudoUninorm
    };
    NormClassification { class, failed }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx::worked_example;
    use crate::lattice::{seven_element_example, LatticeOp};

    #[test]
    fn single_entries_from_the_worked_example() {
        let s = worked_example();
        assert_eq!(aggregate_by_name(&s, AggregationOp::Cca, "⊤", "b").unwrap(), "f");
        assert_eq!(aggregate_by_name(&s, AggregationOp::Oa, "a", "c").unwrap(), "⊤");
        assert!(aggregate_by_name(&s, AggregationOp::Oa, "a", "q").is_err());
    }

    #[test]
    fn identity_cca_is_meet() {
        let lat = Arc::new(seven_element_example());
        let s = RclStructure::identity(lat.clone());
        let cca = operation_table(&s, AggregationOp::Cca);
        let meet = lattice_table(lat, LatticeOp::Meet);
        assert_eq!(cca.entries(), meet.entries());
    }

    #[test]
    fn worked_example_laws() {
        let s = worked_example();
        let flags = check_aggregation_laws(&s);
        assert!(flags.holds("Ccomm"));
        assert!(flags.holds("Acomm"));
        // recorded, not assumed; every witness must re-fail
        let casso = flags.get("Casso").unwrap();
        for w in &casso.witnesses {
            let d = |a, b| aggregate(&s, AggregationOp::Cca, a, b);
            let (a, b, e) = (w.indices[0], w.indices[1], w.indices[2]);
            assert_ne!(d(a, d(b, e)), d(d(a, b), e));
        }
    }

    #[test]
    fn norm_classes() {
        let lat = Arc::new(seven_element_example());
        let meet = lattice_table(lat.clone(), LatticeOp::Meet);
        let join = lattice_table(lat.clone(), LatticeOp::Join);
        assert_eq!(classify_norm(&meet, lat.top()).class, NormClass::TNorm);
        assert_eq!(classify_norm(&join, lat.bottom()).class, NormClass::SNorm);
        assert_eq!(classify_norm(&meet, lat.bottom()).class, NormClass::None);

        let s = worked_example();
        let oa = operation_table(&s, AggregationOp::Oa);
        let c = classify_norm(&oa, lat.bottom());
        assert_eq!(c.class, NormClass::None);
        assert!(c.failed.contains(&"identity".to_string()));
    }
}
