//! Derived negations `¬`, `~`, the four implication constructions, and
//! law batteries for negations, implications and Tarski algebras.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::aggregation::{aggregate, AggregationOp, OperationTable, TableKind};
use crate::approx::{RclStructure, Witness};
use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::lattice::{ElementSet, FiniteLattice};
use crate::laws::LawFlags;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NegationKind {
    /// `¬a = inf {z : a⊗z = ⊤}`
    Neg,
    /// `~a = sup {z : a·z = ⊥}`
    Sim,
}

impl NegationKind {
    pub fn symbol(self) -> &'static str {
        match self {
            NegationKind::Neg => "¬",
            NegationKind::Sim => "~",
        }
    }
}

/// A negation value with its defining set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegationValue {
    pub value: usize,
    pub defining_set: ElementSet,
    /// Whether the infimum (resp. supremum) belongs to the defining set.
    pub attained: bool,
}

pub fn negation_detail(s: &RclStructure, kind: NegationKind, a: usize) -> NegationValue {
    let l = s.lattice();
    let defining_set = match kind {
        NegationKind::Neg => BitSet::from_indices(
            s.len(),
            (0..s.len()).filter(|&z| aggregate(s, AggregationOp::Oa, a, z) == l.top()),
        ),
        NegationKind::Sim => BitSet::from_indices(
            s.len(),
            (0..s.len()).filter(|&z| aggregate(s, AggregationOp::Cca, a, z) == l.bottom()),
        ),
    };
    let (inf, sup) = l.subset_extrema(&defining_set);
    let value = match kind {
        NegationKind::Neg => inf,
        NegationKind::Sim => sup,
    };
    NegationValue {
        value,
        attained: defining_set.contains(value),
        defining_set,
    }
}

pub fn negation(s: &RclStructure, kind: NegationKind, a: usize) -> usize {
    negation_detail(s, kind, a).value
}

pub fn negation_table(s: &RclStructure, kind: NegationKind) -> Vec<usize> {
    (0..s.len()).map(|a| negation(s, kind, a)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UnaryKind {
    Neg,
    Sim,
    Custom(String),
}

impl UnaryKind {
    pub fn symbol(&self) -> &str {
        match self {
            UnaryKind::Neg => "¬",
            UnaryKind::Sim => "~",
            UnaryKind::Custom(name) => name,
        }
    }
}

/// A total unary map on a lattice carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnaryTable {
    lattice: Arc<FiniteLattice>,
    kind: UnaryKind,
    entries: Vec<usize>,
    attained: Option<Vec<bool>>,
}

impl UnaryTable {
    pub fn derived(s: &RclStructure, kind: NegationKind) -> Self {
        let details: Vec<NegationValue> = (0..s.len()).map(|a| negation_detail(s, kind, a)).collect();
        UnaryTable {
            lattice: s.lattice_arc().clone(),
            kind: match kind {
                NegationKind::Neg => UnaryKind::Neg,
                NegationKind::Sim => UnaryKind::Sim,
            },
            entries: details.iter().map(|d| d.value).collect(),
            attained: Some(details.iter().map(|d| d.attained).collect()),
        }
    }

    pub fn custom(lattice: Arc<FiniteLattice>, name: &str, entries: Vec<usize>) -> Result<Self> {
        if entries.len() != lattice.len() || entries.iter().any(|&v| v >= lattice.len()) {
            return Err(Error::PartialTable {
                table: name.to_string(),
                element: "(unary table)".into(),
            });
        }
        Ok(UnaryTable {
            lattice,
            kind: UnaryKind::Custom(name.to_string()),
            entries,
            attained: None,
        })
    }

    pub fn get(&self, a: usize) -> usize {
        self.entries[a]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn kind(&self) -> &UnaryKind {
        &self.kind
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    /// Attainment flags, present for derived negations.
    pub fn attained(&self) -> Option<&[bool]> {
        self.attained.as_deref()
    }

    pub fn names(&self) -> Vec<String> {
        self.entries.iter().map(|&v| self.lattice.name(v).to_string()).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ImplicationKind {
    /// `(¬a)⊗b`
    Neg,
    /// `(¬a)∨b`
    O,
    /// `(~a)·b`
    Sim,
    /// `(~a)∧b`
    S,
}

impl ImplicationKind {
    pub const ALL: [ImplicationKind; 4] = [
        ImplicationKind::Neg,
        ImplicationKind::O,
        ImplicationKind::Sim,
        ImplicationKind::S,
    ];

    pub fn table_kind(self) -> TableKind {
        match self {
            ImplicationKind::Neg => TableKind::ImpNeg,
            ImplicationKind::O => TableKind::ImpO,
            ImplicationKind::Sim => TableKind::ImpSim,
            ImplicationKind::S => TableKind::ImpS,
        }
    }
}

pub fn implication(s: &RclStructure, kind: ImplicationKind, a: usize, b: usize) -> usize {
    let l = s.lattice();
    match kind {
        ImplicationKind::Neg => aggregate(s, AggregationOp::Oa, negation(s, NegationKind::Neg, a), b),
        ImplicationKind::O => l.join(negation(s, NegationKind::Neg, a), b),
        ImplicationKind::Sim => aggregate(s, AggregationOp::Cca, negation(s, NegationKind::Sim, a), b),
        ImplicationKind::S => l.meet(negation(s, NegationKind::Sim, a), b),
    }
}

pub fn implication_table(s: &RclStructure, kind: ImplicationKind) -> OperationTable {
    let neg = negation_table(s, NegationKind::Neg);
    let sim = negation_table(s, NegationKind::Sim);
    let l = s.lattice();
    OperationTable::from_fn(s.lattice_arc().clone(), kind.table_kind(), |a, b| match kind {
        ImplicationKind::Neg => aggregate(s, AggregationOp::Oa, neg[a], b),
        ImplicationKind::O => l.join(neg[a], b),
        ImplicationKind::Sim => aggregate(s, AggregationOp::Cca, sim[a], b),
        ImplicationKind::S => l.meet(sim[a], b),
    })
}

/// `⊨_⊤`: `⊥` at `(⊤, ⊥)`, `⊤` elsewhere.
pub fn top_implication(lattice: Arc<FiniteLattice>) -> OperationTable {
    let (bot, top) = (lattice.bottom(), lattice.top());
    OperationTable::from_fn(
        lattice,
        TableKind::ImpTop,
        move |a, b| {
            if a == top && b == bot {
                bot
            } else {
                top
            }
        },
    )
}

/// `⊨_⊥`: `⊤` at `(⊥, ⊤)`, `⊥` elsewhere.
pub fn bottom_implication(lattice: Arc<FiniteLattice>) -> OperationTable {
    let (bot, top) = (lattice.bottom(), lattice.top());
    OperationTable::from_fn(lattice, TableKind::ImpBottom, move |a, b| {
        if a == bot && b == top {
            top
        } else {
            bot
        }
    })
}

/// Laws whose conjunction makes a binary operation an implication.
pub const IMPLICATION_CORE: [&str; 5] = ["FPA", "SPM", "BC1", "BC2", "BC3"];

/// FPA, SPM, BC1–BC3, LNP, EP, OP, IBL, CB, IP and the converse of CB.
pub fn check_implication_laws(t: &OperationTable) -> LawFlags {
    let l = t.lattice();
    let i = |a, b| t.get(a, b);
    let (bot, top) = (l.bottom(), l.top());
    let mut f = LawFlags::default();
    f.check(l, "FPA", "a ≤ b → b⊨c ≤ a⊨c", 3, |x| {
        !l.leq(x[0], x[1]) || l.leq(i(x[1], x[2]), i(x[0], x[2]))
    });
    f.check(l, "SPM", "b ≤ c → a⊨b ≤ a⊨c", 3, |x| {
        !l.leq(x[1], x[2]) || l.leq(i(x[0], x[1]), i(x[0], x[2]))
    });
    f.check(l, "BC1", "⊥⊨⊥ = ⊤", 0, |_| i(bot, bot) == top);
    f.check(l, "BC2", "⊤⊨⊤ = ⊤", 0, |_| i(top, top) == top);
    f.check(l, "BC3", "⊤⊨⊥ = ⊥", 0, |_| i(top, bot) == bot);
    f.check(l, "LNP", "⊤⊨x = x", 1, |x| i(top, x[0]) == x[0]);
    f.check(l, "EP", "a⊨(b⊨c) = b⊨(a⊨c)", 3, |x| {
        i(x[0], i(x[1], x[2])) == i(x[1], i(x[0], x[2]))
    });
    f.check(l, "OP", "a⊨b = ⊤ iff a ≤ b", 2, |x| {
        (i(x[0], x[1]) == top) == l.leq(x[0], x[1])
    });
    f.check(l, "IBL", "a⊨(a⊨b) = a⊨b", 2, |x| {
        i(x[0], i(x[0], x[1])) == i(x[0], x[1])
    });
    f.check(l, "CB", "b ≤ a⊨b", 2, |x| l.leq(x[1], i(x[0], x[1])));
    f.check(l, "IP", "a⊨a = ⊤", 1, |x| i(x[0], x[0]) == top);
    f.check(l, "converse-CB", "a⊨b ≤ b", 2, |x| l.leq(i(x[0], x[1]), x[1]));
    f
}

pub fn is_implication(flags: &LawFlags) -> bool {
    IMPLICATION_CORE.iter().all(|law| flags.holds(law))
}

/// N1–N4 against the bare lattice, and the weak variants using `l`/`u`.
pub fn check_negation_laws(s: &RclStructure, t: &UnaryTable) -> LawFlags {
    let l = s.lattice();
    let n = |a| t.get(a);
    let (bot, top) = (l.bottom(), l.top());
    let is_bound = |x| x == bot || x == top;
    let mut f = LawFlags::default();
    f.check(l, "N1", "n(⊥) = ⊤ & n(⊤) = ⊥", 0, |_| {
        n(bot) == top && n(top) == bot
    });
    f.check(l, "N2", "a ≤ b → n(b) ≤ n(a)", 2, |x| {
        !l.leq(x[0], x[1]) || l.leq(n(x[1]), n(x[0]))
    });
    f.check(l, "N3", "n(n(a)) = a", 1, |x| n(n(x[0])) == x[0]);
    f.check(l, "N4", "n(a) ∈ {⊥,⊤} iff a ∈ {⊥,⊤}", 1, |x| {
        is_bound(n(x[0])) == is_bound(x[0])
    });
    f.check(l, "WN1-N", "n(⊥) ≤ ⊤ & n(⊤) = ⊥", 0, |_| {
        l.leq(n(bot), top) && n(top) == bot
    });
    f.check(l, "WN2-N", "a ≤ b → n(b) ≤ n(b)^u ≤ n(a)^u", 2, |x| {
        !l.leq(x[0], x[1]) || (l.leq(n(x[1]), s.upper(n(x[1]))) && l.leq(s.upper(n(x[1])), s.upper(n(x[0]))))
    });
    f.check(l, "WN3-N", "n(n(a)) ≤ a^u", 1, |x| l.leq(n(n(x[0])), s.upper(x[0])));
    f.check(l, "WN2-S", "a ≤ b → n(b)^l ≤ n(a)^l ≤ n(a)", 2, |x| {
        !l.leq(x[0], x[1]) || (l.leq(s.lower(n(x[1])), s.lower(n(x[0]))) && l.leq(s.lower(n(x[0])), n(x[0])))
    });
    f.check(l, "WN3-S", "⊥ ≤ n(⊤) & n(⊥) = ⊤", 0, |_| {
        l.leq(bot, n(top)) && n(bot) == top
    });
    f.notes
        .push("WN1-N is read as n(⊥) ≤ ⊤ & n(⊤) = ⊥ (the second conjunct is the negation of ⊤)".into());
    f
}

/// Tarski-algebra check and, when it succeeds, the induced join.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TarskiReport {
    pub flags: LawFlags,
    /// `a ∨ b = (a⊨b)⊨b`, present when all four laws hold.
    pub induced_join: Option<OperationTable>,
    /// `a ≤ b iff a⊨b = ⊤`, present when all four laws hold.
    pub induced_order: Option<Vec<Vec<bool>>>,
}

impl TarskiReport {
    pub fn is_tarski(&self) -> bool {
        self.flags.all_pass()
    }
}

/// LNP, IP, T3, T4 for a binary table with distinguished `top`.
pub fn check_tarski(t: &OperationTable, top: usize) -> TarskiReport {
    let l = t.lattice();
    let i = |a, b| t.get(a, b);
    let mut f = LawFlags::default();
    f.check(l, "LNP", "⊤⊨a = a", 1, |x| i(top, x[0]) == x[0]);
    f.check(l, "IP", "a⊨a = ⊤", 1, |x| i(x[0], x[0]) == top);
    f.check(l, "T3", "a⊨(b⊨c) = (a⊨b)⊨(a⊨c)", 3, |x| {
        i(x[0], i(x[1], x[2])) == i(i(x[0], x[1]), i(x[0], x[2]))
    });
    f.check(l, "T4", "(a⊨b)⊨b = (b⊨a)⊨a", 2, |x| {
        i(i(x[0], x[1]), x[1]) == i(i(x[1], x[0]), x[0])
    });
    let ok = f.all_pass();
    let n = l.len();
    TarskiReport {
        induced_join: ok.then(|| {
            OperationTable::from_fn(t.lattice_arc().clone(), TableKind::Custom("∨⊨".into()), |a, b| {
                i(i(a, b), b)
            })
        }),
        induced_order: ok.then(|| (0..n).map(|a| (0..n).map(|b| i(a, b) == top).collect()).collect()),
        flags: f,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ImplicationOrder {
    Equal,
    /// first ⪯ second, strictly somewhere
    FirstBelow,
    /// second ⪯ first, strictly somewhere
    SecondBelow,
    Incomparable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImplicationComparison {
    pub order: ImplicationOrder,
    /// Pairs demonstrating strictness or incomparability.
    pub witnesses: Vec<Witness>,
}

/// Pointwise comparison of two binary tables over the same lattice.
pub fn compare_implications(t1: &OperationTable, t2: &OperationTable) -> Result<ImplicationComparison> {
    if !t1.same_host(t2) {
        return Err(Error::HostMismatch);
    }
    let l = t1.lattice();
    let n = l.len();
    let pairs = || (0..n).flat_map(|a| (0..n).map(move |b| (a, b)));
    let not_below = |x: &OperationTable, y: &OperationTable| pairs().find(|&(a, b)| !l.leq(x.get(a, b), y.get(a, b)));
    let w = |(a, b): (usize, usize)| Witness::new(l, &[a, b]);
    let first_over = not_below(t1, t2);
    let second_over = not_below(t2, t1);
    Ok(match (first_over, second_over) {
        (None, None) => ImplicationComparison {
            order: ImplicationOrder::Equal,
            witnesses: vec![],
        },
        (None, Some(p)) => ImplicationComparison {
            order: ImplicationOrder::FirstBelow,
            witnesses: vec![w(p)],
        },
        (Some(p), None) => ImplicationComparison {
            order: ImplicationOrder::SecondBelow,
            witnesses: vec![w(p)],
        },
        (Some(p), Some(q)) => ImplicationComparison {
            order: ImplicationOrder::Incomparable,
            witnesses: vec![w(p), w(q)],
        },
    })
}
