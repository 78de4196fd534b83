//! The claims registry: each claim is a statement checked per structure.

use serde_json::json;

use crate::aggregation::{check_cca_laws, check_oa_laws, operation_table, AggregationOp};
use crate::algebra::{non_concrete_model, search_alternatives, Signature, MAX_ALTERNATIVE_SIZE};
use crate::approx::{check_interval_representation, rough_order, scan_tuples, Axiom, RclStructure};
use crate::laws::LawFlags;
use crate::negation::{
    check_implication_laws, check_negation_laws, implication_table, negation_detail, negation_table, ImplicationKind,
    NegationKind, UnaryTable,
};
use crate::search::structures::AxiomSet;

use serde::{Deserialize, Serialize};

/// What the source literature asserts about a claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Assertion {
    /// Asserted to hold on every structure of the space.
    Holds,
    /// Asserted to fail on some structure.
    FailsInGeneral,
    /// Posed as an open question.
    Open,
}

/// First violation inside one structure.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub law: String,
    pub tuple: Vec<usize>,
    /// A complement map that is part of the witness.
    pub complement: Option<Vec<usize>>,
    pub extra: Option<serde_json::Value>,
    /// Whether some negation value involved in the violation is unattained.
    pub unattained: Option<bool>,
}

impl Violation {
    fn at(law: &str, tuple: Vec<usize>) -> Self {
        Violation {
            law: law.to_string(),
            tuple,
            complement: None,
            extra: None,
            unattained: None,
        }
    }
}

/// Outcome of a claim on one structure.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Eval {
    pub violations: usize,
    pub first: Option<Violation>,
    /// Violations at which some involved negation value is unattained.
    pub unattained_violations: usize,
    /// The structure has at least one unattained `¬` value.
    pub has_unattained: bool,
}

impl Eval {
    fn record(&mut self, v: Violation) {
        self.violations += 1;
        if v.unattained == Some(true) {
            self.unattained_violations += 1;
        }
        if self.first.is_none() {
            self.first = Some(v);
        }
    }
}

pub type ClaimCheck = fn(&RclStructure) -> Eval;

/// A registered claim.
pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    pub space: AxiomSet,
    pub assertion: Assertion,
    /// Some claims enumerate much larger spaces per structure and are
    /// searched on smaller lattices only.
    pub size_cap: Option<usize>,
    pub tracks_attainment: bool,
    pub check: ClaimCheck,
}

impl std::fmt::Debug for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Claim").field("id", &self.id).finish()
    }
}

fn axiom(s: &RclStructure, ax: Axiom) -> Eval {
    let (violations, witnesses) = scan_tuples(s.len(), ax.arity(), |t| ax.holds_at(s, t));
    Eval {
        violations,
        first: witnesses.into_iter().next().map(|w| Violation::at(ax.tag(), w)),
        ..Eval::default()
    }
}

fn battery(flags: &LawFlags, laws: &[&str]) -> Eval {
    let mut e = Eval::default();
    for law in laws {
        let r = flags.get(law).unwrap_or_else(|| panic!("law {law} not in battery"));
        e.violations += r.violations;
        if e.first.is_none() {
            e.first = r.witnesses.first().map(|w| Violation::at(law, w.indices.clone()));
        }
    }
    e
}

/// Scans one law while tracking whether the involved `¬` values are attained.
fn tracked(
    e: &mut Eval,
    n: usize,
    law: &str,
    arity: usize,
    mut holds: impl FnMut(&[usize]) -> bool,
    unattained: impl Fn(&[usize]) -> bool,
) {
    let mut bad = Vec::new();
    scan_tuples(n, arity, |t| {
        let ok = holds(t);
        if !ok {
            bad.push(t.to_vec());
        }
        ok
    });
    for t in bad {
        let u = unattained(&t);
        e.record(Violation {
            unattained: Some(u),
            ..Violation::at(law, t)
        });
    }
}

fn prop1_lu2eq(s: &RclStructure) -> Eval {
    axiom(s, Axiom::Lu2Eq)
}

fn prop1_lu3eq(s: &RclStructure) -> Eval {
    axiom(s, Axiom::Lu3Eq)
}

fn thm1_laws(s: &RclStructure) -> Eval {
    battery(
        &check_cca_laws(&operation_table(s, AggregationOp::Cca)),
        &["Ccomm", "Casso", "Cm", "Cb"],
    )
}

fn thm2_laws(s: &RclStructure) -> Eval {
    battery(
        &check_oa_laws(s, &operation_table(s, AggregationOp::Oa)),
        &["Acomm", "wAsso1", "wAsso2", "Am", "Ab"],
    )
}

fn neg_battery(s: &RclStructure, kind: NegationKind, laws: &[&str]) -> Eval {
    battery(&check_negation_laws(s, &UnaryTable::derived(s, kind)), laws)
}

fn wn1n(s: &RclStructure) -> Eval {
    neg_battery(s, NegationKind::Neg, &["WN1-N"])
}

fn wn2n(s: &RclStructure) -> Eval {
    neg_battery(s, NegationKind::Neg, &["WN2-N"])
}

fn wn_s(s: &RclStructure) -> Eval {
    neg_battery(s, NegationKind::Sim, &["WN2-S", "WN3-S"])
}

fn thm5_laws(s: &RclStructure) -> Eval {
    battery(
        &check_implication_laws(&implication_table(s, ImplicationKind::Sim)),
        &["FPA", "SPM", "BC3", "IBL", "converse-CB"],
    )
}

fn sim_bc_fail(s: &RclStructure) -> Eval {
    battery(
        &check_implication_laws(&implication_table(s, ImplicationKind::Sim)),
        &["BC1", "BC2", "IP"],
    )
}

struct NegContext {
    neg: Vec<usize>,
    attained: Vec<bool>,
}

impl NegContext {
    fn new(s: &RclStructure) -> Self {
        let details: Vec<_> = (0..s.len()).map(|a| negation_detail(s, NegationKind::Neg, a)).collect();
        NegContext {
            neg: details.iter().map(|d| d.value).collect(),
            attained: details.iter().map(|d| d.attained).collect(),
        }
    }

    fn eval(&self) -> Eval {
        Eval {
            has_unattained: self.attained.iter().any(|a| !a),
            ..Eval::default()
        }
    }
}

fn wn3n(s: &RclStructure) -> Eval {
    let c = NegContext::new(s);
    let l = s.lattice();
    let mut e = c.eval();
    tracked(
        &mut e,
        s.len(),
        "WN3-N",
        1,
        |t| l.leq(c.neg[c.neg[t[0]]], s.upper(t[0])),
        |t| !c.attained[t[0]] || !c.attained[c.neg[t[0]]],
    );
    e
}

#[derive(Clone, Copy, PartialEq)]
enum NegImplLaw {
    Fpa,
    Ip,
    Spm,
    Bc1,
    Bc2,
    Bc3,
}

fn negimpl(s: &RclStructure, laws: &[NegImplLaw]) -> Eval {
    let c = NegContext::new(s);
    let l = s.lattice();
    let (bot, top) = (l.bottom(), l.top());
    let imp = |a: usize, b: usize| l.join(s.upper(c.neg[a]), s.upper(b));
    let un = |a: usize| !c.attained[a];
    let n = s.len();
    let mut e = c.eval();
    for law in laws {
        match law {
            NegImplLaw::Fpa => tracked(
                &mut e,
                n,
                "FPA",
                3,
                |x| !l.leq(x[0], x[1]) || l.leq(imp(x[1], x[2]), imp(x[0], x[2])),
                |x| un(x[0]) || un(x[1]),
            ),
            NegImplLaw::Ip => tracked(&mut e, n, "IP", 1, |x| imp(x[0], x[0]) == top, |x| un(x[0])),
            NegImplLaw::Spm => tracked(
                &mut e,
                n,
                "SPM",
                3,
                |x| !l.leq(x[1], x[2]) || l.leq(imp(x[0], x[1]), imp(x[0], x[2])),
                |x| un(x[0]),
            ),
            NegImplLaw::Bc1 => tracked(&mut e, n, "BC1", 0, |_| imp(bot, bot) == top, |_| un(bot)),
            NegImplLaw::Bc2 => tracked(&mut e, n, "BC2", 0, |_| imp(top, top) == top, |_| un(top)),
            NegImplLaw::Bc3 => tracked(&mut e, n, "BC3", 0, |_| imp(top, bot) == bot, |_| un(top)),
        }
    }
    e
}

fn negimpl_laws(s: &RclStructure) -> Eval {
    use NegImplLaw::*;
    negimpl(s, &[Fpa, Ip, Spm, Bc1, Bc2, Bc3])
}

fn negimpl_bc1(s: &RclStructure) -> Eval {
    negimpl(s, &[NegImplLaw::Bc1])
}

fn negimpl_ip(s: &RclStructure) -> Eval {
    negimpl(s, &[NegImplLaw::Ip])
}

fn intervals(s: &RclStructure) -> Eval {
    let mut e = Eval::default();
    if let Some((x, reason)) = check_interval_representation(s) {
        e.record(Violation {
            extra: Some(json!({ "reason": reason })),
            ..Violation::at("interval", vec![x])
        });
    }
    e
}

fn describe_greatest(s: &RclStructure) -> serde_json::Value {
    let r = rough_order(s);
    let l = s.lattice();
    match r.greatest {
        Some(g) => {
            let o = &r.objects[g];
            json!({ "greatest": [l.name(o.lower_end.unwrap()), l.name(o.upper_end.unwrap())] })
        }
        None => json!({ "greatest": null }),
    }
}

fn rough_order_bounded(s: &RclStructure) -> Eval {
    let mut e = Eval::default();
    if !rough_order(s).is_bounded() {
        e.record(Violation {
            extra: Some(describe_greatest(s)),
            ..Violation::at("bounded", vec![])
        });
    }
    e
}

fn rough_order_top(s: &RclStructure) -> Eval {
    let mut e = Eval::default();
    if !rough_order(s).top_pair_is_greatest {
        e.record(Violation {
            extra: Some(describe_greatest(s)),
            ..Violation::at("top-pair-greatest", vec![])
        });
    }
    e
}

/// Complement maps with `x^c ∧ x = ⊥` and `x^cc ≤ x`, lexicographically.
pub fn weak_complements(s: &RclStructure) -> Vec<Vec<usize>> {
    let l = s.lattice();
    let n = s.len();
    let options: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&v| l.meet(v, x) == l.bottom()).collect())
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    if options.iter().any(|o| o.is_empty()) {
        return out;
    }
    loop {
        let c: Vec<usize> = (0..n).map(|x| options[x][idx[x]]).collect();
        if (0..n).all(|x| l.leq(c[c[x]], x)) {
            out.push(c);
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < options[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

fn wc_bound(s: &RclStructure) -> Eval {
    let l = s.lattice();
    let sim = negation_table(s, NegationKind::Sim);
    let mut e = Eval::default();
    for c in weak_complements(s) {
        for a in 0..s.len() {
            if !l.leq(sim[a], c[s.lower(a)]) {
                e.record(Violation {
                    complement: Some(c.clone()),
                    ..Violation::at("sim-below-lc", vec![a])
                });
            }
        }
    }
    e
}

fn representability(s: &RclStructure) -> Eval {
    let mut e = Eval::default();
    if s.len() > MAX_ALTERNATIVE_SIZE {
        return e;
    }
    for sig in [Signature::Negation, Signature::Implication] {
        let slots = search_alternatives(s, sig).expect("size checked");
        if slots.iter().any(|x| x.valid_tables == 0) {
            continue;
        }
        e.violations += slots.iter().map(|x| x.alternatives()).sum::<usize>();
        if e.first.is_none() {
            if let Some((alg, op)) = non_concrete_model(s, sig).expect("size checked") {
                let table = match op {
                    "·" => alg.cca.entries().to_vec(),
                    "⊗" => alg.oa.entries().to_vec(),
                    _ => match &alg.ops {
                        crate::algebra::SignatureOps::Negation { neg, sim } => {
                            if op == "¬" {
                                neg.entries().to_vec()
                            } else {
                                sim.entries().to_vec()
                            }
                        }
                        crate::algebra::SignatureOps::Implication { imp_neg, imp_sim } => {
                            if op == "⊨¬" {
                                imp_neg.entries().to_vec()
                            } else {
                                imp_sim.entries().to_vec()
                            }
                        }
                    },
                };
                let names: Vec<&str> = table.iter().map(|&v| s.lattice().name(v)).collect();
                e.first = Some(Violation {
                    extra: Some(json!({ "signature": sig, "operation": op, "table": names })),
                    ..Violation::at("non-concrete-model", vec![])
                });
            }
        }
    }
    e
}

pub static REGISTRY: &[Claim] = &[
    Claim {
        id: "prop1-lu2eq",
        statement: "lu1, l-mo, u-mo and topbot imply (a∨b)^u = a^u ∨ b^u",
        space: AxiomSet::Core,
        assertion: Assertion::Holds,
        size_cap: None,
        tracks_attainment: false,
        check: prop1_lu2eq,
    },
    Claim {
        id: "prop1-lu3eq",
        statement: "lu1, l-mo, u-mo and topbot imply (a∧b)^l = a^l ∧ b^l",
        space: AxiomSet::Core,
        assertion: Assertion::Holds,
        size_cap: None,
        tracks_attainment: false,
        check: prop1_lu3eq,
    },
    Claim {
        id: "thm1-laws",
        statement: "· satisfies Ccomm, Casso, Cm and Cb",
        space: AxiomSet::FullRcl,
        assertion: Assertion::Holds,
        size_cap: None,
        tracks_attainment: false,
        check: thm1_laws,
    },
    Claim {
        id: "thm2-laws",
        statement: "⊗ satisfies Acomm, wAsso1, wAsso2, Am and Ab",
        space: AxiomSet::FullRcl,
        assertion: Assertion::Holds,
        size_cap: None,
        tracks_attainment: false,
        check: thm2_laws,
    },
    Claim {
        id: "wn1n",
        statement: "¬ satisfies WN1-N",
        space: AxiomSet::FullRcl,
        assertion: Assertion::Holds,
        size_cap: None,
        tracks_attainment: false,
        check: wn1n,
    },
    Claim {
        id: "wn2n",
        statement: "¬ satisfies WN2-N",
        space: AxiomSet::FullRcl,
        assertion: Assertion::Holds,
        size_cap: None,
        tracks_attainment: false,
        check: wn2n,
    },
    Claim {
        id: "wn3n",
        statement: "¬¬a ≤ a^u",
        space: AxiomSet::FullRcl,
        assertion: Assertion::Holds,
        size_cap: None,
        tracks_attainment: true,
        check: wn3n,
    },
    Claim {
        id: "wn-s",
        statement: "~ satisfies WN2-S and WN3-S",
        space: AxiomSet::FullRcl,
        assertion: Assertion::Holds,
        size_cap: None,
        tracks_attainment: false,
        check: wn_s,
    },
    Claim {
        id: "thm5-laws",
        statement: "⊨~ satisfies FPA, SPM, BC3, IBL and the converse of CB",
        space: AxiomSet::FullRcl,
        assertion: Assertion::Holds,
        size_cap: None,
        tracks_attainment: false,
        check: thm5_laws,
    },
    Claim {
        id: "negimpl-laws",
        statement: "⊨¬ satisfies FPA, IP, SPM, BC1, BC2 and BC3",
        space: AxiomSet::FullRcl,
        assertion: Assertion::Holds,
        size_cap: None,
        tracks_attainment: true,
        check: negimpl_laws,
    },
    Claim {
        id: "negimpl-bc1",
        statement: "⊨¬ satisfies BC1",
        space: AxiomSet::FullRcl,
        assertion: Assertion::Holds,
        size_cap: None,
        tracks_attainment: true,
        check: negimpl_bc1,
    },
    Claim {
        id: "negimpl-ip",
        statement: "⊨¬ satisfies IP",
        space: AxiomSet::FullRcl,
        assertion: Assertion::Holds,
        size_cap: None,
        tracks_attainment: true,
        check: negimpl_ip,
    },
    Claim {
        id: "sim-bc-fail",
        statement: "⊨~ satisfies BC1, BC2 and IP (asserted to fail in general)",
        space: AxiomSet::FullRcl,
        assertion: Assertion::FailsInGeneral,
        size_cap: None,
        tracks_attainment: false,
        check: sim_bc_fail,
    },
    Claim {
        id: "intervals",
        statement: "rough objects are exactly the maximal (x^l, x^u) classes and lie in [x^l, x^u]",
        space: AxiomSet::FullRcl,
        assertion: Assertion::Holds,
        size_cap: None,
        tracks_attainment: false,
        check: intervals,
    },
    Claim {
        id: "rough-order-bounded",
        statement: "the rough order has (⊥,⊥) as least element and a greatest element",
        space: AxiomSet::FullRcl,
        assertion: Assertion::Holds,
        size_cap: None,
        tracks_attainment: false,
        check: rough_order_bounded,
    },
    Claim {
        id: "rough-order-top",
        statement: "(⊤,⊤) is a rough object and the greatest one",
        space: AxiomSet::FullRcl,
        assertion: Assertion::Holds,
        size_cap: None,
        tracks_attainment: false,
        check: rough_order_top,
    },
    Claim {
        id: "wc-bound",
        statement: "for every c with x^cc ≤ x and x^c ∧ x = ⊥: ~a ≤ a^{lc}",
        space: AxiomSet::FullRcl,
        assertion: Assertion::Holds,
        size_cap: None,
        tracks_attainment: false,
        check: wc_bound,
    },
    Claim {
        id: "representability",
        statement:
            "every model of the abstract negation or implication signature coincides with its derived operations",
        space: AxiomSet::FullRcl,
        assertion: Assertion::Open,
        size_cap: Some(MAX_ALTERNATIVE_SIZE),
        tracks_attainment: false,
        check: representability,
    },
];

/// Case-insensitive lookup.
pub fn find_claim(id: &str) -> Option<&'static Claim> {
    REGISTRY.iter().find(|c| c.id.eq_ignore_ascii_case(id))
}
