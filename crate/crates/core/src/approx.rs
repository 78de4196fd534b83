//! Lower/upper approximation pairs on a finite lattice: axiom diagnostics,
//! definite elements, rough objects and the rough order.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::lattice::{ElementSet, FiniteLattice, LatticeFile, OrderRelation};

/// Upper bound on the number of witnesses kept per failing check.
pub const MAX_WITNESSES: usize = 16;

/// A concrete tuple of elements at which a law fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub names: Vec<String>,
}

impl Witness {
    pub fn new(lattice: &FiniteLattice, indices: &[usize]) -> Self {
        Witness {
            indices: indices.to_vec(),
            names: indices.iter().map(|&i| lattice.name(i).to_string()).collect(),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.names.len() == 1 {
            write!(f, "{}", self.names[0])
        } else {
            write!(f, "({})", self.names.join(","))
        }
    }
}

/// Runs `holds` over every `arity`-tuple of `0..n` in lexicographic order
/// and returns the violation count together with the first witnesses.
pub(crate) fn scan_tuples(n: usize, arity: usize, mut holds: impl FnMut(&[usize]) -> bool) -> (usize, Vec<Vec<usize>>) {
    let mut violations = 0;
    let mut witnesses = Vec::new();
    let mut tuple = vec![0usize; arity];
    if n == 0 && arity > 0 {
        return (0, witnesses);
    }
    loop {
        if !holds(&tuple) {
            violations += 1;
            if witnesses.len() < MAX_WITNESSES {
                witnesses.push(tuple.clone());
            }
        }
        // odometer increment, last position fastest
        let mut pos = arity;
        loop {
            if pos == 0 {
                return (violations, witnesses);
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < n {
                break;
            }
            tuple[pos] = 0;
        }
    }
}

/// The individually reported approximation axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axiom {
    #[serde(rename = "lu1-idempotence")]
    Lu1Idempotence,
    #[serde(rename = "lu1-sandwich")]
    Lu1Sandwich,
    #[serde(rename = "lu1-uu")]
    Lu1Uu,
    #[serde(rename = "l-mo")]
    LMo,
    #[serde(rename = "u-mo")]
    UMo,
    #[serde(rename = "lu2-ineq")]
    Lu2Ineq,
    #[serde(rename = "lu2-eq")]
    Lu2Eq,
    #[serde(rename = "lu3-eq")]
    Lu3Eq,
    #[serde(rename = "lu3-ineq")]
    Lu3Ineq,
    #[serde(rename = "topbot")]
    TopBot,
}

impl Axiom {
    pub const ALL: [Axiom; 10] = [
        Axiom::Lu1Idempotence,
        Axiom::Lu1Sandwich,
        Axiom::Lu1Uu,
        Axiom::LMo,
        Axiom::UMo,
        Axiom::Lu2Ineq,
        Axiom::Lu2Eq,
        Axiom::Lu3Eq,
        Axiom::Lu3Ineq,
        Axiom::TopBot,
    ];

    /// Axioms making up the "core" fragment (lu1, monotonicity, topbot).
    pub const CORE: [Axiom; 6] = [
        Axiom::Lu1Idempotence,
        Axiom::Lu1Sandwich,
        Axiom::Lu1Uu,
        Axiom::LMo,
        Axiom::UMo,
        Axiom::TopBot,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Axiom::Lu1Idempotence => "lu1-idempotence",
            Axiom::Lu1Sandwich => "lu1-sandwich",
            Axiom::Lu1Uu => "lu1-uu",
            Axiom::LMo => "l-mo",
            Axiom::UMo => "u-mo",
            Axiom::Lu2Ineq => "lu2-ineq",
            Axiom::Lu2Eq => "lu2-eq",
            Axiom::Lu3Eq => "lu3-eq",
            Axiom::Lu3Ineq => "lu3-ineq",
            Axiom::TopBot => "topbot",
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            Axiom::Lu1Idempotence => "x^ll = x^l",
            Axiom::Lu1Sandwich => "x^l ≤ x ≤ x^u",
            Axiom::Lu1Uu => "x^u ≤ x^uu",
            Axiom::LMo => "a ≤ b → a^l ≤ b^l",
            Axiom::UMo => "a ≤ b → a^u ≤ b^u",
            Axiom::Lu2Ineq => "a^l ∨ b^l ≤ (a∨b)^l",
            Axiom::Lu2Eq => "a^u ∨ b^u = (a∨b)^u",
            Axiom::Lu3Eq => "(a∧b)^l = a^l ∧ b^l",
            Axiom::Lu3Ineq => "(a∧b)^u ≤ a^u ∧ b^u",
            Axiom::TopBot => "⊤^u = ⊤, ⊥^l = ⊥ = ⊥^u",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Axiom::Lu1Idempotence | Axiom::Lu1Sandwich | Axiom::Lu1Uu | Axiom::TopBot => 1,
            _ => 2,
        }
    }

    /// Evaluates the axiom at one tuple. `topbot` is evaluated per element
    /// and only constrains `⊥` and `⊤`.
    pub fn holds_at(self, s: &RclStructure, t: &[usize]) -> bool {
        let l = s.lattice();
        let lo = |x| s.lower(x);
        let up = |x| s.upper(x);
        match self {
            Axiom::Lu1Idempotence => lo(lo(t[0])) == lo(t[0]),
            Axiom::Lu1Sandwich => l.leq(lo(t[0]), t[0]) && l.leq(t[0], up(t[0])),
            Axiom::Lu1Uu => l.leq(up(t[0]), up(up(t[0]))),
            Axiom::LMo => !l.leq(t[0], t[1]) || l.leq(lo(t[0]), lo(t[1])),
            Axiom::UMo => !l.leq(t[0], t[1]) || l.leq(up(t[0]), up(t[1])),
            Axiom::Lu2Ineq => l.leq(l.join(lo(t[0]), lo(t[1])), lo(l.join(t[0], t[1]))),
            Axiom::Lu2Eq => l.join(up(t[0]), up(t[1])) == up(l.join(t[0], t[1])),
            Axiom::Lu3Eq => lo(l.meet(t[0], t[1])) == l.meet(lo(t[0]), lo(t[1])),
            Axiom::Lu3Ineq => l.leq(up(l.meet(t[0], t[1])), l.meet(up(t[0]), up(t[1]))),
            Axiom::TopBot => {
                let x = t[0];
                (x != l.top() || up(x) == l.top()) && (x != l.bottom() || (lo(x) == l.bottom() && up(x) == l.bottom()))
            }
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomStatus {
    pub axiom: Axiom,
    pub formula: String,
    pub passed: bool,
    pub violations: usize,
    pub witnesses: Vec<Witness>,
}

/// Outcome of checking every approximation axiom exhaustively.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub statuses: Vec<AxiomStatus>,
    pub is_core: bool,
    pub is_rcl: bool,
}

impl AxiomReport {
    pub fn status(&self, axiom: Axiom) -> &AxiomStatus {
        self.statuses
            .iter()
            .find(|s| s.axiom == axiom)
            .expect("every axiom is reported")
    }

    pub fn passes(&self, axiom: Axiom) -> bool {
        self.status(axiom).passed
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomStatus> {
        self.statuses.iter().filter(|s| !s.passed)
    }
}

/// A finite lattice with total lower and upper approximation tables and an
/// optional complement table.
#[derive(Debug, Clone)]
pub struct RclStructure {
    lattice: Arc<FiniteLattice>,
    lower: Vec<usize>,
    upper: Vec<usize>,
    complement: Option<Vec<usize>>,
    report: OnceLock<AxiomReport>,
}

impl PartialEq for RclStructure {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.lattice, &other.lattice) || self.lattice == other.lattice)
            && self.lower == other.lower
            && self.upper == other.upper
            && self.complement == other.complement
    }
}

impl Eq for RclStructure {}

fn check_table(lattice: &FiniteLattice, table: &[usize], label: &str) -> Result<()> {
    let n = lattice.len();
    if table.len() != n {
        let element = lattice.name(table.len().min(n.saturating_sub(1))).to_string();
        return Err(Error::PartialTable {
            table: label.to_string(),
            element,
        });
    }
    if let Some(bad) = table.iter().position(|&v| v >= n) {
        return Err(Error::PartialTable {
            table: label.to_string(),
            element: lattice.name(bad).to_string(),
        });
    }
    Ok(())
}

impl RclStructure {
    pub fn new(lattice: Arc<FiniteLattice>, lower: Vec<usize>, upper: Vec<usize>) -> Result<Self> {
        check_table(&lattice, &lower, "lower")?;
        check_table(&lattice, &upper, "upper")?;
        Ok(RclStructure {
            lattice,
            lower,
            upper,
            complement: None,
            report: OnceLock::new(),
        })
    }

    /// Identity approximations `l = u = id`.
    pub fn identity(lattice: Arc<FiniteLattice>) -> Self {
        let id: Vec<usize> = (0..lattice.len()).collect();
        Self::new(lattice, id.clone(), id).expect("identity tables are total")
    }

    pub fn with_complement(mut self, complement: Vec<usize>) -> Result<Self> {
        check_table(&self.lattice, &complement, "complement")?;
        self.complement = Some(complement);
        Ok(self)
    }

    /// Builds tables from `(element, image)` name pairs; every element must
    /// receive exactly one image.
    pub fn from_named_maps(
        lattice: Arc<FiniteLattice>,
        lower: &[(&str, &str)],
        upper: &[(&str, &str)],
    ) -> Result<Self> {
        let lower = named_table(&lattice, lower.iter().copied(), "lower")?;
        let upper = named_table(&lattice, upper.iter().copied(), "upper")?;
        Self::new(lattice, lower, upper)
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn lattice_arc(&self) -> &Arc<FiniteLattice> {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    pub fn lower(&self, x: usize) -> usize {
        self.lower[x]
    }

    pub fn upper(&self, x: usize) -> usize {
        self.upper[x]
    }

    pub fn lower_table(&self) -> &[usize] {
        &self.lower
    }

    pub fn upper_table(&self) -> &[usize] {
        &self.upper
    }

    pub fn complement(&self, x: usize) -> Option<usize> {
        self.complement.as_ref().map(|c| c[x])
    }

    pub fn complement_table(&self) -> Option<&[usize]> {
        self.complement.as_deref()
    }

    /// The cached axiom report.
    pub fn axiom_report(&self) -> &AxiomReport {
        self.report.get_or_init(|| check_rcl_axioms(self))
    }

    pub fn is_rcl(&self) -> bool {
        self.axiom_report().is_rcl
    }

    pub fn is_core(&self) -> bool {
        self.axiom_report().is_core
    }

    pub fn to_file(&self) -> StructureFile {
        let l = &self.lattice;
        let map = |t: &[usize]| -> IndexMap<String, String> {
            t.iter()
                .enumerate()
                .map(|(x, &y)| (l.name(x).to_string(), l.name(y).to_string()))
                .collect()
        };
        StructureFile {
            lattice: l.to_file(),
            lower: map(&self.lower),
            upper: map(&self.upper),
            complement: self.complement.as_deref().map(map),
        }
    }

    pub fn from_file(file: &StructureFile) -> Result<Self> {
        let lattice = Arc::new(FiniteLattice::from_file(&file.lattice)?);
        let pairs = |m: &IndexMap<String, String>| -> Vec<(String, String)> {
            m.iter().map(|(k, v)| (k.clone(), v.clone())).collect()
        };
        let lower = named_table(
            &lattice,
            pairs(&file.lower).iter().map(|(a, b)| (a.as_str(), b.as_str())),
            "lower",
        )?;
        let upper = named_table(
            &lattice,
            pairs(&file.upper).iter().map(|(a, b)| (a.as_str(), b.as_str())),
            "upper",
        )?;
        let s = Self::new(lattice, lower, upper)?;
        match &file.complement {
            Some(c) => {
                let c = named_table(
                    &s.lattice,
                    pairs(c).iter().map(|(a, b)| (a.as_str(), b.as_str())),
                    "complement",
                )?;
                s.with_complement(c)
            }
            None => Ok(s),
        }
    }
}

fn named_table<'a>(
    lattice: &FiniteLattice,
    pairs: impl Iterator<Item = (&'a str, &'a str)>,
    label: &str,
) -> Result<Vec<usize>> {
    let mut table = vec![usize::MAX; lattice.len()];
    for (from, to) in pairs {
        table[lattice.index_of(from)?] = lattice.index_of(to)?;
    }
    if let Some(missing) = table.iter().position(|&v| v == usize::MAX) {
        return Err(Error::PartialTable {
            table: label.to_string(),
            element: lattice.name(missing).to_string(),
        });
    }
    Ok(table)
}

/// JSON structure file: a lattice file plus `lower`, `upper` and optional
/// `complement` maps keyed by element name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureFile {
    #[serde(flatten)]
    pub lattice: LatticeFile,
    pub lower: IndexMap<String, String>,
    pub upper: IndexMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complement: Option<IndexMap<String, String>>,
}

impl StructureFile {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("structure file serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Evaluates every approximation axiom over all elements and pairs.
pub fn check_rcl_axioms(s: &RclStructure) -> AxiomReport {
    let n = s.len();
    let statuses: Vec<AxiomStatus> = Axiom::ALL
        .iter()
        .map(|&axiom| {
            let (violations, witnesses) = scan_tuples(n, axiom.arity(), |t| axiom.holds_at(s, t));
            AxiomStatus {
                axiom,
                formula: axiom.formula().to_string(),
                passed: violations == 0,
                violations,
                witnesses: witnesses.iter().map(|w| Witness::new(s.lattice(), w)).collect(),
            }
        })
        .collect();
    let passed = |a: Axiom| statuses.iter().any(|st| st.axiom == a && st.passed);
    let is_core = Axiom::CORE.iter().all(|&a| passed(a));
    let is_rcl = Axiom::ALL.iter().all(|&a| passed(a));
    AxiomReport {
        statuses,
        is_core,
        is_rcl,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DefiniteKind {
    Lower,
    Upper,
    Both,
}

/// Fixed points of `l`, of `u`, or of both.
pub fn definite_elements(s: &RclStructure, kind: DefiniteKind) -> ElementSet {
    BitSet::from_indices(
        s.len(),
        (0..s.len()).filter(|&x| match kind {
            DefiniteKind::Lower => s.lower(x) == x,
            DefiniteKind::Upper => s.upper(x) == x,
            DefiniteKind::Both => s.lower(x) == x && s.upper(x) == x,
        }),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RoughVariant {
    Both,
    Lower,
    Upper,
}

/// A maximal class of elements sharing their approximation signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoughObject {
    pub variant: RoughVariant,
    pub lower_end: Option<usize>,
    pub upper_end: Option<usize>,
    pub members: ElementSet,
}

impl RoughObject {
    pub fn interval(&self) -> (Option<usize>, Option<usize>) {
        (self.lower_end, self.upper_end)
    }
}

fn signature(s: &RclStructure, variant: RoughVariant, x: usize) -> (Option<usize>, Option<usize>) {
    match variant {
        RoughVariant::Both => (Some(s.lower(x)), Some(s.upper(x))),
        RoughVariant::Lower => (Some(s.lower(x)), None),
        RoughVariant::Upper => (None, Some(s.upper(x))),
    }
}

/// Partitions the carrier by approximation signature. Objects are listed in
/// order of their first member.
pub fn rough_objects(s: &RclStructure, variant: RoughVariant) -> Vec<RoughObject> {
    let mut slot: HashMap<(Option<usize>, Option<usize>), usize> = HashMap::new();
    let mut objects: Vec<RoughObject> = Vec::new();
    for x in 0..s.len() {
        let key = signature(s, variant, x);
        let i = *slot.entry(key).or_insert_with(|| {
            objects.push(RoughObject {
                variant,
                lower_end: key.0,
                upper_end: key.1,
                members: BitSet::new(s.len()),
            });
            objects.len() - 1
        });
        objects[i].members.insert(x);
    }
    objects
}

/// Independent check that the both-sided rough objects are exactly the
/// maximal `(x^l, x^u)` classes and that each class lies inside the order
/// interval `[x^l, x^u]`. Returns the first offending element and a reason.
pub fn check_interval_representation(s: &RclStructure) -> Option<(usize, String)> {
    let l = s.lattice();
    let objects = rough_objects(s, RoughVariant::Both);
    for x in 0..s.len() {
        let class: Vec<usize> = (0..s.len())
            .filter(|&y| s.lower(y) == s.lower(x) && s.upper(y) == s.upper(x))
            .collect();
        let holding: Vec<&RoughObject> = objects.iter().filter(|o| o.members.contains(x)).collect();
        if holding.len() != 1 {
            return Some((x, format!("element lies in {} rough objects", holding.len())));
        }
        let obj = holding[0];
        if obj.members.iter().collect::<Vec<_>>() != class {
            return Some((x, "rough object is not the maximal class of its signature".into()));
        }
        if obj.interval() != (Some(s.lower(x)), Some(s.upper(x))) {
            return Some((x, "reported interval differs from (x^l, x^u)".into()));
        }
        if !class.iter().all(|&y| l.leq(s.lower(x), y) && l.leq(y, s.upper(x))) {
            return Some((x, "class escapes the order interval [x^l, x^u]".into()));
        }
    }
    None
}

/// Existence facts about the rough order on both-sided rough objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoughOrderReport {
    pub objects: Vec<RoughObject>,
    /// `relation[i][j]` iff object `i` ⋐ object `j`.
    pub relation: Vec<Vec<bool>>,
    pub reflexive: bool,
    pub antisymmetric: bool,
    pub transitive: bool,
    pub least: Option<usize>,
    pub greatest: Option<usize>,
    /// `(⊥, ⊥)` is a rough object and is ⋐-least.
    pub bottom_pair_is_least: bool,
    /// `(⊤, ⊤)` is a rough object.
    pub top_pair_present: bool,
    /// `(⊤, ⊤)` is a rough object and is ⋐-greatest.
    pub top_pair_is_greatest: bool,
    pub missing_meets: Vec<(usize, usize)>,
    pub missing_joins: Vec<(usize, usize)>,
}

impl RoughOrderReport {
    /// Bounded with `(⊥,⊥)` least and some greatest object.
    pub fn is_bounded(&self) -> bool {
        self.bottom_pair_is_least && self.greatest.is_some()
    }
}

pub fn rough_order(s: &RclStructure) -> RoughOrderReport {
    let l = s.lattice();
    let objects = rough_objects(s, RoughVariant::Both);
    let k = objects.len();
    let ends = |o: &RoughObject| (o.lower_end.unwrap(), o.upper_end.unwrap());
    let below = |i: usize, j: usize| {
        let (il, iu) = ends(&objects[i]);
        let (jl, ju) = ends(&objects[j]);
        l.leq(il, jl) && l.leq(iu, ju)
    };
    let relation: Vec<Vec<bool>> = (0..k).map(|i| (0..k).map(|j| below(i, j)).collect()).collect();
    let reflexive = (0..k).all(|i| relation[i][i]);
    let antisymmetric = (0..k).all(|i| (0..k).all(|j| i == j || !(relation[i][j] && relation[j][i])));
    let transitive =
        (0..k).all(|i| (0..k).all(|j| !relation[i][j] || (0..k).all(|m| !relation[j][m] || relation[i][m])));
    let least = (0..k).find(|&i| (0..k).all(|j| relation[i][j]));
    let greatest = (0..k).find(|&i| (0..k).all(|j| relation[j][i]));
    let find_pair = |a: usize, b: usize| objects.iter().position(|o| ends(o) == (a, b));
    let bottom_pair = find_pair(l.bottom(), l.bottom());
    let top_pair = find_pair(l.top(), l.top());

    let mut missing_meets = Vec::new();
    let mut missing_joins = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let lower: Vec<usize> = (0..k).filter(|&m| relation[m][i] && relation[m][j]).collect();
            if !lower.iter().any(|&g| lower.iter().all(|&m| relation[m][g])) {
                missing_meets.push((i, j));
            }
            let upper: Vec<usize> = (0..k).filter(|&m| relation[i][m] && relation[j][m]).collect();
            if !upper.iter().any(|&g| upper.iter().all(|&m| relation[g][m])) {
                missing_joins.push((i, j));
            }
        }
    }
    RoughOrderReport {
        bottom_pair_is_least: bottom_pair.is_some() && bottom_pair == least,
        top_pair_present: top_pair.is_some(),
        top_pair_is_greatest: top_pair.is_some() && top_pair == greatest,
        objects,
        relation,
        reflexive,
        antisymmetric,
        transitive,
        least,
        greatest,
        missing_meets,
        missing_joins,
    }
}

/// Per-element evaluation of the weak complementation conditions and of the
/// relation between `~a` and `a^{lc}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakComplementReport {
    /// `x^cc ≤ x`
    pub c1: Vec<bool>,
    /// `x^c ∧ x = ⊥`
    pub c2: Vec<bool>,
    /// Relation of `~a` to `a^{lc}` for each `a`.
    pub sim_vs_lc: Vec<OrderRelation>,
}

impl WeakComplementReport {
    pub fn c1_holds(&self) -> bool {
        self.c1.iter().all(|&b| b)
    }

    pub fn c2_holds(&self) -> bool {
        self.c2.iter().all(|&b| b)
    }

    /// `~a ≤ a^{lc}` at every element.
    pub fn bound_holds(&self) -> bool {
        self.sim_vs_lc
            .iter()
            .all(|r| matches!(r, OrderRelation::Less | OrderRelation::Equal))
    }
}

pub fn check_weak_complementation(s: &RclStructure) -> Result<WeakComplementReport> {
    let c = s.complement_table().ok_or(Error::MissingComplement)?;
    let l = s.lattice();
    let n = s.len();
    let sim = crate::negation::negation_table(s, crate::negation::NegationKind::Sim);
    Ok(WeakComplementReport {
        c1: (0..n).map(|x| l.leq(c[c[x]], x)).collect(),
        c2: (0..n).map(|x| l.meet(c[x], x) == l.bottom()).collect(),
        sim_vs_lc: (0..n).map(|a| l.compare(sim[a], c[s.lower(a)])).collect(),
    })
}

/// The seven-element example lattice with the worked lower/upper maps.
pub fn worked_example() -> RclStructure {
    let lattice = Arc::new(crate::lattice::seven_element_example());
    RclStructure::from_named_maps(
        lattice,
        &[
            ("⊥", "⊥"),
            ("⊤", "e"),
            ("a", "c"),
            ("b", "b"),
            ("c", "c"),
            ("e", "c"),
            ("f", "⊥"),
        ],
        &[
            ("⊥", "⊥"),
            ("⊤", "⊤"),
            ("a", "a"),
            ("b", "⊤"),
            ("c", "e"),
            ("e", "e"),
            ("f", "b"),
        ],
    )
    .expect("worked example maps are total")
}
