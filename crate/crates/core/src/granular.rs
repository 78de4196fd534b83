//! Set-based structures over a finite universe with a granulation:
//! information-table ingestion, classical approximations, granular axioms
//! and rough dependence degrees.

use std::collections::HashMap;
use std::io::Read;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::approx::RclStructure;
use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::lattice::{FiniteLattice, MAX_EXPLICIT_ELEMENTS};

/// Largest universe for which the powerset is materialized as an explicit lattice.
pub const MAX_MATERIALIZED_UNIVERSE: usize = 12;
/// Largest universe for checks that enumerate every subset.
pub const MAX_ENUMERATED_UNIVERSE: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    items: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        let items: Vec<String> = items.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, it) in items.iter().enumerate() {
            if index.insert(it.clone(), i).is_some() {
                return Err(Error::DuplicateItem(it.clone()));
            }
        }
        Ok(Universe { items, index })
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[String] {
        &self.items
    }

    pub fn position(&self, item: &str) -> Option<usize> {
        self.index.get(item).copied()
    }

    pub fn empty(&self) -> BitSet {
        BitSet::new(self.len())
    }

    pub fn full(&self) -> BitSet {
        BitSet::full(self.len())
    }

    pub fn subset<S: AsRef<str>>(&self, items: &[S]) -> Result<BitSet> {
        let mut s = self.empty();
        for it in items {
            let i = self
                .position(it.as_ref())
                .ok_or_else(|| Error::GranuleOutOfUniverse(it.as_ref().to_string()))?;
            s.insert(i);
        }
        Ok(s)
    }

    /// Renders a subset as `{a,b}`, items in universe order; `{}` when empty.
    pub fn literal(&self, s: &BitSet) -> String {
        let parts: Vec<&str> = s.iter().map(|i| self.items[i].as_str()).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Parses `{a, b}`; `{}` and `∅` denote the empty set.
    pub fn parse_literal(&self, text: &str) -> Result<BitSet> {
        let t = text.trim();
        if t == "∅" {
            return Ok(self.empty());
        }
        let inner = t
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| Error::BadSubsetLiteral(text.to_string()))?;
        let mut s = self.empty();
        for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let i = self
                .position(part)
                .ok_or_else(|| Error::BadSubsetLiteral(text.to_string()))?;
            s.insert(i);
        }
        Ok(s)
    }
}

/// A family of subsets of the universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Granulation {
    granules: Vec<BitSet>,
}

impl Granulation {
    pub fn new(granules: Vec<BitSet>) -> Self {
        Granulation { granules }
    }

    pub fn granules(&self) -> &[BitSet] {
        &self.granules
    }

    /// The singleton granulation `{{x} : x ∈ U}`.
    pub fn singletons(universe: &Universe) -> Self {
        Granulation::new(
            (0..universe.len())
                .map(|i| BitSet::from_indices(universe.len(), [i]))
                .collect(),
        )
    }

    /// `None` when the non-empty granules are pairwise disjoint and cover
    /// the universe; otherwise a description of the defect.
    pub fn partition_defect(&self, universe_len: usize) -> Option<String> {
        let mut seen = BitSet::new(universe_len);
        for (i, g) in self.granules.iter().enumerate() {
            if g.is_empty() {
                return Some(format!("granule {i} is empty"));
            }
            if seen.intersects(g) {
                return Some(format!("granule {i} overlaps an earlier granule"));
            }
            seen.union_with(g);
        }
        (seen.count() != universe_len).then(|| "granules do not cover the universe".to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum LatticeMode {
    /// Carrier is the whole powerset, handled with bit operations.
    #[default]
    Powerset,
    /// Carrier is `∅`, `U` and all unions of granules.
    Definable,
}

/// Which elements count as definite for dependence degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DefiniteSelector {
    LowerDefinite,
    Definite,
    Custom(Vec<BitSet>),
}

/// How the dependence degrees pick an element from the definite family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum DependenceReading {
    /// Greatest definite element inside the common union, least one containing it.
    #[default]
    Extremal,
    /// Intersection of the definite elements inside, union of those containing.
    Literal,
}

/// A set-based approximation structure with granulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetRcl {
    universe: Universe,
    granulation: Granulation,
    mode: LatticeMode,
    nu: DefiniteSelector,
    is_partition: bool,
}

/// Validates granules against the universe and installs the evaluators.
/// With `require_partition`, non-partitions are rejected.
pub fn build_set_rcl(
    universe: Universe,
    granulation: Granulation,
    mode: LatticeMode,
    require_partition: bool,
) -> Result<SetRcl> {
    if granulation.granules().is_empty() {
        return Err(Error::EmptyGranulation);
    }
    for g in granulation.granules() {
        if g.capacity() != universe.len() {
            return Err(Error::GranuleOutOfUniverse(format!("{g:?}")));
        }
    }
    let defect = granulation.partition_defect(universe.len());
    if require_partition {
        if let Some(d) = defect.clone() {
            return Err(Error::NonPartition(d));
        }
    }
    Ok(SetRcl {
        is_partition: defect.is_none(),
        universe,
        granulation,
        mode,
        nu: DefiniteSelector::LowerDefinite,
    })
}

impl SetRcl {
    pub fn with_nu(mut self, nu: DefiniteSelector) -> Self {
        self.nu = nu;
        self
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn granulation(&self) -> &Granulation {
        &self.granulation
    }

    pub fn mode(&self) -> LatticeMode {
        self.mode
    }

    pub fn nu(&self) -> &DefiniteSelector {
        &self.nu
    }

    pub fn is_partition(&self) -> bool {
        self.is_partition
    }

    /// Union of the granules contained in `x`.
    pub fn lower(&self, x: &BitSet) -> BitSet {
        let mut out = self.universe.empty();
        for g in self.granulation.granules() {
            if g.is_subset(x) {
                out.union_with(g);
            }
        }
        out
    }

    /// Union of the granules meeting `x`.
    pub fn upper(&self, x: &BitSet) -> BitSet {
        let mut out = self.universe.empty();
        for g in self.granulation.granules() {
            if g.intersects(x) {
                out.union_with(g);
            }
        }
        out
    }

    /// `x·z = x^l ∩ z^l` on the powerset carrier.
    pub fn cca(&self, x: &BitSet, z: &BitSet) -> BitSet {
        self.lower(x).intersection(&self.lower(z))
    }

    /// `x⊗z = x^u ∪ z^u` on the powerset carrier.
    pub fn oa(&self, x: &BitSet, z: &BitSet) -> BitSet {
        self.upper(x).union(&self.upper(z))
    }

    pub fn literal(&self, x: &BitSet) -> String {
        self.universe.literal(x)
    }

    fn require_enumerable(&self) -> Result<()> {
        if self.universe.len() > MAX_ENUMERATED_UNIVERSE {
            return Err(Error::UniverseTooLarge(self.universe.len(), MAX_ENUMERATED_UNIVERSE));
        }
        Ok(())
    }

    fn all_subsets(&self) -> impl Iterator<Item = BitSet> + '_ {
        let n = self.universe.len();
        (0..1u64 << n).map(move |m| BitSet::from_mask(n, m))
    }

    /// Carrier of the definable-mode lattice: `∅`, `U`, and unions of granules.
    pub fn definable_carrier(&self) -> Result<Vec<BitSet>> {
        let mut seen: std::collections::BTreeSet<BitSet> = std::collections::BTreeSet::new();
        seen.insert(self.universe.empty());
        seen.insert(self.universe.full());
        let mut frontier: Vec<BitSet> = seen.iter().cloned().collect();
        for g in self.granulation.granules() {
            if seen.insert(g.clone()) {
                frontier.push(g.clone());
            }
        }
        while let Some(x) = frontier.pop() {
            for g in self.granulation.granules() {
                let y = x.union(g);
                if seen.insert(y.clone()) {
                    if seen.len() > MAX_EXPLICIT_ELEMENTS {
                        return Err(Error::TooManyElements(seen.len(), MAX_EXPLICIT_ELEMENTS));
                    }
                    frontier.push(y);
                }
            }
        }
        // order by (cardinality, mask words) for stable naming
        let mut v: Vec<BitSet> = seen.into_iter().collect();
        v.sort_by_key(|s| (s.count(), s.iter().collect::<Vec<_>>()));
        Ok(v)
    }

    /// Materializes an explicit structure. Powerset mode needs
    /// `|U| ≤ 12`; element `i` of the lattice is the subset with mask `i`.
    pub fn materialize(&self) -> Result<MaterializedSetRcl> {
        match self.mode {
            LatticeMode::Powerset => {
                let n = self.universe.len();
                if n > MAX_MATERIALIZED_UNIVERSE {
                    return Err(Error::UniverseTooLarge(n, MAX_MATERIALIZED_UNIVERSE));
                }
                let subsets: Vec<BitSet> = (0..1u64 << n).map(|m| BitSet::from_mask(n, m)).collect();
                let names = subsets.iter().map(|s| self.literal(s)).collect();
                let lattice = Arc::new(FiniteLattice::powerset(names, n)?);
                let lower = subsets.iter().map(|s| self.lower(s).to_mask() as usize).collect();
                let upper = subsets.iter().map(|s| self.upper(s).to_mask() as usize).collect();
                Ok(MaterializedSetRcl {
                    structure: RclStructure::new(lattice, lower, upper)?,
                    subsets,
                })
            }
            LatticeMode::Definable => {
                let subsets = self.definable_carrier()?;
                let names: Vec<String> = subsets.iter().map(|s| self.literal(s)).collect();
                let mut pairs = Vec::new();
                for (i, a) in subsets.iter().enumerate() {
                    for (j, b) in subsets.iter().enumerate() {
                        if i != j && a.is_subset(b) {
                            pairs.push((names[i].clone(), names[j].clone()));
                        }
                    }
                }
                let lattice = Arc::new(FiniteLattice::build(&names, &pairs)?);
                let pos: HashMap<&BitSet, usize> = subsets.iter().enumerate().map(|(i, s)| (s, i)).collect();
                let image = |s: BitSet| -> Result<usize> {
                    pos.get(&s).copied().ok_or_else(|| Error::PartialTable {
                        table: "definable".into(),
                        element: self.literal(&s),
                    })
                };
                let lower = subsets
                    .iter()
                    .map(|s| image(self.lower(s)))
                    .collect::<Result<Vec<_>>>()?;
                let upper = subsets
                    .iter()
                    .map(|s| image(self.upper(s)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(MaterializedSetRcl {
                    structure: RclStructure::new(lattice, lower, upper)?,
                    subsets,
                })
            }
        }
    }

    fn is_nu(&self, x: &BitSet) -> bool {
        match &self.nu {
            DefiniteSelector::LowerDefinite => &self.lower(x) == x,
            DefiniteSelector::Definite => &self.lower(x) == x && &self.upper(x) == x,
            DefiniteSelector::Custom(list) => list.contains(x),
        }
    }

    fn nu_family(&self) -> Result<Vec<BitSet>> {
        match &self.nu {
            DefiniteSelector::Custom(list) => Ok(list.clone()),
            _ => {
                self.require_enumerable()?;
                Ok(self.all_subsets().filter(|x| self.is_nu(x)).collect())
            }
        }
    }

    /// Union of the granules contained in both `x` and `z`.
    pub fn common_granular_part(&self, x: &BitSet, z: &BitSet) -> BitSet {
        let mut y = self.universe.empty();
        for g in self.granulation.granules() {
            if g.is_subset(x) && g.is_subset(z) {
                y.union_with(g);
            }
        }
        y
    }

    pub fn rough_dependence(&self, x: &BitSet, z: &BitSet, reading: DependenceReading) -> Result<Dependence> {
        let y = self.common_granular_part(x, z);
        let family = self.nu_family()?;
        let inside: Vec<&BitSet> = family.iter().filter(|v| v.is_subset(&y)).collect();
        let around: Vec<&BitSet> = family.iter().filter(|v| y.is_subset(v)).collect();
        let union_of = |vs: &[&BitSet]| vs.iter().fold(self.universe.empty(), |acc, v| acc.union(v));
        let inter_of = |vs: &[&BitSet]| vs.iter().fold(self.universe.full(), |acc, v| acc.intersection(v));
        let (sup_inside, inf_around) = (union_of(&inside), inter_of(&around));
        let member = |v: &BitSet, vs: &[&BitSet]| vs.contains(&v);
        Ok(match reading {
            DependenceReading::Extremal => {
                let gi = member(&sup_inside, &inside);
                let ls = member(&inf_around, &around);
                Dependence {
                    reading,
                    common: y,
                    beta_i: gi.then_some(sup_inside),
                    beta_s: ls.then_some(inf_around),
                    attained_i: gi,
                    attained_s: ls,
                }
            }
            DependenceReading::Literal => {
                let bi = inter_of(&inside);
                let bs = union_of(&around);
                Dependence {
                    reading,
                    attained_i: member(&bi, &inside),
                    attained_s: member(&bs, &around),
                    common: y,
                    beta_i: Some(bi),
                    beta_s: Some(bs),
                }
            }
        })
    }

    pub fn to_descriptor(&self) -> SetRclDescriptor {
        let set = |s: &BitSet| s.iter().map(|i| self.universe.items[i].clone()).collect::<Vec<_>>();
        SetRclDescriptor {
            universe: self.universe.items.clone(),
            granules: self.granulation.granules().iter().map(set).collect(),
            mode: self.mode,
            nu: match &self.nu {
                DefiniteSelector::LowerDefinite => NuSpec::Named(NuName::LowerDefinite),
                DefiniteSelector::Definite => NuSpec::Named(NuName::Definite),
                DefiniteSelector::Custom(list) => NuSpec::Custom {
                    custom: list.iter().map(set).collect(),
                },
            },
            partition: None,
        }
    }

    pub fn from_descriptor(d: &SetRclDescriptor) -> Result<Self> {
        let universe = Universe::new(&d.universe)?;
        let granules = d
            .granules
            .iter()
            .map(|g| universe.subset(g))
            .collect::<Result<Vec<_>>>()?;
        let nu = match &d.nu {
            NuSpec::Named(NuName::LowerDefinite) => DefiniteSelector::LowerDefinite,
            NuSpec::Named(NuName::Definite) => DefiniteSelector::Definite,
            NuSpec::Custom { custom } => {
                DefiniteSelector::Custom(custom.iter().map(|g| universe.subset(g)).collect::<Result<Vec<_>>>()?)
            }
        };
        Ok(build_set_rcl(
            universe,
            Granulation::new(granules),
            d.mode,
            d.partition.unwrap_or(false),
        )?
        .with_nu(nu))
    }
}

/// An explicit structure together with the subset behind each element.
#[derive(Debug, Clone)]
pub struct MaterializedSetRcl {
    pub structure: RclStructure,
    pub subsets: Vec<BitSet>,
}

impl MaterializedSetRcl {
    pub fn element_of(&self, s: &BitSet) -> Option<usize> {
        self.subsets.iter().position(|x| x == s)
    }
}

/// Dependence degrees of `x` on `z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dependence {
    pub reading: DependenceReading,
    /// Union of the granules common to both arguments.
    pub common: BitSet,
    pub beta_i: Option<BitSet>,
    pub beta_s: Option<BitSet>,
    pub attained_i: bool,
    pub attained_s: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NuName {
    LowerDefinite,
    Definite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NuSpec {
    Named(NuName),
    Custom { custom: Vec<Vec<String>> },
}

impl Default for NuSpec {
    fn default() -> Self {
        NuSpec::Named(NuName::LowerDefinite)
    }
}

/// JSON descriptor of a set-based structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetRclDescriptor {
    pub universe: Vec<String>,
    pub granules: Vec<Vec<String>>,
    #[serde(default)]
    pub mode: LatticeMode,
    #[serde(default)]
    pub nu: NuSpec,
    /// Demand a partition granulation when set.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<bool>,
}

impl SetRclDescriptor {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("descriptor serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// One granular axiom outcome; witnesses are rendered subset literals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetLawResult {
    pub law: String,
    pub passed: bool,
    pub violations: usize,
    pub witnesses: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SgrclReport {
    pub wra: SetLawResult,
    pub ls: SetLawResult,
    pub fu: SetLawResult,
}

impl SgrclReport {
    pub fn all_pass(&self) -> bool {
        self.wra.passed && self.ls.passed && self.fu.passed
    }
}

struct Collector {
    law: &'static str,
    violations: usize,
    witnesses: Vec<Vec<String>>,
}

impl Collector {
    fn new(law: &'static str) -> Self {
        Collector {
            law,
            violations: 0,
            witnesses: Vec::new(),
        }
    }

    fn fail(&mut self, w: Vec<String>) {
        self.violations += 1;
        if self.witnesses.len() < crate::approx::MAX_WITNESSES {
            self.witnesses.push(w);
        }
    }

    fn finish(self) -> SetLawResult {
        SetLawResult {
            law: self.law.to_string(),
            passed: self.violations == 0,
            violations: self.violations,
            witnesses: self.witnesses,
        }
    }
}

/// WRA (approximations are unions of granules), LS (granules inside `x`
/// stay inside `x^l`) and FU (any two granules sit strictly inside a
/// definite set), each checked over every subset.
pub fn check_sgrcl_axioms(s: &SetRcl) -> Result<SgrclReport> {
    s.require_enumerable()?;
    let granules = s.granulation.granules();
    let is_granular_union = |y: &BitSet| &s.lower(y) == y;
    let mut wra = Collector::new("WRA");
    let mut ls = Collector::new("LS");
    let mut definite = Vec::new();
    for x in s.all_subsets() {
        let (lo, up) = (s.lower(&x), s.upper(&x));
        if !is_granular_union(&lo) || !is_granular_union(&up) {
            wra.fail(vec![s.literal(&x)]);
        }
        for g in granules {
            if g.is_subset(&x) && !g.is_subset(&lo) {
                ls.fail(vec![s.literal(g), s.literal(&x)]);
            }
        }
        if lo == x && up == x {
            definite.push(x);
        }
    }
    let mut fu = Collector::new("FU");
    for x in granules {
        for a in granules {
            let strictly_inside = |z: &BitSet| x.is_subset(z) && x != z && a.is_subset(z) && a != z;
            if !definite.iter().any(strictly_inside) {
                fu.fail(vec![s.literal(x), s.literal(a)]);
            }
        }
    }
    Ok(SgrclReport {
        wra: wra.finish(),
        ls: ls.finish(),
        fu: fu.finish(),
    })
}

/// A rectangular table of string values keyed by row identifiers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InformationTable {
    rows: Vec<String>,
    attributes: Vec<String>,
    values: Vec<Vec<String>>,
}

impl InformationTable {
    pub fn new(rows: Vec<String>, attributes: Vec<String>, values: Vec<Vec<String>>) -> Result<Self> {
        if values.len() != rows.len() {
            return Err(Error::MalformedTable(format!(
                "{} row ids for {} value rows",
                rows.len(),
                values.len()
            )));
        }
        if let Some((i, _)) = values.iter().enumerate().find(|(_, r)| r.len() != attributes.len()) {
            return Err(Error::MalformedTable(format!("row {} is not rectangular", i + 1)));
        }
        let mut seen = std::collections::HashSet::new();
        for a in &attributes {
            if !seen.insert(a) {
                return Err(Error::MalformedTable(format!("duplicate attribute `{a}`")));
            }
        }
        Universe::new(&rows)?;
        Ok(InformationTable {
            rows,
            attributes,
            values,
        })
    }

    /// Reads CSV with a header row. With `key`, that column names the rows
    /// and is not an attribute; otherwise rows are named `r1`, `r2`, ...
    pub fn from_csv<R: Read>(reader: R, key: Option<&str>) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(reader);
        let header: Vec<String> = rdr.headers()?.iter().map(|h| h.trim().to_string()).collect();
        let key_col = match key {
            Some(k) => Some(
                header
                    .iter()
                    .position(|h| h == k)
                    .ok_or_else(|| Error::UnknownAttribute(k.to_string()))?,
            ),
            None => None,
        };
        let attributes: Vec<String> = header
            .iter()
            .enumerate()
            .filter(|(i, _)| Some(*i) != key_col)
            .map(|(_, h)| h.clone())
            .collect();
        let mut rows = Vec::new();
        let mut values = Vec::new();
        for (n, rec) in rdr.records().enumerate() {
            let rec = rec?;
            let fields: Vec<String> = rec.iter().map(|f| f.trim().to_string()).collect();
            rows.push(match key_col {
                Some(k) => fields[k].clone(),
                None => format!("r{}", n + 1),
            });
            values.push(
                fields
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| Some(*i) != key_col)
                    .map(|(_, v)| v)
                    .collect(),
            );
        }
        Self::new(rows, attributes, values)
    }

    pub fn rows(&self) -> &[String] {
        &self.rows
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn universe(&self) -> Universe {
        Universe::new(&self.rows).expect("row ids are unique")
    }
}

/// Groups rows by equality on `attrs`; blocks appear in order of first row.
pub fn indiscernibility_partition<S: AsRef<str>>(t: &InformationTable, attrs: &[S]) -> Result<Granulation> {
    let cols = attrs
        .iter()
        .map(|a| {
            t.attributes
                .iter()
                .position(|x| x == a.as_ref())
                .ok_or_else(|| Error::UnknownAttribute(a.as_ref().to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    let n = t.rows.len();
    let mut block_of: HashMap<Vec<&str>, usize> = HashMap::new();
    let mut blocks: Vec<BitSet> = Vec::new();
    for (r, vals) in t.values.iter().enumerate() {
        let key: Vec<&str> = cols.iter().map(|&c| vals[c].as_str()).collect();
        let b = *block_of.entry(key).or_insert_with(|| {
            blocks.push(BitSet::new(n));
            blocks.len() - 1
        });
        blocks[b].insert(r);
    }
    Ok(Granulation::new(blocks))
}
