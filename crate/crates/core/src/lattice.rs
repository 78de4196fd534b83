//! Finite bounded lattices with materialized order, meet and join tables.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::error::{Error, Result};

/// Largest carrier accepted for an explicit (tabulated) lattice.
pub const MAX_EXPLICIT_ELEMENTS: usize = 4096;

/// A subset of a lattice carrier, indexed by element position.
pub type ElementSet = BitSet;

/// Which binary lattice operation to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LatticeOp {
    Meet,
    Join,
}

/// How two elements relate in the lattice order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderRelation {
    Equal,
    Less,
    Greater,
    Incomparable,
}

/// ASCII spellings accepted wherever the symbolic bounds are expected.
const ALIASES: [(&str, &str); 2] = [("bot", "⊥"), ("top", "⊤")];

/// Maps an ASCII alias to its symbolic form (and leaves other names alone).
pub fn normalize_alias(name: &str) -> &str {
    for (ascii, sym) in ALIASES {
        if name == ascii {
            return sym;
        }
    }
    name
}

fn alternate_spelling(name: &str) -> Option<&'static str> {
    ALIASES.iter().find_map(|&(ascii, sym)| {
        if name == ascii {
            Some(sym)
        } else if name == sym {
            Some(ascii)
        } else {
            None
        }
    })
}

/// A finite bounded lattice. Elements are addressed by their position in
/// the declared element list; names are kept for I/O.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    names: Vec<String>,
    index: HashMap<String, usize>,
    /// `up[x]` is the principal filter of `x`.
    up: Vec<BitSet>,
    /// `down[x]` is the principal ideal of `x`.
    down: Vec<BitSet>,
    meet: Vec<u16>,
    join: Vec<u16>,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    /// Builds a lattice from element names and arbitrary `x ≤ y` pairs.
    /// The reflexive-transitive closure is taken internally.
    pub fn build<S: AsRef<str>>(elements: &[S], order_pairs: &[(S, S)]) -> Result<Self> {
        let names: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
        let n = names.len();
        if n == 0 {
            return Err(Error::EmptyLattice);
        }
        if n > MAX_EXPLICIT_ELEMENTS {
            return Err(Error::TooManyElements(n, MAX_EXPLICIT_ELEMENTS));
        }
        let index = index_names(&names)?;
        let lookup = |name: &str| -> Result<usize> {
            index
                .get(name)
                .or_else(|| alternate_spelling(name).and_then(|alt| index.get(alt)))
                .copied()
                .ok_or_else(|| Error::UnknownElement(name.to_string()))
        };

        let mut up: Vec<BitSet> = (0..n).map(|i| BitSet::from_indices(n, [i])).collect();
        for (x, y) in order_pairs {
            let (x, y) = (lookup(x.as_ref())?, lookup(y.as_ref())?);
            up[x].insert(y);
        }
        // Warshall closure on rows.
        for k in 0..n {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        for i in 0..n {
            for j in up[i].iter() {
                if j > i && up[j].contains(i) {
                    return Err(Error::CycleDetected(names[i].clone(), names[j].clone()));
                }
            }
        }
        Self::from_order(names, index, up)
    }

    /// Builds the lattice from a closed order given as principal filters.
    fn from_order(names: Vec<String>, index: HashMap<String, usize>, up: Vec<BitSet>) -> Result<Self> {
        let n = names.len();
        let mut down: Vec<BitSet> = vec![BitSet::new(n); n];
        for (x, row) in up.iter().enumerate() {
            for y in row.iter() {
                down[y].insert(x);
            }
        }
        let bottom = (0..n).find(|&x| up[x].count() == n).ok_or(Error::NoBound("bottom"))?;
        let top = (0..n).find(|&x| down[x].count() == n).ok_or(Error::NoBound("top"))?;

        let mut meet = vec![0u16; n * n];
        let mut join = vec![0u16; n * n];
        for a in 0..n {
            for b in a..n {
                let lower = down[a].intersection(&down[b]);
                // In a finite poset the greatest lower bound, if any, is the
                // lower bound with the largest principal ideal.
                let glb = lower
                    .iter()
                    .max_by_key(|&z| down[z].count())
                    .filter(|&z| down[z] == lower)
                    .ok_or_else(|| Error::NoMeet(names[a].clone(), names[b].clone()))?;
                let upper = up[a].intersection(&up[b]);
                let lub = upper
                    .iter()
                    .max_by_key(|&z| up[z].count())
                    .filter(|&z| up[z] == upper)
                    .ok_or_else(|| Error::NoJoin(names[a].clone(), names[b].clone()))?;
                meet[a * n + b] = glb as u16;
                meet[b * n + a] = glb as u16;
                join[a * n + b] = lub as u16;
                join[b * n + a] = lub as u16;
            }
        }
        Ok(FiniteLattice {
            names,
            index,
            up,
            down,
            meet,
            join,
            bottom,
            top,
        })
    }

    /// The powerset lattice of a `bits`-element set; element `i` is the
    /// subset whose bit mask is `i`. Tables come from bit operations.
    pub fn powerset(names: Vec<String>, bits: usize) -> Result<Self> {
        let n = 1usize << bits;
        if n > MAX_EXPLICIT_ELEMENTS {
            return Err(Error::TooManyElements(n, MAX_EXPLICIT_ELEMENTS));
        }
        assert_eq!(names.len(), n, "one name per subset");
        let index = index_names(&names)?;
        let up: Vec<BitSet> = (0..n)
            .map(|x| BitSet::from_indices(n, (0..n).filter(|&y| x & y == x)))
            .collect();
        let down: Vec<BitSet> = (0..n)
            .map(|y| BitSet::from_indices(n, (0..n).filter(|&x| x & y == x)))
            .collect();
        let mut meet = vec![0u16; n * n];
        let mut join = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                meet[a * n + b] = (a & b) as u16;
                join[a * n + b] = (a | b) as u16;
            }
        }
        Ok(FiniteLattice {
            names,
            index,
            up,
            down,
            meet,
            join,
            bottom: 0,
            top: n - 1,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    /// Resolves an element name, accepting `bot`/`top` for `⊥`/`⊤` and vice versa.
    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .or_else(|| alternate_spelling(name).and_then(|alt| self.index.get(alt)))
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn compare(&self, a: usize, b: usize) -> OrderRelation {
        match (self.leq(a, b), self.leq(b, a)) {
            (true, true) => OrderRelation::Equal,
            (true, false) => OrderRelation::Less,
            (false, true) => OrderRelation::Greater,
            (false, false) => OrderRelation::Incomparable,
        }
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b] as usize
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b] as usize
    }

    pub fn op(&self, which: LatticeOp, a: usize, b: usize) -> usize {
        match which {
            LatticeOp::Meet => self.meet(a, b),
            LatticeOp::Join => self.join(a, b),
        }
    }

    /// Name-level meet/join with `UnknownElement` on bad input.
    pub fn op_by_name(&self, which: LatticeOp, a: &str, b: &str) -> Result<&str> {
        let (a, b) = (self.index_of(a)?, self.index_of(b)?);
        Ok(self.name(self.op(which, a, b)))
    }

    /// Infimum and supremum of a subset; `(⊤, ⊥)` for the empty set.
    pub fn subset_extrema(&self, s: &ElementSet) -> (usize, usize) {
        let inf = s.iter().fold(self.top, |acc, x| self.meet(acc, x));
        let sup = s.iter().fold(self.bottom, |acc, x| self.join(acc, x));
        (inf, sup)
    }

    pub fn infimum(&self, s: impl IntoIterator<Item = usize>) -> usize {
        s.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn supremum(&self, s: impl IntoIterator<Item = usize>) -> usize {
        s.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// The upward closure `{x : a ≤ x}`.
    pub fn principal_filter(&self, a: usize) -> ElementSet {
        self.up[a].clone()
    }

    pub fn principal_ideal(&self, a: usize) -> ElementSet {
        self.down[a].clone()
    }

    pub fn empty_set(&self) -> ElementSet {
        BitSet::new(self.len())
    }

    /// Cover pairs `(x, y)` with `x ⋖ y`, ordered by `(x, y)` index.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in self.up[x].iter() {
                if y != x && self.up[x].intersection(&self.down[y]).count() == 2 {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Relabels the lattice so that old element `perm[i]` becomes new element `i`.
    pub fn permuted(&self, perm: &[usize], names: Vec<String>) -> Result<Self> {
        let n = self.len();
        assert_eq!(perm.len(), n);
        let mut inverse = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            inverse[old] = new;
        }
        let up = perm
            .iter()
            .map(|&old| BitSet::from_indices(n, self.up[old].iter().map(|y| inverse[y])))
            .collect();
        let index = index_names(&names)?;
        Self::from_order(names, index, up)
    }

    /// The file representation: declared elements and sorted cover pairs.
    pub fn to_file(&self) -> LatticeFile {
        LatticeFile {
            elements: self.names.clone(),
            order: self
                .covers()
                .into_iter()
                .map(|(x, y)| [self.names[x].clone(), self.names[y].clone()])
                .collect(),
            covers_only: Some(true),
        }
    }

    pub fn from_file(file: &LatticeFile) -> Result<Self> {
        let pairs: Vec<(&str, &str)> = file.order.iter().map(|[x, y]| (x.as_str(), y.as_str())).collect();
        let elements: Vec<&str> = file.elements.iter().map(String::as_str).collect();
        let lattice = Self::build(&elements, &pairs)?;
        if file.covers_only == Some(true) {
            let covers = lattice.covers();
            for (x, y) in &pairs {
                let pair = (lattice.index_of(x)?, lattice.index_of(y)?);
                if !covers.contains(&pair) {
                    return Err(Error::NotACover(x.to_string(), y.to_string()));
                }
            }
        }
        Ok(lattice)
    }
}

fn index_names(names: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.clone(), i).is_some() {
            return Err(Error::DuplicateElement(name.clone()));
        }
    }
    Ok(index)
}

/// JSON lattice file: `{ "elements": [...], "order": [[x, y], ...], "covers_only": bool }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeFile {
    pub elements: Vec<String>,
    pub order: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub covers_only: Option<bool>,
}

impl LatticeFile {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("lattice file serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// The Figure-style seven element lattice used throughout the examples:
/// `⊥ < c, f`; `c < a, e`; `f < b, e`; `a, b, e < ⊤`.
pub fn seven_element_example() -> FiniteLattice {
    let elements = ["⊥", "⊤", "a", "b", "c", "e", "f"];
    let covers = [
        ("c", "a"),
        ("f", "b"),
        ("c", "e"),
        ("f", "e"),
        ("a", "⊤"),
        ("b", "⊤"),
        ("e", "⊤"),
        ("⊥", "c"),
        ("⊥", "f"),
    ];
    FiniteLattice::build(&elements, &covers).expect("example lattice is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(l: &FiniteLattice, n: &str) -> usize {
        l.index_of(n).unwrap()
    }

    #[test]
    fn two_chain() {
        let l = FiniteLattice::build(&["⊥", "⊤"], &[("⊥", "⊤")]).unwrap();
        assert_eq!(l.meet(0, 1), 0);
        assert_eq!(l.join(0, 1), 1);
        assert_eq!((l.bottom(), l.top()), (0, 1));
    }

    #[test]
    fn seven_element_meets_and_joins() {
        let l = seven_element_example();
        assert_eq!(l.op_by_name(LatticeOp::Meet, "a", "b").unwrap(), "⊥");
        assert_eq!(l.op_by_name(LatticeOp::Join, "c", "f").unwrap(), "e");
        assert_eq!(l.op_by_name(LatticeOp::Meet, "e", "e").unwrap(), "e");
        assert_eq!(l.op_by_name(LatticeOp::Meet, "bot", "top").unwrap(), "⊥");
        assert!(matches!(
            l.op_by_name(LatticeOp::Join, "a", "zz"),
            Err(Error::UnknownElement(_))
        ));
    }

    #[test]
    fn pentagon_like_lattice_from_covers() {
        let l = FiniteLattice::build(
            &["⊥", "x", "y", "j", "⊤"],
            &[("⊥", "x"), ("⊥", "y"), ("x", "j"), ("y", "j"), ("j", "⊤")],
        )
        .unwrap();
        // brute-force glb/lub over all pairs
        for a in 0..l.len() {
            for b in 0..l.len() {
                let lbs: Vec<usize> = (0..l.len()).filter(|&z| l.leq(z, a) && l.leq(z, b)).collect();
                let glb: Vec<usize> = lbs
                    .iter()
                    .copied()
                    .filter(|&g| lbs.iter().all(|&z| l.leq(z, g)))
                    .collect();
                assert_eq!(glb, vec![l.meet(a, b)]);
                let ubs: Vec<usize> = (0..l.len()).filter(|&z| l.leq(a, z) && l.leq(b, z)).collect();
                let lub: Vec<usize> = ubs
                    .iter()
                    .copied()
                    .filter(|&g| ubs.iter().all(|&z| l.leq(g, z)))
                    .collect();
                assert_eq!(lub, vec![l.join(a, b)]);
            }
        }
        assert_eq!(l.name(l.join(idx(&l, "x"), idx(&l, "y"))), "j");
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            FiniteLattice::build(&["a", "b"], &[("a", "b"), ("b", "a")]),
            Err(Error::CycleDetected(..))
        ));
        assert!(matches!(FiniteLattice::build(&["a", "b"], &[]), Err(Error::NoBound(_))));
        // two maximal elements under a common top-less bottom
        assert!(matches!(
            FiniteLattice::build(&["⊥", "x", "y"], &[("⊥", "x"), ("⊥", "y")]),
            Err(Error::NoBound("top"))
        ));
        // x, y both below p and q: no least upper bound
        let bad = FiniteLattice::build(
            &["⊥", "x", "y", "p", "q", "⊤"],
            &[
                ("⊥", "x"),
                ("⊥", "y"),
                ("x", "p"),
                ("y", "p"),
                ("x", "q"),
                ("y", "q"),
                ("p", "⊤"),
                ("q", "⊤"),
            ],
        );
        assert!(matches!(bad, Err(Error::NoJoin(..))));
        assert!(matches!(
            FiniteLattice::build(&["a", "a"], &[]),
            Err(Error::DuplicateElement(_))
        ));
        assert!(matches!(
            FiniteLattice::build(&["a"], &[("a", "b")]),
            Err(Error::UnknownElement(_))
        ));
    }

    #[test]
    fn extrema_and_filters() {
        let l = seven_element_example();
        assert_eq!(l.subset_extrema(&l.empty_set()), (l.top(), l.bottom()));
        let s = BitSet::from_indices(l.len(), ["⊤", "b", "c", "e", "f"].map(|n| idx(&l, n)));
        assert_eq!(l.name(l.subset_extrema(&s).0), "⊥");
        let s = BitSet::from_indices(l.len(), ["⊥", "f", "b"].map(|n| idx(&l, n)));
        assert_eq!(l.name(l.subset_extrema(&s).1), "b");

        let top_filter = l.principal_filter(l.top());
        assert_eq!(top_filter.iter().collect::<Vec<_>>(), vec![l.top()]);
        let e = l.principal_filter(idx(&l, "e"));
        assert_eq!(e.count(), 2);
        assert!(e.contains(l.top()) && e.contains(idx(&l, "e")));
    }

    #[test]
    fn powerset_filter_counts() {
        let names = (0..8).map(|i| format!("s{i}")).collect();
        let l = FiniteLattice::powerset(names, 3).unwrap();
        assert_eq!(l.principal_filter(0b001).count(), 4);
        for x in 0..8usize {
            let supersets = (0..8usize).filter(|y| x & y == x).count();
            assert_eq!(l.principal_filter(x).count(), supersets);
        }
    }

    #[test]
    fn covers_only_rejects_non_covers() {
        let file = LatticeFile {
            elements: vec!["⊥".into(), "m".into(), "⊤".into()],
            order: vec![
                ["⊥".into(), "m".into()],
                ["m".into(), "⊤".into()],
                ["⊥".into(), "⊤".into()],
            ],
            covers_only: Some(true),
        };
        assert!(matches!(FiniteLattice::from_file(&file), Err(Error::NotACover(..))));
        let relaxed = LatticeFile {
            covers_only: None,
            ..file
        };
        assert_eq!(FiniteLattice::from_file(&relaxed).unwrap().len(), 3);
    }

    #[test]
    fn file_round_trip_is_byte_exact() {
        let l = seven_element_example();
        let text = l.to_file().to_json();
        let back = FiniteLattice::from_file(&LatticeFile::from_json(&text).unwrap()).unwrap();
        assert_eq!(back, l);
        assert_eq!(back.to_file().to_json(), text);
    }
}
