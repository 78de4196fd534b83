//! Enumeration of approximation pairs on a fixed lattice.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::approx::RclStructure;
use crate::lattice::FiniteLattice;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AxiomSet {
    /// lu1, l-mo, u-mo, topbot.
    Core,
    /// Every approximation axiom.
    FullRcl,
}

/// Extends `map` position by position, trying values in index order, so
/// the output is lexicographic.
fn backtrack(
    l: &FiniteLattice,
    map: &mut Vec<usize>,
    allowed: &dyn Fn(usize, usize) -> bool,
    out: &mut Vec<Vec<usize>>,
    finish: &dyn Fn(&[usize]) -> bool,
) {
    let x = map.len();
    if x == l.len() {
        if finish(map) {
            out.push(map.clone());
        }
        return;
    }
    for v in 0..l.len() {
        if !allowed(x, v) {
            continue;
        }
        let monotone = (0..x).all(|y| (!l.leq(y, x) || l.leq(map[y], v)) && (!l.leq(x, y) || l.leq(v, map[y])));
        if monotone {
            map.push(v);
            backtrack(l, map, allowed, out, finish);
            map.pop();
        }
    }
}

/// Monotone, deflationary, idempotent maps; with `FullRcl` also meet-preserving.
pub fn lower_candidates(l: &FiniteLattice, set: AxiomSet) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let finish = |m: &[usize]| {
        (0..l.len()).all(|x| m[m[x]] == m[x])
            && (set == AxiomSet::Core
                || (0..l.len()).all(|a| (0..l.len()).all(|b| m[l.meet(a, b)] == l.meet(m[a], m[b]))))
    };
    backtrack(l, &mut Vec::new(), &|x, v| l.leq(v, x), &mut out, &finish);
    out
}

/// Monotone, extensive maps fixing `⊥`; with `FullRcl` also join-preserving.
pub fn upper_candidates(l: &FiniteLattice, set: AxiomSet) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let finish = |m: &[usize]| {
        set == AxiomSet::Core || (0..l.len()).all(|a| (0..l.len()).all(|b| m[l.join(a, b)] == l.join(m[a], m[b])))
    };
    let bottom = l.bottom();
    backtrack(
        l,
        &mut Vec::new(),
        &|x, v| l.leq(x, v) && (x != bottom || v == bottom),
        &mut out,
        &finish,
    );
    out
}

/// The structures on one lattice, indexed `(lower, upper)` lexicographically.
#[derive(Debug, Clone)]
pub struct StructureSpace {
    pub lattice: Arc<FiniteLattice>,
    pub lowers: Vec<Vec<usize>>,
    pub uppers: Vec<Vec<usize>>,
}

impl StructureSpace {
    pub fn new(lattice: Arc<FiniteLattice>, set: AxiomSet) -> Self {
        StructureSpace {
            lowers: lower_candidates(&lattice, set),
            uppers: upper_candidates(&lattice, set),
            lattice,
        }
    }

    pub fn len(&self) -> usize {
        self.lowers.len() * self.uppers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn structure(&self, li: usize, ui: usize) -> RclStructure {
        RclStructure::new(self.lattice.clone(), self.lowers[li].clone(), self.uppers[ui].clone())
            .expect("candidate maps are total")
    }

    pub fn iter(&self) -> impl Iterator<Item = RclStructure> + '_ {
        (0..self.lowers.len()).flat_map(move |li| (0..self.uppers.len()).map(move |ui| self.structure(li, ui)))
    }
}

/// Every pair satisfying the requested axioms, in lexicographic order.
pub fn enumerate_structures(lattice: Arc<FiniteLattice>, set: AxiomSet) -> Vec<RclStructure> {
    StructureSpace::new(lattice, set).iter().collect()
}
