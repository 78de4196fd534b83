//! Enumeration of bounded lattices on a fixed number of elements.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

/// Largest lattice size the enumerators accept.
pub const MAX_SEARCH_SIZE: usize = 7;

/// Order relation on at most 8 elements; bit `a*n + b` means `a ≤ b`.
type Relation = u64;

fn bit(n: usize, a: usize, b: usize) -> Relation {
    1 << (a * n + b)
}

fn leq(r: Relation, n: usize, a: usize, b: usize) -> bool {
    r & bit(n, a, b) != 0
}

/// Element names: `⊥`, `⊤`, then `x1`, `x2`, ... for the middle elements.
pub fn search_names(n: usize) -> Vec<String> {
    match n {
        1 => vec!["⊥".into()],
        _ => ["⊥".to_string(), "⊤".to_string()]
            .into_iter()
            .chain((1..n - 1).map(|i| format!("x{i}")))
            .collect(),
    }
}

/// Relations where every middle order `i < j` respects `i < j` as labels.
/// Every poset has such a labelling, so this covers all isomorphism classes.
fn naturally_labelled(n: usize) -> Vec<Relation> {
    if n == 1 {
        return vec![bit(1, 0, 0)];
    }
    let middle: Vec<usize> = (2..n).collect();
    let pairs: Vec<(usize, usize)> = middle
        .iter()
        .flat_map(|&i| middle.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
        .collect();
    let mut base: Relation = 0;
    for a in 0..n {
        base |= bit(n, a, a) | bit(n, 0, a) | bit(n, a, 1);
    }
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let mut r = base;
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                r |= bit(n, i, j);
            }
        }
        let transitive = middle.iter().all(|&a| {
            middle
                .iter()
                .all(|&b| !leq(r, n, a, b) || middle.iter().all(|&c| !leq(r, n, b, c) || leq(r, n, a, c)))
        });
        if transitive && has_joins(r, n) {
            out.push(r);
        }
    }
    out
}

/// Every pair has a least upper bound; with a top element this makes a lattice.
fn has_joins(r: Relation, n: usize) -> bool {
    let up = |a: usize| (0..n).filter(|&b| leq(r, n, a, b)).fold(0u16, |m, b| m | 1 << b);
    let ups: Vec<u16> = (0..n).map(up).collect();
    (0..n).all(|a| {
        (a + 1..n).all(|b| {
            let common = ups[a] & ups[b];
            (0..n).any(|c| common >> c & 1 == 1 && ups[c] == common)
        })
    })
}

fn permute(r: Relation, n: usize, perm: &[usize]) -> Relation {
    let mut out = 0;
    for a in 0..n {
        for b in 0..n {
            if leq(r, n, a, b) {
                out |= bit(n, perm[a], perm[b]);
            }
        }
    }
    out
}

/// All permutations of `0..n` fixing `0` and `1` (the bounds), in
/// lexicographic order.
fn middle_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    if n <= 2 {
        return vec![perm];
    }
    loop {
        out.push(perm.clone());
        // next permutation on perm[2..]
        let tail = &mut perm[2..];
        let Some(i) = (0..tail.len().saturating_sub(1)).rev().find(|&i| tail[i] < tail[i + 1]) else {
            return out;
        };
        let j = (i + 1..tail.len()).rev().find(|&j| tail[j] > tail[i]).unwrap();
        tail.swap(i, j);
        tail[i + 1..].reverse();
    }
}

/// Smallest relabelled relation over all permutations of the middle elements.
fn canonical(r: Relation, n: usize, perms: &[Vec<usize>]) -> Relation {
    perms.iter().map(|p| permute(r, n, p)).min().unwrap_or(r)
}

fn to_lattice(r: Relation, n: usize) -> Result<FiniteLattice> {
    let names = search_names(n);
    let pairs: Vec<(String, String)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b && leq(r, n, a, b))
        .map(|(a, b)| (names[a].clone(), names[b].clone()))
        .collect();
    FiniteLattice::build(&names, &pairs)
}

fn relations(n: usize, up_to_iso: bool) -> Result<Vec<Relation>> {
    if n == 0 || n > MAX_SEARCH_SIZE {
        return Err(Error::BoundExceeded(n, MAX_SEARCH_SIZE));
    }
    let perms = middle_permutations(n);
    let natural = naturally_labelled(n);
    let set: BTreeSet<Relation> = if up_to_iso {
        natural.iter().map(|&r| canonical(r, n, &perms)).collect()
    } else {
        natural
            .iter()
            .flat_map(|&r| perms.iter().map(move |p| permute(r, n, p)))
            .collect()
    };
    Ok(set.into_iter().collect())
}

/// All bounded lattices on `n` elements with `⊥` at index 0 and `⊤` at
/// index 1. With `up_to_iso`, one canonical representative per class;
/// otherwise every labelling of the middle elements. Output order is fixed.
pub fn enumerate_lattices(n: usize, up_to_iso: bool) -> Result<Vec<FiniteLattice>> {
    relations(n, up_to_iso)?.into_iter().map(|r| to_lattice(r, n)).collect()
}

/// Number of lattices without materializing them.
pub fn count_lattices(n: usize, up_to_iso: bool) -> Result<usize> {
    Ok(relations(n, up_to_iso)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iso_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| count_lattices(n, true).unwrap()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 5, 15]);
    }

    #[test]
    fn labelled_counts_by_hand() {
        // n=4: two labelled chains and the diamond
        let counts: Vec<usize> = (1..=4).map(|n| count_lattices(n, false).unwrap()).collect();
        assert_eq!(counts, [1, 1, 1, 3]);
    }

    #[test]
    fn bounds() {
        assert_eq!(count_lattices(0, true), Err(Error::BoundExceeded(0, MAX_SEARCH_SIZE)));
        assert_eq!(count_lattices(8, true), Err(Error::BoundExceeded(8, MAX_SEARCH_SIZE)));
    }

    #[test]
    fn representatives_are_lattices_with_fixed_bounds() {
        for n in 1..=5 {
            for l in enumerate_lattices(n, true).unwrap() {
                assert_eq!(l.bottom(), 0);
                assert_eq!(l.top(), if n == 1 { 0 } else { 1 });
                assert_eq!(l.names(), search_names(n));
            }
        }
    }

    #[test]
    fn permutation_order() {
        let p = middle_permutations(5);
        assert_eq!(p.len(), 6);
        assert_eq!(p[0], [0, 1, 2, 3, 4]);
        assert_eq!(p[5], [0, 1, 4, 3, 2]);
    }
}
