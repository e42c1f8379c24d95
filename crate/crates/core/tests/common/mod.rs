//! A deliberately simple subgroup enumerator, independent of the engine:
//! subgroups grown from pairs of elements one generator at a time, and
//! classes found by conjugating with every element.

#![allow(dead_code)]

pub mod props;

use std::collections::{BTreeSet, HashSet};

use jordan_core::bitset::BitSet;
use jordan_core::kernel::{GroupTable, SubSet};

/// The subgroup generated by `gens`, by closing under multiplication.
pub fn naive_closure(g: &GroupTable, gens: &[usize]) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = BTreeSet::from([g.identity()]);
    set.extend(gens.iter().copied());
    loop {
        let items: Vec<usize> = set.iter().copied().collect();
        let before = set.len();
        for &a in &items {
            for &b in &items {
                set.insert(g.mul(a, b));
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

/// Every subgroup: first those generated by pairs of elements, then the
/// closures of known subgroups with one more element, until nothing new
/// appears. The first extension round already yields every subgroup
/// generated by three elements, and groups needing more generators are
/// reached in later rounds.
pub fn naive_subgroups(g: &GroupTable) -> Vec<BTreeSet<usize>> {
    let n = g.order();
    let mut found: HashSet<BTreeSet<usize>> = HashSet::new();
    let mut frontier: Vec<BTreeSet<usize>> = Vec::new();
    for a in 0..n {
        for b in a..n {
            let s = naive_closure(g, &[a, b]);
            if found.insert(s.clone()) {
                frontier.push(s);
            }
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            let base: Vec<usize> = s.iter().copied().collect();
            for c in 0..n {
                if !s.contains(&c) {
                    let mut gens = base.clone();
                    gens.push(c);
                    let t = naive_closure(g, &gens);
                    if found.insert(t.clone()) {
                        next.push(t);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<_> = found.into_iter().collect();
    out.sort();
    out
}

/// Conjugacy classes of the given subgroups, as sorted lists of orders
/// with their class sizes.
pub fn naive_class_profile(g: &GroupTable, subgroups: &[BTreeSet<usize>]) -> Vec<(usize, usize)> {
    let mut seen: HashSet<BTreeSet<usize>> = HashSet::new();
    let mut out = Vec::new();
    for s in subgroups {
        if seen.contains(s) {
            continue;
        }
        let mut class: HashSet<BTreeSet<usize>> = HashSet::new();
        for x in 0..g.order() {
            class.insert(s.iter().map(|&y| g.conj(x, y)).collect());
        }
        out.push((s.len(), class.len()));
        seen.extend(class);
    }
    out.sort();
    out
}

pub fn to_subset(g: &GroupTable, s: &BTreeSet<usize>) -> SubSet {
    SubSet::from_bits(BitSet::from_indices(g.order(), s.iter().copied()))
}

fn commutes(g: &GroupTable, s: &BTreeSet<usize>) -> bool {
    s.iter()
        .all(|&a| s.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

fn normal_in(g: &GroupTable, a: &BTreeSet<usize>, h: &BTreeSet<usize>) -> bool {
    h.iter()
        .all(|&x| a.iter().all(|&y| a.contains(&g.conj(x, y))))
}

/// `J(G)` straight from the definition: over every subgroup `H`, the least
/// index of a subgroup of `H` that is abelian and normal in `H`.
pub fn naive_jordan(g: &GroupTable) -> usize {
    let subs = naive_subgroups(g);
    let mut best = 1;
    for h in &subs {
        let largest = subs
            .iter()
            .filter(|a| {
                a.len() <= h.len() && a.is_subset(h) && commutes(g, a) && normal_in(g, a, h)
            })
            .map(|a| a.len())
            .max()
            .expect("the trivial subgroup qualifies");
        best = best.max(h.len() / largest);
    }
    best
}
