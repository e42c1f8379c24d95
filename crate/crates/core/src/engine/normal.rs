use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::kernel::{abelian_invariants, Elem, GroupTable, SubSet};

/// All normal subgroups, sorted by order and then lexicographically.
///
/// Every normal subgroup is the join of the normal closures of its
/// elements, so closing the set of single-element normal closures under
/// pairwise joins yields the complete list.
pub fn normal_subgroups(g: &GroupTable) -> Vec<SubSet> {
    let cc = g.conjugacy_classes();
    let mut seen: HashSet<BitSet> = HashSet::new();
    let mut list: Vec<(SubSet, Vec<Elem>)> = Vec::new();
    let mut push = |s: SubSet, list: &mut Vec<(SubSet, Vec<Elem>)>| {
        if seen.insert(s.bits().clone()) {
            let gens = g.subgroup_generators(&s);
            list.push((s, gens));
        }
    };
    push(SubSet::trivial(g), &mut list);
    for &x in &cc.representatives {
        push(g.normal_closure(&[x]), &mut list);
    }
    let mut i = 0;
    while i < list.len() {
        for j in 0..i {
            let (a, ga) = &list[i];
            let (b, gb) = &list[j];
            if a.is_subgroup_of(b) || b.is_subgroup_of(a) {
                continue;
            }
            let mut seed = ga.clone();
            seed.extend_from_slice(gb);
            let join = g.closure(&seed);
            push(join, &mut list);
        }
        i += 1;
    }
    let mut out: Vec<SubSet> = list.into_iter().map(|(s, _)| s).collect();
    out.sort_by(|a, b| {
        a.size()
            .cmp(&b.size())
            .then_with(|| a.bits().lex_cmp(b.bits()))
    });
    out
}

/// One entry of a [`NormalAbelianProfile`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileEntry {
    pub subgroup: SubSet,
    pub invariants: Vec<usize>,
}

/// Every normal abelian subgroup with its abelian invariants, sorted by
/// order and then by invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalAbelianProfile {
    pub entries: Vec<ProfileEntry>,
}

/// Isomorphism type of an abelian group, by invariant factors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AbelianType(pub Vec<usize>);

impl AbelianType {
    pub fn order(&self) -> usize {
        self.0.iter().product()
    }
}

impl std::fmt::Display for AbelianType {
    /// `C1`, `C6`, `C2^2`, `C3xC6`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "C1");
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let d = self.0[i];
            let mut k = 1;
            while i + k < self.0.len() && self.0[i + k] == d {
                k += 1;
            }
            parts.push(if k == 1 {
                format!("C{d}")
            } else {
                format!("C{d}^{k}")
            });
            i += k;
        }
        write!(f, "{}", parts.join("x"))
    }
}

impl std::str::FromStr for AbelianType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut factors = Vec::new();
        for part in s.trim().split('x') {
            let body = part
                .strip_prefix('C')
                .ok_or_else(|| format!("bad abelian type {s:?}"))?;
            let (d, k) = match body.split_once('^') {
                Some((d, k)) => (d, k.parse::<usize>().map_err(|e| e.to_string())?),
                None => (body, 1),
            };
            let d: usize = d
                .parse()
                .map_err(|e: std::num::ParseIntError| e.to_string())?;
            if d > 1 {
                factors.extend(std::iter::repeat_n(d, k));
            }
        }
        factors.sort_unstable();
        Ok(AbelianType(factors))
    }
}

impl NormalAbelianProfile {
    /// The distinct isomorphism types that occur, sorted.
    pub fn types(&self) -> Vec<AbelianType> {
        let mut t: Vec<AbelianType> = self
            .entries
            .iter()
            .map(|e| AbelianType(e.invariants.clone()))
            .collect();
        t.sort();
        t.dedup();
        t
    }

    pub fn max_order(&self) -> usize {
        self.entries
            .iter()
            .map(|e| e.subgroup.size())
            .max()
            .unwrap_or(1)
    }
}

pub fn normal_abelian_profile(g: &GroupTable) -> NormalAbelianProfile {
    let mut entries: Vec<ProfileEntry> = normal_subgroups(g)
        .into_iter()
        .filter(|s| g.is_abelian_subset(s))
        .map(|s| {
            let invariants = abelian_invariants(g, &s).expect("filtered to abelian subgroups");
            ProfileEntry {
                subgroup: s,
                invariants,
            }
        })
        .collect();
    entries.sort_by(|a, b| {
        a.subgroup
            .size()
            .cmp(&b.subgroup.size())
            .then_with(|| a.invariants.cmp(&b.invariants))
            .then_with(|| a.subgroup.bits().lex_cmp(b.subgroup.bits()))
    });
    NormalAbelianProfile { entries }
}

/// `|G|` divided by the largest order of a normal abelian subgroup.
pub fn min_index_normal_abelian(g: &GroupTable) -> usize {
    let whole = SubSet::whole(g);
    let (a, _) = max_normal_abelian_in(g, &whole, g.generators());
    g.order() / a.size()
}

fn commute_all(g: &GroupTable, xs: &[Elem], ys: &[Elem]) -> bool {
    xs.iter()
        .all(|&x| ys.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
}

/// Largest-order normal abelian subgroup of the subgroup `h` (generated by
/// `h_gens`), computed inside the ambient table. Returns the
/// lexicographically least one among those of maximal order, and the number
/// of normal abelian subgroups containing `Z(h)` that were visited.
///
/// Every maximal normal abelian subgroup contains `Z(h)`, and every normal
/// abelian subgroup is the join of the `h`-normal closures of its elements,
/// so a breadth-first search from `Z(h)` over joins with commuting abelian
/// normal closures visits all candidates.
pub fn max_normal_abelian_in(g: &GroupTable, h: &SubSet, h_gens: &[Elem]) -> (SubSet, usize) {
    if commute_all(g, h_gens, h_gens) {
        return (h.clone(), 1);
    }
    let n = g.order();
    let elems = h.elements();
    // center of h
    let center = BitSet::from_indices(
        n,
        elems
            .iter()
            .copied()
            .filter(|&x| h_gens.iter().all(|&s| g.mul(s, x) == g.mul(x, s))),
    );
    // h-conjugacy classes outside the center, and their closures
    let mut assigned = center.clone();
    let mut closures: Vec<(BitSet, Vec<Elem>)> = Vec::new();
    let mut seen_closures: HashSet<BitSet> = HashSet::new();
    let mut stack = Vec::new();
    for &x in &elems {
        if assigned.contains(x) {
            continue;
        }
        let mut class = vec![x];
        assigned.insert(x);
        stack.push(x);
        while let Some(y) = stack.pop() {
            for &s in h_gens {
                let z = g.conj(s, y);
                if assigned.insert(z) {
                    class.push(z);
                    stack.push(z);
                }
            }
        }
        // a class generates an abelian subgroup iff its elements commute
        if !commute_all(g, &class, &class) {
            continue;
        }
        let sub = g.closure(&class);
        if seen_closures.insert(sub.bits().clone()) {
            let gens = g.subgroup_generators(&sub);
            closures.push((sub.bits().clone(), gens));
        }
    }
    let z = SubSet::from_bits(center);
    let zg = g.subgroup_generators(&z);
    let mut best = z.clone();
    let mut visited: HashSet<BitSet> = HashSet::new();
    visited.insert(z.bits().clone());
    let mut frontier = vec![(z, zg)];
    while let Some((a, ag)) = frontier.pop() {
        for (cb, cg) in &closures {
            if cb.is_subset(a.bits()) || !commute_all(g, &ag, cg) {
                continue;
            }
            let mut seed = ag.clone();
            seed.extend_from_slice(cg);
            let joined = g.closure(&seed);
            if !visited.insert(joined.bits().clone()) {
                continue;
            }
            if joined.size() > best.size()
                || (joined.size() == best.size() && joined.bits().lex_cmp(best.bits()).is_lt())
            {
                best = joined.clone();
            }
            let jg = g.subgroup_generators(&joined);
            frontier.push((joined, jg));
        }
    }
    (best, visited.len())
}
