use crate::bitset::BitSet;

use super::{Elem, GroupMap, GroupTable};

/// A subgroup of some [`GroupTable`], stored as a membership bit-vector.
///
/// The parent table is not referenced; every operation takes it explicitly
/// and the bit-vector length always equals the parent's order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubSet {
    members: BitSet,
    size: usize,
}

impl std::fmt::Debug for SubSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SubSet(order {}: {:?})", self.size, self.members)
    }
}

impl SubSet {
    pub fn trivial(g: &GroupTable) -> Self {
        SubSet::from_bits(BitSet::from_indices(g.order(), [0]))
    }

    pub fn whole(g: &GroupTable) -> Self {
        SubSet::from_bits(BitSet::full(g.order()))
    }

    /// Wraps a bit-vector that is already known to be a subgroup.
    pub fn from_bits(members: BitSet) -> Self {
        let size = members.count();
        SubSet { members, size }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
    }

    pub fn bits(&self) -> &BitSet {
        &self.members
    }

    pub fn elements(&self) -> Vec<Elem> {
        self.members.iter().collect()
    }

    pub fn is_subgroup_of(&self, other: &SubSet) -> bool {
        self.members.is_subset(&other.members)
    }
}

impl GroupTable {
    /// Smallest subgroup containing `seed` (Dimino's coset algorithm).
    pub fn closure(&self, seed: &[Elem]) -> SubSet {
        let mut bits = BitSet::new(self.order());
        bits.insert(0);
        let mut elems: Vec<Elem> = vec![0];
        let mut gens: Vec<Elem> = Vec::new();
        for &g in seed {
            if bits.contains(g) {
                continue;
            }
            gens.push(g);
            self.dimino_step(&mut bits, &mut elems, &gens);
        }
        SubSet::from_bits(bits)
    }

    /// Extends the subgroup listed in `elems`/`bits` by the last entry of
    /// `gens` (which must lie outside it). `gens` must generate the old
    /// subgroup together with the new element.
    pub(crate) fn dimino_step(&self, bits: &mut BitSet, elems: &mut Vec<Elem>, gens: &[Elem]) {
        let g = *gens.last().unwrap();
        let base_len = elems.len();
        let add_coset = |rep: Elem, bits: &mut BitSet, elems: &mut Vec<Elem>| {
            for i in 0..base_len {
                let e = self.mul(elems[i], rep);
                bits.insert(e);
                elems.push(e);
            }
        };
        let mut reps = vec![g];
        add_coset(g, bits, elems);
        let mut r = 0;
        while r < reps.len() {
            let rep = reps[r];
            for &s in gens {
                let e = self.mul(rep, s);
                if !bits.contains(e) {
                    add_coset(e, bits, elems);
                    reps.push(e);
                }
            }
            r += 1;
        }
    }

    /// Whether the bit-vector is closed under multiplication (and hence a
    /// subgroup, being finite and nonempty).
    pub fn is_subgroup(&self, bits: &BitSet) -> bool {
        if !bits.contains(0) {
            return false;
        }
        let e: Vec<Elem> = bits.iter().collect();
        e.iter()
            .all(|&a| e.iter().all(|&b| bits.contains(self.mul(a, b))))
    }

    /// A small generating set of a subgroup, chosen greedily.
    pub fn subgroup_generators(&self, s: &SubSet) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut bits = BitSet::new(self.order());
        bits.insert(0);
        let mut elems = vec![0];
        let mut cands: Vec<Elem> = s.elements();
        cands.sort_by_key(|&x| (std::cmp::Reverse(self.elt_order(x)), x));
        for x in cands {
            if elems.len() == s.size() {
                break;
            }
            if !bits.contains(x) {
                gens.push(x);
                self.dimino_step(&mut bits, &mut elems, &gens);
            }
        }
        gens
    }

    pub fn center(&self) -> SubSet {
        let gens = self.generators();
        let bits = BitSet::from_indices(
            self.order(),
            (0..self.order()).filter(|&x| gens.iter().all(|&g| self.mul(g, x) == self.mul(x, g))),
        );
        SubSet::from_bits(bits)
    }

    pub fn centralizer(&self, s: &SubSet) -> SubSet {
        let gens = self.subgroup_generators(s);
        let bits = BitSet::from_indices(
            self.order(),
            (0..self.order()).filter(|&x| gens.iter().all(|&g| self.mul(g, x) == self.mul(x, g))),
        );
        SubSet::from_bits(bits)
    }

    pub fn normalizer(&self, s: &SubSet) -> SubSet {
        let gens = self.subgroup_generators(s);
        let bits = BitSet::from_indices(
            self.order(),
            (0..self.order()).filter(|&x| gens.iter().all(|&g| s.contains(self.conj(x, g)))),
        );
        SubSet::from_bits(bits)
    }

    pub fn is_normal(&self, s: &SubSet) -> bool {
        let sg = self.subgroup_generators(s);
        self.generators()
            .iter()
            .all(|&x| sg.iter().all(|&g| s.contains(self.conj(x, g))))
    }

    pub fn is_abelian_subset(&self, s: &SubSet) -> bool {
        let g = self.subgroup_generators(s);
        g.iter()
            .enumerate()
            .all(|(i, &a)| g[i + 1..].iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `g S g^-1`
    pub fn conjugate(&self, s: &SubSet, g: Elem) -> SubSet {
        let bits = BitSet::from_indices(self.order(), s.bits().iter().map(|x| self.conj(g, x)));
        SubSet {
            members: bits,
            size: s.size(),
        }
    }

    /// Smallest normal subgroup containing `seed`.
    pub fn normal_closure(&self, seed: &[Elem]) -> SubSet {
        let mut bits = BitSet::new(self.order());
        bits.insert(0);
        let mut elems = vec![0];
        let mut gens: Vec<Elem> = Vec::new();
        let mut queue: Vec<Elem> = seed.to_vec();
        let ggens = self.generators().to_vec();
        while let Some(x) = queue.pop() {
            if bits.contains(x) {
                continue;
            }
            gens.push(x);
            self.dimino_step(&mut bits, &mut elems, &gens);
            for &g in &ggens {
                queue.push(self.conj(g, x));
            }
            // conjugates of earlier generators by `g` are already queued
        }
        SubSet::from_bits(bits)
    }

    /// Commutator subgroup `[S, S]` of a subgroup `S`.
    pub fn derived_subgroup(&self, s: &SubSet) -> SubSet {
        let sg = self.subgroup_generators(s);
        let mut comms = Vec::new();
        for (i, &a) in sg.iter().enumerate() {
            for &b in &sg[i + 1..] {
                comms.push(self.commutator(a, b));
            }
        }
        // normal closure inside S
        let mut bits = BitSet::new(self.order());
        bits.insert(0);
        let mut elems = vec![0];
        let mut gens: Vec<Elem> = Vec::new();
        while let Some(x) = comms.pop() {
            if bits.contains(x) {
                continue;
            }
            gens.push(x);
            self.dimino_step(&mut bits, &mut elems, &gens);
            for &g in &sg {
                comms.push(self.conj(g, x));
            }
        }
        SubSet::from_bits(bits)
    }

    /// `G ⊇ G' ⊇ G'' ⊇ ...` down to the first repeated term.
    pub fn derived_series(&self) -> Vec<SubSet> {
        let mut series = vec![SubSet::whole(self)];
        loop {
            let next = self.derived_subgroup(series.last().unwrap());
            if next.size() == series.last().unwrap().size() {
                return series;
            }
            series.push(next);
        }
    }

    /// The stable term of the derived series.
    pub fn perfect_core(&self) -> SubSet {
        self.derived_series().pop().unwrap()
    }

    /// Re-tabulates a subgroup as a standalone group. Elements keep the
    /// parent's relative order, so the identity stays at 0. The returned map
    /// embeds the new table into `self`.
    pub fn subgroup_table(&self, s: &SubSet, label: impl Into<String>) -> (GroupTable, GroupMap) {
        let elems = s.elements();
        let mut pos = vec![u16::MAX; self.order()];
        for (i, &e) in elems.iter().enumerate() {
            pos[e] = i as u16;
        }
        let n = elems.len();
        let mut mul = Vec::with_capacity(n * n);
        for &a in &elems {
            let row = self.row(a);
            for &b in &elems {
                mul.push(pos[row[b] as usize]);
            }
        }
        let table = GroupTable::from_trusted(n, mul, label);
        let embed = GroupMap::new(n, self.order(), elems);
        (table, embed)
    }
}
