use crate::bitset::BitSet;

use super::{abelianization_invariants, Elem, GroupTable, KernelError, SubSet};

/// Default order limit for automorphism and isomorphism searches.
pub const DEFAULT_SEARCH_CAP: usize = 512;

/// A map between two group tables, stored as the image of each index.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupMap {
    codomain_order: usize,
    image: Vec<u16>,
}

impl GroupMap {
    pub fn new(domain_order: usize, codomain_order: usize, image: Vec<Elem>) -> Self {
        assert_eq!(image.len(), domain_order);
        GroupMap {
            codomain_order,
            image: image.into_iter().map(|x| x as u16).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        GroupMap::new(n, n, (0..n).collect())
    }

    pub fn domain_order(&self) -> usize {
        self.image.len()
    }

    pub fn codomain_order(&self) -> usize {
        self.codomain_order
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.image[x] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = Elem> + '_ {
        self.image.iter().map(|&x| x as usize)
    }

    /// `other ∘ self` (apply `self` first).
    pub fn then(&self, other: &GroupMap) -> GroupMap {
        assert_eq!(self.codomain_order, other.domain_order());
        GroupMap {
            codomain_order: other.codomain_order,
            image: self
                .image
                .iter()
                .map(|&x| other.image[x as usize])
                .collect(),
        }
    }

    /// Inverse of a bijection.
    pub fn inverse(&self) -> GroupMap {
        assert!(self.is_bijective());
        let mut inv = vec![0u16; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y as usize] = x as u16;
        }
        GroupMap {
            codomain_order: self.image.len(),
            image: inv,
        }
    }

    pub fn is_bijective(&self) -> bool {
        if self.image.len() != self.codomain_order {
            return false;
        }
        let mut seen = BitSet::new(self.codomain_order);
        self.image.iter().all(|&y| seen.insert(y as usize))
    }

    /// Checks `f(xy) = f(x) f(y)` on all pairs.
    pub fn is_homomorphism(&self, domain: &GroupTable, codomain: &GroupTable) -> bool {
        if domain.order() != self.domain_order() || codomain.order() != self.codomain_order {
            return false;
        }
        let n = domain.order();
        (0..n).all(|x| {
            (0..n)
                .all(|y| self.apply(domain.mul(x, y)) == codomain.mul(self.apply(x), self.apply(y)))
        })
    }

    pub fn kernel(&self, domain: &GroupTable, codomain: &GroupTable) -> SubSet {
        let id = codomain.identity();
        SubSet::from_bits(BitSet::from_indices(
            domain.order(),
            (0..domain.order()).filter(|&x| self.apply(x) == id),
        ))
    }

    pub fn image_of(&self, s: &SubSet) -> SubSet {
        SubSet::from_bits(BitSet::from_indices(
            self.codomain_order,
            s.bits().iter().map(|x| self.apply(x)),
        ))
    }

    /// Conjugation `x -> g x g^-1` as an automorphism.
    pub fn inner(g: &GroupTable, by: Elem) -> GroupMap {
        GroupMap::new(
            g.order(),
            g.order(),
            (0..g.order()).map(|x| g.conj(by, x)).collect(),
        )
    }

    /// Whether the automorphism `self` of `g` is conjugation by some element.
    pub fn is_inner(&self, g: &GroupTable) -> bool {
        let gens = g.generators();
        (0..g.order()).any(|c| gens.iter().all(|&x| g.conj(c, x) == self.apply(x)))
    }

    /// Order of a bijective self-map.
    pub fn self_order(&self) -> usize {
        let id = GroupMap::identity(self.image.len());
        let mut cur = self.clone();
        let mut k = 1;
        while cur != id {
            cur = cur.then(self);
            k += 1;
        }
        k
    }
}

/// Outcome of an isomorphism test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoResult {
    Isomorphic(GroupMap),
    NotIsomorphic,
    /// Invariants agree but the groups are above the search cap.
    Indeterminate,
}

impl IsoResult {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoResult::Isomorphic(_))
    }
}

/// Per-element invariant used to prune image candidates: element order and
/// conjugacy class size.
fn element_signature(g: &GroupTable) -> Vec<(u32, usize)> {
    let cc = g.conjugacy_classes();
    (0..g.order())
        .map(|x| (g.elt_order(x) as u32, cc.sizes[cc.class_of[x]]))
        .collect()
}

struct HomSearch<'a> {
    src: &'a GroupTable,
    dst: &'a GroupTable,
    gens: Vec<Elem>,
    candidates: Vec<Vec<Elem>>,
    images: Vec<Elem>,
    map: Vec<u16>,
    stamp: Vec<u32>,
    epoch: u32,
    found: Vec<GroupMap>,
    stop_after_first: bool,
}

const UNSET: u16 = u16::MAX;

impl HomSearch<'_> {
    /// Builds the map on `<gens[..=level]>` from the chosen images, checking
    /// consistency and injectivity. Returns the size of the subgroup reached.
    fn extend(&mut self, level: usize) -> Option<usize> {
        self.epoch += 1;
        let epoch = self.epoch;
        let mut queue = vec![0usize];
        self.map[0] = 0;
        self.stamp[0] = epoch;
        let mut used = BitSet::new(self.dst.order());
        used.insert(0);
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            let fx = self.map[x] as usize;
            for t in 0..=level {
                let y = self.src.mul(x, self.gens[t]);
                let v = self.dst.mul(fx, self.images[t]);
                if self.stamp[y] == epoch {
                    if self.map[y] as usize != v {
                        return None;
                    }
                } else {
                    if !used.insert(v) {
                        return None;
                    }
                    self.stamp[y] = epoch;
                    self.map[y] = v as u16;
                    queue.push(y);
                }
            }
        }
        Some(queue.len())
    }

    fn run(&mut self, level: usize) {
        if self.stop_after_first && !self.found.is_empty() {
            return;
        }
        if level == self.gens.len() {
            let image: Vec<Elem> = self.map.iter().map(|&v| v as usize).collect();
            self.found
                .push(GroupMap::new(self.src.order(), self.dst.order(), image));
            return;
        }
        for ci in 0..self.candidates[level].len() {
            let c = self.candidates[level][ci];
            self.images[level] = c;
            if self.extend(level).is_some() {
                self.run(level + 1);
                if self.stop_after_first && !self.found.is_empty() {
                    return;
                }
            }
        }
    }
}

fn search_isomorphisms(src: &GroupTable, dst: &GroupTable, first_only: bool) -> Vec<GroupMap> {
    debug_assert_eq!(src.order(), dst.order());
    let ss = element_signature(src);
    let ds = element_signature(dst);
    let gens = src.generators().to_vec();
    if gens.is_empty() {
        return vec![GroupMap::identity(1)];
    }
    let candidates = gens
        .iter()
        .map(|&g| (0..dst.order()).filter(|&y| ds[y] == ss[g]).collect())
        .collect();
    let mut search = HomSearch {
        src,
        dst,
        images: vec![0; gens.len()],
        gens,
        candidates,
        map: vec![UNSET; src.order()],
        stamp: vec![0; src.order()],
        epoch: 0,
        found: Vec::new(),
        stop_after_first: first_only,
    };
    search.run(0);
    search.found
}

impl GroupTable {
    /// Every automorphism of the group, found by backtracking over images of
    /// a generating set (candidates filtered by element order and class size).
    /// The identity automorphism comes first.
    pub fn automorphisms(&self, cap: usize) -> Result<Vec<GroupMap>, KernelError> {
        if self.order() > cap {
            return Err(KernelError::CapExceeded { cap });
        }
        let mut auts = search_isomorphisms(self, self, false);
        let id = GroupMap::identity(self.order());
        if let Some(p) = auts.iter().position(|a| *a == id) {
            auts.swap(0, p);
            auts[1..].sort_by(|a, b| a.image.cmp(&b.image));
        }
        Ok(auts)
    }

    /// Isomorphism test. Cheap invariants always run first; the exhaustive
    /// search only runs when both orders are at most `cap`.
    pub fn is_isomorphic(&self, other: &GroupTable, cap: usize) -> IsoResult {
        if self.order() != other.order() {
            return IsoResult::NotIsomorphic;
        }
        let mut a = element_signature(self);
        let mut b = element_signature(other);
        a.sort_unstable();
        b.sort_unstable();
        if a != b
            || self.center().size() != other.center().size()
            || abelianization_invariants(self) != abelianization_invariants(other)
        {
            return IsoResult::NotIsomorphic;
        }
        if self.order() > cap {
            return IsoResult::Indeterminate;
        }
        match search_isomorphisms(self, other, true).pop() {
            Some(m) => IsoResult::Isomorphic(m),
            None => IsoResult::NotIsomorphic,
        }
    }
}
