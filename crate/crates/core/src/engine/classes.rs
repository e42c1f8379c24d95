use std::collections::HashSet;

use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::kernel::{Elem, GroupTable, SubSet};

use super::{EngineError, EngineOptions};

/// One conjugacy class of subgroups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupClass {
    /// Lexicographically least member of the class.
    pub representative: SubSet,
    /// Generators of the representative.
    pub generators: Vec<Elem>,
    /// Number of conjugates.
    pub class_size: usize,
    pub normalizer_order: usize,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.representative.size()
    }
}

/// All subgroups of a group up to conjugacy, sorted by order and then by
/// representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupClassInventory {
    pub group_order: usize,
    pub classes: Vec<SubgroupClass>,
}

impl SubgroupClassInventory {
    /// Total number of subgroups, counting conjugates.
    pub fn subgroup_count(&self) -> usize {
        self.classes.iter().map(|c| c.class_size).sum()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

struct Found {
    bits: BitSet,
    elems: Vec<Elem>,
    gens: Vec<Elem>,
    normalizer: Vec<Elem>,
}

/// Subgroups obtained by adjoining one prime-power-order element to `r`,
/// skipping elements whose coset `r g` lies in the `N(r)`-orbit of a coset
/// already tried. Every subgroup `K > r` contains such an element, since
/// `K / r` is nontrivial as a set of cosets and some coset has a
/// representative of prime-power order (a suitable power of any element of
/// `K \ r`).
fn extensions(g: &GroupTable, r: &Found, pp: &[Elem]) -> Vec<(BitSet, Vec<Elem>)> {
    let mut covered = r.bits.clone();
    let mut out = Vec::new();
    for &x in pp {
        if covered.contains(x) {
            continue;
        }
        let mut bits = r.bits.clone();
        let mut elems = r.elems.clone();
        let mut gens = r.gens.clone();
        gens.push(x);
        g.dimino_step(&mut bits, &mut elems, &gens);
        out.push((bits, gens));
        for &n in &r.normalizer {
            let y = g.conj(n, x);
            if covered.contains(y) {
                continue;
            }
            for &e in &r.elems {
                covered.insert(g.mul(e, y));
            }
        }
    }
    out
}

fn conjugate_bits(g: &GroupTable, elems: &[Elem], by: Elem) -> BitSet {
    BitSet::from_indices(g.order(), elems.iter().map(|&x| g.conj(by, x)))
}

/// Enumerates the conjugacy classes of subgroups.
///
/// Starting from the trivial subgroup, every class representative is
/// extended by single elements; each closure not yet seen among the
/// conjugates of known classes starts a new class. Candidate generation for
/// one layer runs in parallel and merging is sequential, so the result does
/// not depend on the number of threads.
pub fn subgroup_classes(
    g: &GroupTable,
    opts: &EngineOptions,
) -> Result<SubgroupClassInventory, EngineError> {
    if g.order() > opts.max_order {
        return Err(EngineError::CapExceeded {
            order: g.order(),
            cap: opts.max_order,
        });
    }
    opts.run(|| enumerate(g))
}

fn enumerate(g: &GroupTable) -> Result<SubgroupClassInventory, EngineError> {
    let n = g.order();
    let pp: Vec<Elem> = (1..n).filter(|&x| is_prime_power(g.elt_order(x))).collect();
    let ggens = g.generators().to_vec();
    let mut seen: HashSet<BitSet> = HashSet::new();
    let mut classes: Vec<(Found, usize)> = Vec::new();

    let trivial = Found {
        bits: BitSet::from_indices(n, [0]),
        elems: vec![0],
        gens: Vec::new(),
        normalizer: (0..n).collect(),
    };
    seen.insert(trivial.bits.clone());
    classes.push((trivial, 1));
    let mut layer: Vec<usize> = vec![0];

    while !layer.is_empty() {
        let cands: Vec<Vec<(BitSet, Vec<Elem>)>> = layer
            .par_iter()
            .map(|&ci| extensions(g, &classes[ci].0, &pp))
            .collect();
        let mut next = Vec::new();
        for (bits, gens) in cands.into_iter().flatten() {
            if seen.contains(&bits) {
                continue;
            }
            let elems: Vec<Elem> = bits.iter().collect();
            // orbit of the subgroup under conjugation, with conjugators
            let mut orbit: Vec<(BitSet, Elem)> = vec![(bits.clone(), 0)];
            let mut in_orbit: HashSet<BitSet> = HashSet::new();
            in_orbit.insert(bits.clone());
            let mut i = 0;
            while i < orbit.len() {
                let c = orbit[i].1;
                for &s in &ggens {
                    let by = g.mul(s, c);
                    let conj = conjugate_bits(g, &elems, by);
                    if in_orbit.insert(conj.clone()) {
                        orbit.push((conj, by));
                    }
                }
                i += 1;
            }
            let (best, by) = orbit
                .iter()
                .min_by(|a, b| a.0.lex_cmp(&b.0))
                .map(|(b, c)| (b.clone(), *c))
                .expect("orbit is nonempty");
            let size = orbit.len();
            for (b, _) in orbit {
                seen.insert(b);
            }
            let rep_gens: Vec<Elem> = gens.iter().map(|&x| g.conj(by, x)).collect();
            let rep_elems: Vec<Elem> = best.iter().collect();
            let normalizer: Vec<Elem> = (0..n)
                .filter(|&y| rep_gens.iter().all(|&x| best.contains(g.conj(y, x))))
                .collect();
            debug_assert_eq!(normalizer.len() * size, n);
            next.push(classes.len());
            classes.push((
                Found {
                    bits: best,
                    elems: rep_elems,
                    gens: rep_gens,
                    normalizer,
                },
                size,
            ));
        }
        layer = next;
    }

    let mut out: Vec<SubgroupClass> = classes
        .into_iter()
        .map(|(f, size)| SubgroupClass {
            normalizer_order: f.normalizer.len(),
            representative: SubSet::from_bits(f.bits),
            generators: f.gens,
            class_size: size,
        })
        .collect();
    out.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.representative.bits().lex_cmp(b.representative.bits()))
    });
    Ok(SubgroupClassInventory {
        group_order: n,
        classes: out,
    })
}

pub(crate) fn is_prime_power(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d)).unwrap();
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::Builder;

    fn inv(e: &str) -> SubgroupClassInventory {
        let g = Builder::new().build_str(e).unwrap();
        subgroup_classes(&g, &EngineOptions::default()).unwrap()
    }

    #[test]
    fn class_counts_of_small_groups() {
        // (classes, total subgroups)
        for (e, classes, total) in [
            ("C(1)", 1, 1),
            ("C(12)", 6, 6),
            ("S(3)", 4, 6),
            ("Q8", 6, 6),
            ("D(4)", 8, 10),
            ("S(4)", 11, 30),
            ("A(4)", 5, 10),
            ("Tstar", 7, 15),
            ("A(5)", 9, 59),
            ("GL(2,3)", 16, 55),
            ("C(2) x C(2) x C(2)", 16, 16),
        ] {
            let i = inv(e);
            assert_eq!((i.len(), i.subgroup_count()), (classes, total), "{e}");
        }
    }

    #[test]
    fn representatives_are_canonical() {
        let g = Builder::new().build_str("S(4)").unwrap();
        let i = subgroup_classes(&g, &EngineOptions::default()).unwrap();
        for c in &i.classes {
            assert!(g.is_subgroup(c.representative.bits()));
            assert_eq!(c.class_size * c.normalizer_order, 24);
            for y in 0..24 {
                let conj = g.conjugate(&c.representative, y);
                assert!(!conj.bits().lex_cmp(c.representative.bits()).is_lt());
            }
        }
    }

    #[test]
    fn thread_count_does_not_change_result() {
        let g = Builder::new().build_str("GL(2,3)").unwrap();
        let one = subgroup_classes(
            &g,
            &EngineOptions {
                threads: Some(1),
                ..Default::default()
            },
        )
        .unwrap();
        let four = subgroup_classes(
            &g,
            &EngineOptions {
                threads: Some(4),
                ..Default::default()
            },
        )
        .unwrap();
        let key = |i: &SubgroupClassInventory| -> Vec<(Vec<Elem>, usize)> {
            i.classes
                .iter()
                .map(|c| (c.representative.elements(), c.class_size))
                .collect()
        };
        assert_eq!(key(&one), key(&four));
    }

    #[test]
    fn order_cap() {
        let g = Builder::new().build_str("S(5)").unwrap();
        let opts = EngineOptions {
            max_order: 100,
            ..Default::default()
        };
        assert!(matches!(
            subgroup_classes(&g, &opts),
            Err(EngineError::CapExceeded { .. })
        ));
    }

    #[test]
    fn prime_powers() {
        let pp: Vec<usize> = (0..20).filter(|&n| is_prime_power(n)).collect();
        assert_eq!(pp, vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19]);
    }
}
