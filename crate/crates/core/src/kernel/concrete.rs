use std::collections::HashMap;

use super::{GroupTable, KernelError, MAX_TABLE_ORDER};

pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

/// A concrete group element (permutation, matrix, quaternion) that can be
/// multiplied, inverted and serialized to a canonical key.
pub trait Concrete: Clone {
    fn compose(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    fn identity_like(&self) -> Self;
    /// Canonical byte serialization; equal elements have equal keys.
    fn key(&self) -> Vec<u8>;
    /// Whether `self` lives in the same carrier (degree, field, dimension) as `other`.
    fn same_carrier(&self, other: &Self) -> bool;
    /// Whether `self` satisfies the carrier's membership constraints.
    fn well_formed(&self) -> bool {
        true
    }
}

/// A table together with the concrete elements it was built from.
#[derive(Debug, Clone)]
pub struct ConcreteGroup<T> {
    pub table: GroupTable,
    pub elements: Vec<T>,
    pub index: HashMap<Vec<u8>, usize>,
}

impl<T: Concrete> ConcreteGroup<T> {
    pub fn index_of(&self, x: &T) -> Option<usize> {
        self.index.get(&x.key()).copied()
    }
}

/// Closes `generators` under multiplication and tabulates the result.
///
/// Elements are numbered in breadth-first order of the right Cayley graph,
/// so the identity is 0 and the numbering is a deterministic function of the
/// generator list. The full table is filled column by column from the
/// spanning tree (`y = parent * s`), needing only `order * |gens|` concrete
/// products.
pub fn build_from_concrete<T: Concrete>(
    generators: &[T],
    cap: usize,
    label: impl Into<String>,
) -> Result<ConcreteGroup<T>, KernelError> {
    let first = generators.first().ok_or_else(|| {
        KernelError::InconsistentElement("generator list must be nonempty".into())
    })?;
    let cap = cap.min(MAX_TABLE_ORDER);
    for g in generators {
        if !g.same_carrier(first) || !g.well_formed() {
            return Err(KernelError::InconsistentElement(
                "generator outside the common carrier".into(),
            ));
        }
    }
    let id = first.identity_like();
    let mut elements = vec![id.clone()];
    let mut index: HashMap<Vec<u8>, usize> = HashMap::new();
    index.insert(id.key(), 0);
    let k = generators.len();
    // rmul[s][x] = x * gen_s
    let mut rmul: Vec<Vec<u16>> = vec![Vec::new(); k];
    let mut parent: Vec<(usize, usize)> = vec![(0, 0)];
    let mut i = 0;
    while i < elements.len() {
        for (s, g) in generators.iter().enumerate() {
            let y = elements[i].compose(g);
            if !y.same_carrier(first) || !y.well_formed() {
                return Err(KernelError::InconsistentElement(
                    "product left the carrier".into(),
                ));
            }
            let key = y.key();
            let j = match index.get(&key) {
                Some(&j) => j,
                None => {
                    let j = elements.len();
                    if j >= cap {
                        return Err(KernelError::CapExceeded { cap });
                    }
                    index.insert(key, j);
                    elements.push(y);
                    parent.push((i, s));
                    j
                }
            };
            rmul[s].push(j as u16);
        }
        i += 1;
    }
    let n = elements.len();
    let mut mul = vec![0u16; n * n];
    for x in 0..n {
        mul[x * n] = x as u16;
    }
    for y in 1..n {
        let (p, s) = parent[y];
        let col = &rmul[s];
        for x in 0..n {
            mul[x * n + y] = col[mul[x * n + p] as usize];
        }
    }
    Ok(ConcreteGroup {
        table: GroupTable::from_trusted(n, mul, label),
        elements,
        index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Clone, Debug, PartialEq)]
    struct Mod(u32, u32);

    impl Concrete for Mod {
        fn compose(&self, o: &Self) -> Self {
            Mod((self.0 + o.0) % self.1, self.1)
        }
        fn inverse(&self) -> Self {
            Mod((self.1 - self.0) % self.1, self.1)
        }
        fn identity_like(&self) -> Self {
            Mod(0, self.1)
        }
        fn key(&self) -> Vec<u8> {
            self.0.to_le_bytes().to_vec()
        }
        fn same_carrier(&self, o: &Self) -> bool {
            self.1 == o.1
        }
    }

    #[test]
    fn closure_of_additive_generator() {
        let g = build_from_concrete(&[Mod(2, 10)], 100, "2Z/10").unwrap();
        assert_eq!(g.table.order(), 5);
        g.table.validate(1000).unwrap();
        assert_eq!(g.index_of(&Mod(4, 10)), Some(2));
    }

    #[test]
    fn identity_only() {
        let g = build_from_concrete(&[Mod(0, 7)], 100, "1").unwrap();
        assert_eq!(g.table.order(), 1);
    }

    #[test]
    fn cap_and_carrier_errors() {
        assert_eq!(
            build_from_concrete(&[Mod(1, 50)], 10, "c").unwrap_err(),
            KernelError::CapExceeded { cap: 10 }
        );
        assert!(matches!(
            build_from_concrete(&[Mod(1, 5), Mod(1, 6)], 10, "c"),
            Err(KernelError::InconsistentElement(_))
        ));
        assert!(build_from_concrete::<Mod>(&[], 10, "c").is_err());
    }
}
