//! Finite groups as complete multiplication tables.
//!
//! Every group in this crate is a [`GroupTable`]: elements are dense indices
//! `0..order` with the identity at `0`. Subgroups are [`SubSet`]s (bit-vector
//! membership plus cached size) and homomorphisms are [`GroupMap`]s (index
//! arrays). All three are immutable once built.

mod abelian;
mod classes;
mod concrete;
mod io;
mod morphism;
mod quotient;
mod subgroup;

pub use abelian::{abelian_invariants, abelianization_invariants};
pub use classes::ConjClassPartition;
pub use concrete::{build_from_concrete, Concrete, ConcreteGroup, DEFAULT_CLOSURE_CAP};
pub use io::TableDocument;
pub use morphism::{GroupMap, IsoResult, DEFAULT_SEARCH_CAP};
pub use subgroup::SubSet;

use std::sync::OnceLock;

use thiserror::Error;

/// Element index inside a [`GroupTable`].
pub type Elem = usize;

/// Largest order a table can hold (indices are stored as `u16`).
pub const MAX_TABLE_ORDER: usize = u16::MAX as usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KernelError {
    #[error("closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("element left the declared carrier: {0}")]
    InconsistentElement(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup is not abelian")]
    NotAbelian,
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("table JSON: {0}")]
    Json(String),
}

/// A finite group given by its full Cayley table.
pub struct GroupTable {
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    elt_order: Vec<u32>,
    label: String,
    gens: OnceLock<Vec<Elem>>,
}

impl Clone for GroupTable {
    fn clone(&self) -> Self {
        GroupTable {
            order: self.order,
            mul: self.mul.clone(),
            inv: self.inv.clone(),
            elt_order: self.elt_order.clone(),
            label: self.label.clone(),
            gens: self.gens.clone(),
        }
    }
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupTable")
            .field("order", &self.order)
            .field("label", &self.label)
            .finish_non_exhaustive()
    }
}

impl PartialEq for GroupTable {
    /// Tables are equal when their multiplication is identical, labels aside.
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mul == other.mul
    }
}

impl Eq for GroupTable {}

impl GroupTable {
    /// Wraps a row-major table that is known to be a group with identity 0
    /// (built from a construction that guarantees associativity).
    pub(crate) fn from_trusted(order: usize, mul: Vec<u16>, label: impl Into<String>) -> Self {
        debug_assert_eq!(mul.len(), order * order);
        let mut inv = vec![0u16; order];
        for x in 0..order {
            let row = &mul[x * order..(x + 1) * order];
            let y = row
                .iter()
                .position(|&v| v == 0)
                .expect("every row of a group table contains the identity");
            inv[x] = y as u16;
        }
        let mut elt_order = vec![0u32; order];
        for x in 0..order {
            let mut k = 1u32;
            let mut p = x;
            while p != 0 {
                p = mul[p * order + x] as usize;
                k += 1;
            }
            elt_order[x] = k;
        }
        GroupTable {
            order,
            mul,
            inv,
            elt_order,
            label: label.into(),
            gens: OnceLock::new(),
        }
    }

    /// Cyclic group of order `n` (element `k` is the `k`-th power of the generator).
    pub fn cyclic(n: usize) -> Self {
        assert!((1..=MAX_TABLE_ORDER).contains(&n));
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                mul.push(((a + b) % n) as u16);
            }
        }
        GroupTable::from_trusted(n, mul, format!("C({n})"))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> Elem {
        0
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a] as usize
    }

    /// `g a g^-1`
    #[inline]
    pub fn conj(&self, g: Elem, a: Elem) -> Elem {
        self.mul(self.mul(g, a), self.inv(g))
    }

    #[inline]
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: Elem, k: usize) -> Elem {
        let k = k % self.elt_order(a);
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    #[inline]
    pub fn elt_order(&self, a: Elem) -> usize {
        self.elt_order[a] as usize
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.elt_order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub(crate) fn raw_mul(&self) -> &[u16] {
        &self.mul
    }

    pub(crate) fn row(&self, a: Elem) -> &[u16] {
        &self.mul[a * self.order..(a + 1) * self.order]
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.generators();
        g.iter()
            .enumerate()
            .all(|(i, &a)| g[i + 1..].iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Number of elements of each order, indexed by order (index 0 unused).
    pub fn order_census(&self) -> Vec<usize> {
        let mut census = vec![0usize; self.order + 1];
        for &o in &self.elt_order {
            census[o as usize] += 1;
        }
        census
    }

    pub fn involution_count(&self) -> usize {
        self.elt_order.iter().filter(|&&o| o == 2).count()
    }

    /// A small deterministic generating set: greedily adds the element of
    /// largest order not yet covered, then drops redundant generators.
    pub fn generators(&self) -> &[Elem] {
        self.gens.get_or_init(|| {
            let mut by_order: Vec<Elem> = (1..self.order).collect();
            by_order.sort_by_key(|&x| (std::cmp::Reverse(self.elt_order[x]), x));
            let mut gens = Vec::new();
            let mut current = SubSet::trivial(self);
            for x in by_order {
                if current.size() == self.order {
                    break;
                }
                if !current.contains(x) {
                    gens.push(x);
                    current = self.closure(&gens);
                }
            }
            let mut i = 0;
            while i < gens.len() && gens.len() > 1 {
                let mut rest = gens.clone();
                rest.remove(i);
                if self.closure(&rest).size() == self.order {
                    gens = rest;
                } else {
                    i += 1;
                }
            }
            gens
        })
    }

    /// Checks Latin-square, identity and inverse laws exactly, and
    /// associativity on `samples` random triples from a fixed seed.
    pub fn validate(&self, samples: usize) -> Result<(), KernelError> {
        use rand::{Rng, SeedableRng};
        let n = self.order;
        let mut seen = vec![0u32; n];
        let mut stamp = 0u32;
        for x in 0..n {
            stamp += 1;
            for y in 0..n {
                let v = self.mul(x, y);
                if v >= n || seen[v] == stamp {
                    return Err(KernelError::InvalidTable(format!(
                        "row {x} is not a permutation"
                    )));
                }
                seen[v] = stamp;
            }
        }
        for y in 0..n {
            stamp += 1;
            for x in 0..n {
                let v = self.mul(x, y);
                if seen[v] == stamp {
                    return Err(KernelError::InvalidTable(format!(
                        "column {y} is not a permutation"
                    )));
                }
                seen[v] = stamp;
            }
        }
        for x in 0..n {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(KernelError::InvalidTable(
                    "element 0 is not the identity".into(),
                ));
            }
            if self.mul(x, self.inv(x)) != 0 || self.mul(self.inv(x), x) != 0 {
                return Err(KernelError::InvalidTable(format!(
                    "inverse law fails at {x}"
                )));
            }
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0001);
        for _ in 0..samples {
            let (a, b, c) = (
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
            );
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(KernelError::InvalidTable(format!(
                    "associativity fails at ({a}, {b}, {c})"
                )));
            }
        }
        Ok(())
    }
}


#[cfg(test)]
mod tests {
    use super::testgroups::*;
    use super::*;

    #[test]
    fn cyclic_basics() {
        let c6 = GroupTable::cyclic(6);
        assert_eq!(c6.order(), 6);
        assert_eq!(c6.elt_order(1), 6);
        assert_eq!(c6.elt_order(2), 3);
        assert_eq!(c6.elt_order(3), 2);
        assert!(c6.is_abelian());
        c6.validate(1000).unwrap();
    }

    #[test]
    fn helpers_are_valid_groups() {
        s3().validate(10_000).unwrap();
        q8().validate(10_000).unwrap();
        assert!(!s3().is_abelian());
        assert_eq!(q8().involution_count(), 1);
        assert_eq!(q8().order_census()[4], 6);
    }

    #[test]
    fn validate_rejects_non_latin() {
        let mut t = GroupTable::cyclic(4);
        t.mul[5] = 1;
        assert!(matches!(t.validate(10), Err(KernelError::InvalidTable(_))));
    }

    #[test]
    fn generators_generate() {
        let q = q8();
        assert_eq!(q.generators().len(), 2);
        assert_eq!(q.closure(q.generators()).size(), 8);
        assert_eq!(GroupTable::cyclic(1).generators().len(), 0);
    }
}
