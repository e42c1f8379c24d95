use super::{Elem, GroupTable};

/// Partition of a group into conjugacy classes.
///
/// Classes are numbered by their smallest element, which is also the
/// representative, so class 0 is `{identity}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClassPartition {
    pub class_of: Vec<usize>,
    pub representatives: Vec<Elem>,
    pub sizes: Vec<usize>,
}

impl ConjClassPartition {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// Class sizes sorted ascending; an isomorphism invariant.
    pub fn size_profile(&self) -> Vec<usize> {
        let mut v = self.sizes.clone();
        v.sort_unstable();
        v
    }
}

impl GroupTable {
    pub fn conjugacy_classes(&self) -> ConjClassPartition {
        let n = self.order();
        let gens = self.generators();
        let mut class_of = vec![usize::MAX; n];
        let mut representatives = Vec::new();
        let mut sizes = Vec::new();
        let mut stack = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = representatives.len();
            representatives.push(x);
            class_of[x] = id;
            let mut size = 1;
            stack.push(x);
            while let Some(y) = stack.pop() {
                for &g in gens {
                    let z = self.conj(g, y);
                    if class_of[z] == usize::MAX {
                        class_of[z] = id;
                        size += 1;
                        stack.push(z);
                    }
                }
            }
            sizes.push(size);
        }
        ConjClassPartition {
            class_of,
            representatives,
            sizes,
        }
    }
}
