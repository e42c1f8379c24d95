use super::{GroupMap, GroupTable, KernelError, SubSet};

impl GroupTable {
    /// `G / N` together with the projection `G -> G/N`.
    ///
    /// Cosets are numbered by their smallest element, so the coset of the
    /// identity is 0 and the numbering is canonical.
    pub fn quotient(&self, n: &SubSet) -> Result<(GroupTable, GroupMap), KernelError> {
        if !self.is_normal(n) {
            return Err(KernelError::NotNormal);
        }
        let order = self.order();
        let members = n.elements();
        let mut coset_of = vec![usize::MAX; order];
        let mut reps = Vec::new();
        for x in 0..order {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for &m in &members {
                coset_of[self.mul(x, m)] = id;
            }
        }
        let q = reps.len();
        let mut mul = Vec::with_capacity(q * q);
        for &a in &reps {
            for &b in &reps {
                mul.push(coset_of[self.mul(a, b)] as u16);
            }
        }
        let table = GroupTable::from_trusted(q, mul, format!("({}) / N{}", self.label(), n.size()));
        let proj = GroupMap::new(order, q, coset_of);
        Ok((table, proj))
    }
}
