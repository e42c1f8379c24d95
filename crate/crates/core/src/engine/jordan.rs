use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::kernel::{Elem, GroupTable, SubSet};

use super::classes::subgroup_classes;
use super::normal::max_normal_abelian_in;
use super::{EngineError, EngineOptions};

/// Result of a Jordan constant computation.
///
/// The witness is the lexicographically least subgroup class
/// representative attaining the maximum, and the lexicographically least
/// normal abelian subgroup of maximal order inside it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanReport {
    pub label: String,
    pub order: usize,
    /// `|G| / max |A|` over normal abelian `A` of `G` itself.
    pub whole_group_index: usize,
    pub jordan: usize,
    pub witness_subgroup: Vec<Elem>,
    pub witness_abelian: Vec<Elem>,
    pub subgroup_classes: usize,
    pub millis: u64,
}

impl JordanReport {
    /// Same report with timing cleared, for reproducibility comparisons.
    pub fn without_timing(mut self) -> Self {
        self.millis = 0;
        self
    }
}

/// `i(H)` and its witness for one subgroup given by generators.
pub fn subgroup_index(g: &GroupTable, h: &SubSet, h_gens: &[Elem]) -> (usize, SubSet) {
    let (a, _) = max_normal_abelian_in(g, h, h_gens);
    (h.size() / a.size(), a)
}

/// `J(G)`: the maximum over subgroups `H` of the least index of a normal
/// abelian subgroup of `H`. Abelian groups short-circuit to 1.
pub fn jordan_constant(g: &GroupTable, opts: &EngineOptions) -> Result<JordanReport, EngineError> {
    let start = Instant::now();
    if g.order() > opts.max_order {
        return Err(EngineError::CapExceeded {
            order: g.order(),
            cap: opts.max_order,
        });
    }
    let whole = SubSet::whole(g);
    if g.is_abelian() {
        return Ok(JordanReport {
            label: g.label().to_string(),
            order: g.order(),
            whole_group_index: 1,
            jordan: 1,
            witness_subgroup: vec![0],
            witness_abelian: vec![0],
            subgroup_classes: 0,
            millis: start.elapsed().as_millis() as u64,
        });
    }
    let inv = subgroup_classes(g, opts)?;
    let indices: Vec<(usize, SubSet)> = opts.run(|| {
        inv.classes
            .par_iter()
            .map(|c| subgroup_index(g, &c.representative, &c.generators))
            .collect()
    });
    // classes are sorted by order then representative, so the first
    // maximizer in representative order is found by an explicit comparison
    let mut best: Option<usize> = None;
    for (k, (i, _)) in indices.iter().enumerate() {
        best = match best {
            None => Some(k),
            Some(b) => {
                let (bi, _) = &indices[b];
                let better = *i > *bi
                    || (*i == *bi
                        && inv.classes[k]
                            .representative
                            .bits()
                            .lex_cmp(inv.classes[b].representative.bits())
                            .is_lt());
                Some(if better { k } else { b })
            }
        };
    }
    let b = best.expect("the trivial class is always present");
    let whole_k = inv
        .classes
        .iter()
        .position(|c| c.representative == whole)
        .expect("the whole group is a class");
    Ok(JordanReport {
        label: g.label().to_string(),
        order: g.order(),
        whole_group_index: indices[whole_k].0,
        jordan: indices[b].0,
        witness_subgroup: inv.classes[b].representative.elements(),
        witness_abelian: indices[b].1.elements(),
        subgroup_classes: inv.len(),
        millis: start.elapsed().as_millis() as u64,
    })
}

/// Supremum of `J` over a finite family.
pub fn jordan_sup<'a>(
    groups: impl IntoIterator<Item = &'a GroupTable>,
    opts: &EngineOptions,
) -> Result<usize, EngineError> {
    let mut best = 1;
    for g in groups {
        best = best.max(jordan_constant(g, opts)?.jordan);
    }
    Ok(best)
}
