use serde::{Deserialize, Serialize};

use crate::engine::{normal_abelian_profile, AbelianType};
use crate::kernel::{
    abelian_invariants, abelianization_invariants, GroupMap, GroupTable, IsoResult,
};

use super::{Builder, GroupExpr};

/// Isomorphism-invariant checks a constructed table must satisfy.
/// Unset fields are not checked.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub order: Option<usize>,
    pub center: Option<Vec<usize>>,
    pub abelianization: Option<Vec<usize>>,
    /// `(element order, number of elements)` for every order that occurs.
    pub census: Option<Vec<(usize, usize)>>,
    /// The set of isomorphism types of normal abelian subgroups.
    pub profile: Option<Vec<AbelianType>>,
    pub iso_reference: Option<GroupExpr>,
    pub involutions: Option<usize>,
    /// `(n, present)`: whether some involution has index `>= n`, i.e. lies
    /// outside a normal subgroup stored in the first `n` indices.
    pub involution_outside_prefix: Option<(usize, bool)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateReport {
    pub checks: Vec<CheckOutcome>,
    /// Isomorphism onto the reference, when one was requested and found.
    pub iso_witness: Option<GroupMap>,
}

impl CertificateReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Exhaustive isomorphism searches are only attempted below this order.
pub const ISO_SEARCH_CAP: usize = 1200;

impl Certificate {
    pub fn with_order(order: usize) -> Self {
        Certificate {
            order: Some(order),
            ..Default::default()
        }
    }

    pub fn is_empty(&self) -> bool {
        *self == Certificate::default()
    }

    pub fn check(&self, g: &GroupTable, builder: &Builder) -> CertificateReport {
        let mut checks = Vec::new();
        let mut push = |name: &str, passed: bool, detail: String| {
            checks.push(CheckOutcome {
                name: name.to_string(),
                passed,
                detail,
            });
        };
        if let Some(o) = self.order {
            push(
                "order",
                g.order() == o,
                format!("expected {o}, got {}", g.order()),
            );
        }
        if let Some(c) = &self.center {
            let got = abelian_invariants(g, &g.center()).expect("the centre is abelian");
            push("center", &got == c, format!("expected {c:?}, got {got:?}"));
        }
        if let Some(a) = &self.abelianization {
            let got = abelianization_invariants(g);
            push(
                "abelianization",
                &got == a,
                format!("expected {a:?}, got {got:?}"),
            );
        }
        if let Some(c) = &self.census {
            let got = census(g);
            push("census", &got == c, format!("expected {c:?}, got {got:?}"));
        }
        if let Some(n) = self.involutions {
            let got = g.involution_count();
            push("involutions", got == n, format!("expected {n}, got {got}"));
        }
        if let Some((n, present)) = self.involution_outside_prefix {
            let got = (n..g.order()).any(|x| g.elt_order(x) == 2);
            push(
                "involution outside the normal subgroup",
                got == present,
                format!("expected {present}, got {got}"),
            );
        }
        if let Some(p) = &self.profile {
            let got = normal_abelian_profile(g).types();
            let show = |v: &[AbelianType]| {
                v.iter()
                    .map(|t| t.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            let mut want = p.clone();
            want.sort();
            want.dedup();
            push(
                "normal abelian profile",
                got == want,
                format!("expected {{{}}}, got {{{}}}", show(&want), show(&got)),
            );
        }
        let mut iso_witness = None;
        if let Some(r) = &self.iso_reference {
            let outcome = match builder.candidates(r) {
                Err(e) => (false, format!("reference {r} failed to build: {e}")),
                Ok(refs) => {
                    let mut res = (false, format!("not isomorphic to any candidate for {r}"));
                    for h in refs {
                        match g.is_isomorphic(&h, ISO_SEARCH_CAP) {
                            IsoResult::Isomorphic(m) => {
                                iso_witness = Some(m);
                                res = (true, format!("isomorphic to {r}"));
                                break;
                            }
                            IsoResult::Indeterminate => {
                                res = (
                                    false,
                                    format!("order above the isomorphism search cap for {r}"),
                                );
                            }
                            IsoResult::NotIsomorphic => {}
                        }
                    }
                    res
                }
            };
            push("isomorphism", outcome.0, outcome.1);
        }
        CertificateReport {
            checks,
            iso_witness,
        }
    }
}

/// `(element order, count)` pairs in increasing order.
pub fn census(g: &GroupTable) -> Vec<(usize, usize)> {
    let mut counts = std::collections::BTreeMap::new();
    for &o in g.element_orders() {
        *counts.entry(o as usize).or_insert(0) += 1;
    }
    counts.into_iter().collect()
}
