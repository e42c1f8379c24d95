//! Group constructions: named groups, products and extensions, selected and
//! checked through certificates.

mod certificate;
mod combinators;
mod es1920;
mod expr;
mod named;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::algebra::{AlgebraError, ClassicalKind};
use crate::kernel::{GroupMap, GroupTable, KernelError, DEFAULT_CLOSURE_CAP};

pub use certificate::{census, Certificate, CertificateReport, CheckOutcome, ISO_SEARCH_CAP};
pub use combinators::{
    action_through_sign, central_product, cyclic_extension, direct, direct_projections, homs_to_c2,
    inversion, outer_involutions, semidirect, swap2, swap_map,
};
pub use es1920::build_es1920;
pub use expr::{Action, AutSel, GroupExpr, Named, ZSel};
pub use named::{
    alternating, classical, cyclic, dicyclic, dihedral, es32minus_concrete, istar, symmetric, tstar,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("parse error at position {pos}: {message}")]
    Parse { pos: usize, message: String },
    #[error("invalid construction: {0}")]
    BadParameter(String),
    #[error("group of order {order} exceeds the cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("the action is not a homomorphism into the automorphism group")]
    NotAHomomorphism,
    #[error("a designated subgroup is not central")]
    NotCentral,
    #[error("the designated central subgroups are not isomorphic")]
    NotIsomorphicCenters,
    #[error("inconsistent cyclic extension: {0}")]
    InconsistentExtension(String),
    #[error("certificate failed: {0}")]
    CertificateFailed(String),
    #[error("no candidate satisfies the construction for {0}")]
    NoCandidate(String),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Automorphism searches in action selectors are limited to this order.
const AUT_CAP: usize = 512;

/// At most this many candidate actions are tried for one expression.
pub const MAX_CANDIDATES: usize = 64;

fn cache() -> &'static Mutex<HashMap<String, Arc<GroupTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<GroupTable>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Builds tables from expressions.
///
/// Results are memoized process-wide under the canonical rendering of the
/// expression. Building is deterministic, so a race between two builders
/// inserts the same table twice and either copy is correct.
#[derive(Debug, Clone)]
pub struct Builder {
    cap: usize,
}

impl Default for Builder {
    fn default() -> Self {
        Builder::new()
    }
}

impl Builder {
    pub fn new() -> Self {
        Builder {
            cap: DEFAULT_CLOSURE_CAP,
        }
    }

    /// Largest order any intermediate or final table may have.
    pub fn with_cap(cap: usize) -> Self {
        Builder { cap }
    }

    pub fn build_str(&self, text: &str) -> Result<Arc<GroupTable>, ConstructError> {
        self.build(&text.parse()?)
    }

    /// The first candidate for the expression (for named groups with a
    /// built-in certificate, the first one passing it).
    pub fn build(&self, e: &GroupExpr) -> Result<Arc<GroupTable>, ConstructError> {
        let key = e.to_string();
        if let Some(g) = cache().lock().unwrap().get(&key) {
            if g.order() > self.cap {
                return Err(ConstructError::CapExceeded {
                    order: g.order(),
                    cap: self.cap,
                });
            }
            return Ok(g.clone());
        }
        let g = self
            .candidates_upto(e, 1)?
            .into_iter()
            .next()
            .ok_or_else(|| ConstructError::NoCandidate(key.clone()))?;
        let g = Arc::new(g);
        cache()
            .lock()
            .unwrap()
            .entry(key)
            .or_insert_with(|| g.clone());
        Ok(g)
    }

    /// Every table the expression can denote, one per choice of action at
    /// the top level (subexpressions use their first candidate), in a fixed
    /// order.
    pub fn candidates(&self, e: &GroupExpr) -> Result<Vec<GroupTable>, ConstructError> {
        self.candidates_upto(e, MAX_CANDIDATES)
    }

    /// The first candidate passing `cert`, with the passing report. Fails
    /// with the first failing check of the first candidate otherwise.
    pub fn build_certified(
        &self,
        e: &GroupExpr,
        cert: &Certificate,
    ) -> Result<(Arc<GroupTable>, CertificateReport), ConstructError> {
        if cert.is_empty() {
            let g = self.build(e)?;
            return Ok((
                g,
                CertificateReport {
                    checks: Vec::new(),
                    iso_witness: None,
                },
            ));
        }
        let mut first_failure = None;
        for g in self.candidates(e)? {
            let report = cert.check(&g, self);
            if report.passed() {
                return Ok((Arc::new(g), report));
            }
            if first_failure.is_none() {
                first_failure = report.first_failure().cloned();
            }
        }
        Err(ConstructError::CertificateFailed(match first_failure {
            Some(c) => format!("{} for {e}: {}", c.name, c.detail),
            None => format!("no candidate for {e}"),
        }))
    }

    fn candidates_upto(
        &self,
        e: &GroupExpr,
        limit: usize,
    ) -> Result<Vec<GroupTable>, ConstructError> {
        let label = e.to_string();
        let mut out = match e {
            GroupExpr::Named(n) => vec![self.named(n)?],
            GroupExpr::Direct(l, r) => vec![direct(&*self.build(l)?, &*self.build(r)?, self.cap)?],
            GroupExpr::Swap2(g) => vec![swap2(&*self.build(g)?, self.cap)?],
            GroupExpr::CentralProduct(l, r) => {
                vec![self.cprod(&*self.build(l)?, &*self.build(r)?)?]
            }
            GroupExpr::Semidirect(n, h, a) => self.semidirect_candidates(n, h, *a, limit)?,
            GroupExpr::CyclicExt(n, a, m, z) => self.cext_candidates(n, *a, *m, *z, limit)?,
        };
        for g in &mut out {
            *g = std::mem::replace(g, GroupTable::cyclic(1)).with_label(label.clone());
        }
        Ok(out)
    }

    fn named(&self, n: &Named) -> Result<GroupTable, ConstructError> {
        if n.order() > self.cap {
            return Err(ConstructError::CapExceeded {
                order: n.order(),
                cap: self.cap,
            });
        }
        let certified = |e: &str, cert: Certificate| -> Result<GroupTable, ConstructError> {
            let (g, _) = self.build_certified(&e.parse()?, &cert)?;
            Ok((*g).clone())
        };
        Ok(match *n {
            Named::C(k) => cyclic(k),
            Named::D(k) => dihedral(k),
            Named::Dic(k) => dicyclic(k),
            Named::S(k) => symmetric(k)?,
            Named::A(k) => alternating(k)?,
            Named::Q8 => dicyclic(8),
            Named::Tstar => tstar()?,
            Named::Istar => istar()?,
            Named::SL(q) => classical(ClassicalKind::SL, q)?,
            Named::GL(q) => classical(ClassicalKind::GL, q)?,
            Named::Ostar => certified(
                "cext(Tstar,outer2,2,zcenter)",
                Certificate {
                    order: Some(48),
                    involutions: Some(1),
                    ..Default::default()
                },
            )?,
            Named::SL25dot2 => certified(
                "cext(SL(2,5),outer2,2,zcenter)",
                Certificate {
                    order: Some(240),
                    involution_outside_prefix: Some((120, false)),
                    ..Default::default()
                },
            )?,
            Named::SL25colon2 => certified(
                "cext(SL(2,5),outer2,2,id)",
                Certificate {
                    order: Some(240),
                    involution_outside_prefix: Some((120, true)),
                    ..Default::default()
                },
            )?,
            Named::ES32minus => {
                let g = es32minus_concrete()?.table;
                if g.involution_count() != 11 || g.center().size() != 2 {
                    return Err(ConstructError::CertificateFailed(
                        "ES32minus: expected 11 involutions and a centre of order 2".into(),
                    ));
                }
                g
            }
            Named::ES1920 => build_es1920()?,
        })
    }

    /// Central product identifying the full centres through the first
    /// isomorphism found between them.
    fn cprod(&self, a: &GroupTable, b: &GroupTable) -> Result<GroupTable, ConstructError> {
        let (za, ea) = a.subgroup_table(&a.center(), "Z");
        let (zb, eb) = b.subgroup_table(&b.center(), "Z");
        let iso = match za.is_isomorphic(&zb, AUT_CAP) {
            crate::kernel::IsoResult::Isomorphic(m) => m,
            _ => return Err(ConstructError::NotIsomorphicCenters),
        };
        let pairs: Vec<(usize, usize)> = (0..za.order())
            .map(|i| (ea.apply(i), eb.apply(iso.apply(i))))
            .collect();
        central_product(a, b, &pairs, self.cap)
    }

    fn semidirect_candidates(
        &self,
        n: &GroupExpr,
        h: &GroupExpr,
        action: Action,
        limit: usize,
    ) -> Result<Vec<GroupTable>, ConstructError> {
        let nt = self.build(n)?;
        let ht = self.build(h)?;
        let phis: Vec<GroupMap> = match action {
            Action::Invert => {
                if !nt.is_abelian() {
                    return Err(ConstructError::BadParameter(format!(
                        "invert needs an abelian group, {n} is not"
                    )));
                }
                vec![inversion(&nt)]
            }
            Action::Swap => match n {
                GroupExpr::Direct(l, r) if l == r => vec![swap_map(&*self.build(l)?)],
                _ => {
                    return Err(ConstructError::BadParameter(format!(
                        "swap needs a product of two equal factors, got {n}"
                    )))
                }
            },
            Action::Outer2 => outer_involutions(&nt, AUT_CAP)?,
        };
        let mut out = Vec::new();
        'outer: for sign in homs_to_c2(&ht) {
            for phi in &phis {
                if out.len() >= limit {
                    break 'outer;
                }
                let act = action_through_sign(nt.order(), &sign, phi);
                out.push(semidirect(&nt, &ht, &act, self.cap)?);
            }
        }
        if out.is_empty() {
            return Err(ConstructError::NoCandidate(format!(
                "semi({n},{h},{action})"
            )));
        }
        Ok(out)
    }

    fn cext_candidates(
        &self,
        n: &GroupExpr,
        aut: AutSel,
        m: usize,
        z: ZSel,
        limit: usize,
    ) -> Result<Vec<GroupTable>, ConstructError> {
        let nt = self.build(n)?;
        let zel = match z {
            ZSel::Id => 0,
            ZSel::ZCenter => {
                let inv: Vec<usize> = nt
                    .center()
                    .elements()
                    .into_iter()
                    .filter(|&x| nt.elt_order(x) == 2)
                    .collect();
                match inv[..] {
                    [x] => x,
                    _ => {
                        return Err(ConstructError::BadParameter(format!(
                            "zcenter needs a unique central involution, {n} has {}",
                            inv.len()
                        )))
                    }
                }
            }
        };
        let phis = match aut {
            AutSel::Id => vec![GroupMap::identity(nt.order())],
            AutSel::Outer2 => outer_involutions(&nt, AUT_CAP)?,
        };
        let mut out = Vec::new();
        for phi in phis {
            if out.len() >= limit {
                break;
            }
            if !m.is_multiple_of(phi.self_order()) || phi.apply(zel) != zel {
                continue;
            }
            out.push(cyclic_extension(&nt, &phi, m, zel, self.cap)?);
        }
        if out.is_empty() {
            return Err(ConstructError::NoCandidate(format!("cext over {n}")));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{IsoResult, SubSet};

    fn b() -> Builder {
        Builder::new()
    }

    #[test]
    fn named_orders() {
        for (e, o) in [
            ("C(7)", 7),
            ("D(6)", 12),
            ("Dic(12)", 12),
            ("S(4)", 24),
            ("A(5)", 60),
            ("Q8", 8),
            ("Tstar", 24),
            ("Ostar", 48),
            ("Istar", 120),
            ("SL(2,3)", 24),
            ("GL(2,3)", 48),
            ("SL(2,9)", 720),
            ("SL25dot2", 240),
            ("SL25colon2", 240),
            ("ES32minus", 32),
            ("Tstar x Tstar", 576),
            ("swap2(Dic(12))", 288),
            ("swap2(SL(2,3))", 1152),
        ] {
            let g = b().build_str(e).unwrap();
            assert_eq!(g.order(), o, "{e}");
            assert_eq!(g.label(), e.parse::<GroupExpr>().unwrap().to_string());
        }
    }

    #[test]
    fn ostar_has_one_involution_and_split_version_is_gl23() {
        let o = b().build_str("Ostar").unwrap();
        assert_eq!(o.involution_count(), 1);
        let split = b().build_str("cext(Tstar,outer2,2,id)").unwrap();
        let gl = b().build_str("GL(2,3)").unwrap();
        assert!(matches!(
            split.is_isomorphic(&gl, 100),
            IsoResult::Isomorphic(_)
        ));
        assert!(!o.is_isomorphic(&gl, 100).is_isomorphic());
    }

    #[test]
    fn sl25_extensions() {
        let dot = b().build_str("SL25dot2").unwrap();
        let colon = b().build_str("SL25colon2").unwrap();
        assert!(!(120..240).any(|x| dot.elt_order(x) == 2));
        assert!((120..240).any(|x| colon.elt_order(x) == 2));
        assert!(!dot.is_isomorphic(&colon, 300).is_isomorphic());
        // -1 is a square mod 5, so diag(1,-1) acts on SL(2,5) as an inner
        // automorphism and the determinant +-1 subgroup of GL(2,5) is a
        // central product with C4 rather than the split extension
        let gens = crate::algebra::classical_generators(ClassicalKind::GL, 5).unwrap();
        let gl = crate::kernel::build_from_concrete(&gens, 1000, "GL(2,5)").unwrap();
        let pm = (0..gl.table.order()).filter(|&i| [1, 4].contains(&gl.elements[i].det()));
        let pm = SubSet::from_bits(crate::bitset::BitSet::from_indices(480, pm));
        assert!(gl.table.is_subgroup(pm.bits()));
        let (sub, _) = gl.table.subgroup_table(&pm, "SL+-");
        assert!(!colon.is_isomorphic(&sub, 300).is_isomorphic());
        let central = b().build_str("cext(SL(2,5),id,2,zcenter)").unwrap();
        assert!(matches!(
            central.is_isomorphic(&sub, 300),
            IsoResult::Isomorphic(_)
        ));
    }

    #[test]
    fn cprod_gives_minus_type() {
        let g = b().build_str("cprod(Q8,D(4))").unwrap();
        assert_eq!(g.order(), 32);
        assert_eq!(g.involution_count(), 11);
        let plus = b().build_str("cprod(D(4),D(4))").unwrap();
        assert_eq!(plus.involution_count(), 19);
        let es = b().build_str("ES32minus").unwrap();
        assert!(matches!(g.is_isomorphic(&es, 64), IsoResult::Isomorphic(_)));
        assert_eq!(b().build_str("cprod(C(2),C(2))").unwrap().order(), 2);
        assert_eq!(
            b().build_str("cprod(C(2),C(3))").unwrap_err(),
            ConstructError::NotIsomorphicCenters
        );
    }

    #[test]
    fn certified_searches() {
        let (g, rep) = b()
            .build_certified(
                &"semi(C(12),C(2),outer2)".parse().unwrap(),
                &Certificate {
                    iso_reference: Some("C(4) x S(3)".parse().unwrap()),
                    ..Default::default()
                },
            )
            .unwrap();
        assert_eq!(g.order(), 24);
        assert!(rep.iso_witness.is_some());
        let err = b()
            .build_certified(&"C(6)".parse().unwrap(), &Certificate::with_order(7))
            .unwrap_err();
        assert!(matches!(err, ConstructError::CertificateFailed(_)));
    }

    #[test]
    fn selector_errors() {
        assert!(matches!(
            b().build_str("semi(S(3),C(2),invert)"),
            Err(ConstructError::BadParameter(_))
        ));
        assert!(matches!(
            b().build_str("semi(C(3) x C(4),C(2),swap)"),
            Err(ConstructError::BadParameter(_))
        ));
        assert!(b().build_str("cext(C(6),id,2,zcenter)").is_ok());
        assert!(matches!(
            b().build_str("cext(C(3),id,2,zcenter)"),
            Err(ConstructError::BadParameter(_))
        ));
        assert!(matches!(
            b().build_str("semi(C(3),C(3),invert)"),
            Err(ConstructError::NoCandidate(_))
        ));
        assert!(matches!(
            Builder::with_cap(100).build_str("S(5)"),
            Err(ConstructError::CapExceeded { .. })
        ));
    }

    #[test]
    fn builds_are_deterministic() {
        let x = Builder::new()
            .candidates(&"semi(Tstar,C(4),outer2)".parse().unwrap())
            .unwrap();
        let y = Builder::new()
            .candidates(&"semi(Tstar,C(4),outer2)".parse().unwrap())
            .unwrap();
        assert_eq!(x, y);
        let n = SubSet::from_bits(crate::bitset::BitSet::from_indices(96, 0..24));
        assert!(x.iter().all(|g| g.is_normal(&n)));
    }
}
