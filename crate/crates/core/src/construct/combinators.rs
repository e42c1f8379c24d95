use crate::kernel::{Elem, GroupMap, GroupTable, SubSet, MAX_TABLE_ORDER};

use super::ConstructError;

fn check_cap(order: usize, cap: usize) -> Result<(), ConstructError> {
    if order > cap.min(MAX_TABLE_ORDER) {
        Err(ConstructError::CapExceeded {
            order,
            cap: cap.min(MAX_TABLE_ORDER),
        })
    } else {
        Ok(())
    }
}

/// `G x H` with `(a, b)` stored at index `a * |H| + b`.
pub fn direct(g: &GroupTable, h: &GroupTable, cap: usize) -> Result<GroupTable, ConstructError> {
    let (m, n) = (g.order(), h.order());
    check_cap(m * n, cap)?;
    let mut mul = Vec::with_capacity(m * m * n * n);
    for a1 in 0..m {
        for b1 in 0..n {
            for a2 in 0..m {
                let a = g.mul(a1, a2) * n;
                for b2 in 0..n {
                    mul.push((a + h.mul(b1, b2)) as u16);
                }
            }
        }
    }
    Ok(GroupTable::from_trusted(
        m * n,
        mul,
        format!("{} x {}", g.label(), h.label()),
    ))
}

/// The two coordinate projections of [`direct`]`(g, h)`.
pub fn direct_projections(g: &GroupTable, h: &GroupTable) -> (GroupMap, GroupMap) {
    let n = h.order();
    let total = g.order() * n;
    (
        GroupMap::new(total, g.order(), (0..total).map(|x| x / n).collect()),
        GroupMap::new(total, n, (0..total).map(|x| x % n).collect()),
    )
}

fn is_automorphism(n: &GroupTable, phi: &GroupMap) -> bool {
    phi.domain_order() == n.order()
        && phi.codomain_order() == n.order()
        && phi.is_bijective()
        && phi.is_homomorphism(n, n)
}

/// `N ⋊ H` where `action[h]` is the automorphism of `N` induced by `h`.
/// The pair `(x, h)` is stored at index `h * |N| + x`, so `N` occupies the
/// first `|N|` indices.
pub fn semidirect(
    n: &GroupTable,
    h: &GroupTable,
    action: &[GroupMap],
    cap: usize,
) -> Result<GroupTable, ConstructError> {
    let (nn, hn) = (n.order(), h.order());
    check_cap(nn * hn, cap)?;
    if action.len() != hn || !action.iter().all(|a| is_automorphism(n, a)) {
        return Err(ConstructError::NotAHomomorphism);
    }
    for h1 in 0..hn {
        for h2 in 0..hn {
            let lhs = &action[h.mul(h1, h2)];
            if (0..nn).any(|x| lhs.apply(x) != action[h1].apply(action[h2].apply(x))) {
                return Err(ConstructError::NotAHomomorphism);
            }
        }
    }
    let total = nn * hn;
    let mut mul = vec![0u16; total * total];
    for h1 in 0..hn {
        for x1 in 0..nn {
            let row = &mut mul[(h1 * nn + x1) * total..][..total];
            for h2 in 0..hn {
                let base = h.mul(h1, h2) * nn;
                for x2 in 0..nn {
                    row[h2 * nn + x2] = (base + n.mul(x1, action[h1].apply(x2))) as u16;
                }
            }
        }
    }
    Ok(GroupTable::from_trusted(
        total,
        mul,
        format!("{} : {}", n.label(), h.label()),
    ))
}

/// The coordinate exchange on `direct(g, g)`.
pub fn swap_map(g: &GroupTable) -> GroupMap {
    let n = g.order();
    GroupMap::new(
        n * n,
        n * n,
        (0..n * n).map(|x| (x % n) * n + x / n).collect(),
    )
}

/// `(G x G) ⋊ C2` with the generator exchanging the coordinates.
pub fn swap2(g: &GroupTable, cap: usize) -> Result<GroupTable, ConstructError> {
    check_cap(2 * g.order() * g.order(), cap)?;
    let gg = direct(g, g, cap)?;
    let c2 = GroupTable::cyclic(2);
    let action = vec![GroupMap::identity(gg.order()), swap_map(g)];
    Ok(semidirect(&gg, &c2, &action, cap)?.with_label(format!("swap2({})", g.label())))
}

/// `(A x B) / {(z, ident(z)^-1)}` for central subgroups identified by the
/// pairs `(z, ident(z))`, which must list the whole designated subgroup of `A`.
pub fn central_product(
    a: &GroupTable,
    b: &GroupTable,
    ident: &[(Elem, Elem)],
    cap: usize,
) -> Result<GroupTable, ConstructError> {
    let za = SubSet::from_bits(crate::bitset::BitSet::from_indices(
        a.order(),
        ident.iter().map(|p| p.0),
    ));
    let zb = SubSet::from_bits(crate::bitset::BitSet::from_indices(
        b.order(),
        ident.iter().map(|p| p.1),
    ));
    let central = |g: &GroupTable, s: &SubSet| {
        g.is_subgroup(s.bits())
            && s.elements()
                .iter()
                .all(|&z| g.generators().iter().all(|&x| g.mul(x, z) == g.mul(z, x)))
    };
    if !central(a, &za) || !central(b, &zb) {
        return Err(ConstructError::NotCentral);
    }
    let mut img = vec![usize::MAX; a.order()];
    for &(x, y) in ident {
        img[x] = y;
    }
    let injective = zb.size() == ident.len() && za.size() == ident.len();
    let hom = ident.iter().all(|&(x, _)| {
        ident
            .iter()
            .all(|&(y, _)| img[a.mul(x, y)] == b.mul(img[x], img[y]))
    });
    if !injective || !hom {
        return Err(ConstructError::NotIsomorphicCenters);
    }
    let ab = direct(a, b, usize::MAX)?;
    let n = b.order();
    let d = crate::bitset::BitSet::from_indices(
        ab.order(),
        ident.iter().map(|&(x, y)| x * n + b.inv(y)),
    );
    let (q, _) = ab.quotient(&SubSet::from_bits(d))?;
    check_cap(q.order(), cap)?;
    Ok(q.with_label(format!("cprod({},{})", a.label(), b.label())))
}

/// `<N, t | t a t^-1 = phi(a), t^m = z>`, stored with `a t^k` at index
/// `k * |N| + a`.
pub fn cyclic_extension(
    n: &GroupTable,
    phi: &GroupMap,
    m: usize,
    z: Elem,
    cap: usize,
) -> Result<GroupTable, ConstructError> {
    let nn = n.order();
    check_cap(nn * m, cap)?;
    let bad = |why: &str| Err(ConstructError::InconsistentExtension(why.to_string()));
    if m == 0 {
        return bad("the extension degree must be positive");
    }
    if !is_automorphism(n, phi) {
        return bad("the map is not an automorphism");
    }
    if z >= nn || n.generators().iter().any(|&x| n.mul(x, z) != n.mul(z, x)) {
        return bad("the element is not central");
    }
    if phi.apply(z) != z {
        return bad("the automorphism moves the element");
    }
    let mut powers = vec![GroupMap::identity(nn)];
    for _ in 1..=m {
        powers.push(powers.last().unwrap().then(phi));
    }
    if powers[m] != GroupMap::identity(nn) {
        return bad("the automorphism does not have order dividing the degree");
    }
    let total = nn * m;
    let mut mul = vec![0u16; total * total];
    for i in 0..m {
        for a in 0..nn {
            let row = &mut mul[(i * nn + a) * total..][..total];
            for j in 0..m {
                let wrap = i + j >= m;
                let k = (i + j) % m;
                for b in 0..nn {
                    let mut c = n.mul(a, powers[i].apply(b));
                    if wrap {
                        c = n.mul(c, z);
                    }
                    row[j * nn + b] = (k * nn + c) as u16;
                }
            }
        }
    }
    Ok(GroupTable::from_trusted(
        total,
        mul,
        format!("{}.{}", n.label(), m),
    ))
}

/// Nontrivial homomorphisms to `C2`, as sign vectors (`true` for the
/// nontrivial image), in a fixed order determined by the generators.
pub fn homs_to_c2(h: &GroupTable) -> Vec<Vec<bool>> {
    let gens = h.generators().to_vec();
    let mut out = Vec::new();
    for mask in 1u32..(1 << gens.len()) {
        let mut sign: Vec<Option<bool>> = vec![None; h.order()];
        sign[0] = Some(false);
        let mut stack = vec![0];
        let mut ok = true;
        while let Some(x) = stack.pop() {
            let sx = sign[x].unwrap();
            for (k, &s) in gens.iter().enumerate() {
                let y = h.mul(x, s);
                let sy = sx ^ (mask >> k & 1 == 1);
                match sign[y] {
                    None => {
                        sign[y] = Some(sy);
                        stack.push(y);
                    }
                    Some(v) if v != sy => ok = false,
                    _ => {}
                }
            }
            if !ok {
                break;
            }
        }
        if ok {
            out.push(sign.into_iter().map(|s| s.unwrap()).collect());
        }
    }
    out
}

/// Automorphisms of order 2 that are not inner, in automorphism order.
pub fn outer_involutions(n: &GroupTable, cap: usize) -> Result<Vec<GroupMap>, ConstructError> {
    Ok(n.automorphisms(cap)?
        .into_iter()
        .filter(|a| a.self_order() == 2 && !a.is_inner(n))
        .collect())
}

/// Inversion on an abelian group.
pub fn inversion(n: &GroupTable) -> GroupMap {
    GroupMap::new(
        n.order(),
        n.order(),
        (0..n.order()).map(|x| n.inv(x)).collect(),
    )
}

/// Action of `h` through a sign vector: `phi` on odd elements, identity on
/// the rest.
pub fn action_through_sign(n_order: usize, sign: &[bool], phi: &GroupMap) -> Vec<GroupMap> {
    let id = GroupMap::identity(n_order);
    sign.iter()
        .map(|&s| if s { phi.clone() } else { id.clone() })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{abelian_invariants, IsoResult};

    fn c(n: usize) -> GroupTable {
        GroupTable::cyclic(n)
    }

    #[test]
    fn direct_products() {
        let g = direct(&c(2), &c(4), 100).unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.is_abelian());
        assert_eq!(
            abelian_invariants(&g, &SubSet::whole(&g)).unwrap(),
            vec![2, 4]
        );
        let (p1, p2) = direct_projections(&c(2), &c(4));
        assert!(p1.is_homomorphism(&g, &c(2)) && p2.is_homomorphism(&g, &c(4)));
        assert!(matches!(
            direct(&c(200), &c(200), 1000),
            Err(ConstructError::CapExceeded { .. })
        ));
        g.validate(1000).unwrap();
    }

    #[test]
    fn semidirect_inversion_is_dihedral() {
        let n = c(3);
        let h = c(2);
        let signs = homs_to_c2(&h);
        assert_eq!(signs.len(), 1);
        let act = action_through_sign(3, &signs[0], &inversion(&n));
        let s3 = semidirect(&n, &h, &act, 100).unwrap();
        s3.validate(1000).unwrap();
        assert!(!s3.is_abelian());
        assert!(
            s3.is_normal(&SubSet::from_bits(crate::bitset::BitSet::from_indices(
                6,
                0..3
            )))
        );
        // a map that is not a homomorphism H -> Aut(N)
        let bad = vec![inversion(&n), inversion(&n)];
        assert_eq!(
            semidirect(&n, &h, &bad, 100),
            Err(ConstructError::NotAHomomorphism)
        );
    }

    #[test]
    fn swap2_of_c2_is_dihedral_of_order_8() {
        let g = swap2(&c(2), 100).unwrap();
        g.validate(1000).unwrap();
        let d4 = semidirect(
            &c(4),
            &c(2),
            &action_through_sign(4, &homs_to_c2(&c(2))[0], &inversion(&c(4))),
            100,
        )
        .unwrap();
        assert!(matches!(
            g.is_isomorphic(&d4, 100),
            IsoResult::Isomorphic(_)
        ));
    }

    #[test]
    fn central_product_degenerate_and_errors() {
        let g = central_product(&c(2), &c(2), &[(0, 0), (1, 1)], 100).unwrap();
        assert_eq!(g.order(), 2);
        let s3 = crate::kernel::testgroups::s3();
        assert_eq!(
            central_product(&s3, &c(2), &[(0, 0), (3, 1)], 100),
            Err(ConstructError::NotCentral)
        );
        assert_eq!(
            central_product(&c(4), &c(4), &[(0, 0), (2, 1), (1, 2), (3, 3)], 100),
            Err(ConstructError::NotIsomorphicCenters)
        );
    }

    #[test]
    fn cyclic_extensions() {
        let n = c(3);
        let s3 = cyclic_extension(&n, &inversion(&n), 2, 0, 100).unwrap();
        s3.validate(1000).unwrap();
        assert!(!s3.is_abelian());
        // C4 as an extension of C2 with t^2 = z
        let c4 = cyclic_extension(&c(2), &GroupMap::identity(2), 2, 1, 100).unwrap();
        assert_eq!(c4.element_orders().iter().max(), Some(&4));
        assert!(matches!(
            cyclic_extension(&n, &inversion(&n), 3, 0, 100),
            Err(ConstructError::InconsistentExtension(_))
        ));
        assert!(matches!(
            cyclic_extension(&n, &inversion(&n), 2, 1, 100),
            Err(ConstructError::InconsistentExtension(_))
        ));
    }

    #[test]
    fn homs_to_c2_counts() {
        assert_eq!(homs_to_c2(&c(3)).len(), 0);
        assert_eq!(homs_to_c2(&c(6)).len(), 1);
        let v = direct(&c(2), &c(2), 10).unwrap();
        assert_eq!(homs_to_c2(&v).len(), 3);
        for s in homs_to_c2(&v) {
            assert_eq!(s.iter().filter(|&&b| b).count(), 2);
        }
    }
}
