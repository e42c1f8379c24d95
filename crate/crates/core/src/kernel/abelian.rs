use super::{GroupTable, KernelError, SubSet};

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut ps = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            ps.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        ps.push(n);
    }
    ps
}

/// Invariant factors `d_1 | d_2 | ... | d_k` (all `> 1`) of an abelian subgroup.
///
/// For each prime `p`, the number of elements killed by `p^k` is `p^{s_k}`,
/// and `s_k - s_{k-1}` counts the cyclic `p`-factors of order at least `p^k`.
pub fn abelian_invariants(g: &GroupTable, s: &SubSet) -> Result<Vec<usize>, KernelError> {
    if !g.is_abelian_subset(s) {
        return Err(KernelError::NotAbelian);
    }
    let orders: Vec<usize> = s.bits().iter().map(|x| g.elt_order(x)).collect();
    let mut factors: Vec<usize> = Vec::new();
    for p in prime_factors(s.size()) {
        // reach[k-1] = number of cyclic p-factors of order at least p^k
        let mut reach: Vec<usize> = Vec::new();
        let mut prev_rank = 0usize;
        for k in 1.. {
            let pk = p.pow(k);
            let mut killed = orders.iter().filter(|&&o| pk % o == 0).count();
            let mut rank = 0usize;
            while killed > 1 {
                killed /= p;
                rank += 1;
            }
            if rank == prev_rank {
                break;
            }
            reach.push(rank - prev_rank);
            prev_rank = rank;
        }
        let m = reach.first().copied().unwrap_or(0);
        let mut per_factor: Vec<u32> = (0..m)
            .map(|j| reach.iter().filter(|&&c| c > j).count() as u32)
            .collect();
        per_factor.sort_unstable();
        if factors.len() < m {
            let pad = m - factors.len();
            let mut nf = vec![1usize; pad];
            nf.extend(factors);
            factors = nf;
        }
        let off = factors.len() - m;
        for (i, e) in per_factor.into_iter().enumerate() {
            factors[off + i] *= p.pow(e);
        }
    }
    Ok(factors)
}

/// Invariant factors of `G / G'`.
pub fn abelianization_invariants(g: &GroupTable) -> Vec<usize> {
    let d = g.derived_subgroup(&SubSet::whole(g));
    let (q, _) = g.quotient(&d).expect("the derived subgroup is normal");
    abelian_invariants(&q, &SubSet::whole(&q)).expect("G/G' is abelian")
}

#[cfg(test)]
mod tests {
    use super::super::testgroups::*;
    use super::*;

    fn direct(a: &GroupTable, b: &GroupTable) -> GroupTable {
        let (n, m) = (a.order(), b.order());
        let mut mul = Vec::new();
        for x in 0..n * m {
            for y in 0..n * m {
                mul.push((a.mul(x / m, y / m) * m + b.mul(x % m, y % m)) as u16);
            }
        }
        GroupTable::from_trusted(n * m, mul, "prod")
    }

    #[test]
    fn invariants_of_products() {
        let inv = |g: &GroupTable| abelian_invariants(g, &SubSet::whole(g)).unwrap();
        assert_eq!(inv(&GroupTable::cyclic(1)), Vec::<usize>::new());
        assert_eq!(inv(&GroupTable::cyclic(12)), vec![12]);
        let c6 = GroupTable::cyclic(6);
        assert_eq!(inv(&direct(&c6, &c6)), vec![6, 6]);
        let c2 = GroupTable::cyclic(2);
        let c4 = GroupTable::cyclic(4);
        assert_eq!(inv(&direct(&c2, &c4)), vec![2, 4]);
        assert_eq!(
            inv(&direct(&direct(&c2, &c4), &GroupTable::cyclic(3))),
            vec![2, 12]
        );
        assert_eq!(inv(&direct(&GroupTable::cyclic(3), &c6)), vec![3, 6]);
        assert_eq!(inv(&direct(&direct(&c2, &c2), &c4)), vec![2, 2, 4]);
        assert_eq!(inv(&direct(&c4, &GroupTable::cyclic(8))), vec![4, 8]);
    }

    #[test]
    fn not_abelian_error() {
        let g = q8();
        assert_eq!(
            abelian_invariants(&g, &SubSet::whole(&g)),
            Err(KernelError::NotAbelian)
        );
        assert_eq!(abelianization_invariants(&g), vec![2, 2]);
        assert_eq!(abelianization_invariants(&s3()), vec![2]);
    }
}
