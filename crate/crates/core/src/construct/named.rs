//! Named groups from closed formulas or concrete realizations.

use crate::algebra::{
    alternating_generators, binary_icosahedral_generators, binary_tetrahedral_generators,
    classical_generators, symmetric_generators, ClassicalKind, FieldDesc, Mat,
};
use crate::kernel::{build_from_concrete, ConcreteGroup, GroupTable, DEFAULT_CLOSURE_CAP};

use super::ConstructError;

pub fn cyclic(n: usize) -> GroupTable {
    GroupTable::cyclic(n).with_label(format!("C({n})"))
}

fn from_formula(order: usize, label: String, f: impl Fn(usize, usize) -> usize) -> GroupTable {
    let mut mul = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            mul.push(f(a, b) as u16);
        }
    }
    GroupTable::from_trusted(order, mul, label)
}

/// Dihedral group of order `2n`: `r^k s^e` at index `e * n + k`.
pub fn dihedral(n: usize) -> GroupTable {
    from_formula(2 * n, format!("D({n})"), |a, b| {
        let (k1, e1) = (a % n, a / n);
        let (k2, e2) = (b % n, b / n);
        let k = if e1 == 0 { k1 + k2 } else { k1 + n - k2 };
        ((e1 + e2) % 2) * n + k % n
    })
}

/// Dicyclic group of order `order = 4n`: `a^k x^e` at index `e * 2n + k`,
/// with `a^{2n} = 1`, `x^2 = a^n`, `x a x^-1 = a^-1`.
pub fn dicyclic(order: usize) -> GroupTable {
    let m = order / 2;
    let n = order / 4;
    from_formula(order, format!("Dic({order})"), |a, b| {
        let (k1, e1) = (a % m, a / m);
        let (k2, e2) = (b % m, b / m);
        let mut k = if e1 == 0 { k1 + k2 } else { k1 + m - k2 };
        if e1 == 1 && e2 == 1 {
            k += n;
        }
        ((e1 + e2) % 2) * m + k % m
    })
}

pub fn symmetric(n: usize) -> Result<GroupTable, ConstructError> {
    let g = build_from_concrete(&symmetric_generators(n)?, 10_000, format!("S({n})"))?;
    Ok(g.table)
}

pub fn alternating(n: usize) -> Result<GroupTable, ConstructError> {
    let g = build_from_concrete(&alternating_generators(n)?, 10_000, format!("A({n})"))?;
    Ok(g.table)
}

/// Binary tetrahedral group as Hurwitz unit quaternions.
pub fn tstar() -> Result<GroupTable, ConstructError> {
    Ok(build_from_concrete(&binary_tetrahedral_generators(), 100, "Tstar")?.table)
}

/// Binary icosahedral group as unit icosians.
pub fn istar() -> Result<GroupTable, ConstructError> {
    Ok(build_from_concrete(&binary_icosahedral_generators(), 200, "Istar")?.table)
}

pub fn classical(kind: ClassicalKind, q: usize) -> Result<GroupTable, ConstructError> {
    let label = match kind {
        ClassicalKind::SL => format!("SL(2,{q})"),
        ClassicalKind::GL => format!("GL(2,{q})"),
    };
    Ok(build_from_concrete(&classical_generators(kind, q)?, DEFAULT_CLOSURE_CAP, label)?.table)
}

/// The extraspecial group `2^{1+4}` of minus type as 4x4 matrices over
/// `F_5`: Kronecker products of a quaternion pair with the identity and of
/// the identity with a dihedral pair.
pub fn es32minus_concrete() -> Result<ConcreteGroup<Mat>, ConstructError> {
    let f = FieldDesc::prime(5);
    let id = Mat::identity(f, 2);
    let qi = Mat::from_rows(f, &[&[2, 0], &[0, 3]]);
    let qj = Mat::from_rows(f, &[&[0, 1], &[4, 0]]);
    let r = Mat::from_rows(f, &[&[0, 4], &[1, 0]]);
    let s = Mat::from_rows(f, &[&[1, 0], &[0, 4]]);
    let gens = vec![qi.kron(&id)?, qj.kron(&id)?, id.kron(&r)?, id.kron(&s)?];
    Ok(build_from_concrete(&gens, 100, "ES32minus")?)
}
