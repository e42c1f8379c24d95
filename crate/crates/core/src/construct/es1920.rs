//! The perfect group `2^{1+4}_-.A5` of order 1920, built inside
//! `GL_4(F_5)` from the automorphisms of its extraspecial normal subgroup.

use crate::algebra::{solve_conjugation, FieldDesc, Mat, Perm};
use crate::engine::{normal_abelian_profile, normal_subgroups, AbelianType};
use crate::kernel::{build_from_concrete, GroupMap, GroupTable, SubSet};

use super::named::es32minus_concrete;
use super::ConstructError;

fn to_perm(m: &GroupMap) -> Perm {
    Perm::new(m.images().collect()).expect("automorphisms are permutations")
}

/// The automorphism group of a small table as a permutation group, with
/// generators added greedily in automorphism order until the closure has
/// the full size.
fn automorphism_group(
    e: &GroupTable,
) -> Result<(crate::kernel::ConcreteGroup<Perm>, Vec<GroupMap>), ConstructError> {
    let auts = e.automorphisms(512)?;
    let perms: Vec<Perm> = auts.iter().map(to_perm).collect();
    let mut gens = vec![perms[0].clone()];
    let mut group = build_from_concrete(&gens, auts.len(), "Aut")?;
    for p in &perms[1..] {
        if group.table.order() == auts.len() {
            break;
        }
        if group.index_of(p).is_none() {
            gens.push(p.clone());
            group = build_from_concrete(&gens, auts.len(), "Aut")?;
        }
    }
    Ok((group, auts))
}

/// Builds the group and checks its defining properties, failing with the
/// first check that does not hold.
pub fn build_es1920() -> Result<GroupTable, ConstructError> {
    let e = es32minus_concrete()?;
    let (aut, _) = automorphism_group(&e.table)?;
    let aut_map =
        |i: usize| GroupMap::new(32, 32, (0..32).map(|x| aut.elements[i].apply(x)).collect());

    let inner = SubSet::from_bits(crate::bitset::BitSet::from_indices(
        aut.table.order(),
        (0..aut.table.order()).filter(|&i| aut_map(i).is_inner(&e.table)),
    ));
    let (out, proj) = aut.table.quotient(&inner)?;
    if out.order() != 120 {
        return Err(ConstructError::CertificateFailed(format!(
            "outer automorphism group has order {}, expected 120",
            out.order()
        )));
    }
    let alt = out.derived_subgroup(&SubSet::whole(&out));
    let generators: Vec<Mat> = e
        .table
        .generators()
        .iter()
        .map(|&i| e.elements[i])
        .collect();
    let gen_idx: Vec<usize> = e.table.generators().to_vec();
    let mut lifts = Vec::new();
    for d in out.subgroup_generators(&alt) {
        let a = (0..aut.table.order())
            .find(|&i| proj.apply(i) == d)
            .expect("projections are onto");
        let alpha = aut_map(a);
        let targets: Vec<Mat> = gen_idx
            .iter()
            .map(|&i| e.elements[alpha.apply(i)])
            .collect();
        lifts.push(solve_conjugation(&generators, &targets)?.t);
    }

    let f = FieldDesc::prime(5);
    let mut all = generators.clone();
    all.extend(lifts);
    all.push(Mat::scalar(f, 4, 2));
    let ambient = build_from_concrete(&all, 10_000, "ambient")?;
    let core = ambient.table.perfect_core();
    let (g, _) = ambient.table.subgroup_table(&core, "ES1920");
    certify(&g)?;
    Ok(g)
}

fn certify(g: &GroupTable) -> Result<(), ConstructError> {
    let fail = |msg: String| Err(ConstructError::CertificateFailed(msg));
    if g.order() != 1920 {
        return fail(format!("order {} instead of 1920", g.order()));
    }
    if g.center().size() != 2 {
        return fail(format!("centre of order {}", g.center().size()));
    }
    let normals = normal_subgroups(g);
    let es: Vec<&SubSet> = normals.iter().filter(|s| s.size() == 32).collect();
    if es.len() != 1 {
        return fail(format!("{} normal subgroups of order 32", es.len()));
    }
    let e = es[0];
    let (et, _) = g.subgroup_table(e, "E");
    let reference = es32minus_concrete()?.table;
    if !et.is_isomorphic(&reference, 64).is_isomorphic() {
        return fail("the normal subgroup of order 32 is not extraspecial of minus type".into());
    }
    let (q, _) = g.quotient(e)?;
    if q.order() != 60 || normal_subgroups(&q).len() != 2 {
        return fail("the quotient by the extraspecial subgroup is not simple of order 60".into());
    }
    let mut inside: Vec<usize> = normals
        .iter()
        .filter(|s| s.is_subgroup_of(e))
        .map(|s| s.size())
        .collect();
    inside.dedup();
    if inside != [1, 2, 32] {
        return fail(format!(
            "normal subgroups inside the extraspecial subgroup have orders {inside:?}"
        ));
    }
    let types = normal_abelian_profile(g).types();
    if types != [AbelianType(vec![]), AbelianType(vec![2])] {
        return fail("normal abelian subgroups other than C1 and C2".into());
    }
    Ok(())
}
