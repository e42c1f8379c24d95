//! Property checks shared by the core test suite and the acceptance run.
//! Each function panics on the first violation.

use std::sync::Arc;

use jordan_core::construct::{direct, direct_projections, Builder};
use jordan_core::engine::{
    jordan_constant, normal_abelian_profile, subgroup_classes, subgroup_index, EngineOptions,
};
use jordan_core::kernel::GroupTable;
use jordan_core::suite::{report, run_verification, Corpus, Selection};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn build(e: &str) -> Arc<GroupTable> {
    Builder::new()
        .build_str(e)
        .unwrap_or_else(|err| panic!("{e}: {err}"))
}

fn j(g: &GroupTable) -> usize {
    jordan_constant(g, &EngineOptions::default())
        .unwrap()
        .jordan
}

pub fn abelian_factors_do_not_change_j() {
    for h in ["S(3)", "Tstar", "GL(2,3)"] {
        let jh = j(&build(h));
        for a in ["C(2)", "C(6)", "C(2) x C(2)"] {
            let g = build(&format!("({a}) x {h}"));
            assert_eq!(j(&g), jh, "{a} x {h}");
        }
    }
}

pub fn normal_abelian_subgroups_of_products_project_to_normal_abelian_subgroups() {
    let pairs = [
        ("C(2)", "Dic(12)"),
        ("C(2)", "Tstar"),
        ("C(4)", "Dic(12)"),
        ("C(4)", "Tstar"),
        ("C(6)", "Dic(12)"),
        ("C(6)", "Tstar"),
        ("Dic(12)", "Dic(12)"),
        ("Tstar", "Tstar"),
        ("SL(2,3)", "S(3)"),
        ("Tstar", "C(3)"),
        ("S(3)", "S(3)"),
        ("D(4)", "Q8"),
        ("Q8", "Q8"),
        ("D(4)", "D(4)"),
        ("GL(2,3)", "S(3)"),
        ("Ostar", "C(6)"),
    ];
    for (l, r) in pairs {
        let (g1, g2) = (build(l), build(r));
        let g = direct(&g1, &g2, 10_000).unwrap();
        assert!(g.order() <= 576);
        let (p1, p2) = direct_projections(&g1, &g2);
        let profile = normal_abelian_profile(&g);
        assert!(!profile.entries.is_empty());
        for e in &profile.entries {
            let n = &e.subgroup;
            let (a, b) = (p1.image_of(n), p2.image_of(n));
            assert!(
                g1.is_subgroup(a.bits()) && g1.is_normal(&a) && g1.is_abelian_subset(&a),
                "{l} x {r}"
            );
            assert!(
                g2.is_subgroup(b.bits()) && g2.is_normal(&b) && g2.is_abelian_subset(&b),
                "{l} x {r}"
            );
            for x in n.elements() {
                assert!(a.contains(p1.apply(x)) && b.contains(p2.apply(x)));
            }
            // and the product of the projections is normal abelian too
            let n2 = g2.order();
            let prod: Vec<usize> = a
                .elements()
                .into_iter()
                .flat_map(|x| b.elements().into_iter().map(move |y| x * n2 + y))
                .collect();
            let prod = g.closure(&prod);
            assert_eq!(prod.size(), a.size() * b.size());
            assert!(g.is_normal(&prod) && g.is_abelian_subset(&prod) && n.is_subgroup_of(&prod));
        }
    }
}

pub fn inversion_semidirect_products_have_j_two() {
    for m in 3..=50 {
        assert_eq!(
            j(&build(&format!("semi(C({m}),C(2),invert)"))),
            2,
            "m = {m}"
        );
    }
}

pub fn dihedral_groups_have_j_two() {
    for n in 3..=12 {
        assert_eq!(j(&build(&format!("D({n})"))), 2, "n = {n}");
    }
}

/// `J(H) <= J(G)` for subgroups `H`, with equality attained.
fn check_monotone(expr: &str, sample: Option<usize>) {
    let g = build(expr);
    let opts = EngineOptions::default();
    let jg = j(&g);
    let inv = subgroup_classes(&g, &opts).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let picks: Vec<usize> = match sample {
        None => (0..inv.len()).collect(),
        Some(k) => (0..k).map(|_| rng.gen_range(0..inv.len())).collect(),
    };
    let mut attained = false;
    for k in picks {
        let c = &inv.classes[k];
        let (h, _) = g.subgroup_table(&c.representative, "H");
        let jh = j(&h);
        assert!(jh <= jg, "{expr}: class {k} has J = {jh} > {jg}");
        attained |= jh == jg;
    }
    if sample.is_none() {
        assert!(attained, "{expr}: no subgroup attains J");
    }
}

pub fn jordan_constant_is_monotone_on_subgroups() {
    for e in [
        "GL(2,3)",
        "semi(C(3),Ostar,invert)",
        "swap2(Dic(12))",
        "SL25dot2",
        "Tstar x C(3)",
        "Dic(12) x Dic(12)",
    ] {
        check_monotone(e, None);
    }
    for e in ["swap2(SL(2,3))", "SL(2,9)", "ES1920", "Tstar x Tstar"] {
        check_monotone(e, Some(20));
    }
}

pub fn index_is_constant_on_conjugacy_classes() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for e in [
        "ES1920",
        "swap2(SL(2,3))",
        "GL(2,3)",
        "semi(C(3),Ostar,invert)",
    ] {
        let g = build(e);
        let inv = subgroup_classes(&g, &EngineOptions::default()).unwrap();
        for _ in 0..25 {
            let c = &inv.classes[rng.gen_range(0..inv.len())];
            let x = rng.gen_range(0..g.order());
            let gens: Vec<usize> = c.generators.iter().map(|&y| g.conj(x, y)).collect();
            let conj = g.conjugate(&c.representative, x);
            assert_eq!(g.closure(&gens), conj);
            let (i1, _) = subgroup_index(&g, &c.representative, &c.generators);
            let (i2, _) = subgroup_index(&g, &conj, &gens);
            assert_eq!(i1, i2, "{e}");
        }
    }
}

fn small_family() -> Vec<String> {
    let mut v: Vec<String> = Vec::new();
    v.extend((1..=48).map(|n| format!("C({n})")));
    v.extend((3..=24).map(|n| format!("D({n})")));
    v.extend((2..=12).map(|k| format!("Dic({})", 4 * k)));
    v.extend(
        [
            "S(3)", "S(4)", "A(4)", "Q8", "Tstar", "GL(2,3)", "Ostar", "SL(2,3)",
        ]
        .map(String::from),
    );
    for a in 2..=12usize {
        for b in 2..=24usize {
            if a * b <= 48 && a <= b {
                v.push(format!("C({a}) x C({b})"));
            }
        }
    }
    for a in [2, 3, 4, 6, 8] {
        for h in ["S(3)", "Q8", "D(4)", "A(4)", "Dic(12)", "D(6)"] {
            let o: usize = build(h).order();
            if a * o <= 48 {
                v.push(format!("C({a}) x {h}"));
            }
        }
    }
    for m in 3..=24 {
        v.push(format!("semi(C({m}),C(2),invert)"));
        if 4 * m <= 48 {
            v.push(format!("semi(C({m}),C(4),invert)"));
        }
    }
    v.extend(
        [
            "semi(C(3),C(4),invert)",
            "semi(C(5),C(4),outer2)",
            "semi(C(3) x C(3),C(2),invert)",
            "semi(C(4) x C(4),C(2),swap)",
            "semi(C(12),C(2),outer2)",
            "semi(C(3),Q8,invert)",
            "cprod(Q8,D(4))",
            "cprod(D(4),D(4))",
            "S(3) x S(3)",
            "C(2) x C(2) x C(2) x C(2)",
            "C(2) x C(2) x C(2) x C(6)",
        ]
        .map(String::from),
    );
    let corpus = Corpus::builtin();
    v.extend(
        corpus
            .entries
            .iter()
            .filter(|e| e.order <= 48)
            .map(|e| e.expr_text.clone()),
    );
    v.sort();
    v.dedup();
    v
}

pub fn j_is_one_exactly_for_abelian_groups() {
    let b = Builder::new();
    let mut checked = 0;
    for e in small_family() {
        let g = b.build_str(&e).unwrap_or_else(|err| panic!("{e}: {err}"));
        if g.order() > 48 {
            continue;
        }
        assert_eq!(j(&g) == 1, g.is_abelian(), "{e}");
        checked += 1;
    }
    assert!(checked > 150, "only {checked} groups checked");
    // and for every corpus group whatever its order
    for entry in Corpus::builtin().entries {
        let g = b.build(&entry.expr).unwrap();
        let expected_abelian = entry.jordan == Some(1);
        assert_eq!(g.is_abelian(), expected_abelian, "{}", entry.label);
    }
}

pub fn verification_is_identical_across_thread_counts() {
    let corpus = Corpus::builtin();
    let render = |threads: Option<usize>| {
        let opts = EngineOptions {
            threads,
            ..Default::default()
        };
        report::to_json(&run_verification(&corpus, Selection::All, &opts).without_timing())
    };
    let one = render(Some(1));
    assert_eq!(one, render(Some(4)));
    assert_eq!(one, render(None));
    assert_eq!(one, render(Some(1)));
}

pub fn inventories_are_identical_across_thread_counts() {
    for e in ["swap2(SL(2,3))", "ES1920", "SL(2,9)"] {
        let g = build(e);
        let one = subgroup_classes(
            &g,
            &EngineOptions {
                threads: Some(1),
                ..Default::default()
            },
        )
        .unwrap();
        let many = subgroup_classes(
            &g,
            &EngineOptions {
                threads: Some(8),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(one, many, "{e}");
        let r1 = jordan_constant(
            &g,
            &EngineOptions {
                threads: Some(1),
                ..Default::default()
            },
        )
        .unwrap();
        let r8 = jordan_constant(
            &g,
            &EngineOptions {
                threads: Some(8),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(r1.without_timing(), r8.without_timing());
    }
}
