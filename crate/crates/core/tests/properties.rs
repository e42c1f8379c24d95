mod common;

use common::props;
use jordan_core::construct::Builder;
use jordan_core::engine::{jordan_constant, EngineOptions};

#[test]
fn abelian_factors_do_not_change_j() {
    props::abelian_factors_do_not_change_j();
}

#[test]
fn normal_abelian_subgroups_of_products_project_to_normal_abelian_subgroups() {
    props::normal_abelian_subgroups_of_products_project_to_normal_abelian_subgroups();
}

#[test]
fn inversion_semidirect_products_have_j_two() {
    props::inversion_semidirect_products_have_j_two();
}

#[test]
fn dihedral_groups_have_j_two() {
    props::dihedral_groups_have_j_two();
}

#[test]
fn jordan_constant_is_monotone_on_subgroups() {
    props::jordan_constant_is_monotone_on_subgroups();
}

#[test]
fn index_is_constant_on_conjugacy_classes() {
    props::index_is_constant_on_conjugacy_classes();
}

#[test]
fn j_is_one_exactly_for_abelian_groups() {
    props::j_is_one_exactly_for_abelian_groups();
}

#[test]
fn verification_is_identical_across_thread_counts() {
    props::verification_is_identical_across_thread_counts();
}

#[test]
fn inventories_are_identical_across_thread_counts() {
    props::inventories_are_identical_across_thread_counts();
}

#[test]
fn trivial_group() {
    let g = Builder::new().build_str("C(1)").unwrap();
    let r = jordan_constant(&g, &EngineOptions::default()).unwrap();
    assert_eq!((r.jordan, r.whole_group_index), (1, 1));
    assert!(g.is_abelian());
}
