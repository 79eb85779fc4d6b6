mod common;

use common::suites;

fn run(f: fn() -> suites::Outcome) {
    if let Err(e) = f() {
        panic!("{e}");
    }
}

#[test]
fn q2_bounds_global_dimension() {
    run(suites::q2_bounds_global_dimension);
}

#[test]
fn hom_vanishing_and_predecessors() {
    run(suites::hom_vanishing_and_predecessors);
}

#[test]
fn trisection_has_no_backward_maps() {
    run(suites::trisection_has_no_backward_maps);
}

#[test]
fn injective_dimension_is_dual_projective_dimension() {
    run(suites::injective_dimension_is_dual_projective_dimension);
}

#[test]
fn coordinate_morphisms_of_nonsplit_extensions() {
    run(suites::coordinate_morphisms_of_nonsplit_extensions);
}

#[test]
fn auslander_reiten_formula() {
    run(suites::auslander_reiten_formula);
}

#[test]
fn nakayama_oracle_agrees() {
    run(suites::nakayama_oracle_agrees);
}

#[test]
fn pd_lemma_equivalence() {
    run(suites::pd_lemma_equivalence);
}

#[test]
fn global_dimension_formula() {
    run(suites::global_dimension_formula);
}

#[test]
fn hom_vanishing_instance() {
    run(suites::hom_vanishing_instance);
}
