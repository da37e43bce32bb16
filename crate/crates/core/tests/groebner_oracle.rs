//! Reduced grevlex bases compared element-for-element against sympy output
//! frozen in `golden/`. See `golden/oracle_gb.py` for how the cases and the
//! expected bases were produced.

mod common;

use common::load;
use sphere_forge::polyring::{reduced_groebner_basis, Budget, MonomialOrder, Polynomial};

fn sorted(mut v: Vec<Polynomial>) -> Vec<Polynomial> {
    v.sort_by(|a, b| {
        MonomialOrder::Grevlex.compare(b.leading_monomial().unwrap().exponents(), a.leading_monomial().unwrap().exponents())
    });
    v
}

fn check_file(text: &str, expected_cases: usize) {
    let cases = load(text);
    assert_eq!(cases.len(), expected_cases);
    for case in cases {
        let gb = reduced_groebner_basis(&case.gens, &MonomialOrder::Grevlex, &Budget::default()).unwrap();
        let ours: Vec<Polynomial> = gb.elements().iter().map(|e| e.to_ring(&case.ring).unwrap()).collect();
        assert_eq!(sorted(ours), sorted(case.basis.clone()), "{}", case.seed);
    }
}

#[test]
fn small_random_ideals_match_oracle() {
    check_file(include_str!("golden/grevlex_random.txt"), 20);
}

#[test]
fn dense_random_ideals_match_oracle() {
    check_file(include_str!("golden/grevlex_dense.txt"), 20);
}
