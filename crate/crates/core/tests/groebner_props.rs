use std::sync::Arc;

use proptest::prelude::*;

use hermitia::gf::{field_for_q, FieldElement, FieldSpec};
use hermitia::groebner::{buchberger, count_rational_points};
use hermitia::poly::{Monomial, Polynomial, Ring, TermOrder};

fn field(q: u32) -> Arc<FieldSpec> {
    Arc::new(field_for_q(q).unwrap())
}

/// Up to 3 polynomials in x, y with up to 4 terms of degree <= 4 each.
fn gens_strategy(size: u32) -> impl Strategy<Value = Vec<Vec<(u32, u32, u32)>>> {
    let term = (0u32..4, 0u32..4, 1..size);
    prop::collection::vec(prop::collection::vec(term, 1..5), 1..4)
}

fn build(ring: &Arc<Ring>, raw: &[Vec<(u32, u32, u32)>]) -> Vec<Polynomial> {
    let f = ring.field();
    raw.iter()
        .map(|terms| {
            Polynomial::from_terms(
                ring,
                terms.iter().map(|&(a, b, c)| (Monomial::xy(a, b), f.element(c).unwrap())),
            )
        })
        .filter(|p| !p.is_zero())
        .collect()
}

fn order_strategy() -> impl Strategy<Value = TermOrder> {
    prop_oneof![Just(TermOrder::DegRevLex), Just(TermOrder::Weighted { q: 2 })]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn basis_is_groebner_and_generates(raw in gens_strategy(4), ord in order_strategy()) {
        let ring = Ring::plane(field(2), ord);
        let gens = build(&ring, &raw);
        prop_assume!(!gens.is_empty());
        let gb = buchberger(&gens, ord).unwrap();
        prop_assert!(gb.verify());
        for g in &gens {
            prop_assert!(gb.contains(g).unwrap());
        }
        for g in gb.generators() {
            prop_assert!(g.leading_coeff().unwrap().is_one());
            prop_assert!(gb.normal_form(g).unwrap().is_zero());
        }
        let again = buchberger(gb.generators(), ord).unwrap();
        prop_assert_eq!(again.generators(), gb.generators());
    }

    #[test]
    fn rational_point_count_matches_evaluation(raw in gens_strategy(9)) {
        let f = field(3);
        let ring = Ring::plane(f.clone(), TermOrder::DegRevLex);
        let gens = build(&ring, &raw);
        let elements: Vec<FieldElement> = f.enumerate_elements();
        let mut brute = 0u64;
        for &x in &elements {
            for &y in &elements {
                if gens.iter().all(|g| g.evaluate_xy(x, y).is_zero()) {
                    brute += 1;
                }
            }
        }
        let counted = count_rational_points(&gens, &ring).unwrap();
        prop_assert_eq!(counted, brute);
        prop_assert!(counted <= 81);
    }
}
