use axial_core::exact::rat;
use axial_core::fusion::{
    central_charge, find_z2_gradings, frobenius_refine, fusion_weights, highest_weights, nontrivial_grading,
    refined_virasoro, seress_check, table_differences, virasoro_rules, weight,
};
use axial_core::{FusionRules, Rational};
use num_traits::{One, Zero};
use proptest::prelude::*;

const MODELS: [(u32, u32); 4] = [(4, 3), (5, 3), (5, 4), (7, 2)];

fn model() -> impl Strategy<Value = (u32, u32)> {
    prop::sample::select(MODELS.to_vec())
}

proptest! {
    #[test]
    fn weights_are_symmetric_under_reflection((p, q) in model(), r in 1u32..7, s in 1u32..4) {
        prop_assume!(r < p && s < q);
        prop_assert_eq!(weight(p, q, r, s), weight(p, q, p - r, q - s));
    }

    #[test]
    fn fusion_is_symmetric_and_representative_independent(
        (p, q) in model(), a in (1u32..7, 1u32..4), b in (1u32..7, 1u32..4)
    ) {
        prop_assume!(a.0 < p && a.1 < q && b.0 < p && b.1 < q);
        let reflect = |(r, s): (u32, u32)| (p - r, q - s);
        let ab = fusion_weights(p, q, a, b);
        prop_assert_eq!(&ab, &fusion_weights(p, q, b, a));
        prop_assert_eq!(&ab, &fusion_weights(p, q, reflect(a), b));
        prop_assert_eq!(&ab, &fusion_weights(p, q, a, reflect(b)));
        prop_assert_eq!(&ab, &fusion_weights(p, q, reflect(a), reflect(b)));
    }

    #[test]
    fn star_table_is_symmetric((p, q) in model()) {
        let rules = virasoro_rules(p, q).unwrap();
        for f in rules.fields() {
            for g in rules.fields() {
                prop_assert_eq!(rules.star(f, g), rules.star(g, f));
            }
        }
    }
}

#[test]
fn distinct_weight_counts() {
    // (p − 1)(q − 1)/2 distinct weights, plus the adjoined field 1.
    for (p, q) in MODELS {
        let expected = ((p - 1) * (q - 1) / 2) as usize;
        assert_eq!(highest_weights(p, q).unwrap().len(), expected, "V({p},{q})");
        assert_eq!(virasoro_rules(p, q).unwrap().fields().len(), expected + 1, "V({p},{q})");
    }
}

#[test]
fn one_is_the_identity_field() {
    for (p, q) in MODELS {
        let rules = virasoro_rules(p, q).unwrap();
        let one = Rational::one();
        for f in rules.fields() {
            assert_eq!(rules.star(&one, f).unwrap(), vec![f.clone()]);
        }
    }
}

#[test]
fn central_charges() {
    assert_eq!(central_charge(4, 3).unwrap(), rat(1, 2));
    assert_eq!(central_charge(5, 3).unwrap(), rat(-3, 5));
    assert_eq!(central_charge(5, 4).unwrap(), rat(7, 10));
    assert_eq!(central_charge(7, 2).unwrap(), rat(-68, 7));
}

#[test]
fn gradings_are_unique_where_expected() {
    for (p, q) in [(4, 3), (5, 3)] {
        let rules = virasoro_rules(p, q).unwrap();
        let all = find_z2_gradings(&rules);
        assert!(all[0].is_trivial());
        assert_eq!(all.iter().filter(|g| !g.is_trivial()).count(), 1, "V({p},{q})");
        assert!(nontrivial_grading(&rules).is_some());
    }
}

#[test]
fn associative_rules_have_only_the_trivial_grading() {
    let rules = FusionRules::associative(rat(1, 2));
    let all = find_z2_gradings(&rules);
    assert_eq!(all.len(), 1);
    assert!(all[0].is_trivial());
    assert!(nontrivial_grading(&rules).is_none());
}

#[test]
fn frobenius_refinement_drops_one_from_zero_star_zero() {
    for (p, q) in [(4, 3), (5, 3)] {
        let rules = virasoro_rules(p, q).unwrap();
        let zero = Rational::zero();
        assert!(rules.star(&zero, &zero).unwrap().contains(&Rational::one()));
        let refined = frobenius_refine(&rules).unwrap();
        assert_eq!(refined.star(&zero, &zero).unwrap(), vec![zero.clone()]);
        assert_eq!(table_differences(&rules, &refined).len(), 1);
        assert_eq!(refined, refined_virasoro(p, q).unwrap());
    }
    assert!(seress_check(&refined_virasoro(4, 3).unwrap()));
}

#[test]
fn json_round_trip() {
    for (p, q) in MODELS {
        let rules = virasoro_rules(p, q).unwrap();
        let text = serde_json::to_string(&rules).unwrap();
        let back: FusionRules = serde_json::from_str(&text).unwrap();
        assert_eq!(back, rules);
    }
}

#[test]
fn incomplete_tables_are_rejected() {
    let one = Rational::one();
    let zero = Rational::zero();
    let missing = FusionRules::new(rat(1, 2), vec![one.clone(), zero.clone()], [(one.clone(), one.clone(), vec![one.clone()])]);
    assert!(missing.is_err());
    let unknown = FusionRules::new(rat(1, 2), vec![one.clone()], [(one.clone(), one, vec![zero])]);
    assert!(unknown.is_err());
}
