mod common;

use std::cmp::Ordering as Cmp;

use common::*;
use ncbasis::orderings::{compare_by_decomposition, OrderingFunction};
use ncbasis::{MonomialOrdering, Word};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn compare_is_a_total_order(ord in admissible(), a in word(3, 4), b in word(3, 4), c in word(3, 4)) {
        prop_assert_eq!(ord.compare(&a, &b), ord.compare(&b, &a).reverse());
        prop_assert_eq!(ord.compare(&a, &b) == Cmp::Equal, a == b);
        if ord.compare(&a, &b) != Cmp::Greater && ord.compare(&b, &c) != Cmp::Greater {
            prop_assert_ne!(ord.compare(&a, &c), Cmp::Greater);
        }
    }

    #[test]
    fn multiplication_preserves_order(
        ord in admissible(),
        a in word(3, 4), b in word(3, 4), l in word(3, 4), r in word(3, 4),
    ) {
        if a != b {
            let (lo, hi) = if ord.greater(&b, &a) { (a, b) } else { (b, a) };
            prop_assert!(ord.greater(&Word::sandwich(&l, &hi, &r), &Word::sandwich(&l, &lo, &r)));
        }
        if !l.is_one() {
            prop_assert!(ord.greater(&l, &Word::one()));
        }
    }

    #[test]
    fn decomposition_agrees_with_compare(ord in admissible(), a in word(4, 5), b in word(4, 5)) {
        prop_assert_eq!(compare_by_decomposition(ord, &a, &b, 4), Some(ord.compare(&a, &b)));
    }
}

#[test]
fn degree_orderings_are_pairwise_harmonious() {
    for a in MonomialOrdering::ADMISSIBLE {
        for b in MonomialOrdering::ADMISSIBLE {
            assert!(a.harmonious_with(b));
            assert_eq!(a.decomposition(1).unwrap(), vec![OrderingFunction::Degree]);
            assert_eq!(b.decomposition(3).unwrap()[0], OrderingFunction::Degree);
        }
    }
    for bad in [MonomialOrdering::Lex, MonomialOrdering::InvLex] {
        assert!(bad.decomposition(3).is_none());
        assert!(!bad.harmonious_with(MonomialOrdering::DegLex));
    }
}
