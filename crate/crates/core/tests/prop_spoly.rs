mod common;

use std::collections::BTreeSet;

use common::*;
use ncbasis::groebner::{mora, reduce_basis, GroebnerOptions};
use ncbasis::spoly::{enumerate_overlaps, overlap_specs, s_polynomial};
use ncbasis::{MonomialOrdering, Word};
use proptest::prelude::*;

/// Every offset of `u2` against `u1` sharing a letter and agreeing letterwise,
/// as (offset, overlap word). A self overlap keeps one orientation only.
fn brute_force(u1: &Word, u2: &Word, same: bool) -> BTreeSet<(isize, Vec<u32>)> {
    let (a, b) = (u1.letters(), u2.letters());
    let (d1, d2) = (a.len() as isize, b.len() as isize);
    let mut out = BTreeSet::new();
    for t in -d2 + 1..d1 {
        if same && t <= 0 {
            continue;
        }
        let start = t.min(0);
        let end = d1.max(t + d2);
        let mut w = Vec::new();
        let mut ok = true;
        for p in start..end {
            let x = if (0..d1).contains(&p) { Some(a[p as usize]) } else { None };
            let y = if (t..t + d2).contains(&p) { Some(b[(p - t) as usize]) } else { None };
            match (x, y) {
                (Some(x), Some(y)) if x != y => ok = false,
                (Some(x), _) | (None, Some(x)) => w.push(x),
                (None, None) => unreachable!(),
            }
        }
        if ok {
            out.insert((t, w));
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn overlaps_match_a_brute_force_scan(u1 in nonunit_word(2, 6), u2 in nonunit_word(2, 6), same in any::<bool>()) {
        let u2 = if same { u1.clone() } else { u2 };
        let got: BTreeSet<(isize, Vec<u32>)> = enumerate_overlaps(&u1, &u2, same)
            .into_iter()
            .map(|o| (o.offset(), o.word.letters().to_vec()))
            .collect();
        prop_assert_eq!(got, brute_force(&u1, &u2, same));
    }

    #[test]
    fn placements_reproduce_the_overlap_word(u1 in nonunit_word(3, 6), u2 in nonunit_word(3, 6)) {
        for o in enumerate_overlaps(&u1, &u2, false) {
            prop_assert_eq!(Word::sandwich(&o.l1, &u1, &o.r1), o.word.clone());
            prop_assert_eq!(Word::sandwich(&o.l2, &u2, &o.r2), o.word.clone());
            prop_assert!(o.l1.is_one() || o.l2.is_one());
            prop_assert!(o.r1.is_one() || o.r2.is_one());
        }
    }

    #[test]
    fn s_polynomials_cancel_the_overlap_word(
        ord in admissible(),
        p1 in nonzero_polynomial(2, 4, 5, MonomialOrdering::DegLex),
        p2 in nonzero_polynomial(2, 4, 5, MonomialOrdering::DegLex),
    ) {
        let (p1, p2) = (p1.with_ordering(ord), p2.with_ordering(ord));
        for spec in overlap_specs(0, p1.lm().unwrap(), 1, p2.lm().unwrap()) {
            let s = s_polynomial(&spec, &p1, &p2).unwrap();
            prop_assert!(s.terms().iter().all(|t| t.word != spec.overlap.word));
        }
    }
}

#[test]
fn criterion_never_changes_the_reduced_basis() {
    for ord in MonomialOrdering::ADMISSIBLE {
        for (_, f) in fixtures(ord) {
            let on = mora(&f, &GroebnerOptions::default()).unwrap();
            let off = mora(&f, &GroebnerOptions { criterion: false, ..GroebnerOptions::default() }).unwrap();
            assert_eq!(reduce_basis(&on.basis), reduce_basis(&off.basis));
        }
    }
}
