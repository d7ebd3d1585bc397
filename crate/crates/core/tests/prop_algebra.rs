mod common;

use common::*;
use ncbasis::{parse_polynomial, rat, MonomialOrdering, Polynomial, Term};
use proptest::prelude::*;

const ORD: MonomialOrdering = MonomialOrdering::DegLex;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normalizing_is_idempotent(p in polynomial(3, 6, 8, ORD)) {
        prop_assert!(p.is_normalized());
        prop_assert_eq!(p.normalized(), p.clone());
        prop_assert_eq!(p.normalized().normalized(), p);
    }

    #[test]
    fn term_multiplication_associates(
        p in polynomial(3, 4, 8, ORD),
        (c1, w1) in (coeff(), word(3, 2)),
        (c2, w2) in (coeff(), word(3, 2)),
        (c3, w3) in (coeff(), word(3, 2)),
        (c4, w4) in (coeff(), word(3, 2)),
    ) {
        let (l1, r1) = (Term::new(c1.clone(), w1.clone()), Term::new(c3.clone(), w3.clone()));
        let (l2, r2) = (Term::new(c2.clone(), w2.clone()), Term::new(c4.clone(), w4.clone()));
        let nested = Polynomial::term_mul(&l1, &Polynomial::term_mul(&l2, &p, &r2), &r1);
        let l = Term::new(&c1 * &c2, w1.concat(&w2));
        let r = Term::new(&c4 * &c3, w4.concat(&w3));
        prop_assert_eq!(nested, Polynomial::term_mul(&l, &p, &r));
    }

    #[test]
    fn term_multiplication_distributes(
        p in polynomial(3, 6, 8, ORD),
        q in polynomial(3, 6, 8, ORD),
        (c, wl, wr) in (coeff(), word(3, 3), word(3, 3)),
    ) {
        let l = Term::new(c, wl);
        let r = Term::word(wr);
        let lhs = Polynomial::term_mul(&l, &p.combine(&q, &rat(1)).unwrap(), &r);
        let rhs = Polynomial::term_mul(&l, &p, &r).combine(&Polynomial::term_mul(&l, &q, &r), &rat(1)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn parse_inverts_format(p in polynomial(3, 6, 8, ORD)) {
        let a = alphabet(3);
        prop_assert_eq!(parse_polynomial(&p.format(&a), &a, ORD).unwrap(), p);
    }

    #[test]
    fn adding_then_subtracting_is_exact(p in polynomial(3, 6, 8, ORD), q in polynomial(3, 6, 8, ORD)) {
        let back = p.combine(&q, &rat(1)).unwrap().combine(&q, &rat(-1)).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn occurrences_are_exactly_the_matching_offsets(u in word(2, 8), s in nonunit_word(2, 3)) {
        let found: Vec<usize> = u.occurrences(&s).collect();
        let brute: Vec<usize> = (0..=u.degree().saturating_sub(s.degree()))
            .filter(|&k| k + s.degree() <= u.degree() && u.letters()[k..k + s.degree()] == *s.letters())
            .collect();
        prop_assert_eq!(found, brute);
    }
}
