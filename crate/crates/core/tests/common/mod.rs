//! Strategies shared by the property suites.
#![allow(dead_code)]

use ncbasis::{rat, ratio, Alphabet, MonomialOrdering, Polynomial, Rational, Word};
use proptest::prelude::*;

pub fn alphabet(n: usize) -> Alphabet {
    let names = ["x", "y", "z", "w"];
    Alphabet::new(&names[..n]).unwrap()
}

pub fn word(n: u32, max_degree: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..n, 0..=max_degree).prop_map(Word::new)
}

pub fn nonunit_word(n: u32, max_degree: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..n, 1..=max_degree).prop_map(Word::new)
}

pub fn coeff() -> impl Strategy<Value = Rational> {
    prop_oneof![(-9i64..=9).prop_map(rat), ((-9i64..=9), (1i64..=6)).prop_map(|(a, b)| ratio(a, b))]
}

pub fn polynomial(n: u32, max_degree: usize, max_terms: usize, ord: MonomialOrdering) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((coeff(), word(n, max_degree)), 0..=max_terms)
        .prop_map(move |ts| Polynomial::from_terms(ord, ts))
}

pub fn nonzero_polynomial(n: u32, max_degree: usize, max_terms: usize, ord: MonomialOrdering) -> impl Strategy<Value = Polynomial> {
    polynomial(n, max_degree, max_terms, ord).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn admissible() -> impl Strategy<Value = MonomialOrdering> {
    prop::sample::select(MonomialOrdering::ADMISSIBLE.to_vec())
}

pub fn parse_all(a: &Alphabet, ord: MonomialOrdering, ss: &[&str]) -> Vec<Polynomial> {
    ss.iter().map(|s| ncbasis::parse_polynomial(s, a, ord).unwrap()).collect()
}

/// Small ideals with known finite Groebner bases under every admissible ordering.
pub fn fixtures(ord: MonomialOrdering) -> Vec<(Alphabet, Vec<Polynomial>)> {
    let xyz = alphabet(3);
    let xy = alphabet(2);
    let s3 = Alphabet::new(&["Y", "X", "y", "x"]).unwrap();
    vec![
        (xyz.clone(), parse_all(&xyz, ord, &["x*y - z", "y*z + 2*x + z", "y*z + x"])),
        (xy.clone(), parse_all(&xy, ord, &["2*x*y + y^2 + 5", "x^2 + y^2 + 8"])),
        (xy.clone(), parse_all(&xy, ord, &["x^2*y^2 - 2*x*y^2 + x^2", "x^2*y - 2*x*y"])),
        (xyz.clone(), parse_all(&xyz, ord, &["x + y + z - 3", "x^2 + y^2 + z^2 - 9", "x^3 + y^3 + z^3 - 24"])),
        (s3.clone(), parse_all(&s3, ord, &["x^3 - 1", "y^2 - 1", "x*y*x*y - 1", "X*x - 1", "x*X - 1", "Y*y - 1", "y*Y - 1"])),
    ]
}
