//! Overlaps between lead monomials, S-polynomials and the second criterion.

use std::collections::HashSet;

use crate::algebra::{Polynomial, Word};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OverlapKind {
    /// A prefix of the first word is a suffix of the second.
    Prefix,
    /// One word lies inside the other (including shared prefixes or suffixes).
    Subword,
    /// A suffix of the first word is a prefix of the second.
    Suffix,
}

/// A placement with `l1 · u1 · r1 = l2 · u2 · r2 = word`. At least one of
/// `l1`, `l2` and at least one of `r1`, `r2` is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Overlap {
    pub l1: Word,
    pub r1: Word,
    pub l2: Word,
    pub r2: Word,
    pub kind: OverlapKind,
    pub word: Word,
}

impl Overlap {
    /// Start of `u2` minus start of `u1` inside the overlap word.
    pub fn offset(&self) -> isize {
        self.l2.degree() as isize - self.l1.degree() as isize
    }
}

/// An overlap between basis elements `i` (first) and `j` (second).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OverlapSpec {
    pub i: usize,
    pub j: usize,
    pub overlap: Overlap,
}

/// All placements of `u2` against `u1` that share at least one letter. For
/// a self overlap the identical placement is excluded and each remaining
/// pair of placements is reported once, with `u2` starting to the right.
pub fn enumerate_overlaps(u1: &Word, u2: &Word, same_element: bool) -> Vec<Overlap> {
    let (d1, d2) = (u1.degree() as isize, u2.degree() as isize);
    let mut out = Vec::new();
    if d1 == 0 || d2 == 0 {
        return out;
    }
    let lo = if same_element { 1 } else { -(d2 - 1) };
    for t in lo..d1 {
        let from = t.max(0);
        let to = d1.min(t + d2);
        let agree = (from..to).all(|p| u1.at(p as usize) == u2.at((p - t) as usize));
        if !agree {
            continue;
        }
        let l1 = if t < 0 { u2.slice(0, (-t) as usize) } else { Word::one() };
        let r1 = if t + d2 > d1 { u2.slice((d1 - t) as usize, d2 as usize) } else { Word::one() };
        let l2 = if t > 0 { u1.slice(0, t as usize) } else { Word::one() };
        let r2 = if t + d2 < d1 { u1.slice((t + d2) as usize, d1 as usize) } else { Word::one() };
        let kind = if (t >= 0 && t + d2 <= d1) || (t <= 0 && t + d2 >= d1) {
            OverlapKind::Subword
        } else if t < 0 {
            OverlapKind::Prefix
        } else {
            OverlapKind::Suffix
        };
        let word = Word::sandwich(&l1, u1, &r1);
        out.push(Overlap { l1, r1, l2, r2, kind, word });
    }
    out
}

/// Overlap specs between basis elements `i <= j` with lead monomials `ui`, `uj`.
pub fn overlap_specs(i: usize, ui: &Word, j: usize, uj: &Word) -> Vec<OverlapSpec> {
    enumerate_overlaps(ui, uj, i == j).into_iter().map(|overlap| OverlapSpec { i, j, overlap }).collect()
}

/// `LC(p2) · l1 p1 r1 - LC(p1) · l2 p2 r2`.
pub fn s_polynomial(spec: &OverlapSpec, p1: &Polynomial, p2: &Polynomial) -> Result<Polynomial> {
    let o = &spec.overlap;
    let (m1, m2) = (p1.lm()?, p2.lm()?);
    if Word::sandwich(&o.l1, m1, &o.r1) != o.word || Word::sandwich(&o.l2, m2, &o.r2) != o.word {
        return Err(Error::Argument("overlap placement does not match the lead monomials".into()));
    }
    let c1 = p2.lc()?.clone();
    let c2 = p1.lc()?.clone();
    let mut s = p1.mul_words(&c1, &o.l1, &o.r1);
    s.add_multiple(&-c2, &o.l2, p2, &o.r2);
    Ok(s)
}

/// Identifies an overlap by its two elements and their left cofactors after
/// stripping the common prefix, so placements shifted inside a larger word
/// map to the same key. Self overlaps use the orientation whose first left
/// cofactor is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SettledKey {
    pub a: usize,
    pub b: usize,
    pub la: Word,
    pub lb: Word,
}

impl SettledKey {
    /// Key of elements `i` and `j` placed at 0-based positions `pi`, `pj` in `w`.
    pub fn from_placements(i: usize, pi: usize, j: usize, pj: usize, w: &Word) -> Self {
        let m = pi.min(pj);
        let li = w.slice(m, pi);
        let lj = w.slice(m, pj);
        if i < j || (i == j && li.degree() <= lj.degree()) {
            SettledKey { a: i, b: j, la: li, lb: lj }
        } else {
            SettledKey { a: j, b: i, la: lj, lb: li }
        }
    }

    pub fn of(spec: &OverlapSpec) -> Self {
        let o = &spec.overlap;
        Self::from_placements(spec.i, o.l1.degree(), spec.j, o.l2.degree(), &o.word)
    }
}

/// True when some lead monomial `lms[k]`, placed inside the overlap word away
/// from both participants, meets each participant either disjointly or at an
/// overlap whose key is already settled. Such an S-polynomial may be skipped.
pub fn criterion2_applies(spec: &OverlapSpec, lms: &[Word], settled: &HashSet<SettledKey>) -> bool {
    if settled.is_empty() {
        return false;
    }
    let o = &spec.overlap;
    let w = &o.word;
    let parts = [(spec.i, o.l1.degree()), (spec.j, o.l2.degree())];
    for (k, h) in lms.iter().enumerate() {
        if h.is_one() {
            continue;
        }
        for p3 in w.occurrences(h) {
            if parts.iter().any(|&(x, px)| x == k && px == p3) {
                continue;
            }
            let ok = parts.iter().all(|&(x, px)| {
                let dx = lms[x].degree();
                let meets = p3 < px + dx && px < p3 + h.degree();
                !meets || settled.contains(&SettledKey::from_placements(x, px, k, p3, w))
            });
            if ok {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial, Alphabet};
    use crate::orderings::MonomialOrdering;

    fn xyz() -> Alphabet {
        Alphabet::new(&["x", "y", "z"]).unwrap()
    }

    fn w(s: &str) -> Word {
        xyz().word(s).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &xyz(), MonomialOrdering::DegLex).unwrap()
    }

    #[test]
    fn single_suffix_prefix_overlap() {
        let os = enumerate_overlaps(&w("x*y"), &w("y*z"), false);
        assert_eq!(os.len(), 1);
        assert_eq!(os[0].word, w("x*y*z"));
        assert_eq!(os[0].kind, OverlapKind::Suffix);
        assert!(enumerate_overlaps(&w("x"), &w("y"), false).is_empty());
    }

    #[test]
    fn self_overlap_counted_once() {
        let os = enumerate_overlaps(&w("x*y*x"), &w("x*y*x"), true);
        assert_eq!(os.len(), 1);
        assert_eq!(os[0].word, w("x*y*x*y*x"));
        let zz = enumerate_overlaps(&w("z^2"), &w("z^2"), true);
        assert_eq!(zz.len(), 1);
        assert_eq!(zz[0].word, w("z^3"));
    }

    #[test]
    fn s_polynomials_of_the_worked_examples() {
        let f = p("x*y - z");
        let g = p("y*z - x");
        let spec = OverlapSpec { i: 0, j: 1, overlap: enumerate_overlaps(f.lm().unwrap(), g.lm().unwrap(), false).remove(0) };
        assert_eq!(s_polynomial(&spec, &f, &g).unwrap(), p("x^2 - z^2"));

        let f = p("y*z + 2*x + z");
        let g = p("y*z + x");
        let os = enumerate_overlaps(f.lm().unwrap(), g.lm().unwrap(), false);
        let sub = os.into_iter().find(|o| o.offset() == 0).unwrap();
        assert_eq!(sub.kind, OverlapKind::Subword);
        assert_eq!(s_polynomial(&OverlapSpec { i: 1, j: 2, overlap: sub }, &f, &g).unwrap(), p("x + z"));

        let f = p("x*y - z");
        let g = p("x + z");
        let os = enumerate_overlaps(f.lm().unwrap(), g.lm().unwrap(), false);
        assert_eq!(os.len(), 1);
        assert_eq!(os[0].r2, w("y"));
        let spec = OverlapSpec { i: 0, j: 3, overlap: os[0].clone() };
        assert_eq!(s_polynomial(&spec, &f, &g).unwrap(), p("-z*y - z"));
        assert!(s_polynomial(&spec, &g, &f).is_err());
    }

    #[test]
    fn criterion_on_the_worked_example() {
        // basis after six elements were found
        let g: Vec<Polynomial> =
            ["x*y - z", "y*z + 2*x + z", "y*z + x", "x + z", "-z*y - z", "2*z^2"].iter().map(|s| p(s)).collect();
        let lms: Vec<Word> = g.iter().map(|q| q.lm().unwrap().clone()).collect();
        let pending = overlap_specs(2, &lms[2], 4, &lms[4])
            .into_iter()
            .find(|s| s.overlap.word == w("z*y*z"))
            .unwrap();
        assert_eq!(pending.overlap.l1, w("z"));
        let mut settled = HashSet::new();
        assert!(!criterion2_applies(&pending, &lms, &settled));
        // the pairs (g2, g3) and (g2, g5) at the placements inside zyz
        let first = overlap_specs(1, &lms[1], 2, &lms[2]).into_iter().find(|s| s.overlap.offset() == 0).unwrap();
        settled.insert(SettledKey::of(&first));
        assert!(!criterion2_applies(&pending, &lms, &settled));
        let third = overlap_specs(1, &lms[1], 4, &lms[4])
            .into_iter()
            .find(|s| s.overlap.word == w("z*y*z"))
            .unwrap();
        settled.insert(SettledKey::of(&third));
        assert!(criterion2_applies(&pending, &lms, &settled));
    }

    #[test]
    fn criterion_needs_a_third_placement() {
        let lms = vec![w("x*y"), w("y*z")];
        let spec = overlap_specs(0, &lms[0], 1, &lms[1]).remove(0);
        let mut settled = HashSet::new();
        settled.insert(SettledKey::of(&spec));
        assert!(!criterion2_applies(&spec, &lms, &settled));
    }
}
