//! Noncommutative division, Mora's algorithm and reduced Gröbner bases.
//!
//! Every basis computation can carry a [`LoggedRepresentation`] per element,
//! expressing it as a two-sided combination of the input polynomials.

use std::cmp::Ordering as Cmp;
use std::collections::{BTreeMap, HashSet};

use num_traits::{One, Zero};

use crate::algebra::{Polynomial, Rational, Term, Word};
use crate::error::{Error, Result};
use crate::orderings::MonomialOrdering;
use crate::spoly::{criterion2_applies, overlap_specs, s_polynomial, OverlapSpec, SettledKey};

/// `Σ c · ℓ · f_k · r` over input polynomials `f_k`, with like entries merged.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LoggedRepresentation {
    entries: BTreeMap<(Word, usize, Word), Rational>,
}

impl LoggedRepresentation {
    pub fn new() -> Self {
        Self::default()
    }

    /// The representation `1 · f_k · 1`.
    pub fn input(k: usize) -> Self {
        let mut r = Self::new();
        r.add(Rational::one(), Word::one(), k, Word::one());
        r
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn add(&mut self, c: Rational, l: Word, k: usize, r: Word) {
        if c.is_zero() {
            return;
        }
        let key = (l, k, r);
        let v = self.entries.entry(key.clone()).or_insert_with(Rational::zero);
        *v += c;
        if v.is_zero() {
            self.entries.remove(&key);
        }
    }

    /// `self += c · l · other · r`.
    pub fn add_scaled(&mut self, other: &LoggedRepresentation, c: &Rational, l: &Word, r: &Word) {
        for ((ol, k, or), v) in &other.entries {
            self.add(v * c, l.concat(ol), *k, or.concat(r));
        }
    }

    /// Replaces each index `k` by `reps[k]`, re-expressing over the inputs of `reps`.
    pub fn substitute(&self, reps: &[LoggedRepresentation]) -> LoggedRepresentation {
        let mut out = Self::new();
        for ((l, k, r), v) in &self.entries {
            out.add_scaled(&reps[*k], v, l, r);
        }
        out
    }

    /// Evaluates the combination over `inputs`.
    pub fn expand(&self, inputs: &[Polynomial], ord: MonomialOrdering) -> Polynomial {
        let mut p = Polynomial::zero(ord);
        for ((l, k, r), v) in &self.entries {
            p.add_multiple(v, l, &inputs[*k].with_ordering(ord), r);
        }
        p
    }

    /// Entries as (left term, input index, right term); the coefficient rides on the left term.
    pub fn triples(&self) -> Vec<(Term, usize, Term)> {
        self.entries
            .iter()
            .map(|((l, k, r), v)| (Term::new(v.clone(), l.clone()), *k, Term::word(r.clone())))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SelectionStrategy {
    Normal,
    Sugar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Complete,
    DegreeCapHit,
    IterationCapHit,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Complete => "complete",
            Status::DegreeCapHit => "degree_cap_hit",
            Status::IterationCapHit => "iteration_cap_hit",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest lead-monomial degree a new basis element may have.
    pub max_degree: usize,
    pub max_iterations: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_degree: 20, max_iterations: 100_000 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerOptions {
    pub strategy: SelectionStrategy,
    pub criterion: bool,
    pub limits: Limits,
    pub logging: bool,
}

impl Default for GroebnerOptions {
    fn default() -> Self {
        GroebnerOptions { strategy: SelectionStrategy::Normal, criterion: true, limits: Limits::default(), logging: false }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GroebnerStats {
    pub s_polynomials: usize,
    pub zero_reductions: usize,
    pub criterion_skips: usize,
    pub reduction_steps: usize,
}

#[derive(Clone, Debug)]
pub struct GroebnerResult {
    pub basis: Vec<Polynomial>,
    /// Per basis element, over the original input list (zero inputs keep their index).
    pub logs: Option<Vec<LoggedRepresentation>>,
    pub stats: GroebnerStats,
    pub status: Status,
}

/// Checks that all polynomials share one admissible ordering tag.
pub(crate) fn common_ordering(ps: &[Polynomial], fallback: MonomialOrdering) -> Result<MonomialOrdering> {
    let ord = ps.first().map(|p| p.ordering()).unwrap_or(fallback);
    if ps.iter().any(|p| p.ordering() != ord) {
        return Err(Error::Argument("input polynomials carry different ordering tags".into()));
    }
    ord.require_admissible()?;
    Ok(ord)
}

/// First conventional divisor of `u` in `divisors`, as (index, placement of
/// minimal left cofactor degree).
fn find_divisor(u: &Word, divisors: &[&Word]) -> Option<(usize, usize)> {
    divisors.iter().enumerate().find_map(|(j, d)| u.occurrences(d).next().map(|at| (j, at)))
}

pub(crate) struct DivisionOutcome {
    pub remainder: Polynomial,
    pub log: Option<LoggedRepresentation>,
    pub steps: usize,
    /// Largest `deg ℓ + sugar(p_j) + deg r` over the steps, when sugars are given.
    pub sugar: usize,
}

pub(crate) fn divide_full(p: &Polynomial, divisors: &[Polynomial], logging: bool, sugars: Option<&[usize]>) -> DivisionOutcome {
    let lms: Vec<&Word> = divisors.iter().map(|d| d.lm().expect("divisors are nonzero")).collect();
    let mut q = p.clone();
    let mut log = logging.then(LoggedRepresentation::new);
    let mut steps = 0;
    let mut sugar = 0;
    let mut i = 0;
    while i < q.len() {
        let t = &q.terms()[i];
        match find_divisor(&t.word, &lms) {
            Some((j, at)) => {
                let d = &divisors[j];
                let c = &t.coeff / d.lc().expect("nonzero");
                let l = t.word.slice(0, at);
                let r = t.word.slice(at + lms[j].degree(), t.word.degree());
                if let Some(s) = sugars {
                    sugar = sugar.max(l.degree() + s[j] + r.degree());
                }
                q.add_multiple(&-c.clone(), &l, d, &r);
                if let Some(log) = log.as_mut() {
                    log.add(c, l, j, r);
                }
                steps += 1;
            }
            None => i += 1,
        }
    }
    DivisionOutcome { remainder: q, log, steps, sugar }
}

/// Divides `p` by `divisors`, returning the remainder and the quotient log
/// over `divisors` with `p = remainder + expansion(log)`.
pub fn divide(p: &Polynomial, divisors: &[Polynomial]) -> (Polynomial, LoggedRepresentation) {
    let nz: Vec<usize> = (0..divisors.len()).filter(|&k| !divisors[k].is_zero()).collect();
    let ds: Vec<Polynomial> = nz.iter().map(|&k| divisors[k].clone()).collect();
    let out = divide_full(p, &ds, true, None);
    let log = out.log.expect("logging on");
    let mut mapped = LoggedRepresentation::new();
    for ((l, k, r), v) in log.entries {
        mapped.add(v, l, nz[k], r);
    }
    (out.remainder, mapped)
}

/// Remainder of `p` on division by `divisors`.
pub fn normal_form(p: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let ds: Vec<Polynomial> = divisors.iter().filter(|d| !d.is_zero()).cloned().collect();
    divide_full(p, &ds, false, None).remainder
}

/// `max(deg ℓ1 + s_i + deg r1, deg ℓ2 + s_j + deg r2)`.
pub fn sugar_value(spec: &OverlapSpec, sugar_i: usize, sugar_j: usize) -> usize {
    let o = &spec.overlap;
    (o.l1.degree() + sugar_i + o.r1.degree()).max(o.l2.degree() + sugar_j + o.r2.degree())
}

struct Pending {
    spec: OverlapSpec,
    sugar: usize,
}

// Ascending selection order: sugar (if used), overlap word, indices, then ℓ1.
fn selection_cmp(ord: MonomialOrdering, strategy: SelectionStrategy, a: &Pending, b: &Pending) -> Cmp {
    let s = match strategy {
        SelectionStrategy::Sugar => a.sugar.cmp(&b.sugar),
        SelectionStrategy::Normal => Cmp::Equal,
    };
    let (x, y) = (&a.spec, &b.spec);
    s.then_with(|| ord.compare(&x.overlap.word, &y.overlap.word))
        .then_with(|| x.i.cmp(&y.i))
        .then_with(|| x.j.cmp(&y.j))
        .then_with(|| x.overlap.l1.degree().cmp(&y.overlap.l1.degree()))
        .then_with(|| ord.compare(&x.overlap.l1, &y.overlap.l1))
}

/// Mora's algorithm. On `Complete` the basis is a Gröbner basis of the ideal
/// generated by `inputs`; zero inputs are ignored.
pub fn mora(inputs: &[Polynomial], opts: &GroebnerOptions) -> Result<GroebnerResult> {
    let ord = common_ordering(inputs, MonomialOrdering::DegLex)?;
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut logs: Vec<LoggedRepresentation> = Vec::new();
    let mut sugars: Vec<usize> = Vec::new();
    for (k, f) in inputs.iter().enumerate() {
        if !f.is_zero() {
            basis.push(f.clone());
            sugars.push(f.total_degree());
            if opts.logging {
                logs.push(LoggedRepresentation::input(k));
            }
        }
    }
    let mut lms: Vec<Word> = basis.iter().map(|g| g.lm().expect("nonzero").clone()).collect();
    // sorted descending so the next entry pops from the back
    let mut queue: Vec<Pending> = Vec::new();
    let strategy = opts.strategy;
    let push = |queue: &mut Vec<Pending>, item: Pending| {
        let at = queue.partition_point(|e| selection_cmp(ord, strategy, e, &item) == Cmp::Greater);
        queue.insert(at, item);
    };
    for j in 0..basis.len() {
        for i in 0..=j {
            for spec in overlap_specs(i, &lms[i], j, &lms[j]) {
                let sugar = sugar_value(&spec, sugars[i], sugars[j]);
                push(&mut queue, Pending { spec, sugar });
            }
        }
    }
    let mut settled: HashSet<SettledKey> = HashSet::new();
    let mut stats = GroebnerStats::default();
    let mut status = Status::Complete;
    let mut iterations = 0usize;
    while let Some(item) = queue.pop() {
        iterations += 1;
        if iterations > opts.limits.max_iterations {
            status = Status::IterationCapHit;
            break;
        }
        let spec = item.spec;
        if opts.criterion && criterion2_applies(&spec, &lms, &settled) {
            stats.criterion_skips += 1;
            settled.insert(SettledKey::of(&spec));
            continue;
        }
        stats.s_polynomials += 1;
        let (gi, gj) = (&basis[spec.i], &basis[spec.j]);
        let s = s_polynomial(&spec, gi, gj)?;
        let out = divide_full(&s, &basis, opts.logging, Some(&sugars));
        stats.reduction_steps += out.steps;
        settled.insert(SettledKey::of(&spec));
        let r = out.remainder;
        if r.is_zero() {
            stats.zero_reductions += 1;
            continue;
        }
        let lm = r.lm().expect("nonzero").clone();
        if lm.degree() > opts.limits.max_degree {
            status = Status::DegreeCapHit;
            break;
        }
        if opts.logging {
            let o = &spec.overlap;
            let mut over_basis = LoggedRepresentation::new();
            over_basis.add(gj.lc()?.clone(), o.l1.clone(), spec.i, o.r1.clone());
            over_basis.add(-gi.lc()?.clone(), o.l2.clone(), spec.j, o.r2.clone());
            over_basis.add_scaled(out.log.as_ref().expect("logging on"), &-Rational::one(), &Word::one(), &Word::one());
            logs.push(over_basis.substitute(&logs));
        }
        sugars.push(item.sugar.max(out.sugar));
        basis.push(r);
        lms.push(lm);
        let m = basis.len() - 1;
        for i in 0..=m {
            for spec in overlap_specs(i, &lms[i], m, &lms[m]) {
                let sugar = sugar_value(&spec, sugars[i], sugars[m]);
                push(&mut queue, Pending { spec, sugar });
            }
        }
    }
    Ok(GroebnerResult { basis, logs: opts.logging.then_some(logs), stats, status })
}

/// The unique reduced Gröbner basis of the ideal generated by the Gröbner basis `g`.
pub fn reduce_basis(g: &[Polynomial]) -> Vec<Polynomial> {
    reduce_basis_logged(g, None).0
}

/// As [`reduce_basis`], transforming per-element logs alongside when given.
pub fn reduce_basis_logged(
    g: &[Polynomial],
    logs: Option<&[LoggedRepresentation]>,
) -> (Vec<Polynomial>, Option<Vec<LoggedRepresentation>>) {
    let mut items: Vec<(Polynomial, Option<LoggedRepresentation>)> = g
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .map(|(k, p)| {
            let c = p.lc().expect("nonzero").recip();
            let log = logs.map(|ls| {
                let mut l = LoggedRepresentation::new();
                l.add_scaled(&ls[k], &c, &Word::one(), &Word::one());
                l
            });
            (p.scale(&c), log)
        })
        .collect();
    let mut k = 0;
    while k < items.len() {
        let lm = items[k].0.lm().expect("nonzero").clone();
        let redundant = items.iter().enumerate().any(|(j, (q, _))| j != k && lm.contains(q.lm().expect("nonzero")));
        if redundant {
            items.remove(k);
        } else {
            k += 1;
        }
    }
    for k in 0..items.len() {
        let others: Vec<Polynomial> =
            items.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, (q, _))| q.clone()).collect();
        let out = divide_full(&items[k].0, &others, logs.is_some(), None);
        if let (Some(own), Some(qlog)) = (items[k].1.clone(), out.log) {
            // others[t] is item t (t < k) or item t + 1
            let reps: Vec<LoggedRepresentation> = items
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, (_, l))| l.clone().expect("logs present"))
                .collect();
            let mut l = own;
            l.add_scaled(&qlog.substitute(&reps), &-Rational::one(), &Word::one(), &Word::one());
            items[k].1 = Some(l);
        }
        items[k].0 = out.remainder;
    }
    let ord = g.first().map(|p| p.ordering()).unwrap_or(MonomialOrdering::DegLex);
    items.sort_by(|a, b| ord.compare(b.0.lm().expect("nonzero"), a.0.lm().expect("nonzero")));
    let have_logs = logs.is_some();
    let (basis, ls): (Vec<_>, Vec<_>) = items.into_iter().unzip();
    let ls = have_logs.then(|| ls.into_iter().map(|l| l.expect("logs present")).collect());
    (basis, ls)
}

/// Whether every S-polynomial of `g` reduces to zero by conventional division.
pub fn is_groebner_basis(g: &[Polynomial]) -> bool {
    let g: Vec<Polynomial> = g.iter().filter(|p| !p.is_zero()).cloned().collect();
    let lms: Vec<Word> = g.iter().map(|p| p.lm().expect("nonzero").clone()).collect();
    for j in 0..g.len() {
        for i in 0..=j {
            for spec in overlap_specs(i, &lms[i], j, &lms[j]) {
                let s = s_polynomial(&spec, &g[i], &g[j]).expect("placement from enumeration");
                if !normal_form(&s, &g).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// Monic elements sorted descending by lead monomial, for set comparison.
pub fn monic_sorted(ps: &[Polynomial]) -> Vec<Polynomial> {
    let mut v: Vec<Polynomial> = ps.iter().filter(|p| !p.is_zero()).map(|p| p.monic()).collect();
    if let Some(ord) = v.first().map(|p| p.ordering()) {
        v.sort_by(|a, b| ord.compare(b.lm().expect("nonzero"), a.lm().expect("nonzero")));
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial, ratio, Alphabet};

    fn alpha(names: &[&str]) -> Alphabet {
        Alphabet::new(names).unwrap()
    }

    fn polys(a: &Alphabet, ord: MonomialOrdering, ss: &[&str]) -> Vec<Polynomial> {
        ss.iter().map(|s| parse_polynomial(s, a, ord).unwrap()).collect()
    }

    #[test]
    fn division_examples() {
        let a = alpha(&["x", "y", "z"]);
        let ord = MonomialOrdering::DegLex;
        let p = parse_polynomial("x*y*z + 2*y", &a, ord).unwrap();
        let ps = polys(&a, ord, &["x*y - z", "y*z - x"]);
        let (r, log) = divide(&p, &ps);
        assert_eq!(r, parse_polynomial("z^2 + 2*y", &a, ord).unwrap());
        assert_eq!(r.combine(&log.expand(&ps, ord), &ratio(1, 1)).unwrap(), p);
        let (r, _) = divide(&p, &[ps[1].clone(), ps[0].clone()]);
        assert_eq!(r, parse_polynomial("x^2 + 2*y", &a, ord).unwrap());
        assert!(divide(&ps[0], &ps[..1]).0.is_zero());

        let p = parse_polynomial("3*x*y*x*z^2*x^3 + 2*x^2", &a, ord).unwrap();
        let d = polys(&a, ord, &["5*z^2*x + 2*y^2 + x + 4"]);
        let (r, log) = divide(&p, &d);
        let want = parse_polynomial("-6/5*x*y*x*y^2*x^2 - 3/5*x*y*x^4 - 12/5*x*y*x^3 + 2*x^2", &a, ord).unwrap();
        assert_eq!(r, want);
        assert_eq!(log.triples().len(), 1);
        let zero = Polynomial::zero(ord);
        assert!(divide(&zero, &d).0.is_zero());
    }

    fn worked_example() -> (Alphabet, Vec<Polynomial>) {
        let a = alpha(&["x", "y", "z"]);
        let f = polys(&a, MonomialOrdering::DegLex, &["x*y - z", "y*z + 2*x + z", "y*z + x"]);
        (a, f)
    }

    #[test]
    fn mora_reproduces_the_six_element_basis() {
        let (a, f) = worked_example();
        let opts = GroebnerOptions { logging: true, ..Default::default() };
        let res = mora(&f, &opts).unwrap();
        assert_eq!(res.status, Status::Complete);
        let want = polys(&a, MonomialOrdering::DegLex, &["x*y - z", "y*z + 2*x + z", "y*z + x", "x + z", "-z*y - z", "2*z^2"]);
        assert_eq!(res.basis, want);
        // the five criterion skips of the worked trace
        assert_eq!(res.stats.criterion_skips, 5);
        let logs = res.logs.unwrap();
        for (g, l) in res.basis.iter().zip(&logs) {
            assert_eq!(&l.expand(&f, MonomialOrdering::DegLex), g);
        }
        let g6 = logs[5].triples();
        assert_eq!(g6.len(), 5);
        let reduced = reduce_basis(&res.basis);
        let want = polys(&a, MonomialOrdering::DegLex, &["y*z - z", "z*y + z", "z^2", "x + z"]);
        assert_eq!(reduced, want);
        assert_eq!(reduce_basis(&reduced), reduced);
    }

    #[test]
    fn mora_small_cases() {
        let a = alpha(&["x", "y"]);
        for ord in MonomialOrdering::ADMISSIBLE {
            let f = polys(&a, ord, &["x"]);
            assert_eq!(mora(&f, &GroebnerOptions::default()).unwrap().basis, f);
        }
        let ord = MonomialOrdering::DegLex;
        let f = polys(&a, ord, &["2*x*y + y^2 + 5", "x^2 + y^2 + 8"]);
        let res = mora(&f, &GroebnerOptions::default()).unwrap();
        let want = polys(&a, ord, &["2*x*y + y^2 + 5", "x^2 + y^2 + 8", "5*y^3 - 10*x + 37*y", "2*y*x + y^2 + 5"]);
        assert!(is_groebner_basis(&res.basis));
        assert_eq!(reduce_basis(&res.basis), reduce_basis(&want));
        let lex = parse_polynomial("x", &a, MonomialOrdering::DegLex).unwrap().with_ordering(MonomialOrdering::Lex);
        assert!(mora(&[lex], &GroebnerOptions::default()).is_err());
    }

    #[test]
    fn reduce_basis_drops_multiples() {
        let a = alpha(&["x"]);
        let g = polys(&a, MonomialOrdering::DegLex, &["2*x", "x^2"]);
        assert_eq!(reduce_basis(&g), polys(&a, MonomialOrdering::DegLex, &["x"]));
    }

    #[test]
    fn logged_reduction_keeps_the_identity() {
        let (_, f) = worked_example();
        let res = mora(&f, &GroebnerOptions { logging: true, ..Default::default() }).unwrap();
        let (g, logs) = reduce_basis_logged(&res.basis, res.logs.as_deref());
        for (p, l) in g.iter().zip(logs.unwrap()) {
            assert_eq!(&l.expand(&f, MonomialOrdering::DegLex), p);
        }
    }

    #[test]
    fn sugar_formula() {
        let a = alpha(&["x", "y", "z"]);
        let u1 = a.word("x*y*z").unwrap();
        let u2 = a.word("z*x").unwrap();
        let spec = overlap_specs(0, &u1, 1, &u2).into_iter().find(|s| s.overlap.r1 == a.word("x").unwrap()).unwrap();
        assert_eq!(sugar_value(&spec, 3, 2), 4);
        let u = a.word("y*z").unwrap();
        let same = overlap_specs(0, &u, 1, &u).into_iter().find(|s| s.overlap.offset() == 0).unwrap();
        assert_eq!(sugar_value(&same, 5, 5), 5);
    }
}
