//! Involutive divisions, involutive reduction and the involutive basis algorithm.
//!
//! A division assigns every basis element a set of left- and a set of
//! right-multiplicative generators. A lead monomial `u2` involutively divides
//! `u1 = u3 · u2 · u4` when the cofactors only use multiplicative generators:
//! with thin divisors only the letters adjacent to `u2` are checked, with
//! thick divisors every letter of `u3` and `u4` is.
//!
//! Right-handed divisions are defined as the mirror images of the left-handed
//! ones: reverse every word, assign, then swap the two sides.

use std::fmt;

use num_traits::One;

use crate::algebra::{Polynomial, Rational, Word};
use crate::error::{Error, Result};
use crate::groebner::{common_ordering, Limits, LoggedRepresentation, Status};
use crate::orderings::MonomialOrdering;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Division {
    Left = 1,
    Right = 2,
    LeftOverlap = 3,
    StrongLeftOverlap = 4,
    TwoSidedLeftOverlap = 5,
    PrefixOnlyLeftOverlap = 6,
    SubwordFreeLeftOverlap = 7,
    RightOverlap = 8,
    StrongRightOverlap = 9,
    TwoSidedRightOverlap = 10,
    SuffixOnlyRightOverlap = 11,
    SubwordFreeRightOverlap = 12,
}

impl Division {
    pub const ALL: [Division; 12] = [
        Division::Left,
        Division::Right,
        Division::LeftOverlap,
        Division::StrongLeftOverlap,
        Division::TwoSidedLeftOverlap,
        Division::PrefixOnlyLeftOverlap,
        Division::SubwordFreeLeftOverlap,
        Division::RightOverlap,
        Division::StrongRightOverlap,
        Division::TwoSidedRightOverlap,
        Division::SuffixOnlyRightOverlap,
        Division::SubwordFreeRightOverlap,
    ];

    pub fn from_key(key: u8) -> Result<Self> {
        Division::ALL
            .get((key as usize).wrapping_sub(1))
            .copied()
            .ok_or_else(|| Error::Argument(format!("division key must be 1..=12, got {key}")))
    }

    pub fn key(self) -> u8 {
        self as u8
    }

    pub fn name(self) -> &'static str {
        match self {
            Division::Left => "left",
            Division::Right => "right",
            Division::LeftOverlap => "left overlap",
            Division::StrongLeftOverlap => "strong left overlap",
            Division::TwoSidedLeftOverlap => "two-sided left overlap",
            Division::PrefixOnlyLeftOverlap => "prefix-only left overlap",
            Division::SubwordFreeLeftOverlap => "subword-free left overlap",
            Division::RightOverlap => "right overlap",
            Division::StrongRightOverlap => "strong right overlap",
            Division::TwoSidedRightOverlap => "two-sided right overlap",
            Division::SuffixOnlyRightOverlap => "suffix-only right overlap",
            Division::SubwordFreeRightOverlap => "subword-free right overlap",
        }
    }

    /// Global divisions assign variables independently of the other elements.
    pub fn is_global(self) -> bool {
        matches!(self, Division::Left | Division::Right)
    }

    pub fn is_right_handed(self) -> bool {
        matches!(
            self,
            Division::Right
                | Division::RightOverlap
                | Division::StrongRightOverlap
                | Division::TwoSidedRightOverlap
                | Division::SuffixOnlyRightOverlap
                | Division::SubwordFreeRightOverlap
        )
    }

    /// The division obtained by reversing words.
    pub fn mirror(self) -> Division {
        match self {
            Division::Left => Division::Right,
            Division::Right => Division::Left,
            Division::LeftOverlap => Division::RightOverlap,
            Division::StrongLeftOverlap => Division::StrongRightOverlap,
            Division::TwoSidedLeftOverlap => Division::TwoSidedRightOverlap,
            Division::PrefixOnlyLeftOverlap => Division::SuffixOnlyRightOverlap,
            Division::SubwordFreeLeftOverlap => Division::SubwordFreeRightOverlap,
            Division::RightOverlap => Division::LeftOverlap,
            Division::StrongRightOverlap => Division::StrongLeftOverlap,
            Division::TwoSidedRightOverlap => Division::TwoSidedLeftOverlap,
            Division::SuffixOnlyRightOverlap => Division::PrefixOnlyLeftOverlap,
            Division::SubwordFreeRightOverlap => Division::SubwordFreeLeftOverlap,
        }
    }

    /// Overlap divisions that keep every variable multiplicative on one side.
    pub fn is_one_sided_overlap(self) -> bool {
        !self.is_global() && !matches!(self, Division::TwoSidedLeftOverlap | Division::TwoSidedRightOverlap)
    }

    /// Divisions whose involutive cones are disjoint.
    pub fn is_strong(self) -> bool {
        matches!(self, Division::Left | Division::Right | Division::StrongLeftOverlap | Division::StrongRightOverlap)
    }
}

impl fmt::Display for Division {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.name(), self.key())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DivisorMode {
    Thin,
    Thick,
}

/// Multiplicative generators per element: `left[e][x]` is true when `x` is
/// left multiplicative for element `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultTable {
    pub left: Vec<Vec<bool>>,
    pub right: Vec<Vec<bool>>,
}

impl MultTable {
    fn filled(m: usize, n: usize, left: bool, right: bool) -> Self {
        MultTable { left: vec![vec![left; n]; m], right: vec![vec![right; n]; m] }
    }

    pub fn len(&self) -> usize {
        self.left.len()
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty()
    }

    /// Multiplicative generator indices of element `e` on each side.
    pub fn sets(&self, e: usize) -> (Vec<usize>, Vec<usize>) {
        let pick = |v: &Vec<bool>| v.iter().enumerate().filter(|(_, &b)| b).map(|(x, _)| x).collect();
        (pick(&self.left[e]), pick(&self.right[e]))
    }

    fn swapped(self) -> Self {
        MultTable { left: self.right, right: self.left }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum LeftKind {
    Overlap,
    Strong,
    TwoSided,
    PrefixOnly,
    SubwordFree,
}

/// Left and right multiplicative generators for `lms` over `nvars` generators.
pub fn assign_multiplicative(division: Division, lms: &[Word], nvars: usize) -> MultTable {
    let m = lms.len();
    let kind = match division {
        Division::Left => return MultTable::filled(m, nvars, true, false),
        Division::Right => return MultTable::filled(m, nvars, false, true),
        d if d.is_right_handed() => {
            let rev: Vec<Word> = lms.iter().map(|w| w.reversed()).collect();
            return assign_multiplicative(d.mirror(), &rev, nvars).swapped();
        }
        Division::LeftOverlap => LeftKind::Overlap,
        Division::StrongLeftOverlap => LeftKind::Strong,
        Division::TwoSidedLeftOverlap => LeftKind::TwoSided,
        Division::PrefixOnlyLeftOverlap => LeftKind::PrefixOnly,
        _ => LeftKind::SubwordFree,
    };
    // stable sort, descending by DegRevLex
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| MonomialOrdering::DegRevLex.compare(&lms[b], &lms[a]));
    let sorted: Vec<&Word> = order.iter().map(|&k| &lms[k]).collect();
    let t = local_left_table(kind, &sorted, nvars);
    let mut out = MultTable::filled(m, nvars, true, true);
    for (pos, &k) in order.iter().enumerate() {
        out.left[k] = t.left[pos].clone();
        out.right[k] = t.right[pos].clone();
    }
    out
}

// The left-handed local divisions on a DegRevLex-descending list.
fn local_left_table(kind: LeftKind, u: &[&Word], n: usize) -> MultTable {
    let m = u.len();
    let mut t = MultTable::filled(m, n, true, true);
    for i in 0..m {
        for j in i..m {
            let a = u[i].letters();
            let b = u[j].letters();
            let (alpha, beta) = (a.len(), b.len());
            if i != j && alpha >= beta {
                // k is 1-based; u_j sits at letters k..k+beta-1 of u_i
                let last = alpha - beta + 1;
                for k in 1..=last {
                    let rule_applies = match kind {
                        LeftKind::Overlap | LeftKind::Strong => k < last,
                        LeftKind::PrefixOnly => k == 1 && k < last,
                        LeftKind::TwoSided => true,
                        LeftKind::SubwordFree => false,
                    };
                    if !rule_applies || a[k - 1..k - 1 + beta] != *b {
                        continue;
                    }
                    if k < last {
                        t.right[j][a[k + beta - 1] as usize] = false;
                    } else if k >= 2 {
                        t.left[j][a[k - 2] as usize] = false;
                    }
                }
            }
            for k in 1..beta {
                if k >= alpha {
                    break;
                }
                if a[..k] == b[beta - k..] {
                    let xr = a[k] as usize;
                    if kind == LeftKind::TwoSided {
                        let xl = b[beta - k - 1] as usize;
                        if t.left[i][xl] && t.right[j][xr] {
                            t.right[j][xr] = false;
                        }
                    } else {
                        t.right[j][xr] = false;
                    }
                }
                if a[alpha - k..] == b[..k] {
                    let xr = b[k] as usize;
                    if kind == LeftKind::TwoSided {
                        let xl = a[alpha - k - 1] as usize;
                        if t.right[i][xr] && t.left[j][xl] {
                            t.left[j][xl] = false;
                        }
                    } else {
                        t.right[i][xr] = false;
                    }
                }
            }
        }
    }
    if kind == LeftKind::Strong {
        // every u_j must contain a right-nonmultiplicative variable of u_i
        for i in (0..m).rev() {
            for j in (0..m).rev() {
                let b = u[j].letters();
                if !b.is_empty() && b.iter().all(|&x| t.right[i][x as usize]) {
                    t.right[i][b[0] as usize] = false;
                }
            }
        }
    }
    t
}

/// Whether `u2` placed at 0-based `pos` in `u1` is admitted by the given sets.
fn admits(u1: &Word, pos: usize, len: usize, left: &[bool], right: &[bool], mode: DivisorMode) -> bool {
    let l = &u1.letters()[..pos];
    let r = &u1.letters()[pos + len..];
    match mode {
        DivisorMode::Thin => {
            l.last().is_none_or(|&x| left[x as usize]) && r.first().is_none_or(|&x| right[x as usize])
        }
        DivisorMode::Thick => l.iter().all(|&x| left[x as usize]) && r.iter().all(|&x| right[x as usize]),
    }
}

/// The admitted placement `u1 = u3 · u2 · u4` with minimal `u3`, if any.
pub fn involutively_divides(
    u2: &Word,
    u1: &Word,
    left: &[bool],
    right: &[bool],
    mode: DivisorMode,
) -> Option<(Word, Word)> {
    u1.occurrences(u2)
        .find(|&pos| admits(u1, pos, u2.degree(), left, right, mode))
        .map(|pos| (u1.slice(0, pos), u1.slice(pos + u2.degree(), u1.degree())))
}

/// Single comparison for the global divisions: suffix test for `Left`,
/// prefix test for `Right`.
pub fn fast_inv_divides_global(u2: &Word, u1: &Word, division: Division) -> Result<Option<(Word, Word)>> {
    match division {
        Division::Left => {
            Ok(u1.ends_with(u2).then(|| (u1.slice(0, u1.degree() - u2.degree()), Word::one())))
        }
        Division::Right => Ok(u1.starts_with(u2).then(|| (Word::one(), u1.slice(u2.degree(), u1.degree())))),
        d => Err(Error::Argument(format!("the fast global test does not apply to the {} division", d.name()))),
    }
}

/// 1-based first placement worth testing for thick divisors under a division
/// with all variables left multiplicative: placements ending at or after the
/// last right-nonmultiplicative letter of `u` (beyond position `deg lm`) are skipped.
pub fn overlap_skip_offset(u: &Word, lm: &Word, right: &[bool]) -> usize {
    let (alpha, beta) = (u.degree(), lm.degree());
    let mut k = alpha;
    while k > beta {
        if !right[u.at(k - 1)] {
            return k - beta + 1;
        }
        k -= 1;
    }
    1
}

// 0-based exclusive upper bound on starts for the mirror of the skip: every
// letter left of the start must be left multiplicative.
fn overlap_start_bound(u: &Word, left: &[bool]) -> usize {
    u.letters().iter().position(|&x| !left[x as usize]).unwrap_or(u.degree())
}

/// Finds involutive divisors among a fixed list of lead monomials.
pub struct InvolutiveDivider<'a> {
    pub division: Division,
    pub mode: DivisorMode,
    pub table: &'a MultTable,
    pub lms: &'a [Word],
}

impl InvolutiveDivider<'_> {
    /// Admitted placement of element `e` in `u`, as a 0-based start.
    pub fn placement(&self, e: usize, u: &Word) -> Option<usize> {
        let lm = &self.lms[e];
        if lm.degree() > u.degree() {
            return None;
        }
        match (self.division, self.mode) {
            (Division::Left, _) => u.ends_with(lm).then(|| u.degree() - lm.degree()),
            (Division::Right, _) => u.starts_with(lm).then_some(0),
            (d, DivisorMode::Thick) if d.is_one_sided_overlap() && !d.is_right_handed() => {
                let start = overlap_skip_offset(u, lm, &self.table.right[e]) - 1;
                (start..=u.degree() - lm.degree()).find(|&s| u.occurs_at(lm, s))
            }
            (d, DivisorMode::Thick) if d.is_one_sided_overlap() => {
                let bound = overlap_start_bound(u, &self.table.left[e]).min(u.degree() - lm.degree());
                (0..=bound).find(|&s| u.occurs_at(lm, s))
            }
            _ => u
                .occurrences(lm)
                .find(|&pos| admits(u, pos, lm.degree(), &self.table.left[e], &self.table.right[e], self.mode)),
        }
    }

    /// First element (in list order, restricted by `allowed`) involutively dividing `u`.
    pub fn find(&self, u: &Word, allowed: &dyn Fn(usize) -> bool) -> Option<(usize, usize)> {
        (0..self.lms.len()).filter(|&e| allowed(e)).find_map(|e| self.placement(e, u).map(|p| (e, p)))
    }

    /// Every admitted (element, start) pair for `u`.
    pub fn all_divisors(&self, u: &Word) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (e, lm) in self.lms.iter().enumerate() {
            for pos in u.occurrences(lm) {
                if admits(u, pos, lm.degree(), &self.table.left[e], &self.table.right[e], self.mode) {
                    out.push((e, pos));
                }
            }
        }
        out
    }
}

/// Result of an involutive division.
#[derive(Clone, Debug)]
pub struct InvolutiveDivision {
    pub remainder: Polynomial,
    /// Quotient log over the basis positions.
    pub log: LoggedRepresentation,
    /// Single reduction steps performed.
    pub steps: usize,
}

fn rem_involutive(
    p: &Polynomial,
    basis: &[Polynomial],
    divider: &InvolutiveDivider<'_>,
    allowed: &dyn Fn(usize) -> bool,
    logging: bool,
) -> InvolutiveDivision {
    let mut q = p.clone();
    let mut log = LoggedRepresentation::new();
    let mut steps = 0;
    let mut i = 0;
    while i < q.len() {
        let t = &q.terms()[i];
        match divider.find(&t.word, allowed) {
            Some((e, at)) => {
                let d = &basis[e];
                let c = &t.coeff / d.lc().expect("basis elements are nonzero");
                let l = t.word.slice(0, at);
                let r = t.word.slice(at + divider.lms[e].degree(), t.word.degree());
                q.add_multiple(&-c.clone(), &l, d, &r);
                if logging {
                    log.add(c, l, e, r);
                }
                steps += 1;
            }
            None => i += 1,
        }
    }
    InvolutiveDivision { remainder: q, log, steps }
}

fn lead_monomials(ps: &[Polynomial]) -> Vec<Word> {
    ps.iter().map(|p| p.lm().expect("basis elements are nonzero").clone()).collect()
}

/// Involutive remainder of `p` with respect to `basis` under `table`.
pub fn inv_divide(
    p: &Polynomial,
    basis: &[Polynomial],
    division: Division,
    table: &MultTable,
    mode: DivisorMode,
) -> InvolutiveDivision {
    let lms = lead_monomials(basis);
    let divider = InvolutiveDivider { division, mode, table, lms: &lms };
    rem_involutive(p, basis, &divider, &|_| true, true)
}

/// Counters shared by autoreduction and the basis algorithm.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct InvolutiveStats {
    /// Prolongations whose reduction was attempted.
    pub prolongations: usize,
    /// Single involutive reduction steps.
    pub reductions: usize,
}

/// Autoreduces `ps` (zero elements dropped), carrying logs when given.
pub fn autoreduce_logged(
    ps: Vec<Polynomial>,
    logs: Option<Vec<LoggedRepresentation>>,
    division: Division,
    mode: DivisorMode,
    nvars: usize,
    stats: &mut InvolutiveStats,
) -> (Vec<Polynomial>, Option<Vec<LoggedRepresentation>>) {
    let logging = logs.is_some();
    let mut items: Vec<(Polynomial, LoggedRepresentation)> = match logs {
        Some(ls) => ps.into_iter().zip(ls).filter(|(p, _)| !p.is_zero()).collect(),
        None => ps.into_iter().filter(|p| !p.is_zero()).map(|p| (p, LoggedRepresentation::new())).collect(),
    };
    'scan: loop {
        let basis: Vec<Polynomial> = items.iter().map(|(p, _)| p.clone()).collect();
        let lms = lead_monomials(&basis);
        let table = assign_multiplicative(division, &lms, nvars);
        let divider = InvolutiveDivider { division, mode, table: &table, lms: &lms };
        for i in 0..items.len() {
            let out = rem_involutive(&basis[i], &basis, &divider, &|e| e != i, logging);
            stats.reductions += out.steps;
            if out.steps == 0 {
                continue;
            }
            let (_, own) = items.remove(i);
            if !out.remainder.is_zero() {
                let mut l = own;
                if logging {
                    let logs: Vec<LoggedRepresentation> = {
                        // positions in `basis` still refer to the pre-removal list
                        let mut v: Vec<LoggedRepresentation> = items.iter().map(|(_, l)| l.clone()).collect();
                        v.insert(i, LoggedRepresentation::new());
                        v
                    };
                    l.add_scaled(&out.log.substitute(&logs), &-Rational::one(), &Word::one(), &Word::one());
                }
                items.push((out.remainder, l));
            }
            continue 'scan;
        }
        break;
    }
    let (ps, ls): (Vec<_>, Vec<_>) = items.into_iter().unzip();
    (ps, logging.then_some(ls))
}

/// Autoreduces `ps` under `division`.
pub fn autoreduce(ps: &[Polynomial], division: Division, mode: DivisorMode, nvars: usize) -> Vec<Polynomial> {
    autoreduce_logged(ps.to_vec(), None, division, mode, nvars, &mut InvolutiveStats::default()).0
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvolutiveOptions {
    pub division: Division,
    pub mode: DivisorMode,
    pub limits: Limits,
    pub logging: bool,
}

impl InvolutiveOptions {
    pub fn new(division: Division) -> Self {
        InvolutiveOptions { division, mode: DivisorMode::Thin, limits: Limits::default(), logging: false }
    }
}

#[derive(Clone, Debug)]
pub struct InvolutiveBasisResult {
    pub basis: Vec<Polynomial>,
    pub table: MultTable,
    /// Per basis element, over the original input list.
    pub logs: Option<Vec<LoggedRepresentation>>,
    pub stats: InvolutiveStats,
    pub status: Status,
    /// Complete with thin divisors, so locally involutive promotes to involutive.
    pub involutive: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Side {
    Left,
    Right,
}

/// Prolongations `x · g` and `g · x` by nonmultiplicative `x`, sorted by lead
/// monomial ascending, then element index, left before right, then variable.
fn prolongations(basis: &[Polynomial], table: &MultTable, nvars: usize) -> Vec<(Polynomial, usize, Side, usize)> {
    let one = Rational::one();
    let mut out = Vec::new();
    for (e, g) in basis.iter().enumerate() {
        for x in 0..nvars {
            if !table.left[e][x] {
                out.push((g.mul_words(&one, &Word::var(x), &Word::one()), e, Side::Left, x));
            }
            if !table.right[e][x] {
                out.push((g.mul_words(&one, &Word::one(), &Word::var(x)), e, Side::Right, x));
            }
        }
    }
    if let Some(ord) = basis.first().map(|g| g.ordering()) {
        out.sort_by(|a, b| {
            ord.compare(a.0.lm().expect("nonzero"), b.0.lm().expect("nonzero"))
                .then(a.1.cmp(&b.1))
                .then(a.2.cmp(&b.2))
                .then(a.3.cmp(&b.3))
        });
    }
    out
}

/// The involutive basis algorithm over `nvars` generators. On `Complete`
/// every prolongation of the basis involutively reduces to zero.
pub fn involutive_basis(inputs: &[Polynomial], nvars: usize, opts: &InvolutiveOptions) -> Result<InvolutiveBasisResult> {
    common_ordering(inputs, MonomialOrdering::DegLex)?;
    let (division, mode) = (opts.division, opts.mode);
    let mut stats = InvolutiveStats::default();
    let logs = opts.logging.then(|| (0..inputs.len()).map(LoggedRepresentation::input).collect());
    let (mut basis, mut logs) = autoreduce_logged(inputs.to_vec(), logs, division, mode, nvars, &mut stats);
    let mut status = Status::Complete;
    loop {
        let lms = lead_monomials(&basis);
        let table = assign_multiplicative(division, &lms, nvars);
        let divider = InvolutiveDivider { division, mode, table: &table, lms: &lms };
        let mut found = None;
        for (s, e, side, x) in prolongations(&basis, &table, nvars) {
            if stats.prolongations >= opts.limits.max_iterations {
                status = Status::IterationCapHit;
                break;
            }
            stats.prolongations += 1;
            let out = rem_involutive(&s, &basis, &divider, &|_| true, opts.logging);
            stats.reductions += out.steps;
            if !out.remainder.is_zero() {
                found = Some((out, e, side, x));
                break;
            }
        }
        let Some((out, e, side, x)) = found else {
            if status == Status::Complete {
                let involutive = mode == DivisorMode::Thin;
                return Ok(InvolutiveBasisResult { basis, table, logs, stats, status, involutive });
            }
            return Ok(InvolutiveBasisResult { basis, table, logs, stats, status, involutive: false });
        };
        if out.remainder.lm().expect("nonzero").degree() > opts.limits.max_degree {
            let involutive = false;
            return Ok(InvolutiveBasisResult { basis, table, logs, stats, status: Status::DegreeCapHit, involutive });
        }
        if let Some(ls) = logs.as_mut() {
            let (l, r) = match side {
                Side::Left => (Word::var(x), Word::one()),
                Side::Right => (Word::one(), Word::var(x)),
            };
            let mut rep = LoggedRepresentation::new();
            rep.add_scaled(&ls[e], &Rational::one(), &l, &r);
            rep.add_scaled(&out.log.substitute(ls), &-Rational::one(), &Word::one(), &Word::one());
            ls.push(rep);
        }
        basis.push(out.remainder);
        let next = autoreduce_logged(basis, logs, division, mode, nvars, &mut stats);
        basis = next.0;
        logs = next.1;
    }
}

/// Whether every prolongation of `basis` involutively reduces to zero.
pub fn is_locally_involutive(basis: &[Polynomial], division: Division, mode: DivisorMode, nvars: usize) -> bool {
    let lms = lead_monomials(basis);
    let table = assign_multiplicative(division, &lms, nvars);
    let divider = InvolutiveDivider { division, mode, table: &table, lms: &lms };
    prolongations(basis, &table, nvars)
        .iter()
        .all(|(s, ..)| rem_involutive(s, basis, &divider, &|_| true, false).remainder.is_zero())
}
