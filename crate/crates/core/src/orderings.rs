//! Monomial orderings on words and their functional decompositions.
//!
//! Comparisons are implemented directly. The decomposition into ordering
//! functions exists for the walk, which needs the initial of a polynomial
//! with respect to the first function (the degree).

use std::cmp::Ordering as Cmp;
use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::algebra::{Polynomial, Word};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrdering {
    DegLex,
    DegInvLex,
    DegRevLex,
    /// Not admissible; kept only to exhibit the failure.
    Lex,
    /// Not admissible; kept only to exhibit the failure.
    InvLex,
}

impl MonomialOrdering {
    pub const ADMISSIBLE: [MonomialOrdering; 3] =
        [MonomialOrdering::DegLex, MonomialOrdering::DegInvLex, MonomialOrdering::DegRevLex];

    /// Total order on words. Generator index 0 is the largest variable.
    pub fn compare(self, a: &Word, b: &Word) -> Cmp {
        let (x, y) = (a.letters(), b.letters());
        match self {
            MonomialOrdering::DegLex => x.len().cmp(&y.len()).then_with(|| first_diff(x, y).reverse()),
            MonomialOrdering::DegInvLex => x.len().cmp(&y.len()).then_with(|| first_diff(x, y)),
            MonomialOrdering::DegRevLex => x.len().cmp(&y.len()).then_with(|| {
                // from the right, the word carrying the larger variable is smaller
                x.iter().rev().zip(y.iter().rev()).map(|(p, q)| p.cmp(q)).find(|c| c.is_ne()).unwrap_or(Cmp::Equal)
            }),
            MonomialOrdering::Lex => {
                // a proper prefix is smaller
                first_diff(x, y).reverse().then_with(|| x.len().cmp(&y.len()))
            }
            MonomialOrdering::InvLex => {
                // a proper prefix is greater
                first_diff(x, y).then_with(|| y.len().cmp(&x.len()))
            }
        }
    }

    pub fn greater(self, a: &Word, b: &Word) -> bool {
        self.compare(a, b) == Cmp::Greater
    }

    pub fn is_admissible(self) -> bool {
        matches!(self, MonomialOrdering::DegLex | MonomialOrdering::DegInvLex | MonomialOrdering::DegRevLex)
    }

    /// Errors unless the ordering may drive a basis computation.
    pub fn require_admissible(self) -> Result<()> {
        if self.is_admissible() {
            Ok(())
        } else {
            Err(Error::NotAdmissible(self.to_string()))
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrdering::DegLex => "deglex",
            MonomialOrdering::DegInvLex => "deginvlex",
            MonomialOrdering::DegRevLex => "degrevlex",
            MonomialOrdering::Lex => "lex",
            MonomialOrdering::InvLex => "invlex",
        }
    }

    /// Short tag used in output file names.
    pub fn abbrev(self) -> &'static str {
        match self {
            MonomialOrdering::DegLex => "deg",
            MonomialOrdering::DegInvLex => "dinv",
            MonomialOrdering::DegRevLex => "drev",
            MonomialOrdering::Lex => "lex",
            MonomialOrdering::InvLex => "invlex",
        }
    }

    /// Parses an ordering name; `lex`/`invlex` require `allow_unsafe`.
    pub fn from_name(name: &str, allow_unsafe: bool) -> Result<Self> {
        let o = match name.to_ascii_lowercase().as_str() {
            "deglex" => MonomialOrdering::DegLex,
            "deginvlex" => MonomialOrdering::DegInvLex,
            "degrevlex" => MonomialOrdering::DegRevLex,
            "lex" => MonomialOrdering::Lex,
            "invlex" => MonomialOrdering::InvLex,
            other => return Err(Error::Argument(format!("unknown ordering `{other}`"))),
        };
        if !o.is_admissible() && !allow_unsafe {
            return Err(Error::NotAdmissible(o.to_string()));
        }
        Ok(o)
    }

    /// Ordering functions `θ_1, ..., θ_len`; `None` for the non-admissible orderings.
    pub fn decomposition(self, len: usize) -> Option<Vec<OrderingFunction>> {
        if !self.is_admissible() {
            return None;
        }
        Some(
            (1..=len)
                .map(|i| match (i, self) {
                    (1, _) => OrderingFunction::Degree,
                    (_, MonomialOrdering::DegLex) => OrderingFunction::ComplementValuing(i - 1),
                    (_, MonomialOrdering::DegInvLex) => OrderingFunction::Valuing(i - 1),
                    _ => OrderingFunction::ReverseValuing(i - 1),
                })
                .collect(),
        )
    }

    /// Whether the two orderings share an identical, extendible first ordering function.
    pub fn harmonious_with(self, other: MonomialOrdering) -> bool {
        self.is_admissible() && other.is_admissible()
    }
}

impl fmt::Display for MonomialOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

// Compares the first differing letters by index; equal when one is a prefix of the other.
fn first_diff(x: &[u32], y: &[u32]) -> Cmp {
    x.iter().zip(y).map(|(p, q)| p.cmp(q)).find(|c| c.is_ne()).unwrap_or(Cmp::Equal)
}

/// A map from words to integers. Positions are 1-based; letters value as
/// their 1-based generator index, and an undefined position values as `n + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderingFunction {
    Degree,
    /// `val_i`: the letter at position `i` from the left.
    Valuing(usize),
    /// `n + 1 - val_i`.
    ComplementValuing(usize),
    /// The letter at position `i` from the right.
    ReverseValuing(usize),
}

impl OrderingFunction {
    /// Value on `w` over an alphabet of `n` generators.
    pub fn eval(self, w: &Word, n: usize) -> i64 {
        let val = |pos: usize| -> i64 {
            if pos >= 1 && pos <= w.degree() {
                w.at(pos - 1) as i64 + 1
            } else {
                n as i64 + 1
            }
        };
        match self {
            OrderingFunction::Degree => w.degree() as i64,
            OrderingFunction::Valuing(i) => val(i),
            OrderingFunction::ComplementValuing(i) => n as i64 + 1 - val(i),
            OrderingFunction::ReverseValuing(i) => {
                if i >= 1 && i <= w.degree() {
                    val(w.degree() + 1 - i)
                } else {
                    n as i64 + 1
                }
            }
        }
    }
}

/// Terms of `p` with maximal `θ`-value, in their original order.
pub fn initial(p: &Polynomial, theta: OrderingFunction, n: usize) -> Result<Polynomial> {
    if p.is_zero() {
        return Err(Error::Argument("the initial of the zero polynomial is undefined".into()));
    }
    let best = p.terms().iter().map(|t| theta.eval(&t.word, n)).max().expect("nonzero");
    Ok(p.filter_terms(|t| theta.eval(&t.word, n) == best))
}

/// Compares through the decomposition: the first function on which the words differ decides.
pub fn compare_by_decomposition(ord: MonomialOrdering, a: &Word, b: &Word, n: usize) -> Option<Cmp> {
    let len = a.degree().max(b.degree()) + 1;
    let fs = ord.decomposition(len)?;
    Some(fs.iter().map(|f| f.eval(a, n).cmp(&f.eval(b, n))).find(|c| c.is_ne()).unwrap_or(Cmp::Equal))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AdmissibilityWitness {
    /// `m < 1` for a nonunit `m`.
    BelowUnit(Word),
    /// `a < b` but `l·a·r > l·b·r`.
    NotCompatible { a: Word, b: Word, l: Word, r: Word },
}

#[derive(Clone, Debug)]
pub struct AdmissibilityReport {
    pub ordering: MonomialOrdering,
    pub checks: usize,
    pub counterexample: Option<AdmissibilityWitness>,
}

impl AdmissibilityReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Exhaustive check on short words over two letters, then `samples` random
/// checks over three letters with words of degree at most 4.
pub fn admissibility_check(ord: MonomialOrdering, samples: usize, seed: u64) -> AdmissibilityReport {
    let mut checks = 0usize;
    let mut witness = None;
    let test = |a: &Word, b: &Word, l: &Word, r: &Word, checks: &mut usize| -> Option<AdmissibilityWitness> {
        *checks += 1;
        if !a.is_one() && ord.compare(a, &Word::one()) != Cmp::Greater {
            return Some(AdmissibilityWitness::BelowUnit(a.clone()));
        }
        let (a, b) = match ord.compare(a, b) {
            Cmp::Less => (a, b),
            Cmp::Greater => (b, a),
            Cmp::Equal => return None,
        };
        if ord.compare(&Word::sandwich(l, a, r), &Word::sandwich(l, b, r)) != Cmp::Less {
            return Some(AdmissibilityWitness::NotCompatible { a: a.clone(), b: b.clone(), l: l.clone(), r: r.clone() });
        }
        None
    };
    let short = all_words(2, 2);
    let tiny = all_words(2, 1);
    'outer: for a in &short {
        for b in &short {
            for l in &tiny {
                for r in &tiny {
                    if let Some(w) = test(a, b, l, r, &mut checks) {
                        witness = Some(w);
                        break 'outer;
                    }
                }
            }
        }
    }
    if witness.is_none() {
        let mut rng = StdRng::seed_from_u64(seed);
        let rand_word = |rng: &mut StdRng, max: usize| {
            let d = rng.gen_range(0..=max);
            Word::new((0..d).map(|_| rng.gen_range(0..3u32)).collect())
        };
        for _ in 0..samples {
            let a = rand_word(&mut rng, 4);
            let b = rand_word(&mut rng, 4);
            let l = rand_word(&mut rng, 4);
            let r = rand_word(&mut rng, 4);
            if let Some(w) = test(&a, &b, &l, &r, &mut checks) {
                witness = Some(w);
                break;
            }
        }
    }
    AdmissibilityReport { ordering: ord, checks, counterexample: witness }
}

/// Every word over `n` letters of degree at most `max`, in increasing degree.
pub fn all_words(n: u32, max: usize) -> Vec<Word> {
    let mut out = vec![Word::one()];
    let mut layer = vec![Vec::<u32>::new()];
    for _ in 0..max {
        let mut next = Vec::with_capacity(layer.len() * n as usize);
        for w in &layer {
            for x in 0..n {
                let mut v = w.clone();
                v.push(x);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned().map(Word::new));
        layer = next;
    }
    out
}
