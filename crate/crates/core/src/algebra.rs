//! Words, terms and polynomials of the free associative algebra over the rationals.
//!
//! A [`Word`] is a flat sequence of generator indices; index 0 is the
//! highest-priority generator of its [`Alphabet`]. A [`Polynomial`] keeps its
//! terms strictly descending under the ordering it is tagged with, and the
//! zero polynomial is the empty term list.

use std::cmp::Ordering as Cmp;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::orderings::MonomialOrdering;

pub type Rational = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `n / d` as a rational. Panics when `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Ordered generator names, highest priority first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    // indices sorted by descending name length, for longest-first matching
    by_len: Vec<usize>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::Argument("alphabet must not be empty".into()));
        }
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref().trim();
            let mut chars = n.chars();
            let valid = match chars.next() {
                Some(c) => {
                    (c.is_alphabetic() || c == '_') && chars.all(|c| c.is_alphanumeric() || c == '_')
                }
                None => false,
            };
            if !valid {
                return Err(Error::Argument(format!("invalid generator name `{n}`")));
            }
            if out.iter().any(|m| m == n) {
                return Err(Error::Argument(format!("duplicate generator name `{n}`")));
            }
            out.push(n.to_string());
        }
        let mut by_len: Vec<usize> = (0..out.len()).collect();
        by_len.sort_by(|&a, &b| out[b].chars().count().cmp(&out[a].chars().count()));
        Ok(Alphabet { names: out, by_len })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Longest generator name starting at `pos`, as (index, length in chars).
    fn match_at(&self, chars: &[char], pos: usize) -> Option<(usize, usize)> {
        for &i in &self.by_len {
            let len = self.names[i].chars().count();
            if pos + len <= chars.len() && self.names[i].chars().eq(chars[pos..pos + len].iter().copied()) {
                return Some((i, len));
            }
        }
        None
    }

    /// Parses a monomial such as `x^2*y`; `1` is the unit word.
    pub fn word(&self, text: &str) -> Result<Word> {
        let p = parse_polynomial(text, self, MonomialOrdering::DegLex)?;
        match p.terms() {
            [t] if t.coeff.is_one() => Ok(t.word.clone()),
            _ => Err(Error::Argument(format!("`{text}` is not a monomial"))),
        }
    }
}

/// A monomial: a sequence of generator indices. The derived `Ord` is a
/// plain container order, not a monomial ordering.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn one() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn from_indices(ix: &[usize]) -> Self {
        Word(ix.iter().map(|&i| i as u32).collect())
    }

    /// The word consisting of the single generator `x`.
    pub fn var(x: usize) -> Self {
        Word(vec![x as u32])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Generator index at 0-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `l · m · r`.
    pub fn sandwich(l: &Word, m: &Word, r: &Word) -> Word {
        let mut v = Vec::with_capacity(l.0.len() + m.0.len() + r.0.len());
        v.extend_from_slice(&l.0);
        v.extend_from_slice(&m.0);
        v.extend_from_slice(&r.0);
        Word(v)
    }

    /// Letters `i..=j`, 1-based.
    pub fn subword(&self, i: usize, j: usize) -> Result<Word> {
        if i < 1 || i > j || j > self.degree() {
            return Err(Error::Argument(format!(
                "subword({i}, {j}) out of range for a word of degree {}",
                self.degree()
            )));
        }
        Ok(Word(self.0[i - 1..j].to_vec()))
    }

    /// First `i` letters, `1 <= i <= deg`.
    pub fn prefix(&self, i: usize) -> Result<Word> {
        self.subword(1, i)
    }

    /// Last `i` letters, `1 <= i <= deg`.
    pub fn suffix(&self, i: usize) -> Result<Word> {
        let d = self.degree();
        if i < 1 || i > d {
            return Err(Error::Argument(format!("suffix({i}) out of range for a word of degree {d}")));
        }
        self.subword(d - i + 1, d)
    }

    /// Letters in the 0-based half-open range.
    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    pub fn reversed(&self) -> Word {
        let mut v = self.0.clone();
        v.reverse();
        Word(v)
    }

    pub fn starts_with(&self, p: &Word) -> bool {
        self.0.starts_with(&p.0)
    }

    pub fn ends_with(&self, s: &Word) -> bool {
        self.0.ends_with(&s.0)
    }

    /// Whether `sub` occurs at 0-based position `at`.
    pub fn occurs_at(&self, sub: &Word, at: usize) -> bool {
        at + sub.degree() <= self.degree() && self.0[at..at + sub.degree()] == sub.0[..]
    }

    /// 0-based start positions of `sub` in `self`, ascending.
    pub fn occurrences<'a>(&'a self, sub: &'a Word) -> impl Iterator<Item = usize> + 'a {
        let n = self.degree();
        let m = sub.degree();
        let last = if m <= n { n - m + 1 } else { 0 };
        (0..last).filter(move |&i| self.0[i..i + m] == sub.0[..])
    }

    /// Conventional divisibility: `sub` is a subword of `self`.
    pub fn contains(&self, sub: &Word) -> bool {
        self.occurrences(sub).next().is_some()
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            let name = alphabet.name(self.0[i] as usize);
            if j - i == 1 {
                parts.push(name.to_string());
            } else {
                parts.push(format!("{}^{}", name, j - i));
            }
            i = j;
        }
        parts.join("*")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Rational,
    pub word: Word,
}

impl Term {
    pub fn new(coeff: Rational, word: Word) -> Self {
        Term { coeff, word }
    }

    pub fn one() -> Self {
        Term { coeff: Rational::one(), word: Word::one() }
    }

    pub fn word(word: Word) -> Self {
        Term { coeff: Rational::one(), word }
    }
}

/// Sum of nonzero terms with pairwise distinct words, strictly descending
/// under `ord`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    terms: Vec<Term>,
    ord: MonomialOrdering,
}

impl Polynomial {
    pub fn zero(ord: MonomialOrdering) -> Self {
        Polynomial { terms: Vec::new(), ord }
    }

    /// Builds a normalized polynomial from arbitrary (coefficient, word) pairs.
    pub fn from_terms<I>(ord: MonomialOrdering, terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Word)>,
    {
        let raw: Vec<Term> = terms.into_iter().map(|(c, w)| Term::new(c, w)).collect();
        Polynomial { terms: normalize(ord, raw), ord }
    }

    pub fn monomial(ord: MonomialOrdering, coeff: Rational, word: Word) -> Self {
        Self::from_terms(ord, [(coeff, word)])
    }

    pub fn constant(ord: MonomialOrdering, c: Rational) -> Self {
        Self::monomial(ord, c, Word::one())
    }

    pub fn ordering(&self) -> MonomialOrdering {
        self.ord
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    /// Number of terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn lt(&self) -> Result<&Term> {
        self.terms
            .first()
            .ok_or_else(|| Error::Argument("the zero polynomial has no lead term".into()))
    }

    pub fn lm(&self) -> Result<&Word> {
        self.lt().map(|t| &t.word)
    }

    pub fn lc(&self) -> Result<&Rational> {
        self.lt().map(|t| &t.coeff)
    }

    /// Degree of the term of maximal degree; 0 for the zero polynomial.
    pub fn total_degree(&self) -> usize {
        self.terms.iter().map(|t| t.word.degree()).max().unwrap_or(0)
    }

    pub fn is_normalized(&self) -> bool {
        self.terms.iter().all(|t| !t.coeff.is_zero())
            && self
                .terms
                .windows(2)
                .all(|w| self.ord.compare(&w[0].word, &w[1].word) == Cmp::Greater)
    }

    /// Re-runs normalization; the identity on every value built through this API.
    pub fn normalized(&self) -> Self {
        Polynomial { terms: normalize(self.ord, self.terms.clone()), ord: self.ord }
    }

    /// The same polynomial with terms re-sorted under `ord`.
    pub fn with_ordering(&self, ord: MonomialOrdering) -> Self {
        Polynomial { terms: normalize(ord, self.terms.clone()), ord }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.ord);
        }
        let terms = self.terms.iter().map(|t| Term::new(&t.coeff * c, t.word.clone())).collect();
        Polynomial { terms, ord: self.ord }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    /// Divides through by the lead coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            Some(t) if !t.coeff.is_one() => self.scale(&t.coeff.recip()),
            _ => self.clone(),
        }
    }

    /// `self + scalar · other`.
    pub fn combine(&self, other: &Polynomial, scalar: &Rational) -> Result<Polynomial> {
        if self.ord != other.ord {
            return Err(Error::Argument(format!(
                "cannot combine polynomials tagged {} and {}",
                self.ord, other.ord
            )));
        }
        let mut out = self.clone();
        out.add_multiple(scalar, &Word::one(), other, &Word::one());
        Ok(out)
    }

    /// `self += c · l · p · r`. `p` is assumed to share this ordering tag.
    pub fn add_multiple(&mut self, c: &Rational, l: &Word, p: &Polynomial, r: &Word) {
        if c.is_zero() || p.is_zero() {
            return;
        }
        let product = p.product_terms(c, l, r);
        let old = std::mem::take(&mut self.terms);
        self.terms = merge(self.ord, old, product);
    }

    fn product_terms(&self, c: &Rational, l: &Word, r: &Word) -> Vec<Term> {
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|t| Term::new(&t.coeff * c, Word::sandwich(l, &t.word, r)))
            .collect();
        if self.ord.is_admissible() {
            terms
        } else {
            normalize(self.ord, terms)
        }
    }

    /// `c · l · self · r` for words `l`, `r`.
    pub fn mul_words(&self, c: &Rational, l: &Word, r: &Word) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.ord);
        }
        Polynomial { terms: self.product_terms(c, l, r), ord: self.ord }
    }

    /// `l · p · r` for terms `l`, `r`.
    pub fn term_mul(l: &Term, p: &Polynomial, r: &Term) -> Polynomial {
        let c = &l.coeff * &r.coeff;
        p.mul_words(&c, &l.word, &r.word)
    }

    /// Terms whose words satisfy `keep`, order preserved.
    pub fn filter_terms<F: Fn(&Term) -> bool>(&self, keep: F) -> Polynomial {
        Polynomial { terms: self.terms.iter().filter(|t| keep(t)).cloned().collect(), ord: self.ord }
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let a = t.coeff.abs();
            if t.word.is_one() {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&t.word.format(alphabet));
            } else {
                s.push_str(&a.to_string());
                s.push('*');
                s.push_str(&t.word.format(alphabet));
            }
        }
        s
    }
}

fn normalize(ord: MonomialOrdering, mut terms: Vec<Term>) -> Vec<Term> {
    terms.sort_by(|a, b| ord.compare(&b.word, &a.word));
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for t in terms {
        match out.last_mut() {
            Some(last) if last.word == t.word => last.coeff += t.coeff,
            _ => out.push(t),
        }
        if out.last().is_some_and(|l| l.coeff.is_zero()) {
            out.pop();
        }
    }
    out
}

fn merge(ord: MonomialOrdering, a: Vec<Term>, b: Vec<Term>) -> Vec<Term> {
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ia = a.into_iter().peekable();
    let mut ib = b.into_iter().peekable();
    loop {
        let step = match (ia.peek(), ib.peek()) {
            (Some(x), Some(y)) => ord.compare(&x.word, &y.word),
            (Some(_), None) => {
                out.extend(ia);
                break;
            }
            (None, Some(_)) => {
                out.extend(ib);
                break;
            }
            (None, None) => break,
        };
        match step {
            Cmp::Greater => out.push(ia.next().unwrap()),
            Cmp::Less => out.push(ib.next().unwrap()),
            Cmp::Equal => {
                let x = ia.next().unwrap();
                let y = ib.next().unwrap();
                let c = x.coeff + y.coeff;
                if !c.is_zero() {
                    out.push(Term::new(c, x.word));
                }
            }
        }
    }
    out
}

/// Parses `text` under the polynomial grammar: terms joined by `+`/`-`; a term
/// is `coeff`, `coeff*word` or `word`; a word is `*`-separated factors `gen`
/// or `gen^k`; coefficients are integers or `a/b`.
pub fn parse_polynomial(text: &str, alphabet: &Alphabet, ord: MonomialOrdering) -> Result<Polynomial> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0, alphabet };
    let terms = p.polynomial()?;
    Ok(Polynomial::from_terms(ord, terms))
}

pub fn format_polynomial(p: &Polynomial, alphabet: &Alphabet) -> String {
    p.format(alphabet)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { col: self.pos + 1, msg: msg.into() })
    }

    fn polynomial(&mut self) -> Result<Vec<(Rational, Word)>> {
        let mut terms = Vec::new();
        if self.peek().is_none() {
            return self.err("empty polynomial");
        }
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -Rational::one()
            }
            Some('+') => {
                self.pos += 1;
                Rational::one()
            }
            _ => Rational::one(),
        };
        loop {
            let (c, w) = self.term()?;
            terms.push((sign * c, w));
            match self.peek() {
                None => break,
                Some('+') => {
                    self.pos += 1;
                    sign = Rational::one();
                }
                Some('-') => {
                    self.pos += 1;
                    sign = -Rational::one();
                }
                Some(ch) => return self.err(format!("unexpected `{ch}`, expected `+`, `-`, `*` or end of input")),
            }
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<(Rational, Word)> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.coefficient()?;
                if self.peek() == Some('*') {
                    self.pos += 1;
                    let w = self.word()?;
                    Ok((coeff, w))
                } else {
                    Ok((coeff, Word::one()))
                }
            }
            Some(_) => Ok((Rational::one(), self.word()?)),
            None => self.err("expected a term"),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse::<BigInt>().expect("digits parse as an integer"))
    }

    fn coefficient(&mut self) -> Result<Rational> {
        let n = self.integer()?;
        if self.peek() == Some('/') {
            self.pos += 1;
            let at = self.pos;
            let d = self.integer()?;
            if d.is_zero() {
                self.pos = at;
                return self.err("zero denominator");
            }
            Ok(BigRational::new(n, d))
        } else {
            Ok(BigRational::from_integer(n))
        }
    }

    fn word(&mut self) -> Result<Word> {
        let mut letters = Vec::new();
        loop {
            self.skip_ws();
            let Some((g, len)) = self.alphabet.match_at(&self.chars, self.pos) else {
                return self.unknown_generator();
            };
            self.pos += len;
            let mut k = 1usize;
            if self.peek() == Some('^') {
                self.pos += 1;
                let at = self.pos;
                let e = self.integer()?;
                k = match usize::try_from(e) {
                    Ok(k) if k >= 1 => k,
                    _ => {
                        self.pos = at;
                        return self.err("exponent must be a positive integer");
                    }
                };
            }
            letters.extend(std::iter::repeat_n(g as u32, k));
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(Word::new(letters))
    }

    fn unknown_generator<T>(&mut self) -> Result<T> {
        self.skip_ws();
        let start = self.pos;
        let mut end = start;
        while end < self.chars.len() && (self.chars[end].is_alphanumeric() || self.chars[end] == '_') {
            end += 1;
        }
        if end == start {
            return match self.chars.get(start) {
                Some(ch) => self.err(format!("unexpected `{ch}`, expected a generator")),
                None => self.err("unexpected end of input, expected a generator"),
            };
        }
        Err(Error::UnknownGenerator { name: self.chars[start..end].iter().collect(), col: start + 1 })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz() -> Alphabet {
        Alphabet::new(&["x", "y", "z"]).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &xyz(), MonomialOrdering::DegLex).unwrap()
    }

    #[test]
    fn subword_prefix_suffix() {
        let a = xyz();
        let m = a.word("z*y*x^2").unwrap();
        assert_eq!(m.subword(2, 3).unwrap(), a.word("y*x").unwrap());
        let m = a.word("x^2*y*z").unwrap();
        assert_eq!(m.prefix(3).unwrap(), a.word("x^2*y").unwrap());
        let m = a.word("y^2*z*x").unwrap();
        assert_eq!(m.suffix(4).unwrap(), m);
        assert!(m.subword(0, 1).is_err());
        assert!(m.subword(3, 2).is_err());
        assert!(m.subword(1, 5).is_err());
    }

    #[test]
    fn concatenation() {
        let a = Alphabet::new(&["x1", "x2", "x3"]).unwrap();
        let u = a.word("x3^2*x2").unwrap();
        let v = a.word("x1^3*x3").unwrap();
        assert_eq!(u.concat(&v), a.word("x3^2*x2*x1^3*x3").unwrap());
        assert_eq!(Word::one().concat(&v), v);
        let b = xyz();
        let w = b.word("x*y").unwrap().concat(&b.word("y*x").unwrap());
        assert_eq!(w.letters(), &[0, 1, 1, 0]);
    }

    #[test]
    fn combine_examples() {
        let ba = Alphabet::new(&["b", "a"]).unwrap();
        let ord = MonomialOrdering::DegRevLex;
        let f = parse_polynomial("2*b^2 + 2*b*a + 6*a", &ba, ord).unwrap();
        let g = parse_polynomial("2*b^2 + a*b + 4*b", &ba, ord).unwrap();
        let d = f.combine(&g, &rat(-1)).unwrap();
        assert_eq!(d.format(&ba), "2*b*a - a*b + 6*a - 4*b");
        let ab = Alphabet::new(&["a", "b"]).unwrap();
        let f = parse_polynomial("2*b^2 + 2*b*a + 6*a", &ab, MonomialOrdering::DegLex).unwrap();
        let g = parse_polynomial("2*b^2 + a*b + 4*b", &ab, MonomialOrdering::DegLex).unwrap();
        let want = parse_polynomial("2*b*a - a*b + 6*a - 4*b", &ab, MonomialOrdering::DegLex).unwrap();
        assert_eq!(f.combine(&g, &rat(-1)).unwrap(), want);
        assert!(f.combine(&f, &rat(-1)).unwrap().is_zero());
        assert_eq!(p("x + z").combine(&p("-x"), &rat(1)).unwrap(), p("z"));
        let other = p("x").with_ordering(MonomialOrdering::DegRevLex);
        assert!(p("x").combine(&other, &rat(1)).is_err());
    }

    #[test]
    fn term_multiplication() {
        let a = xyz();
        let q = Polynomial::term_mul(
            &Term::new(ratio(3, 5), a.word("x*y*x").unwrap()),
            &p("5*z^2*x + 2*y^2 + x + 4"),
            &Term::word(a.word("x^2").unwrap()),
        );
        assert_eq!(q, p("3*x*y*x*z^2*x^3 + 6/5*x*y*x*y^2*x^2 + 3/5*x*y*x^4 + 12/5*x*y*x^3"));
        let f = p("x*y - z");
        assert_eq!(Polynomial::term_mul(&Term::one(), &f, &Term::one()), f);
        let q = Polynomial::term_mul(&Term::word(Word::var(0)), &p("y + 1"), &Term::one());
        assert_eq!(q.terms().len(), 2);
        assert_eq!(q, p("x*y + x"));
    }

    #[test]
    fn parse_and_format() {
        let f = p("x*y - z");
        assert_eq!(f.terms()[0], Term::new(rat(1), Word::from_indices(&[0, 1])));
        assert_eq!(f.terms()[1], Term::new(rat(-1), Word::from_indices(&[2])));
        let ab = Alphabet::new(&["x", "y"]).unwrap();
        let g = parse_polynomial("2*x^2*y^2 - 2*x*y^2 + x^2", &ab, MonomialOrdering::DegLex).unwrap();
        assert_eq!(g.format(&ab), "2*x^2*y^2 - 2*x*y^2 + x^2");
        assert_eq!(g.len(), 3);
        let e = parse_polynomial("q", &xyz(), MonomialOrdering::DegLex).unwrap_err();
        assert_eq!(e, Error::UnknownGenerator { name: "q".into(), col: 1 });
        assert!(matches!(
            parse_polynomial("x + ", &xyz(), MonomialOrdering::DegLex),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_polynomial("1/0*x", &xyz(), MonomialOrdering::DegLex),
            Err(Error::Parse { col: 3, .. })
        ));
        assert_eq!(p(" - 3/6 * x ^ 2 + 0*y"), p("-1/2*x*x"));
        assert_eq!(p("0").format(&xyz()), "0");
        assert!(p("0").is_zero());
    }

    #[test]
    fn longest_generator_match() {
        let a = Alphabet::new(&["x", "x1", "x10"]).unwrap();
        let w = a.word("x10*x1*x").unwrap();
        assert_eq!(w.letters(), &[2, 1, 0]);
        assert!(Alphabet::new(&["x", "x"]).is_err());
        assert!(Alphabet::new::<&str>(&[]).is_err());
        assert!(Alphabet::new(&["1x"]).is_err());
    }

    #[test]
    fn lead_accessors_on_zero_fail() {
        let z = Polynomial::zero(MonomialOrdering::DegLex);
        assert!(z.lt().is_err());
        assert!(z.lm().is_err());
        assert!(z.lc().is_err());
        let f = p("2*y + 3*x*x");
        assert_eq!(f.lm().unwrap(), &Word::from_indices(&[0, 0]));
        assert_eq!(f.lc().unwrap(), &rat(3));
    }

    #[test]
    fn occurrences_and_affixes() {
        let a = xyz();
        let u = a.word("x*y*x*y*x").unwrap();
        let v = a.word("x*y*x").unwrap();
        assert_eq!(u.occurrences(&v).collect::<Vec<_>>(), vec![0, 2]);
        assert!(u.starts_with(&v) && u.ends_with(&v));
        assert!(!v.contains(&u));
        assert_eq!(u.reversed(), u);
    }
}
