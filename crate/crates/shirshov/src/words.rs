//! Classical (operator-free) word combinatorics: the lex and deg-lex orders,
//! Lyndon-Shirshov and super-Lyndon-Shirshov predicates, Lyndon factorization
//! and the canonical bracketing of SLS words.
//!
//! The lex convention throughout is the one every later construction assumes:
//! the empty word is lex-greatest, so a proper prefix is *greater* than its
//! extensions. Letter order is the alphabet declaration order.
//!
//! The algorithms are written over an arbitrary letter type with an explicit
//! comparator; the operator layer reuses them with primes as letters.

use std::cmp::Ordering;

use crate::alphabet::{letter_cmp, GradedAlphabet, LetterId, Parity};
use crate::error::{Error, Result};

/// A nonempty word over the alphabet's letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlainWord(Vec<LetterId>);

impl PlainWord {
    pub fn new(letters: Vec<LetterId>) -> Result<PlainWord> {
        if letters.is_empty() {
            return Err(Error::Domain("words are nonempty".into()));
        }
        Ok(PlainWord(letters))
    }

    pub fn letters(&self) -> &[LetterId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn text(&self, alphabet: &GradedAlphabet) -> String {
        self.0
            .iter()
            .map(|&l| alphabet.letter_name(l))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A nonassociative word: a binary bracketing whose leaves are letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PlainTree {
    Leaf(LetterId),
    Pair(Box<PlainTree>, Box<PlainTree>),
}

impl PlainTree {
    pub fn flatten(&self) -> Vec<LetterId> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<LetterId>) {
        match self {
            PlainTree::Leaf(l) => out.push(*l),
            PlainTree::Pair(a, b) => {
                a.collect(out);
                b.collect(out);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Generic core over an arbitrary letter type.
// ---------------------------------------------------------------------------

/// Generic bracketing tree; `Leaf` holds a borrowed letter index into the
/// input word so callers can rebuild their own tree types.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Bracket {
    Leaf(usize),
    Pair(Box<Bracket>, Box<Bracket>),
}

impl Bracket {
    pub(crate) fn span(&self) -> (usize, usize) {
        match self {
            Bracket::Leaf(i) => (*i, *i),
            Bracket::Pair(a, b) => (a.span().0, b.span().1),
        }
    }
}

/// Lex order with the empty-word-greatest rule: compare head letters, recurse
/// on tails, and when one side runs out first it wins.
pub(crate) fn lex_cmp_by<T>(
    u: &[T],
    v: &[T],
    cmp: &mut impl FnMut(&T, &T) -> Ordering,
) -> Ordering {
    let mut i = 0;
    loop {
        match (u.get(i), v.get(i)) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Greater,
            (Some(_), None) => return Ordering::Less,
            (Some(a), Some(b)) => match cmp(a, b) {
                Ordering::Equal => i += 1,
                other => return other,
            },
        }
    }
}

/// Degree first, then lex.
pub(crate) fn deglex_cmp_by<T>(
    u: &[T],
    v: &[T],
    cmp: &mut impl FnMut(&T, &T) -> Ordering,
) -> Ordering {
    u.len()
        .cmp(&v.len())
        .then_with(|| lex_cmp_by(u, v, cmp))
}

/// Lyndon-Shirshov predicate: `u = vw > wv` in lex for every proper split.
pub(crate) fn is_ls_word_by<T>(u: &[T], cmp: &mut impl FnMut(&T, &T) -> Ordering) -> bool {
    if u.is_empty() {
        return false;
    }
    for cut in 1..u.len() {
        let mut rotated: Vec<&T> = Vec::with_capacity(u.len());
        rotated.extend(u[cut..].iter());
        rotated.extend(u[..cut].iter());
        let original: Vec<&T> = u.iter().collect();
        if lex_cmp_by(&original, &rotated, &mut |a, b| cmp(a, b)) != Ordering::Greater {
            return false;
        }
    }
    true
}

/// Splits a candidate square `u = vv` and returns `v` when the halves agree.
pub(crate) fn square_root<T: PartialEq>(u: &[T]) -> Option<&[T]> {
    if u.len() < 2 || u.len() % 2 != 0 {
        return None;
    }
    let half = u.len() / 2;
    if u[..half] == u[half..] {
        Some(&u[..half])
    } else {
        None
    }
}

/// SLS predicate: LS, or the square of an odd LS word.
pub(crate) fn is_sls_word_by<T: PartialEq>(
    u: &[T],
    cmp: &mut impl FnMut(&T, &T) -> Ordering,
    parity_of: &mut impl FnMut(&T) -> Parity,
) -> bool {
    if is_ls_word_by(u, cmp) {
        return true;
    }
    if let Some(v) = square_root(u) {
        if is_ls_word_by(v, cmp) && slice_parity(v, parity_of).is_odd() {
            return true;
        }
    }
    false
}

pub(crate) fn slice_parity<T>(u: &[T], parity_of: &mut impl FnMut(&T) -> Parity) -> Parity {
    u.iter()
        .fold(Parity::Even, |acc, t| acc.plus(parity_of(t)))
}

/// Length of the longest proper LS suffix of an LS word; this split realizes
/// the canonical bracketing. Both split parts are again LS.
pub(crate) fn standard_split<T>(
    u: &[T],
    cmp: &mut impl FnMut(&T, &T) -> Ordering,
) -> Option<usize> {
    debug_assert!(u.len() >= 2);
    (1..u.len())
        .find(|&start| is_ls_word_by(&u[start..], cmp))
}

fn bracket_range<T: PartialEq>(
    u: &[T],
    lo: usize,
    hi: usize,
    cmp: &mut impl FnMut(&T, &T) -> Ordering,
) -> Result<Bracket> {
    let w = &u[lo..hi];
    if w.len() == 1 {
        return Ok(Bracket::Leaf(lo));
    }
    let start = standard_split(w, cmp).ok_or_else(|| {
        Error::Internal("LS word admits no standard factorization".into())
    })?;
    debug_assert!(is_ls_word_by(&w[..start], cmp));
    Ok(Bracket::Pair(
        Box::new(bracket_range(u, lo, lo + start, cmp)?),
        Box::new(bracket_range(u, lo + start, hi, cmp)?),
    ))
}

/// Canonical bracketing of an SLS word: squares bracket as `[[v][v]]`, LS
/// words recurse on the longest-proper-LS-suffix split.
pub(crate) fn sls_bracket_by<T: PartialEq>(
    u: &[T],
    cmp: &mut impl FnMut(&T, &T) -> Ordering,
    parity_of: &mut impl FnMut(&T) -> Parity,
) -> Result<Bracket> {
    if !is_sls_word_by(u, cmp, parity_of) {
        return Err(Error::Domain("not an SLS word".into()));
    }
    if is_ls_word_by(u, cmp) {
        bracket_range(u, 0, u.len(), cmp)
    } else {
        let half = u.len() / 2;
        Ok(Bracket::Pair(
            Box::new(bracket_range(u, 0, half, cmp)?),
            Box::new(bracket_range(u, half, u.len(), cmp)?),
        ))
    }
}

/// Duval's linear factorization adapted to the lex convention here: the
/// factors are LS and run nondecreasing left to right. Returns index ranges.
pub(crate) fn lyndon_factorize_by<T>(
    u: &[T],
    cmp: &mut impl FnMut(&T, &T) -> Ordering,
) -> Vec<(usize, usize)> {
    // Duval over the reversed letter order: a word is LS for our convention
    // exactly when it is classical-Lyndon for the reversed order.
    let n = u.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && cmp(&u[k], &u[j]) != Ordering::Less {
            if cmp(&u[k], &u[j]) == Ordering::Greater {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            out.push((i, i + j - k));
            i += j - k;
        }
    }
    out
}

/// Predicate for SLS monomials: conditions (a)-(c) on LS monomials, plus the
/// odd-square top shape. Used by the bracketing-uniqueness oracle and by the
/// engine's debug assertions.
pub(crate) fn is_sls_monomial_generic<T: Clone + PartialEq>(
    tree: &GenTree<T>,
    cmp: &mut impl FnMut(&T, &T) -> Ordering,
    parity_of: &mut impl FnMut(&T) -> Parity,
) -> bool {
    if is_ls_monomial_generic(tree, cmp) {
        return true;
    }
    if let GenTree::Pair(l, r) = tree {
        return l == r
            && is_ls_monomial_generic(l, cmp)
            && slice_parity(&l.flatten(), parity_of).is_odd();
    }
    false
}

fn is_ls_monomial_generic<T: Clone + PartialEq>(
    tree: &GenTree<T>,
    cmp: &mut impl FnMut(&T, &T) -> Ordering,
) -> bool {
    match tree {
        GenTree::Leaf(_) => true,
        GenTree::Pair(l, r) => {
            if !is_ls_word_by(&tree.flatten(), cmp) {
                return false;
            }
            if !is_ls_monomial_generic(l, cmp) || !is_ls_monomial_generic(r, cmp) {
                return false;
            }
            if let GenTree::Pair(_, l2) = &**l {
                let v2 = l2.flatten();
                let w = r.flatten();
                if lex_cmp_by(&v2, &w, cmp) == Ordering::Greater {
                    return false;
                }
            }
            true
        }
    }
}

/// Generic binary tree over owned letters, for oracles and predicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum GenTree<T> {
    Leaf(T),
    Pair(Box<GenTree<T>>, Box<GenTree<T>>),
}

impl<T: Clone> GenTree<T> {
    pub(crate) fn flatten(&self) -> Vec<T> {
        match self {
            GenTree::Leaf(t) => vec![t.clone()],
            GenTree::Pair(a, b) => {
                let mut out = a.flatten();
                out.extend(b.flatten());
                out
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Concrete letter-level operations.
// ---------------------------------------------------------------------------

/// Parity of a word: mod-2 sum of the parities of its letter occurrences.
pub fn parity(alphabet: &GradedAlphabet, w: &PlainWord) -> Parity {
    slice_parity(w.letters(), &mut |&l| alphabet.parity(l))
}

/// The lex order on possibly-empty words. The empty word beats any nonempty
/// word, so prefixes are greater than their extensions.
pub fn lex_cmp(u: &[LetterId], v: &[LetterId]) -> Ordering {
    lex_cmp_by(u, v, &mut |&a, &b| letter_cmp(a, b))
}

/// Degree first, then lex.
pub fn deglex_cmp(u: &PlainWord, v: &PlainWord) -> Ordering {
    deglex_cmp_by(u.letters(), v.letters(), &mut |&a, &b| letter_cmp(a, b))
}

/// Lyndon-Shirshov predicate.
pub fn is_ls_word(w: &PlainWord) -> bool {
    is_ls_word_by(w.letters(), &mut |&a, &b| letter_cmp(a, b))
}

/// Super-Lyndon-Shirshov predicate: LS, or a square of an odd LS word.
pub fn is_sls_word(alphabet: &GradedAlphabet, w: &PlainWord) -> bool {
    is_sls_word_by(
        w.letters(),
        &mut |&a, &b| letter_cmp(a, b),
        &mut |&l| alphabet.parity(l),
    )
}

/// The unique bracketing of an SLS word that is an SLS monomial.
pub fn sls_bracket(alphabet: &GradedAlphabet, w: &PlainWord) -> Result<PlainTree> {
    let bracket = sls_bracket_by(
        w.letters(),
        &mut |&a, &b| letter_cmp(a, b),
        &mut |&l| alphabet.parity(l),
    )?;
    Ok(to_plain_tree(&bracket, w.letters()))
}

fn to_plain_tree(b: &Bracket, letters: &[LetterId]) -> PlainTree {
    match b {
        Bracket::Leaf(i) => PlainTree::Leaf(letters[*i]),
        Bracket::Pair(l, r) => PlainTree::Pair(
            Box::new(to_plain_tree(l, letters)),
            Box::new(to_plain_tree(r, letters)),
        ),
    }
}

/// Factor a word into LS factors, nondecreasing in lex left to right.
pub fn lyndon_factorize(w: &PlainWord) -> Vec<PlainWord> {
    lyndon_factorize_by(w.letters(), &mut |&a, &b| letter_cmp(a, b))
        .into_iter()
        .map(|(lo, hi)| PlainWord(w.letters()[lo..hi].to_vec()))
        .collect()
}
