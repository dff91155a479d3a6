//! Omega-words: words whose letters may be operator applications, nested to
//! any depth, together with their weight tuples, the Deg-lex order, SLS
//! recognition and canonical bracketing, contexts (words with one hole) and
//! occurrence search.
//!
//! A word is a nonempty sequence of primes; a prime is a letter, an operator
//! applied to words, or the hole symbol. The SLS structure is layered: a word
//! is SLS when every operator argument anywhere inside it is SLS and the
//! top-level prime sequence is an SLS word over the prime alphabet ordered by
//! the restriction of Deg-lex.

use std::cmp::Ordering;

use crate::alphabet::{letter_cmp, op_cmp, GradedAlphabet, LetterId, OpId, Parity};
use crate::error::{Error, Result};
use crate::words::{
    is_ls_word_by, is_sls_word_by, lyndon_factorize_by, slice_parity, sls_bracket_by,
    square_root, Bracket,
};

/// Resource limits for enumeration and reduction. Exceeding any limit yields
/// a budget error rather than unbounded work.
#[derive(Debug, Clone)]
pub struct Budget {
    /// Cap on words produced by an enumeration.
    pub max_words: usize,
    /// Cap on rewriting steps in a single reduction.
    pub max_steps: usize,
    /// Cap on the support size of intermediate elements.
    pub max_terms: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_words: 200_000,
            max_steps: 200_000,
            max_terms: 1_000_000,
        }
    }
}

/// A prime: a letter, an operator applied to argument words, or the hole.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Prime {
    Letter(LetterId),
    Op(OpId, Vec<OmegaWord>),
    Star,
}

impl Prime {
    /// Total occurrences of letters and operator symbols; the hole counts 1.
    pub fn deg(&self) -> usize {
        match self {
            Prime::Letter(_) | Prime::Star => 1,
            Prime::Op(_, args) => 1 + args.iter().map(OmegaWord::deg).sum::<usize>(),
        }
    }

    pub fn dep(&self) -> usize {
        match self {
            Prime::Letter(_) | Prime::Star => 0,
            Prime::Op(_, args) => 1 + args.iter().map(OmegaWord::dep).max().unwrap_or(0),
        }
    }

    pub fn parity(&self, alphabet: &GradedAlphabet) -> Parity {
        match self {
            Prime::Letter(l) => alphabet.parity(*l),
            Prime::Star => Parity::Even,
            Prime::Op(_, args) => args
                .iter()
                .fold(Parity::Even, |acc, a| acc.plus(a.parity(alphabet))),
        }
    }

    pub fn text(&self, alphabet: &GradedAlphabet) -> String {
        match self {
            Prime::Letter(l) => alphabet.letter_name(*l).to_string(),
            Prime::Star => "\u{2605}".to_string(),
            Prime::Op(o, args) => format!(
                "{}({})",
                alphabet.operator_name(*o),
                args.iter()
                    .map(|a| a.text(alphabet))
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        }
    }
}

/// Compare primes by the restriction of the Deg-lex order: degree first, then
/// letters by the alphabet order, operator applications by operator and then
/// arguments left to right. Letters and operator applications never tie on
/// degree since operator primes have degree at least two.
pub fn prime_cmp(a: &Prime, b: &Prime) -> Ordering {
    match a.deg().cmp(&b.deg()) {
        Ordering::Equal => {}
        other => return other,
    }
    match (a, b) {
        (Prime::Star, Prime::Star) => Ordering::Equal,
        (Prime::Star, _) => Ordering::Less,
        (_, Prime::Star) => Ordering::Greater,
        (Prime::Letter(x), Prime::Letter(y)) => letter_cmp(*x, *y),
        (Prime::Op(o1, args1), Prime::Op(o2, args2)) => match op_cmp(*o1, *o2) {
            Ordering::Equal => {
                for (u, v) in args1.iter().zip(args2.iter()) {
                    match dl_cmp(u, v) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                args1.len().cmp(&args2.len())
            }
            other => other,
        },
        (Prime::Letter(_), Prime::Op(..)) | (Prime::Op(..), Prime::Letter(_)) => {
            unreachable!("letter and operator primes never share a degree")
        }
    }
}

impl PartialOrd for Prime {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(prime_cmp(self, other))
    }
}

impl Ord for Prime {
    fn cmp(&self, other: &Self) -> Ordering {
        prime_cmp(self, other)
    }
}

/// An associative omega-word: a nonempty sequence of primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OmegaWord(Vec<Prime>);

impl OmegaWord {
    pub fn new(primes: Vec<Prime>) -> Result<OmegaWord> {
        if primes.is_empty() {
            return Err(Error::Domain("omega-words are nonempty".into()));
        }
        Ok(OmegaWord(primes))
    }

    pub(crate) fn from_primes(primes: Vec<Prime>) -> OmegaWord {
        debug_assert!(!primes.is_empty());
        OmegaWord(primes)
    }

    pub fn letter(l: LetterId) -> OmegaWord {
        OmegaWord(vec![Prime::Letter(l)])
    }

    pub fn prime(p: Prime) -> OmegaWord {
        OmegaWord(vec![p])
    }

    pub fn primes(&self) -> &[Prime] {
        &self.0
    }

    /// Total occurrences of letters and operator symbols.
    pub fn deg(&self) -> usize {
        self.0.iter().map(Prime::deg).sum()
    }

    /// Number of top-level primes.
    pub fn bre(&self) -> usize {
        self.0.len()
    }

    /// Operator nesting depth.
    pub fn dep(&self) -> usize {
        self.0.iter().map(Prime::dep).max().unwrap_or(0)
    }

    /// Multiset of letter occurrences at all depths, in reading order.
    pub fn supp(&self) -> Vec<LetterId> {
        let mut out = Vec::new();
        fn walk(primes: &[Prime], out: &mut Vec<LetterId>) {
            for p in primes {
                match p {
                    Prime::Letter(l) => out.push(*l),
                    Prime::Star => {}
                    Prime::Op(_, args) => {
                        for a in args {
                            walk(&a.0, out);
                        }
                    }
                }
            }
        }
        walk(&self.0, &mut out);
        out
    }

    /// Parity: the mod-2 sum over the letter support. A hole contributes
    /// even parity.
    pub fn parity(&self, alphabet: &GradedAlphabet) -> Parity {
        slice_parity(&self.0, &mut |p: &Prime| p.parity(alphabet))
    }

    pub fn star_count(&self) -> usize {
        fn count(primes: &[Prime]) -> usize {
            primes
                .iter()
                .map(|p| match p {
                    Prime::Star => 1,
                    Prime::Letter(_) => 0,
                    Prime::Op(_, args) => args.iter().map(|a| count(&a.0)).sum(),
                })
                .sum()
        }
        count(&self.0)
    }

    /// The weight tuple `(deg, bre, primes...)` compared lexicographically by
    /// the Deg-lex order.
    pub fn wt(&self) -> Wt {
        Wt {
            deg: self.deg(),
            bre: self.bre(),
            primes: self.0.clone(),
        }
    }

    pub fn text(&self, alphabet: &GradedAlphabet) -> String {
        self.0
            .iter()
            .map(|p| p.text(alphabet))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn concat(&self, other: &OmegaWord) -> OmegaWord {
        let mut primes = self.0.clone();
        primes.extend(other.0.iter().cloned());
        OmegaWord(primes)
    }
}

/// The weight tuple of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wt {
    pub deg: usize,
    pub bre: usize,
    pub primes: Vec<Prime>,
}

impl Wt {
    pub fn text(&self, alphabet: &GradedAlphabet) -> String {
        let mut parts = vec![self.deg.to_string(), self.bre.to_string()];
        parts.extend(self.primes.iter().map(|p| p.text(alphabet)));
        format!("({})", parts.join(", "))
    }
}

/// The Deg-lex order: weight tuples compared lexicographically.
pub fn dl_cmp(u: &OmegaWord, v: &OmegaWord) -> Ordering {
    match u.deg().cmp(&v.deg()) {
        Ordering::Equal => {}
        other => return other,
    }
    match u.bre().cmp(&v.bre()) {
        Ordering::Equal => {}
        other => return other,
    }
    for (p, q) in u.0.iter().zip(v.0.iter()) {
        match prime_cmp(p, q) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

impl PartialOrd for OmegaWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(dl_cmp(self, other))
    }
}

impl Ord for OmegaWord {
    fn cmp(&self, other: &Self) -> Ordering {
        dl_cmp(self, other)
    }
}

// ---------------------------------------------------------------------------
// SLS structure.
// ---------------------------------------------------------------------------

/// True when every operator argument anywhere in the word is recursively SLS
/// and the top-level prime sequence is an SLS word over the prime alphabet.
pub fn is_sls_omega_word(alphabet: &GradedAlphabet, u: &OmegaWord) -> bool {
    args_are_sls(alphabet, u)
        && is_sls_word_by(
            &u.0,
            &mut |a, b| prime_cmp(a, b),
            &mut |p: &Prime| p.parity(alphabet),
        )
}

fn args_are_sls(alphabet: &GradedAlphabet, u: &OmegaWord) -> bool {
    u.0.iter().all(|p| match p {
        Prime::Letter(_) => true,
        Prime::Star => false,
        Prime::Op(_, args) => args.iter().all(|a| is_sls_omega_word(alphabet, a)),
    })
}

/// SLS and not a square of an odd word.
pub fn is_pure_sls(alphabet: &GradedAlphabet, u: &OmegaWord) -> bool {
    if !is_sls_omega_word(alphabet, u) {
        return false;
    }
    match square_root(&u.0) {
        Some(v) => !slice_parity(v, &mut |p: &Prime| p.parity(alphabet)).is_odd(),
        None => true,
    }
}

// ---------------------------------------------------------------------------
// Nonassociative words and canonical bracketing.
// ---------------------------------------------------------------------------

/// A nonassociative omega-word: binary products over letters and operator
/// applications whose arguments are again nonassociative words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NATree {
    Leaf(LetterId),
    Op(OpId, Vec<NATree>),
    Pair(Box<NATree>, Box<NATree>),
    Star,
}

impl NATree {
    pub fn pair(l: NATree, r: NATree) -> NATree {
        NATree::Pair(Box::new(l), Box::new(r))
    }

    pub fn flatten(&self) -> OmegaWord {
        let mut primes = Vec::new();
        self.collect(&mut primes);
        OmegaWord(primes)
    }

    fn collect(&self, out: &mut Vec<Prime>) {
        match self {
            NATree::Leaf(l) => out.push(Prime::Letter(*l)),
            NATree::Star => out.push(Prime::Star),
            NATree::Op(o, args) => {
                out.push(Prime::Op(*o, args.iter().map(NATree::flatten).collect()))
            }
            NATree::Pair(a, b) => {
                a.collect(out);
                b.collect(out);
            }
        }
    }

    pub fn deg(&self) -> usize {
        self.flatten().deg()
    }

    pub fn parity(&self, alphabet: &GradedAlphabet) -> Parity {
        self.flatten().parity(alphabet)
    }

    pub fn text(&self, alphabet: &GradedAlphabet) -> String {
        match self {
            NATree::Leaf(l) => alphabet.letter_name(*l).to_string(),
            NATree::Star => "\u{2605}".to_string(),
            NATree::Op(o, args) => format!(
                "{}({})",
                alphabet.operator_name(*o),
                args.iter()
                    .map(|a| a.text(alphabet))
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
            NATree::Pair(a, b) => format!("({} {})", a.text(alphabet), b.text(alphabet)),
        }
    }
}

/// Canonical bracketing of a single prime: letters stay, operator
/// applications bracket their arguments.
pub(crate) fn bracket_prime(alphabet: &GradedAlphabet, p: &Prime) -> NATree {
    match p {
        Prime::Letter(l) => NATree::Leaf(*l),
        Prime::Star => NATree::Star,
        Prime::Op(o, args) => NATree::Op(
            *o,
            args.iter()
                .map(|a| bracket_primes_unchecked(alphabet, &a.0))
                .collect(),
        ),
    }
}

/// Canonical bracketing of an SLS prime sequence. Callers guarantee the
/// sequence is SLS over the prime order.
pub(crate) fn bracket_primes_unchecked(alphabet: &GradedAlphabet, primes: &[Prime]) -> NATree {
    let bracket = sls_bracket_by(
        primes,
        &mut |a, b| prime_cmp(a, b),
        &mut |p: &Prime| p.parity(alphabet),
    )
    .expect("caller guarantees an SLS prime sequence");
    bracket_to_tree(alphabet, &bracket, primes)
}

pub(crate) fn bracket_to_tree(
    alphabet: &GradedAlphabet,
    b: &Bracket,
    primes: &[Prime],
) -> NATree {
    match b {
        Bracket::Leaf(i) => bracket_prime(alphabet, &primes[*i]),
        Bracket::Pair(l, r) => NATree::pair(
            bracket_to_tree(alphabet, l, primes),
            bracket_to_tree(alphabet, r, primes),
        ),
    }
}

/// The canonical SLS monomial `[u]` of an SLS omega-word.
pub fn omega_bracket(alphabet: &GradedAlphabet, u: &OmegaWord) -> Result<NATree> {
    if !is_sls_omega_word(alphabet, u) {
        return Err(Error::Domain(format!(
            "`{}` is not an SLS omega-word",
            u.text(alphabet)
        )));
    }
    Ok(bracket_primes_unchecked(alphabet, &u.0))
}

/// Lyndon factor ranges of a prime sequence under the prime order.
pub(crate) fn prime_lyndon_factors(primes: &[Prime]) -> Vec<(usize, usize)> {
    lyndon_factorize_by(primes, &mut |a, b| prime_cmp(a, b))
}

pub(crate) fn primes_are_ls(primes: &[Prime]) -> bool {
    is_ls_word_by(primes, &mut |a, b| prime_cmp(a, b))
}

// ---------------------------------------------------------------------------
// Contexts.
// ---------------------------------------------------------------------------

/// An omega-word over the alphabet extended by the hole symbol, with exactly
/// one hole occurring as a whole prime.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Context(OmegaWord);

impl Context {
    pub fn new(word: OmegaWord) -> Result<Context> {
        match word.star_count() {
            1 => Ok(Context(word)),
            n => Err(Error::Domain(format!(
                "a context needs exactly one \u{2605}, found {n}"
            ))),
        }
    }

    /// The bare hole.
    pub fn identity() -> Context {
        Context(OmegaWord(vec![Prime::Star]))
    }

    pub fn is_identity(&self) -> bool {
        self.0 .0.len() == 1 && self.0 .0[0] == Prime::Star
    }

    pub fn word(&self) -> &OmegaWord {
        &self.0
    }

    pub fn text(&self, alphabet: &GradedAlphabet) -> String {
        self.0.text(alphabet)
    }

    /// Replace the hole by `v`, splicing its primes at breadth level.
    pub fn substitute(&self, v: &OmegaWord) -> OmegaWord {
        fn splice(primes: &[Prime], v: &OmegaWord) -> Vec<Prime> {
            let mut out = Vec::with_capacity(primes.len() + v.bre());
            for p in primes {
                match p {
                    Prime::Star => out.extend(v.0.iter().cloned()),
                    Prime::Letter(_) => out.push(p.clone()),
                    Prime::Op(o, args) => out.push(Prime::Op(
                        *o,
                        args.iter()
                            .map(|a| OmegaWord(splice(&a.0, v)))
                            .collect(),
                    )),
                }
            }
            out
        }
        OmegaWord(splice(&self.0 .0, v))
    }

    /// Position path of the hole: prime and argument indices from the top
    /// level down. Ordering paths lexicographically with longer-at-tie first
    /// ranks occurrences leftmost first, innermost first at equal positions.
    pub fn hole_path(&self) -> Vec<usize> {
        fn walk(primes: &[Prime], acc: &mut Vec<usize>) -> bool {
            for (idx, p) in primes.iter().enumerate() {
                match p {
                    Prime::Star => {
                        acc.push(idx);
                        return true;
                    }
                    Prime::Letter(_) => {}
                    Prime::Op(_, args) => {
                        for (ai, a) in args.iter().enumerate() {
                            acc.push(idx);
                            acc.push(ai);
                            if walk(&a.0, acc) {
                                return true;
                            }
                            acc.pop();
                            acc.pop();
                        }
                    }
                }
            }
            false
        }
        let mut acc = Vec::new();
        let found = walk(&self.0 .0, &mut acc);
        debug_assert!(found);
        acc
    }

    /// Nesting depth of the hole: 0 when the hole is a top-level prime.
    pub fn hole_depth(&self) -> usize {
        fn depth(primes: &[Prime]) -> Option<usize> {
            for p in primes {
                match p {
                    Prime::Star => return Some(0),
                    Prime::Letter(_) => {}
                    Prime::Op(_, args) => {
                        for a in args {
                            if let Some(d) = depth(&a.0) {
                                return Some(d + 1);
                            }
                        }
                    }
                }
            }
            None
        }
        depth(&self.0 .0).expect("context holds a hole")
    }
}

/// Every context with `substitute(ctx, v) = w`: breadth-level runs of
/// consecutive primes and occurrences nested inside operator arguments.
/// Contexts are produced leftmost first; at equal starting positions, nested
/// occurrences precede the breadth-level one.
pub fn occurrences(w: &OmegaWord, v: &OmegaWord) -> Vec<Context> {
    fn scan(primes: &[Prime], v: &OmegaWord, out: &mut Vec<Vec<Prime>>) {
        let vb = v.0.len();
        for idx in 0..primes.len() {
            if let Prime::Op(op, args) = &primes[idx] {
                for ai in 0..args.len() {
                    let mut inner = Vec::new();
                    scan(&args[ai].0, v, &mut inner);
                    for arg_primes in inner {
                        let mut new_args = args.clone();
                        new_args[ai] = OmegaWord(arg_primes);
                        let mut res = primes.to_vec();
                        res[idx] = Prime::Op(*op, new_args);
                        out.push(res);
                    }
                }
            }
            if idx + vb <= primes.len() && primes[idx..idx + vb] == v.0[..] {
                let mut res = primes[..idx].to_vec();
                res.push(Prime::Star);
                res.extend_from_slice(&primes[idx + vb..]);
                out.push(res);
            }
        }
    }
    let mut raw = Vec::new();
    scan(&w.0, v, &mut raw);
    raw.into_iter().map(|p| Context(OmegaWord(p))).collect()
}

// ---------------------------------------------------------------------------
// Enumeration.
// ---------------------------------------------------------------------------

/// All SLS omega-words of degree at most `maxdeg`, each exactly once, in
/// ascending Deg-lex order. Mirrors the layered definition: the prime pool at
/// degree `d` applies operators to already-enumerated SLS words, and prime
/// sequences are then filtered by the SLS predicate.
pub fn enumerate_sls_words(
    alphabet: &GradedAlphabet,
    maxdeg: usize,
    budget: &Budget,
) -> Result<Vec<OmegaWord>> {
    if maxdeg < 1 {
        return Err(Error::Domain("maxdeg must be at least 1".into()));
    }
    let mut by_degree: Vec<Vec<OmegaWord>> = vec![Vec::new(); maxdeg + 1];
    let mut total = 0usize;
    for d in 1..=maxdeg {
        // Primes of degree exactly e, for e <= d.
        let mut pool: Vec<Vec<Prime>> = vec![Vec::new(); d + 1];
        for e in 1..=d {
            pool[e] = prime_pool(alphabet, e, &by_degree);
        }
        let mut words = Vec::new();
        build_sequences(&pool, d, &mut Vec::new(), &mut words);
        let mut sls: Vec<OmegaWord> = words
            .into_iter()
            .filter(|w| {
                is_sls_word_by(
                    &w.0,
                    &mut |a, b| prime_cmp(a, b),
                    &mut |p: &Prime| p.parity(alphabet),
                )
            })
            .collect();
        sls.sort();
        total += sls.len();
        if total > budget.max_words {
            return Err(Error::Budget(format!(
                "enumeration exceeded {} words at degree {d}",
                budget.max_words
            )));
        }
        by_degree[d] = sls;
    }
    Ok(by_degree.into_iter().flatten().collect())
}

fn prime_pool(
    alphabet: &GradedAlphabet,
    deg: usize,
    sls_by_degree: &[Vec<OmegaWord>],
) -> Vec<Prime> {
    let mut out = Vec::new();
    if deg == 1 {
        out.extend(alphabet.letters().map(Prime::Letter));
        return out;
    }
    for op in alphabet.operators() {
        let arity = alphabet.arity(op);
        let mut tuple = Vec::new();
        fill_args(
            alphabet,
            op,
            arity,
            deg - 1,
            sls_by_degree,
            &mut tuple,
            &mut out,
        );
    }
    out
}

fn fill_args(
    alphabet: &GradedAlphabet,
    op: OpId,
    remaining_slots: usize,
    remaining_deg: usize,
    sls_by_degree: &[Vec<OmegaWord>],
    tuple: &mut Vec<OmegaWord>,
    out: &mut Vec<Prime>,
) {
    if remaining_slots == 0 {
        if remaining_deg == 0 {
            out.push(Prime::Op(op, tuple.clone()));
        }
        return;
    }
    let reserve = remaining_slots - 1;
    for d in 1..=remaining_deg.saturating_sub(reserve) {
        for w in &sls_by_degree[d] {
            tuple.push(w.clone());
            fill_args(
                alphabet,
                op,
                remaining_slots - 1,
                remaining_deg - d,
                sls_by_degree,
                tuple,
                out,
            );
            tuple.pop();
        }
    }
}

fn build_sequences(
    pool: &[Vec<Prime>],
    remaining: usize,
    acc: &mut Vec<Prime>,
    out: &mut Vec<OmegaWord>,
) {
    if remaining == 0 {
        out.push(OmegaWord(acc.clone()));
        return;
    }
    for e in 1..=remaining {
        for p in &pool[e] {
            acc.push(p.clone());
            build_sequences(pool, remaining - e, acc, out);
            acc.pop();
        }
    }
}

/// Exhaustive reference enumerator: every omega-word of degree at most
/// `maxdeg`, SLS or not, in ascending Deg-lex order. Independent of the SLS
/// enumerator; test oracles filter this list by the SLS predicate.
pub fn enumerate_all_words(
    alphabet: &GradedAlphabet,
    maxdeg: usize,
    budget: &Budget,
) -> Result<Vec<OmegaWord>> {
    if maxdeg < 1 {
        return Err(Error::Domain("maxdeg must be at least 1".into()));
    }
    let mut by_degree: Vec<Vec<OmegaWord>> = vec![Vec::new(); maxdeg + 1];
    let mut total = 0usize;
    for d in 1..=maxdeg {
        let mut pool: Vec<Vec<Prime>> = vec![Vec::new(); d + 1];
        for e in 1..=d {
            if e == 1 {
                pool[1] = alphabet.letters().map(Prime::Letter).collect();
                continue;
            }
            for op in alphabet.operators() {
                let arity = alphabet.arity(op);
                let mut tuple = Vec::new();
                fill_all_args(alphabet, op, arity, e - 1, &by_degree, &mut tuple, &mut pool[e]);
            }
        }
        let mut words = Vec::new();
        build_sequences(&pool, d, &mut Vec::new(), &mut words);
        words.sort();
        total += words.len();
        if total > budget.max_words {
            return Err(Error::Budget(format!(
                "enumeration exceeded {} words at degree {d}",
                budget.max_words
            )));
        }
        by_degree[d] = words;
    }
    Ok(by_degree.into_iter().flatten().collect())
}

fn fill_all_args(
    alphabet: &GradedAlphabet,
    op: OpId,
    remaining_slots: usize,
    remaining_deg: usize,
    by_degree: &[Vec<OmegaWord>],
    tuple: &mut Vec<OmegaWord>,
    out: &mut Vec<Prime>,
) {
    if remaining_slots == 0 {
        if remaining_deg == 0 {
            out.push(Prime::Op(op, tuple.clone()));
        }
        return;
    }
    let reserve = remaining_slots - 1;
    for d in 1..=remaining_deg.saturating_sub(reserve) {
        for w in &by_degree[d] {
            tuple.push(w.clone());
            fill_all_args(
                alphabet,
                op,
                remaining_slots - 1,
                remaining_deg - d,
                by_degree,
                tuple,
                out,
            );
            tuple.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::GradedAlphabet;

    fn xy_p() -> GradedAlphabet {
        GradedAlphabet::new(
            vec![
                ("x".to_string(), Parity::Even),
                ("y".to_string(), Parity::Odd),
            ],
            vec![("P".to_string(), 1)],
        )
        .unwrap()
    }

    fn lt(a: &GradedAlphabet, name: &str) -> Prime {
        Prime::Letter(a.letter_by_name(name).unwrap())
    }

    fn op(a: &GradedAlphabet, name: &str, args: Vec<OmegaWord>) -> Prime {
        Prime::Op(a.operator_by_name(name).unwrap(), args)
    }

    fn w(primes: Vec<Prime>) -> OmegaWord {
        OmegaWord::new(primes).unwrap()
    }

    #[test]
    fn supp_collects_all_depths() {
        let a = GradedAlphabet::new(
            vec![
                ("x1".to_string(), Parity::Even),
                ("x2".to_string(), Parity::Even),
            ],
            vec![("R".to_string(), 1), ("S".to_string(), 1)],
        )
        .unwrap();
        let x1 = a.letter_by_name("x1").unwrap();
        let x2 = a.letter_by_name("x2").unwrap();
        // x1 x2 R(x1 S(x2))
        let inner = w(vec![
            Prime::Letter(x1),
            op(&a, "S", vec![w(vec![Prime::Letter(x2)])]),
        ]);
        let word = w(vec![
            Prime::Letter(x1),
            Prime::Letter(x2),
            op(&a, "R", vec![inner]),
        ]);
        let mut supp = word.supp();
        supp.sort();
        assert_eq!(supp, vec![x1, x1, x2, x2]);
        assert_eq!(word.deg(), 6);
        assert_eq!(word.bre(), 3);
        assert_eq!(word.dep(), 2);
    }

    #[test]
    fn wt_examples() {
        let a = xy_p();
        let x = w(vec![lt(&a, "x")]);
        assert_eq!(x.wt().text(&a), "(1, 1, x)");
        let pxy = w(vec![op(&a, "P", vec![x.clone()]), lt(&a, "y")]);
        assert_eq!(pxy.wt().text(&a), "(3, 2, P(x), y)");
        let ppx = w(vec![op(&a, "P", vec![w(vec![op(&a, "P", vec![x])])])]);
        assert_eq!(ppx.wt().text(&a), "(3, 1, P(P(x)))");
    }

    #[test]
    fn dl_examples() {
        let a = xy_p();
        let x = w(vec![lt(&a, "x")]);
        let y = w(vec![lt(&a, "y")]);
        let px = w(vec![op(&a, "P", vec![x.clone()])]);
        assert_eq!(dl_cmp(&px, &x), Ordering::Greater);
        let px_x = w(vec![op(&a, "P", vec![x.clone()]), lt(&a, "x")]);
        let pxx = w(vec![op(&a, "P", vec![w(vec![lt(&a, "x"), lt(&a, "x")])])]);
        assert_eq!(dl_cmp(&px_x, &pxx), Ordering::Greater);
        let xy = w(vec![lt(&a, "x"), lt(&a, "y")]);
        let yx = w(vec![lt(&a, "y"), lt(&a, "x")]);
        assert_eq!(dl_cmp(&xy, &yx), Ordering::Greater);
        assert_eq!(dl_cmp(&x, &y), Ordering::Greater);
    }

    #[test]
    fn sls_recognition() {
        let a = xy_p();
        let x = w(vec![lt(&a, "x")]);
        let y = w(vec![lt(&a, "y")]);
        let px_x = w(vec![op(&a, "P", vec![x.clone()]), lt(&a, "x")]);
        assert!(is_sls_omega_word(&a, &px_x));
        let x_px = w(vec![lt(&a, "x"), op(&a, "P", vec![x.clone()])]);
        assert!(!is_sls_omega_word(&a, &x_px));
        // P(y x): the argument y x is not SLS.
        let p_yx = w(vec![op(&a, "P", vec![w(vec![lt(&a, "y"), lt(&a, "x")])])]);
        assert!(!is_sls_omega_word(&a, &p_yx));
        // Squares of odd words are SLS but not pure.
        let yy = w(vec![lt(&a, "y"), lt(&a, "y")]);
        assert!(is_sls_omega_word(&a, &yy));
        assert!(!is_pure_sls(&a, &yy));
        assert!(is_pure_sls(&a, &px_x));
        assert!(is_pure_sls(&a, &x));
        let _ = y;
    }

    #[test]
    fn bracket_examples() {
        let a = xy_p();
        let x = w(vec![lt(&a, "x")]);
        let px = omega_bracket(&a, &w(vec![op(&a, "P", vec![x.clone()])])).unwrap();
        assert_eq!(px.text(&a), "P(x)");
        let px_x = omega_bracket(&a, &w(vec![op(&a, "P", vec![x.clone()]), lt(&a, "x")]))
            .unwrap();
        assert_eq!(px_x.text(&a), "(P(x) x)");
        let px_x_x = omega_bracket(
            &a,
            &w(vec![op(&a, "P", vec![x.clone()]), lt(&a, "x"), lt(&a, "x")]),
        )
        .unwrap();
        assert_eq!(px_x_x.text(&a), "((P(x) x) x)");
        assert!(omega_bracket(&a, &w(vec![lt(&a, "x"), op(&a, "P", vec![x])])).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let budget = Budget::default();
        // One even letter with P, maxdeg 2.
        let a = GradedAlphabet::new(
            vec![("x".to_string(), Parity::Even)],
            vec![("P".to_string(), 1)],
        )
        .unwrap();
        let words = enumerate_sls_words(&a, 2, &budget).unwrap();
        let texts: Vec<String> = words.iter().map(|w| w.text(&a)).collect();
        assert_eq!(texts, vec!["x", "P(x)"]);

        // One odd letter, no operators, maxdeg 3: the cube is not SLS.
        let b = GradedAlphabet::new(
            vec![("x".to_string(), Parity::Odd)],
            Vec::<(String, usize)>::new(),
        )
        .unwrap();
        let words = enumerate_sls_words(&b, 3, &budget).unwrap();
        let texts: Vec<String> = words.iter().map(|w| w.text(&b)).collect();
        assert_eq!(texts, vec!["x", "x x"]);

        // maxdeg 1 yields exactly the letters.
        let c = xy_p();
        let words = enumerate_sls_words(&c, 1, &budget).unwrap();
        let texts: Vec<String> = words.iter().map(|w| w.text(&c)).collect();
        assert_eq!(texts, vec!["x", "y"]);
    }

    #[test]
    fn enumeration_matches_filter_oracle() {
        let a = xy_p();
        let budget = Budget::default();
        let fast = enumerate_sls_words(&a, 5, &budget).unwrap();
        let oracle: Vec<OmegaWord> = enumerate_all_words(&a, 5, &budget)
            .unwrap()
            .into_iter()
            .filter(|w| is_sls_omega_word(&a, w))
            .collect();
        assert_eq!(fast, oracle);
        // No duplicates, ascending order.
        for pair in fast.windows(2) {
            assert_eq!(dl_cmp(&pair[0], &pair[1]), Ordering::Less);
        }
    }

    #[test]
    fn occurrence_examples() {
        let a = xy_p();
        let x = w(vec![lt(&a, "x")]);
        let px_x = w(vec![op(&a, "P", vec![x.clone()]), lt(&a, "x")]);
        let occ = occurrences(&px_x, &x);
        let texts: Vec<String> = occ.iter().map(|c| c.text(&a)).collect();
        assert_eq!(texts, vec!["P(\u{2605}) x", "P(x) \u{2605}"]);

        let xx = w(vec![lt(&a, "x"), lt(&a, "x")]);
        assert_eq!(occurrences(&xx, &xx).len(), 1);
        assert!(occurrences(&xx, &xx)[0].is_identity());

        let xxx = w(vec![lt(&a, "x"), lt(&a, "x"), lt(&a, "x")]);
        let occ = occurrences(&xxx, &xx);
        let texts: Vec<String> = occ.iter().map(|c| c.text(&a)).collect();
        assert_eq!(texts, vec!["\u{2605} x", "x \u{2605}"]);
    }

    /// Brute-force context enumerator: every way to replace a breadth run at
    /// any nesting level by the hole.
    fn all_contexts(word: &OmegaWord) -> Vec<Context> {
        fn scan(primes: &[Prime], out: &mut Vec<Vec<Prime>>) {
            for idx in 0..primes.len() {
                if let Prime::Op(op, args) = &primes[idx] {
                    for ai in 0..args.len() {
                        let mut inner = Vec::new();
                        scan(&args[ai].0, &mut inner);
                        for arg_primes in inner {
                            let mut new_args = args.clone();
                            new_args[ai] = OmegaWord(arg_primes);
                            let mut res = primes.to_vec();
                            res[idx] = Prime::Op(*op, new_args);
                            out.push(res);
                        }
                    }
                }
                for len in 1..=primes.len() - idx {
                    let mut res = primes[..idx].to_vec();
                    res.push(Prime::Star);
                    res.extend_from_slice(&primes[idx + len..]);
                    out.push(res);
                }
            }
        }
        let mut raw = Vec::new();
        scan(&word.0, &mut raw);
        raw.into_iter().map(|p| Context(OmegaWord(p))).collect()
    }

    #[test]
    fn occurrences_match_substitution_oracle() {
        let a = xy_p();
        let budget = Budget::default();
        let words = enumerate_all_words(&a, 4, &budget).unwrap();
        let smalls: Vec<&OmegaWord> = words.iter().filter(|w| w.deg() <= 3).collect();
        for target in words.iter().filter(|w| w.deg() <= 4) {
            for v in &smalls {
                let found = occurrences(target, v);
                for ctx in &found {
                    assert_eq!(&ctx.substitute(v), target);
                }
                let brute = all_contexts(target)
                    .into_iter()
                    .filter(|c| &c.substitute(v) == target)
                    .count();
                assert_eq!(found.len(), brute, "target {}", target.text(&a));
            }
        }
    }

    #[test]
    fn parity_is_additive_under_substitution() {
        let a = xy_p();
        let budget = Budget::default();
        let words = enumerate_all_words(&a, 4, &budget).unwrap();
        for target in &words {
            for ctx in all_contexts(target) {
                for v in words.iter().filter(|v| v.deg() <= 2) {
                    let combined = ctx.substitute(v);
                    assert_eq!(
                        combined.parity(&a),
                        ctx.word().parity(&a).plus(v.parity(&a))
                    );
                }
            }
        }
    }

    #[test]
    fn dl_is_a_total_order_on_small_words() {
        // Rank agreement proves totality: comparing any two words agrees with
        // comparing their positions in the sorted list.
        let a = xy_p();
        let budget = Budget::default();
        let mut words = enumerate_all_words(&a, 5, &budget).unwrap();
        words.sort();
        for (i, u) in words.iter().enumerate() {
            for (j, v) in words.iter().enumerate() {
                assert_eq!(dl_cmp(u, v), i.cmp(&j));
            }
        }
    }

    #[test]
    fn bracket_flatten_round_trip() {
        let a = xy_p();
        let budget = Budget::default();
        for word in enumerate_sls_words(&a, 6, &budget).unwrap() {
            let tree = omega_bracket(&a, &word).unwrap();
            assert_eq!(tree.flatten(), word);
        }
    }

    #[test]
    fn overlap_shapes() {
        // Overlapping SLS words concatenate to pure SLS words in the stated
        // configurations, and subwords of squares live inside one copy.
        let a = xy_p();
        let budget = Budget::default();
        let sls = enumerate_sls_words(&a, 5, &budget).unwrap();
        for w1 in &sls {
            for w2 in &sls {
                let p1 = w1.primes();
                let p2 = w2.primes();
                for ell in 1..p1.len().min(p2.len()) {
                    if p1[p1.len() - ell..] != p2[..ell] {
                        continue;
                    }
                    let mut primes = p1.to_vec();
                    primes.extend_from_slice(&p2[ell..]);
                    let joined = OmegaWord(primes);
                    if joined.deg() > 6 {
                        continue;
                    }
                    let sq1 = square_root(p1).map(|v| OmegaWord(v.to_vec()));
                    let sq2 = square_root(p2).map(|v| OmegaWord(v.to_vec()));
                    match (&sq1, &sq2) {
                        (None, None) => {
                            if w1 != w2 {
                                assert!(is_pure_sls(&a, &joined), "{}", joined.text(&a));
                            }
                        }
                        (None, Some(v)) => {
                            if w1 != v {
                                assert!(is_pure_sls(&a, &joined), "{}", joined.text(&a));
                            }
                        }
                        (Some(u), None) => {
                            if w2 != u {
                                let e1 = &p1[..p1.len() - ell];
                                assert!(e1.len() >= u.bre() && e1[..u.bre()] == u.0[..]);
                                assert!(is_pure_sls(&a, &joined), "{}", joined.text(&a));
                            }
                        }
                        (Some(u), Some(v)) => {
                            if u == v {
                                assert_eq!(ell, u.bre());
                                assert_eq!(&p1[..p1.len() - ell], &u.0[..]);
                            }
                        }
                    }
                }
            }
        }
        // Occurrences of SLS words inside squares stay within a copy.
        for w2 in sls.iter().filter(|w| w.deg() <= 6) {
            let Some(v) = square_root(w2.primes()) else {
                continue;
            };
            let half = v.len();
            for w1 in sls.iter().filter(|w1| w1.deg() < w2.deg()) {
                for ctx in occurrences(w2, w1) {
                    if ctx.hole_depth() > 0 {
                        continue;
                    }
                    let primes = ctx.word().primes();
                    let star_at = primes
                        .iter()
                        .position(|p| matches!(p, Prime::Star))
                        .unwrap();
                    let within_first = star_at + w1.bre() <= half;
                    let within_second = star_at >= half;
                    assert!(
                        within_first || within_second,
                        "occurrence of {} straddles the square {}",
                        w1.text(&a),
                        w2.text(&a)
                    );
                }
            }
        }
    }
}
