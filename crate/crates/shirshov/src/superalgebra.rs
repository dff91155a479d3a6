//! Exact linear algebra of the free associative and free Lie operator
//! superalgebras: superbracket expansion with sign bookkeeping, leading
//! words, and the rewriting of nonassociative words into the SLS-monomial
//! coordinate basis.
//!
//! Lie elements are stored as coordinate maps on SLS words: the word `w`
//! stands for the canonical monomial `[w]`, which is a faithful key by the
//! one-to-one correspondence between SLS words and SLS monomials. Equality of
//! elements is map equality, so vanishing is decidable and exact.

use std::collections::HashMap;

use num_traits::Zero;
use std::collections::BTreeMap;

use crate::alphabet::{GradedAlphabet, OpId, Parity};
use crate::error::{Error, Result};
use crate::omega::{
    is_sls_omega_word, omega_bracket, Budget, NATree, OmegaWord, Prime,
};
use crate::rational::{format_rational, Coefficient};
use crate::words::square_root;

/// Finite rational combination of omega-words; zero coefficients are absent.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AssocElement(BTreeMap<OmegaWord, Coefficient>);

impl AssocElement {
    pub fn zero() -> AssocElement {
        AssocElement(BTreeMap::new())
    }

    pub fn word(w: OmegaWord) -> AssocElement {
        let mut m = BTreeMap::new();
        m.insert(w, Coefficient::from_integer(1.into()));
        AssocElement(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, w: OmegaWord, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.0.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// The Deg-lex maximal word and its coefficient.
    pub fn leading(&self) -> Result<(&OmegaWord, &Coefficient)> {
        self.0
            .iter()
            .next_back()
            .ok_or_else(|| Error::Domain("the zero element has no leading word".into()))
    }

    pub fn coefficient(&self, w: &OmegaWord) -> Coefficient {
        self.0.get(w).cloned().unwrap_or_else(Coefficient::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&OmegaWord, &Coefficient)> {
        self.0.iter()
    }

    pub fn scale(&mut self, c: &Coefficient) {
        if c.is_zero() {
            self.0.clear();
            return;
        }
        for v in self.0.values_mut() {
            *v *= c;
        }
    }

    /// `self -= c * other`.
    pub fn sub_scaled(&mut self, other: &AssocElement, c: &Coefficient) {
        for (w, k) in &other.0 {
            self.add_term(w.clone(), -(k * c));
        }
    }

    pub fn add_scaled(&mut self, other: &AssocElement, c: &Coefficient) {
        for (w, k) in &other.0 {
            self.add_term(w.clone(), k * c);
        }
    }

    pub fn text(&self, alphabet: &GradedAlphabet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.0
            .iter()
            .rev()
            .map(|(w, c)| format!("{}*{}", format_rational(c), w.text(alphabet)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Finite rational combination of SLS monomials, keyed by their words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LieElement(BTreeMap<OmegaWord, Coefficient>);

impl LieElement {
    pub fn zero() -> LieElement {
        LieElement(BTreeMap::new())
    }

    pub fn monomial(w: OmegaWord) -> LieElement {
        let mut m = BTreeMap::new();
        m.insert(w, Coefficient::from_integer(1.into()));
        LieElement(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.0.len()
    }

    pub fn add_term(&mut self, w: OmegaWord, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.0.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn coordinate(&self, w: &OmegaWord) -> Coefficient {
        self.0.get(w).cloned().unwrap_or_else(Coefficient::zero)
    }

    /// Deg-lex maximal word in the support.
    pub fn leading_word(&self) -> Result<(&OmegaWord, &Coefficient)> {
        self.0
            .iter()
            .next_back()
            .ok_or_else(|| Error::Domain("the zero element has no leading word".into()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&OmegaWord, &Coefficient)> {
        self.0.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &OmegaWord> {
        self.0.keys()
    }

    pub fn scale(&mut self, c: &Coefficient) {
        if c.is_zero() {
            self.0.clear();
            return;
        }
        for v in self.0.values_mut() {
            *v *= c;
        }
    }

    pub fn add_scaled(&mut self, other: &LieElement, c: &Coefficient) {
        for (w, k) in &other.0 {
            self.add_term(w.clone(), k * c);
        }
    }

    pub fn sub_scaled(&mut self, other: &LieElement, c: &Coefficient) {
        for (w, k) in &other.0 {
            self.add_term(w.clone(), -(k * c));
        }
    }

    /// Parity when every monomial agrees; `None` for mixed or zero elements.
    pub fn homogeneous_parity(&self, alphabet: &GradedAlphabet) -> Option<Parity> {
        let mut parities = self.0.keys().map(|w| w.parity(alphabet));
        let first = parities.next()?;
        parities.all(|p| p == first).then_some(first)
    }

    /// Maximal word degree in the support; 0 for the zero element.
    pub fn max_degree(&self) -> usize {
        self.0.keys().map(OmegaWord::deg).max().unwrap_or(0)
    }

    /// Canonical text: terms in descending Deg-lex order, each
    /// `coefficient*monomial`.
    pub fn text(&self, alphabet: &GradedAlphabet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.0
            .iter()
            .rev()
            .map(|(w, c)| {
                let tree = omega_bracket(alphabet, w).expect("support words are SLS");
                format!("{}*{}", format_rational(c), tree.text(alphabet))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Parse canonical element text; `0` is the zero element.
    pub fn parse(text: &str, alphabet: &GradedAlphabet) -> Result<LieElement> {
        if text.trim() == "0" {
            return Ok(LieElement::zero());
        }
        let terms = crate::parse::parse_element_terms(text, alphabet)?;
        let mut exp = Expander::new(alphabet);
        exp.combination(&terms)
    }
}

/// Leading coefficient of the expansion of the canonical monomial `[w]`:
/// squares of odd words expand with coefficient 2, everything else with 1.
pub fn monomial_leading_coefficient(alphabet: &GradedAlphabet, w: &OmegaWord) -> Coefficient {
    match square_root(w.primes()) {
        Some(half)
            if crate::words::slice_parity(half, &mut |p: &Prime| p.parity(alphabet))
                .is_odd() =>
        {
            Coefficient::from_integer(2.into())
        }
        _ => Coefficient::from_integer(1.into()),
    }
}

/// Expansion and basis-conversion engine. Caches the expansions of canonical
/// monomials, which reduction revisits constantly.
pub struct Expander<'a> {
    pub alphabet: &'a GradedAlphabet,
    monomials: HashMap<OmegaWord, AssocElement>,
}

impl<'a> Expander<'a> {
    pub fn new(alphabet: &'a GradedAlphabet) -> Expander<'a> {
        Expander {
            alphabet,
            monomials: HashMap::new(),
        }
    }

    /// Multilinear expansion of a tree: pairs expand through the
    /// superbracket `(uv) = uv - (-1)^{|u||v|} vu`, operator nodes expand
    /// their arguments. The optional hole parity feeds sign bookkeeping when
    /// a hole stands for a homogeneous element.
    pub fn expand_tree_sp(&mut self, t: &NATree, star_parity: Parity) -> AssocElement {
        match t {
            NATree::Leaf(l) => AssocElement::word(OmegaWord::letter(*l)),
            NATree::Star => AssocElement::word(OmegaWord::prime(Prime::Star)),
            NATree::Op(o, args) => {
                let expanded: Vec<AssocElement> = args
                    .iter()
                    .map(|a| self.expand_tree_sp(a, star_parity))
                    .collect();
                let mut out = AssocElement::zero();
                let mut stack: Vec<(Vec<OmegaWord>, Coefficient)> =
                    vec![(Vec::new(), Coefficient::from_integer(1.into()))];
                for factor in &expanded {
                    let mut next = Vec::new();
                    for (words, coeff) in &stack {
                        for (w, c) in factor.iter() {
                            let mut ws = words.clone();
                            ws.push(w.clone());
                            next.push((ws, coeff * c));
                        }
                    }
                    stack = next;
                }
                for (words, coeff) in stack {
                    out.add_term(OmegaWord::prime(Prime::Op(*o, words)), coeff);
                }
                out
            }
            NATree::Pair(l, r) => {
                let a = self.expand_tree_sp(l, star_parity);
                let b = self.expand_tree_sp(r, star_parity);
                self.bracket_assoc_sp(&a, &b, star_parity)
            }
        }
    }

    pub fn expand_tree(&mut self, t: &NATree) -> AssocElement {
        self.expand_tree_sp(t, Parity::Even)
    }

    fn word_parity_sp(&self, w: &OmegaWord, star_parity: Parity) -> Parity {
        let base = w.parity(self.alphabet);
        if star_parity.is_odd() && w.star_count() % 2 == 1 {
            base.flip()
        } else {
            base
        }
    }

    /// Supercommutator at the associative level.
    pub fn bracket_assoc_sp(
        &mut self,
        a: &AssocElement,
        b: &AssocElement,
        star_parity: Parity,
    ) -> AssocElement {
        let mut out = AssocElement::zero();
        for (u, cu) in a.iter() {
            let pu = self.word_parity_sp(u, star_parity);
            for (v, cv) in b.iter() {
                let pv = self.word_parity_sp(v, star_parity);
                let c = cu * cv;
                out.add_term(u.concat(v), c.clone());
                let sign = pu.sign_of_swap(pv);
                out.add_term(v.concat(u), -c * Coefficient::from_integer(sign.into()));
            }
        }
        out
    }

    /// Cached expansion of the canonical monomial `[w]`.
    pub fn expand_monomial(&mut self, w: &OmegaWord) -> Result<AssocElement> {
        if let Some(e) = self.monomials.get(w) {
            return Ok(e.clone());
        }
        let tree = omega_bracket(self.alphabet, w)?;
        let e = self.expand_tree(&tree);
        self.monomials.insert(w.clone(), e.clone());
        Ok(e)
    }

    /// Expansion of a Lie element given by its SLS coordinates.
    pub fn expand_element(&mut self, e: &LieElement) -> Result<AssocElement> {
        let mut out = AssocElement::zero();
        for (w, c) in e.iter() {
            let m = self.expand_monomial(w)?;
            out.add_scaled(&m, c);
        }
        Ok(out)
    }

    /// Rewrite an associative expansion of a Lie element into SLS
    /// coordinates by repeated leading-term elimination. The leading word at
    /// every step must be SLS; a violation means the input was not a Lie
    /// element and is reported as an internal invariant failure.
    pub fn lie_from_expansion(&mut self, mut f: AssocElement) -> Result<LieElement> {
        let mut out = LieElement::zero();
        while !f.is_zero() {
            let (w, c) = {
                let (w, c) = f.leading()?;
                (w.clone(), c.clone())
            };
            if !is_sls_omega_word(self.alphabet, &w) {
                return Err(Error::Internal(format!(
                    "leading word `{}` of a Lie expansion is not SLS",
                    w.text(self.alphabet)
                )));
            }
            let kappa = monomial_leading_coefficient(self.alphabet, &w);
            let coord = c / kappa;
            let m = self.expand_monomial(&w)?;
            f.sub_scaled(&m, &coord);
            out.add_term(w, coord);
        }
        Ok(out)
    }

    /// SLS-coordinate representation of a nonassociative word.
    pub fn to_sls_basis(&mut self, t: &NATree) -> Result<LieElement> {
        let f = self.expand_tree(t);
        self.lie_from_expansion(f)
    }

    /// Linear combination of trees as a Lie element.
    pub fn combination(&mut self, terms: &[(Coefficient, NATree)]) -> Result<LieElement> {
        let mut f = AssocElement::zero();
        for (c, t) in terms {
            let e = self.expand_tree(t);
            f.add_scaled(&e, c);
        }
        self.lie_from_expansion(f)
    }

    /// Superbracket of Lie elements, in SLS coordinates.
    pub fn lie_bracket(&mut self, a: &LieElement, b: &LieElement) -> Result<LieElement> {
        let ea = self.expand_element(a)?;
        let eb = self.expand_element(b)?;
        let f = self.bracket_assoc_sp(&ea, &eb, Parity::Even);
        self.lie_from_expansion(f)
    }

    /// Multilinear operator application. On basis monomials this is a plain
    /// key map: an operator applied to canonical monomials is itself the
    /// canonical monomial of the resulting single-prime word.
    pub fn apply_operator(&mut self, op: OpId, args: &[LieElement]) -> Result<LieElement> {
        let arity = self.alphabet.arity(op);
        if args.len() != arity {
            return Err(Error::Domain(format!(
                "operator `{}` takes {arity} argument(s), got {}",
                self.alphabet.operator_name(op),
                args.len()
            )));
        }
        let mut out = LieElement::zero();
        let mut stack: Vec<(Vec<OmegaWord>, Coefficient)> =
            vec![(Vec::new(), Coefficient::from_integer(1.into()))];
        for arg in args {
            let mut next = Vec::new();
            for (words, coeff) in &stack {
                for (w, c) in arg.iter() {
                    let mut ws = words.clone();
                    ws.push(w.clone());
                    next.push((ws, coeff * c));
                }
            }
            stack = next;
        }
        for (words, coeff) in stack {
            out.add_term(OmegaWord::prime(Prime::Op(op, words)), coeff);
        }
        Ok(out)
    }
}

/// One-shot helpers over a fresh expander.
pub fn assoc_expand(alphabet: &GradedAlphabet, t: &NATree) -> AssocElement {
    Expander::new(alphabet).expand_tree(t)
}

pub fn to_sls_basis(alphabet: &GradedAlphabet, t: &NATree) -> Result<LieElement> {
    Expander::new(alphabet).to_sls_basis(t)
}

pub fn lie_bracket(
    alphabet: &GradedAlphabet,
    a: &LieElement,
    b: &LieElement,
) -> Result<LieElement> {
    Expander::new(alphabet).lie_bracket(a, b)
}

pub fn apply_operator(
    alphabet: &GradedAlphabet,
    op: OpId,
    args: &[LieElement],
) -> Result<LieElement> {
    Expander::new(alphabet).apply_operator(op, args)
}

/// Exact rank of a family of associative elements, by triangular Gaussian
/// elimination on leading words.
pub fn assoc_rank(vectors: Vec<AssocElement>) -> usize {
    let mut pivots: BTreeMap<OmegaWord, AssocElement> = BTreeMap::new();
    for mut v in vectors {
        loop {
            if v.is_zero() {
                break;
            }
            let (w, c) = {
                let (w, c) = v.leading().expect("nonzero");
                (w.clone(), c.clone())
            };
            match pivots.get(&w) {
                Some(p) => v.sub_scaled(p, &c),
                None => {
                    let inv = Coefficient::from_integer(1.into()) / c;
                    v.scale(&inv);
                    pivots.insert(w, v);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Dimensions of the span of all SLS monomial expansions per degree,
/// together with the monomial counts: the two agree exactly when the
/// monomials are linearly independent.
pub fn freeness_check(
    alphabet: &GradedAlphabet,
    maxdeg: usize,
    budget: &Budget,
) -> Result<Vec<(usize, usize, usize)>> {
    let words = crate::omega::enumerate_sls_words(alphabet, maxdeg, budget)?;
    let mut exp = Expander::new(alphabet);
    let mut out = Vec::new();
    for d in 1..=maxdeg {
        let of_degree: Vec<&OmegaWord> = words.iter().filter(|w| w.deg() == d).collect();
        let vectors: Vec<AssocElement> = of_degree
            .iter()
            .map(|w| exp.expand_monomial(w))
            .collect::<Result<_>>()?;
        let r = assoc_rank(vectors);
        out.push((d, of_degree.len(), r));
    }
    Ok(out)
}
