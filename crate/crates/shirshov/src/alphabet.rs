//! Graded alphabets: Z2-graded letters together with multilinear operator
//! symbols.
//!
//! Declaration order fixes the total orders: the first declared letter is the
//! greatest letter, the first declared operator the greatest operator.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, Coefficient};

/// Parity in Z2. Letters are declared even or odd; parities of words add.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    /// Addition in Z2.
    pub fn plus(self, other: Parity) -> Parity {
        if other == Parity::Odd {
            self.flip()
        } else {
            self
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// The sign (-1)^{|a||b|} as +-1.
    pub fn sign_of_swap(self, other: Parity) -> i32 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "0\u{304}"),
            Parity::Odd => write!(f, "1\u{304}"),
        }
    }
}

/// Index of a letter in declaration order. Lower index = greater letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LetterId(pub u32);

/// Index of an operator in declaration order. Lower index = greater operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpId(pub u32);

/// Compare two letters in the alphabet order: first declared is greatest.
pub fn letter_cmp(a: LetterId, b: LetterId) -> std::cmp::Ordering {
    b.0.cmp(&a.0)
}

/// Compare two operators in the alphabet order: first declared is greatest.
pub fn op_cmp(a: OpId, b: OpId) -> std::cmp::Ordering {
    b.0.cmp(&a.0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct LetterDecl {
    name: String,
    parity: Parity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct OpDecl {
    name: String,
    arity: usize,
}

/// A Z2-graded alphabet plus operator signatures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedAlphabet {
    letters: Vec<LetterDecl>,
    operators: Vec<OpDecl>,
}

impl GradedAlphabet {
    /// Build an alphabet from `(name, parity)` letters and `(name, arity)`
    /// operators, both in descending declaration order.
    pub fn new<L, O>(letters: L, operators: O) -> Result<GradedAlphabet>
    where
        L: IntoIterator<Item = (String, Parity)>,
        O: IntoIterator<Item = (String, usize)>,
    {
        let letters: Vec<LetterDecl> = letters
            .into_iter()
            .map(|(name, parity)| LetterDecl { name, parity })
            .collect();
        let operators: Vec<OpDecl> = operators
            .into_iter()
            .map(|(name, arity)| OpDecl { name, arity })
            .collect();
        if letters.is_empty() {
            return Err(Error::Alphabet("at least one letter is required".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for name in letters
            .iter()
            .map(|l| &l.name)
            .chain(operators.iter().map(|o| &o.name))
        {
            if !is_identifier(name) {
                return Err(Error::Alphabet(format!("invalid identifier `{name}`")));
            }
            if !seen.insert(name.clone()) {
                return Err(Error::Alphabet(format!("duplicate name `{name}`")));
            }
        }
        for op in &operators {
            if op.arity == 0 {
                return Err(Error::Alphabet(format!(
                    "operator `{}` must have positive arity",
                    op.name
                )));
            }
        }
        Ok(GradedAlphabet { letters, operators })
    }

    pub fn letter_count(&self) -> usize {
        self.letters.len()
    }

    pub fn operator_count(&self) -> usize {
        self.operators.len()
    }

    pub fn letters(&self) -> impl Iterator<Item = LetterId> + '_ {
        (0..self.letters.len() as u32).map(LetterId)
    }

    pub fn operators(&self) -> impl Iterator<Item = OpId> + '_ {
        (0..self.operators.len() as u32).map(OpId)
    }

    pub fn letter_by_name(&self, name: &str) -> Option<LetterId> {
        self.letters
            .iter()
            .position(|l| l.name == name)
            .map(|i| LetterId(i as u32))
    }

    pub fn operator_by_name(&self, name: &str) -> Option<OpId> {
        self.operators
            .iter()
            .position(|o| o.name == name)
            .map(|i| OpId(i as u32))
    }

    pub fn letter_name(&self, id: LetterId) -> &str {
        &self.letters[id.0 as usize].name
    }

    pub fn operator_name(&self, id: OpId) -> &str {
        &self.operators[id.0 as usize].name
    }

    pub fn parity(&self, id: LetterId) -> Parity {
        self.letters[id.0 as usize].parity
    }

    pub fn arity(&self, id: OpId) -> usize {
        self.operators[id.0 as usize].arity
    }

    /// The letters of odd parity.
    pub fn odd_letters(&self) -> Vec<LetterId> {
        self.letters()
            .filter(|&l| self.parity(l).is_odd())
            .collect()
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// On-disk config: alphabet declaration plus the weight of the Rota-Baxter
/// operator. Letter declaration order is descending letter order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlphabetConfig {
    pub letters: Vec<LetterConfig>,
    #[serde(default)]
    pub operators: Vec<OperatorConfig>,
    /// Rational weight as a string, e.g. `-1` or `3/2`.
    #[serde(default = "default_weight")]
    pub weight: String,
}

fn default_weight() -> String {
    "1".to_string()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LetterConfig {
    pub name: String,
    pub parity: Parity,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OperatorConfig {
    pub name: String,
    pub arity: usize,
}

impl AlphabetConfig {
    pub fn from_json(text: &str) -> Result<AlphabetConfig> {
        serde_json::from_str(text).map_err(|e| Error::parse(0, format!("config: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn build(&self) -> Result<(GradedAlphabet, Coefficient)> {
        let alphabet = GradedAlphabet::new(
            self.letters.iter().map(|l| (l.name.clone(), l.parity)),
            self.operators.iter().map(|o| (o.name.clone(), o.arity)),
        )?;
        let weight = parse_rational(&self.weight)?;
        Ok((alphabet, weight))
    }

    pub fn describe(alphabet: &GradedAlphabet, weight: &Coefficient) -> AlphabetConfig {
        AlphabetConfig {
            letters: alphabet
                .letters()
                .map(|l| LetterConfig {
                    name: alphabet.letter_name(l).to_string(),
                    parity: alphabet.parity(l),
                })
                .collect(),
            operators: alphabet
                .operators()
                .map(|o| OperatorConfig {
                    name: alphabet.operator_name(o).to_string(),
                    arity: alphabet.arity(o),
                })
                .collect(),
            weight: format_rational(weight),
        }
    }
}
