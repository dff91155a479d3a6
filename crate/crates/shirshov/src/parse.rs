//! Recursive-descent parser for the canonical term grammar:
//!
//! ```text
//! word    := prime (' ' prime)*
//! prime   := LETTER | OPNAME '(' word (',' word)* ')' | '★'
//! natree  := LETTER | OPNAME '(' natree (',' natree)* ')' | '(' natree ' ' natree ')'
//! element := COEF '*' natree (' + ' COEF '*' natree)*
//! ```
//!
//! Printing is handled by the `text` methods on the term types; the printer
//! emits single spaces and no redundant parentheses, so printing then parsing
//! is the identity and parsing canonical text then printing is byte-exact.

use crate::alphabet::GradedAlphabet;
use crate::error::{Error, Result};
use crate::omega::{Context, NATree, OmegaWord, Prime};
use crate::rational::{parse_rational, Coefficient};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Number(String),
    Star,
    LParen,
    RParen,
    Comma,
    Plus,
    Times,
}

struct Lexer {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Lexer {
    fn new(text: &str) -> Result<Lexer> {
        let bytes: Vec<char> = text.chars().collect();
        let mut tokens = Vec::new();
        let mut offset = 0usize;
        let mut i = 0usize;
        while i < bytes.len() {
            let c = bytes[i];
            let at = offset;
            match c {
                ' ' | '\t' | '\n' | '\r' => {
                    offset += c.len_utf8();
                    i += 1;
                }
                '(' => {
                    tokens.push((at, Token::LParen));
                    offset += 1;
                    i += 1;
                }
                ')' => {
                    tokens.push((at, Token::RParen));
                    offset += 1;
                    i += 1;
                }
                ',' => {
                    tokens.push((at, Token::Comma));
                    offset += 1;
                    i += 1;
                }
                '+' => {
                    tokens.push((at, Token::Plus));
                    offset += 1;
                    i += 1;
                }
                '*' => {
                    tokens.push((at, Token::Times));
                    offset += 1;
                    i += 1;
                }
                '\u{2605}' => {
                    tokens.push((at, Token::Star));
                    offset += c.len_utf8();
                    i += 1;
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let mut name = String::new();
                    while i < bytes.len()
                        && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_')
                    {
                        name.push(bytes[i]);
                        offset += 1;
                        i += 1;
                    }
                    tokens.push((at, Token::Ident(name)));
                }
                c if c.is_ascii_digit() || c == '-' => {
                    let mut num = String::new();
                    if c == '-' {
                        num.push('-');
                        offset += 1;
                        i += 1;
                        if i >= bytes.len() || !bytes[i].is_ascii_digit() {
                            return Err(Error::parse(at, "expected digits after `-`"));
                        }
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        num.push(bytes[i]);
                        offset += 1;
                        i += 1;
                    }
                    if i < bytes.len() && bytes[i] == '/' {
                        num.push('/');
                        offset += 1;
                        i += 1;
                        if i >= bytes.len() || !bytes[i].is_ascii_digit() {
                            return Err(Error::parse(offset, "expected digits after `/`"));
                        }
                        while i < bytes.len() && bytes[i].is_ascii_digit() {
                            num.push(bytes[i]);
                            offset += 1;
                            i += 1;
                        }
                    }
                    tokens.push((at, Token::Number(num)));
                }
                other => {
                    return Err(Error::parse(at, format!("unexpected character `{other}`")));
                }
            }
        }
        Ok(Lexer {
            tokens,
            pos: 0,
            end: text.len(),
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn peek2(&self) -> Option<&Token> {
        self.tokens.get(self.pos + 1).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(at, _)| *at)
            .unwrap_or(self.end)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Token, what: &str) -> Result<()> {
        let at = self.here();
        match self.next() {
            Some(t) if t == tok => Ok(()),
            _ => Err(Error::parse(at, format!("expected {what}"))),
        }
    }

    fn finish(&self) -> Result<()> {
        if self.pos < self.tokens.len() {
            return Err(Error::parse(self.here(), "trailing input"));
        }
        Ok(())
    }
}

struct Parser<'a> {
    lexer: Lexer,
    alphabet: &'a GradedAlphabet,
}

impl<'a> Parser<'a> {
    fn prime(&mut self) -> Result<Prime> {
        let at = self.lexer.here();
        match self.lexer.next() {
            Some(Token::Star) => Ok(Prime::Star),
            Some(Token::Ident(name)) => {
                if let Some(l) = self.alphabet.letter_by_name(&name) {
                    return Ok(Prime::Letter(l));
                }
                if let Some(o) = self.alphabet.operator_by_name(&name) {
                    self.lexer.expect(Token::LParen, "`(` after operator name")?;
                    let mut args = vec![self.word()?];
                    while self.lexer.peek() == Some(&Token::Comma) {
                        self.lexer.next();
                        args.push(self.word()?);
                    }
                    self.lexer.expect(Token::RParen, "`)`")?;
                    let arity = self.alphabet.arity(o);
                    if args.len() != arity {
                        return Err(Error::parse(
                            at,
                            format!(
                                "operator `{name}` takes {arity} argument(s), got {}",
                                args.len()
                            ),
                        ));
                    }
                    return Ok(Prime::Op(o, args));
                }
                Err(Error::parse(at, format!("unknown identifier `{name}`")))
            }
            _ => Err(Error::parse(at, "expected a prime")),
        }
    }

    fn word(&mut self) -> Result<OmegaWord> {
        let at = self.lexer.here();
        let mut primes = vec![self.prime()?];
        while matches!(
            self.lexer.peek(),
            Some(Token::Ident(_)) | Some(Token::Star)
        ) {
            primes.push(self.prime()?);
        }
        OmegaWord::new(primes).map_err(|_| Error::parse(at, "empty word"))
    }

    fn natree(&mut self) -> Result<NATree> {
        let at = self.lexer.here();
        match self.lexer.peek() {
            Some(Token::LParen) => {
                self.lexer.next();
                let left = self.natree()?;
                let right = self.natree()?;
                self.lexer.expect(Token::RParen, "`)` closing a pair")?;
                Ok(NATree::pair(left, right))
            }
            Some(Token::Star) => {
                self.lexer.next();
                Ok(NATree::Star)
            }
            Some(Token::Ident(name)) => {
                let name = name.clone();
                if let Some(l) = self.alphabet.letter_by_name(&name) {
                    self.lexer.next();
                    return Ok(NATree::Leaf(l));
                }
                if let Some(o) = self.alphabet.operator_by_name(&name) {
                    self.lexer.next();
                    self.lexer.expect(Token::LParen, "`(` after operator name")?;
                    let mut args = vec![self.natree()?];
                    while self.lexer.peek() == Some(&Token::Comma) {
                        self.lexer.next();
                        args.push(self.natree()?);
                    }
                    self.lexer.expect(Token::RParen, "`)`")?;
                    let arity = self.alphabet.arity(o);
                    if args.len() != arity {
                        return Err(Error::parse(
                            at,
                            format!(
                                "operator `{name}` takes {arity} argument(s), got {}",
                                args.len()
                            ),
                        ));
                    }
                    return Ok(NATree::Op(o, args));
                }
                Err(Error::parse(at, format!("unknown identifier `{name}`")))
            }
            _ => Err(Error::parse(at, "expected a nonassociative word")),
        }
    }

    fn element_terms(&mut self) -> Result<Vec<(Coefficient, NATree)>> {
        let mut terms = vec![self.term()?];
        while self.lexer.peek() == Some(&Token::Plus) {
            self.lexer.next();
            terms.push(self.term()?);
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<(Coefficient, NATree)> {
        let at = self.lexer.here();
        // A bare tree is accepted as coefficient 1; canonical text always
        // carries an explicit coefficient.
        if let Some(Token::Number(num)) = self.lexer.peek() {
            let num = num.clone();
            // distinguish `3*T` from a stray number
            if self.lexer.peek2() == Some(&Token::Times) {
                self.lexer.next();
                self.lexer.next();
                let coeff =
                    parse_rational(&num).map_err(|_| Error::parse(at, "invalid coefficient"))?;
                let tree = self.natree()?;
                return Ok((coeff, tree));
            }
            return Err(Error::parse(at, "expected `coefficient*monomial`"));
        }
        let tree = self.natree()?;
        Ok((Coefficient::from_integer(1.into()), tree))
    }
}

/// Parse a plain omega-word; holes are rejected.
pub fn parse_word(text: &str, alphabet: &GradedAlphabet) -> Result<OmegaWord> {
    let mut p = Parser {
        lexer: Lexer::new(text)?,
        alphabet,
    };
    let w = p.word()?;
    p.lexer.finish()?;
    if w.star_count() != 0 {
        return Err(Error::parse(0, "\u{2605} is only allowed in contexts"));
    }
    Ok(w)
}

/// Parse a context: a word with exactly one hole.
pub fn parse_context(text: &str, alphabet: &GradedAlphabet) -> Result<Context> {
    let mut p = Parser {
        lexer: Lexer::new(text)?,
        alphabet,
    };
    let w = p.word()?;
    p.lexer.finish()?;
    let stars = w.star_count();
    if stars != 1 {
        return Err(Error::parse(
            0,
            format!("a context needs exactly one \u{2605}, found {stars}"),
        ));
    }
    Context::new(w)
}

/// Parse a nonassociative word; holes are rejected.
pub fn parse_natree(text: &str, alphabet: &GradedAlphabet) -> Result<NATree> {
    let mut p = Parser {
        lexer: Lexer::new(text)?,
        alphabet,
    };
    let t = p.natree()?;
    p.lexer.finish()?;
    if t.flatten().star_count() != 0 {
        return Err(Error::parse(0, "\u{2605} is only allowed in contexts"));
    }
    Ok(t)
}

/// Parse an element as raw `(coefficient, tree)` terms; linear-combination
/// assembly happens in the algebra layer.
pub fn parse_element_terms(
    text: &str,
    alphabet: &GradedAlphabet,
) -> Result<Vec<(Coefficient, NATree)>> {
    let mut p = Parser {
        lexer: Lexer::new(text)?,
        alphabet,
    };
    let terms = p.element_terms()?;
    p.lexer.finish()?;
    for (_, t) in &terms {
        if t.flatten().star_count() != 0 {
            return Err(Error::parse(0, "\u{2605} is only allowed in contexts"));
        }
    }
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::{GradedAlphabet, Parity};

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

    #[test]
    fn word_round_trip() {
        let a = xy_p();
        for text in ["x", "x y P(x)", "P(P(x) y) x", "P(x y) P(x y)"] {
            let w = parse_word(text, &a).unwrap();
            assert_eq!(w.text(&a), text);
        }
    }

    #[test]
    fn natree_round_trip() {
        let a = xy_p();
        for text in ["x", "(x (x y))", "P((P(x) x))", "((P(x) x) y)"] {
            let t = parse_natree(text, &a).unwrap();
            assert_eq!(t.text(&a), text);
        }
    }

    #[test]
    fn context_round_trip() {
        let a = xy_p();
        for text in ["P(\u{2605} x)", "\u{2605}", "P(x) \u{2605} y"] {
            let c = parse_context(text, &a).unwrap();
            assert_eq!(c.text(&a), text);
        }
        assert!(parse_context("x y", &a).is_err());
        assert!(parse_context("\u{2605} \u{2605}", &a).is_err());
        assert!(parse_word("\u{2605} x", &a).is_err());
    }

    #[test]
    fn errors_carry_positions() {
        let a = xy_p();
        match parse_word("x z", &a) {
            Err(crate::error::Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_word("P(x", &a) {
            Err(crate::error::Error::Parse { .. }) => {}
            other => panic!("expected parse error, got {other:?}"),
        }
        // Arity mismatch is a parse-level error.
        assert!(parse_word("P(x, y)", &a).is_err());
    }

    #[test]
    fn element_terms_parse() {
        let a = xy_p();
        let terms = parse_element_terms("1*(x y) + -1/2*P(x)", &a).unwrap();
        assert_eq!(terms.len(), 2);
        assert_eq!(crate::rational::format_rational(&terms[1].0), "-1/2");
    }
}
