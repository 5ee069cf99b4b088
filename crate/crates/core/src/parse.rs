//! Text form of polynomials and free-module elements.
//!
//! Grammar: terms joined by `+`/`-`; a term is a product of factors written
//! `[coeff][*]var[^exp]`, e.g. `3*x^2*y - y^3 + 7`. Coefficients are decimal
//! integers reduced mod `p`. The printer emits terms in decreasing monomial
//! order with balanced coefficient representatives, and `parse(print(f)) == f`.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::free::FreeElement;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// Ordered variable names for one polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    pub fn new(names: Vec<String>) -> Self {
        VarSet { names }
    }

    pub fn from_names(names: &[&str]) -> Self {
        VarSet { names: names.iter().map(|s| s.to_string()).collect() }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Plus,
    Minus,
    Star,
    Caret,
    /// Integer literal: value mod p, plus the exact value when it fits u32
    /// (exponents must not be reduced).
    Int { modp: u64, exact: Option<u32> },
    Ident(String),
    End,
}

struct Lexer<'a> {
    input: &'a [u8],
    pos: usize,
    p: u64,
}

impl<'a> Lexer<'a> {
    fn new(input: &'a str, p: u64) -> Self {
        Lexer { input: input.as_bytes(), pos: 0, p }
    }

    fn error(&self, message: &str) -> Error {
        Error::Parse { position: self.pos, message: message.to_string() }
    }

    fn peek_byte(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    fn next_token(&mut self) -> Result<Token> {
        while matches!(self.peek_byte(), Some(b' ') | Some(b'\t')) {
            self.pos += 1;
        }
        let Some(b) = self.peek_byte() else {
            return Ok(Token::End);
        };
        match b {
            b'+' => {
                self.pos += 1;
                Ok(Token::Plus)
            }
            b'-' => {
                self.pos += 1;
                Ok(Token::Minus)
            }
            b'*' => {
                self.pos += 1;
                Ok(Token::Star)
            }
            b'^' => {
                self.pos += 1;
                Ok(Token::Caret)
            }
            b'0'..=b'9' => {
                let mut modp: u64 = 0;
                let mut exact: Option<u32> = Some(0);
                while let Some(d @ b'0'..=b'9') = self.peek_byte() {
                    let digit = (d - b'0') as u64;
                    modp = (modp * 10 + digit) % self.p;
                    exact = exact
                        .and_then(|v| v.checked_mul(10))
                        .and_then(|v| v.checked_add(digit as u32));
                    self.pos += 1;
                }
                Ok(Token::Int { modp, exact })
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = self.pos;
                while matches!(
                    self.peek_byte(),
                    Some(b'a'..=b'z') | Some(b'A'..=b'Z') | Some(b'0'..=b'9') | Some(b'_')
                ) {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.input[start..self.pos])
                    .map_err(|_| self.error("invalid utf-8 in identifier"))?;
                Ok(Token::Ident(name.to_string()))
            }
            _ => Err(self.error("unexpected character")),
        }
    }
}

/// Parse a polynomial in the variables of `vars` over `F_p`.
pub fn parse_polynomial(text: &str, vars: &VarSet, p: u64) -> Result<Polynomial> {
    let field = PrimeField::new(p);
    let nvars = vars.len();
    let mut lexer = Lexer::new(text, p);
    let mut terms: Vec<(Monomial, u64)> = Vec::new();

    let mut token = lexer.next_token()?;
    loop {
        let mut sign_negative = false;
        loop {
            match token {
                Token::Plus => {}
                Token::Minus => sign_negative = !sign_negative,
                _ => break,
            }
            token = lexer.next_token()?;
        }
        if token == Token::End {
            return Err(lexer.error(if terms.is_empty() {
                "empty polynomial"
            } else {
                "dangling sign"
            }));
        }

        let mut coeff: u64 = 1;
        let mut exps = alloc::vec![0u32; nvars];
        let mut saw_factor = false;
        let mut after_star = false;
        loop {
            match token {
                Token::Int { modp, .. } => {
                    coeff = field.mul(coeff, modp);
                    saw_factor = true;
                    after_star = false;
                    token = lexer.next_token()?;
                }
                Token::Ident(ref name) => {
                    let Some(idx) = vars.index_of(name) else {
                        return Err(lexer.error("unknown variable"));
                    };
                    token = lexer.next_token()?;
                    let exp = if token == Token::Caret {
                        match lexer.next_token()? {
                            Token::Int { exact: Some(e), .. } => {
                                token = lexer.next_token()?;
                                e
                            }
                            _ => return Err(lexer.error("expected integer exponent")),
                        }
                    } else {
                        1
                    };
                    exps[idx] += exp;
                    saw_factor = true;
                    after_star = false;
                }
                Token::Star => {
                    if !saw_factor || after_star {
                        return Err(lexer.error("misplaced '*'"));
                    }
                    after_star = true;
                    token = lexer.next_token()?;
                }
                _ => break,
            }
        }
        if !saw_factor {
            return Err(lexer.error("expected a term"));
        }
        if after_star {
            return Err(lexer.error("dangling '*'"));
        }
        if sign_negative {
            coeff = field.neg(coeff);
        }
        terms.push((Monomial::new(exps), coeff));

        match token {
            Token::End => break,
            Token::Plus | Token::Minus => continue,
            _ => return Err(lexer.error("expected '+', '-' or end of input")),
        }
    }

    Ok(Polynomial::from_terms(p, nvars, terms))
}

/// Parse a bracketed free-module element: `[p_0, p_1, ...]`, one polynomial
/// per position. A bare polynomial is accepted as rank 1.
pub fn parse_free_element(text: &str, vars: &VarSet, p: u64, rank: usize) -> Result<FreeElement> {
    let trimmed = text.trim();
    let inner = if let Some(stripped) = trimmed.strip_prefix('[') {
        stripped
            .strip_suffix(']')
            .ok_or(Error::Parse { position: trimmed.len(), message: "missing ']'".to_string() })?
    } else {
        trimmed
    };
    let parts: Vec<&str> = inner.split(',').collect();
    if parts.len() != rank {
        return Err(Error::AmbientMismatch { expected: rank, found: parts.len() });
    }
    let components = parts
        .iter()
        .map(|part| {
            let part = part.trim();
            if part.is_empty() {
                Ok(Polynomial::zero(p, vars.len()))
            } else {
                parse_polynomial(part, vars, p)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FreeElement::new(components))
}

fn write_poly(f: &mut fmt::Formatter<'_>, poly: &Polynomial, vars: &VarSet) -> fmt::Result {
    if poly.is_zero() {
        return write!(f, "0");
    }
    let field = poly.field();
    for (i, (m, c)) in poly.terms().iter().enumerate() {
        let balanced = field.balanced(*c);
        let magnitude = balanced.unsigned_abs();
        if i == 0 {
            if balanced < 0 {
                write!(f, "-")?;
            }
        } else if balanced < 0 {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let mut wrote = false;
        if magnitude != 1 || m.is_one() {
            write!(f, "{magnitude}")?;
            wrote = true;
        }
        for (v, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if wrote {
                write!(f, "*")?;
            }
            write!(f, "{}", vars.names()[v])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
            wrote = true;
        }
    }
    Ok(())
}

/// Canonical printer for a polynomial.
pub struct PolyDisplay<'a> {
    pub poly: &'a Polynomial,
    pub vars: &'a VarSet,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.poly, self.vars)
    }
}

/// Canonical printer for a free-module element: `[p_0, p_1, ...]`.
pub struct FreeDisplay<'a> {
    pub element: &'a FreeElement,
    pub vars: &'a VarSet,
}

impl fmt::Display for FreeDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, comp) in self.element.components().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write_poly(f, comp, self.vars)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn vars2() -> VarSet {
        VarSet::from_names(&["x", "y"])
    }

    #[test]
    fn parses_spec_examples() {
        let p = 100_003;
        let f = parse_polynomial("x^2 - 3*y", &vars2(), p).unwrap();
        assert_eq!(f.terms().len(), 2);
        assert_eq!(f.terms()[0].1, 1);
        assert_eq!(f.terms()[1].1, p - 3);

        let zero = parse_polynomial("0", &vars2(), p).unwrap();
        assert!(zero.is_zero());

        // term collection to canonical form
        let g = parse_polynomial("x*y + y*x", &vars2(), p).unwrap();
        assert_eq!(g.terms().len(), 1);
        assert_eq!(g.terms()[0].1, 2);
    }

    #[test]
    fn rejects_unknown_variable_and_syntax_errors() {
        let p = 101;
        assert!(matches!(
            parse_polynomial("x + z", &vars2(), p),
            Err(Error::Parse { .. })
        ));
        assert!(parse_polynomial("x + ", &vars2(), p).is_err());
        assert!(parse_polynomial("", &vars2(), p).is_err());
        assert!(parse_polynomial("x^y", &vars2(), p).is_err());
        assert!(parse_polynomial("*x", &vars2(), p).is_err());
    }

    #[test]
    fn print_uses_balanced_coefficients() {
        let p = 101;
        let vars = vars2();
        let f = parse_polynomial("x^2 - 3*y + 1", &vars, p).unwrap();
        assert_eq!(format!("{}", PolyDisplay { poly: &f, vars: &vars }), "x^2 - 3*y + 1");
    }

    #[test]
    fn implicit_products_without_star() {
        let p = 101;
        let vars = vars2();
        let f = parse_polynomial("3x^2y", &vars, p).unwrap();
        let g = parse_polynomial("3*x^2*y", &vars, p).unwrap();
        assert_eq!(f, g);
    }

    proptest::proptest! {
        #[test]
        fn parse_print_round_trip(
            raw in proptest::collection::vec(
                (proptest::collection::vec(0u32..5, 2), 0u64..101),
                0..8,
            )
        ) {
            let p = 101;
            let vars = vars2();
            let poly = Polynomial::from_terms(
                p, 2, raw.iter().map(|(e, c)| (Monomial::new(e.clone()), *c)),
            );
            let text = format!("{}", PolyDisplay { poly: &poly, vars: &vars });
            let back = parse_polynomial(&text, &vars, p).unwrap();
            proptest::prop_assert_eq!(back, poly);
        }
    }
}
