//! Text syntax for polynomials: identifiers for variables, `+ - * ^`,
//! integer and rational (`a/b`) literals.

use crate::poly::Polynomial;
use crate::scalar::FieldSpec;
use crate::Error;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Int(i64),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<Token>, Error> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' | '−' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' | '·' => {
                out.push(Token::Star);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            '(' => {
                out.push(Token::LParen);
                i += 1;
            }
            ')' => {
                out.push(Token::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let v: i64 = text
                    .parse()
                    .map_err(|_| Error::Input(format!("integer literal too large: {text}")))?;
                out.push(Token::Int(v));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(Error::Input(format!("unexpected character '{other}'"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    field: FieldSpec,
    vars: &'a [String],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn nvars(&self) -> usize {
        self.vars.len()
    }

    fn expr(&mut self) -> Result<Polynomial, Error> {
        let mut negate = false;
        while let Some(tok) = self.peek() {
            match tok {
                Token::Minus => {
                    negate = !negate;
                    self.bump();
                }
                Token::Plus => {
                    self.bump();
                }
                _ => break,
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Token::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, Error> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                // implicit multiplication: 2x, x(y+1), (x+1)(x-1)
                Some(Token::Ident(_)) | Some(Token::LParen) | Some(Token::Int(_)) => {
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, Error> {
        let base = self.base()?;
        if let Some(Token::Caret) = self.peek() {
            self.bump();
            match self.bump() {
                Some(Token::Int(e)) if e >= 0 => Ok(base.pow(e as u32)),
                other => Err(Error::Input(format!(
                    "expected nonnegative integer exponent, got {other:?}"
                ))),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Polynomial, Error> {
        match self.bump() {
            Some(Token::Ident(name)) => {
                let idx = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| Error::Input(format!("unknown variable '{name}'")))?;
                Ok(Polynomial::var(self.field, self.nvars(), idx))
            }
            Some(Token::Int(v)) => {
                // rational literal a/b binds tighter than multiplication
                if let Some(Token::Slash) = self.peek() {
                    self.bump();
                    match self.bump() {
                        Some(Token::Int(d)) => {
                            let c = self.field.from_ratio(v, d)?;
                            Ok(Polynomial::constant(self.field, self.nvars(), c))
                        }
                        other => Err(Error::Input(format!(
                            "expected integer denominator, got {other:?}"
                        ))),
                    }
                } else {
                    Ok(Polynomial::constant(
                        self.field,
                        self.nvars(),
                        self.field.from_i64(v),
                    ))
                }
            }
            Some(Token::Minus) => Ok(self.factor()?.neg()),
            Some(Token::LParen) => {
                let e = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(e),
                    other => Err(Error::Input(format!("expected ')', got {other:?}"))),
                }
            }
            other => Err(Error::Input(format!("unexpected token {other:?}"))),
        }
    }
}

pub fn parse_polynomial(src: &str, field: FieldSpec, vars: &[String]) -> Result<Polynomial, Error> {
    let tokens = tokenize(src)?;
    if tokens.is_empty() {
        return Err(Error::Input("empty polynomial".into()));
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        field,
        vars,
    };
    let poly = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Input(format!(
            "trailing input after polynomial: {:?}",
            &p.tokens[p.pos..]
        )));
    }
    Ok(poly)
}

/// Convenience used throughout the tests.
pub fn parse_many(
    srcs: &[&str],
    field: FieldSpec,
    vars: &[String],
) -> Result<Vec<Polynomial>, Error> {
    srcs.iter()
        .map(|s| parse_polynomial(s, field, vars))
        .collect()
}

pub fn var_names(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars2() -> Vec<String> {
        var_names(&["x", "y"])
    }

    #[test]
    fn parses_spec_syntax() {
        let p = parse_polynomial("x^2*y - 3/2*x + 1", FieldSpec::Q, &vars2()).unwrap();
        assert_eq!(p.render(&vars2()), "x^2*y - 3/2*x + 1");
    }

    #[test]
    fn roundtrip_is_identity() {
        let srcs = [
            "x*y - 1",
            "x^3 + 3*x^2*y + 3*x*y^2 + y^3",
            "-x + 1/2",
            "0",
            "7",
        ];
        for s in srcs {
            let p = parse_polynomial(s, FieldSpec::Q, &vars2()).unwrap();
            let printed = p.render(&vars2());
            let again = parse_polynomial(&printed, FieldSpec::Q, &vars2()).unwrap();
            assert_eq!(p, again, "{s} -> {printed}");
        }
    }

    #[test]
    fn prime_field_literals_reduce() {
        let vars = var_names(&["x"]);
        let p = parse_polynomial("6*x + 7", FieldSpec::Fp(5), &vars).unwrap();
        assert_eq!(p.render(&vars), "x + 2");
    }

    #[test]
    fn unknown_variable_is_input_error() {
        assert!(parse_polynomial("z + 1", FieldSpec::Q, &vars2()).is_err());
    }

    #[test]
    fn implicit_products_and_parens() {
        let a = parse_polynomial("(x+y)(x-y)", FieldSpec::Q, &vars2()).unwrap();
        let b = parse_polynomial("x^2 - y^2", FieldSpec::Q, &vars2()).unwrap();
        assert_eq!(a, b);
    }
}
