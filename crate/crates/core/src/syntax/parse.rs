//! Surface grammar:
//!
//! ```text
//! term  := lam | app
//! lam   := ("\" | "λ") var "." term
//! app   := unary+ [lam]            -- left-associative, a trailing λ extends right
//! unary := "!" unary | "!" lam | atom
//! atom  := var | "(" term ")" | "#" opname "(" [term ("," term)*] ")" | "[]"
//! ```

use super::ops::is_identifier;
use super::{OpRegistry, Term};
use crate::error::{Error, Result};

/// Parses against the standard operator registry.
pub fn parse(src: &str) -> Result<Term> {
    parse_with(src, &OpRegistry::standard())
}

/// Parses and checks operator names and arities against `registry`.
pub fn parse_with(src: &str, registry: &OpRegistry) -> Result<Term> {
    let mut p = Parser {
        src,
        pos: 0,
        registry,
    };
    p.skip_ws();
    let t = p.term()?;
    p.skip_ws();
    if p.pos < src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(t)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    registry: &'a OpRegistry,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn at_lambda(&self) -> bool {
        matches!(self.peek(), Some('\\') | Some('λ'))
    }

    fn at_unary_start(&self) -> bool {
        match self.peek() {
            Some(c) => c == '!' || c == '(' || c == '#' || c == '[' || c.is_ascii_alphabetic(),
            None => false,
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.bump();
        }
        let s = &self.src[start..self.pos];
        if is_identifier(s) {
            Ok(s.to_string())
        } else {
            self.pos = start;
            Err(self.error("expected an identifier"))
        }
    }

    fn term(&mut self) -> Result<Term> {
        self.skip_ws();
        if self.at_lambda() {
            return self.lambda();
        }
        let mut acc = self.unary()?;
        loop {
            self.skip_ws();
            if self.at_lambda() {
                let arg = self.lambda()?;
                return Ok(Term::app(acc, arg));
            }
            if !self.at_unary_start() {
                return Ok(acc);
            }
            let arg = self.unary()?;
            acc = Term::app(acc, arg);
        }
    }

    fn lambda(&mut self) -> Result<Term> {
        self.bump();
        let x = self.ident()?;
        self.expect('.')?;
        let body = self.term()?;
        Ok(Term::abs(x, body))
    }

    fn unary(&mut self) -> Result<Term> {
        self.skip_ws();
        if self.peek() == Some('!') {
            self.bump();
            self.skip_ws();
            let body = if self.at_lambda() {
                self.lambda()?
            } else {
                self.unary()?
            };
            return Ok(Term::bang(body));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Term> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.bump();
                let t = self.term()?;
                self.expect(')')?;
                Ok(t)
            }
            Some('[') => {
                self.bump();
                self.expect(']')?;
                Ok(Term::Hole)
            }
            Some('#') => {
                let at = self.pos;
                self.bump();
                let name = self.ident()?;
                self.expect('(')?;
                let mut args = Vec::new();
                self.skip_ws();
                if self.peek() == Some(')') {
                    self.bump();
                } else {
                    loop {
                        args.push(self.term()?);
                        self.skip_ws();
                        match self.bump() {
                            Some(',') => continue,
                            Some(')') => break,
                            _ => return Err(self.error("expected `,` or `)`")),
                        }
                    }
                }
                match self.registry.arity(&name) {
                    None => Err(self.registry.unknown(&name)),
                    Some(k) if k != args.len() => Err(Error::Parse {
                        pos: at,
                        msg: format!("arity mismatch: `{name}` takes {k} arguments, got {}", args.len()),
                    }),
                    Some(_) => Ok(Term::Op(name, args)),
                }
            }
            Some(c) if c.is_ascii_alphabetic() => Ok(Term::Var(self.ident()?)),
            Some(_) => Err(self.error("expected a term")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn application_is_left_associative() {
        let t = parse("x y z").unwrap();
        let expected = Term::app(Term::app(Term::var("x"), Term::var("y")), Term::var("z"));
        assert_eq!(t, expected);
    }

    #[test]
    fn bang_binds_tighter_than_application() {
        let t = parse("!x y").unwrap();
        assert_eq!(t, Term::app(Term::bang(Term::var("x")), Term::var("y")));
    }

    #[test]
    fn lambda_extends_right() {
        let t = parse(r"\x.x !x").unwrap();
        let expected = Term::abs("x", Term::app(Term::var("x"), Term::bang(Term::var("x"))));
        assert_eq!(t, expected);
        assert_eq!(parse(r"λx.x !x").unwrap(), expected);
    }

    #[test]
    fn trailing_lambda_is_an_argument() {
        let t = parse(r"x \y.y z").unwrap();
        let expected = Term::app(
            Term::var("x"),
            Term::abs("y", Term::app(Term::var("y"), Term::var("z"))),
        );
        assert_eq!(t, expected);
    }

    #[test]
    fn operators_and_holes() {
        let t = parse("#oplus(x, []) y").unwrap();
        assert_eq!(t.hole_count(), 1);
        assert!(matches!(parse("#oplus(x)"), Err(Error::Parse { .. })));
        assert!(matches!(parse("#foo(x)"), Err(Error::UnknownOperator { .. })));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse("").is_err());
        assert!(parse("(x").is_err());
        assert!(parse(r"\.x").is_err());
        assert!(parse("x )").is_err());
    }
}
