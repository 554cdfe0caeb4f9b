//! Polynomial expressions in the ray variables `t1..tr` and the coefficient
//! generators (`b1..bD` for the universal law, `beta` for the multiplicative
//! law). Accepts everything the series `Display` impls print.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom ('^' integer)?
//! atom   := integer | t<i> | b<i> | beta | '(' expr ')'
//! ```

use std::str::FromStr;

use toric_cobordism::coeff::{Coeff, LawKind, Rational};
use toric_cobordism::monomial::Monomial;
use toric_cobordism::series::GradedSeries;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(String),
    Var(usize),
    Gen(usize),
    Op(char),
}

fn tokenize(s: &str) -> CliResult<Vec<Token>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |msg: String| CliError::Input(format!("cannot parse '{s}': {msg}"));
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Token::Int(chars[start..i].iter().collect()));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            out.push(identifier(&word).ok_or_else(|| err(format!("unknown symbol '{word}'")))?);
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(err(format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

fn identifier(word: &str) -> Option<Token> {
    if word == "beta" {
        return Some(Token::Gen(0));
    }
    let (head, rest) = word.split_at(1);
    let digits = rest.strip_prefix('_').unwrap_or(rest);
    let index: usize = digits.parse().ok().filter(|&i| i >= 1)?;
    match head {
        "t" => Some(Token::Var(index - 1)),
        "b" => Some(Token::Gen(index - 1)),
        _ => None,
    }
}

/// Parse `text` into a series with the ring, variable count and monomial
/// bound of `template`.
pub fn parse_polynomial(text: &str, template: &GradedSeries) -> CliResult<GradedSeries> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(CliError::Input("empty polynomial".into()));
    }
    let mut p = Parser { tokens, pos: 0, template, text };
    let value = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.error("trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    template: &'a GradedSeries,
    text: &'a str,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> CliError {
        CliError::Input(format!("cannot parse '{}': {msg} at token {}", self.text, self.pos + 1))
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn constant(&self, c: Coeff) -> GradedSeries {
        let t = self.template;
        GradedSeries::constant(t.ring(), t.nvars(), t.poly_bound(), c)
    }

    fn core(&self, r: toric_cobordism::Result<GradedSeries>) -> CliResult<GradedSeries> {
        r.map_err(|e| CliError::Input(e.to_string()))
    }

    fn expr(&mut self) -> CliResult<GradedSeries> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                let rhs = self.term()?;
                acc = self.core(acc.add(&rhs))?;
            } else if self.eat('-') {
                let rhs = self.term()?;
                acc = self.core(acc.sub(&rhs))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> CliResult<GradedSeries> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                let rhs = self.factor()?;
                acc = self.core(acc.mul(&rhs))?;
            } else if self.eat('/') {
                let rhs = self.factor()?;
                let c = rhs.constant_term();
                if rhs.num_terms() > 1 || !c.is_scalar() || c.is_zero() {
                    return Err(self.error("can only divide by a nonzero rational"));
                }
                acc = acc.scale(&c.scalar_part().recip());
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> CliResult<GradedSeries> {
        if self.eat('-') {
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Token::Int(s)) => {
                    self.pos += 1;
                    let e: u32 = s.parse().map_err(|_| self.error("exponent too large"))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(self.error("expected an integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> CliResult<GradedSeries> {
        let tok = self.peek().cloned().ok_or_else(|| self.error("unexpected end of input"))?;
        self.pos += 1;
        let t = self.template;
        match tok {
            Token::Int(s) => {
                let q = Rational::from_str(&s).map_err(|_| self.error("bad integer"))?;
                Ok(self.constant(Coeff::scalar(q)))
            }
            Token::Var(i) => {
                if i >= t.nvars() {
                    return Err(self.error(&format!("variable t{} out of range (t1..t{})", i + 1, t.nvars())));
                }
                Ok(GradedSeries::var(t.ring(), t.nvars(), t.poly_bound(), i))
            }
            Token::Gen(i) => {
                let ring = t.ring();
                let ok = match ring.kind {
                    LawKind::Additive => false,
                    LawKind::Multiplicative => i == 0,
                    LawKind::UniversalRational => true,
                };
                if !ok {
                    return Err(self.error(&format!("coefficient generator not available for the {} law", ring.kind.name())));
                }
                Ok(self.constant(Coeff::term(Monomial::var(i), Rational::from_integer(1.into()))))
            }
            Token::Op('(') => {
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Token::Op(c) => Err(self.error(&format!("unexpected '{c}'"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use toric_cobordism::coeff::CoeffRing;

    fn template(kind: LawKind) -> GradedSeries {
        GradedSeries::zero(CoeffRing::new(kind, 3), 3, 4)
    }

    #[test]
    fn products_and_sums() {
        let t = template(LawKind::Additive);
        let x = parse_polynomial("t1*t2*t3", &t).unwrap();
        assert_eq!(x.display().to_string(), "t1*t2*t3");
        let y = parse_polynomial("2*t1 - 3/4*t2^2 + (t3)", &t).unwrap();
        let z = parse_polynomial("-3/4*t2^2 + t3 + 2*t1", &t).unwrap();
        assert_eq!(y, z);
        assert_eq!(parse_polynomial("-t1^2", &t).unwrap(), parse_polynomial("-(t1*t1)", &t).unwrap());
    }

    #[test]
    fn display_round_trip() {
        for kind in [LawKind::Multiplicative, LawKind::UniversalRational] {
            let t = template(kind);
            let text = match kind {
                LawKind::Multiplicative => "2*t1 - beta*t1^2 + (1 + beta)*t2*t3",
                _ => "t1 + (1/2*b1^2 - b2)*t1^3 - b1*t2^2 + 5",
            };
            let x = parse_polynomial(text, &t).unwrap();
            let printed = x.display().to_string();
            assert_eq!(parse_polynomial(&printed, &t).unwrap(), x, "{printed}");
        }
    }

    #[test]
    fn errors() {
        let t = template(LawKind::Additive);
        for bad in ["", "t4", "t0", "beta", "b1", "t1 +", "(t1", "t1 / t2", "x", "t1 ^ t2", "t1 $"] {
            assert!(parse_polynomial(bad, &t).is_err(), "{bad}");
        }
        let m = template(LawKind::Multiplicative);
        assert!(parse_polynomial("b2", &m).is_err());
    }
}
