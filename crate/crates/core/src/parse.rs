//! Polynomial expression parser.
//!
//! Grammar (EBNF):
//! ```text
//! expr   := [ '-' ] term { ( '+' | '-' ) term }
//! term   := factor { '*' factor }
//! factor := atom [ '^' integer ]
//! atom   := integer [ '/' integer ] | variable | '(' expr ')'
//! ```
//! Variables are the identifiers declared in the ring; juxtaposition is not
//! multiplication (`2x` is an error, write `2*x`); `/` is accepted only
//! between integer literals (a rational literal), never as division.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            col: self.col,
            msg: msg.into(),
        }
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.src.get(self.pos).copied()?;
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(b)
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn tokens(mut self) -> Result<Vec<(Tok, usize, usize)>> {
        let mut out = Vec::new();
        while let Some(b) = self.peek() {
            let (line, col) = (self.line, self.col);
            match b {
                b' ' | b'\t' | b'\r' | b'\n' => {
                    self.bump();
                }
                b'+' => {
                    self.bump();
                    out.push((Tok::Plus, line, col));
                }
                b'-' => {
                    self.bump();
                    out.push((Tok::Minus, line, col));
                }
                b'*' => {
                    self.bump();
                    out.push((Tok::Star, line, col));
                }
                b'^' => {
                    self.bump();
                    out.push((Tok::Caret, line, col));
                }
                b'/' => {
                    self.bump();
                    out.push((Tok::Slash, line, col));
                }
                b'(' => {
                    self.bump();
                    out.push((Tok::LParen, line, col));
                }
                b')' => {
                    self.bump();
                    out.push((Tok::RParen, line, col));
                }
                b'0'..=b'9' => {
                    let mut v: u64 = 0;
                    while let Some(d @ b'0'..=b'9') = self.peek() {
                        v = v
                            .checked_mul(10)
                            .and_then(|v| v.checked_add((d - b'0') as u64))
                            .ok_or_else(|| self.error("integer literal too large"))?;
                        self.bump();
                    }
                    out.push((Tok::Int(v), line, col));
                }
                b if b.is_ascii_alphabetic() || b == b'_' => {
                    let start = self.pos;
                    while let Some(c) = self.peek() {
                        if c.is_ascii_alphanumeric() || c == b'_' {
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    let name = std::str::from_utf8(&self.src[start..self.pos])
                        .unwrap()
                        .to_string();
                    out.push((Tok::Ident(name), line, col));
                }
                other => {
                    return Err(self.error(format!("unexpected character `{}`", other as char)))
                }
            }
        }
        Ok(out)
    }
}

struct Parser<'r> {
    ring: &'r Ring,
    toks: Vec<(Tok, usize, usize)>,
    idx: usize,
}

impl<'r> Parser<'r> {
    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.idx)
            .map(|(_, l, c)| (*l, *c))
            .unwrap_or_else(|| {
                self.toks
                    .last()
                    .map(|(_, l, c)| (*l, *c + 1))
                    .unwrap_or((1, 1))
            })
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        let (line, col) = self.here();
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(t, _, _)| t)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(t, _, _)| t.clone());
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&t) {
            self.idx += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul(&self.factor()?)?;
                }
                // Adjacent atoms mean the user wrote juxtaposition.
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    return Err(self.error("juxtaposition is not multiplication; use `*`"));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            match self.bump() {
                Some(Tok::Int(e)) => {
                    if e > u16::MAX as u64 {
                        return Err(self.error("exponent too large"));
                    }
                    return base.pow(e as u32);
                }
                _ => return Err(self.error("expected integer exponent after `^`")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.bump() {
            Some(Tok::Int(n)) => {
                // A slash directly after an integer is a rational literal.
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    match self.bump() {
                        Some(Tok::Int(d)) => {
                            let c = self
                                .ring
                                .field()
                                .from_ratio(n as i64, d as i64)
                                .map_err(|e| self.error(e.to_string()))?;
                            Ok(Polynomial::constant(self.ring, c))
                        }
                        _ => Err(self.error("expected integer denominator")),
                    }
                } else {
                    Ok(Polynomial::constant(
                        self.ring,
                        self.ring.field().from_i64(n as i64),
                    ))
                }
            }
            Some(Tok::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => Ok(Polynomial::variable(self.ring, i)),
                None => Err(Error::UnknownVariable(name)),
            },
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Some(Tok::Minus) => Ok(self.factor()?.neg()),
            Some(Tok::Slash) => Err(Error::DivisionUnsupported),
            _ => Err(self.error("expected a polynomial atom")),
        }
    }
}

/// Parse a polynomial expression over the given ring.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<Polynomial> {
    let toks = Lexer::new(text).tokens()?;
    let mut p = Parser {
        ring,
        toks,
        idx: 0,
    };
    let poly = p.expr()?;
    if p.idx != p.toks.len() {
        // A stray slash here is an attempted division.
        if p.peek() == Some(&Tok::Slash) {
            return Err(Error::DivisionUnsupported);
        }
        return Err(p.error("trailing input"));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;
    use crate::monomial::MonomialOrder;

    fn p2() -> Ring {
        Ring::new(
            &["x", "y"],
            FieldCtx::prime(32003).unwrap(),
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    fn r4_ring() -> Ring {
        Ring::new(
            &["a", "b", "c", "d"],
            FieldCtx::prime(32003).unwrap(),
            MonomialOrder::GrevLex,
        )
        .unwrap()
    }

    #[test]
    fn parses_literal_terms() {
        let r = p2();
        let f = parse_poly("x^2 - y", &r).unwrap();
        assert_eq!(f.num_terms(), 2);
        let x2 = Polynomial::variable(&r, 0).pow(2).unwrap();
        let y = Polynomial::variable(&r, 1);
        assert_eq!(f, x2.sub(&y).unwrap());
    }

    #[test]
    fn expands_products() {
        let r = r4_ring();
        let f = parse_poly("(a+c)*(b+d)", &r).unwrap();
        let expected = parse_poly("a*b + a*d + b*c + c*d", &r).unwrap();
        assert_eq!(f, expected);
    }

    #[test]
    fn cancellation_to_zero() {
        let r = p2();
        assert!(parse_poly("x - x", &r).unwrap().is_zero());
    }

    #[test]
    fn rejects_unknown_identifier() {
        let r = p2();
        assert!(matches!(
            parse_poly("x + z", &r),
            Err(Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn rejects_division() {
        let r = p2();
        assert!(matches!(
            parse_poly("x / y", &r),
            Err(Error::DivisionUnsupported) | Err(Error::Parse { .. })
        ));
        // rational literal is fine
        assert!(parse_poly("1/2 * x", &r).is_ok());
    }

    #[test]
    fn rejects_juxtaposition() {
        let r = p2();
        assert!(parse_poly("2 x", &r).is_err());
        assert!(parse_poly("x y", &r).is_err());
    }

    #[test]
    fn print_parse_roundtrip_examples() {
        let r = p2();
        for src in ["x^2 - y", "(x+y)^3", "1/1 * x - 2", "0", "-x + 5*y^2"] {
            let f = parse_poly(src, &r).unwrap();
            let again = parse_poly(&f.to_string(), &r).unwrap();
            assert_eq!(f, again, "roundtrip failed for {src}");
        }
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(48))]

        #[test]
        fn print_parse_roundtrip_random(seed_terms in proptest::collection::vec(
            (proptest::collection::vec(0u16..4, 2), -9i64..10), 0..6))
        {
            let r = p2();
            let terms: Vec<_> = seed_terms
                .into_iter()
                .map(|(e, c)| (crate::monomial::Monomial::from_exps(&e), r.field().from_i64(c)))
                .collect();
            let f = Polynomial::from_terms(&r, terms);
            let g = parse_poly(&f.to_string(), &r).unwrap();
            proptest::prop_assert_eq!(f, g);
        }

        #[test]
        fn ring_axioms_random(
            a in proptest::collection::vec((proptest::collection::vec(0u16..3, 2), -5i64..6), 0..4),
            b in proptest::collection::vec((proptest::collection::vec(0u16..3, 2), -5i64..6), 0..4),
            c in proptest::collection::vec((proptest::collection::vec(0u16..3, 2), -5i64..6), 0..4),
        ) {
            let r = p2();
            let mk = |ts: Vec<(Vec<u16>, i64)>| {
                Polynomial::from_terms(&r, ts.into_iter()
                    .map(|(e, k)| (crate::monomial::Monomial::from_exps(&e), r.field().from_i64(k)))
                    .collect())
            };
            let (f, g, h) = (mk(a), mk(b), mk(c));
            // associativity and distributivity, exactly
            let lhs = f.mul(&g).unwrap().mul(&h).unwrap();
            let rhs = f.mul(&g.mul(&h).unwrap()).unwrap();
            proptest::prop_assert_eq!(lhs, rhs);
            let lhs = f.add(&g).unwrap().mul(&h).unwrap();
            let rhs = f.mul(&h).unwrap().add(&g.mul(&h).unwrap()).unwrap();
            proptest::prop_assert_eq!(lhs, rhs);
        }
    }
}
