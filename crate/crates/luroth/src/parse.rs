//! Expression parser for plane quartics: integer and rational literals, the
//! variables x, y, z (aliases x0, x1, x2), operators + − * / ^, and parentheses.
//! Parsing always happens over the rationals; prime-field callers reduce afterward.

use crate::ring::field::Rat;
use crate::ring::monomial::Order;
use crate::ring::poly::{Ctx, MultiPoly};
use crate::ring::ternary::{plain_exponents, TernaryForm};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A syntax or well-formedness error, with the byte offset where it occurred.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { position, message: message.into() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits parse");
                out.push((start, Tok::Int(n)));
            }
            b'+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            b'-' | 0xE2 if b == b'-' || text[i..].starts_with('\u{2212}') => {
                // ASCII hyphen or the minus sign U+2212.
                let len = if b == b'-' { 1 } else { '\u{2212}'.len_utf8() };
                out.push((i, Tok::Minus));
                i += len;
            }
            b'*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            b'/' => {
                out.push((i, Tok::Slash));
                i += 1;
            }
            b'^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            b'(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            b')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let name = &text[start..i];
                let var = match name {
                    "x" | "x0" => 0,
                    "y" | "x1" => 1,
                    "z" | "x2" => 2,
                    _ => return err(start, format!("unknown identifier `{name}`")),
                };
                out.push((start, Tok::Var(var)));
            }
            _ => {
                let ch = text[i..].chars().next().unwrap();
                return err(i, format!("unexpected character `{ch}`"));
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
    ctx: Ctx<Rat>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&(usize, Tok)> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<&(usize, Tok)> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn expr(&mut self) -> Result<MultiPoly<Rat>, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some((_, Tok::Plus)) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = acc.add(&self.ctx, &rhs);
                }
                Some((_, Tok::Minus)) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = acc.sub(&self.ctx, &rhs);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly<Rat>, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some((_, Tok::Star)) => {
                    self.bump();
                    let rhs = self.unary()?;
                    acc = acc.mul(&self.ctx, &rhs);
                }
                Some(&(p, Tok::Slash)) => {
                    self.bump();
                    let rhs = self.unary()?;
                    let c = constant_value(&rhs)
                        .ok_or(ParseError { position: p, message: "division by a non-constant".into() })?;
                    if c.is_zero() {
                        return err(p, "division by zero");
                    }
                    let inv = BigRational::one() / c;
                    acc = acc.mul(&self.ctx, &MultiPoly::constant(&self.ctx, inv));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly<Rat>, ParseError> {
        match self.peek() {
            Some((_, Tok::Minus)) => {
                self.bump();
                let inner = self.unary()?;
                Ok(MultiPoly::constant(&self.ctx, -BigRational::one()).mul(&self.ctx, &inner))
            }
            Some((_, Tok::Plus)) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly<Rat>, ParseError> {
        let base = self.atom()?;
        if let Some((_, Tok::Caret)) = self.peek() {
            self.bump();
            let p = self.here();
            match self.bump() {
                Some((_, Tok::Int(n))) => {
                    if n.is_negative() {
                        return err(p, "negative exponent");
                    }
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| ParseError { position: p, message: "exponent too large".into() })?;
                    if e > 64 {
                        return err(p, "exponent too large");
                    }
                    let mut acc = MultiPoly::constant(&self.ctx, BigRational::one());
                    for _ in 0..e {
                        acc = acc.mul(&self.ctx, &base);
                    }
                    Ok(acc)
                }
                _ => err(p, "expected an integer exponent after `^`"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly<Rat>, ParseError> {
        let p = self.here();
        match self.bump() {
            Some((_, Tok::Int(n))) => {
                let n = n.clone();
                Ok(MultiPoly::constant(&self.ctx, BigRational::from_integer(n)))
            }
            Some((_, Tok::Var(v))) => {
                let v = *v;
                Ok(MultiPoly::var(&self.ctx, v))
            }
            Some((_, Tok::LParen)) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some((_, Tok::RParen)) => Ok(inner),
                    _ => err(self.here(), "expected `)`"),
                }
            }
            Some((_, t)) => err(p, format!("unexpected token {t:?}")),
            None => err(p, "unexpected end of input"),
        }
    }
}

fn constant_value(p: &MultiPoly<Rat>) -> Option<BigRational> {
    if p.is_zero() {
        return Some(BigRational::zero());
    }
    if p.terms.len() == 1 && p.terms[0].0.is_one() {
        return Some(p.terms[0].1.clone());
    }
    None
}

/// Parse an arbitrary polynomial expression in x, y, z over the rationals.
pub fn parse_polynomial(text: &str) -> Result<MultiPoly<Rat>, ParseError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return err(0, "empty expression");
    }
    let ctx = Ctx::new(Rat, 3, Order::Grevlex);
    let mut parser = Parser { toks: &toks, pos: 0, end: text.len(), ctx };
    let poly = parser.expr()?;
    if parser.pos != toks.len() {
        let (p, t) = &toks[parser.pos];
        return err(*p, format!("unexpected trailing token {t:?}"));
    }
    Ok(poly)
}

/// Parse a homogeneous quartic in x, y, z; errors name the offending degree.
pub fn parse_quartic(text: &str) -> Result<TernaryForm<Rat>, ParseError> {
    let poly = parse_polynomial(text)?;
    let ctx = Ctx::new(Rat, 3, Order::Grevlex);
    if poly.is_zero() {
        return err(0, "the zero polynomial is not a quartic");
    }
    if !poly.is_homogeneous() {
        return err(0, "the polynomial is not homogeneous".to_string());
    }
    match poly.total_deg() {
        Some(4) => Ok(TernaryForm::from_poly(&ctx, 4, &poly)),
        Some(d) => err(0, format!("expected total degree 4, found degree {d}")),
        None => err(0, "the zero polynomial is not a quartic"),
    }
}

/// Print a quartic in the parser's own grammar; `parse_quartic` inverts this.
pub fn print_quartic(f: &TernaryForm<Rat>) -> String {
    let names = ["x", "y", "z"];
    let mut out = String::new();
    for (idx, c) in f.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (i, j, k) = plain_exponents(f.degree, idx);
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        if !mag.is_one() || (i, j, k) == (0, 0, 0) {
            factors.push(mag.to_string());
        }
        for (v, e) in [(0usize, i), (1, j), (2, k)] {
            match e {
                0 => {}
                1 => factors.push(names[v].to_string()),
                _ => factors.push(format!("{}^{}", names[v], e)),
            }
        }
        out.push_str(&factors.join("*"));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{form_ctx, klein_quartic};
    use crate::ring::field::Field;
    use crate::rng::SplitMix64;

    #[test]
    fn fermat_parses_to_unit_coefficients_at_the_pure_powers() {
        let f = parse_quartic("x^4 + y^4 + z^4").unwrap();
        for (idx, c) in f.coeffs.iter().enumerate() {
            let expect = matches!(idx, 0 | 10 | 14);
            assert_eq!(!c.is_zero(), expect, "coefficient {idx}");
        }
    }

    #[test]
    fn aliases_give_the_klein_quartic() {
        let parsed = parse_quartic("x0^3*x1 + x1^3*x2 + x2^3*x0").unwrap();
        let ctx = form_ctx(Rat);
        assert_eq!(parsed.coeffs, klein_quartic(&ctx).coeffs);
        let parsed2 = parse_quartic("x^3*y + y^3*z + z^3*x").unwrap();
        assert_eq!(parsed2.coeffs, parsed.coeffs);
    }

    #[test]
    fn inhomogeneous_input_is_rejected_with_a_degree_message() {
        let e = parse_quartic("x^3 + y^4").unwrap_err();
        assert!(e.message.contains("not homogeneous"), "{e}");
        let e = parse_quartic("x^2*y").unwrap_err();
        assert!(e.message.contains("degree 3"), "{e}");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let e = parse_quartic("x^4 + w^4").unwrap_err();
        assert_eq!(e.position, 6);
        assert!(e.message.contains("unknown identifier"));
        let e = parse_quartic("x^4 + + ").unwrap_err();
        assert!(e.position >= 6);
        let e = parse_quartic("x^4 + y^4 + z^4)").unwrap_err();
        assert_eq!(e.position, 15);
        let e = parse_quartic("(1/0)*x^4").unwrap_err();
        assert!(e.message.contains("division by zero"));
    }

    #[test]
    fn rational_coefficients_and_unary_minus_work() {
        let f = parse_quartic("1/2*x^4 - 3*y^4 + (2/3)*z^4").unwrap();
        assert_eq!(f.coeffs[0], Rat.from_rational(&BigRational::new(1.into(), 2.into())).unwrap());
        assert_eq!(f.coeffs[10], Rat.from_i64(-3));
        assert_eq!(f.coeffs[14], Rat.from_rational(&BigRational::new(2.into(), 3.into())).unwrap());
        let g = parse_quartic("-x^4 + -1*y^4 - -z^4").unwrap();
        assert_eq!(g.coeffs[0], Rat.from_i64(-1));
        assert_eq!(g.coeffs[10], Rat.from_i64(-1));
        assert_eq!(g.coeffs[14], Rat.from_i64(1));
    }

    #[test]
    fn parse_print_parse_is_the_identity_on_random_quartics() {
        let mut rng = SplitMix64::new(0x9A55E);
        let ctx = form_ctx(Rat);
        for _ in 0..25 {
            let coeffs: Vec<_> = (0..15)
                .map(|_| {
                    let n = rng.range_i64(-40, 40);
                    let d = rng.range_i64(1, 9);
                    Rat.from_rational(&BigRational::new(n.into(), d.into())).unwrap()
                })
                .collect();
            let f = TernaryForm { degree: 4, coeffs };
            if f.is_zero(&ctx) {
                continue;
            }
            let text = print_quartic(&f);
            let parsed = parse_quartic(&text).unwrap_or_else(|e| panic!("reparse `{text}`: {e}"));
            assert_eq!(parsed.coeffs, f.coeffs, "round trip through `{text}`");
        }
    }

    #[test]
    fn expanded_products_match_direct_expansion() {
        let f = parse_quartic("(x + 2*y + 3*z)^4").unwrap();
        let ctx = form_ctx(Rat);
        let line = TernaryForm::line(Rat.from_i64(1), Rat.from_i64(2), Rat.from_i64(3));
        let expect = line.pow(&ctx, 4);
        assert_eq!(f.coeffs, expect.coeffs);
    }
}
