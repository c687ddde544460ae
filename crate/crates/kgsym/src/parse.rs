//! Text grammars for operators and reduced jet polynomials.
//!
//! Both share one tokenizer and one precedence ladder:
//! `expr := term (('+'|'-') term)*`, `term := factor ('*' factor)*`,
//! `factor := '-' factor | atom ('^' n)?`. Only the atoms and the meaning
//! of `*` differ: composition for operators, product for jets.

use kgsym_core::{FieldId, Rational, ReducedJetPoly, TDOperator, XYPoly};
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
    End,
}

struct Lexer {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Lexer {
    fn new(text: &str) -> Result<Self, ParseError> {
        let mut toks = Vec::new();
        let mut chars = text.char_indices().peekable();
        while let Some(&(pos, c)) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
            } else if c.is_ascii_digit() {
                let mut end = pos;
                while let Some(&(i, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = i + 1;
                    chars.next();
                }
                toks.push((pos, Tok::Num(text[pos..end].parse().expect("digits"))));
            } else if c.is_ascii_alphabetic() {
                let mut end = pos;
                while let Some(&(i, d)) = chars.peek() {
                    if !d.is_ascii_alphanumeric() {
                        break;
                    }
                    end = i + 1;
                    chars.next();
                }
                toks.push((pos, Tok::Ident(text[pos..end].to_string())));
            } else if "+-*^/()[]".contains(c) {
                toks.push((pos, Tok::Sym(c)));
                chars.next();
            } else {
                return Err(ParseError {
                    pos,
                    msg: format!("unexpected character '{c}'"),
                });
            }
        }
        toks.push((text.len(), Tok::End));
        Ok(Lexer { toks, at: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn next(&mut self) -> (usize, Tok) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.next();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn error(&self, msg: String) -> ParseError {
        ParseError {
            pos: self.pos(),
            msg,
        }
    }

    fn natural(&mut self) -> Result<BigInt, ParseError> {
        match self.next() {
            (_, Tok::Num(n)) => Ok(n),
            (pos, _) => Err(ParseError {
                pos,
                msg: "expected an integer".into(),
            }),
        }
    }
}

/// The ring each grammar evaluates into.
trait Ring: Sized {
    fn constant(c: Rational) -> Self;
    fn ident(lex: &mut Lexer, pos: usize, name: &str) -> Result<Self, ParseError>;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn pow(&self, n: u32) -> Self;
}

fn expr<R: Ring>(lex: &mut Lexer) -> Result<R, ParseError> {
    let mut acc = term::<R>(lex)?;
    loop {
        if lex.eat('+') {
            acc = acc.add(&term(lex)?);
        } else if lex.eat('-') {
            acc = acc.sub(&term(lex)?);
        } else {
            return Ok(acc);
        }
    }
}

fn term<R: Ring>(lex: &mut Lexer) -> Result<R, ParseError> {
    let mut acc = factor::<R>(lex)?;
    while lex.eat('*') {
        acc = acc.mul(&factor(lex)?);
    }
    Ok(acc)
}

fn factor<R: Ring>(lex: &mut Lexer) -> Result<R, ParseError> {
    if lex.eat('-') {
        return Ok(factor::<R>(lex)?.neg());
    }
    let base = atom::<R>(lex)?;
    if !lex.eat('^') {
        return Ok(base);
    }
    if *lex.peek() == Tok::Sym('-') {
        return Err(lex.error("negative exponent".into()));
    }
    let pos = lex.pos();
    let n = lex.natural()?;
    let n = u32::try_from(n).map_err(|_| ParseError {
        pos,
        msg: "exponent too large".into(),
    })?;
    Ok(base.pow(n))
}

fn atom<R: Ring>(lex: &mut Lexer) -> Result<R, ParseError> {
    match lex.next() {
        (_, Tok::Num(n)) => {
            if lex.eat('/') {
                let pos = lex.pos();
                let d = lex.natural()?;
                if d == BigInt::from(0) {
                    return Err(ParseError {
                        pos,
                        msg: "zero denominator".into(),
                    });
                }
                Ok(R::constant(Rational::new(n, d)))
            } else {
                Ok(R::constant(Rational::from_integer(n)))
            }
        }
        (pos, Tok::Ident(name)) => R::ident(lex, pos, &name),
        (_, Tok::Sym('(')) => {
            let inner = expr::<R>(lex)?;
            lex.expect(')')?;
            Ok(inner)
        }
        (pos, Tok::End) => Err(ParseError {
            pos,
            msg: "unexpected end of input".into(),
        }),
        (pos, Tok::Sym(c)) => Err(ParseError {
            pos,
            msg: format!("unexpected '{c}'"),
        }),
    }
}

fn parse_with<R: Ring>(text: &str) -> Result<R, ParseError> {
    let mut lex = Lexer::new(text)?;
    let out = expr::<R>(&mut lex)?;
    match lex.peek() {
        Tok::End => Ok(out),
        _ => Err(lex.error("trailing input".into())),
    }
}

impl Ring for TDOperator {
    fn constant(c: Rational) -> Self {
        TDOperator::constant(c)
    }

    fn ident(_: &mut Lexer, pos: usize, name: &str) -> Result<Self, ParseError> {
        Ok(match name {
            "Dx" => TDOperator::dx(),
            "Dy" => TDOperator::dy(),
            "J" => TDOperator::j(),
            "x" => TDOperator::mul(XYPoly::x()),
            "y" => TDOperator::mul(XYPoly::y()),
            _ => {
                return Err(ParseError {
                    pos,
                    msg: format!("unknown operator symbol '{name}'"),
                })
            }
        })
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self.compose(other)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn pow(&self, n: u32) -> Self {
        TDOperator::pow(self, n)
    }
}

impl Ring for ReducedJetPoly {
    fn constant(c: Rational) -> Self {
        ReducedJetPoly::constant(c)
    }

    fn ident(lex: &mut Lexer, pos: usize, name: &str) -> Result<Self, ParseError> {
        match name {
            "x" => return Ok(ReducedJetPoly::coefficient(XYPoly::x())),
            "y" => return Ok(ReducedJetPoly::coefficient(XYPoly::y())),
            _ => {}
        }
        let mut chars = name.chars();
        let field = match (chars.next(), chars.next()) {
            (Some(c), None) => FieldId::new(c),
            _ => None,
        };
        let field = field.ok_or_else(|| ParseError {
            pos,
            msg: format!("unknown jet symbol '{name}'"),
        })?;
        lex.expect('[')?;
        let negative = lex.eat('-');
        let ipos = lex.pos();
        let k = lex.natural()?;
        let k = i64::try_from(k).map_err(|_| ParseError {
            pos: ipos,
            msg: "index too large".into(),
        })?;
        lex.expect(']')?;
        Ok(ReducedJetPoly::field_var(
            field,
            if negative { -k } else { k },
        ))
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn pow(&self, n: u32) -> Self {
        ReducedJetPoly::pow(self, n)
    }
}

/// Operator expression; `*` is composition.
pub fn parse_operator(text: &str) -> Result<TDOperator, ParseError> {
    parse_with(text)
}

/// Jet polynomial in `u[k]`, other fields `f[k]`, `x`, `y`.
pub fn parse_jet(text: &str) -> Result<ReducedJetPoly, ParseError> {
    parse_with(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use kgsym_core::{int, rat, BasisKind};

    #[test]
    fn operator_examples() {
        assert_eq!(
            parse_operator("(J + 1/2)^1 * Dx").unwrap(),
            TDOperator::basis(BasisKind::Q, 1, 1).unwrap()
        );
        assert_eq!(
            parse_operator("Dx*Dy - 1").unwrap(),
            TDOperator::klein_gordon()
        );
        assert_eq!(parse_operator("J^0").unwrap(), TDOperator::one());
        assert_eq!(
            parse_operator("Dx*x").unwrap(),
            &TDOperator::term(XYPoly::x(), 1, 0) + &TDOperator::one()
        );
    }

    #[test]
    fn operator_errors() {
        let e = parse_operator("J^-1").unwrap_err();
        assert_eq!(e.pos, 2);
        assert!(e.msg.contains("negative"));
        assert_eq!(parse_operator("Dz").unwrap_err().pos, 0);
        assert_eq!(parse_operator("Dx +").unwrap_err().pos, 4);
        assert_eq!(parse_operator("(Dx").unwrap_err().pos, 3);
        assert_eq!(parse_operator("1/0").unwrap_err().pos, 2);
        assert!(parse_operator("u[1]").is_err());
    }

    #[test]
    fn jet_examples() {
        let u = ReducedJetPoly::u;
        let ju = &u(1).scale_by(&XYPoly::x()) - &u(-1).scale_by(&XYPoly::y());
        assert_eq!(parse_jet("x*u[1] - y*u[-1]").unwrap(), ju);
        assert_eq!(parse_jet("u[0]^2").unwrap(), u(0).pow(2));
        assert_eq!(
            parse_jet("3/2").unwrap(),
            ReducedJetPoly::constant(rat(3, 2))
        );
        assert_eq!(parse_jet("-u[0]^2").unwrap(), -&u(0).pow(2));
        assert_eq!(
            parse_jet("f[-1]*u[0]").unwrap(),
            &ReducedJetPoly::field_var(FieldId::F, -1) * &u(0)
        );
        assert_eq!(parse_jet("2*u[0]").unwrap(), u(0).scale(&int(2)));
    }

    #[test]
    fn jet_errors() {
        assert_eq!(parse_jet("u[").unwrap_err().pos, 2);
        assert_eq!(parse_jet("Dx").unwrap_err().pos, 0);
        assert_eq!(parse_jet("u[1] u[2]").unwrap_err().pos, 5);
        assert_eq!(parse_jet("x[1]").unwrap_err().pos, 1);
        assert!(parse_jet("u[0] # 1").is_err());
    }

    #[test]
    fn printed_forms_parse_back() {
        for text in [
            "(x)*Dx^2 + (-y)*Dx*Dy + Dx",
            "Dx*Dy + (-1)",
            "(1)",
            "0",
            "(3/2*x^2*y - y + 1)*Dy",
        ] {
            assert_eq!(parse_operator(text).unwrap().to_string(), text);
        }
        for text in [
            "x*u[1] - y*u[-1]",
            "-u[0]^2",
            "(x - y)*u[1] + 2",
            "0",
            "-1/2*u[0]*f[2]",
        ] {
            let p = parse_jet(text).unwrap();
            assert_eq!(parse_jet(&p.to_string()).unwrap(), p, "{text}");
        }
    }
}
