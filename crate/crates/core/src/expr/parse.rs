//! Recursive-descent parser for series expressions.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' exponent)?
//! exponent:= int | '-' int | '(' rat ')'
//! primary := int | '(' rat ')' | '(' expr ')' | 'q' ('^' exponent)?
//!          | poch(arg, rat) | f(arg, arg) | fsum(arg, arg)
//!          | eta(rat) | etaq((rat, rat), ...) | omega(k[, rat])
//!          | R(rat) | S1(rat) | S2(rat) | T1(rat) | T2(rat)
//!          | root(expr, n) | subst(expr, rat)
//!          | lambert(b, ±a, ..., none|n|legendre3, all|odd)
//!          | k(rat, rat, rat, rat) | SQRT5 | ALPHA(k) | ...
//! arg     := ('+' | '-')? ('q' ('^' exponent)? | rat)
//! ```
//! A bare rational as `arg` is an exponent: `f(-3, -17)` is f(−q³, −q¹⁷).

use std::str::FromStr;

use crate::arith::{ConstName, KElem, Rat};
use crate::cfractions::CfName;
use crate::eisenstein::{LambertSpec, LambertWeight, Parity};
use crate::error::{Error, Result};
use crate::qfunctions::{EtaSpec, MonomialArg, ThetaMethod};

use super::Expr;

pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = lhs + self.term()?;
            } else if self.eat(b'-') {
                lhs = lhs - self.term()?;
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(b'*') {
                lhs = lhs * self.unary()?;
            } else if self.eat(b'/') {
                lhs = lhs / self.unary()?;
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        let base = self.primary()?;
        if self.eat(b'^') {
            let e = self.exponent()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<Rat> {
        if self.eat(b'(') {
            let r = self.rational()?;
            self.expect(b')')?;
            return Ok(r);
        }
        let neg = self.eat(b'-');
        let v = self.integer()?;
        Ok(if neg { -Rat::from(v) } else { Rat::from(v) })
    }

    fn integer(&mut self) -> Result<rug::Integer> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits form an integer"))
    }

    /// `[-]p[/q]`
    fn rational(&mut self) -> Result<Rat> {
        let neg = self.eat(b'-');
        if !neg {
            self.eat(b'+');
        }
        let n = self.integer()?;
        let at = self.pos;
        let d = if self.eat(b'/') { self.integer()? } else { rug::Integer::from(1) };
        let r = Rat::from_integers(n, d).map_err(|_| Error::Parse {
            position: at,
            message: "zero denominator".into(),
        })?;
        Ok(if neg { -r } else { r })
    }

    fn small(&mut self) -> Result<u32> {
        let at = self.pos;
        self.integer()?.to_u32().ok_or(Error::Parse {
            position: at,
            message: "integer out of range".into(),
        })
    }

    /// `(p/q)` or `(-p)` written without spaces denotes a rational literal.
    fn literal_in_parens(&mut self) -> Option<Rat> {
        let rest = &self.src[self.pos..];
        let close = rest.iter().position(|&c| c == b')')?;
        let inner = std::str::from_utf8(&rest[1..close]).ok()?;
        let body = inner.strip_prefix('-').unwrap_or(inner);
        let ok = !body.is_empty()
            && body.split('/').count() <= 2
            && body.split('/').all(|p| !p.is_empty() && p.bytes().all(|c| c.is_ascii_digit()));
        if !ok {
            return None;
        }
        let r = Rat::from_str(inner).ok()?;
        self.pos += close + 1;
        Some(r)
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            if self.pos == start && self.src[self.pos].is_ascii_digit() {
                break;
            }
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn arg(&mut self) -> Result<MonomialArg> {
        let negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let exp = if self.peek() == Some(b'q') {
            self.pos += 1;
            if self.eat(b'^') {
                self.exponent()?
            } else {
                Rat::one()
            }
        } else {
            self.rational()?
        };
        Ok(MonomialArg { negative, exp })
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => {
                if let Some(r) = self.literal_in_parens() {
                    return Ok(Expr::Num(r));
                }
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Num(Rat::from(self.integer()?))),
            Some(_) => {
                let start = self.pos;
                let name = self.ident().ok_or_else(|| self.error("expected an expression"))?;
                self.call(&name, start)
            }
        }
    }

    fn call(&mut self, name: &str, start: usize) -> Result<Expr> {
        if name == "q" {
            let e = if self.eat(b'^') { self.exponent()? } else { Rat::one() };
            return Ok(Expr::Monomial(e));
        }
        if let Ok(c) = ConstName::from_str(name) {
            return Ok(Expr::Named(c));
        }
        if let Ok(cf) = CfName::from_str(name) {
            self.expect(b'(')?;
            let scale = self.rational()?;
            self.expect(b')')?;
            return Ok(Expr::Cf { name: cf, scale });
        }
        let e = match name {
            "ALPHA" => {
                self.expect(b'(')?;
                let k = self.small()?;
                self.expect(b')')?;
                let c = ConstName::from_str(&format!("ALPHA({k})")).map_err(|_| Error::Parse {
                    position: start,
                    message: format!("unknown constant ALPHA({k})"),
                })?;
                Expr::Named(c)
            }
            "poch" => {
                self.expect(b'(')?;
                let a = self.arg()?;
                self.expect(b',')?;
                let step = self.rational()?;
                self.expect(b')')?;
                Expr::Poch { a, step }
            }
            "f" | "fsum" => {
                self.expect(b'(')?;
                let a = self.arg()?;
                self.expect(b',')?;
                let b = self.arg()?;
                self.expect(b')')?;
                let method = if name == "f" {
                    ThetaMethod::TripleProduct
                } else {
                    ThetaMethod::BilateralSum
                };
                Expr::Theta { a, b, method }
            }
            "eta" => {
                self.expect(b'(')?;
                let t = self.rational()?;
                self.expect(b')')?;
                self.eta_spec(vec![(t, Rat::one())], start)?
            }
            "etaq" => {
                self.expect(b'(')?;
                let mut fs = Vec::new();
                loop {
                    self.expect(b'(')?;
                    let t = self.rational()?;
                    self.expect(b',')?;
                    let e = self.rational()?;
                    self.expect(b')')?;
                    fs.push((t, e));
                    if !self.eat(b',') {
                        break;
                    }
                }
                self.expect(b')')?;
                self.eta_spec(fs, start)?
            }
            "omega" => {
                self.expect(b'(')?;
                let at = self.pos;
                let k = self.small()?;
                if !(1..=9).contains(&k) {
                    return Err(Error::Parse {
                        position: at,
                        message: "omega index must be in 1..=9".into(),
                    });
                }
                let scale = if self.eat(b',') { self.rational()? } else { Rat::one() };
                self.expect(b')')?;
                Expr::Omega { k: k as u8, scale }
            }
            "root" => {
                self.expect(b'(')?;
                let e = self.expr()?;
                self.expect(b',')?;
                let n = self.small()?;
                self.expect(b')')?;
                if n == 0 {
                    return Err(self.error("root index must be positive"));
                }
                e.root(n)
            }
            "subst" => {
                self.expect(b'(')?;
                let e = self.expr()?;
                self.expect(b',')?;
                let m = self.rational()?;
                self.expect(b')')?;
                e.subst(m)
            }
            "k" => {
                self.expect(b'(')?;
                let mut c = Vec::with_capacity(4);
                for i in 0..4 {
                    if i > 0 {
                        self.expect(b',')?;
                    }
                    c.push(self.rational()?);
                }
                self.expect(b')')?;
                let [c0, c1, c2, c3]: [Rat; 4] = c.try_into().expect("four coordinates");
                Expr::Field(KElem::new(c0, c1, c2, c3))
            }
            "lambert" => self.lambert(start)?,
            _ => {
                return Err(Error::Parse {
                    position: start,
                    message: format!("unknown name `{name}`"),
                })
            }
        };
        Ok(e)
    }

    fn eta_spec(&self, fs: Vec<(Rat, Rat)>, start: usize) -> Result<Expr> {
        EtaSpec::new(fs).map(Expr::Eta).map_err(|e| Error::Parse {
            position: start,
            message: e.to_string(),
        })
    }

    fn lambert(&mut self, start: usize) -> Result<Expr> {
        self.expect(b'(')?;
        let b = self.small()?;
        let mut residues = Vec::new();
        while self.eat(b',') {
            match self.peek() {
                Some(c) if c == b'+' || c == b'-' || c.is_ascii_digit() => {
                    let neg = self.eat(b'-');
                    if !neg {
                        self.eat(b'+');
                    }
                    let a = self.small()? as i64;
                    residues.push(if neg { -a } else { a });
                }
                _ => break,
            }
        }
        let weight = match self.ident().as_deref() {
            Some("none") => LambertWeight::None,
            Some("n") => LambertWeight::N,
            Some("legendre3") => LambertWeight::Legendre3,
            _ => return Err(self.error("expected a weight: none, n or legendre3")),
        };
        self.expect(b',')?;
        let parity = match self.ident().as_deref() {
            Some("all") => Parity::All,
            Some("odd") => Parity::Odd,
            _ => return Err(self.error("expected a parity: all or odd")),
        };
        self.expect(b')')?;
        let spec = LambertSpec::new(b, &residues, weight, parity).map_err(|e| Error::Parse {
            position: start,
            message: e.to_string(),
        })?;
        Ok(Expr::Lambert(spec))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{cf, eta, num, q_pow, theta};

    #[test]
    fn precedence() {
        let e = parse("1 + 2 * q^3").unwrap();
        assert_eq!(e, num(1) + num(2) * q_pow(3, 1));
        let e = parse("-q^2 - 1").unwrap();
        assert_eq!(e, -q_pow(2, 1) - num(1));
    }

    #[test]
    fn theta_arguments() {
        let a = parse("f(-3,-17)").unwrap();
        let b = parse("f(-q^3, -q^(17))").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, theta(-1, 3, -1, 17));
    }

    #[test]
    fn spec_examples() {
        let e = parse("eta(20)^1 / eta(2)^1").unwrap();
        assert_eq!(
            e,
            eta(&[((20, 1), (1, 1))]).pow(Rat::one()) / eta(&[((2, 1), (1, 1))]).pow(Rat::one())
        );
        let t = parse("f(-3,-17) / f(-7,-13) * q^1").unwrap();
        assert_eq!(t, theta(-1, 3, -1, 17) / theta(-1, 7, -1, 13) * q_pow(1, 1));
        assert_eq!(parse("root(R(1), 8)").unwrap(), cf(CfName::R, 1).root(8));
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse("(3/4)").unwrap(), Expr::Num(Rat::frac(3, 4)));
        assert_eq!(parse("(3 / 4)").unwrap(), num(3) / num(4));
        assert_eq!(parse("(-2)").unwrap(), Expr::Num(Rat::from(-2)));
        assert_eq!(parse("q^(-1/5)").unwrap(), Expr::Monomial(Rat::frac(-1, 5)));
    }

    #[test]
    fn constants_and_lambert() {
        assert_eq!(parse("ALPHA(3)").unwrap(), Expr::Named(ConstName::Alpha(3)));
        assert_eq!(parse("SQRT_10P2S5").unwrap(), Expr::Named(ConstName::Sqrt10P2S5));
        let l = parse("lambert(20, +3, +7, -13, -17, none, odd)").unwrap();
        let spec = LambertSpec::new(20, &[3, 7, -13, -17], LambertWeight::None, Parity::Odd).unwrap();
        assert_eq!(l, Expr::Lambert(spec));
    }

    #[test]
    fn errors_carry_position() {
        match parse("1 + foo(2)") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("{other:?}"),
        }
        match parse("f(-3,") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("{other:?}"),
        }
        assert!(parse("omega(12)").is_err());
        assert!(parse("q^(1/0)").is_err());
        assert!(parse("(1 + 2").is_err());
        assert!(parse("1 2").is_err());
    }

    #[test]
    fn display_round_trip() {
        for text in [
            "etaq((4, 1), (1/5, -1), (4/5, -1)) * f(-q^5, -q^15)",
            "omega(3, 1/5) - ALPHA(9) * k(1, 0, -1/2, 0)",
            "subst(T1(1), 2) + 1 / T1(2)",
            "root(S2(1), 4) * (q^(19/40))^(2)",
            "fsum(q^0, q^2) + poch(-q^(1/5), 1/5) - (-3/7)",
        ] {
            let e = parse(text).unwrap();
            let again = parse(&e.to_string()).unwrap();
            assert_eq!(e, again, "{text}");
        }
    }
}
