//! Canonical text form and LaTeX rendering.
//!
//! Monomials print as `3/2*x1^-1*T*X^3` (parameters by name, then `T`, then
//! `X`; exponent 1 omitted, coefficient 1 omitted). Factored functions print
//! as `unit * (1 - M)^e * ...` with the unit dropped when it is 1 and `^e`
//! dropped when `e = 1`; a factor whose key has a negative coefficient is
//! printed `(1 + |M|)`. The empty product prints as `1`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::factored::FactoredLFunction;
use super::monomial::{Exponents, LaurentMonomial, VarId};
use super::poly::LaurentPoly;
use super::{ParseError, Rational};

fn write_monomial_body(f: &mut fmt::Formatter<'_>, m: &LaurentMonomial) -> fmt::Result {
    let c = m.coeff();
    let mut first = true;
    if m.is_constant() {
        return write!(f, "{c}");
    }
    if *c == -Rational::one() {
        f.write_str("-")?;
    } else if !c.is_one() {
        write!(f, "{c}")?;
        first = false;
    }
    for (v, e) in m.exponents().iter() {
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for LaurentMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial_body(f, self)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, m) in self.terms().enumerate() {
            if i == 0 {
                write!(f, "{m}")?;
            } else if m.is_negative() {
                write!(f, " - {}", m.neg())?;
            } else {
                write!(f, " + {m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for FactoredLFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.unit().is_one() {
            parts.push(self.unit().to_string());
        }
        for (m, e) in self.factors() {
            let inner = if m.is_negative() {
                format!("(1 + {})", m.neg())
            } else {
                format!("(1 - {m})")
            };
            if e == 1 {
                parts.push(inner);
            } else {
                parts.push(format!("{inner}^{e}"));
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" * "))
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.peek_raw().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(self.src[start..self.pos].parse().expect("ascii digits"))
    }

    fn int(&mut self) -> Result<i32, ParseError> {
        let neg = self.eat('-');
        let start = self.pos;
        let d = self.digits()?;
        let v: i32 = d
            .try_into()
            .map_err(|_| ParseError { pos: start, msg: "exponent out of range".into() })?;
        Ok(if neg { -v } else { v })
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let num = self.digits()?;
        if self.eat('/') {
            let den = self.digits()?;
            if den.is_zero() {
                return Err(self.err("zero denominator"));
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn ident(&mut self) -> Result<VarId, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self
            .peek_raw()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            self.pos += 1;
        }
        match &self.src[start..self.pos] {
            "" => Err(self.err("expected a variable or number")),
            "T" => Ok(VarId::T),
            "X" => Ok(VarId::X),
            name => VarId::try_param(name).ok_or(ParseError {
                pos: start,
                msg: format!("invalid variable name {name:?}"),
            }),
        }
    }

    /// number | ident ('^' int)?
    fn atom(&mut self) -> Result<LaurentMonomial, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(LaurentMonomial::constant(self.rational()?)),
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let v = self.ident()?;
                let e = if self.eat('^') { self.int()? } else { 1 };
                Ok(LaurentMonomial::new(Rational::one(), Exponents::var(v, e)))
            }
            _ => Err(self.err("expected a variable or number")),
        }
    }

    /// ['-'] atom ('*' atom)*, stopping before a '*' that opens a factor.
    fn monomial(&mut self) -> Result<LaurentMonomial, ParseError> {
        let neg = self.eat('-');
        let mut m = self.atom()?;
        loop {
            let save = self.pos;
            if !self.eat('*') {
                break;
            }
            if self.peek() == Some('(') {
                self.pos = save;
                break;
            }
            m = m.mul(&self.atom()?);
        }
        Ok(if neg { m.neg() } else { m })
    }

    fn poly(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut p = LaurentPoly::zero();
        p.add_monomial(&self.monomial()?);
        loop {
            if self.eat('+') {
                p.add_monomial(&self.monomial()?);
            } else if self.eat('-') {
                p.add_monomial(&self.monomial()?.neg());
            } else {
                break;
            }
        }
        Ok(p)
    }

    fn factored(&mut self) -> Result<FactoredLFunction, ParseError> {
        let mut unit = LaurentMonomial::one();
        let mut factors: Vec<(LaurentMonomial, i32)> = Vec::new();
        loop {
            if self.eat('(') {
                let one = self.rational()?;
                if !one.is_one() {
                    return Err(self.err("Euler factor must start with '1'"));
                }
                let sign_pos = self.pos;
                let key = if self.eat('-') {
                    self.monomial()?
                } else if self.eat('+') {
                    self.monomial()?.neg()
                } else {
                    return Err(ParseError { pos: sign_pos, msg: "expected '-' or '+'".into() });
                };
                self.expect(')')?;
                let e = if self.eat('^') { self.int()? } else { 1 };
                factors.push((key, e));
            } else {
                let m = self.monomial()?;
                if m.is_zero() {
                    return Err(self.err("zero unit"));
                }
                unit = unit.mul(&m);
            }
            if !self.eat('*') {
                break;
            }
        }
        Ok(FactoredLFunction::from_parts(unit, factors))
    }
}

fn parse_all<T>(
    s: &str,
    f: impl FnOnce(&mut Parser<'_>) -> Result<T, ParseError>,
) -> Result<T, ParseError> {
    let mut p = Parser::new(s);
    let v = f(&mut p)?;
    if !p.at_end() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

impl FromStr for LaurentMonomial {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_all(s, |p| p.monomial())
    }
}

impl FromStr for LaurentPoly {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_all(s, |p| p.poly())
    }
}

impl FromStr for FactoredLFunction {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_all(s, |p| p.factored())
    }
}

fn latex_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.to_string()
    } else {
        let sign = if c.is_negative() { "-" } else { "" };
        format!("{sign}\\tfrac{{{}}}{{{}}}", c.numer().abs(), c.denom())
    }
}

fn latex_monomial(m: &LaurentMonomial) -> String {
    if m.is_constant() {
        return latex_rational(m.coeff());
    }
    let mut out = String::new();
    let c = m.coeff();
    if *c == -Rational::one() {
        out.push('-');
    } else if !c.is_one() {
        out.push_str(&latex_rational(c));
    }
    let vars: Vec<String> = m
        .exponents()
        .iter()
        .map(|(v, e)| {
            let name = match v.name().split_at(v.name().trim_end_matches(|c: char| c.is_ascii_digit()).len()) {
                (base, "") => base.to_string(),
                (base, idx) => format!("{base}_{{{idx}}}"),
            };
            if e == 1 {
                name
            } else {
                format!("{name}^{{{e}}}")
            }
        })
        .collect();
    out.push_str(&vars.join(" "));
    out
}

fn latex_argument(mu: i32, two_nu: i32) -> String {
    let nu = Rational::new(two_nu.into(), 2.into());
    let s_part = match mu {
        0 => String::new(),
        1 => "s".into(),
        -1 => "-s".into(),
        _ => format!("{mu}s"),
    };
    if s_part.is_empty() {
        return latex_rational(&nu);
    }
    if nu.is_zero() {
        s_part
    } else if nu.is_negative() {
        format!("{s_part}-{}", latex_rational(&-nu))
    } else {
        format!("{s_part}+{}", latex_rational(&nu))
    }
}

/// Renders `f` as a quotient of L-symbols `L(μs+ν; params)`.
///
/// Each Euler factor `(1 − c·P·X^μ·T^{2ν})^e` is read as a local factor at
/// argument `μs+ν` with parameter `c·P`; factors sharing an argument are
/// collected into one symbol, repeated by multiplicity.
pub fn to_latex(f: &FactoredLFunction) -> String {
    let mut upper: BTreeMap<(i32, i32), Vec<String>> = BTreeMap::new();
    let mut lower: BTreeMap<(i32, i32), Vec<String>> = BTreeMap::new();
    for (m, e) in f.factors() {
        let (rest, mu, two_nu) = m.split_argument();
        let target = if e < 0 { &mut upper } else { &mut lower };
        let slot = target.entry((mu, two_nu)).or_default();
        for _ in 0..e.unsigned_abs() {
            slot.push(latex_monomial(&rest));
        }
    }
    let render = |side: &BTreeMap<(i32, i32), Vec<String>>| -> String {
        side.iter()
            .map(|(&(mu, two_nu), ps)| format!("L({};\\, {})", latex_argument(mu, two_nu), ps.join(", ")))
            .collect::<Vec<_>>()
            .join("\\,")
    };
    let unit = if f.unit().is_one() {
        String::new()
    } else {
        format!("{} \\cdot ", latex_monomial(f.unit()))
    };
    match (upper.is_empty(), lower.is_empty()) {
        (true, true) => latex_monomial(f.unit()),
        (false, true) => format!("{unit}{}", render(&upper)),
        (upper_empty, false) => {
            let top = if upper_empty { "1".to_string() } else { render(&upper) };
            format!("{unit}\\frac{{{top}}}{{{}}}", render(&lower))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_rendering() {
        let m: LaurentMonomial = "x1*T*X^3".parse().unwrap();
        assert_eq!(m.to_string(), "x1*T*X^3");
        let m: LaurentMonomial = "X^3*T^1*x1".parse().unwrap();
        assert_eq!(m.to_string(), "x1*T*X^3");
        let m: LaurentMonomial = "-3/2*b^-1".parse().unwrap();
        assert_eq!(m.to_string(), "-3/2*b^-1");
        assert_eq!(LaurentMonomial::from_int(-1).to_string(), "-1");
    }

    #[test]
    fn factored_rendering() {
        let f: FactoredLFunction = "(1 - x1*T^1*X^3)^-1".parse().unwrap();
        assert_eq!(f.to_string(), "(1 - x1*T*X^3)^-1");
        let g: FactoredLFunction = "5*T^2 * (1 + X) * (1 - x*X)^-2".parse().unwrap();
        assert_eq!(g.unit().to_string(), "5*T^2");
        assert_eq!(g.factor_count(), 2);
        assert_eq!(g.to_string(), "5*T^2 * (1 - x*X)^-2 * (1 + X)");
        assert_eq!(FactoredLFunction::one().to_string(), "1");
    }

    #[test]
    fn poly_rendering() {
        let p: LaurentPoly = "x1^2 + x1*x2 - 3/2*T".parse().unwrap();
        let back: LaurentPoly = p.to_string().parse().unwrap();
        assert_eq!(p, back);
        assert_eq!("x - x".parse::<LaurentPoly>().unwrap().to_string(), "0");
    }

    #[test]
    fn parse_errors_carry_position() {
        let e = "(1 - x*X".parse::<FactoredLFunction>().unwrap_err();
        assert_eq!(e.pos, 8);
        let e = "(2 - x)".parse::<FactoredLFunction>().unwrap_err();
        assert!(e.msg.contains("start with '1'"));
        assert!("x^".parse::<LaurentMonomial>().is_err());
        assert!("x y".parse::<LaurentMonomial>().is_err());
        assert!("1/0".parse::<LaurentMonomial>().is_err());
    }

    #[test]
    fn latex_quotient() {
        let f: FactoredLFunction = "(1 - x*T*X^3)^-1 * (1 - x*T^3*X^3)".parse().unwrap();
        let tex = to_latex(&f);
        assert_eq!(tex, "\\frac{L(3s+\\tfrac{1}{2};\\, x)}{L(3s+\\tfrac{3}{2};\\, x)}");
        assert_eq!(to_latex(&FactoredLFunction::one()), "1");
        let w: FactoredLFunction = "(1 - x1*x2*X)^-1".parse().unwrap();
        assert_eq!(to_latex(&w), "L(s;\\, x_{1} x_{2})");
    }
}
