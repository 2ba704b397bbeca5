//! Text syntax for test functions.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' integer)?
//! atom    := number | number 'i' | 'i' | 'z' | 'ext' | '(' expr ')'
//!          | 'poly' '(' expr (',' expr)* ')'
//!          | 'blaschke' '(' expr (';' expr (',' expr)?)* ')'
//!          | 'extremal' '(' expr ';' expr (';' expr)? ')'
//!          | 'auto' '(' expr ')'
//! ```
//!
//! Arguments of the named constructors must be constant (free of `z`).
//! `ext` is `1/√3` at full precision.

use backshift_core::{
    AnalyticFn, Automorphism, Blaschke, BlaschkeSpec, Coeffs, DiscAutomorphism, Extremal,
    ExtremalSpec, TaylorCoeffs, C64, LAMBDA_EXTREMAL,
};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("unexpected character '{0}' at offset {1}")]
    Char(char, usize),
    #[error("unexpected {found} at offset {at}, expected {expected}")]
    Token {
        found: String,
        expected: &'static str,
        at: usize,
    },
    #[error("unknown name '{0}'")]
    Name(String),
    #[error("{0} must be a constant")]
    NotConstant(&'static str),
    #[error("{0} must be a nonnegative integer")]
    NotInteger(&'static str),
    #[error("{0}")]
    Domain(String),
    #[error("'{0}' is not an inner function vanishing at the origin")]
    NotInner(String),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Imag(f64),
    Ident(String),
    Sym(char),
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(x) => format!("number {x}"),
        Tok::Imag(x) => format!("number {x}i"),
        Tok::Ident(s) => format!("'{s}'"),
        Tok::Sym(c) => format!("'{c}'"),
        Tok::End => "end of input".into(),
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = src
        .chars()
        .map(|c| match c {
            '−' | '–' => '-',
            '·' | '×' => '*',
            other => other,
        })
        .collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let mut j = i + 1;
                if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                    i = j;
                }
            }
            let text: String = chars[start..i].iter().collect();
            let value: f64 = text
                .parse()
                .map_err(|_| ParseError::Char(chars[start], start))?;
            let imaginary = i < chars.len()
                && chars[i] == 'i'
                && !chars
                    .get(i + 1)
                    .is_some_and(|c| c.is_alphanumeric() || *c == '_');
            if imaginary {
                i += 1;
                out.push((Tok::Imag(value), start));
            } else {
                out.push((Tok::Num(value), start));
            }
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), start));
        } else if "+-*/^(),;".contains(c) {
            out.push((Tok::Sym(c), i));
            i += 1;
        } else {
            return Err(ParseError::Char(c, i));
        }
    }
    out.push((Tok::End, chars.len()));
    Ok(out)
}

/// Parsed function, evaluable anywhere on the closed disc.
#[derive(Debug, Clone, PartialEq)]
pub enum FnExpr {
    Const(C64),
    Z,
    Neg(Box<FnExpr>),
    Add(Box<FnExpr>, Box<FnExpr>),
    Sub(Box<FnExpr>, Box<FnExpr>),
    Mul(Box<FnExpr>, Box<FnExpr>),
    Div(Box<FnExpr>, Box<FnExpr>),
    Pow(Box<FnExpr>, u32),
    Poly(Coeffs),
    Blaschke(Blaschke),
    Extremal(Extremal),
    Automorphism(Automorphism),
}

impl FnExpr {
    fn depends_on_z(&self) -> bool {
        match self {
            Self::Const(_) => false,
            Self::Neg(a) | Self::Pow(a, _) => a.depends_on_z(),
            Self::Add(a, b) | Self::Sub(a, b) | Self::Mul(a, b) | Self::Div(a, b) => {
                a.depends_on_z() || b.depends_on_z()
            }
            _ => true,
        }
    }

    /// Value of a `z`-free expression.
    pub fn constant(&self) -> Option<C64> {
        (!self.depends_on_z()).then(|| self.eval(C64::new(0.0, 0.0)))
    }

    /// The expression as a finite Blaschke product, when it is one syntactically.
    pub fn as_inner(&self) -> Option<Blaschke> {
        match self {
            Self::Z => Some(BlaschkeSpec::monomial(1)),
            Self::Pow(base, k) if **base == Self::Z => Some(BlaschkeSpec::monomial(*k)),
            Self::Blaschke(b) => Some(b.clone()),
            _ => None,
        }
    }
}

impl AnalyticFn<f64> for FnExpr {
    fn eval(&self, z: C64) -> C64 {
        match self {
            Self::Const(c) => *c,
            Self::Z => z,
            Self::Neg(a) => -a.eval(z),
            Self::Add(a, b) => a.eval(z) + b.eval(z),
            Self::Sub(a, b) => a.eval(z) - b.eval(z),
            Self::Mul(a, b) => a.eval(z) * b.eval(z),
            Self::Div(a, b) => a.eval(z) / b.eval(z),
            Self::Pow(a, k) => a.eval(z).powu(*k),
            Self::Poly(p) => p.evaluate(z),
            Self::Blaschke(b) => b.eval(z),
            Self::Extremal(e) => e.eval(z),
            Self::Automorphism(a) => a.eval(z),
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        let (tok, at) = &self.toks[self.pos];
        ParseError::Token {
            found: describe(tok),
            expected,
            at: *at,
        }
    }

    fn expect(&mut self, c: char, expected: &'static str) -> Result<(), ParseError> {
        if *self.peek() == Tok::Sym(c) {
            self.next();
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn expr(&mut self) -> Result<FnExpr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.next();
                    lhs = FnExpr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Sym('-') => {
                    self.next();
                    lhs = FnExpr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<FnExpr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Sym('*') => {
                    self.next();
                    lhs = FnExpr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Sym('/') => {
                    self.next();
                    lhs = FnExpr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<FnExpr, ParseError> {
        if *self.peek() == Tok::Sym('-') {
            self.next();
            return Ok(FnExpr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<FnExpr, ParseError> {
        let base = self.atom()?;
        if *self.peek() == Tok::Sym('^') {
            self.next();
            let k = match self.next() {
                Tok::Num(x) if x >= 0.0 && x.fract() == 0.0 && x <= u32::MAX as f64 => x as u32,
                _ => return Err(ParseError::NotInteger("exponent")),
            };
            return Ok(FnExpr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn constant_arg(&mut self, what: &'static str) -> Result<C64, ParseError> {
        self.expr()?.constant().ok_or(ParseError::NotConstant(what))
    }

    fn integer_arg(&mut self, what: &'static str) -> Result<u32, ParseError> {
        let c = self.constant_arg(what)?;
        if c.im == 0.0 && c.re >= 0.0 && c.re.fract() == 0.0 && c.re <= u32::MAX as f64 {
            Ok(c.re as u32)
        } else {
            Err(ParseError::NotInteger(what))
        }
    }

    fn atom(&mut self) -> Result<FnExpr, ParseError> {
        match self.next() {
            Tok::Num(x) => Ok(FnExpr::Const(C64::new(x, 0.0))),
            Tok::Imag(x) => Ok(FnExpr::Const(C64::new(0.0, x))),
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')', "')'")?;
                Ok(e)
            }
            Tok::Ident(name) => self.named(&name),
            _ => {
                self.pos -= 1;
                Err(self.unexpected("a number, 'z', or '('"))
            }
        }
    }

    fn named(&mut self, name: &str) -> Result<FnExpr, ParseError> {
        match name {
            "z" => return Ok(FnExpr::Z),
            "i" => return Ok(FnExpr::Const(C64::new(0.0, 1.0))),
            "ext" => return Ok(FnExpr::Const(C64::new(LAMBDA_EXTREMAL, 0.0))),
            "poly" | "blaschke" | "extremal" | "auto" => {}
            other => return Err(ParseError::Name(other.to_string())),
        }
        self.expect('(', "'('")?;
        let out = match name {
            "poly" => {
                let mut coeffs = vec![self.constant_arg("poly coefficient")?];
                while *self.peek() == Tok::Sym(',') {
                    self.next();
                    coeffs.push(self.constant_arg("poly coefficient")?);
                }
                FnExpr::Poly(TaylorCoeffs::new(coeffs))
            }
            "blaschke" => {
                let m = self.integer_arg("origin multiplicity")?;
                let mut zeros = Vec::new();
                while *self.peek() == Tok::Sym(';') {
                    self.next();
                    let alpha = self.constant_arg("Blaschke zero")?;
                    let mult = if *self.peek() == Tok::Sym(',') {
                        self.next();
                        self.integer_arg("zero multiplicity")?
                    } else {
                        1
                    };
                    zeros.push((alpha, mult));
                }
                FnExpr::Blaschke(
                    BlaschkeSpec::new(m, zeros).map_err(|e| ParseError::Domain(e.to_string()))?,
                )
            }
            "extremal" => {
                let lambda = self.constant_arg("lambda")?;
                if lambda.im != 0.0 {
                    return Err(ParseError::Domain("lambda must be real".into()));
                }
                self.expect(';', "';' before the inner function")?;
                let inner_start = self.pos;
                let inner_expr = self.expr()?;
                let inner = inner_expr
                    .as_inner()
                    .ok_or_else(|| ParseError::NotInner(format!("token {}", inner_start)))?;
                let c = if *self.peek() == Tok::Sym(';') {
                    self.next();
                    self.constant_arg("extremal constant")?
                } else {
                    C64::new(1.0, 0.0)
                };
                FnExpr::Extremal(
                    ExtremalSpec::new(lambda.re, inner, c)
                        .map_err(|e| ParseError::Domain(e.to_string()))?,
                )
            }
            _ => {
                let w = self.constant_arg("automorphism point")?;
                FnExpr::Automorphism(
                    DiscAutomorphism::new(w).map_err(|e| ParseError::Domain(e.to_string()))?,
                )
            }
        };
        self.expect(')', "')'")?;
        Ok(out)
    }
}

pub fn parse(src: &str) -> Result<FnExpr, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("end of input"));
    }
    Ok(e)
}

/// An inner function spec: `z`, `z^k`, or `blaschke(...)`.
pub fn parse_inner(src: &str) -> Result<Blaschke, ParseError> {
    let e = parse(src)?;
    match e.as_inner() {
        Some(b) if b.vanishes_at_origin() => Ok(b),
        _ => Err(ParseError::NotInner(src.to_string())),
    }
}

/// A constant, e.g. `0.3+0.4i`, `-0.5i`, `ext`.
pub fn parse_complex(src: &str) -> Result<C64, ParseError> {
    parse(src)?
        .constant()
        .ok_or(ParseError::NotConstant("point"))
}

/// A real constant.
pub fn parse_real(src: &str) -> Result<f64, ParseError> {
    let c = parse_complex(src)?;
    if c.im == 0.0 {
        Ok(c.re)
    } else {
        Err(ParseError::Domain(format!("'{src}' is not real")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn at(src: &str, z: C64) -> C64 {
        parse(src).unwrap().eval(z)
    }

    #[test]
    fn arithmetic() {
        let z = C64::new(0.3, -0.2);
        assert_eq!(at("z*(2−z)", z), z * (C64::new(2.0, 0.0) - z));
        assert_eq!(at("2-z", z), C64::new(2.0, 0.0) - z);
        assert_eq!(at("(1-z)^2", z), (C64::new(1.0, 0.0) - z).powu(2));
        assert_eq!(at("-z^2", z), -(z * z));
        assert_eq!(
            at("1/(2+z)", z),
            C64::new(1.0, 0.0) / (C64::new(2.0, 0.0) + z)
        );
        assert_eq!(at("z^3", z), z.powu(3));
    }

    #[test]
    fn complex_literals() {
        assert_eq!(parse_complex("0.3+0.4i").unwrap(), C64::new(0.3, 0.4));
        assert_eq!(parse_complex("0.5i").unwrap(), C64::new(0.0, 0.5));
        assert_eq!(parse_complex("-0.3").unwrap(), C64::new(-0.3, 0.0));
        assert_eq!(parse_complex("i").unwrap(), C64::new(0.0, 1.0));
        assert_eq!(parse_complex("1e-3").unwrap(), C64::new(1e-3, 0.0));
        assert_eq!(parse_real("ext").unwrap(), LAMBDA_EXTREMAL);
        assert!(parse_complex("z").is_err());
        assert!(parse_real("1+i").is_err());
    }

    #[test]
    fn constructors() {
        let z = C64::new(0.1, 0.4);
        let p = parse("poly(1, 2, 1)").unwrap();
        assert_eq!(p.eval(C64::new(0.5, 0.0)), C64::new(2.25, 0.0));

        let b = parse("blaschke(2; 0.3+0.4i, 1)").unwrap();
        let want = BlaschkeSpec::new(2, vec![(C64::new(0.3, 0.4), 1)]).unwrap();
        assert_eq!(b, FnExpr::Blaschke(want.clone()));
        assert_eq!(b.eval(z), want.eval(z));
        assert_eq!(
            parse("blaschke(1; 0.5)").unwrap(),
            parse("blaschke(1; 0.5, 1)").unwrap()
        );

        let e = parse("extremal(ext; z)").unwrap();
        assert_eq!(e, FnExpr::Extremal(ExtremalSpec::canonical()));
        let e = parse("extremal(0.5; z^3; 2i)").unwrap();
        assert_eq!(e.eval(C64::new(0.0, 0.0)), C64::new(0.0, 2.0));

        let a = parse("auto(0.5)").unwrap();
        assert!((a.eval(C64::new(0.0, 0.0)) - C64::new(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn inner_specs() {
        assert_eq!(parse_inner("z").unwrap(), BlaschkeSpec::monomial(1));
        assert_eq!(parse_inner("z^3").unwrap(), BlaschkeSpec::monomial(3));
        assert!(parse_inner("blaschke(1; 0.5,1)").is_ok());
        assert!(matches!(
            parse_inner("blaschke(0; 0.5)"),
            Err(ParseError::NotInner(_))
        ));
        assert!(matches!(parse_inner("2-z"), Err(ParseError::NotInner(_))));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse("z +"), Err(ParseError::Token { .. })));
        assert!(matches!(parse("w"), Err(ParseError::Name(_))));
        assert!(matches!(parse("z$"), Err(ParseError::Char('$', 1))));
        assert!(matches!(parse("z^1.5"), Err(ParseError::NotInteger(_))));
        assert!(matches!(
            parse("blaschke(1; 1.5)"),
            Err(ParseError::Domain(_))
        ));
        assert!(matches!(
            parse("extremal(1.5; z)"),
            Err(ParseError::Domain(_))
        ));
        assert!(matches!(parse("poly(z)"), Err(ParseError::NotConstant(_))));
        assert!(matches!(parse("(z"), Err(ParseError::Token { .. })));
    }
}
