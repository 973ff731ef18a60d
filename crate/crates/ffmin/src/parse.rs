//! Curve expressions, place lists and element specifications.
//!
//! ```text
//! curve := "y" "^" INT "=" expr "over" "gf" "(" INT ")"
//! expr  := term (("+" | "-") term)*
//! term  := unary (("*" | "/") unary)*
//! unary := "-" unary | power
//! power := atom ("^" INT)?
//! atom  := INT | "x" | "(" expr ")"
//! ```
//!
//! Whitespace is ignored everywhere. Division is accepted only in element
//! components, which are rational functions.

use std::fmt;

use ffmin_core::algebra::{is_prime, Poly, RatFun};
use ffmin_core::{CurveKind, CurveModel, Error as CoreError, FFElem, InfinityKind, Place, Sign};
use thiserror::Error;

/// Distinct codes for input that is well formed but mathematically invalid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SemanticCode {
    NotPrime,
    EvenCharacteristic,
    NotSquarefree,
    DegreeTooSmall,
    BadExponent,
    NotPolynomial,
    DivisionByZero,
    UnknownPlace,
}

impl SemanticCode {
    pub fn code(self) -> &'static str {
        match self {
            SemanticCode::NotPrime => "E101",
            SemanticCode::EvenCharacteristic => "E102",
            SemanticCode::NotSquarefree => "E103",
            SemanticCode::DegreeTooSmall => "E104",
            SemanticCode::BadExponent => "E105",
            SemanticCode::NotPolynomial => "E106",
            SemanticCode::DivisionByZero => "E107",
            SemanticCode::UnknownPlace => "E108",
        }
    }
}

impl fmt::Display for SemanticCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("E001 syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{code} {message}")]
    Semantic { code: SemanticCode, message: String },
}

impl ParseError {
    fn semantic(code: SemanticCode, message: impl Into<String>) -> Self {
        ParseError::Semantic {
            code,
            message: message.into(),
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } => "E001",
            ParseError::Semantic { code, .. } => code.code(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(u128),
    Ident(String),
    Sym(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    offset: usize,
}

fn position(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn syntax(text: &str, offset: usize, message: impl Into<String>) -> ParseError {
    let (line, column) = position(text, offset);
    ParseError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, ch)) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
        } else if ch.is_ascii_digit() {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = j + d.len_utf8();
                chars.next();
            }
            let value = text[i..end]
                .parse::<u128>()
                .map_err(|_| syntax(text, i, "integer literal too large"))?;
            out.push(Token { tok: Tok::Int(value), offset: i });
        } else if ch.is_ascii_alphabetic() {
            let mut end = i;
            while let Some(&(j, a)) = chars.peek() {
                if !a.is_ascii_alphanumeric() {
                    break;
                }
                end = j + a.len_utf8();
                chars.next();
            }
            out.push(Token {
                tok: Tok::Ident(text[i..end].to_ascii_lowercase()),
                offset: i,
            });
        } else if "+-*/^()=".contains(ch) {
            out.push(Token { tok: Tok::Sym(ch), offset: i });
            chars.next();
        } else {
            return Err(syntax(text, i, format!("unexpected character '{ch}'")));
        }
    }
    Ok(out)
}

/// Expression tree over `x` with integer literals.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Expr {
    Int(u128),
    X,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, u32),
}

struct Parser<'a> {
    text: &'a str,
    tokens: Vec<Token>,
    pos: usize,
    allow_division: bool,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, allow_division: bool) -> Result<Self, ParseError> {
        Ok(Self {
            text,
            tokens: tokenize(text)?,
            pos: 0,
            allow_division,
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.text.len(), |t| t.offset)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        syntax(self.text, self.offset(), message)
    }

    fn describe(&self) -> String {
        match self.peek() {
            None => "end of input".into(),
            Some(Tok::Int(n)) => format!("'{n}'"),
            Some(Tok::Ident(s)) => format!("'{s}'"),
            Some(Tok::Sym(c)) => format!("'{c}'"),
        }
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}', found {}", self.describe())))
        }
    }

    fn expect_ident(&mut self, name: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&Tok::Ident(name.into())) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{name}', found {}", self.describe())))
        }
    }

    fn expect_int(&mut self) -> Result<u128, ParseError> {
        match self.peek() {
            Some(&Tok::Int(n)) => {
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.error(format!("expected an integer, found {}", self.describe()))),
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.error(format!("unexpected {}", self.describe()))),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat_sym('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat_sym('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat_sym('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.peek() == Some(&Tok::Sym('/')) {
                if !self.allow_division {
                    return Err(self.error("division is not allowed in a curve equation"));
                }
                self.pos += 1;
                let at = self.offset();
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), at);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat_sym('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat_sym('^') {
            let e = self.expect_int()?;
            let e = u32::try_from(e).map_err(|_| self.error("exponent too large"))?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Ident(s)) if s == "x" => {
                self.pos += 1;
                Ok(Expr::X)
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            _ => Err(self.error(format!("expected a term, found {}", self.describe()))),
        }
    }
}

fn eval(e: &Expr, p: u64, text: &str) -> Result<RatFun, ParseError> {
    Ok(match e {
        Expr::Int(n) => RatFun::constant((n % p as u128) as u64, p),
        Expr::X => RatFun::from_poly(Poly::monomial(1, 1, p)),
        Expr::Neg(a) => -&eval(a, p, text)?,
        Expr::Add(a, b) => &eval(a, p, text)? + &eval(b, p, text)?,
        Expr::Sub(a, b) => &eval(a, p, text)? - &eval(b, p, text)?,
        Expr::Mul(a, b) => &eval(a, p, text)? * &eval(b, p, text)?,
        Expr::Div(a, b, at) => {
            let (line, column) = position(text, *at);
            eval(a, p, text)?.div(&eval(b, p, text)?).map_err(|_| {
                ParseError::semantic(
                    SemanticCode::DivisionByZero,
                    format!("division by zero at line {line}, column {column}"),
                )
            })?
        }
        Expr::Pow(a, k) => eval(a, p, text)?.pow(*k),
    })
}

/// A validated curve `y^m = f(x)` over GF(p).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSpec {
    pub p: u64,
    pub text: String,
    pub f: Poly,
    pub kind: CurveKind,
    pub m: u32,
}

impl CurveSpec {
    pub fn from_poly(p: u64, f: Poly, m: u32) -> Self {
        let kind = if m == 2 {
            CurveKind::Hyperelliptic
        } else {
            CurveKind::Superelliptic(m)
        };
        let mut spec = Self {
            p,
            text: String::new(),
            f,
            kind,
            m,
        };
        spec.text = spec.render();
        spec
    }

    pub fn render(&self) -> String {
        format!("y^{} = {} over gf({})", self.m, self.f, self.p)
    }

    pub fn model(&self) -> CurveModel {
        CurveModel::new(self.p, self.f.clone(), self.kind).expect("validated when parsed")
    }
}

impl fmt::Display for CurveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn check_prime(p: u128) -> Result<u64, ParseError> {
    let q = u64::try_from(p).ok().filter(|&q| q <= 1 << 31 && is_prime(q));
    match q {
        Some(2) => Err(ParseError::semantic(
            SemanticCode::EvenCharacteristic,
            "characteristic 2 is not supported",
        )),
        Some(q) => Ok(q),
        None => Err(ParseError::semantic(
            SemanticCode::NotPrime,
            format!("{p} is not a prime below 2^31"),
        )),
    }
}

pub fn parse_curve(text: &str) -> Result<CurveSpec, ParseError> {
    let mut ps = Parser::new(text, false)?;
    ps.expect_ident("y")?;
    ps.expect_sym('^')?;
    let m = ps.expect_int()?;
    ps.expect_sym('=')?;
    let body = ps.expr()?;
    ps.expect_ident("over")?;
    ps.expect_ident("gf")?;
    ps.expect_sym('(')?;
    let p = ps.expect_int()?;
    ps.expect_sym(')')?;
    ps.expect_end()?;

    let p = check_prime(p)?;
    let m = u32::try_from(m)
        .ok()
        .filter(|&m| m >= 2)
        .ok_or_else(|| ParseError::semantic(SemanticCode::BadExponent, format!("exponent {m} must be at least 2")))?;
    let f = eval(&body, p, text)?;
    if !f.is_poly() {
        return Err(ParseError::semantic(SemanticCode::NotPolynomial, "right-hand side is not a polynomial"));
    }
    let spec = CurveSpec::from_poly(p, f.num().clone(), m);
    CurveModel::new(p, spec.f.clone(), spec.kind).map_err(|e| match e {
        CoreError::NotSquarefree => {
            ParseError::semantic(SemanticCode::NotSquarefree, format!("f = {} is not squarefree", spec.f))
        }
        CoreError::DegreeTooSmall(d) => {
            ParseError::semantic(SemanticCode::DegreeTooSmall, format!("deg f = {d} is too small"))
        }
        CoreError::Superelliptic(why) => ParseError::semantic(SemanticCode::BadExponent, why),
        other => ParseError::semantic(SemanticCode::BadExponent, other.to_string()),
    })?;
    Ok(spec)
}

/// A rational function of `x` over GF(p).
pub fn parse_ratfun(text: &str, p: u64) -> Result<RatFun, ParseError> {
    let mut ps = Parser::new(text, true)?;
    let e = ps.expr()?;
    ps.expect_end()?;
    eval(&e, p, text)
}

/// An element `a + y b` given as `"<a>;<b>"`; a missing `b` means `0`.
pub fn parse_element<'c>(text: &str, c: &'c CurveModel) -> Result<FFElem<'c>, ParseError> {
    let (a, b) = match text.split_once(';') {
        Some((a, b)) => (a, b),
        None => (text, "0"),
    };
    let a = parse_ratfun(a, c.p())?;
    let b = parse_ratfun(b, c.p())?;
    FFElem::new(c, a, b).map_err(|e| ParseError::semantic(SemanticCode::BadExponent, e.to_string()))
}

fn unknown(spec: &str, why: impl fmt::Display) -> ParseError {
    ParseError::semantic(SemanticCode::UnknownPlace, format!("place '{spec}': {why}"))
}

fn coordinate(spec: &str, value: &str, p: u64) -> Result<u64, ParseError> {
    let v: i128 = value.trim().parse().map_err(|_| unknown(spec, "coordinates must be integers"))?;
    Ok(v.rem_euclid(p as i128) as u64)
}

/// Places named by one spec: `inf`, `inf+`, `inf-`, `x=<c>` or `x=<c>,y=<c>`.
pub fn parse_place(spec: &str, c: &CurveModel) -> Result<Vec<Place>, ParseError> {
    let s: String = spec.chars().filter(|ch| !ch.is_whitespace()).collect();
    let s = s.to_ascii_lowercase();
    let inf = || c.infinity_places().map_err(|e| unknown(spec, e));
    match s.as_str() {
        "inf" => return Ok(inf()?.1),
        "inf+" | "inf-" => {
            let (kind, _) = inf()?;
            if kind != InfinityKind::Split {
                return Err(unknown(spec, "infinity does not split on this model"));
            }
            let sign = if s == "inf+" { Sign::Plus } else { Sign::Minus };
            return Ok(vec![Place::InfSplit(sign)]);
        }
        _ => {}
    }
    let Some(rest) = s.strip_prefix("x=") else {
        return Err(unknown(spec, "expected inf, inf+, inf-, x=<c> or x=<c>,y=<c>"));
    };
    let (xs, ys) = match rest.split_once(",y=") {
        Some((x, y)) => (x, Some(y)),
        None => (rest, None),
    };
    let x = coordinate(spec, xs, c.p())?;
    let over = c.affine_places(x).map_err(|e| unknown(spec, e))?;
    let Some(ys) = ys else {
        return Ok(over);
    };
    let y = coordinate(spec, ys, c.p())?;
    over.into_iter()
        .find(|pl| match *pl {
            Place::AffineSplit { y: py, .. } => py == y,
            Place::AffineRamified { .. } => y == 0,
            _ => false,
        })
        .map(|pl| vec![pl])
        .ok_or_else(|| unknown(spec, "no rational point with these coordinates"))
}

/// A `;`-separated list of place specs, deduplicated and sorted.
pub fn parse_places(list: &str, c: &CurveModel) -> Result<Vec<Place>, ParseError> {
    let mut out = Vec::new();
    for part in list.split(';').filter(|s| !s.trim().is_empty()) {
        out.extend(parse_place(part, c)?);
    }
    if out.is_empty() {
        return Err(unknown(list, "empty place list"));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// `p=<p>,deg=<a>..<b>` for family sweeps.
pub fn parse_family(text: &str) -> Result<(u64, u32, u32), ParseError> {
    let bad = |why: &str| syntax(text, 0, format!("family spec: {why}"));
    let mut p = None;
    let mut range = None;
    for part in text.split(',') {
        let (key, value) = part.split_once('=').ok_or_else(|| bad("expected key=value"))?;
        match key.trim() {
            "p" => p = Some(value.trim().parse::<u128>().map_err(|_| bad("p must be an integer"))?),
            "deg" => {
                let (a, b) = value.split_once("..").ok_or_else(|| bad("deg must be a range a..b"))?;
                let a = a.trim().parse::<u32>().map_err(|_| bad("bad lower degree"))?;
                let b = b.trim().parse::<u32>().map_err(|_| bad("bad upper degree"))?;
                range = Some((a, b));
            }
            other => return Err(bad(&format!("unknown key '{other}'"))),
        }
    }
    let p = check_prime(p.ok_or_else(|| bad("missing p"))?)?;
    let (a, b) = range.ok_or_else(|| bad("missing deg"))?;
    Ok((p, a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_walk() {
        let s = parse_curve("y^2 = x^5 + 2*x + 1 over gf(7)").unwrap();
        assert_eq!((s.p, s.m, s.kind), (7, 2, CurveKind::Hyperelliptic));
        assert_eq!(s.f, Poly::from_i64(7, &[1, 2, 0, 0, 0, 1]));
        let t = parse_curve("  y ^ 3=(x+1)*(x^3 - 2)  over GF( 7 )").unwrap();
        assert_eq!(t.kind, CurveKind::Superelliptic(3));
        assert_eq!(t.f, Poly::from_i64(7, &[-2, -2, 0, 1, 1]));
    }

    #[test]
    fn semantic_errors() {
        let e = parse_curve("y^2 = x^5 + x^5 over gf(7)").unwrap_err();
        assert_eq!(e.code(), "E103");
        let e = parse_curve("y^2 = x^5 over gf(4)").unwrap_err();
        assert_eq!(e.code(), "E101");
        assert_eq!(parse_curve("y^2 = x^5 + 1 over gf(2)").unwrap_err().code(), "E102");
        assert_eq!(parse_curve("y^2 = x^2 + 1 over gf(7)").unwrap_err().code(), "E104");
        assert_eq!(parse_curve("y^3 = x^3 + 1 over gf(7)").unwrap_err().code(), "E105");
        assert_eq!(parse_curve("y^7 = x^3 + 1 over gf(7)").unwrap_err().code(), "E105");
    }

    #[test]
    fn syntax_errors_are_positioned() {
        match parse_curve("y^2 = x^5 + * 1 over gf(7)").unwrap_err() {
            ParseError::Syntax { line, column, .. } => assert_eq!((line, column), (1, 13)),
            other => panic!("{other:?}"),
        }
        match parse_curve("y^2 = x^5\n  + 1 over gf(7) junk").unwrap_err() {
            ParseError::Syntax { line, column, .. } => assert_eq!((line, column), (2, 18)),
            other => panic!("{other:?}"),
        }
        assert_eq!(parse_curve("y^2 = 1/x over gf(7)").unwrap_err().code(), "E001");
        assert_eq!(parse_curve("y^2 = x^5 + 1 over gf(7").unwrap_err().code(), "E001");
    }

    #[test]
    fn render_round_trips() {
        for text in ["y^2 = x^5 + 2*x + 1 over gf(7)", "y^2=3*x^6+x+2 over gf(7)", "y^3 = x^4 + x + 1 over gf(7)"] {
            let s = parse_curve(text).unwrap();
            assert_eq!(parse_curve(&s.render()).unwrap(), CurveSpec { text: s.render(), ..s.clone() });
        }
    }

    #[test]
    fn elements_and_places() {
        let c = parse_curve("y^2 = x^5 + 2*x + 1 over gf(7)").unwrap().model();
        let x = parse_element("(x^2 + 1)/(x - 3); 1/x", &c).unwrap();
        assert_eq!(parse_element(&format!("{};{}", x.a(), x.b()), &c).unwrap(), x);
        assert_eq!(parse_element("1/(x - x)", &c).unwrap_err().code(), "E107");
        assert_eq!(parse_places("inf", &c).unwrap(), [Place::InfRamified]);
        assert_eq!(parse_places("x=0", &c).unwrap().len(), 2);
        assert_eq!(parse_places("x=0,y=1", &c).unwrap(), [Place::AffineSplit { x: 0, y: 1 }]);
        assert_eq!(parse_places("x=0,y=2", &c).unwrap_err().code(), "E108");
        assert_eq!(parse_places("inf+", &c).unwrap_err().code(), "E108");
        assert_eq!(parse_family("p=5,deg=5..6").unwrap(), (5, 5, 6));
    }
}
