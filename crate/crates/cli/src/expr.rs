//! Surface syntax for functions, scalars, factored polynomials and
//! cofunctions.
//!
//! Expressions are evaluated eagerly into a pair `(A, B)` meaning `A + g0·B`.
//! `g0` may enter at most linearly and never in a denominator. `z` and `t`
//! name the same variable.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use pommiez_core::algebra::{GaussianRational, Polynomial, RationalFunction};
use pommiez_core::domain::{G0Context, GMultiple, SymFunction};
use pommiez_core::duality::CoFunction;

const MAX_EXPONENT: u32 = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    fn join(self, other: Span) -> Span {
        Span { start: self.start.min(other.start), end: self.end.max(other.end) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    pub message: String,
    pub span: Span,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}..{}", self.message, self.span.start, self.span.end)
    }
}

impl std::error::Error for SyntaxError {}

fn err<T>(message: impl Into<String>, span: Span) -> Result<T, SyntaxError> {
    Err(SyntaxError { message: message.into(), span })
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigRational),
    I,
    Var,
    G0,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(Tok, Span)>, SyntaxError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos];
        let start = pos;
        if c.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let int_end = pos;
            let mut frac = "";
            if pos < bytes.len() && bytes[pos] == b'.' {
                pos += 1;
                let frac_start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if frac_start == pos {
                    return err("expected digits after decimal point", Span { start, end: pos });
                }
                frac = &src[frac_start..pos];
            }
            let digits = format!("{}{}", &src[start..int_end], frac);
            let numer: BigInt = digits.parse().expect("ascii digits");
            let denom = num_traits::pow(BigInt::from(10), frac.len());
            out.push((Tok::Num(BigRational::new(numer, denom)), Span { start, end: pos }));
            continue;
        }
        if c.is_ascii_alphabetic() {
            while pos < bytes.len() && bytes[pos].is_ascii_alphanumeric() {
                pos += 1;
            }
            let span = Span { start, end: pos };
            let tok = match &src[start..pos] {
                "i" => Tok::I,
                "z" | "t" => Tok::Var,
                "g0" => Tok::G0,
                other => return err(format!("unknown identifier `{other}`"), span),
            };
            out.push((tok, span));
            continue;
        }
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let ch = src[start..].chars().next().expect("nonempty");
                return err(format!("unexpected character `{ch}`"), Span { start, end: start + ch.len_utf8() });
            }
        };
        pos += 1;
        out.push((tok, Span { start, end: pos }));
    }
    Ok(out)
}

/// Value of a subexpression: `a + g0·b`, with a flag recording whether `g0`
/// occurs syntactically.
#[derive(Clone, Debug)]
struct Lin {
    a: RationalFunction,
    b: RationalFunction,
    has_g0: bool,
    has_var: bool,
    span: Span,
}

impl Lin {
    fn scalar(c: GaussianRational, span: Span) -> Self {
        Self { a: RationalFunction::constant(c), b: RationalFunction::zero(), has_g0: false, has_var: false, span }
    }
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Self, SyntaxError> {
        Ok(Self { toks: lex(src)?, pos: 0, len: src.len() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> Span {
        match self.toks.get(self.pos) {
            Some((_, s)) => *s,
            None => Span { start: self.len, end: self.len },
        }
    }

    fn bump(&mut self) -> Span {
        let s = self.here();
        self.pos += 1;
        s
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<Span, SyntaxError> {
        if self.peek() == Some(&tok) {
            Ok(self.bump())
        } else {
            err(format!("expected {what}"), self.here())
        }
    }

    fn finish(&self) -> Result<(), SyntaxError> {
        if self.pos < self.toks.len() {
            return err("unexpected trailing input", self.here());
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Lin, SyntaxError> {
        let mut acc = self.term()?;
        while let Some(op) = self.peek().cloned() {
            if op != Tok::Plus && op != Tok::Minus {
                break;
            }
            self.bump();
            let rhs = self.term()?;
            let (a, b) = if op == Tok::Plus {
                (acc.a.add(&rhs.a), acc.b.add(&rhs.b))
            } else {
                (acc.a.sub(&rhs.a), acc.b.sub(&rhs.b))
            };
            acc = Lin {
                a,
                b,
                has_g0: acc.has_g0 || rhs.has_g0,
                has_var: acc.has_var || rhs.has_var,
                span: acc.span.join(rhs.span),
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Lin, SyntaxError> {
        let mut acc = self.unary()?;
        while let Some(op) = self.peek().cloned() {
            if op != Tok::Star && op != Tok::Slash {
                break;
            }
            self.bump();
            let rhs = self.unary()?;
            let span = acc.span.join(rhs.span);
            acc = if op == Tok::Star { multiply(acc, rhs, span)? } else { divide(acc, rhs, span)? };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Lin, SyntaxError> {
        if self.peek() == Some(&Tok::Minus) {
            let start = self.bump();
            let inner = self.unary()?;
            return Ok(Lin { a: inner.a.neg(), b: inner.b.neg(), span: start.join(inner.span), ..inner });
        }
        if self.peek() == Some(&Tok::Plus) {
            self.bump();
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Lin, SyntaxError> {
        let mut base = self.atom()?;
        while self.peek() == Some(&Tok::Caret) {
            self.bump();
            let (exp, exp_span) = self.exponent()?;
            let span = base.span.join(exp_span);
            base = match exp {
                0 => Lin::scalar(GaussianRational::one(), span),
                1 => Lin { span, ..base },
                _ if base.has_g0 => return err("g0 may appear at most linearly", span),
                _ => Lin { a: base.a.pow(exp), span, ..base },
            };
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<(u32, Span), SyntaxError> {
        let span = self.here();
        match self.peek().cloned() {
            Some(Tok::Num(n)) if n.is_integer() => {
                self.bump();
                match n.to_integer().try_into() {
                    Ok(e) if e <= MAX_EXPONENT => Ok((e, span)),
                    _ => err(format!("exponent exceeds {MAX_EXPONENT}"), span),
                }
            }
            _ => err("exponent must be a nonnegative integer literal", span),
        }
    }

    fn atom(&mut self) -> Result<Lin, SyntaxError> {
        let span = self.here();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.bump();
                Ok(Lin::scalar(GaussianRational::from_real(n), span))
            }
            Some(Tok::I) => {
                self.bump();
                Ok(Lin::scalar(GaussianRational::i(), span))
            }
            Some(Tok::Var) => {
                self.bump();
                Ok(Lin { a: Polynomial::x().into(), b: RationalFunction::zero(), has_g0: false, has_var: true, span })
            }
            Some(Tok::G0) => {
                self.bump();
                Ok(Lin { a: RationalFunction::zero(), b: RationalFunction::one(), has_g0: true, has_var: false, span })
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.expr()?;
                let close = self.expect(Tok::RParen, "`)`")?;
                Ok(Lin { span: span.join(close), ..inner })
            }
            Some(_) => err("expected a number, `i`, `z`, `g0` or `(`", span),
            None => err("unexpected end of input", span),
        }
    }
}

fn multiply(x: Lin, y: Lin, span: Span) -> Result<Lin, SyntaxError> {
    if x.has_g0 && y.has_g0 {
        return err("g0 may appear at most linearly", span);
    }
    let a = x.a.mul(&y.a);
    let b = x.a.mul(&y.b).add(&x.b.mul(&y.a));
    Ok(Lin { a, b, has_g0: x.has_g0 || y.has_g0, has_var: x.has_var || y.has_var, span })
}

fn divide(x: Lin, y: Lin, span: Span) -> Result<Lin, SyntaxError> {
    if y.has_g0 {
        return err("g0 may not appear in a denominator", y.span);
    }
    let (Ok(a), Ok(b)) = (x.a.div(&y.a), x.b.div(&y.a)) else {
        return err("division by zero", y.span);
    };
    Ok(Lin { a, b, has_g0: x.has_g0, has_var: x.has_var || y.has_var, span })
}

fn parse_lin(src: &str) -> Result<Lin, SyntaxError> {
    let mut p = Parser::new(src)?;
    let v = p.expr()?;
    p.finish()?;
    Ok(v)
}

/// A parsed function before the context checks holomorphy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawFunction {
    pub a: RationalFunction,
    pub b: RationalFunction,
}

pub fn parse_raw(src: &str) -> Result<RawFunction, SyntaxError> {
    let v = parse_lin(src)?;
    Ok(RawFunction { a: v.a, b: v.b })
}

/// Either kind of function accepted on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Function {
    Multiple(GMultiple),
    Sym(SymFunction),
}

impl Function {
    pub fn to_sym(&self) -> SymFunction {
        match self {
            Function::Multiple(f) => f.clone().into(),
            Function::Sym(f) => f.clone(),
        }
    }
}

impl fmt::Display for Function {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Function::Multiple(x) => x.fmt(f),
            Function::Sym(x) => x.fmt(f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FunctionError {
    Syntax(SyntaxError),
    Domain(pommiez_core::Error),
}

/// Parses `src` and checks it against `ctx`. A zero `A`-part yields a
/// [`GMultiple`].
pub fn parse_function(src: &str, ctx: &Arc<G0Context>) -> Result<Function, FunctionError> {
    let raw = parse_raw(src).map_err(FunctionError::Syntax)?;
    if raw.a.is_zero() {
        GMultiple::new(ctx.clone(), raw.b).map(Function::Multiple)
    } else {
        SymFunction::new(ctx.clone(), raw.a, raw.b).map(Function::Sym)
    }
    .map_err(FunctionError::Domain)
}

pub fn parse_scalar(src: &str) -> Result<GaussianRational, SyntaxError> {
    let v = parse_lin(src)?;
    if v.has_g0 || v.has_var {
        return err("expected a constant", v.span);
    }
    Ok(v.a.eval(&GaussianRational::zero()).expect("constant"))
}

/// `1` or a product of linear factors `(…)^m` with nonzero roots, e.g.
/// `(1-z)^2*(1-z/2)`. Returns merged `(root, multiplicity)` pairs in input order.
pub fn parse_factored(src: &str) -> Result<Vec<(GaussianRational, usize)>, SyntaxError> {
    let mut p = Parser::new(src)?;
    if let [(Tok::Num(n), _)] = p.toks.as_slice() {
        if n.is_one() {
            return Ok(Vec::new());
        }
    }
    let mut out: Vec<(GaussianRational, usize)> = Vec::new();
    loop {
        let open = p.expect(Tok::LParen, "`(` opening a linear factor")?;
        let inner = p.expr()?;
        let close = p.expect(Tok::RParen, "`)`")?;
        let span = open.join(close);
        let (m, _) = if p.peek() == Some(&Tok::Caret) {
            p.bump();
            p.exponent()?
        } else {
            (1, span)
        };
        if m == 0 {
            return err("factor multiplicity must be positive", span);
        }
        let root = linear_root(&inner)
            .ok_or(SyntaxError { message: "factor must be linear in z with a nonzero root".into(), span })?;
        match out.iter_mut().find(|(x, _)| *x == root) {
            Some(entry) => entry.1 += m as usize,
            None => out.push((root, m as usize)),
        }
        match p.peek() {
            None => break,
            Some(Tok::Star) => {
                p.bump();
            }
            Some(_) => return err("expected `*` between factors", p.here()),
        }
    }
    Ok(out)
}

fn linear_root(v: &Lin) -> Option<GaussianRational> {
    if v.has_g0 || !v.a.is_polynomial() {
        return None;
    }
    let p = v.a.num();
    if p.degree_or_minus_one() != 1 || p.coeff(0).is_zero() {
        return None;
    }
    Some(-(&p.coeff(0) / &p.coeff(1)))
}

/// `Σ c_j / t^j` with no constant or positive-power part.
pub fn parse_cofunction(src: &str) -> Result<CoFunction, SyntaxError> {
    let v = parse_lin(src)?;
    let shape_err = || SyntaxError { message: "expected a combination of c/t^k with k >= 1".into(), span: v.span };
    if v.has_g0 {
        return Err(shape_err());
    }
    let (num, den) = (v.a.num(), v.a.den());
    if num.is_zero() {
        return Ok(CoFunction::new(Vec::new()));
    }
    let m = den.degree_or_minus_one() as usize;
    if *den != Polynomial::monomial(GaussianRational::one(), m) || num.degree_or_minus_one() >= m as isize {
        return Err(shape_err());
    }
    Ok(CoFunction::new((1..=m).map(|j| num.coeff(m - j)).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn precedence() {
        let v = parse_raw("-z^2 + 2*z/4").unwrap();
        assert_eq!(v.a, Polynomial::new(vec![g(0), GaussianRational::from_ratio(1, 2), g(-1)]).into());
        let v = parse_raw("2^3^2").unwrap();
        assert_eq!(v.a, RationalFunction::constant(g(64)));
    }

    #[test]
    fn g0_is_linear() {
        let v = parse_raw("(z-1) + g0*(z)").unwrap();
        assert_eq!(v.a, Polynomial::from_ints(&[-1, 1]).into());
        assert_eq!(v.b, Polynomial::x().into());
        let v = parse_raw("g0/(z-3) + g0*z").unwrap();
        assert!(v.a.is_zero());
        assert!(parse_raw("g0*g0").unwrap_err().message.contains("linearly"));
        assert!(parse_raw("g0^2").unwrap_err().message.contains("linearly"));
        let e = parse_raw("1/(1+g0)").unwrap_err();
        assert!(e.message.contains("denominator"));
        assert_eq!(e.span, Span { start: 2, end: 8 });
    }

    #[test]
    fn syntax_errors_carry_spans() {
        let e = parse_raw("z + w").unwrap_err();
        assert_eq!(e.span, Span { start: 4, end: 5 });
        let e = parse_raw("(z + 1").unwrap_err();
        assert_eq!(e.span, Span { start: 6, end: 6 });
        let e = parse_raw("z^z").unwrap_err();
        assert_eq!(e.span, Span { start: 2, end: 3 });
        assert!(parse_raw("1/(z-z)").unwrap_err().message.contains("zero"));
        assert!(parse_raw("z $").is_err());
    }

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("3/4*i").unwrap(), GaussianRational::from_parts(0, 1, 3, 4));
        assert_eq!(parse_scalar("1/2+i").unwrap(), GaussianRational::from_parts(1, 2, 1, 1));
        assert_eq!(parse_scalar("0.25").unwrap(), GaussianRational::from_ratio(1, 4));
        assert!(parse_scalar("z").is_err());
    }

    #[test]
    fn factored_forms() {
        assert!(parse_factored("1").unwrap().is_empty());
        assert_eq!(parse_factored("(1-z)^2*(1-z/2)").unwrap(), vec![(g(1), 2), (g(2), 1)]);
        assert_eq!(parse_factored("(1+z)*(1+z)").unwrap(), vec![(g(-1), 2)]);
        assert_eq!(parse_factored("(1-z/(1+i))").unwrap(), vec![(GaussianRational::from_parts(1, 1, 1, 1), 1)]);
        assert!(parse_factored("(1-z^2)").is_err());
        assert!(parse_factored("(z)").is_err());
        assert!(parse_factored("1-z").is_err());
    }

    #[test]
    fn cofunctions() {
        let h = parse_cofunction("1/t + 3/t^3").unwrap();
        assert_eq!(h.coeffs(), &[g(1), g(0), g(3)]);
        assert!(parse_cofunction("1 + 1/t").is_err());
        assert!(parse_cofunction("1/(t-1)").is_err());
        assert!(parse_cofunction("0").unwrap().is_zero());
    }
}
