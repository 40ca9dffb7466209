//! Expression language for the command line.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom | '(' expr ')'
//! atom   := s[..] | g[..] | g[..]/[..] | G[..] | h<k> | e<k> | p<k> | <integer> | t
//! ```

use std::fmt;

use kgroth::rpp::g_skew;
use kgroth::series::G_truncated;
use kgroth::{CoeffPoly, Partition, SkewShape, SymFunc, TruncSeries};
use num_bigint::BigInt;

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Schur(Partition),
    /// `g_{λ/μ}`; straight shapes have an empty inner partition.
    G(SkewShape),
    /// Truncated stable Grothendieck `G_λ`.
    BigG(Partition),
    H(usize),
    E(usize),
    P(usize),
    Int(BigInt),
    T,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
}

/// Value of an expression: a polynomial symmetric function, or a truncated
/// series once a `G` atom is involved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Poly(SymFunc),
    Series(TruncSeries),
}

impl Expr {
    /// Upper bound for the degree, taking `G_λ` as degree `|λ|`.
    pub fn degree_bound(&self) -> usize {
        match self {
            Expr::Schur(la) | Expr::BigG(la) => la.size(),
            Expr::G(sh) => sh.size(),
            Expr::H(k) | Expr::E(k) | Expr::P(k) => *k,
            Expr::Int(_) | Expr::T => 0,
            Expr::Neg(a) => a.degree_bound(),
            Expr::Add(a, b) | Expr::Sub(a, b) => a.degree_bound().max(b.degree_bound()),
            Expr::Mul(a, b) => a.degree_bound() + b.degree_bound(),
        }
    }

    pub fn has_big_g(&self) -> bool {
        match self {
            Expr::BigG(_) => true,
            Expr::Neg(a) => a.has_big_g(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => a.has_big_g() || b.has_big_g(),
            _ => false,
        }
    }

    /// True when every basis atom is a `g` atom.
    pub fn only_g_atoms(&self) -> bool {
        match self {
            Expr::G(_) | Expr::Int(_) | Expr::T => true,
            Expr::Schur(_) | Expr::BigG(_) | Expr::H(_) | Expr::E(_) | Expr::P(_) => false,
            Expr::Neg(a) => a.only_g_atoms(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.only_g_atoms() && b.only_g_atoms()
            }
        }
    }

    /// Evaluates without `G` atoms.
    pub fn eval_poly(&self) -> Result<SymFunc, CliError> {
        Ok(match self {
            Expr::Schur(la) => SymFunc::schur(la.clone()),
            Expr::G(sh) => (*g_skew(sh.outer(), sh.inner())).clone(),
            Expr::BigG(_) => {
                return Err(CliError::Usage(
                    "G atoms need a truncation cap and cannot be used here".into(),
                ))
            }
            Expr::H(k) => SymFunc::h(*k),
            Expr::E(k) => SymFunc::e(*k),
            Expr::P(k) => SymFunc::p(*k)?,
            Expr::Int(n) => SymFunc::constant(CoeffPoly::from(n.clone())),
            Expr::T => SymFunc::constant(CoeffPoly::t()),
            Expr::Neg(a) => -&a.eval_poly()?,
            Expr::Add(a, b) => &a.eval_poly()? + &b.eval_poly()?,
            Expr::Sub(a, b) => &a.eval_poly()? - &b.eval_poly()?,
            Expr::Mul(a, b) => &a.eval_poly()? * &b.eval_poly()?,
        })
    }

    /// Evaluates every subterm as a series truncated at `cap`.
    pub fn eval_series(&self, cap: usize) -> Result<TruncSeries, CliError> {
        Ok(match self {
            Expr::BigG(la) => G_truncated(la, cap)?,
            Expr::Neg(a) => -&a.eval_series(cap)?,
            Expr::Add(a, b) => &a.eval_series(cap)? + &b.eval_series(cap)?,
            Expr::Sub(a, b) => &a.eval_series(cap)? - &b.eval_series(cap)?,
            Expr::Mul(a, b) => &a.eval_series(cap)? * &b.eval_series(cap)?,
            atom => TruncSeries::from_symfunc(&atom.eval_poly()?, cap),
        })
    }

    /// Polynomial value when possible, otherwise a series with the given cap
    /// or, by default, the degree bound.
    pub fn eval(&self, cap: Option<usize>) -> Result<Value, CliError> {
        if self.has_big_g() {
            let cap = cap.unwrap_or_else(|| self.degree_bound());
            Ok(Value::Series(self.eval_series(cap)?))
        } else {
            let f = self.eval_poly()?;
            Ok(match cap {
                Some(cap) => Value::Series(TruncSeries::from_symfunc(&f, cap)),
                None => Value::Poly(f),
            })
        }
    }
}

pub fn parse(input: &str) -> Result<Expr, CliError> {
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> CliError {
        CliError::Parse(format!("{msg} at offset {}", self.pos))
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

    fn expr(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, CliError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.factor()?)))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Int(self.digits()?)),
            Some(b't') => {
                self.pos += 1;
                Ok(Expr::T)
            }
            Some(c @ (b'h' | b'e' | b'p')) => {
                self.pos += 1;
                if !self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    return Err(self.error("expected a degree"));
                }
                let k =
                    usize::try_from(self.digits()?).map_err(|_| self.error("degree too large"))?;
                Ok(match c {
                    b'h' => Expr::H(k),
                    b'e' => Expr::E(k),
                    _ => Expr::P(k),
                })
            }
            Some(b's') => {
                self.pos += 1;
                Ok(Expr::Schur(self.partition()?))
            }
            Some(b'G') => {
                self.pos += 1;
                Ok(Expr::BigG(self.partition()?))
            }
            Some(b'g') => {
                self.pos += 1;
                let outer = self.partition()?;
                let inner = if self.src.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    self.partition()?
                } else {
                    Partition::empty()
                };
                Ok(Expr::G(SkewShape::new(outer, inner)?))
            }
            _ => Err(self.error("expected an atom")),
        }
    }

    fn digits(&mut self) -> Result<BigInt, CliError> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| self.error("expected digits"))
    }

    fn partition(&mut self) -> Result<Partition, CliError> {
        if self.src.get(self.pos) != Some(&b'[') {
            return Err(self.error("expected '['"));
        }
        let end = self.src[self.pos..]
            .iter()
            .position(|&c| c == b']')
            .ok_or_else(|| self.error("unclosed '['"))?;
        let text = std::str::from_utf8(&self.src[self.pos..=self.pos + end]).expect("ascii");
        let la = text.parse::<Partition>()?;
        self.pos += end + 1;
        Ok(la)
    }
}

fn fmt_prec(e: &Expr, prec: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let (own, body): (u8, Box<dyn Fn(&mut fmt::Formatter<'_>) -> fmt::Result + '_>) = match e {
        Expr::Add(a, b) => (
            0,
            Box::new(move |f| {
                fmt_prec(a, 0, f)?;
                write!(f, "+")?;
                fmt_prec(b, 1, f)
            }),
        ),
        Expr::Sub(a, b) => (
            0,
            Box::new(move |f| {
                fmt_prec(a, 0, f)?;
                write!(f, "-")?;
                fmt_prec(b, 1, f)
            }),
        ),
        Expr::Mul(a, b) => (
            1,
            Box::new(move |f| {
                fmt_prec(a, 1, f)?;
                write!(f, "*")?;
                fmt_prec(b, 2, f)
            }),
        ),
        Expr::Neg(a) => (
            2,
            Box::new(move |f| {
                write!(f, "-")?;
                fmt_prec(a, 2, f)
            }),
        ),
        Expr::Schur(la) => return write!(f, "s{la}"),
        Expr::G(sh) if sh.inner().is_empty() => return write!(f, "g{}", sh.outer()),
        Expr::G(sh) => return write!(f, "g{sh}"),
        Expr::BigG(la) => return write!(f, "G{la}"),
        Expr::H(k) => return write!(f, "h{k}"),
        Expr::E(k) => return write!(f, "e{k}"),
        Expr::P(k) => return write!(f, "p{k}"),
        Expr::Int(n) => return write!(f, "{n}"),
        Expr::T => return write!(f, "t"),
    };
    if own < prec {
        write!(f, "(")?;
        body(f)?;
        write!(f, ")")
    } else {
        body(f)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_prec(self, 0, f)
    }
}
