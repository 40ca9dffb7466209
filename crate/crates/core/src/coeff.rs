//! The scalar ring ℤ[t].

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// An integer polynomial in the formal parameter `t`.
///
/// `coeffs[i]` is the coefficient of `t^i`; there are never trailing zeros,
/// so the zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CoeffPoly {
    coeffs: Vec<BigInt>,
}

impl CoeffPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        CoeffPoly { coeffs }
    }

    pub fn zero() -> Self {
        CoeffPoly::default()
    }

    pub fn one() -> Self {
        CoeffPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        CoeffPoly::from_coeffs(vec![c.into()])
    }

    /// The parameter `t` itself.
    pub fn t() -> Self {
        CoeffPoly::monomial(1, 1)
    }

    /// `c·t^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        CoeffPoly::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree in `t`; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The value if this is a constant polynomial.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// The value as an `i64` if this is a small constant.
    pub fn as_i64(&self) -> Option<i64> {
        self.as_constant().and_then(|c| c.to_i64())
    }

    pub fn pow(&self, mut k: u32) -> CoeffPoly {
        let mut base = self.clone();
        let mut acc = CoeffPoly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    pub fn eval_int(&self, v: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * v + c)
    }

    /// Composition `self(q(t))`.
    pub fn substitute(&self, q: &CoeffPoly) -> CoeffPoly {
        self.coeffs.iter().rev().fold(CoeffPoly::zero(), |acc, c| {
            &(&acc * q) + &CoeffPoly::constant(c.clone())
        })
    }

    /// Multiplication by an integer.
    pub fn scale_int(&self, k: i64) -> CoeffPoly {
        CoeffPoly::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> CoeffPoly {
        if self.is_zero() {
            return CoeffPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        CoeffPoly { coeffs }
    }
}

/// Integer value of `a` at `t = v`.
pub fn poly_eval_int(a: &CoeffPoly, v: i64) -> BigInt {
    a.eval_int(&BigInt::from(v))
}

impl From<i64> for CoeffPoly {
    fn from(c: i64) -> Self {
        CoeffPoly::constant(c)
    }
}

impl From<BigInt> for CoeffPoly {
    fn from(c: BigInt) -> Self {
        CoeffPoly::constant(c)
    }
}

impl<'a> Add<&'a CoeffPoly> for &'a CoeffPoly {
    type Output = CoeffPoly;

    fn add(self, rhs: &CoeffPoly) -> CoeffPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        CoeffPoly::from_coeffs(coeffs)
    }
}

impl<'a> Sub<&'a CoeffPoly> for &'a CoeffPoly {
    type Output = CoeffPoly;

    fn sub(self, rhs: &CoeffPoly) -> CoeffPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a CoeffPoly> for &'a CoeffPoly {
    type Output = CoeffPoly;

    fn mul(self, rhs: &CoeffPoly) -> CoeffPoly {
        if self.is_zero() || rhs.is_zero() {
            return CoeffPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        CoeffPoly::from_coeffs(coeffs)
    }
}

impl Neg for &CoeffPoly {
    type Output = CoeffPoly;

    fn neg(self) -> CoeffPoly {
        CoeffPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CoeffPoly {
    type Output = CoeffPoly;

    fn neg(self) -> CoeffPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CoeffPoly> for CoeffPoly {
            type Output = CoeffPoly;
            fn $m(self, rhs: CoeffPoly) -> CoeffPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CoeffPoly> for CoeffPoly {
            type Output = CoeffPoly;
            fn $m(self, rhs: &CoeffPoly) -> CoeffPoly {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&CoeffPoly> for CoeffPoly {
    fn add_assign(&mut self, rhs: &CoeffPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&CoeffPoly> for CoeffPoly {
    fn sub_assign(&mut self, rhs: &CoeffPoly) {
        *self = &*self - rhs;
    }
}

impl std::iter::Sum for CoeffPoly {
    fn sum<I: Iterator<Item = CoeffPoly>>(iter: I) -> Self {
        iter.fold(CoeffPoly::zero(), |acc, x| acc + x)
    }
}

/// Canonical text: descending powers, `*` between coefficient and `t`,
/// unit coefficients elided, e.g. `t^3-3*t^2+3*t-1`.
impl fmt::Display for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    write!(f, "t")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts sums of terms `c`, `t`, `c*t`, `t^k`, `c*t^k` with optional signs
/// and whitespace; the canonical form is one instance.
impl FromStr for CoeffPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("invalid coefficient polynomial `{s}`"));
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(bad());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in text.char_indices() {
            if (ch == '+' || ch == '-') && i > start {
                terms.push(&text[start..i]);
                start = i;
            }
        }
        terms.push(&text[start..]);

        let mut acc = CoeffPoly::zero();
        for term in terms {
            let (neg, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let (coef, power) = match body.find('t') {
                None => (body.parse::<BigInt>().map_err(|_| bad())?, 0usize),
                Some(pos) => {
                    let coef = match &body[..pos] {
                        "" => BigInt::one(),
                        c => c
                            .strip_suffix('*')
                            .ok_or_else(bad)?
                            .parse::<BigInt>()
                            .map_err(|_| bad())?,
                    };
                    let power = match &body[pos + 1..] {
                        "" => 1,
                        rest => rest
                            .strip_prefix('^')
                            .ok_or_else(bad)?
                            .parse::<usize>()
                            .map_err(|_| bad())?,
                    };
                    (coef, power)
                }
            };
            if coef.is_negative() {
                return Err(bad());
            }
            let coef = if neg { -coef } else { coef };
            acc += &CoeffPoly::monomial(coef, power);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cp(s: &str) -> CoeffPoly {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let t = CoeffPoly::t();
        let one = CoeffPoly::one();
        assert_eq!(&t * &(&t + &one), cp("t^2+t"));
        assert!((&one + &CoeffPoly::constant(-1)).is_zero());
        let tm1 = &t - &one;
        assert_eq!(&tm1.pow(2) * &tm1, cp("t^3-3*t^2+3*t-1"));
    }

    #[test]
    fn evaluation_examples() {
        let t = CoeffPoly::t();
        let tp1 = &t + &CoeffPoly::one();
        assert_eq!(poly_eval_int(&(&t * &tp1.pow(2)), 1), BigInt::from(4));
        for n in 2..8 {
            assert!(poly_eval_int(&(&t * &tp1.pow(n - 1)), -1).is_zero());
        }
        assert_eq!(poly_eval_int(&cp("t^2-2*t+1"), 0), BigInt::from(1));
    }

    #[test]
    fn canonical_text() {
        for s in [
            "0",
            "1",
            "-1",
            "t",
            "-t",
            "t^2+t",
            "t^3-3*t^2+3*t-1",
            "12*t^5-t",
        ] {
            assert_eq!(cp(s).to_string(), s);
        }
        assert_eq!(cp("1 + t").to_string(), "t+1");
        assert_eq!(cp("t-t").to_string(), "0");
        assert!("x".parse::<CoeffPoly>().is_err());
        assert!("2t".parse::<CoeffPoly>().is_err());
        assert!("t^".parse::<CoeffPoly>().is_err());
        assert!("+".parse::<CoeffPoly>().is_err());
    }

    #[test]
    fn substitution() {
        let p = cp("t^2+t");
        assert_eq!(p.substitute(&cp("-t")), cp("t^2-t"));
        assert_eq!(p.substitute(&cp("1")), cp("2"));
        assert_eq!(p.substitute(&cp("t+1")), cp("t^2+3*t+2"));
    }

    fn arb_poly() -> impl Strategy<Value = CoeffPoly> {
        prop::collection::vec(-20i64..20, 0..9)
            .prop_map(|v| CoeffPoly::from_coeffs(v.into_iter().map(BigInt::from).collect()))
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in arb_poly(), b in arb_poly(), v in -6i64..6) {
            prop_assert_eq!(poly_eval_int(&(&a * &b), v), poly_eval_int(&a, v) * poly_eval_int(&b, v));
            prop_assert_eq!(poly_eval_int(&(&a + &b), v), poly_eval_int(&a, v) + poly_eval_int(&b, v));
        }

        #[test]
        fn text_round_trip(a in arb_poly()) {
            prop_assert_eq!(a.to_string().parse::<CoeffPoly>().unwrap(), a);
        }
    }
}
