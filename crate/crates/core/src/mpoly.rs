//! Sparse multivariate polynomials in `x_1..x_n` over ℤ[t].

use std::fmt;

use crate::coeff::CoeffPoly;
use crate::error::Error;
use crate::lincomb::LinComb;

/// Exponent vector of a monomial; always of length `nvars`.
pub type Exponents = Vec<u32>;

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: LinComb<Exponents>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: LinComb::zero(),
        }
    }

    pub fn constant(nvars: usize, c: CoeffPoly) -> Self {
        MultiPoly::monomial(vec![0; nvars], c)
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        MultiPoly::monomial(e, CoeffPoly::one())
    }

    pub fn monomial(exps: Exponents, c: CoeffPoly) -> Self {
        MultiPoly {
            nvars: exps.len(),
            terms: LinComb::term(exps, c),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &LinComb<Exponents> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, exps: &[u32]) -> CoeffPoly {
        self.terms.coeff(&exps.to_vec())
    }

    /// Adds `c·x^exps`.
    pub fn add_term(&mut self, exps: Exponents, c: &CoeffPoly) {
        debug_assert_eq!(exps.len(), self.nvars);
        self.terms.add_term(exps, c);
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly, Error> {
        self.check_vars(other)?;
        Ok(MultiPoly {
            nvars: self.nvars,
            terms: &self.terms + &other.terms,
        })
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly, Error> {
        self.check_vars(other)?;
        Ok(MultiPoly {
            nvars: self.nvars,
            terms: &self.terms - &other.terms,
        })
    }

    pub fn scale(&self, c: &CoeffPoly) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.scale(c),
        }
    }

    /// Exact product; with `degree_cap`, monomials of total degree above the
    /// cap are dropped.
    pub fn mul(&self, other: &MultiPoly, degree_cap: Option<usize>) -> Result<MultiPoly, Error> {
        self.check_vars(other)?;
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in self.terms.iter() {
            let da: u32 = ea.iter().sum();
            for (eb, cb) in other.terms.iter() {
                let db: u32 = eb.iter().sum();
                if degree_cap.is_some_and(|cap| (da + db) as usize > cap) {
                    continue;
                }
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.terms.add_term(e, &(ca * cb));
            }
        }
        Ok(out)
    }

    /// Drops monomials of total degree above `cap`.
    pub fn truncate(&self, cap: usize) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .filter_keys(|e| e.iter().map(|&x| x as usize).sum::<usize>() <= cap),
        }
    }

    /// Invariance under every adjacent transposition `x_i ↔ x_{i+1}`.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(e, c)| {
                let mut swapped = e.clone();
                swapped.swap(i, i + 1);
                self.terms.get(&swapped) == Some(c)
            })
        })
    }

    /// Substitutes a value from ℤ[t] for every variable.
    pub fn eval(&self, values: &[CoeffPoly]) -> Result<CoeffPoly, Error> {
        if values.len() != self.nvars {
            return Err(Error::VariableMismatch(self.nvars, values.len()));
        }
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(values)
                    .fold(c.clone(), |acc, (&k, v)| &acc * &v.pow(k))
            })
            .sum())
    }

    /// Re-embeds into `nvars` variables, sending `x_i` to `x_{i+offset}`.
    pub fn embed(&self, nvars: usize, offset: usize) -> Result<MultiPoly, Error> {
        if offset + self.nvars > nvars {
            return Err(Error::VariableMismatch(offset + self.nvars, nvars));
        }
        let mut out = MultiPoly::zero(nvars);
        for (e, c) in self.terms.iter() {
            let mut f = vec![0; nvars];
            f[offset..offset + self.nvars].copy_from_slice(e);
            out.terms.add_term(f, c);
        }
        Ok(out)
    }

    fn check_vars(&self, other: &MultiPoly) -> Result<(), Error> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::VariableMismatch(self.nvars, other.nvars))
        }
    }
}

/// Convenience wrapper matching [`MultiPoly::mul`].
pub fn mpoly_mul(
    a: &MultiPoly,
    b: &MultiPoly,
    degree_cap: Option<usize>,
) -> Result<MultiPoly, Error> {
    a.mul(b, degree_cap)
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{k}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}
