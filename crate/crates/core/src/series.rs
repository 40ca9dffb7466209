//! Degree-truncated elements of the completion of Λ, stored in the Schur basis.

use std::ops::{Add, Mul, Neg, Sub};

use crate::coeff::CoeffPoly;
use crate::error::Error;
use crate::lincomb::LinComb;
use crate::partition::{partitions_up_to, Partition};
use crate::rpp::g_to_schur;
use crate::symfunc::{schur_product, SymFunc};

/// All Schur terms of degree at most `cap`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    cap: usize,
    terms: LinComb<Partition>,
}

impl TruncSeries {
    pub fn zero(cap: usize) -> Self {
        TruncSeries {
            cap,
            terms: LinComb::zero(),
        }
    }

    pub fn one(cap: usize) -> Self {
        TruncSeries::from_symfunc(&SymFunc::one(), cap)
    }

    /// Truncation of `f` to degree `cap`.
    pub fn from_symfunc(f: &SymFunc, cap: usize) -> Self {
        TruncSeries {
            cap,
            terms: f.terms().filter_keys(|la| la.size() <= cap),
        }
    }

    pub fn from_terms(terms: LinComb<Partition>, cap: usize) -> Self {
        TruncSeries {
            cap,
            terms: terms.filter_keys(|la| la.size() <= cap),
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn terms(&self) -> &LinComb<Partition> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &CoeffPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, la: &Partition) -> CoeffPoly {
        self.terms.coeff(la)
    }

    /// The stored terms as a polynomial symmetric function.
    pub fn to_symfunc(&self) -> SymFunc {
        SymFunc::from_terms(self.terms.clone())
    }

    /// Same series with a smaller cap.
    pub fn truncate(&self, cap: usize) -> Self {
        TruncSeries::from_terms(self.terms.clone(), cap.min(self.cap))
    }

    pub fn scale(&self, c: &CoeffPoly) -> Self {
        TruncSeries {
            cap: self.cap,
            terms: self.terms.scale(c),
        }
    }

    pub fn substitute_t(&self, q: &CoeffPoly) -> Self {
        TruncSeries {
            cap: self.cap,
            terms: self.terms.substitute_t(q),
        }
    }

    /// `s_λ ↦ t^{|λ|} s_λ`.
    pub fn phi_t(&self) -> Self {
        TruncSeries {
            cap: self.cap,
            terms: self.to_symfunc().phi_t().terms().clone(),
        }
    }

    /// Hall pairing with a polynomial symmetric function.
    pub fn pair(&self, f: &SymFunc) -> Result<CoeffPoly, Error> {
        if !f.is_zero() && f.degree() > self.cap {
            return Err(Error::CapTooSmall {
                cap: self.cap,
                degree: f.degree(),
            });
        }
        Ok(self.to_symfunc().hall(f))
    }

    /// `A_∅ = 1` and `A_μ A_ν = Σ_λ A_λ c^λ_{μν}` whenever `|μ| + |ν| ≤ cap`.
    pub fn is_group_like(&self) -> bool {
        if !self.coeff(&Partition::empty()).is_one() {
            return false;
        }
        let parts = partitions_up_to(self.cap);
        for mu in &parts {
            for nu in &parts {
                if mu.size() + nu.size() > self.cap || mu > nu {
                    continue;
                }
                let lhs = &self.coeff(mu) * &self.coeff(nu);
                let rhs: CoeffPoly = schur_product(mu, nu)
                    .iter()
                    .map(|(la, c)| self.coeff(la).scale_int(*c))
                    .sum();
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

/// `H(t) = Σ_i t^i h_i` up to degree `cap`.
#[allow(non_snake_case)]
pub fn H_series(cap: usize) -> TruncSeries {
    TruncSeries {
        cap,
        terms: (0..=cap)
            .map(|i| (Partition::row(i), CoeffPoly::monomial(1, i)))
            .collect(),
    }
}

/// `E(t) = Σ_i t^i e_i` up to degree `cap`.
#[allow(non_snake_case)]
pub fn E_series(cap: usize) -> TruncSeries {
    TruncSeries {
        cap,
        terms: (0..=cap)
            .map(|i| (Partition::column(i), CoeffPoly::monomial(1, i)))
            .collect(),
    }
}

/// `G_λ` up to degree `cap`, characterised by `(G_λ, g_μ) = δ_{λμ}`.
///
/// Writing `g_μ = Σ_ν b_{μν} s_ν` with `b` unitriangular (`|ν| < |μ|` off the
/// diagonal), the coefficients satisfy `a_μ = δ_{λμ} − Σ_ν a_ν b_{μν}` and are
/// solved in order of increasing size.
#[allow(non_snake_case)]
pub fn G_truncated(la: &Partition, cap: usize) -> Result<TruncSeries, Error> {
    if cap < la.size() {
        return Err(Error::CapTooSmall {
            cap,
            degree: la.size(),
        });
    }
    let mut terms = LinComb::term(la.clone(), CoeffPoly::one());
    for mu in partitions_up_to(cap) {
        if mu.size() <= la.size() {
            continue;
        }
        let g = g_to_schur(&mu);
        let mut a = CoeffPoly::zero();
        for (nu, b) in g.iter() {
            if nu != &mu {
                a -= &(&terms.coeff(nu) * b);
            }
        }
        terms.add_term(mu, &a);
    }
    Ok(TruncSeries { cap, terms })
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, other: &TruncSeries) -> TruncSeries {
        let cap = self.cap.min(other.cap);
        TruncSeries::from_terms(&self.terms + &other.terms, cap)
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, other: &TruncSeries) -> TruncSeries {
        let cap = self.cap.min(other.cap);
        TruncSeries::from_terms(&self.terms - &other.terms, cap)
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            cap: self.cap,
            terms: -&self.terms,
        }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, other: &TruncSeries) -> TruncSeries {
        let cap = self.cap.min(other.cap);
        let mut terms = LinComb::zero();
        for (mu, a) in self.terms.iter() {
            for (nu, b) in other.terms.iter() {
                if mu.size() + nu.size() > cap {
                    continue;
                }
                let ab = a * b;
                for (la, c) in schur_product(mu, nu).iter() {
                    terms.add_term(la.clone(), &ab.scale_int(*c));
                }
            }
        }
        TruncSeries { cap, terms }
    }
}

impl std::fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?} + O(deg > {})", self.terms, self.cap)
    }
}
