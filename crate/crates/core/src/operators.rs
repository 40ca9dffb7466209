//! Pairing functionals `(F, −)`, perp operators `F^⊥` and the automorphisms
//! `I = H(1)^⊥`, `I⁻¹ = E(−1)^⊥`, `H(t)^⊥` and `E(t)^⊥`.

use crate::coeff::CoeffPoly;
use crate::error::Error;
use crate::lincomb::LinComb;
use crate::partition::Partition;
use crate::series::{E_series, G_truncated, H_series, TruncSeries};
use crate::symfunc::{lr_skew, SymFunc};

/// The linear map `f ↦ (F, f)` for a truncated series `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional {
    series: TruncSeries,
}

impl Functional {
    pub fn new(series: TruncSeries) -> Self {
        Functional { series }
    }

    /// `ε`, picking the constant term.
    pub fn counit(cap: usize) -> Self {
        Functional::new(TruncSeries::one(cap))
    }

    pub fn series(&self) -> &TruncSeries {
        &self.series
    }

    pub fn cap(&self) -> usize {
        self.series.cap()
    }

    pub fn eval(&self, f: &SymFunc) -> Result<CoeffPoly, Error> {
        self.series.pair(f)
    }

    /// `F^⊥ = ((F, −) ⊗ id) ∘ Δ`.
    ///
    /// On `s_λ` this is `Σ_μ F_μ s_{λ/μ}`.
    pub fn perp(&self, f: &SymFunc) -> Result<SymFunc, Error> {
        self.check_cap(f)?;
        let mut out = LinComb::zero();
        for (la, c) in f.iter() {
            for (mu, a) in self.series.iter() {
                if !mu.is_subset_of(la) {
                    continue;
                }
                let ac = a * c;
                for (nu, k) in lr_skew(la, mu).iter() {
                    out.add_term(nu.clone(), &ac.scale_int(*k));
                }
            }
        }
        Ok(out.into())
    }

    /// `(F, −) ∗ (G, −) = (FG, −)`.
    pub fn convolution(&self, other: &Functional) -> Functional {
        Functional::new(&self.series * &other.series)
    }

    fn check_cap(&self, f: &SymFunc) -> Result<(), Error> {
        if !f.is_zero() && f.degree() > self.cap() {
            return Err(Error::CapTooSmall {
                cap: self.cap(),
                degree: f.degree(),
            });
        }
        Ok(())
    }
}

/// `H(t)` with `t` replaced by `value`, truncated at `cap`.
pub fn h_functional(value: &CoeffPoly, cap: usize) -> Functional {
    Functional::new(H_series(cap).substitute_t(value))
}

/// `E(t)` with `t` replaced by `value`, truncated at `cap`.
pub fn e_functional(value: &CoeffPoly, cap: usize) -> Functional {
    Functional::new(E_series(cap).substitute_t(value))
}

/// `G_λ` truncated at `cap`.
pub fn g_functional(la: &Partition, cap: usize) -> Result<Functional, Error> {
    Ok(Functional::new(G_truncated(la, cap)?))
}

/// `I = H(1)^⊥`; equivalently `f(x) ↦ f(1, x)`.
pub fn op_i(f: &SymFunc) -> SymFunc {
    h_perp(&CoeffPoly::one(), f)
}

/// `I⁻¹ = E(−1)^⊥`.
pub fn op_i_inv(f: &SymFunc) -> SymFunc {
    e_perp(&CoeffPoly::constant(-1), f)
}

/// `H(t)^⊥` at the given value of `t`.
pub fn h_perp(t: &CoeffPoly, f: &SymFunc) -> SymFunc {
    h_functional(t, f.degree())
        .perp(f)
        .expect("cap equals degree")
}

/// `E(t)^⊥` at the given value of `t`.
pub fn e_perp(t: &CoeffPoly, f: &SymFunc) -> SymFunc {
    e_functional(t, f.degree())
        .perp(f)
        .expect("cap equals degree")
}

/// `G_μ^⊥`, which sends `g_λ` to `g_{λ/μ}`.
pub fn g_perp(mu: &Partition, f: &SymFunc) -> SymFunc {
    g_functional(mu, f.degree().max(mu.size()))
        .and_then(|g| g.perp(f))
        .expect("cap covers both degrees")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{interval, partitions_up_to, SkewShape};
    use crate::rpp::{g_basis_to_schur, g_skew, g_to_schur, schur_to_g};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn cp(s: &str) -> CoeffPoly {
        s.parse().unwrap()
    }

    fn g(x: &str) -> SymFunc {
        (*g_to_schur(&p(x))).clone()
    }

    fn gsum(terms: &[(&str, &str)]) -> SymFunc {
        terms.iter().map(|&(x, c)| g(x).scale(&cp(c))).sum()
    }

    #[test]
    fn evaluation_examples() {
        let t = CoeffPoly::t();
        assert_eq!(h_functional(&t, 6).eval(&g("[3,2,1]")).unwrap(), cp("t^3"));
        assert_eq!(
            e_functional(&t, 3).eval(&g("[1,1,1]")).unwrap(),
            cp("t^3+2*t^2+t")
        );
        assert_eq!(
            e_functional(&cp("-1"), 2).eval(&g("[2]")).unwrap(),
            CoeffPoly::zero()
        );
        assert!(matches!(
            h_functional(&t, 2).eval(&g("[3]")),
            Err(Error::CapTooSmall { cap: 2, degree: 3 })
        ));
        assert!(h_functional(&t, 2).perp(&g("[3]")).is_err());
    }

    #[test]
    fn perp_examples() {
        let f = g("[2,1]");
        assert_eq!(g_perp(&p("[1]"), &f), *g_skew(&p("[2,1]"), &p("[1]")));
        assert_eq!(Functional::counit(3).perp(&f).unwrap(), f);
        assert_eq!(
            op_i(&g("[2]")),
            gsum(&[("[2]", "1"), ("[1]", "1"), ("[]", "1")])
        );
    }

    #[test]
    fn i_examples() {
        assert_eq!(
            op_i(&g("[2,1]")),
            gsum(&[
                ("[2,1]", "1"),
                ("[2]", "1"),
                ("[1,1]", "1"),
                ("[1]", "1"),
                ("[]", "1")
            ])
        );
        assert_eq!(op_i(&SymFunc::one()), SymFunc::one());
        assert_eq!(
            op_i_inv(&g("[2,1]")),
            gsum(&[("[2,1]", "1"), ("[2]", "-1"), ("[1,1]", "-1"), ("[1]", "1")])
        );
    }

    #[test]
    fn t_deformed_examples() {
        let t = CoeffPoly::t();
        assert_eq!(
            h_perp(&t, &g("[2]")),
            gsum(&[("[2]", "1"), ("[1]", "t"), ("[]", "t^2")])
        );
        assert_eq!(
            e_perp(&t, &g("[1,1]")),
            gsum(&[("[1,1]", "1"), ("[1]", "t"), ("[]", "t^2+t")])
        );
        let f = &g("[3,1]") + &g("[2]").scale(&cp("t"));
        assert_eq!(h_perp(&CoeffPoly::zero(), &f), f);
    }

    #[test]
    fn convolution_examples() {
        let t = CoeffPoly::t();
        let minus_t = cp("-t");
        let conv = h_functional(&t, 5).convolution(&e_functional(&minus_t, 5));
        assert_eq!(conv, Functional::counit(5));
        let f = h_functional(&t, 4);
        assert_eq!(f.convolution(&Functional::counit(4)), f);
        let one = CoeffPoly::one();
        let conv = h_functional(&one, 3).convolution(&e_functional(&-&one, 3));
        assert_eq!(conv.eval(&g("[2,1]")).unwrap(), CoeffPoly::zero());
    }

    #[test]
    fn basis_formulas() {
        for la in partitions_up_to(6) {
            let below: SymFunc = interval(&Partition::empty(), &la)
                .unwrap()
                .iter()
                .map(|mu| (*g_to_schur(mu)).clone())
                .sum();
            let gl = (*g_to_schur(&la)).clone();
            assert_eq!(op_i(&gl), below, "{la}");
            let expected = if la.is_empty() {
                gl.clone()
            } else {
                &gl - &*g_skew(&la, &Partition::row(1))
            };
            assert_eq!(op_i_inv(&gl), expected, "{la}");
        }
    }

    #[test]
    fn inverse_pair() {
        for la in partitions_up_to(7) {
            let gl = (*g_to_schur(&la)).clone();
            assert_eq!(op_i_inv(&op_i(&gl)), gl);
            assert_eq!(op_i(&op_i_inv(&gl)), gl);
        }
    }

    #[test]
    fn substitution_description() {
        // I(f)(x_1..x_n) = f(1, x_1, .., x_n)
        for la in partitions_up_to(5) {
            let f = SymFunc::schur(la.clone());
            let n = la.size().max(1);
            let lhs = op_i(&f).to_polynomial(n);
            let full = f.to_polynomial(n + 1);
            let mut rhs = crate::mpoly::MultiPoly::zero(n);
            for (e, c) in full.terms().iter() {
                rhs.add_term(e[1..].to_vec(), c);
            }
            assert_eq!(lhs, rhs, "{la}");
        }
    }

    #[test]
    fn skew_identity() {
        for la in partitions_up_to(6) {
            for mu in interval(&Partition::empty(), &la).unwrap() {
                let ks = interval(&mu, &la).unwrap();
                let lhs = op_i(&g_skew(&la, &mu));
                let upper: SymFunc = ks.iter().map(|nu| (*g_skew(nu, &mu)).clone()).sum();
                let lower: SymFunc = ks.iter().map(|nu| (*g_skew(&la, nu)).clone()).sum();
                assert_eq!(lhs, upper, "{la}/{mu}");
                assert_eq!(lhs, lower, "{la}/{mu}");
            }
        }
    }

    #[test]
    fn h_perp_two_sided() {
        let t = CoeffPoly::t();
        for la in partitions_up_to(6) {
            let lhs = h_perp(&t, &g_to_schur(&la));
            let mut a = SymFunc::zero();
            let mut b = SymFunc::zero();
            for nu in interval(&Partition::empty(), &la).unwrap() {
                let c_outer = SkewShape::new(la.clone(), nu.clone())
                    .unwrap()
                    .column_count();
                a = &a + &g_to_schur(&nu).scale(&t.pow(c_outer as u32));
                b = &b + &g_skew(&la, &nu).scale(&t.pow(nu.column_count() as u32));
            }
            assert_eq!(lhs, a, "{la}");
            assert_eq!(lhs, b, "{la}");
        }
    }

    #[test]
    fn phi_intertwining() {
        let t = CoeffPoly::t();
        for la in partitions_up_to(5) {
            let f = SymFunc::schur(la);
            assert_eq!(h_perp(&t, &f).phi_t(), op_i(&f.phi_t()));
        }
    }

    #[test]
    fn perp_composition_and_adjointness() {
        let t = CoeffPoly::t();
        let f_series = H_series(5).substitute_t(&t);
        let g_series = G_truncated(&p("[1,1]"), 5).unwrap();
        let (ff, gg) = (Functional::new(f_series), Functional::new(g_series));
        let fg = ff.convolution(&gg);
        for la in partitions_up_to(5) {
            let f = g_basis_to_schur(&schur_to_g(&SymFunc::schur(la)));
            assert_eq!(
                fg.perp(&f).unwrap(),
                gg.perp(&ff.perp(&f).unwrap()).unwrap()
            );
            assert_eq!(
                fg.eval(&f).unwrap(),
                gg.eval(&ff.perp(&f).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn ring_morphism() {
        let fs = [
            g("[2,1]"),
            &g("[1]") + &g("[3]").scale(&cp("t")),
            SymFunc::schur(p("[2,2]")),
        ];
        for a in &fs {
            for b in &fs {
                assert_eq!(op_i(&(a * b)), &op_i(a) * &op_i(b));
            }
        }
    }
}
