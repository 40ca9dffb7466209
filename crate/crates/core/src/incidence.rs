//! The incidence algebra of Young's lattice restricted to `[∅, λ]`.

use std::collections::BTreeMap;

use crate::coeff::CoeffPoly;
use crate::error::Error;
use crate::lincomb::LinComb;
use crate::partition::{interval, mobius, Partition, SkewShape};

/// A ℤ[t]-valued function on comparable pairs `μ ⊆ ν` of `[∅, ground]`.
#[derive(Clone, PartialEq, Eq)]
pub struct IncidenceFn {
    ground: Partition,
    values: LinComb<(Partition, Partition)>,
}

impl IncidenceFn {
    /// Tabulates `f` on every comparable pair below `ground`.
    pub fn from_fn(ground: &Partition, f: impl Fn(&Partition, &Partition) -> CoeffPoly) -> Self {
        let mut values = LinComb::zero();
        for (mu, nu) in comparable_pairs(ground) {
            let v = f(&mu, &nu);
            values.add_term((mu, nu), &v);
        }
        IncidenceFn {
            ground: ground.clone(),
            values,
        }
    }

    pub fn ground(&self) -> &Partition {
        &self.ground
    }

    /// Value at `(μ, ν)`; zero off the domain.
    pub fn value(&self, mu: &Partition, nu: &Partition) -> CoeffPoly {
        self.values.coeff(&(mu.clone(), nu.clone()))
    }

    /// Nonzero values.
    pub fn iter(&self) -> impl Iterator<Item = (&(Partition, Partition), &CoeffPoly)> {
        self.values.iter()
    }

    pub fn substitute_t(&self, q: &CoeffPoly) -> Self {
        IncidenceFn {
            ground: self.ground.clone(),
            values: self.values.substitute_t(q),
        }
    }
}

impl std::fmt::Debug for IncidenceFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IncidenceFn[{}]{:?}", self.ground, self.values)
    }
}

fn comparable_pairs(ground: &Partition) -> Vec<(Partition, Partition)> {
    let all = interval(&Partition::empty(), ground).expect("∅ is below everything");
    let mut out = Vec::new();
    for mu in &all {
        for nu in &all {
            if mu.is_subset_of(nu) {
                out.push((mu.clone(), nu.clone()));
            }
        }
    }
    out
}

/// `δ(μ, ν) = [μ = ν]`.
pub fn inc_delta(ground: &Partition) -> IncidenceFn {
    IncidenceFn::from_fn(ground, |mu, nu| CoeffPoly::from(i64::from(mu == nu)))
}

/// `ζ ≡ 1`.
pub fn inc_zeta(ground: &Partition) -> IncidenceFn {
    IncidenceFn::from_fn(ground, |_, _| CoeffPoly::one())
}

/// The Möbius function of Young's lattice.
pub fn inc_mobius(ground: &Partition) -> IncidenceFn {
    IncidenceFn::from_fn(ground, |mu, nu| CoeffPoly::from(mobius(mu, nu)))
}

/// `i_t(μ, λ) = t^{c(λ/μ)}`.
pub fn inc_it(ground: &Partition) -> IncidenceFn {
    IncidenceFn::from_fn(ground, |mu, la| {
        let sh = SkewShape::new(la.clone(), mu.clone()).expect("comparable pair");
        CoeffPoly::monomial(1, sh.column_count())
    })
}

/// `j_t(μ, λ) = (−1)^{|λ/μ|} t^{c(λ/μ)} (t−1)^{|λ/μ|−c(λ/μ)}` on vertical
/// strips, zero elsewhere.
pub fn inc_jt(ground: &Partition) -> IncidenceFn {
    let t_minus_one = &CoeffPoly::t() - &CoeffPoly::one();
    IncidenceFn::from_fn(ground, |mu, la| {
        let sh = SkewShape::new(la.clone(), mu.clone()).expect("comparable pair");
        if !sh.strip_kind().vertical {
            return CoeffPoly::zero();
        }
        let (n, c) = (sh.size(), sh.column_count());
        let sign = if n % 2 == 0 { 1 } else { -1 };
        &CoeffPoly::monomial(sign, c) * &t_minus_one.pow((n - c) as u32)
    })
}

/// `(fg)(μ, λ) = Σ_{μ⊆ν⊆λ} f(μ, ν) g(ν, λ)`.
pub fn inc_convolve(f: &IncidenceFn, g: &IncidenceFn) -> Result<IncidenceFn, Error> {
    if f.ground != g.ground {
        return Err(Error::GroundMismatch(
            f.ground.to_string(),
            g.ground.to_string(),
        ));
    }
    let mut by_start: BTreeMap<&Partition, Vec<(&Partition, &CoeffPoly)>> = BTreeMap::new();
    for ((nu, la), v) in g.values.iter() {
        by_start.entry(nu).or_default().push((la, v));
    }
    let mut values = LinComb::zero();
    for ((mu, nu), a) in f.values.iter() {
        for &(la, b) in by_start.get(nu).map(Vec::as_slice).unwrap_or(&[]) {
            values.add_term((mu.clone(), la.clone()), &(a * b));
        }
    }
    Ok(IncidenceFn {
        ground: f.ground.clone(),
        values,
    })
}

/// `Σ_{j=0}^{q} (−1)^j t^{[j>0]+[j<q]} (t−1)^{j−[j>0]}`, which vanishes for
/// every `q ≥ 1`.
pub fn telescoping_x(q: usize) -> Result<CoeffPoly, Error> {
    if q == 0 {
        return Err(Error::InvalidArgument("q must be positive".into()));
    }
    let t_minus_one = &CoeffPoly::t() - &CoeffPoly::one();
    Ok((0..=q)
        .map(|j| {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let tp = usize::from(j > 0) + usize::from(j < q);
            &CoeffPoly::monomial(sign, tp) * &t_minus_one.pow((j - usize::from(j > 0)) as u32)
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_up_to;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn zeta_and_mobius() {
        let g = p("[3,2,1]");
        let d = inc_delta(&g);
        assert_eq!(inc_convolve(&inc_zeta(&g), &inc_mobius(&g)).unwrap(), d);
        assert_eq!(inc_convolve(&inc_mobius(&g), &inc_zeta(&g)).unwrap(), d);
        let z = inc_zeta(&p("[2,2]"));
        assert_eq!(inc_convolve(&z, &inc_delta(&p("[2,2]"))).unwrap(), z);
        assert_eq!(z.value(&p("[1]"), &p("[2,1]")), CoeffPoly::one());
        assert_eq!(z.value(&p("[2]"), &p("[1,1]")), CoeffPoly::zero());
    }

    #[test]
    fn ground_mismatch() {
        let r = inc_convolve(&inc_zeta(&p("[2]")), &inc_zeta(&p("[1,1]")));
        assert!(matches!(r, Err(Error::GroundMismatch(_, _))));
    }

    #[test]
    fn it_jt_are_inverse() {
        for g in [p("[3,2,1]"), p("[4,3,2,1]"), p("[2,2]"), p("[5]")] {
            let d = inc_delta(&g);
            assert_eq!(inc_convolve(&inc_it(&g), &inc_jt(&g)).unwrap(), d, "{g}");
            assert_eq!(inc_convolve(&inc_jt(&g), &inc_it(&g)).unwrap(), d, "{g}");
        }
    }

    #[test]
    fn specializations_at_one() {
        let one = CoeffPoly::one();
        let g = p("[3,2,1]");
        assert_eq!(inc_jt(&g).substitute_t(&one), inc_mobius(&g));
        assert_eq!(inc_it(&g).substitute_t(&one), inc_zeta(&g));
    }

    #[test]
    fn telescoping() {
        for q in 1..=10 {
            assert!(telescoping_x(q).unwrap().is_zero(), "{q}");
        }
        assert!(telescoping_x(0).is_err());
    }

    #[test]
    fn delta_is_two_sided_unit() {
        for g in partitions_up_to(4) {
            let f = inc_jt(&g);
            let d = inc_delta(&g);
            assert_eq!(inc_convolve(&d, &f).unwrap(), f);
            assert_eq!(inc_convolve(&f, &d).unwrap(), f);
        }
    }
}
