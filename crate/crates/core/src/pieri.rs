//! The skew Pieri rule for `h_k g_{μ/ν}` and the sums `c̃`, `d̃` of
//! structure constants.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeff::CoeffPoly;
use crate::lincomb::LinComb;
use crate::operators::op_i;
use crate::partition::{a_statistic, interval, Partition, SkewShape};
use crate::rpp::{c_coeff, d_coeff, g_skew, g_to_schur, schur_to_g};

/// `binom(m, n)` for any integer `m`, zero when `n < 0`.
pub fn binomial(m: i64, n: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        num *= m - i;
        den *= i + 1;
    }
    num / den
}

/// Partitions `λ ⊇ μ` with `λ/μ` a horizontal strip of size at most `max`.
pub fn horizontal_strips_above(mu: &Partition, max: usize) -> Vec<Partition> {
    let rows = mu.len() + 1;
    let mut out = Vec::new();
    let mut parts = vec![0; rows];
    fn rec(
        i: usize,
        left: usize,
        mu: &Partition,
        parts: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if i == parts.len() {
            out.push(Partition::new(parts.clone()).expect("weakly decreasing"));
            return;
        }
        let lo = mu.part(i);
        let hi = if i == 0 {
            lo + left
        } else {
            mu.part(i - 1).min(lo + left)
        };
        for v in lo..=hi {
            parts[i] = v;
            rec(i + 1, left - (v - lo), mu, parts, out);
        }
    }
    rec(0, max, mu, &mut parts, &mut out);
    out.sort();
    out
}

/// Partitions `η ⊆ ν` with `ν/η` a vertical strip of size at most `max`.
pub fn vertical_strips_below(nu: &Partition, max: usize) -> Vec<Partition> {
    let n = nu.len();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize > max {
            continue;
        }
        let parts: Vec<usize> = (0..n)
            .map(|i| nu.part(i) - ((mask >> i) & 1) as usize)
            .collect();
        if parts.windows(2).all(|w| w[0] >= w[1]) {
            out.push(Partition::new(parts).expect("weakly decreasing"));
        }
    }
    out.sort();
    out
}

/// `h_k g_{μ/ν} = Σ (−1)^{k−|λ/μ|} binom(a(λ‖μ) − a(ν′‖η′) − |ν/η|, k−|λ/μ|−|ν/η|) g_{λ/η}`
/// over horizontal strips `λ/μ` and vertical strips `ν/η`.
pub fn skew_pieri(k: usize, sh: &SkewShape) -> LinComb<SkewShape> {
    let (mu, nu) = (sh.outer(), sh.inner());
    let nu_t = nu.transpose();
    let mut out = LinComb::zero();
    for la in horizontal_strips_above(mu, k) {
        let up = la.size() - mu.size();
        let a_up = a_statistic(&la, mu) as i64;
        for eta in vertical_strips_below(nu, k - up) {
            let down = nu.size() - eta.size();
            let a_down = a_statistic(&nu_t, &eta.transpose()) as i64;
            let rest = (k - up - down) as i64;
            let mut c = binomial(a_up - a_down - down as i64, rest);
            if (k - up) % 2 == 1 {
                c = -c;
            }
            let shape = SkewShape::new(la.clone(), eta).expect("η ⊆ ν ⊆ μ ⊆ λ");
            out.add_term(shape, &CoeffPoly::from(c));
        }
    }
    out
}

/// `c̃^λ_{μν} = Σ_{μ⊆κ⊆λ} c^λ_{κν}`.
pub fn tilde_c(la: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    match interval(mu, la) {
        Ok(ks) => ks.iter().map(|ka| c_coeff(la, ka, nu)).sum(),
        Err(_) => 0,
    }
}

/// `c̃^λ_{μν}` read off as the coefficient of `g_ν` in `I(g_{λ/μ})`.
pub fn tilde_c_by_operator(la: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    let image = schur_to_g(&op_i(&g_skew(la, mu)));
    image.coeff(nu).as_i64().expect("integer coefficient")
}

/// `d̃^λ_{μν} = Σ_{α⊆μ, β⊆ν} d^λ_{αβ}`.
pub fn tilde_d(la: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    let lower_mu = interval(&Partition::empty(), mu).expect("∅ ⊆ μ");
    let lower_nu = interval(&Partition::empty(), nu).expect("∅ ⊆ ν");
    let mut total = 0;
    for al in &lower_mu {
        for be in &lower_nu {
            total += d_coeff(la, al, be);
        }
    }
    total
}

/// `d̃^λ_{μν}` read off as the coefficient of `g_λ` in `I(g_μ) I(g_ν)`.
pub fn tilde_d_by_operator(la: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    let product = &op_i(&g_to_schur(mu)) * &op_i(&g_to_schur(nu));
    schur_to_g(&product)
        .coeff(la)
        .as_i64()
        .expect("integer coefficient")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_up_to;
    use crate::symfunc::SymFunc;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sk(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn expand(f: &LinComb<SkewShape>) -> SymFunc {
        f.iter()
            .map(|(sh, c)| g_skew(sh.outer(), sh.inner()).scale(c))
            .sum()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 3), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
        assert_eq!(binomial(-2, 2), BigInt::from(3));
        assert_eq!(binomial(-4, 0), BigInt::one());
    }

    #[test]
    fn strips() {
        let hs = horizontal_strips_above(&p("[1]"), 1);
        assert_eq!(hs, vec![p("[1]"), p("[2]"), p("[1,1]")]);
        let vs = vertical_strips_below(&p("[2,1]"), 2);
        assert_eq!(vs, vec![p("[1]"), p("[2]"), p("[1,1]"), p("[2,1]")]);
    }

    #[test]
    fn pieri_examples() {
        let r = skew_pieri(1, &sk("[1]"));
        let mut expected = LinComb::zero();
        expected.add_term(sk("[2]"), &CoeffPoly::one());
        expected.add_term(sk("[1,1]"), &CoeffPoly::one());
        expected.add_term(sk("[1]"), &CoeffPoly::constant(-1));
        assert_eq!(r, expected);
        for s in ["[3,2,1]/[1]", "[2,2]/[1]", "[]"] {
            assert_eq!(
                skew_pieri(0, &sk(s)),
                LinComb::term(sk(s), CoeffPoly::one())
            );
        }
    }

    #[test]
    fn pieri_matches_schur_product() {
        for mu in partitions_up_to(5) {
            for nu in interval(&Partition::empty(), &mu).unwrap() {
                let sh = SkewShape::new(mu.clone(), nu.clone()).unwrap();
                for k in 0..=5 {
                    let lhs = &SymFunc::h(k) * &g_skew(&mu, &nu);
                    assert_eq!(expand(&skew_pieri(k, &sh)), lhs, "k={k} {sh}");
                }
            }
        }
    }

    #[test]
    fn tilde_sums() {
        let la = p("[3,2]");
        assert_eq!(tilde_c(&la, &p("[]"), &la), 1);
        for mu in partitions_up_to(3) {
            for nu in partitions_up_to(3) {
                for la in partitions_up_to(5) {
                    assert_eq!(tilde_c(&la, &mu, &nu), tilde_c_by_operator(&la, &mu, &nu));
                    let lower: i64 = interval(&mu, &la)
                        .map(|ks| ks.iter().map(|ka| c_coeff(ka, &mu, &nu)).sum())
                        .unwrap_or(0);
                    assert_eq!(tilde_c(&la, &mu, &nu), lower);
                    assert_eq!(tilde_d(&la, &mu, &nu), tilde_d_by_operator(&la, &mu, &nu));
                }
            }
        }
    }
}
