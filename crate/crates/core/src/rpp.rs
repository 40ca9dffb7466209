//! Reverse plane partitions and the dual stable Grothendieck functions
//! `g_{λ/μ} = Σ_T x^T`, where `x^T = Π_i x_i^{T(i)}` and `T(i)` is the
//! number of *columns* of `T` containing `i`.
//!
//! Two independent routes compute `g_{λ/μ}`:
//!
//! * [`g_skew_by_polynomial`] enumerates every filling with entries at most
//!   `|λ/μ|`, builds the generating polynomial and lifts it with
//!   [`SymFunc::from_polynomial`]. This is exponential and only used for
//!   small shapes and cross-checks.
//! * [`g_skew`] uses that the cells holding entries `≤ i` form a partition
//!   `ν_i`, so fillings are chains `μ = ν_0 ⊆ ν_1 ⊆ … ⊆ λ` and `T(i)` is the
//!   column count of `ν_i/ν_{i-1}`. Only coefficients of dominant monomials
//!   are counted, then converted with Kostka numbers.

use std::collections::BTreeMap;
use std::sync::{Arc, LazyLock};

use crate::coeff::CoeffPoly;
use crate::error::Error;
use crate::lincomb::LinComb;
use crate::memo::Memo;
use crate::mpoly::MultiPoly;
use crate::partition::{dominant_chain_counts, interval, Partition, SkewShape};
use crate::symfunc::SymFunc;

/// A filling of a skew shape, weakly increasing along rows and columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RppFilling {
    shape: SkewShape,
    /// `(row, column, entry)` in column-major order.
    entries: Vec<(usize, usize, usize)>,
}

impl RppFilling {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entries(&self) -> &[(usize, usize, usize)] {
        &self.entries
    }

    pub fn entry(&self, r: usize, c: usize) -> Option<usize> {
        self.entries
            .iter()
            .find(|&&(rr, cc, _)| rr == r && cc == c)
            .map(|&(_, _, v)| v)
    }

    /// Column content: entry value ↦ number of columns containing it.
    pub fn weight(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        let mut seen = std::collections::BTreeSet::new();
        for &(_, c, v) in &self.entries {
            if seen.insert((c, v)) {
                *out.entry(v).or_insert(0) += 1;
            }
        }
        out
    }

    /// Exponent vector of `x^T` in `n` variables.
    pub fn monomial(&self, n: usize) -> Vec<u32> {
        let mut e = vec![0u32; n];
        for (v, k) in self.weight() {
            e[v - 1] += k as u32;
        }
        e
    }
}

/// All reverse plane partitions of `sh` with entries in `1..=max_entry`.
///
/// Cells are filled in column-major order; each entry is bounded below by
/// its already-filled left and upper neighbours.
pub fn enumerate_rpp(sh: &SkewShape, max_entry: usize) -> Vec<RppFilling> {
    let mut cells: Vec<(usize, usize)> = sh.cells().collect();
    cells.sort_by_key(|&(r, c)| (c, r));
    let rows = sh.outer().len();
    let mut grid: Vec<Vec<usize>> = (0..rows).map(|r| vec![0; sh.outer().part(r)]).collect();
    let mut out = Vec::new();

    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        sh: &SkewShape,
        max_entry: usize,
        grid: &mut Vec<Vec<usize>>,
        out: &mut Vec<RppFilling>,
    ) {
        if k == cells.len() {
            out.push(RppFilling {
                shape: sh.clone(),
                entries: cells.iter().map(|&(r, c)| (r, c, grid[r][c])).collect(),
            });
            return;
        }
        let (r, c) = cells[k];
        let left = if c > sh.inner().part(r) {
            grid[r][c - 1]
        } else {
            1
        };
        let above = if r > 0 && c >= sh.inner().part(r - 1) {
            grid[r - 1][c]
        } else {
            1
        };
        for v in left.max(above)..=max_entry {
            grid[r][c] = v;
            rec(k + 1, cells, sh, max_entry, grid, out);
        }
        grid[r][c] = 0;
    }

    rec(0, &cells, sh, max_entry, &mut grid, &mut out);
    out
}

/// `g_{λ/μ}(x_1, …, x_n)` by explicit enumeration.
pub fn rpp_polynomial(sh: &SkewShape, n: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(n);
    for t in enumerate_rpp(sh, n) {
        out.add_term(t.monomial(n), &CoeffPoly::one());
    }
    out
}

/// `g_{λ/μ}` by enumerating fillings in `max(1, |λ/μ|)` variables and
/// lifting the symmetric generating polynomial.
pub fn g_skew_by_polynomial(outer: &Partition, inner: &Partition) -> Result<SymFunc, Error> {
    if !inner.is_subset_of(outer) {
        return Ok(SymFunc::zero());
    }
    let sh = SkewShape::new(outer.clone(), inner.clone())?;
    let poly = rpp_polynomial(&sh, sh.size().max(1));
    SymFunc::from_polynomial(&poly)
}

static G_SKEW: LazyLock<Memo<(Partition, Partition), SymFunc>> = LazyLock::new(Memo::new);
static G_SKEW_IN_G: LazyLock<Memo<(Partition, Partition), LinComb<Partition>>> =
    LazyLock::new(Memo::new);
static G_PRODUCT_IN_G: LazyLock<Memo<(Partition, Partition), LinComb<Partition>>> =
    LazyLock::new(Memo::new);

/// Schur expansion of `g_{λ/μ}`; zero when `μ ⊄ λ`.
pub fn g_skew(outer: &Partition, inner: &Partition) -> Arc<SymFunc> {
    G_SKEW.get_or_insert_with(&(outer.clone(), inner.clone()), || {
        if !inner.is_subset_of(outer) {
            return SymFunc::zero();
        }
        let counts = dominant_chain_counts(inner, outer, |sh| Some(sh.column_count()))
            .expect("checked containment");
        let monomials: LinComb<Partition> = counts
            .into_iter()
            .map(|(alpha, k)| (alpha, CoeffPoly::constant(k)))
            .collect();
        SymFunc::from_dominant_monomials(&monomials)
    })
}

/// Schur expansion of `g_λ`.
pub fn g_to_schur(la: &Partition) -> Arc<SymFunc> {
    g_skew(la, &Partition::empty())
}

/// Expansion of `f` in the `g` basis. The transition to Schur functions is
/// unitriangular by degree (`g_λ = s_λ + lower`), so the top-degree Schur
/// terms are peeled off repeatedly.
pub fn schur_to_g(f: &SymFunc) -> LinComb<Partition> {
    let mut rest = f.clone();
    let mut out = LinComb::zero();
    while !rest.is_zero() {
        let top = rest.component(rest.degree());
        for (la, c) in top.iter() {
            out.add_term(la.clone(), c);
            rest = &rest - &g_to_schur(la).scale(c);
        }
    }
    out
}

/// Schur expansion of `Σ a_λ g_λ`.
pub fn g_basis_to_schur(f: &LinComb<Partition>) -> SymFunc {
    f.iter().map(|(la, c)| g_to_schur(la).scale(c)).sum()
}

/// `g_{λ/μ}` in the `g` basis: `ν ↦ c^λ_{μν}`.
pub fn g_skew_in_g(outer: &Partition, inner: &Partition) -> Arc<LinComb<Partition>> {
    G_SKEW_IN_G.get_or_insert_with(&(outer.clone(), inner.clone()), || {
        schur_to_g(&g_skew(outer, inner))
    })
}

/// `g_μ g_ν` in the `g` basis: `λ ↦ d^λ_{μν}`.
pub fn g_product_in_g(mu: &Partition, nu: &Partition) -> Arc<LinComb<Partition>> {
    let key = if mu <= nu {
        (mu.clone(), nu.clone())
    } else {
        (nu.clone(), mu.clone())
    };
    G_PRODUCT_IN_G.get_or_insert_with(&key, || schur_to_g(&(&*g_to_schur(mu) * &*g_to_schur(nu))))
}

fn integer(c: CoeffPoly) -> i64 {
    c.as_i64().expect("structure constants are small integers")
}

/// Coefficient of `g_ν` in `g_{λ/μ}`.
pub fn c_coeff(la: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    integer(g_skew_in_g(la, mu).coeff(nu))
}

/// Coefficient of `g_λ` in `g_μ g_ν`.
pub fn d_coeff(la: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    integer(g_product_in_g(mu, nu).coeff(la))
}

/// `Δ(g_{λ/μ}) = Σ_{μ⊆ν⊆λ} g_{λ/ν} ⊗ g_{ν/μ}` in the `g ⊗ g` basis.
pub fn g_coproduct(sh: &SkewShape) -> LinComb<(Partition, Partition)> {
    let mut out = LinComb::zero();
    for nu in interval(sh.inner(), sh.outer()).expect("skew shape is valid") {
        let left = g_skew_in_g(sh.outer(), &nu);
        let right = g_skew_in_g(&nu, sh.inner());
        for (a, c) in left.iter() {
            for (b, d) in right.iter() {
                out.add_term((a.clone(), b.clone()), &(c * d));
            }
        }
    }
    out
}
