//! Integer partitions, skew shapes and the containment order of Young's lattice.
//!
//! Partitions are stored without trailing zeros. Rows and columns are indexed
//! in English notation: row 0 is the longest part and cell `(r, c)` lies in
//! row `r`, column `c` (both 0-based).
//!
//! The total order on [`Partition`] is *size ascending, then reverse
//! lexicographic*, so `BTreeMap`s keyed by partitions iterate in the
//! canonical output order `[]`, `[1]`, `[2]`, `[1,1]`, `[3]`, `[2,1]`, ...

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; any other zero or an increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_parts_unchecked(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The single-row partition `(k)`; empty for `k = 0`.
    pub fn row(k: usize) -> Self {
        Partition::from_parts_unchecked(vec![k])
    }

    /// The single-column partition `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), reading missing parts as zero.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `self ⊆ other` in Young's lattice.
    pub fn is_subset_of(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Conjugate partition: `λ'_j = #{i : λ_i ≥ j}`.
    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Number of nonempty columns, i.e. the largest part.
    pub fn column_count(&self) -> usize {
        self.part(0)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// Partitions obtained by adding one cell.
    pub fn add_cell_covers(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for r in 0..=self.len() {
            if r == 0 || self.part(r - 1) > self.part(r) {
                let mut parts = self.parts.clone();
                if r == parts.len() {
                    parts.push(1);
                } else {
                    parts[r] += 1;
                }
                out.push(Partition { parts });
            }
        }
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("invalid partition `{s}`"));
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// `true` iff `mu ⊆ la`.
pub fn contains(mu: &Partition, la: &Partition) -> bool {
    mu.is_subset_of(la)
}

/// The skew shape `outer / inner`, with `inner ⊆ outer`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

/// Strip flags of a skew shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StripKind {
    /// No column holds two cells.
    pub horizontal: bool,
    /// No row holds two cells.
    pub vertical: bool,
    /// Both; every cell is a removable corner of the outer shape.
    pub rook: bool,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, Error> {
        if !inner.is_subset_of(&outer) {
            return Err(Error::NotContained {
                inner: inner.to_string(),
                outer: outer.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Cells `(r, c)` with `inner_r ≤ c < outer_r`, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.outer.len())
            .flat_map(move |r| (self.inner.part(r)..self.outer.part(r)).map(move |c| (r, c)))
    }

    /// Number of cells in column `c`.
    pub fn column_height(&self, c: usize) -> usize {
        let col = |p: &Partition| p.parts.iter().take_while(|&&x| x > c).count();
        col(&self.outer) - col(&self.inner)
    }

    /// Number of columns containing at least one cell.
    pub fn column_count(&self) -> usize {
        (0..self.outer.part(0))
            .filter(|&c| self.column_height(c) > 0)
            .count()
    }

    pub fn strip_kind(&self) -> StripKind {
        let horizontal = (0..self.outer.part(0)).all(|c| self.column_height(c) <= 1);
        let vertical = (0..self.outer.len()).all(|r| self.outer.part(r) - self.inner.part(r) <= 1);
        StripKind {
            horizontal,
            vertical,
            rook: horizontal && vertical,
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.split_once('/') {
            Some((outer, inner)) => SkewShape::new(outer.parse()?, inner.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

/// All partitions of `n`, reverse lexicographic.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n` in canonical order.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// The interval `[mu, la]` of Young's lattice in canonical order.
pub fn interval(mu: &Partition, la: &Partition) -> Result<Vec<Partition>, Error> {
    if !mu.is_subset_of(la) {
        return Err(Error::NotContained {
            inner: mu.to_string(),
            outer: la.to_string(),
        });
    }
    // Row r ranges over [max(mu_r, nu_{r+1}), min(la_r, nu_{r-1})]; fill bottom-up.
    let rows = la.len();
    let mut out = Vec::new();
    let mut cur = vec![0; rows];
    fn rec(
        r: usize,
        mu: &Partition,
        la: &Partition,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if r == 0 {
            out.push(Partition::from_parts_unchecked(cur.clone()));
            return;
        }
        let row = r - 1;
        let lo = mu.part(row).max(cur.get(row + 1).copied().unwrap_or(0));
        let hi = la.part(row);
        for v in lo..=hi {
            cur[row] = v;
            rec(row, mu, la, cur, out);
        }
        cur[row] = 0;
    }
    rec(rows, mu, la, &mut cur, &mut out);
    out.sort();
    Ok(out)
}

/// Möbius function of Young's lattice: `(-1)^{|ν/μ|}` on rook strips, else 0.
pub fn mobius(mu: &Partition, nu: &Partition) -> i64 {
    if !mu.is_subset_of(nu) {
        return 0;
    }
    let sh = SkewShape {
        outer: nu.clone(),
        inner: mu.clone(),
    };
    if sh.strip_kind().rook {
        if sh.size().is_multiple_of(2) {
            1
        } else {
            -1
        }
    } else {
        0
    }
}

/// `#{i ≥ 1 : β_i > α_{i+1} and β_i > β_{i+1}}`, the statistic in the skew
/// Pieri coefficients.
pub fn a_statistic(alpha: &Partition, beta: &Partition) -> usize {
    (0..beta.len())
        .filter(|&i| {
            let b = beta.part(i);
            b > alpha.part(i + 1) && b > beta.part(i + 1)
        })
        .count()
}

/// Counts chains `bottom = ν_0 ⊊ ν_1 ⊊ … ⊊ ν_k = top` in Young's lattice whose
/// step weights `weight(ν_i/ν_{i-1})` form a partition `α = (α_1 ≥ … ≥ α_k)`,
/// returning the count for every such `α`.
///
/// `weight` returns `None` for steps that are not allowed and must return a
/// positive value otherwise. With `weight = column_count` this counts reverse
/// plane partitions by their column content; with `weight = size` restricted
/// to horizontal strips it gives Kostka numbers.
pub fn dominant_chain_counts(
    bottom: &Partition,
    top: &Partition,
    weight: impl Fn(&SkewShape) -> Option<usize>,
) -> Result<std::collections::BTreeMap<Partition, u128>, Error> {
    let states = interval(bottom, top)?;
    let n = states.len();
    let top_idx = n - 1;
    let max_w = top.size() - bottom.size();
    let mut steps: Vec<Vec<(usize, usize)>> = vec![Vec::new(); max_w + 1];
    for (i, lo) in states.iter().enumerate() {
        for (j, hi) in states.iter().enumerate().skip(i + 1) {
            if hi.size() > lo.size() && lo.is_subset_of(hi) {
                let sh = SkewShape {
                    outer: hi.clone(),
                    inner: lo.clone(),
                };
                if let Some(w) = weight(&sh) {
                    assert!(w > 0 && w <= max_w, "step weight out of range");
                    steps[w].push((i, j));
                }
            }
        }
    }

    let mut out = std::collections::BTreeMap::new();
    let mut start = vec![0u128; n];
    start[0] = 1;
    let mut prefix = Vec::new();
    fn dfs(
        counts: &[u128],
        max_part: usize,
        prefix: &mut Vec<usize>,
        steps: &[Vec<(usize, usize)>],
        top_idx: usize,
        out: &mut std::collections::BTreeMap<Partition, u128>,
    ) {
        if counts[top_idx] > 0 {
            out.insert(
                Partition::from_parts_unchecked(prefix.clone()),
                counts[top_idx],
            );
        }
        for a in 1..=max_part {
            let mut next = vec![0u128; counts.len()];
            let mut any = false;
            for &(i, j) in &steps[a] {
                if counts[i] != 0 {
                    next[j] = next[j]
                        .checked_add(counts[i])
                        .expect("chain count overflow");
                    any = true;
                }
            }
            if any {
                prefix.push(a);
                dfs(&next, a, prefix, steps, top_idx, out);
                prefix.pop();
            }
        }
    }
    dfs(&start, max_w, &mut prefix, &steps, top_idx, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sk(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn containment() {
        assert!(contains(&p("[1]"), &p("[3,2,1]")));
        assert!(!contains(&p("[2,2]"), &p("[3,1]")));
        assert!(contains(&Partition::empty(), &p("[4,1]")));
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p("[3,1]").transpose(), p("[2,1,1]"));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p("[2,2]").transpose(), p("[2,2]"));
    }

    #[test]
    fn column_counts() {
        assert_eq!(sk("[3,2,1]/[1]").column_count(), 3);
        assert_eq!(sk("[2,2]/[1,1]").column_count(), 1);
        assert_eq!(sk("[3,1]/[3,1]").column_count(), 0);
    }

    #[test]
    fn strip_kinds() {
        let k = sk("[2,1]/[1]").strip_kind();
        assert!(k.horizontal && k.vertical && k.rook);
        let k = sk("[2,2]/[1,1]").strip_kind();
        assert!(!k.horizontal && k.vertical && !k.rook);
        let k = sk("[2]").strip_kind();
        assert!(k.horizontal && !k.vertical && !k.rook);
    }

    #[test]
    fn intervals() {
        assert_eq!(
            interval(&Partition::empty(), &p("[1,1]")).unwrap(),
            vec![p("[]"), p("[1]"), p("[1,1]")]
        );
        assert_eq!(
            interval(&p("[1]"), &p("[2,1]")).unwrap(),
            vec![p("[1]"), p("[2]"), p("[1,1]"), p("[2,1]")]
        );
        assert_eq!(
            interval(&p("[3,1]"), &p("[3,1]")).unwrap(),
            vec![p("[3,1]")]
        );
        assert_eq!(interval(&Partition::empty(), &p("[2,1]")).unwrap().len(), 5);
        assert!(interval(&p("[2]"), &p("[1,1]")).is_err());
    }

    #[test]
    fn mobius_values() {
        assert_eq!(mobius(&p("[1]"), &p("[2,1]")), 1);
        assert_eq!(mobius(&Partition::empty(), &p("[2]")), 0);
        assert_eq!(mobius(&p("[2,1]"), &p("[2,1]")), 1);
        assert_eq!(mobius(&p("[2]"), &p("[1,1]")), 0);
    }

    #[test]
    fn a_statistic_examples() {
        assert_eq!(a_statistic(&p("[3,1]"), &p("[2,1]")), 2);
        assert_eq!(a_statistic(&Partition::empty(), &Partition::empty()), 0);
        assert_eq!(a_statistic(&p("[5]"), &Partition::empty()), 0);
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_up_to(0), vec![Partition::empty()]);
        assert_eq!(
            partitions_up_to(2),
            vec![p("[]"), p("[1]"), p("[2]"), p("[1,1]")]
        );
        assert_eq!(partitions_up_to(4).len(), 12);
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(p("[]").to_string(), "[]");
        assert_eq!(p(" [3, 2,1] ").to_string(), "[3,2,1]");
        assert_eq!(sk("[3,2,1]/[1]").to_string(), "[3,2,1]/[1]");
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[1]/[2]".parse::<SkewShape>().is_err());
        assert!("3,2".parse::<Partition>().is_err());
    }

    #[test]
    fn transpose_involution_and_containment_duality() {
        let all = partitions_up_to(8);
        for la in partitions_up_to(10) {
            assert_eq!(la.transpose().transpose(), la);
        }
        for mu in &all {
            for la in &all {
                assert_eq!(
                    mu.is_subset_of(la),
                    mu.transpose().is_subset_of(&la.transpose())
                );
            }
        }
    }

    #[test]
    fn rook_iff_vertical_with_one_cell_per_column() {
        for la in partitions_up_to(7) {
            for mu in interval(&Partition::empty(), &la).unwrap() {
                let sh = SkewShape::new(la.clone(), mu).unwrap();
                let k = sh.strip_kind();
                assert!(!k.rook || (k.horizontal && k.vertical));
                assert_eq!(k.rook, k.vertical && sh.size() == sh.column_count());
            }
        }
    }

    #[test]
    fn mobius_inversion() {
        for la in partitions_up_to(7) {
            for mu in interval(&Partition::empty(), &la).unwrap() {
                let total: i64 = interval(&mu, &la)
                    .unwrap()
                    .iter()
                    .map(|nu| mobius(&mu, nu))
                    .sum();
                assert_eq!(total, i64::from(mu == la), "[{mu}, {la}]");
            }
        }
    }

    #[test]
    fn interval_matches_brute_force() {
        for la in partitions_up_to(6) {
            let below: Vec<Partition> = partitions_up_to(la.size())
                .into_iter()
                .filter(|nu| nu.is_subset_of(&la))
                .collect();
            for mu in &below {
                let brute: Vec<Partition> = below
                    .iter()
                    .filter(|nu| mu.is_subset_of(nu))
                    .cloned()
                    .collect();
                assert_eq!(interval(mu, &la).unwrap(), brute);
            }
        }
    }
}
