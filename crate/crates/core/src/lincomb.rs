//! Finite formal linear combinations with ℤ[t] coefficients.

use std::collections::btree_map::{self, BTreeMap};
use std::ops::{Add, Neg, Sub};

use crate::coeff::CoeffPoly;

/// A finitely supported map `K → ℤ[t]` with no zero entries.
///
/// Used for expansions in the `g` basis, for tensors `Λ ⊗ Λ` and for
/// formal sums of skew shapes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, CoeffPoly>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: K, coeff: CoeffPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(key, &coeff);
        out
    }

    /// Adds `coeff·key`, dropping the entry if it cancels.
    pub fn add_term(&mut self, key: K, coeff: &CoeffPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn coeff(&self, key: &K) -> CoeffPoly {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn get(&self, key: &K) -> Option<&CoeffPoly> {
        self.terms.get(key)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, CoeffPoly> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, CoeffPoly> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &CoeffPoly) -> Self {
        self.map_coeffs(|x| x * c)
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&CoeffPoly) -> CoeffPoly) -> Self {
        self.iter().map(|(k, c)| (k.clone(), f(c))).collect()
    }

    /// Keeps the terms whose key satisfies `keep`.
    pub fn filter_keys(&self, keep: impl Fn(&K) -> bool) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `t ↦ q` in every coefficient.
    pub fn substitute_t(&self, q: &CoeffPoly) -> Self {
        self.map_coeffs(|c| c.substitute(q))
    }

    /// Linear extension of `key ↦ image(key)`.
    pub fn map_linear<L: Ord + Clone>(
        &self,
        mut image: impl FnMut(&K) -> LinComb<L>,
    ) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            for (l, d) in image(k).iter() {
                out.add_term(l.clone(), &(c * d));
            }
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, CoeffPoly)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, CoeffPoly)>>(iter: I) -> Self {
        let mut out = LinComb::zero();
        for (k, c) in iter {
            out.add_term(k, &c);
        }
        out
    }
}

impl<K: Ord + Clone> IntoIterator for LinComb<K> {
    type Item = (K, CoeffPoly);
    type IntoIter = btree_map::IntoIter<K, CoeffPoly>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord + Clone> Add<&'a LinComb<K>> for &'a LinComb<K> {
    type Output = LinComb<K>;

    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        for (k, c) in rhs.iter() {
            out.add_term(k.clone(), c);
        }
        out
    }
}

impl<'a, K: Ord + Clone> Sub<&'a LinComb<K>> for &'a LinComb<K> {
    type Output = LinComb<K>;

    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        for (k, c) in rhs.iter() {
            out.add_term(k.clone(), &-c);
        }
        out
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;

    fn neg(self) -> LinComb<K> {
        self.map_coeffs(|c| -c)
    }
}

impl<K: Ord + Clone + std::fmt::Debug> std::fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}
