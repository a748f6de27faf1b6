use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::num::{fmt_q, q, rational_vec, Q};

/// Coordinate system a [`Weight`] is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    /// Coordinates on the standard basis `L_1, ..., L_m` of the ambient space.
    Ambient,
    /// Coordinates on the fundamental weights (Dynkin labels).
    Fundamental,
}

/// An exact rational weight vector. Weights are plain values: which root
/// system they belong to is checked when they are handed to one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    basis: Basis,
    #[serde(with = "rational_vec")]
    coords: Vec<Q>,
}

impl Weight {
    pub fn new(basis: Basis, coords: Vec<Q>) -> Self {
        Self { basis, coords }
    }

    pub fn ambient(coords: Vec<Q>) -> Self {
        Self::new(Basis::Ambient, coords)
    }

    pub fn fundamental(coords: Vec<Q>) -> Self {
        Self::new(Basis::Fundamental, coords)
    }

    pub fn ambient_ints(xs: &[i64]) -> Self {
        Self::ambient(xs.iter().map(|&x| q(x)).collect())
    }

    pub fn fundamental_ints(xs: &[i64]) -> Self {
        Self::fundamental(xs.iter().map(|&x| q(x)).collect())
    }

    pub fn zero(basis: Basis, len: usize) -> Self {
        Self::new(basis, vec![Q::zero(); len])
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    fn assert_compatible(&self, other: &Weight) {
        assert!(
            self.basis == other.basis && self.coords.len() == other.coords.len(),
            "incompatible weights {self} and {other}"
        );
    }

    /// Coordinate-wise sum. Panics if the two weights use different bases or
    /// lengths.
    pub fn plus(&self, other: &Weight) -> Weight {
        self.assert_compatible(other);
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Weight::new(self.basis, coords)
    }

    pub fn minus(&self, other: &Weight) -> Weight {
        self.assert_compatible(other);
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Weight::new(self.basis, coords)
    }

    pub fn scaled(&self, factor: &Q) -> Weight {
        Weight::new(self.basis, self.coords.iter().map(|x| x * factor).collect())
    }

    pub fn negated(&self) -> Weight {
        Weight::new(self.basis, self.coords.iter().map(|x| -x).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self.coords.iter().map(fmt_q).collect::<Vec<_>>().join(", ");
        match self.basis {
            Basis::Ambient => write!(f, "({body})"),
            Basis::Fundamental => write!(f, "[{body}]"),
        }
    }
}

/// Finite multiset of weights with strictly positive multiplicities, kept in
/// the canonical order of [`Weight`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightMultiset {
    entries: BTreeMap<Weight, u64>,
}

impl WeightMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, w: Weight, mult: u64) {
        if mult > 0 {
            *self.entries.entry(w).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    /// Sum of multiplicities.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Number of distinct weights.
    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.entries.iter().map(|(w, &m)| (w, m))
    }

    /// Every weight repeated according to its multiplicity, in canonical order.
    pub fn expanded(&self) -> Vec<Weight> {
        self.iter()
            .flat_map(|(w, m)| std::iter::repeat_n(w.clone(), m as usize))
            .collect()
    }

    pub fn map<F: FnMut(&Weight) -> Weight>(&self, mut f: F) -> WeightMultiset {
        let mut out = WeightMultiset::new();
        for (w, m) in self.iter() {
            out.insert(f(w), m);
        }
        out
    }

    pub fn union(&self, other: &WeightMultiset) -> WeightMultiset {
        let mut out = self.clone();
        for (w, m) in other.iter() {
            out.insert(w.clone(), m);
        }
        out
    }

    /// `true` when `w` and `-w` occur with equal multiplicity for every `w`.
    pub fn is_negation_closed(&self) -> bool {
        self.iter().all(|(w, m)| self.multiplicity(&w.negated()) == m)
    }

    /// Sum of all weights counted with multiplicity, or `None` when empty.
    pub fn weighted_sum(&self) -> Option<Weight> {
        let mut iter = self.iter();
        let (first, m) = iter.next()?;
        let mut acc = first.scaled(&q(m as i64));
        for (w, m) in iter {
            acc = acc.plus(&w.scaled(&q(m as i64)));
        }
        Some(acc)
    }

    /// Largest weight in the canonical order, used only for display.
    pub fn last(&self) -> Option<&Weight> {
        self.entries.keys().next_back()
    }

    /// Common basis and coordinate length of all entries, if they agree.
    pub fn shape(&self) -> Option<(Basis, usize)> {
        let mut shapes = self.entries.keys().map(|w| (w.basis(), w.len()));
        let first = shapes.next()?;
        shapes.all(|s| s == first).then_some(first)
    }

    pub fn max_abs_coord(&self) -> Q {
        self.entries
            .keys()
            .flat_map(|w| w.coords().iter().map(Signed::abs))
            .max()
            .unwrap_or_else(Q::zero)
    }
}

impl FromIterator<Weight> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = Weight>>(iter: I) -> Self {
        let mut out = WeightMultiset::new();
        for w in iter {
            out.insert(w, 1);
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct Entry {
    weight: Weight,
    multiplicity: u64,
}

impl Serialize for WeightMultiset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<Entry> = self
            .iter()
            .map(|(w, m)| Entry { weight: w.clone(), multiplicity: m })
            .collect();
        entries.serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightMultiset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let entries = Vec::<Entry>::deserialize(d)?;
        let mut out = WeightMultiset::new();
        for e in entries {
            if e.multiplicity == 0 {
                return Err(serde::de::Error::custom("zero multiplicity"));
            }
            out.insert(e.weight, e.multiplicity);
        }
        Ok(out)
    }
}
