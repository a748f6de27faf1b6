//! Root systems of the simple types A-G in explicit ambient coordinates.
//!
//! Simple roots follow the Bourbaki numbering. Type `A_n` lives in the
//! quotient of `Q^{n+1}` by `(1, ..., 1)`; ambient representatives are
//! normalized so that their last coordinate is zero. `G_2` sits in the
//! sum-zero plane of `Q^3`, `E_6` and `E_7` inside the `E_8` space `Q^8`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::{big_uint, dot, factorial, invert, q, q_frac, scale_to_integers, to_i64, Q};
use crate::weight::{Basis, Weight, WeightMultiset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] =
        [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let (Some(c), None) = (chars.next(), chars.next()) else {
            return Err(Error::Parse(format!("unknown family {s:?}")));
        };
        Family::ALL
            .into_iter()
            .find(|f| f.letter() == c.to_ascii_uppercase())
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// A simple Lie type such as `E8`. Constructed through [`SimpleType::new`],
/// which only admits the standard non-overlapping ranges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let legal = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if legal {
            Ok(Self { family, rank })
        } else {
            Err(Error::IllegalType(format!("{}{}", family, rank)))
        }
    }

    /// Also admits the low-rank aliases `B1` and `D2` used for `so_3` and
    /// `so_4` inside orthogonal pairs.
    pub(crate) fn unchecked(family: Family, rank: usize) -> Self {
        Self { family, rank }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Name of the complex Lie algebra, e.g. `sl_3`, `so_7`, `sp_4`, `e_8`.
    pub fn algebra_name(self) -> String {
        let n = self.rank;
        match self.family {
            Family::A => format!("sl_{}", n + 1),
            Family::B => format!("so_{}", 2 * n + 1),
            Family::C => format!("sp_{}", 2 * n),
            Family::D => format!("so_{}", 2 * n),
            Family::E => format!("e_{n}"),
            Family::F => "f_4".to_string(),
            Family::G => "g_2".to_string(),
        }
    }

    /// Order of the Weyl group from the closed formulas.
    pub fn weyl_group_order(self) -> BigUint {
        let n = self.rank as u64;
        match self.family {
            Family::A => factorial(n + 1),
            Family::B | Family::C => (BigUint::one() << n) * factorial(n),
            Family::D => (BigUint::one() << (n - 1)) * factorial(n),
            Family::E => BigUint::from(match n {
                6 => 51_840u64,
                7 => 2_903_040,
                _ => 696_729_600,
            }),
            Family::F => BigUint::from(1152u32),
            Family::G => BigUint::from(12u32),
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    /// Accepts `E8`, `e8`, `E_8` or `E 8`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let split = s
            .char_indices()
            .nth(1)
            .map(|(i, _)| i)
            .ok_or_else(|| Error::Parse(format!("bad simple type {s:?}")))?;
        let family: Family = s[..split].parse()?;
        let rest = s[split..].trim_start_matches(['_', ' ']);
        let rank: usize =
            rest.parse().map_err(|_| Error::Parse(format!("bad simple type {s:?}")))?;
        SimpleType::new(family, rank)
    }
}

impl Serialize for SimpleType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SimpleType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn unit(len: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); len];
    v[i] = q(1);
    v
}

fn diff(len: usize, i: usize, j: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); len];
    v[i] = q(1);
    v[j] = q(-1);
    v
}

fn e8_simple_roots() -> Vec<Vec<Q>> {
    let half = q_frac(1, 2);
    let mut a1 = vec![-half.clone(); 8];
    a1[0] = half.clone();
    a1[7] = half;
    let mut a2 = unit(8, 0);
    a2[1] = q(1);
    let mut roots = vec![a1, a2, diff(8, 1, 0)];
    for i in 2..7 {
        roots.push(diff(8, i, i - 1));
    }
    roots
}

/// Simple roots in ambient coordinates and the ambient dimension.
fn simple_roots_for(t: SimpleType) -> (usize, Vec<Vec<Q>>) {
    let n = t.rank;
    match t.family {
        Family::A => (n + 1, (0..n).map(|i| diff(n + 1, i, i + 1)).collect()),
        Family::B | Family::C | Family::D => {
            let mut roots: Vec<Vec<Q>> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            let last = match t.family {
                Family::B => unit(n, n - 1),
                Family::C => {
                    let mut v = unit(n, n - 1);
                    v[n - 1] = q(2);
                    v
                }
                _ => {
                    let mut v = unit(n, n - 1);
                    v[n - 2] = q(1);
                    v
                }
            };
            roots.push(last);
            (n, roots)
        }
        Family::G => {
            let a1 = diff(3, 0, 1);
            let a2 = vec![q(-2), q(1), q(1)];
            (3, vec![a1, a2])
        }
        Family::F => {
            let half = q_frac(1, 2);
            let a4 = vec![half.clone(), -half.clone(), -half.clone(), -half];
            (4, vec![diff(4, 1, 2), diff(4, 2, 3), unit(4, 3), a4])
        }
        Family::E => (8, e8_simple_roots().into_iter().take(n).collect()),
    }
}

/// Immutable root-system data. See the module docs for the coordinates.
#[derive(Clone, Debug)]
pub struct RootSystem {
    simple_type: SimpleType,
    ambient_dim: usize,
    quotient: bool,
    simple_roots: Vec<Weight>,
    simple_norms: Vec<Q>,
    positive_roots: Vec<Weight>,
    positive_coeffs: Vec<Vec<i64>>,
    fundamental_weights: Vec<Weight>,
    cartan: Vec<Vec<i64>>,
    inverse_cartan: Vec<Vec<Q>>,
    fundamental_gram: Vec<Vec<Q>>,
    inverse_cartan_scaled: (Vec<Vec<i64>>, i64),
    gram_scaled: (Vec<Vec<i64>>, i64),
    weyl_vector: Weight,
    weyl_group_order: BigUint,
}

impl RootSystem {
    pub fn new(t: SimpleType) -> Self {
        let (ambient_dim, simple) = simple_roots_for(t);
        let quotient = t.family == Family::A;
        let rank = t.rank;
        let raw_inner = |a: &[Q], b: &[Q]| -> Q {
            let base = dot(a, b);
            if quotient {
                let sa: Q = a.iter().sum();
                let sb: Q = b.iter().sum();
                base - sa * sb / q(ambient_dim as i64)
            } else {
                base
            }
        };
        let simple_norms: Vec<Q> = simple.iter().map(|a| raw_inner(a, a)).collect();
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let v = q(2) * raw_inner(&simple[i], &simple[j]) / &simple_norms[j];
                        to_i64(&v).expect("Cartan entries are integers")
                    })
                    .collect()
            })
            .collect();
        let cartan_q: Vec<Vec<Q>> =
            cartan.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        let inverse_cartan = invert(&cartan_q).expect("Cartan matrix is invertible");

        let combine = |coeffs: &[Q]| -> Vec<Q> {
            let mut v = vec![Q::zero(); ambient_dim];
            for (c, root) in coeffs.iter().zip(&simple) {
                for (x, r) in v.iter_mut().zip(root) {
                    *x += c * r;
                }
            }
            canonical(quotient, v)
        };

        let positive_coeffs = positive_root_coefficients(&cartan);
        let positive_roots: Vec<Weight> = positive_coeffs
            .iter()
            .map(|c| Weight::ambient(combine(&c.iter().map(|&x| q(x)).collect::<Vec<_>>())))
            .collect();
        let fundamental_raw: Vec<Vec<Q>> = inverse_cartan.iter().map(|row| combine(row)).collect();
        let fundamental_gram: Vec<Vec<Q>> = fundamental_raw
            .iter()
            .map(|a| fundamental_raw.iter().map(|b| raw_inner(a, b)).collect())
            .collect();
        let fundamental_weights: Vec<Weight> =
            fundamental_raw.into_iter().map(Weight::ambient).collect();

        let mut rho = vec![Q::zero(); ambient_dim];
        for r in &positive_roots {
            for (x, y) in rho.iter_mut().zip(r.coords()) {
                *x += y;
            }
        }
        let rho = canonical(quotient, rho.into_iter().map(|x| x / q(2)).collect());

        Self {
            simple_type: t,
            ambient_dim,
            quotient,
            simple_roots: simple.into_iter().map(|r| Weight::ambient(canonical(quotient, r))).collect(),
            simple_norms,
            positive_roots,
            positive_coeffs,
            fundamental_weights,
            cartan,
            inverse_cartan_scaled: scale_to_integers(&inverse_cartan),
            gram_scaled: scale_to_integers(&fundamental_gram),
            inverse_cartan,
            fundamental_gram,
            weyl_vector: Weight::ambient(rho),
            weyl_group_order: t.weyl_group_order(),
        }
    }

    /// Root system of `so_m` for `m >= 3`: `B_{(m-1)/2}` for odd `m` and
    /// `D_{m/2}` for even `m`, including the low-rank cases `so_3 = B_1` and
    /// `so_4 = D_2`.
    pub fn orthogonal(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::IllegalParameter(format!("so_{m} is not semisimple")));
        }
        let t = if m % 2 == 1 {
            SimpleType::unchecked(Family::B, (m - 1) / 2)
        } else {
            SimpleType::unchecked(Family::D, m / 2)
        };
        Ok(Self::new(t))
    }

    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn rank(&self) -> usize {
        self.simple_type.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// `true` for type A, whose ambient space is a quotient.
    pub fn is_quotient(&self) -> bool {
        self.quotient
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// Positive roots as nonnegative integer combinations of simple roots,
    /// in the same order as [`RootSystem::positive_roots`].
    pub fn positive_root_coefficients(&self) -> &[Vec<i64>] {
        &self.positive_coeffs
    }

    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental_weights
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn inverse_cartan(&self) -> &[Vec<Q>] {
        &self.inverse_cartan
    }

    /// Inner products `(w_i, w_j)` of the fundamental weights.
    pub fn fundamental_gram(&self) -> &[Vec<Q>] {
        &self.fundamental_gram
    }

    pub fn simple_root_norms(&self) -> &[Q] {
        &self.simple_norms
    }

    pub fn weyl_vector(&self) -> &Weight {
        &self.weyl_vector
    }

    pub fn weyl_group_order(&self) -> &BigUint {
        &self.weyl_group_order
    }

    /// `dim g = 2 |positive roots| + rank`.
    pub fn algebra_dim(&self) -> BigUint {
        BigUint::from(2 * self.positive_roots.len() + self.rank())
    }

    /// Root of maximal height. For the non-simple `D_2` this is one of the
    /// two orthogonal simple roots.
    pub fn highest_root(&self) -> &Weight {
        self.positive_roots.last().expect("root systems are nonempty")
    }

    /// Coroot of the `i`-th positive root in simple-coroot coordinates.
    pub fn positive_coroot_coefficients(&self, i: usize) -> Vec<Q> {
        let alpha = &self.positive_roots[i];
        let norm = self.ambient_inner(alpha.coords(), alpha.coords());
        self.positive_coeffs[i]
            .iter()
            .zip(&self.simple_norms)
            .map(|(&c, n)| q(c) * n / &norm)
            .collect()
    }

    /// Inner product on ambient coordinate vectors (quotient-aware for A).
    pub fn ambient_inner(&self, a: &[Q], b: &[Q]) -> Q {
        let base = dot(a, b);
        if self.quotient {
            let sa: Q = a.iter().sum();
            let sb: Q = b.iter().sum();
            base - sa * sb / q(self.ambient_dim as i64)
        } else {
            base
        }
    }

    fn check_shape(&self, w: &Weight) -> Result<()> {
        let expected = match w.basis() {
            Basis::Ambient => self.ambient_dim,
            Basis::Fundamental => self.rank(),
        };
        if w.len() == expected {
            Ok(())
        } else {
            Err(Error::BasisMismatch(format!(
                "{w} has {} coordinates, {} expects {expected} in the {:?} basis",
                w.len(),
                self.simple_type,
                w.basis()
            )))
        }
    }

    /// Rational Dynkin labels `<w, alpha_i^vee>` of a weight in either basis.
    pub fn labels(&self, w: &Weight) -> Result<Vec<Q>> {
        self.check_shape(w)?;
        match w.basis() {
            Basis::Fundamental => Ok(w.coords().to_vec()),
            Basis::Ambient => {
                let labels: Vec<Q> = self
                    .simple_roots
                    .iter()
                    .zip(&self.simple_norms)
                    .map(|(a, n)| q(2) * self.ambient_inner(w.coords(), a.coords()) / n)
                    .collect();
                if !self.quotient {
                    let back = self.ambient_from_labels(&labels);
                    if back != w.coords() {
                        return Err(Error::BasisMismatch(format!(
                            "{w} is not in the span of the roots of {}",
                            self.simple_type
                        )));
                    }
                }
                Ok(labels)
            }
        }
    }

    /// Integral Dynkin labels, or `NotIntegral`.
    pub fn int_labels(&self, w: &Weight) -> Result<Vec<i64>> {
        let labels = self.labels(w)?;
        labels
            .iter()
            .map(to_i64)
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::NotIntegral(w.to_string()))
    }

    fn ambient_from_labels(&self, labels: &[Q]) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.ambient_dim];
        for (l, fw) in labels.iter().zip(&self.fundamental_weights) {
            for (x, y) in v.iter_mut().zip(fw.coords()) {
                *x += l * y;
            }
        }
        canonical(self.quotient, v)
    }

    pub fn to_fundamental(&self, w: &Weight) -> Result<Weight> {
        Ok(Weight::fundamental(self.labels(w)?))
    }

    /// Canonical ambient representative of a weight given in either basis.
    pub fn to_ambient(&self, w: &Weight) -> Result<Weight> {
        let labels = self.labels(w)?;
        Ok(Weight::ambient(self.ambient_from_labels(&labels)))
    }

    pub fn in_basis(&self, w: &Weight, basis: Basis) -> Result<Weight> {
        match basis {
            Basis::Ambient => self.to_ambient(w),
            Basis::Fundamental => self.to_fundamental(w),
        }
    }

    pub fn weight_from_labels(&self, labels: &[i64], basis: Basis) -> Weight {
        let labels: Vec<Q> = labels.iter().map(|&x| q(x)).collect();
        match basis {
            Basis::Fundamental => Weight::fundamental(labels),
            Basis::Ambient => Weight::ambient(self.ambient_from_labels(&labels)),
        }
    }

    pub fn inner(&self, a: &Weight, b: &Weight) -> Result<Q> {
        let a = self.to_ambient(a)?;
        let b = self.to_ambient(b)?;
        Ok(self.ambient_inner(a.coords(), b.coords()))
    }

    /// Simple reflection `s_i` acting on Dynkin labels.
    pub fn reflect_labels(&self, labels: &[i64], i: usize) -> Vec<i64> {
        let c = labels[i];
        labels.iter().zip(&self.cartan[i]).map(|(&l, &a)| l - c * a).collect()
    }

    /// The unique dominant element of the Weyl orbit of `labels`.
    pub fn dominant_labels(&self, labels: &[i64]) -> Vec<i64> {
        let mut cur = labels.to_vec();
        while let Some(i) = cur.iter().position(|&l| l < 0) {
            cur = self.reflect_labels(&cur, i);
        }
        cur
    }

    /// Expresses an integral label vector that lies in the root lattice as
    /// simple-root coefficients, or `None` if it is not in the root lattice.
    pub fn root_coefficients(&self, labels: &[i64]) -> Option<Vec<i64>> {
        let (inv, d) = &self.inverse_cartan_scaled;
        (0..self.rank())
            .map(|j| {
                let c: i128 = labels.iter().zip(inv).map(|(&l, row)| i128::from(l) * i128::from(row[j])).sum();
                let d = i128::from(*d);
                (c % d == 0).then(|| i64::try_from(c / d).expect("root coefficient fits in i64"))
            })
            .collect()
    }

    /// Gram matrix of the fundamental weights scaled by its common
    /// denominator, for integer inner products of label vectors.
    pub(crate) fn scaled_fundamental_gram(&self) -> &(Vec<Vec<i64>>, i64) {
        &self.gram_scaled
    }

    /// Labels of the `i`-th simple root (row `i` of the Cartan matrix).
    pub fn simple_root_labels(&self, i: usize) -> &[i64] {
        &self.cartan[i]
    }

    /// Labels of every positive root, in the stored order.
    pub fn positive_root_labels(&self) -> Vec<Vec<i64>> {
        self.positive_coeffs
            .iter()
            .map(|c| {
                (0..self.rank())
                    .map(|k| c.iter().zip(&self.cartan).map(|(&cj, row)| cj * row[k]).sum())
                    .collect()
            })
            .collect()
    }

    /// Weights of the adjoint representation: every root once and zero with
    /// multiplicity equal to the rank.
    pub fn adjoint_weights(&self, basis: Basis) -> WeightMultiset {
        let mut out = WeightMultiset::new();
        for labels in self.positive_root_labels() {
            let neg: Vec<i64> = labels.iter().map(|x| -x).collect();
            out.insert(self.weight_from_labels(&labels, basis), 1);
            out.insert(self.weight_from_labels(&neg, basis), 1);
        }
        out.insert(self.weight_from_labels(&vec![0; self.rank()], basis), self.rank() as u64);
        out
    }

    pub fn describe(&self) -> RootSystemDescription {
        RootSystemDescription {
            simple_type: self.simple_type.to_string(),
            algebra: self.simple_type.algebra_name(),
            rank: self.rank(),
            ambient_dim: self.ambient_dim,
            algebra_dim: self.algebra_dim(),
            weyl_group_order: self.weyl_group_order.clone(),
            cartan_matrix: self.cartan.clone(),
            simple_roots: self.simple_roots.clone(),
            fundamental_weights: self.fundamental_weights.clone(),
            weyl_vector: self.weyl_vector.clone(),
            positive_root_count: self.positive_roots.len(),
        }
    }
}

/// JSON-friendly summary of a root system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemDescription {
    #[serde(rename = "type")]
    pub simple_type: String,
    pub algebra: String,
    pub rank: usize,
    pub ambient_dim: usize,
    #[serde(with = "big_uint")]
    pub algebra_dim: BigUint,
    #[serde(with = "big_uint")]
    pub weyl_group_order: BigUint,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub simple_roots: Vec<Weight>,
    pub fundamental_weights: Vec<Weight>,
    pub weyl_vector: Weight,
    pub positive_root_count: usize,
}

fn canonical(quotient: bool, mut v: Vec<Q>) -> Vec<Q> {
    if quotient {
        if let Some(last) = v.last().cloned() {
            for x in v.iter_mut() {
                *x -= &last;
            }
        }
    }
    v
}

/// All positive roots as simple-root coefficient vectors, by closing the
/// simple roots under simple reflections. Sorted by height, then
/// lexicographically.
fn positive_root_coefficients(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rank = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..rank {
        let mut e = vec![0; rank];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(root) = queue.pop_front() {
        for i in 0..rank {
            let pairing: i64 = (0..rank).map(|j| root[j] * cartan[j][i]).sum();
            if pairing == 0 {
                continue;
            }
            let mut next = root.clone();
            next[i] -= pairing;
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut positive: Vec<Vec<i64>> =
        seen.into_iter().filter(|c| c.iter().all(|&x| x >= 0)).collect();
    positive.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| a.cmp(b))
    });
    positive
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn legal_types() {
        assert!(SimpleType::new(Family::A, 0).is_err());
        assert!(SimpleType::new(Family::B, 1).is_err());
        assert!(SimpleType::new(Family::D, 2).is_err());
        assert!(SimpleType::new(Family::E, 9).is_err());
        assert!(SimpleType::new(Family::F, 3).is_err());
        assert!(SimpleType::new(Family::G, 2).is_ok());
        assert_eq!("e_8".parse::<SimpleType>().unwrap().to_string(), "E8");
        assert!(matches!("G3".parse::<SimpleType>(), Err(Error::IllegalType(_))));
        assert!(matches!("X3".parse::<SimpleType>(), Err(Error::Parse(_))));
    }

    #[test]
    fn small_examples() {
        let a1 = rs("A1");
        assert_eq!(a1.positive_roots().len(), 1);
        assert_eq!(a1.weyl_group_order(), &BigUint::from(2u32));
        assert_eq!(a1.algebra_dim(), BigUint::from(3u32));
        let a2 = rs("A2");
        assert_eq!(a2.positive_roots().len(), 3);
        assert_eq!(a2.algebra_dim(), BigUint::from(8u32));
        assert_eq!(rs("E8").positive_roots().len(), 120);
        assert_eq!(rs("E8").algebra_dim(), BigUint::from(248u32));
        assert_eq!(rs("F4").algebra_dim(), BigUint::from(52u32));
        assert_eq!(rs("E6").algebra_dim(), BigUint::from(78u32));
        assert_eq!(rs("A4").weyl_group_order(), &BigUint::from(120u32));
    }

    #[test]
    fn cartan_shape_and_duality() {
        for t in ["A3", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8"] {
            let r = rs(t);
            let n = r.rank();
            for i in 0..n {
                assert_eq!(r.cartan_matrix()[i][i], 2);
                for j in 0..n {
                    if i != j {
                        assert!(r.cartan_matrix()[i][j] <= 0);
                    }
                }
                let labels = r.labels(&r.fundamental_weights()[i]).unwrap();
                for (j, l) in labels.iter().enumerate() {
                    assert_eq!(*l, q(i64::from(i == j)), "{t}");
                }
            }
            let sum = r
                .fundamental_weights()
                .iter()
                .skip(1)
                .fold(r.fundamental_weights()[0].clone(), |acc, w| acc.plus(w));
            assert_eq!(&sum, r.weyl_vector(), "{t}");
        }
    }

    #[test]
    fn g2_has_triple_bond() {
        let g = rs("G2");
        assert_eq!(g.cartan_matrix(), &[vec![2, -1], vec![-3, 2]]);
        assert_eq!(g.positive_roots().len(), 6);
    }

    #[test]
    fn a_type_canonical_form() {
        let a = rs("A2");
        let w = Weight::fundamental_ints(&[1, 0]);
        assert_eq!(a.to_ambient(&w).unwrap(), Weight::ambient_ints(&[1, 0, 0]));
        let shifted = Weight::ambient_ints(&[3, 2, 2]);
        assert_eq!(a.to_ambient(&shifted).unwrap(), Weight::ambient_ints(&[1, 0, 0]));
    }

    #[test]
    fn weights_outside_the_span_are_rejected() {
        let g = rs("G2");
        assert!(matches!(
            g.labels(&Weight::ambient_ints(&[1, 0, 0])),
            Err(Error::BasisMismatch(_))
        ));
        let e6 = rs("E6");
        assert!(e6.labels(&Weight::ambient_ints(&[0, 0, 0, 0, 0, 0, 0, 1])).is_err());
        assert!(e6.labels(&Weight::ambient_ints(&[1, 0, 0, 0, 0, 0, 0, 0])).is_ok());
        assert!(rs("A2").labels(&Weight::ambient_ints(&[1, 0])).is_err());
    }

    #[test]
    fn orthogonal_low_rank() {
        let so3 = RootSystem::orthogonal(3).unwrap();
        assert_eq!(so3.algebra_dim(), BigUint::from(3u32));
        let so4 = RootSystem::orthogonal(4).unwrap();
        assert_eq!(so4.algebra_dim(), BigUint::from(6u32));
        assert_eq!(so4.cartan_matrix(), &[vec![2, 0], vec![0, 2]]);
        assert!(RootSystem::orthogonal(2).is_err());
    }

    #[test]
    fn highest_root_of_a1_is_twice_the_fundamental_weight() {
        let a1 = rs("A1");
        assert_eq!(a1.to_fundamental(a1.highest_root()).unwrap(), Weight::fundamental_ints(&[2]));
    }
}
