//! Symmetric pairs `(g, k)`, restriction of weights from a Cartan subalgebra
//! of `g` to one of `k`, and the weights of the isotropy representation of
//! `k` on `p = g / k`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::{big_uint, q, Q};
use crate::repthy;
use crate::rootsys::{Family, RootSystem, SimpleType};
use crate::weight::{Basis, Weight, WeightMultiset};

/// The pairs the engine knows about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairId {
    /// `(sl_n, so_n)`.
    SlSo(usize),
    /// `(sl_{2n}, sp_{2n})`.
    SlSp(usize),
    /// `(so_{n+1}, so_n)`.
    SoSo(usize),
    /// `(e_6, f_4)`.
    E6F4,
    /// `(g + g, g)` with `g` diagonal.
    Complex(SimpleType),
}

impl fmt::Display for PairId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairId::SlSo(n) => write!(f, "sl-so:{n}"),
            PairId::SlSp(n) => write!(f, "sl-sp:{n}"),
            PairId::SoSo(n) => write!(f, "so-so:{n}"),
            PairId::E6F4 => write!(f, "e6-f4"),
            PairId::Complex(t) => write!(f, "complex:{t}"),
        }
    }
}

impl FromStr for PairId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("e6-f4") {
            return Ok(PairId::E6F4);
        }
        let (kind, arg) =
            s.split_once(':').ok_or_else(|| Error::Parse(format!("bad pair {s:?}")))?;
        let num = || -> Result<usize> {
            arg.trim().parse().map_err(|_| Error::Parse(format!("bad pair parameter {arg:?}")))
        };
        match kind.to_ascii_lowercase().as_str() {
            "sl-so" => Ok(PairId::SlSo(num()?)),
            "sl-sp" => Ok(PairId::SlSp(num()?)),
            "so-so" => Ok(PairId::SoSo(num()?)),
            "complex" => Ok(PairId::Complex(arg.parse()?)),
            _ => Err(Error::Parse(format!("bad pair {s:?}"))),
        }
    }
}

impl Serialize for PairId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PairId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A symmetric pair with the data needed by the obstruction checks.
#[derive(Clone, Debug)]
pub struct SymmetricPair {
    id: PairId,
    g: RootSystem,
    k: Option<RootSystem>,
    k_name: String,
    k_dim: BigUint,
    h1_dim: usize,
    restriction: Option<Vec<Vec<Q>>>,
    isotropy: Option<WeightMultiset>,
    isotropy_highest: Option<Weight>,
    notes: Vec<String>,
}

fn so_dim(m: usize) -> BigUint {
    BigUint::from(m * (m - 1) / 2)
}

fn unit(len: usize, i: usize, c: i64) -> Vec<Q> {
    let mut v = vec![Q::zero(); len];
    v[i] = q(c);
    v
}

fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `+-(L'_i - L'_j)` and `+-(L'_i + L'_j)` for `i < j`, shared by both
/// special linear pairs.
fn mixed_weights(k: usize, out: &mut WeightMultiset) {
    for i in 0..k {
        for j in i + 1..k {
            for (si, sj) in [(1, -1), (-1, 1), (1, 1), (-1, -1)] {
                out.insert(Weight::ambient(add(&unit(k, i, si), &unit(k, j, sj))), 1);
            }
        }
    }
}

impl SymmetricPair {
    pub fn new(id: PairId) -> Result<Self> {
        let too_small = |n: usize| {
            Err(Error::IllegalParameter(format!("{id} needs n >= 2, got n = {n}")))
        };
        match id {
            PairId::SlSo(n) => {
                if n < 2 {
                    return too_small(n);
                }
                let g = RootSystem::new(SimpleType::new(Family::A, n - 1)?);
                let k = (n >= 3).then(|| RootSystem::orthogonal(n)).transpose()?;
                let h = n / 2;
                let mut matrix = vec![vec![Q::zero(); n]; h];
                for (i, row) in matrix.iter_mut().enumerate() {
                    row[i] = q(1);
                    row[h + i] = q(-1);
                }
                let mut iso = WeightMultiset::new();
                for i in 0..h {
                    iso.insert(Weight::ambient(unit(h, i, 2)), 1);
                    iso.insert(Weight::ambient(unit(h, i, -2)), 1);
                }
                mixed_weights(h, &mut iso);
                let mut notes = Vec::new();
                let zero_mult = if n % 2 == 1 {
                    for i in 0..h {
                        iso.insert(Weight::ambient(unit(h, i, 1)), 1);
                        iso.insert(Weight::ambient(unit(h, i, -1)), 1);
                    }
                    notes.push(format!(
                        "n odd: the isotropy weights include +-L'_i, and 0 occurs with \
                         multiplicity k = {h} so that the count equals dim p"
                    ));
                    h
                } else {
                    h - 1
                };
                iso.insert(Weight::zero(Basis::Ambient, h), zero_mult as u64);
                if n == 2 {
                    notes.push("so_2 is abelian; the isotropy representation is reducible".into());
                }
                Ok(Self {
                    id,
                    g,
                    k,
                    k_name: format!("so_{n}"),
                    k_dim: so_dim(n),
                    h1_dim: h,
                    restriction: Some(matrix),
                    isotropy: Some(iso),
                    isotropy_highest: Some(Weight::ambient(unit(h, 0, 2))),
                    notes,
                })
            }
            PairId::SlSp(n) => {
                if n < 2 {
                    return too_small(n);
                }
                let g = RootSystem::new(SimpleType::new(Family::A, 2 * n - 1)?);
                let k = RootSystem::new(SimpleType::new(Family::C, n)?);
                let mut matrix = vec![vec![Q::zero(); 2 * n]; n];
                for (i, row) in matrix.iter_mut().enumerate() {
                    row[i] = q(1);
                    row[n + i] = q(-1);
                }
                let mut iso = WeightMultiset::new();
                mixed_weights(n, &mut iso);
                iso.insert(Weight::zero(Basis::Ambient, n), (n - 1) as u64);
                let highest = Weight::ambient(add(&unit(n, 0, 1), &unit(n, 1, 1)));
                Ok(Self {
                    id,
                    g,
                    k_name: format!("sp_{}", 2 * n),
                    k_dim: k.algebra_dim(),
                    k: Some(k),
                    h1_dim: n,
                    restriction: Some(matrix),
                    isotropy: Some(iso),
                    isotropy_highest: Some(highest),
                    notes: Vec::new(),
                })
            }
            PairId::SoSo(n) => {
                if n < 2 {
                    return too_small(n);
                }
                let g = RootSystem::orthogonal(n + 1)?;
                let k = (n >= 3).then(|| RootSystem::orthogonal(n)).transpose()?;
                Ok(Self {
                    id,
                    g,
                    k,
                    k_name: format!("so_{n}"),
                    k_dim: so_dim(n),
                    h1_dim: n / 2,
                    restriction: None,
                    isotropy: None,
                    isotropy_highest: None,
                    notes: Vec::new(),
                })
            }
            PairId::E6F4 => {
                let g = RootSystem::new(SimpleType::new(Family::E, 6)?);
                let k = RootSystem::new(SimpleType::new(Family::F, 4)?);
                Ok(Self {
                    id,
                    g,
                    k_name: "f_4".into(),
                    k_dim: k.algebra_dim(),
                    k: Some(k),
                    h1_dim: 4,
                    restriction: None,
                    isotropy: None,
                    isotropy_highest: None,
                    notes: Vec::new(),
                })
            }
            PairId::Complex(t) => {
                let g = RootSystem::new(t);
                let m = g.ambient_dim();
                let mut matrix = vec![vec![Q::zero(); 2 * m]; m];
                for (i, row) in matrix.iter_mut().enumerate() {
                    row[i] = q(1);
                    row[m + i] = q(1);
                }
                let iso = g.adjoint_weights(Basis::Ambient);
                let highest = g.highest_root().clone();
                Ok(Self {
                    id,
                    k_name: t.algebra_name(),
                    k_dim: g.algebra_dim(),
                    k: Some(g.clone()),
                    h1_dim: g.ambient_dim(),
                    g,
                    restriction: Some(matrix),
                    isotropy: Some(iso),
                    isotropy_highest: Some(highest),
                    notes: Vec::new(),
                })
            }
        }
    }

    pub fn id(&self) -> PairId {
        self.id
    }

    /// Root system of `g`, or of one summand of `g + g` for complex pairs.
    pub fn g(&self) -> &RootSystem {
        &self.g
    }

    /// Root system of `k`; `None` when `k = so_2` is abelian.
    pub fn k(&self) -> Option<&RootSystem> {
        self.k.as_ref()
    }

    pub fn k_name(&self) -> &str {
        &self.k_name
    }

    pub fn g_dim(&self) -> BigUint {
        match self.id {
            PairId::Complex(_) => self.g.algebra_dim() * 2u32,
            _ => self.g.algebra_dim(),
        }
    }

    pub fn k_dim(&self) -> &BigUint {
        &self.k_dim
    }

    pub fn dim_p(&self) -> BigUint {
        self.g_dim() - &self.k_dim
    }

    /// Number of coordinates of weights of `k` (the `L'_i` basis).
    pub fn h1_dim(&self) -> usize {
        self.h1_dim
    }

    pub fn restriction_matrix(&self) -> Option<&[Vec<Q>]> {
        self.restriction.as_deref()
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    /// Restricts a weight of `g` to `k`. For complex pairs the input lives on
    /// `h + h`: the ambient coordinates of both summands, concatenated.
    pub fn restrict(&self, w: &Weight) -> Result<Weight> {
        let matrix =
            self.restriction.as_ref().ok_or_else(|| Error::NoRestrictionMap(self.id.to_string()))?;
        let coords = match self.id {
            PairId::Complex(_) => {
                let m = self.g.ambient_dim();
                if w.basis() != Basis::Ambient || w.len() != 2 * m {
                    return Err(Error::BasisMismatch(format!(
                        "{w} is not an ambient weight of {} + {}",
                        self.g.simple_type(),
                        self.g.simple_type()
                    )));
                }
                let left = self.g.to_ambient(&Weight::ambient(w.coords()[..m].to_vec()))?;
                let right = self.g.to_ambient(&Weight::ambient(w.coords()[m..].to_vec()))?;
                let mut v = left.coords().to_vec();
                v.extend_from_slice(right.coords());
                v
            }
            _ => self.g.to_ambient(w)?.coords().to_vec(),
        };
        let image: Vec<Q> = matrix
            .iter()
            .map(|row| row.iter().zip(&coords).map(|(a, b)| a * b).sum())
            .collect();
        match self.id {
            PairId::Complex(_) => self.g.to_ambient(&Weight::ambient(image)),
            _ => Ok(Weight::ambient(image)),
        }
    }

    pub fn isotropy_weights(&self) -> Result<&WeightMultiset> {
        self.isotropy.as_ref().ok_or_else(|| Error::NoWeightModel(self.id.to_string()))
    }

    pub fn isotropy_highest_weight(&self) -> Result<&Weight> {
        self.isotropy_highest.as_ref().ok_or_else(|| Error::NoWeightModel(self.id.to_string()))
    }

    /// `true` when the isotropy weights are exactly the weights of the
    /// irreducible `k`-module with the isotropy highest weight, checked by
    /// Freudenthal. Always `false` for abelian `k`.
    pub fn isotropy_is_irreducible(&self, cap: u64) -> Result<bool> {
        let iso = self.isotropy_weights()?;
        let Some(k) = &self.k else {
            return Ok(false);
        };
        let highest = self.isotropy_highest_weight()?;
        let mults = repthy::freudenthal_multiplicities(k, highest, cap)?;
        let ambient = mults.map(|w| k.to_ambient(w).expect("weights of k convert"));
        Ok(&ambient == iso)
    }

    pub fn describe(&self) -> PairDescription {
        PairDescription {
            pair: self.id,
            g: match self.id {
                PairId::Complex(t) => format!("{0} + {0}", t.algebra_name()),
                _ => self.g.simple_type().algebra_name(),
            },
            k: self.k_name.clone(),
            dim_g: self.g_dim(),
            dim_k: self.k_dim.clone(),
            dim_p: self.dim_p(),
            restriction: self.restriction.as_ref().map(|m| {
                m.iter().map(|r| r.iter().map(crate::num::fmt_q).collect()).collect()
            }),
            isotropy_highest: self.isotropy_highest.clone(),
            isotropy_weights: self.isotropy.clone(),
            notes: self.notes.clone(),
        }
    }
}

/// JSON-friendly summary of a pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDescription {
    pub pair: PairId,
    pub g: String,
    pub k: String,
    #[serde(with = "big_uint")]
    pub dim_g: BigUint,
    #[serde(with = "big_uint")]
    pub dim_k: BigUint,
    #[serde(with = "big_uint")]
    pub dim_p: BigUint,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub restriction: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub isotropy_highest: Option<Weight>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub isotropy_weights: Option<WeightMultiset>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}
