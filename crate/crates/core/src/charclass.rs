//! Chern classes from torus weights, `c = prod (1 + w_i)`, and the kernel of
//! characteristic classes for flat `SO(n)` bundles.
//!
//! A torus weight with coordinates `(x_1, ..., x_m)` is identified with the
//! degree-two class `x_1 w_1 + ... + x_m w_m`, so the Chern classes are the
//! elementary symmetric polynomials of the weights.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::{fmt_q, parse_q, q, to_i64, Q};
use crate::rootsys::RootSystem;
use crate::weight::{Basis, Weight, WeightMultiset};

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial with exact rational coefficients in `generators` variables.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    generators: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl Polynomial {
    pub fn zero(generators: usize) -> Self {
        Self { generators, terms: BTreeMap::new() }
    }

    pub fn one(generators: usize) -> Self {
        Self::constant(generators, Q::one())
    }

    pub fn constant(generators: usize, c: Q) -> Self {
        let mut p = Self::zero(generators);
        p.add_term(Monomial(vec![0; generators]), c);
        p
    }

    /// The linear form `sum coeffs[i] w_i`.
    pub fn linear(coeffs: &[Q]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(Monomial(e), c.clone());
        }
        p
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Polynomial {
        let mut out = Polynomial::zero(self.generators);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.generators.max(other.generators));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect();
                out.add_term(Monomial(e), ca * cb);
            }
        }
        out
    }
}

fn monomial_key(m: &Monomial) -> String {
    m.0.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            map.serialize_entry(&monomial_key(m), &fmt_q(c))?;
        }
        map.end()
    }
}

/// Reads the `{"1,0": "-1/2"}` form back; the number of generators is taken
/// from the keys, so the empty polynomial needs the caller to fix it up.
fn polynomial_from_map(map: BTreeMap<String, String>, generators: usize) -> std::result::Result<Polynomial, String> {
    let mut p = Polynomial::zero(generators);
    for (k, v) in map {
        let exps: Vec<u32> = if k.is_empty() {
            Vec::new()
        } else {
            k.split(',').map(|x| x.parse().map_err(|_| format!("bad exponent {x:?}"))).collect::<std::result::Result<_, _>>()?
        };
        if exps.len() != generators {
            return Err(format!("monomial {k:?} does not have {generators} exponents"));
        }
        let c = parse_q(&v).ok_or_else(|| format!("bad coefficient {v:?}"))?;
        p.add_term(Monomial(exps), c);
    }
    Ok(p)
}

/// Graded pieces `e_0, ..., e_N` of `prod (1 + w_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernPolynomial {
    generators: usize,
    pieces: Vec<Polynomial>,
}

impl ChernPolynomial {
    pub fn generators(&self) -> usize {
        self.generators
    }

    /// `c_d`, the elementary symmetric polynomial of degree `d`.
    pub fn piece(&self, d: usize) -> Option<&Polynomial> {
        self.pieces.get(d)
    }

    pub fn pieces(&self) -> &[Polynomial] {
        &self.pieces
    }

    /// Total weight count `N`.
    pub fn weight_count(&self) -> usize {
        self.pieces.len() - 1
    }

    pub fn odd_pieces_vanish(&self) -> bool {
        self.pieces.iter().skip(1).step_by(2).all(Polynomial::is_zero)
    }
}

#[derive(Serialize, Deserialize)]
struct ChernJson {
    generators: usize,
    pieces: Vec<BTreeMap<String, String>>,
}

impl Serialize for ChernPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pieces = self
            .pieces
            .iter()
            .map(|p| p.terms.iter().map(|(m, c)| (monomial_key(m), fmt_q(c))).collect())
            .collect();
        ChernJson { generators: self.generators, pieces }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ChernPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ChernJson::deserialize(d)?;
        let pieces = raw
            .pieces
            .into_iter()
            .map(|m| polynomial_from_map(m, raw.generators))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        if pieces.is_empty() {
            return Err(serde::de::Error::custom("a Chern polynomial has a degree-0 piece"));
        }
        Ok(ChernPolynomial { generators: raw.generators, pieces })
    }
}

fn check_integral(weights: &WeightMultiset) -> Result<usize> {
    if weights.is_empty() {
        return Ok(0);
    }
    let (_, len) = weights
        .shape()
        .ok_or_else(|| Error::BasisMismatch("weights use different bases or lengths".into()))?;
    for (w, _) in weights.iter() {
        if w.coords().iter().any(|x| to_i64(x).is_none()) {
            return Err(Error::NotIntegral(w.to_string()));
        }
    }
    Ok(len)
}

/// Elementary symmetric polynomials of the weights, each weight read as a
/// linear form in the torus generators.
pub fn chern_polynomial(weights: &WeightMultiset) -> Result<ChernPolynomial> {
    let m = check_integral(weights)?;
    let mut pieces = vec![Polynomial::one(m)];
    for w in weights.expanded() {
        let form = Polynomial::linear(w.coords());
        pieces.push(Polynomial::zero(m));
        for d in (1..pieces.len()).rev() {
            let term = pieces[d - 1].mul(&form);
            pieces[d] = pieces[d].add(&term);
        }
    }
    Ok(ChernPolynomial { generators: m, pieces })
}

/// Compares two representations through their Chern polynomials. Equality
/// of the polynomials must agree with equality of the weight multisets,
/// since a product of linear forms factors uniquely; a disagreement is
/// reported as `ConsistencyFault`.
pub fn reps_equal_by_chern(w1: &WeightMultiset, w2: &WeightMultiset) -> Result<bool> {
    if let (Some(a), Some(b)) = (w1.shape(), w2.shape()) {
        if a != b {
            return Err(Error::BasisMismatch(format!("{a:?} vs {b:?}")));
        }
    }
    if w1.total() != w2.total() {
        return Err(Error::CountMismatch { left: w1.total(), right: w2.total() });
    }
    let c1 = chern_polynomial(w1)?;
    let c2 = chern_polynomial(w2)?;
    let by_chern = c1.pieces == c2.pieces;
    let by_weights = w1 == w2;
    if by_chern != by_weights {
        return Err(Error::ConsistencyFault(format!(
            "Chern polynomials {} but weight multisets {}",
            if by_chern { "agree" } else { "differ" },
            if by_weights { "agree" } else { "differ" }
        )));
    }
    Ok(by_chern)
}

/// `true` iff `w` is closed under negation. For such multisets every odd
/// Chern class vanishes; this is checked on every call.
pub fn complexification_vanishing(w: &WeightMultiset) -> bool {
    let closed = w.is_negation_closed();
    if closed {
        let c = chern_polynomial(w).expect("negation-closed multisets share one shape");
        assert!(c.odd_pieces_vanish(), "odd Chern class of a self-conjugate multiset");
    }
    closed
}

/// `true` when every simple reflection of `rs` leaves the Chern polynomial
/// of `weights` unchanged.
pub fn chern_is_weyl_invariant(rs: &RootSystem, weights: &WeightMultiset) -> Result<bool> {
    let base = chern_polynomial(weights)?;
    for i in 0..rs.rank() {
        let mut moved = WeightMultiset::new();
        for (w, m) in weights.iter() {
            let labels = rs.int_labels(w)?;
            moved.insert(rs.weight_from_labels(&rs.reflect_labels(&labels, i), w.basis()), m);
        }
        if chern_polynomial(&moved)? != base {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelGenerator {
    /// `p1`, `p2`, ...
    pub name: String,
    /// Cohomological degree.
    pub degree: u32,
    /// `(-1)^i c_{2i}` of the complexified standard representation, in the
    /// torus generators.
    pub polynomial: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerRecord {
    pub degree: u32,
    pub in_kernel: bool,
    /// `e^2 = p_{n/2}` as polynomials in the torus generators.
    pub square_equals_top_pontryagin: bool,
    pub square_in_kernel: bool,
}

/// Classes of `BSO(n)` that vanish on flat bundles: the algebra generated
/// by the Pontryagin classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatKernelDescription {
    pub n: u32,
    pub kernel_generators: Vec<KernelGenerator>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub euler: Option<EulerRecord>,
    /// The odd Chern classes of the complexification vanish.
    pub odd_chern_vanish: bool,
}

pub fn flat_kernel(n: u32) -> Result<FlatKernelDescription> {
    if n == 0 {
        return Err(Error::IllegalParameter("bundle rank must be at least 1".into()));
    }
    let h = (n / 2) as usize;
    let mut weights = WeightMultiset::new();
    for j in 0..h {
        let mut e = vec![0i64; h];
        e[j] = 1;
        weights.insert(Weight::ambient_ints(&e), 1);
        e[j] = -1;
        weights.insert(Weight::ambient_ints(&e), 1);
    }
    if n % 2 == 1 {
        weights.insert(Weight::zero(Basis::Ambient, h), 1);
    }
    let c = chern_polynomial(&weights)?;
    let kernel_generators: Vec<KernelGenerator> = (1..=h)
        .map(|i| {
            let sign = if i % 2 == 0 { q(1) } else { q(-1) };
            KernelGenerator {
                name: format!("p{i}"),
                degree: 4 * i as u32,
                polynomial: c.pieces[2 * i].scale(&sign),
            }
        })
        .collect();
    let euler = n.is_multiple_of(2).then(|| {
        let mut e = Polynomial::one(h);
        for j in 0..h {
            let mut unit = vec![Q::zero(); h];
            unit[j] = q(1);
            e = e.mul(&Polynomial::linear(&unit));
        }
        let top = &kernel_generators[h - 1].polynomial;
        EulerRecord {
            degree: n,
            in_kernel: false,
            square_equals_top_pontryagin: &e.mul(&e) == top,
            square_in_kernel: true,
        }
    });
    Ok(FlatKernelDescription { n, kernel_generators, euler, odd_chern_vanish: c.odd_pieces_vanish() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(ws: &[&[i64]]) -> WeightMultiset {
        ws.iter().map(|w| Weight::ambient_ints(w)).collect()
    }

    #[test]
    fn trivial_multiset_has_c_equal_to_one() {
        let c = chern_polynomial(&ms(&[&[0], &[0], &[0]])).unwrap();
        assert_eq!(c.pieces()[0], Polynomial::one(1));
        assert!(c.pieces()[1..].iter().all(Polynomial::is_zero));
        assert_eq!(c.weight_count(), 3);
    }

    #[test]
    fn plus_minus_pair() {
        let c = chern_polynomial(&ms(&[&[1], &[-1]])).unwrap();
        assert!(c.piece(1).unwrap().is_zero());
        assert_eq!(c.piece(2).unwrap(), &Polynomial::linear(&[q(1)]).mul(&Polynomial::linear(&[q(-1)])));
        assert_eq!(c.piece(2).unwrap().coefficient(&Monomial(vec![2])), q(-1));
    }

    #[test]
    fn a2_adjoint_has_no_odd_classes() {
        let a2 = RootSystem::new("A2".parse().unwrap());
        let adj = a2.adjoint_weights(Basis::Fundamental);
        let c = chern_polynomial(&adj).unwrap();
        assert!(c.odd_pieces_vanish());
        assert!(chern_is_weyl_invariant(&a2, &adj).unwrap());
        assert!(!chern_is_weyl_invariant(&a2, &[Weight::fundamental_ints(&[1, 0])].into_iter().collect()).unwrap());
    }

    #[test]
    fn chern_comparison() {
        let three = ms(&[&[2], &[0], &[-2]]);
        assert!(reps_equal_by_chern(&three, &three).unwrap());
        assert!(!reps_equal_by_chern(&three, &ms(&[&[1], &[0], &[-1]])).unwrap());
        assert!(matches!(
            reps_equal_by_chern(&three, &ms(&[&[1]])),
            Err(Error::CountMismatch { left: 3, right: 1 })
        ));
        assert!(matches!(
            reps_equal_by_chern(&three, &ms(&[&[1, 0], &[0, 1], &[0, 0]])),
            Err(Error::BasisMismatch(_))
        ));
    }

    #[test]
    fn vanishing_examples() {
        assert!(complexification_vanishing(&ms(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]])));
        assert!(!complexification_vanishing(&ms(&[&[2, 0]])));
    }

    #[test]
    fn flat_kernel_examples() {
        let k2 = flat_kernel(2).unwrap();
        assert_eq!(k2.kernel_generators.len(), 1);
        let e = k2.euler.unwrap();
        assert!(!e.in_kernel && e.square_in_kernel && e.square_equals_top_pontryagin);
        let k3 = flat_kernel(3).unwrap();
        assert_eq!(k3.kernel_generators.len(), 1);
        assert!(k3.euler.is_none());
        let k5 = flat_kernel(5).unwrap();
        let names: Vec<&str> = k5.kernel_generators.iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names, ["p1", "p2"]);
        assert_eq!(k5.kernel_generators[1].degree, 8);
        assert!(flat_kernel(0).is_err());
    }

    #[test]
    fn json_round_trip() {
        let c = chern_polynomial(&ms(&[&[1, 0], &[0, -1], &[1, 1]])).unwrap();
        let json = serde_json::to_string(&c).unwrap();
        let back: ChernPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
        assert!(json.starts_with(r#"{"generators":2,"pieces":[{"0,0":"1"}"#));
    }
}
