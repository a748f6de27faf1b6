//! Extension obstructions: can the isotropy representation of `k` on `p`
//! be the restriction of a representation of `g`?
//!
//! For the special linear pairs a hypothetical extension `V_lambda` must
//! satisfy `r(lambda) = lambda_1`. The candidates are derived symbolically
//! from the dominance inequalities and each one is eliminated by an exact
//! Weyl dimension or by a lower bound from Weyl orbits. Other pairs are
//! settled by a dimension gap, or when that fails, by matching the weights
//! of every representation of `g` of dimension `dim p`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::num::{big_uint, fmt_q, q, to_i64, Q};
use crate::repthy::{self, HighestWeightRep};
use crate::rootsys::{RootSystem, SimpleType};
use crate::sympair::{PairId, SymmetricPair};
use crate::weight::{Basis, Weight, WeightMultiset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    NoExtension,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Method {
    DimensionGap,
    CandidateElimination,
    ComplexDSquared,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::NoExtension => "NO_EXTENSION",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::DimensionGap => "DIMENSION_GAP",
            Method::CandidateElimination => "CANDIDATE_ELIMINATION",
            Method::ComplexDSquared => "COMPLEX_D_SQUARED",
        })
    }
}

/// A dominant weight `base`, or the ray `base + c * direction` for integers
/// `c >= 0`, together with the derivation that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateFamily {
    pub base: Weight,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub direction: Option<Weight>,
    pub constraints_log: Vec<String>,
}

impl CandidateFamily {
    /// Member `base + c * direction`; `base` itself for point candidates.
    pub fn at(&self, c: u64) -> Weight {
        match &self.direction {
            Some(d) => self.base.plus(&d.scaled(&q(c as i64))),
            None => self.base.clone(),
        }
    }

    /// `true` if `w` equals some member of the family.
    pub fn contains(&self, w: &Weight) -> bool {
        let Some(d) = &self.direction else {
            return w == &self.base;
        };
        let diff = w.minus(&self.base);
        let Some(i) = d.coords().iter().position(|x| !x.is_zero()) else {
            return diff.is_zero();
        };
        let c = &diff.coords()[i] / &d.coords()[i];
        c.is_integer() && c >= Q::zero() && diff == d.scaled(&c)
    }
}

/// Outcome of the symbolic candidate derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateDerivation {
    pub families: Vec<CandidateFamily>,
    pub constraints_log: Vec<String>,
    /// Set when the dominant part of the affine subspace could not be
    /// reduced to points and rays; `families` is then incomplete.
    pub unresolved: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitTerm {
    pub representative: Weight,
    #[serde(with = "big_uint")]
    pub size: BigUint,
}

/// Why a candidate is (or is not) ruled out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// Exact Weyl dimension of the candidate.
    Exact {
        #[serde(with = "big_uint")]
        value: BigUint,
        #[serde(with = "big_uint")]
        dim_p: BigUint,
    },
    /// Lower bound on the dimension of every member of a family from
    /// `valid_from` on: the sum of the sizes of distinct Weyl orbits of
    /// weights.
    LowerBound {
        #[serde(with = "big_uint")]
        value: BigUint,
        #[serde(with = "big_uint")]
        dim_p: BigUint,
        valid_from: u64,
        orbits: Vec<OrbitTerm>,
    },
    /// Smallest dimension of a nontrivial representation of `g`.
    Gap {
        #[serde(with = "big_uint")]
        value: BigUint,
        #[serde(with = "big_uint")]
        dim_p: BigUint,
    },
    /// An irreducible representation of `g` whose restricted weights are not
    /// contained in the isotropy weights, so it cannot be a summand.
    WeightExcluded {
        #[serde(with = "big_uint")]
        value: BigUint,
        #[serde(with = "big_uint")]
        dim_p: BigUint,
    },
    /// A sum of irreducible representations of `g` of total dimension
    /// `dim p`, compared weight by weight after restriction.
    WeightMatch {
        #[serde(with = "big_uint")]
        value: BigUint,
        #[serde(with = "big_uint")]
        dim_p: BigUint,
        components: Vec<Weight>,
        matches: bool,
    },
}

impl Evidence {
    pub fn eliminates(&self) -> bool {
        match self {
            Evidence::Exact { value, dim_p } => value != dim_p,
            Evidence::LowerBound { value, dim_p, .. } | Evidence::Gap { value, dim_p } => {
                value > dim_p
            }
            Evidence::WeightExcluded { .. } => true,
            Evidence::WeightMatch { matches, .. } => !matches,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateRecord {
    pub weight: Weight,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub family_direction: Option<Weight>,
    pub evidence: Evidence,
    pub eliminated: bool,
}

/// Data behind the verdict for `g + g` over the diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexRecord {
    pub simple_type: SimpleType,
    #[serde(with = "big_uint")]
    pub d: BigUint,
    #[serde(with = "big_uint")]
    pub d_squared: BigUint,
    #[serde(with = "big_uint")]
    pub dim_g: BigUint,
    pub witness: Weight,
    /// `nu(w_i) = w_{involution[i]}`, 1-based.
    pub involution: Vec<usize>,
    pub rationale: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub pair: PairId,
    pub verdict: Verdict,
    pub method: Method,
    #[serde(with = "big_uint")]
    pub dim_p: BigUint,
    pub candidates: Vec<CandidateRecord>,
    pub constraints_log: Vec<String>,
    pub parameters: Limits,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub complex: Option<ComplexRecord>,
}

impl ObstructionReport {
    fn conclude(&mut self, complete: bool) {
        let all = self.candidates.iter().all(|c| c.eliminated);
        self.verdict = if complete && all { Verdict::NoExtension } else { Verdict::Inconclusive };
    }

    pub fn surviving(&self) -> impl Iterator<Item = &CandidateRecord> {
        self.candidates.iter().filter(|c| !c.eliminated)
    }
}

fn record(weight: Weight, family_direction: Option<Weight>, evidence: Evidence) -> CandidateRecord {
    let eliminated = evidence.eliminates();
    CandidateRecord { weight, family_direction, evidence, eliminated }
}

// ---------------------------------------------------------------------------
// Symbolic derivation

/// `constant + sum coeffs[i] * a_{i+1}` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Affine {
    constant: i64,
    coeffs: Vec<i64>,
}

impl Affine {
    fn is_constant(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn minus(&self, other: &Affine) -> Affine {
        Affine {
            constant: self.constant - other.constant,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    fn plus(&self, other: &Affine) -> Affine {
        Affine {
            constant: self.constant + other.constant,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    /// Replaces `a_var` by `expr`, which must not involve `a_var`.
    fn substitute(&self, var: usize, expr: &Affine) -> Affine {
        let c = self.coeffs[var];
        let mut out = self.clone();
        out.coeffs[var] = 0;
        out.constant += c * expr.constant;
        for (x, e) in out.coeffs.iter_mut().zip(&expr.coeffs) {
            *x += c * e;
        }
        out
    }
}

fn fmt_affine(a: &Affine) -> String {
    let mut s = String::new();
    if a.constant != 0 || a.is_constant() {
        s.push_str(&a.constant.to_string());
    }
    for (i, &c) in a.coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
        if s.is_empty() {
            let sign = if c < 0 { "-" } else { "" };
            let _ = write!(s, "{sign}{mag}a{}", i + 1);
        } else {
            let sign = if c < 0 { '-' } else { '+' };
            let _ = write!(s, " {sign} {mag}a{}", i + 1);
        }
    }
    s
}

/// `2L1 + L3 - L4` style rendering of an ambient coordinate vector.
fn fmt_combination(coords: &[Q]) -> String {
    let mut s = String::new();
    for (i, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Q::zero();
        let mag = if neg { -c } else { c.clone() };
        let mag = if mag == q(1) { String::new() } else { fmt_q(&mag) };
        if s.is_empty() {
            let _ = write!(s, "{}{mag}L{}", if neg { "-" } else { "" }, i + 1);
        } else {
            let _ = write!(s, " {} {mag}L{}", if neg { '-' } else { '+' }, i + 1);
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Reduced row echelon form; returns pivot columns.
fn rref(m: &mut [Vec<Q>], cols: usize) -> Vec<usize> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let row_r = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&row_r) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Integral lift of `target` and an integral basis of the kernel of the
/// restriction matrix, or a reason why none was found.
fn lift_and_kernel(
    matrix: &[Vec<Q>],
    target: &[Q],
) -> std::result::Result<(Vec<i64>, Vec<Vec<i64>>), String> {
    let cols = matrix.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Q>> = matrix
        .iter()
        .zip(target)
        .map(|(row, t)| {
            let mut r = row.clone();
            r.push(t.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, cols);
    for row in aug.iter().skip(pivots.len()) {
        if !row[cols].is_zero() {
            return Err("the isotropy highest weight is not in the image of r".into());
        }
    }
    let mut lift = vec![0i64; cols];
    for (r, &p) in pivots.iter().enumerate() {
        lift[p] = to_i64(&aug[r][cols]).ok_or("the lift is not integral")?;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut kernel = Vec::new();
    for &f in &free {
        let mut v = vec![0i64; cols];
        v[f] = 1;
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = to_i64(&-&aug[r][f]).ok_or("the kernel of r has no integral echelon basis")?;
        }
        kernel.push(v);
    }
    Ok((lift, kernel))
}

fn derivation_error(pair: &SymmetricPair) -> Error {
    Error::NoWeightModel(format!("{} (candidate derivation needs a special linear pair)", pair.id()))
}

/// Derives the dominant weights `lambda` of `g` with `r(lambda)` equal to the
/// isotropy highest weight, as points and rays.
pub fn derive_candidates(pair: &SymmetricPair) -> Result<CandidateDerivation> {
    if !matches!(pair.id(), PairId::SlSo(_) | PairId::SlSp(_)) {
        return Err(derivation_error(pair));
    }
    let g = pair.g();
    let matrix = pair.restriction_matrix().ok_or_else(|| derivation_error(pair))?;
    let lambda1 = pair.isotropy_highest_weight()?;
    let mut log = Vec::new();
    let unresolved = |log: Vec<String>, why: String| CandidateDerivation {
        families: Vec::new(),
        constraints_log: log,
        unresolved: Some(why),
    };

    let (lift, kernel) = match lift_and_kernel(matrix, lambda1.coords()) {
        Ok(x) => x,
        Err(why) => return Ok(unresolved(log, why)),
    };
    let as_q = |v: &[i64]| -> Vec<Q> { v.iter().map(|&x| q(x)).collect() };
    let primed: Vec<String> = fmt_combination(lambda1.coords())
        .split(' ')
        .map(|t| if t.contains('L') { format!("{t}'") } else { t.to_string() })
        .collect();
    log.push(format!("lift: r({}) = {}", fmt_combination(&as_q(&lift)), primed.join(" ")));
    let names: Vec<String> = kernel
        .iter()
        .enumerate()
        .map(|(i, b)| format!("b{} = {}", i + 1, fmt_combination(&as_q(b))))
        .collect();
    log.push(format!("kernel of r: {}", names.join(", ")));
    let terms: String = (1..=kernel.len()).map(|i| format!(" + a{i} b{i}")).collect();
    log.push(format!("lambda = {}{terms}", fmt_combination(&as_q(&lift))));

    let vars = kernel.len();
    let coords: Vec<Affine> = (0..g.ambient_dim())
        .map(|j| Affine { constant: lift[j], coeffs: kernel.iter().map(|b| b[j]).collect() })
        .collect();
    let mut labels: Vec<Affine> = coords.windows(2).map(|w| w[0].minus(&w[1])).collect();
    for (j, l) in labels.iter().enumerate() {
        log.push(format!("dominance: x{} - x{} = {} >= 0", j + 1, j + 2, fmt_affine(l)));
    }

    // A run of consecutive labels whose sum is identically zero forces every
    // label in the run to vanish.
    'outer: loop {
        for start in 0..labels.len() {
            let mut sum = Affine { constant: 0, coeffs: vec![0; vars] };
            for end in start..labels.len() {
                sum = sum.plus(&labels[end]);
                if !sum.is_constant() {
                    continue;
                }
                if sum.constant < 0 {
                    log.push(format!(
                        "infeasible: x{} - x{} = {} < 0",
                        start + 1,
                        end + 2,
                        sum.constant
                    ));
                    return Ok(CandidateDerivation {
                        families: Vec::new(),
                        constraints_log: log,
                        unresolved: None,
                    });
                }
                if sum.constant > 0 {
                    continue;
                }
                let Some(j) = (start..=end).find(|&j| !labels[j].is_constant()) else {
                    continue;
                };
                let l = labels[j].clone();
                let Some(var) = l.coeffs.iter().position(|&c| c.abs() == 1) else {
                    return Ok(unresolved(log, format!("cannot solve {} = 0 over the integers", fmt_affine(&l))));
                };
                let c = l.coeffs[var];
                let mut rest = l.clone();
                rest.coeffs[var] = 0;
                let expr = Affine {
                    constant: -c * rest.constant,
                    coeffs: rest.coeffs.iter().map(|x| -c * x).collect(),
                };
                log.push(format!(
                    "forced: {} = 0 (x{} = x{})",
                    fmt_affine(&l),
                    start + 1,
                    end + 2
                ));
                log.push(format!("substitute: a{} = {}", var + 1, fmt_affine(&expr)));
                for lab in labels.iter_mut() {
                    *lab = lab.substitute(var, &expr);
                }
                continue 'outer;
            }
        }
        break;
    }

    if let Some((j, l)) = labels.iter().enumerate().find(|(_, l)| l.is_constant() && l.constant < 0) {
        log.push(format!("infeasible: label {} = {} < 0", j + 1, l.constant));
        return Ok(CandidateDerivation { families: Vec::new(), constraints_log: log, unresolved: None });
    }

    let var_rows: Vec<Vec<Q>> = labels.iter().map(|l| as_q(&l.coeffs)).collect();
    let rank = crate::num::rank(&var_rows);
    let mut families = Vec::new();
    let to_weight = |labels: &[i64]| g.weight_from_labels(labels, Basis::Ambient);
    match rank {
        0 => {
            let point: Vec<i64> = labels.iter().map(|l| l.constant).collect();
            let w = to_weight(&point);
            log.push(format!("result: single candidate {}", fmt_combination(w.coords())));
            families.push(CandidateFamily { base: w, direction: None, constraints_log: Vec::new() });
        }
        1 => {
            let first = labels.iter().find(|l| !l.is_constant()).expect("rank one");
            let gcd = first.coeffs.iter().fold(0i64, |acc, &x| acc.gcd(&x));
            let sign = first.coeffs.iter().find(|&&x| x != 0).map_or(1, |x| x.signum());
            let gen: Vec<i64> = first.coeffs.iter().map(|x| x / gcd * sign).collect();
            let pivot = gen.iter().position(|&x| x != 0).expect("nonzero generator");
            let mut slopes = Vec::new();
            for l in &labels {
                let d = l.coeffs[pivot] / gen[pivot];
                if l.coeffs.iter().zip(&gen).any(|(c, g)| *c != d * g) {
                    return Ok(unresolved(log, "labels are not multiples of one linear form".into()));
                }
                slopes.push(d);
            }
            let t = Affine { constant: 0, coeffs: gen.clone() };
            log.push(format!("parameter: t = {}", fmt_affine(&t)));
            let mut lo: Option<i64> = None;
            let mut hi: Option<i64> = None;
            for (l, &d) in labels.iter().zip(&slopes) {
                let b = l.constant;
                if d > 0 {
                    let bound = Integer::div_ceil(&(-b), &d);
                    lo = Some(lo.map_or(bound, |x| x.max(bound)));
                } else if d < 0 {
                    let bound = Integer::div_floor(&b, &-d);
                    hi = Some(hi.map_or(bound, |x| x.min(bound)));
                }
            }
            let at = |t: i64| -> Vec<i64> {
                labels.iter().zip(&slopes).map(|(l, d)| l.constant + d * t).collect()
            };
            match (lo, hi) {
                (Some(lo), Some(hi)) if lo > hi => {
                    log.push(format!("infeasible: {lo} <= t <= {hi}"));
                }
                (Some(lo), Some(hi)) => {
                    if hi - lo > 10_000 {
                        return Ok(unresolved(log, format!("{} integer points", hi - lo + 1)));
                    }
                    log.push(format!("range: {lo} <= t <= {hi}"));
                    for t in lo..=hi {
                        let w = to_weight(&at(t));
                        log.push(format!("result: t = {t} gives {}", fmt_combination(w.coords())));
                        families.push(CandidateFamily { base: w, direction: None, constraints_log: Vec::new() });
                    }
                }
                (Some(lo), None) | (None, Some(lo)) => {
                    let (start, dir): (i64, Vec<i64>) = if hi.is_none() {
                        log.push(format!("range: t >= {lo}"));
                        (lo, slopes.clone())
                    } else {
                        log.push(format!("range: t <= {lo}"));
                        (lo, slopes.iter().map(|d| -d).collect())
                    };
                    let base = to_weight(&at(start));
                    let direction = to_weight(&dir);
                    log.push(format!(
                        "result: family {} + c({}), c >= 0",
                        fmt_combination(base.coords()),
                        fmt_combination(direction.coords())
                    ));
                    families.push(CandidateFamily {
                        base,
                        direction: Some(direction),
                        constraints_log: Vec::new(),
                    });
                }
                (None, None) => {
                    return Ok(unresolved(log, "the dominance constraints do not bound t".into()));
                }
            }
        }
        r => {
            return Ok(unresolved(
                log,
                format!("the dominant part of the affine subspace has dimension {r}"),
            ));
        }
    }
    for f in families.iter_mut() {
        f.constraints_log = log.clone();
    }
    Ok(CandidateDerivation { families, constraints_log: log, unresolved: None })
}

/// The candidate families of [`derive_candidates`], each carrying the log.
pub fn candidate_weights(pair: &SymmetricPair) -> Result<Vec<CandidateFamily>> {
    Ok(derive_candidates(pair)?.families)
}

/// Every dominant `lambda = lift + sum a_i b_i` with `|a_i| <= bound`,
/// canonicalized and deduplicated. Independent of the symbolic derivation.
pub fn brute_force_candidates(pair: &SymmetricPair, bound: i64) -> Result<Vec<Weight>> {
    if !matches!(pair.id(), PairId::SlSo(_) | PairId::SlSp(_)) {
        return Err(derivation_error(pair));
    }
    let g = pair.g();
    let matrix = pair.restriction_matrix().ok_or_else(|| derivation_error(pair))?;
    let lambda1 = pair.isotropy_highest_weight()?;
    let (lift, kernel) = lift_and_kernel(matrix, lambda1.coords()).map_err(Error::ConsistencyFault)?;
    let m = kernel.len();
    let mut found = BTreeSet::new();
    let mut a = vec![-bound; m];
    loop {
        let x: Vec<i64> = (0..lift.len())
            .map(|j| lift[j] + a.iter().zip(&kernel).map(|(ai, b)| ai * b[j]).sum::<i64>())
            .collect();
        if x.windows(2).all(|w| w[0] >= w[1]) {
            let w = g.to_ambient(&Weight::ambient_ints(&x))?;
            found.insert(w);
        }
        let mut i = 0;
        loop {
            if i == m {
                return Ok(found.into_iter().collect());
            }
            if a[i] < bound {
                a[i] += 1;
                break;
            }
            a[i] = -bound;
            i += 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Bounds

/// `true` if `mu` is a weight of `V_lambda`: its dominant conjugate lies
/// below `lambda` in the root order.
fn is_weight_of(rs: &RootSystem, lambda: &[i64], mu: &[i64]) -> bool {
    let dom = rs.dominant_labels(mu);
    let diff: Vec<i64> = lambda.iter().zip(&dom).map(|(a, b)| a - b).collect();
    rs.root_coefficients(&diff).is_some_and(|c| c.iter().all(|&x| x >= 0))
}

fn orbit_terms(rs: &RootSystem, lambda: &Weight, extras: &[Weight]) -> Result<Vec<OrbitTerm>> {
    let top = rs.int_labels(lambda)?;
    if top.iter().any(|&l| l < 0) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let mut seen = BTreeSet::from([top.clone()]);
    let mut terms = vec![OrbitTerm {
        representative: lambda.clone(),
        size: repthy::orbit_size_labels(rs, &top),
    }];
    for extra in extras {
        let labels = rs.int_labels(extra)?;
        if !is_weight_of(rs, &top, &labels) {
            return Err(Error::NotAWeightOf(format!("{extra} is not a weight of V{lambda}")));
        }
        if seen.insert(rs.dominant_labels(&labels)) {
            terms.push(OrbitTerm {
                representative: extra.clone(),
                size: repthy::orbit_size_labels(rs, &labels),
            });
        }
    }
    Ok(terms)
}

/// Sum of the sizes of the distinct Weyl orbits of `lambda` and `extras`,
/// a lower bound on `dim V_lambda`. Every extra must be a weight of
/// `V_lambda`.
pub fn orbit_sum_lower_bound(rs: &RootSystem, lambda: &Weight, extras: &[Weight]) -> Result<BigUint> {
    Ok(orbit_terms(rs, lambda, extras)?.into_iter().map(|t| t.size).sum())
}

/// Labels `base + c * dir` as affine functions, and the first `c` from
/// which the set of roots orthogonal to the weight no longer changes.
fn stable_from(rs: &RootSystem, base: &[i64], dir: &[i64]) -> u64 {
    let mut threshold = 0u64;
    for (i, _) in rs.positive_roots().iter().enumerate() {
        let coroot = rs.positive_coroot_coefficients(i);
        let b: Q = coroot.iter().zip(base).map(|(c, &l)| c * q(l)).sum();
        let d: Q = coroot.iter().zip(dir).map(|(c, &l)| c * q(l)).sum();
        if d.is_zero() {
            continue;
        }
        let root = -b / d;
        if root.is_integer() && root >= Q::zero() {
            let r = root.to_integer().to_u64().unwrap_or(u64::MAX - 1);
            threshold = threshold.max(r + 1);
        }
    }
    threshold
}

struct FamilyBound {
    valid_from: u64,
    terms: Vec<OrbitTerm>,
}

/// Orbit-sum bound valid for every `c >= valid_from`: the orbit of
/// `lambda(c)` plus the orbit of `lambda(c) - alpha_i` for a simple root
/// whose label is at least 2 along the tail, so that the two orbits have
/// different norms.
fn family_bound(rs: &RootSystem, fam: &CandidateFamily) -> Result<FamilyBound> {
    let dir = fam.direction.as_ref().expect("family has a direction");
    let base = rs.int_labels(&fam.base)?;
    let dirl = rs.int_labels(dir)?;
    let mut valid_from = stable_from(rs, &base, &dirl).max(1);
    let extra_index = (0..rs.rank()).find(|&i| dirl[i] >= 0 && (dirl[i] > 0 || base[i] >= 2));
    if let Some(i) = extra_index {
        let extra: Vec<i64> = base.iter().zip(rs.simple_root_labels(i)).map(|(a, b)| a - b).collect();
        valid_from = valid_from.max(stable_from(rs, &extra, &dirl));
        // the label must reach 2 so the extra is a weight in a new orbit
        while base[i] + dirl[i] * (valid_from as i64) < 2 {
            valid_from += 1;
        }
    }
    let lambda = fam.at(valid_from);
    let extras: Vec<Weight> = extra_index
        .map(|i| {
            let labels = rs.int_labels(&lambda).expect("integral");
            let e: Vec<i64> = labels.iter().zip(rs.simple_root_labels(i)).map(|(a, b)| a - b).collect();
            vec![rs.weight_from_labels(&e, lambda.basis())]
        })
        .unwrap_or_default();
    let terms = orbit_terms(rs, &lambda, &extras)?;
    Ok(FamilyBound { valid_from, terms })
}

// ---------------------------------------------------------------------------
// Exhaustive weight matching

/// Irreducible representations of `rs` of dimension at most `max_dim`, as
/// Dynkin labels, sorted by dimension and then labels.
pub fn irreps_up_to(rs: &RootSystem, max_dim: u64) -> Vec<(Vec<i64>, u64)> {
    let n = rs.rank();
    let mut out = vec![(vec![0; n], 1u64)];
    let mut stack = vec![(vec![0i64; n], 0usize)];
    let max = BigUint::from(max_dim);
    while let Some((labels, start)) = stack.pop() {
        for i in start..n {
            let mut next = labels.clone();
            next[i] += 1;
            let d = repthy::dim_from_labels(rs, &next);
            if d <= max {
                out.push((next.clone(), d.to_u64().expect("bounded")));
                stack.push((next, i));
            }
        }
    }
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    out
}

fn is_submultiset(small: &WeightMultiset, big: &WeightMultiset) -> bool {
    small.iter().all(|(w, m)| big.multiplicity(w) >= m)
}

type Restrictor<'a> = dyn Fn(&Weight) -> Result<Weight> + 'a;

/// Restricted weights of `V_lambda` as a multiset in the target basis.
fn restricted_weights(
    rs: &RootSystem,
    labels: &[i64],
    restrict: &Restrictor<'_>,
    cap: u64,
) -> Result<WeightMultiset> {
    let mults = HighestWeightRep::from_labels(rs, labels)?.multiplicities(cap)?;
    let mut out = WeightMultiset::new();
    for (w, m) in mults.iter() {
        out.insert(restrict(&rs.to_ambient(w)?)?, m);
    }
    Ok(out)
}

/// Compares the isotropy weights against every representation of `g` of
/// total dimension `dim p`, recording irreducibles that cannot be summands
/// and every decomposition built from the rest.
fn weight_match_records(
    rs: &RootSystem,
    restrict: &Restrictor<'_>,
    target: &WeightMultiset,
    limits: &Limits,
) -> Result<Vec<CandidateRecord>> {
    let dim_p = target.total();
    let dim_p_big = BigUint::from(dim_p);
    let mut records = Vec::new();
    let mut fitting: Vec<(Vec<i64>, u64, WeightMultiset)> = Vec::new();
    for (labels, d) in irreps_up_to(rs, dim_p) {
        let res = restricted_weights(rs, &labels, restrict, limits.freudenthal_cap)?;
        if is_submultiset(&res, target) {
            fitting.push((labels, d, res));
        } else {
            records.push(record(
                Weight::fundamental_ints(&labels),
                None,
                Evidence::WeightExcluded { value: d.into(), dim_p: dim_p_big.clone() },
            ));
        }
    }

    // multisets of fitting irreducibles with total dimension dim_p
    let mut chosen: Vec<usize> = Vec::new();
    let mut decomps: Vec<Vec<usize>> = Vec::new();
    fn search(
        fitting: &[(Vec<i64>, u64, WeightMultiset)],
        from: usize,
        remaining: u64,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) -> bool {
        if remaining == 0 {
            out.push(chosen.clone());
            return out.len() <= limit;
        }
        for i in from..fitting.len() {
            if fitting[i].1 <= remaining {
                chosen.push(i);
                let ok = search(fitting, i, remaining - fitting[i].1, chosen, out, limit);
                chosen.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    const DECOMPOSITION_LIMIT: usize = 100_000;
    if !search(&fitting, 0, dim_p, &mut chosen, &mut decomps, DECOMPOSITION_LIMIT) {
        return Err(Error::CapExceeded { cap: DECOMPOSITION_LIMIT as u64 });
    }
    for parts in decomps {
        let mut union = WeightMultiset::new();
        for &i in &parts {
            union = union.union(&fitting[i].2);
        }
        let mut components: Vec<Weight> =
            parts.iter().map(|&i| Weight::fundamental_ints(&fitting[i].0)).collect();
        components.sort_by(|a, b| b.cmp(a));
        records.push(record(
            components[0].clone(),
            None,
            Evidence::WeightMatch {
                value: dim_p_big.clone(),
                dim_p: dim_p_big.clone(),
                components,
                matches: &union == target,
            },
        ));
    }
    Ok(records)
}

/// Weights of `so_n` on `C^n` and the restriction from `so_{n+1}`, in the
/// standard coordinates of both.
fn orthogonal_model(n: usize) -> (WeightMultiset, Box<Restrictor<'static>>) {
    let h = n / 2;
    let mut target = WeightMultiset::new();
    for i in 0..h {
        let mut e = vec![0i64; h];
        e[i] = 1;
        target.insert(Weight::ambient_ints(&e), 1);
        e[i] = -1;
        target.insert(Weight::ambient_ints(&e), 1);
    }
    if n % 2 == 1 {
        target.insert(Weight::zero(Basis::Ambient, h), 1);
    }
    let restrict = move |w: &Weight| -> Result<Weight> {
        Ok(Weight::ambient(w.coords()[..h].to_vec()))
    };
    (target, Box::new(restrict))
}

// ---------------------------------------------------------------------------
// Checks

/// Decides whether the isotropy representation of `pair` extends to `g`.
pub fn check_extension(pair: &SymmetricPair, limits: &Limits) -> Result<ObstructionReport> {
    let dim_p = pair.dim_p();
    let mut report = ObstructionReport {
        pair: pair.id(),
        verdict: Verdict::Inconclusive,
        method: Method::CandidateElimination,
        dim_p: dim_p.clone(),
        candidates: Vec::new(),
        constraints_log: Vec::new(),
        parameters: *limits,
        notes: pair.notes().to_vec(),
        complex: None,
    };
    match pair.id() {
        PairId::Complex(t) => check_complex_case(t, limits),
        PairId::E6F4 | PairId::SoSo(_) => {
            let g = pair.g();
            let (d, witness) = repthy::smallest_nontrivial_dim(g);
            report.method = Method::DimensionGap;
            report.constraints_log.push(format!(
                "smallest nontrivial representation of {}: dim V{witness} = {d}",
                g.simple_type().algebra_name()
            ));
            let gap = record(witness, None, Evidence::Gap { value: d.clone(), dim_p: dim_p.clone() });
            let closed = gap.eliminated;
            report.candidates.push(gap);
            if closed {
                report.conclude(true);
                return Ok(report);
            }
            let PairId::SoSo(n) = pair.id() else {
                report.conclude(true);
                return Ok(report);
            };
            report.candidates.clear();
            report.method = Method::CandidateElimination;
            report.notes.push(format!(
                "the smallest nontrivial representation of {} has dimension {d} <= {n}; \
                 every representation of dimension {n} is compared with the isotropy weights",
                g.simple_type().algebra_name()
            ));
            let (target, restrict) = orthogonal_model(n);
            report.candidates.extend(weight_match_records(g, &*restrict, &target, limits)?);
            note_matches(&mut report, g);
            report.conclude(true);
            Ok(report)
        }
        PairId::SlSo(_) | PairId::SlSp(_) => {
            let g = pair.g();
            if !pair.isotropy_is_irreducible(limits.freudenthal_cap)? {
                report.notes.push(
                    "the isotropy representation is reducible, so every representation of \
                     dimension dim p is compared with the isotropy weights"
                        .into(),
                );
                let target = pair.isotropy_weights()?.clone();
                let restrict = |w: &Weight| pair.restrict(w);
                report.candidates.extend(weight_match_records(g, &restrict, &target, limits)?);
                note_matches(&mut report, g);
                report.conclude(true);
                return Ok(report);
            }
            let derivation = derive_candidates(pair)?;
            report.constraints_log = derivation.constraints_log.clone();
            if let Some(why) = &derivation.unresolved {
                report.notes.push(format!("candidate derivation incomplete: {why}"));
            }
            for fam in &derivation.families {
                eliminate_family(g, fam, &dim_p, &mut report)?;
            }
            report.conclude(derivation.unresolved.is_none());
            Ok(report)
        }
    }
}

fn note_matches(report: &mut ObstructionReport, g: &RootSystem) {
    for c in &report.candidates {
        if let Evidence::WeightMatch { components, matches: true, .. } = &c.evidence {
            let parts: Vec<String> = components.iter().map(|w| format!("V{w}")).collect();
            report.notes.push(format!(
                "{} of {} restricts to exactly the isotropy weights",
                parts.join(" + "),
                g.simple_type().algebra_name()
            ));
        }
    }
}

fn eliminate_family(
    g: &RootSystem,
    fam: &CandidateFamily,
    dim_p: &BigUint,
    report: &mut ObstructionReport,
) -> Result<()> {
    if fam.direction.is_none() {
        let value = repthy::weyl_dim(g, &fam.base)?;
        report.candidates.push(record(fam.base.clone(), None, Evidence::Exact { value, dim_p: dim_p.clone() }));
        return Ok(());
    }
    let bound = family_bound(g, fam)?;
    for c in 0..bound.valid_from {
        let w = fam.at(c);
        let value = repthy::weyl_dim(g, &w)?;
        report.candidates.push(record(w, None, Evidence::Exact { value, dim_p: dim_p.clone() }));
    }
    let value: BigUint = bound.terms.iter().map(|t| t.size.clone()).sum();
    report.candidates.push(record(
        fam.base.clone(),
        fam.direction.clone(),
        Evidence::LowerBound {
            value,
            dim_p: dim_p.clone(),
            valid_from: bound.valid_from,
            orbits: bound.terms,
        },
    ));
    Ok(())
}

/// The complex case `(g + g, g)`: the isotropy representation is the
/// adjoint of `g`, and an extension would be `V_1 (x) V_2` with
/// `dim V_1 * dim V_2 = dim g` and both factors nontrivial, which is
/// impossible once `d^2 > dim g` for the smallest nontrivial dimension `d`.
pub fn check_complex_case(t: SimpleType, limits: &Limits) -> Result<ObstructionReport> {
    let t = SimpleType::new(t.family(), t.rank())?;
    let rs = RootSystem::new(t);
    let (d, witness) = repthy::smallest_nontrivial_dim(&rs);
    let dim_g = rs.algebra_dim();
    let d_squared = &d * &d;
    let involution: Vec<usize> = (0..rs.rank())
        .map(|i| {
            let mut l = vec![0; rs.rank()];
            l[i] = 1;
            let nu = repthy::weyl_involution(&rs, &Weight::fundamental_ints(&l)).expect("dominant");
            nu.coords().iter().position(|x| !x.is_zero()).expect("fundamental") + 1
        })
        .collect();
    let verdict = if d_squared > dim_g { Verdict::NoExtension } else { Verdict::Inconclusive };
    let log = vec![
        format!("dim g = {dim_g}"),
        format!("d = dim V{witness} = {d}"),
        format!("d^2 = {d_squared} {} {dim_g}", if d_squared > dim_g { ">" } else { "<=" }),
    ];
    Ok(ObstructionReport {
        pair: PairId::Complex(t),
        verdict,
        method: Method::ComplexDSquared,
        dim_p: dim_g.clone(),
        candidates: Vec::new(),
        constraints_log: log,
        parameters: *limits,
        notes: Vec::new(),
        complex: Some(ComplexRecord {
            simple_type: t,
            d,
            d_squared,
            dim_g,
            witness,
            involution,
            rationale: "a real structure forces the second highest weight to be the Weyl \
                        involution of the first, so the two factors are both trivial or \
                        both nontrivial"
                .into(),
        }),
    })
}

// ---------------------------------------------------------------------------
// Replay

fn fault(msg: String) -> Error {
    Error::ConsistencyFault(msg)
}

/// Recomputes every number in `report` through the representation-theory
/// primitives and checks the verdict rules. Returns `ConsistencyFault` on
/// the first disagreement.
pub fn replay(report: &ObstructionReport, limits: &Limits) -> Result<()> {
    if report.verdict == Verdict::NoExtension {
        if let Some(c) = report.candidates.iter().find(|c| !c.eliminated) {
            return Err(fault(format!("NO_EXTENSION with surviving candidate {}", c.weight)));
        }
    }
    for c in &report.candidates {
        if c.eliminated != c.evidence.eliminates() {
            return Err(fault(format!("elimination flag of {} disagrees with its evidence", c.weight)));
        }
    }
    if let Some(cx) = &report.complex {
        let rs = RootSystem::new(cx.simple_type);
        let (d, _) = repthy::smallest_nontrivial_dim(&rs);
        if d != cx.d || rs.algebra_dim() != cx.dim_g || &d * &d != cx.d_squared {
            return Err(fault(format!("complex data of {} do not replay", cx.simple_type)));
        }
        let expect = if cx.d_squared > cx.dim_g { Verdict::NoExtension } else { Verdict::Inconclusive };
        if expect != report.verdict {
            return Err(fault("complex verdict does not follow from d^2 and dim g".into()));
        }
        return Ok(());
    }
    let pair = SymmetricPair::new(report.pair)?;
    let g = pair.g();
    if pair.dim_p() != report.dim_p {
        return Err(fault("dim p does not replay".into()));
    }
    let model: Option<(WeightMultiset, Box<Restrictor<'_>>)> = match report.pair {
        PairId::SoSo(n) => Some(orthogonal_model(n)),
        PairId::SlSo(_) | PairId::SlSp(_) => Some((
            pair.isotropy_weights()?.clone(),
            Box::new(|w: &Weight| pair.restrict(w)) as Box<Restrictor<'_>>,
        )),
        _ => None,
    };
    let lambda1 = pair.isotropy_highest_weight().ok();
    for c in &report.candidates {
        match &c.evidence {
            Evidence::Exact { value, dim_p } => {
                if dim_p != &report.dim_p || &repthy::weyl_dim(g, &c.weight)? != value {
                    return Err(fault(format!("exact dimension of {} does not replay", c.weight)));
                }
                check_restricts(&pair, lambda1, &c.weight)?;
            }
            Evidence::LowerBound { value, dim_p, valid_from, orbits } => {
                let dir = c.family_direction.as_ref().ok_or_else(|| fault("bound without family".into()))?;
                let fam = CandidateFamily { base: c.weight.clone(), direction: Some(dir.clone()), constraints_log: Vec::new() };
                check_restricts(&pair, lambda1, &c.weight)?;
                check_restricts_linear(&pair, dir)?;
                if dim_p != &report.dim_p || *valid_from == 0 {
                    return Err(fault("lower bound parameters do not replay".into()));
                }
                let dirl = g.int_labels(dir)?;
                if dirl.iter().any(|&x| x < 0) || !repthy::is_dominant(g, &c.weight)? {
                    return Err(fault("family leaves the dominant cone".into()));
                }
                let lambda = fam.at(*valid_from);
                let extras: Vec<Weight> = orbits.iter().skip(1).map(|t| t.representative.clone()).collect();
                if orbits.first().map(|t| &t.representative) != Some(&lambda) {
                    return Err(fault("orbit certificate does not start at the family member".into()));
                }
                for t in orbits {
                    if repthy::orbit_size(g, &t.representative)? != t.size {
                        return Err(fault(format!("orbit size of {} does not replay", t.representative)));
                    }
                }
                if &orbit_sum_lower_bound(g, &lambda, &extras)? != value {
                    return Err(fault("orbit sum does not replay".into()));
                }
                // the same shifts give the same bound further along the ray
                let shifts: Vec<Weight> = extras.iter().map(|e| e.minus(&lambda)).collect();
                for step in [1u64, 2, 7] {
                    let member = fam.at(valid_from + step);
                    let ex: Vec<Weight> = shifts.iter().map(|s| member.plus(s)).collect();
                    if &orbit_sum_lower_bound(g, &member, &ex)? != value {
                        return Err(fault(format!("bound is not constant at c = {}", valid_from + step)));
                    }
                }
            }
            Evidence::Gap { value, dim_p } => {
                if dim_p != &report.dim_p || &repthy::smallest_nontrivial_dim(g).0 != value {
                    return Err(fault("dimension gap does not replay".into()));
                }
            }
            Evidence::WeightExcluded { value, .. } => {
                let (target, restrict) = model.as_ref().ok_or_else(|| fault("no weight model".into()))?;
                let labels = g.int_labels(&c.weight)?;
                let res = restricted_weights(g, &labels, &**restrict, limits.freudenthal_cap)?;
                if res.total() != value.to_u64().unwrap_or(0) || is_submultiset(&res, target) {
                    return Err(fault(format!("exclusion of V{} does not replay", c.weight)));
                }
            }
            Evidence::WeightMatch { value, components, matches, .. } => {
                let (target, restrict) = model.as_ref().ok_or_else(|| fault("no weight model".into()))?;
                let mut union = WeightMultiset::new();
                for comp in components {
                    let labels = g.int_labels(comp)?;
                    union = union.union(&restricted_weights(g, &labels, &**restrict, limits.freudenthal_cap)?);
                }
                if union.total() != value.to_u64().unwrap_or(0) || (&union == target) != *matches {
                    return Err(fault("weight match does not replay".into()));
                }
            }
        }
    }
    Ok(())
}

fn check_restricts(pair: &SymmetricPair, lambda1: Option<&Weight>, w: &Weight) -> Result<()> {
    if let Some(l1) = lambda1 {
        if &pair.restrict(w)? != l1 {
            return Err(fault(format!("candidate {w} does not restrict to {l1}")));
        }
    }
    Ok(())
}

fn check_restricts_linear(pair: &SymmetricPair, dir: &Weight) -> Result<()> {
    if !pair.restrict(dir)?.is_zero() {
        return Err(fault(format!("direction {dir} is not in the kernel of r")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(s: &str) -> SymmetricPair {
        SymmetricPair::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn affine_formatting() {
        let a = Affine { constant: 2, coeffs: vec![1, -1, 0] };
        assert_eq!(fmt_affine(&a), "2 + a1 - a2");
        assert_eq!(fmt_affine(&Affine { constant: 0, coeffs: vec![0, -2] }), "-2a2");
        assert_eq!(fmt_affine(&Affine { constant: 0, coeffs: vec![0] }), "0");
        assert_eq!(fmt_combination(&[q(2), q(0), q(1), q(-1)]), "2L1 + L3 - L4");
    }

    #[test]
    fn even_sl_so_gives_a_single_point() {
        let fams = candidate_weights(&pair("sl-so:4")).unwrap();
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0].base, Weight::ambient_ints(&[2, 0, 0, 0]));
        assert!(fams[0].direction.is_none());
    }

    #[test]
    fn odd_sl_so_gives_a_ray() {
        let fams = candidate_weights(&pair("sl-so:5")).unwrap();
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0].base, Weight::ambient_ints(&[2, 0, 0, 0, 0]));
        assert_eq!(fams[0].direction, Some(Weight::ambient_ints(&[1, 1, 1, 1, 0])));
        assert!(fams[0].constraints_log.iter().any(|l| l.starts_with("forced:")));
    }

    #[test]
    fn sl_sp_three_gives_a_single_point() {
        let fams = candidate_weights(&pair("sl-sp:3")).unwrap();
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0].base, Weight::ambient_ints(&[1, 1, 0, 0, 0, 0]));
    }

    #[test]
    fn family_membership() {
        let fam = &candidate_weights(&pair("sl-so:5")).unwrap()[0];
        assert!(fam.contains(&Weight::ambient_ints(&[5, 3, 3, 3, 0])));
        assert!(!fam.contains(&Weight::ambient_ints(&[1, -1, -1, -1, 0])));
        assert_eq!(fam.at(1), Weight::ambient_ints(&[3, 1, 1, 1, 0]));
    }

    #[test]
    fn orbit_sum_examples() {
        let a4 = RootSystem::new("A4".parse().unwrap());
        let lam = Weight::ambient_ints(&[3, 1, 1, 1, 0]);
        let extra = Weight::ambient_ints(&[2, 2, 1, 1, 0]);
        assert_eq!(orbit_sum_lower_bound(&a4, &lam, &[extra]).unwrap(), 50u32.into());
        assert_eq!(
            orbit_sum_lower_bound(&a4, &Weight::ambient_ints(&[2, 0, 0, 0, 0]), &[]).unwrap(),
            5u32.into()
        );
        assert_eq!(orbit_sum_lower_bound(&a4, &Weight::ambient_ints(&[0; 5]), &[]).unwrap(), 1u32.into());
        assert!(matches!(
            orbit_sum_lower_bound(&a4, &Weight::ambient_ints(&[2, 0, 0, 0, 0]), &[Weight::ambient_ints(&[3, 0, 0, 0, 0])]),
            Err(Error::NotAWeightOf(_))
        ));
    }

    #[test]
    fn irreps_of_sl2() {
        let a1 = RootSystem::new("A1".parse().unwrap());
        let reps = irreps_up_to(&a1, 3);
        assert_eq!(reps, vec![(vec![0], 1), (vec![1], 2), (vec![2], 3)]);
    }

    #[test]
    fn report_json_round_trip() {
        let report = check_extension(&pair("sl-so:5"), &Limits::default()).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        let back: ObstructionReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        assert!(json.contains(r#""kind":"lower_bound""#));
        assert!(json.contains(r#""verdict":"NO_EXTENSION""#));
    }
}
