//! Highest-weight representations: dominance, Weyl orbits, the Weyl
//! dimension formula, duality and Freudenthal multiplicities.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::num::Q;
use crate::rootsys::{Family, RootSystem, SimpleType};
use crate::weight::{Basis, Weight, WeightMultiset};

/// `true` iff every Dynkin label of `w` is nonnegative. `w` must be integral.
pub fn is_dominant(rs: &RootSystem, w: &Weight) -> Result<bool> {
    Ok(rs.int_labels(w)?.iter().all(|&l| l >= 0))
}

/// An irreducible representation given by its dominant integral highest
/// weight, stored as Dynkin labels.
#[derive(Clone, Debug)]
pub struct HighestWeightRep<'a> {
    rs: &'a RootSystem,
    labels: Vec<i64>,
}

impl<'a> HighestWeightRep<'a> {
    pub fn new(rs: &'a RootSystem, highest: &Weight) -> Result<Self> {
        let labels = rs.int_labels(highest)?;
        if labels.iter().any(|&l| l < 0) {
            return Err(Error::NotDominant(highest.to_string()));
        }
        Ok(Self { rs, labels })
    }

    pub fn from_labels(rs: &'a RootSystem, labels: &[i64]) -> Result<Self> {
        Self::new(rs, &Weight::fundamental_ints(labels))
    }

    pub fn root_system(&self) -> &RootSystem {
        self.rs
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn highest_weight(&self, basis: Basis) -> Weight {
        self.rs.weight_from_labels(&self.labels, basis)
    }

    pub fn dim(&self) -> BigUint {
        dim_from_labels(self.rs, &self.labels)
    }

    pub fn multiplicities(&self, cap: u64) -> Result<WeightMultiset> {
        let mults = freudenthal_labels(self.rs, &self.labels, cap)?;
        Ok(to_multiset(self.rs, mults, Basis::Fundamental))
    }
}

/// Weyl dimension formula `prod (lambda + rho, alpha) / (rho, alpha)`.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<BigUint> {
    Ok(HighestWeightRep::new(rs, lambda)?.dim())
}

pub(crate) fn dim_from_labels(rs: &RootSystem, labels: &[i64]) -> BigUint {
    let lambda = rs.weight_from_labels(labels, Basis::Ambient);
    let shifted = lambda.plus(rs.weyl_vector());
    let mut num = Q::one();
    let mut den = Q::one();
    for alpha in rs.positive_roots() {
        num *= rs.ambient_inner(shifted.coords(), alpha.coords());
        den *= rs.ambient_inner(rs.weyl_vector().coords(), alpha.coords());
    }
    let d = num / den;
    assert!(d.is_integer(), "Weyl dimension is an integer");
    d.to_integer().to_biguint().expect("Weyl dimension is positive")
}

/// Minimum of `weyl_dim` over the fundamental weights, with the first
/// minimizing fundamental weight (lowest Bourbaki index) as witness.
pub fn smallest_nontrivial_dim(rs: &RootSystem) -> (BigUint, Weight) {
    let mut best: Option<(BigUint, usize)> = None;
    for i in 0..rs.rank() {
        let mut labels = vec![0; rs.rank()];
        labels[i] = 1;
        let d = dim_from_labels(rs, &labels);
        if best.as_ref().is_none_or(|(b, _)| d < *b) {
            best = Some((d, i));
        }
    }
    let (d, i) = best.expect("rank is positive");
    let mut labels = vec![0; rs.rank()];
    labels[i] = 1;
    (d, Weight::fundamental_ints(&labels))
}

/// Weyl orbit of an integral weight, deduplicated and sorted in decreasing
/// canonical order, in the basis of the input.
pub fn weyl_orbit(rs: &RootSystem, w: &Weight, cap: u64) -> Result<Vec<Weight>> {
    let size = orbit_size(rs, w)?;
    if size > BigUint::from(cap) {
        return Err(Error::OrbitTooLarge { size, cap });
    }
    let start = rs.int_labels(w)?;
    let mut seen: HashSet<Vec<i64>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        for i in 0..rs.rank() {
            if cur[i] == 0 {
                continue;
            }
            let next = rs.reflect_labels(&cur, i);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<Weight> =
        seen.into_iter().map(|l| rs.weight_from_labels(&l, w.basis())).collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// `|W| / |Stab(w)|`, where the stabilizer of the dominant conjugate is the
/// parabolic subgroup on its zero labels.
pub fn orbit_size(rs: &RootSystem, w: &Weight) -> Result<BigUint> {
    let labels = rs.int_labels(w)?;
    Ok(orbit_size_labels(rs, &labels))
}

pub(crate) fn orbit_size_labels(rs: &RootSystem, labels: &[i64]) -> BigUint {
    let dom = rs.dominant_labels(labels);
    let zeros: Vec<usize> = (0..rs.rank()).filter(|&i| dom[i] == 0).collect();
    rs.weyl_group_order() / parabolic_order(rs.cartan_matrix(), &zeros)
}

/// Order of the parabolic subgroup generated by the simple reflections in
/// `nodes`, found by identifying the Dynkin type of each connected
/// component of the induced subdiagram.
pub fn parabolic_order(cartan: &[Vec<i64>], nodes: &[usize]) -> BigUint {
    let mut order = BigUint::one();
    let mut visited: HashSet<usize> = HashSet::new();
    for &start in nodes {
        if !visited.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &u in nodes {
                if cartan[v][u] != 0 && u != v && visited.insert(u) {
                    comp.push(u);
                    stack.push(u);
                }
            }
        }
        order *= component_type(cartan, &comp).weyl_group_order();
    }
    order
}

fn component_type(cartan: &[Vec<i64>], comp: &[usize]) -> SimpleType {
    let r = comp.len();
    let bond = |a: usize, b: usize| cartan[a][b] * cartan[b][a];
    let neighbours =
        |v: usize| comp.iter().copied().filter(move |&u| u != v && cartan[v][u] != 0);
    let degree = |v: usize| neighbours(v).count();
    let pairs = || comp.iter().flat_map(|&a| comp.iter().map(move |&b| (a, b))).filter(|(a, b)| a < b);
    if pairs().any(|(a, b)| bond(a, b) == 3) {
        return SimpleType::unchecked(Family::G, 2);
    }
    if let Some((a, b)) = pairs().find(|&(a, b)| bond(a, b) == 2) {
        if r == 4 && degree(a) == 2 && degree(b) == 2 {
            return SimpleType::unchecked(Family::F, 4);
        }
        return SimpleType::unchecked(Family::B, r);
    }
    if let Some(branch) = comp.iter().copied().find(|&v| degree(v) == 3) {
        let mut arms: Vec<usize> = neighbours(branch)
            .map(|first| {
                let (mut prev, mut cur, mut len) = (branch, first, 1);
                loop {
                    let next = neighbours(cur).find(|&u| u != prev);
                    match next {
                        Some(n) => {
                            prev = cur;
                            cur = n;
                            len += 1;
                        }
                        None => break len,
                    }
                }
            })
            .collect();
        arms.sort_unstable();
        return match (arms[0], arms[1]) {
            (1, 1) => SimpleType::unchecked(Family::D, r),
            _ => SimpleType::unchecked(Family::E, r),
        };
    }
    SimpleType::unchecked(Family::A, r)
}

/// Highest weight of the dual representation, `-w_0(lambda)`, in the basis
/// of the input.
pub fn weyl_involution(rs: &RootSystem, lambda: &Weight) -> Result<Weight> {
    let labels = rs.int_labels(lambda)?;
    if labels.iter().any(|&l| l < 0) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let neg: Vec<i64> = labels.iter().map(|l| -l).collect();
    Ok(rs.weight_from_labels(&rs.dominant_labels(&neg), lambda.basis()))
}

/// Full weight multiset of `V_lambda` via the Freudenthal recursion, in the
/// basis of `lambda`. Fails with `CapExceeded` once the running total of
/// multiplicities passes `cap`.
pub fn freudenthal_multiplicities(rs: &RootSystem, lambda: &Weight, cap: u64) -> Result<WeightMultiset> {
    let labels = rs.int_labels(lambda)?;
    if labels.iter().any(|&l| l < 0) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let mults = freudenthal_labels(rs, &labels, cap)?;
    Ok(to_multiset(rs, mults, lambda.basis()))
}

fn to_multiset(rs: &RootSystem, mults: BTreeMap<Vec<i64>, u64>, basis: Basis) -> WeightMultiset {
    let mut out = WeightMultiset::new();
    for (l, m) in mults {
        out.insert(rs.weight_from_labels(&l, basis), m);
    }
    out
}

/// `lambda - mu` as simple-root coefficients if it is a nonnegative integer
/// combination of simple roots.
fn depth_below(rs: &RootSystem, lambda: &[i64], mu: &[i64]) -> Option<i64> {
    let diff: Vec<i64> = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
    let coeffs = rs.root_coefficients(&diff)?;
    coeffs.iter().all(|&c| c >= 0).then(|| coeffs.iter().sum())
}

/// Inner product of label vectors against an integer-scaled Gram matrix.
fn gram_inner(gram: &[Vec<i64>], a: &[i64], b: &[i64]) -> i128 {
    let mut acc = 0i128;
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y != 0 {
                acc += i128::from(gram[i][j]) * i128::from(x) * i128::from(y);
            }
        }
    }
    acc
}

pub(crate) fn freudenthal_labels(
    rs: &RootSystem,
    lambda: &[i64],
    cap: u64,
) -> Result<BTreeMap<Vec<i64>, u64>> {
    let n = rs.rank();
    // Freudenthal's ratio is invariant under scaling the form.
    let gram = &rs.scaled_fundamental_gram().0;

    // Saturated weight set: every weight of V_lambda is reached from lambda
    // by subtracting simple roots one at a time.
    let mut depth: HashMap<Vec<i64>, i64> = HashMap::from([(lambda.to_vec(), 0)]);
    let mut queue = VecDeque::from([lambda.to_vec()]);
    while let Some(mu) = queue.pop_front() {
        let d = depth[&mu];
        for i in 0..n {
            let next: Vec<i64> =
                mu.iter().zip(rs.simple_root_labels(i)).map(|(a, b)| a - b).collect();
            if depth.contains_key(&next) {
                continue;
            }
            let dom = rs.dominant_labels(&next);
            if depth_below(rs, lambda, &dom).is_some() {
                depth.insert(next.clone(), d + 1);
                queue.push_back(next);
                if depth.len() as u64 > cap {
                    return Err(Error::CapExceeded { cap });
                }
            }
        }
    }

    let mut dominant: Vec<(&Vec<i64>, i64)> = depth
        .iter()
        .filter(|(mu, _)| mu.iter().all(|&l| l >= 0))
        .map(|(mu, &d)| (mu, d))
        .collect();
    dominant.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(b.0)));

    let rho = vec![1i64; n];
    let shift = |v: &[i64]| -> Vec<i64> { v.iter().zip(&rho).map(|(a, b)| a + b).collect() };
    let top = {
        let s = shift(lambda);
        gram_inner(gram, &s, &s)
    };
    let roots = rs.positive_root_labels();
    let mut dom_mult: HashMap<Vec<i64>, u64> = HashMap::new();
    for (mu, d) in dominant {
        if d == 0 {
            dom_mult.insert(mu.clone(), 1);
            continue;
        }
        let mut sum = 0i128;
        for alpha in &roots {
            let mut nu: Vec<i64> = mu.iter().zip(alpha).map(|(a, b)| a + b).collect();
            while depth.contains_key(&nu) {
                let m = dom_mult[&rs.dominant_labels(&nu)];
                sum += i128::from(m) * gram_inner(gram, &nu, alpha);
                for (x, a) in nu.iter_mut().zip(alpha) {
                    *x += a;
                }
            }
        }
        let s = shift(mu);
        let denom = top - gram_inner(gram, &s, &s);
        if denom <= 0 || (2 * sum) % denom != 0 || 2 * sum / denom <= 0 {
            return Err(Error::ConsistencyFault(format!(
                "Freudenthal produced multiplicity {}/{denom} at {mu:?}",
                2 * sum
            )));
        }
        let m = u64::try_from(2 * sum / denom).map_err(|_| Error::CapExceeded { cap })?;
        dom_mult.insert(mu.clone(), m);
    }

    let mut out = BTreeMap::new();
    let mut total: u64 = 0;
    for mu in depth.keys() {
        let m = dom_mult[&rs.dominant_labels(mu)];
        total = total.saturating_add(m);
        if total > cap {
            return Err(Error::CapExceeded { cap });
        }
        out.insert(mu.clone(), m);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn dominance_examples() {
        let a4 = rs("A4");
        assert!(is_dominant(&a4, &Weight::ambient_ints(&[2, 0, 0, 0, 0])).unwrap());
        assert!(!is_dominant(&a4, &Weight::ambient_ints(&[0, 2, 0, 0, 0])).unwrap());
        assert!(is_dominant(&a4, &Weight::ambient_ints(&[5, 3, 3, 3, 0])).unwrap());
        assert!(matches!(
            is_dominant(&a4, &Weight::ambient_ints(&[1, 0])),
            Err(Error::BasisMismatch(_))
        ));
    }

    #[test]
    fn dimension_examples() {
        let a4 = rs("A4");
        assert_eq!(weyl_dim(&a4, &Weight::ambient_ints(&[2, 0, 0, 0, 0])).unwrap(), 15u32.into());
        let a5 = rs("A5");
        assert_eq!(
            weyl_dim(&a5, &Weight::ambient_ints(&[1, 1, 0, 0, 0, 0])).unwrap(),
            15u32.into()
        );
        let a2 = rs("A2");
        assert_eq!(weyl_dim(&a2, &Weight::fundamental_ints(&[1, 1])).unwrap(), 8u32.into());
        assert_eq!(weyl_dim(&a2, &Weight::fundamental_ints(&[0, 0])).unwrap(), 1u32.into());
        assert!(matches!(
            weyl_dim(&a2, &Weight::fundamental_ints(&[-1, 0])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn smallest_dims() {
        assert_eq!(smallest_nontrivial_dim(&rs("E6")).0, 27u32.into());
        assert_eq!(smallest_nontrivial_dim(&rs("F4")).0, 26u32.into());
        assert_eq!(smallest_nontrivial_dim(&rs("B3")).0, 7u32.into());
        let (d, w) = smallest_nontrivial_dim(&rs("B2"));
        assert_eq!(d, 4u32.into());
        assert_eq!(w, Weight::fundamental_ints(&[0, 1]));
        assert_eq!(smallest_nontrivial_dim(&rs("E8")).0, 248u32.into());
    }

    #[test]
    fn orbit_examples() {
        let a2 = rs("A2");
        assert_eq!(weyl_orbit(&a2, &Weight::fundamental_ints(&[1, 0]), 100).unwrap().len(), 3);
        let a4 = rs("A4");
        let lam = Weight::ambient_ints(&[3, 1, 1, 1, 0]);
        assert_eq!(weyl_orbit(&a4, &lam, 1000).unwrap().len(), 20);
        assert_eq!(orbit_size(&a4, &lam).unwrap(), 20u32.into());
        let lam2 = Weight::ambient_ints(&[2, 2, 1, 1, 0]);
        assert_eq!(weyl_orbit(&a4, &lam2, 1000).unwrap().len(), 30);
        assert_eq!(orbit_size(&a4, &Weight::ambient_ints(&[2, 0, 0, 0, 0])).unwrap(), 5u32.into());
        assert_eq!(orbit_size(&a4, &Weight::ambient_ints(&[0; 5])).unwrap(), BigUint::one());
        assert!(matches!(
            weyl_orbit(&a4, &lam2, 10),
            Err(Error::OrbitTooLarge { .. })
        ));
    }

    #[test]
    fn orbit_is_sorted_descending_in_input_basis() {
        let a2 = rs("A2");
        let orbit = weyl_orbit(&a2, &Weight::ambient_ints(&[1, 0, 0]), 10).unwrap();
        assert_eq!(orbit[0], Weight::ambient_ints(&[1, 0, 0]));
        assert!(orbit.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn parabolic_types() {
        let e8 = rs("E8");
        let all: Vec<usize> = (0..8).collect();
        assert_eq!(parabolic_order(e8.cartan_matrix(), &all), 696_729_600u32.into());
        let e7: Vec<usize> = (0..7).collect();
        assert_eq!(parabolic_order(e8.cartan_matrix(), &e7), 2_903_040u32.into());
        let d7: Vec<usize> = (1..8).collect();
        assert_eq!(parabolic_order(e8.cartan_matrix(), &d7), (64u64 * 5040).into());
        let f4 = rs("F4");
        assert_eq!(parabolic_order(f4.cartan_matrix(), &[0, 1, 2, 3]), 1152u32.into());
        assert_eq!(parabolic_order(f4.cartan_matrix(), &[1, 2, 3]), 48u32.into());
        assert_eq!(parabolic_order(f4.cartan_matrix(), &[0, 1]), 6u32.into());
    }

    #[test]
    fn involution_examples() {
        let a2 = rs("A2");
        assert_eq!(
            weyl_involution(&a2, &Weight::fundamental_ints(&[1, 0])).unwrap(),
            Weight::fundamental_ints(&[0, 1])
        );
        let b3 = rs("B3");
        let w = Weight::fundamental_ints(&[1, 2, 3]);
        assert_eq!(weyl_involution(&b3, &w).unwrap(), w);
        let e6 = rs("E6");
        assert_eq!(
            weyl_involution(&e6, &Weight::fundamental_ints(&[1, 0, 0, 0, 0, 0])).unwrap(),
            Weight::fundamental_ints(&[0, 0, 0, 0, 0, 1])
        );
    }

    #[test]
    fn freudenthal_examples() {
        let a2 = rs("A2");
        let adj = freudenthal_multiplicities(&a2, &Weight::fundamental_ints(&[1, 1]), 1000).unwrap();
        assert_eq!(adj.multiplicity(&Weight::fundamental_ints(&[0, 0])), 2);
        assert_eq!(adj.total(), 8);
        let a1 = rs("A1");
        let three = freudenthal_multiplicities(&a1, &Weight::fundamental_ints(&[2]), 10).unwrap();
        assert_eq!(three.expanded(), vec![
            Weight::fundamental_ints(&[-2]),
            Weight::fundamental_ints(&[0]),
            Weight::fundamental_ints(&[2]),
        ]);
        let a3 = rs("A3");
        let sym2 = freudenthal_multiplicities(&a3, &Weight::ambient_ints(&[2, 0, 0, 0]), 100).unwrap();
        assert_eq!(sym2.total(), 10);
        let e8 = rs("E8");
        let mut l = vec![0; 8];
        l[7] = 1;
        let adj8 = freudenthal_multiplicities(&e8, &Weight::fundamental_ints(&l), 1000).unwrap();
        assert_eq!(adj8.total(), 248);
        assert_eq!(adj8.multiplicity(&Weight::fundamental_ints(&[0; 8])), 8);
    }

    #[test]
    fn freudenthal_cap() {
        let a2 = rs("A2");
        assert!(matches!(
            freudenthal_multiplicities(&a2, &Weight::fundamental_ints(&[3, 3]), 20),
            Err(Error::CapExceeded { cap: 20 })
        ));
    }
}
