//! Independent cross-checks of the representation-theory primitives.

use std::collections::{BTreeMap, HashSet, VecDeque};

use isob_core::config::Limits;
use isob_core::num::q;
use isob_core::obstruction::{
    brute_force_candidates, check_extension, derive_candidates, replay, Evidence,
};
use isob_core::repthy::{freudenthal_multiplicities, orbit_size, weyl_dim, weyl_orbit};
use isob_core::sympair::{PairId, SymmetricPair};
use isob_core::{Basis, Family, RootSystem, SimpleType, Weight};
use num_bigint::BigUint;
use proptest::prelude::*;

fn rs(f: Family, n: usize) -> RootSystem {
    RootSystem::new(SimpleType::new(f, n).unwrap())
}

/// Orbit of `rho` under the simple reflections. `rho` is regular, so the
/// orbit is in bijection with the group.
fn reflection_closure_order(r: &RootSystem) -> usize {
    let start = vec![1i64; r.rank()];
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        for i in 0..r.rank() {
            let next = r.reflect_labels(&cur, i);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.len()
}

#[test]
fn weyl_group_orders_by_reflection_closure() {
    let mut types = vec![(Family::G, 2), (Family::F, 4), (Family::D, 6), (Family::E, 6)];
    for n in 1..=3 {
        types.push((Family::A, n));
        if n >= 2 {
            types.push((Family::B, n));
            types.push((Family::C, n));
        }
    }
    types.push((Family::D, 4));
    for (f, n) in types {
        let r = rs(f, n);
        assert_eq!(
            BigUint::from(reflection_closure_order(&r)),
            *r.weyl_group_order(),
            "{f:?}{n}"
        );
    }
}

#[test]
fn e8_order_by_orbit_stabilizer() {
    // Roots of E8 form one orbit; the stabilizer of the highest root is
    // W(E7), whose highest root orbit has stabilizer W(D6).
    let e8 = rs(Family::E, 8);
    let e7 = rs(Family::E, 7);
    let d6 = rs(Family::D, 6);
    let roots8 = weyl_orbit(&e8, e8.highest_root(), 1000).unwrap().len();
    let roots7 = weyl_orbit(&e7, e7.highest_root(), 1000).unwrap().len();
    assert_eq!(roots8, 240);
    assert_eq!(roots7, 126);
    let order = BigUint::from(roots8 * roots7 * reflection_closure_order(&d6));
    assert_eq!(order, *e8.weyl_group_order());
    assert_eq!(order, BigUint::from(696_729_600u64));
}

fn permutations(xs: &[i64]) -> HashSet<Vec<i64>> {
    if xs.len() <= 1 {
        return HashSet::from([xs.to_vec()]);
    }
    let mut out = HashSet::new();
    for i in 0..xs.len() {
        let mut rest = xs.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.insert(p);
        }
    }
    out
}

/// Dynkin labels of an ambient `gl_n` weight: consecutive differences.
fn a_labels(x: &[i64]) -> Vec<i64> {
    x.windows(2).map(|w| w[0] - w[1]).collect()
}

#[test]
fn type_a_orbits_are_permutations() {
    let r = rs(Family::A, 2);
    for x in [[3, 1, 0], [2, 2, 0], [1, 0, -1], [5, 0, 0], [0, 0, 0]] {
        let expected: HashSet<Vec<i64>> = permutations(&x).iter().map(|p| a_labels(p)).collect();
        let w = Weight::fundamental_ints(&a_labels(&x));
        let orbit: HashSet<Vec<i64>> = weyl_orbit(&r, &w, 100)
            .unwrap()
            .iter()
            .map(|o| r.int_labels(o).unwrap())
            .collect();
        assert_eq!(orbit, expected, "{x:?}");
        assert_eq!(orbit_size(&r, &w).unwrap(), BigUint::from(expected.len()));
    }
}

/// Hook-content formula for `gl_n` with partition `lambda`.
fn hook_content_dim(n: i64, lambda: &[i64]) -> BigUint {
    let conj = |j: i64| lambda.iter().filter(|&&l| l > j).count() as i64;
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for (i, &row) in lambda.iter().enumerate() {
        let i = i as i64;
        for j in 0..row {
            num *= (n + j - i) as u64;
            den *= ((row - j) + (conj(j) - i) - 1) as u64;
        }
    }
    num / den
}

proptest! {
    #[test]
    fn type_a_dim_matches_hook_content(n in 2usize..6, raw in prop::collection::vec(0i64..4, 5)) {
        let labels = &raw[..n - 1];
        let mut lambda = vec![0i64; n];
        for i in (0..n - 1).rev() {
            lambda[i] = lambda[i + 1] + labels[i];
        }
        let r = rs(Family::A, n - 1);
        let d = weyl_dim(&r, &Weight::fundamental_ints(labels)).unwrap();
        prop_assert_eq!(d, hook_content_dim(n as i64, &lambda));
    }

    #[test]
    fn dim_grows_along_fundamental_weights(
        pick in 0usize..6,
        raw in prop::collection::vec(0i64..3, 4),
        i in 0usize..4,
    ) {
        let types = [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::D, 4), (Family::G, 2), (Family::F, 4)];
        let (f, n) = types[pick];
        let r = rs(f, n);
        let i = i % n;
        let mut labels = raw[..n].to_vec();
        let before = weyl_dim(&r, &Weight::fundamental_ints(&labels)).unwrap();
        labels[i] += 1;
        let after = weyl_dim(&r, &Weight::fundamental_ints(&labels)).unwrap();
        prop_assert!(after > before);
    }

    #[test]
    fn freudenthal_is_weyl_invariant(pick in 0usize..4, raw in prop::collection::vec(0i64..3, 3)) {
        let types = [(Family::A, 2), (Family::B, 2), (Family::C, 3), (Family::G, 2)];
        let (f, n) = types[pick];
        let r = rs(f, n);
        let lambda = Weight::fundamental_ints(&raw[..n]);
        let m = freudenthal_multiplicities(&r, &lambda, 100_000).unwrap();
        prop_assert_eq!(BigUint::from(m.total()), weyl_dim(&r, &lambda).unwrap());
        for (w, k) in m.iter() {
            let labels = r.int_labels(w).unwrap();
            let dom = Weight::fundamental_ints(&r.dominant_labels(&labels));
            prop_assert_eq!(m.multiplicity(&dom), k);
            for i in 0..n {
                let s = Weight::fundamental_ints(&r.reflect_labels(&labels, i));
                prop_assert_eq!(m.multiplicity(&s), k);
            }
        }
    }
}

#[test]
fn known_zero_weight_multiplicities() {
    // Zero weight of the adjoint representation has multiplicity = rank.
    for (f, n) in [(Family::A, 2), (Family::G, 2), (Family::F, 4), (Family::E, 6), (Family::E, 8)] {
        let r = rs(f, n);
        let m = freudenthal_multiplicities(&r, r.highest_root(), 100_000).unwrap();
        let zero = Weight::zero(r.highest_root().basis(), r.highest_root().len());
        assert_eq!(m.multiplicity(&zero), n as u64, "{f:?}{n}");
        assert_eq!(BigUint::from(m.total()), r.algebra_dim());
    }
    // A2 with labels (2,2): the zero weight has multiplicity 3.
    let a2 = rs(Family::A, 2);
    let m = freudenthal_multiplicities(&a2, &Weight::fundamental_ints(&[2, 2]), 1000).unwrap();
    assert_eq!(m.multiplicity(&Weight::fundamental_ints(&[0, 0])), 3);
    assert_eq!(m.total(), 27);
}

#[test]
fn dim_equals_sum_over_dominant_weights_of_orbit_sizes() {
    let r = rs(Family::B, 3);
    for labels in [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [2, 0, 1]] {
        let lambda = Weight::fundamental_ints(&labels);
        let m = freudenthal_multiplicities(&r, &lambda, 100_000).unwrap();
        let mut by_dominant: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
        for (w, k) in m.iter() {
            let l = r.int_labels(w).unwrap();
            if l.iter().all(|&x| x >= 0) {
                by_dominant.insert(l, k);
            }
        }
        let total: BigUint = by_dominant
            .iter()
            .map(|(l, &k)| orbit_size(&r, &Weight::fundamental_ints(l)).unwrap() * k)
            .sum();
        assert_eq!(total, weyl_dim(&r, &lambda).unwrap());
    }
}

fn small_pairs() -> Vec<PairId> {
    let mut v = Vec::new();
    for n in 3..=6 {
        v.push(PairId::SlSo(n));
    }
    for n in 2..=4 {
        v.push(PairId::SlSp(n));
    }
    v
}

#[test]
fn brute_force_candidates_lie_in_derived_families() {
    for id in small_pairs() {
        let pair = SymmetricPair::new(id).unwrap();
        let families = derive_candidates(&pair).unwrap();
        assert!(families.unresolved.is_none(), "{id}");
        let brute = brute_force_candidates(&pair, 4).unwrap();
        assert!(!brute.is_empty(), "{id}");
        for w in &brute {
            assert!(families.families.iter().any(|f| f.contains(w)), "{id}: {w} not covered");
        }
    }
}

#[test]
fn lower_bounds_hold_on_sampled_family_members() {
    let limits = Limits::default();
    for id in small_pairs().into_iter().chain([PairId::SlSo(7), PairId::SlSo(9)]) {
        let pair = SymmetricPair::new(id).unwrap();
        let report = check_extension(&pair, &limits).unwrap();
        for rec in &report.candidates {
            let (Evidence::LowerBound { value, valid_from, .. }, Some(dir)) =
                (&rec.evidence, &rec.family_direction)
            else {
                continue;
            };
            for c in [0u64, 1, 2, 5, 10] {
                if c < *valid_from {
                    continue;
                }
                let w = rec.weight.plus(&dir.scaled(&q(c as i64)));
                let d = weyl_dim(pair.g(), &w).unwrap();
                assert!(&d >= value, "{id} c={c}: {d} < {value}");
            }
        }
    }
}

#[test]
fn replay_accepts_reports_and_rejects_tampering() {
    let limits = Limits::default();
    let ids = [PairId::SlSo(5), PairId::SlSo(6), PairId::SoSo(5), PairId::E6F4];
    for id in ids {
        let report = check_extension(&SymmetricPair::new(id).unwrap(), &limits).unwrap();
        replay(&report, &limits).unwrap();

        let mut bad = report.clone();
        bad.dim_p += 1u32;
        assert!(replay(&bad, &limits).is_err(), "{id} dim_p");

        let mut bad = report.clone();
        match &mut bad.candidates[0].evidence {
            Evidence::Exact { value, .. }
            | Evidence::LowerBound { value, .. }
            | Evidence::Gap { value, .. }
            | Evidence::WeightExcluded { value, .. }
            | Evidence::WeightMatch { value, .. } => *value += 1u32,
        }
        assert!(replay(&bad, &limits).is_err(), "{id} value");
    }
}

#[test]
fn basis_conversion_round_trips() {
    for (f, n) in [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::D, 4), (Family::G, 2), (Family::E, 7)] {
        let r = rs(f, n);
        for w in r.fundamental_weights() {
            let fw = r.to_fundamental(w).unwrap();
            assert_eq!(fw.basis(), Basis::Fundamental);
            assert_eq!(&r.to_ambient(&fw).unwrap(), w);
        }
    }
}
