use isob_core::charclass::{
    chern_polynomial, complexification_vanishing, flat_kernel, reps_equal_by_chern, ChernPolynomial,
    Monomial,
};
use isob_core::num::q;
use isob_core::{Weight, WeightMultiset};
use proptest::prelude::*;

fn multiset(ws: &[Vec<i64>]) -> WeightMultiset {
    ws.iter().map(|w| Weight::ambient_ints(w)).collect()
}

fn weights(max_len: usize) -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1usize..=3).prop_flat_map(move |gens| {
        (Just(gens), prop::collection::vec(prop::collection::vec(-5i64..=5, gens), 1..=max_len))
    })
}

/// `e_d` of a list of integers by summing over all `d`-subsets.
fn elementary_by_subsets(xs: &[i64], d: usize) -> i64 {
    (0u32..1 << xs.len())
        .filter(|mask| mask.count_ones() as usize == d)
        .map(|mask| (0..xs.len()).filter(|i| mask >> i & 1 == 1).map(|i| xs[i]).product::<i64>())
        .sum()
}

proptest! {
    #[test]
    fn one_generator_matches_subset_sums(xs in prop::collection::vec(-5i64..=5, 1..=8)) {
        let ws: Vec<Vec<i64>> = xs.iter().map(|&x| vec![x]).collect();
        let c = chern_polynomial(&multiset(&ws)).unwrap();
        for d in 0..=xs.len() {
            let got = c.piece(d).unwrap().coefficient(&Monomial(vec![d as u32]));
            prop_assert_eq!(got, q(elementary_by_subsets(&xs, d)));
        }
    }

    #[test]
    fn chern_equality_iff_multiset_equality((gens, a) in weights(8), seed in any::<u64>(), tweak in any::<bool>()) {
        let mut b = a.clone();
        let k = (seed as usize) % b.len();
        b.rotate_left(k);
        if tweak {
            let j = (seed as usize / 7) % gens;
            b[0][j] += 1;
        }
        let ma = multiset(&a);
        let mb = multiset(&b);
        prop_assert_eq!(reps_equal_by_chern(&ma, &mb).unwrap(), ma == mb);
        prop_assert_eq!(ma == mb, !tweak);
    }

    #[test]
    fn generator_permutation_permutes_monomials((gens, a) in weights(6)) {
        let swapped: Vec<Vec<i64>> = a.iter().map(|w| w.iter().rev().copied().collect()).collect();
        let c = chern_polynomial(&multiset(&a)).unwrap();
        let s = chern_polynomial(&multiset(&swapped)).unwrap();
        prop_assert_eq!(c.generators(), gens);
        for (pc, ps) in c.pieces().iter().zip(s.pieces()) {
            for (m, coef) in pc.terms() {
                let rev = Monomial(m.0.iter().rev().copied().collect());
                prop_assert_eq!(&ps.coefficient(&rev), coef);
            }
            prop_assert_eq!(pc.terms().count(), ps.terms().count());
        }
    }

    #[test]
    fn odd_classes_vanish_when_negation_closed((_, a) in weights(4), zeros in 0usize..=2) {
        let gens = a[0].len();
        let mut ws = a.clone();
        ws.extend(a.iter().map(|w| w.iter().map(|x| -x).collect::<Vec<_>>()));
        ws.extend(std::iter::repeat_n(vec![0; gens], zeros));
        let m = multiset(&ws);
        prop_assert!(complexification_vanishing(&m));
        prop_assert!(chern_polynomial(&m).unwrap().odd_pieces_vanish());
    }

    #[test]
    fn json_round_trip((_, a) in weights(5)) {
        let c = chern_polynomial(&multiset(&a)).unwrap();
        let text = serde_json::to_string(&c).unwrap();
        let back: ChernPolynomial = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, c);
    }
}

#[test]
fn flat_kernel_small_cases() {
    // SO(2): p1 = w1^2 in the kernel, e = w1 outside it, e^2 = p1.
    let k = flat_kernel(2).unwrap();
    assert_eq!(k.kernel_generators.len(), 1);
    assert_eq!(k.kernel_generators[0].polynomial.coefficient(&Monomial(vec![2])), q(1));
    let e = k.euler.unwrap();
    assert_eq!(e.degree, 2);
    assert!(!e.in_kernel && e.square_in_kernel && e.square_equals_top_pontryagin);

    // SO(4): p1 = w1^2 + w2^2, p2 = w1^2 w2^2.
    let k = flat_kernel(4).unwrap();
    let p1 = &k.kernel_generators[0].polynomial;
    assert_eq!(p1.coefficient(&Monomial(vec![2, 0])), q(1));
    assert_eq!(p1.coefficient(&Monomial(vec![0, 2])), q(1));
    assert_eq!(p1.coefficient(&Monomial(vec![1, 1])), q(0));
    let p2 = &k.kernel_generators[1].polynomial;
    assert_eq!(p2.terms().count(), 1);
    assert_eq!(p2.coefficient(&Monomial(vec![2, 2])), q(1));

    let k = flat_kernel(7).unwrap();
    assert_eq!(k.kernel_generators.len(), 3);
    assert!(k.euler.is_none());
    assert!(flat_kernel(0).is_err());
}

#[test]
fn chern_rejects_bad_input() {
    let mixed: WeightMultiset = [Weight::ambient_ints(&[1]), Weight::ambient_ints(&[1, 0])].into_iter().collect();
    assert!(chern_polynomial(&mixed).is_err());
    let a = multiset(&[vec![1], vec![2]]);
    let b = multiset(&[vec![1]]);
    assert!(reps_equal_by_chern(&a, &b).is_err());
}
