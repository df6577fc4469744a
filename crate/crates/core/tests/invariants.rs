mod common;

use std::collections::HashSet;

use proptest::prelude::*;

use common::*;
use coxcess::coxgen::{CoxeterGroup, CoxeterMatrix, FiniteCoxeterGroup, RootSystem};
use coxcess::excess::{self, partition_into_classes, Budget, InvolutionTable};
use coxcess::reps::{all_maximal_split_partitions, dual_cycle_type, min_lambda, w_lambda_rho};
use coxcess::roots::{lambda_count, length, length_b, length_d, sigma_set, ClassicalType};
use coxcess::{SignedCycleType, SignedPermutation};

use ClassicalType::{A, B, D};

fn signed_perm(max_n: usize) -> impl Strategy<Value = W> {
    (1..=max_n).prop_flat_map(|n| {
        (Just(identity(n)).prop_shuffle(), proptest::collection::vec(any::<bool>(), n)).prop_map(|(p, signs)| {
            p.into_iter()
                .zip(signs)
                .map(|(v, s)| if s { -v } else { v })
                .collect()
        })
    })
}

fn signed_perm_of(n: usize) -> impl Strategy<Value = W> {
    (Just(identity(n)).prop_shuffle(), proptest::collection::vec(any::<bool>(), n))
        .prop_map(|(p, signs)| p.into_iter().zip(signs).map(|(v, s)| if s { -v } else { v }).collect())
}

/// `n - z + 2 Σ_{i<ν} (ν - i) λ_i` over the negative parts in ascending order.
fn lambda_bound(ct: &SignedCycleType) -> usize {
    let mut neg = ct.negative_parts().to_vec();
    neg.sort();
    let nu = neg.len();
    let z = ct.num_cycles();
    let tail: usize = neg.iter().enumerate().take(nu.saturating_sub(1)).map(|(i, l)| (nu - 1 - i) * l).sum();
    ct.rank() - z + 2 * tail
}

#[test]
fn cycles_recompose() {
    for n in 1..=4 {
        for w in SignedPermutation::all(n) {
            assert_eq!(SignedPermutation::from_cycles(n, &w.cycles()).unwrap(), w);
        }
    }
}

#[test]
fn conjugation_keeps_cycle_type_exhaustive() {
    for n in 1..=4 {
        let all: Vec<_> = SignedPermutation::all(n).collect();
        for g in &all {
            for h in &all {
                assert_eq!(h.conjugate_by(g).cycle_type(), h.cycle_type());
            }
        }
    }
}

#[test]
fn lengths_match_oracle_and_inverse_exhaustive() {
    for n in 1..=4 {
        let (ob, od, oa) = (Oracle::new(B, n), Oracle::new(D, n), Oracle::new(A, n));
        let w0 = identity(n).iter().map(|v| -v).collect::<W>();
        for w in all_elements(B, n) {
            let sw = to_sp(&w);
            let inv = to_sp(&inverse(&w));
            assert_eq!(length_b(&sw), ob.length(&w));
            assert_eq!(length_d(&sw), od.length(&w));
            assert_eq!(length_b(&sw), length_b(&inv));
            assert_eq!(length_d(&sw), length_d(&inv));
            if w.iter().all(|&v| v > 0) {
                assert_eq!(length(&sw, A).unwrap(), oa.length(&w));
            }
            let ww0 = to_sp(&compose(&w, &w0));
            assert_eq!(lambda_count(&ww0), n * n - n - lambda_count(&sw));
            assert_eq!(sigma_set(&ww0).len(), n - sigma_set(&sw).len());
        }
    }
}

#[test]
fn lambda_and_sigma_lower_bounds() {
    for n in 1..=5 {
        for w in SignedPermutation::all(n) {
            let ct = w.cycle_type();
            assert_eq!(min_lambda(&ct), lambda_bound(&ct));
            assert!(lambda_count(&w) >= lambda_bound(&ct), "{}", w.to_window_string());
            assert!(sigma_set(&w).len() >= ct.num_negative());
        }
    }
}

#[test]
fn excess_of_inverse_exhaustive() {
    let table = InvolutionTable::new(B, 3, &Budget::default()).unwrap();
    for w in SignedPermutation::all(3) {
        assert_eq!(table.excess(&w).unwrap().excess, table.excess(&w.inverse()).unwrap().excess);
    }
}

#[test]
fn d_flavor_representatives_have_zero_excess() {
    for n in 2..=5 {
        let table = InvolutionTable::new(D, n, &Budget::default()).unwrap();
        for msp in all_maximal_split_partitions(n) {
            let w = w_lambda_rho(&msp);
            if w.in_type_d() {
                assert_eq!(table.excess(&w).unwrap().excess, 0, "{msp}");
            }
        }
    }
}

#[test]
fn conjugation_by_last_sign_change_in_d4() {
    let n = 4;
    let table = InvolutionTable::new(D, n, &Budget::default()).unwrap();
    let c = SignedPermutation::sign_change(n, n);
    for w in excess::elements(D, n, &Budget::default()).unwrap() {
        let v = w.conjugate_by(&c);
        assert_eq!(length_d(&v), length_d(&w));
        let report = table.excess(&w).unwrap();
        let (s, t) = (report.sigma.conjugate_by(&c), report.tau.conjugate_by(&c));
        assert_eq!(&s * &t, v);
        assert!(s.in_type_d() && s.squares_to_identity() && t.squares_to_identity());
        assert_eq!(length_d(&s) + length_d(&t), length_d(&v) + report.excess);
        assert_eq!(table.excess(&v).unwrap().excess, report.excess);
    }
}

#[test]
fn classes_partition_the_group() {
    let budget = Budget::default();
    for (ty, ns) in [(A, 1..=6), (B, 1..=5), (D, 2..=5)] {
        for n in ns {
            let parts = partition_into_classes(ty, n, &budget).unwrap();
            let total: usize = parts.iter().map(|(_, c)| c.len()).sum();
            assert_eq!(total as u64, excess::group_order(ty, n), "{ty}{n}");
            let distinct: HashSet<&SignedPermutation> = parts.iter().flat_map(|(_, c)| c).collect();
            assert_eq!(distinct.len(), total);
        }
    }
}

#[test]
fn simple_reflections_negate_only_their_root() {
    for name in ["A4", "B4", "D5", "E6", "E7", "E8", "F4", "G2", "H3", "H4", "I2(5)"] {
        let matrix = CoxeterMatrix::preset(name).unwrap();
        let rs = RootSystem::build(&matrix, 127).unwrap();
        let n = rs.positive_count();
        for i in 0..rs.rank() {
            let s = rs.generator(i).unwrap();
            let mut seen = HashSet::new();
            for k in 0..n {
                let (j, positive) = s.image(k);
                assert_eq!(positive, k != i, "{name} s{i} on root {k}");
                if positive {
                    seen.insert(j);
                }
            }
            assert_eq!(seen.len(), n - 1);
            assert!(!seen.contains(&i));
        }
    }
}

#[test]
fn excess_parity_on_h3() {
    let budget = Budget::default();
    let g = CoxeterGroup::from_preset("H3", &budget).unwrap();
    let invs = coxcess::coxgen::involutions_of(&g);
    for w in 0..g.order() {
        assert_eq!(coxcess::coxgen::excess_generic(&g, &invs, w).excess % 2, 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn compose_matches_oracle(g in signed_perm_of(8), h in signed_perm_of(8), k in signed_perm_of(8)) {
        let (sg, sh, sk) = (to_sp(&g), to_sp(&h), to_sp(&k));
        prop_assert_eq!(from_sp(&(&sg * &sh)), compose(&g, &h));
        prop_assert_eq!(&(&sg * &sh) * &sk, &sg * &(&sh * &sk));
        prop_assert_eq!(from_sp(&sg.inverse()), inverse(&g));
        prop_assert_eq!(sg.inverse().inverse(), sg.clone());
        prop_assert_eq!((&sg * &sh).parity_negative_entries(), sg.parity_negative_entries() ^ sh.parity_negative_entries());
        prop_assert_eq!(sh.conjugate_by(&sg).cycle_type(), sh.cycle_type());
    }

    #[test]
    fn window_and_cycle_text_round_trip(w in signed_perm(9)) {
        let sw = to_sp(&w);
        prop_assert_eq!(SignedPermutation::parse(&sw.to_window_string(), None).unwrap(), sw.clone());
        prop_assert_eq!(SignedPermutation::parse(&sw.to_string(), Some(w.len())).unwrap(), sw.clone());
        let ct = sw.cycle_type();
        prop_assert_eq!(ct.compact().parse::<SignedCycleType>().unwrap(), ct);
    }

    #[test]
    fn lengths_match_oracle(w in signed_perm(9)) {
        let sw = to_sp(&w);
        let n = w.len();
        prop_assert_eq!(length_b(&sw), Oracle::new(B, n).length(&w));
        prop_assert_eq!(length_d(&sw), Oracle::new(D, n).length(&w));
        prop_assert_eq!(length_b(&sw), length_b(&sw.inverse()));
    }

    #[test]
    fn dual_type_is_type_times_longest(w in signed_perm_of(6)) {
        let w0: W = identity(6).iter().map(|v| -v).collect();
        let dual = to_sp(&compose(&w0, &w)).cycle_type();
        prop_assert_eq!(dual_cycle_type(&to_sp(&w).cycle_type()), dual);
    }

    #[test]
    fn coxgen_length_changes_by_one(word in proptest::collection::vec(0usize..6, 0..40), s in 0usize..6) {
        let g = e6();
        let x = g.from_word(&word).unwrap();
        prop_assert_eq!(g.length(x), g.length(g.inverse(x)));
        let y = g.mul(x, g.generator(s));
        prop_assert_eq!(g.length(x).abs_diff(g.length(y)), 1);
        prop_assert!(g.length(x) <= word.len());
    }

    #[test]
    fn coxgen_excess_is_even(word in proptest::collection::vec(0usize..6, 0..40)) {
        let g = e6();
        let x = g.from_word(&word).unwrap();
        let invs = e6_involutions();
        prop_assert_eq!(coxcess::coxgen::excess_generic(g, invs, x).excess % 2, 0);
    }
}

fn e6() -> &'static CoxeterGroup {
    static G: std::sync::OnceLock<CoxeterGroup> = std::sync::OnceLock::new();
    G.get_or_init(|| CoxeterGroup::from_preset("E6", &Budget::default()).unwrap())
}

fn e6_involutions() -> &'static [usize] {
    static I: std::sync::OnceLock<Vec<usize>> = std::sync::OnceLock::new();
    I.get_or_init(|| coxcess::coxgen::involutions_of(e6()))
}
