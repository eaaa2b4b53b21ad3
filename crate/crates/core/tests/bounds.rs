mod common;

use proptest::prelude::*;

use digraph_spectra::bounds::{
    arc_avg_bound, two_out_root_bound, arc_sum_bounds, avg_two_out_bounds, sequence_bound, min_sequence_bound, sequence_bound_tightness, sequence_bounds, BoundReport,
    SequenceBoundTightness,
};
use digraph_spectra::families::{build, FamilySpec};
use digraph_spectra::{spectral, Digraph, Error};

const TOL: f64 = 1e-9;

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() < TOL
}

fn report(spec: FamilySpec) -> BoundReport {
    BoundReport::new(spec.to_string(), &build(&spec).unwrap()).unwrap()
}

#[test]
fn complete_minus_arc_row() {
    let n = 6.0;
    let r = report(FamilySpec::CompleteMinusArc { n: 6 });
    assert!(close(r.arc_sum_upper, 2.0 * n - 2.0));
    let mid = (2.0 * n * n - 4.0 * n + 1.0) / (n - 1.0);
    assert!(close(r.avg_two_out_upper, mid));
    assert!(close(r.arc_avg_upper, mid));
    assert!(close(r.two_out_root_upper, n - 1.0 + (n * (n - 2.0)).sqrt()));
    let sequence_bound = (3.0 * n - 6.0 + (n * n + 4.0 * n - 4.0).sqrt()) / 2.0;
    assert!(close(r.min_sequence_bound, sequence_bound));
    assert!(sequence_bound < r.arc_sum_upper.min(r.avg_two_out_upper).min(r.arc_avg_upper).min(r.two_out_root_upper));
    assert!(r.q <= sequence_bound + TOL);
}

#[test]
fn d1_row_and_equality_case() {
    let r = report(FamilySpec::HubCycle { n: 6 });
    let s3 = 3f64.sqrt();
    assert!(close(r.arc_sum_upper, 5.0));
    assert!(close(r.avg_two_out_upper, 5.0));
    assert!(close(r.arc_avg_upper, (5.0 + 21f64.sqrt()) / 2.0));
    assert!(close(r.two_out_root_upper, 3.0 + 6f64.sqrt()));
    assert!(close(r.min_sequence_bound, 3.0 + s3));
    assert_eq!(r.min_index, 2);
    assert!(close(r.q, 3.0 + s3));
    assert_eq!(r.tight, SequenceBoundTightness::Threshold { t: 2 });
}

#[test]
fn d2_row() {
    let d = 4.0;
    let r = report(FamilySpec::CliquePath { n: 6, d: 4 });
    assert!(close(r.arc_sum_upper, 2.0 * d - 1.0));
    assert!(close(r.avg_two_out_upper, 2.0 * d - 2.0 + 2.0 / d));
    let inner: f64 = 1.0 + 4.0 * (d * d - 2.0 * d + 2.0).powi(2) / (d * (d - 1.0));
    assert!(close(r.arc_avg_upper, (2.0 * d - 1.0 + inner.sqrt()) / 2.0));
    assert!(close(r.two_out_root_upper, d + (d * d - 2.0 * d + 2.0).sqrt()));
    assert!(close(r.min_sequence_bound, (3.0 * d - 3.0 + ((d - 1.0).powi(2) + 8.0).sqrt()) / 2.0));
}

#[test]
fn d3_row() {
    let r = report(FamilySpec::CycleWithPath { n: 6, g: 3 });
    assert!(close(r.arc_sum_upper, 3.0));
    assert!(close(r.avg_two_out_upper, 3.0));
    assert!(close(r.arc_avg_upper, 3.0));
    assert!(close(r.min_sequence_bound, 3.0));
    // The single out-degree-2 vertex has two out-degree-1 successors, so its
    // 2-outdegree is 2 and the vertex bound evaluates to 2 + √2.
    assert!(close(r.two_out_root_upper, 2.0 + 2f64.sqrt()));
}

#[test]
fn cycle_makes_every_bound_two() {
    for n in 2..=9 {
        let r = report(FamilySpec::Cycle { n });
        for v in [r.arc_sum_lower, r.arc_sum_upper, r.avg_two_out_lower, r.avg_two_out_upper, r.arc_avg_upper, r.two_out_root_upper, r.min_sequence_bound, r.q] {
            assert!(close(v, 2.0), "n={n}: {r:?}");
        }
        assert_eq!(r.tight, SequenceBoundTightness::Regular);
    }
}

#[test]
fn sequence_bound_by_hand() {
    // Out-degrees 3, 2, 2, 2, 2, 2 (D1 at n = 6).
    let d = build(&FamilySpec::HubCycle { n: 6 }).unwrap();
    assert!(close(sequence_bound(&d, 1).unwrap(), 6.0));
    // (3 + 4 − 1 + √((4 − 3 + 1)² + 8·1)) / 2 = 3 + √3
    assert!(close(sequence_bound(&d, 2).unwrap(), 3.0 + 3f64.sqrt()));
    // l = 6: (3 + 3 + √(4 + 8)) / 2
    assert!(close(sequence_bound(&d, 6).unwrap(), 3.0 + 3f64.sqrt()));
    assert!(sequence_bound(&d, 0).is_err() && sequence_bound(&d, 7).is_err());
    assert_eq!(min_sequence_bound(&d).1, 2);
}

#[test]
fn input_validation() {
    let mut multi = Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
    multi.add_arc(0, 1).unwrap();
    assert!(matches!(arc_sum_bounds(&multi), Err(Error::NotSimple { .. })));
    let sink = Digraph::from_arcs(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
    assert!(matches!(two_out_root_bound(&sink), Err(Error::ZeroOutDegree(2))));
    assert!(matches!(sequence_bound_tightness(&sink), Err(Error::NotStronglyConnected)));
}

/// A strongly connected simple digraph: a random Hamiltonian cycle plus random arcs.
fn strong_digraph() -> impl Strategy<Value = Digraph> {
    (2usize..=7)
        .prop_flat_map(|n| {
            (
                Just(n),
                Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
                proptest::collection::vec(any::<bool>(), n * n),
            )
        })
        .prop_map(|(n, order, extra)| {
            let mut d = Digraph::empty(n).unwrap();
            for i in 0..n {
                d.add_arc(order[i], order[(i + 1) % n]).unwrap();
            }
            for u in 0..n {
                for v in 0..n {
                    if u != v && extra[u * n + v] && !d.has_arc(u, v) {
                        d.add_arc(u, v).unwrap();
                    }
                }
            }
            d
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn every_bound_holds(d in strong_digraph()) {
        let q = spectral::q(&d).unwrap().radius;
        let eps = 1e-8;
        let (lo11, hi11) = arc_sum_bounds(&d).unwrap();
        let (lo12, hi12) = avg_two_out_bounds(&d).unwrap();
        prop_assert!(lo11 - eps <= q && q <= hi11 + eps);
        prop_assert!(lo12 - eps <= q && q <= hi12 + eps);
        prop_assert!(q <= arc_avg_bound(&d).unwrap() + eps);
        prop_assert!(q <= two_out_root_bound(&d).unwrap() + eps);
        let (star, _) = min_sequence_bound(&d);
        prop_assert!(q <= star + eps);
        prop_assert!(sequence_bounds(&d).iter().all(|&v| v >= star));
        prop_assert_eq!(sequence_bound_tightness(&d).unwrap().is_tight(), (q - star).abs() < eps);
    }

    #[test]
    fn sequence_bound_ignores_labels(d in strong_digraph(), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut perm: Vec<usize> = (0..d.n()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let e = d.permuted(&perm).unwrap();
        prop_assert_eq!(sequence_bounds(&d), sequence_bounds(&e));
        prop_assert_eq!(min_sequence_bound(&d), min_sequence_bound(&e));
        prop_assert_eq!(sequence_bound_tightness(&d).unwrap(), sequence_bound_tightness(&e).unwrap());
        prop_assert_eq!(two_out_root_bound(&d).unwrap(), two_out_root_bound(&e).unwrap());
    }
}
