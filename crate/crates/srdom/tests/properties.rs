//! Property tests for the structural invariants: join arithmetic, verifier
//! identities, solver witness soundness, and serialization round-trips.

use proptest::prelude::*;

use srdom::graph6::{parse_graph6, write_graph6};
use srdom::records::{format_labels, parse_labels, LabelingRecord};
use srdom::{
    closed_sum, enumerate_labelings, solve_exact, verify, FamilySpec, Graph, Label, Labeling,
    SolveOptions,
};

/// Arbitrary graph on up to `max_order` vertices, from a bit per vertex
/// pair.
fn graph_strategy(max_order: usize) -> impl Strategy<Value = Graph> {
    (0..=max_order).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn labeling_strategy(n: usize) -> impl Strategy<Value = Labeling> {
    proptest::collection::vec(
        prop_oneof![Just(Label::MinusOne), Just(Label::One), Just(Label::Two)],
        n,
    )
    .prop_map(Labeling::new)
}

fn graph_with_labeling() -> impl Strategy<Value = (Graph, Labeling)> {
    graph_strategy(9).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), labeling_strategy(n))
    })
}

proptest! {
    #[test]
    fn join_counts_and_invariants((a, b) in (graph_strategy(6), graph_strategy(6))) {
        let j = a.join(&b);
        prop_assert_eq!(j.order(), a.order() + b.order());
        prop_assert_eq!(
            j.edge_count(),
            a.edge_count() + b.edge_count() + a.order() * b.order()
        );
        prop_assert!(j.check_invariants().is_ok());
    }

    #[test]
    fn all_ones_is_valid_everywhere(g in graph_strategy(9)) {
        let report = verify(&g, &Labeling::all_ones(g.order())).unwrap();
        prop_assert!(report.valid);
        prop_assert_eq!(report.weight, g.order() as i32);
    }

    #[test]
    fn weight_matches_partition_identity((g, f) in graph_with_labeling()) {
        let report = verify(&g, &f).unwrap();
        let (minus, ones, twos) = f.partition_counts();
        prop_assert_eq!(report.weight, f.weight());
        prop_assert_eq!(f.weight(), 2 * twos as i32 + ones as i32 - minus as i32);
    }

    #[test]
    fn universal_vertex_sees_whole_weight(
        (n, f) in (3usize..9).prop_flat_map(|n| (Just(n), labeling_strategy(n + 1)))
    ) {
        // the hub of a wheel is universal, so its closed sum is the weight
        let g = FamilySpec::Wheel { n }.generate().unwrap();
        prop_assert_eq!(closed_sum(&g, &f, 0), f.weight());
        let report = verify(&g, &f).unwrap();
        if report.valid {
            prop_assert!(f.weight() >= 1);
        }
    }

    #[test]
    fn cycle_closed_sums_triple_the_weight(
        (n, f) in (3usize..12).prop_flat_map(|n| (Just(n), labeling_strategy(n)))
    ) {
        let g = FamilySpec::Cycle { n }.generate().unwrap();
        let total: i32 = (0..n).map(|v| closed_sum(&g, &f, v)).sum();
        prop_assert_eq!(total, 3 * f.weight());
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(70)) {
        let text = write_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn labels_round_trip(f in labeling_strategy(1).prop_union(labeling_strategy(12))) {
        let text = format_labels(&f);
        prop_assert_eq!(parse_labels(&text).unwrap(), f);
    }

    #[test]
    fn labeling_record_round_trip((g, f) in graph_with_labeling()) {
        prop_assume!(g.order() > 0);
        let record = LabelingRecord::derive(&g, f, None, None, "prop").unwrap();
        let line = record.to_line();
        prop_assert_eq!(LabelingRecord::parse(&line).unwrap(), record);
    }

    #[test]
    fn solver_methods_agree_and_witness_verifies(g in graph_strategy(6)) {
        prop_assume!(g.order() > 0);
        let exhaustive = solve_exact(&g, &SolveOptions {
            exhaustive_threshold: usize::MAX,
            ..SolveOptions::default()
        }).unwrap();
        let bb = solve_exact(&g, &SolveOptions {
            exhaustive_threshold: 0,
            ..SolveOptions::default()
        }).unwrap();
        prop_assert_eq!(exhaustive.gamma, bb.gamma);
        for result in [&exhaustive, &bb] {
            let report = verify(&g, &result.witness).unwrap();
            prop_assert!(report.valid);
            prop_assert_eq!(report.weight, result.gamma);
        }
        // gamma reaches the order exactly on edgeless graphs
        prop_assert!(exhaustive.gamma <= g.order() as i32);
        prop_assert_eq!(exhaustive.gamma == g.order() as i32, g.is_edgeless());
    }
}

#[test]
fn generated_families_match_join_definitions() {
    let k1 = FamilySpec::Complete { n: 1 }.generate().unwrap();
    for n in 3..=30 {
        let wheel = FamilySpec::Wheel { n }.generate().unwrap();
        let joined = k1.join(&FamilySpec::Cycle { n }.generate().unwrap());
        assert_eq!(wheel, joined, "wheel n={n}");
    }
    for n in 1..=30 {
        let fan = FamilySpec::Fan { n }.generate().unwrap();
        let joined = k1.join(&FamilySpec::Path { n }.generate().unwrap());
        assert_eq!(fan, joined, "fan n={n}");
    }
    for m in 1..=15 {
        let friendship = FamilySpec::Friendship { m }.generate().unwrap();
        let joined = k1.join(&FamilySpec::MatchingCopies { m }.generate().unwrap());
        assert_eq!(friendship, joined, "friendship m={m}");
    }
}

#[test]
fn enumeration_visits_all_labelings() {
    for n in 0..=7 {
        let g = Graph::edgeless(n);
        let count = enumerate_labelings(&g, |_| true, |_| ());
        assert_eq!(count, 3u64.pow(n as u32));
    }
}

#[test]
fn enumeration_is_sorted_lexicographically() {
    let g = Graph::edgeless(4);
    let mut previous: Option<Vec<Label>> = None;
    enumerate_labelings(
        &g,
        |_| true,
        |f| {
            let current = f.labels().to_vec();
            if let Some(prev) = &previous {
                assert!(prev < &current);
            }
            previous = Some(current);
        },
    );
}
