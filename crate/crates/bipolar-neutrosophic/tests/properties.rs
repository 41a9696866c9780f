//! Randomized property tests for the number algebra, set operations,
//! aggregation operators, and ranking.

use bipolar_neutrosophic::{
    weighted_average, weighted_geometric, AggregationOp, Bnn, BnsSet, RankOrdering, RawProblem,
    WeightVector,
};
use proptest::prelude::*;

fn bnn_strategy() -> impl Strategy<Value = Bnn> {
    (
        0.0..=1.0f64,
        0.0..=1.0f64,
        0.0..=1.0f64,
        -1.0..=0.0f64,
        -1.0..=0.0f64,
        -1.0..=0.0f64,
    )
        .prop_map(|(tp, ip, fp, tn, im, fm)| Bnn::new(tp, ip, fp, tn, im, fm).unwrap())
}

fn family_strategy() -> impl Strategy<Value = (Vec<Bnn>, WeightVector)> {
    prop::collection::vec((bnn_strategy(), 0.01..=1.0f64), 1..=6).prop_map(|pairs| {
        let (items, raw): (Vec<Bnn>, Vec<f64>) = pairs.into_iter().unzip();
        let weights = WeightVector::normalized(raw).unwrap();
        (items, weights)
    })
}

fn set_strategy() -> impl Strategy<Value = BnsSet> {
    prop::collection::vec(bnn_strategy(), 3).prop_map(|v| {
        BnsSet::new(
            ["x1", "x2", "x3"],
            [("x1", v[0]), ("x2", v[1]), ("x3", v[2])],
        )
        .unwrap()
    })
}

fn assert_close(a: Bnn, b: Bnn, tolerance: f64) {
    for (x, y) in a.components().iter().zip(b.components()) {
        assert!(
            (x - y).abs() <= tolerance,
            "{a:?} vs {b:?} (tolerance {tolerance:e})"
        );
    }
}

fn assert_in_range(value: Bnn) {
    let c = value.components();
    for (i, x) in c.iter().enumerate() {
        assert!(x.is_finite());
        if i < 3 {
            assert!(
                (0.0..=1.0).contains(x),
                "positive component out of range: {c:?}"
            );
        } else {
            assert!(
                (-1.0..=0.0).contains(x),
                "negative component out of range: {c:?}"
            );
        }
    }
}

/// Componentwise move toward the "larger set" bounds: positive truth and
/// indeterminacy rise toward 1, positive falsity falls toward 0, negative
/// truth and indeterminacy fall toward -1, negative falsity rises toward 0.
fn grow(set: &BnsSet, u: f64) -> BnsSet {
    let assignments: Vec<(String, Bnn)> = set
        .iter()
        .map(|(label, v)| {
            let grown = Bnn::new(
                v.t_pos() + u * (1.0 - v.t_pos()),
                v.i_pos() + u * (1.0 - v.i_pos()),
                v.f_pos() * (1.0 - u),
                v.t_neg() + u * (-1.0 - v.t_neg()),
                v.i_neg() + u * (-1.0 - v.i_neg()),
                v.f_neg() * (1.0 - u),
            )
            .unwrap();
            (label.to_string(), grown)
        })
        .collect();
    BnsSet::new(set.universe().to_vec(), assignments).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn arithmetic_is_closed(a in bnn_strategy(), b in bnn_strategy(), lambda in 0.01..=4.0f64) {
        assert_in_range(a.add(b));
        assert_in_range(a.multiply(b));
        assert_in_range(a.scale(lambda).unwrap());
        assert_in_range(a.power(lambda).unwrap());
        assert_in_range(a.complement());
    }

    #[test]
    fn unit_scale_and_power_are_identities(a in bnn_strategy()) {
        assert_close(a.scale(1.0).unwrap(), a, 1e-12);
        assert_close(a.power(1.0).unwrap(), a, 1e-12);
    }

    #[test]
    fn doubling_and_squaring_agree_with_folds(a in bnn_strategy()) {
        assert_close(a.add(a), a.scale(2.0).unwrap(), 1e-12);
        assert_close(a.multiply(a), a.power(2.0).unwrap(), 1e-12);
    }

    #[test]
    fn add_and_multiply_commute(a in bnn_strategy(), b in bnn_strategy()) {
        assert_close(a.add(b), b.add(a), 1e-12);
        assert_close(a.multiply(b), b.multiply(a), 1e-12);
    }

    #[test]
    fn add_and_multiply_associate(a in bnn_strategy(), b in bnn_strategy(), c in bnn_strategy()) {
        assert_close(a.add(b).add(c), a.add(b.add(c)), 1e-12);
        assert_close(a.multiply(b).multiply(c), a.multiply(b.multiply(c)), 1e-12);
    }

    #[test]
    fn scaling_is_additive_in_lambda(a in bnn_strategy(), l in 0.1..=2.0f64, m in 0.1..=2.0f64) {
        let split = a.scale(l).unwrap().add(a.scale(m).unwrap());
        assert_close(split, a.scale(l + m).unwrap(), 1e-12);
    }

    #[test]
    fn complement_is_an_involution(a in bnn_strategy()) {
        assert_close(a.complement().complement(), a, 1e-15);
    }

    #[test]
    fn score_stays_in_unit_interval(a in bnn_strategy()) {
        let s = a.score();
        assert!((0.0..=1.0).contains(&s), "score {s} out of range");
    }

    #[test]
    fn comparison_is_antisymmetric(a in bnn_strategy(), b in bnn_strategy()) {
        let forward = a.compare(&b);
        let backward = b.compare(&a);
        match forward {
            RankOrdering::Greater => assert_eq!(backward, RankOrdering::Less),
            RankOrdering::Less => assert_eq!(backward, RankOrdering::Greater),
            RankOrdering::Equal => assert_eq!(backward, RankOrdering::Equal),
        }
        assert_eq!(a.compare(&a), RankOrdering::Equal);
    }

    #[test]
    fn set_ops_are_idempotent_and_commutative(a in set_strategy(), b in set_strategy()) {
        assert!(a.union(&a).unwrap().equals(&a).unwrap());
        assert!(a.intersection(&a).unwrap().equals(&a).unwrap());
        assert!(a.union(&b).unwrap().equals(&b.union(&a).unwrap()).unwrap());
        assert!(a.intersection(&b).unwrap().equals(&b.intersection(&a).unwrap()).unwrap());
    }

    #[test]
    fn de_morgan_duality_holds(a in set_strategy(), b in set_strategy()) {
        let u = a.union(&b).unwrap().complement();
        let v = a.complement().intersection(&b.complement()).unwrap();
        assert!(u.equals(&v).unwrap());
        let u = a.intersection(&b).unwrap().complement();
        let v = a.complement().union(&b.complement()).unwrap();
        assert!(u.equals(&v).unwrap());
    }

    #[test]
    fn subset_is_a_partial_order(a in set_strategy(), u in 0.0..=1.0f64, v in 0.0..=1.0f64) {
        // Reflexive.
        assert!(a.is_subset(&a).unwrap());
        // Transitive along a grown chain a <= b <= c.
        let b = grow(&a, u);
        let c = grow(&b, v);
        assert!(a.is_subset(&b).unwrap());
        assert!(b.is_subset(&c).unwrap());
        assert!(a.is_subset(&c).unwrap());
        // Antisymmetric: mutual containment means equality.
        if a.is_subset(&b).unwrap() && b.is_subset(&a).unwrap() {
            assert!(a.equals(&b).unwrap());
        }
    }

    #[test]
    fn aggregation_is_idempotent((item, n) in (bnn_strategy(), 1usize..=6)) {
        let items = vec![item; n];
        let weights = WeightVector::uniform(n).unwrap();
        assert_close(weighted_average(&items, &weights).unwrap(), item, 1e-12);
        assert_close(weighted_geometric(&items, &weights).unwrap(), item, 1e-12);
    }

    #[test]
    fn aggregation_is_permutation_invariant((items, weights) in family_strategy(), shift in 0usize..6) {
        let n = items.len();
        let k = shift % n;
        let mut rotated_items = items.clone();
        rotated_items.rotate_left(k);
        let mut rotated_weights = weights.as_slice().to_vec();
        rotated_weights.rotate_left(k);
        let rotated_weights = WeightVector::new(rotated_weights).unwrap();
        for op in [AggregationOp::Average, AggregationOp::Geometric] {
            let plain = op.apply(&items, &weights).unwrap();
            let rotated = op.apply(&rotated_items, &rotated_weights).unwrap();
            assert_close(plain, rotated, 1e-12);
        }
    }

    #[test]
    fn aggregation_is_componentwise_bounded((items, weights) in family_strategy()) {
        for op in [AggregationOp::Average, AggregationOp::Geometric] {
            let out = op.apply(&items, &weights).unwrap().components();
            for i in 0..6 {
                let lo = items.iter().map(|v| v.components()[i]).fold(f64::INFINITY, f64::min);
                let hi = items.iter().map(|v| v.components()[i]).fold(f64::NEG_INFINITY, f64::max);
                assert!(out[i] >= lo - 1e-12 && out[i] <= hi + 1e-12,
                    "component {i} of {out:?} escapes [{lo}, {hi}]");
            }
        }
    }

    #[test]
    fn ranking_is_deterministic_and_row_order_independent(
        rows in prop::collection::vec(prop::collection::vec(bnn_strategy(), 3), 2..=4),
        shift in 0usize..4,
    ) {
        let n_alt = rows.len();
        let alternatives: Vec<String> = (1..=n_alt).map(|i| format!("A{i}")).collect();
        let criteria: Vec<String> = (1..=3).map(|j| format!("C{j}")).collect();
        let matrix: Vec<Vec<[f64; 6]>> =
            rows.iter().map(|row| row.iter().map(|v| v.components()).collect()).collect();
        let problem = RawProblem {
            alternatives: alternatives.clone(),
            criteria: criteria.clone(),
            weights: vec![1.0; 3],
            normalize_weights: true,
            matrix: matrix.clone(),
        }
        .validate()
        .unwrap();

        let once = problem.rank(AggregationOp::Average);
        let twice = problem.rank(AggregationOp::Average);
        assert_eq!(once.ordering(), twice.ordering());

        // Rotating the rows must not change any alternative's aggregate.
        let k = shift % n_alt;
        let mut rotated_alts = alternatives;
        rotated_alts.rotate_left(k);
        let mut rotated_matrix = matrix;
        rotated_matrix.rotate_left(k);
        let rotated = RawProblem {
            alternatives: rotated_alts,
            criteria,
            weights: vec![1.0; 3],
            normalize_weights: true,
            matrix: rotated_matrix,
        }
        .validate()
        .unwrap()
        .rank(AggregationOp::Average);
        for entry in once.entries() {
            let moved = rotated.entries().iter().find(|e| e.label == entry.label).unwrap();
            assert_eq!(moved.aggregate, entry.aggregate);
            assert_eq!(moved.score, entry.score);
        }
    }

    #[test]
    fn ranking_is_criterion_order_independent(
        rows in prop::collection::vec(prop::collection::vec(bnn_strategy(), 3), 2..=4),
        shift in 1usize..3,
    ) {
        let n_alt = rows.len();
        let matrix: Vec<Vec<[f64; 6]>> =
            rows.iter().map(|row| row.iter().map(|v| v.components()).collect()).collect();
        let weights = vec![0.5, 0.3, 0.2];
        let base = RawProblem {
            alternatives: (1..=n_alt).map(|i| format!("A{i}")).collect(),
            criteria: (1..=3).map(|j| format!("C{j}")).collect(),
            weights: weights.clone(),
            normalize_weights: false,
            matrix: matrix.clone(),
        }
        .validate()
        .unwrap();

        let mut sw = weights;
        sw.rotate_left(shift);
        let swapped = RawProblem {
            alternatives: (1..=n_alt).map(|i| format!("A{i}")).collect(),
            criteria: (1..=3).map(|j| format!("C{j}")).collect(),
            weights: sw,
            normalize_weights: false,
            matrix: matrix
                .into_iter()
                .map(|mut row| {
                    row.rotate_left(shift);
                    row
                })
                .collect(),
        }
        .validate()
        .unwrap();

        let a = base.aggregate_rows(AggregationOp::Average);
        let b = swapped.aggregate_rows(AggregationOp::Average);
        for (x, y) in a.into_iter().zip(b) {
            assert_close(x, y, 1e-12);
        }
    }
}
