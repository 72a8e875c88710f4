mod common;

use common::{geometric_cartan, oracle_positive_roots, simple_vectors, RANK_AT_MOST_FOUR};
use rootsys::{build_cartan, RankedType, RootSystem};

fn ty(name: &str) -> RankedType {
    name.parse().unwrap()
}

#[test]
fn cartan_matches_euclidean_realization() {
    let mut names: Vec<&str> = RANK_AT_MOST_FOUR.to_vec();
    names.extend(["A7", "B6", "C5", "D5", "D8", "E6", "E7", "E8"]);
    for name in names {
        let expected = geometric_cartan(&simple_vectors(name));
        assert_eq!(build_cartan(ty(name)).rows(), expected.as_slice(), "{name}");
    }
}

#[test]
fn g2_and_b3_cartan_values() {
    assert_eq!(geometric_cartan(&simple_vectors("G2")), vec![vec![2, -1], vec![-3, 2]]);
    assert_eq!(
        geometric_cartan(&simple_vectors("B3")),
        vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]
    );
}

#[test]
fn enumeration_equals_reflection_closure() {
    let mut names: Vec<&str> = RANK_AT_MOST_FOUR.to_vec();
    names.extend(["A6", "B5", "C6", "D6", "E6", "E7", "E8"]);
    for name in names {
        let rs = RootSystem::of_type(ty(name));
        let ours: std::collections::BTreeSet<Vec<i64>> =
            rs.positive_roots().map(|r| r.coeffs().to_vec()).collect();
        assert_eq!(ours, oracle_positive_roots(name), "{name}");
    }
}

#[test]
fn closure_counts_match_classical_formulas() {
    for n in 1..=6usize {
        assert_eq!(oracle_positive_roots(&format!("A{n}")).len(), n * (n + 1) / 2);
    }
    for n in 2..=6usize {
        assert_eq!(oracle_positive_roots(&format!("B{n}")).len(), n * n);
        assert_eq!(oracle_positive_roots(&format!("C{n}")).len(), n * n);
    }
    for n in 4..=7usize {
        assert_eq!(oracle_positive_roots(&format!("D{n}")).len(), n * (n - 1));
    }
    for (name, count) in [("E6", 36), ("E7", 63), ("E8", 120), ("F4", 24), ("G2", 6)] {
        assert_eq!(oracle_positive_roots(name).len(), count, "{name}");
    }
}
