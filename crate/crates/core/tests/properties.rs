use std::sync::OnceLock;

use num_rational::Rational64;
use proptest::prelude::*;
use proptest::sample::{select, Index};
use rootsys::exponents::{coxeter_exponents, coxeter_exponents_ordered, dual_partition, height_distribution, HeightDistribution};
use rootsys::{build_cartan, symmetrizer, validate_cartan, RankedType, RootSystem};

fn systems() -> &'static Vec<RootSystem> {
    static CELL: OnceLock<Vec<RootSystem>> = OnceLock::new();
    CELL.get_or_init(|| RankedType::all_up_to(8).into_iter().map(RootSystem::of_type).collect())
}

fn any_system() -> impl Strategy<Value = &'static RootSystem> {
    select(systems().iter().collect::<Vec<_>>())
}

fn reflect(rs: &RootSystem, beta: &[i64], i: usize) -> Vec<i64> {
    let mut v = beta.to_vec();
    v[i] -= rs.pairing_simple(beta, i);
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coxeter_exponents_ignore_reflection_order(rs in any_system(), seed in any::<u64>()) {
        let n = rs.rank();
        let mut order: Vec<usize> = (0..n).collect();
        // Fisher-Yates driven by the seed
        let mut s = seed;
        for k in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(k, (s >> 33) as usize % (k + 1));
        }
        let base = coxeter_exponents(rs.cartan()).unwrap();
        let other = coxeter_exponents_ordered(rs.cartan(), &order).unwrap();
        prop_assert_eq!(base.exponents(), other.exponents());
        prop_assert_eq!(base.coxeter_number(), other.coxeter_number());
    }

    #[test]
    fn string_length_is_the_pairing(rs in any_system(), pick in any::<Index>(), i in any::<Index>()) {
        let roots: Vec<_> = rs.positive_roots().collect();
        let beta = roots[pick.index(roots.len())].coeffs();
        let i = i.index(rs.rank());
        let (p, q) = rs.root_string(beta, i).unwrap();
        prop_assert!(p >= 0 && q >= 0);
        prop_assert_eq!(p - q, rs.pairing_simple(beta, i));
        prop_assert!(p + q <= 3);
    }

    #[test]
    fn simple_reflections_permute_roots(rs in any_system(), pick in any::<Index>(), i in any::<Index>()) {
        let roots: Vec<_> = rs.positive_roots().collect();
        let beta = roots[pick.index(roots.len())].coeffs();
        let i = i.index(rs.rank());
        let image = reflect(rs, beta, i);
        prop_assert!(rs.is_root(&image));
        prop_assert_eq!(rs.norm_sq(&image), rs.norm_sq(beta));
        // s_i permutes the positive roots other than α_i
        if beta.iter().enumerate().any(|(j, &c)| j != i && c > 0) {
            prop_assert!(rs.is_positive_root(&image));
        }
    }

    #[test]
    fn highest_root_dominates(rs in any_system(), pick in any::<Index>()) {
        let roots: Vec<_> = rs.positive_roots().collect();
        let beta = roots[pick.index(roots.len())].coeffs();
        prop_assert!(rs.dominates(rs.highest_root().coeffs(), beta).unwrap());
        for i in 0..rs.rank() {
            prop_assert!(rs.pairing_simple(rs.highest_root().coeffs(), i) >= 0);
        }
    }

    #[test]
    fn relabeling_preserves_invariants(rs in any_system(), seed in any::<u64>()) {
        let n = rs.rank();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed | 1;
        for k in (1..n).rev() {
            s ^= s << 13; s ^= s >> 7; s ^= s << 17;
            perm.swap(k, s as usize % (k + 1));
        }
        let raw: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| rs.cartan().get(perm[i], perm[j])).collect())
            .collect();
        let c = validate_cartan(raw).unwrap();
        let other = RootSystem::enumerate(&c).unwrap();
        prop_assert_eq!(other.num_positive(), rs.num_positive());
        prop_assert_eq!(other.c_max(), rs.c_max());
        prop_assert_eq!(other.max_height(), rs.max_height());
        let theta: Vec<i64> = (0..n).map(|i| rs.highest_root().coeffs()[perm[i]]).collect();
        prop_assert_eq!(other.highest_root().coeffs(), theta.as_slice());
        let a = dual_partition(&height_distribution(rs)).unwrap();
        let b = dual_partition(&height_distribution(&other)).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn dual_partition_is_an_involution(mut parts in prop::collection::vec(1u32..12, 1..8)) {
        parts.sort_unstable();
        // treat `parts` as exponents; their conjugate is a height distribution
        let max = *parts.last().unwrap() as usize;
        let counts: Vec<usize> = (1..=max).map(|r| parts.iter().filter(|&&m| m as usize >= r).count()).collect();
        let rep = dual_partition(&HeightDistribution::new(parts.len(), counts)).unwrap();
        prop_assert_eq!(rep.exponents(), parts.as_slice());
        prop_assert_eq!(rep.coxeter_number() as usize, max + 1);
    }

    #[test]
    fn validation_never_panics(off in prop::collection::vec(-4i64..=1, 6)) {
        let raw = vec![
            vec![2, off[0], off[1]],
            vec![off[2], 2, off[3]],
            vec![off[4], off[5], 2],
        ];
        if let Ok(c) = validate_cartan(raw) {
            let form = symmetrizer(&c);
            for i in 0..3 {
                for j in 0..3 {
                    prop_assert_eq!(form.gram()[i][j], form.gram()[j][i]);
                    prop_assert_eq!(form.d()[j] * c.get(i, j), form.d()[i] * c.get(j, i));
                }
                prop_assert!(form.d()[i] >= Rational64::from_integer(1));
            }
            prop_assert!(RootSystem::enumerate(&c).is_ok());
        }
    }
}

#[test]
fn every_named_type_round_trips_through_validation() {
    for t in RankedType::all_up_to(12) {
        let c = build_cartan(t);
        assert_eq!(validate_cartan(c.rows().to_vec()).unwrap(), c, "{t}");
    }
}
