//! Independent oracles built from explicit Euclidean realizations.
//!
//! Nothing here calls into the crate: simple roots are written down as
//! integer vectors in the standard coordinates (scaled by 2 where halves
//! appear), the Cartan matrix is read off the dot products, and the root
//! system is obtained by closing the simple roots under reflections.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use num_rational::Rational64;

fn e(dim: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = 1;
    v
}

fn diff(dim: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = e(dim, i);
    v[j] -= 1;
    v
}

fn scaled(v: Vec<i64>, k: i64) -> Vec<i64> {
    v.into_iter().map(|x| x * k).collect()
}

/// E8 in Bourbaki order, doubled to stay integral.
fn e8() -> Vec<Vec<i64>> {
    let mut roots = vec![vec![1, -1, -1, -1, -1, -1, -1, 1], scaled(vec![1, 1, 0, 0, 0, 0, 0, 0], 2)];
    for i in 0..6 {
        roots.push(scaled(diff(8, i + 1, i), 2));
    }
    roots
}

/// Simple roots of a named type, Bourbaki numbering.
pub fn simple_vectors(name: &str) -> Vec<Vec<i64>> {
    let (family, rank) = name.split_at(1);
    let n: usize = rank.parse().expect("rank");
    match family {
        "A" => (0..n).map(|i| diff(n + 1, i, i + 1)).collect(),
        "B" | "C" | "D" => {
            let mut v: Vec<Vec<i64>> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            v.push(match family {
                "B" => e(n, n - 1),
                "C" => scaled(e(n, n - 1), 2),
                _ => {
                    let mut last = e(n, n - 2);
                    last[n - 1] = 1;
                    last
                }
            });
            v
        }
        "E" => e8().into_iter().take(n).collect(),
        "F" => vec![
            vec![0, 2, -2, 0],
            vec![0, 0, 2, -2],
            vec![0, 0, 0, 2],
            vec![1, -1, -1, -1],
        ],
        "G" => vec![vec![1, -1, 0], vec![-2, 1, 1]],
        _ => panic!("unknown family {family}"),
    }
}

pub fn dot(x: &[i64], y: &[i64]) -> i64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// `a[i][j] = 2(α_i, α_j) / (α_j, α_j)`.
pub fn geometric_cartan(simple: &[Vec<i64>]) -> Vec<Vec<i64>> {
    simple
        .iter()
        .map(|x| {
            simple
                .iter()
                .map(|y| {
                    let (num, den) = (2 * dot(x, y), dot(y, y));
                    assert_eq!(num % den, 0, "non-integral Cartan entry");
                    num / den
                })
                .collect()
        })
        .collect()
}

fn reflect(v: &[i64], a: &[i64]) -> Vec<i64> {
    let (num, den) = (2 * dot(v, a), dot(a, a));
    assert_eq!(num % den, 0);
    let k = num / den;
    v.iter().zip(a).map(|(x, y)| x - k * y).collect()
}

/// Coordinates of `v` in the basis `simple`, by exact elimination on the
/// Gram system.
fn coordinates(simple: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    let n = simple.len();
    let mut m: Vec<Vec<Rational64>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational64> = (0..n)
                .map(|j| Rational64::from_integer(dot(&simple[i], &simple[j])))
                .collect();
            row.push(Rational64::from_integer(dot(&simple[i], v)));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| m[r][col] != Rational64::from_integer(0)).unwrap();
        m.swap(col, piv);
        for r in 0..n {
            if r != col {
                let f = m[r][col] / m[col][col];
                for c in col..=n {
                    let t = m[col][c] * f;
                    m[r][c] -= t;
                }
            }
        }
    }
    let coeffs: Vec<i64> = (0..n)
        .map(|i| {
            let x = m[i][n] / m[i][i];
            assert!(x.is_integer(), "non-integral coordinate");
            x.to_integer()
        })
        .collect();
    let back: Vec<i64> = (0..v.len())
        .map(|k| (0..n).map(|i| coeffs[i] * simple[i][k]).sum())
        .collect();
    assert_eq!(back, v);
    coeffs
}

/// All roots as Euclidean vectors: the orbit of the simple roots under the
/// group generated by simple reflections.
pub fn reflection_closure(simple: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    let mut seen: BTreeSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut frontier: Vec<Vec<i64>> = simple.to_vec();
    while let Some(v) = frontier.pop() {
        for a in simple {
            let w = reflect(&v, a);
            if seen.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    seen
}

/// Positive roots in simple-root coordinates.
pub fn oracle_positive_roots(name: &str) -> BTreeSet<Vec<i64>> {
    let simple = simple_vectors(name);
    reflection_closure(&simple)
        .iter()
        .map(|v| coordinates(&simple, v))
        .filter(|c| c.iter().all(|&x| x >= 0))
        .collect()
}

pub const RANK_AT_MOST_FOUR: &[&str] = &[
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2",
];

/// Every type in the acceptance sweep: A-D with rank 2..=12 plus the
/// exceptional types.
pub fn sweep() -> Vec<String> {
    let mut v = Vec::new();
    for (f, lo) in [("A", 2), ("B", 2), ("C", 2), ("D", 4)] {
        for n in lo..=12 {
            v.push(format!("{f}{n}"));
        }
    }
    v.extend(["E6", "E7", "E8", "F4", "G2"].map(String::from));
    v
}
