//! Exhaustive (or seeded, sampled) scans for the supporting root-system
//! lemmas. Each scan returns a [`CheckResult`] listing every counterexample.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::roots::{sub, unit, RootSystem, SignedRoots};
use crate::theorem::{CheckResult, Sampling};

/// Controls when the quadratic and cubic scans fall back to sampling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanConfig {
    /// Systems with at most this many signed roots are scanned exhaustively.
    pub exhaustive_limit: usize,
    /// Number of random tuples drawn when sampling; a full scan is used
    /// instead whenever it would be no larger.
    pub samples: usize,
    pub seed: u64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            exhaustive_limit: 240,
            samples: 100_000,
            seed: 0,
        }
    }
}

const MAX_COUNTEREXAMPLES: usize = 20;

fn push_capped(result: &mut CheckResult, value: serde_json::Value) {
    result.pass = false;
    if result.counterexamples.len() < MAX_COUNTEREXAMPLES {
        result.counterexamples.push(value);
    }
}

/// For `β ∈ Φ⁺`, `α ∈ Δ`, `β ≠ α` with `<β, α> = k ∈ {2, 3}`, some other
/// simple `α'` has `β - (k-1)α - α' ∈ Φ⁺`.
pub fn lemma_string_check(rs: &RootSystem) -> CheckResult {
    let n = rs.rank();
    let mut result = CheckResult::passing();
    for beta in rs.positive_roots() {
        let b = beta.coeffs();
        for i in 0..n {
            let k = rs.pairing_simple(b, i);
            if !(k == 2 || k == 3) || beta.simple_index() == Some(i) {
                continue;
            }
            let mut base = b.to_vec();
            base[i] -= k - 1;
            let found = (0..n)
                .filter(|&j| j != i)
                .any(|j| rs.is_positive_root(&sub(&base, &unit(n, j))));
            if !found {
                push_capped(&mut result, json!({"beta": b, "alpha": i, "k": k}));
            }
        }
    }
    result
}

fn triple_count(n: usize) -> usize {
    n * (n + 1) * (n + 2) / 6
}

/// If `β₁ + β₂ + β₃ ∈ Φ` with no pair summing to zero, at least two of the
/// partial sums `β_i + β_j` are roots.
pub fn lemma_three_roots(rs: &RootSystem, cfg: &ScanConfig) -> CheckResult {
    let signed = rs.signed_roots();
    let n = signed.len();
    let half = n / 2;
    let neg = |i: usize| if i < half { i + half } else { i - half };
    let mut result = CheckResult::passing();
    let check = |i: usize, j: usize, k: usize, result: &mut CheckResult| {
        if j == neg(i) || k == neg(i) || k == neg(j) {
            return;
        }
        let (ki, kj, kk) = (signed.key(i), signed.key(j), signed.key(k));
        let total = ki.wrapping_add(kj).wrapping_add(kk);
        if signed.find_sum(total, &[i, j, k]).is_none() {
            return;
        }
        let partial = [(i, j, ki.wrapping_add(kj)), (i, k, ki.wrapping_add(kk)), (j, k, kj.wrapping_add(kk))];
        let hits = partial
            .iter()
            .filter(|&&(a, b, key)| signed.find_sum(key, &[a, b]).is_some())
            .count();
        if hits < 2 {
            push_capped(
                result,
                json!({"beta1": signed.root(i), "beta2": signed.root(j), "beta3": signed.root(k)}),
            );
        }
    };
    if n <= cfg.exhaustive_limit || triple_count(n) <= cfg.samples {
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    check(i, j, k, &mut result);
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        for _ in 0..cfg.samples {
            let (i, j, k) = (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n));
            check(i, j, k, &mut result);
        }
        result.sampling = Some(Sampling {
            seed: cfg.seed,
            samples: cfg.samples,
            population: triple_count(n),
        });
    }
    result
}

/// If `β₁ - β₂ ∈ Φ` and one of them is long, then `(β₁, β₂) > 0`.
pub fn lemma_inner_positive(rs: &RootSystem, cfg: &ScanConfig) -> CheckResult {
    let signed: SignedRoots = rs.signed_roots();
    let n = signed.len();
    let long: Vec<bool> = (0..n).map(|i| rs.is_long(signed.root(i))).collect();
    let mut result = CheckResult::passing();
    let check = |i: usize, j: usize, result: &mut CheckResult| {
        if !(long[i] || long[j]) {
            return;
        }
        if signed.find(&sub(signed.root(i), signed.root(j))).is_none() {
            return;
        }
        let ip = rs.form().inner(signed.root(i), signed.root(j));
        if ip <= num_rational::Rational64::from_integer(0) {
            push_capped(
                result,
                json!({"beta1": signed.root(i), "beta2": signed.root(j), "inner": ip.to_string()}),
            );
        }
    };
    if n <= cfg.exhaustive_limit || n * n <= cfg.samples {
        for i in 0..n {
            for j in 0..n {
                check(i, j, &mut result);
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        for _ in 0..cfg.samples {
            check(rng.random_range(0..n), rng.random_range(0..n), &mut result);
        }
        result.sampling = Some(Sampling {
            seed: cfg.seed,
            samples: cfg.samples,
            population: n * n,
        });
    }
    result
}

/// If `<β, α> = 3` and `α` is the only simple root with `β - α ∈ Φ⁺`, then no
/// other simple `α'` has `β - α - α' ∈ Φ`.
pub fn lemma_no_detour(rs: &RootSystem) -> CheckResult {
    let n = rs.rank();
    let mut result = CheckResult::passing();
    for beta in rs.positive_roots() {
        let b = beta.coeffs();
        let below: Vec<usize> = (0..n)
            .filter(|&j| rs.is_positive_root(&sub(b, &unit(n, j))))
            .collect();
        for i in 0..n {
            if rs.pairing_simple(b, i) != 3 || below != [i] {
                continue;
            }
            let step = sub(b, &unit(n, i));
            for j in (0..n).filter(|&j| j != i) {
                let detour = sub(&step, &unit(n, j));
                if rs.is_root(&detour) {
                    push_capped(&mut result, json!({"beta": b, "alpha": i, "alpha_prime": j}));
                }
            }
        }
    }
    result
}
