//! Weyl group exponents, computed from the dual partition of the height
//! distribution and, independently, from the eigenvalues of a Coxeter element.

use std::f64::consts::TAU;
use std::fmt;

use nalgebra::DMatrix;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::cartan::CartanMatrix;
use crate::roots::RootSystem;

/// Allowed distance between `h·angle/2π` and its nearest integer, in units of `h`.
pub const ANGLE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExponentError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("numeric inconsistency: {0}")]
    Numeric(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    DualPartition,
    CoxeterEigenvalues,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::DualPartition => "dual-partition",
            Method::CoxeterEigenvalues => "coxeter-eigenvalues",
        })
    }
}

impl Serialize for Method {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `t[r - 1]` is the number of positive roots of height `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightDistribution {
    rank: usize,
    counts: Vec<usize>,
}

impl HeightDistribution {
    pub fn new(rank: usize, counts: Vec<usize>) -> Self {
        Self { rank, counts }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }
}

pub fn height_distribution(rs: &RootSystem) -> HeightDistribution {
    let counts = (1..=rs.max_height()).map(|r| rs.layer(r).len()).collect();
    HeightDistribution::new(rs.rank(), counts)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExponentReport {
    exponents: Vec<u32>,
    #[serde(rename = "h")]
    coxeter_number: u32,
    method: Method,
    #[serde(skip)]
    max_residual: f64,
}

impl ExponentReport {
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn coxeter_number(&self) -> u32 {
        self.coxeter_number
    }

    pub fn method(&self) -> Method {
        self.method
    }

    /// Largest rounding residual `|m_j - h·angle_j/2π|` (zero for the dual partition).
    pub fn max_residual(&self) -> f64 {
        self.max_residual
    }

    /// `m_2`, the second smallest exponent (rank ≥ 2).
    pub fn m2(&self) -> Option<u32> {
        self.exponents.get(1).copied()
    }
}

/// Reads the exponents off the conjugate partition of the height distribution:
/// exponent `a` occurs `t_a - t_{a+1}` times.
pub fn dual_partition(hd: &HeightDistribution) -> Result<ExponentReport, ExponentError> {
    let t = hd.counts();
    if t.is_empty() {
        return Err(ExponentError::InvalidArgument("empty height distribution".into()));
    }
    if let Some(r) = t.windows(2).position(|w| w[1] > w[0]) {
        return Err(ExponentError::InvalidArgument(format!(
            "height distribution increases at height {}",
            r + 2
        )));
    }
    if t[0] != hd.rank() {
        return Err(ExponentError::InvalidArgument(format!(
            "{} roots of height 1 for rank {}",
            t[0],
            hd.rank()
        )));
    }
    let top = t.len();
    let mut exponents = Vec::with_capacity(hd.rank());
    for a in 1..=top {
        let here = t[a - 1];
        let above = t.get(a).copied().unwrap_or(0);
        exponents.extend(std::iter::repeat_n(a as u32, here - above));
    }
    Ok(ExponentReport {
        exponents,
        coxeter_number: top as u32 + 1,
        method: Method::DualPartition,
        max_residual: 0.0,
    })
}

/// Matrix of the simple reflection `s_i` in simple-root coordinates:
/// `s_i(α_j) = α_j - <α_j, α_i> α_i`.
fn simple_reflection(c: &CartanMatrix, i: usize) -> Vec<Vec<i64>> {
    let n = c.rank();
    let mut m = identity(n);
    for j in 0..n {
        m[i][j] -= c.get(j, i);
    }
    m
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

/// The Coxeter element `s_1 s_2 … s_ℓ` as an integer matrix.
pub fn coxeter_matrix(c: &CartanMatrix) -> Vec<Vec<i64>> {
    let order: Vec<usize> = (0..c.rank()).collect();
    coxeter_matrix_ordered(c, &order)
}

/// The product `s_{order[0]} s_{order[1]} …` of all simple reflections.
pub fn coxeter_matrix_ordered(c: &CartanMatrix, order: &[usize]) -> Vec<Vec<i64>> {
    order
        .iter()
        .fold(identity(c.rank()), |acc, &i| mat_mul(&acc, &simple_reflection(c, i)))
}

/// Multiplicative order of an integer matrix, searching up to `bound`.
pub fn matrix_order(m: &[Vec<i64>], bound: usize) -> Option<usize> {
    let id = identity(m.len());
    let mut power = m.to_vec();
    for k in 1..=bound {
        if power == id {
            return Some(k);
        }
        power = mat_mul(&power, m);
    }
    None
}

pub fn coxeter_exponents(c: &CartanMatrix) -> Result<ExponentReport, ExponentError> {
    let order: Vec<usize> = (0..c.rank()).collect();
    coxeter_exponents_ordered(c, &order)
}

/// Exponents from a Coxeter element built in the given reflection order.
///
/// `h` is the exact order of the integer matrix. The eigenvalues are computed
/// after changing to an orthonormal basis of the invariant form, where the
/// Coxeter element is orthogonal, and each `h·angle/2π` must round to an
/// integer within `ANGLE_TOLERANCE · h`.
pub fn coxeter_exponents_ordered(
    c: &CartanMatrix,
    order: &[usize],
) -> Result<ExponentReport, ExponentError> {
    let n = c.rank();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err(ExponentError::InvalidArgument(format!(
            "{order:?} is not an ordering of the simple reflections"
        )));
    }
    let m = coxeter_matrix_ordered(c, order);
    // max height is at most the enumeration cap 10·ℓ
    let bound = 2 * (10 * n + 1);
    let h = matrix_order(&m, bound)
        .ok_or_else(|| ExponentError::Numeric(format!("no Coxeter order found up to {bound}")))?;

    let form = crate::cartan::symmetrizer(c);
    let gram = DMatrix::from_fn(n, n, |i, j| {
        let v = form.gram()[i][j];
        *v.numer() as f64 / *v.denom() as f64
    });
    let chol = gram
        .cholesky()
        .ok_or_else(|| ExponentError::Numeric("form is not positive definite".into()))?;
    let lt = chol.l().transpose();
    let lt_inv = lt
        .clone()
        .try_inverse()
        .ok_or_else(|| ExponentError::Numeric("singular Cholesky factor".into()))?;
    let cox = DMatrix::from_fn(n, n, |i, j| m[i][j] as f64);
    let orthogonal = &lt * cox * lt_inv;

    let hf = h as f64;
    let mut exponents = Vec::with_capacity(n);
    let mut max_residual: f64 = 0.0;
    for z in orthogonal.complex_eigenvalues().iter() {
        let mut angle = z.im.atan2(z.re);
        if angle < 0.0 {
            angle += TAU;
        }
        let value = hf * angle / TAU;
        let rounded = value.round();
        let residual = (value - rounded).abs();
        if residual >= ANGLE_TOLERANCE * hf {
            return Err(ExponentError::Numeric(format!(
                "eigen-angle {value} is {residual:e} from an integer"
            )));
        }
        if rounded < 1.0 || rounded >= hf {
            return Err(ExponentError::Numeric(format!(
                "exponent {rounded} outside (0, {h})"
            )));
        }
        max_residual = max_residual.max(residual);
        exponents.push(rounded as u32);
    }
    exponents.sort_unstable();
    Ok(ExponentReport {
        exponents,
        coxeter_number: h as u32,
        method: Method::CoxeterEigenvalues,
        max_residual,
    })
}

/// Outcome of one exponent identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// Evaluates the standard identities between exponents, the Coxeter number
/// and the highest root.
pub fn check_duality(rep: &ExponentReport, rs: &RootSystem) -> Vec<IdentityCheck> {
    let m = rep.exponents();
    let h = rep.coxeter_number();
    let l = m.len();
    let theta = rs.highest_root();
    let coeff_sum: i64 = theta.coeffs().iter().sum();

    let bad_pairs: Vec<String> = (0..l)
        .filter(|&j| m[j] + m[l - 1 - j] != h)
        .map(|j| format!("m_{} + m_{} = {}", j + 1, l - j, m[j] + m[l - 1 - j]))
        .collect();
    let chain_ok = l == rs.rank()
        && m.first() == Some(&1)
        && m.last() == Some(&(h - 1))
        && m.windows(2).all(|w| w[0] <= w[1])
        && (l < 2 || (m[0] < m[1] && m[l - 2] < m[l - 1]))
        && m.iter().all(|&x| 0 < x && x < h);
    let total: u64 = m.iter().map(|&x| u64::from(x)).sum();

    vec![
        IdentityCheck {
            name: "symmetry",
            pass: l == rs.rank() && bad_pairs.is_empty(),
            detail: if bad_pairs.is_empty() {
                format!("m_j + m_(l+1-j) = {h}")
            } else {
                bad_pairs.join("; ")
            },
        },
        IdentityCheck {
            name: "inequality_chain",
            pass: chain_ok,
            detail: format!("exponents {m:?}, h = {h}"),
        },
        IdentityCheck {
            name: "coxeter_number",
            pass: i64::from(h) == theta.height() + 1,
            detail: format!("h = {h}, ht(theta) = {}", theta.height()),
        },
        IdentityCheck {
            name: "largest_exponent",
            pass: m.last().map(|&x| i64::from(x)) == Some(coeff_sum),
            detail: format!("m_l = {:?}, sum c_i = {coeff_sum}", m.last()),
        },
        IdentityCheck {
            name: "exponent_sum",
            pass: total == rs.num_positive() as u64,
            detail: format!("sum m_i = {total}, |positive roots| = {}", rs.num_positive()),
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{build_cartan, RankedType};

    fn rs(name: &str) -> RootSystem {
        RootSystem::of_type(name.parse().unwrap())
    }

    fn dual(name: &str) -> ExponentReport {
        dual_partition(&height_distribution(&rs(name))).unwrap()
    }

    fn cox(name: &str) -> ExponentReport {
        coxeter_exponents(&build_cartan(name.parse().unwrap())).unwrap()
    }

    #[test]
    fn height_distributions() {
        assert_eq!(height_distribution(&rs("A2")).counts(), &[2, 1]);
        assert_eq!(height_distribution(&rs("G2")).counts(), &[2, 1, 1, 1, 1]);
        assert_eq!(height_distribution(&rs("B2")).counts(), &[2, 1, 1]);
    }

    #[test]
    fn dual_partition_small() {
        let a2 = dual("A2");
        assert_eq!((a2.exponents(), a2.coxeter_number()), (&[1, 2][..], 3));
        let g2 = dual("G2");
        assert_eq!((g2.exponents(), g2.coxeter_number()), (&[1, 5][..], 6));
        let b2 = dual("B2");
        assert_eq!((b2.exponents(), b2.coxeter_number()), (&[1, 3][..], 4));
    }

    #[test]
    fn dual_partition_rejects_bad_input() {
        let rising = HeightDistribution::new(2, vec![2, 3]);
        assert!(matches!(dual_partition(&rising), Err(ExponentError::InvalidArgument(_))));
        let zeros = HeightDistribution::new(3, vec![2, 1]);
        assert!(matches!(dual_partition(&zeros), Err(ExponentError::InvalidArgument(_))));
    }

    #[test]
    fn coxeter_matrix_small() {
        assert_eq!(coxeter_matrix(&build_cartan("A1".parse().unwrap())), vec![vec![-1]]);
        let a2 = coxeter_matrix(&build_cartan("A2".parse().unwrap()));
        assert_eq!(matrix_order(&a2, 10), Some(3));
        let g2 = coxeter_matrix(&build_cartan("G2".parse().unwrap()));
        assert_eq!(matrix_order(&g2, 10), Some(6));
    }

    #[test]
    fn coxeter_determinant_sign() {
        // det of each reflection is -1; check via a 2x2 / 3x3 expansion
        let det2 = |m: &Vec<Vec<i64>>| m[0][0] * m[1][1] - m[0][1] * m[1][0];
        for name in ["A2", "B2", "C2", "G2"] {
            assert_eq!(det2(&coxeter_matrix(&build_cartan(name.parse().unwrap()))), 1);
        }
    }

    #[test]
    fn coxeter_exponents_known() {
        let a1 = cox("A1");
        assert_eq!((a1.exponents(), a1.coxeter_number()), (&[1][..], 2));
        let a2 = cox("A2");
        assert_eq!((a2.exponents(), a2.coxeter_number()), (&[1, 2][..], 3));
        let e8 = cox("E8");
        assert_eq!(e8.exponents(), &[1, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(e8.coxeter_number(), 30);
        assert_eq!(cox("D4").exponents(), &[1, 3, 3, 5]);
    }

    #[test]
    fn both_methods_agree_through_rank_twelve() {
        for t in RankedType::all_up_to(12) {
            let d = dual(&t.to_string());
            let c = cox(&t.to_string());
            assert_eq!(d.exponents(), c.exponents(), "{t}");
            assert_eq!(d.coxeter_number(), c.coxeter_number(), "{t}");
            assert!(c.max_residual() < ANGLE_TOLERANCE * f64::from(c.coxeter_number()));
        }
    }

    #[test]
    fn bad_order_rejected() {
        let c = build_cartan("A3".parse().unwrap());
        assert!(coxeter_exponents_ordered(&c, &[0, 0, 1]).is_err());
    }

    #[test]
    fn duality_identities() {
        let g2 = rs("G2");
        let checks = check_duality(&dual("G2"), &g2);
        assert!(checks.iter().all(|c| c.pass), "{checks:?}");
        let f4 = rs("F4");
        let rep = dual("F4");
        assert_eq!(rep.exponents().iter().sum::<u32>(), 24);
        assert_eq!(f4.num_positive(), 24);
        assert!(check_duality(&rep, &f4).iter().all(|c| c.pass));
    }

    #[test]
    fn duality_reports_failures() {
        let g2 = rs("G2");
        let wrong = ExponentReport {
            exponents: vec![1, 4],
            coxeter_number: 6,
            method: Method::DualPartition,
            max_residual: 0.0,
        };
        let failed: Vec<&str> = check_duality(&wrong, &g2)
            .into_iter()
            .filter(|c| !c.pass)
            .map(|c| c.name)
            .collect();
        assert_eq!(
            failed,
            ["symmetry", "inequality_chain", "largest_exponent", "exponent_sum"]
        );
    }

    #[test]
    fn report_json() {
        assert_eq!(
            serde_json::to_string(&dual("G2")).unwrap(),
            r#"{"exponents":[1,5],"h":6,"method":"dual-partition"}"#
        );
    }
}
