//! Positive-root enumeration by height layers, and queries on the resulting
//! root system: pairings, root strings, lengths, the root poset and the
//! highest root.

use std::collections::HashMap;

use num_rational::Rational64;
use serde::Serialize;
use thiserror::Error;

use crate::cartan::{build_cartan, symmetrizer, CartanMatrix, RankedType, SymmetrizedForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

/// A positive root, as coordinates over the simple basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Root {
    coeffs: Vec<i64>,
    height: i64,
}

impl Root {
    fn new(coeffs: Vec<i64>) -> Self {
        let height = coeffs.iter().sum();
        Self { coeffs, height }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn height(&self) -> i64 {
        self.height
    }

    /// Index of the simple root this is, if it is one.
    pub fn simple_index(&self) -> Option<usize> {
        simple_index(&self.coeffs)
    }
}

/// Index `i` when `v` is exactly the unit vector of `α_i`.
pub fn simple_index(v: &[i64]) -> Option<usize> {
    let mut found = None;
    for (i, &c) in v.iter().enumerate() {
        match c {
            0 => {}
            1 if found.is_none() => found = Some(i),
            _ => return None,
        }
    }
    found
}

pub fn add(x: &[i64], y: &[i64]) -> Vec<i64> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn sub(x: &[i64], y: &[i64]) -> Vec<i64> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn scale(x: &[i64], k: i64) -> Vec<i64> {
    x.iter().map(|a| a * k).collect()
}

pub fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// The positive roots of an irreducible root system, grouped by height.
#[derive(Debug, Clone)]
pub struct RootSystem {
    label: Option<RankedType>,
    cartan: CartanMatrix,
    form: SymmetrizedForm,
    /// `layers[r - 1]` holds the roots of height `r`, in lexicographic order.
    layers: Vec<Vec<Root>>,
    index: HashMap<Vec<i64>, (usize, usize)>,
    long_norm: Rational64,
}

impl RootSystem {
    /// Builds the named system.
    pub fn of_type(t: RankedType) -> Self {
        let mut rs = Self::enumerate(&build_cartan(t)).expect("built Cartan matrices enumerate");
        rs.label = Some(t);
        rs
    }

    /// Enumerates `Φ⁺` layer by layer: `β + α_i` is a root exactly when
    /// `p - <β, α_i> > 0`, where `p` is the length of the `α_i`-string below `β`.
    pub fn enumerate(cartan: &CartanMatrix) -> Result<Self, RootError> {
        let n = cartan.rank();
        let form = symmetrizer(cartan);
        let cap = 10 * n;
        let mut simple: Vec<Root> = (0..n).map(|i| Root::new(unit(n, i))).collect();
        simple.sort();
        let mut layers: Vec<Vec<Root>> = vec![simple];
        let mut index: HashMap<Vec<i64>, (usize, usize)> = HashMap::new();
        for (pos, r) in layers[0].iter().enumerate() {
            index.insert(r.coeffs.clone(), (0, pos));
        }
        loop {
            let current = layers.last().expect("at least one layer");
            let mut next: Vec<Root> = Vec::new();
            let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
            for beta in current {
                for i in 0..n {
                    let mut p = 0;
                    let mut probe = beta.coeffs.clone();
                    loop {
                        probe[i] -= 1;
                        if index.contains_key(&probe) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i64 = (0..n).map(|j| beta.coeffs[j] * cartan.get(j, i)).sum();
                    if p - pairing > 0 {
                        let mut up = beta.coeffs.clone();
                        up[i] += 1;
                        if seen.insert(up.clone(), ()).is_none() {
                            next.push(Root::new(up));
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            if layers.len() >= cap {
                return Err(RootError::Inconsistent(format!(
                    "enumeration exceeded height cap {cap}"
                )));
            }
            next.sort();
            let depth = layers.len();
            for (pos, r) in next.iter().enumerate() {
                index.insert(r.coeffs.clone(), (depth, pos));
            }
            layers.push(next);
        }
        let long_norm = layers
            .iter()
            .flatten()
            .map(|r| form.norm_sq(&r.coeffs))
            .max()
            .expect("nonempty");
        Ok(Self {
            label: None,
            cartan: cartan.clone(),
            form,
            layers,
            index,
            long_norm,
        })
    }

    pub fn label(&self) -> Option<RankedType> {
        self.label
    }

    /// `"E8"` for named systems, `"custom"` otherwise.
    pub fn type_id(&self) -> String {
        self.label.map_or_else(|| "custom".to_string(), |t| t.to_string())
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn form(&self) -> &SymmetrizedForm {
        &self.form
    }

    /// Roots of height `r` (empty outside `1..h`).
    pub fn layer(&self, r: usize) -> &[Root] {
        if r == 0 {
            return &[];
        }
        self.layers.get(r - 1).map_or(&[], Vec::as_slice)
    }

    pub fn max_height(&self) -> usize {
        self.layers.len()
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.layers.iter().flatten()
    }

    pub fn num_positive(&self) -> usize {
        self.index.len()
    }

    pub fn simple_root(&self, i: usize) -> &Root {
        self.get(&unit(self.rank(), i)).expect("simple roots are roots")
    }

    pub fn get(&self, coeffs: &[i64]) -> Option<&Root> {
        self.index.get(coeffs).map(|&(l, p)| &self.layers[l][p])
    }

    pub fn is_positive_root(&self, v: &[i64]) -> bool {
        self.index.contains_key(v)
    }

    /// Membership in `Φ = Φ⁺ ⊔ -Φ⁺`.
    pub fn is_root(&self, v: &[i64]) -> bool {
        if self.index.contains_key(v) {
            return true;
        }
        v.iter().any(|&c| c < 0) && self.index.contains_key(&scale(v, -1))
    }

    pub fn highest_root(&self) -> &Root {
        let top = self.layers.last().expect("nonempty");
        debug_assert_eq!(top.len(), 1);
        &top[0]
    }

    pub fn c_max(&self) -> i64 {
        *self.highest_root().coeffs.iter().max().expect("rank >= 1")
    }

    /// Simple roots at which the highest root attains `c_max`.
    pub fn c_max_indices(&self) -> Vec<usize> {
        let c = self.c_max();
        let theta = self.highest_root().coeffs();
        (0..self.rank()).filter(|&i| theta[i] == c).collect()
    }

    fn check_rank(&self, v: &[i64]) -> Result<(), RootError> {
        if v.len() != self.rank() {
            return Err(RootError::InvalidArgument(format!(
                "vector of length {} for rank {}",
                v.len(),
                self.rank()
            )));
        }
        Ok(())
    }

    /// `<β, γ> = 2(β, γ) / (γ, γ)`, which must be an integer.
    pub fn pairing(&self, beta: &[i64], gamma: &[i64]) -> Result<i64, RootError> {
        self.check_rank(beta)?;
        self.check_rank(gamma)?;
        if gamma.iter().all(|&c| c == 0) {
            return Err(RootError::InvalidArgument("pairing against zero".into()));
        }
        let v = Rational64::from_integer(2) * self.form.inner(beta, gamma) / self.form.norm_sq(gamma);
        if !v.is_integer() {
            return Err(RootError::InvalidArgument(format!(
                "pairing {v} of {beta:?} against {gamma:?} is not integral"
            )));
        }
        Ok(v.to_integer())
    }

    /// `<β, α_i>` straight from the Cartan matrix.
    pub fn pairing_simple(&self, beta: &[i64], i: usize) -> i64 {
        beta.iter()
            .enumerate()
            .map(|(j, &b)| b * self.cartan.get(j, i))
            .sum()
    }

    /// `β ≥ γ` in the root poset. Both arguments must be positive roots.
    pub fn dominates(&self, alpha: &[i64], beta: &[i64]) -> Result<bool, RootError> {
        self.check_rank(alpha)?;
        self.check_rank(beta)?;
        for v in [alpha, beta] {
            if !self.is_positive_root(v) {
                return Err(RootError::InvalidArgument(format!("{v:?} is not a positive root")));
            }
        }
        Ok(alpha.iter().zip(beta).all(|(a, b)| a >= b))
    }

    /// The `α_i`-string through the positive root `β`: the largest `p`, `q`
    /// with `β - pα_i, …, β + qα_i` unbroken in `Φ ∪ {0}`. Always `p - q = <β, α_i>`.
    pub fn root_string(&self, beta: &[i64], i: usize) -> Result<(i64, i64), RootError> {
        self.check_rank(beta)?;
        if i >= self.rank() {
            return Err(RootError::InvalidArgument(format!("no simple root {i}")));
        }
        if !self.is_positive_root(beta) {
            return Err(RootError::InvalidArgument(format!("{beta:?} is not a positive root")));
        }
        let in_string = |v: &[i64]| v.iter().all(|&c| c == 0) || self.is_root(v);
        let walk = |step: i64| {
            let mut k = 0;
            let mut v = beta.to_vec();
            loop {
                v[i] += step;
                if !in_string(&v) {
                    return k;
                }
                k += 1;
            }
        };
        Ok((walk(-1), walk(1)))
    }

    pub fn norm_sq(&self, v: &[i64]) -> Rational64 {
        self.form.norm_sq(v)
    }

    /// Squared length of the long roots.
    pub fn long_norm_sq(&self) -> Rational64 {
        self.long_norm
    }

    pub fn is_long(&self, v: &[i64]) -> bool {
        self.norm_sq(v) == self.long_norm
    }

    /// Positive roots followed by their negatives, with a linear-hash index for
    /// fast sum lookups.
    pub fn signed_roots(&self) -> SignedRoots {
        SignedRoots::new(self)
    }

    pub fn to_document(&self) -> RootSystemDocument {
        RootSystemDocument {
            r#type: self.type_id(),
            rank: self.rank(),
            cartan: self.cartan.rows().to_vec(),
            roots: self
                .positive_roots()
                .map(|r| RootEntry {
                    coeffs: r.coeffs.clone(),
                    height: r.height,
                })
                .collect(),
            highest_root: self.highest_root().coeffs.clone(),
            c_max: self.c_max(),
        }
    }
}

/// JSON form of a root system; roots sorted by height then coefficients.
#[derive(Debug, Clone, Serialize)]
pub struct RootSystemDocument {
    pub r#type: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub roots: Vec<RootEntry>,
    pub highest_root: Vec<i64>,
    pub c_max: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RootEntry {
    pub coeffs: Vec<i64>,
    pub height: i64,
}

/// All of `Φ` in one vector, indexed by a linear hash so that the hash of a
/// sum is the sum of the hashes. Hits are confirmed by exact comparison.
#[derive(Debug, Clone)]
pub struct SignedRoots {
    roots: Vec<Vec<i64>>,
    keys: Vec<u64>,
    weights: Vec<u64>,
    lookup: HashMap<u64, usize>,
}

impl SignedRoots {
    fn new(rs: &RootSystem) -> Self {
        let positives: Vec<Vec<i64>> = rs.positive_roots().map(|r| r.coeffs.clone()).collect();
        let mut roots = positives.clone();
        roots.extend(positives.iter().map(|v| scale(v, -1)));
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        let weights: Vec<u64> = (0..rs.rank())
            .map(|_| {
                // splitmix64
                state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
                let mut z = state;
                z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
                z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
                (z ^ (z >> 31)) | 1
            })
            .collect();
        let key = |v: &[i64]| -> u64 {
            v.iter()
                .zip(&weights)
                .fold(0u64, |acc, (&c, &w)| acc.wrapping_add((c as u64).wrapping_mul(w)))
        };
        let keys: Vec<u64> = roots.iter().map(|v| key(v)).collect();
        let mut lookup = HashMap::with_capacity(roots.len());
        for (i, &k) in keys.iter().enumerate() {
            let prev = lookup.insert(k, i);
            assert!(prev.is_none(), "hash collision between roots");
        }
        Self { roots, keys, weights, lookup }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn key(&self, i: usize) -> u64 {
        self.keys[i]
    }

    pub fn key_of(&self, v: &[i64]) -> u64 {
        v.iter()
            .zip(&self.weights)
            .fold(0u64, |acc, (&c, &w)| acc.wrapping_add((c as u64).wrapping_mul(w)))
    }

    /// Index of the root whose coefficients equal the sum of `parts`, given the
    /// precomputed sum of their keys.
    pub fn find_sum(&self, key: u64, parts: &[usize]) -> Option<usize> {
        let &idx = self.lookup.get(&key)?;
        let target = &self.roots[idx];
        let exact = (0..target.len()).all(|c| {
            parts.iter().map(|&p| self.roots[p][c]).sum::<i64>() == target[c]
        });
        exact.then_some(idx)
    }

    pub fn find(&self, v: &[i64]) -> Option<usize> {
        let &idx = self.lookup.get(&self.key_of(v))?;
        (self.roots[idx] == v).then_some(idx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(name: &str) -> RootSystem {
        RootSystem::of_type(name.parse().unwrap())
    }

    #[test]
    fn a2_roots() {
        let a2 = rs("A2");
        let all: Vec<&[i64]> = a2.positive_roots().map(Root::coeffs).collect();
        assert_eq!(all, vec![&[0, 1][..], &[1, 0], &[1, 1]]);
        assert_eq!(a2.simple_root(0).coeffs(), &[1, 0]);
    }

    #[test]
    fn g2_roots() {
        let g2 = rs("G2");
        let heights: Vec<i64> = g2.positive_roots().map(Root::height).collect();
        assert_eq!(heights, vec![1, 1, 2, 3, 4, 5]);
        assert_eq!(g2.highest_root().coeffs(), &[3, 2]);
        assert_eq!(g2.c_max(), 3);
    }

    #[test]
    fn e8_count() {
        assert_eq!(rs("E8").num_positive(), 120);
    }

    #[test]
    fn f4_highest_root() {
        let f4 = rs("F4");
        assert_eq!(f4.highest_root().coeffs(), &[2, 3, 4, 2]);
        assert_eq!(f4.c_max(), 4);
    }

    #[test]
    fn a_series_highest_root_is_all_ones() {
        for n in 1..=8 {
            let a = rs(&format!("A{n}"));
            assert!(a.highest_root().coeffs().iter().all(|&c| c == 1));
            assert_eq!(a.c_max(), 1);
        }
    }

    #[test]
    fn pairings() {
        let g2 = rs("G2");
        let theta = g2.highest_root().coeffs().to_vec();
        assert_eq!(g2.pairing(&theta, &theta), Ok(2));
        assert_eq!(g2.pairing(&[3, 1], &[1, 0]), Ok(3));
        assert_eq!(g2.pairing_simple(&[3, 1], 0), 3);
        assert!(matches!(g2.pairing(&[1, 0], &[0, 0]), Err(RootError::InvalidArgument(_))));
        let a3 = rs("A3");
        assert_eq!(a3.pairing(&[1, 1, 0], &[0, 0, 1]), Ok(-1));
    }

    #[test]
    fn dominance() {
        let a2 = rs("A2");
        assert_eq!(a2.dominates(&[1, 1], &[1, 0]), Ok(true));
        assert_eq!(a2.dominates(&[1, 0], &[0, 1]), Ok(false));
        assert!(a2.dominates(&[1, 0, 0], &[1, 0]).is_err());
        assert!(a2.dominates(&[2, 0], &[1, 0]).is_err());
        let g2 = rs("G2");
        assert_eq!(g2.dominates(&[2, 1], &[3, 1]), Ok(false));
        for t in RankedType::all_up_to(6) {
            let sys = RootSystem::of_type(t);
            let theta = sys.highest_root().coeffs().to_vec();
            for i in 0..sys.rank() {
                assert_eq!(sys.dominates(&theta, &unit(sys.rank(), i)), Ok(true));
            }
        }
    }

    #[test]
    fn strings() {
        let g2 = rs("G2");
        assert_eq!(g2.root_string(&[0, 1], 0), Ok((0, 3)));
        let a2 = rs("A2");
        assert_eq!(a2.root_string(&[1, 0], 1), Ok((0, 1)));
        assert_eq!(a2.root_string(&[1, 0], 0), Ok((2, 0)));
        assert!(a2.root_string(&[2, 0], 0).is_err());
        for t in RankedType::all_up_to(7) {
            let sys = RootSystem::of_type(t);
            let theta = sys.highest_root().coeffs().to_vec();
            for i in 0..sys.rank() {
                assert_eq!(sys.root_string(&theta, i).unwrap().1, 0, "{t}");
            }
        }
    }

    #[test]
    fn lengths() {
        let g2 = rs("G2");
        assert_eq!(g2.norm_sq(&[0, 1]) / g2.norm_sq(&[1, 0]), Rational64::from_integer(3));
        let b3 = rs("B3");
        assert!(b3.is_long(&[1, 0, 0]));
        assert!(!b3.is_long(&[0, 0, 1]));
        let a4 = rs("A4");
        assert!(a4.positive_roots().all(|r| a4.is_long(r.coeffs())));
    }

    #[test]
    fn signed_lookup() {
        let b3 = rs("B3");
        let signed = b3.signed_roots();
        assert_eq!(signed.len(), 18);
        assert!(signed.find(&[-1, -2, -2]).is_some());
        assert!(signed.find(&[1, -1, 0]).is_none());
        let a = signed.find(&[1, 0, 0]).unwrap();
        let b = signed.find(&[0, 1, 0]).unwrap();
        let k = signed.key(a).wrapping_add(signed.key(b));
        assert_eq!(signed.find_sum(k, &[a, b]), signed.find(&[1, 1, 0]));
    }

    #[test]
    fn document_layout() {
        let doc = serde_json::to_string(&rs("A2").to_document()).unwrap();
        assert_eq!(
            doc,
            r#"{"type":"A2","rank":2,"cartan":[[2,-1],[-1,2]],"roots":[{"coeffs":[0,1],"height":1},{"coeffs":[1,0],"height":1},{"coeffs":[1,1],"height":2}],"highest_root":[1,1],"c_max":1}"#
        );
    }
}
