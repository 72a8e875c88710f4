//! Cartan matrices of the irreducible crystallographic root systems and the
//! symmetrized bilinear form they induce.
//!
//! Entries follow the convention `a[i][j] = <α_i, α_j> = 2(α_i, α_j) / (α_j, α_j)`
//! with simple roots numbered as in Bourbaki's plates. Under this convention
//! `B_ℓ` has `a[ℓ-1][ℓ] = -2` (α_ℓ short) and `G_2` is `[[2, -1], [-3, 2]]`
//! with α_1 short.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Errors raised while naming, building or validating Cartan data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CartanError {
    #[error("invalid type: {0}")]
    InvalidType(String),
    #[error("matrix must be square and nonempty")]
    NotSquare,
    #[error("diagonal: entry ({0},{0}) must equal 2")]
    Diagonal(usize),
    #[error("sign: off-diagonal entries ({0},{1}) must be <= 0 and vanish together")]
    Sign(usize, usize),
    #[error("product-bound: a[{0}][{1}]*a[{1}][{0}] is too large for a finite type")]
    ProductBound(usize, usize),
    #[error("decomposable: off-diagonal graph is disconnected")]
    Decomposable,
    #[error("not symmetrizable: ratios around a cycle are inconsistent")]
    NotSymmetrizable,
    #[error("not positive definite: leading principal minor of order {0} is <= 0")]
    NotPositiveDefinite(usize),
}

/// Family letter of an irreducible crystallographic root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// Family plus rank, e.g. `E8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RankedType {
    family: Family,
    rank: usize,
}

impl RankedType {
    pub fn new(family: Family, rank: usize) -> Result<Self, CartanError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            let bound = match family {
                Family::A => "A requires rank >= 1",
                Family::B => "B requires rank >= 2",
                Family::C => "C requires rank >= 2",
                Family::D => "D requires rank >= 4",
                Family::E => "E requires rank in {6, 7, 8}",
                Family::F => "F requires rank = 4",
                Family::G => "G requires rank = 2",
            };
            Err(CartanError::InvalidType(format!(
                "{}{}: {bound}",
                family.letter(),
                rank
            )))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every admissible type of rank at most `max_rank`, in canonical order:
    /// A, B, C, D by increasing rank, then E6, E7, E8, F4, G2.
    pub fn all_up_to(max_rank: usize) -> Vec<RankedType> {
        let mut out = Vec::new();
        for (family, lo) in [(Family::A, 1), (Family::B, 2), (Family::C, 2), (Family::D, 4)] {
            for rank in lo..=max_rank {
                out.push(RankedType { family, rank });
            }
        }
        for (family, rank) in [
            (Family::E, 6),
            (Family::E, 7),
            (Family::E, 8),
            (Family::F, 4),
            (Family::G, 2),
        ] {
            if rank <= max_rank {
                out.push(RankedType { family, rank });
            }
        }
        out
    }
}

impl fmt::Display for RankedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl Serialize for RankedType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for RankedType {
    type Err = CartanError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(CartanError::InvalidType(format!("unknown family in {s:?}"))),
        };
        let rest = chars.as_str().trim_start_matches('_');
        let rank: usize = rest
            .parse()
            .map_err(|_| CartanError::InvalidType(format!("bad rank in {s:?}")))?;
        RankedType::new(family, rank)
    }
}

/// A validated Cartan matrix of an irreducible finite root system.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// `a[i][j] = <α_i, α_j>`.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Off-diagonal neighbours of simple root `i`.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank()).filter(move |&j| j != i && self.entries[i][j] != 0)
    }

    /// Bond multiplicity `a[i][j] * a[j][i]` between two distinct simple roots.
    pub fn bond(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j] * self.entries[j][i]
    }
}

impl Serialize for CartanMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

/// Builds the Cartan matrix of `t` from its Dynkin bonds. A bond `(i, j, k)`
/// with `k > 1` lists the long root first.
pub fn build_cartan(t: RankedType) -> CartanMatrix {
    let n = t.rank();
    let mut bonds: Vec<(usize, usize, i64)> = Vec::new();
    let chain = |bonds: &mut Vec<(usize, usize, i64)>, upto: usize| {
        for i in 1..upto {
            bonds.push((i, i + 1, 1));
        }
    };
    match t.family() {
        Family::A => chain(&mut bonds, n),
        Family::B => {
            chain(&mut bonds, n - 1);
            bonds.push((n - 1, n, 2));
        }
        Family::C => {
            chain(&mut bonds, n - 1);
            bonds.push((n, n - 1, 2));
        }
        Family::D => {
            chain(&mut bonds, n - 1);
            bonds.push((n - 2, n, 1));
        }
        Family::E => {
            bonds.push((1, 3, 1));
            bonds.push((2, 4, 1));
            for i in 3..n {
                bonds.push((i, i + 1, 1));
            }
        }
        Family::F => {
            bonds.push((1, 2, 1));
            bonds.push((2, 3, 2));
            bonds.push((3, 4, 1));
        }
        Family::G => bonds.push((2, 1, 3)),
    }
    let mut entries = vec![vec![0i64; n]; n];
    for (i, row) in entries.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (long, short, k) in bonds {
        let (l, s) = (long - 1, short - 1);
        // <long, short> = -k, <short, long> = -1
        entries[l][s] = -k;
        entries[s][l] = -1;
    }
    CartanMatrix { entries }
}

/// Checks every Cartan-matrix invariant and returns the validated matrix, or
/// the first violated invariant.
pub fn validate_cartan(raw: Vec<Vec<i64>>) -> Result<CartanMatrix, CartanError> {
    let n = raw.len();
    if n == 0 || raw.iter().any(|r| r.len() != n) {
        return Err(CartanError::NotSquare);
    }
    for (i, row) in raw.iter().enumerate() {
        if row[i] != 2 {
            return Err(CartanError::Diagonal(i));
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let (a, b) = (raw[i][j], raw[j][i]);
            if a > 0 || b > 0 || ((a == 0) != (b == 0)) {
                return Err(CartanError::Sign(i, j));
            }
            // a product of exactly 4 is an affine rank-2 block; it is left to
            // the definiteness test, which reports it with the zero minor
            if !(0..=4).contains(&(a * b)) {
                return Err(CartanError::ProductBound(i, j));
            }
        }
    }
    let matrix = CartanMatrix { entries: raw };
    if !is_connected(&matrix) {
        return Err(CartanError::Decomposable);
    }
    let form = try_symmetrize(&matrix).ok_or(CartanError::NotSymmetrizable)?;
    if let Some(k) = first_nonpositive_minor(&form.gram) {
        return Err(CartanError::NotPositiveDefinite(k));
    }
    Ok(matrix)
}

fn is_connected(c: &CartanMatrix) -> bool {
    let n = c.rank();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        for w in c.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Index (1-based order) of the first leading principal minor that is not
/// positive, found by pivot signs of fraction-exact Gaussian elimination.
fn first_nonpositive_minor(gram: &[Vec<Rational64>]) -> Option<usize> {
    let n = gram.len();
    let mut m = gram.to_vec();
    for k in 0..n {
        // pivot k is the ratio of consecutive leading minors
        if m[k][k] <= Rational64::zero() {
            return Some(k + 1);
        }
        for i in k + 1..n {
            let factor = m[i][k] / m[k][k];
            for j in k..n {
                let v = m[k][j];
                m[i][j] -= factor * v;
            }
        }
    }
    None
}

/// Squared lengths `d_i = (α_i, α_i)` of the simple roots, normalized so the
/// shortest is 1, together with the Gram matrix `(α_i, α_j) = a[i][j] d_j / 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetrizedForm {
    d: Vec<Rational64>,
    gram: Vec<Vec<Rational64>>,
}

impl SymmetrizedForm {
    pub fn d(&self) -> &[Rational64] {
        &self.d
    }

    pub fn gram(&self) -> &[Vec<Rational64>] {
        &self.gram
    }

    /// `(x, y)` for coefficient vectors over the simple basis.
    pub fn inner(&self, x: &[i64], y: &[i64]) -> Rational64 {
        let mut acc = Rational64::zero();
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj != 0 {
                    acc += self.gram[i][j] * (xi * yj);
                }
            }
        }
        acc
    }

    pub fn norm_sq(&self, x: &[i64]) -> Rational64 {
        self.inner(x, x)
    }
}

/// The normalized symmetrizer of a validated Cartan matrix.
pub fn symmetrizer(c: &CartanMatrix) -> SymmetrizedForm {
    try_symmetrize(c).expect("validated Cartan matrices are symmetrizable")
}

fn try_symmetrize(c: &CartanMatrix) -> Option<SymmetrizedForm> {
    let n = c.rank();
    let mut d: Vec<Option<Rational64>> = vec![None; n];
    d[0] = Some(Rational64::one());
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let di = d[i]?;
        for j in c.neighbors(i) {
            // a[i][j] d_j = a[j][i] d_i
            let dj = di * Rational64::new(c.get(j, i), c.get(i, j));
            match d[j] {
                None => {
                    d[j] = Some(dj);
                    queue.push_back(j);
                }
                Some(existing) if existing != dj => return None,
                Some(_) => {}
            }
        }
    }
    let d: Vec<Rational64> = d.into_iter().collect::<Option<_>>()?;
    let min = d.iter().copied().min()?;
    let d: Vec<Rational64> = d.into_iter().map(|x| x / min).collect();
    let half = Rational64::new(1, 2);
    let gram: Vec<Vec<Rational64>> = (0..n)
        .map(|i| (0..n).map(|j| d[j] * c.get(i, j) * half).collect())
        .collect();
    for i in 0..n {
        for j in 0..i {
            if gram[i][j] != gram[j][i] {
                return None;
            }
        }
    }
    Some(SymmetrizedForm { d, gram })
}
