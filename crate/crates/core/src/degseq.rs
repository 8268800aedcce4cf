//! Degree-sequence arithmetic: graphicality, the 2-tree sequence test, and
//! the closed-form tail parameters of strong central 2-trees with tail
//! degrees in {2,3}.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Nonincreasing list of vertex degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Sorts `degrees` into nonincreasing order. Empty input is rejected.
    pub fn new(mut degrees: Vec<usize>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::domain("degree sequence must be nonempty"));
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence(degrees))
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max(&self) -> usize {
        self.0[0]
    }

    pub fn count(&self, degree: usize) -> usize {
        self.0.iter().filter(|&&d| d == degree).count()
    }

    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &d in &self.0 {
            *m.entry(d).or_insert(0) += 1;
        }
        m
    }

    /// Space-separated rendering, e.g. `7 7 3 3 2 2`.
    pub fn spaced(&self) -> String {
        self.0
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl<'de> Deserialize<'de> for DegreeSequence {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        DegreeSequence::new(Vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.0
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Parses comma-separated integers, e.g. `5,5,2,2,2,2`.
impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let degrees = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::domain(format!("bad degree {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        DegreeSequence::new(degrees)
    }
}

/// Number of core vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoreSize {
    Uni = 1,
    Bi = 2,
    Tri = 3,
}

impl CoreSize {
    pub const ALL: [CoreSize; 3] = [CoreSize::Uni, CoreSize::Bi, CoreSize::Tri];

    pub fn new(r: usize) -> Result<Self> {
        match r {
            1 => Ok(CoreSize::Uni),
            2 => Ok(CoreSize::Bi),
            3 => Ok(CoreSize::Tri),
            _ => Err(Error::domain(format!(
                "core size must be 1, 2 or 3, got {r}"
            ))),
        }
    }

    pub fn get(self) -> usize {
        self as usize
    }
}

impl fmt::Display for CoreSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.get())
    }
}

impl Serialize for CoreSize {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u64(self.get() as u64)
    }
}

impl<'de> Deserialize<'de> for CoreSize {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        CoreSize::new(usize::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// `(n, r, Δ)` together with the tail counts `x` (degree 3) and `y`
/// (degree 2) they force. `x` and `y` may be negative for infeasible input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CentralProfile {
    pub n: usize,
    pub r: CoreSize,
    pub delta: usize,
    pub x: i64,
    pub y: i64,
    pub feasible: bool,
}

impl CentralProfile {
    fn is_degenerate_triangle(n: usize, r: CoreSize, delta: usize) -> bool {
        n == 3 && r == CoreSize::Tri && delta == 2
    }
}

/// Erdős–Gallai: even sum and, for every `k`, the `k` largest degrees are
/// bounded by `k(k-1) + Σ_{i>k} min(d_i, k)`.
pub fn erdos_gallai_graphic(d: &DegreeSequence) -> bool {
    let deg = d.degrees();
    if !d.sum().is_multiple_of(2) {
        return false;
    }
    let mut head = 0;
    for k in 1..=deg.len() {
        head += deg[k - 1];
        let tail: usize = deg[k..].iter().map(|&di| di.min(k)).sum();
        if head > k * (k - 1) + tail {
            return false;
        }
    }
    true
}

/// The five conditions characterizing 2-tree degree sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TwoTreeConditions {
    /// Every entry is at least 2 (a 2-tree has no vertex of degree 0 or 1).
    pub min_degree: bool,
    /// Σ d = 4n − 6.
    pub degree_sum: bool,
    /// max d ≤ n − 1.
    pub max_degree: bool,
    /// At least two entries equal 2.
    pub two_twos: bool,
    /// Not of the form (d,d,d,d,2,…,2) with d ≥ 5.
    pub not_excluded_family: bool,
    /// If every entry is even, n₂ ≥ n/3 + 1.
    pub even_twos: bool,
}

impl TwoTreeConditions {
    pub fn all(&self) -> bool {
        self.min_degree
            && self.degree_sum
            && self.max_degree
            && self.two_twos
            && self.not_excluded_family
            && self.even_twos
    }

    /// Roman numerals of the failing conditions.
    pub fn failures(&self) -> Vec<&'static str> {
        [
            (self.min_degree, "min-degree"),
            (self.degree_sum, "i"),
            (self.max_degree, "ii"),
            (self.two_twos, "iii"),
            (self.not_excluded_family, "iv"),
            (self.even_twos, "v"),
        ]
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, name)| name)
        .collect()
    }
}

pub fn two_tree_conditions(d: &DegreeSequence) -> Result<TwoTreeConditions> {
    let n = d.len();
    if n < 3 {
        return Err(Error::domain(format!(
            "2-tree sequence test needs n >= 3, got {n}"
        )));
    }
    let twos = d.count(2);
    let excluded = n >= 4 && {
        let deg = d.degrees();
        let top = deg[0];
        top >= 5 && deg[..4].iter().all(|&x| x == top) && deg[4..].iter().all(|&x| x == 2)
    };
    let all_even = d.degrees().iter().all(|x| x % 2 == 0);
    Ok(TwoTreeConditions {
        min_degree: d.degrees()[n - 1] >= 2,
        degree_sum: d.sum() + 6 == 4 * n,
        max_degree: d.max() < n,
        two_twos: twos >= 2,
        not_excluded_family: !excluded,
        // n₂ ≥ n/3 + 1 as an exact rational inequality
        even_twos: !all_even || 3 * twos >= n + 3,
    })
}

/// True iff `d` is the degree sequence of some 2-tree.
pub fn bose_two_tree_sequence(d: &DegreeSequence) -> Result<bool> {
    Ok(two_tree_conditions(d)?.all())
}

/// Admissible maximum degrees for a strong `r`-central 2-tree on `n`
/// vertices with tail degrees in {2,3}. May be empty.
pub fn delta_range(n: usize, r: CoreSize) -> RangeInclusive<usize> {
    let top = n.saturating_sub(1);
    match r {
        CoreSize::Uni => top..=top,
        CoreSize::Bi => (n + 2).div_ceil(2)..=top,
        CoreSize::Tri if n == 3 => 2..=2,
        CoreSize::Tri => (n + 5).div_ceil(3)..=(2 * n / 3).min(top),
    }
}

/// Tail counts forced by `(n, r, Δ)`:
/// `x = 2n + 2r − 6 − rΔ`, `y = rΔ − n − 3r + 6`.
pub fn tail_params(n: usize, r: CoreSize, delta: usize) -> CentralProfile {
    let (ni, ri, di) = (n as i64, r.get() as i64, delta as i64);
    let x = 2 * ni + 2 * ri - 6 - ri * di;
    let y = ri * di - ni - 3 * ri + 6;
    let feasible = CentralProfile::is_degenerate_triangle(n, r, delta)
        || (delta_range(n, r).contains(&delta)
            && x >= 0
            && y >= 2
            && delta < n
            // tail degrees must stay strictly below Δ so the core has exactly r vertices
            && delta >= 3
            && (x == 0 || delta >= 4));
    CentralProfile {
        n,
        r,
        delta,
        x,
        y,
        feasible,
    }
}

/// `(Δ^r, 3^x, 2^y)` for a feasible profile.
pub fn central_sequence(n: usize, r: CoreSize, delta: usize) -> Result<DegreeSequence> {
    let p = tail_params(n, r, delta);
    if !p.feasible {
        return Err(Error::domain(format!(
            "no strong {r}-central profile with n={n}, delta={delta}"
        )));
    }
    let mut d = vec![delta; r.get()];
    d.extend(std::iter::repeat_n(3, p.x as usize));
    d.extend(std::iter::repeat_n(2, p.y as usize));
    DegreeSequence::new(d)
}

/// Core-size specific arithmetic constraint on the tail counts:
/// `y = 2` for r = 1, `x` even for r = 2, `x + 2y ≡ 0 (mod 3)` for r = 3.
pub fn divisibility_check(profile: &CentralProfile) -> bool {
    match profile.r {
        CoreSize::Uni => profile.y == 2,
        CoreSize::Bi => profile.x.rem_euclid(2) == 0,
        CoreSize::Tri => (profile.x + 2 * profile.y).rem_euclid(3) == 0,
    }
}
