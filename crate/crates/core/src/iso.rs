//! Canonical labelling, isomorphism testing, the activated-spine count σ and
//! classification of strong central 2-trees.
//!
//! The canonical form is computed by individualization–refinement: start
//! from the coarsest equitable ordered partition (which refines by degree
//! first), individualize vertices of the first non-singleton cell, and keep
//! the leaf whose refinement trace and then adjacency bit string is
//! lexicographically least. Two kinds of pruning keep the search small on
//! the very symmetric graphs that occur here (books have `2·m!`
//! automorphisms):
//!
//! * vertices of the target cell that are twins of an already explored
//!   vertex are skipped, since swapping twins is an automorphism fixing
//!   everything individualized so far;
//! * automorphisms discovered as pairs of leaves with identical adjacency
//!   are kept, and target-cell vertices in the orbit of an explored vertex
//!   under those that fix the current individualized prefix are skipped.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::degseq::{tail_params, CentralProfile, CoreSize};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Relabelling-invariant certificate. Equal certificates ⇔ isomorphic graphs.
///
/// Encoding: one byte holding `n`, followed by the upper-triangular
/// adjacency matrix of the canonically relabelled graph in row-major order,
/// packed most-significant-bit first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0[0] as usize
    }

    /// The canonically labelled graph this certificate encodes.
    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let mut adj = vec![0u64; n];
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.0[1 + k / 8] >> (7 - k % 8) & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Graph::from_masks(adj)
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

/// Canonical form of `g`.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let lab = canonical_labeling(g);
    let n = g.n();
    let mut bytes = vec![0u8; 1 + (n * (n - 1) / 2).div_ceil(8)];
    bytes[0] = n as u8;
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(lab[i], lab[j]) {
                bytes[1 + k / 8] |= 1 << (7 - k % 8);
            }
            k += 1;
        }
    }
    CanonicalForm(bytes)
}

/// `lab[i]` is the vertex of `g` placed at canonical position `i`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut search = Search {
        g,
        best: None,
        autos: Vec::new(),
        trace: Vec::with_capacity(n),
    };
    let all = if n == 64 { !0 } else { (1u64 << n) - 1 };
    search.visit(vec![all], &mut Vec::with_capacity(n));
    search.best.expect("search always reaches a leaf").lab
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return false;
    }
    canonical_form(g) == canonical_form(h)
}

struct Leaf {
    trace: Vec<Vec<u8>>,
    /// Canonical adjacency rows; position `j` is stored at bit `63 - j` so
    /// integer order on rows is lexicographic order on bit strings.
    rows: Vec<u64>,
    lab: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
    trace: Vec<Vec<u8>>,
}

impl Search<'_> {
    fn visit(&mut self, mut cells: Vec<u64>, fixed: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        self.trace
            .push(cells.iter().map(|c| c.count_ones() as u8).collect());
        if let Some(best) = &self.best {
            if self.trace[..] > best.trace[..self.trace.len().min(best.trace.len())] {
                self.trace.pop();
                return;
            }
        }
        match cells.iter().position(|c| c.count_ones() > 1) {
            None => self.leaf(&cells),
            Some(t) => {
                let target = cells[t];
                let mut explored: Vec<usize> = Vec::new();
                for v in bits(target) {
                    if explored.iter().any(|&u| self.twins(u, v))
                        || self.same_orbit(fixed, &explored, v)
                    {
                        continue;
                    }
                    let mut child = Vec::with_capacity(cells.len() + 1);
                    child.extend_from_slice(&cells[..t]);
                    child.push(1 << v);
                    child.push(target & !(1 << v));
                    child.extend_from_slice(&cells[t + 1..]);
                    fixed.push(v);
                    self.visit(child, fixed);
                    fixed.pop();
                    explored.push(v);
                }
            }
        }
        self.trace.pop();
    }

    fn leaf(&mut self, cells: &[u64]) {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = vec![0usize; self.g.n()];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let rows: Vec<u64> = lab
            .iter()
            .map(|&v| bits(self.g.neighbor_mask(v)).fold(0, |m, w| m | 1 << (63 - pos[w])))
            .collect();
        let ord = match &self.best {
            None => Ordering::Less,
            Some(best) => self
                .trace
                .cmp(&best.trace)
                .then_with(|| rows.cmp(&best.rows)),
        };
        match ord {
            Ordering::Less => {
                self.best = Some(Leaf {
                    trace: self.trace.clone(),
                    rows,
                    lab,
                })
            }
            Ordering::Equal => {
                // same relabelled graph: best.lab[i] ↦ lab[i] is an automorphism
                let best = self.best.as_ref().unwrap();
                let mut perm = vec![0usize; self.g.n()];
                for (i, &v) in best.lab.iter().enumerate() {
                    perm[v] = lab[i];
                }
                if perm.iter().enumerate().any(|(i, &p)| i != p) {
                    self.autos.push(perm);
                }
            }
            Ordering::Greater => {}
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        let (nu, nv) = (self.g.neighbor_mask(u), self.g.neighbor_mask(v));
        nu & !(1 << v) == nv & !(1 << u)
    }

    /// Is `v` in the orbit of an explored vertex under the automorphisms
    /// found so far that fix every vertex of `fixed`?
    fn same_orbit(&self, fixed: &[usize], explored: &[usize], v: usize) -> bool {
        if explored.is_empty() || self.autos.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.g.n()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for perm in self
            .autos
            .iter()
            .filter(|p| fixed.iter().all(|&f| p[f] == f))
        {
            any = true;
            for (i, &j) in perm.iter().enumerate() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == root)
    }
}

/// Refines the ordered partition until every cell is equitable: vertices in
/// a cell have the same number of neighbours in every cell. Cells split into
/// pieces ordered by their neighbour-count vectors.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    loop {
        let mut next = Vec::with_capacity(g.n());
        let mut split = false;
        for &cell in cells.iter() {
            if cell & (cell - 1) == 0 {
                next.push(cell);
                continue;
            }
            let mut sigs: Vec<(Vec<u8>, usize)> = bits(cell)
                .map(|v| {
                    let nb = g.neighbor_mask(v);
                    (
                        cells.iter().map(|&c| (nb & c).count_ones() as u8).collect(),
                        v,
                    )
                })
                .collect();
            sigs.sort_unstable();
            let mut mask = 0u64;
            for i in 0..sigs.len() {
                mask |= 1 << sigs[i].1;
                if i + 1 == sigs.len() || sigs[i + 1].0 != sigs[i].0 {
                    next.push(mask);
                    mask = 0;
                }
            }
            split |= !next.is_empty() && next.last() != Some(&cell);
        }
        if !split {
            return;
        }
        *cells = next;
    }
}

/// Number of degree-3 vertices adjacent to both core vertices of a strong
/// bicentral graph.
pub fn sigma(g: &Graph) -> Result<usize> {
    let delta = g.max_degree();
    let core: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == delta).collect();
    let [a, b] = core[..] else {
        return Err(Error::domain(format!(
            "sigma needs exactly two vertices of maximum degree, found {}",
            core.len()
        )));
    };
    if !g.has_edge(a, b) {
        return Err(Error::domain("sigma needs adjacent core vertices"));
    }
    Ok(spine_vertices(g, a, b)
        .filter(|&s| g.degree(s) == 3)
        .count())
}

/// `N(a) ∩ N(b)` minus `{a, b}`.
fn spine_vertices(g: &Graph, a: usize, b: usize) -> impl Iterator<Item = usize> {
    bits(g.neighbor_mask(a) & g.neighbor_mask(b) & !(1 << a | 1 << b))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralClassification {
    pub n: usize,
    pub r: CoreSize,
    pub delta: usize,
    pub core: Vec<usize>,
    pub x: usize,
    pub y: usize,
    pub strong: bool,
    /// Defined only for strong bicentral graphs.
    pub sigma: Option<usize>,
}

impl CentralClassification {
    pub fn profile(&self) -> CentralProfile {
        tail_params(self.n, self.r, self.delta)
    }

    /// Common neighbours of the two core vertices (strong bicentral only).
    pub fn spine(&self, g: &Graph) -> Option<Vec<usize>> {
        match (self.r, self.strong, &self.core[..]) {
            (CoreSize::Bi, true, &[a, b]) => Some(spine_vertices(g, a, b).collect()),
            _ => None,
        }
    }

    /// `r=2 Δ=6 x=4 y=3 σ=2`.
    pub fn summary(&self) -> String {
        let mut s = format!("r={} Δ={} x={} y={}", self.r, self.delta, self.x, self.y);
        if let Some(sig) = self.sigma {
            s.push_str(&format!(" σ={sig}"));
        }
        if !self.strong {
            s.push_str(" (weak)");
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Unclassifiable {
    #[error("not a 2-tree on at least 3 vertices")]
    NotTwoTree,
    #[error("{0} vertices attain the maximum degree (r > 3)")]
    CoreTooLarge(usize),
    #[error("tail vertex {vertex} has degree {degree}, not 2 or 3")]
    TailDegree { vertex: usize, degree: usize },
}

/// Classifies `g` as an `r`-central 2-tree with tail degrees in {2,3}.
/// Non-strong bi- and tricentral graphs are reported with `strong = false`.
pub fn classify_central(g: &Graph) -> Result<CentralClassification, Unclassifiable> {
    if g.n() < 3 || !g.is_two_tree() {
        return Err(Unclassifiable::NotTwoTree);
    }
    let delta = g.max_degree();
    let core: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == delta).collect();
    let r = match CoreSize::new(core.len()) {
        Ok(r) => r,
        Err(_) => return Err(Unclassifiable::CoreTooLarge(core.len())),
    };
    let (mut x, mut y) = (0, 0);
    for v in (0..g.n()).filter(|v| !core.contains(v)) {
        match g.degree(v) {
            2 => y += 1,
            3 => x += 1,
            degree => return Err(Unclassifiable::TailDegree { vertex: v, degree }),
        }
    }
    let strong = core
        .iter()
        .enumerate()
        .all(|(i, &a)| core[i + 1..].iter().all(|&b| g.has_edge(a, b)));
    let sigma = match (r, strong, &core[..]) {
        (CoreSize::Bi, true, &[a, b]) => Some(
            spine_vertices(g, a, b)
                .filter(|&s| g.degree(s) == 3)
                .count(),
        ),
        _ => None,
    };
    Ok(CentralClassification {
        n: g.n(),
        r,
        delta,
        core,
        x,
        y,
        strong,
        sigma,
    })
}
