//! Undirected simple graphs on at most [`MAX_VERTICES`] vertices, stacking
//! construction and 2-tree recognition.
//!
//! Adjacency is kept as one `u64` bitset per vertex, so a [`Graph`] is a
//! small immutable value that is cheap to clone and safe to share across
//! threads. Every operation that "changes" a graph returns a new one.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};

/// Hard cap on the vertex count (one `u64` adjacency word per vertex).
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// `K₂`, the degenerate stacking base.
    pub fn new_edge() -> Self {
        Graph {
            adj: vec![0b10, 0b01],
        }
    }

    /// `K₃`.
    pub fn new_triangle() -> Self {
        Graph {
            adj: vec![0b110, 0b101, 0b011],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged; loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::Malformed(
                "graph must have at least one vertex".into(),
            ));
        }
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                what: "vertex count",
                n,
                cap: MAX_VERTICES,
            });
        }
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { adj })
    }

    pub(crate) fn from_masks(adj: Vec<u64>) -> Self {
        debug_assert!(!adj.is_empty() && adj.len() <= MAX_VERTICES);
        Graph { adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Neighbourhood of `v` as a bitset.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u] >> v & 1 == 1
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| bits(self.adj[u] >> u >> 1).map(move |k| (u, u + 1 + k)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.degrees()).expect("a graph has at least one vertex")
    }

    /// Stacks a new vertex on the edge `uv`. The new vertex gets index `n`.
    pub fn stack(&self, u: usize, v: usize) -> Result<(Graph, usize)> {
        let mut b = GraphBuilder::from_graph(self.clone());
        let w = b.stack(u, v)?;
        Ok((b.build(), w))
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    ///
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n(), "permutation length mismatch");
        let mut adj = vec![0u64; self.n()];
        let mut seen = 0u64;
        for (v, &pv) in perm.iter().enumerate() {
            assert!(pv < self.n() && seen >> pv & 1 == 0, "not a permutation");
            seen |= 1 << pv;
            adj[pv] = bits(self.adj[v]).fold(0, |m, w| m | 1 << perm[w]);
        }
        Graph { adj }
    }

    /// True iff the graph is a 2-tree. `K₂` is accepted as the degenerate base.
    pub fn is_two_tree(&self) -> bool {
        self.two_tree_trace().is_some()
    }

    /// Recognizes a 2-tree by peeling simplicial degree-2 vertices, always
    /// removing the lowest-indexed eligible one, and returns the reversed
    /// peeling order as a stacking witness.
    pub fn two_tree_trace(&self) -> Option<StackingTrace> {
        let n = self.n();
        if n < 2 || self.edge_count() != 2 * n - 3 {
            return None;
        }
        if n == 2 {
            return Some(StackingTrace {
                base: Base::Edge([0, 1]),
                steps: Vec::new(),
            });
        }
        let mut adj = self.adj.clone();
        let mut alive: u64 = if n == 64 { !0 } else { (1 << n) - 1 };
        let mut steps = Vec::with_capacity(n - 3);
        for _ in 3..n {
            let w = bits(alive).find(|&w| {
                adj[w].count_ones() == 2 && {
                    let mut nb = bits(adj[w]);
                    let (u, v) = (nb.next().unwrap(), nb.next().unwrap());
                    adj[u] >> v & 1 == 1
                }
            })?;
            let mut nb = bits(adj[w]);
            let (u, v) = (nb.next().unwrap(), nb.next().unwrap());
            adj[u] &= !(1 << w);
            adj[v] &= !(1 << w);
            adj[w] = 0;
            alive &= !(1 << w);
            steps.push(Stacking { u, v, w });
        }
        let rest: Vec<usize> = bits(alive).collect();
        let [a, b, c] = rest[..] else { return None };
        if !(adj[a] >> b & 1 == 1 && adj[b] >> c & 1 == 1 && adj[a] >> c & 1 == 1) {
            return None;
        }
        steps.reverse();
        Some(StackingTrace {
            base: Base::Triangle([a, b, c]),
            steps,
        })
    }

    /// Compact JSON `{"n":..,"edges":[[u,v],..]}` with `u < v`, edges sorted.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Graph> {
        serde_json::from_str(s).map_err(|e| Error::Malformed(e.to_string()))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.n(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(d)?;
        Graph::from_edges(repr.n, repr.edges.into_iter().map(|[u, v]| (u, v)))
            .map_err(serde::de::Error::custom)
    }
}

/// Iterates the set bit positions of `mask` in increasing order.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Single-owner growable graph used by the constructors.
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    adj: Vec<u64>,
}

impl GraphBuilder {
    pub fn edge() -> Self {
        Self::from_graph(Graph::new_edge())
    }

    pub fn triangle() -> Self {
        Self::from_graph(Graph::new_triangle())
    }

    pub fn from_graph(g: Graph) -> Self {
        GraphBuilder { adj: g.adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Adds a vertex adjacent to exactly `u` and `v`; returns its index.
    pub fn stack(&mut self, u: usize, v: usize) -> Result<usize> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if self.adj[u] >> v & 1 == 0 {
            return Err(Error::NotAnEdge { u, v });
        }
        if n == MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                what: "vertex count",
                n: n + 1,
                cap: MAX_VERTICES,
            });
        }
        self.adj.push(1 << u | 1 << v);
        self.adj[u] |= 1 << n;
        self.adj[v] |= 1 << n;
        Ok(n)
    }

    /// Grows a chain of `len` vertices hanging off `core`: the first vertex
    /// is stacked on `core`–`root`, each later one on `core` and the previous
    /// chain vertex. Returns the chain in attachment order.
    pub fn chain(&mut self, core: usize, root: usize, len: usize) -> Result<Vec<usize>> {
        let mut prev = root;
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            prev = self.stack(core, prev)?;
            out.push(prev);
        }
        Ok(out)
    }

    pub fn build(self) -> Graph {
        Graph { adj: self.adj }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Base {
    Edge([usize; 2]),
    Triangle([usize; 3]),
}

impl Base {
    pub fn vertices(&self) -> &[usize] {
        match self {
            Base::Edge(v) => v,
            Base::Triangle(v) => v,
        }
    }
}

/// `w` was stacked on the existing edge `uv`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stacking {
    pub u: usize,
    pub v: usize,
    pub w: usize,
}

/// Construction witness for a 2-tree, in the vertex labels of the graph it
/// was extracted from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StackingTrace {
    pub base: Base,
    pub steps: Vec<Stacking>,
}

impl StackingTrace {
    pub fn vertex_count(&self) -> usize {
        self.base.vertices().len() + self.steps.len()
    }

    /// Rebuilds the graph, numbering vertices in insertion order (base
    /// vertices first). Fails if a step stacks on a non-edge or reuses a
    /// label.
    pub fn replay(&self) -> Result<Graph> {
        let mut label = std::collections::HashMap::new();
        for (i, &v) in self.base.vertices().iter().enumerate() {
            if label.insert(v, i).is_some() {
                return Err(Error::Malformed(format!("base vertex {v} repeated")));
            }
        }
        let mut b = match self.base {
            Base::Edge(_) => GraphBuilder::edge(),
            Base::Triangle(_) => GraphBuilder::triangle(),
        };
        for s in &self.steps {
            let lookup = |x: usize| {
                label
                    .get(&x)
                    .copied()
                    .ok_or_else(|| Error::Malformed(format!("vertex {x} used before insertion")))
            };
            let w = b.stack(lookup(s.u)?, lookup(s.v)?)?;
            if label.insert(s.w, w).is_some() {
                return Err(Error::Malformed(format!("vertex {} inserted twice", s.w)));
            }
        }
        Ok(b.build())
    }
}
