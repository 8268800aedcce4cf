//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the canonical-form or recognition code it is used to check.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use twotrees::Graph;

/// Every simple graph on `n` vertices (2^(n choose 2) of them).
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        Graph::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        )
        .unwrap()
    })
}

/// Graphs on `n` vertices with exactly `m` edges.
pub fn graphs_with_edges(n: usize, m: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(m);
    fn rec(
        pairs: &[(usize, usize)],
        start: usize,
        m: usize,
        n: usize,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<Graph>,
    ) {
        if chosen.len() == m {
            out.push(Graph::from_edges(n, chosen.iter().copied()).unwrap());
            return;
        }
        for i in start..pairs.len() {
            if pairs.len() - i < m - chosen.len() {
                break;
            }
            chosen.push(pairs[i]);
            rec(pairs, i + 1, m, n, chosen, out);
            chosen.pop();
        }
    }
    rec(&pairs, 0, m, n, &mut chosen, &mut out);
    out
}

pub fn connected(g: &Graph) -> bool {
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Chordality by repeatedly deleting any simplicial vertex (of any degree).
pub fn chordal(g: &Graph) -> bool {
    let mut alive: Vec<usize> = (0..g.n()).collect();
    while !alive.is_empty() {
        let simplicial = alive.iter().position(|&v| {
            let nb: Vec<usize> = alive
                .iter()
                .copied()
                .filter(|&w| g.has_edge(v, w))
                .collect();
            nb.iter()
                .enumerate()
                .all(|(i, &a)| nb[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        });
        match simplicial {
            Some(i) => {
                alive.remove(i);
            }
            None => return false,
        }
    }
    true
}

pub fn has_k4(g: &Graph) -> bool {
    let n = g.n();
    (0..n).any(|a| {
        (a + 1..n).any(|b| {
            g.has_edge(a, b)
                && (b + 1..n).any(|c| {
                    g.has_edge(a, c)
                        && g.has_edge(b, c)
                        && (c + 1..n)
                            .any(|d| g.has_edge(a, d) && g.has_edge(b, d) && g.has_edge(c, d))
                })
        })
    })
}

/// 2-tree oracle: connected chordal graph without K₄ and with `2n − 3`
/// edges (K₂ included). Without the K₄ condition, K₄ plus a pendant vertex
/// would pass.
pub fn two_tree_oracle(g: &Graph) -> bool {
    let n = g.n();
    n >= 2 && g.edge_count() == 2 * n - 3 && connected(g) && chordal(g) && !has_k4(g)
}

/// Isomorphism by backtracking over degree-preserving bijections.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let n = g.n();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(g: &Graph, h: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if v == g.n() {
            return true;
        }
        for t in 0..g.n() {
            if used[t] || g.degree(v) != h.degree(t) {
                continue;
            }
            if (0..v).any(|u| g.has_edge(u, v) != h.has_edge(map[u], t)) {
                continue;
            }
            map[v] = t;
            used[t] = true;
            if rec(g, h, v + 1, map, used) {
                return true;
            }
            used[t] = false;
        }
        false
    }
    rec(g, h, 0, &mut map, &mut used)
}

/// Isomorphism by trying every permutation of the vertex set.
pub fn permutation_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if g.edges().all(|(u, v)| h.has_edge(perm[u], perm[v])) {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Random 2-tree grown from a triangle by stacking on uniformly chosen edges.
pub fn random_two_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut g = Graph::new_triangle();
    while g.n() < n {
        let edges: Vec<_> = g.edges().collect();
        let (u, v) = edges[rng.gen_range(0..edges.len())];
        g = g.stack(u, v).unwrap().0;
    }
    g
}

/// All nonincreasing sequences of length `n` with entries in `lo..=hi`.
pub fn nonincreasing_sequences(n: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, lo: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for d in (lo..=cap).rev() {
            cur.push(d);
            rec(n, lo, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, lo, hi, &mut Vec::new(), &mut out);
    out
}
