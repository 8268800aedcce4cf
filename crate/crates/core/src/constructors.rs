//! Explicit families of strong central 2-trees, each built by a stacking
//! program.
//!
//! Vertex numbering is fixed: core vertices first, then pages (in the core
//! edge order ab, bc, ca), then chain vertices in attachment order. A chain
//! of length `L` from core vertex `c` rooted at edge `c–v` stacks its first
//! vertex on `c–v` and each later vertex on `c` and its predecessor.

use crate::degseq::{delta_range, tail_params, CentralProfile, CoreSize};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// A constructed graph and the profile it is meant to realize.
#[derive(Debug, Clone)]
pub struct Construction {
    pub graph: Graph,
    pub profile: CentralProfile,
}

fn done(b: GraphBuilder, r: CoreSize, delta: usize) -> Construction {
    let graph = b.build();
    let profile = tail_params(graph.n(), r, delta);
    Construction { graph, profile }
}

/// Fan Φₙ: hub 0 joined to the path 1–2–…–(n−1).
///
/// Φ₃ is K₃ (tricentral) and Φ₄ coincides with the book B₂ (bicentral);
/// from n = 5 on the fan is strong unicentral.
pub fn fan(n: usize) -> Result<Construction> {
    if n < 3 {
        return Err(Error::domain(format!("fan needs n >= 3, got {n}")));
    }
    let mut b = GraphBuilder::triangle();
    b.chain(0, 2, n - 3)?;
    Ok(match n {
        3 => done(b, CoreSize::Tri, 2),
        4 => done(b, CoreSize::Bi, 3),
        _ => done(b, CoreSize::Uni, n - 1),
    })
}

/// Triangular book B_m: spine 0–1 with pages 2..m+2.
pub fn book(pages: usize) -> Result<Construction> {
    if pages < 1 {
        return Err(Error::domain("book needs at least one page"));
    }
    let mut b = GraphBuilder::edge();
    for _ in 0..pages {
        b.stack(0, 1)?;
    }
    Ok(match pages {
        1 => done(b, CoreSize::Tri, 2),
        _ => done(b, CoreSize::Bi, pages + 1),
    })
}

/// Strong bicentral 2-tree with maximum degree `delta` and σ = 2 (when
/// `delta < n − 1`): a book on `y = 2Δ − n` pages over the spine 0–1 with a
/// chain of `K = n − Δ − 1` vertices grown from each core vertex, rooted at
/// the first and second page respectively.
pub fn bicentral_standard(n: usize, delta: usize) -> Result<Construction> {
    if n < 4 || !delta_range(n, CoreSize::Bi).contains(&delta) {
        return Err(Error::domain(format!(
            "no strong bicentral 2-tree with n={n}, delta={delta}"
        )));
    }
    let pages = 2 * delta - n;
    let k = n - delta - 1;
    let mut b = GraphBuilder::edge();
    for _ in 0..pages {
        b.stack(0, 1)?;
    }
    b.chain(0, 2, k)?;
    b.chain(1, 3, k)?;
    Ok(done(b, CoreSize::Bi, delta))
}

/// Strong bicentral 2-tree with Δ = n − 1 − K and σ = 3: on a book with
/// `n − 2 − 2K` pages, chains of lengths 1 and K − 1 grow from core vertex 0
/// at pages 2 and 3, and a chain of length K from core vertex 1 at page 4.
pub fn bicentral_sigma3(n: usize, k: usize) -> Result<Construction> {
    if n < 7 || k < 2 || k > (n - 5) / 2 {
        return Err(Error::domain(format!(
            "sigma-3 construction needs n >= 7 and 2 <= K <= (n-5)/2, got n={n}, K={k}"
        )));
    }
    let pages = n - 2 - 2 * k;
    let mut b = GraphBuilder::edge();
    for _ in 0..pages {
        b.stack(0, 1)?;
    }
    b.chain(0, 2, 1)?;
    b.chain(0, 3, k - 1)?;
    b.chain(1, 4, k)?;
    Ok(done(b, CoreSize::Bi, n - 1 - k))
}

/// Strong tricentral 2-tree with all tail degrees 2 and Δ = 2n/3: core
/// triangle 0,1,2 with n/3 − 1 pages stacked on each core edge.
pub fn tricentral_extremal(n: usize) -> Result<Construction> {
    if n < 3 || !n.is_multiple_of(3) {
        return Err(Error::domain(format!(
            "tricentral extremal graph needs 3 | n, got n={n}"
        )));
    }
    let m = n / 3;
    let mut b = GraphBuilder::triangle();
    for (u, v) in [(0, 1), (1, 2), (2, 0)] {
        for _ in 1..m {
            b.stack(u, v)?;
        }
    }
    Ok(done(b, CoreSize::Tri, 2 * m))
}

/// The chain-decorated tricentral graph G(p, q) on `9 + 3K` vertices.
///
/// Core triangle a=0, b=1, c=2 carries two pages per core edge:
/// `ab_a=3, ab_b=4, bc_b=5, bc_c=6, ca_c=7, ca_a=8`. Chains of lengths
/// p and K−p grow from a at `ab_a` and `ca_a`, q and K−q from b at `bc_b`
/// and `ab_b`, and K from c at `ca_c`; `bc_c` stays bare.
///
/// Accepts K ≥ 4 and 1 ≤ p < q ≤ ⌊K/2⌋.
pub fn tricentral_gpq(k: usize, p: usize, q: usize) -> Result<Construction> {
    if k < 4 || p < 1 || p >= q || q > k / 2 {
        return Err(Error::domain(format!(
            "G(p,q) needs K >= 4 and 1 <= p < q <= K/2, got K={k}, p={p}, q={q}"
        )));
    }
    let (a, bb, c) = (0, 1, 2);
    let mut b = GraphBuilder::triangle();
    let ab_a = b.stack(a, bb)?;
    let ab_b = b.stack(a, bb)?;
    let bc_b = b.stack(bb, c)?;
    let _bc_c = b.stack(bb, c)?;
    let ca_c = b.stack(c, a)?;
    let ca_a = b.stack(c, a)?;
    b.chain(a, ab_a, p)?;
    b.chain(a, ca_a, k - p)?;
    b.chain(bb, bc_b, q)?;
    b.chain(bb, ab_b, k - q)?;
    b.chain(c, ca_c, k)?;
    Ok(done(b, CoreSize::Tri, 6 + k))
}

/// All admissible `(p, q)` for a given K, in lexicographic order.
pub fn gpq_parameters(k: usize) -> Vec<(usize, usize)> {
    let m = k / 2;
    (1..=m)
        .flat_map(|p| (p + 1..=m).map(move |q| (p, q)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degs(c: &Construction) -> Vec<usize> {
        c.graph.degree_sequence().degrees().to_vec()
    }

    fn twos(k: usize) -> impl Iterator<Item = usize> {
        std::iter::repeat_n(2, k)
    }

    #[test]
    fn fans() {
        assert_eq!(degs(&fan(4).unwrap()), vec![3, 3, 2, 2]);
        assert_eq!(degs(&fan(6).unwrap()), vec![5, 3, 3, 3, 2, 2]);
        assert_eq!(fan(3).unwrap().graph, Graph::new_triangle());
        assert_eq!(fan(3).unwrap().profile.r, CoreSize::Tri);
        assert!(fan(2).is_err());
        let f = fan(6).unwrap().graph;
        assert_eq!(f.neighbors(0).collect::<Vec<_>>(), vec![1, 2, 3, 4, 5]);
        assert!((1..5).all(|i| f.has_edge(i, i + 1)));
    }

    #[test]
    fn books() {
        assert_eq!(degs(&book(4).unwrap()), vec![5, 5, 2, 2, 2, 2]);
        assert_eq!(book(1).unwrap().graph, Graph::new_triangle());
        let b10 = book(10).unwrap();
        assert_eq!(b10.graph.n(), 12);
        let mut want = vec![11, 11];
        want.extend(twos(10));
        assert_eq!(degs(&b10), want);
        assert!(book(0).is_err());
    }

    #[test]
    fn bicentral_standard_examples() {
        assert_eq!(
            degs(&bicentral_standard(7, 5).unwrap()),
            vec![5, 5, 3, 3, 2, 2, 2]
        );
        assert_eq!(
            bicentral_standard(6, 5).unwrap().graph,
            book(4).unwrap().graph
        );
        let c = bicentral_standard(9, 6).unwrap();
        assert_eq!((c.profile.x, c.profile.y, c.profile.feasible), (4, 3, true));
        assert!(bicentral_standard(9, 5).is_err());
        assert!(bicentral_standard(9, 9).is_err());
    }

    #[test]
    fn sigma3_bounds() {
        let c = bicentral_sigma3(9, 2).unwrap();
        assert_eq!(c.profile.delta, 6);
        assert_eq!(degs(&c), vec![6, 6, 3, 3, 3, 3, 2, 2, 2]);
        assert_eq!(bicentral_sigma3(10, 2).unwrap().profile.delta, 7);
        assert!(bicentral_sigma3(7, 1).is_err());
        assert!(bicentral_sigma3(7, 2).is_err());
        assert!(bicentral_sigma3(9, 3).is_err());
        assert!(bicentral_sigma3(11, 3).is_ok());
    }

    #[test]
    fn tricentral_extremal_examples() {
        assert_eq!(tricentral_extremal(3).unwrap().graph, Graph::new_triangle());
        let mut want = vec![6, 6, 6];
        want.extend(twos(6));
        assert_eq!(degs(&tricentral_extremal(9).unwrap()), want);
        let mut want = vec![8, 8, 8];
        want.extend(twos(9));
        assert_eq!(degs(&tricentral_extremal(12).unwrap()), want);
        assert!(tricentral_extremal(10).is_err());
    }

    #[test]
    fn gpq_examples() {
        let c = tricentral_gpq(5, 1, 2).unwrap();
        assert_eq!(c.graph.n(), 24);
        assert_eq!(c.graph.max_degree(), 11);
        assert_eq!(
            (0..3).map(|v| c.graph.degree(v)).collect::<Vec<_>>(),
            vec![11, 11, 11]
        );
        assert!(tricentral_gpq(7, 2, 2).is_err());
        assert!(tricentral_gpq(7, 1, 4).is_err());
        assert!(tricentral_gpq(3, 1, 2).is_err());
        assert!(tricentral_gpq(4, 1, 2).is_ok());
        assert_eq!(gpq_parameters(7), vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(gpq_parameters(4), vec![(1, 2)]);
    }
}
