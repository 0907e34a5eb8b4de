//! Undirected simple graphs on the vertex set `{0..n-1}`.
//!
//! Adjacency is stored as one 64-bit row per vertex, so the order is capped
//! at [`MAX_ORDER`]. Every algorithm in this crate targets exhaustive
//! desk-scale computation (orders well below 20); the cap is generous.

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 64;

/// Undirected simple graph: no loops, no parallel edges.
///
/// Vertices are `0..order()`. Neighbor queries are symmetric by
/// construction: the adjacency rows of both endpoints are updated together.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Symmetric duplicates such as
    /// `(u,v)` and `(v,u)` collapse to a single edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub(crate) fn toggle_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] ^= 1 << v;
        self.adj[v] ^= 1 << u;
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, order: self.n });
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.adj[v];
        (0..self.n).filter(move |&u| row & (1 << u) != 0)
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.adj[u] & (1 << v) != 0 {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// `(delta, Delta)`: minimum and maximum degree.
    pub fn degree_stats(&self) -> (usize, usize) {
        let mut lo = usize::MAX;
        let mut hi = 0;
        for v in 0..self.n {
            let d = self.degree(v);
            lo = lo.min(d);
            hi = hi.max(d);
        }
        (lo, hi)
    }

    pub(crate) fn adj_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub(crate) fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub(crate) fn isolated_mask(&self) -> u64 {
        let mut m = 0;
        for v in 0..self.n {
            if self.adj[v] == 0 {
                m |= 1 << v;
            }
        }
        m
    }

    /// Vertices reachable from `start` staying inside `within`.
    pub(crate) fn reach_mask(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut m = frontier;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                next |= self.adj[v] & within;
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen
    }

    /// Connected component masks, in order of their lowest vertex.
    pub(crate) fn component_masks(&self) -> Vec<u64> {
        let mut left = self.full_mask();
        let mut out = Vec::new();
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let c = self.reach_mask(v, left);
            out.push(c);
            left &= !c;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.reach_mask(0, self.full_mask()) == self.full_mask()
    }

    /// Vertices whose removal leaves a disconnected graph.
    pub fn cut_vertices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for v in 0..self.n {
            let within = self.full_mask() & !(1 << v);
            if within == 0 {
                continue;
            }
            let start = within.trailing_zeros() as usize;
            if self.reach_mask(start, within) != within {
                out.push(v);
            }
        }
        out
    }

    /// Subgraph induced by the vertex set `s`, relabelled to `0..|s|-1`.
    /// Returns the graph together with the map `new index -> old vertex`.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<(Graph, Vec<usize>)> {
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut map: Vec<usize> = s.to_vec();
        map.sort_unstable();
        map.dedup();
        for &v in &map {
            self.check_vertex(v)?;
        }
        let mut g = Graph::empty(map.len())?;
        for i in 0..map.len() {
            for j in (i + 1)..map.len() {
                if self.has_edge(map[i], map[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok((g, map))
    }

    pub fn complement(&self) -> Graph {
        let full = self.full_mask();
        let mut g = Graph { n: self.n, adj: vec![0; self.n] };
        for v in 0..self.n {
            g.adj[v] = full & !self.adj[v] & !(1 << v);
        }
        g
    }

    /// Proper 2-coloring masks `(a, b)` with `0` in `a`, colored per
    /// component; `None` when some component has an odd cycle.
    pub(crate) fn bipartition_masks(&self) -> Option<(u64, u64)> {
        let mut color_a = 0u64;
        let mut color_b = 0u64;
        for comp in self.component_masks() {
            let start = comp.trailing_zeros() as usize;
            color_a |= 1 << start;
            let mut frontier = 1u64 << start;
            let mut in_a = true;
            while frontier != 0 {
                let mut next = 0u64;
                let mut m = frontier;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    next |= self.adj[v] & comp;
                }
                let seen = color_a | color_b;
                let fresh = next & !seen;
                if in_a {
                    // frontier was in a; neighbors go to b
                    if next & color_a != 0 {
                        return None;
                    }
                    color_b |= fresh;
                } else {
                    if next & color_b != 0 {
                        return None;
                    }
                    color_a |= fresh;
                }
                frontier = fresh;
                in_a = !in_a;
            }
        }
        Some((color_a, color_b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition_masks().is_some()
    }

    /// The two color classes of a proper 2-coloring, or `None` if the graph
    /// is not bipartite.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        self.bipartition_masks()
            .map(|(a, b)| (mask_to_vec(a), mask_to_vec(b)))
    }

    /// Part sizes when the graph is complete multipartite with at least two
    /// parts (equivalently: its complement is a disjoint union of cliques),
    /// `None` otherwise. The input must be connected.
    pub fn complete_multipartite_parts(&self) -> Result<Option<Vec<usize>>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let comp = self.complement();
        let mut parts = Vec::new();
        for mask in comp.component_masks() {
            let k = mask.count_ones() as usize;
            // each complement component must be a clique
            let mut m = mask;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                if (comp.adj[v] & mask).count_ones() as usize != k - 1 {
                    return Ok(None);
                }
            }
            parts.push(k);
        }
        if parts.len() < 2 {
            return Ok(None);
        }
        parts.sort_unstable();
        Ok(Some(parts))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

pub(crate) fn mask_to_vec(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

pub(crate) fn vec_to_mask(g: &Graph, set: &[usize]) -> Result<u64> {
    let mut mask = 0u64;
    for &v in set {
        g.check_vertex(v)?;
        mask |= 1 << v;
    }
    Ok(mask)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn from_edge_list_builds_p3() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn symmetric_duplicates_collapse() {
        let g = Graph::from_edge_list(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn out_of_range_and_loops_rejected() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, order: 3 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::LoopEdge(1)));
        assert_eq!(Graph::empty(0), Err(Error::EmptyGraph));
    }

    #[test]
    fn neighbor_symmetry() {
        let g = families::cycle(5).unwrap();
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn connectivity_and_cut_vertices() {
        let p4 = families::path(4).unwrap();
        assert!(p4.is_connected());
        assert_eq!(p4.cut_vertices(), vec![1, 2]);
        let c5 = families::cycle(5).unwrap();
        assert!(c5.cut_vertices().is_empty());
        let two = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two.is_connected());
    }

    #[test]
    fn induced_subgraph_cases() {
        let c5 = families::cycle(5).unwrap();
        let (p3, map) = c5.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(p3.size(), 2);
        let k4 = families::complete(4).unwrap();
        let (k3, _) = k4.induced_subgraph(&[1, 2, 3]).unwrap();
        assert_eq!((k3.order(), k3.size()), (3, 3));
        let p4 = families::path(4).unwrap();
        let (iso, _) = p4.induced_subgraph(&[0, 3]).unwrap();
        assert_eq!(iso.size(), 0);
        assert_eq!(p4.induced_subgraph(&[]), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn degree_stats_wheel() {
        // hub of W6 has degree 5, rim vertices degree 3
        let w6 = families::wheel(6).unwrap();
        assert_eq!(w6.degree_stats(), (3, 5));
    }

    #[test]
    fn complete_multipartite_classifier() {
        let k23 = families::complete_multipartite(&[2, 3]).unwrap();
        assert_eq!(k23.complete_multipartite_parts().unwrap(), Some(vec![2, 3]));
        let p4 = families::path(4).unwrap();
        assert_eq!(p4.complete_multipartite_parts().unwrap(), None);
        let k4 = families::complete(4).unwrap();
        assert_eq!(
            k4.complete_multipartite_parts().unwrap(),
            Some(vec![1, 1, 1, 1])
        );
        let single = Graph::empty(1).unwrap();
        assert_eq!(single.complete_multipartite_parts().unwrap(), None);
        let disc = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(disc.complete_multipartite_parts(), Err(Error::Disconnected));
    }

    #[test]
    fn bipartition_classes() {
        let p4 = families::path(4).unwrap();
        let (a, b) = p4.bipartition().unwrap();
        assert_eq!(a, vec![0, 2]);
        assert_eq!(b, vec![1, 3]);
        assert!(!families::cycle(5).unwrap().is_bipartite());
        assert!(families::cycle(6).unwrap().is_bipartite());
    }
}
