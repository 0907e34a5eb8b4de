//! Exhaustive enumeration of small graphs, one representative per
//! isomorphism class.
//!
//! The canonical form of a graph is the lexicographically minimal
//! upper-triangle adjacency bit-string (graph6 column order) over all
//! vertex permutations. Exhaustive permutation is viable because general
//! enumeration is capped at order 7; trees go further via their classic
//! linear-time rooted canonical encoding.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order for which permutation-based canonical forms are offered.
pub const CANONICAL_MAX: usize = 8;

/// Largest order supported by [`enumerate_connected`].
pub const ENUMERATE_MAX: usize = 7;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap_permute(&mut cur, n, &mut out);
    out
}

fn heap_permute(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k {
        heap_permute(cur, k - 1, out);
        if k % 2 == 0 {
            cur.swap(i, k - 1);
        } else {
            cur.swap(0, k - 1);
        }
    }
}

/// Upper-triangle bits of `g` relabelled by `perm`, packed so that integer
/// order equals lexicographic order of the bit-string.
fn adjacency_key(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.order();
    let mut key = 0u64;
    for j in 1..n {
        for i in 0..j {
            key = (key << 1) | g.has_edge(perm[i], perm[j]) as u64;
        }
    }
    key
}

fn graph_from_key(n: usize, key: u64) -> Graph {
    let t = n * (n - 1) / 2;
    let mut edges = Vec::new();
    let mut bit = t;
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if key & (1 << bit) != 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

fn canonical_key_with(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    perms.iter().map(|p| adjacency_key(g, p)).min().unwrap()
}

/// Canonical relabelling of `g` (order at most [`CANONICAL_MAX`]).
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let n = g.order();
    if n > CANONICAL_MAX {
        return Err(Error::UnsupportedOrder { n, min: 1, max: CANONICAL_MAX });
    }
    let perms = permutations(n);
    Ok(graph_from_key(n, canonical_key_with(g, &perms)))
}

/// One representative per isomorphism class of connected graphs of order
/// `n`, for `1 <= n <= 7`, sorted by canonical key.
///
/// Representatives of order `m` are grown from representatives of order
/// `m - 1` by attaching a new vertex to every nonempty neighbor subset;
/// every connected graph has a non-cut vertex, so nothing is missed.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > ENUMERATE_MAX {
        return Err(Error::UnsupportedOrder { n, min: 1, max: ENUMERATE_MAX });
    }
    let mut level: Vec<u64> = vec![0]; // K1 key
    for m in 2..=n {
        let perms = permutations(m);
        let mut next: HashSet<u64> = HashSet::new();
        for &key in &level {
            let smaller = graph_from_key(m - 1, key);
            let mut grown = Graph::empty(m)?;
            for (u, v) in smaller.edges() {
                grown.add_edge(u, v);
            }
            for subset in 1u64..(1 << (m - 1)) {
                let mut candidate = grown.clone();
                let mut bits = subset;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    candidate.add_edge(v, m - 1);
                }
                next.insert(canonical_key_with(&candidate, &perms));
            }
        }
        let mut sorted: Vec<u64> = next.into_iter().collect();
        sorted.sort_unstable();
        level = sorted;
    }
    Ok(level.into_iter().map(|k| graph_from_key(n, k)).collect())
}

/// Rooted canonical encoding of a tree, minimized over its one or two
/// centers; equal strings exactly characterize isomorphic trees.
fn tree_signature(g: &Graph) -> String {
    let n = g.order();
    if n == 1 {
        return "()".into();
    }
    // find centers by repeated leaf stripping
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut alive = n;
    while alive > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            alive -= 1;
            for u in g.neighbors(v) {
                if !removed[u] {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    let centers: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    centers
        .iter()
        .map(|&c| rooted_signature(g, c, usize::MAX))
        .min()
        .unwrap()
}

fn rooted_signature(g: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .filter(|&u| u != parent)
        .map(|u| rooted_signature(g, u, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// One representative per isomorphism class of trees of order `n`, grown by
/// leaf attachment and deduplicated by rooted canonical encoding.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut level = vec![Graph::empty(1)?];
    for m in 2..=n {
        let mut seen: HashSet<String> = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..t.order() {
                let mut grown = Graph::empty(m)?;
                for (a, b) in t.edges() {
                    grown.add_edge(a, b);
                }
                grown.add_edge(v, m - 1);
                if seen.insert(tree_signature(&grown)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// Visits every connected bipartite labeled graph of order `n` exactly once.
///
/// A connected bipartite graph has a unique bipartition, so iterating
/// unordered splits (vertex 0 pinned to the first side) and keeping only
/// connected results produces no duplicates. No isomorphism dedup is
/// attempted; at order 8 this sweeps a few million graphs.
pub fn visit_connected_bipartite<F: FnMut(&Graph)>(n: usize, mut f: F) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n == 1 {
        f(&Graph::empty(1)?);
        return Ok(());
    }
    if n > 10 {
        return Err(Error::UnsupportedOrder { n, min: 1, max: 10 });
    }
    for split in 0u32..(1 << (n - 1)) {
        // vertex 0 always on side A; side B = vertices with their bit set
        let side_b: Vec<usize> = (1..n).filter(|&v| split & (1 << (v - 1)) != 0).collect();
        if side_b.is_empty() {
            continue;
        }
        let side_a: Vec<usize> = (0..n).filter(|&v| v == 0 || split & (1 << (v - 1)) == 0).collect();
        let pairs: Vec<(usize, usize)> = side_a
            .iter()
            .flat_map(|&a| side_b.iter().map(move |&b| (a, b)))
            .collect();
        let m = pairs.len();
        // Gray-code walk over edge subsets: one edge toggles per step
        let mut g = Graph::empty(n)?;
        let mut prev_gray = 0u64;
        for idx in 0u64..(1 << m) {
            let gray = idx ^ (idx >> 1);
            let diff = gray ^ prev_gray;
            if diff != 0 {
                let bit = diff.trailing_zeros() as usize;
                let (u, v) = pairs[bit];
                g.toggle_edge(u, v);
            }
            prev_gray = gray;
            if g.is_connected() {
                f(&g);
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn canonical_form_is_isomorphism_invariant() {
        let g = Graph::from_edge_list(4, &[(0, 2), (2, 1), (1, 3)]).unwrap();
        let h = families::path(4).unwrap();
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn connected_counts_match_known_sequence() {
        // 1, 1, 2, 6, 21, 112 connected graphs on 1..=6 vertices
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_connected(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        assert!(enumerate_connected(8).is_err());
        assert!(enumerate_connected(0).is_err());
    }

    #[test]
    fn order_four_brute_force_oracle() {
        // independent check: every labeled connected graph of order 4 maps
        // to a canonical representative, and the classes number 6
        let n = 4;
        let perms = permutations(n);
        let reps = enumerate_connected(n).unwrap();
        let rep_keys: HashSet<u64> =
            reps.iter().map(|g| canonical_key_with(g, &perms)).collect();
        let mut found = HashSet::new();
        let t = n * (n - 1) / 2;
        for key in 0u64..(1 << t) {
            let g = graph_from_key(n, key);
            if g.is_connected() {
                let ck = canonical_key_with(&g, &perms);
                assert!(rep_keys.contains(&ck));
                found.insert(ck);
            }
        }
        assert_eq!(found.len(), 6);
    }

    #[test]
    fn representatives_are_pairwise_nonisomorphic() {
        let reps = enumerate_connected(5).unwrap();
        let perms = permutations(5);
        let keys: HashSet<u64> = reps.iter().map(|g| canonical_key_with(g, &perms)).collect();
        assert_eq!(keys.len(), reps.len());
    }

    #[test]
    fn tree_counts_match_known_sequence() {
        // 1, 1, 1, 2, 3, 6, 11, 23, 47 trees on 1..=9 vertices
        let counts: Vec<usize> = (1..=9).map(|n| enumerate_trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47]);
        for t in enumerate_trees(7).unwrap() {
            assert!(t.is_connected());
            assert_eq!(t.size(), 6);
        }
    }

    #[test]
    fn bipartite_sweep_small_counts() {
        // order 2: K2 only; order 3: P3 plus its two relabellings
        let mut count2 = 0;
        visit_connected_bipartite(2, |_| count2 += 1).unwrap();
        assert_eq!(count2, 1);
        let mut count3 = 0;
        visit_connected_bipartite(3, |g| {
            assert!(g.is_connected() && g.is_bipartite());
            count3 += 1;
        })
        .unwrap();
        assert_eq!(count3, 3);
    }
}
