//! Matchings: maximum matchings, uniquely restricted matchings, and
//! perfect-matching counting.
//!
//! Exactness comes first. The matching number is computed by memoized
//! recursion over vertex subsets, which is correct on non-bipartite graphs
//! (odd cycles included) without blossom machinery and comfortably fast at
//! desk scale. Enumeration of all matchings recurses over the edge list;
//! each leaf of that recursion is one matching.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{mask_to_vec, Graph};

/// A set of pairwise vertex-disjoint edges of a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// Validates that `edges` are edges of `g` and pairwise disjoint.
    pub fn new(g: &Graph, edges: &[(usize, usize)]) -> Result<Self> {
        let mut used = 0u64;
        let mut sorted: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if !g.has_edge(u, v) {
                return Err(Error::InvalidMatching(format!("({u}, {v}) is not an edge")));
            }
            let bits = (1u64 << u) | (1 << v);
            if used & bits != 0 {
                return Err(Error::InvalidMatching(format!("({u}, {v}) shares an endpoint")));
            }
            used |= bits;
            sorted.push((u.min(v), u.max(v)));
        }
        sorted.sort_unstable();
        Ok(Matching { edges: sorted })
    }

    fn from_sorted(edges: Vec<(usize, usize)>) -> Self {
        Matching { edges }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub(crate) fn saturated_mask(&self) -> u64 {
        self.edges.iter().fold(0, |m, &(u, v)| m | (1 << u) | (1 << v))
    }

    /// Saturated vertices, sorted.
    pub fn saturated(&self) -> Vec<usize> {
        mask_to_vec(self.saturated_mask())
    }
}

fn matching_number_mask(g: &Graph, mask: u64, memo: &mut HashMap<u64, usize>) -> usize {
    if mask == 0 {
        return 0;
    }
    let v = mask.trailing_zeros() as usize;
    let nbrs = g.adj_mask(v) & mask;
    if nbrs == 0 {
        return matching_number_mask(g, mask & !(1 << v), memo);
    }
    if let Some(&r) = memo.get(&mask) {
        return r;
    }
    // leave v unsaturated
    let mut best = matching_number_mask(g, mask & !(1 << v), memo);
    let mut m = nbrs;
    while m != 0 {
        let u = m.trailing_zeros() as usize;
        m &= m - 1;
        let r = 1 + matching_number_mask(g, mask & !(1 << v) & !(1 << u), memo);
        best = best.max(r);
    }
    memo.insert(mask, best);
    best
}

/// `match(G)`: the number of edges in a maximum matching.
pub fn matching_number(g: &Graph) -> usize {
    matching_number_mask(g, g.full_mask(), &mut HashMap::new())
}

/// One maximum matching, reconstructed deterministically (lowest vertex,
/// lowest partner first).
pub fn maximum_matching(g: &Graph) -> Matching {
    let mut memo = HashMap::new();
    let mut mask = g.full_mask();
    let mut edges = Vec::new();
    while mask != 0 {
        let target = matching_number_mask(g, mask, &mut memo);
        let v = mask.trailing_zeros() as usize;
        let without_v = mask & !(1 << v);
        if matching_number_mask(g, without_v, &mut memo) == target {
            mask = without_v;
            continue;
        }
        let mut m = g.adj_mask(v) & mask;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            let rest = without_v & !(1 << u);
            if 1 + matching_number_mask(g, rest, &mut memo) == target {
                edges.push((v.min(u), v.max(u)));
                mask = rest;
                break;
            }
        }
    }
    edges.sort_unstable();
    Matching::from_sorted(edges)
}

/// Visits every matching of `g` (the empty one included) exactly once.
/// The callback returns `false` to abort the enumeration.
pub(crate) fn visit_matchings<F: FnMut(&[(usize, usize)]) -> bool>(g: &Graph, f: &mut F) -> bool {
    let edges = g.edges();
    let mut current = Vec::new();
    fn rec<F: FnMut(&[(usize, usize)]) -> bool>(
        edges: &[(usize, usize)],
        idx: usize,
        used: u64,
        current: &mut Vec<(usize, usize)>,
        f: &mut F,
    ) -> bool {
        if idx == edges.len() {
            return f(current);
        }
        if !rec(edges, idx + 1, used, current, f) {
            return false;
        }
        let (u, v) = edges[idx];
        let bits = (1u64 << u) | (1 << v);
        if used & bits == 0 {
            current.push(edges[idx]);
            let keep_going = rec(edges, idx + 1, used | bits, current, f);
            current.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
    rec(&edges, 0, 0, &mut current, f)
}

/// Every matching of size `match(G)`, deduplicated by edge-set equality.
pub fn all_maximum_matchings(g: &Graph) -> Vec<Matching> {
    let target = matching_number(g);
    let mut out = Vec::new();
    visit_matchings(g, &mut |m| {
        if m.len() == target {
            let mut edges = m.to_vec();
            edges.sort_unstable();
            out.push(Matching::from_sorted(edges));
        }
        true
    });
    out.sort_by(|a, b| a.edges.cmp(&b.edges));
    out
}

/// Vertices left unsaturated by `m`, sorted.
pub fn unsaturated_set(g: &Graph, m: &Matching) -> Result<Vec<usize>> {
    validate(g, m)?;
    Ok(mask_to_vec(g.full_mask() & !m.saturated_mask()))
}

fn validate(g: &Graph, m: &Matching) -> Result<()> {
    // a Matching is disjoint by construction; re-check membership in g
    for &(u, v) in m.edges() {
        if !g.has_edge(u, v) {
            return Err(Error::InvalidMatching(format!("({u}, {v}) is not an edge")));
        }
    }
    Ok(())
}

/// Is `m` uniquely restricted: does the graph contain no `m`-alternating
/// cycle? Alternating cycles are searched by DFS over alternating walks
/// seeded at each matched edge.
pub fn is_uniquely_restricted(g: &Graph, m: &Matching) -> Result<bool> {
    validate(g, m)?;
    Ok(!has_alternating_cycle(g, m.edges()))
}

pub(crate) fn has_alternating_cycle(g: &Graph, matched: &[(usize, usize)]) -> bool {
    let n = g.order();
    let mut partner = vec![usize::MAX; n];
    for &(u, v) in matched {
        partner[u] = v;
        partner[v] = u;
    }
    for &(a, b) in matched {
        // walk a -(matched)- b -(unmatched)- ... back to a via an unmatched edge
        if alt_dfs(g, &partner, a, b, (1 << a) | (1 << b)) {
            return true;
        }
    }
    false
}

fn alt_dfs(g: &Graph, partner: &[usize], start: usize, cur: usize, visited: u64) -> bool {
    // `cur` was entered through its matched edge; the next edge is unmatched
    let unmatched = g.adj_mask(cur) & !(1u64 << partner[cur]);
    if unmatched & (1 << start) != 0 {
        return true; // closes an even alternating cycle (length >= 4)
    }
    let mut m = unmatched & !visited;
    while m != 0 {
        let w = m.trailing_zeros() as usize;
        m &= m - 1;
        let pw = partner[w];
        if pw != usize::MAX && visited & (1 << pw) == 0 {
            if alt_dfs(g, partner, start, pw, visited | (1 << w) | (1 << pw)) {
                return true;
            }
        }
    }
    false
}

/// The second characterization of uniquely restricted: `m` is the only
/// matching saturating its saturated vertex set, i.e. the subgraph induced
/// by the saturated vertices has exactly one perfect matching.
pub fn is_uniquely_restricted_saturation(g: &Graph, m: &Matching) -> Result<bool> {
    validate(g, m)?;
    if m.is_empty() {
        return Ok(true);
    }
    let (sub, _) = g.induced_subgraph(&m.saturated())?;
    Ok(count_perfect_matchings(&sub) == 1)
}

/// A uniquely restricted matching of maximum size, by branch and bound over
/// the edge list. Submatchings of uniquely restricted matchings are
/// uniquely restricted, so branches that already contain an alternating
/// cycle are pruned.
pub fn maximum_ur_matching(g: &Graph) -> Matching {
    let edges = g.edges();
    let mut best: Vec<(usize, usize)> = Vec::new();
    let mut current: Vec<(usize, usize)> = Vec::new();
    fn rec(
        g: &Graph,
        edges: &[(usize, usize)],
        idx: usize,
        used: u64,
        current: &mut Vec<(usize, usize)>,
        best: &mut Vec<(usize, usize)>,
    ) {
        if current.len() > best.len() {
            *best = current.clone();
        }
        if idx == edges.len() {
            return;
        }
        // even taking every remaining edge cannot beat `best`
        if current.len() + (edges.len() - idx) <= best.len() {
            return;
        }
        let (u, v) = edges[idx];
        let bits = (1u64 << u) | (1 << v);
        if used & bits == 0 {
            current.push(edges[idx]);
            if !has_alternating_cycle(g, current) {
                rec(g, edges, idx + 1, used | bits, current, best);
            }
            current.pop();
        }
        rec(g, edges, idx + 1, used, current, best);
    }
    rec(g, &edges, 0, 0, &mut current, &mut best);
    best.sort_unstable();
    Matching::from_sorted(best)
}

/// Exact count of perfect matchings, by recursive inclusion/exclusion on a
/// lowest-degree vertex with memoization on the remaining vertex set.
pub fn count_perfect_matchings(g: &Graph) -> u64 {
    fn rec(g: &Graph, mask: u64, memo: &mut HashMap<u64, u64>) -> u64 {
        if mask == 0 {
            return 1;
        }
        if let Some(&r) = memo.get(&mask) {
            return r;
        }
        // branch on a vertex of minimum remaining degree
        let mut v = usize::MAX;
        let mut vd = usize::MAX;
        let mut m = mask;
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            let d = (g.adj_mask(w) & mask).count_ones() as usize;
            if d < vd {
                vd = d;
                v = w;
            }
        }
        if vd == 0 {
            memo.insert(mask, 0);
            return 0;
        }
        let mut total = 0;
        let mut nbrs = g.adj_mask(v) & mask;
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            total += rec(g, mask & !(1 << v) & !(1 << u), memo);
        }
        memo.insert(mask, total);
        total
    }
    if g.order() % 2 == 1 {
        return 0;
    }
    rec(g, g.full_mask(), &mut HashMap::new())
}

pub fn has_unique_perfect_matching(g: &Graph) -> bool {
    count_perfect_matchings(g) == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    /// Brute-force maximum matching size: the largest pairwise-disjoint
    /// edge subset, found by plain enumeration.
    fn brute_force_matching_number(g: &Graph) -> usize {
        let mut best = 0;
        visit_matchings(g, &mut |m| {
            best = best.max(m.len());
            true
        });
        best
    }

    #[test]
    fn matching_number_examples() {
        assert_eq!(matching_number(&families::path(4).unwrap()), 2);
        assert_eq!(matching_number(&families::cycle(5).unwrap()), 2);
        assert_eq!(matching_number(&families::k3_tensor_k3()), 4);
        assert_eq!(matching_number(&families::complete_multipartite(&[2, 3]).unwrap()), 2);
        assert_eq!(matching_number(&families::hypercube(3).unwrap()), 4);
        assert_eq!(matching_number(&Graph::empty(1).unwrap()), 0);
    }

    #[test]
    fn maximum_matching_agrees_with_brute_force_on_families() {
        for g in [
            families::wheel(7).unwrap(),
            families::k3_tensor_k3(),
            families::necklace(2).unwrap(),
            families::complete(7).unwrap(),
        ] {
            let m = maximum_matching(&g);
            assert_eq!(m.len(), brute_force_matching_number(&g));
            assert!(Matching::new(&g, m.edges()).is_ok());
        }
    }

    #[test]
    fn matching_validation() {
        let c4 = families::cycle(4).unwrap();
        assert!(Matching::new(&c4, &[(0, 1), (2, 3)]).is_ok());
        assert!(Matching::new(&c4, &[(0, 2)]).is_err());
        assert!(Matching::new(&c4, &[(0, 1), (1, 2)]).is_err());
    }

    #[test]
    fn unsaturated_sets() {
        let p3 = families::path(3).unwrap();
        let m = Matching::new(&p3, &[(0, 1)]).unwrap();
        assert_eq!(unsaturated_set(&p3, &m).unwrap(), vec![2]);

        let p4 = families::path(4).unwrap();
        let pm = maximum_matching(&p4);
        assert!(unsaturated_set(&p4, &pm).unwrap().is_empty());

        let c5 = families::cycle(5).unwrap();
        let m = maximum_matching(&c5);
        assert_eq!(unsaturated_set(&c5, &m).unwrap().len(), 1);
    }

    #[test]
    fn uniquely_restricted_examples() {
        let c4 = families::cycle(4).unwrap();
        let opposite = Matching::new(&c4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!is_uniquely_restricted(&c4, &opposite).unwrap());

        let p4 = families::path(4).unwrap();
        let pm = maximum_matching(&p4);
        assert!(is_uniquely_restricted(&p4, &pm).unwrap());

        let c6 = families::cycle(6).unwrap();
        let three = maximum_matching(&c6);
        assert_eq!(three.len(), 3);
        assert!(!is_uniquely_restricted(&c6, &three).unwrap());
        let two = Matching::new(&c6, &[(0, 1), (2, 3)]).unwrap();
        assert!(is_uniquely_restricted(&c6, &two).unwrap());
    }

    #[test]
    fn both_ur_characterizations_agree_on_all_c6_matchings() {
        let c6 = families::cycle(6).unwrap();
        visit_matchings(&c6, &mut |m| {
            let m = Matching::new(&c6, m).unwrap();
            assert_eq!(
                is_uniquely_restricted(&c6, &m).unwrap(),
                is_uniquely_restricted_saturation(&c6, &m).unwrap()
            );
            true
        });
    }

    #[test]
    fn maximum_ur_matching_examples() {
        assert_eq!(maximum_ur_matching(&families::cycle(4).unwrap()).len(), 1);
        assert_eq!(maximum_ur_matching(&families::cycle(6).unwrap()).len(), 2);
        // in a tree every maximum matching is uniquely restricted
        for t in crate::enumerate::enumerate_trees(7).unwrap() {
            assert_eq!(maximum_ur_matching(&t).len(), matching_number(&t));
        }
    }

    #[test]
    fn all_maximum_matchings_examples() {
        let p3 = families::path(3).unwrap();
        let all = all_maximum_matchings(&p3);
        assert_eq!(all.len(), 2);

        let p4 = families::path(4).unwrap();
        assert_eq!(all_maximum_matchings(&p4).len(), 1);

        let c4 = families::cycle(4).unwrap();
        assert_eq!(all_maximum_matchings(&c4).len(), 2);
    }

    #[test]
    fn perfect_matching_counts() {
        assert_eq!(count_perfect_matchings(&families::cycle(6).unwrap()), 2);
        assert_eq!(count_perfect_matchings(&families::path(6).unwrap()), 1);
        assert_eq!(count_perfect_matchings(&families::path(5).unwrap()), 0);
        assert!(has_unique_perfect_matching(&families::path(6).unwrap()));
        assert!(!has_unique_perfect_matching(&families::cycle(6).unwrap()));
    }
}
