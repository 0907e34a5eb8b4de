//! The skew color change rule, skew zero forcing sets, and the exact skew
//! zero forcing number.
//!
//! The rule: a vertex `u` of any color with exactly one white neighbor `v`
//! forces `v` black. A set is a skew zero forcing set when iterating the
//! rule from it blackens every vertex. `Z^-` is the least size of such a
//! set, computed here by exhaustive subset search in increasing
//! cardinality; exact answers only, no heuristics.

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graph::{mask_to_vec, vec_to_mask, Graph};
use crate::matroid::SetFamily;

/// Outcome of running the rule to its fixpoint: the final black set and the
/// chronological force list.
#[derive(Clone, Debug)]
pub struct ColorTrace {
    order: usize,
    black: u64,
    forces: Vec<(usize, usize)>,
}

impl ColorTrace {
    /// Final black vertices, sorted.
    pub fn black(&self) -> Vec<usize> {
        mask_to_vec(self.black)
    }

    /// `(forcer, forced)` pairs in firing order.
    pub fn forces(&self) -> &[(usize, usize)] {
        &self.forces
    }

    pub fn all_black(&self) -> bool {
        self.black.count_ones() as usize == self.order
    }

    pub(crate) fn black_mask(&self) -> u64 {
        self.black
    }
}

/// Fixpoint of the rule without trace bookkeeping.
pub(crate) fn closure_mask(g: &Graph, mut black: u64) -> u64 {
    let n = g.order();
    loop {
        let mut progressed = false;
        for u in 0..n {
            let white = g.adj_mask(u) & !black;
            if white != 0 && white & (white - 1) == 0 {
                black |= white;
                progressed = true;
            }
        }
        if !progressed {
            return black;
        }
    }
}

/// Runs the rule to its fixpoint from the initial black set `z`.
///
/// The firing order is deterministic: the lowest-indexed eligible forcer
/// fires first (its forced vertex is determined), so traces are
/// reproducible. The final black set does not depend on the order; see the
/// confluence property tests.
pub fn skew_closure(g: &Graph, z: &[usize]) -> Result<ColorTrace> {
    let mut black = vec_to_mask(g, z)?;
    let mut forces = Vec::new();
    let n = g.order();
    'outer: loop {
        for u in 0..n {
            let white = g.adj_mask(u) & !black;
            if white != 0 && white & (white - 1) == 0 {
                let v = white.trailing_zeros() as usize;
                black |= white;
                forces.push((u, v));
                continue 'outer;
            }
        }
        break;
    }
    Ok(ColorTrace { order: n, black, forces })
}

/// Same fixpoint, but each step fires a uniformly random eligible force.
/// Used to exercise confluence of the rule.
pub fn skew_closure_randomized(g: &Graph, z: &[usize], seed: u64) -> Result<ColorTrace> {
    let mut black = vec_to_mask(g, z)?;
    let mut forces = Vec::new();
    let n = g.order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut eligible = Vec::new();
        for u in 0..n {
            let white = g.adj_mask(u) & !black;
            if white != 0 && white & (white - 1) == 0 {
                eligible.push((u, white.trailing_zeros() as usize));
            }
        }
        let Some(&(u, v)) = eligible.choose(&mut rng) else {
            break;
        };
        black |= 1 << v;
        forces.push((u, v));
    }
    Ok(ColorTrace { order: n, black, forces })
}

/// Does `z` force the whole vertex set black?
pub fn is_skew_forcing_set(g: &Graph, z: &[usize]) -> Result<bool> {
    let black = vec_to_mask(g, z)?;
    Ok(closure_mask(g, black) == g.full_mask())
}

/// Next k-subset in colex order (Gosper's hack).
fn next_subset(v: u64) -> u64 {
    let c = v & v.wrapping_neg();
    let r = v + c;
    (((r ^ v) >> 2) / c) | r
}

/// The skew zero forcing number together with one minimum witness set.
///
/// Isolated vertices belong to every forcing set, so they are seeded up
/// front and the subset search runs over the remaining vertices in colex
/// order by increasing cardinality, stopping at the first success.
pub fn zminus(g: &Graph) -> (usize, Vec<usize>) {
    let full = g.full_mask();
    let base = g.isolated_mask();
    if closure_mask(g, base) == full {
        return (base.count_ones() as usize, mask_to_vec(base));
    }
    let free: Vec<usize> = mask_to_vec(full & !base);
    let f = free.len();
    for k in 1..=f {
        let mut subset: u64 = (1 << k) - 1;
        let limit = 1u64 << f;
        while subset < limit {
            let mut mask = base;
            let mut bits = subset;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                mask |= 1 << free[i];
            }
            if closure_mask(g, mask) == full {
                return (mask.count_ones() as usize, mask_to_vec(mask));
            }
            subset = next_subset(subset);
        }
    }
    unreachable!("the full vertex set always forces itself");
}

/// Every minimum skew zero forcing set, by complete enumeration of all
/// subsets of size `Z^-(g)`.
pub fn all_minimum_szfs(g: &Graph) -> SetFamily {
    let (k, _) = zminus(g);
    let n = g.order();
    let full = g.full_mask();
    let mut members = Vec::new();
    if k == 0 {
        members.push(0);
        return SetFamily::from_masks(n, members);
    }
    let mut subset: u64 = (1 << k) - 1;
    let limit = if n == 64 { u64::MAX } else { 1u64 << n };
    while subset < limit {
        if closure_mask(g, subset) == full {
            members.push(subset);
        }
        let next = next_subset(subset);
        if next <= subset {
            break; // wrapped
        }
        subset = next;
    }
    SetFamily::from_masks(n, members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::Graph;

    #[test]
    fn closure_p2_from_empty() {
        let trace = skew_closure(&families::path(2).unwrap(), &[]).unwrap();
        assert!(trace.all_black());
        assert_eq!(trace.forces().len(), 2);
    }

    #[test]
    fn closure_c5_from_one_vertex() {
        let trace = skew_closure(&families::cycle(5).unwrap(), &[0]).unwrap();
        assert!(trace.all_black());
        assert_eq!(trace.forces().len(), 4);
    }

    #[test]
    fn closure_c4_from_empty_stalls() {
        let trace = skew_closure(&families::cycle(4).unwrap(), &[]).unwrap();
        assert!(trace.black().is_empty());
        assert!(trace.forces().is_empty());
    }

    #[test]
    fn forced_vertices_are_unique_in_trace() {
        let g = families::wheel(6).unwrap();
        let trace = skew_closure(&g, &[0, 2]).unwrap();
        let mut forced: Vec<usize> = trace.forces().iter().map(|&(_, v)| v).collect();
        let before = forced.len();
        forced.sort_unstable();
        forced.dedup();
        assert_eq!(before, forced.len());
    }

    #[test]
    fn forcing_set_predicate_on_p3() {
        let p3 = families::path(3).unwrap();
        assert!(is_skew_forcing_set(&p3, &[0]).unwrap());
        assert!(!is_skew_forcing_set(&p3, &[1]).unwrap());
        assert!(is_skew_forcing_set(&p3, &[5]).is_err());
    }

    #[test]
    fn forcing_set_k23_with_adjacent_complement() {
        // dropping one vertex from each side of K_{2,3} leaves a forcing set
        let k23 = families::complete_multipartite(&[2, 3]).unwrap();
        assert!(is_skew_forcing_set(&k23, &[1, 3, 4]).unwrap());
    }

    #[test]
    fn zminus_table_values() {
        assert_eq!(zminus(&families::path(4).unwrap()).0, 0);
        assert_eq!(zminus(&families::wheel(6).unwrap()).0, 2);
        assert_eq!(zminus(&families::hypercube(3).unwrap()).0, 4);
    }

    #[test]
    fn zminus_witness_is_a_forcing_set_of_stated_size() {
        for g in [
            families::cycle(6).unwrap(),
            families::wheel(7).unwrap(),
            families::k3_tensor_k3(),
        ] {
            let (k, witness) = zminus(&g);
            assert_eq!(witness.len(), k);
            assert!(is_skew_forcing_set(&g, &witness).unwrap());
        }
    }

    #[test]
    fn isolated_vertices_are_forced_members() {
        // K2 plus two isolated vertices: Z^- = 2, both isolated in every set
        let g = Graph::from_edge_list(4, &[(0, 1)]).unwrap();
        let (k, witness) = zminus(&g);
        assert_eq!(k, 2);
        assert_eq!(witness, vec![2, 3]);
    }

    #[test]
    fn zminus_adds_over_components() {
        let a = families::cycle(5).unwrap(); // Z^- = 1
        let b = families::path(3).unwrap(); // Z^- = 1
        let both = families::disjoint_union(&a, &b).unwrap();
        assert_eq!(zminus(&both).0, zminus(&a).0 + zminus(&b).0);
    }

    #[test]
    fn all_minimum_sets_examples() {
        let p3 = families::path(3).unwrap();
        let fam = all_minimum_szfs(&p3);
        assert_eq!(fam.members(), vec![vec![0], vec![2]]);

        let p2 = families::path(2).unwrap();
        let fam = all_minimum_szfs(&p2);
        assert_eq!(fam.members(), vec![Vec::<usize>::new()]);

        // C4: the four adjacent pairs force; the two opposite pairs stall
        let c4 = families::cycle(4).unwrap();
        let fam = all_minimum_szfs(&c4);
        assert_eq!(
            fam.members(),
            vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]
        );
    }

    #[test]
    fn randomized_closure_matches_deterministic() {
        let g = families::wheel(7).unwrap();
        let fixed = skew_closure(&g, &[0]).unwrap().black();
        for seed in 0..20 {
            assert_eq!(skew_closure_randomized(&g, &[0], seed).unwrap().black(), fixed);
        }
    }
}
