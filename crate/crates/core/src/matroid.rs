//! The matching matroid, basis-family axiom checking, and the zero forcing
//! matroid duality.
//!
//! For a bipartite graph in which every maximum matching is uniquely
//! restricted, the minimum skew zero forcing sets are the bases of a
//! matroid, namely the dual of the matching matroid (whose bases are the
//! vertex sets saturated by maximum matchings). `verify_zero_forcing_matroid`
//! checks both halves exhaustively.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::forcing;
use crate::graph::{mask_to_vec, Graph};
use crate::matching;

/// A collection of distinct subsets of a ground set `{0..ground-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    ground: usize,
    members: Vec<u64>,
}

impl SetFamily {
    pub(crate) fn from_masks(ground: usize, mut members: Vec<u64>) -> Self {
        members.sort_unstable();
        members.dedup();
        SetFamily { ground, members }
    }

    /// Builds a family from explicit vertex subsets.
    pub fn from_sets(ground: usize, sets: &[Vec<usize>]) -> Result<Self> {
        let mut members = Vec::with_capacity(sets.len());
        for s in sets {
            let mut mask = 0u64;
            for &v in s {
                if v >= ground {
                    return Err(Error::VertexOutOfRange { vertex: v, order: ground });
                }
                mask |= 1 << v;
            }
            members.push(mask);
        }
        Ok(SetFamily::from_masks(ground, members))
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members as sorted vertex lists, in mask order.
    pub fn members(&self) -> Vec<Vec<usize>> {
        self.members.iter().map(|&m| mask_to_vec(m)).collect()
    }

    pub fn contains(&self, set: &[usize]) -> bool {
        let mut mask = 0u64;
        for &v in set {
            if v >= self.ground {
                return false;
            }
            mask |= 1 << v;
        }
        self.members.binary_search(&mask).is_ok()
    }

    pub(crate) fn masks(&self) -> &[u64] {
        &self.members
    }

    fn ground_mask(&self) -> u64 {
        if self.ground == 64 {
            u64::MAX
        } else {
            (1u64 << self.ground) - 1
        }
    }
}

/// Bases of the matching matroid: the distinct vertex sets saturated by
/// maximum matchings.
pub fn matching_matroid_bases(g: &Graph) -> SetFamily {
    let masks: Vec<u64> = matching::all_maximum_matchings(g)
        .iter()
        .map(|m| m.saturated_mask())
        .collect();
    SetFamily::from_masks(g.order(), masks)
}

/// Complements of the members in the ground set (the dual matroid's bases
/// when the input is a basis family).
pub fn dual_bases(f: &SetFamily) -> SetFamily {
    let full = f.ground_mask();
    SetFamily::from_masks(f.ground, f.members.iter().map(|&m| full & !m).collect())
}

/// Checks the basis axioms by brute force: equal cardinality plus the
/// exchange property for every `(B1, B2, x)` triple.
pub fn is_matroid_basis_family(f: &SetFamily) -> Result<bool> {
    if f.is_empty() {
        return Err(Error::EmptySetFamily);
    }
    let k = f.members[0].count_ones();
    if f.members.iter().any(|m| m.count_ones() != k) {
        return Ok(false);
    }
    let lookup: HashSet<u64> = f.members.iter().copied().collect();
    for &b1 in &f.members {
        for &b2 in &f.members {
            let mut xs = b1 & !b2;
            while xs != 0 {
                let x = xs.trailing_zeros();
                xs &= xs - 1;
                let mut ys = b2 & !b1;
                let mut exchanged = false;
                while ys != 0 {
                    let y = ys.trailing_zeros();
                    ys &= ys - 1;
                    if lookup.contains(&(b1 & !(1 << x) | (1 << y))) {
                        exchanged = true;
                        break;
                    }
                }
                if !exchanged {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Is every maximum matching of `g` uniquely restricted?
pub fn all_max_matchings_ur(g: &Graph) -> bool {
    matching::all_maximum_matchings(g)
        .iter()
        .all(|m| matching::is_uniquely_restricted(g, m).unwrap())
}

/// Outcome of the zero forcing matroid check on one graph.
#[derive(Clone, Debug)]
pub struct ZfMatroidReport {
    pub bipartite: bool,
    pub all_maximum_matchings_ur: bool,
    /// Every minimum skew zero forcing set.
    pub min_forcing_sets: SetFamily,
    /// Bases of the matching matroid.
    pub matching_bases: SetFamily,
    /// Basis-exchange verdict on the forcing-set family; `None` when the
    /// precondition failed.
    pub exchange_ok: Option<bool>,
    /// Does the forcing-set family equal the dual bases? `None` when the
    /// precondition failed.
    pub duality_ok: Option<bool>,
}

impl ZfMatroidReport {
    pub fn precondition_ok(&self) -> bool {
        self.bipartite && self.all_maximum_matchings_ur
    }

    pub fn passed(&self) -> bool {
        self.precondition_ok() && self.exchange_ok == Some(true) && self.duality_ok == Some(true)
    }

    pub fn summary(&self) -> String {
        if !self.bipartite {
            return "precondition failed: graph is not bipartite".into();
        }
        if !self.all_maximum_matchings_ur {
            return "precondition failed: max matchings not uniquely restricted".into();
        }
        format!(
            "exchange {}, duality {}",
            if self.exchange_ok == Some(true) { "ok" } else { "FAILED" },
            if self.duality_ok == Some(true) { "ok" } else { "FAILED" },
        )
    }
}

/// Verifies, on one graph, that the minimum skew zero forcing sets form a
/// matroid basis family equal to the dual of the matching matroid.
/// A violated precondition (not bipartite, or some maximum matching not
/// uniquely restricted) is reported as such, never silently skipped.
pub fn verify_zero_forcing_matroid(g: &Graph) -> ZfMatroidReport {
    let bipartite = g.is_bipartite();
    let all_ur = all_max_matchings_ur(g);
    let min_forcing_sets = forcing::all_minimum_szfs(g);
    let matching_bases = matching_matroid_bases(g);
    let (exchange_ok, duality_ok) = if bipartite && all_ur {
        let exchange = is_matroid_basis_family(&min_forcing_sets).unwrap_or(false);
        let duality = min_forcing_sets == dual_bases(&matching_bases);
        (Some(exchange), Some(duality))
    } else {
        (None, None)
    };
    ZfMatroidReport {
        bipartite,
        all_maximum_matchings_ur: all_ur,
        min_forcing_sets,
        matching_bases,
        exchange_ok,
        duality_ok,
    }
}
