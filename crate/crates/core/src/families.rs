//! Named graph families and graph composition operators.
//!
//! Constructions that the source tables leave to a reference are fixed here:
//! the wheel `W_n` is `C_{n-1}` plus a hub adjacent to the whole cycle, the
//! pineapple `P_{m,k}` is `K_m` with `k` pendant vertices on one clique
//! vertex, the hypercube `Q_s` is the s-fold Cartesian power of `K_2`, the
//! half-graph `H_s` joins `u_i ~ v_j` for `i <= j`, the super-triangle `T_n`
//! is the triangular grid with `n` rows, and the necklace `N_s` is a cycle
//! of `s` diamonds joined through their degree-2 vertices.

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteMultipartite,
    Star,
    Wheel,
    Hypercube,
    Pineapple,
    SuperTriangle,
    HalfGraph,
    Necklace,
}

/// A family tag plus its integer parameters (sizes or part sizes).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, params: Vec<usize>) -> Self {
        FamilySpec { family, params }
    }
}

/// Builds the named graph for a [`FamilySpec`].
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    let one = |name: &str| -> Result<usize> {
        if spec.params.len() == 1 {
            Ok(spec.params[0])
        } else {
            Err(Error::InvalidFamily(format!(
                "{name} takes exactly one parameter, got {:?}",
                spec.params
            )))
        }
    };
    match spec.family {
        Family::Path => path(one("path")?),
        Family::Cycle => cycle(one("cycle")?),
        Family::Complete => complete(one("complete")?),
        Family::CompleteMultipartite => complete_multipartite(&spec.params),
        Family::Star => star(one("star")?),
        Family::Wheel => wheel(one("wheel")?),
        Family::Hypercube => hypercube(one("hypercube")?),
        Family::Pineapple => {
            if spec.params.len() != 2 {
                return Err(Error::InvalidFamily(format!(
                    "pineapple takes (m, k), got {:?}",
                    spec.params
                )));
            }
            pineapple(spec.params[0], spec.params[1])
        }
        Family::SuperTriangle => super_triangle(one("super-triangle")?),
        Family::HalfGraph => half_graph(one("half-graph")?),
        Family::Necklace => necklace(one("necklace")?),
    }
}

pub fn path(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidFamily(format!("cycle needs n >= 3, got {n}")));
    }
    let mut g = path(n)?;
    g.add_edge(n - 1, 0);
    Ok(g)
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// `K_{n_1,...,n_s}`: parts are consecutive vertex blocks in the given order.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.iter().any(|&p| p == 0) {
        return Err(Error::InvalidFamily(format!(
            "multipartite parts must be nonempty and positive, got {parts:?}"
        )));
    }
    let n: usize = parts.iter().sum();
    let mut g = Graph::empty(n)?;
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat(i).take(p));
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if part_of[u] != part_of[v] {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// `K_{1,n-1}` with the hub at vertex 0.
pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidFamily(format!("star needs n >= 2, got {n}")));
    }
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        g.add_edge(0, v);
    }
    Ok(g)
}

/// Wheel on `n` vertices: cycle `0..n-2` plus hub `n-1`.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::InvalidFamily(format!("wheel needs n >= 4, got {n}")));
    }
    let rim = n - 1;
    let mut g = Graph::empty(n)?;
    for v in 0..rim {
        g.add_edge(v, (v + 1) % rim);
        g.add_edge(v, n - 1);
    }
    Ok(g)
}

/// `Q_s`: vertices are the s-bit strings, edges join Hamming distance 1.
pub fn hypercube(s: usize) -> Result<Graph> {
    if s == 0 {
        return Err(Error::InvalidFamily("hypercube needs s >= 1".into()));
    }
    if s > 6 {
        return Err(Error::InvalidFamily(format!(
            "hypercube s={s} exceeds the order cap of 64"
        )));
    }
    let n = 1usize << s;
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for b in 0..s {
            let v = u ^ (1 << b);
            if u < v {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// `P_{m,k}`: `K_m` on `0..m-1` plus `k` pendant vertices adjacent to vertex 0.
pub fn pineapple(m: usize, k: usize) -> Result<Graph> {
    if m < 3 || k < 1 {
        return Err(Error::InvalidFamily(format!(
            "pineapple needs m >= 3, k >= 1, got ({m}, {k})"
        )));
    }
    let mut g = Graph::empty(m + k)?;
    for u in 0..m {
        for v in (u + 1)..m {
            g.add_edge(u, v);
        }
    }
    for p in m..m + k {
        g.add_edge(0, p);
    }
    Ok(g)
}

/// `T_n`: triangular grid with `n` rows; row `i` holds `i + 1` vertices.
pub fn super_triangle(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidFamily("super-triangle needs n >= 1".into()));
    }
    let order = n * (n + 1) / 2;
    let mut g = Graph::empty(order)?;
    let idx = |i: usize, j: usize| i * (i + 1) / 2 + j;
    for i in 0..n {
        for j in 0..=i {
            if j + 1 <= i {
                g.add_edge(idx(i, j), idx(i, j + 1));
            }
            if i + 1 < n {
                g.add_edge(idx(i, j), idx(i + 1, j));
                g.add_edge(idx(i, j), idx(i + 1, j + 1));
            }
        }
    }
    Ok(g)
}

/// `H_s`: bipartite on `u_0..u_{s-1}` and `v_0..v_{s-1}` (as `0..s` and
/// `s..2s`), with `u_i ~ v_j` iff `i <= j`.
pub fn half_graph(s: usize) -> Result<Graph> {
    if s == 0 {
        return Err(Error::InvalidFamily("half-graph needs s >= 1".into()));
    }
    let mut g = Graph::empty(2 * s)?;
    for i in 0..s {
        for j in i..s {
            g.add_edge(i, s + j);
        }
    }
    Ok(g)
}

/// `N_s`: `s` diamonds (`K_4` minus an edge) in a cycle, consecutive
/// diamonds joined by an edge between their degree-2 vertices.
///
/// Diamond `i` occupies `4i..4i+4`: `4i, 4i+1` are the degree-3 pair and
/// `4i+2, 4i+3` the degree-2 pair; `4i+3` is joined to `4(i+1)+2 (mod 4s)`.
pub fn necklace(s: usize) -> Result<Graph> {
    if s < 2 {
        return Err(Error::InvalidFamily(format!("necklace needs s >= 2, got {s}")));
    }
    let mut g = Graph::empty(4 * s)?;
    for i in 0..s {
        let b = 4 * i;
        g.add_edge(b, b + 1);
        g.add_edge(b, b + 2);
        g.add_edge(b, b + 3);
        g.add_edge(b + 1, b + 2);
        g.add_edge(b + 1, b + 3);
        g.add_edge(b + 3, 4 * ((i + 1) % s) + 2);
    }
    Ok(g)
}

/// Corona `G o H`: one copy of `h` per vertex of `g`, that vertex joined to
/// every vertex of its copy. Copy `i` occupies `|G| + i*|H| ..`.
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph> {
    let ng = g.order();
    let nh = h.order();
    let mut out = Graph::empty(ng + ng * nh)?;
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for i in 0..ng {
        let base = ng + i * nh;
        for (x, y) in h.edges() {
            out.add_edge(base + x, base + y);
        }
        for x in 0..nh {
            out.add_edge(i, base + x);
        }
    }
    Ok(out)
}

/// Cartesian product: `(a,x) ~ (b,y)` iff (`a = b` and `x ~ y`) or
/// (`x = y` and `a ~ b`). Vertex `(a, x)` is `a*|H| + x`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let nh = h.order();
    let mut out = Graph::empty(g.order() * nh)?;
    for a in 0..g.order() {
        for (x, y) in h.edges() {
            out.add_edge(a * nh + x, a * nh + y);
        }
    }
    for (a, b) in g.edges() {
        for x in 0..nh {
            out.add_edge(a * nh + x, b * nh + x);
        }
    }
    Ok(out)
}

/// Tensor (direct) product: `(a,x) ~ (b,y)` iff `a ~ b` and `x ~ y`.
pub fn tensor_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let nh = h.order();
    let mut out = Graph::empty(g.order() * nh)?;
    for (a, b) in g.edges() {
        for (x, y) in h.edges() {
            out.add_edge(a * nh + x, b * nh + y);
            out.add_edge(a * nh + y, b * nh + x);
        }
    }
    Ok(out)
}

/// The 9-vertex tensor product of `K_3` with itself: vertices `(i, j)` as
/// `3i + j`, adjacent iff both coordinates differ. 4-regular, 18 edges,
/// tripartite with the rows as parts.
pub fn k3_tensor_k3() -> Graph {
    let k3 = complete(3).unwrap();
    tensor_product(&k3, &k3).unwrap()
}

/// Disjoint union; vertices of `h` are shifted by `|G|`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let ng = g.order();
    let mut out = Graph::empty(ng + h.order())?;
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.add_edge(ng + u, ng + v);
    }
    Ok(out)
}

/// Vertex sum `G1 (+)_v G2`: disjoint union with `v1` and `v2` identified.
/// Vertices of `g1` keep their labels; the identified vertex is `v1`.
pub fn vertex_sum(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> Result<Graph> {
    g1.check_vertex(v1)?;
    g2.check_vertex(v2)?;
    let n1 = g1.order();
    let mut out = Graph::empty(n1 + g2.order() - 1)?;
    for (u, v) in g1.edges() {
        out.add_edge(u, v);
    }
    // relabel g2: v2 -> v1, others -> n1, n1+1, ... in increasing order
    let relabel = |w: usize| -> usize {
        if w == v2 {
            v1
        } else if w < v2 {
            n1 + w
        } else {
            n1 + w - 1
        }
    };
    for (u, v) in g2.edges() {
        out.add_edge(relabel(u), relabel(v));
    }
    Ok(out)
}
