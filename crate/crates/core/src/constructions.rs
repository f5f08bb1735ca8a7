//! Builders for the named graphs, each returned with its distinguished
//! vertices under role labels such as `u`, `v`, `r_1` or `u_2`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::closed_forms::CactusClassSpec;
use crate::error::{Error, Result};
use crate::graph::{coalesce, Graph};
use crate::rational::{int, Rational};
use crate::resistance::resistance_matrix;

/// A graph together with named attachment vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootedGraph {
    #[serde(skip)]
    pub graph: Graph,
    pub roots: BTreeMap<String, usize>,
}

impl RootedGraph {
    pub fn new(graph: Graph) -> Self {
        RootedGraph {
            graph,
            roots: BTreeMap::new(),
        }
    }

    pub fn with_root(mut self, role: &str, v: usize) -> Result<Self> {
        self.graph.check_vertex(v)?;
        self.roots.insert(role.to_string(), v);
        Ok(self)
    }

    pub fn root(&self, role: &str) -> Result<usize> {
        self.roots
            .get(role)
            .copied()
            .ok_or_else(|| Error::InvalidParameter(format!("no root labelled {role:?}")))
    }

    pub fn anchor(&self, role: &str) -> Result<Anchored<'_>> {
        Ok(Anchored::new(&self.graph, self.root(role)?))
    }

    /// JSON object mapping role labels to vertex ids.
    pub fn roots_json(&self) -> String {
        let body: Vec<String> = self.roots.iter().map(|(k, v)| format!("  \"{k}\": {v}")).collect();
        format!("{{\n{}\n}}\n", body.join(",\n"))
    }
}

/// A borrowed graph with one chosen vertex, the input shape of `⊕`.
#[derive(Clone, Copy, Debug)]
pub struct Anchored<'a> {
    pub graph: &'a Graph,
    pub at: usize,
}

impl<'a> Anchored<'a> {
    pub fn new(graph: &'a Graph, at: usize) -> Self {
        Anchored { graph, at }
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }
}

/// `P_m` on `0..m` with roots `r_1 .. r_m` along the path.
pub fn build_path(m: usize) -> Result<RootedGraph> {
    if m == 0 {
        return Err(Error::InvalidParameter("path needs at least one vertex".into()));
    }
    let mut rg = RootedGraph::new(Graph::from_edges(m, (1..m).map(|i| (i - 1, i)))?);
    for i in 0..m {
        rg = rg.with_root(&format!("r_{}", i + 1), i)?;
    }
    Ok(rg)
}

/// `C_l` on `0..l` in cyclic order; `w = 0` and `x` the antipode of `w`
/// (smallest id among the farthest vertices).
pub fn build_cycle(l: usize) -> Result<RootedGraph> {
    if l < 3 {
        return Err(Error::InvalidParameter(format!("cycle length must be at least 3, got {l}")));
    }
    RootedGraph::new(Graph::from_edges(l, (0..l).map(|i| (i, (i + 1) % l)))?)
        .with_root("w", 0)?
        .with_root("x", l / 2)
}

/// Star `K_{1,m-1}` on `m` vertices, centre `c = 0`.
pub fn build_star(m: usize) -> Result<RootedGraph> {
    if m == 0 {
        return Err(Error::InvalidParameter("star needs at least one vertex".into()));
    }
    RootedGraph::new(Graph::from_edges(m, (1..m).map(|i| (0, i)))?).with_root("c", 0)
}

/// `Q_k`: `k` triangles in a chain, triangle `i` on `2i-2, 2i-1, 2i`, with
/// consecutive triangles sharing `2i`. Root `u = 0` is a degree-2 vertex of
/// the first terminal triangle and `v = 2k` one of the last (both `0` for
/// `k = 0`, where `Q_0` is a single vertex).
pub fn build_triangle_chain(k: usize) -> Result<RootedGraph> {
    let n = 2 * k + 1;
    let edges = (1..=k).flat_map(|i| {
        let (a, b, c) = (2 * i - 2, 2 * i - 1, 2 * i);
        [(a, b), (b, c), (a, c)]
    });
    RootedGraph::new(Graph::from_edges(n, edges)?)
        .with_root("u", 0)?
        .with_root("v", 2 * k)
}

/// `C_{n,t}`: `(F, u) = (Q_k, u) ⊕ (P_s, r_1)` then `(F, r_s) ⊕ (Q_{t-k}, u)`.
/// Roots: `u`, `v` (the attachment vertices of the two triangle chains, i.e.
/// the two ends of the internal path) and `r_1`, `r_s` as aliases.
pub fn build_extremal_chain(spec: CactusClassSpec) -> Result<RootedGraph> {
    let (k, s, t) = (spec.k(), spec.s(), spec.t());
    let qk = build_triangle_chain(k)?;
    let path = build_path(s)?;
    let f = coalesce(&qk.graph, qk.root("u")?, &path.graph, 0)?;
    let r_s = f.right_map[s - 1];
    let q_rest = build_triangle_chain(t - k)?;
    let c = coalesce(&f.graph, r_s, &q_rest.graph, q_rest.root("u")?)?;
    RootedGraph::new(c.graph)
        .with_root("u", f.common)?
        .with_root("r_1", f.common)?
        .with_root("v", r_s)?
        .with_root("r_s", r_s)
}

/// `G^0(n, t)`: star cactus with `t` triangles and `n - 2t - 1` pendant
/// edges sharing the centre `c = 0`.
pub fn build_minimal_star(spec: CactusClassSpec) -> Result<RootedGraph> {
    let t = spec.t();
    let mut edges = Vec::new();
    for i in 0..t {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        edges.extend([(0, a), (0, b), (a, b)]);
    }
    edges.extend((2 * t + 1..spec.n()).map(|v| (0, v)));
    RootedGraph::new(Graph::from_edges(spec.n(), edges)?).with_root("c", 0)
}

/// `G_10` on `k` vertices: a triangle with a pendant path, `(C_3, 0) ⊕
/// (P_{k-2}, r_1)`. Roots: `r_{k-2}` the free end of the path, `r_1` the
/// junction, `u_2` the smallest degree-2 triangle vertex.
pub fn build_gadget_g10(k: usize) -> Result<RootedGraph> {
    if k <= 3 {
        return Err(Error::InvalidParameter(format!("gadget order must exceed 3, got {k}")));
    }
    let tri = build_cycle(3)?;
    let path = build_path(k - 2)?;
    let c = coalesce(&tri.graph, 0, &path.graph, 0)?;
    RootedGraph::new(c.graph)
        .with_root("r_1", 0)?
        .with_root("u_2", 1)?
        .with_root("r_{k-2}", c.right_map[k - 3])
}

/// `(G_11, u) = (G_1, u_1) ⊕ (G_10, r_{k-2})`. Roots: `u` (the merged
/// vertex) and `u_2` (the image of the gadget's degree-2 triangle vertex).
pub fn build_gadget_g11(k: usize, g1: Anchored<'_>) -> Result<RootedGraph> {
    let g10 = build_gadget_g10(k)?;
    let c = coalesce(g1.graph, g1.at, &g10.graph, g10.root("r_{k-2}")?)?;
    let u2 = c.right_map[g10.root("u_2")?];
    let r1 = c.right_map[g10.root("r_1")?];
    RootedGraph::new(c.graph)
        .with_root("u", c.common)?
        .with_root("u_2", u2)?
        .with_root("r_1", r1)
}

/// Kirchhoff index of `(G_1, x_1) ⊕ (G_2, x_2)` without building it:
/// `Kf(G_1) + Kf(G_2) + n_1 Kf_{x_2}(G_2) + n_2 Kf_{x_1}(G_1)` with
/// `n_i = |V(G_i)| - 1`.
pub fn compose_kf(g1: Anchored<'_>, g2: Anchored<'_>) -> Result<Rational> {
    g1.graph.check_vertex(g1.at)?;
    g2.graph.check_vertex(g2.at)?;
    let m1 = resistance_matrix(g1.graph)?;
    let m2 = resistance_matrix(g2.graph)?;
    let n1 = int(g1.order() as i64 - 1);
    let n2 = int(g2.order() as i64 - 1);
    Ok(m1.kirchhoff_index() + m2.kirchhoff_index() + n1 * m2.transmission(g2.at) + n2 * m1.transmission(g1.at))
}

/// Parses a construction name and its integer parameters, as used by the
/// command line: `path m`, `cycle l`, `star m`, `qchain k`, `cnt n t`,
/// `g0 n t`, `g10 k`.
pub fn build_named(name: &str, params: &[usize]) -> Result<RootedGraph> {
    let arity = |want: usize| -> Result<()> {
        if params.len() == want {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("{name} takes {want} parameter(s), got {}", params.len())))
        }
    };
    match name {
        "path" => arity(1).and_then(|_| build_path(params[0])),
        "cycle" => arity(1).and_then(|_| build_cycle(params[0])),
        "star" => arity(1).and_then(|_| build_star(params[0])),
        "qchain" => arity(1).and_then(|_| build_triangle_chain(params[0])),
        "cnt" => arity(2).and_then(|_| build_extremal_chain(CactusClassSpec::new(params[0], params[1])?)),
        "g0" => arity(2).and_then(|_| build_minimal_star(CactusClassSpec::new(params[0], params[1])?)),
        "g10" => arity(1).and_then(|_| build_gadget_g10(params[0])),
        other => Err(Error::InvalidParameter(format!("unknown construction {other:?}"))),
    }
}
