//! Greedy climb from an arbitrary cactus to the extremal chain.
//!
//! Each round lists every applicable instance of the five operations on the
//! current graph, located through its block-cut tree, and keeps those whose
//! side conditions hold and whose Kirchhoff index strictly grows. The first
//! operation kind (in the order I, II, III, IV, V) with such an instance
//! wins; among its instances the largest gain is applied, earliest on ties.

use serde::Serialize;

use super::{Claim, Hypothesis, OperationCertificate, OperationId};
use crate::blocks::{cactus_blocks, BlockCutTree, BlockKind};
use crate::canon::canonical_certificate_with_limit;
use crate::closed_forms::{op3_gain, op4_gain_lower_bound, op5_gain, CactusClassSpec};
use crate::constructions::build_extremal_chain;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{int, Rational};
use crate::resistance::{kirchhoff_index, resistance_matrix, ResistanceMatrix};

const MAX_STEPS: usize = 100_000;

#[derive(Clone, Debug, Serialize)]
pub struct Canonicalization {
    #[serde(with = "crate::io::as_graph6")]
    pub result: Graph,
    pub trace: Vec<OperationCertificate>,
    /// Whether `result` is isomorphic to the extremal chain of its class.
    pub reached_extremal: bool,
}

struct Move {
    op: OperationId,
    after: Graph,
    hypotheses: Vec<Hypothesis>,
    quantities: Vec<(&'static str, Rational)>,
}

struct State<'a> {
    g: &'a Graph,
    r: ResistanceMatrix,
    bct: BlockCutTree,
}

impl State<'_> {
    fn transmission_within(&self, w: usize, inside: &[bool]) -> Rational {
        self.r
            .row(w)
            .iter()
            .zip(inside)
            .filter(|(_, &keep)| keep)
            .map(|(x, _)| x)
            .sum()
    }

    fn max_within(&self, inside: &[bool]) -> Rational {
        let n = self.g.order();
        let mut best = int(0);
        for a in (0..n).filter(|&a| inside[a]) {
            for b in (a + 1..n).filter(|&b| inside[b]) {
                if *self.r.get(a, b) > best {
                    best = self.r.get(a, b).clone();
                }
            }
        }
        best
    }
}

fn mask(n: usize, excluded: &[usize]) -> Vec<bool> {
    let mut m = vec![true; n];
    for &v in excluded {
        m[v] = false;
    }
    m
}

/// Branch `Z` at a cut vertex `v` moves to the far end `x_2` of a longest
/// pair of the rest `X`, with `Y` trivial at `u = x_1`.
fn moves_i(st: &State<'_>) -> Result<Vec<Move>> {
    let (g, n) = (st.g, st.g.order());
    let mut out = Vec::new();
    for &v in &st.bct.cut_vertices {
        for comp in g.components_without(v) {
            let inside = mask(n, &comp);
            let longest = st.max_within(&inside);
            let kv = st.transmission_within(v, &inside);
            for x1 in (0..n).filter(|&a| inside[a]) {
                for x2 in (0..n).filter(|&b| inside[b] && b != x1 && b != v) {
                    if *st.r.get(x1, x2) != longest {
                        continue;
                    }
                    let kx2 = st.transmission_within(x2, &inside);
                    let hypotheses = vec![
                        Hypothesis::new("x1,x2 is a longest pair of X", true),
                        Hypothesis::new("R(x1,u) <= R(x1,v) <= R(x1,x2)", st.r.get(x1, v) <= st.r.get(x1, x2)),
                        Hypothesis::new("Kf_v(X) <= Kf_x2(X)", kv <= kx2),
                        Hypothesis::new("R(u,x2) > R(u,v)", st.r.get(x1, x2) > st.r.get(x1, v)),
                    ];
                    out.push(Move {
                        op: OperationId::I,
                        after: g.move_branch(&comp, v, x2)?,
                        hypotheses,
                        quantities: vec![("transmission_gap", kx2 - &kv)],
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Pendant paths `leaf .. x` (inner vertices of degree 2, `deg x >= 3`).
fn pendant_paths(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for leaf in (0..g.order()).filter(|&v| g.degree(v) == 1) {
        let mut path = vec![leaf];
        let (mut prev, mut cur) = (leaf, g.neighbors(leaf)[0]);
        while g.degree(cur) == 2 {
            path.push(cur);
            let next = g.neighbors(cur).iter().copied().find(|&w| w != prev).expect("degree two");
            prev = cur;
            cur = next;
        }
        if g.degree(cur) >= 3 {
            path.push(cur);
            out.push(path);
        }
    }
    out
}

/// A pendant path at `x` and a branch `G_1` (possibly trivial) at `u_2`:
/// `G_1` moves to the leaf, and the path also moves to `u_2` when
/// `Kf_{u_2}(X) > Kf_x(X)`.
fn moves_ii(st: &State<'_>) -> Result<Vec<Move>> {
    let (g, n) = (st.g, st.g.order());
    let mut out = Vec::new();
    for path in pendant_paths(g) {
        let (leaf, x) = (path[0], *path.last().expect("nonempty"));
        let tail = &path[..path.len() - 1];
        for u2 in (0..n).filter(|&w| w != x && !tail.contains(&w)) {
            let mut removed = vec![false; n];
            for &w in tail {
                removed[w] = true;
            }
            removed[u2] = true;
            let mut options: Vec<Vec<usize>> = vec![Vec::new()];
            options.extend(g.components(&removed).into_iter().filter(|c| !c.contains(&x)));
            for g1 in options {
                let mut excluded = tail.to_vec();
                excluded.extend(&g1);
                let inside = mask(n, &excluded);
                let x_order = inside.iter().filter(|&&b| b).count();
                let x_size = g.edges().iter().filter(|&&(a, b)| inside[a] && inside[b]).count();
                let has_cycle = x_size >= x_order;
                let longest = *st.r.get(u2, x) == st.max_within(&inside);
                let kx = st.transmission_within(x, &inside);
                let ku2 = st.transmission_within(u2, &inside);
                let moved = g.move_branch(&g1, u2, leaf)?;
                let use_g7 = kx >= ku2;
                let after = if use_g7 { moved } else { moved.move_branch(tail, x, u2)? };
                out.push(Move {
                    op: OperationId::II,
                    after,
                    hypotheses: vec![
                        Hypothesis::new("X contains a cycle", has_cycle),
                        Hypothesis::new("u_2,x is a longest pair of X", longest),
                    ],
                    quantities: vec![("chose_g7", int(use_g7 as i64))],
                });
            }
        }
    }
    Ok(out)
}

/// Cycle `b` rotated to start at `w`.
fn cycle_from(st: &State<'_>, b: usize, w: usize) -> Vec<usize> {
    let order = st.bct.blocks[b].cycle_order().expect("cycle block");
    let start = order.iter().position(|&v| v == w).expect("w on cycle");
    order[start..].iter().chain(&order[..start]).copied().collect()
}

/// `g` with the edges of cycle block `b` replaced by `new_edges`.
fn replace_block(st: &State<'_>, b: usize, new_edges: Vec<(usize, usize)>) -> Result<Graph> {
    let old = &st.bct.blocks[b].edges;
    let kept = st.g.edges().into_iter().filter(|e| old.binary_search(e).is_err());
    Graph::from_edges(st.g.order(), kept.chain(new_edges))
}

/// Path `w, l[0], .., l[k-4]` as edges.
fn tail_edges(w: usize, l: &[usize], k: usize) -> Vec<(usize, usize)> {
    let mut path = vec![w];
    path.extend(&l[..=k - 4]);
    path.windows(2).map(|p| (p[0], p[1])).collect()
}

fn long_cycles(st: &State<'_>) -> Vec<(usize, usize)> {
    st.bct
        .blocks
        .iter()
        .enumerate()
        .filter_map(|(b, blk)| match blk.kind {
            BlockKind::Cycle(k) if k > 3 => Some((b, k)),
            _ => None,
        })
        .collect()
}

/// A pendant cycle `C_k`, `k > 3`, becomes the triangle-with-tail gadget.
fn moves_iii(st: &State<'_>) -> Result<Vec<Move>> {
    let mut out = Vec::new();
    for (b, k) in long_cycles(st) {
        let cuts = st.bct.cut_vertices_of(b);
        if cuts.len() != 1 {
            continue;
        }
        let cyc = cycle_from(st, b, cuts[0]);
        let l = &cyc[1..];
        let mut edges = tail_edges(cyc[0], l, k);
        edges.extend([(l[k - 4], l[k - 3]), (l[k - 3], l[k - 2]), (l[k - 4], l[k - 2])]);
        out.push(Move {
            op: OperationId::III,
            after: replace_block(st, b, edges)?,
            hypotheses: vec![Hypothesis::new("k > 3", true)],
            quantities: vec![("expected_delta", op3_gain(k, st.g.order() - k + 1)?)],
        });
    }
    Ok(out)
}

/// A cycle `C_k`, `k > 3`, carrying branches at two antipodal vertices
/// `w` and `x`, becomes the gadget with `x` on its triangle.
fn moves_iv(st: &State<'_>) -> Result<Vec<Move>> {
    let mut out = Vec::new();
    for (b, k) in long_cycles(st) {
        let cuts = st.bct.cut_vertices_of(b);
        if cuts.len() != 2 {
            continue;
        }
        for (w, x) in [(cuts[0], cuts[1]), (cuts[1], cuts[0])] {
            let cyc = cycle_from(st, b, w);
            let d = cyc.iter().position(|&v| v == x).expect("x on cycle");
            if d.min(k - d) != k / 2 {
                continue;
            }
            let l: Vec<usize> = cyc[1..].iter().copied().filter(|&v| v != x).collect();
            let mut edges = tail_edges(w, &l, k);
            edges.extend([(l[k - 4], x), (x, l[k - 3]), (l[k - 4], l[k - 3])]);
            out.push(Move {
                op: OperationId::IV,
                after: replace_block(st, b, edges)?,
                hypotheses: vec![
                    Hypothesis::new("k > 3", true),
                    Hypothesis::new("x maximizes R(w, x) on the cycle", true),
                ],
                quantities: vec![("gap_lower_bound", op4_gain_lower_bound(k)?)],
            });
        }
    }
    Ok(out)
}

/// A triangle `{r_1, a, b}` with `deg b = 2`, `deg r_1 = 3` and a tail of
/// degree-2 vertices from `r_1` to `p`: the branches at `p` and `a` swap
/// when the one at `p` is smaller.
fn moves_v(st: &State<'_>) -> Result<Vec<Move>> {
    let (g, n) = (st.g, st.g.order());
    let mut out = Vec::new();
    for blk in &st.bct.blocks {
        if blk.kind != BlockKind::Cycle(3) {
            continue;
        }
        let tri = &blk.vertices;
        for &r1 in tri {
            if g.degree(r1) != 3 {
                continue;
            }
            let others: Vec<usize> = tri.iter().copied().filter(|&v| v != r1).collect();
            for (a, free) in [(others[0], others[1]), (others[1], others[0])] {
                if g.degree(free) != 2 {
                    continue;
                }
                let mut gadget = tri.clone();
                let (mut prev, mut cur) = (r1, g.neighbors(r1).iter().copied().find(|w| !tri.contains(w)).expect("tail"));
                while g.degree(cur) == 2 {
                    gadget.push(cur);
                    let next = g.neighbors(cur).iter().copied().find(|&w| w != prev).expect("degree two");
                    prev = cur;
                    cur = next;
                }
                let p = cur;
                let k = gadget.len() + 1;
                // vertices hanging at `root` outside the gadget, `root` excluded
                let side = |root: usize| -> Vec<usize> {
                    let mut removed = vec![false; n];
                    for &w in gadget.iter().chain([&p]) {
                        removed[w] = w != root;
                    }
                    let comp = g.components(&removed).into_iter().find(|c| c.contains(&root)).expect("root kept");
                    comp.into_iter().filter(|&w| w != root).collect()
                };
                let (g1, g2) = (side(p), side(a));
                let (m1, m2) = (g1.len() + 1, g2.len() + 1);
                if m1 >= m2 {
                    continue;
                }
                let after = g.move_branch(&g1, p, a)?.move_branch(&g2, a, p)?;
                out.push(Move {
                    op: OperationId::V,
                    after,
                    hypotheses: vec![
                        Hypothesis::new("k > 3", k > 3),
                        Hypothesis::new("|G_1| <= |G_2|", true),
                    ],
                    quantities: vec![("expected_delta", op5_gain(k, m1, m2)?)],
                });
            }
        }
    }
    Ok(out)
}

type Generator = fn(&State<'_>) -> Result<Vec<Move>>;

const GENERATORS: [Generator; 5] = [moves_i, moves_ii, moves_iii, moves_iv, moves_v];

fn best_move(g: &Graph) -> Result<Option<OperationCertificate>> {
    let st = State {
        g,
        r: resistance_matrix(g)?,
        bct: cactus_blocks(g)?,
    };
    let kf = st.r.kirchhoff_index();
    for generate in GENERATORS {
        let mut best: Option<(Rational, Move)> = None;
        for mv in generate(&st)? {
            if !mv.hypotheses.iter().all(|h| h.holds) {
                continue;
            }
            let delta = kirchhoff_index(&mv.after)? - &kf;
            if delta > int(0) && best.as_ref().is_none_or(|(d, _)| delta > *d) {
                best = Some((delta, mv));
            }
        }
        if let Some((_, mv)) = best {
            let cert = OperationCertificate::new(mv.op, g.clone(), mv.after, mv.hypotheses, Claim::Increase)?;
            return Ok(Some(
                mv.quantities.into_iter().fold(cert, |c, (name, value)| c.with_quantity(name, value)),
            ));
        }
    }
    Ok(None)
}

/// Applies Kf-increasing operations until none applies. Requires a cactus
/// with at least 5 vertices and at least 2 cycles.
pub fn canonicalize_to_extremal(g: &Graph) -> Result<Canonicalization> {
    let t = cactus_blocks(g)?.cycle_count();
    let n = g.order();
    if n < 5 || t < 2 {
        return Err(Error::InvalidParameter(format!("need n >= 5 and t >= 2, got n = {n}, t = {t}")));
    }
    let mut current = g.clone();
    let mut trace = Vec::new();
    while let Some(cert) = best_move(&current)? {
        if trace.len() >= MAX_STEPS {
            return Err(Error::Precondition("canonicalization did not terminate".into()));
        }
        current = cert.after.clone();
        trace.push(cert);
    }
    let target = build_extremal_chain(CactusClassSpec::new(n, t)?)?.graph;
    let reached_extremal =
        canonical_certificate_with_limit(&current, n)? == canonical_certificate_with_limit(&target, n)?;
    Ok(Canonicalization {
        result: current,
        trace,
        reached_extremal,
    })
}
