//! The operations on explicit parts: each takes the pieces named in the
//! construction (`X`, `Y`, `Z`, `G_1`, `G_2`) with their attachment vertices
//! and builds the graphs before and after.

use super::{Claim, Hypothesis, OperationCertificate, OperationId};
use crate::closed_forms::{op3_gain, op4_gain_lower_bound, op5_gain};
use crate::constructions::{build_cycle, build_gadget_g11, build_path, Anchored, RootedGraph};
use crate::error::{Error, Result};
use crate::graph::{coalesce, Graph};
use crate::rational::int;
use crate::resistance::{resistance_matrix, vertex_transmission, ResistanceMatrix};

/// Which inequality of the branch-moving operation to exercise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpIPart {
    /// `G_3 -> G_4`: `Z` moves from `v` to `x_2`.
    First,
    /// `G_4 -> G_5`: `Y` moves from `u` to `x_1`.
    Second,
}

fn glue(base: &Graph, at: usize, part: Anchored<'_>) -> Result<Graph> {
    Ok(coalesce(base, at, part.graph, part.at)?.graph)
}

/// `Y` glued at `y_at` and `Z` glued at `z_at`, both vertices of `X`.
fn attach_both(x: &Graph, y_at: usize, y: Anchored<'_>, z_at: usize, z: Anchored<'_>) -> Result<Graph> {
    glue(&glue(x, y_at, y)?, z_at, z)
}

struct OpIHypotheses {
    list: Vec<Hypothesis>,
    strict: bool,
}

#[allow(clippy::too_many_arguments)]
fn op_i_hypotheses(
    r: &ResistanceMatrix,
    part: OpIPart,
    u: usize,
    v: usize,
    x1: usize,
    x2: usize,
    y_order: usize,
    z_order: usize,
) -> OpIHypotheses {
    let rr = |a, b| r.get(a, b).clone();
    let mut list = vec![
        Hypothesis::new("x1,x2 is a longest pair of X", rr(x1, x2) == r.max_resistance()),
        Hypothesis::new("R(x1,u) <= R(x1,v) <= R(x1,x2)", rr(x1, u) <= rr(x1, v) && rr(x1, v) <= rr(x1, x2)),
    ];
    let strict = match part {
        OpIPart::First => {
            let (kv, kx2) = (r.transmission(v), r.transmission(x2));
            list.push(Hypothesis::new("Kf_v(X) <= Kf_x2(X)", kv <= kx2));
            list.push(Hypothesis::new("R(u,x2) > R(u,v)", rr(u, x2) > rr(u, v)));
            z_order >= 2 && (y_order >= 2 || kv < kx2)
        }
        OpIPart::Second => {
            let (ku, kx1) = (r.transmission(u), r.transmission(x1));
            list.push(Hypothesis::new("Kf_u(X) <= Kf_x1(X)", ku <= kx1));
            y_order >= 2 && (ku < kx1 || (z_order >= 2 && rr(u, x2) < rr(x1, x2)))
        }
    };
    OpIHypotheses { list, strict }
}

/// Moves `Z` from `v` to `x_2` (part `First`) or, with `Z` already at `x_2`,
/// moves `Y` from `u` to `x_1` (part `Second`). `x` must carry roots `u`,
/// `v`, `x1`, `x2`. When the hypotheses fail for `(x1, x2)` the mirrored
/// orientation `(x2, x1)` is tried; if both fail the certificate reports
/// the original orientation and claims nothing.
pub fn operation_i(x: &RootedGraph, y: Anchored<'_>, z: Anchored<'_>, part: OpIPart) -> Result<OperationCertificate> {
    let (u, v) = (x.root("u")?, x.root("v")?);
    let (x1, x2) = (x.root("x1")?, x.root("x2")?);
    y.graph.check_vertex(y.at)?;
    z.graph.check_vertex(z.at)?;
    let xg = &x.graph;
    let r = resistance_matrix(xg)?;
    let (yo, zo) = (y.order(), z.order());

    let mut chosen = (x1, x2, op_i_hypotheses(&r, part, u, v, x1, x2, yo, zo));
    if !chosen.2.list.iter().all(|h| h.holds) {
        let mirrored = op_i_hypotheses(&r, part, u, v, x2, x1, yo, zo);
        if mirrored.list.iter().all(|h| h.holds) {
            chosen = (x2, x1, mirrored);
        }
    }
    let (x1, x2, hyp) = chosen;
    let (before, after) = match part {
        OpIPart::First => (attach_both(xg, u, y, v, z)?, attach_both(xg, u, y, x2, z)?),
        OpIPart::Second => (attach_both(xg, u, y, x2, z)?, attach_both(xg, x1, y, x2, z)?),
    };
    let claim = if hyp.strict { Claim::Increase } else { Claim::NonDecrease };
    let (from, to) = match part {
        OpIPart::First => (v, x2),
        OpIPart::Second => (u, x1),
    };
    let cert = OperationCertificate::new(OperationId::I, before, after, hyp.list, claim)?;
    Ok(cert.with_quantity("transmission_gap", r.transmission(to) - r.transmission(from)))
}

/// Builds `G_6 = (M, u_2) ⊕ G_1` with `M = (X, x) ⊕ (P_s, r_1)` and returns
/// the step to `G_7 = (M, r_s) ⊕ G_1` when `Kf_x(X) >= Kf_{u_2}(X)`, else to
/// `G_8 = (N, r_s) ⊕ G_1` with `N = (X, u_2) ⊕ (P_s, r_1)`.
pub fn operation_ii(x: &RootedGraph, s: usize, g1: Anchored<'_>) -> Result<OperationCertificate> {
    let (xv, u2) = (x.root("x")?, x.root("u_2")?);
    let xg = &x.graph;
    g1.graph.check_vertex(g1.at)?;
    if s < 2 {
        return Err(Error::InvalidParameter(format!("pendant path order must be at least 2, got {s}")));
    }
    if xg.cyclomatic_number() == 0 {
        return Err(Error::Precondition("X must contain a cycle".into()));
    }
    let r = resistance_matrix(xg)?;
    let (kx, ku2) = (r.transmission(xv), r.transmission(u2));
    let path = build_path(s)?;

    let m = coalesce(xg, xv, &path.graph, 0)?;
    let m_rs = m.right_map[s - 1];
    let g6 = glue(&m.graph, u2, g1)?;
    let use_g7 = kx >= ku2;
    let after = if use_g7 {
        glue(&m.graph, m_rs, g1)?
    } else {
        let n = coalesce(xg, u2, &path.graph, 0)?;
        glue(&n.graph, n.right_map[s - 1], g1)?
    };

    let hypotheses = vec![
        Hypothesis::new("X contains a cycle", true),
        Hypothesis::new("u_2,x is a longest pair of X", *r.get(u2, xv) == r.max_resistance()),
    ];
    let strict = g1.order() >= 2 || (!use_g7 && ku2 > kx);
    let claim = if strict { Claim::Increase } else { Claim::NonDecrease };

    let rm = resistance_matrix(&m.graph)?;
    let identity_lhs = rm.transmission(m_rs) - rm.transmission(u2);
    let identity_rhs =
        int(s as i64 - 1) * (int(xg.order() as i64 - 1) - r.get(u2, xv)) + &kx - &ku2;
    let cert = OperationCertificate::new(OperationId::II, g6, after, hypotheses, claim)?;
    Ok(cert
        .with_quantity("chose_g7", int(use_g7 as i64))
        .with_quantity("kf_rs_minus_kf_u2_of_M", identity_lhs)
        .with_quantity("identity_rhs", identity_rhs))
}

fn check_k(k: usize) -> Result<()> {
    if k <= 3 {
        return Err(Error::InvalidParameter(format!("cycle length must exceed 3, got {k}")));
    }
    Ok(())
}

/// `G^{**} = (G_1, u_1) ⊕ (C_k, w)` and where `x` lands in it.
fn g_star_star(g1: Anchored<'_>, k: usize) -> Result<(Graph, usize)> {
    let cycle = build_cycle(k)?;
    let c = coalesce(g1.graph, g1.at, &cycle.graph, cycle.root("w")?)?;
    let x = c.right_map[cycle.root("x")?];
    Ok((c.graph, x))
}

/// Replaces the pendant `C_k` of `G^{**}` by the triangle-with-tail gadget.
pub fn operation_iii(g1: Anchored<'_>, k: usize) -> Result<OperationCertificate> {
    check_k(k)?;
    g1.graph.check_vertex(g1.at)?;
    let (gss, _) = g_star_star(g1, k)?;
    let g11 = build_gadget_g11(k, g1)?;
    let hypotheses = vec![Hypothesis::new("k > 3", true)];
    let cert = OperationCertificate::new(OperationId::III, gss, g11.graph, hypotheses, Claim::Increase)?;
    Ok(cert.with_quantity("expected_delta", op3_gain(k, g1.order())?))
}

/// From `G_{12} = (G^{**}, x) ⊕ G_2` to `G_{13} = (G_{11}, u_2) ⊕ G_2`.
pub fn operation_iv(g1: Anchored<'_>, g2: Anchored<'_>, k: usize) -> Result<OperationCertificate> {
    check_k(k)?;
    g1.graph.check_vertex(g1.at)?;
    g2.graph.check_vertex(g2.at)?;
    let (gss, x) = g_star_star(g1, k)?;
    let g11 = build_gadget_g11(k, g1)?;
    let u2 = g11.root("u_2")?;
    let g12 = glue(&gss, x, g2)?;
    let g13 = glue(&g11.graph, u2, g2)?;
    let gap = vertex_transmission(&g11.graph, u2)? - vertex_transmission(&gss, x)?;
    let hypotheses = vec![Hypothesis::new("k > 3", true)];
    let cert = OperationCertificate::new(OperationId::IV, g12, g13, hypotheses, Claim::Increase)?;
    Ok(cert
        .with_quantity("transmission_gap", gap)
        .with_quantity("gap_lower_bound", op4_gain_lower_bound(k)?))
}

/// From `G_{13}` (`G_1` at the free end of the tail, `G_2` at a degree-2
/// triangle vertex) to `G_{14}` with the two attachments exchanged.
/// Declines when `|G_1| > |G_2|`, where the exchange would lower `Kf`.
pub fn operation_v(g1: Anchored<'_>, g2: Anchored<'_>, k: usize) -> Result<OperationCertificate> {
    check_k(k)?;
    g1.graph.check_vertex(g1.at)?;
    g2.graph.check_vertex(g2.at)?;
    if g1.order() > g2.order() {
        return Err(Error::Precondition(format!(
            "|G_1| = {} exceeds |G_2| = {}; swap the roles",
            g1.order(),
            g2.order()
        )));
    }
    let g11 = build_gadget_g11(k, g1)?;
    let g13 = glue(&g11.graph, g11.root("u_2")?, g2)?;
    let g11_swapped = build_gadget_g11(k, g2)?;
    let g14 = glue(&g11_swapped.graph, g11_swapped.root("u_2")?, g1)?;
    let claim = if g1.order() == g2.order() { Claim::Unchanged } else { Claim::Increase };
    let hypotheses = vec![
        Hypothesis::new("k > 3", true),
        Hypothesis::new("|G_1| <= |G_2|", true),
    ];
    let cert = OperationCertificate::new(OperationId::V, g13, g14, hypotheses, claim)?;
    Ok(cert.with_quantity("expected_delta", op5_gain(k, g1.order(), g2.order())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_certificate;
    use crate::rational::{frac, Rational};
    use num_traits::Zero;

    fn rooted(g: Graph, roots: &[(&str, usize)]) -> RootedGraph {
        roots
            .iter()
            .fold(RootedGraph::new(g), |rg, &(k, v)| rg.with_root(k, v).unwrap())
    }

    fn path(n: usize) -> Graph {
        build_path(n).unwrap().graph
    }

    #[test]
    fn op_i_moves_branch_to_end() {
        let x = rooted(path(5), &[("u", 2), ("v", 2), ("x1", 0), ("x2", 4)]);
        let p2 = path(2);
        let cert = operation_i(&x, Anchored::new(&p2, 0), Anchored::new(&p2, 0), OpIPart::First).unwrap();
        assert!(cert.hypotheses_hold());
        assert_eq!(cert.claim, Claim::Increase);
        assert!(cert.claim_verified());
        assert_eq!(cert.before.order(), cert.after.order());
    }

    #[test]
    fn op_i_trivial_z() {
        let x = rooted(path(5), &[("u", 1), ("v", 2), ("x1", 0), ("x2", 4)]);
        let (k1, p2) = (Graph::singleton(), path(2));
        let cert = operation_i(&x, Anchored::new(&p2, 0), Anchored::new(&k1, 0), OpIPart::First).unwrap();
        assert!(cert.delta.is_zero());
        assert_eq!(canonical_certificate(&cert.before).unwrap(), canonical_certificate(&cert.after).unwrap());
        assert_eq!(cert.claim, Claim::NonDecrease);
    }

    #[test]
    fn op_i_mirrors_orientation() {
        // u lies beyond v as seen from x1: only the mirrored roles qualify
        let x = rooted(path(5), &[("u", 3), ("v", 1), ("x1", 0), ("x2", 4)]);
        let p3 = path(3);
        let cert = operation_i(&x, Anchored::new(&p3, 0), Anchored::new(&p3, 0), OpIPart::First).unwrap();
        assert!(cert.hypotheses_hold());
        assert!(cert.claim_verified());
    }

    #[test]
    fn op_i_second_part() {
        let x = rooted(path(6), &[("u", 2), ("v", 3), ("x1", 0), ("x2", 5)]);
        let (c3, p2) = (build_cycle(3).unwrap().graph, path(2));
        let cert = operation_i(&x, Anchored::new(&c3, 0), Anchored::new(&p2, 0), OpIPart::Second).unwrap();
        assert!(cert.hypotheses_hold());
        assert!(cert.claim_verified());
    }

    #[test]
    fn op_ii_examples() {
        let x = rooted(build_cycle(3).unwrap().graph, &[("x", 0), ("u_2", 1)]);
        let p2 = path(2);
        let cert = operation_ii(&x, 3, Anchored::new(&p2, 0)).unwrap();
        assert!(cert.hypotheses_hold());
        assert!(cert.claim_verified());
        assert_eq!(cert.quantity("kf_rs_minus_kf_u2_of_M"), cert.quantity("identity_rhs"));

        let k1 = Graph::singleton();
        let cert = operation_ii(&x, 2, Anchored::new(&k1, 0)).unwrap();
        assert!(cert.delta >= Rational::zero());
        assert!(cert.consistent());

        assert!(operation_ii(&rooted(path(4), &[("x", 0), ("u_2", 3)]), 3, Anchored::new(&p2, 0)).is_err());
        assert!(operation_ii(&x, 1, Anchored::new(&p2, 0)).is_err());
    }

    #[test]
    fn op_iii_gains() {
        let k1 = Graph::singleton();
        let cert = operation_iii(Anchored::new(&k1, 0), 4).unwrap();
        assert_eq!(cert.delta, frac(4, 3));
        let p2 = path(2);
        let cert = operation_iii(Anchored::new(&p2, 0), 4).unwrap();
        assert_eq!(cert.delta, frac(19, 6));
        assert_eq!(cert.quantity("expected_delta"), Some(&cert.delta));
        assert!(operation_iii(Anchored::new(&p2, 0), 3).is_err());
    }

    #[test]
    fn op_iv_examples() {
        let p2 = path(2);
        let cert = operation_iv(Anchored::new(&p2, 0), Anchored::new(&p2, 0), 4).unwrap();
        assert!(cert.claim_verified());
        let k1 = Graph::singleton();
        let cert = operation_iv(Anchored::new(&k1, 0), Anchored::new(&p2, 1), 5).unwrap();
        assert!(cert.claim_verified());
        assert_eq!(cert.quantity("transmission_gap"), cert.quantity("gap_lower_bound"));
    }

    #[test]
    fn op_v_examples() {
        let (k1, p3) = (Graph::singleton(), path(3));
        let cert = operation_v(Anchored::new(&k1, 0), Anchored::new(&p3, 0), 4).unwrap();
        assert_eq!(cert.delta, frac(8, 3));
        let cert = operation_v(Anchored::new(&p3, 1), Anchored::new(&p3, 0), 6).unwrap();
        assert!(cert.delta.is_zero());
        assert_eq!(cert.claim, Claim::Unchanged);
        assert!(operation_v(Anchored::new(&p3, 0), Anchored::new(&k1, 0), 4).is_err());
    }
}
