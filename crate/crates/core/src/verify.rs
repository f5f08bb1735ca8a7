//! Verification runs: closed forms against the resistance engine, seeded
//! randomized suites for the structural inequalities, and the exhaustive
//! extremal table.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::canon::canonical_certificate;
use crate::closed_forms::{
    kf_cycle, kf_cycle_transmission, kf_extremal_chain, kf_f_and_transmission, kf_gadget_g10, kf_path,
    kf_path_end_transmission, kf_triangle_chain, kf_triangle_chain_transmission, op3_gain, op5_gain, CactusClassSpec,
};
use crate::constructions::{
    build_cycle, build_extremal_chain, build_gadget_g10, build_minimal_star, build_path, build_triangle_chain,
    compose_kf, Anchored, RootedGraph,
};
use crate::enumeration::{extremal_scan, random_cactus, random_connected_graph, seeded_rng};
use crate::error::{Error, Result};
use crate::graph::{coalesce, Graph};
use crate::io::to_graph6;
use crate::rational::{format, int, Rational};
use crate::resistance::{effective_resistance_laplacian, resistance_matrix, resistance_matrix_laplacian};
use crate::transformations::{
    operation_i, operation_ii, operation_iii, operation_iv, operation_v, Claim, OpIPart, OperationCertificate,
};

/// One closed-form value next to the value measured on the built graph.
#[derive(Clone, Debug, Serialize)]
pub struct FormulaRow {
    pub id: String,
    pub params: String,
    #[serde(with = "crate::rational::as_string")]
    pub closed_form: Rational,
    #[serde(with = "crate::rational::as_string")]
    pub oracle: Rational,
    pub equal: bool,
}

fn row(id: &str, params: String, closed_form: Rational, oracle: Rational) -> FormulaRow {
    FormulaRow {
        id: id.to_string(),
        equal: closed_form == oracle,
        params,
        closed_form,
        oracle,
    }
}

/// Every closed form over `k <= kmax`, `s <= smax` and orders `<= nmax`.
/// Oracle values come from the grounded-Laplacian solver.
pub fn formula_sweep(kmax: usize, nmax: usize, smax: usize) -> Result<Vec<FormulaRow>> {
    let lap = |g: &Graph| -> Result<(Rational, Vec<Rational>)> {
        let r = resistance_matrix_laplacian(g)?;
        let tr = (0..g.order()).map(|v| r.transmission(v)).collect();
        Ok((r.kirchhoff_index(), tr))
    };
    let mut rows = Vec::new();
    for m in 1..=nmax {
        let (kf, tr) = lap(&build_path(m)?.graph)?;
        rows.push(row("path_kf", format!("m={m}"), kf_path(m), kf));
        rows.push(row("path_end_transmission", format!("m={m}"), kf_path_end_transmission(m), tr[0].clone()));
    }
    for l in 3..=nmax {
        let (kf, tr) = lap(&build_cycle(l)?.graph)?;
        rows.push(row("cycle_kf", format!("l={l}"), kf_cycle(l)?, kf));
        rows.push(row("cycle_transmission", format!("l={l}"), kf_cycle_transmission(l)?, tr[0].clone()));
    }
    for k in 0..=kmax {
        let q = build_triangle_chain(k)?;
        let (kf, tr) = lap(&q.graph)?;
        rows.push(row("triangle_chain_kf", format!("k={k}"), kf_triangle_chain(k), kf));
        rows.push(row(
            "triangle_chain_transmission",
            format!("k={k}"),
            kf_triangle_chain_transmission(k),
            tr[q.root("u")?].clone(),
        ));
    }
    for k in 4..=nmax {
        let g = build_gadget_g10(k)?;
        let (kf, tr) = lap(&g.graph)?;
        let want = kf_gadget_g10(k)?;
        rows.push(row("gadget_kf", format!("k={k}"), want.kf, kf));
        rows.push(row(
            "gadget_tail_end_transmission",
            format!("k={k}"),
            want.tail_end_transmission,
            tr[g.root("r_{k-2}")?].clone(),
        ));
        rows.push(row(
            "gadget_triangle_transmission",
            format!("k={k}"),
            want.triangle_transmission,
            tr[g.root("u_2")?].clone(),
        ));
    }
    for k in 0..=kmax {
        for s in 1..=smax {
            let q = build_triangle_chain(k)?;
            let f = coalesce(&q.graph, q.root("u")?, &build_path(s)?.graph, 0)?;
            let (kf, tr) = lap(&f.graph)?;
            let (want_kf, want_tr) = kf_f_and_transmission(k, s)?;
            rows.push(row("chain_with_tail_kf", format!("k={k};s={s}"), want_kf, kf));
            rows.push(row(
                "chain_with_tail_transmission",
                format!("k={k};s={s}"),
                want_tr,
                tr[f.right_map[s - 1]].clone(),
            ));
        }
    }
    for spec in CactusClassSpec::all_with_order(1..=nmax) {
        let (kf, _) = lap(&build_extremal_chain(spec)?.graph)?;
        rows.push(row("extremal_chain_kf", format!("n={};t={}", spec.n(), spec.t()), kf_extremal_chain(spec), kf));
    }
    for k in 4..=kmax.max(4) {
        for m1 in 1..=5 {
            let g1 = build_path(m1)?.graph;
            let cert = operation_iii(Anchored::new(&g1, 0), k)?;
            rows.push(row("op3_gain", format!("k={k};m1={m1}"), op3_gain(k, m1)?, cert.delta));
            for m2 in m1..=5 {
                let g2 = build_path(m2)?.graph;
                let cert = operation_v(Anchored::new(&g1, 0), Anchored::new(&g2, 0), k)?;
                rows.push(row("op5_gain", format!("k={k};m1={m1};m2={m2}"), op5_gain(k, m1, m2)?, cert.delta));
            }
        }
    }
    Ok(rows)
}

pub fn formula_csv(rows: &[FormulaRow]) -> String {
    let mut out = String::from("id,params,closed_form,oracle,equal\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.id,
            r.params,
            format(&r.closed_form),
            format(&r.oracle),
            r.equal
        ));
    }
    out
}

/// The randomized suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Resistance through a cut vertex is the sum of the two legs.
    Additivity,
    /// Kirchhoff index of a coalescence from the parts.
    Coalescence,
    /// Moving a branch to the far end of a longest path.
    BranchToEnd,
    /// Moving the second branch to the near end of a longest path.
    BranchToNearEnd,
    /// A pendant path becomes internal.
    PendantPath,
    /// A pendant long cycle becomes the triangle-with-tail gadget.
    PendantCycle,
    /// A long cycle between two branches becomes the gadget.
    MiddleCycle,
    /// The two attachments of the gadget swap.
    GadgetSwap,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Additivity,
        Suite::Coalescence,
        Suite::BranchToEnd,
        Suite::BranchToNearEnd,
        Suite::PendantPath,
        Suite::PendantCycle,
        Suite::MiddleCycle,
        Suite::GadgetSwap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Additivity => "additivity",
            Suite::Coalescence => "coalescence",
            Suite::BranchToEnd => "branch-to-end",
            Suite::BranchToNearEnd => "branch-to-near-end",
            Suite::PendantPath => "pendant-path",
            Suite::PendantCycle => "pendant-cycle",
            Suite::MiddleCycle => "middle-cycle",
            Suite::GadgetSwap => "gadget-swap",
        }
    }

    /// Resolves a command-line name. Besides [`Suite::name`], the numeric
    /// identifiers of the command-line interface are accepted; `2.3`
    /// selects both branch-moving suites.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        let one = |x| Ok(vec![x]);
        match s {
            "2.1" => one(Suite::Additivity),
            "2.2" => one(Suite::Coalescence),
            "2.3" => Ok(vec![Suite::BranchToEnd, Suite::BranchToNearEnd]),
            "2.3(1)" | "2.3.1" => one(Suite::BranchToEnd),
            "2.3(2)" | "2.3.2" => one(Suite::BranchToNearEnd),
            "2.4" => one(Suite::PendantPath),
            "2.6" => one(Suite::PendantCycle),
            "2.7" => one(Suite::MiddleCycle),
            "2.8" => one(Suite::GadgetSwap),
            "all" => Ok(Suite::ALL.to_vec()),
            other => Ok(vec![other.parse()?]),
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialOutcome {
    pub index: usize,
    pub holds: bool,
    /// Set when the two sides were equal.
    pub equality: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<OperationCertificate>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub trials: usize,
    pub passed: usize,
    pub failed: usize,
    pub equality_cases: usize,
    /// Sampled instances discarded because a side condition failed.
    pub rejected: usize,
    /// Branch-to-end only: instances meeting the resistance orderings and
    /// the transmission condition but not `R(u,x2) > R(u,v)`.
    pub weak_hypothesis_instances: usize,
    /// Among those, instances where Kf did not increase.
    pub weak_hypothesis_counterexamples: Vec<OperationCertificate>,
    pub outcomes: Vec<TrialOutcome>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.passed == self.trials
    }
}

const ATTEMPTS_PER_TRIAL: usize = 2_000;
const KEPT_COUNTEREXAMPLES: usize = 5;

fn random_part(rng: &mut ChaCha8Rng, min_order: usize, max_order: usize) -> Result<(Graph, usize)> {
    let n = rng.gen_range(min_order..=max_order);
    let t = rng.gen_range(0..=(n - 1) / 2);
    let g = random_cactus(n, t, rng)?;
    let at = rng.gen_range(0..n);
    Ok((g, at))
}

fn random_cyclic_part(rng: &mut ChaCha8Rng, min_order: usize, max_order: usize) -> Result<Graph> {
    let n = rng.gen_range(min_order.max(3)..=max_order);
    let t = rng.gen_range(1..=(n - 1) / 2);
    random_cactus(n, t, rng)
}

fn pick<T: Copy>(rng: &mut ChaCha8Rng, items: &[T]) -> T {
    items[rng.gen_range(0..items.len())]
}

struct Runner {
    suite: Suite,
    seed: u64,
    rng: ChaCha8Rng,
    report: SuiteReport,
}

impl Runner {
    fn new(suite: Suite, seed: u64) -> Self {
        Runner {
            suite,
            seed,
            rng: seeded_rng(seed),
            report: SuiteReport {
                suite,
                seed,
                trials: 0,
                passed: 0,
                failed: 0,
                equality_cases: 0,
                rejected: 0,
                weak_hypothesis_instances: 0,
                weak_hypothesis_counterexamples: Vec::new(),
                outcomes: Vec::new(),
            },
        }
    }

    fn record(&mut self, outcome: TrialOutcome) {
        self.report.trials += 1;
        if outcome.holds {
            self.report.passed += 1;
        } else {
            self.report.failed += 1;
        }
        if outcome.equality {
            self.report.equality_cases += 1;
        }
        self.report.outcomes.push(outcome);
    }

    fn exhausted(&self) -> Error {
        Error::Precondition(format!(
            "suite {} (seed {}) found no qualifying instance after {ATTEMPTS_PER_TRIAL} attempts",
            self.suite, self.seed
        ))
    }

    fn certificate_outcome(&self, index: usize, cert: OperationCertificate, equality_expected: bool) -> TrialOutcome {
        let equality = cert.delta == int(0);
        let holds = cert.claim_verified() && equality == equality_expected;
        TrialOutcome {
            index,
            holds,
            equality,
            lhs: Some(format(&cert.kf_before)),
            rhs: Some(format(&cert.kf_after)),
            instance: None,
            certificate: Some(cert),
        }
    }
}

fn equation(index: usize, lhs: Rational, rhs: Rational, instance: String) -> TrialOutcome {
    TrialOutcome {
        index,
        holds: lhs == rhs,
        equality: lhs == rhs,
        lhs: Some(format(&lhs)),
        rhs: Some(format(&rhs)),
        instance: Some(instance),
        certificate: None,
    }
}

fn additivity_trial(run: &mut Runner, index: usize) -> Result<TrialOutcome> {
    for _ in 0..ATTEMPTS_PER_TRIAL {
        let n = run.rng.gen_range(3..=20);
        let t = run.rng.gen_range(0..=(n - 1) / 2);
        let g = random_cactus(n, t, &mut run.rng)?;
        let cuts: Vec<usize> = (0..n).filter(|&v| g.components_without(v).len() > 1).collect();
        if cuts.is_empty() {
            run.report.rejected += 1;
            continue;
        }
        let x = pick(&mut run.rng, &cuts);
        let comps = g.components_without(x);
        let i = run.rng.gen_range(0..comps.len());
        let mut j = run.rng.gen_range(0..comps.len() - 1);
        if j >= i {
            j += 1;
        }
        let a = pick(&mut run.rng, &comps[i]);
        let b = pick(&mut run.rng, &comps[j]);
        let whole = effective_resistance_laplacian(&g, a, b)?;
        let legs = effective_resistance_laplacian(&g, a, x)? + effective_resistance_laplacian(&g, x, b)?;
        return Ok(equation(index, whole, legs, format!("{} a={a} x={x} b={b}", to_graph6(&g))));
    }
    Err(run.exhausted())
}

fn coalescence_trial(run: &mut Runner, index: usize) -> Result<TrialOutcome> {
    let part = |rng: &mut ChaCha8Rng| -> Result<(Graph, usize)> {
        let n = rng.gen_range(1..=10);
        let g = if rng.gen_bool(0.5) {
            random_cactus(n, rng.gen_range(0..=(n - 1) / 2), rng)?
        } else {
            random_connected_graph(n, 0.3, rng)?
        };
        let at = rng.gen_range(0..n);
        Ok((g, at))
    };
    let (g1, x1) = part(&mut run.rng)?;
    let (g2, x2) = part(&mut run.rng)?;
    let formula = compose_kf(Anchored::new(&g1, x1), Anchored::new(&g2, x2))?;
    let built = resistance_matrix_laplacian(&coalesce(&g1, x1, &g2, x2)?.graph)?.kirchhoff_index();
    Ok(equation(
        index,
        formula,
        built,
        format!("{} x1={x1} {} x2={x2}", to_graph6(&g1), to_graph6(&g2)),
    ))
}

fn branch_trial(run: &mut Runner, index: usize, part: OpIPart) -> Result<TrialOutcome> {
    for _ in 0..ATTEMPTS_PER_TRIAL {
        let n = run.rng.gen_range(3..=12);
        let t = run.rng.gen_range(0..=(n - 1) / 2);
        let x = random_cactus(n, t, &mut run.rng)?;
        let r = resistance_matrix(&x)?;
        let (mut x1, mut x2) = pick(&mut run.rng, &r.maximizing_pairs());
        if run.rng.gen_bool(0.5) {
            std::mem::swap(&mut x1, &mut x2);
        }
        let (u, v) = (run.rng.gen_range(0..n), run.rng.gen_range(0..n));
        let ordered = r.get(x1, u) <= r.get(x1, v) && r.get(x1, v) <= r.get(x1, x2);
        let transmission_ok = match part {
            OpIPart::First => r.transmission(v) <= r.transmission(x2),
            OpIPart::Second => r.transmission(u) <= r.transmission(x1),
        };
        if !ordered || !transmission_ok {
            run.report.rejected += 1;
            continue;
        }
        let (y, ya) = random_part(&mut run.rng, 2, 6)?;
        let (z, zb) = random_part(&mut run.rng, 2, 6)?;
        let rooted = RootedGraph::new(x)
            .with_root("u", u)?
            .with_root("v", v)?
            .with_root("x1", x1)?
            .with_root("x2", x2)?;
        let cert = operation_i(&rooted, Anchored::new(&y, ya), Anchored::new(&z, zb), part)?;
        if cert.hypotheses_hold() && cert.claim != Claim::Increase {
            // degenerate placement, e.g. `u = x1`
            run.report.rejected += 1;
            continue;
        }
        if !cert.hypotheses_hold() {
            if part == OpIPart::First && r.get(u, x2) <= r.get(u, v) {
                // meets the orderings and the transmission condition only
                run.report.weak_hypothesis_instances += 1;
                if cert.delta <= int(0) && run.report.weak_hypothesis_counterexamples.len() < KEPT_COUNTEREXAMPLES {
                    run.report.weak_hypothesis_counterexamples.push(cert);
                }
            }
            run.report.rejected += 1;
            continue;
        }
        return Ok(run.certificate_outcome(index, cert, false));
    }
    Err(run.exhausted())
}

fn pendant_path_trial(run: &mut Runner, index: usize) -> Result<TrialOutcome> {
    let x = random_cyclic_part(&mut run.rng, 3, 10)?;
    let pairs = resistance_matrix(&x)?.maximizing_pairs();
    let (mut a, mut b) = pick(&mut run.rng, &pairs);
    if run.rng.gen_bool(0.5) {
        std::mem::swap(&mut a, &mut b);
    }
    let rooted = RootedGraph::new(x).with_root("x", a)?.with_root("u_2", b)?;
    let s = run.rng.gen_range(2..=6);
    let (g1, at) = random_part(&mut run.rng, 2, 6)?;
    let cert = operation_ii(&rooted, s, Anchored::new(&g1, at))?;
    let identity = cert.quantity("kf_rs_minus_kf_u2_of_M") == cert.quantity("identity_rhs");
    let mut outcome = run.certificate_outcome(index, cert, false);
    outcome.holds &= identity;
    Ok(outcome)
}

fn pendant_cycle_trial(run: &mut Runner, index: usize) -> Result<TrialOutcome> {
    let (g1, at) = random_part(&mut run.rng, 1, 8)?;
    let k = run.rng.gen_range(4..=9);
    let cert = operation_iii(Anchored::new(&g1, at), k)?;
    let exact = cert.quantity("expected_delta") == Some(&cert.delta);
    let mut outcome = run.certificate_outcome(index, cert, false);
    outcome.holds &= exact;
    Ok(outcome)
}

fn middle_cycle_trial(run: &mut Runner, index: usize) -> Result<TrialOutcome> {
    let (g1, a1) = random_part(&mut run.rng, 1, 7)?;
    let (g2, a2) = random_part(&mut run.rng, 1, 7)?;
    let k = run.rng.gen_range(4..=9);
    let cert = operation_iv(Anchored::new(&g1, a1), Anchored::new(&g2, a2), k)?;
    let gap = cert.quantity("transmission_gap").cloned().unwrap_or_default();
    let bound = cert.quantity("gap_lower_bound").cloned().unwrap_or_default();
    let scale = int(g2.order() as i64 - 1);
    let chain = gap >= bound && (g1.order() == 1) == (gap == bound) && cert.delta > &scale * &gap;
    let mut outcome = run.certificate_outcome(index, cert, false);
    outcome.holds &= chain;
    Ok(outcome)
}

fn gadget_swap_trial(run: &mut Runner, index: usize) -> Result<TrialOutcome> {
    let forced_equal = index.is_multiple_of(5);
    let (mut g1, mut a1) = random_part(&mut run.rng, 1, 7)?;
    let (mut g2, mut a2) = if forced_equal {
        let n = g1.order();
        let g = random_cactus(n, run.rng.gen_range(0..=(n - 1) / 2), &mut run.rng)?;
        let at = run.rng.gen_range(0..n);
        (g, at)
    } else {
        random_part(&mut run.rng, 1, 7)?
    };
    if g1.order() > g2.order() {
        std::mem::swap(&mut g1, &mut g2);
        std::mem::swap(&mut a1, &mut a2);
    }
    let k = run.rng.gen_range(4..=9);
    let cert = operation_v(Anchored::new(&g1, a1), Anchored::new(&g2, a2), k)?;
    let exact = cert.quantity("expected_delta") == Some(&cert.delta);
    let mut outcome = run.certificate_outcome(index, cert, g1.order() == g2.order());
    outcome.holds &= exact;
    Ok(outcome)
}

/// Runs `trials` seeded instances of one suite.
pub fn run_suite(suite: Suite, trials: usize, seed: u64) -> Result<SuiteReport> {
    let mut run = Runner::new(suite, seed);
    for index in 0..trials {
        let outcome = match suite {
            Suite::Additivity => additivity_trial(&mut run, index)?,
            Suite::Coalescence => coalescence_trial(&mut run, index)?,
            Suite::BranchToEnd => branch_trial(&mut run, index, OpIPart::First)?,
            Suite::BranchToNearEnd => branch_trial(&mut run, index, OpIPart::Second)?,
            Suite::PendantPath => pendant_path_trial(&mut run, index)?,
            Suite::PendantCycle => pendant_cycle_trial(&mut run, index)?,
            Suite::MiddleCycle => middle_cycle_trial(&mut run, index)?,
            Suite::GadgetSwap => gadget_swap_trial(&mut run, index)?,
        };
        run.record(outcome);
    }
    Ok(run.report)
}

/// One line of the exhaustive extremal table.
#[derive(Clone, Debug, Serialize)]
pub struct ExtremalRow {
    pub n: usize,
    pub t: usize,
    pub class_count: usize,
    #[serde(with = "crate::rational::as_string")]
    pub max_kf: Rational,
    #[serde(with = "crate::rational::as_string")]
    pub closed_form: Rational,
    #[serde(with = "crate::rational::as_string")]
    pub min_kf: Rational,
    /// The maximizer is unique and isomorphic to the extremal chain.
    pub max_is_chain: bool,
    /// The minimizer is unique and isomorphic to the star cactus.
    pub min_is_star: bool,
    pub degenerate: bool,
}

impl ExtremalRow {
    pub fn max_holds(&self) -> bool {
        self.max_is_chain && self.max_kf == self.closed_form
    }

    /// Degenerate classes have a single member and satisfy the minimum
    /// statement vacuously.
    pub fn min_holds(&self) -> bool {
        self.min_is_star || self.degenerate
    }
}

/// Exhaustive scan of every class with `nmin <= n <= nmax` and `t >= 2`.
pub fn extremal_table(nmin: usize, nmax: usize, jobs: usize) -> Result<Vec<ExtremalRow>> {
    let mut rows = Vec::new();
    for n in nmin.max(5)..=nmax {
        for t in 2..=(n - 1) / 2 {
            let spec = CactusClassSpec::new(n, t)?;
            let report = extremal_scan(spec, jobs)?;
            let chain = canonical_certificate(&build_extremal_chain(spec)?.graph)?.to_hex();
            let star = canonical_certificate(&build_minimal_star(spec)?.graph)?.to_hex();
            rows.push(ExtremalRow {
                n,
                t,
                class_count: report.class_count,
                closed_form: kf_extremal_chain(spec),
                max_is_chain: report.argmax_certificates == [chain],
                min_is_star: report.argmin_certificates == [star],
                degenerate: report.degenerate,
                max_kf: report.max_kf,
                min_kf: report.min_kf,
            });
        }
    }
    Ok(rows)
}

/// Checks that `R(a, b) = R(a, x) + R(x, b)` for every cut vertex `x` and
/// every pair it separates, using the Laplacian solver.
pub fn cut_vertex_additivity_holds(g: &Graph) -> Result<bool> {
    let r = resistance_matrix_laplacian(g)?;
    for x in 0..g.order() {
        let comps = g.components_without(x);
        for (i, ci) in comps.iter().enumerate() {
            for cj in &comps[i + 1..] {
                for &a in ci {
                    for &b in cj {
                        if *r.get(a, b) != r.get(a, x) + r.get(x, b) {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Sum of resistances over the edges; equals `n - 1` on connected graphs.
pub fn foster_sum(g: &Graph) -> Result<Rational> {
    let r = resistance_matrix_laplacian(g)?;
    Ok(g.edges().into_iter().map(|(u, v)| r.get(u, v).clone()).sum())
}
