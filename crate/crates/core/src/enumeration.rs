//! Exhaustive generation of `Cat(n; t)` up to isomorphism, random cacti for
//! property tests, and the extremal scan over a class.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_certificate, CanonicalCertificate};
use crate::closed_forms::CactusClassSpec;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::resistance::kirchhoff_index;

pub const DEFAULT_MAX_N: usize = 12;
/// Hard ceiling for the `KFLAB_MAX_N` override.
pub const ABSOLUTE_MAX_N: usize = 16;
pub const MAX_N_ENV: &str = "KFLAB_MAX_N";

/// Largest order accepted by [`enumerate_cacti`]: `KFLAB_MAX_N` if set, else
/// [`DEFAULT_MAX_N`].
pub fn enumeration_cap() -> Result<usize> {
    match std::env::var(MAX_N_ENV) {
        Err(_) => Ok(DEFAULT_MAX_N),
        Ok(raw) => {
            let cap: usize = raw
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("{MAX_N_ENV} must be an integer, got {raw:?}")))?;
            if cap > ABSOLUTE_MAX_N {
                return Err(Error::InvalidParameter(format!(
                    "{MAX_N_ENV} = {cap} exceeds the ceiling {ABSOLUTE_MAX_N}"
                )));
            }
            Ok(cap)
        }
    }
}

fn with_pendant_edge(g: &Graph, at: usize) -> Graph {
    let n = g.order();
    let edges = g.edges().into_iter().chain([(at, n)]);
    Graph::from_edges(n + 1, edges).expect("valid extension")
}

fn with_cycle(g: &Graph, at: usize, len: usize) -> Graph {
    let n = g.order();
    let ring: Vec<usize> = std::iter::once(at).chain(n..n + len - 1).collect();
    let edges = g
        .edges()
        .into_iter()
        .chain((0..len).map(|i| (ring[i], ring[(i + 1) % len])));
    Graph::from_edges(n + len - 1, edges).expect("valid extension")
}

type Level = BTreeMap<CanonicalCertificate, Graph>;

/// Every cactus with `n` vertices and `t` cycles, one per isomorphism class,
/// sorted by certificate. Graphs grow from `K_1` by attaching a pendant edge
/// or a cycle at any vertex, smallest attachment vertex first; partial
/// graphs that can no longer reach `(n, t)` are pruned.
pub fn enumerate_cacti(spec: CactusClassSpec) -> Result<Vec<(CanonicalCertificate, Graph)>> {
    let (n, t) = (spec.n(), spec.t());
    let cap = enumeration_cap()?;
    if n > cap {
        return Err(Error::TooLarge { order: n, limit: cap });
    }
    // levels[m][c]: classes with m vertices and c cycles
    let mut levels: Vec<Vec<Level>> = (0..=n).map(|_| (0..=t).map(|_| Level::new()).collect()).collect();
    let k1 = Graph::singleton();
    levels[1][0].insert(canonical_certificate(&k1)?, k1);
    let feasible = |m: usize, c: usize| m <= n && c <= t && n - m >= 2 * (t - c);
    for m in 1..n {
        for c in 0..=t {
            if !feasible(m, c) || levels[m][c].is_empty() {
                continue;
            }
            let parents: Vec<Graph> = std::mem::take(&mut levels[m][c]).into_values().collect();
            let mut children: Vec<(usize, usize, Graph)> = Vec::new();
            for g in &parents {
                for at in 0..m {
                    if feasible(m + 1, c) {
                        children.push((m + 1, c, with_pendant_edge(g, at)));
                    }
                    for len in 3..=n + 1 - m {
                        if feasible(m + len - 1, c + 1) {
                            children.push((m + len - 1, c + 1, with_cycle(g, at, len)));
                        }
                    }
                }
            }
            let certified: Vec<Result<(usize, usize, CanonicalCertificate, Graph)>> = children
                .into_par_iter()
                .map(|(mm, cc, g)| Ok((mm, cc, canonical_certificate(&g)?, g)))
                .collect();
            for item in certified {
                let (mm, cc, cert, g) = item?;
                levels[mm][cc].entry(cert).or_insert(g);
            }
        }
    }
    Ok(std::mem::take(&mut levels[n][t]).into_iter().collect())
}

/// Per-class summary of an exhaustive scan.
#[derive(Clone, Debug, Serialize)]
pub struct EnumerationReport {
    pub spec: CactusClassSpec,
    pub class_count: usize,
    #[serde(with = "crate::rational::as_string")]
    pub max_kf: Rational,
    #[serde(with = "crate::rational::as_string")]
    pub min_kf: Rational,
    /// Hex certificates of the maximizers, sorted.
    pub argmax_certificates: Vec<String>,
    /// Hex certificates of the minimizers, sorted.
    pub argmin_certificates: Vec<String>,
    /// Set when every class member has the same index, so that the extremal
    /// statements carry no strictness.
    pub degenerate: bool,
    #[serde(skip)]
    pub wall_time: Duration,
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))
}

/// Kirchhoff index of every class member, in certificate order. `jobs = 0`
/// lets the pool pick its size.
pub fn class_indices(spec: CactusClassSpec, jobs: usize) -> Result<Vec<(CanonicalCertificate, Graph, Rational)>> {
    pool(jobs)?.install(|| {
        let members = enumerate_cacti(spec)?;
        members
            .into_par_iter()
            .map(|(cert, g)| {
                let kf = kirchhoff_index(&g)?;
                Ok((cert, g, kf))
            })
            .collect()
    })
}

pub fn extremal_scan(spec: CactusClassSpec, jobs: usize) -> Result<EnumerationReport> {
    let start = Instant::now();
    let rows = class_indices(spec, jobs)?;
    let max_kf = rows.iter().map(|r| &r.2).max().cloned().expect("class is nonempty");
    let min_kf = rows.iter().map(|r| &r.2).min().cloned().expect("class is nonempty");
    let pick = |target: &Rational| -> Vec<String> {
        rows.iter().filter(|r| r.2 == *target).map(|r| r.0.to_hex()).collect()
    };
    Ok(EnumerationReport {
        spec,
        class_count: rows.len(),
        argmax_certificates: pick(&max_kf),
        argmin_certificates: pick(&min_kf),
        degenerate: max_kf == min_kf,
        max_kf,
        min_kf,
        wall_time: start.elapsed(),
    })
}

/// A random cactus with `n` vertices and `t` cycles: cycle lengths and
/// bridges drawn at random, each block hung at a uniform vertex, then the
/// ids shuffled.
pub fn random_cactus<R: Rng>(n: usize, t: usize, rng: &mut R) -> Result<Graph> {
    CactusClassSpec::new(n, t)?;
    let mut lengths = vec![3usize; t];
    let mut bridges = 0;
    for _ in 0..n - 1 - 2 * t {
        let slot = rng.gen_range(0..=t);
        if slot == t {
            bridges += 1;
        } else {
            lengths[slot] += 1;
        }
    }
    let mut blocks: Vec<usize> = lengths.into_iter().chain(std::iter::repeat_n(2, bridges)).collect();
    blocks.shuffle(rng);
    let mut g = Graph::singleton();
    for len in blocks {
        let at = rng.gen_range(0..g.order());
        g = if len == 2 { with_pendant_edge(&g, at) } else { with_cycle(&g, at, len) };
    }
    shuffle_ids(&g, rng)
}

/// A connected graph on `n` vertices: a random recursive tree plus each
/// remaining pair with probability `p`, ids shuffled.
pub fn random_connected_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("graph needs at least one vertex".into()));
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for v in 1..n {
        for u in 0..v {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    shuffle_ids(&Graph::from_edges(n, edges)?, rng)
}

fn shuffle_ids<R: Rng>(g: &Graph, rng: &mut R) -> Result<Graph> {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    g.relabel(&perm)
}

/// The generator used by every seeded suite.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::cactus_cycle_count;

    fn count(n: usize, t: usize) -> usize {
        enumerate_cacti(CactusClassSpec::new(n, t).unwrap()).unwrap().len()
    }

    #[test]
    fn tree_counts() {
        let expected = [1, 1, 1, 2, 3, 6, 11, 23, 47];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(count(i + 1, 0), want, "n = {}", i + 1);
        }
    }

    #[test]
    fn small_cyclic_counts() {
        assert_eq!(count(3, 1), 1);
        assert_eq!(count(4, 1), 2);
        assert_eq!(count(5, 2), 1);
        assert_eq!(count(6, 1), 13);
    }

    #[test]
    fn members_are_in_class_and_sorted() {
        let spec = CactusClassSpec::new(8, 2).unwrap();
        let members = enumerate_cacti(spec).unwrap();
        assert!(members.windows(2).all(|w| w[0].0 < w[1].0));
        for (cert, g) in &members {
            assert_eq!(g.order(), 8);
            assert_eq!(cactus_cycle_count(g), Some(2));
            assert_eq!(&canonical_certificate(g).unwrap(), cert);
        }
    }

    #[test]
    fn random_generators() {
        let mut rng = seeded_rng(3);
        for _ in 0..50 {
            let n = rng.gen_range(1..30);
            let t = rng.gen_range(0..=(n - 1) / 2);
            let g = random_cactus(n, t, &mut rng).unwrap();
            assert_eq!(g.order(), n);
            assert_eq!(cactus_cycle_count(&g), Some(t));
            let h = random_connected_graph(n, 0.2, &mut rng).unwrap();
            assert!(h.is_connected());
        }
        let a = random_cactus(20, 4, &mut seeded_rng(9)).unwrap();
        let b = random_cactus(20, 4, &mut seeded_rng(9)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn scan_report() {
        let r = extremal_scan(CactusClassSpec::new(5, 2).unwrap(), 1).unwrap();
        assert_eq!(r.class_count, 1);
        assert!(r.degenerate);
        let r = extremal_scan(CactusClassSpec::new(7, 2).unwrap(), 2).unwrap();
        assert!(!r.degenerate);
        assert_eq!(r.argmax_certificates.len(), 1);
        let json = serde_json::to_string(&r).unwrap();
        assert!(!json.contains("wall"));
    }
}
