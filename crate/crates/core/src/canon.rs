//! Canonical certificates for isomorphism rejection.
//!
//! Colour refinement followed by an individualise-and-refine search over the
//! first non-singleton cell. Every leaf of the search tree yields a relabeled
//! adjacency bit string; the certificate is the lexicographically smallest.
//! Branches on twin vertices (same neighborhood up to each other) are pruned,
//! since swapping two twins is an automorphism fixing everything else.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_CANON_LIMIT: usize = 16;

/// Isomorphism-invariant key: equal for two graphs iff they are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCertificate(Vec<u8>);

impl CanonicalCertificate {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for CanonicalCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

pub fn canonical_certificate(g: &Graph) -> Result<CanonicalCertificate> {
    canonical_certificate_with_limit(g, DEFAULT_CANON_LIMIT)
}

pub fn canonical_certificate_with_limit(g: &Graph, limit: usize) -> Result<CanonicalCertificate> {
    let n = g.order();
    if n > limit {
        return Err(Error::TooLarge { order: n, limit });
    }
    let twins = twin_classes(g);
    let colors = refine(g, vec![0; n]);
    let mut best = None;
    search(g, &twins, colors, &mut best);
    Ok(CanonicalCertificate(best.expect("search visits at least one leaf")))
}

/// Representative (smallest member) of each vertex's twin class.
fn twin_classes(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut rep: Vec<usize> = (0..n).collect();
    for a in 0..n {
        if rep[a] != a {
            continue;
        }
        for b in a + 1..n {
            if rep[b] == b && are_twins(g, a, b) {
                rep[b] = a;
            }
        }
    }
    rep
}

fn are_twins(g: &Graph, a: usize, b: usize) -> bool {
    let na = g.neighbors(a).iter().filter(|&&w| w != b);
    let nb = g.neighbors(b).iter().filter(|&&w| w != a);
    na.eq(nb)
}

/// Equitable refinement. Colours are ranks `0..k` of sorted signatures, so
/// the result depends only on the isomorphism type of (graph, colouring).
fn refine(g: &Graph, mut colors: Vec<usize>) -> Vec<usize> {
    let n = g.order();
    let mut classes = count_classes(&colors);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nc: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nc.sort_unstable();
                (colors[v], nc)
            })
            .collect();
        let mut sorted: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        colors = sigs
            .iter()
            .map(|s| sorted.binary_search(&s).expect("signature present"))
            .collect();
        let next = sorted.len();
        if next == classes {
            return colors;
        }
        classes = next;
    }
}

fn count_classes(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn individualize(colors: &[usize], v: usize) -> Vec<usize> {
    let keyed: Vec<(usize, bool)> = colors.iter().enumerate().map(|(w, &c)| (c, w != v)).collect();
    let mut sorted = keyed.clone();
    sorted.sort_unstable();
    sorted.dedup();
    keyed
        .iter()
        .map(|k| sorted.binary_search(k).expect("key present"))
        .collect()
}

fn search(g: &Graph, twins: &[usize], colors: Vec<usize>, best: &mut Option<Vec<u8>>) {
    let n = g.order();
    let mut cell_sizes = vec![0usize; n];
    for &c in &colors {
        cell_sizes[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| cell_sizes[c] > 1) else {
        let code = encode(g, &colors);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for v in (0..n).filter(|&v| colors[v] == target) {
        if tried.contains(&twins[v]) {
            continue;
        }
        tried.push(twins[v]);
        let next = refine(g, individualize(&colors, v));
        search(g, twins, next, best);
    }
}

/// `n` as two bytes, then the upper triangle of the relabeled adjacency
/// matrix, row by row, packed MSB first.
fn encode(g: &Graph, labels: &[usize]) -> Vec<u8> {
    let n = g.order();
    let mut inv = vec![0; n];
    for (v, &l) in labels.iter().enumerate() {
        inv[l] = v;
    }
    let mut out = vec![(n >> 8) as u8, n as u8];
    let mut byte = 0u8;
    let mut filled = 0;
    for i in 0..n {
        for j in i + 1..n {
            byte = (byte << 1) | g.has_edge(inv[i], inv[j]) as u8;
            filled += 1;
            if filled == 8 {
                out.push(byte);
                byte = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(byte << (8 - filled));
    }
    out
}
