//! Effective resistances and Kirchhoff indices with unit resistors on edges.
//!
//! Two independent routes are provided. The Laplacian route grounds vertex
//! `n - 1` and solves the reduced Laplacian system exactly; it works for any
//! connected graph. The cactus route walks the block-cut tree, adding one
//! contribution per block: 1 across a bridge and `d (l - d) / l` between two
//! vertices at cycle distance `d` on a cycle of length `l`.

use num_traits::Zero;

use crate::blocks::{block_cut_tree, BlockCutTree, BlockKind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::RationalMatrix;
use crate::rational::{frac, int, Rational};

/// Symmetric table of pairwise resistances.
#[derive(Clone, Debug, PartialEq)]
pub struct ResistanceMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl ResistanceMatrix {
    fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        ResistanceMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> &Rational {
        &self.entries[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Rational] {
        &self.entries[u * self.n..(u + 1) * self.n]
    }

    /// Sum over unordered pairs.
    pub fn kirchhoff_index(&self) -> Rational {
        let mut total = Rational::zero();
        for u in 0..self.n {
            for v in u + 1..self.n {
                total += self.get(u, v);
            }
        }
        total
    }

    /// Sum of resistances from `x` to every vertex.
    pub fn transmission(&self, x: usize) -> Rational {
        self.row(x).iter().sum()
    }

    /// Largest resistance over all pairs.
    pub fn max_resistance(&self) -> Rational {
        self.entries.iter().max().cloned().unwrap_or_else(Rational::zero)
    }

    /// All pairs `(a, b)`, `a < b`, attaining the largest resistance, sorted.
    /// For a single vertex the only pair is `(0, 0)`.
    pub fn maximizing_pairs(&self) -> Vec<(usize, usize)> {
        if self.n == 1 {
            return vec![(0, 0)];
        }
        let best = self.max_resistance();
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if *self.get(a, b) == best {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

fn grounded_laplacian(g: &Graph) -> RationalMatrix {
    let m = g.order() - 1;
    let mut l = RationalMatrix::zeros(m);
    for v in 0..m {
        l[(v, v)] = int(g.degree(v) as i64);
        for &w in g.neighbors(v) {
            if w < m {
                l[(v, w)] = int(-1);
            }
        }
    }
    l
}

/// Resistance between `u` and `v` by solving the grounded Laplacian system.
pub fn effective_resistance_laplacian(g: &Graph, u: usize, v: usize) -> Result<Rational> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    g.ensure_connected()?;
    if u == v {
        return Ok(Rational::zero());
    }
    let ground = g.order() - 1;
    let mut b = vec![Rational::zero(); ground];
    if u != ground {
        b[u] = int(1);
    }
    if v != ground {
        b[v] = int(-1);
    }
    let x = grounded_laplacian(g)
        .solve(&b)
        .expect("grounded Laplacian of a connected graph is nonsingular");
    let pot = |w: usize| if w == ground { Rational::zero() } else { x[w].clone() };
    Ok(pot(u) - pot(v))
}

/// All pairwise resistances from one inversion of the grounded Laplacian:
/// `R(i, j) = M[i][i] + M[j][j] - 2 M[i][j]` with the ground row zero.
pub fn resistance_matrix_laplacian(g: &Graph) -> Result<ResistanceMatrix> {
    g.ensure_connected()?;
    let n = g.order();
    let ground = n - 1;
    let inv = grounded_laplacian(g)
        .inverse()
        .expect("grounded Laplacian of a connected graph is nonsingular");
    let m = |i: usize, j: usize| {
        if i == ground || j == ground {
            Rational::zero()
        } else {
            inv[(i, j)].clone()
        }
    };
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::zero() } else { m(i, i) + m(j, j) - m(i, j) * int(2) })
                .collect()
        })
        .collect();
    Ok(ResistanceMatrix::from_rows(rows))
}

/// Resistance contribution of one block between two of its vertices.
fn block_resistance(bct: &BlockCutTree, block: usize, a: usize, b: usize) -> Result<Rational> {
    let blk = &bct.blocks[block];
    match blk.kind {
        BlockKind::Edge => Ok(int(1)),
        BlockKind::Cycle(l) => {
            let order = blk.cycle_order().expect("cycle blocks carry their order");
            let pa = order.iter().position(|&v| v == a).expect("vertex in block");
            let pb = order.iter().position(|&v| v == b).expect("vertex in block");
            let d = pa.abs_diff(pb) as i128;
            let l = l as i128;
            Ok(frac(d * (l - d), l))
        }
        BlockKind::Other => Err(Error::NotCactus),
    }
}

/// Resistances from `source` to every vertex of a cactus, by walking the
/// block-cut tree outward from the source.
pub fn cactus_resistances_from(bct: &BlockCutTree, order: usize, source: usize) -> Result<Vec<Rational>> {
    if !bct.is_cactus() {
        return Err(Error::NotCactus);
    }
    let mut dist = vec![Rational::zero(); order];
    let mut block_done = vec![false; bct.blocks.len()];
    let mut stack = vec![source];
    while let Some(v) = stack.pop() {
        for &b in bct.blocks_of(v) {
            if std::mem::replace(&mut block_done[b], true) {
                continue;
            }
            for &w in &bct.blocks[b].vertices {
                if w != v {
                    dist[w] = &dist[v] + block_resistance(bct, b, v, w)?;
                    stack.push(w);
                }
            }
        }
    }
    Ok(dist)
}

/// Resistance between `u` and `v` in a cactus, summed block by block along
/// the block path (cut-vertex additivity).
pub fn effective_resistance_cactus(g: &Graph, bct: &BlockCutTree, u: usize, v: usize) -> Result<Rational> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let mut dist = cactus_resistances_from(bct, g.order(), u)?;
    Ok(std::mem::take(&mut dist[v]))
}

pub fn resistance_matrix_cactus(g: &Graph) -> Result<ResistanceMatrix> {
    let bct = block_cut_tree(g)?;
    let rows = (0..g.order())
        .map(|s| cactus_resistances_from(&bct, g.order(), s))
        .collect::<Result<Vec<_>>>()?;
    Ok(ResistanceMatrix::from_rows(rows))
}

/// Full resistance table; uses the cactus walk when possible and the
/// Laplacian inversion otherwise.
pub fn resistance_matrix(g: &Graph) -> Result<ResistanceMatrix> {
    let bct = block_cut_tree(g)?;
    if bct.is_cactus() {
        let rows = (0..g.order())
            .map(|s| cactus_resistances_from(&bct, g.order(), s))
            .collect::<Result<Vec<_>>>()?;
        Ok(ResistanceMatrix::from_rows(rows))
    } else {
        resistance_matrix_laplacian(g)
    }
}

pub fn kirchhoff_index(g: &Graph) -> Result<Rational> {
    Ok(resistance_matrix(g)?.kirchhoff_index())
}

pub fn vertex_transmission(g: &Graph, x: usize) -> Result<Rational> {
    g.check_vertex(x)?;
    let bct = block_cut_tree(g)?;
    if bct.is_cactus() {
        Ok(cactus_resistances_from(&bct, g.order(), x)?.iter().sum())
    } else {
        Ok(resistance_matrix_laplacian(g)?.transmission(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e.iter().copied()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn bowtie() -> Graph {
        g(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    }

    #[test]
    fn laplacian_examples() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(effective_resistance_laplacian(&p3, 0, 2).unwrap(), int(2));
        // adjacent on C_4: 1 in parallel with 3
        assert_eq!(effective_resistance_laplacian(&cycle(4), 0, 1).unwrap(), frac(3, 4));
        assert_eq!(effective_resistance_laplacian(&cycle(4), 2, 2).unwrap(), int(0));
        let split = g(4, &[(0, 1), (2, 3)]);
        assert_eq!(effective_resistance_laplacian(&split, 0, 1), Err(Error::Disconnected));
    }

    #[test]
    fn cactus_examples() {
        let c4 = cycle(4);
        let bct = block_cut_tree(&c4).unwrap();
        assert_eq!(effective_resistance_cactus(&c4, &bct, 0, 2).unwrap(), int(1));
        let b = bowtie();
        let bct = block_cut_tree(&b).unwrap();
        assert_eq!(effective_resistance_cactus(&b, &bct, 0, 4).unwrap(), frac(4, 3));
        let tree = g(4, &[(0, 1), (1, 2), (1, 3)]);
        let bct = block_cut_tree(&tree).unwrap();
        assert_eq!(effective_resistance_cactus(&tree, &bct, 1, 3).unwrap(), int(1));
    }

    #[test]
    fn cactus_route_rejects_non_cactus() {
        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let bct = block_cut_tree(&k4).unwrap();
        assert_eq!(effective_resistance_cactus(&k4, &bct, 0, 1), Err(Error::NotCactus));
        // the general route still works: K_4 resistances are 1/2
        assert_eq!(resistance_matrix(&k4).unwrap().get(0, 3), &frac(1, 2));
    }

    #[test]
    fn matrix_examples() {
        let p2 = g(2, &[(0, 1)]);
        let m = resistance_matrix(&p2).unwrap();
        assert_eq!(m.row(0), &[int(0), int(1)]);
        let c3 = resistance_matrix(&cycle(3)).unwrap();
        for u in 0..3 {
            for v in 0..3 {
                assert_eq!(c3.get(u, v), &if u == v { int(0) } else { frac(2, 3) });
            }
        }
        let k1 = resistance_matrix(&Graph::singleton()).unwrap();
        assert_eq!(k1.row(0), &[int(0)]);
        assert_eq!(resistance_matrix_laplacian(&Graph::singleton()).unwrap(), k1);
    }

    #[test]
    fn kirchhoff_examples() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(kirchhoff_index(&p4).unwrap(), int(10));
        assert_eq!(kirchhoff_index(&cycle(3)).unwrap(), int(2));
        assert_eq!(kirchhoff_index(&bowtie()).unwrap(), frac(28, 3));
        assert_eq!(resistance_matrix_laplacian(&bowtie()).unwrap().kirchhoff_index(), frac(28, 3));
        assert_eq!(kirchhoff_index(&Graph::singleton()).unwrap(), int(0));
    }

    #[test]
    fn transmission_examples() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(vertex_transmission(&p3, 1).unwrap(), int(2));
        // degree-2 vertex of a terminal triangle in the bowtie
        assert_eq!(vertex_transmission(&bowtie(), 0).unwrap(), int(4));
        assert_eq!(vertex_transmission(&bowtie(), 2).unwrap(), frac(8, 3));
        // paw: triangle 0,1,2 with pendant 3 at 2
        let paw = g(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        assert_eq!(vertex_transmission(&paw, 3).unwrap(), frac(13, 3));
        assert_eq!(vertex_transmission(&paw, 0).unwrap(), int(3));
    }

    #[test]
    fn maximizing_pairs_on_small_graphs() {
        let p5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(resistance_matrix(&p5).unwrap().maximizing_pairs(), vec![(0, 4)]);
        assert_eq!(resistance_matrix(&cycle(4)).unwrap().maximizing_pairs(), vec![(0, 2), (1, 3)]);
        let m = resistance_matrix(&bowtie()).unwrap();
        assert_eq!(m.maximizing_pairs(), vec![(0, 3), (0, 4), (1, 3), (1, 4)]);
        assert_eq!(m.max_resistance(), frac(4, 3));
    }
}
