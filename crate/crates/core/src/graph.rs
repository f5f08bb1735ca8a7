//! Undirected simple graphs on the dense vertex set `0..n`.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// An undirected simple graph. Vertex ids are always `0..order()` and every
/// neighbor list is sorted and free of duplicates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn edgeless(order: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); order],
        }
    }

    /// The single-vertex graph, identity element of [`coalesce`].
    pub fn singleton() -> Self {
        Self::edgeless(1)
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if order == 0 {
            return Err(Error::InvalidParameter("graph order must be positive".into()));
        }
        let mut adj = vec![Vec::new(); order];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::InvalidVertex { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, nbrs) in adj.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adj })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Breadth-first hop distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or_default();
            for &w in &self.adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.bfs_distances(0).iter().all(Option::is_some)
    }

    pub fn ensure_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Number of edges on a shortest `u`-`v` path.
    pub fn shortest_path_distance(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.ensure_connected()?;
        Ok(self.bfs_distances(u)[v].expect("connected graph"))
    }

    /// Cyclomatic number `|E| - |V| + c`; equals the cycle count of a cactus.
    pub fn cyclomatic_number(&self) -> usize {
        let components = self.components(&vec![false; self.order()]).len();
        self.size() + components - self.order()
    }

    /// Connected components of the graph with the `removed` vertices deleted.
    /// Each component is sorted; components are ordered by their smallest vertex.
    pub fn components(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let mut seen = removed.to_vec();
        let mut out = Vec::new();
        for start in 0..self.order() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Components of `G - v`.
    pub fn components_without(&self, v: usize) -> Vec<Vec<usize>> {
        let mut removed = vec![false; self.order()];
        removed[v] = true;
        self.components(&removed)
    }

    /// Relabels vertices so that old vertex `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidParameter("relabeling is not a permutation".into()));
        }
        Graph::from_edges(n, self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Subgraph induced on `vertices`, relabeled densely in the given order.
    /// Returns the subgraph and, for each old vertex, its new id if kept.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<Option<usize>>)> {
        let mut map = vec![None; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            map[v] = Some(i);
        }
        let edges = self
            .edges()
            .into_iter()
            .filter_map(|(u, v)| Some((map[u]?, map[v]?)));
        Ok((Graph::from_edges(vertices.len(), edges)?, map))
    }

    /// Reattaches a hanging branch: every edge between `branch` and `from`
    /// is replaced by the same edge to `to`. Vertex ids are unchanged.
    pub(crate) fn move_branch(&self, branch: &[usize], from: usize, to: usize) -> Result<Graph> {
        let mut in_branch = vec![false; self.order()];
        for &b in branch {
            in_branch[b] = true;
        }
        let edges = self.edges().into_iter().map(|(u, v)| {
            if u == from && in_branch[v] {
                (to, v)
            } else if v == from && in_branch[u] {
                (u, to)
            } else {
                (u, v)
            }
        });
        Graph::from_edges(self.order(), edges)
    }
}

/// Result of the identification operation `(G1, x1) ⊕ (G2, x2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalescence {
    pub graph: Graph,
    /// Id of the merged vertex (always `x1`).
    pub common: usize,
    /// New id of every vertex of the second graph.
    pub right_map: Vec<usize>,
}

/// Glues `g2` onto `g1` by identifying `x2` with `x1`. Ids of `g1` are
/// preserved; the remaining vertices of `g2` follow in their original order.
pub fn coalesce(g1: &Graph, x1: usize, g2: &Graph, x2: usize) -> Result<Coalescence> {
    g1.check_vertex(x1)?;
    g2.check_vertex(x2)?;
    let n1 = g1.order();
    let right_map: Vec<usize> = (0..g2.order())
        .map(|w| match w.cmp(&x2) {
            std::cmp::Ordering::Less => n1 + w,
            std::cmp::Ordering::Equal => x1,
            std::cmp::Ordering::Greater => n1 + w - 1,
        })
        .collect();
    let edges = g1
        .edges()
        .into_iter()
        .chain(g2.edges().into_iter().map(|(u, v)| (right_map[u], right_map[v])));
    let graph = Graph::from_edges(n1 + g2.order() - 1, edges)?;
    Ok(Coalescence {
        graph,
        common: x1,
        right_map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn rejects_loops_duplicates_and_bad_ids() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::InvalidVertex { vertex: 2, order: 2 })
        ));
        assert!(Graph::from_edges(0, []).is_err());
    }

    #[test]
    fn shortest_paths() {
        assert_eq!(path(3).shortest_path_distance(0, 2), Ok(2));
        assert_eq!(path(3).shortest_path_distance(1, 1), Ok(0));
        assert_eq!(cycle(6).shortest_path_distance(0, 3), Ok(3));
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(split.shortest_path_distance(0, 1), Err(Error::Disconnected));
        assert!(path(3).shortest_path_distance(0, 9).is_err());
    }

    #[test]
    fn coalesce_examples() {
        let p2 = path(2);
        let c = coalesce(&p2, 1, &p2, 0).unwrap();
        assert_eq!(c.graph, path(3));
        assert_eq!(c.common, 1);

        let bowtie = coalesce(&cycle(3), 0, &cycle(3), 0).unwrap();
        assert_eq!(bowtie.graph.order(), 5);
        assert_eq!(bowtie.graph.size(), 6);
        assert_eq!(bowtie.graph.degree(0), 4);

        let g = cycle(5);
        let same = coalesce(&g, 3, &Graph::singleton(), 0).unwrap();
        assert_eq!(same.graph, g);
        assert!(coalesce(&g, 7, &g, 0).is_err());
    }

    #[test]
    fn move_branch_rewires_only_branch_edges() {
        // path 0-1-2 with a leaf 3 hanging at 1; move it to 2
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        let h = g.move_branch(&[3], 1, 2).unwrap();
        assert_eq!(h, path(4));
    }

    #[test]
    fn cyclomatic_number_counts_independent_cycles() {
        assert_eq!(path(5).cyclomatic_number(), 0);
        assert_eq!(cycle(5).cyclomatic_number(), 1);
    }
}
