//! Block decomposition (biconnected components) and cactus recognition.

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    /// A bridge: two vertices, one edge.
    Edge,
    /// A block whose edges form a single cycle of the given length.
    Cycle(usize),
    /// Any other 2-connected block (never present in a cactus).
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Sorted vertex ids.
    pub vertices: Vec<usize>,
    /// Edges `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
    pub kind: BlockKind,
    cycle: Option<Vec<usize>>,
}

impl Block {
    /// Vertices in cyclic order starting at the smallest id, for cycle blocks.
    pub fn cycle_order(&self) -> Option<&[usize]> {
        self.cycle.as_deref()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// Blocks and cut vertices of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCutTree {
    pub blocks: Vec<Block>,
    /// Sorted cut vertices.
    pub cut_vertices: Vec<usize>,
    /// `(block index, cut vertex)` incidences.
    pub tree_edges: Vec<(usize, usize)>,
    vertex_blocks: Vec<Vec<usize>>,
}

impl BlockCutTree {
    /// Indices of the blocks containing `v`.
    pub fn blocks_of(&self, v: usize) -> &[usize] {
        &self.vertex_blocks[v]
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.vertex_blocks[v].len() > 1
    }

    pub fn is_cactus(&self) -> bool {
        self.blocks.iter().all(|b| b.kind != BlockKind::Other)
    }

    pub fn cycle_count(&self) -> usize {
        self.blocks
            .iter()
            .filter(|b| matches!(b.kind, BlockKind::Cycle(_)))
            .count()
    }

    /// Cut vertices lying in block `b`.
    pub fn cut_vertices_of(&self, b: usize) -> Vec<usize> {
        self.blocks[b]
            .vertices
            .iter()
            .copied()
            .filter(|&v| self.is_cut_vertex(v))
            .collect()
    }
}

/// Lowpoint depth-first decomposition into blocks.
pub fn block_cut_tree(g: &Graph) -> Result<BlockCutTree> {
    g.ensure_connected()?;
    let n = g.order();
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut raw_blocks: Vec<Vec<(usize, usize)>> = Vec::new();

    // frames: (vertex, parent, next neighbor index)
    let mut frames = vec![(0usize, UNSEEN, 0usize)];
    disc[0] = 0;
    low[0] = 0;
    timer += 1;
    while let Some(top) = frames.last_mut() {
        let (v, parent, next) = *top;
        if let Some(&w) = g.neighbors(v).get(next) {
            top.2 += 1;
            if disc[w] == UNSEEN {
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                edge_stack.push((v, w));
                frames.push((w, v, 0));
            } else if w != parent && disc[w] < disc[v] {
                edge_stack.push((v, w));
                low[v] = low[v].min(disc[w]);
            }
        } else {
            frames.pop();
            if let Some(&(p, _, _)) = frames.last() {
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    let mut block = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        block.push(e);
                        if e == (p, v) {
                            break;
                        }
                    }
                    raw_blocks.push(block);
                }
            }
        }
    }

    let mut blocks: Vec<Block> = raw_blocks.into_iter().map(make_block).collect();
    blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices));

    let mut vertex_blocks = vec![Vec::new(); n];
    for (i, b) in blocks.iter().enumerate() {
        for &v in &b.vertices {
            vertex_blocks[v].push(i);
        }
    }
    let cut_vertices: Vec<usize> = (0..n).filter(|&v| vertex_blocks[v].len() > 1).collect();
    let tree_edges = cut_vertices
        .iter()
        .flat_map(|&c| vertex_blocks[c].iter().map(move |&b| (b, c)))
        .collect();
    Ok(BlockCutTree {
        blocks,
        cut_vertices,
        tree_edges,
        vertex_blocks,
    })
}

fn make_block(edges: Vec<(usize, usize)>) -> Block {
    let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    edges.sort_unstable();
    let mut vertices: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    vertices.sort_unstable();
    vertices.dedup();
    let (kind, cycle) = if edges.len() == 1 {
        (BlockKind::Edge, None)
    } else if edges.len() == vertices.len() {
        // a 2-connected block with |E| = |V| is a single cycle
        (BlockKind::Cycle(vertices.len()), Some(cyclic_order(&vertices, &edges)))
    } else {
        (BlockKind::Other, None)
    };
    Block {
        vertices,
        edges,
        kind,
        cycle,
    }
}

fn cyclic_order(vertices: &[usize], edges: &[(usize, usize)]) -> Vec<usize> {
    let nbrs = |v: usize| {
        edges
            .iter()
            .filter_map(move |&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
    };
    let start = vertices[0];
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = nbrs(start).min().expect("cycle vertex has neighbors");
    while cur != start {
        order.push(cur);
        let next = nbrs(cur).find(|&w| w != prev).expect("cycle vertex has two neighbors");
        prev = cur;
        cur = next;
    }
    order
}

/// Number of cycles if `g` is a cactus, `None` otherwise (including
/// disconnected graphs).
pub fn cactus_cycle_count(g: &Graph) -> Option<usize> {
    let bct = block_cut_tree(g).ok()?;
    bct.is_cactus().then(|| bct.cycle_count())
}

pub fn is_cactus(g: &Graph) -> bool {
    cactus_cycle_count(g).is_some()
}

/// Block-cut tree of a graph that must be a cactus.
pub fn cactus_blocks(g: &Graph) -> Result<BlockCutTree> {
    let bct = block_cut_tree(g)?;
    if bct.is_cactus() {
        Ok(bct)
    } else {
        Err(Error::NotCactus)
    }
}
