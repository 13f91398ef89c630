//! Biconnected components and cut vertices (iterative Hopcroft–Tarjan).

use super::Graph;

#[derive(Clone, Debug)]
pub struct Blocks {
    /// Vertex set of each block, sorted. Isolated vertices belong to no block.
    pub vertices: Vec<Vec<usize>>,
    /// Edge ids of each block.
    pub edges: Vec<Vec<usize>>,
    pub is_cut: Vec<bool>,
}

pub fn biconnected_components(g: &Graph) -> Blocks {
    let n = g.n();
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut blocks_e: Vec<Vec<usize>> = Vec::new();
    let mut time = 0;
    // frame: (vertex, parent edge, next neighbour index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != UNSEEN || g.degree(root) == 0 {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        stack.push((root, UNSEEN, 0));
        while let Some(&mut (v, pe, ref mut i)) = stack.last_mut() {
            if *i < g.degree(v) {
                let w = g.neighbors(v)[*i];
                let e = g.incident(v)[*i];
                *i += 1;
                if e == pe {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        if u != root {
                            is_cut[u] = true;
                        }
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == pe {
                                break;
                            }
                        }
                        blocks_e.push(block);
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    let vertices = blocks_e
        .iter()
        .map(|b| {
            let mut vs: Vec<usize> = b
                .iter()
                .flat_map(|&e| {
                    let (u, v) = g.edge(e);
                    [u, v]
                })
                .collect();
            vs.sort_unstable();
            vs.dedup();
            vs
        })
        .collect();
    Blocks { vertices, edges: blocks_e, is_cut }
}

/// Cut vertices of `g` with the vertices flagged in `removed` deleted.
pub fn cut_vertices_avoiding(g: &Graph, removed: &[bool]) -> Vec<usize> {
    let keep: Vec<usize> = (0..g.n()).filter(|&v| !removed[v]).collect();
    let h = g.induced(&keep);
    let b = biconnected_components(&h);
    (0..h.n()).filter(|&i| b.is_cut[i]).map(|i| keep[i]).collect()
}

pub fn is_biconnected(g: &Graph) -> bool {
    g.n() >= 2 && g.is_connected() && biconnected_components(g).vertices.len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn bowtie_has_one_cut_vertex() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let b = biconnected_components(&g);
        assert_eq!(b.vertices.len(), 2);
        assert_eq!(b.is_cut, vec![false, false, true, false, false]);
    }

    #[test]
    fn path_blocks_are_edges() {
        let b = biconnected_components(&path(5));
        assert_eq!(b.vertices.len(), 4);
        assert_eq!(b.is_cut.iter().filter(|&&c| c).count(), 3);
        assert!(is_biconnected(&cycle(5)));
        assert!(!is_biconnected(&path(3)));
    }
}
