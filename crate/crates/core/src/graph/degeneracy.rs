//! Smallest-last vertex ordering and the induced acyclic orientation.

use super::Graph;

/// Orientation of every edge of a host graph; `head[e]` is the endpoint edge `e` points to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    pub head: Vec<usize>,
}

impl Orientation {
    pub fn tail(&self, g: &Graph, e: usize) -> usize {
        let (u, v) = g.edge(e);
        if self.head[e] == u {
            v
        } else {
            u
        }
    }

    /// In-neighbours `N⁻(v)`.
    pub fn in_neighbors(&self, g: &Graph, v: usize) -> Vec<usize> {
        g.neighbors(v).iter().zip(g.incident(v)).filter(|&(_, &e)| self.head[e] == v).map(|(&w, _)| w).collect()
    }

    pub fn is_acyclic(&self, g: &Graph) -> bool {
        let n = g.n();
        let mut indeg = vec![0usize; n];
        for &h in &self.head {
            indeg[h] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for (&w, &e) in g.neighbors(v).iter().zip(g.incident(v)) {
                if self.head[e] == w {
                    indeg[w] -= 1;
                    if indeg[w] == 0 {
                        stack.push(w);
                    }
                }
            }
        }
        seen == n
    }
}

#[derive(Clone, Debug)]
pub struct Degeneracy {
    pub d: usize,
    /// Removal order: each vertex has at most `d` neighbours later in the list.
    pub order: Vec<usize>,
    /// Edges point from the later-removed endpoint to the earlier one.
    pub orientation: Orientation,
}

pub fn degeneracy_order(g: &Graph) -> Degeneracy {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let maxd = g.max_degree();
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); maxd + 1];
    for v in (0..n).rev() {
        buckets[deg[v]].push(v);
    }
    let mut removed = vec![false; n];
    let mut pos = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    let mut d = 0;
    let mut low = 0;
    while order.len() < n {
        low = low.min(maxd);
        let v = loop {
            // Buckets hold stale entries; skip them.
            match buckets[low].pop() {
                Some(v) if !removed[v] && deg[v] == low => break v,
                Some(_) => {}
                None => low += 1,
            }
        };
        d = d.max(low);
        removed[v] = true;
        pos[v] = order.len();
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                buckets[deg[w]].push(w);
                low = low.min(deg[w]);
            }
        }
    }
    let head = g.edges().iter().map(|&(u, v)| if pos[u] < pos[v] { u } else { v }).collect();
    Degeneracy { d, order, orientation: Orientation { head } }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn known_degeneracies() {
        assert_eq!(degeneracy_order(&path(5)).d, 1);
        assert_eq!(degeneracy_order(&complete(5)).d, 4);
        assert_eq!(degeneracy_order(&grid(4, 4)).d, 2);
        assert_eq!(degeneracy_order(&octahedron()).d, 4);
        assert_eq!(degeneracy_order(&Graph::empty(3)).d, 0);
    }

    #[test]
    fn orientation_is_acyclic_with_bounded_indegree() {
        let g = grid(5, 5).with_edges([(0, 6), (7, 13), (12, 18)]).unwrap();
        let dg = degeneracy_order(&g);
        assert!(dg.orientation.is_acyclic(&g));
        for v in 0..g.n() {
            assert!(dg.orientation.in_neighbors(&g, v).len() <= dg.d);
        }
    }
}
