//! Small vertex separators of connected graphs.

use super::blocks::cut_vertices_avoiding;
use super::cliques::triangles;
use super::Graph;

/// Components of `g - sep`, ordered by smallest vertex.
pub fn components_without(g: &Graph, sep: &[usize]) -> Vec<Vec<usize>> {
    let mut removed = vec![false; g.n()];
    for &v in sep {
        removed[v] = true;
    }
    g.components_avoiding(&removed)
}

pub fn separates(g: &Graph, sep: &[usize]) -> bool {
    components_without(g, sep).len() > 1
}

/// All pairs `{a, b}` (sorted) whose removal disconnects `g`.
pub fn two_separators(g: &Graph) -> Vec<[usize; 2]> {
    let mut out = Vec::new();
    let mut removed = vec![false; g.n()];
    for a in 0..g.n() {
        removed[a] = true;
        for b in cut_vertices_avoiding(g, &removed) {
            out.push([a.min(b), a.max(b)]);
        }
        removed[a] = false;
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Triples (sorted) `{a, b, c}` with `c` a cut vertex of `g - {a, b}`; on a
/// 3-connected graph these are exactly its 3-separators.
pub fn three_separators(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    let mut removed = vec![false; g.n()];
    for a in 0..g.n() {
        removed[a] = true;
        for b in a + 1..g.n() {
            removed[b] = true;
            for c in cut_vertices_avoiding(g, &removed) {
                let mut t = [a, b, c];
                t.sort_unstable();
                out.push(t);
            }
            removed[b] = false;
        }
        removed[a] = false;
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Triangles whose removal disconnects `g`.
pub fn separating_triangles(g: &Graph) -> Vec<[usize; 3]> {
    triangles(g).into_iter().filter(|t| separates(g, t)).collect()
}

/// Edges `{a, b}` whose endpoints together disconnect `g`.
pub fn separating_edges(g: &Graph) -> Vec<[usize; 2]> {
    g.edges().iter().filter(|&&(a, b)| separates(g, &[a, b])).map(|&(a, b)| [a, b]).collect()
}
