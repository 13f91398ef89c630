//! Named graphs and recognition of the exceptional pieces V8 and K5.

use super::Graph;

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    Graph::from_edges(n, edges).expect("valid complete graph")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j)));
    Graph::from_edges(a + b, edges).expect("valid complete bipartite graph")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least three vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
}

/// The 8-vertex Möbius ladder: the cycle `0..8` plus the chords `i, i+4`.
pub fn v8() -> Graph {
    let rim = (0..8).map(|i| (i, (i + 1) % 8));
    let chords = (0..4).map(|i| (i, i + 4));
    Graph::from_edges(8, rim.chain(chords)).expect("valid V8")
}

/// Octahedron with poles 0 and 5 around the equator 1-2-3-4.
pub fn octahedron() -> Graph {
    let mut e = vec![(1, 2), (2, 3), (3, 4), (4, 1)];
    for i in 1..=4 {
        e.push((0, i));
        e.push((5, i));
    }
    Graph::from_edges(6, e).expect("valid octahedron")
}

pub fn grid(rows: usize, cols: usize) -> Graph {
    let id = |r: usize, c: usize| r * cols + c;
    let mut e = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                e.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                e.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::from_edges(rows * cols, e).expect("valid grid")
}

/// Returns the labelling `m` with `m[i]` the vertex playing ladder position `i`
/// (rim `m[i] m[i+1]`, chord `m[i] m[i+4]`), if `g` is isomorphic to V8.
pub fn v8_labelling(g: &Graph) -> Option<[usize; 8]> {
    if g.n() != 8 || g.m() != 12 || (0..8).any(|v| g.degree(v) != 3) {
        return None;
    }
    let mut order = [0usize; 8];
    let mut used = [false; 8];
    used[0] = true;
    fn extend(g: &Graph, order: &mut [usize; 8], used: &mut [bool; 8], k: usize) -> bool {
        if k == 8 {
            return g.has_edge(order[7], order[0]) && (0..4).all(|i| g.has_edge(order[i], order[i + 4]));
        }
        let last = order[k - 1];
        for &w in g.neighbors(last) {
            if !used[w] {
                used[w] = true;
                order[k] = w;
                if extend(g, order, used, k + 1) {
                    return true;
                }
                used[w] = false;
            }
        }
        false
    }
    extend(g, &mut order, &mut used, 1).then_some(order)
}

pub fn is_v8(g: &Graph) -> bool {
    v8_labelling(g).is_some()
}

pub fn is_k5(g: &Graph) -> bool {
    g.n() == 5 && g.m() == 10
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v8_recognition() {
        assert!(is_v8(&v8()));
        assert!(!is_v8(&complete(4)));
        assert!(!is_v8(&cycle(8)));
        assert!(!is_v8(&complete_bipartite(4, 4).without_edges(&[(0, 4), (1, 5), (2, 6), (3, 7)])));
        let relabelled = Graph::from_edges(8, v8().edges().iter().map(|&(u, v)| ((u * 3) % 8, (v * 3) % 8))).unwrap();
        let m = v8_labelling(&relabelled).unwrap();
        for i in 0..8 {
            assert!(relabelled.has_edge(m[i], m[(i + 1) % 8]));
        }
    }

    #[test]
    fn family_sizes() {
        assert_eq!(complete(6).m(), 15);
        assert_eq!(complete_bipartite(3, 3).m(), 9);
        assert_eq!(grid(4, 4).m(), 24);
        assert_eq!(octahedron().m(), 12);
    }
}
