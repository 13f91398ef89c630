//! Maximum-cardinality matching in general graphs (Edmonds' blossom algorithm).

use std::collections::VecDeque;

use super::Graph;

const NONE: usize = usize::MAX;

/// A maximum matching as edges `(u, v)` with `u < v`, sorted.
pub fn max_matching(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut mate = vec![NONE; n];
    // Greedy start keeps the augmenting phase short.
    for &(u, v) in g.edges() {
        if mate[u] == NONE && mate[v] == NONE {
            mate[u] = v;
            mate[v] = u;
        }
    }
    for root in 0..n {
        if mate[root] == NONE {
            if let Some(end) = find_path(g, &mate, root) {
                // `end` carries the alternating path back to `root` through `parent`.
                augment(&mut mate, end.0, &end.1);
            }
        }
    }
    let mut out: Vec<(usize, usize)> =
        (0..n).filter(|&v| mate[v] != NONE && v < mate[v]).map(|v| (v, mate[v])).collect();
    out.sort_unstable();
    out
}

fn augment(mate: &mut [usize], mut v: usize, parent: &[usize]) {
    while v != NONE {
        let pv = parent[v];
        let ppv = mate[pv];
        mate[v] = pv;
        mate[pv] = v;
        v = ppv;
    }
}

fn lca(mate: &[usize], base: &[usize], parent: &[usize], a: usize, b: usize) -> usize {
    let mut used = vec![false; mate.len()];
    let mut a = a;
    loop {
        a = base[a];
        used[a] = true;
        if mate[a] == NONE {
            break;
        }
        a = parent[mate[a]];
    }
    let mut b = b;
    loop {
        b = base[b];
        if used[b] {
            return b;
        }
        b = parent[mate[b]];
    }
}

fn find_path(g: &Graph, mate: &[usize], root: usize) -> Option<(usize, Vec<usize>)> {
    let n = g.n();
    let mut used = vec![false; n];
    let mut parent = vec![NONE; n];
    let mut base: Vec<usize> = (0..n).collect();
    used[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &to in g.neighbors(v) {
            if base[v] == base[to] || mate[v] == to {
                continue;
            }
            if to == root || (mate[to] != NONE && parent[mate[to]] != NONE) {
                let cur = lca(mate, &base, &parent, v, to);
                let mut blossom = vec![false; n];
                mark_path(mate, &mut base, &mut parent, &mut blossom, v, cur, to);
                mark_path(mate, &mut base, &mut parent, &mut blossom, to, cur, v);
                for i in 0..n {
                    if blossom[base[i]] {
                        base[i] = cur;
                        if !used[i] {
                            used[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to] == NONE {
                parent[to] = v;
                if mate[to] == NONE {
                    return Some((to, parent));
                }
                let m = mate[to];
                used[m] = true;
                queue.push_back(m);
            }
        }
    }
    None
}

fn mark_path(
    mate: &[usize],
    base: &mut [usize],
    parent: &mut [usize],
    blossom: &mut [bool],
    mut v: usize,
    b: usize,
    mut child: usize,
) {
    while base[v] != b {
        blossom[base[v]] = true;
        blossom[base[mate[v]]] = true;
        parent[v] = child;
        child = mate[v];
        v = parent[mate[v]];
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn brute(g: &Graph) -> usize {
        fn go(g: &Graph, i: usize, used: &mut Vec<bool>) -> usize {
            if i == g.m() {
                return 0;
            }
            let mut best = go(g, i + 1, used);
            let (u, v) = g.edge(i);
            if !used[u] && !used[v] {
                used[u] = true;
                used[v] = true;
                best = best.max(1 + go(g, i + 1, used));
                used[u] = false;
                used[v] = false;
            }
            best
        }
        go(g, 0, &mut vec![false; g.n()])
    }

    #[test]
    fn small_graphs() {
        assert_eq!(max_matching(&path(4)).len(), 2);
        assert_eq!(max_matching(&complete(4)).len(), 2);
        assert_eq!(max_matching(&cycle(7)).len(), 3);
        assert_eq!(max_matching(&complete_bipartite(2, 5)).len(), 2);
    }

    #[test]
    fn odd_cycles_need_blossoms() {
        // Two triangles joined by a path; greedy order picks a bad start.
        let g = Graph::from_edges(8, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 5), (0, 3)])
            .unwrap();
        assert_eq!(max_matching(&g).len(), brute(&g));
        let p = petersen();
        assert_eq!(max_matching(&p).len(), 5);
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, e).unwrap()
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..11);
            let edges: Vec<(usize, usize)> =
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|_| rng.gen_bool(0.35)).collect();
            let g = Graph::from_edges(n, edges).unwrap();
            let m = max_matching(&g);
            assert_eq!(m.len(), brute(&g));
            let mut seen = vec![false; n];
            for &(u, v) in &m {
                assert!(g.has_edge(u, v) && !seen[u] && !seen[v]);
                seen[u] = true;
                seen[v] = true;
            }
        }
    }
}
