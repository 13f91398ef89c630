//! Clique enumeration.

use super::Graph;

/// All nonempty cliques with at most `p` vertices, each sorted, in lexicographic order.
pub fn enumerate_cliques(g: &Graph, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    for v in 0..g.n() {
        let cand: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| w > v).collect();
        cur.push(v);
        extend(g, p, &mut cur, &cand, &mut out);
        cur.pop();
    }
    out.sort();
    out
}

fn extend(g: &Graph, p: usize, cur: &mut Vec<usize>, cand: &[usize], out: &mut Vec<Vec<usize>>) {
    out.push(cur.clone());
    if cur.len() == p {
        return;
    }
    for (i, &w) in cand.iter().enumerate() {
        let next: Vec<usize> = cand[i + 1..].iter().copied().filter(|&x| g.has_edge(w, x)).collect();
        cur.push(w);
        extend(g, p, cur, &next, out);
        cur.pop();
    }
}

/// Maximal cliques (Bron–Kerbosch with pivoting), each sorted, in lexicographic order.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let all: Vec<usize> = (0..g.n()).collect();
    bron_kerbosch(g, &mut Vec::new(), all, Vec::new(), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(g: &Graph, r: &mut Vec<usize>, p: Vec<usize>, x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&w| g.has_edge(u, w)).count())
        .expect("nonempty candidate set");
    let mut p = p;
    let mut x = x;
    let branch: Vec<usize> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
    for v in branch {
        let np = p.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        let nx = x.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        r.push(v);
        bron_kerbosch(g, r, np, nx, out);
        r.pop();
        p.retain(|&w| w != v);
        x.push(v);
    }
}

/// Size of a largest clique (0 for the empty graph).
pub fn clique_number(g: &Graph) -> usize {
    maximal_cliques(g).iter().map(Vec::len).max().unwrap_or(0)
}

/// All triangles `[a, b, c]` with `a < b < c`.
pub fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for &(a, b) in g.edges() {
        for &c in g.neighbors(b) {
            if c > b && g.has_edge(a, c) {
                out.push([a, b, c]);
            }
        }
    }
    out.sort_unstable();
    out
}
