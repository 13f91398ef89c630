//! Exact tree-width by dynamic programming over vertex subsets.
//!
//! `TW(S)` is the best possible maximum, over prefixes of an elimination order
//! that eliminates exactly `S` first, of `|Q(prefix, v)|`: the vertices outside
//! `prefix ∪ {v}` reachable from `v` through `prefix`.

use super::Graph;
use crate::decomp::Decomposition;
use crate::error::{Error, Result};

pub const TREEWIDTH_ORACLE_CAP: usize = 18;

/// Tree-width of `g` with a strong tree decomposition of width `tw + 1`.
pub fn treewidth_exact(g: &Graph) -> Result<(usize, Decomposition)> {
    treewidth_exact_with_cap(g, TREEWIDTH_ORACLE_CAP)
}

pub fn treewidth_exact_with_cap(g: &Graph, cap: usize) -> Result<(usize, Decomposition)> {
    let n = g.n();
    if n > cap || n > 30 {
        return Err(Error::Precondition(format!("tree-width oracle limited to {} vertices, got {n}", cap.min(30))));
    }
    if n == 0 {
        return Ok((0, Decomposition::from_tree(g.clone(), Vec::new(), Vec::new())));
    }
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
    let full = (1u32 << n) - 1;
    let mut tw = vec![u8::MAX; 1 << n];
    let mut last = vec![0u8; 1 << n];
    tw[0] = 0;
    for s in 1..=full {
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = s & !(1 << v);
            let q = q_set(&adj, prev, v).count_ones() as u8;
            let cand = tw[prev as usize].max(q);
            if cand < tw[s as usize] {
                tw[s as usize] = cand;
                last[s as usize] = v as u8;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = last[s as usize] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    let width = tw[full as usize] as usize;
    let d = elimination_decomposition(g, &order);
    debug_assert_eq!(d.width(), width + 1);
    Ok((width, d))
}

fn q_set(adj: &[u32], s: u32, v: usize) -> u32 {
    let mut seen = 1u32 << v;
    let mut frontier = 1u32 << v;
    let mut out = 0u32;
    while frontier != 0 {
        let u = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let nb = adj[u] & !seen;
        seen |= nb;
        out |= nb & !s;
        frontier |= nb & s;
    }
    out
}

/// Greedy elimination order: fewest fill edges first, then lowest degree, then lowest id.
pub fn min_fill_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut adj: Vec<std::collections::BTreeSet<usize>> =
        (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    let fill = |adj: &[std::collections::BTreeSet<usize>], v: usize| {
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        let mut missing = 0;
        for (i, &x) in nb.iter().enumerate() {
            missing += nb[i + 1..].iter().filter(|y| !adj[x].contains(y)).count();
        }
        missing
    };
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (fill(&adj, v), adj[v].len(), v))
            .expect("a live vertex remains");
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        for (i, &x) in nb.iter().enumerate() {
            adj[x].remove(&v);
            for &y in &nb[i + 1..] {
                adj[x].insert(y);
                adj[y].insert(x);
            }
        }
        adj[v].clear();
        alive[v] = false;
        order.push(v);
    }
    order
}

/// Tree decomposition from an elimination order: bag of `v` is `v` plus its
/// later neighbours in the fill graph, attached to the earliest of them.
pub fn elimination_decomposition(g: &Graph, order: &[usize]) -> Decomposition {
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut fill: Vec<std::collections::BTreeSet<usize>> =
        (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut bags = Vec::with_capacity(n);
    let mut parent = vec![None; n];
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<usize> = fill[v].iter().copied().filter(|&w| pos[w] > i).collect();
        for (a, &x) in later.iter().enumerate() {
            for &y in &later[a + 1..] {
                fill[x].insert(y);
                fill[y].insert(x);
            }
        }
        parent[i] = later.iter().map(|&w| pos[w]).min();
        let mut bag = later;
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
    }
    let mut tree = Vec::new();
    let mut prev_root: Option<usize> = None;
    for (i, p) in parent.iter().enumerate() {
        match p {
            Some(p) => tree.push((i, *p)),
            None => {
                if let Some(r) = prev_root {
                    tree.push((r, i));
                }
                prev_root = Some(i);
            }
        }
    }
    Decomposition::from_tree(g.clone(), bags, tree)
}
