//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls the library's counting or validation code: crossings
//! are counted segment pair by segment pair with `i128` orientation tests,
//! and decompositions are checked straight from the definition.

#![allow(dead_code)]

use std::collections::BTreeSet;

use plandec::geom::Pt;
use plandec::{Decomposition, Drawing, Graph};

fn orient(a: Pt, b: Pt, c: Pt) -> i128 {
    let (ax, ay) = (a.x as i128, a.y as i128);
    (b.x as i128 - ax) * (c.y as i128 - ay) - (b.y as i128 - ay) * (c.x as i128 - ax)
}

fn proper(a: Pt, b: Pt, c: Pt, d: Pt) -> bool {
    let (o1, o2) = (orient(a, b, c).signum(), orient(a, b, d).signum());
    let (o3, o4) = (orient(c, d, a).signum(), orient(c, d, b).signum());
    o1 * o2 < 0 && o3 * o4 < 0
}

/// Total proper crossings and the per-edge counts, all pairs of segments of
/// distinct edges. Valid for drawings in general position.
pub fn naive_crossings(dr: &Drawing) -> (usize, Vec<usize>) {
    let g = &dr.host;
    let lines: Vec<Vec<Pt>> = (0..g.m())
        .map(|e| {
            let (u, v) = g.edge(e);
            let mut l = vec![dr.points[u]];
            l.extend(dr.routes[e].iter().copied());
            l.push(dr.points[v]);
            l
        })
        .collect();
    let mut per_edge = vec![0; g.m()];
    let mut total = 0;
    for e in 0..g.m() {
        for f in e + 1..g.m() {
            for s in lines[e].windows(2) {
                for t in lines[f].windows(2) {
                    if proper(s[0], s[1], t[0], t[1]) {
                        total += 1;
                        per_edge[e] += 1;
                        per_edge[f] += 1;
                    }
                }
            }
        }
    }
    (total, per_edge)
}

/// Whether `d` satisfies every defining condition, checked by exhaustion.
pub fn brute_valid(d: &Decomposition) -> bool {
    let g = &d.host;
    let n = g.n();
    if d.bags.iter().flatten().any(|&v| v >= n) {
        return false;
    }
    let holds = |x: usize, v: usize| d.bags[x].contains(&v);
    let adjacent = |x: usize, y: usize| d.dgraph.neighbors(x).contains(&y);
    for v in 0..n {
        let mine: Vec<usize> = (0..d.bags.len()).filter(|&x| holds(x, v)).collect();
        let Some(&first) = mine.first() else {
            return false;
        };
        let mut reach: BTreeSet<usize> = BTreeSet::from([first]);
        let mut frontier = vec![first];
        while let Some(x) = frontier.pop() {
            for &y in &mine {
                if adjacent(x, y) && reach.insert(y) {
                    frontier.push(y);
                }
            }
        }
        if reach.len() != mine.len() {
            return false;
        }
    }
    let covered = |set: &[usize], pairs: bool| {
        (0..d.bags.len()).any(|x| {
            set.iter().all(|&v| holds(x, v))
                || (pairs
                    && (0..d.bags.len()).any(|y| adjacent(x, y) && set.iter().all(|&v| holds(x, v) || holds(y, v))))
        })
    };
    for &(u, v) in g.edges() {
        if !covered(&[u, v], !d.strong) {
            return false;
        }
    }
    if d.p >= 3 {
        for mask in 0u32..(1 << n) {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let clique = set.iter().enumerate().all(|(i, &a)| set[i + 1..].iter().all(|&b| g.has_edge(a, b)));
            if (3..=d.p).contains(&set.len()) && clique && !covered(&set, !d.strong) {
                return false;
            }
        }
    }
    let k = d.bags.iter().map(Vec::len).max().unwrap_or(0);
    let c2 = k * k.saturating_sub(1) / 2;
    let bound = if d.strong { c2 * d.bags.len() } else { k * k * d.dgraph.m() + c2 * d.bags.len() };
    g.m() <= bound
}

/// Vertices with no incident edge.
pub fn isolated(g: &Graph) -> usize {
    (0..g.n()).filter(|&v| g.degree(v) == 0).count()
}

/// Non-isolated vertices on no crossed edge.
pub fn uncrossed(g: &Graph, per_edge: &[usize]) -> usize {
    (0..g.n()).filter(|&v| g.degree(v) > 0 && g.incident(v).iter().all(|&e| per_edge[e] == 0)).count()
}

/// `2 Δ² Σ_X C(|X| + 1, 2)`.
pub fn render_bound(d: &Decomposition) -> u64 {
    let delta = d.host.max_degree() as u64;
    let sum: u64 = d.bags.iter().map(|b| (b.len() as u64 + 1) * b.len() as u64 / 2).sum();
    2 * delta * delta * sum
}
