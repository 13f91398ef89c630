//! Exact K5 / K3,3 minor testing for small graphs.
//!
//! Both targets are 3-connected, so a minor lives in one block, and in one side
//! of any 2-separation once the separating pair is joined by a virtual edge.
//! K5 also survives splitting along separating triangles. A 3-connected
//! nonplanar graph other than K5 contains K3,3; a 4-connected nonplanar graph
//! contains K5. What remains is settled by delete/contract branching.

use std::collections::HashMap;

use super::blocks::biconnected_components;
use super::families::is_v8;
use super::planarity::is_planar;
use super::separators::{components_without, separating_triangles, three_separators, two_separators};
use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MinorTarget {
    K5,
    K33,
}

/// Default vertex cap for the minor oracle.
pub const MINOR_ORACLE_CAP: usize = 25;

pub fn has_minor_small(g: &Graph, h: MinorTarget) -> Result<bool> {
    has_minor_with_cap(g, h, MINOR_ORACLE_CAP)
}

pub fn has_minor_with_cap(g: &Graph, h: MinorTarget, cap: usize) -> Result<bool> {
    if g.n() > cap {
        return Err(Error::Precondition(format!("minor oracle limited to {cap} vertices, got {}", g.n())));
    }
    let mut memo = HashMap::new();
    Ok(search(g.clone(), h, &mut memo))
}

fn search(g: Graph, h: MinorTarget, memo: &mut HashMap<Vec<(usize, usize)>, bool>) -> bool {
    let g = suppress_low_degree(&g);
    let (n, m) = (g.n(), g.m());
    match h {
        MinorTarget::K5 => {
            if n < 5 || m < 10 {
                return false;
            }
            if m > 3 * n - 6 {
                return true;
            }
        }
        MinorTarget::K33 => {
            if n < 6 || m < 9 {
                return false;
            }
            if m > 3 * n - 5 {
                return true;
            }
        }
    }
    if is_planar(&g) {
        return false;
    }
    let blocks = biconnected_components(&g);
    if blocks.vertices.len() > 1 {
        return blocks.vertices.iter().any(|vs| search(g.induced(vs), h, memo));
    }
    if let Some(sep) = two_separators(&g).first() {
        let [a, b] = *sep;
        return components_without(&g, &[a, b]).iter().any(|c| {
            let mut vs = c.clone();
            vs.extend([a, b]);
            vs.sort_unstable();
            let piece = g.induced(&vs);
            let (ia, ib) = (vs.binary_search(&a).unwrap(), vs.binary_search(&b).unwrap());
            search(piece.with_edges([(ia, ib)]).expect("virtual edge"), h, memo)
        });
    }
    if h == MinorTarget::K33 {
        return true;
    }
    if let Some(t) = separating_triangles(&g).first() {
        return components_without(&g, t).iter().any(|c| {
            let mut vs = c.clone();
            vs.extend(t.iter());
            vs.sort_unstable();
            search(g.induced(&vs), h, memo)
        });
    }
    if is_v8(&g) {
        return false;
    }
    if three_separators(&g).is_empty() {
        return true;
    }
    let key = g.edges().to_vec();
    if let Some(&r) = memo.get(&key) {
        return r;
    }
    let v = (0..n).min_by_key(|&v| g.degree(v)).expect("nonempty graph");
    let result = if g.degree(v) == 3 {
        search(delete_vertex(&g, v), h, memo) || g.neighbors(v).iter().any(|&w| search(contract(&g, w, v), h, memo))
    } else {
        let w = g.neighbors(v)[0];
        search(g.without_edges(&[(v, w)]), h, memo) || search(contract(&g, w, v), h, memo)
    };
    memo.insert(key, result);
    result
}

/// Deletes vertices of degree at most one and suppresses degree-two vertices.
fn suppress_low_degree(g: &Graph) -> Graph {
    let n = g.n();
    let mut adj: Vec<std::collections::BTreeSet<usize>> =
        (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    let mut stack: Vec<usize> = (0..n).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] || adj[v].len() > 2 {
            continue;
        }
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        alive[v] = false;
        for &w in &nb {
            adj[w].remove(&v);
        }
        adj[v].clear();
        if nb.len() == 2 {
            let (a, b) = (nb[0], nb[1]);
            adj[a].insert(b);
            adj[b].insert(a);
        }
        stack.extend(nb);
    }
    let keep: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let mut local = vec![usize::MAX; n];
    for (i, &v) in keep.iter().enumerate() {
        local[v] = i;
    }
    let edges = keep
        .iter()
        .flat_map(|&v| adj[v].iter().filter(move |&&w| v < w).map(move |&w| (v, w)))
        .map(|(v, w)| (local[v], local[w]))
        .collect::<Vec<_>>();
    Graph::from_edges(keep.len(), edges).expect("valid reduction")
}

fn delete_vertex(g: &Graph, v: usize) -> Graph {
    let keep: Vec<usize> = (0..g.n()).filter(|&u| u != v).collect();
    g.induced(&keep)
}

/// Contracts edge `uv` into `u`; vertices above `v` shift down by one.
pub fn contract(g: &Graph, u: usize, v: usize) -> Graph {
    let map = |x: usize| {
        let x = if x == v { u } else { x };
        if x > v {
            x - 1
        } else {
            x
        }
    };
    let edges = g.edges().iter().map(|&(a, b)| (map(a), map(b))).filter(|(a, b)| a != b).collect::<Vec<_>>();
    Graph::from_edges(g.n() - 1, edges).expect("valid contraction")
}
