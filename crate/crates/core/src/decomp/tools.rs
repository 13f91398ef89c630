//! Constructors and transformations of decompositions.

use super::Decomposition;
use crate::error::{Error, Result};
use crate::graph::cliques::clique_number;
use crate::graph::degeneracy::degeneracy_order;
use crate::graph::matching::max_matching;
use crate::graph::planarity::is_planar;
use crate::graph::triangulate::triangulate;
use crate::graph::Graph;

/// Bags `{v}` over a copy of `g`; width 1, strong only when `g` has no edges.
pub fn identity_decomposition(g: &Graph) -> Decomposition {
    let bags = (0..g.n()).map(|v| vec![v]).collect();
    Decomposition::new(g.clone(), bags, g.clone(), g.m() == 0, 2).expect("one bag per vertex")
}

/// Strong planar decomposition of width 2 with bags `{i, j}` for `i <= j`.
///
/// Bag `{i, j}` is adjacent to `{i + 1, j}`, so the bags holding `i` form a path
/// of length `n - 1`; the spread is `n` and the order `n(n + 1)/2`.
pub fn quadratic_decomp(g: &Graph) -> Decomposition {
    let n = g.n();
    let mut id = vec![vec![usize::MAX; n]; n];
    let mut bags = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n {
            id[i][j] = bags.len();
            id[j][i] = bags.len();
            bags.push(if i == j { vec![i] } else { vec![i, j] });
        }
    }
    let mut dedges = Vec::new();
    for i in 0..n.saturating_sub(1) {
        for j in 0..n {
            dedges.push((id[i][j], id[i + 1][j]));
        }
    }
    let dgraph = Graph::from_edges(bags.len(), dedges).expect("grid edges");
    Decomposition::new(g.clone(), bags, dgraph, true, 2).expect("bag count matches")
}

/// Merges bag groups: `group[b]` is the new bag of old bag `b`, `groups` new bags.
/// New bag contents are unions; loops and parallel edges of `D` disappear.
pub fn contract_groups(d: &Decomposition, group: &[usize], groups: usize) -> Decomposition {
    let mut bags = vec![Vec::new(); groups];
    for (b, bag) in d.bags.iter().enumerate() {
        bags[group[b]].extend(bag.iter().copied());
    }
    let dgraph = d.dgraph.quotient(group, groups);
    Decomposition::new(d.host.clone(), bags, dgraph, d.strong, d.p).expect("bag count matches")
}

/// Contracts the `D`-edge `xy` into the bag `X ∪ Y`, which takes the smaller id.
pub fn contract_edge(d: &Decomposition, x: usize, y: usize) -> Result<Decomposition> {
    if x >= d.order() || y >= d.order() || !d.dgraph.has_edge(x, y) {
        return Err(Error::Precondition(format!("bags {x} and {y} are not adjacent")));
    }
    let (keep, gone) = (x.min(y), x.max(y));
    let group: Vec<usize> = (0..d.order())
        .map(|b| match b.cmp(&gone) {
            std::cmp::Ordering::Less => b,
            std::cmp::Ordering::Equal => keep,
            std::cmp::Ordering::Greater => b - 1,
        })
        .collect();
    Ok(contract_groups(d, &group, d.order() - 1))
}

/// Contracts every edge of a matching of `D`; order drops by `|m|`.
pub fn contract_matching(d: &Decomposition, m: &[(usize, usize)]) -> Result<Decomposition> {
    let mut partner = vec![usize::MAX; d.order()];
    for &(x, y) in m {
        if x >= d.order() || y >= d.order() || !d.dgraph.has_edge(x, y) {
            return Err(Error::Precondition(format!("({x}, {y}) is not an edge of D")));
        }
        if partner[x] != usize::MAX || partner[y] != usize::MAX {
            return Err(Error::Precondition(format!("matching edges overlap at ({x}, {y})")));
        }
        partner[x] = y;
        partner[y] = x;
    }
    let mut group = vec![usize::MAX; d.order()];
    let mut next = 0;
    for b in 0..d.order() {
        if group[b] == usize::MAX {
            group[b] = next;
            if partner[b] != usize::MAX {
                group[partner[b]] = next;
            }
            next += 1;
        }
    }
    Ok(contract_groups(d, &group, next))
}

#[derive(Clone, Debug)]
pub struct ReduceOrderOutcome {
    pub decomposition: Decomposition,
    pub iterations: usize,
}

/// Repeats triangulate, maximum matching and contraction until the order is at
/// most `|V(G)|`. Each round at least a third of the bags are matched.
pub fn reduce_order(d: &Decomposition) -> Result<ReduceOrderOutcome> {
    if !is_planar(&d.dgraph) {
        return Err(Error::Precondition("decomposition graph is not planar".into()));
    }
    let target = d.host.n().max(1);
    let mut cur = d.clone();
    let mut iterations = 0;
    while cur.order() > target {
        let k = cur.order();
        let dg = if k >= 3 { triangulate(&cur.dgraph)?.graph } else { Graph::from_edges(k, [(0, 1)])? };
        // Extra edges of D keep it a decomposition and keep it planar.
        cur.dgraph = dg;
        let m = max_matching(&cur.dgraph);
        debug_assert!(3 * m.len() >= k);
        cur = contract_matching(&cur, &m)?;
        debug_assert!(is_planar(&cur.dgraph));
        iterations += 1;
    }
    Ok(ReduceOrderOutcome { decomposition: cur, iterations })
}

/// Bag `Y` of `j` becomes the union of the `d`-bags it holds; the result has
/// the shape of `j` and inherits the qualifiers of `d`.
pub fn compose(d: &Decomposition, j: &Decomposition) -> Result<Decomposition> {
    if j.host != d.dgraph {
        return Err(Error::Precondition("outer decomposition is not a decomposition of the inner graph D".into()));
    }
    let bags = j.bags.iter().map(|y| y.iter().flat_map(|&x| d.bags[x].iter().copied()).collect()).collect();
    Decomposition::new(d.host.clone(), bags, j.dgraph.clone(), d.strong, d.p)
}

/// Strong ω-decomposition shaped like `g`: bag `{v} ∪ N⁻(v)` for a degeneracy orientation.
pub fn degen_omega(g: &Graph) -> Decomposition {
    let dg = degeneracy_order(g);
    let bags = (0..g.n())
        .map(|v| {
            let mut b = dg.orientation.in_neighbors(g, v);
            b.push(v);
            b
        })
        .collect();
    let omega = clique_number(g);
    Decomposition::new(g.clone(), bags, g.clone(), true, omega).expect("one bag per vertex")
}

/// Strong ω-decomposition shaped like `d.dgraph`, width at most `k(deg + 1)`.
pub fn to_omega(d: &Decomposition) -> Result<Decomposition> {
    compose(&degen_omega(&d.host), d)
}
