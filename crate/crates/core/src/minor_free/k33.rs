//! Planarizing matchings and rectilinear drawings of K3,3-minor-free graphs.

use super::sumtree::{wagner_k33_decompose, PieceKind};
use crate::draw::{count_crossings, BoundCheck, CertifiedDrawing, Drawing};
use crate::error::{Error, Result};
use crate::geom::Pt;
use crate::graph::planarity::is_planar;
use crate::graph::Graph;
use crate::partition::{produce_drawing, Partition};

type Pair = (usize, usize);

/// A matching whose contraction leaves a planar graph, with `3|M| <= n - 2`
/// and no matched vertex on `e`.
///
/// One pair per K5 leaf, chosen disjoint from an excluded edge: `e` at the
/// leaf holding it, the join edge across a 2-join, and an edge at the join
/// vertex across a 1-join. Real edges are preferred to join pairs dropped
/// from the sum.
pub fn k33_planarizing_matching(g: &Graph, e: Pair) -> Result<Vec<Pair>> {
    let (a, b) = (e.0.min(e.1), e.0.max(e.1));
    if !g.has_edge(a, b) {
        return Err(Error::Precondition(format!("({a}, {b}) is not an edge")));
    }
    let tree = wagner_k33_decompose(g)?;
    let root = tree
        .pieces
        .iter()
        .position(|p| matches!((p.local(a), p.local(b)), (Some(x), Some(y)) if p.graph.has_edge(x, y)))
        .ok_or_else(|| Error::Invariant("no leaf holds the excluded edge".into()))?;
    let mut excluded: Vec<Option<Pair>> = vec![None; tree.pieces.len()];
    excluded[root] = Some((a, b));
    let mut seen = vec![false; tree.pieces.len()];
    seen[root] = true;
    let mut stack = vec![root];
    let mut matching = Vec::new();
    while let Some(p) = stack.pop() {
        let piece = &tree.pieces[p];
        if piece.kind == PieceKind::K5 {
            let avoid = excluded[p];
            let mut options: Vec<Pair> = piece
                .global_edges()
                .filter(|&(x, y)| avoid.is_none_or(|(u, v)| x != u && x != v && y != u && y != v))
                .collect();
            options.sort_by_key(|&(x, y)| (!g.has_edge(x, y), x, y));
            matching.push(*options.first().ok_or_else(|| Error::Invariant("K5 leaf without a free edge".into()))?);
        }
        for (j, q) in tree.neighbors(p) {
            if seen[q] {
                continue;
            }
            seen[q] = true;
            let set = &tree.joins[j].set;
            let child = &tree.pieces[q];
            excluded[q] = match set[..] {
                [x, y] => Some((x, y)),
                [x] => child.global_edges().find(|&(u, v)| u == x || v == x),
                _ => None,
            };
            stack.push(q);
        }
    }
    matching.sort_unstable();
    let mut used = vec![false; g.n()];
    for &(x, y) in &matching {
        if std::mem::replace(&mut used[x], true) || std::mem::replace(&mut used[y], true) {
            return Err(Error::Invariant("chosen pairs overlap".into()));
        }
    }
    if used[a] || used[b] {
        return Err(Error::Invariant("matching meets the excluded edge".into()));
    }
    if 3 * matching.len() + 2 > g.n().max(2) {
        return Err(Error::Invariant(format!("{} pairs on {} vertices", matching.len(), g.n())));
    }
    let p = pair_partition(g, &matching)?;
    if !is_planar(&p.pattern()) {
        return Err(Error::Invariant("contracting the matching leaves a nonplanar graph".into()));
    }
    Ok(matching)
}

fn pair_partition(g: &Graph, matching: &[Pair]) -> Result<Partition> {
    let mut paired = vec![false; g.n()];
    let mut bags: Vec<Vec<usize>> = Vec::new();
    for &(x, y) in matching {
        paired[x] = true;
        paired[y] = true;
        bags.push(vec![x, y]);
    }
    bags.extend((0..g.n()).filter(|&v| !paired[v]).map(|v| vec![v]));
    bags.sort();
    Partition::new(g.clone(), bags)
}

/// Planar partition of width at most 2 with at most `(n - 2)/3` pairs.
pub fn k33_planar_partition(g: &Graph) -> Result<Partition> {
    match g.edges().first() {
        None => Ok(Partition::singletons(g)),
        Some(&e) => pair_partition(g, &k33_planarizing_matching(g, e)?),
    }
}

/// Rectilinear drawing with at most `2Δ` crossings per edge and `Δ(3n - 5)` in total.
pub fn k33_rectilinear_drawing(g: &Graph, seed: u64) -> Result<CertifiedDrawing> {
    if g.n() < 3 {
        let dr = Drawing::straight(g.clone(), (0..g.n()).map(|i| Pt::new(i as i64, 0)).collect());
        let report = count_crossings(&dr)?;
        return Ok(CertifiedDrawing { drawing: dr, report, checks: Vec::new() });
    }
    let p = k33_planar_partition(g)?;
    let mut c = produce_drawing(g, &p, seed)?;
    let delta = g.max_degree() as u64;
    c.checks.push(BoundCheck::at_most("crossings per edge <= 2 Δ", c.report.max_per_edge(), 2 * delta));
    c.checks.push(BoundCheck::at_most("crossings <= Δ (3n - 5)", c.report.total, delta * (3 * g.n() as u64 - 5)));
    Ok(c)
}
