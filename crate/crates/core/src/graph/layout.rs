//! Crossing-free straight-line grid layout by canonical ordering and shifting
//! (de Fraysseix–Pach–Pollack) on a triangulated supergraph.

use super::planarity::{planar_embedding, Embedding};
use super::triangulate::triangulate_embedded;
use super::Graph;
use crate::error::{Error, Result};
use crate::geom::Pt;

/// Integer coordinates for a planar graph, computed from any embedding of it.
pub fn straight_line_layout_of(g: &Graph) -> Result<Vec<Pt>> {
    let emb = planar_embedding(g).ok_or_else(|| Error::Precondition("layout needs a planar graph".into()))?;
    straight_line_layout(g, &emb)
}

/// Integer coordinates on a `(2n-4) x (n-2)` grid; edges drawn straight never cross.
pub fn straight_line_layout(g: &Graph, emb: &Embedding) -> Result<Vec<Pt>> {
    let n = g.n();
    match n {
        0 => return Ok(Vec::new()),
        1 => return Ok(vec![Pt::new(0, 0)]),
        2 => return Ok(vec![Pt::new(0, 0), Pt::new(1, 0)]),
        _ => {}
    }
    let tri = triangulate_embedded(g, emb)?;
    let t = &tri.graph;
    let faces = tri.embedding.faces();
    let outer = faces
        .iter()
        .min_by_key(|f| {
            let mut s = f.to_vec();
            s.sort_unstable();
            s
        })
        .expect("a triangulation has faces");
    let order = canonical_order(t, outer[0], outer[1], outer[2]);
    shift_layout(t, &order)
}

/// Canonical ordering with `v1 = a`, `v2 = b` and last vertex `c` (a face triangle).
fn canonical_order(t: &Graph, a: usize, b: usize, c: usize) -> Vec<usize> {
    let n = t.n();
    let mut removed = vec![false; n];
    let mut outer = vec![false; n];
    let mut outer_nbrs = vec![0usize; n];
    let mark_outer = |v: usize, outer: &mut Vec<bool>, outer_nbrs: &mut Vec<usize>, removed: &[bool]| {
        outer[v] = true;
        for &w in t.neighbors(v) {
            if !removed[w] {
                outer_nbrs[w] += 1;
            }
        }
    };
    for v in [a, b, c] {
        mark_outer(v, &mut outer, &mut outer_nbrs, &removed);
    }
    let mut rev = Vec::with_capacity(n);
    for _ in 2..n {
        let v = (0..n)
            .find(|&v| outer[v] && !removed[v] && v != a && v != b && outer_nbrs[v] == 2)
            .expect("triangulations always have a removable outer vertex");
        removed[v] = true;
        rev.push(v);
        for &w in t.neighbors(v) {
            if !removed[w] {
                outer_nbrs[w] -= 1;
            }
        }
        for &w in t.neighbors(v) {
            if !removed[w] && !outer[w] {
                mark_outer(w, &mut outer, &mut outer_nbrs, &removed);
            }
        }
    }
    let mut order = vec![a, b];
    order.extend(rev.into_iter().rev());
    order
}

fn shift_layout(t: &Graph, order: &[usize]) -> Result<Vec<Pt>> {
    let n = t.n();
    let mut x = vec![0i64; n];
    let mut y = vec![0i64; n];
    let mut placed = vec![false; n];
    let mut shift_set: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let (v1, v2, v3) = (order[0], order[1], order[2]);
    x[v2] = 2;
    x[v3] = 1;
    y[v3] = 1;
    for v in [v1, v2, v3] {
        placed[v] = true;
    }
    let mut contour = vec![v1, v3, v2];
    for &v in &order[3..] {
        let on: Vec<usize> = contour.iter().enumerate().filter(|(_, &w)| t.has_edge(v, w)).map(|(i, _)| i).collect();
        let (p, q) = match (on.first(), on.last()) {
            (Some(&p), Some(&q)) if p < q => (p, q),
            _ => return Err(Error::Invariant(format!("vertex {v} sees fewer than two contour vertices"))),
        };
        for (i, &w) in contour.iter().enumerate().skip(p + 1) {
            let dx = if i < q { 1 } else { 2 };
            for &u in &shift_set[w] {
                x[u] += dx;
            }
        }
        let (wp, wq) = (contour[p], contour[q]);
        let sx = x[wp] + x[wq] + y[wq] - y[wp];
        let sy = x[wq] - x[wp] + y[wq] + y[wp];
        if sx % 2 != 0 || sy % 2 != 0 {
            return Err(Error::Invariant("shift layout lost parity".into()));
        }
        x[v] = sx / 2;
        y[v] = sy / 2;
        placed[v] = true;
        let mut set = vec![v];
        for &w in &contour[p + 1..q] {
            set.extend(std::mem::take(&mut shift_set[w]));
        }
        shift_set[v] = set;
        let mut next = contour[..=p].to_vec();
        next.push(v);
        next.extend_from_slice(&contour[q..]);
        contour = next;
    }
    debug_assert!(placed.iter().all(|&p| p));
    Ok((0..n).map(|v| Pt::new(x[v], y[v])).collect())
}
