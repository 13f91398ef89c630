//! Exact crossing counting.

use std::collections::HashMap;

use serde::Serialize;

use super::Drawing;
use crate::error::{Degeneracy, Error, Result};
use crate::geom::{classify, crossing_point, on_segment, Pt, RatPoint, SegmentMeet};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingPair {
    pub e: usize,
    pub f: usize,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingReport {
    pub total: usize,
    pub per_edge: Vec<usize>,
    /// Pairs `e < f` that cross, with multiplicity.
    pub pairs: Vec<CrossingPair>,
}

impl CrossingReport {
    pub fn max_per_edge(&self) -> usize {
        self.per_edge.iter().copied().max().unwrap_or(0)
    }

    fn from_pairs(m: usize, mut counts: Vec<((usize, usize), usize)>) -> CrossingReport {
        counts.sort_unstable();
        let mut per_edge = vec![0; m];
        let mut total = 0;
        let pairs = counts
            .into_iter()
            .map(|((e, f), count)| {
                per_edge[e] += count;
                per_edge[f] += count;
                total += count;
                CrossingPair { e, f, count }
            })
            .collect();
        CrossingReport { total, per_edge, pairs }
    }
}

/// One straight piece of an edge route.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Seg {
    pub edge: usize,
    pub idx: usize,
    pub a: Pt,
    pub b: Pt,
}

/// A proper crossing between segment `s` of one edge and segment `t` of another.
#[derive(Clone, Debug)]
pub(crate) struct Crossing {
    pub s: usize,
    pub t: usize,
    pub point: RatPoint,
}

pub(crate) fn segments(dr: &Drawing) -> Vec<Seg> {
    let mut out = Vec::new();
    for e in 0..dr.host.m() {
        let pl = dr.polyline(e);
        for (idx, w) in pl.windows(2).enumerate() {
            out.push(Seg { edge: e, idx, a: w[0], b: w[1] });
        }
    }
    out
}

/// All proper crossings, after checking every general-position condition.
pub(crate) fn crossings(dr: &Drawing) -> Result<(Vec<Seg>, Vec<Crossing>)> {
    dr.check_shape()?;
    let g = &dr.host;
    let mut at: HashMap<Pt, usize> = HashMap::new();
    for (v, &p) in dr.points.iter().enumerate() {
        if let Some(u) = at.insert(p, v) {
            return Err(Error::Degenerate(Degeneracy::CoincidentPoints { a: u, b: v }));
        }
    }
    let segs = segments(dr);
    for s in &segs {
        if s.a == s.b {
            return Err(Error::Degenerate(Degeneracy::ZeroLengthSegment { edge: s.edge, segment: s.idx }));
        }
    }
    // Vertices without edges are not segment endpoints; check them directly.
    for v in (0..g.n()).filter(|&v| g.degree(v) == 0) {
        if let Some(s) = segs.iter().find(|s| on_segment(s.a, s.b, dr.points[v])) {
            return Err(Error::Degenerate(Degeneracy::EdgeThroughVertex { edge: s.edge, vertex: v }));
        }
    }
    let mut order: Vec<usize> = (0..segs.len()).collect();
    let minx = |s: &Seg| s.a.x.min(s.b.x);
    order.sort_by_key(|&i| minx(&segs[i]));
    let mut found = Vec::new();
    for (oi, &i) in order.iter().enumerate() {
        let si = segs[i];
        let maxx = si.a.x.max(si.b.x);
        for &j in &order[oi + 1..] {
            let sj = segs[j];
            if minx(&sj) > maxx {
                break;
            }
            let meet = classify(si.a, si.b, sj.a, sj.b);
            if meet == SegmentMeet::Disjoint {
                continue;
            }
            let (s, t) = if i < j { (i, j) } else { (j, i) };
            let (ss, st) = (segs[s], segs[t]);
            if ss.edge == st.edge {
                let adjacent = st.idx == ss.idx + 1 || ss.idx == st.idx + 1;
                if meet != SegmentMeet::Touch || !adjacent {
                    return Err(Error::Degenerate(Degeneracy::NonSimpleRoute { edge: ss.edge }));
                }
                continue;
            }
            match meet {
                SegmentMeet::Proper => found.push(Crossing { s, t, point: crossing_point(ss.a, ss.b, st.a, st.b) }),
                SegmentMeet::Overlap => {
                    return Err(Error::Degenerate(Degeneracy::Overlap { e: ss.edge, f: st.edge }));
                }
                SegmentMeet::Touch => check_touch(dr, &at, ss, st)?,
                SegmentMeet::Disjoint => unreachable!(),
            }
        }
    }
    let mut by_point: HashMap<&RatPoint, Vec<usize>> = HashMap::new();
    for c in &found {
        let edges = by_point.entry(&c.point).or_default();
        edges.extend([segs[c.s].edge, segs[c.t].edge]);
    }
    for edges in by_point.into_values() {
        if edges.len() > 2 {
            let mut edges = edges;
            edges.sort_unstable();
            edges.dedup();
            return Err(Error::Degenerate(Degeneracy::TriplePoint { edges }));
        }
    }
    found.sort_by_key(|c| (c.s, c.t));
    Ok((segs, found))
}

/// Two segments of different edges share one point: allowed only at a common endpoint vertex.
fn check_touch(dr: &Drawing, at: &HashMap<Pt, usize>, s: Seg, t: Seg) -> Result<()> {
    let shared = [s.a, s.b].into_iter().find(|&p| p == t.a || p == t.b);
    let (es, et) = (dr.host.edge(s.edge), dr.host.edge(t.edge));
    if let Some(p) = shared {
        if let Some(&v) = at.get(&p) {
            let ends = |e: (usize, usize)| e.0 == v || e.1 == v;
            if ends(es) && ends(et) {
                return Ok(());
            }
            let edge = if ends(es) { t.edge } else { s.edge };
            return Err(Error::Degenerate(Degeneracy::EdgeThroughVertex { edge, vertex: v }));
        }
        return Err(Error::Degenerate(Degeneracy::Touching { e: s.edge, f: t.edge }));
    }
    for (p, other) in [(s.a, t), (s.b, t), (t.a, s), (t.b, s)] {
        if on_segment(other.a, other.b, p) {
            if let Some(&v) = at.get(&p) {
                return Err(Error::Degenerate(Degeneracy::EdgeThroughVertex { edge: other.edge, vertex: v }));
            }
        }
    }
    Err(Error::Degenerate(Degeneracy::Touching { e: s.edge, f: t.edge }))
}

/// Exact crossing count; a degenerate drawing is an error, never counted.
pub fn count_crossings(dr: &Drawing) -> Result<CrossingReport> {
    let (segs, found) = crossings(dr)?;
    let mut counts: HashMap<(usize, usize), usize> = HashMap::new();
    for c in &found {
        let (e, f) = (segs[c.s].edge, segs[c.t].edge);
        *counts.entry((e.min(f), e.max(f))).or_default() += 1;
    }
    Ok(CrossingReport::from_pairs(dr.host.m(), counts.into_iter().collect()))
}

/// Crossings of the convex drawing with vertices in circular `order`:
/// two edges cross iff their endpoints interleave.
pub fn convex_count(order: &[usize], g: &Graph) -> Result<CrossingReport> {
    let n = g.n();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(Error::Precondition("circular order is not a permutation".into()));
        }
        pos[v] = i;
    }
    if order.len() != n {
        return Err(Error::Precondition("circular order is not a permutation".into()));
    }
    let chords: Vec<(usize, usize)> =
        g.edges().iter().map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v]))).collect();
    let mut counts = Vec::new();
    for (e, &(a, b)) in chords.iter().enumerate() {
        for (f, &(c, d)) in chords.iter().enumerate().skip(e + 1) {
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                counts.push(((e, f), 1));
            }
        }
    }
    Ok(CrossingReport::from_pairs(g.m(), counts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn square_with_diagonals() -> Drawing {
        let g = complete(4);
        Drawing::straight(g, vec![Pt::new(0, 0), Pt::new(4, 0), Pt::new(4, 4), Pt::new(0, 4)])
    }

    #[test]
    fn square_diagonals_cross_once() {
        let r = count_crossings(&square_with_diagonals()).unwrap();
        assert_eq!(r.total, 1);
        assert_eq!(r.pairs, vec![CrossingPair { e: 1, f: 4, count: 1 }]);
        assert_eq!(r.per_edge.iter().sum::<usize>(), 2 * r.total);
    }

    #[test]
    fn degeneracies_are_errors() {
        let g = path(3);
        let through = Drawing::straight(
            Graph::from_edges(3, [(0, 2)]).unwrap(),
            vec![Pt::new(0, 0), Pt::new(1, 0), Pt::new(2, 0)],
        );
        assert!(matches!(
            count_crossings(&through),
            Err(Error::Degenerate(Degeneracy::EdgeThroughVertex { vertex: 1, .. }))
        ));
        let same = Drawing::straight(g, vec![Pt::new(0, 0), Pt::new(0, 0), Pt::new(1, 1)]);
        assert!(matches!(count_crossings(&same), Err(Error::Degenerate(Degeneracy::CoincidentPoints { .. }))));
        // Three segments through the origin.
        let g3 = Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        let pts = [(-1, 0), (1, 0), (0, -1), (0, 1), (-1, -1), (1, 1)];
        let star = Drawing::straight(g3, pts.iter().map(|&(x, y)| Pt::new(x, y)).collect());
        assert!(matches!(count_crossings(&star), Err(Error::Degenerate(Degeneracy::TriplePoint { .. }))));
    }

    #[test]
    fn bends_are_followed() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let mut d = Drawing::straight(g, vec![Pt::new(0, 0), Pt::new(4, 0), Pt::new(2, -1), Pt::new(3, -1)]);
        d.routes[1] = vec![Pt::new(2, 5), Pt::new(3, 5)];
        assert_eq!(count_crossings(&d).unwrap().total, 2);
    }

    #[test]
    fn convex_counts() {
        assert_eq!(convex_count(&[0, 1, 2, 3], &cycle(4)).unwrap().total, 0);
        assert_eq!(convex_count(&[0, 2, 1, 3], &complete(4)).unwrap().total, 1);
        assert_eq!(convex_count(&[0, 1, 2, 3, 4], &complete(5)).unwrap().total, 5);
        assert!(convex_count(&[0, 0, 1], &path(3)).is_err());
    }
}
