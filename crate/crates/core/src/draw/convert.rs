//! From drawings back to width-2 planar decompositions.

use num_bigint::BigInt;
use num_traits::Zero;

use super::count::crossings;
use super::Drawing;
use crate::decomp::{compose, Decomposition};
use crate::error::{Error, Result};
use crate::geom::{cmp_fraction, crossing_parameter, Pt};
use crate::graph::treewidth::{elimination_decomposition, min_fill_order};
use crate::graph::Graph;

/// The crossings of a drawing, and their order along every edge.
#[derive(Clone, Debug)]
pub struct Planarization {
    /// Crossing `i` is between edges `pairs[i].0 < pairs[i].1`.
    pub pairs: Vec<(usize, usize)>,
    /// Crossing ids along edge `e`, from its smaller endpoint.
    pub along: Vec<Vec<usize>>,
}

/// A crossing on an edge: segment index, parameter on that segment, crossing id.
type Stop = (usize, (i128, i128), usize);

impl Planarization {
    pub fn of(dr: &Drawing) -> Result<Planarization> {
        let (segs, found) = crossings(dr)?;
        let m = dr.host.m();
        let mut at: Vec<Vec<Stop>> = vec![Vec::new(); m];
        let mut pairs = Vec::with_capacity(found.len());
        for (id, c) in found.iter().enumerate() {
            let (s, t) = (segs[c.s], segs[c.t]);
            at[s.edge].push((s.idx, crossing_parameter(s.a, s.b, t.a, t.b), id));
            at[t.edge].push((t.idx, crossing_parameter(t.a, t.b, s.a, s.b), id));
            pairs.push((s.edge.min(t.edge), s.edge.max(t.edge)));
        }
        let along = at
            .into_iter()
            .map(|mut list| {
                list.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| cmp_fraction(a.1, b.1)));
                list.into_iter().map(|(_, _, id)| id).collect()
            })
            .collect();
        Ok(Planarization { pairs, along })
    }

    pub fn crossings(&self) -> usize {
        self.pairs.len()
    }
}

/// Output of [`drawing_to_decomposition`] with the counts in its order formula.
#[derive(Clone, Debug)]
pub struct CrossingDecomp {
    pub decomposition: Decomposition,
    /// Isolated vertices.
    pub n0: usize,
    /// Non-isolated vertices on no crossed edge.
    pub q: usize,
    /// Crossings.
    pub c: usize,
    /// Components of the crossed-edge subgraph that are trees; each leaves one
    /// vertex that is no tail of a crossed arc.
    pub t: usize,
    pub edges: usize,
}

impl CrossingDecomp {
    /// `⌈n0/2⌉ + q + c` for the plain variant, `⌈n0/2⌉ + c + |E|` for the strong one.
    pub fn stated_order(&self) -> usize {
        if self.decomposition.strong {
            self.n0.div_ceil(2) + self.c + self.edges
        } else {
            self.n0.div_ceil(2) + self.q + self.c
        }
    }
}

/// Orientation of the crossed-edge subgraph giving every vertex of a cyclic
/// component an out-arc, and all but one vertex of a tree component.
/// Returns `tail[e]` for every edge and the number of tree components.
fn tail_maximizing(g: &Graph, crossed: &[bool]) -> (Vec<usize>, usize) {
    let n = g.n();
    let mut tail: Vec<usize> = g.edges().iter().map(|&(u, _)| u).collect();
    let mut seen = vec![false; n];
    let mut trees = 0;
    for root in 0..n {
        if seen[root] || !g.incident(root).iter().any(|&e| crossed[e]) {
            continue;
        }
        // BFS spanning tree of the component, then one extra edge if any.
        let mut comp = vec![root];
        let mut parent_edge = vec![usize::MAX; n];
        seen[root] = true;
        let mut i = 0;
        let mut extra = None;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for (&w, &e) in g.neighbors(v).iter().zip(g.incident(v)) {
                if !crossed[e] || e == parent_edge[v] {
                    continue;
                }
                if seen[w] {
                    if extra.is_none() {
                        extra = Some(e);
                    }
                    continue;
                }
                seen[w] = true;
                parent_edge[w] = e;
                comp.push(w);
            }
        }
        let top = match extra {
            Some(e) => {
                // Re-root at an end of the extra edge, which then points away.
                let a = g.edge(e).0;
                tail[e] = a;
                a
            }
            None => {
                trees += 1;
                root
            }
        };
        // Child to parent along the spanning tree rooted at `top`.
        let mut dist_parent = vec![usize::MAX; n];
        let mut order = vec![top];
        dist_parent[top] = top;
        let mut j = 0;
        while j < order.len() {
            let v = order[j];
            j += 1;
            for (&w, &e) in g.neighbors(v).iter().zip(g.incident(v)) {
                let tree_edge = parent_edge[w] == e || parent_edge[v] == e;
                if crossed[e] && tree_edge && dist_parent[w] == usize::MAX {
                    dist_parent[w] = v;
                    tail[e] = w;
                    order.push(w);
                }
            }
        }
    }
    (tail, trees)
}

/// Width-2 planar decomposition from a drawing.
///
/// Vertex bags `{v}` and one bag `{tail, tail}` per crossing form the
/// planarization; each vertex that is a tail of a crossed arc is merged into
/// the first crossing on it. The strong variant also puts a bag `{v, w}` on
/// every edge just before its head and merges each remaining singleton into
/// such a bag.
pub fn drawing_to_decomposition(dr: &Drawing, strong: bool) -> Result<CrossingDecomp> {
    let g = &dr.host;
    let pl = Planarization::of(dr)?;
    let (n, m, c) = (g.n(), g.m(), pl.crossings());
    let crossed: Vec<bool> = pl.along.iter().map(|a| !a.is_empty()).collect();
    let (tail, t) = tail_maximizing(g, &crossed);
    let head = |e: usize| {
        let (u, v) = g.edge(e);
        if tail[e] == u {
            v
        } else {
            u
        }
    };
    let (bags, dedges) = planarization_graph(g, &pl, &tail, strong);
    let mut uf = UnionFind::new(bags.len());
    let edge_node = |e: usize| n + c + e;
    let mut merged = vec![false; n];
    for v in 0..n {
        let first = g.incident(v).iter().find(|&&e| crossed[e] && tail[e] == v).map(|&e| first_from_tail(&pl, g, e, v));
        if let Some(x) = first {
            uf.union(v, n + x);
            merged[v] = true;
        }
    }
    if strong {
        let singles: Vec<usize> = (0..n).filter(|&v| !merged[v] && g.degree(v) > 0).collect();
        for v in singles {
            // The edge bag of an arc is adjacent to its head, and to its tail when uncrossed.
            let e = g
                .incident(v)
                .iter()
                .copied()
                .find(|&e| head(e) == v || !crossed[e])
                .expect("a vertex that is no crossed tail has such an edge");
            uf.union(v, edge_node(e));
            merged[v] = true;
        }
    }
    let isolated: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 0).collect();
    let n0 = isolated.len();
    let q = (0..n).filter(|&v| g.degree(v) > 0 && !g.incident(v).iter().any(|&e| crossed[e])).count();
    let keep = |i: usize| i >= n || g.degree(i) > 0;
    let (mut out_bags, mut group, mut groups) = (Vec::new(), vec![usize::MAX; bags.len()], 0);
    let mut root_group = vec![usize::MAX; bags.len()];
    for i in (0..bags.len()).filter(|&i| keep(i)) {
        let r = uf.find(i);
        if root_group[r] == usize::MAX {
            root_group[r] = groups;
            groups += 1;
            out_bags.push(Vec::new());
        }
        group[i] = root_group[r];
        out_bags[group[i]].extend(bags[i].iter().copied());
    }
    let mut d_edges: Vec<(usize, usize)> =
        dedges.iter().map(|&(a, b)| (group[a], group[b])).filter(|&(a, b)| a != b).collect();
    for pair in isolated.chunks(2) {
        out_bags.push(pair.to_vec());
    }
    d_edges.sort_unstable();
    d_edges.dedup();
    let dgraph = Graph::from_edges(out_bags.len(), d_edges)?;
    let decomposition = Decomposition::new(g.clone(), out_bags, dgraph, strong, 2)?;
    Ok(CrossingDecomp { decomposition, n0, q, c, t, edges: m })
}

/// First crossing on arc `e` met from its tail `v`.
fn first_from_tail(pl: &Planarization, g: &Graph, e: usize, v: usize) -> usize {
    let along = &pl.along[e];
    if g.edge(e).0 == v {
        along[0]
    } else {
        *along.last().expect("crossed edge")
    }
}

/// Bags and edges of the planarized drawing: vertex nodes `0..n`, crossing
/// nodes `n..n+c`, then (strong) edge nodes `n+c..n+c+m`.
fn planarization_graph(
    g: &Graph,
    pl: &Planarization,
    tail: &[usize],
    strong: bool,
) -> (Vec<Vec<usize>>, Vec<(usize, usize)>) {
    let (n, c) = (g.n(), pl.crossings());
    let mut bags: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    for &(e, f) in &pl.pairs {
        bags.push(vec![tail[e], tail[f]]);
    }
    let mut dedges = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let mut chain: Vec<usize> = vec![u];
        chain.extend(pl.along[e].iter().map(|&x| n + x));
        chain.push(v);
        if tail[e] != u {
            chain.reverse();
        }
        if strong {
            bags.push(vec![u, v]);
            let last = chain.pop().expect("head");
            chain.push(n + c + e);
            chain.push(last);
        }
        dedges.extend(chain.windows(2).map(|w| (w[0], w[1])));
    }
    (bags, dedges)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// A tree decomposition derived from a convex drawing.
#[derive(Clone, Debug)]
pub struct ConvexTreeDecomp {
    /// Strong tree decomposition of the host.
    pub decomposition: Decomposition,
    /// The strong width-2 planar decomposition it is composed from.
    pub planar: Decomposition,
    pub k: usize,
    /// Largest distance in the planar decomposition graph to a vertex bag.
    pub depth: usize,
    pub depth_bound: usize,
    /// Width of the tree decomposition of the planar decomposition graph.
    pub aux_width: usize,
    pub aux_width_bound: usize,
    pub width_bound: usize,
}

impl ConvexTreeDecomp {
    pub fn within_bounds(&self) -> bool {
        self.depth <= self.depth_bound
            && self.aux_width <= self.aux_width_bound
            && self.decomposition.width() <= self.width_bound
    }
}

/// Strong tree decomposition of the host of a convex drawing in which, for
/// every crossing pair, one edge crosses at most `k` others.
pub fn convex_to_treedecomp(dr: &Drawing, k: usize) -> Result<ConvexTreeDecomp> {
    if dr.circle.is_none() || !dr.is_rectilinear() || !cocircular(&dr.points) {
        return Err(Error::Precondition("drawing is not convex".into()));
    }
    let g = &dr.host;
    let pl = Planarization::of(dr)?;
    let mut partners: Vec<Vec<usize>> = vec![Vec::new(); g.m()];
    for &(e, f) in &pl.pairs {
        partners[e].push(f);
        partners[f].push(e);
    }
    for p in &mut partners {
        p.sort_unstable();
        p.dedup();
    }
    if let Some(&(e, f)) = pl.pairs.iter().find(|&&(e, f)| partners[e].len() > k && partners[f].len() > k) {
        return Err(Error::Precondition(format!("edges {e} and {f} cross and each crosses more than {k} edges")));
    }
    let tail: Vec<usize> = g.edges().iter().map(|&(u, _)| u).collect();
    let (bags, dedges) = planarization_graph(g, &pl, &tail, true);
    let dgraph = Graph::from_edges(bags.len(), dedges)?;
    let planar = Decomposition::new(g.clone(), bags, dgraph, true, 2)?;
    let vertex_nodes: Vec<usize> = (0..g.n()).collect();
    let depth = planar.dgraph.bfs_distances(&vertex_nodes).into_iter().filter(|&d| d != usize::MAX).max().unwrap_or(0);
    let tree = elimination_decomposition(&planar.dgraph, &min_fill_order(&planar.dgraph));
    let aux_width = tree.width();
    let decomposition = compose(&planar, &tree)?;
    Ok(ConvexTreeDecomp {
        decomposition,
        planar,
        k,
        depth,
        depth_bound: k / 2 + 1,
        aux_width,
        aux_width_bound: 3 * (k / 2) + 6,
        width_bound: 6 * (k / 2) + 12,
    })
}

/// Whether all points lie on one circle (exact in-circle test).
pub(crate) fn cocircular(points: &[Pt]) -> bool {
    if points.len() <= 3 {
        return true;
    }
    let (a, b, c) = (points[0], points[1], points[2]);
    let big = |p: Pt| (BigInt::from(p.x), BigInt::from(p.y));
    let det = |d: Pt| -> BigInt {
        let rows: Vec<(BigInt, BigInt, BigInt)> = [a, b, c]
            .iter()
            .map(|&p| {
                let (px, py) = big(p);
                let (dx, dy) = big(d);
                let (x, y) = (px - dx, py - dy);
                let w = &x * &x + &y * &y;
                (x, y, w)
            })
            .collect();
        let (r0, r1, r2) = (&rows[0], &rows[1], &rows[2]);
        &r0.0 * (&r1.1 * &r2.2 - &r1.2 * &r2.1) - &r0.1 * (&r1.0 * &r2.2 - &r1.2 * &r2.0)
            + &r0.2 * (&r1.0 * &r2.1 - &r1.1 * &r2.0)
    };
    let collinear = crate::geom::orient(a, b, c) == 0;
    !collinear && points[3..].iter().all(|&d| det(d).is_zero())
}
