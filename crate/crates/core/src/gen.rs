//! Random instances: triangulations, clique sums, drawings and decompositions.
//!
//! Minor-free instances are built bottom-up, so class membership holds by
//! construction: clique sums of order at most 3 keep K5-minor-freeness and
//! of order at most 2 keep K3,3-minor-freeness, and subgraphs of members are
//! members.

use std::collections::{BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::decomp::Decomposition;
use crate::draw::{circle_points, count_crossings, CrossingReport, Drawing};
use crate::error::{Error, Result};
use crate::geom::Pt;
use crate::graph::families::{complete, v8};
use crate::graph::Graph;

/// Drawings rejected for degeneracy before giving up.
const RESAMPLE_LIMIT: usize = 1000;
const COORD_RANGE: i64 = 1 << 20;

type Pair = (usize, usize);

fn sorted(a: usize, b: usize) -> Pair {
    (a.min(b), a.max(b))
}

/// A maximal planar graph on `n >= 3` vertices.
///
/// Vertices are stacked into random faces, then edges are flipped while a
/// flip lowers the larger degree of the flipped pair, which keeps the maximum
/// degree small.
pub fn random_triangulation<R: Rng>(rng: &mut R, n: usize) -> Graph {
    if n < 3 {
        return complete(n);
    }
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    let link = |adj: &mut Vec<BTreeSet<usize>>, a: usize, b: usize| {
        adj[a].insert(b);
        adj[b].insert(a);
    };
    link(&mut adj, 0, 1);
    link(&mut adj, 1, 2);
    link(&mut adj, 0, 2);
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 1, 2]];
    for v in 3..n {
        let f = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[f];
        faces[f] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([a, c, v]);
        for x in [a, b, c] {
            link(&mut adj, x, v);
        }
    }
    for _ in 0..20 * n {
        let u = rng.gen_range(0..n);
        let Some(&v) = adj[u].iter().nth(rng.gen_range(0..adj[u].len())) else {
            continue;
        };
        let holding: Vec<usize> =
            (0..faces.len()).filter(|&i| faces[i].contains(&u) && faces[i].contains(&v)).collect();
        let [f1, f2] = holding[..] else { continue };
        let third = |f: [usize; 3]| f.into_iter().find(|&x| x != u && x != v).unwrap();
        let (x, y) = (third(faces[f1]), third(faces[f2]));
        if x == y || adj[x].contains(&y) || adj[u].len() <= 3 || adj[v].len() <= 3 {
            continue;
        }
        if adj[x].len().max(adj[y].len()) + 1 >= adj[u].len().max(adj[v].len()) {
            continue;
        }
        adj[u].remove(&v);
        adj[v].remove(&u);
        link(&mut adj, x, y);
        faces[f1] = [u, x, y];
        faces[f2] = [v, x, y];
    }
    let edges = (0..n).flat_map(|a| adj[a].iter().filter(move |&&b| a < b).map(move |&b| (a, b)));
    Graph::from_edges(n, edges.collect::<Vec<_>>()).expect("simple by construction")
}

fn random_clique<R: Rng>(rng: &mut R, g: &Graph, k: usize) -> Option<Vec<usize>> {
    let mut found: Vec<Vec<usize>> = match k {
        0 => vec![Vec::new()],
        1 => (0..g.n()).map(|v| vec![v]).collect(),
        2 => g.edges().iter().map(|&(a, b)| vec![a, b]).collect(),
        _ => g
            .edges()
            .iter()
            .flat_map(|&(a, b)| {
                g.neighbors(a).iter().filter(move |&&c| c > b && g.has_edge(b, c)).map(move |&c| vec![a, b, c])
            })
            .collect(),
    };
    found.shuffle(rng);
    found.pop()
}

/// Glues random pieces along cliques of random order at most `max_join` until
/// about `target` vertices exist, deletes each join edge with probability
/// `drop`, and relabels randomly.
fn clique_sums<R: Rng>(
    rng: &mut R,
    target: usize,
    max_join: usize,
    drop: f64,
    mut piece: impl FnMut(&mut R, usize) -> Graph,
) -> Graph {
    let mut n = 0;
    let mut edges: HashSet<Pair> = HashSet::new();
    let mut joins: Vec<Pair> = Vec::new();
    while n < target.max(1) {
        let host = Graph::from_edges(n, edges.iter().copied().collect::<Vec<_>>()).expect("simple");
        let p = piece(rng, target - n + max_join);
        let mut k = if n == 0 { 0 } else { rng.gen_range(0..=max_join.min(p.n())) };
        let (outer, inner) = loop {
            if let (Some(a), Some(b)) = (random_clique(rng, &host, k), random_clique(rng, &p, k)) {
                break (a, b);
            }
            k -= 1;
        };
        let mut label = vec![usize::MAX; p.n()];
        for (&x, &y) in inner.iter().zip(&outer) {
            label[x] = y;
        }
        for l in label.iter_mut().filter(|l| **l == usize::MAX) {
            *l = n;
            n += 1;
        }
        edges.extend(p.edges().iter().map(|&(a, b)| sorted(label[a], label[b])));
        for (i, &a) in outer.iter().enumerate() {
            joins.extend(outer[i + 1..].iter().map(|&b| sorted(a, b)));
        }
    }
    for j in joins {
        if rng.gen_bool(drop) {
            edges.remove(&j);
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut list: Vec<Pair> = edges.into_iter().map(|(a, b)| sorted(perm[a], perm[b])).collect();
    list.sort_unstable();
    Graph::from_edges(n, list).expect("simple by construction")
}

/// Removes edges at vertices of degree above `max_degree`, highest-degree
/// neighbours first.
pub fn trim_degree(g: &Graph, max_degree: usize) -> Graph {
    let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut removed = Vec::new();
    for v in 0..g.n() {
        let mut nbrs: Vec<usize> = g.neighbors(v).to_vec();
        nbrs.sort_by_key(|&w| std::cmp::Reverse((deg[w], w)));
        for w in nbrs {
            if deg[v] <= max_degree {
                break;
            }
            let e = sorted(v, w);
            if !removed.contains(&e) {
                removed.push(e);
                deg[v] -= 1;
                deg[w] -= 1;
            }
        }
    }
    g.without_edges(&removed)
}

/// A K5-minor-free graph: clique sums of order at most 3 of random
/// triangulations and V8, trimmed to maximum degree `max_degree`.
pub fn random_k5_free<R: Rng>(rng: &mut R, target: usize, max_degree: usize) -> Graph {
    let g = clique_sums(rng, target, 3, 0.3, |rng, room| {
        if room >= 8 && rng.gen_bool(0.25) {
            v8()
        } else {
            let hi = room.clamp(3, 12);
            let size = rng.gen_range(3..=hi);
            random_triangulation(rng, size)
        }
    });
    trim_degree(&g, max_degree)
}

/// A K3,3-minor-free graph: clique sums of order at most 2 of random planar
/// graphs and K5.
pub fn random_k33_free<R: Rng>(rng: &mut R, target: usize) -> Graph {
    clique_sums(rng, target, 2, 0.3, |rng, room| {
        if room >= 5 && rng.gen_bool(0.3) {
            complete(5)
        } else {
            let hi = room.clamp(3, 12);
            let size = rng.gen_range(3..=hi);
            let t = random_triangulation(rng, size);
            let drop: Vec<Pair> = t.edges().iter().copied().filter(|_| rng.gen_bool(0.2)).collect();
            t.without_edges(&drop)
        }
    })
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<Pair> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).expect("simple by construction")
}

fn random_pt<R: Rng>(rng: &mut R) -> Pt {
    Pt::new(rng.gen_range(0..COORD_RANGE), rng.gen_range(0..COORD_RANGE))
}

/// Bends strictly monotone in x (or y) from `a` to `b`, so the route is simple.
fn monotone_route<R: Rng>(rng: &mut R, a: Pt, b: Pt, bends: usize) -> Vec<Pt> {
    let along_x = a.x.abs_diff(b.x) >= a.y.abs_diff(b.y);
    let (s, t) = if along_x { (a.x, b.x) } else { (a.y, b.y) };
    let room = s.abs_diff(t) as usize;
    let bends = bends.min(room.saturating_sub(1));
    let mut steps: BTreeSet<i64> = BTreeSet::new();
    while steps.len() < bends {
        steps.insert(rng.gen_range(s.min(t) + 1..s.max(t)));
    }
    let mut steps: Vec<i64> = steps.into_iter().collect();
    if s > t {
        steps.reverse();
    }
    steps
        .into_iter()
        .map(|c| {
            let free = rng.gen_range(0..COORD_RANGE);
            if along_x {
                Pt::new(c, free)
            } else {
                Pt::new(free, c)
            }
        })
        .collect()
}

/// A polyline drawing of `g` in general position, at most `max_bends` bends per
/// edge; degenerate samples are redrawn.
pub fn random_polyline_drawing<R: Rng>(rng: &mut R, g: &Graph, max_bends: usize) -> Result<(Drawing, CrossingReport)> {
    for _ in 0..RESAMPLE_LIMIT {
        let points = (0..g.n()).map(|_| random_pt(rng)).collect();
        let mut dr = Drawing::straight(g.clone(), points);
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let bends = rng.gen_range(0..=max_bends);
            dr.routes[e] = monotone_route(rng, dr.points[u], dr.points[v], bends);
        }
        match count_crossings(&dr) {
            Ok(report) => return Ok((dr, report)),
            Err(Error::Degenerate(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Invariant("no general-position drawing sampled".into()))
}

/// A convex drawing of `g` with a random circular order.
pub fn random_convex_drawing<R: Rng>(rng: &mut R, g: &Graph) -> Result<(Drawing, CrossingReport)> {
    let spots = circle_points(g.n())?;
    for _ in 0..RESAMPLE_LIMIT {
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.shuffle(rng);
        let mut points = spots.clone();
        for (i, &v) in order.iter().enumerate() {
            points[v] = spots[i];
        }
        let mut dr = Drawing::straight(g.clone(), points);
        dr.circle = Some(order);
        match count_crossings(&dr) {
            Ok(report) => return Ok((dr, report)),
            Err(Error::Degenerate(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Invariant("no general-position convex drawing sampled".into()))
}

/// Least `k` such that in every crossing pair one edge crosses at most `k`
/// distinct edges.
pub fn crossing_k(report: &CrossingReport) -> usize {
    let mut partners: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); report.per_edge.len()];
    for p in &report.pairs {
        partners[p.e].insert(p.f);
        partners[p.f].insert(p.e);
    }
    report.pairs.iter().map(|p| partners[p.e].len().min(partners[p.f].len())).max().unwrap_or(0)
}

/// A valid planar decomposition of width at most `k` of a random host on `n`
/// vertices; each vertex spans at most `max_spread` bags.
///
/// The decomposition graph is a connected spanning subgraph of a random
/// triangulation; each `D(v)` grows from a random bag through neighbours
/// with room, and each pair of vertices whose bag sets touch (intersect, when
/// `strong`) becomes an edge with probability `density`. Bags left empty are
/// dropped.
pub fn random_planar_decomposition<R: Rng>(
    rng: &mut R,
    n: usize,
    k: usize,
    max_spread: usize,
    strong: bool,
    density: f64,
) -> Decomposition {
    let k = k.max(1);
    let t = (n.div_ceil(k) + n / (2 * k)).max(3);
    let tri = random_triangulation(rng, t);
    let dist = tri.bfs_distances(&[0]);
    let tree: HashSet<Pair> = (1..t)
        .map(|v| {
            let parent = *tri.neighbors(v).iter().find(|&&w| dist[w] + 1 == dist[v]).expect("connected");
            sorted(v, parent)
        })
        .collect();
    let kept: Vec<Pair> = tri.edges().iter().copied().filter(|e| tree.contains(e) || rng.gen_bool(0.5)).collect();
    let dgraph = Graph::from_edges(t, kept).expect("simple");
    let mut bags: Vec<Vec<usize>> = vec![Vec::new(); t];
    let mut home: Vec<Vec<usize>> = vec![Vec::new(); n];
    // Free slots always cover the vertices still to place.
    let mut free = t * k;
    for v in 0..n {
        let open: Vec<usize> = (0..t).filter(|&x| bags[x].len() < k).collect();
        let start = *open.choose(rng).expect("t * k >= n leaves room");
        bags[start].push(v);
        home[v].push(start);
        free -= 1;
        let spread = rng.gen_range(1..=max_spread.max(1));
        while home[v].len() < spread && free > n - v - 1 {
            let next: Vec<usize> = home[v]
                .iter()
                .flat_map(|&x| dgraph.neighbors(x).iter().copied())
                .filter(|&y| bags[y].len() < k && !home[v].contains(&y))
                .collect();
            let Some(&y) = next.choose(rng) else { break };
            bags[y].push(v);
            home[v].push(y);
            free -= 1;
        }
    }
    let mut candidates: BTreeSet<Pair> = BTreeSet::new();
    for bag in &bags {
        for (i, &a) in bag.iter().enumerate() {
            candidates.extend(bag[i + 1..].iter().map(|&b| sorted(a, b)));
        }
    }
    if !strong {
        for &(x, y) in dgraph.edges() {
            for &a in &bags[x] {
                candidates.extend(bags[y].iter().filter(|&&b| b != a).map(|&b| sorted(a, b)));
            }
        }
    }
    let edges: Vec<Pair> = candidates.into_iter().filter(|_| rng.gen_bool(density)).collect();
    let host = Graph::from_edges(n, edges).expect("simple");
    let keep: Vec<usize> = (0..t).filter(|&x| !bags[x].is_empty()).collect();
    let mut index = vec![usize::MAX; t];
    for (i, &x) in keep.iter().enumerate() {
        index[x] = i;
    }
    let dedges: Vec<Pair> = dgraph
        .edges()
        .iter()
        .filter(|&&(x, y)| index[x] != usize::MAX && index[y] != usize::MAX)
        .map(|&(x, y)| (index[x], index[y]))
        .collect();
    let dgraph = Graph::from_edges(keep.len(), dedges).expect("simple");
    let bags = keep.iter().map(|&x| bags[x].clone()).collect();
    Decomposition::new(host, bags, dgraph, strong, 2).expect("bag count matches")
}
