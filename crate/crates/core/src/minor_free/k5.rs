//! Edge-maximal completion, Tait edge classes, and the planar decompositions
//! and drawings of K5-minor-free graphs.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use super::color::four_colouring;
use super::sumtree::{wagner_k5_decompose, Piece, PieceKind, SumTree};
use crate::decomp::{clique_sum_decomp, contract_edge, contract_groups, Decomposition, SumCover, SumSpec};
use crate::draw::{drawing_to_decomposition, render, BoundCheck, CertifiedDrawing, Drawing};
use crate::error::{Error, Result};
use crate::geom::Pt;
use crate::graph::cliques::{clique_number, triangles};
use crate::graph::families::{complete, v8, v8_labelling};
use crate::graph::triangulate::triangulate;
use crate::graph::Graph;

type Pair = (usize, usize);

fn pair(a: usize, b: usize) -> Pair {
    (a.min(b), a.max(b))
}

/// V8 drawn as a ladder with the two twisted rungs routed around the outside;
/// they cross once. Vertex `i < 4` sits at `(i, 0)`, vertex `i + 4` at `(i, 1)`.
pub fn v8_one_crossing_drawing() -> Drawing {
    let g = v8();
    let points: Vec<Pt> = (0..8).map(|v| Pt::new((v % 4) as i64, (v / 4) as i64)).collect();
    let mut dr = Drawing::straight(g.clone(), points);
    let e34 = g.edge_id(3, 4).expect("rim edge");
    let e07 = g.edge_id(0, 7).expect("rim edge");
    dr.routes[e34] = vec![Pt::new(4, 2), Pt::new(-1, 2)];
    dr.routes[e07] = vec![Pt::new(-1, -2), Pt::new(4, -2)];
    dr
}

/// Supergraph of `g` on the same vertices that is edge-maximal K5-minor-free.
///
/// Planar leaves linked through joins of at most two vertices are merged and
/// triangulated; a join of at most one vertex at a V8 leaf first gets a small
/// planar bridge so that every V8 leaf meets the rest in an edge.
pub fn maximal_k5_completion(g: &Graph) -> Result<Graph> {
    let n = g.n();
    if n <= 4 {
        return Ok(complete(n));
    }
    let tree = wagner_k5_decompose(g)?;
    let mut kinds: Vec<PieceKind> = tree.pieces.iter().map(|p| p.kind).collect();
    let mut labels: Vec<Vec<usize>> = tree.pieces.iter().map(|p| p.labels.clone()).collect();
    let mut edges: Vec<Vec<Pair>> = tree.pieces.iter().map(|p| p.global_edges().collect()).collect();
    let mut joins: Vec<(usize, usize, Vec<usize>)> = tree.joins.iter().map(|j| (j.a, j.b, j.set.clone())).collect();

    let lowest_neighbour = |piece: &[Pair], x: usize| {
        piece
            .iter()
            .filter_map(|&(a, b)| {
                if a == x {
                    Some(b)
                } else if b == x {
                    Some(a)
                } else {
                    None
                }
            })
            .min()
    };
    for j in 0..joins.len() {
        let (a, b, set) = joins[j].clone();
        if set.len() >= 2 || (kinds[a] != PieceKind::V8 && kinds[b] != PieceKind::V8) {
            continue;
        }
        let (p, q) = if kinds[a] == PieceKind::V8 { (a, b) } else { (b, a) };
        let (x, y) = match set.first() {
            Some(&x) => (x, x),
            None => (labels[p][0], labels[q][0]),
        };
        let xp = lowest_neighbour(&edges[p], x).expect("V8 vertices have neighbours");
        let mut bridge = vec![x, xp, y];
        let mut far = vec![y];
        if let Some(yq) = lowest_neighbour(&edges[q], y) {
            bridge.push(yq);
            far.push(yq);
        }
        bridge.sort_unstable();
        bridge.dedup();
        far.sort_unstable();
        let t = kinds.len();
        let mut clique = Vec::new();
        for (i, &u) in bridge.iter().enumerate() {
            for &w in &bridge[i + 1..] {
                clique.push((u, w));
            }
        }
        kinds.push(PieceKind::Planar);
        labels.push(bridge);
        edges.push(clique);
        joins[j] = (p, t, vec![x.min(xp), x.max(xp)]);
        joins.push((t, q, far));
    }

    let k = kinds.len();
    let mut uf: Vec<usize> = (0..k).collect();
    fn find(uf: &mut [usize], mut x: usize) -> usize {
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }
    // Planar pieces on one pair at a V8 leaf are 2-summed through it; merge them too.
    let mut at_v8: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
    for (a, b, set) in &joins {
        let (a, b) = (*a, *b);
        if set.len() <= 2 && kinds[a] == PieceKind::Planar && kinds[b] == PieceKind::Planar {
            let (ra, rb) = (find(&mut uf, a), find(&mut uf, b));
            uf[ra] = rb;
        }
        for (v, p) in [(a, b), (b, a)] {
            if kinds[v] == PieceKind::V8 && kinds[p] == PieceKind::Planar && set.len() == 2 {
                let first = *at_v8.entry((v, set.clone())).or_insert(p);
                let (ra, rb) = (find(&mut uf, first), find(&mut uf, p));
                uf[ra] = rb;
            }
        }
    }
    let mut out: Vec<Pair> = Vec::new();
    let mut clusters: HashMap<usize, (Vec<usize>, Vec<Pair>)> = HashMap::new();
    for p in 0..k {
        if kinds[p] != PieceKind::Planar {
            out.extend(edges[p].iter().copied());
            continue;
        }
        let r = find(&mut uf, p);
        let c = clusters.entry(r).or_default();
        c.0.extend(labels[p].iter().copied());
        c.1.extend(edges[p].iter().copied());
    }
    let mut roots: Vec<usize> = clusters.keys().copied().collect();
    roots.sort_unstable();
    for r in roots {
        let (mut vs, es) = clusters.remove(&r).expect("cluster root");
        vs.sort_unstable();
        vs.dedup();
        let local = |v: usize| vs.binary_search(&v).expect("cluster vertex");
        let mut h = Graph::from_edges(vs.len(), es.iter().map(|&(a, b)| (local(a), local(b))))?;
        if vs.len() < 3 {
            h = complete(vs.len());
        } else {
            let comps = h.components();
            let links: Vec<Pair> = comps.windows(2).map(|w| (w[0][0], w[1][0])).collect();
            h = triangulate(&h.with_edges(links)?)
                .map_err(|_| Error::Invariant("a merged planar cluster is not planar".into()))?
                .graph;
        }
        out.extend(h.edges().iter().map(|&(a, b)| (vs[a], vs[b])));
    }
    Graph::from_edges(n, out)
}

/// Checks the shape of a sum tree of an edge-maximal K5-minor-free graph:
/// no deleted edges, triangulated planar leaves, and joins of fewer than three
/// vertices only at V8 leaves and only on edges.
fn check_maximal_tree(tree: &SumTree) -> Result<()> {
    let bad = |why: String| Err(Error::Precondition(format!("input is not edge-maximal K5-minor-free: {why}")));
    for p in &tree.pieces {
        let n = p.graph.n();
        if p.kind == PieceKind::Planar && n >= 3 && p.graph.m() != 3 * n - 6 {
            return bad(format!("planar piece {:?} is not triangulated", p.labels));
        }
    }
    for j in &tree.joins {
        if !j.deleted.is_empty() {
            return bad(format!("join {:?} drops edges", j.set));
        }
        let at_v8 = tree.pieces[j.a].kind == PieceKind::V8 || tree.pieces[j.b].kind == PieceKind::V8;
        if j.set.len() < 3 && !(at_v8 && j.set.len() == 2) {
            return bad(format!("join on {:?} can be extended", j.set));
        }
    }
    Ok(())
}

/// Three disjoint edge classes covering `E(G)`, with the vertices each misses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeTripartition {
    /// `class[e]` in `0..3` for edge id `e`.
    pub class: Vec<u8>,
    pub sets: [Vec<Pair>; 3],
    /// Vertices incident to no edge of the class.
    pub isolated: [Vec<usize>; 3],
}

impl EdgeTripartition {
    fn from_classes(g: &Graph, class: Vec<u8>) -> EdgeTripartition {
        let mut sets: [Vec<Pair>; 3] = Default::default();
        let mut touched = vec![[false; 3]; g.n()];
        for (e, &c) in class.iter().enumerate() {
            let (u, v) = g.edge(e);
            sets[c as usize].push((u, v));
            touched[u][c as usize] = true;
            touched[v][c as usize] = true;
        }
        let isolated = [0, 1, 2].map(|c| (0..g.n()).filter(|&v| !touched[v][c]).collect());
        EdgeTripartition { class, sets, isolated }
    }
}

/// Class of an edge whose ends are coloured `a != b`: `{01, 23}`, `{02, 13}`, `{03, 12}`.
fn tait(a: u8, b: u8) -> u8 {
    let (lo, hi) = (a.min(b), a.max(b));
    match (lo, hi) {
        (0, 1) | (2, 3) => 0,
        (0, 2) | (1, 3) => 1,
        _ => 2,
    }
}

/// Classes of the edges of one leaf, in input labels.
fn piece_classes(p: &Piece) -> Result<HashMap<Pair, u8>> {
    let mut out = HashMap::new();
    match p.kind {
        PieceKind::V8 => {
            let m = v8_labelling(&p.graph).ok_or_else(|| Error::Invariant("V8 leaf is not V8".into()))?;
            let m = m.map(|i| p.labels[i]);
            for i in 0..8 {
                out.insert(pair(m[i], m[(i + 1) % 8]), (i % 2) as u8);
            }
            for i in 0..4 {
                out.insert(pair(m[i], m[i + 4]), 2);
            }
        }
        PieceKind::Planar => {
            let colour = four_colouring(&p.graph)?;
            for (a, b) in p.graph.edges().iter().copied() {
                out.insert(pair(p.labels[a], p.labels[b]), tait(colour[a], colour[b]));
            }
        }
        PieceKind::K5 => return Err(Error::Invariant("K5 leaf in a K5-minor-free tree".into())),
    }
    Ok(out)
}

const PERMUTATIONS: [[u8; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Edge classes of an edge-maximal K5-minor-free graph such that every
/// triangle meets each class once and every V8 subgraph meets each class in a
/// perfect matching.
pub fn edge_partition_k5(g: &Graph) -> Result<EdgeTripartition> {
    if g.n() < 3 {
        return Err(Error::Precondition("edge partition needs at least 3 vertices".into()));
    }
    let tree = wagner_k5_decompose(g)?;
    check_maximal_tree(&tree)?;
    let mut class: HashMap<Pair, u8> = piece_classes(&tree.pieces[0])?;
    for (j, _, q) in tree.bfs_joins() {
        let local = piece_classes(&tree.pieces[q])?;
        let set = &tree.joins[j].set;
        let mut shared = Vec::new();
        for (i, &x) in set.iter().enumerate() {
            for &y in &set[i + 1..] {
                shared.push((x, y));
            }
        }
        // Lowest permutation mapping the new leaf's classes onto the old ones.
        let perm = PERMUTATIONS
            .iter()
            .find(|perm| shared.iter().all(|e| perm[local[e] as usize] == class[e]))
            .ok_or_else(|| Error::Invariant(format!("no class permutation aligns the join {set:?}")))?;
        for (e, c) in local {
            let c = perm[c as usize];
            if *class.entry(e).or_insert(c) != c {
                return Err(Error::Invariant(format!("edge {e:?} got two classes")));
            }
        }
    }
    let per_edge: Vec<u8> = g.edges().iter().map(|e| class[e]).collect();
    let t = EdgeTripartition::from_classes(g, per_edge);
    check_tripartition(g, &t)?;
    Ok(t)
}

fn check_tripartition(g: &Graph, t: &EdgeTripartition) -> Result<()> {
    for tri in triangles(g) {
        let mut seen = [false; 3];
        for (a, b) in [(tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])] {
            seen[t.class[g.edge_id(a, b).expect("triangle edge")] as usize] = true;
        }
        if seen != [true; 3] {
            return Err(Error::Invariant(format!("triangle {tri:?} repeats a class")));
        }
    }
    for (c, s) in t.sets.iter().enumerate() {
        if s.len() + 2 > g.n() {
            return Err(Error::Invariant(format!("class {c} has {} edges", s.len())));
        }
    }
    for v in 0..g.n() {
        if t.isolated.iter().filter(|iso| iso.binary_search(&v).is_ok()).count() > 1 {
            return Err(Error::Invariant(format!("vertex {v} meets fewer than two classes")));
        }
    }
    Ok(())
}

/// Builds a decomposition leaf by leaf along the tree, gluing with `glue` and
/// tidying each partial result with `tidy`; the result lives on `g`.
fn assemble(
    g: &Graph,
    tree: &SumTree,
    mut leaf: impl FnMut(&Piece) -> Result<Decomposition>,
    mut glue: impl FnMut(&Decomposition, &Decomposition, &[Pair]) -> Result<(Decomposition, Vec<usize>)>,
    mut tidy: impl FnMut(Decomposition, &[usize]) -> Result<Decomposition>,
    strong: bool,
    p: usize,
) -> Result<Decomposition> {
    if tree.pieces.is_empty() {
        return Decomposition::new(g.clone(), Vec::new(), Graph::empty(0), strong, p);
    }
    let mut acc = leaf(&tree.pieces[0])?;
    let mut to_global = tree.pieces[0].labels.clone();
    let mut to_acc: HashMap<usize, usize> = to_global.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    for (j, _, q) in tree.bfs_joins() {
        let piece = &tree.pieces[q];
        let d = leaf(piece)?;
        let join: Vec<Pair> =
            tree.joins[j].set.iter().map(|v| (to_acc[v], piece.local(*v).expect("join vertex in piece"))).collect();
        let (sum, map) = glue(&acc, &d, &join)?;
        to_global.resize(sum.host.n(), usize::MAX);
        for (i, &a) in map.iter().enumerate() {
            to_global[a] = piece.labels[i];
            to_acc.insert(piece.labels[i], a);
        }
        acc = tidy(sum, &to_global)?;
    }
    if acc.host.n() != g.n() {
        return Err(Error::Invariant("assembled host misses vertices".into()));
    }
    let bags = acc.bags.iter().map(|b| b.iter().map(|&v| to_global[v]).collect()).collect();
    Decomposition::new(g.clone(), bags, acc.dgraph.clone(), strong, p)
}

/// `d` relabelled by `map` onto `host`.
fn relabel(d: &Decomposition, map: &[usize], host: &Graph) -> Result<Decomposition> {
    let bags = d.bags.iter().map(|b| b.iter().map(|&v| map[v]).collect()).collect();
    Decomposition::new(host.clone(), bags, d.dgraph.clone(), d.strong, d.p)
}

/// Covering bags for the join clique `c`, preferring bags inside `c` so that
/// repeated and singleton bags end up adjacent across the sum.
fn inner_cover(d: &Decomposition, c: &[usize]) -> Option<Pair> {
    let Some(&c0) = c.first() else {
        return (d.order() > 0).then_some((0, 0));
    };
    let inside = |x: usize| d.bags[x].iter().all(|v| c.contains(v));
    let mut best: Option<(usize, Pair)> = None;
    for x in (0..d.order()).filter(|&x| d.bag_contains(x, c0)) {
        for y in std::iter::once(x).chain(d.dgraph.neighbors(x).iter().copied()) {
            if !c.iter().all(|&v| d.bag_contains(x, v) || d.bag_contains(y, v)) {
                continue;
            }
            let score = inside(x) as usize + (y != x && inside(y)) as usize;
            let key = (x.min(y), x.max(y));
            let better = match best {
                None => true,
                Some((s, k)) => score > s || (score == s && key < k),
            };
            if better {
                best = Some((score, key));
            }
        }
    }
    best.map(|(_, k)| k)
}

/// Leaf decompositions for a class `E` with one edge in every triangle.
fn omega_leaf(p: &Piece, in_e: &dyn Fn(usize, usize) -> bool) -> Result<Decomposition> {
    let g = &p.graph;
    let e = |a: usize, b: usize| in_e(p.labels[a], p.labels[b]);
    let ee: Vec<Pair> = g.edges().iter().copied().filter(|&(a, b)| e(a, b)).collect();
    let matching = |ee: &[Pair]| {
        let mut hit = vec![false; g.n()];
        ee.iter().all(|&(a, b)| !std::mem::replace(&mut hit[a], true) && !std::mem::replace(&mut hit[b], true))
            && hit.iter().all(|&h| h)
    };
    if p.kind == PieceKind::V8 {
        if ee.len() != 4 || !matching(&ee) {
            return Err(Error::Precondition(format!("E is not a perfect matching of the V8 on {:?}", p.labels)));
        }
        let bags = ee.iter().map(|&(a, b)| vec![a, b]).collect();
        return Decomposition::new(g.clone(), bags, complete(4), false, 4);
    }
    for t in triangles(g) {
        let k = [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])].iter().filter(|&&(a, b)| e(a, b)).count();
        if k != 1 {
            return Err(Error::Precondition(format!("triangle {:?} has {k} edges in E", t.map(|v| p.labels[v]))));
        }
    }
    if g.n() == 4 && g.m() == 6 {
        return Decomposition::new(g.clone(), ee.iter().map(|&(a, b)| vec![a, b]).collect(), complete(2), false, 4);
    }
    // Vertex nodes 0..n and one node per E-edge; an E-edge node sees its ends
    // and the apex of every triangle on it, other edges stay vertex-vertex.
    let n = g.n();
    let node: HashMap<Pair, usize> = ee.iter().enumerate().map(|(i, &e)| (e, n + i)).collect();
    let mut bags: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    bags.extend(ee.iter().map(|&(a, b)| vec![a, b]));
    let mut dedges = Vec::new();
    for (&(a, b), &x) in &node {
        dedges.push((a, x));
        dedges.push((b, x));
    }
    let mut in_triangle = HashSet::new();
    for t in triangles(g) {
        for (i, j, apex) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
            let side = (t[i], t[j]);
            in_triangle.insert(side);
            if let Some(&x) = node.get(&side) {
                dedges.push((t[apex], x));
            }
        }
    }
    for &(a, b) in g.edges() {
        if !e(a, b) && !in_triangle.contains(&(a, b)) {
            dedges.push((a, b));
        }
    }
    let full = Decomposition::new(g.clone(), bags, Graph::from_edges(n + ee.len(), dedges)?, false, 4)?;
    // Each vertex on an E-edge merges into its lowest E-edge node.
    let mut target: Vec<Option<usize>> = vec![None; n];
    for (i, &(a, b)) in ee.iter().enumerate() {
        for v in [a, b] {
            target[v].get_or_insert(n + i);
        }
    }
    let mut group = vec![usize::MAX; n + ee.len()];
    let mut next = 0;
    for v in 0..n + ee.len() {
        if v < n && target[v].is_some() {
            continue;
        }
        group[v] = next;
        next += 1;
    }
    for v in 0..n {
        if let Some(t) = target[v] {
            group[v] = group[t];
        }
    }
    Ok(contract_groups(&full, &group, next))
}

/// Planar ω-decomposition of width 2 whose bags are exactly `{v}` for the
/// vertices `v` on no edge of `e` and `{v, w}` for the edges of `e`.
///
/// Needs a sum tree without deleted edges, every triangle with exactly one
/// edge in `e`, and `e` a perfect matching on every V8 leaf.
pub fn omega_decomp_from_e(g: &Graph, e: &[Pair]) -> Result<Decomposition> {
    let in_e: HashSet<Pair> = e.iter().map(|&(a, b)| pair(a, b)).collect();
    if let Some(&(a, b)) = in_e.iter().find(|&&(a, b)| !g.has_edge(a, b)) {
        return Err(Error::Precondition(format!("({a}, {b}) is not an edge")));
    }
    let tree = wagner_k5_decompose(g)?;
    if tree.joins.iter().any(|j| !j.deleted.is_empty()) {
        return Err(Error::Precondition("the sum tree drops edges; complete the graph first".into()));
    }
    let member = |a: usize, b: usize| in_e.contains(&pair(a, b));
    let d = assemble(
        g,
        &tree,
        |p| omega_leaf(p, &member),
        |d1, d2, join| {
            let c1: Vec<usize> = join.iter().map(|j| j.0).collect();
            let c2: Vec<usize> = join.iter().map(|j| j.1).collect();
            let missing = || Error::Invariant(format!("join {join:?} is not covered"));
            let first = inner_cover(d1, &c1).ok_or_else(missing)?;
            let second = inner_cover(d2, &c2).ok_or_else(missing)?;
            let spec = SumSpec { cover: SumCover::Given { first, second }, ..SumSpec::new(join) };
            clique_sum_decomp(d1, d2, spec)
        },
        |mut d, to_global| {
            let covered =
                |d: &Decomposition, v: usize| d.host.neighbors(v).iter().any(|&w| member(to_global[v], to_global[w]));
            loop {
                let mut step = None;
                'find: for x in 0..d.order() {
                    for y in x + 1..d.order() {
                        if d.bags[x] == d.bags[y] {
                            step = Some((x, y));
                            break 'find;
                        }
                    }
                    if let [v] = d.bags[x][..] {
                        if covered(&d, v) {
                            let y = d.dgraph.neighbors(x).iter().copied().find(|&y| d.bag_contains(y, v));
                            step = Some((x, y.unwrap_or(x)));
                            break 'find;
                        }
                    }
                }
                match step {
                    None => return Ok(d),
                    Some((x, y)) if x != y && d.dgraph.has_edge(x, y) => d = contract_edge(&d, x, y)?,
                    Some((x, _)) => {
                        return Err(Error::Invariant(format!("bag {:?} cannot be merged", d.bags[x])));
                    }
                }
            }
        },
        false,
        clique_number(g).max(2),
    )?;
    let mut expect: Vec<Vec<usize>> = in_e.iter().map(|&(a, b)| vec![a, b]).collect();
    expect.extend((0..g.n()).filter(|&v| !g.neighbors(v).iter().any(|&w| member(v, w))).map(|v| vec![v]));
    expect.sort();
    let mut got = d.bags.clone();
    got.sort();
    if got != expect {
        return Err(Error::Invariant("bags differ from the E-edges and E-isolated vertices".into()));
    }
    Ok(d)
}

/// Planar ω-decomposition of width 2 with at most `n - 2` bags of size 2 and
/// at most `n / 3` of size 1.
pub fn planar_omega_decomp_k5(g: &Graph) -> Result<Decomposition> {
    if g.n() < 3 {
        return Err(Error::Precondition("needs at least 3 vertices".into()));
    }
    let h = maximal_k5_completion(g)?;
    let t = edge_partition_k5(&h)?;
    let best = (0..3).min_by_key(|&i| t.isolated[i].len()).expect("three classes");
    let d = omega_decomp_from_e(&h, &t.sets[best])?;
    Decomposition::new(g.clone(), d.bags, d.dgraph, false, clique_number(g).max(2))
}

/// Exact crossing count of the rendered ω-decomposition, checked against
/// `20/3 Δ² n` and against the renderer's own certificate.
pub fn crossings_k5(g: &Graph, seed: u64) -> Result<CertifiedDrawing> {
    if g.n() < 3 {
        let dr = Drawing::straight(g.clone(), (0..g.n()).map(|i| Pt::new(i as i64, 0)).collect());
        let report = crate::draw::count_crossings(&dr)?;
        return Ok(CertifiedDrawing { drawing: dr, report, checks: Vec::new() });
    }
    let d = planar_omega_decomp_k5(g)?;
    let r = render(&d, seed)?;
    let delta = g.max_degree() as u64;
    let checks = vec![
        BoundCheck::below("crossings < 20/3 Δ² n", r.report.total, 20 * delta * delta * g.n() as u64, 3),
        BoundCheck::at_most("crossings <= tuple bound", r.report.total, r.bounds.fine_bound),
        BoundCheck::at_most("tuples charged more than twice", r.audit.over_two, 0),
    ];
    Ok(CertifiedDrawing { drawing: r.drawing, report: r.report, checks })
}

/// The strong planar decomposition of V8 of order 13 obtained from its
/// one-crossing drawing.
pub fn v8_strong_decomposition() -> Result<Decomposition> {
    Ok(drawing_to_decomposition(&v8_one_crossing_drawing(), true)?.decomposition)
}

/// The ω-decomposition of V8 of width 2 and order 7 from its one-crossing drawing.
pub fn v8_omega_decomposition() -> Result<Decomposition> {
    let mut d = drawing_to_decomposition(&v8_one_crossing_drawing(), false)?.decomposition;
    d.p = 2;
    Ok(d)
}

/// Four bags of four vertices in a cycle: consecutive rungs of the ladder.
pub fn v8_strong_omega_decomposition() -> Decomposition {
    let bags = (0..4).map(|i| vec![i, i + 1, i + 4, (i + 5) % 8]).collect();
    Decomposition::new(v8(), bags, crate::graph::families::cycle(4), true, 4).expect("four bags")
}

/// Maps a decomposition of the standard V8 onto a V8 leaf.
fn onto_v8_leaf(d: &Decomposition, p: &Piece) -> Result<Decomposition> {
    let m = v8_labelling(&p.graph).ok_or_else(|| Error::Invariant("V8 leaf is not V8".into()))?;
    relabel(d, &m, &p.graph)
}

/// Strong planar 3-decomposition of width 3 and order at most `3n - 8` (`n >= 4`).
pub fn strong_3_decomp_k5(g: &Graph) -> Result<Decomposition> {
    if g.n() < 3 {
        return Err(Error::Precondition("needs at least 3 vertices".into()));
    }
    let h = maximal_k5_completion(g)?;
    let tree = wagner_k5_decompose(&h)?;
    let v8d = v8_strong_decomposition()?;
    let d = assemble(
        &h,
        &tree,
        |p| match p.kind {
            PieceKind::V8 => {
                let mut d = onto_v8_leaf(&v8d, p)?;
                d.p = 3;
                Ok(d)
            }
            _ => dual_leaf(&p.graph),
        },
        |d1, d2, join| {
            let spec = SumSpec { merge_nested: join.len() == 3, ..SumSpec::new(join) };
            clique_sum_decomp(d1, d2, spec)
        },
        |d, _| Ok(d),
        true,
        3,
    )?;
    Decomposition::new(g.clone(), d.bags, d.dgraph, true, 3)
}

/// Faces of a triangulation without separating triangles, adjacent across edges.
fn dual_leaf(g: &Graph) -> Result<Decomposition> {
    let faces = triangles(g);
    if g.n() == 3 {
        return Decomposition::new(g.clone(), vec![vec![0, 1, 2]], Graph::empty(1), true, 3);
    }
    if faces.len() != 2 * g.n() - 4 {
        return Err(Error::Invariant("planar leaf is not a triangulation without separating triangles".into()));
    }
    let mut by_edge: HashMap<Pair, Vec<usize>> = HashMap::new();
    for (i, t) in faces.iter().enumerate() {
        for e in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            by_edge.entry(e).or_default().push(i);
        }
    }
    let dedges: Vec<Pair> = by_edge.values().filter(|f| f.len() == 2).map(|f| (f[0], f[1])).collect();
    let bags = faces.iter().map(|t| t.to_vec()).collect();
    Decomposition::new(g.clone(), bags, Graph::from_edges(faces.len(), dedges)?, true, 3)
}

/// Strong planar ω-decomposition of width 4 and order at most `4n/3 - 4`.
pub fn strong_omega_decomp_k5(g: &Graph) -> Result<Decomposition> {
    if g.n() < 4 {
        return Err(Error::Precondition("needs at least 4 vertices".into()));
    }
    let h = maximal_k5_completion(g)?;
    let tree = wagner_k5_decompose(&h)?;
    let v8d = v8_strong_omega_decomposition();
    let d = assemble(
        &h,
        &tree,
        |p| match p.kind {
            PieceKind::V8 => onto_v8_leaf(&v8d, p),
            _ => quadrilateral_leaf(&p.graph),
        },
        |d1, d2, join| clique_sum_decomp(d1, d2, SumSpec::new(join)),
        |d, _| Ok(d),
        true,
        4,
    )?;
    Decomposition::new(g.clone(), d.bags, d.dgraph, true, clique_number(g).max(2))
}

/// One bag for `n <= 4`; otherwise bags `P(e)` (the two faces on `e`) for the
/// edges of one Tait class, each vertex merged into its lowest such bag.
fn quadrilateral_leaf(g: &Graph) -> Result<Decomposition> {
    let n = g.n();
    if n <= 4 {
        return Decomposition::new(g.clone(), vec![(0..n).collect()], Graph::empty(1), true, 4);
    }
    let colour = four_colouring(g)?;
    let faces = triangles(g);
    if faces.len() != 2 * n - 4 {
        return Err(Error::Invariant("planar leaf is not a triangulation without separating triangles".into()));
    }
    let s: Vec<Pair> = g.edges().iter().copied().filter(|&(a, b)| tait(colour[a], colour[b]) == 0).collect();
    let mut bags: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut dedges = Vec::new();
    for (i, &(a, b)) in s.iter().enumerate() {
        let mut bag = vec![a, b];
        bag.extend(faces.iter().filter(|t| t.contains(&a) && t.contains(&b)).flat_map(|t| t.iter().copied()));
        bag.sort_unstable();
        bag.dedup();
        if bag.len() != 4 {
            return Err(Error::Invariant(format!("edge ({a}, {b}) is not on two faces")));
        }
        for &v in &bag {
            dedges.push((v, n + i));
        }
        bags.push(bag);
    }
    let full = Decomposition::new(g.clone(), bags, Graph::from_edges(n + s.len(), dedges)?, true, 4)?;
    let mut group: Vec<usize> = (0..n)
        .map(|v| full.dgraph.neighbors(v).iter().copied().min().expect("every vertex is on a face") - n)
        .collect();
    group.extend(0..s.len());
    Ok(contract_groups(&full, &group, s.len()))
}
