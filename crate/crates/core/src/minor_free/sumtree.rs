//! Clique-sum trees of K5-minor-free and K3,3-minor-free graphs.
//!
//! A tree is built top-down: components (0-joins), blocks (1-joins), split
//! pairs with a virtual edge (2-joins), then, for K5, separating triangles and
//! 3-separators with a virtual triangle (3-joins). Virtual edges absent from
//! the input are recorded as deleted on the join that introduced them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::blocks::biconnected_components;
use crate::graph::families::{is_k5, is_v8};
use crate::graph::planarity::is_planar;
use crate::graph::separators::{components_without, three_separators, two_separators};
use crate::graph::{cliques::triangles, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PieceKind {
    Planar,
    V8,
    K5,
}

/// A leaf: `graph` lives on local vertices, `labels[i]` is the input vertex of `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub labels: Vec<usize>,
    pub graph: Graph,
    pub kind: PieceKind,
}

impl Piece {
    /// Local index of input vertex `v`.
    pub fn local(&self, v: usize) -> Option<usize> {
        self.labels.binary_search(&v).ok()
    }

    pub fn global_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.graph.edges().iter().map(|&(a, b)| (self.labels[a], self.labels[b]))
    }

    fn has_clique(&self, set: &[usize]) -> bool {
        let local: Option<Vec<usize>> = set.iter().map(|&v| self.local(v)).collect();
        local.is_some_and(|l| self.graph.is_clique(&l))
    }
}

/// Tree edge between pieces `a` and `b` glued on `set`; `deleted` lists
/// the join pairs that are not edges of the sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Join {
    pub a: usize,
    pub b: usize,
    pub set: Vec<usize>,
    pub deleted: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumTree {
    pub n: usize,
    pub pieces: Vec<Piece>,
    pub joins: Vec<Join>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PieceJson {
    pub labels: Vec<usize>,
    /// Edges in input labels.
    pub edges: Vec<[usize; 2]>,
    pub kind: PieceKind,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SumTreeJson {
    pub n: usize,
    pub pieces: Vec<PieceJson>,
    pub joins: Vec<Join>,
}

impl SumTree {
    /// Glues the pieces and removes deleted join edges, after checking that
    /// the joins form a spanning tree and every join set is a clique on both sides.
    pub fn recompose(&self) -> Result<Graph> {
        let k = self.pieces.len();
        if k > 0 && self.joins.len() != k - 1 {
            return Err(Error::Invariant(format!("{} joins for {} pieces", self.joins.len(), k)));
        }
        let mut uf: Vec<usize> = (0..k).collect();
        fn find(uf: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while uf[r] != r {
                r = uf[r];
            }
            uf[x] = r;
            r
        }
        for j in &self.joins {
            if j.a >= k || j.b >= k {
                return Err(Error::Invariant(format!("join ({}, {}) names a missing piece", j.a, j.b)));
            }
            let (ra, rb) = (find(&mut uf, j.a), find(&mut uf, j.b));
            if ra == rb {
                return Err(Error::Invariant("joins contain a cycle".into()));
            }
            uf[ra] = rb;
            for p in [j.a, j.b] {
                if !self.pieces[p].has_clique(&j.set) {
                    return Err(Error::Invariant(format!("join set {:?} is not a clique of piece {p}", j.set)));
                }
            }
            for &(x, y) in &j.deleted {
                if !j.set.contains(&x) || !j.set.contains(&y) {
                    return Err(Error::Invariant(format!("deleted pair ({x}, {y}) is outside the join set")));
                }
            }
        }
        let mut covered = vec![false; self.n];
        let mut edges = Vec::new();
        for p in &self.pieces {
            if p.labels.len() != p.graph.n() || p.labels.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Invariant("piece labels must be strictly increasing".into()));
            }
            for &v in &p.labels {
                if v >= self.n {
                    return Err(Error::Invariant(format!("piece label {v} outside 0..{}", self.n)));
                }
                covered[v] = true;
            }
            edges.extend(p.global_edges());
        }
        if let Some(v) = covered.iter().position(|c| !c) {
            return Err(Error::Invariant(format!("vertex {v} is in no piece")));
        }
        let deleted: Vec<(usize, usize)> =
            self.joins.iter().flat_map(|j| j.deleted.iter().map(|&(x, y)| (x.min(y), x.max(y)))).collect();
        Ok(Graph::from_edges(self.n, edges)?.without_edges(&deleted))
    }

    /// Recomposes and compares with `g` exactly.
    pub fn check(&self, g: &Graph) -> Result<()> {
        let h = self.recompose()?;
        if &h != g {
            return Err(Error::Invariant("sum tree does not recompose to the input".into()));
        }
        Ok(())
    }

    /// Joins at piece `p`, as `(join index, other piece)`.
    pub fn neighbors(&self, p: usize) -> Vec<(usize, usize)> {
        self.joins
            .iter()
            .enumerate()
            .filter_map(|(i, j)| {
                if j.a == p {
                    Some((i, j.b))
                } else if j.b == p {
                    Some((i, j.a))
                } else {
                    None
                }
            })
            .collect()
    }

    /// Joins in breadth-first order from piece 0, each oriented as
    /// `(join index, already visited piece, new piece)`.
    pub fn bfs_joins(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        if self.pieces.is_empty() {
            return out;
        }
        let mut seen = vec![false; self.pieces.len()];
        seen[0] = true;
        let mut queue = std::collections::VecDeque::from([0]);
        while let Some(p) = queue.pop_front() {
            for (j, q) in self.neighbors(p) {
                if !seen[q] {
                    seen[q] = true;
                    out.push((j, p, q));
                    queue.push_back(q);
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> SumTreeJson {
        SumTreeJson {
            n: self.n,
            pieces: self
                .pieces
                .iter()
                .map(|p| PieceJson {
                    labels: p.labels.clone(),
                    edges: p.global_edges().map(|(a, b)| [a, b]).collect(),
                    kind: p.kind,
                })
                .collect(),
            joins: self.joins.clone(),
        }
    }

    pub fn from_json(j: &SumTreeJson) -> Result<SumTree> {
        let mut pieces = Vec::with_capacity(j.pieces.len());
        for p in &j.pieces {
            let mut labels = p.labels.clone();
            labels.sort_unstable();
            labels.dedup();
            let local = |v: usize| {
                labels
                    .binary_search(&v)
                    .map_err(|_| Error::Parse(format!("piece edge endpoint {v} is not a piece label")))
            };
            let edges: Result<Vec<(usize, usize)>> = p.edges.iter().map(|&[a, b]| Ok((local(a)?, local(b)?))).collect();
            let graph = Graph::from_edges(labels.len(), edges?)?;
            pieces.push(Piece { labels, graph, kind: p.kind });
        }
        Ok(SumTree { n: j.n, pieces, joins: j.joins.clone() })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Flavour {
    K5,
    K33,
}

/// Recursive calls allowed while searching for a valid 3-separator split.
const SPLIT_BUDGET: usize = 10_000;

struct Splitter<'a> {
    input: &'a Graph,
    flavour: Flavour,
    budget: usize,
}

/// A subtree under construction; labels are input vertices.
struct Sub {
    pieces: Vec<Piece>,
    joins: Vec<Join>,
}

impl Sub {
    fn leaf(labels: Vec<usize>, graph: Graph, kind: PieceKind) -> Sub {
        Sub { pieces: vec![Piece { labels, graph, kind }], joins: Vec::new() }
    }

    /// Attaches `other` with a join on `set` between pieces holding it as a clique.
    fn attach(&mut self, other: Sub, set: &[usize], deleted: &[(usize, usize)]) -> Result<()> {
        let holder = |s: &Sub| {
            s.pieces
                .iter()
                .position(|p| p.has_clique(set))
                .ok_or_else(|| Error::Invariant(format!("no piece holds the join set {set:?}")))
        };
        let a = holder(self)?;
        let b = holder(&other)? + self.pieces.len();
        let off = self.pieces.len();
        self.pieces.extend(other.pieces);
        self.joins.extend(other.joins.into_iter().map(|j| Join { a: j.a + off, b: j.b + off, ..j }));
        self.joins.push(Join { a, b, set: set.to_vec(), deleted: deleted.to_vec() });
        Ok(())
    }
}

impl Splitter<'_> {
    fn spend(&mut self, labels: &[usize]) -> Result<()> {
        if self.budget == 0 {
            return Err(Error::NotDecomposable {
                vertices: labels.to_vec(),
                reason: "beyond the separator search budget".into(),
            });
        }
        self.budget -= 1;
        Ok(())
    }

    fn part(&mut self, labels: Vec<usize>, g: Graph) -> Result<Sub> {
        self.spend(&labels)?;
        let planar = is_planar(&g);
        if planar && (self.flavour == Flavour::K33 || separating_triangle(&g).is_none()) {
            return Ok(Sub::leaf(labels, g, PieceKind::Planar));
        }
        let comps = g.components();
        if comps.len() > 1 {
            return self.glue_tree(&labels, &g, comps.into_iter().map(|c| (c, Vec::new())).collect());
        }
        let blocks = biconnected_components(&g);
        if blocks.vertices.len() > 1 {
            // Each block meets the earlier ones in exactly one cut vertex when
            // taken in the order of a search over the block-cut tree.
            let order = block_order(&blocks.vertices);
            let parts =
                order.into_iter().map(|(b, cut)| (blocks.vertices[b].clone(), cut.into_iter().collect())).collect();
            return self.glue_tree(&labels, &g, parts);
        }
        if planar {
            let t = separating_triangle(&g).expect("checked above");
            return self.split(&labels, &g, &t);
        }
        if let Some(s) = two_separators(&g).first() {
            return self.split(&labels, &g, s);
        }
        self.three_connected(labels, g)
    }

    fn three_connected(&mut self, labels: Vec<usize>, g: Graph) -> Result<Sub> {
        match self.flavour {
            Flavour::K33 => {
                if is_k5(&g) {
                    Ok(Sub::leaf(labels, g, PieceKind::K5))
                } else {
                    Err(Error::NotDecomposable { vertices: labels, reason: "3-connected, nonplanar and not K5".into() })
                }
            }
            Flavour::K5 => {
                if is_v8(&g) {
                    return Ok(Sub::leaf(labels, g, PieceKind::V8));
                }
                if is_k5(&g) {
                    return Err(Error::NotDecomposable { vertices: labels, reason: "K5".into() });
                }
                // Real triangles first: their sides are subgraphs, so a failure
                // there is final for that side only. Other 3-separators are
                // listed only when every real one fails.
                let real: Vec<[usize; 3]> = triangles(&g).into_iter().filter(|t| separates_own(&g, t)).collect();
                let mut last = Error::NotDecomposable {
                    vertices: labels.clone(),
                    reason: "3-connected, nonplanar, not V8 and without a 3-separator".into(),
                };
                for round in 0..2 {
                    let candidates = if round == 0 {
                        real.clone()
                    } else {
                        three_separators(&g).into_iter().filter(|t| !real.contains(t)).collect()
                    };
                    for t in candidates {
                        match self.split(&labels, &g, &t) {
                            Ok(sub) => return Ok(sub),
                            Err(e @ Error::NotDecomposable { .. }) => {
                                if self.budget == 0 {
                                    return Err(e);
                                }
                                last = e;
                            }
                            Err(e) => return Err(e),
                        }
                    }
                }
                Err(last)
            }
        }
    }

    /// Splits along the clique `sep` (local), adding the missing pairs as
    /// virtual edges to every side.
    fn split(&mut self, labels: &[usize], g: &Graph, sep: &[usize]) -> Result<Sub> {
        let comps = components_without(g, sep);
        let parts: Vec<(Vec<usize>, Vec<usize>)> = comps
            .into_iter()
            .map(|mut c| {
                c.extend_from_slice(sep);
                c.sort_unstable();
                (c, sep.to_vec())
            })
            .collect();
        let mut subs = Vec::new();
        for (vs, _) in &parts {
            let (lab, h) = self.side(labels, g, vs, sep);
            subs.push(self.part(lab, h)?);
        }
        let set: Vec<usize> = {
            let mut s: Vec<usize> = sep.iter().map(|&v| labels[v]).collect();
            s.sort_unstable();
            s
        };
        let mut deleted = Vec::new();
        for (i, &x) in set.iter().enumerate() {
            for &y in &set[i + 1..] {
                if !self.input.has_edge(x, y) {
                    deleted.push((x, y));
                }
            }
        }
        let mut it = subs.into_iter();
        let mut root = it.next().expect("a separator leaves at least two sides");
        for s in it {
            root.attach(s, &set, &deleted)?;
        }
        Ok(root)
    }

    /// Induced side on local vertices `vs` plus all pairs of `sep`, relabelled.
    fn side(&self, labels: &[usize], g: &Graph, vs: &[usize], sep: &[usize]) -> (Vec<usize>, Graph) {
        let lab: Vec<usize> = vs.iter().map(|&v| labels[v]).collect();
        // `vs` is sorted and labels are increasing, so `lab` is sorted too.
        let h = g.induced(vs);
        let local: Vec<usize> = sep.iter().map(|s| vs.binary_search(s).expect("separator is in the side")).collect();
        let mut extra = Vec::new();
        for (i, &a) in local.iter().enumerate() {
            for &b in &local[i + 1..] {
                extra.push((a.min(b), a.max(b)));
            }
        }
        (lab, h.with_edges(extra).expect("local vertices"))
    }

    /// Parts listed so that each meets the union of earlier ones exactly in
    /// its (local) attachment set; joins go to the first piece holding it.
    fn glue_tree(&mut self, labels: &[usize], g: &Graph, parts: Vec<(Vec<usize>, Vec<usize>)>) -> Result<Sub> {
        let mut root: Option<Sub> = None;
        for (vs, att) in parts {
            let lab: Vec<usize> = vs.iter().map(|&v| labels[v]).collect();
            let sub = self.part(lab, g.induced(&vs))?;
            let set: Vec<usize> = att.iter().map(|&v| labels[v]).collect();
            match root.as_mut() {
                None => root = Some(sub),
                Some(r) => r.attach(sub, &set, &[])?,
            }
        }
        Ok(root.expect("at least one part"))
    }
}

/// Blocks in search order from block 0, each with the cut vertex linking it
/// to an earlier block.
fn block_order(blocks: &[Vec<usize>]) -> Vec<(usize, Option<usize>)> {
    let mut out = vec![(0, None)];
    let mut done = vec![false; blocks.len()];
    done[0] = true;
    let mut i = 0;
    while i < out.len() {
        let b = out[i].0;
        for (c, other) in blocks.iter().enumerate() {
            if done[c] {
                continue;
            }
            if let Some(&v) = blocks[b].iter().find(|v| other.binary_search(v).is_ok()) {
                done[c] = true;
                out.push((c, Some(v)));
            }
        }
        i += 1;
    }
    out
}

/// Whether removing `sep` splits the component that contains it.
fn separates_own(g: &Graph, sep: &[usize]) -> bool {
    let touching = components_without(g, sep)
        .into_iter()
        .filter(|c| c.iter().any(|&v| sep.iter().any(|&s| g.has_edge(s, v))))
        .count();
    touching > 1
}

fn separating_triangle(g: &Graph) -> Option<[usize; 3]> {
    triangles(g).into_iter().find(|t| separates_own(g, t))
}

fn decompose(g: &Graph, flavour: Flavour) -> Result<SumTree> {
    if g.n() == 0 {
        return Ok(SumTree { n: 0, pieces: Vec::new(), joins: Vec::new() });
    }
    let mut s = Splitter { input: g, flavour, budget: SPLIT_BUDGET };
    let sub = s.part((0..g.n()).collect(), g.clone())?;
    let tree = SumTree { n: g.n(), pieces: sub.pieces, joins: sub.joins };
    tree.check(g)?;
    Ok(tree)
}

/// Sum tree with planar and V8 leaves over joins of size at most 3.
///
/// Planar leaves have no separating triangle. A piece that is neither planar
/// nor V8 is reported as [`Error::NotDecomposable`].
pub fn wagner_k5_decompose(g: &Graph) -> Result<SumTree> {
    decompose(g, Flavour::K5)
}

/// Sum tree with planar and K5 leaves over joins of size at most 2.
pub fn wagner_k33_decompose(g: &Graph) -> Result<SumTree> {
    decompose(g, Flavour::K33)
}
