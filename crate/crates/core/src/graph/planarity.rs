//! Planarity testing and combinatorial embeddings by path addition
//! (Demoucron–Malgrange–Pertuiset) on each biconnected block.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::blocks::biconnected_components;
use super::Graph;
use crate::error::{Error, Result};

/// A rotation system: for each vertex the cyclic order of its neighbours.
///
/// The face after dart `u -> v` continues with `v -> w` where `w` follows `u`
/// in the rotation at `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    rot: Vec<Vec<usize>>,
    pos: Vec<Vec<(usize, usize)>>,
}

/// Serialized embedding: rotations as edge ids plus the chosen outer face.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct EmbeddingJson {
    pub rotation: Vec<Vec<usize>>,
    pub outer: usize,
}

impl Embedding {
    pub fn from_rotation(rot: Vec<Vec<usize>>) -> Embedding {
        let pos = rot
            .iter()
            .map(|r| {
                let mut p: Vec<(usize, usize)> = r.iter().enumerate().map(|(i, &w)| (w, i)).collect();
                p.sort_unstable();
                p
            })
            .collect();
        Embedding { rot, pos }
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    fn index_of(&self, v: usize, u: usize) -> usize {
        let p = &self.pos[v];
        let i = p.binary_search_by_key(&u, |x| x.0).expect("neighbour present in rotation");
        p[i].1
    }

    /// Neighbour following `u` in the rotation at `v`.
    pub fn succ(&self, v: usize, u: usize) -> usize {
        let r = &self.rot[v];
        r[(self.index_of(v, u) + 1) % r.len()]
    }

    /// Neighbour preceding `u` in the rotation at `v`.
    pub fn pred(&self, v: usize, u: usize) -> usize {
        let r = &self.rot[v];
        r[(self.index_of(v, u) + r.len() - 1) % r.len()]
    }

    /// Face walks as vertex sequences; the walk `[f0, f1, ..]` uses darts `f_i -> f_{i+1}`.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen: Vec<Vec<bool>> = self.rot.iter().map(|r| vec![false; r.len()]).collect();
        let mut faces = Vec::new();
        for u in 0..n {
            for i in 0..self.rot[u].len() {
                if seen[u][i] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (u, self.rot[u][i]);
                loop {
                    let ia = self.index_of(a, b);
                    if seen[a][ia] {
                        break;
                    }
                    seen[a][ia] = true;
                    face.push(a);
                    let c = self.succ(b, a);
                    a = b;
                    b = c;
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Checks that the rotation matches `g` and satisfies Euler's formula per component.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.n() != g.n() {
            return false;
        }
        for v in 0..g.n() {
            let mut r = self.rot[v].clone();
            r.sort_unstable();
            if r != g.neighbors(v) {
                return false;
            }
        }
        let comps = g.components();
        let nontrivial = comps.iter().filter(|c| c.len() > 1).count();
        let isolated = comps.len() - nontrivial;
        let faces = self.faces();
        let total: usize = faces.iter().map(Vec::len).sum();
        total == 2 * g.m() && faces.len() + (g.n() - isolated) == g.m() + 2 * nontrivial
    }

    /// Index of the longest face (lowest index on ties); `None` without edges.
    pub fn default_outer(&self) -> Option<usize> {
        let faces = self.faces();
        (0..faces.len()).max_by(|&a, &b| faces[a].len().cmp(&faces[b].len()).then(b.cmp(&a)))
    }

    pub fn to_json(&self, g: &Graph) -> EmbeddingJson {
        EmbeddingJson {
            rotation: (0..g.n())
                .map(|v| self.rot[v].iter().map(|&w| g.edge_id(v, w).expect("embedding edge in graph")).collect())
                .collect(),
            outer: self.default_outer().unwrap_or(0),
        }
    }

    pub fn from_json(g: &Graph, j: &EmbeddingJson) -> Result<Embedding> {
        if j.rotation.len() != g.n() {
            return Err(Error::Parse("rotation length differs from vertex count".into()));
        }
        let mut rot = Vec::with_capacity(g.n());
        for (v, r) in j.rotation.iter().enumerate() {
            let mut nb = Vec::with_capacity(r.len());
            for &e in r {
                if e >= g.m() {
                    return Err(Error::Parse(format!("edge id {e} out of range")));
                }
                let (a, b) = g.edge(e);
                if a != v && b != v {
                    return Err(Error::Parse(format!("edge {e} not incident to {v}")));
                }
                nb.push(if a == v { b } else { a });
            }
            rot.push(nb);
        }
        let emb = Embedding::from_rotation(rot);
        if !emb.is_valid_for(g) {
            return Err(Error::Parse("rotation system is not a planar embedding".into()));
        }
        Ok(emb)
    }
}

pub fn is_planar(g: &Graph) -> bool {
    planar_embedding(g).is_some()
}

/// A planar embedding of `g`, or `None` when `g` is not planar. Deterministic.
pub fn planar_embedding(g: &Graph) -> Option<Embedding> {
    let n = g.n();
    if g.m() > 3 * n.saturating_sub(2).max(1) && n >= 3 {
        return None;
    }
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); n];
    let blocks = biconnected_components(g);
    for (vs, es) in blocks.vertices.iter().zip(&blocks.edges) {
        if es.len() == 1 {
            let (u, v) = g.edge(es[0]);
            rot[u].push(v);
            rot[v].push(u);
            continue;
        }
        let mut local = std::collections::HashMap::with_capacity(vs.len());
        for (i, &v) in vs.iter().enumerate() {
            local.insert(v, i);
        }
        let block = Graph::from_edges(
            vs.len(),
            es.iter().map(|&e| {
                let (u, v) = g.edge(e);
                (local[&u], local[&v])
            }),
        )
        .expect("block edges are valid");
        let brot = embed_biconnected(&block)?;
        for (i, r) in brot.into_iter().enumerate() {
            rot[vs[i]].extend(r.into_iter().map(|j| vs[j]));
        }
    }
    let emb = Embedding::from_rotation(rot);
    debug_assert!(emb.is_valid_for(g));
    Some(emb)
}

enum Fragment {
    Edge(usize),
    Component(Vec<usize>),
}

/// Path-addition embedding of a biconnected graph with at least three vertices.
fn embed_biconnected(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    if g.m() > 3 * n - 6 {
        return None;
    }
    let mut in_h = vec![false; n];
    let mut edge_in_h = vec![false; g.m()];
    let cycle = initial_cycle(g);
    for (i, &v) in cycle.iter().enumerate() {
        in_h[v] = true;
        let w = cycle[(i + 1) % cycle.len()];
        edge_in_h[g.edge_id(v, w).expect("cycle edge")] = true;
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];
    let mut embedded_edges = cycle.len();
    while embedded_edges < g.m() {
        let fragments = find_fragments(g, &in_h, &edge_in_h);
        let mut vertex_faces: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (fi, f) in faces.iter().enumerate() {
            for &v in f {
                vertex_faces[v].push(fi);
            }
        }
        let mut choice: Option<(usize, usize)> = None;
        for (k, (_, att)) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = vertex_faces[att[0]]
                .iter()
                .copied()
                .filter(|fi| att[1..].iter().all(|&a| vertex_faces[a].contains(fi)))
                .collect();
            if admissible.is_empty() {
                return None;
            }
            if admissible.len() == 1 {
                choice = Some((k, admissible[0]));
                break;
            }
            if choice.is_none() {
                choice = Some((k, admissible[0]));
            }
        }
        let (k, fi) = choice.expect("at least one fragment remains");
        let (frag, att) = &fragments[k];
        let path = fragment_path(g, frag, att, &in_h);
        for w in path.windows(2) {
            edge_in_h[g.edge_id(w[0], w[1]).expect("path edge")] = true;
            embedded_edges += 1;
        }
        for &v in &path {
            in_h[v] = true;
        }
        let face = std::mem::take(&mut faces[fi]);
        let (f1, f2) = split_face(&face, &path);
        faces[fi] = f1;
        faces.push(f2);
    }
    let mut succ: Vec<std::collections::HashMap<usize, usize>> = vec![std::collections::HashMap::new(); n];
    for f in &faces {
        let l = f.len();
        for i in 0..l {
            let (u, v, w) = (f[i], f[(i + 1) % l], f[(i + 2) % l]);
            succ[v].insert(u, w);
        }
    }
    let mut rot = Vec::with_capacity(n);
    for v in 0..n {
        let start = g.neighbors(v)[0];
        let mut r = vec![start];
        let mut cur = succ[v][&start];
        while cur != start {
            r.push(cur);
            cur = succ[v][&cur];
        }
        debug_assert_eq!(r.len(), g.degree(v));
        rot.push(r);
    }
    Some(rot)
}

fn initial_cycle(g: &Graph) -> Vec<usize> {
    let (a, b) = g.edge(0);
    // BFS from b to a avoiding the edge ab.
    let mut parent = vec![usize::MAX; g.n()];
    parent[b] = b;
    let mut queue = VecDeque::from([b]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if parent[w] == usize::MAX && !(v == b && w == a) {
                parent[w] = v;
                queue.push_back(w);
            }
        }
        if parent[a] != usize::MAX {
            break;
        }
    }
    let mut cycle = vec![a];
    let mut v = parent[a];
    while v != b {
        cycle.push(v);
        v = parent[v];
    }
    cycle.push(b);
    cycle
}

fn find_fragments(g: &Graph, in_h: &[bool], edge_in_h: &[bool]) -> Vec<(Fragment, Vec<usize>)> {
    let mut out = Vec::new();
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        if !edge_in_h[id] && in_h[u] && in_h[v] {
            out.push((Fragment::Edge(id), vec![u, v]));
        }
    }
    let mut seen = in_h.to_vec();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut att = Vec::new();
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for &w in g.neighbors(v) {
                if in_h[w] {
                    att.push(w);
                } else if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        att.sort_unstable();
        att.dedup();
        out.push((Fragment::Component(comp), att));
    }
    out
}

fn fragment_path(g: &Graph, frag: &Fragment, att: &[usize], in_h: &[bool]) -> Vec<usize> {
    match frag {
        Fragment::Edge(e) => {
            let (u, v) = g.edge(*e);
            vec![u, v]
        }
        Fragment::Component(comp) => {
            let a = att[0];
            let mut member = std::collections::HashSet::with_capacity(comp.len());
            member.extend(comp.iter().copied());
            let mut parent: std::collections::HashMap<usize, usize> = Default::default();
            let mut queue = VecDeque::new();
            for &w in g.neighbors(a) {
                if member.contains(&w) && !parent.contains_key(&w) {
                    parent.insert(w, a);
                    queue.push_back(w);
                }
            }
            while let Some(v) = queue.pop_front() {
                for &w in g.neighbors(v) {
                    if in_h[w] && w != a {
                        let mut path = vec![w, v];
                        let mut x = v;
                        while parent[&x] != a {
                            x = parent[&x];
                            path.push(x);
                        }
                        path.push(a);
                        path.reverse();
                        return path;
                    }
                    if member.contains(&w) && !parent.contains_key(&w) {
                        parent.insert(w, v);
                        queue.push_back(w);
                    }
                }
            }
            unreachable!("fragments of a biconnected graph have two attachments")
        }
    }
}

/// Splits face `f` along a path whose ends lie on it; both results keep the orientation.
fn split_face(f: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let l = f.len();
    let first = path[0];
    let last = *path.last().expect("nonempty path");
    let i = f.iter().position(|&x| x == first).expect("path start on face");
    let j = f.iter().position(|&x| x == last).expect("path end on face");
    let inner = &path[1..path.len() - 1];
    let mut f1 = Vec::new();
    let mut k = i;
    loop {
        f1.push(f[k]);
        if k == j {
            break;
        }
        k = (k + 1) % l;
    }
    f1.extend(inner.iter().rev());
    let mut f2 = Vec::new();
    let mut k = j;
    loop {
        f2.push(f[k]);
        if k == i {
            break;
        }
        k = (k + 1) % l;
    }
    f2.extend(inner.iter());
    (f1, f2)
}
