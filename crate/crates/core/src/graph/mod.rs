//! Simple undirected graphs and the algorithms every other module builds on.

pub mod blocks;
pub mod cliques;
pub mod degeneracy;
pub mod families;
pub mod layout;
pub mod matching;
pub mod minor;
pub mod planarity;
pub mod separators;
pub mod treewidth;
pub mod triangulate;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite simple undirected graph on vertices `0..n`.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted lexicographically;
/// an edge id is its index in that list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

/// Serialized form `{"n": .., "edges": [[u, v], ..]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph { adj: vec![Vec::new(); n], inc: vec![Vec::new(); n], edges: Vec::new() }
    }

    /// Builds a graph; parallel edges collapse to one, loops are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Precondition(format!("edge ({u}, {v}) has an endpoint outside 0..{n}")));
            }
            if u == v {
                return Err(Error::Precondition(format!("loop at vertex {u}")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Graph::from_sorted(n, list))
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Graph {
        let mut pairs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            pairs[u].push((v, id));
            pairs[v].push((u, id));
        }
        let mut adj = Vec::with_capacity(n);
        let mut inc = Vec::with_capacity(n);
        for mut p in pairs {
            p.sort_unstable();
            adj.push(p.iter().map(|x| x.0).collect());
            inc.push(p.iter().map(|x| x.1).collect());
        }
        Graph { adj, inc, edges }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Edge ids incident to `v`, aligned with [`Graph::neighbors`].
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n() || v >= self.n() {
            return None;
        }
        self.adj[u].binary_search(&v).ok().map(|i| self.inc[u][i])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    /// Returns a copy with the extra edges inserted.
    pub fn with_edges<I>(&self, extra: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::from_edges(self.n(), self.edges.iter().copied().chain(extra))
    }

    /// Returns a copy with the listed edges removed (absent edges are ignored).
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> Graph {
        let mut drop: Vec<(usize, usize)> = removed.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        drop.sort_unstable();
        let kept = self.edges.iter().copied().filter(|e| drop.binary_search(e).is_err()).collect();
        Graph::from_sorted(self.n(), kept)
    }

    /// Adds `k` isolated vertices.
    pub fn with_extra_vertices(&self, k: usize) -> Graph {
        Graph::from_sorted(self.n() + k, self.edges.clone())
    }

    /// Subgraph induced by `vs`; local vertex `i` is `vs[i]`.
    pub fn induced(&self, vs: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vs.iter().enumerate() {
            local[v] = i;
        }
        let mut list = Vec::new();
        for (i, &v) in vs.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = local[w];
                if j != usize::MAX && i < j {
                    list.push((i, j));
                }
            }
        }
        list.sort_unstable();
        list.dedup();
        Graph::from_sorted(vs.len(), list)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&vec![false; self.n()])
    }

    /// Components of the graph with the `removed` vertices deleted.
    pub fn components_avoiding(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = removed.to_vec();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Whether the vertex subset induces a connected subgraph (empty sets are not).
    pub fn is_connected_subset(&self, vs: &[usize]) -> bool {
        if vs.is_empty() {
            return false;
        }
        let mut inside = vec![false; self.n()];
        for &v in vs {
            inside[v] = true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![vs[0]];
        seen[vs[0]] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        let distinct = {
            let mut s = vs.to_vec();
            s.sort_unstable();
            s.dedup();
            s.len()
        };
        count == distinct
    }

    /// BFS distances from a set of sources (`usize::MAX` when unreachable).
    pub fn bfs_distances(&self, sources: &[usize]) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s] == usize::MAX {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Whether the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        self.m() + self.components().len() == self.n()
    }

    /// Quotient by a vertex map: `part[v]` is the new vertex of `v`; loops are dropped.
    pub fn quotient(&self, part: &[usize], parts: usize) -> Graph {
        let mut list: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter_map(|&(u, v)| {
                let (a, b) = (part[u], part[v]);
                (a != b).then(|| (a.min(b), a.max(b)))
            })
            .collect();
        list.sort_unstable();
        list.dedup();
        Graph::from_sorted(parts, list)
    }

    /// Parses the edge-list text format: `n m` then `m` lines `u v`.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut tokens = text.lines().map(|l| l.split('#').next().unwrap_or("")).flat_map(str::split_whitespace);
        let mut next = |what: &str| -> Result<usize> {
            let t = tokens.next().ok_or_else(|| Error::Parse(format!("missing {what}")))?;
            t.parse::<usize>().map_err(|_| Error::Parse(format!("bad {what} `{t}`")))
        };
        let n = next("vertex count")?;
        let m = next("edge count")?;
        let mut list = Vec::with_capacity(m);
        for i in 0..m {
            let u = next(&format!("endpoint of edge {i}"))?;
            let v = next(&format!("endpoint of edge {i}"))?;
            if u >= n || v >= n {
                return Err(Error::Parse(format!("edge {i} ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::Parse(format!("edge {i} is a loop at {u}")));
            }
            list.push((u, v));
        }
        if tokens.next().is_some() {
            return Err(Error::Parse("trailing tokens after the edge list".into()));
        }
        Graph::from_edges(n, list)
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n(), self.m());
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson { n: self.n(), edges: self.edges.iter().map(|&(u, v)| [u, v]).collect() }
    }

    pub fn from_json(j: &GraphJson) -> Result<Graph> {
        Graph::from_edges(j.n, j.edges.iter().map(|e| (e[0], e[1])))
    }
}
