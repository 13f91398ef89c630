//! Graph decompositions: a graph `D` whose vertices are bags of host vertices.

mod sum;
mod tools;

pub use sum::{clique_sum_decomp, SumCover, SumSpec};
pub use tools::{
    compose, contract_edge, contract_groups, contract_matching, degen_omega, identity_decomposition, quadratic_decomp,
    reduce_order, to_omega, ReduceOrderOutcome,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::cliques::enumerate_cliques;
use crate::graph::planarity::is_planar;
use crate::graph::{Graph, GraphJson};

/// A decomposition of `host`.
///
/// Bags are sorted and may repeat; bag `i` is vertex `i` of `dgraph`. `p` is the
/// claimed clique level: for `p >= 3` every clique of at most `p` vertices must
/// fit in one bag (or, when not strong, in two adjacent bags).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub host: Graph,
    pub bags: Vec<Vec<usize>>,
    pub dgraph: Graph,
    pub strong: bool,
    pub p: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompMetrics {
    pub width: usize,
    pub spread: usize,
    pub order: usize,
    pub per_vertex_spread: Vec<usize>,
    pub planar: bool,
}

/// Both sides of the edge-count inequality implied by the width.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeBound {
    pub edges: usize,
    pub bound: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    BagVertexOutOfRange { bag: usize, vertex: usize },
    VertexNotCovered { vertex: usize },
    VertexDisconnected { vertex: usize },
    EdgeNotTouching { u: usize, v: usize },
    EdgeNotIntersecting { u: usize, v: usize },
    CliqueNotCovered { clique: Vec<usize> },
    EdgeCount { edges: usize, bound: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BagVertexOutOfRange { bag, vertex } => {
                write!(f, "bag {bag} holds vertex {vertex} outside the host")
            }
            Violation::VertexNotCovered { vertex } => {
                write!(f, "D({vertex}) empty or disconnected: empty")
            }
            Violation::VertexDisconnected { vertex } => {
                write!(f, "D({vertex}) empty or disconnected: disconnected")
            }
            Violation::EdgeNotTouching { u, v } => write!(f, "D({u}) and D({v}) do not touch"),
            Violation::EdgeNotIntersecting { u, v } => {
                write!(f, "D({u}) and D({v}) do not intersect in a strong decomposition")
            }
            Violation::CliqueNotCovered { clique } => write!(f, "clique {clique:?} not covered"),
            Violation::EdgeCount { edges, bound } => {
                write!(f, "{edges} edges exceed the width bound {bound}")
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
    pub metrics: DecompMetrics,
    pub edge_bound: EdgeBound,
}

/// Serialized form `{"host": {n, edges}, "bags", "dedges", "strong", "p"}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub host: GraphJson,
    pub bags: Vec<Vec<usize>>,
    pub dedges: Vec<[usize; 2]>,
    pub strong: bool,
    pub p: usize,
}

fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

impl Decomposition {
    /// Builds a decomposition value without validating it; bags are sorted and deduplicated.
    pub fn new(host: Graph, bags: Vec<Vec<usize>>, dgraph: Graph, strong: bool, p: usize) -> Result<Decomposition> {
        if dgraph.n() != bags.len() {
            return Err(Error::Precondition(format!(
                "{} bags but the decomposition graph has {} vertices",
                bags.len(),
                dgraph.n()
            )));
        }
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        Ok(Decomposition { host, bags, dgraph, strong, p: p.max(2) })
    }

    /// A strong decomposition over a forest given by `tree` edges.
    pub fn from_tree(host: Graph, bags: Vec<Vec<usize>>, tree: Vec<(usize, usize)>) -> Decomposition {
        let dgraph = Graph::from_edges(bags.len(), tree).expect("tree edges in range");
        Decomposition::new(host, bags, dgraph, true, 2).expect("bag count matches")
    }

    pub fn order(&self) -> usize {
        self.bags.len()
    }

    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `members[v]` lists the bags containing `v`, ascending.
    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.host.n()];
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if v < out.len() {
                    out[v].push(i);
                }
            }
        }
        out
    }

    pub fn spread(&self, v: usize) -> usize {
        self.bags.iter().filter(|b| b.binary_search(&v).is_ok()).count()
    }

    pub fn bag_contains(&self, bag: usize, v: usize) -> bool {
        self.bags[bag].binary_search(&v).is_ok()
    }

    pub fn metrics(&self) -> DecompMetrics {
        let per_vertex_spread: Vec<usize> = self.members().iter().map(Vec::len).collect();
        DecompMetrics {
            width: self.width(),
            spread: per_vertex_spread.iter().copied().max().unwrap_or(0),
            order: self.order(),
            per_vertex_spread,
            planar: is_planar(&self.dgraph),
        }
    }

    /// `|E(G)| <= C(k,2)|V(D)|` when strong, `|E(G)| <= k²|E(D)| + C(k,2)|V(D)|` otherwise.
    pub fn edge_bound(&self) -> EdgeBound {
        let k = self.width();
        let bound =
            if self.strong { binom2(k) * self.order() } else { k * k * self.dgraph.m() + binom2(k) * self.order() };
        EdgeBound { edges: self.host.m(), bound, holds: self.host.m() <= bound }
    }

    /// Whether some bag, or (when `allow_pair`) some adjacent pair of bags, contains `c`.
    pub fn covers(&self, members: &[Vec<usize>], c: &[usize], allow_pair: bool) -> bool {
        self.cover_of(members, c, allow_pair).is_some()
    }

    /// A covering bag `(x, x)` or adjacent pair `(x, y)` for `c`; single bags are
    /// preferred, then smallest ids. The empty set is covered by bag 0.
    pub fn cover_of(&self, members: &[Vec<usize>], c: &[usize], allow_pair: bool) -> Option<(usize, usize)> {
        let Some(&c0) = c.first() else {
            return (self.order() > 0).then_some((0, 0));
        };
        let single = members[c0].iter().copied().find(|&x| c.iter().all(|&v| self.bag_contains(x, v)));
        if single.is_some() || !allow_pair {
            return single.map(|x| (x, x));
        }
        // Some bag of a covering pair contains `c0`.
        let mut best: Option<(usize, usize)> = None;
        for &x in &members[c0] {
            for &y in self.dgraph.neighbors(x) {
                if c.iter().all(|&v| self.bag_contains(x, v) || self.bag_contains(y, v)) {
                    let pair = (x.min(y), x.max(y));
                    if best.is_none_or(|b| pair < b) {
                        best = Some(pair);
                    }
                }
            }
        }
        best
    }

    /// Checks every defining condition directly.
    pub fn validate(&self) -> ValidationReport {
        let n = self.host.n();
        let mut violations = Vec::new();
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag.iter().filter(|&&v| v >= n) {
                violations.push(Violation::BagVertexOutOfRange { bag: i, vertex: v });
            }
        }
        let members = self.members();
        for (v, mv) in members.iter().enumerate() {
            if mv.is_empty() {
                violations.push(Violation::VertexNotCovered { vertex: v });
            } else if !self.dgraph.is_connected_subset(mv) {
                violations.push(Violation::VertexDisconnected { vertex: v });
            }
        }
        for &(u, v) in self.host.edges() {
            if !self.covers(&members, &[u, v], true) {
                violations.push(Violation::EdgeNotTouching { u, v });
            } else if self.strong && !self.covers(&members, &[u, v], false) {
                violations.push(Violation::EdgeNotIntersecting { u, v });
            }
        }
        if self.p >= 3 {
            for c in enumerate_cliques(&self.host, self.p) {
                if c.len() >= 3 && !self.covers(&members, &c, !self.strong) {
                    violations.push(Violation::CliqueNotCovered { clique: c });
                }
            }
        }
        let edge_bound = self.edge_bound();
        if !edge_bound.holds {
            violations.push(Violation::EdgeCount { edges: edge_bound.edges, bound: edge_bound.bound });
        }
        ValidationReport { ok: violations.is_empty(), violations, metrics: self.metrics(), edge_bound }
    }

    pub fn to_json(&self) -> DecompositionJson {
        DecompositionJson {
            host: self.host.to_json(),
            bags: self.bags.clone(),
            dedges: self.dgraph.edges().iter().map(|&(a, b)| [a, b]).collect(),
            strong: self.strong,
            p: self.p,
        }
    }

    pub fn from_json(j: &DecompositionJson) -> Result<Decomposition> {
        let host = Graph::from_json(&j.host)?;
        let dgraph = Graph::from_edges(j.bags.len(), j.dedges.iter().map(|e| (e[0], e[1])))?;
        Decomposition::new(host, j.bags.clone(), dgraph, j.strong, j.p)
    }
}
