//! Vertex partitions, their patterns, tree-partitions, and the rectilinear
//! and convex drawings they yield.

use serde::{Deserialize, Serialize};

use crate::decomp::Decomposition;
use crate::draw::{
    circle_points, convex_count, count_crossings, render, BoundCheck, CertifiedDrawing, CrossingReport, Drawing,
};
use crate::error::{Error, Result};
use crate::graph::planarity::{is_planar, planar_embedding};
use crate::graph::treewidth::treewidth_exact;
use crate::graph::{Graph, GraphJson};

/// Disjoint nonempty bags covering the host's vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub host: Graph,
    pub bags: Vec<Vec<usize>>,
    /// `part[v]` is the bag holding `v`.
    pub part: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PartitionJson {
    pub host: GraphJson,
    pub bags: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(host: Graph, bags: Vec<Vec<usize>>) -> Result<Partition> {
        let mut part = vec![usize::MAX; host.n()];
        let mut bags = bags;
        for (i, bag) in bags.iter_mut().enumerate() {
            bag.sort_unstable();
            if bag.is_empty() {
                return Err(Error::Precondition(format!("bag {i} is empty")));
            }
            for &v in bag.iter() {
                if v >= host.n() || part[v] != usize::MAX {
                    return Err(Error::Precondition(format!("vertex {v} is out of range or in two bags")));
                }
                part[v] = i;
            }
        }
        if let Some(v) = part.iter().position(|&p| p == usize::MAX) {
            return Err(Error::Precondition(format!("vertex {v} is in no bag")));
        }
        Ok(Partition { host, bags, part })
    }

    pub fn singletons(host: &Graph) -> Partition {
        let bags = (0..host.n()).map(|v| vec![v]).collect();
        Partition::new(host.clone(), bags).expect("one bag per vertex")
    }

    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// The quotient graph: one vertex per bag, an edge per pair of bags joined by a host edge.
    pub fn pattern(&self) -> Graph {
        self.host.quotient(&self.part, self.bags.len())
    }

    /// The spread-1 decomposition over the pattern.
    pub fn as_decomposition(&self) -> Decomposition {
        Decomposition::new(self.host.clone(), self.bags.clone(), self.pattern(), false, 2).expect("one node per bag")
    }

    pub fn to_json(&self) -> PartitionJson {
        PartitionJson { host: self.host.to_json(), bags: self.bags.clone() }
    }

    pub fn from_json(j: &PartitionJson) -> Result<Partition> {
        Partition::new(Graph::from_json(&j.host)?, j.bags.clone())
    }
}

pub fn partition_pattern(p: &Partition) -> Graph {
    p.pattern()
}

/// Planar with all vertices on one face: planar after adding an apex.
pub fn is_outerplanar(g: &Graph) -> bool {
    is_planar(&with_apex(g))
}

fn with_apex(g: &Graph) -> Graph {
    let n = g.n();
    g.with_extra_vertices(1).with_edges((0..n).map(|v| (v, n))).expect("apex edges in range")
}

/// A circular order of the vertices of an outerplanar graph with no two
/// edges interleaving: the rotation at an added apex.
pub fn outerplanar_order(g: &Graph) -> Result<Vec<usize>> {
    let n = g.n();
    if n <= 2 {
        return Ok((0..n).collect());
    }
    let emb =
        planar_embedding(&with_apex(g)).ok_or_else(|| Error::Precondition("pattern is not outerplanar".into()))?;
    Ok(emb.rotation(n).to_vec())
}

/// A tree-partition with its width measured against `5/2 (tw + 1)(7/2 Δ - 1)`.
#[derive(Clone, Debug)]
pub struct TreePartition {
    pub partition: Partition,
    pub width: usize,
    /// Tree-width bound taken from the tree decomposition (its width minus one).
    pub tw: usize,
    pub within_bound: bool,
}

/// `8 * width <= 5 (tw + 1)(7 Δ - 2)`; never holds at `Δ = 0`, where the right side is negative.
pub fn tree_partition_width_bound_holds(width: usize, tw: usize, delta: usize) -> bool {
    8 * width <= 5 * (tw + 1) * (7 * delta).saturating_sub(2)
}

/// Tree-partition from breadth-first layers.
///
/// For a root set `R`, layer `i` splits into the classes of vertices joined
/// through layers `>= i`; every class then has all its lower neighbours in a
/// single class of the layer above, so the pattern is a forest. Root sets
/// tried per component: every bag of `td` and every single vertex; the
/// narrowest result wins.
pub fn tree_partition(g: &Graph, td: &Decomposition) -> Result<TreePartition> {
    if td.host != *g {
        return Err(Error::Precondition("tree decomposition is for another graph".into()));
    }
    let report = td.validate();
    if !report.ok || !td.strong || !td.dgraph.is_forest() {
        return Err(Error::Precondition("not a valid strong tree decomposition".into()));
    }
    let mut bags: Vec<Vec<usize>> = Vec::new();
    for comp in g.components() {
        let mut roots: Vec<Vec<usize>> = td
            .bags
            .iter()
            .map(|b| b.iter().copied().filter(|v| comp.binary_search(v).is_ok()).collect::<Vec<_>>())
            .filter(|b| !b.is_empty())
            .collect();
        roots.extend(comp.iter().map(|&v| vec![v]));
        roots.sort();
        roots.dedup();
        let best = roots
            .iter()
            .map(|r| layered_classes(g, &comp, r))
            .min_by_key(|classes| classes.iter().map(Vec::len).max().unwrap_or(0))
            .expect("a component has a vertex");
        bags.extend(best);
    }
    bags.sort();
    let partition = Partition::new(g.clone(), bags)?;
    if !partition.pattern().is_forest() {
        return Err(Error::Invariant("layered partition has a cyclic pattern".into()));
    }
    let width = partition.width();
    let tw = td.width().saturating_sub(1);
    Ok(TreePartition {
        within_bound: tree_partition_width_bound_holds(width, tw, g.max_degree()),
        partition,
        width,
        tw,
    })
}

fn layered_classes(g: &Graph, comp: &[usize], root: &[usize]) -> Vec<Vec<usize>> {
    let dist = g.bfs_distances(root);
    let depth = comp.iter().map(|&v| dist[v]).max().unwrap_or(0);
    let mut layers = vec![Vec::new(); depth + 1];
    for &v in comp {
        layers[dist[v]].push(v);
    }
    // Union-find over the component; sweeping layers bottom-up joins
    // vertices connected through deeper layers.
    let mut uf: Vec<usize> = (0..g.n()).collect();
    fn find(uf: &mut [usize], mut x: usize) -> usize {
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }
    let mut out = Vec::new();
    for i in (0..=depth).rev() {
        for &v in &layers[i] {
            for &w in g.neighbors(v) {
                if dist[w] >= i {
                    let (a, b) = (find(&mut uf, v), find(&mut uf, w));
                    uf[a] = b;
                }
            }
        }
        let mut classes: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for &v in &layers[i] {
            let r = find(&mut uf, v);
            classes.entry(r).or_default().push(v);
        }
        out.extend(classes.into_values());
    }
    out
}

/// Edge pairs that cross although no endpoint of one shares a bag with an
/// endpoint of the other, or although they share an endpoint.
fn foreign_crossings(p: &Partition, report: &CrossingReport) -> usize {
    let g = &p.host;
    report
        .pairs
        .iter()
        .filter(|c| {
            let (a, b) = g.edge(c.e);
            let (x, y) = g.edge(c.f);
            let share_end = a == x || a == y || b == x || b == y;
            let share_bag = [a, b].iter().any(|&u| [x, y].iter().any(|&w| p.part[u] == p.part[w]));
            share_end || !share_bag
        })
        .count()
}

fn partition_checks(p: &Partition, report: &CrossingReport) -> Vec<BoundCheck> {
    let g = &p.host;
    let delta = g.max_degree() as u64;
    let w = p.width().saturating_sub(1) as u64;
    vec![
        BoundCheck::at_most("crossings per edge <= 2 Δ (p - 1)", report.max_per_edge(), 2 * delta * w),
        BoundCheck::at_most("crossings <= (p - 1) Δ |E|", report.total, w * delta * g.m() as u64),
        BoundCheck::at_most("crossings between edges without a common bag", foreign_crossings(p, report), 0),
    ]
}

/// Rectilinear drawing from a planar partition: the renderer run on the
/// spread-1 decomposition over the pattern.
pub fn produce_drawing(g: &Graph, p: &Partition, seed: u64) -> Result<CertifiedDrawing> {
    if p.host != *g {
        return Err(Error::Precondition("partition is for another graph".into()));
    }
    if !is_planar(&p.pattern()) {
        return Err(Error::Precondition("partition pattern is not planar".into()));
    }
    let r = render(&p.as_decomposition(), seed)?;
    let mut checks = partition_checks(p, &r.report);
    checks.push(BoundCheck::at_most("bends", r.drawing.max_bends(), 0));
    Ok(CertifiedDrawing { drawing: r.drawing, report: r.report, checks })
}

/// Convex drawing from an outerplanar partition: bags in the pattern's
/// circular order, each bag a run of consecutive circle points.
pub fn produce_convex_drawing(g: &Graph, p: &Partition) -> Result<CertifiedDrawing> {
    if p.host != *g {
        return Err(Error::Precondition("partition is for another graph".into()));
    }
    let pattern = p.pattern();
    let around = outerplanar_order(&pattern)?;
    if convex_count(&around, &pattern)?.total != 0 {
        return Err(Error::Invariant("pattern order is not crossing-free".into()));
    }
    let order: Vec<usize> = around.iter().flat_map(|&b| p.bags[b].iter().copied()).collect();
    let spots = circle_points(g.n())?;
    let mut points = spots.clone();
    for (i, &v) in order.iter().enumerate() {
        points[v] = spots[i];
    }
    let mut dr = Drawing::straight(g.clone(), points);
    dr.circle = Some(order.clone());
    let report = count_crossings(&dr)?;
    let combinatorial = convex_count(&order, g)?;
    let mut checks = partition_checks(p, &report);
    checks.push(BoundCheck::at_most(
        "geometric and combinatorial counts differ",
        report.total.abs_diff(combinatorial.total),
        0,
    ));
    Ok(CertifiedDrawing { drawing: dr, report, checks })
}

/// Output of [`convex_treewidth_pipeline`].
#[derive(Clone, Debug)]
pub struct TreewidthDrawing {
    pub tree_partition: TreePartition,
    pub drawing: CertifiedDrawing,
}

/// Tree-partition, then the convex drawing. Without `td` the exact
/// tree-width oracle supplies one. The crossing bounds
/// `5 Δ (tw + 1)(7 Δ - 1)` per edge and `17/2 (tw + 1) Δ² |E|` in total are
/// appended as checks only when the partition width met its bound.
pub fn convex_treewidth_pipeline(g: &Graph, td: Option<&Decomposition>) -> Result<TreewidthDrawing> {
    let owned;
    let td = match td {
        Some(td) => td,
        None => {
            owned = treewidth_exact(g)?.1;
            &owned
        }
    };
    let tp = tree_partition(g, td)?;
    let mut drawing = produce_convex_drawing(g, &tp.partition)?;
    if tp.within_bound {
        let delta = g.max_degree() as u64;
        let t = tp.tw as u64 + 1;
        let per_edge = 5 * delta * t * (7 * delta).saturating_sub(1);
        drawing.checks.push(BoundCheck::below(
            "crossings per edge < 5 Δ (tw + 1)(7 Δ - 1)",
            drawing.report.max_per_edge(),
            per_edge.max(1),
            1,
        ));
        drawing.checks.push(BoundCheck::below(
            "crossings < 17/2 (tw + 1) Δ² |E|",
            drawing.report.total,
            (17 * t * delta * delta * g.m() as u64).max(1),
            2,
        ));
    }
    Ok(TreewidthDrawing { tree_partition: tp, drawing })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn patterns() {
        let g = cycle(6);
        assert_eq!(Partition::singletons(&g).pattern(), g);
        let one = Partition::new(g.clone(), vec![(0..6).collect()]).unwrap();
        assert_eq!(one.pattern().n(), 1);
        assert_eq!(one.pattern().m(), 0);
        let halves = Partition::new(g.clone(), vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert_eq!(halves.pattern().m(), 1);
        assert!(Partition::new(g.clone(), vec![vec![0, 1], vec![1, 2, 3, 4, 5]]).is_err());
        assert!(Partition::new(g, vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn outerplanarity() {
        assert!(is_outerplanar(&cycle(5)));
        assert!(!is_outerplanar(&complete(4)));
        assert!(!is_outerplanar(&complete_bipartite(2, 3)));
        let fan = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 2), (0, 3), (0, 4)]).unwrap();
        let order = outerplanar_order(&fan).unwrap();
        assert_eq!(convex_count(&order, &fan).unwrap().total, 0);
    }

    #[test]
    fn tree_partitions_have_forest_patterns() {
        let tree = Graph::from_edges(7, (1..7).map(|i| ((i - 1) / 2, i))).unwrap();
        let (_, td) = treewidth_exact(&tree).unwrap();
        let tp = tree_partition(&tree, &td).unwrap();
        assert_eq!(tp.width, 1);
        assert_eq!(tp.partition.pattern(), tree);
        for g in [grid(4, 4), complete(6), octahedron(), v8()] {
            let (_, td) = treewidth_exact(&g).unwrap();
            let tp = tree_partition(&g, &td).unwrap();
            assert!(tp.partition.pattern().is_forest());
            assert!(tp.within_bound);
        }
        // Even complete graphs meet 2 tpw >= tw + 1 with equality.
        for t in 2..5 {
            let (_, td) = treewidth_exact(&complete(2 * t)).unwrap();
            assert_eq!(tree_partition(&complete(2 * t), &td).unwrap().width, t);
        }
    }

    #[test]
    fn rectilinear_from_pairs() {
        let g = complete(5);
        let p = Partition::new(g.clone(), vec![vec![0, 1], vec![2], vec![3], vec![4]]).unwrap();
        let c = produce_drawing(&g, &p, 3).unwrap();
        assert!(c.holds(), "{:?}", c.failed());
        assert!(c.drawing.is_rectilinear());
        assert!(c.report.total >= 1);
        assert!(c.report.max_per_edge() <= 8);
        let bad = Partition::singletons(&g);
        assert!(produce_drawing(&g, &bad, 0).is_err());
    }

    #[test]
    fn convex_from_paths() {
        let g = complete(4);
        let p = Partition::new(g.clone(), vec![vec![0, 1], vec![2, 3]]).unwrap();
        let c = produce_convex_drawing(&g, &p).unwrap();
        assert!(c.holds(), "{:?}", c.failed());
        assert!(c.report.max_per_edge() <= 6);
        let c = produce_convex_drawing(&cycle(7), &Partition::singletons(&cycle(7))).unwrap();
        assert_eq!(c.report.total, 0);
        let t = convex_treewidth_pipeline(&grid(4, 4), None).unwrap();
        assert!(t.drawing.holds(), "{:?}", t.drawing.failed());
    }
}
