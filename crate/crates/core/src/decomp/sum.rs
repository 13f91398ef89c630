//! Decompositions of clique-sums.

use super::tools::contract_edge;
use super::Decomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which bags of each summand receive the cross edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumCover {
    /// A single covering bag when one exists, else an adjacent pair; smallest ids first.
    Auto,
    /// Explicit `(X1, Y1)` and `(X2, Y2)`; `X == Y` selects a single bag.
    Given { first: (usize, usize), second: (usize, usize) },
}

#[derive(Clone, Copy, Debug)]
pub struct SumSpec<'a> {
    /// Pairs `(v, w)` identifying vertex `v` of the first host with `w` of the second.
    pub join: &'a [(usize, usize)],
    /// Join-clique edges, in first-host labels, absent from the sum.
    pub deleted: &'a [(usize, usize)],
    pub cover: SumCover,
    /// Contract one cross edge whose bags are nested.
    pub merge_nested: bool,
}

impl<'a> SumSpec<'a> {
    pub fn new(join: &'a [(usize, usize)]) -> SumSpec<'a> {
        SumSpec { join, deleted: &[], cover: SumCover::Auto, merge_nested: false }
    }
}

/// Decomposition of the clique-sum of the two hosts.
///
/// The sum keeps first-host labels; second-host vertices outside the join get
/// `n1, n1 + 1, ..` in increasing order. Returns the decomposition and the map
/// from second-host vertices to sum vertices. Bags of `d1` come first.
pub fn clique_sum_decomp(
    d1: &Decomposition,
    d2: &Decomposition,
    spec: SumSpec<'_>,
) -> Result<(Decomposition, Vec<usize>)> {
    let (g1, g2) = (&d1.host, &d2.host);
    let c1: Vec<usize> = spec.join.iter().map(|&(v, _)| v).collect();
    let c2: Vec<usize> = spec.join.iter().map(|&(_, w)| w).collect();
    if c1.iter().any(|&v| v >= g1.n()) || c2.iter().any(|&w| w >= g2.n()) {
        return Err(Error::Precondition("join vertex outside its host".into()));
    }
    if !g1.is_clique(&c1) || !g2.is_clique(&c2) {
        return Err(Error::Precondition(format!("join {:?} is not a clique in both hosts", spec.join)));
    }
    let n1 = g1.n();
    let mut map = vec![usize::MAX; g2.n()];
    for &(v, w) in spec.join {
        if map[w] != usize::MAX {
            return Err(Error::Precondition(format!("vertex {w} joined twice")));
        }
        map[w] = v;
    }
    let mut next = n1;
    for slot in map.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = next;
        next += 1;
    }
    for &(a, b) in spec.deleted {
        if !c1.contains(&a) || !c1.contains(&b) || a == b {
            return Err(Error::Precondition(format!("deleted edge ({a}, {b}) is not a join edge")));
        }
    }
    let mut edges: Vec<(usize, usize)> = g1.edges().to_vec();
    edges.extend(g2.edges().iter().map(|&(a, b)| (map[a], map[b])));
    let host = Graph::from_edges(next, edges)?.without_edges(spec.deleted);

    let (cov1, cov2) = match spec.cover {
        SumCover::Auto => {
            let m1 = d1.members();
            let m2 = d2.members();
            let a = d1
                .cover_of(&m1, &c1, true)
                .ok_or_else(|| Error::Precondition("join clique not covered in the first decomposition".into()))?;
            let b = d2
                .cover_of(&m2, &c2, true)
                .ok_or_else(|| Error::Precondition("join clique not covered in the second decomposition".into()))?;
            (a, b)
        }
        SumCover::Given { first, second } => {
            check_cover(d1, first, &c1)?;
            check_cover(d2, second, &c2)?;
            (first, second)
        }
    };
    let off = d1.order();
    let mut bags = d1.bags.clone();
    bags.extend(d2.bags.iter().map(|b| b.iter().map(|&w| map[w]).collect::<Vec<_>>()));
    let mut dedges: Vec<(usize, usize)> = d1.dgraph.edges().to_vec();
    dedges.extend(d2.dgraph.edges().iter().map(|&(a, b)| (a + off, b + off)));
    let left = [cov1.0, cov1.1];
    let right = [cov2.0 + off, cov2.1 + off];
    for &x in &left {
        for &y in &right {
            dedges.push((x, y));
        }
    }
    let dgraph = Graph::from_edges(bags.len(), dedges)?;
    let mut d = Decomposition::new(host, bags, dgraph, d1.strong && d2.strong, d1.p.min(d2.p))?;
    if spec.merge_nested {
        let nested = left.iter().flat_map(|&x| right.iter().map(move |&y| (x, y))).find(|&(x, y)| {
            let (bx, by) = (&d.bags[x], &d.bags[y]);
            bx.iter().all(|v| by.binary_search(v).is_ok()) || by.iter().all(|v| bx.binary_search(v).is_ok())
        });
        if let Some((x, y)) = nested {
            d = contract_edge(&d, x, y)?;
        }
    }
    Ok((d, map))
}

fn check_cover(d: &Decomposition, (x, y): (usize, usize), c: &[usize]) -> Result<()> {
    let ok = x < d.order()
        && y < d.order()
        && (x == y || d.dgraph.has_edge(x, y))
        && c.iter().all(|&v| d.bag_contains(x, v) || d.bag_contains(y, v));
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(format!("bags ({x}, {y}) do not cover the join {c:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::{degen_omega, identity_decomposition};
    use crate::graph::families::*;

    #[test]
    fn triangles_on_an_edge() {
        let d = identity_decomposition(&complete(3));
        let (s, map) = clique_sum_decomp(&d, &d, SumSpec::new(&[(0, 0), (1, 1)])).unwrap();
        assert_eq!(map, vec![0, 1, 3]);
        assert_eq!(s.host.m(), 5);
        assert_eq!(s.order(), 6);
        assert!(s.validate().ok);
        assert!(s.metrics().planar);
    }

    #[test]
    fn strong_sum_stays_strong_and_deletes_edges() {
        let d = degen_omega(&complete(4));
        let spec = SumSpec { deleted: &[(0, 1)], ..SumSpec::new(&[(0, 0), (1, 1), (2, 2)]) };
        let (s, _) = clique_sum_decomp(&d, &d, spec).unwrap();
        assert!(s.strong);
        assert!(!s.host.has_edge(0, 1));
        assert_eq!(s.host.m(), 9 - 1);
        assert!(s.validate().ok);
        let tri = degen_omega(&complete(3));
        let nested = SumSpec { merge_nested: true, ..SumSpec::new(&[(0, 0), (1, 1), (2, 2)]) };
        let merged = clique_sum_decomp(&tri, &d, nested).unwrap().0;
        assert_eq!(merged.order(), 3 + 4 - 1);
        assert!(merged.validate().ok);
    }

    #[test]
    fn rejects_non_clique_join() {
        let d = identity_decomposition(&path(3));
        assert!(clique_sum_decomp(&d, &d, SumSpec::new(&[(0, 0), (2, 2)])).is_err());
    }
}
