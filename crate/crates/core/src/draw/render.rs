//! Drawing a graph from a planar decomposition.
//!
//! The decomposition graph is laid out without crossings; every bag gets a
//! small disc around its point. Vertices sit in the disc of their first bag,
//! and each edge bends once in every intermediate bag of a shortest route
//! through bags of its endpoints. Bends are then swapped between edges while
//! the total length strictly drops.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::count::{count_crossings, crossings, CrossingReport};
use super::Drawing;
use crate::decomp::Decomposition;
use crate::error::{Error, Result};
use crate::geom::{dist2, dist2_point_segment, Pt};
use crate::graph::layout::straight_line_layout_of;
use crate::graph::planarity::is_planar;
use crate::graph::Graph;

/// Whole renders retried with a fresh seed after an exact degeneracy.
const MAX_ATTEMPTS: u64 = 10_000;
/// Passes of the swap search; each accepted swap strictly shortens the drawing.
const MAX_PASSES: usize = 100_000;
const MAX_RADIUS_EXP: u32 = 20;
const MIN_RADIUS_EXP: u32 = 8;

/// How the crossings distribute over tuples `(e, v, f, x, X)` with `v` an end
/// of `e`, `x` an end of `f`, and both in bag `X`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TupleAudit {
    pub max_charge: usize,
    /// Tuples charged more than twice.
    pub over_two: usize,
    /// Crossings whose segments share no bag.
    pub uncharged: usize,
    pub charged_tuples: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RenderBounds {
    /// `2 Δ² Σ_X C(|X|+1, 2)`.
    pub crossing_bound: u64,
    /// `2 Σ_X Σ_{v ≤ x in X} deg(v) deg(x)`, the tuple count doubled.
    pub fine_bound: u64,
    pub max_bends: usize,
    /// Every edge `vw` has at most `s(v) + s(w) - 2` bends.
    pub bends_ok: bool,
    pub swaps: usize,
    pub attempts: u64,
    /// Discs have radius `2^-epsilon_exp` in layout units.
    pub epsilon_exp: u32,
    /// Disc radius in output coordinates is `2^radius_exp`.
    pub radius_exp: u32,
}

#[derive(Clone, Debug)]
pub struct Rendered {
    pub drawing: Drawing,
    pub report: CrossingReport,
    pub audit: TupleAudit,
    pub bounds: RenderBounds,
}

impl Rendered {
    /// All guarantees of the construction hold on this output.
    pub fn certified(&self) -> bool {
        (self.report.total as u64) <= self.bounds.fine_bound
            && self.bounds.fine_bound <= self.bounds.crossing_bound
            && self.bounds.bends_ok
            && self.audit.over_two == 0
            && self.audit.uncharged == 0
    }
}

/// Renders `d` deterministically for `seed`.
pub fn render(d: &Decomposition, seed: u64) -> Result<Rendered> {
    let report = d.validate();
    if let Some(v) = report.violations.first() {
        return Err(Error::Precondition(format!("invalid decomposition: {v}")));
    }
    if !is_planar(&d.dgraph) {
        return Err(Error::Precondition("decomposition graph is not planar".into()));
    }
    let g = &d.host;
    let layout = straight_line_layout_of(&d.dgraph)?;
    let epsilon_exp = epsilon_exponent(&d.dgraph, &layout);
    let span = layout.iter().map(|p| p.x.abs().max(p.y.abs())).max().unwrap_or(0) as u64 + 1;
    let span_bits = 64 - span.leading_zeros();
    // (span) * 2^(eps + r) + 2^r < 2^58
    let room = 57i64 - span_bits as i64 - epsilon_exp as i64;
    if room < MIN_RADIUS_EXP as i64 {
        return Err(Error::Degenerate(crate::error::Degeneracy::CoordinateOverflow));
    }
    let radius_exp = (room as u32).min(MAX_RADIUS_EXP);
    let scale = 1i64 << (epsilon_exp + radius_exp);
    let centers: Vec<Pt> = layout.iter().map(|p| Pt::new(p.x * scale, p.y * scale)).collect();

    let members = d.members();
    let home: Vec<usize> = members.iter().map(|m| m[0]).collect();
    let paths: Vec<Vec<usize>> =
        g.edges().iter().map(|&(u, v)| bag_route(d, &members, u, v, home[u], home[v])).collect();
    let pool_size: Vec<usize> = d.bags.iter().map(|b| b.iter().map(|&v| g.degree(v)).sum()).collect();

    let mut last_err = None;
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt));
        let mut used = HashSet::new();
        let radius = 1i64 << radius_exp;
        let points: Vec<Pt> = home.iter().map(|&x| sample(&mut rng, centers[x], radius, &mut used)).collect();
        let pools: Vec<Vec<Pt>> = pool_size
            .iter()
            .enumerate()
            .map(|(x, &k)| (0..k).map(|_| sample(&mut rng, centers[x], radius, &mut used)).collect())
            .collect();
        let mut next = vec![0usize; d.order()];
        let routes: Vec<Vec<Pt>> = paths
            .iter()
            .map(|path| {
                let inner = if path.len() > 2 { &path[1..path.len() - 1] } else { &[][..] };
                inner
                    .iter()
                    .map(|&x| {
                        let p = pools[x][next[x]];
                        next[x] += 1;
                        p
                    })
                    .collect()
            })
            .collect();
        let mut dr = Drawing { host: g.clone(), points, routes, circle: None };
        let swaps = uncross(&mut dr, &paths)?;
        let report = match count_crossings(&dr) {
            Ok(r) => r,
            Err(e @ Error::Degenerate(_)) => {
                last_err = Some(e);
                continue;
            }
            Err(e) => return Err(e),
        };
        let audit = audit(d, &dr, &paths, &centers)?;
        let bounds = RenderBounds {
            crossing_bound: crossing_bound(d),
            fine_bound: fine_bound(d),
            max_bends: dr.max_bends(),
            bends_ok: g
                .edges()
                .iter()
                .enumerate()
                .all(|(e, &(u, v))| dr.bends(e) + 2 <= members[u].len() + members[v].len()),
            swaps,
            attempts: attempt + 1,
            epsilon_exp,
            radius_exp,
        };
        return Ok(Rendered { drawing: dr, report, audit, bounds });
    }
    Err(last_err.unwrap_or_else(|| Error::Invariant("render made no attempt".into())))
}

pub(crate) fn crossing_bound(d: &Decomposition) -> u64 {
    let delta = d.host.max_degree() as u64;
    let sum: u64 = d.bags.iter().map(|b| (b.len() as u64 + 1) * b.len() as u64 / 2).sum();
    2 * delta * delta * sum
}

fn fine_bound(d: &Decomposition) -> u64 {
    let deg = |v: usize| d.host.degree(v) as u64;
    let mut sum = 0;
    for b in &d.bags {
        for (i, &v) in b.iter().enumerate() {
            for &x in &b[i..] {
                sum += deg(v) * deg(x);
            }
        }
    }
    2 * sum
}

/// Smallest `j` with `2^-j` at most a third of every vertex-vertex and
/// vertex-to-non-incident-edge distance in the layout.
fn epsilon_exponent(dg: &Graph, layout: &[Pt]) -> u32 {
    // Layout coordinates are small, so every value below fits in i128.
    let mut best: Option<(i128, i128)> = None;
    let mut consider = |f: (i128, i128)| {
        if best.is_none_or(|b| f.0 * b.1 < b.0 * f.1) {
            best = Some(f);
        }
    };
    for a in 0..layout.len() {
        for b in a + 1..layout.len() {
            consider((dist2(layout[a], layout[b]), 1));
        }
        for &(x, y) in dg.edges() {
            if x != a && y != a {
                consider(dist2_point_segment(layout[a], layout[x], layout[y]));
            }
        }
    }
    let Some((num, den)) = best else { return 0 };
    let mut j = 0;
    while 9 * den > num << (2 * j) {
        j += 1;
    }
    j
}

fn sample(rng: &mut ChaCha8Rng, c: Pt, radius: i64, used: &mut HashSet<Pt>) -> Pt {
    loop {
        let x = rng.gen_range(1 - radius..radius);
        let y = rng.gen_range(1 - radius..radius);
        if (x as i128).pow(2) + (y as i128).pow(2) >= (radius as i128).pow(2) {
            continue;
        }
        let p = Pt::new(c.x + x, c.y + y);
        if used.insert(p) {
            return p;
        }
    }
}

/// Shortest bag sequence from `su` to `sv`: a prefix of bags holding `u`, then
/// bags holding `v`, consecutive bags adjacent. Distinct bags by minimality.
fn bag_route(d: &Decomposition, members: &[Vec<usize>], u: usize, v: usize, su: usize, sv: usize) -> Vec<usize> {
    if su == sv {
        return vec![su];
    }
    let k = d.order();
    let has = |x: usize, w: usize| members[w].binary_search(&x).is_ok();
    let mut parent = vec![usize::MAX; 2 * k];
    let mut queue = VecDeque::new();
    let start = 2 * su;
    parent[start] = start;
    queue.push_back(start);
    if has(su, v) {
        parent[start + 1] = start;
        queue.push_back(start + 1);
    }
    while let Some(s) = queue.pop_front() {
        let (x, phase) = (s / 2, s % 2);
        if x == sv {
            let mut path = vec![x];
            let mut cur = s;
            while parent[cur] != cur {
                cur = parent[cur];
                if cur / 2 != *path.last().unwrap() {
                    path.push(cur / 2);
                }
            }
            path.reverse();
            return path;
        }
        for &y in d.dgraph.neighbors(x) {
            let mut push = |t: usize, queue: &mut VecDeque<usize>| {
                if parent[t] == usize::MAX {
                    parent[t] = s;
                    queue.push_back(t);
                }
            };
            if phase == 0 && has(y, u) {
                push(2 * y, &mut queue);
            }
            if has(y, v) {
                push(2 * y + 1, &mut queue);
            }
        }
    }
    unreachable!("a valid decomposition has touching vertex sets for every edge")
}

/// Swaps pairs of bends that share a bag while the total length strictly drops.
fn uncross(dr: &mut Drawing, paths: &[Vec<usize>]) -> Result<usize> {
    let mut by_bag: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
    for (e, path) in paths.iter().enumerate() {
        for (i, &x) in path.iter().enumerate().skip(1).take(path.len().saturating_sub(2)) {
            by_bag.entry(x).or_default().push((e, i - 1));
        }
    }
    let mut bags: Vec<_> = by_bag.into_iter().collect();
    bags.sort_unstable();
    let mut swaps = 0;
    for _ in 0..MAX_PASSES {
        let mut changed = false;
        for (_, list) in &bags {
            for a in 0..list.len() {
                for b in a + 1..list.len() {
                    let ((e, i), (f, k)) = (list[a], list[b]);
                    if e == f {
                        continue;
                    }
                    let (p1, b1, n1) = around(dr, e, i);
                    let (p2, b2, n2) = around(dr, f, k);
                    let old = [dist2(p1, b1), dist2(b1, n1), dist2(p2, b2), dist2(b2, n2)];
                    let new = [dist2(p1, b2), dist2(b2, n1), dist2(p2, b1), dist2(b1, n2)];
                    if proven_shorter(&new, &old) {
                        dr.routes[e][i] = b2;
                        dr.routes[f][k] = b1;
                        swaps += 1;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return Ok(swaps);
        }
    }
    Err(Error::Invariant(format!("bend swapping did not settle after {MAX_PASSES} passes")))
}

fn around(dr: &Drawing, e: usize, i: usize) -> (Pt, Pt, Pt) {
    let (u, v) = dr.host.edge(e);
    let r = &dr.routes[e];
    let prev = if i == 0 { dr.points[u] } else { r[i - 1] };
    let next = if i + 1 == r.len() { dr.points[v] } else { r[i + 1] };
    (prev, r[i], next)
}

/// Whether `Σ √new < Σ √old`, decided exactly; a tie or an undecided
/// comparison counts as not shorter.
fn proven_shorter(new: &[i128; 4], old: &[i128; 4]) -> bool {
    let sum = |a: &[i128; 4]| a.iter().map(|&x| (x as f64).sqrt()).sum::<f64>();
    let (fnew, fold) = (sum(new), sum(old));
    if fnew < fold * (1.0 - 1e-9) {
        return true;
    }
    if fnew > fold * (1.0 + 1e-9) {
        return false;
    }
    for bits in [64u32, 128, 256, 512] {
        // floor(√(a·4^bits)) ≤ √a·2^bits < floor(..) + 1
        let roots =
            |a: &[i128; 4]| -> Vec<BigInt> { a.iter().map(|&x| (BigInt::from(x) << (2 * bits)).sqrt()).collect() };
        let (rn, ro) = (roots(new), roots(old));
        let new_hi: BigInt = rn.iter().sum::<BigInt>() + 4;
        let new_lo: BigInt = rn.iter().sum();
        let old_hi: BigInt = ro.iter().sum::<BigInt>() + 4;
        let old_lo: BigInt = ro.iter().sum();
        if new_hi <= old_lo {
            return true;
        }
        if new_lo >= old_hi {
            return false;
        }
    }
    false
}

/// Charges every crossing to a tuple at a bag shared by the two segments.
fn audit(d: &Decomposition, dr: &Drawing, paths: &[Vec<usize>], centers: &[Pt]) -> Result<TupleAudit> {
    let (segs, found) = crossings(dr)?;
    let bag_at = |e: usize, k: usize| paths[e][k.min(paths[e].len() - 1)];
    let seg_bags = |s: usize| {
        let sg = segs[s];
        [bag_at(sg.edge, sg.idx), bag_at(sg.edge, sg.idx + 1)]
    };
    let end_in = |e: usize, x: usize| {
        let (u, v) = dr.host.edge(e);
        if d.bag_contains(x, u) {
            u
        } else {
            v
        }
    };
    let mut charges: HashMap<(usize, usize, usize, usize, usize), usize> = HashMap::new();
    let mut out = TupleAudit::default();
    for c in &found {
        let (a, b) = (seg_bags(c.s), seg_bags(c.t));
        let den = c.point.den.to_f64().unwrap_or(1.0);
        let cx = c.point.x.to_f64().unwrap_or(0.0) / den;
        let cy = c.point.y.to_f64().unwrap_or(0.0) / den;
        let dist = |x: usize| (centers[x].x as f64 - cx).hypot(centers[x].y as f64 - cy);
        let shared = a.iter().copied().filter(|x| b.contains(x));
        let Some(x) = shared.min_by(|&p, &q| dist(p).total_cmp(&dist(q)).then(p.cmp(&q))) else {
            out.uncharged += 1;
            continue;
        };
        let (e, f) = (segs[c.s].edge, segs[c.t].edge);
        let key = if e < f { (e, end_in(e, x), f, end_in(f, x), x) } else { (f, end_in(f, x), e, end_in(e, x), x) };
        *charges.entry(key).or_default() += 1;
    }
    out.charged_tuples = charges.len();
    out.max_charge = charges.values().copied().max().unwrap_or(0);
    out.over_two = charges.values().filter(|&&c| c > 2).count();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::{identity_decomposition, quadratic_decomp, reduce_order};
    use crate::graph::families::*;

    #[test]
    fn identity_of_planar_graph_is_plane() {
        let r = render(&identity_decomposition(&octahedron()), 1).unwrap();
        assert_eq!(r.report.total, 0);
        assert_eq!(r.bounds.max_bends, 0);
        assert!(r.certified());
    }

    #[test]
    fn k5_from_reduced_quadratic() {
        let d = reduce_order(&quadratic_decomp(&complete(5))).unwrap().decomposition;
        let r = render(&d, 7).unwrap();
        let k = d.width() as u64;
        assert!(r.certified());
        assert!(r.report.total >= 1);
        assert!(r.report.total as u64 <= k * (k + 1) * 16 * d.order() as u64);
        assert_eq!(r.report.per_edge.iter().sum::<usize>(), 2 * r.report.total);
    }

    #[test]
    fn deterministic_per_seed() {
        let d = quadratic_decomp(&complete(4));
        let a = render(&d, 3).unwrap();
        let b = render(&d, 3).unwrap();
        assert_eq!(a.drawing, b.drawing);
        assert!(a.certified());
        assert!(a.drawing.max_bends() <= 2 * 5 - 2);
    }

    #[test]
    fn rejects_nonplanar_decomposition_graph() {
        let d = identity_decomposition(&complete(5));
        let mut bad = d.clone();
        bad.dgraph = complete(5);
        bad.bags = (0..5).map(|v| vec![v]).collect();
        assert!(render(&bad, 0).is_err());
    }

    #[test]
    fn exact_length_comparison() {
        assert!(proven_shorter(&[1, 1, 1, 1], &[4, 1, 1, 1]));
        assert!(!proven_shorter(&[4, 1, 1, 1], &[1, 1, 1, 4]));
        // √2 + √8 = √18
        assert!(!proven_shorter(&[2, 8, 0, 0], &[18, 0, 0, 0]));
        assert!(!proven_shorter(&[18, 0, 0, 0], &[2, 8, 0, 0]));
    }
}
