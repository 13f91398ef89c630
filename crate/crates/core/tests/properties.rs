//! Randomized invariants, one block per module.

mod common;

use common::*;
use plandec::decomp::*;
use plandec::draw::*;
use plandec::gen::*;
use plandec::graph::cliques::{clique_number, triangles};
use plandec::graph::degeneracy::degeneracy_order;
use plandec::graph::layout::straight_line_layout_of;
use plandec::graph::matching::max_matching;
use plandec::graph::minor::{has_minor_small, MinorTarget};
use plandec::graph::planarity::{is_planar, planar_embedding};
use plandec::graph::treewidth::treewidth_exact;
use plandec::minor_free::*;
use plandec::partition::*;
use plandec::Graph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A connected planar graph: a random triangulation keeping a BFS tree and
/// about half of the other edges.
fn connected_planar(r: &mut ChaCha8Rng, n: usize) -> Graph {
    let t = random_triangulation(r, n);
    let dist = t.bfs_distances(&[0]);
    let kept: Vec<(usize, usize)> =
        t.edges().iter().copied().filter(|&(a, b)| dist[a].abs_diff(dist[b]) == 1 || r.gen_bool(0.5)).collect();
    Graph::from_edges(n, kept).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn embeddings_satisfy_euler(seed: u64, n in 3usize..40) {
        let g = connected_planar(&mut rng(seed), n);
        let emb = planar_embedding(&g).expect("planar by construction");
        let faces = emb.faces();
        prop_assert_eq!(faces.iter().map(Vec::len).sum::<usize>(), 2 * g.m());
        prop_assert_eq!(g.n() + faces.len(), g.m() + 2);
    }

    #[test]
    fn layouts_are_plane(seed: u64, n in 3usize..30) {
        let g = connected_planar(&mut rng(seed), n);
        let dr = Drawing::straight(g.clone(), straight_line_layout_of(&g).unwrap());
        prop_assert_eq!(count_crossings(&dr).unwrap().total, 0);
    }

    #[test]
    fn triangulations_have_large_matchings(seed: u64, n in 3usize..60) {
        let g = random_triangulation(&mut rng(seed), n);
        prop_assert!(3 * max_matching(&g).len() >= n);
    }

    #[test]
    fn degeneracy_orientations_are_acyclic(seed: u64, n in 1usize..40, p in 0.0f64..0.5) {
        let g = random_graph(&mut rng(seed), n, p);
        let d = degeneracy_order(&g);
        prop_assert!(d.orientation.is_acyclic(&g));
        prop_assert!((0..n).all(|v| d.orientation.in_neighbors(&g, v).len() <= d.d));
    }

    #[test]
    fn k5_minors_survive_added_edges(seed: u64, n in 5usize..12, p in 0.2f64..0.8) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, p);
        let (a, b) = (r.gen_range(0..n), r.gen_range(0..n));
        prop_assume!(a != b && !g.has_edge(a, b));
        let h = g.with_edges([(a.min(b), a.max(b))]).unwrap();
        if has_minor_small(&g, MinorTarget::K5).unwrap() {
            prop_assert!(has_minor_small(&h, MinorTarget::K5).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tools_keep_decompositions_valid(seed: u64, n in 1usize..40, p in 0.0f64..0.4) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, p);
        prop_assert!(identity_decomposition(&g).validate().ok);
        let omega = degen_omega(&g);
        prop_assert!(omega.validate().ok);
        let (k, strong) = (r.gen_range(1..=3), r.gen_bool(0.5));
        let d = random_planar_decomposition(&mut r, n, k, 3, strong, 0.5);
        let reduced = reduce_order(&d).unwrap();
        prop_assert!(reduced.decomposition.validate().ok);
        prop_assert!(reduced.decomposition.order() <= d.host.n().max(1));
        let c = d.order().max(2) as f64;
        prop_assert!(reduced.iterations as f64 <= (c.ln() / 1.5f64.ln()).ceil());
        let composed = to_omega(&d).unwrap();
        prop_assert!(composed.validate().ok);
        prop_assert_eq!(composed.p, clique_number(&d.host).max(2));
    }

    #[test]
    fn matchings_contract_to_exact_orders(seed: u64, n in 2usize..40) {
        let mut r = rng(seed);
        let d = random_planar_decomposition(&mut r, n, 2, 2, false, 0.5);
        let m = max_matching(&d.dgraph);
        let c = contract_matching(&d, &m).unwrap();
        prop_assert_eq!(c.order(), d.order() - m.len());
        prop_assert!(c.validate().ok);
    }

    #[test]
    fn strong_decompositions_respect_edge_count(seed: u64, n in 1usize..40) {
        let mut r = rng(seed);
        let k = r.gen_range(1..=4);
        let d = random_planar_decomposition(&mut r, n, k, 3, true, 0.8);
        let k = d.width();
        prop_assert!(d.host.m() <= k * k.saturating_sub(1) / 2 * d.order());
    }

    #[test]
    fn composition_keeps_validity(seed: u64, n in 1usize..14, quadratic: bool) {
        let mut r = rng(seed);
        let strong = r.gen_bool(0.5);
        let inner = random_planar_decomposition(&mut r, n, 2, 2, strong, 0.7);
        let outer = if quadratic { quadratic_decomp(&inner.dgraph) } else { identity_decomposition(&inner.dgraph) };
        let out = compose(&inner, &outer).unwrap();
        prop_assert_eq!(out.strong, inner.strong);
        prop_assert!(out.validate().ok);
        prop_assert!(brute_valid(&out));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn renders_stay_within_their_certificates(seed: u64, n in 2usize..40, k in 1usize..=4) {
        let mut r = rng(seed);
        let strong = r.gen_bool(0.5);
        let d = random_planar_decomposition(&mut r, n, k, 3, strong, 0.5);
        let out = render(&d, seed).unwrap();
        prop_assert!(out.certified());
        prop_assert!(out.report.total as u64 <= render_bound(&d));
        prop_assert_eq!(naive_crossings(&out.drawing).0, out.report.total);
        for (e, &(v, w)) in d.host.edges().iter().enumerate() {
            prop_assert!(out.drawing.bends(e) + 2 <= d.spread(v) + d.spread(w));
        }
    }

    #[test]
    fn counting_matches_the_oracle(seed: u64, n in 1usize..14, p in 0.05f64..0.8, bends in 0usize..4) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, p);
        let (dr, report) = random_polyline_drawing(&mut r, &g, bends).unwrap();
        let (total, per_edge) = naive_crossings(&dr);
        prop_assert_eq!(report.total, total);
        prop_assert_eq!(report.per_edge, per_edge);
    }

    #[test]
    fn conversions_hit_their_orders(seed: u64, n in 1usize..25, p in 0.02f64..0.3) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, p);
        let (dr, _) = random_polyline_drawing(&mut r, &g, 2).unwrap();
        let (c, per_edge) = naive_crossings(&dr);
        let n0 = isolated(&g);
        let strong = drawing_to_decomposition(&dr, true).unwrap();
        prop_assert_eq!(strong.decomposition.order(), n0.div_ceil(2) + c + g.m());
        prop_assert!(strong.decomposition.validate().ok);
        let plain = drawing_to_decomposition(&dr, false).unwrap();
        let q = uncrossed(&g, &per_edge);
        prop_assert_eq!(plain.decomposition.order(), n0.div_ceil(2) + q + c + plain.t);
        prop_assert!(plain.decomposition.validate().ok);
        prop_assert!(is_planar(&plain.decomposition.dgraph));
    }

    #[test]
    fn convex_drawings_give_tree_decompositions(seed: u64, n in 1usize..14, p in 0.1f64..0.7) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, p);
        let (dr, report) = random_convex_drawing(&mut r, &g).unwrap();
        prop_assert_eq!(convex_count(dr.circle.as_ref().unwrap(), &g).unwrap().total, report.total);
        let k = crossing_k(&report);
        let out = convex_to_treedecomp(&dr, k).unwrap();
        prop_assert!(out.decomposition.strong && out.decomposition.validate().ok);
        prop_assert!(out.decomposition.dgraph.is_forest());
        prop_assert!(out.decomposition.width() <= 6 * (k / 2) + 12);
        prop_assert!(treewidth_exact(&g).unwrap().0 <= 3 * k + 11);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sum_trees_recompose(seed: u64, target in 5usize..60) {
        let mut r = rng(seed);
        let g = random_k5_free(&mut r, target, 8);
        prop_assert!(wagner_k5_decompose(&g).unwrap().check(&g).is_ok());
        let h = random_k33_free(&mut r, target);
        prop_assert!(wagner_k33_decompose(&h).unwrap().check(&h).is_ok());
    }

    #[test]
    fn tripartitions_split_every_triangle(seed: u64, target in 5usize..40) {
        let g = random_k5_free(&mut rng(seed), target, 8);
        let h = maximal_k5_completion(&g).unwrap();
        let t = edge_partition_k5(&h).unwrap();
        for [a, b, c] in triangles(&h) {
            let cls = |x: usize, y: usize| t.class[h.edge_id(x, y).unwrap()];
            let mut seen = [cls(a, b), cls(b, c), cls(a, c)];
            seen.sort_unstable();
            prop_assert_eq!(seen, [0, 1, 2]);
        }
        for set in &t.sets {
            prop_assert!(set.len() + 2 <= h.n());
        }
        let d = omega_decomp_from_e(&h, &t.sets[0]).unwrap();
        let mut bags = d.bags.clone();
        bags.sort();
        let on_e = |v: usize| t.sets[0].iter().any(|&(a, b)| a == v || b == v);
        let mut want: Vec<Vec<usize>> = (0..h.n()).filter(|&v| !on_e(v)).map(|v| vec![v]).collect();
        want.extend(t.sets[0].iter().map(|&(a, b)| vec![a, b]));
        want.sort();
        prop_assert_eq!(bags, want);
    }

    #[test]
    fn k5_free_pipelines_meet_their_bounds(seed: u64, target in 5usize..50) {
        let g = random_k5_free(&mut rng(seed), target, 8);
        prop_assume!(g.n() >= 4);
        let n = g.n();
        let d = planar_omega_decomp_k5(&g).unwrap();
        prop_assert!(d.order() + 2 <= 4 * n / 3);
        prop_assert!(d.validate().ok);
        prop_assert_eq!(d.p, clique_number(&g).max(2));
        let s = strong_3_decomp_k5(&g).unwrap();
        prop_assert!(s.order() + 8 <= 3 * n && s.validate().ok);
        let c = crossings_k5(&g, seed).unwrap();
        let delta = g.max_degree();
        let (total, _) = naive_crossings(&c.drawing);
        prop_assert!(delta == 0 || 3 * total < 20 * delta * delta * n);
    }

    #[test]
    fn k33_drawings_meet_their_bounds(seed: u64, target in 3usize..50) {
        let g = random_k33_free(&mut rng(seed), target);
        let c = k33_rectilinear_drawing(&g, seed).unwrap();
        let (total, per_edge) = naive_crossings(&c.drawing);
        let delta = g.max_degree();
        prop_assert!(per_edge.iter().all(|&x| x <= 2 * delta));
        prop_assert!(g.n() < 3 || total <= delta * (3 * g.n() - 5));
        prop_assert!(c.drawing.is_rectilinear());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn tree_partitions_have_forest_patterns(seed: u64, n in 1usize..16, p in 0.05f64..0.5) {
        let g = random_graph(&mut rng(seed), n, p);
        let (_, td) = treewidth_exact(&g).unwrap();
        let tp = tree_partition(&g, &td).unwrap();
        prop_assert!(tp.partition.pattern().is_forest());
    }

    #[test]
    fn partition_drawings_cross_only_near_shared_bags(seed: u64, target in 5usize..40) {
        let mut r = rng(seed);
        let g = random_k33_free(&mut r, target);
        let p = k33_planar_partition(&g).unwrap();
        let c = produce_drawing(&g, &p, seed).unwrap();
        prop_assert!(c.drawing.is_rectilinear());
        let bag = p.part.clone();
        for pair in &c.report.pairs {
            let (e, f) = (g.edge(pair.e), g.edge(pair.f));
            let ends_e = [e.0, e.1];
            let ends_f = [f.0, f.1];
            prop_assert!(ends_e.iter().all(|x| !ends_f.contains(x)));
            prop_assert!(ends_e.iter().any(|&x| ends_f.iter().any(|&y| bag[x] == bag[y])));
        }
    }

    #[test]
    fn convex_partition_drawings_are_cocircular(seed: u64, n in 1usize..14, p in 0.05f64..0.5) {
        let g = random_graph(&mut rng(seed), n, p);
        let out = convex_treewidth_pipeline(&g, None).unwrap();
        let dr = &out.drawing.drawing;
        let order = dr.circle.clone().unwrap();
        prop_assert_eq!(convex_count(&order, &g).unwrap().total, out.drawing.report.total);
        let r2 = |q: plandec::geom::Pt| (q.x as i128).pow(2) + (q.y as i128).pow(2);
        prop_assert!(dr.points.iter().all(|&q| r2(q) == r2(dr.points[0])));
    }

    #[test]
    fn refined_partitions_are_rechecked(seed: u64, target in 5usize..30) {
        let mut r = rng(seed);
        let g = random_k33_free(&mut r, target);
        let p = k33_planar_partition(&g).unwrap();
        let pairs: Vec<usize> = (0..p.bags.len()).filter(|&b| p.bags[b].len() == 2).collect();
        prop_assume!(!pairs.is_empty());
        let split = pairs[r.gen_range(0..pairs.len())];
        let mut bags = p.bags.clone();
        let moved = bags[split].pop().unwrap();
        bags.push(vec![moved]);
        let finer = Partition::new(g.clone(), bags).unwrap();
        let planar = is_planar(&finer.pattern());
        prop_assert_eq!(produce_drawing(&g, &finer, seed).is_ok(), planar);
    }
}
