//! Extension of a plane graph to a planar triangulation on the same vertices.

use super::planarity::{planar_embedding, Embedding};
use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Triangulation {
    pub graph: Graph,
    pub embedding: Embedding,
    /// Edges that were not in the input, as `(u, v)` with `u < v`.
    pub added: Vec<(usize, usize)>,
}

/// Triangulates a planar graph, computing an embedding first.
pub fn triangulate(g: &Graph) -> Result<Triangulation> {
    let emb = planar_embedding(g).ok_or_else(|| Error::Precondition("triangulation needs a planar graph".into()))?;
    triangulate_embedded(g, &emb)
}

/// Adds edges inside the faces of `emb` until every face is a triangle.
pub fn triangulate_embedded(g: &Graph, emb: &Embedding) -> Result<Triangulation> {
    let n = g.n();
    if n < 3 {
        return Err(Error::Precondition(format!("triangulation needs at least 3 vertices, got {n}")));
    }
    let mut rot: Vec<Vec<usize>> = (0..n).map(|v| emb.rotation(v).to_vec()).collect();
    let mut adj: Vec<std::collections::HashSet<usize>> =
        (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut added = Vec::new();
    let insert = |rot: &mut Vec<Vec<usize>>,
                  adj: &mut Vec<std::collections::HashSet<usize>>,
                  v: usize,
                  after: Option<usize>,
                  w: usize| {
        match after {
            Some(a) => {
                let i = rot[v].iter().position(|&x| x == a).expect("corner neighbour");
                rot[v].insert(i + 1, w);
            }
            None => rot[v].push(w),
        }
        adj[v].insert(w);
    };
    // Join the components in a chain through their smallest vertices.
    let comps = g.components();
    for pair in comps.windows(2) {
        let (a, b) = (pair[0][0], pair[1][0]);
        let after_a = rot[a].last().copied();
        let after_b = rot[b].last().copied();
        insert(&mut rot, &mut adj, a, after_a, b);
        insert(&mut rot, &mut adj, b, after_b, a);
        added.push((a.min(b), a.max(b)));
    }
    loop {
        let cur = Embedding::from_rotation(rot.clone());
        let faces = cur.faces();
        // Faces are stale after one insertion, so take one at a time.
        let Some(f) = faces.iter().find(|f| f.len() > 3) else { break };
        {
            let l = f.len();
            let mut chord = None;
            for i in 0..l {
                let (a, b) = (f[(i + l - 1) % l], f[(i + 1) % l]);
                if a != b && !adj[a].contains(&b) {
                    chord = Some(((i + l - 1) % l, (i + 1) % l));
                    break;
                }
            }
            if chord.is_none() {
                'outer: for i in 0..l {
                    for j in i + 2..l {
                        let (a, b) = (f[i], f[j]);
                        if a != b && !adj[a].contains(&b) {
                            chord = Some((i, j));
                            break 'outer;
                        }
                    }
                }
            }
            let (i, j) = chord.ok_or_else(|| Error::Invariant(format!("face {f:?} admits no chord")))?;
            let (a, b) = (f[i], f[j]);
            let (pa, pb) = (f[(i + l - 1) % l], f[(j + l - 1) % l]);
            insert(&mut rot, &mut adj, a, Some(pa), b);
            insert(&mut rot, &mut adj, b, Some(pb), a);
            added.push((a.min(b), a.max(b)));
        }
    }
    let graph = g.with_edges(added.iter().copied())?;
    let embedding = Embedding::from_rotation(rot);
    debug_assert!(embedding.is_valid_for(&graph));
    debug_assert!(embedding.faces().iter().all(|f| f.len() == 3));
    added.sort_unstable();
    Ok(Triangulation { graph, embedding, added })
}
