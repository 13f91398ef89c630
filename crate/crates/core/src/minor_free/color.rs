//! Proper 4-colourings of planar graphs.

use crate::error::{Error, Result};
use crate::graph::degeneracy::degeneracy_order;
use crate::graph::Graph;

const UNSET: u8 = u8::MAX;

/// Search nodes for the exact fallback.
const BACKTRACK_BUDGET: usize = 5_000_000;

/// A proper colouring with colours `0..4`.
///
/// Greedy in reverse degeneracy order, freeing a colour with Kempe-chain swaps
/// when all four appear around the next vertex; if that stalls, an exact
/// DSATUR search. Exhausting the search budget on a planar graph is a bug.
pub fn four_colouring(g: &Graph) -> Result<Vec<u8>> {
    if let Some(c) = greedy_kempe(g) {
        return Ok(c);
    }
    let mut colour = vec![UNSET; g.n()];
    let mut budget = BACKTRACK_BUDGET;
    if dsatur(g, &mut colour, 0, &mut budget) {
        Ok(colour)
    } else {
        Err(Error::Invariant(format!("no 4-colouring found within budget on {} vertices", g.n())))
    }
}

pub fn is_proper(g: &Graph, colour: &[u8]) -> bool {
    colour.len() == g.n() && g.edges().iter().all(|&(u, v)| colour[u] != colour[v])
}

fn free_colour(g: &Graph, colour: &[u8], v: usize) -> Option<u8> {
    let mut used = [false; 4];
    for &w in g.neighbors(v) {
        if colour[w] != UNSET {
            used[colour[w] as usize] = true;
        }
    }
    (0..4u8).find(|&c| !used[c as usize])
}

fn greedy_kempe(g: &Graph) -> Option<Vec<u8>> {
    let order = degeneracy_order(g).order;
    let mut colour = vec![UNSET; g.n()];
    for &v in order.iter().rev() {
        let c = free_colour(g, &colour, v).or_else(|| kempe_free(g, &mut colour, v))?;
        colour[v] = c;
    }
    Some(colour)
}

/// Tries every single Kempe swap at a neighbour of `v`; keeps the first one
/// that frees a colour.
fn kempe_free(g: &Graph, colour: &mut [u8], v: usize) -> Option<u8> {
    for a in 0..4u8 {
        for b in 0..4u8 {
            if a == b {
                continue;
            }
            let starts: Vec<usize> = g.neighbors(v).iter().copied().filter(|&x| colour[x] == a).collect();
            for x in starts {
                let chain = kempe_chain(g, colour, x, a, b);
                swap(colour, &chain, a, b);
                if let Some(c) = free_colour(g, colour, v) {
                    return Some(c);
                }
                swap(colour, &chain, a, b);
            }
        }
    }
    None
}

fn kempe_chain(g: &Graph, colour: &[u8], start: usize, a: u8, b: u8) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut out = Vec::new();
    while let Some(x) = stack.pop() {
        out.push(x);
        for &y in g.neighbors(x) {
            if !seen[y] && (colour[y] == a || colour[y] == b) {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    out
}

fn swap(colour: &mut [u8], chain: &[usize], a: u8, b: u8) {
    for &x in chain {
        colour[x] = if colour[x] == a { b } else { a };
    }
}

fn dsatur(g: &Graph, colour: &mut [u8], done: usize, budget: &mut usize) -> bool {
    if done == g.n() {
        return true;
    }
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    // Most constrained uncoloured vertex, then highest degree.
    let mut best = None;
    let mut best_key = (0usize, 0usize);
    for v in (0..g.n()).filter(|&v| colour[v] == UNSET) {
        let mut used = [false; 4];
        for &w in g.neighbors(v) {
            if colour[w] != UNSET {
                used[colour[w] as usize] = true;
            }
        }
        let key = (used.iter().filter(|&&u| u).count(), g.degree(v));
        if best.is_none() || key > best_key {
            best = Some(v);
            best_key = key;
        }
    }
    let v = best.expect("an uncoloured vertex remains");
    for c in 0..4u8 {
        if g.neighbors(v).iter().all(|&w| colour[w] != c) {
            colour[v] = c;
            if dsatur(g, colour, done + 1, budget) {
                return true;
            }
            colour[v] = UNSET;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::triangulate::triangulate;

    #[test]
    fn colours_small_planar_graphs() {
        for g in [complete(4), octahedron(), grid(6, 7), cycle(9)] {
            let c = four_colouring(&g).unwrap();
            assert!(is_proper(&g, &c));
        }
        let t = triangulate(&grid(12, 12)).unwrap().graph;
        assert!(is_proper(&t, &four_colouring(&t).unwrap()));
    }

    #[test]
    fn exact_search_detects_k5() {
        let g = complete(5);
        let mut colour = vec![UNSET; 5];
        let mut budget = 1000;
        assert!(!dsatur(&g, &mut colour, 0, &mut budget));
    }
}
