//! Polyline drawings with exact coordinates, crossing counts, and the
//! conversions between drawings and planar decompositions.

mod certify;
mod circle;
mod convert;
mod count;
mod render;
mod svg;

pub use certify::{BoundCheck, CertifiedDrawing};
pub use circle::{circle_points, CIRCLE_RADIUS};
pub use convert::{convex_to_treedecomp, drawing_to_decomposition, ConvexTreeDecomp, CrossingDecomp, Planarization};
pub use count::{convex_count, count_crossings, CrossingPair, CrossingReport};
pub use render::{render, RenderBounds, Rendered, TupleAudit};
pub use svg::to_svg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Degeneracy, Error, Result};
use crate::geom::Pt;
use crate::graph::{Graph, GraphJson};

/// A drawing of `host`: vertex `v` at `points[v]`, edge `e = (u, v)` with
/// `u < v` drawn as `points[u], routes[e].., points[v]`.
///
/// Coordinates are integers; a rational input is scaled to a common
/// denominator, which changes no incidence or crossing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Drawing {
    pub host: Graph,
    pub points: Vec<Pt>,
    pub routes: Vec<Vec<Pt>>,
    /// Circular vertex order when every vertex lies on one circle.
    pub circle: Option<Vec<usize>>,
}

/// `{"host", "points": [[xn, xd, yn, yd]..], "routes": [[[xn, xd, yn, yd]..]..], "convex"}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DrawingJson {
    pub host: GraphJson,
    pub points: Vec<[i64; 4]>,
    pub routes: Vec<Vec<[i64; 4]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub convex: Option<Vec<usize>>,
}

impl Drawing {
    pub fn straight(host: Graph, points: Vec<Pt>) -> Drawing {
        let routes = vec![Vec::new(); host.m()];
        Drawing { host, points, routes, circle: None }
    }

    /// The full polyline of edge `e`, from its smaller endpoint.
    pub fn polyline(&self, e: usize) -> Vec<Pt> {
        let (u, v) = self.host.edge(e);
        let mut out = Vec::with_capacity(self.routes[e].len() + 2);
        out.push(self.points[u]);
        out.extend(self.routes[e].iter().copied());
        out.push(self.points[v]);
        out
    }

    pub fn bends(&self, e: usize) -> usize {
        self.routes[e].len()
    }

    pub fn max_bends(&self) -> usize {
        self.routes.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_rectilinear(&self) -> bool {
        self.routes.iter().all(Vec::is_empty)
    }

    pub fn check_shape(&self) -> Result<()> {
        if self.points.len() != self.host.n() || self.routes.len() != self.host.m() {
            return Err(Error::Precondition(format!(
                "drawing has {} points and {} routes for {} vertices and {} edges",
                self.points.len(),
                self.routes.len(),
                self.host.n(),
                self.host.m()
            )));
        }
        let all = self.points.iter().chain(self.routes.iter().flatten());
        if all.into_iter().any(|p| !p.in_range()) {
            return Err(Error::Degenerate(Degeneracy::CoordinateOverflow));
        }
        Ok(())
    }

    pub fn to_json(&self) -> DrawingJson {
        let enc = |p: &Pt| [p.x, 1, p.y, 1];
        DrawingJson {
            host: self.host.to_json(),
            points: self.points.iter().map(enc).collect(),
            routes: self.routes.iter().map(|r| r.iter().map(enc).collect()).collect(),
            convex: self.circle.clone(),
        }
    }

    /// Reads rational coordinates, scaling by the least common denominator.
    pub fn from_json(j: &DrawingJson) -> Result<Drawing> {
        let host = Graph::from_json(&j.host)?;
        let all = j.points.iter().chain(j.routes.iter().flatten());
        let mut lcm = BigInt::one();
        for c in all.clone() {
            for den in [c[1], c[3]] {
                if den == 0 {
                    return Err(Error::Parse("zero denominator in drawing".into()));
                }
                lcm = lcm.lcm(&BigInt::from(den).abs());
            }
        }
        let conv = |c: &[i64; 4]| -> Result<Pt> {
            let coord = |num: i64, den: i64| -> Result<i64> {
                let v = BigInt::from(num) * (&lcm / BigInt::from(den));
                v.to_i64()
                    .filter(|x| x.abs() < crate::geom::COORD_LIMIT)
                    .ok_or(Error::Degenerate(Degeneracy::CoordinateOverflow))
            };
            Ok(Pt::new(coord(c[0], c[1])?, coord(c[2], c[3])?))
        };
        let points = j.points.iter().map(conv).collect::<Result<Vec<_>>>()?;
        let routes =
            j.routes.iter().map(|r| r.iter().map(conv).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
        if let Some(order) = &j.convex {
            let mut seen = vec![false; host.n()];
            for &v in order {
                if v >= host.n() || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::Parse("convex order is not a permutation".into()));
                }
            }
            if order.len() != host.n() {
                return Err(Error::Parse("convex order is not a permutation".into()));
            }
        }
        let d = Drawing { host, points, routes, circle: j.convex.clone() };
        d.check_shape()?;
        debug_assert!(lcm > BigInt::zero());
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_input_is_scaled() {
        let j = DrawingJson {
            host: GraphJson { n: 2, edges: vec![[0, 1]] },
            points: vec![[1, 2, 0, 1], [1, 1, 1, 3]],
            routes: vec![vec![[2, 3, 5, 1]]],
            convex: None,
        };
        let d = Drawing::from_json(&j).unwrap();
        assert_eq!(d.points, vec![Pt::new(3, 0), Pt::new(6, 2)]);
        assert_eq!(d.routes[0], vec![Pt::new(4, 30)]);
        let back = Drawing::from_json(&d.to_json()).unwrap();
        assert_eq!(back, d);
        let mut bad = j.clone();
        bad.points[0][1] = 0;
        assert!(Drawing::from_json(&bad).is_err());
    }
}
