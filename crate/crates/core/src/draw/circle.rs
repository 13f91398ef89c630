//! Lattice points on one circle, for exact convex drawings.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::geom::Pt;

/// `5·13·17·29·37·41`; every prime splits over the Gaussian integers, so the
/// circle `x² + y² = R²` carries `4·3⁶ = 2916` lattice points.
pub const CIRCLE_RADIUS: i64 = 48_612_265;

const GAUSSIAN: [(i128, i128); 6] = [(2, 1), (3, 2), (4, 1), (5, 2), (6, 1), (5, 4)];

fn upper_half() -> &'static [Pt] {
    static POINTS: OnceLock<Vec<Pt>> = OnceLock::new();
    POINTS.get_or_init(|| {
        let mut pts: Vec<(i128, i128)> = vec![(1, 0)];
        for &(a, b) in &GAUSSIAN {
            let mut next = Vec::with_capacity(pts.len() * 3);
            // pi^e * conj(pi)^(2-e) for e in 0..=2
            let choices = [mul((a, -b), (a, -b)), mul((a, b), (a, -b)), mul((a, b), (a, b))];
            for &p in &pts {
                for &c in &choices {
                    next.push(mul(p, c));
                }
            }
            pts = next;
        }
        let mut all: Vec<Pt> = pts
            .iter()
            .flat_map(|&(x, y)| [(x, y), (-y, x), (-x, -y), (y, -x)])
            .map(|(x, y)| Pt::new(x as i64, y as i64))
            .filter(|p| p.y > 0)
            .collect();
        // Upper half circle: the angle grows as x falls.
        all.sort_by_key(|p| std::cmp::Reverse(p.x));
        all.dedup();
        all
    })
}

fn mul(p: (i128, i128), q: (i128, i128)) -> (i128, i128) {
    (p.0 * q.0 - p.1 * q.1, p.0 * q.1 + p.1 * q.0)
}

/// `n` lattice points on the open upper half of the circle, counterclockwise.
/// No two are antipodal, so no three chords meet at the centre.
pub fn circle_points(n: usize) -> Result<Vec<Pt>> {
    let pool = upper_half();
    if n > pool.len() {
        return Err(Error::Precondition(format!("convex drawings support at most {} vertices", pool.len())));
    }
    Ok((0..n).map(|i| pool[i * pool.len() / n.max(1)]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_lie_on_the_circle() {
        let pool = upper_half();
        assert_eq!(pool.len(), 1457);
        let r2 = (CIRCLE_RADIUS as i128).pow(2);
        for p in pool {
            assert_eq!((p.x as i128).pow(2) + (p.y as i128).pow(2), r2);
        }
        let pts = circle_points(10).unwrap();
        assert!(pts.windows(2).all(|w| w[0].x > w[1].x));
        assert!(circle_points(2000).is_err());
    }
}
