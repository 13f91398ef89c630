//! Exact planar predicates on integer points.
//!
//! Coordinates stay below `COORD_LIMIT` in absolute value so every
//! orientation determinant fits in `i128`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

pub const COORD_LIMIT: i64 = 1 << 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pt {
    pub x: i64,
    pub y: i64,
}

impl Pt {
    pub const fn new(x: i64, y: i64) -> Pt {
        Pt { x, y }
    }

    pub fn in_range(self) -> bool {
        self.x.abs() < COORD_LIMIT && self.y.abs() < COORD_LIMIT
    }
}

/// Twice the signed area of `abc`; positive for a left turn.
pub fn orient(a: Pt, b: Pt, c: Pt) -> i128 {
    let (bx, by) = (b.x as i128 - a.x as i128, b.y as i128 - a.y as i128);
    let (cx, cy) = (c.x as i128 - a.x as i128, c.y as i128 - a.y as i128);
    bx * cy - by * cx
}

pub fn dist2(a: Pt, b: Pt) -> i128 {
    let dx = a.x as i128 - b.x as i128;
    let dy = a.y as i128 - b.y as i128;
    dx * dx + dy * dy
}

/// Whether `p` lies on the closed segment `ab`.
pub fn on_segment(a: Pt, b: Pt, p: Pt) -> bool {
    orient(a, b, p) == 0 && p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// How two closed segments meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SegmentMeet {
    Disjoint,
    /// Interiors cross at a single point that is an endpoint of neither.
    Proper,
    /// They share exactly one point, which is an endpoint of at least one segment.
    Touch,
    /// Collinear with a common sub-segment of positive length.
    Overlap,
}

pub fn classify(a: Pt, b: Pt, c: Pt, d: Pt) -> SegmentMeet {
    let (lo1, hi1) = ((a.x.min(b.x), a.y.min(b.y)), (a.x.max(b.x), a.y.max(b.y)));
    let (lo2, hi2) = ((c.x.min(d.x), c.y.min(d.y)), (c.x.max(d.x), c.y.max(d.y)));
    if hi1.0 < lo2.0 || hi2.0 < lo1.0 || hi1.1 < lo2.1 || hi2.1 < lo1.1 {
        return SegmentMeet::Disjoint;
    }
    let o1 = orient(a, b, c).signum();
    let o2 = orient(a, b, d).signum();
    let o3 = orient(c, d, a).signum();
    let o4 = orient(c, d, b).signum();
    if o1 == 0 && o2 == 0 {
        // Collinear: compare projections on the dominant axis.
        let key = |p: Pt| if a.x != b.x { p.x } else { p.y };
        let (s1, e1) = (key(a).min(key(b)), key(a).max(key(b)));
        let (s2, e2) = (key(c).min(key(d)), key(c).max(key(d)));
        let lo = s1.max(s2);
        let hi = e1.min(e2);
        return if lo > hi {
            SegmentMeet::Disjoint
        } else if lo == hi {
            SegmentMeet::Touch
        } else {
            SegmentMeet::Overlap
        };
    }
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return SegmentMeet::Proper;
    }
    if (o1 == 0 && on_segment(a, b, c))
        || (o2 == 0 && on_segment(a, b, d))
        || (o3 == 0 && on_segment(c, d, a))
        || (o4 == 0 && on_segment(c, d, b))
    {
        return SegmentMeet::Touch;
    }
    SegmentMeet::Disjoint
}

pub fn segments_intersect(a: Pt, b: Pt, c: Pt, d: Pt) -> bool {
    classify(a, b, c, d) != SegmentMeet::Disjoint
}

/// Exact rational point `(x/den, y/den)` in lowest terms with `den > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatPoint {
    pub x: BigInt,
    pub y: BigInt,
    pub den: BigInt,
}

impl RatPoint {
    fn normalized(mut x: BigInt, mut y: BigInt, mut den: BigInt) -> RatPoint {
        if den.is_negative() {
            x = -x;
            y = -y;
            den = -den;
        }
        let g = x.gcd(&y).gcd(&den);
        if !g.is_zero() {
            x /= &g;
            y /= &g;
            den /= &g;
        }
        RatPoint { x, y, den }
    }
}

/// Parameter `t` (as `num/den`, `den > 0`) with the crossing point `a + t (b - a)`.
pub fn crossing_parameter(a: Pt, b: Pt, c: Pt, d: Pt) -> (i128, i128) {
    let num = orient(c, d, a);
    let den = num - orient(c, d, b);
    if den < 0 {
        (-num, -den)
    } else {
        (num, den)
    }
}

/// Intersection point of two properly crossing segments.
pub fn crossing_point(a: Pt, b: Pt, c: Pt, d: Pt) -> RatPoint {
    let (num, den) = crossing_parameter(a, b, c, d);
    let num = BigInt::from(num);
    let den = BigInt::from(den);
    let x = BigInt::from(a.x) * &den + &num * BigInt::from(b.x as i128 - a.x as i128);
    let y = BigInt::from(a.y) * &den + &num * BigInt::from(b.y as i128 - a.y as i128);
    RatPoint::normalized(x, y, den)
}

/// Compares two parameters `n1/d1` and `n2/d2` with positive denominators.
pub fn cmp_fraction(a: (i128, i128), b: (i128, i128)) -> std::cmp::Ordering {
    (BigInt::from(a.0) * BigInt::from(b.1)).cmp(&(BigInt::from(b.0) * BigInt::from(a.1)))
}

/// Squared distance from `p` to segment `ab` as an exact fraction `(num, den)`.
pub fn dist2_point_segment(p: Pt, a: Pt, b: Pt) -> (i128, i128) {
    let abx = b.x as i128 - a.x as i128;
    let aby = b.y as i128 - a.y as i128;
    let apx = p.x as i128 - a.x as i128;
    let apy = p.y as i128 - a.y as i128;
    let dot = abx * apx + aby * apy;
    let len2 = abx * abx + aby * aby;
    if dot <= 0 || len2 == 0 {
        return (dist2(p, a), 1);
    }
    if dot >= len2 {
        return (dist2(p, b), 1);
    }
    let cross = orient(a, b, p);
    (cross * cross, len2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_diagonals_cross_once() {
        let (a, b, c, d) = (Pt::new(0, 0), Pt::new(2, 2), Pt::new(0, 2), Pt::new(2, 0));
        assert_eq!(classify(a, b, c, d), SegmentMeet::Proper);
        let p = crossing_point(a, b, c, d);
        assert_eq!((p.x.clone(), p.y.clone(), p.den.clone()), (1.into(), 1.into(), 1.into()));
    }

    #[test]
    fn touches_and_overlaps() {
        let o = Pt::new(0, 0);
        assert_eq!(classify(o, Pt::new(4, 0), Pt::new(2, 0), Pt::new(2, 3)), SegmentMeet::Touch);
        assert_eq!(classify(o, Pt::new(4, 0), Pt::new(2, 0), Pt::new(6, 0)), SegmentMeet::Overlap);
        assert_eq!(classify(o, Pt::new(4, 0), Pt::new(4, 0), Pt::new(6, 0)), SegmentMeet::Touch);
        assert_eq!(classify(o, Pt::new(4, 0), Pt::new(5, 0), Pt::new(6, 0)), SegmentMeet::Disjoint);
        assert_eq!(classify(o, Pt::new(0, 4), Pt::new(0, 2), Pt::new(0, 6)), SegmentMeet::Overlap);
    }

    #[test]
    fn point_segment_distance() {
        let (a, b) = (Pt::new(0, 0), Pt::new(4, 0));
        assert_eq!(dist2_point_segment(Pt::new(2, 3), a, b), (9 * 16, 16));
        assert_eq!(dist2_point_segment(Pt::new(-1, 0), a, b), (1, 1));
    }
}
