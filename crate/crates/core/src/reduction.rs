//! Lattice basis reduction with respect to the width norm of a polygon.
//!
//! `u -> width(P, u)` is a norm on the plane (a seminorm for segments and
//! points), so the two-dimensional Lagrange–Gauss loop carries over: keep
//! the shorter vector first, shorten the longer one by the best integer
//! multiple of the shorter, and swap while that makes progress. Without an
//! inner product there is no closed-form rounding step; the best multiple is
//! found by walking the convex sequence `k -> width(P, u2 + k u1)`.

use serde::Serialize;

use crate::geometry::{ConvexPolygon, IntVector};
use crate::rational::Rational;

/// A basis of the integer lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LatticeBasis {
    pub u1: IntVector,
    pub u2: IntVector,
}

impl LatticeBasis {
    pub fn standard() -> Self {
        Self {
            u1: IntVector::E1,
            u2: IntVector::E2,
        }
    }

    pub fn is_unimodular(&self) -> bool {
        self.u1.det(self.u2).abs() == 1
    }

    /// The three defining inequalities of a reduced basis:
    /// `w(u1) <= w(u2)`, `w(u1 + u2) >= w(u2)` and `w(u1 - u2) >= w(u2)`.
    pub fn is_reduced_for(&self, p: &ConvexPolygon) -> bool {
        let w1 = p.directional_width(self.u1);
        let w2 = p.directional_width(self.u2);
        self.is_unimodular()
            && w1 <= w2
            && p.directional_width(self.u1 + self.u2) >= w2
            && p.directional_width(self.u1 - self.u2) >= w2
    }

    pub fn widths(&self, p: &ConvexPolygon) -> (Rational, Rational) {
        (p.directional_width(self.u1), p.directional_width(self.u2))
    }
}

/// Integer `k` minimizing `width(P, u2 + k u1)`.
///
/// Among several minimizers the one of smallest `|k|` is returned (and
/// `k >= 0` on a tie in magnitude). If `u1` has width zero the sequence is
/// constant and the answer is 0.
pub fn argmin_shift(p: &ConvexPolygon, u1: IntVector, u2: IntVector) -> i64 {
    if p.directional_width(u1) == Rational::from_integer(0) {
        return 0;
    }
    let f = |k: i64| p.directional_width(u2 + u1.scale(k));
    let f0 = f(0);
    let (fp, fm) = (f(1), f(-1));
    // By convexity at most one side can descend from 0.
    let step = if fp < f0 {
        1
    } else if fm < f0 {
        -1
    } else {
        return 0;
    };
    let mut k = step;
    let mut current = if step == 1 { fp } else { fm };
    loop {
        let next = f(k + step);
        if next >= current {
            return k;
        }
        current = next;
        k += step;
    }
}

/// Reduced basis of the integer lattice with respect to `p`.
///
/// For a segment the first vector is the primitive normal (width 0); for a
/// point every width is zero and the standard basis comes back unchanged.
pub fn gauss_reduce(p: &ConvexPolygon) -> LatticeBasis {
    let (mut u1, mut u2) = (IntVector::E1, IntVector::E2);
    let (mut w1, mut w2) = (p.directional_width(u1), p.directional_width(u2));
    if w1 > w2 {
        std::mem::swap(&mut u1, &mut u2);
        std::mem::swap(&mut w1, &mut w2);
    }
    loop {
        let k = argmin_shift(p, u1, u2);
        if k != 0 {
            u2 = u2 + u1.scale(k);
            w2 = p.directional_width(u2);
        }
        if w2 < w1 {
            std::mem::swap(&mut u1, &mut u2);
            std::mem::swap(&mut w1, &mut w2);
        } else {
            return LatticeBasis { u1, u2 };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn poly(pts: &[(i64, i64)]) -> ConvexPolygon {
        ConvexPolygon::from_lattice_points(pts).unwrap()
    }

    #[test]
    fn argmin_shift_examples() {
        let quad = poly(&[(0, 0), (0, 3), (2, 2), (1, 3)]);
        assert_eq!(argmin_shift(&quad, IntVector::E1, IntVector::E2), 0);

        let boxed = poly(&[(0, 0), (5, 0), (5, 1), (0, 1)]);
        let (u1, u2) = (IntVector::new(0, 1), IntVector::new(1, 3));
        // brute force over k in [-10, 10]: width of (1, 3 + k) is 5 + |3 + k|
        let brute = (-10..=10)
            .min_by_key(|&k| (boxed.directional_width(u2 + u1.scale(k)), k.abs(), -k))
            .unwrap();
        assert_eq!(brute, -3);
        assert_eq!(argmin_shift(&boxed, u1, u2), -3);
        assert_eq!(argmin_shift(&boxed, u1, IntVector::new(1, 0)), 0);
    }

    #[test]
    fn argmin_shift_degenerate_direction() {
        let seg = poly(&[(0, 0), (3, 0)]);
        assert_eq!(argmin_shift(&seg, IntVector::E2, IntVector::new(1, 7)), 0);
    }

    #[test]
    fn reduces_worked_examples() {
        let quad = poly(&[(0, 0), (0, 3), (2, 2), (1, 3)]);
        assert_eq!(gauss_reduce(&quad), LatticeBasis::standard());

        let pentagon = poly(&[(4, 0), (5, 0), (2, 2), (0, 3), (1, 2)]);
        let b = gauss_reduce(&pentagon);
        assert!(b.is_reduced_for(&pentagon));
        assert_eq!(b.widths(&pentagon), (int(2), int(2)));
        // the example's own matrix rows form a reduced pair
        let given = LatticeBasis {
            u1: IntVector::new(1, 1),
            u2: IntVector::new(-1, -2),
        };
        assert!(given.is_reduced_for(&pentagon));
        assert_eq!(pentagon.directional_width(given.u1 + given.u2), int(3));
        assert_eq!(pentagon.directional_width(given.u1 - given.u2), int(2));

        let square = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let b = gauss_reduce(&square);
        assert_eq!(b.widths(&square), (int(1), int(1)));
        assert!(b.is_reduced_for(&square));
    }

    #[test]
    fn reduces_degenerate_polygons() {
        let seg = poly(&[(0, 0), (2, 2)]);
        let b = gauss_reduce(&seg);
        assert!(b.is_reduced_for(&seg));
        assert_eq!(b.widths(&seg), (int(0), int(2)));
        assert_eq!(seg.directional_width(b.u1), int(0));

        let point = poly(&[(3, -1)]);
        assert_eq!(gauss_reduce(&point), LatticeBasis::standard());
    }

    #[test]
    fn long_thin_polygon_needs_many_swaps() {
        // thin triangle along (13, 8)
        let needle = poly(&[(0, 0), (13, 8), (14, 9)]);
        let b = gauss_reduce(&needle);
        assert!(b.is_reduced_for(&needle));
        let brute = (-30..=30i64)
            .flat_map(|a| (-30..=30i64).map(move |c| IntVector::new(a, c)))
            .filter(|u| !u.is_zero())
            .map(|u| needle.directional_width(u))
            .min()
            .unwrap();
        assert_eq!(needle.directional_width(b.u1), brute);
    }
}
