#![allow(dead_code)]

use latsize::{ConvexPolygon, Point, Rational, UnimodularMap};
use rand::Rng;

pub fn poly(pts: &[(i64, i64)]) -> ConvexPolygon {
    ConvexPolygon::from_lattice_points(pts).unwrap()
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(v as i128)
}

/// Random product of elementary unimodular matrices, a random sign flip and
/// a random integer translation.
pub fn random_map<R: Rng>(rng: &mut R) -> UnimodularMap {
    let mut m = UnimodularMap::linear([[1, 0], [0, 1]]).unwrap();
    for _ in 0..rng.gen_range(1..=4) {
        let k = rng.gen_range(-2..=2);
        let e = if rng.gen_bool(0.5) {
            [[1, k], [0, 1]]
        } else {
            [[1, 0], [k, 1]]
        };
        m = UnimodularMap::linear(e).unwrap().compose(&m);
    }
    if rng.gen_bool(0.5) {
        m = UnimodularMap::linear([[0, 1], [1, 0]]).unwrap().compose(&m);
    }
    let t = [rng.gen_range(-5..=5), rng.gen_range(-5..=5)];
    UnimodularMap::translation(t).compose(&m)
}

/// Hull of 3..=8 random points with denominators at most 16 in `[0,10]^2`,
/// redrawn until it is two-dimensional.
pub fn random_rational_polygon<R: Rng>(rng: &mut R) -> ConvexPolygon {
    loop {
        let k = rng.gen_range(3..=8);
        let pts: Vec<Point> = (0..k)
            .map(|_| {
                let mut coord = || {
                    let q: i128 = rng.gen_range(1..=16);
                    Rational::new(rng.gen_range(0..=10 * q), q)
                };
                Point::new(coord(), coord())
            })
            .collect();
        let p = ConvexPolygon::hull(&pts).unwrap();
        if p.dim() == 2 {
            return p;
        }
    }
}

/// Hull of a random subset of the grid `[0,n]^2`, redrawn until it is
/// two-dimensional.
pub fn random_grid_polygon<R: Rng>(rng: &mut R, n: i64) -> ConvexPolygon {
    loop {
        let k = rng.gen_range(3..=8);
        let pts: Vec<(i64, i64)> = (0..k)
            .map(|_| (rng.gen_range(0..=n), rng.gen_range(0..=n)))
            .collect();
        let p = poly(&pts);
        if p.dim() == 2 {
            return p;
        }
    }
}
