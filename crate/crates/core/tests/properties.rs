mod common;

use common::{int, poly, random_grid_polygon, random_map, random_rational_polygon};
use latsize::minimal::{quad_condition, quad_reflection, reflected_quad_params, QuadCondition};
use latsize::oracle::oracle_fits;
use latsize::{
    candidate_directions, canonical_form, check_touch, enumerate_convex, equivalent, gauss_reduce,
    invariants, is_minimal, l_values, lattice_width, ls_square, ConvexPolygon, IntVector, Point,
    Rational, Target, UnimodularMap,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn lattice_polygon() -> impl Strategy<Value = ConvexPolygon> {
    prop::collection::vec((-6i64..=6, -6i64..=6), 3..=8)
        .prop_map(|pts| poly(&pts))
        .prop_filter("two-dimensional", |p| p.dim() == 2)
}

fn rational_polygon() -> impl Strategy<Value = ConvexPolygon> {
    let coord = (0i128..=160, 1i128..=16).prop_map(|(n, d)| Rational::new(n % (10 * d + 1), d));
    prop::collection::vec((coord.clone(), coord), 3..=8)
        .prop_map(|pts| {
            let pts: Vec<Point> = pts.into_iter().map(|(x, y)| Point::new(x, y)).collect();
            ConvexPolygon::hull(&pts).unwrap()
        })
        .prop_filter("two-dimensional", |p| p.dim() == 2)
}

fn direction() -> impl Strategy<Value = IntVector> {
    (-7i64..=7, -7i64..=7)
        .prop_map(|(a, b)| IntVector::new(a, b))
        .prop_filter("nonzero", |u| !u.is_zero())
}

fn map() -> impl Strategy<Value = UnimodularMap> {
    any::<u64>().prop_map(|seed| random_map(&mut ChaCha8Rng::seed_from_u64(seed)))
}

fn scaled(p: &ConvexPolygon, k: i64) -> ConvexPolygon {
    p.transform([[k, 0], [0, k]], &Point::origin())
}

proptest! {
    #[test]
    fn width_is_translation_invariant(p in rational_polygon(), u in direction(), tx in -20i128..20, ty in 1i128..9) {
        let shift = Point::new(Rational::new(tx, ty), Rational::new(ty, 7));
        prop_assert_eq!(p.directional_width(u), p.translate(&shift).directional_width(u));
    }

    #[test]
    fn width_is_homogeneous(p in rational_polygon(), u in direction(), k in 1i64..6) {
        prop_assert_eq!(scaled(&p, k).directional_width(u), p.directional_width(u) * int(k));
        prop_assert_eq!(p.directional_width(u.scale(k)), p.directional_width(u) * int(k));
    }

    #[test]
    fn width_is_subadditive(p in rational_polygon(), u in direction(), v in direction()) {
        prop_assert!(p.directional_width(u + v) <= p.directional_width(u) + p.directional_width(v));
    }

    #[test]
    fn width_pulls_back(p in rational_polygon(), u in direction(), phi in map()) {
        prop_assert_eq!(phi.apply(&p).directional_width(u), p.directional_width(phi.pullback(u)));
    }

    #[test]
    fn area_is_invariant(p in rational_polygon(), phi in map()) {
        prop_assert_eq!(phi.apply(&p).area(), p.area());
    }

    #[test]
    fn reduced_basis_satisfies_inequalities(p in rational_polygon()) {
        let b = gauss_reduce(&p);
        prop_assert!(b.is_unimodular());
        prop_assert!(b.is_reduced_for(&p));
    }

    #[test]
    fn width_pair_is_invariant(p in rational_polygon(), phi in map()) {
        let q = phi.apply(&p);
        prop_assert_eq!(gauss_reduce(&p).widths(&p), gauss_reduce(&q).widths(&q));
        prop_assert_eq!(invariants(&p).ls_simplex, invariants(&q).ls_simplex);
    }

    #[test]
    fn invariants_are_deterministic(p in rational_polygon()) {
        prop_assert_eq!(invariants(&p), invariants(&p.clone()));
    }

    #[test]
    fn certificates_hold(p in rational_polygon()) {
        let r = invariants(&p);
        prop_assert!(r.cert_square.verify(&p));
        prop_assert!(r.cert_simplex.verify(&p));
        prop_assert!(r.width <= r.ls_square && r.ls_square <= r.ls_simplex && r.ls_simplex <= r.ls_square * int(2));
    }

    #[test]
    fn drop_vertex_gives_subpolygon(p in lattice_polygon()) {
        let points = p.lattice_points();
        for v in p.lattice_vertices().unwrap() {
            let q = p.drop_vertex(v).unwrap();
            prop_assert!(p.contains_polygon(&q));
            prop_assert!(!q.contains(&Point::int(v.0, v.1)));
            for &x in points.iter().filter(|&&x| x != v) {
                prop_assert!(q.contains(&Point::int(x.0, x.1)));
            }
        }
    }

    #[test]
    fn equivalence_is_invariant(p in lattice_polygon(), phi in map(), psi in map()) {
        let q = phi.apply(&p);
        let r = psi.apply(&q);
        prop_assert!(equivalent(&p, &p).unwrap());
        prop_assert!(equivalent(&p, &q).unwrap());
        prop_assert!(equivalent(&q, &p).unwrap());
        prop_assert!(equivalent(&p, &r).unwrap());
        prop_assert_eq!(canonical_form(&p).unwrap(), canonical_form(&r).unwrap());
    }

    #[test]
    fn minimality_is_invariant(p in lattice_polygon(), phi in map()) {
        prop_assert_eq!(is_minimal(&p).unwrap(), is_minimal(&phi.apply(&p)).unwrap());
    }

    #[test]
    fn repeated_drops_reach_minimal_subpolygon(p in lattice_polygon()) {
        let h = ls_square(&p);
        let mut cur = p.clone();
        'outer: loop {
            for v in cur.lattice_vertices().unwrap() {
                if cur.dim() == 0 {
                    break;
                }
                let q = cur.drop_vertex(v).unwrap();
                if ls_square(&q) == h {
                    cur = q;
                    continue 'outer;
                }
            }
            break;
        }
        prop_assert!(is_minimal(&cur).unwrap());
        prop_assert_eq!(ls_square(&cur), h);
        prop_assert!(p.contains_polygon(&cur));
    }
}

#[test]
fn reduction_width_is_exhaustive_minimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let p = random_grid_polygon(&mut rng, 4);
        let mut best: Option<Rational> = None;
        for a in -12i64..=12 {
            for b in -12i64..=12 {
                let u = IntVector::new(a, b);
                if !u.is_zero() {
                    let w = p.directional_width(u);
                    best = Some(best.map_or(w, |x| x.min(w)));
                }
            }
        }
        assert_eq!(lattice_width(&p), best.unwrap(), "{p}");
        let dirs = candidate_directions(&p, &lattice_width(&p)).unwrap();
        assert!(dirs
            .iter()
            .any(|&u| p.directional_width(u) == lattice_width(&p)));
    }
}

#[test]
fn pullback_on_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for i in 0..100 {
        let p = random_rational_polygon(&mut rng);
        let phi = random_map(&mut rng);
        let u = IntVector::new(i % 7 - 3, i % 5 + 1);
        assert_eq!(
            phi.apply(&p).directional_width(u),
            p.directional_width(phi.pullback(u))
        );
    }
}

/// Each `l_i` is the smallest dilate of the simplex holding the corresponding
/// sign-flipped reduced image: found here by bisection on the containment test.
#[test]
fn simplex_functionals_match_bisection() {
    let flips = [[1i64, 1], [-1, -1], [1, -1], [-1, 1]];
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let p = random_rational_polygon(&mut rng);
        let b = gauss_reduce(&p);
        let m = [[b.u1.a, b.u1.b], [b.u2.a, b.u2.b]];
        let ls = l_values(&p.transform(m, &Point::origin()));
        for (i, [sx, sy]) in flips.into_iter().enumerate() {
            let fm = [[sx * m[0][0], sx * m[0][1]], [sy * m[1][0], sy * m[1][1]]];
            let image = p.transform(fm, &Point::origin()).normalized_to_origin();
            let (mut lo, mut hi) = (int(0), int(100));
            for _ in 0..40 {
                let mid = (lo + hi) / int(2);
                if image.contained_in_dilate(&mid, Target::Simplex).unwrap() {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            assert!(lo < ls[i] && ls[i] <= hi, "l{} of {p}", i + 1);
            assert!(hi - lo < Rational::new(1, 1 << 30));
        }
    }
}

#[test]
fn certificate_dilates_are_tight() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..40 {
        let p = random_rational_polygon(&mut rng);
        let r = invariants(&p);
        let eps = Rational::new(1, 1000);
        for (target, l) in [
            (Target::Square, r.ls_square),
            (Target::Simplex, r.ls_simplex),
        ] {
            assert!(oracle_fits(&p, target, &l).unwrap());
            assert!(
                !oracle_fits(&p, target, &(l - eps)).unwrap(),
                "{p} {target}"
            );
        }
    }
}

#[test]
fn touch_agrees_with_reduction() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut hits = 0;
    for _ in 0..2000 {
        let p = random_grid_polygon(&mut rng, 4);
        if let Some((h, w)) = check_touch(&p) {
            hits += 1;
            let r = invariants(&p);
            assert_eq!((r.ls_square, r.width), (h, w), "{p}");
        }
    }
    assert!(hits > 50);
}

#[test]
fn single_drop_test_matches_full_subpolygon_search() {
    let polys = enumerate_convex(3, true).unwrap();
    let sizes: Vec<Rational> = polys.iter().map(ls_square).collect();
    let areas: Vec<Rational> = polys.iter().map(|p| p.area()).collect();
    let lattice_points: Vec<usize> = polys.iter().map(|p| p.lattice_points().len()).collect();
    for (i, p) in polys.iter().enumerate() {
        let has_smaller = (0..polys.len()).any(|j| {
            j != i
                && sizes[j] == sizes[i]
                && areas[j] <= areas[i]
                && lattice_points[j] < lattice_points[i]
                && p.contains_polygon(&polys[j])
        });
        assert_eq!(is_minimal(p).unwrap(), !has_smaller, "{p}");
    }
}

#[test]
fn grid_polygons_fit_their_grid() {
    for n in 1..=3 {
        for p in enumerate_convex(n, true).unwrap() {
            assert!(ls_square(&p) <= int(n), "{p}");
        }
    }
}

#[test]
fn quad_conditions_are_exclusive_and_swapped_by_reflection() {
    for h in 2..=12 {
        for a in 1..h {
            for b in 1..h {
                for c in 1..h {
                    for d in 1..h {
                        let min_sum = a.min(b) + c.min(d) > h;
                        let max_sum = a.max(c) + b.max(d) < h;
                        assert!(!(min_sum && max_sum), "h={h} ({a},{b},{c},{d})");
                        let (ra, rb, rc, rd) = reflected_quad_params(h, a, b, c, d);
                        let swapped = quad_condition(h, ra, rb, rc, rd).unwrap();
                        assert_eq!(min_sum, swapped == Some(QuadCondition::MaxSum));
                        if h <= 6 {
                            let quad = |a, b, c, d| poly(&[(a, 0), (0, b), (h, h - c), (h - d, h)]);
                            assert_eq!(
                                quad_reflection(h).apply(&quad(a, b, c, d)),
                                quad(ra, rb, rc, rd)
                            );
                        }
                    }
                }
            }
        }
    }
}
