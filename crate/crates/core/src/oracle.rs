//! Brute-force oracles: exhaustive lattice-size search over unimodular
//! bases, canonical forms up to lattice equivalence, and minimality.
//!
//! The search never consults the reduced basis. It only borrows the
//! fast-path lattice size as an upper bound `cap`: any map fitting `P` into
//! `l X` with `l <= cap` has both matrix rows of width at most `cap`, so
//! enumerating all primitive directions of width `<= cap` is exhaustive.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{cross, ConvexPolygon, IntVector, Point, Target};
use crate::lattice_size::{invariants, ls_square};
use crate::rational::{floor_i64, Rational};

/// Primitive directions `u` (one of `±u`, with `a > 0` or `a == 0, b > 0`)
/// with `width(P, u) <= cap`, sorted.
pub fn candidate_directions(p: &ConvexPolygon, cap: &Rational) -> Result<Vec<IntVector>> {
    if p.dim() < 2 {
        return Err(Error::Degenerate(
            "a segment or point has infinitely many directions of bounded width".into(),
        ));
    }
    if cap.is_negative() {
        return Err(Error::invalid("negative width cap"));
    }
    let (bound_a, bound_b) = direction_box(p, cap);
    let mut out = Vec::new();
    for a in 0..=bound_a {
        let start = if a == 0 { 1 } else { -bound_b };
        let mut entered = false;
        for b in start..=bound_b {
            let u = IntVector::new(a, b);
            if p.directional_width(u) <= *cap {
                entered = true;
                if u.is_primitive() {
                    out.push(u);
                }
            } else if entered {
                // the width is convex along the row, so the sublevel set is an interval
                break;
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Bounds `|a|` and `|b|` for any `u = (a, b)` of width at most `cap`.
///
/// For two edge vectors `e1, e2` spanned from a vertex, `|u.e1|` and `|u.e2|`
/// never exceed the width of `u`; inverting `u -> (u.e1, u.e2)` bounds `u`.
fn direction_box(p: &ConvexPolygon, cap: &Rational) -> (i64, i64) {
    let v = p.vertices();
    let o = &v[0];
    let (mut best, mut e1, mut e2) = (Rational::zero(), o.sub(o), o.sub(o));
    for i in 1..v.len() {
        for j in i + 1..v.len() {
            let area = cross(o, &v[i], &v[j]).abs();
            if area > best {
                best = area;
                e1 = v[i].sub(o);
                e2 = v[j].sub(o);
            }
        }
    }
    let bound_a = *cap * (e1.y.abs() + e2.y.abs()) / best;
    let bound_b = *cap * (e1.x.abs() + e2.x.abs()) / best;
    (floor_i64(&bound_a), floor_i64(&bound_b))
}

/// Smallest dilate of `target` reachable with rows `u1, u2` and the best
/// translation, computed from support values of `P`.
fn basis_value(p: &ConvexPolygon, u1: IntVector, u2: IntVector, target: Target) -> Rational {
    match target {
        Target::Square => p.directional_width(u1).max(p.directional_width(u2)),
        Target::Simplex => {
            let h = |u: IntVector| p.support(u);
            // every sign pattern diag(±1, ±1) applied to the rows
            let l1 = h(u1 + u2) + h(-u1) + h(-u2);
            let l2 = h(u1) + h(u2) + h(-(u1 + u2));
            let l3 = h(u2) + h(-u1) + h(u1 - u2);
            let l4 = h(u1) + h(-u2) + h(u2 - u1);
            l1.min(l2).min(l3).min(l4)
        }
    }
}

/// Minimum of `basis_value` over all unimodular bases whose rows have width
/// at most `cap`.
fn search(p: &ConvexPolygon, target: Target, cap: &Rational) -> Result<Option<Rational>> {
    let dirs = candidate_directions(p, cap)?;
    let mut best: Option<Rational> = None;
    for (i, &u1) in dirs.iter().enumerate() {
        for &u2 in &dirs[i + 1..] {
            if u1.det(u2).abs() != 1 {
                continue;
            }
            let value = basis_value(p, u1, u2, target);
            if best.is_none_or(|b| value < b) {
                best = Some(value);
            }
        }
    }
    Ok(best)
}

/// Lattice size by exhaustive search, independent of basis reduction.
pub fn oracle_ls(p: &ConvexPolygon, target: Target) -> Result<Rational> {
    if p.dim() < 2 {
        return Err(Error::Degenerate(
            "the oracle needs a two-dimensional polygon".into(),
        ));
    }
    let report = invariants(p);
    let cap = match target {
        Target::Square => report.cert_square.dilate,
        Target::Simplex => report.cert_simplex.dilate,
    };
    let best = search(p, target, &cap)?;
    Ok(best.expect("the fast-path certificate basis lies inside the search space"))
}

/// Whether some affine unimodular image of `P` fits in `l * target`, decided
/// by exhaustive search.
pub fn oracle_fits(p: &ConvexPolygon, target: Target, l: &Rational) -> Result<bool> {
    if l.is_negative() {
        return Ok(false);
    }
    Ok(search(p, target, l)?.is_some_and(|best| best <= *l))
}

/// Normal form of `P` up to unimodular maps and real translations.
///
/// Among all images of `P` inside `[0, h]^2` with both coordinate minima at
/// 0 (`h` the square lattice size), returns the one with the smallest
/// canonical vertex list.
pub fn normal_form(p: &ConvexPolygon) -> ConvexPolygon {
    match p.dim() {
        0 => ConvexPolygon::from_cyclic(vec![Point::origin()]),
        1 => {
            let length = lattice_length(&p.vertices()[1].sub(&p.vertices()[0]));
            ConvexPolygon::from_cyclic(vec![Point::origin(), Point::new(Rational::zero(), length)])
        }
        _ => {
            let h = ls_square(p);
            let dirs = candidate_directions(p, &h).expect("two-dimensional polygon");
            let mut best: Option<ConvexPolygon> = None;
            for &u1 in &dirs {
                for &u2 in &dirs {
                    if u1.det(u2).abs() != 1 {
                        continue;
                    }
                    for (s1, s2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        let m = [[s1 * u1.a, s1 * u1.b], [s2 * u2.a, s2 * u2.b]];
                        let image = p.transform(m, &Point::origin()).normalized_to_origin();
                        if best.as_ref().is_none_or(|b| image < *b) {
                            best = Some(image);
                        }
                    }
                }
            }
            best.expect("the reduced basis is among the candidates")
        }
    }
}

/// Rational `t` with `d = t * w` for a primitive integer vector `w`.
fn lattice_length(d: &Point) -> Rational {
    let den = d.x.denom().lcm(d.y.denom());
    let ix = (d.x * Rational::from_integer(den)).to_integer();
    let iy = (d.y * Rational::from_integer(den)).to_integer();
    Rational::new(ix.gcd(&iy), den)
}

/// Canonical representative of the lattice-equivalence class of a lattice
/// polygon.
pub fn canonical_form(p: &ConvexPolygon) -> Result<ConvexPolygon> {
    if !p.is_lattice() {
        return Err(Error::NotLattice);
    }
    Ok(normal_form(p))
}

/// Whether two lattice polygons are lattice-equivalent.
pub fn equivalent(p: &ConvexPolygon, q: &ConvexPolygon) -> Result<bool> {
    if !p.is_lattice() || !q.is_lattice() {
        return Err(Error::NotLattice);
    }
    if p.vertices().len() != q.vertices().len() || p.area() != q.area() {
        return Ok(false);
    }
    Ok(normal_form(p) == normal_form(q))
}

/// Whether no proper lattice subpolygon has the same square lattice size.
///
/// The square lattice size is monotone under inclusion and every proper
/// lattice subpolygon lies in the drop of some vertex, so testing single
/// drops suffices.
pub fn is_minimal(p: &ConvexPolygon) -> Result<bool> {
    let vertices = p.lattice_vertices().ok_or(Error::NotLattice)?;
    if p.dim() == 0 {
        return Ok(true);
    }
    let h = ls_square(p);
    for v in vertices {
        if ls_square(&p.drop_vertex(v)?) >= h {
            return Ok(false);
        }
    }
    Ok(true)
}
