//! Lattice width and lattice sizes with respect to the unit square and the
//! standard simplex, with explicit containment certificates.
//!
//! Let `(u1, u2)` be a reduced basis for `P` and `M` the matrix with rows
//! `u1, u2`. Then `width(P, u1)` is the lattice width, `width(P, u2)` is the
//! lattice size for the square, and the lattice size for the simplex is the
//! smallest of the four functionals `l1..l4` evaluated on `M P`; each
//! functional corresponds to one sign pattern `diag(±1, ±1)`.

use num_traits::Zero;
use serde::Serialize;

use crate::geometry::{ConvexPolygon, IntVector, Point, Target};
use crate::rational::{self, floor_i64, Rational};
use crate::reduction::{gauss_reduce, LatticeBasis};
use crate::unimodular::UnimodularMap;

/// Witness that `map(P) + offset` lies in `dilate * target`.
///
/// `offset` is the fractional part of the translation, so it is zero for
/// every lattice polygon; for polygons with non-integer vertices the lattice
/// sizes are invariant under all real translations and the offset carries
/// what the integer translation cannot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContainmentCertificate {
    pub map: UnimodularMap,
    pub offset: Point,
    pub target: Target,
    #[serde(serialize_with = "rational::serialize")]
    pub dilate: Rational,
}

impl ContainmentCertificate {
    fn new(m: [[i64; 2]; 2], translation: Point, target: Target, dilate: Rational) -> Self {
        let whole = [floor_i64(&translation.x), floor_i64(&translation.y)];
        let offset = translation.sub(&Point::int(whole[0], whole[1]));
        let map = UnimodularMap::new(m, whole).expect("certificate matrix is unimodular");
        Self {
            map,
            offset,
            target,
            dilate,
        }
    }

    pub fn image(&self, p: &ConvexPolygon) -> ConvexPolygon {
        self.map.apply(p).translate(&self.offset)
    }

    /// Whether the certificate really places `p` inside its dilate.
    pub fn verify(&self, p: &ConvexPolygon) -> bool {
        self.image(p)
            .contained_in_dilate(&self.dilate, self.target)
            .unwrap_or(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantsReport {
    #[serde(serialize_with = "rational::serialize")]
    pub width: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub ls_square: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub ls_simplex: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub area: Rational,
    #[serde(rename = "reduced_basis")]
    pub basis: LatticeBasis,
    pub cert_square: ContainmentCertificate,
    pub cert_simplex: ContainmentCertificate,
}

/// The four functionals `l1..l4` whose minimum is the simplex lattice size
/// over sign-flip maps.
///
/// `l1 = max(x+y) - min x - min y`, `l2 = max x + max y - min(x+y)`,
/// `l3 = max y - min x + max(x-y)`, `l4 = max x - min y + max(y-x)`.
pub fn l_values(p: &ConvexPolygon) -> [Rational; 4] {
    let (min_x, max_x) = p.extent(IntVector::new(1, 0));
    let (min_y, max_y) = p.extent(IntVector::new(0, 1));
    let (min_s, max_s) = p.extent(IntVector::new(1, 1));
    let (min_d, max_d) = p.extent(IntVector::new(1, -1));
    [
        max_s - min_x - min_y,
        max_x + max_y - min_s,
        max_y - min_x + max_d,
        max_x - min_y - min_d,
    ]
}

/// Sign pattern realizing `l_i`: after `diag(s)` the polygon, shifted to have
/// coordinate minima 0, fits in `l_i` times the simplex.
const SIGN_FLIPS: [[i64; 2]; 4] = [[1, 1], [-1, -1], [1, -1], [-1, 1]];

/// Lattice width, both lattice sizes, the area and certificates.
///
/// Works for every dimension; a single point gets all-zero invariants.
pub fn invariants(p: &ConvexPolygon) -> InvariantsReport {
    let basis = gauss_reduce(p);
    let (width, ls_square) = basis.widths(p);
    let m = [[basis.u1.a, basis.u1.b], [basis.u2.a, basis.u2.b]];
    let reduced = p.transform(m, &Point::origin());

    let corner = reduced.min_corner();
    let cert_square = ContainmentCertificate::new(
        m,
        Point::new(-corner.x, -corner.y),
        Target::Square,
        ls_square,
    );

    let ls = l_values(&reduced);
    let best = (0..4).min_by_key(|&i| ls[i]).expect("four values");
    let [sx, sy] = SIGN_FLIPS[best];
    let flipped_m = [[sx * m[0][0], sx * m[0][1]], [sy * m[1][0], sy * m[1][1]]];
    let flipped_corner = p.transform(flipped_m, &Point::origin()).min_corner();
    let cert_simplex = ContainmentCertificate::new(
        flipped_m,
        Point::new(-flipped_corner.x, -flipped_corner.y),
        Target::Simplex,
        ls[best],
    );

    InvariantsReport {
        width,
        ls_square,
        ls_simplex: ls[best],
        area: p.area(),
        basis,
        cert_square,
        cert_simplex,
    }
}

pub fn lattice_width(p: &ConvexPolygon) -> Rational {
    let b = gauss_reduce(p);
    p.directional_width(b.u1)
}

pub fn ls_square(p: &ConvexPolygon) -> Rational {
    let b = gauss_reduce(p);
    p.directional_width(b.u2)
}

pub fn ls_simplex(p: &ConvexPolygon) -> Rational {
    invariants(p).ls_simplex
}

pub fn lattice_size(p: &ConvexPolygon, target: Target) -> Rational {
    match target {
        Target::Square => ls_square(p),
        Target::Simplex => ls_simplex(p),
    }
}

/// When both axis widths equal some `h`, the square lattice size is `h` and
/// the lattice width is `min(h, w(1,1), w(1,-1))`; returns that pair.
pub fn check_touch(p: &ConvexPolygon) -> Option<(Rational, Rational)> {
    let h = p.directional_width(IntVector::E1);
    if h != p.directional_width(IntVector::E2) {
        return None;
    }
    let w = h
        .min(p.directional_width(IntVector::new(1, 1)))
        .min(p.directional_width(IntVector::new(1, -1)));
    Some((h, w))
}

/// `w <= ls_square <= ls_simplex <= 2 ls_square`.
pub fn satisfies_size_chain(r: &InvariantsReport) -> bool {
    r.width >= Rational::zero()
        && r.width <= r.ls_square
        && r.ls_square <= r.ls_simplex
        && r.ls_simplex <= r.ls_square * Rational::from_integer(2)
}
