//! Planar primitives over exact rationals: points, integer directions and
//! convex polygons (including segments and single points).

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{self, ceil_i64, floor_i64, int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Self::new(int(x), int(y))
    }

    pub fn origin() -> Self {
        Self::int(0, 0)
    }

    pub fn is_lattice(&self) -> bool {
        rational::is_integer(&self.x) && rational::is_integer(&self.y)
    }

    /// Integer coordinates, if this is a lattice point.
    pub fn to_lattice(&self) -> Option<(i64, i64)> {
        self.is_lattice()
            .then(|| (floor_i64(&self.x), floor_i64(&self.y)))
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point::new(self.x - other.x, self.y - other.y)
    }

    pub fn add(&self, other: &Point) -> Point {
        Point::new(self.x + other.x, self.y + other.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}",
            rational::format_rational(&self.x),
            rational::format_rational(&self.y)
        )
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [
            rational::format_rational(&self.x),
            rational::format_rational(&self.y),
        ]
        .serialize(s)
    }
}

/// Cross product of `a - o` and `b - o`; positive for a left turn.
pub(crate) fn cross(o: &Point, a: &Point, b: &Point) -> Rational {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// An integer vector, used both as a linear functional (width direction) and
/// as a basis vector of the integer lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct IntVector {
    pub a: i64,
    pub b: i64,
}

impl IntVector {
    pub const E1: IntVector = IntVector { a: 1, b: 0 };
    pub const E2: IntVector = IntVector { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn is_primitive(&self) -> bool {
        rational::gcd(self.a, self.b) == 1
    }

    pub fn scale(self, k: i64) -> IntVector {
        IntVector::new(k * self.a, k * self.b)
    }

    pub fn det(self, o: IntVector) -> i64 {
        self.a * o.b - self.b * o.a
    }

    pub fn dot(&self, p: &Point) -> Rational {
        int(self.a) * p.x + int(self.b) * p.y
    }

    /// Representative of `{u, -u}` with `a > 0`, or `a == 0` and `b > 0`.
    pub fn sign_normalized(self) -> IntVector {
        if self.a < 0 || (self.a == 0 && self.b < 0) {
            -self
        } else {
            self
        }
    }
}

impl Add for IntVector {
    type Output = IntVector;

    fn add(self, o: IntVector) -> IntVector {
        IntVector::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for IntVector {
    type Output = IntVector;

    fn sub(self, o: IntVector) -> IntVector {
        IntVector::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for IntVector {
    type Output = IntVector;

    fn neg(self) -> IntVector {
        self.scale(-1)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// The two reference bodies a polygon can be fitted into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    /// The unit square `[0,1]^2`.
    Square,
    /// The standard simplex `conv{(0,0),(1,0),(0,1)}`.
    Simplex,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::Square => "square",
            Target::Simplex => "simplex",
        })
    }
}

/// A convex polygon with exact rational vertices.
///
/// Vertices are stored in strictly convex position, counterclockwise,
/// starting from the lexicographically smallest vertex. Segments keep their
/// two endpoints in lexicographic order and points keep their single vertex,
/// so two polygons are equal as sets iff they are equal as values.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    /// Convex hull of a non-empty point set.
    pub fn hull(points: &[Point]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::invalid("convex hull of an empty point set"));
        }
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();
        if pts.len() <= 2 {
            return Ok(Self { vertices: pts });
        }

        // Andrew's monotone chain; non-left turns are popped so collinear
        // points never survive as vertices.
        let mut lower: Vec<Point> = Vec::with_capacity(pts.len());
        for p in &pts {
            while lower.len() >= 2
                && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= Rational::zero()
            {
                lower.pop();
            }
            lower.push(*p);
        }
        let mut upper: Vec<Point> = Vec::with_capacity(pts.len());
        for p in pts.iter().rev() {
            while upper.len() >= 2
                && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= Rational::zero()
            {
                upper.pop();
            }
            upper.push(*p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        if lower.len() == 2 {
            // all input points collinear
            lower.sort();
        }
        Ok(Self { vertices: lower })
    }

    pub fn from_lattice_points(points: &[(i64, i64)]) -> Result<Self> {
        let pts: Vec<Point> = points.iter().map(|&(x, y)| Point::int(x, y)).collect();
        Self::hull(&pts)
    }

    /// Builds a polygon from vertices already in strictly convex cyclic order
    /// (either orientation). Only the rotation and orientation are fixed up.
    pub(crate) fn from_cyclic(mut vertices: Vec<Point>) -> Self {
        match vertices.len() {
            0 => unreachable!("polygon without vertices"),
            1 => {}
            2 => vertices.sort(),
            _ => {
                if cross(&vertices[0], &vertices[1], &vertices[2]) < Rational::zero() {
                    vertices.reverse();
                }
                let start = vertices
                    .iter()
                    .enumerate()
                    .min_by(|a, b| a.1.cmp(b.1))
                    .map(|(i, _)| i)
                    .unwrap_or(0);
                vertices.rotate_left(start);
            }
        }
        Self { vertices }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// 0 for a point, 1 for a segment, 2 otherwise.
    pub fn dim(&self) -> usize {
        self.vertices.len().min(3) - 1
    }

    pub fn is_lattice(&self) -> bool {
        self.vertices.iter().all(Point::is_lattice)
    }

    /// Integer vertex coordinates, if this is a lattice polygon.
    pub fn lattice_vertices(&self) -> Option<Vec<(i64, i64)>> {
        self.vertices.iter().map(Point::to_lattice).collect()
    }

    pub fn area(&self) -> Rational {
        if self.vertices.len() < 3 {
            return Rational::zero();
        }
        let n = self.vertices.len();
        let twice: Rational = (0..n)
            .map(|i| {
                let p = &self.vertices[i];
                let q = &self.vertices[(i + 1) % n];
                p.x * q.y - p.y * q.x
            })
            .sum();
        twice.abs() / int(2)
    }

    /// `(min, max)` of the functional `u` over the polygon.
    pub fn extent(&self, u: IntVector) -> (Rational, Rational) {
        let mut values = self.vertices.iter().map(|v| u.dot(v));
        let first = values.next().expect("polygon has a vertex");
        values.fold((first, first), |(lo, hi), v| (lo.min(v), hi.max(v)))
    }

    /// Maximum of `u` over the polygon.
    pub fn support(&self, u: IntVector) -> Rational {
        self.extent(u).1
    }

    /// Width in direction `u`; the zero vector gives 0.
    pub fn directional_width(&self, u: IntVector) -> Rational {
        let (lo, hi) = self.extent(u);
        hi - lo
    }

    /// Width in direction `u`, rejecting the zero vector.
    pub fn width(&self, u: IntVector) -> Result<Rational> {
        if u.is_zero() {
            return Err(Error::invalid("width along the zero vector"));
        }
        Ok(self.directional_width(u))
    }

    pub fn translate(&self, by: &Point) -> ConvexPolygon {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|v| v.add(by)).collect(),
        }
    }

    /// Image under the linear map with integer matrix `m` (any nonzero
    /// determinant), followed by the rational shift `shift`.
    pub fn transform(&self, m: [[i64; 2]; 2], shift: &Point) -> ConvexPolygon {
        let image = self
            .vertices
            .iter()
            .map(|v| {
                Point::new(
                    int(m[0][0]) * v.x + int(m[0][1]) * v.y + shift.x,
                    int(m[1][0]) * v.x + int(m[1][1]) * v.y + shift.y,
                )
            })
            .collect();
        ConvexPolygon::from_cyclic(image)
    }

    /// Coordinate-wise minimum over the vertices.
    pub fn min_corner(&self) -> Point {
        let (x, _) = self.extent(IntVector::E1);
        let (y, _) = self.extent(IntVector::E2);
        Point::new(x, y)
    }

    /// Translate so that the coordinate minima are both 0.
    pub fn normalized_to_origin(&self) -> ConvexPolygon {
        let c = self.min_corner();
        self.translate(&Point::new(-c.x, -c.y))
    }

    pub fn contains(&self, p: &Point) -> bool {
        let v = &self.vertices;
        match v.len() {
            1 => v[0] == *p,
            2 => {
                cross(&v[0], &v[1], p).is_zero()
                    && v[0].x.min(v[1].x) <= p.x
                    && p.x <= v[0].x.max(v[1].x)
                    && v[0].y.min(v[1].y) <= p.y
                    && p.y <= v[0].y.max(v[1].y)
            }
            n => (0..n).all(|i| cross(&v[i], &v[(i + 1) % n], p) >= Rational::zero()),
        }
    }

    /// Whether `other` is a subset of `self`.
    pub fn contains_polygon(&self, other: &ConvexPolygon) -> bool {
        other.vertices.iter().all(|v| self.contains(v))
    }

    /// All integer points of the polygon, sorted lexicographically.
    pub fn lattice_points(&self) -> Vec<(i64, i64)> {
        let v = &self.vertices;
        let mut out = Vec::new();
        match v.len() {
            1 => out.extend(v[0].to_lattice()),
            2 => {
                let (p, q) = (&v[0], &v[1]);
                let d = q.sub(p);
                if d.y.is_zero() {
                    if rational::is_integer(&p.y) {
                        let y = floor_i64(&p.y);
                        for x in ceil_i64(&p.x.min(q.x))..=floor_i64(&p.x.max(q.x)) {
                            out.push((x, y));
                        }
                    }
                } else {
                    for y in ceil_i64(&p.y.min(q.y))..=floor_i64(&p.y.max(q.y)) {
                        let x = p.x + d.x * (int(y) - p.y) / d.y;
                        if rational::is_integer(&x) {
                            out.push((floor_i64(&x), y));
                        }
                    }
                }
            }
            n => {
                let (ylo, yhi) = self.extent(IntVector::E2);
                for y in ceil_i64(&ylo)..=floor_i64(&yhi) {
                    if let Some((lo, hi)) = self.row_interval(int(y), n) {
                        for x in ceil_i64(&lo)..=floor_i64(&hi) {
                            out.push((x, y));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Exact intersection of the horizontal line at height `y` with a
    /// two-dimensional polygon, as an x-interval.
    fn row_interval(&self, y: Rational, n: usize) -> Option<(Rational, Rational)> {
        let (mut lo, mut hi) = self.extent(IntVector::E1);
        for i in 0..n {
            let p = &self.vertices[i];
            let q = &self.vertices[(i + 1) % n];
            let (dx, dy) = (q.x - p.x, q.y - p.y);
            // inside: dy * (x - p.x) <= dx * (y - p.y)
            if dy.is_zero() {
                if dx * (y - p.y) < Rational::zero() {
                    return None;
                }
            } else {
                let bound = p.x + dx * (y - p.y) / dy;
                if dy.is_positive() {
                    hi = hi.min(bound);
                } else {
                    lo = lo.max(bound);
                }
            }
        }
        (lo <= hi).then_some((lo, hi))
    }

    /// Convex hull of all lattice points of `self` except the vertex `v`.
    pub fn drop_vertex(&self, v: (i64, i64)) -> Result<ConvexPolygon> {
        if !self.is_lattice() {
            return Err(Error::NotLattice);
        }
        let vertex = Point::int(v.0, v.1);
        if !self.vertices.contains(&vertex) {
            return Err(Error::invalid(format!(
                "({}, {}) is not a vertex",
                v.0, v.1
            )));
        }
        let rest: Vec<(i64, i64)> = self
            .lattice_points()
            .into_iter()
            .filter(|&p| p != v)
            .collect();
        if rest.is_empty() {
            return Err(Error::invalid(
                "dropping the only lattice point leaves nothing",
            ));
        }
        ConvexPolygon::from_lattice_points(&rest)
    }

    /// Whether every vertex lies in `l * target`.
    pub fn contained_in_dilate(&self, l: &Rational, target: Target) -> Result<bool> {
        if l.is_negative() {
            return Err(Error::invalid("negative dilation factor"));
        }
        let zero = Rational::zero();
        Ok(self.vertices.iter().all(|v| match target {
            Target::Square => zero <= v.x && v.x <= *l && zero <= v.y && v.y <= *l,
            Target::Simplex => zero <= v.x && zero <= v.y && v.x + v.y <= *l,
        }))
    }
}

impl fmt::Display for ConvexPolygon {
    /// Vertices as `x,y;x,y;...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(
                f,
                "{},{}",
                rational::format_rational(&v.x),
                rational::format_rational(&v.y)
            )?;
        }
        Ok(())
    }
}

impl Serialize for ConvexPolygon {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.vertices.serialize(s)
    }
}
