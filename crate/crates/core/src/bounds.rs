//! Sharp lower bounds on the area of a plane convex polygon in terms of its
//! lattice width `w`, square lattice size `h` and simplex lattice size `l`:
//!
//! - `A >= 3/8 w h` for every convex body,
//! - `A >= w l / 4` for every convex body,
//! - `A >= l / 2` for lattice polygons,
//! - `A >= h / 2` for lattice polygons.
//!
//! Each bound is reported as an exact slack `A - bound`, together with the
//! extremal families the polygon belongs to.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{ConvexPolygon, Point};
use crate::lattice_size::invariants;
use crate::oracle::normal_form;
use crate::rational::{self, int, is_integer, Rational};

/// Polygons at which one of the area bounds is attained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum EqualityFamily {
    /// `conv{(0,0),(l,0),(0,1)}`, `l >= 1`.
    ThinTriangle { l: i64 },
    /// `[0,1]^2`.
    UnitSquare,
    /// `conv{(0,0),(1,2),(2,1)}`.
    T0,
    /// `conv{(0,0),(w,w/2),(w/2,w)}`.
    WidthTriangle {
        #[serde(serialize_with = "rational::serialize")]
        w: Rational,
    },
}

impl EqualityFamily {
    pub fn representative(&self) -> ConvexPolygon {
        let lattice =
            |pts: &[(i64, i64)]| ConvexPolygon::from_lattice_points(pts).expect("non-empty");
        match self {
            EqualityFamily::ThinTriangle { l } => lattice(&[(0, 0), (*l, 0), (0, 1)]),
            EqualityFamily::UnitSquare => lattice(&[(0, 0), (1, 0), (1, 1), (0, 1)]),
            EqualityFamily::T0 => lattice(&[(0, 0), (1, 2), (2, 1)]),
            EqualityFamily::WidthTriangle { w } => width_triangle(*w),
        }
    }
}

pub fn width_triangle(w: Rational) -> ConvexPolygon {
    let half = w / int(2);
    ConvexPolygon::hull(&[Point::origin(), Point::new(w, half), Point::new(half, w)])
        .expect("non-empty")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    #[serde(serialize_with = "rational::serialize")]
    pub area: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub width: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub ls_square: Rational,
    #[serde(serialize_with = "rational::serialize")]
    pub ls_simplex: Rational,
    /// `A - 3/8 w h`
    #[serde(serialize_with = "rational::serialize")]
    pub slack_wh: Rational,
    /// `A - w l / 4`
    #[serde(serialize_with = "rational::serialize")]
    pub slack_wl: Rational,
    /// `A - l / 2`; lattice polygons only.
    #[serde(serialize_with = "rational::serialize_opt")]
    pub slack_simplex: Option<Rational>,
    /// `A - h / 2`; lattice polygons only.
    #[serde(serialize_with = "rational::serialize_opt")]
    pub slack_square: Option<Rational>,
    pub equality_families: Vec<EqualityFamily>,
}

impl BoundsReport {
    fn slacks(&self) -> impl Iterator<Item = &Rational> {
        [&self.slack_wh, &self.slack_wl]
            .into_iter()
            .chain(self.slack_simplex.iter())
            .chain(self.slack_square.iter())
    }

    pub fn all_slacks_nonnegative(&self) -> bool {
        self.slacks().all(|s| *s >= int(0))
    }

    /// Failures of the bounds or of their equality characterizations; empty
    /// for every valid polygon.
    pub fn violations(&self) -> Vec<String> {
        let zero = int(0);
        let mut out = Vec::new();
        for (name, s) in [
            ("wh", Some(self.slack_wh)),
            ("wl", Some(self.slack_wl)),
            ("simplex", self.slack_simplex),
            ("square", self.slack_square),
        ] {
            if let Some(s) = s {
                if s < zero {
                    out.push(format!(
                        "negative slack_{name} = {}",
                        rational::format_rational(&s)
                    ));
                }
            }
        }
        let has = |pred: &dyn Fn(&EqualityFamily) -> bool| self.equality_families.iter().any(pred);
        let width_family = has(&|f| matches!(f, EqualityFamily::WidthTriangle { .. }));
        if (self.slack_wh == zero) != width_family {
            out.push("slack_wh equality does not match the width-triangle family".into());
        }
        if (self.slack_wl == zero) != width_family {
            out.push("slack_wl equality does not match the width-triangle family".into());
        }
        if let Some(s) = self.slack_simplex {
            let family = has(&|f| {
                matches!(
                    f,
                    EqualityFamily::ThinTriangle { .. }
                        | EqualityFamily::UnitSquare
                        | EqualityFamily::T0
                )
            });
            if (s == zero) != family {
                out.push("slack_simplex equality does not match families (a), (b), (c)".into());
            }
        }
        if let Some(s) = self.slack_square {
            let h = self.ls_square;
            let family = has(&|f| matches!(f, EqualityFamily::ThinTriangle { l } if int(*l) == h));
            if (s == zero) != family {
                out.push("slack_square equality does not match conv{(0,0),(h,0),(0,1)}".into());
            }
        }
        out
    }
}

/// Evaluates the four bounds on a two-dimensional polygon.
pub fn check_bounds(p: &ConvexPolygon) -> Result<BoundsReport> {
    if p.dim() < 2 {
        return Err(Error::Degenerate(
            "area bounds need a two-dimensional polygon".into(),
        ));
    }
    let r = invariants(p);
    let lattice = p.is_lattice();
    Ok(BoundsReport {
        area: r.area,
        width: r.width,
        ls_square: r.ls_square,
        ls_simplex: r.ls_simplex,
        slack_wh: r.area - Rational::new(3, 8) * r.width * r.ls_square,
        slack_wl: r.area - r.width * r.ls_simplex / int(4),
        slack_simplex: lattice.then(|| r.area - r.ls_simplex / int(2)),
        slack_square: lattice.then(|| r.area - r.ls_square / int(2)),
        equality_families: families(p, r.width),
    })
}

/// Every equality family `p` is lattice-equivalent to (for lattice
/// polygons), or equivalent to under unimodular maps and real translations
/// (for the width triangle with non-integer vertices).
fn families(p: &ConvexPolygon, width: Rational) -> Vec<EqualityFamily> {
    if p.dim() < 2 {
        return Vec::new();
    }
    let area = p.area();
    let form = normal_form(p);
    let matches = |f: &EqualityFamily| normal_form(&f.representative()) == form;
    let mut candidates = Vec::new();
    if p.is_lattice() {
        let twice = area * int(2);
        if is_integer(&twice) {
            candidates.push(EqualityFamily::ThinTriangle {
                l: twice.to_integer() as i64,
            });
        }
        if area == int(1) {
            candidates.push(EqualityFamily::UnitSquare);
        }
        if area == Rational::new(3, 2) {
            candidates.push(EqualityFamily::T0);
        }
    }
    if area == Rational::new(3, 8) * width * width {
        candidates.push(EqualityFamily::WidthTriangle { w: width });
    }
    candidates.into_iter().filter(matches).collect()
}

/// The first extremal family a lattice polygon is equivalent to, if any.
pub fn extremal_family(p: &ConvexPolygon) -> Result<Option<EqualityFamily>> {
    if !p.is_lattice() {
        return Err(Error::NotLattice);
    }
    let width = crate::lattice_size::lattice_width(p);
    Ok(families(p, width).into_iter().next())
}
