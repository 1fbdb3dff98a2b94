//! Minimal lattice polygons of fixed square lattice size `h`: those with no
//! proper lattice subpolygon of the same size.
//!
//! Up to lattice equivalence they are the segment `[(0,0),(h,0)]`, the
//! triangles `conv{(0,0),(a,h),(h,b)}` with `a + b >= h`, and the
//! quadrilaterals `conv{(a,0),(0,b),(h,h-c),(h-d,h)}` with
//! `min(a,b) + min(c,d) > h`, all parameters in `[1, h-1]`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::enumeration::{ConvexEnumerator, DEFAULT_GRID_LIMIT};
use crate::error::{Error, Result};
use crate::geometry::ConvexPolygon;
use crate::lattice_size::ls_square;
use crate::oracle::{canonical_form, is_minimal};
use crate::rational::int;
use crate::unimodular::UnimodularMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MinimalFamily {
    Segment {
        h: i64,
    },
    Triangle {
        h: i64,
        a: i64,
        b: i64,
    },
    Quad {
        h: i64,
        a: i64,
        b: i64,
        c: i64,
        d: i64,
    },
}

fn check_range(h: i64, params: &[i64]) -> Result<()> {
    if h < 1 {
        return Err(Error::invalid(format!("h must be positive, got {h}")));
    }
    if let Some(p) = params.iter().find(|&&p| p < 1 || p > h - 1) {
        return Err(Error::invalid(format!(
            "parameter {p} outside [1, {}]",
            h - 1
        )));
    }
    Ok(())
}

impl MinimalFamily {
    pub fn h(&self) -> i64 {
        match *self {
            MinimalFamily::Segment { h }
            | MinimalFamily::Triangle { h, .. }
            | MinimalFamily::Quad { h, .. } => h,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            MinimalFamily::Segment { h } => check_range(h, &[]),
            MinimalFamily::Triangle { h, a, b } => {
                if !triangle_minimal(h, a, b)? {
                    return Err(Error::invalid(format!(
                        "triangle needs a + b >= h, got {a} + {b} < {h}"
                    )));
                }
                Ok(())
            }
            MinimalFamily::Quad { h, a, b, c, d } => {
                if quad_condition(h, a, b, c, d)? != Some(QuadCondition::MinSum) {
                    return Err(Error::invalid(format!(
                        "quadrilateral needs min(a,b) + min(c,d) > h, got ({a},{b},{c},{d}) for h = {h}"
                    )));
                }
                Ok(())
            }
        }
    }

    pub fn realize(&self) -> Result<ConvexPolygon> {
        self.validate()?;
        Ok(self.realize_unchecked())
    }

    fn realize_unchecked(&self) -> ConvexPolygon {
        let pts = match *self {
            MinimalFamily::Segment { h } => vec![(0, 0), (h, 0)],
            MinimalFamily::Triangle { h, a, b } => vec![(0, 0), (a, h), (h, b)],
            MinimalFamily::Quad { h, a, b, c, d } => vec![(a, 0), (0, b), (h, h - c), (h - d, h)],
        };
        ConvexPolygon::from_lattice_points(&pts).expect("non-empty")
    }
}

impl fmt::Display for MinimalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            MinimalFamily::Segment { h } => write!(f, "segment h={h}"),
            MinimalFamily::Triangle { h, a, b } => write!(f, "triangle h={h} a={a} b={b}"),
            MinimalFamily::Quad { h, a, b, c, d } => {
                write!(f, "quad h={h} a={a} b={b} c={c} d={d}")
            }
        }
    }
}

/// Whether `conv{(0,0),(a,h),(h,b)}` is minimal.
pub fn triangle_minimal(h: i64, a: i64, b: i64) -> Result<bool> {
    check_range(h, &[a, b])?;
    Ok(a + b >= h)
}

/// Which of the two minimality inequalities a quadrilateral satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum QuadCondition {
    /// `min(a,b) + min(c,d) > h`
    MinSum,
    /// `max(a,c) + max(b,d) < h`
    MaxSum,
}

pub fn quad_condition(h: i64, a: i64, b: i64, c: i64, d: i64) -> Result<Option<QuadCondition>> {
    check_range(h, &[a, b, c, d])?;
    Ok(if a.min(b) + c.min(d) > h {
        Some(QuadCondition::MinSum)
    } else if a.max(c) + b.max(d) < h {
        Some(QuadCondition::MaxSum)
    } else {
        None
    })
}

/// Whether `conv{(a,0),(0,b),(h,h-c),(h-d,h)}` is minimal.
pub fn quad_minimal(h: i64, a: i64, b: i64, c: i64, d: i64) -> Result<bool> {
    Ok(quad_condition(h, a, b, c, d)?.is_some())
}

/// The reflection `(x, y) -> (h - x, y)`, which carries the quadrilateral with
/// parameters `(a,b,c,d)` to the one with parameters
/// `reflected_quad_params(h, a, b, c, d)` and swaps the two inequalities.
pub fn quad_reflection(h: i64) -> UnimodularMap {
    UnimodularMap::new([[-1, 0], [0, 1]], [h, 0]).expect("reflection is unimodular")
}

pub fn reflected_quad_params(h: i64, a: i64, b: i64, c: i64, d: i64) -> (i64, i64, i64, i64) {
    (h - a, h - c, h - b, h - d)
}

/// A lattice-equivalence class of minimal polygons: its canonical form and
/// the first family member that realizes it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalClass {
    pub family: MinimalFamily,
    pub polygon: ConvexPolygon,
}

/// All families with the given `h`: the segment, every admissible triangle
/// and every quadrilateral satisfying the first inequality.
pub fn minimal_families(h: i64) -> Result<Vec<MinimalFamily>> {
    check_range(h, &[])?;
    let mut out = vec![MinimalFamily::Segment { h }];
    let range = 1..h;
    for a in range.clone() {
        for b in range.clone() {
            if a + b >= h {
                out.push(MinimalFamily::Triangle { h, a, b });
            }
        }
    }
    for a in range.clone() {
        for b in range.clone() {
            for c in range.clone() {
                for d in range.clone() {
                    if a.min(b) + c.min(d) > h {
                        out.push(MinimalFamily::Quad { h, a, b, c, d });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Minimal classes for `h`, deduplicated by canonical form and sorted by it.
pub fn generate_minimal(h: i64) -> Result<Vec<MinimalClass>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for family in minimal_families(h)? {
        let polygon = canonical_form(&family.realize_unchecked())?;
        if seen.insert(polygon.clone()) {
            out.push(MinimalClass { family, polygon });
        }
    }
    out.sort_by(|x, y| x.polygon.cmp(&y.polygon));
    Ok(out)
}

/// Canonical forms of all minimal polygons with square lattice size `h`,
/// found by exhaustive search over `[0, h]^2`.
pub fn brute_force_minimal_classes(h: i64) -> Result<BTreeSet<ConvexPolygon>> {
    check_range(h, &[])?;
    let target = int(h);
    let enumerator = ConvexEnumerator::new(h, true)?;
    Ok(enumerator.par_fold(
        BTreeSet::new,
        |set, p| {
            if ls_square(&p) == target && is_minimal(&p).expect("lattice polygon") {
                set.insert(canonical_form(&p).expect("lattice polygon"));
            }
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub h: i64,
    pub generated: usize,
    pub brute_force: usize,
    /// Minimal classes found by search but not produced by the generator.
    pub missing_from_generator: Vec<ConvexPolygon>,
    /// Generated classes the search does not confirm as minimal of size `h`.
    pub not_found_by_search: Vec<ConvexPolygon>,
}

impl ClassificationReport {
    pub fn matches(&self) -> bool {
        self.missing_from_generator.is_empty() && self.not_found_by_search.is_empty()
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.matches() {
            write!(f, "h={}: {} classes, match", self.h, self.generated)
        } else {
            write!(
                f,
                "h={}: MISMATCH, generated {} classes, search found {}; {} missing from generator, {} not confirmed",
                self.h,
                self.generated,
                self.brute_force,
                self.missing_from_generator.len(),
                self.not_found_by_search.len()
            )
        }
    }
}

/// Compares the generated classes with the exhaustive search, both ways.
pub fn verify_classification(h: i64) -> Result<ClassificationReport> {
    if h > DEFAULT_GRID_LIMIT {
        return Err(Error::ResourceLimit(format!(
            "exhaustive classification is limited to h <= {DEFAULT_GRID_LIMIT}"
        )));
    }
    let generated: BTreeSet<ConvexPolygon> = generate_minimal(h)?
        .into_iter()
        .map(|c| c.polygon)
        .collect();
    let searched = brute_force_minimal_classes(h)?;
    Ok(ClassificationReport {
        h,
        generated: generated.len(),
        brute_force: searched.len(),
        missing_from_generator: searched.difference(&generated).cloned().collect(),
        not_found_by_search: generated.difference(&searched).cloned().collect(),
    })
}
