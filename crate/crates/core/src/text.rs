//! Plain-text polygon format.
//!
//! One vertex per line as `x y`, each coordinate an integer or a `p/q`
//! fraction. Everything after `#` is a comment and blank lines are skipped.
//! Vertices may come in any order and need not be in convex position: the
//! reader takes the convex hull.

use crate::error::{Error, Result};
use crate::geometry::{ConvexPolygon, Point};
use crate::rational::parse_rational;

pub fn parse_polygon(input: &str) -> Result<ConvexPolygon> {
    let mut points = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [x, y] = fields[..] else {
            return Err(Error::Parse {
                line: idx + 1,
                message: format!("expected two coordinates, found {}", fields.len()),
            });
        };
        let parse = |s: &str| {
            parse_rational(s).map_err(|message| Error::Parse {
                line: idx + 1,
                message,
            })
        };
        points.push(Point::new(parse(x)?, parse(y)?));
    }
    if points.is_empty() {
        return Err(Error::Parse {
            line: 0,
            message: "no vertices".into(),
        });
    }
    ConvexPolygon::hull(&points)
}

pub fn format_polygon(p: &ConvexPolygon) -> String {
    let mut out = String::new();
    for v in p.vertices() {
        out.push_str(&v.to_string());
        out.push('\n');
    }
    out
}
