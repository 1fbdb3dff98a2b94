//! Enumeration of convex lattice polygons with vertices in `[0, n]^2`.
//!
//! Each polygon is generated exactly once from its vertex set by a DFS that
//! fixes the lexicographically smallest vertex and extends the chain in
//! angular order, keeping every turn strictly left.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{ConvexPolygon, Point};
use crate::oracle::canonical_form;

/// Largest grid accepted unless a caller raises the limit explicitly.
pub const DEFAULT_GRID_LIMIT: i64 = 5;

type Lp = (i64, i64);

fn cross(o: Lp, a: Lp, b: Lp) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

#[derive(Clone, Debug)]
pub struct ConvexEnumerator {
    n: i64,
    include_degenerate: bool,
    points: Vec<Lp>,
}

/// One independent piece of the search: a single point, a segment, or every
/// polygon whose two lowest vertices (in CCW order from the lex-min vertex)
/// are fixed.
#[derive(Clone, Copy, Debug)]
enum Unit {
    Point(usize),
    Segment(usize, usize),
    Subtree(usize, usize),
}

impl ConvexEnumerator {
    pub fn new(n: i64, include_degenerate: bool) -> Result<Self> {
        Self::with_limit(n, include_degenerate, DEFAULT_GRID_LIMIT)
    }

    pub fn with_limit(n: i64, include_degenerate: bool, limit: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::invalid(format!(
                "grid size must be at least 1, got {n}"
            )));
        }
        if n > limit {
            return Err(Error::ResourceLimit(format!(
                "grid size {n} exceeds the enumeration limit {limit}"
            )));
        }
        let points = (0..=n).flat_map(|x| (0..=n).map(move |y| (x, y))).collect();
        Ok(Self {
            n,
            include_degenerate,
            points,
        })
    }

    pub fn grid_size(&self) -> i64 {
        self.n
    }

    fn units(&self) -> Vec<Unit> {
        let k = self.points.len();
        let mut units = Vec::new();
        if self.include_degenerate {
            units.extend((0..k).map(Unit::Point));
            units.extend((0..k).flat_map(|i| (i + 1..k).map(move |j| Unit::Segment(i, j))));
        }
        units.extend((0..k).flat_map(|i| (i + 1..k).map(move |j| Unit::Subtree(i, j))));
        units
    }

    fn run_unit(&self, unit: Unit, emit: &mut dyn FnMut(ConvexPolygon)) {
        match unit {
            Unit::Point(i) => emit(self.polygon(&[self.points[i]])),
            Unit::Segment(i, j) => emit(self.polygon(&[self.points[i], self.points[j]])),
            Unit::Subtree(i, j) => {
                let origin = self.points[i];
                // points lexicographically after the origin lie in a half-plane
                // around it, where the cross product orders them by angle
                let mut rest: Vec<Lp> = self.points[i + 1..].to_vec();
                rest.sort_by(|&a, &b| 0.cmp(&cross(origin, a, b)));
                let mut chain = vec![origin, self.points[j]];
                self.extend(&rest, &mut chain, emit);
            }
        }
    }

    fn extend(&self, rest: &[Lp], chain: &mut Vec<Lp>, emit: &mut dyn FnMut(ConvexPolygon)) {
        let origin = chain[0];
        let last = chain[chain.len() - 1];
        let prev = chain[chain.len() - 2];
        if chain.len() >= 3 && cross(prev, last, origin) > 0 {
            emit(self.polygon(chain));
        }
        for &q in rest {
            if cross(origin, last, q) > 0 && cross(prev, last, q) > 0 {
                chain.push(q);
                self.extend(rest, chain, emit);
                chain.pop();
            }
        }
    }

    fn polygon(&self, chain: &[Lp]) -> ConvexPolygon {
        ConvexPolygon::from_cyclic(chain.iter().map(|&(x, y)| Point::int(x, y)).collect())
    }

    pub fn for_each(&self, mut f: impl FnMut(ConvexPolygon)) {
        for unit in self.units() {
            self.run_unit(unit, &mut f);
        }
    }

    /// Parallel fold over the stream. Emission order is unspecified.
    pub fn par_fold<T, I, F, R>(&self, identity: I, fold: F, reduce: R) -> T
    where
        T: Send,
        I: Fn() -> T + Sync + Send,
        F: Fn(&mut T, ConvexPolygon) + Sync + Send,
        R: Fn(T, T) -> T + Sync + Send,
    {
        self.units()
            .into_par_iter()
            .map(|unit| {
                let mut acc = identity();
                self.run_unit(unit, &mut |p| fold(&mut acc, p));
                acc
            })
            .reduce(&identity, &reduce)
    }

    pub fn par_for_each(&self, f: impl Fn(ConvexPolygon) + Sync + Send) {
        self.par_fold(|| (), |_, p| f(p), |_, _| ());
    }

    pub fn collect_vec(&self) -> Vec<ConvexPolygon> {
        let mut out = Vec::new();
        self.for_each(|p| out.push(p));
        out
    }

    pub fn count(&self) -> usize {
        self.par_fold(|| 0usize, |acc, _| *acc += 1, |a, b| a + b)
    }
}

/// All convex lattice polygons with vertices in `[0, n]^2`.
pub fn enumerate_convex(n: i64, include_degenerate: bool) -> Result<Vec<ConvexPolygon>> {
    Ok(ConvexEnumerator::new(n, include_degenerate)?.collect_vec())
}

/// One canonical representative per lattice-equivalence class of polygons
/// with square lattice size at most `n`, sorted.
pub fn enumerate_classes(n: i64, include_degenerate: bool) -> Result<Vec<ConvexPolygon>> {
    let classes = ConvexEnumerator::new(n, include_degenerate)?.par_fold(
        BTreeSet::new,
        |set, p| {
            set.insert(canonical_form(&p).expect("grid polygons are lattice polygons"));
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    );
    Ok(classes.into_iter().collect())
}
