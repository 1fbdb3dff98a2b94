//! Affine unimodular transformations `x -> M x + t` with `det M = ±1` and
//! integer `t`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{ConvexPolygon, IntVector, Point};
use crate::rational::int;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct UnimodularMap {
    #[serde(rename = "matrix")]
    m: [[i64; 2]; 2],
    #[serde(rename = "translation")]
    t: [i64; 2],
}

impl UnimodularMap {
    pub fn new(m: [[i64; 2]; 2], t: [i64; 2]) -> Result<Self> {
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if det.abs() != 1 {
            return Err(Error::invalid(format!(
                "matrix determinant is {det}, not ±1"
            )));
        }
        Ok(Self { m, t })
    }

    pub fn identity() -> Self {
        Self {
            m: [[1, 0], [0, 1]],
            t: [0, 0],
        }
    }

    pub fn linear(m: [[i64; 2]; 2]) -> Result<Self> {
        Self::new(m, [0, 0])
    }

    /// The map whose matrix has rows `u1` and `u2`.
    pub fn from_rows(u1: IntVector, u2: IntVector, t: [i64; 2]) -> Result<Self> {
        Self::new([[u1.a, u1.b], [u2.a, u2.b]], t)
    }

    pub fn translation(t: [i64; 2]) -> Self {
        Self {
            m: [[1, 0], [0, 1]],
            t,
        }
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        self.m
    }

    pub fn offset(&self) -> [i64; 2] {
        self.t
    }

    pub fn det(&self) -> i64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn rows(&self) -> (IntVector, IntVector) {
        (
            IntVector::new(self.m[0][0], self.m[0][1]),
            IntVector::new(self.m[1][0], self.m[1][1]),
        )
    }

    /// `Mᵀ u`: the direction whose width on `P` equals the width of `u` on
    /// the image of `P`.
    pub fn pullback(&self, u: IntVector) -> IntVector {
        IntVector::new(
            self.m[0][0] * u.a + self.m[1][0] * u.b,
            self.m[0][1] * u.a + self.m[1][1] * u.b,
        )
    }

    pub fn apply_point(&self, p: &Point) -> Point {
        let m = &self.m;
        Point::new(
            int(m[0][0]) * p.x + int(m[0][1]) * p.y + int(self.t[0]),
            int(m[1][0]) * p.x + int(m[1][1]) * p.y + int(self.t[1]),
        )
    }

    pub fn apply(&self, p: &ConvexPolygon) -> ConvexPolygon {
        p.transform(self.m, &Point::int(self.t[0], self.t[1]))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &UnimodularMap) -> UnimodularMap {
        let (a, b) = (&self.m, &other.m);
        let m = [
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ];
        let t = [
            a[0][0] * other.t[0] + a[0][1] * other.t[1] + self.t[0],
            a[1][0] * other.t[0] + a[1][1] * other.t[1] + self.t[1],
        ];
        UnimodularMap { m, t }
    }

    pub fn inverse(&self) -> UnimodularMap {
        let d = self.det();
        let m = &self.m;
        // inverse of a ±1-determinant matrix is d * adj(M)
        let inv = [[d * m[1][1], -d * m[0][1]], [-d * m[1][0], d * m[0][0]]];
        let t = [
            -(inv[0][0] * self.t[0] + inv[0][1] * self.t[1]),
            -(inv[1][0] * self.t[0] + inv[1][1] * self.t[1]),
        ];
        UnimodularMap { m: inv, t }
    }
}

impl fmt::Display for UnimodularMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.m;
        write!(
            f,
            "[[{}, {}], [{}, {}]] + ({}, {})",
            m[0][0], m[0][1], m[1][0], m[1][1], self.t[0], self.t[1]
        )
    }
}
