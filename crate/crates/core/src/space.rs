//! Just enough projective 3-space to carry a plane figure through the apex
//! of a cone onto another plane.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::projective::{canonical_scale, PPoint};
use crate::scalar::Rat;

fn dot4(a: &[Rat; 4], b: &[Rat; 4]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// A point `(x : y : z : w)` of projective 3-space, canonical up to scale.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct P3Point {
    coords: [Rat; 4],
}

/// A plane `a·x + b·y + c·z + d·w = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct P3Plane {
    coords: [Rat; 4],
}

impl P3Point {
    pub fn new(c: [Rat; 4]) -> Result<Self> {
        canonical_scale(&c)
            .map(|coords| P3Point { coords })
            .ok_or(Error::ZeroVector)
    }

    pub fn affine(x: Rat, y: Rat, z: Rat) -> Self {
        P3Point::new([x, y, z, Rat::one()]).expect("w = 1")
    }

    pub fn coords(&self) -> &[Rat; 4] {
        &self.coords
    }

    pub fn lies_on(&self, plane: &P3Plane) -> bool {
        dot4(&self.coords, &plane.coords).is_zero()
    }
}

impl P3Plane {
    pub fn new(c: [Rat; 4]) -> Result<Self> {
        canonical_scale(&c)
            .map(|coords| P3Plane { coords })
            .ok_or(Error::ZeroVector)
    }

    pub fn coords(&self) -> &[Rat; 4] {
        &self.coords
    }
}

impl fmt::Debug for P3Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z, w] = &self.coords;
        write!(f, "({x}:{y}:{z}:{w})")
    }
}

impl fmt::Debug for P3Plane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.coords;
        write!(f, "[{a}:{b}:{c}:{d}]")
    }
}

/// Where the line `apex p` pierces `target`.
pub fn central_projection_3d(apex: &P3Point, target: &P3Plane, p: &P3Point) -> Result<P3Point> {
    let pa = dot4(&target.coords, &apex.coords);
    if pa.is_zero() {
        return Err(Error::Precondition(format!("apex {apex:?} lies on the target plane")));
    }
    if p == apex {
        return Err(Error::CoincidentPoints("projected point is the apex".into()));
    }
    let pp = dot4(&target.coords, &p.coords);
    // (π·p)·apex − (π·apex)·p lies on π and on the line apex p
    let c = std::array::from_fn(|i| &pp * &apex.coords[i] - &pa * &p.coords[i]);
    P3Point::new(c)
}

/// Affine coordinates on a plane of 3-space: the plane point `origin + x·u + y·v`
/// corresponds to the plane point `(x : y : 1)`.
#[derive(Clone, Debug)]
pub struct PlaneFrame {
    pub plane: P3Plane,
    origin: [Rat; 3],
    u: [Rat; 3],
    v: [Rat; 3],
}

impl PlaneFrame {
    pub fn new(origin: [Rat; 3], u: [Rat; 3], v: [Rat; 3]) -> Result<Self> {
        let n = crate::projective::cross3(&u, &v);
        if n.iter().all(Rat::is_zero) {
            return Err(Error::Degenerate("plane frame directions are parallel".into()));
        }
        let d = -(&n[0] * &origin[0] + &n[1] * &origin[1] + &n[2] * &origin[2]);
        let [a, b, c] = n;
        let plane = P3Plane::new([a, b, c, d])?;
        Ok(PlaneFrame { plane, origin, u, v })
    }

    /// The plane `z = 0` with its own `x, y`.
    pub fn ground() -> Self {
        let (z, o) = (Rat::zero, Rat::one);
        PlaneFrame::new([z(), z(), z()], [o(), z(), z()], [z(), o(), z()]).expect("independent")
    }

    pub fn embed(&self, p: &PPoint) -> P3Point {
        let [x, y, w] = p.coords();
        let c = [0, 1, 2].map(|i| x * &self.u[i] + y * &self.v[i] + w * &self.origin[i]);
        let [a, b, c] = c;
        P3Point::new([a, b, c, w.clone()]).expect("frame embedding is injective")
    }

    pub fn flatten(&self, p: &P3Point) -> Result<PPoint> {
        if !p.lies_on(&self.plane) {
            return Err(Error::NotOnLine(format!("{p:?} is not on the frame's plane")));
        }
        let [px, py, pz, w] = p.coords();
        let r = [px, py, pz].map(|c| c.clone());
        let r: [Rat; 3] = std::array::from_fn(|i| &r[i] - w * &self.origin[i]);
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let det = &self.u[i] * &self.v[j] - &self.u[j] * &self.v[i];
            if !det.is_zero() {
                let x = (&r[i] * &self.v[j] - &r[j] * &self.v[i]) / &det;
                let y = (&self.u[i] * &r[j] - &self.u[j] * &r[i]) / &det;
                return PPoint::new(x, y, w.clone());
            }
        }
        unreachable!("frame directions are independent")
    }
}
