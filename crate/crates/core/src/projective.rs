//! The projective plane over the rationals: homogeneous points and lines,
//! affine charts on a line, cross-ratio, and homographies between lines.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{QuadExt, Rat};

pub(crate) fn cross3(a: &[Rat; 3], b: &[Rat; 3]) -> [Rat; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub(crate) fn dot3(a: &[Rat; 3], b: &[Rat; 3]) -> Rat {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

pub(crate) fn det3(a: &[Rat; 3], b: &[Rat; 3], c: &[Rat; 3]) -> Rat {
    dot3(a, &cross3(b, c))
}

/// Scales a nonzero vector to a primitive integer vector whose first
/// nonzero entry is positive. Returns `None` for the zero vector.
pub(crate) fn canonical_scale<const N: usize>(v: &[Rat; N]) -> Option<[Rat; N]> {
    let first = v.iter().find(|x| !x.is_zero())?;
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if first.is_negative() {
        g = -g;
    }
    Some(std::array::from_fn(|i| Rat::from_integer(&ints[i] / &g)))
}

macro_rules! homogeneous_triple {
    ($name:ident, $what:literal) => {
        impl $name {
            pub fn new(x: Rat, y: Rat, z: Rat) -> Result<Self> {
                Self::from_coords([x, y, z])
            }

            pub fn from_coords(c: [Rat; 3]) -> Result<Self> {
                canonical_scale(&c)
                    .map(|coords| $name { coords })
                    .ok_or(Error::ZeroVector)
            }

            pub fn coords(&self) -> &[Rat; 3] {
                &self.coords
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let [x, y, z] = &self.coords;
                let short = |r: &Rat| {
                    if r.is_integer() {
                        r.numer().to_string()
                    } else {
                        r.to_string()
                    }
                };
                write!(f, "({}:{}:{})", short(x), short(y), short(z))
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}{}", $what, self)
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                self.coords.serialize(s)
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let c = <[Rat; 3]>::deserialize(d)?;
                $name::from_coords(c).map_err(serde::de::Error::custom)
            }
        }
    };
}

/// A point of the projective plane, stored in canonical form so that
/// projective equality is tuple equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PPoint {
    coords: [Rat; 3],
}

homogeneous_triple!(PPoint, "P");

/// A line `u·x + v·y + w·z = 0`, canonical like [`PPoint`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PLine {
    coords: [Rat; 3],
}

homogeneous_triple!(PLine, "L");

impl PPoint {
    pub fn affine(x: Rat, y: Rat) -> Self {
        PPoint::new(x, y, Rat::one()).expect("z = 1")
    }

    pub fn xy(x: i64, y: i64) -> Self {
        PPoint::affine(Rat::int(x), Rat::int(y))
    }

    /// The point at infinity in direction `(dx, dy)`.
    pub fn at_infinity(dx: Rat, dy: Rat) -> Result<Self> {
        PPoint::new(dx, dy, Rat::zero())
    }

    pub fn is_finite(&self) -> bool {
        !self.coords[2].is_zero()
    }

    pub fn to_affine(&self) -> Option<(Rat, Rat)> {
        let z = &self.coords[2];
        if z.is_zero() {
            return None;
        }
        Some((&self.coords[0] / z, &self.coords[1] / z))
    }

    pub(crate) fn affine_or_err(&self, what: &str) -> Result<(Rat, Rat)> {
        self.to_affine()
            .ok_or_else(|| Error::PointAtInfinity(format!("{what} = {self}")))
    }

    pub fn lies_on(&self, l: &PLine) -> bool {
        dot3(&self.coords, &l.coords).is_zero()
    }

    /// The affine midpoint of two finite points.
    pub fn midpoint(&self, other: &PPoint) -> Result<PPoint> {
        let (ax, ay) = self.affine_or_err("midpoint input")?;
        let (bx, by) = other.affine_or_err("midpoint input")?;
        let half = Rat::frac(1, 2);
        Ok(PPoint::affine((ax + bx) * &half, (ay + by) * half))
    }

    /// Affine translate `self + t·(to − from)` for finite points.
    pub fn offset(&self, from: &PPoint, to: &PPoint, t: &Rat) -> Result<PPoint> {
        let (px, py) = self.affine_or_err("offset base")?;
        let (dx, dy) = direction(from, to)?;
        Ok(PPoint::affine(px + t * dx, py + t * dy))
    }
}

impl PLine {
    pub fn at_infinity() -> Self {
        PLine::new(Rat::zero(), Rat::zero(), Rat::one()).expect("nonzero")
    }

    /// Affine line `a·x + b·y + c = 0`.
    pub fn affine(a: Rat, b: Rat, c: Rat) -> Result<Self> {
        PLine::new(a, b, c)
    }

    pub fn is_at_infinity(&self) -> bool {
        self.coords[0].is_zero() && self.coords[1].is_zero()
    }

    pub fn contains(&self, p: &PPoint) -> bool {
        p.lies_on(self)
    }

    /// The line's point at infinity.
    pub fn point_at_infinity(&self) -> Result<PPoint> {
        meet(self, &PLine::at_infinity())
    }

    /// Line through `p` parallel to `self`.
    pub fn parallel_through(&self, p: &PPoint) -> Result<PLine> {
        let inf = self.point_at_infinity()?;
        join(p, &inf)
    }

    /// Two distinct finite points on an affine line, chosen deterministically.
    pub fn two_finite_points(&self) -> Result<(PPoint, PPoint)> {
        if self.is_at_infinity() {
            return Err(Error::PointAtInfinity("line at infinity has no finite points".into()));
        }
        let [a, b, c] = &self.coords;
        let base = if !b.is_zero() {
            PPoint::affine(Rat::zero(), -(c / b))
        } else {
            PPoint::affine(-(c / a), Rat::zero())
        };
        let (bx, by) = base.to_affine().expect("finite");
        // direction (b, -a)
        let other = PPoint::affine(bx + b, by - a);
        Ok((base, other))
    }
}

/// Affine direction vector `to − from` of two finite points.
pub fn direction(from: &PPoint, to: &PPoint) -> Result<(Rat, Rat)> {
    let (ax, ay) = from.affine_or_err("direction start")?;
    let (bx, by) = to.affine_or_err("direction end")?;
    Ok((bx - ax, by - ay))
}

/// The line through two distinct points.
pub fn join(p: &PPoint, q: &PPoint) -> Result<PLine> {
    PLine::from_coords(cross3(&p.coords, &q.coords))
        .map_err(|_| Error::CoincidentPoints(format!("join of {p} with itself")))
}

/// The common point of two distinct lines; parallels meet at infinity.
pub fn meet(l: &PLine, m: &PLine) -> Result<PPoint> {
    PPoint::from_coords(cross3(&l.coords, &m.coords))
        .map_err(|_| Error::CoincidentLines(format!("meet of {l} with itself")))
}

pub fn collinear(p: &PPoint, q: &PPoint, r: &PPoint) -> bool {
    det3(&p.coords, &q.coords, &r.coords).is_zero()
}

/// `det[p; q; r]`, zero exactly when the points are collinear.
pub fn incidence_residual(p: &PPoint, q: &PPoint, r: &PPoint) -> Rat {
    det3(&p.coords, &q.coords, &r.coords)
}

pub fn concurrent(l: &PLine, m: &PLine, n: &PLine) -> bool {
    det3(&l.coords, &m.coords, &n.coords).is_zero()
}

/// A parameter on a projective line: a finite chart coordinate or ∞.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Param {
    Finite(Rat),
    Infinity,
}

impl Param {
    pub fn int(n: i64) -> Self {
        Param::Finite(Rat::int(n))
    }

    pub fn finite(&self) -> Option<&Rat> {
        match self {
            Param::Finite(r) => Some(r),
            Param::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Param::Infinity)
    }

    pub(crate) fn to_pair(&self) -> [Rat; 2] {
        match self {
            Param::Finite(t) => [t.clone(), Rat::one()],
            Param::Infinity => [Rat::one(), Rat::zero()],
        }
    }

    pub(crate) fn from_pair(p: [Rat; 2]) -> Result<Self> {
        let [s, t] = p;
        if t.is_zero() {
            if s.is_zero() {
                Err(Error::ZeroVector)
            } else {
                Ok(Param::Infinity)
            }
        } else {
            Ok(Param::Finite(s / t))
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text.trim() {
            "inf" | "∞" => Ok(Param::Infinity),
            t => Rat::parse(t).map(Param::Finite),
        }
    }
}

impl From<Rat> for Param {
    fn from(r: Rat) -> Self {
        Param::Finite(r)
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Finite(r) => write!(f, "{r}"),
            Param::Infinity => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Param {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A parameter with coordinates in the quadratic extension.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum QParam {
    Finite(QuadExt),
    Infinity,
}

impl QParam {
    pub fn to_param(&self) -> Option<Param> {
        match self {
            QParam::Finite(q) => q.to_rat().map(Param::Finite),
            QParam::Infinity => Some(Param::Infinity),
        }
    }
}

impl From<&Param> for QParam {
    fn from(p: &Param) -> Self {
        match p {
            Param::Finite(r) => QParam::Finite(QuadExt::rational(r.clone())),
            Param::Infinity => QParam::Infinity,
        }
    }
}

impl fmt::Display for QParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QParam::Finite(q) => write!(f, "{q}"),
            QParam::Infinity => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for QParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for QParam {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Coordinatization of a line: `origin` has parameter 0, `unit` parameter 1,
/// the line's point at infinity parameter ∞.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct AffineChart {
    pub line: PLine,
    pub origin: PPoint,
    pub unit: PPoint,
}

impl<'de> Deserialize<'de> for AffineChart {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            origin: PPoint,
            unit: PPoint,
        }
        let raw = Raw::deserialize(d)?;
        AffineChart::new(raw.origin, raw.unit).map_err(serde::de::Error::custom)
    }
}

impl AffineChart {
    pub fn new(origin: PPoint, unit: PPoint) -> Result<Self> {
        if !origin.is_finite() || !unit.is_finite() {
            return Err(Error::PointAtInfinity("chart origin and unit must be finite".into()));
        }
        let line = join(&origin, &unit)?;
        Ok(AffineChart { line, origin, unit })
    }

    /// Deterministic chart on an affine line.
    pub fn on_line(line: &PLine) -> Result<Self> {
        let (o, u) = line.two_finite_points()?;
        AffineChart::new(o, u)
    }

    /// The x-axis with its usual coordinate.
    pub fn x_axis() -> Self {
        AffineChart::new(PPoint::xy(0, 0), PPoint::xy(1, 0)).expect("distinct")
    }

    fn dir(&self) -> (Rat, Rat) {
        direction(&self.origin, &self.unit).expect("chart points are finite")
    }

    pub fn coordinate(&self, p: &PPoint) -> Result<Param> {
        if !p.lies_on(&self.line) {
            return Err(Error::NotOnLine(format!("{p} not on {}", self.line)));
        }
        let Some((x, y)) = p.to_affine() else {
            return Ok(Param::Infinity);
        };
        let (ox, oy) = self.origin.to_affine().expect("finite");
        let (dx, dy) = self.dir();
        let num = (x - ox) * &dx + (y - oy) * &dy;
        let den = dx.square() + dy.square();
        Ok(Param::Finite(num / den))
    }

    pub fn point(&self, t: &Param) -> PPoint {
        let (dx, dy) = self.dir();
        match t {
            Param::Infinity => PPoint::at_infinity(dx, dy).expect("distinct chart points"),
            Param::Finite(t) => {
                let (ox, oy) = self.origin.to_affine().expect("finite");
                PPoint::affine(ox + t * dx, oy + t * dy)
            }
        }
    }

    pub fn point_at(&self, t: &Rat) -> PPoint {
        self.point(&Param::Finite(t.clone()))
    }

    /// Finite chart coordinate or a `PointAtInfinity` error naming `what`.
    pub fn finite_coordinate(&self, p: &PPoint, what: &str) -> Result<Rat> {
        match self.coordinate(p)? {
            Param::Finite(t) => Ok(t),
            Param::Infinity => Err(Error::PointAtInfinity(what.to_string())),
        }
    }
}

/// Homogeneous coordinates of a collinear point relative to a basis `(a, b)`
/// of its line: `x ∝ s·a + t·b`.
pub(crate) fn basis_coords(a: &PPoint, b: &PPoint, x: &PPoint) -> [Rat; 2] {
    let (ac, bc, xc) = (a.coords(), b.coords(), x.coords());
    // choose the 2x2 minor of [a b] with nonzero determinant
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let det = &ac[i] * &bc[j] - &ac[j] * &bc[i];
        if !det.is_zero() {
            let s = (&xc[i] * &bc[j] - &xc[j] * &bc[i]) / &det;
            let t = (&ac[i] * &xc[j] - &ac[j] * &xc[i]) / &det;
            return [s, t];
        }
    }
    unreachable!("basis points are distinct")
}

fn det2(p: &[Rat; 2], q: &[Rat; 2]) -> Rat {
    &p[0] * &q[1] - &p[1] * &q[0]
}

/// Cross-ratio `[a, b; c, d] = ((c−a)/(c−b)) / ((d−a)/(d−b))` of four
/// collinear points with `a, b, c` pairwise distinct. `∞` when `d = a`.
pub fn cross_ratio(a: &PPoint, b: &PPoint, c: &PPoint, d: &PPoint) -> Result<Param> {
    if a == b || b == c || a == c {
        return Err(Error::CoincidentPoints("cross-ratio needs a, b, c pairwise distinct".into()));
    }
    if !collinear(a, b, c) || !collinear(a, b, d) {
        return Err(Error::NotCollinear("cross-ratio of non-collinear points".into()));
    }
    let [pa, pb, pc, pd] = [a, b, c, d].map(|x| basis_coords(a, b, x));
    // homogeneous form (c−a)(d−b) / ((c−b)(d−a)) with (u − v) ↦ det(u, v)
    let num = det2(&pc, &pa) * det2(&pd, &pb);
    let den = det2(&pc, &pb) * det2(&pd, &pa);
    Param::from_pair([num, den])
}

/// Cross-ratio of four chart parameters (same convention).
pub fn cross_ratio_params(a: &Param, b: &Param, c: &Param, d: &Param) -> Result<Param> {
    let [pa, pb, pc, pd] = [a, b, c, d].map(Param::to_pair);
    if det2(&pa, &pb).is_zero() || det2(&pb, &pc).is_zero() || det2(&pa, &pc).is_zero() {
        return Err(Error::CoincidentPoints("cross-ratio needs a, b, c pairwise distinct".into()));
    }
    let num = det2(&pc, &pa) * det2(&pd, &pb);
    let den = det2(&pc, &pb) * det2(&pd, &pa);
    Param::from_pair([num, den])
}

pub type Mat2 = [[Rat; 2]; 2];

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    std::array::from_fn(|i| std::array::from_fn(|j| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j]))
}

fn mat_adj(m: &Mat2) -> Mat2 {
    [
        [m[1][1].clone(), -&m[0][1]],
        [-&m[1][0], m[0][0].clone()],
    ]
}

pub(crate) fn mat_det(m: &Mat2) -> Rat {
    &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
}

fn canonical_mat(m: &Mat2) -> Option<Mat2> {
    let flat = [m[0][0].clone(), m[0][1].clone(), m[1][0].clone(), m[1][1].clone()];
    let [a, b, c, d] = canonical_scale(&flat)?;
    Some([[a, b], [c, d]])
}

/// Matrix sending the parameters `(0, 1, ∞)` to `(p, q, r)`.
fn frame_matrix(p: &Param, q: &Param, r: &Param) -> Result<Mat2> {
    let [vp, vq, vr] = [p, q, r].map(Param::to_pair);
    // vq = λ·vr + μ·vp
    let det = det2(&vr, &vp);
    if det.is_zero() || det2(&vq, &vp).is_zero() || det2(&vq, &vr).is_zero() {
        return Err(Error::CoincidentPoints("homography data repeats a point".into()));
    }
    let lambda = det2(&vq, &vp) / &det;
    let mu = det2(&vr, &vq) / &det;
    Ok([
        [&lambda * &vr[0], &mu * &vp[0]],
        [lambda * &vr[1], mu * &vp[1]],
    ])
}

/// A homography between two coordinatized lines, acting on chart
/// parameters by `t ↦ (m00·t + m01)/(m10·t + m11)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct LineMap {
    matrix: Mat2,
    pub src: AffineChart,
    pub dst: AffineChart,
}

impl LineMap {
    pub fn new(matrix: Mat2, src: AffineChart, dst: AffineChart) -> Result<Self> {
        if mat_det(&matrix).is_zero() {
            return Err(Error::Degenerate("singular homography matrix".into()));
        }
        let matrix = canonical_mat(&matrix).expect("nonsingular");
        Ok(LineMap { matrix, src, dst })
    }

    pub fn identity(chart: &AffineChart) -> Self {
        LineMap::new(
            [[Rat::one(), Rat::zero()], [Rat::zero(), Rat::one()]],
            chart.clone(),
            chart.clone(),
        )
        .expect("identity is nonsingular")
    }

    /// Canonical representative: primitive integers, first nonzero entry positive.
    pub fn matrix(&self) -> &Mat2 {
        &self.matrix
    }

    /// The unique map sending three distinct parameters to three distinct parameters.
    pub fn from_three(
        src: &AffineChart,
        from: [&Param; 3],
        dst: &AffineChart,
        to: [&Param; 3],
    ) -> Result<Self> {
        let a = frame_matrix(from[0], from[1], from[2])?;
        let b = frame_matrix(to[0], to[1], to[2])?;
        LineMap::new(mat_mul(&b, &mat_adj(&a)), src.clone(), dst.clone())
    }

    pub fn apply(&self, t: &Param) -> Param {
        let [s, u] = t.to_pair();
        let m = &self.matrix;
        Param::from_pair([&m[0][0] * &s + &m[0][1] * &u, &m[1][0] * &s + &m[1][1] * &u])
            .expect("nonsingular map sends nonzero vectors to nonzero vectors")
    }

    pub fn apply_point(&self, p: &PPoint) -> Result<PPoint> {
        let t = self.src.coordinate(p)?;
        Ok(self.dst.point(&self.apply(&t)))
    }

    pub fn apply_quad(&self, t: &QParam) -> Result<QParam> {
        let m = &self.matrix;
        let q = |r: &Rat| QuadExt::rational(r.clone());
        let (num, den) = match t {
            QParam::Infinity => (q(&m[0][0]), q(&m[1][0])),
            QParam::Finite(x) => (
                x.scale(&m[0][0]).checked_add(&q(&m[0][1]))?,
                x.scale(&m[1][0]).checked_add(&q(&m[1][1]))?,
            ),
        };
        if den.is_zero() {
            return Ok(QParam::Infinity);
        }
        Ok(QParam::Finite(num.checked_div(&den)?))
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &LineMap) -> Result<LineMap> {
        if first.dst != self.src {
            return Err(Error::Precondition("composition of maps with mismatched charts".into()));
        }
        LineMap::new(
            mat_mul(&self.matrix, &first.matrix),
            first.src.clone(),
            self.dst.clone(),
        )
    }

    pub fn inverse(&self) -> LineMap {
        LineMap::new(mat_adj(&self.matrix), self.dst.clone(), self.src.clone())
            .expect("adjugate of a nonsingular matrix is nonsingular")
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.dst
            && self.matrix[0][1].is_zero()
            && self.matrix[1][0].is_zero()
            && self.matrix[0][0] == self.matrix[1][1]
    }

    pub fn trace(&self) -> Rat {
        &self.matrix[0][0] + &self.matrix[1][1]
    }

    pub fn det(&self) -> Rat {
        mat_det(&self.matrix)
    }
}

impl fmt::Display for LineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.matrix;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

/// Central projection from `center` of the line of `src` onto the line of `dst`.
pub fn perspective_map(center: &PPoint, src: &AffineChart, dst: &AffineChart) -> Result<LineMap> {
    if center.lies_on(&src.line) || center.lies_on(&dst.line) {
        return Err(Error::Precondition(format!(
            "perspective center {center} lies on the source or target line"
        )));
    }
    let params = [Param::int(0), Param::int(1), Param::Infinity];
    let images = params
        .iter()
        .map(|t| {
            let p = src.point(t);
            let ray = join(center, &p)?;
            dst.coordinate(&meet(&ray, &dst.line)?)
        })
        .collect::<Result<Vec<_>>>()?;
    LineMap::from_three(
        src,
        [&params[0], &params[1], &params[2]],
        dst,
        [&images[0], &images[1], &images[2]],
    )
}

/// Pointwise construction of the perspective image `meet(join(center, p), dst)`.
pub fn project_through(center: &PPoint, p: &PPoint, dst: &PLine) -> Result<PPoint> {
    meet(&join(center, p)?, dst)
}

/// The unique homography sending three distinct points of `src`'s line to
/// three distinct points of `dst`'s line, in order.
pub fn homography_from_three(
    src: &AffineChart,
    from: [&PPoint; 3],
    dst: &AffineChart,
    to: [&PPoint; 3],
) -> Result<LineMap> {
    let f = from.map(|p| src.coordinate(p));
    let t = to.map(|p| dst.coordinate(p));
    let [f0, f1, f2] = f;
    let [t0, t1, t2] = t;
    let (f0, f1, f2, t0, t1, t2) = (f0?, f1?, f2?, t0?, t1?, t2?);
    LineMap::from_three(src, [&f0, &f1, &f2], dst, [&t0, &t1, &t2])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64, z: i64) -> PPoint {
        PPoint::new(Rat::int(x), Rat::int(y), Rat::int(z)).unwrap()
    }
    fn l(u: i64, v: i64, w: i64) -> PLine {
        PLine::new(Rat::int(u), Rat::int(v), Rat::int(w)).unwrap()
    }
    fn q(s: &str) -> Rat {
        Rat::parse(s).unwrap()
    }

    #[test]
    fn canonical_form() {
        let a = PPoint::new(q("-1/2"), q("1"), q("0")).unwrap();
        assert_eq!(a.coords(), &[Rat::int(1), Rat::int(-2), Rat::zero()]);
        assert_eq!(a, p(-3, 6, 0));
        assert_eq!(PPoint::new(Rat::zero(), Rat::zero(), Rat::zero()), Err(Error::ZeroVector));
    }

    #[test]
    fn join_examples() {
        // incidence oracle: both points satisfy the returned equation
        assert_eq!(join(&p(1, 0, 1), &p(0, 1, 1)).unwrap(), l(1, 1, -1));
        assert_eq!(join(&p(1, 0, 0), &p(0, 1, 0)).unwrap(), PLine::at_infinity());
        assert_eq!(join(&p(0, 0, 1), &p(1, 0, 1)).unwrap(), l(0, 1, 0));
        assert!(matches!(join(&p(1, 2, 3), &p(2, 4, 6)), Err(Error::CoincidentPoints(_))));
    }

    #[test]
    fn meet_examples() {
        assert_eq!(meet(&l(1, 0, 0), &l(0, 1, 0)).unwrap(), p(0, 0, 1));
        assert_eq!(meet(&l(0, 1, -1), &l(0, 1, -2)).unwrap(), p(1, 0, 0));
        assert_eq!(meet(&l(1, 1, -1), &l(1, -1, 0)).unwrap(), p(1, 1, 2));
        assert!(matches!(meet(&l(1, 1, 1), &l(2, 2, 2)), Err(Error::CoincidentLines(_))));
    }

    #[test]
    fn cross_ratio_examples() {
        let x = AffineChart::x_axis();
        let at = |s: &str| x.point(&Param::parse(s).unwrap());
        assert_eq!(cross_ratio(&at("0"), &at("1"), &at("2"), &at("3")).unwrap(), Param::Finite(q("4/3")));
        assert_eq!(cross_ratio(&at("0"), &at("1"), &at("2"), &at("2")).unwrap(), Param::int(1));
        assert_eq!(cross_ratio(&at("0"), &at("2"), &at("3"), &at("3/2")).unwrap(), Param::int(-1));
        // d = a gives ∞, d = b gives 0 with this convention
        assert_eq!(cross_ratio(&at("0"), &at("1"), &at("2"), &at("0")).unwrap(), Param::Infinity);
        assert_eq!(cross_ratio(&at("0"), &at("1"), &at("2"), &at("1")).unwrap(), Param::int(0));
        // points at infinity participate
        assert_eq!(
            cross_ratio(&at("0"), &at("2"), &at("1"), &at("inf")).unwrap(),
            Param::int(-1)
        );
        assert!(cross_ratio(&at("0"), &at("0"), &at("1"), &at("2")).is_err());
        assert!(cross_ratio(&at("0"), &at("1"), &at("2"), &p(0, 1, 1)).is_err());
    }

    #[test]
    fn cross_ratio_on_line_at_infinity() {
        let pts = [p(1, 0, 0), p(0, 1, 0), p(1, 1, 0), p(1, -1, 0)];
        // directions with slopes 0, ∞, 1, −1 form a harmonic quadruple
        assert_eq!(cross_ratio(&pts[0], &pts[1], &pts[2], &pts[3]).unwrap(), Param::int(-1));
    }

    #[test]
    fn chart_round_trip() {
        let c = AffineChart::new(PPoint::xy(1, 1), PPoint::xy(3, 2)).unwrap();
        assert_eq!(c.coordinate(&c.origin).unwrap(), Param::int(0));
        assert_eq!(c.coordinate(&c.unit).unwrap(), Param::int(1));
        assert_eq!(c.coordinate(&c.line.point_at_infinity().unwrap()).unwrap(), Param::Infinity);
        let t = Param::Finite(q("-7/3"));
        assert_eq!(c.coordinate(&c.point(&t)).unwrap(), t);
        assert!(c.coordinate(&PPoint::xy(0, 0)).is_err());
    }

    #[test]
    fn homography_examples() {
        let c = AffineChart::x_axis();
        let (zero, one, inf) = (Param::int(0), Param::int(1), Param::Infinity);
        let id = LineMap::from_three(&c, [&zero, &one, &inf], &c, [&zero, &one, &inf]).unwrap();
        assert!(id.is_identity());
        let recip = LineMap::from_three(&c, [&zero, &one, &inf], &c, [&inf, &one, &zero]).unwrap();
        assert_eq!(recip.matrix(), &[[Rat::zero(), Rat::one()], [Rat::one(), Rat::zero()]]);
        assert_eq!(recip.apply(&Param::int(4)), Param::Finite(q("1/4")));
        let again = LineMap::from_three(&c, [&zero, &one, &inf], &c, [&inf, &one, &zero]).unwrap();
        assert_eq!(recip, again);
        assert!(LineMap::from_three(&c, [&zero, &zero, &inf], &c, [&zero, &one, &inf]).is_err());
    }

    #[test]
    fn perspective_examples() {
        let c = AffineChart::x_axis();
        let any = PPoint::xy(2, 5);
        assert!(perspective_map(&any, &c, &c).unwrap().is_identity());

        let dst = AffineChart::new(PPoint::xy(0, 1), PPoint::xy(1, 1)).unwrap();
        let vertical = perspective_map(&p(0, 1, 0), &c, &dst).unwrap();
        for t in ["0", "1", "inf", "5/7"] {
            let t = Param::parse(t).unwrap();
            assert_eq!(vertical.apply(&t), t);
        }
        assert!(perspective_map(&PPoint::xy(4, 0), &c, &dst).is_err());
    }

    #[test]
    fn perspective_matches_pointwise_construction() {
        let src = AffineChart::new(PPoint::xy(0, 0), PPoint::xy(2, 1)).unwrap();
        let dst = AffineChart::new(PPoint::xy(-1, 3), PPoint::xy(4, 2)).unwrap();
        let k = PPoint::affine(q("1/3"), q("7/2"));
        let map = perspective_map(&k, &src, &dst).unwrap();
        for t in ["-2", "1/5", "9"] {
            let pt = src.point(&Param::parse(t).unwrap());
            let oracle = project_through(&k, &pt, &dst.line).unwrap();
            assert_eq!(map.apply_point(&pt).unwrap(), oracle);
        }
        // and back again is the identity
        let back = perspective_map(&k, &dst, &src).unwrap();
        assert!(back.after(&map).unwrap().is_identity());
    }

    #[test]
    fn join_meet_duality() {
        let (a, b, c) = (PPoint::xy(1, 2), PPoint::xy(-3, 5), PPoint::affine(q("1/2"), q("-4")));
        let back = meet(&join(&a, &b).unwrap(), &join(&a, &c).unwrap()).unwrap();
        assert_eq!(back, a);
    }
}
