//! Conics as symmetric 3×3 matrices over the rationals, the pencil through
//! four points, chords over `Q(√d)`, and rational parametrization.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::projective::{canonical_scale, cross3, dot3, join, AffineChart, PLine, PPoint, Param, QParam};
use crate::scalar::{quad_sqrt, QuadExt, Rat};

pub type Mat3 = [[Rat; 3]; 3];

fn mat_vec(m: &Mat3, v: &[Rat; 3]) -> [Rat; 3] {
    std::array::from_fn(|i| dot3(&m[i], v))
}

fn transpose(m: &Mat3) -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| m[j][i].clone()))
}

fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..3).map(|k| &a[i][k] * &b[k][j]).sum()))
}

fn det(m: &Mat3) -> Rat {
    dot3(&m[0], &cross3(&m[1], &m[2]))
}

/// Adjugate, equal to `det·M⁻¹`; rows of the inverse transpose are cross products.
fn adjugate(m: &Mat3) -> Mat3 {
    let cols = transpose(m);
    [cross3(&cols[1], &cols[2]), cross3(&cols[2], &cols[0]), cross3(&cols[0], &cols[1])]
}

/// A point with coordinates in `Q(√d)`, from an irrational chord.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct QPoint {
    pub coords: [QuadExt; 3],
}

impl QPoint {
    pub fn to_rational(&self) -> Option<PPoint> {
        let [x, y, z] = &self.coords;
        PPoint::new(x.to_rat()?, y.to_rat()?, z.to_rat()?).ok()
    }
}

/// Conic `pᵀ·M·p = 0` with `M` symmetric, stored canonically up to scale.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Conic {
    m: Mat3,
}

impl Conic {
    pub fn new(m: Mat3) -> Result<Self> {
        for i in 0..3 {
            for j in 0..i {
                if m[i][j] != m[j][i] {
                    return Err(Error::Precondition("conic matrix must be symmetric".into()));
                }
            }
        }
        let [a, b, c, d, e, f] = canonical_scale(&[
            m[0][0].clone(),
            m[0][1].clone(),
            m[0][2].clone(),
            m[1][1].clone(),
            m[1][2].clone(),
            m[2][2].clone(),
        ])
        .ok_or(Error::ZeroVector)?;
        Ok(Conic {
            m: [
                [a, b.clone(), c.clone()],
                [b, d, e.clone()],
                [c, e, f],
            ],
        })
    }

    /// From the upper triangle `m00, m01, m02, m11, m12, m22`.
    pub fn from_upper(u: [Rat; 6]) -> Result<Self> {
        let [a, b, c, d, e, f] = u;
        Conic::new([
            [a, b.clone(), c.clone()],
            [b, d, e.clone()],
            [c, e, f],
        ])
    }

    pub fn unit_circle() -> Self {
        Conic::circle(&Rat::zero(), &Rat::zero(), &Rat::one()).expect("positive radius")
    }

    /// `(x − cx)² + (y − cy)² = r2`.
    pub fn circle(cx: &Rat, cy: &Rat, r2: &Rat) -> Result<Self> {
        if !r2.is_positive() {
            return Err(Error::Precondition("circle needs a positive squared radius".into()));
        }
        Conic::from_upper([
            Rat::one(),
            Rat::zero(),
            -cx,
            Rat::one(),
            -cy,
            cx.square() + cy.square() - r2,
        ])
    }

    /// The degenerate conic `l ∪ m`, matrix `l·mᵀ + m·lᵀ`.
    pub fn line_pair(l: &PLine, m: &PLine) -> Self {
        let (a, b) = (l.coords(), m.coords());
        Conic::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| &a[i] * &b[j] + &b[i] * &a[j])
        }))
        .expect("product of two lines is nonzero")
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.m
    }

    pub fn upper(&self) -> [Rat; 6] {
        let m = &self.m;
        [
            m[0][0].clone(),
            m[0][1].clone(),
            m[0][2].clone(),
            m[1][1].clone(),
            m[1][2].clone(),
            m[2][2].clone(),
        ]
    }

    pub fn bilinear(&self, p: &[Rat; 3], q: &[Rat; 3]) -> Rat {
        dot3(p, &mat_vec(&self.m, q))
    }

    pub fn eval(&self, p: &PPoint) -> Rat {
        self.bilinear(p.coords(), p.coords())
    }

    pub fn contains(&self, p: &PPoint) -> bool {
        self.eval(p).is_zero()
    }

    pub fn eval_quad(&self, p: &QPoint) -> Result<QuadExt> {
        let mut acc = QuadExt::zero();
        for i in 0..3 {
            for j in 0..3 {
                let term = p.coords[i].checked_mul(&p.coords[j])?.scale(&self.m[i][j]);
                acc = acc.checked_add(&term)?;
            }
        }
        Ok(acc)
    }

    pub fn det(&self) -> Rat {
        det(&self.m)
    }

    pub fn is_degenerate(&self) -> bool {
        self.det().is_zero()
    }

    pub fn is_circle(&self) -> bool {
        let m = &self.m;
        !m[0][0].is_zero() && m[0][0] == m[1][1] && m[0][1].is_zero()
    }

    /// Polar line of `p`; the tangent at `p` when `p` is on the conic.
    pub fn polar(&self, p: &PPoint) -> Result<PLine> {
        PLine::from_coords(mat_vec(&self.m, p.coords()))
            .map_err(|_| Error::Degenerate(format!("{p} is a singular point of the conic")))
    }

    pub fn scaled_sum(&self, lambda: &Rat, other: &Conic, mu: &Rat) -> Result<Conic> {
        Conic::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| lambda * &self.m[i][j] + mu * &other.m[i][j])
        }))
    }
}

impl fmt::Display for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let u = self.upper().map(|r| r.to_string());
        write!(f, "[{}]", u.join(", "))
    }
}

impl fmt::Debug for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Conic{self}")
    }
}

impl Serialize for Conic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.upper().serialize(s)
    }
}

/// Null vector of a rank-(n−1) matrix with `n` columns, by rational row reduction.
fn null_vector(mut rows: Vec<Vec<Rat>>, n: usize) -> Result<Vec<Rat>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip()?;
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let k = rows[i][col].clone();
                let (pivot_row, row) = if i < r {
                    let (lo, hi) = rows.split_at_mut(r);
                    (&hi[0], &mut lo[i])
                } else {
                    let (lo, hi) = rows.split_at_mut(i);
                    (&lo[r], &mut hi[0])
                };
                for (x, y) in row.iter_mut().zip(pivot_row) {
                    *x = &*x - &k * y;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if pivots.len() != n - 1 {
        return Err(Error::RankDeficient(format!(
            "rank {} where {} is needed for a unique solution",
            pivots.len(),
            n - 1
        )));
    }
    let free = (0..n).find(|c| !pivots.contains(c)).expect("one free column");
    let mut v = vec![Rat::zero(); n];
    v[free] = Rat::one();
    for (row, &pc) in pivots.iter().enumerate() {
        v[pc] = -&rows[row][free];
    }
    Ok(v)
}

/// The conic through five points, unique when the incidence system has rank 5.
pub fn conic_through_five(points: &[PPoint; 5]) -> Result<Conic> {
    let rows = points
        .iter()
        .map(|p| {
            let [x, y, z] = p.coords();
            let two = Rat::int(2);
            vec![
                x.square(),
                &two * x * y,
                &two * x * z,
                y.square(),
                &two * y * z,
                z.square(),
            ]
        })
        .collect();
    let v = null_vector(rows, 6)?;
    let u: [Rat; 6] = v.try_into().expect("six unknowns");
    Conic::from_upper(u)
}

/// The conics through four points in general position, spanned by the two
/// line pairs `BC·ED` and `BE·DC`.
#[derive(Clone, Debug, Serialize)]
pub struct Pencil {
    pub base: [PPoint; 4],
    pub gen1: Conic,
    pub gen2: Conic,
}

impl Pencil {
    pub fn new(base: [PPoint; 4]) -> Result<Self> {
        for i in 0..4 {
            for j in i + 1..4 {
                for k in j + 1..4 {
                    if crate::projective::collinear(&base[i], &base[j], &base[k]) {
                        return Err(Error::Degenerate(format!(
                            "base points {}, {}, {} are collinear",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        let [b, c, d, e] = &base;
        let gen1 = Conic::line_pair(&join(b, c)?, &join(e, d)?);
        let gen2 = Conic::line_pair(&join(b, e)?, &join(d, c)?);
        Ok(Pencil { base, gen1, gen2 })
    }

    pub fn member(&self, lambda: &Rat, mu: &Rat) -> Result<Conic> {
        self.gen1.scaled_sum(lambda, &self.gen2, mu)
    }

    /// The three line pairs of the pencil: `gen1`, `gen2`, and the root
    /// `(c1 : −c2)` of `det(λ·gen1 + μ·gen2) = λμ(c2·λ + c1·μ)`.
    pub fn degenerate_members(&self) -> Result<[Conic; 3]> {
        // on the raw combination: members are rescaled canonically, which
        // would break the cubic's homogeneity
        let f = |l: i64, m: i64| -> Result<Rat> {
            let (l, m) = (Rat::int(l), Rat::int(m));
            let (g1, g2) = (self.gen1.matrix(), self.gen2.matrix());
            Ok(det(&std::array::from_fn(|i| std::array::from_fn(|j| &l * &g1[i][j] + &m * &g2[i][j]))))
        };
        let (plus, minus) = (f(1, 1)?, f(1, -1)?);
        let half = Rat::frac(1, 2);
        let c2 = (&plus - &minus) * &half;
        let c1 = (plus + minus) * half;
        if !self.gen1.is_degenerate() || !self.gen2.is_degenerate() {
            return Err(Error::Degenerate("generators are not line pairs".into()));
        }
        let third = self.member(&c1, &(-c2))?;
        Ok([self.gen1.clone(), self.gen2.clone(), third])
    }
}

/// The unique pencil member through a point that is not a base point.
pub fn pencil_member(pencil: &Pencil, through: &PPoint) -> Result<Conic> {
    let g1 = pencil.gen1.eval(through);
    let g2 = pencil.gen2.eval(through);
    if g1.is_zero() && g2.is_zero() {
        return Err(Error::Precondition(format!(
            "{through} is a base point: every member passes through it"
        )));
    }
    pencil.member(&g2, &(-g1))
}

/// Where a conic meets a coordinatized line: up to two chart parameters.
#[derive(Clone, Debug, Serialize)]
pub struct ChordIntersection {
    /// Quarter discriminant of the restricted quadratic.
    pub discriminant: Rat,
    pub chart: AffineChart,
    pub params: Vec<QParam>,
}

impl ChordIntersection {
    pub fn is_tangent(&self) -> bool {
        self.discriminant.is_zero()
    }

    pub fn rational_params(&self) -> Option<Vec<Param>> {
        self.params.iter().map(QParam::to_param).collect()
    }

    pub fn rational_points(&self) -> Option<Vec<PPoint>> {
        Some(self.rational_params()?.iter().map(|t| self.chart.point(t)).collect())
    }

    pub fn points(&self) -> Vec<QPoint> {
        let (ox, oy) = self.chart.origin.to_affine().expect("finite");
        let dir = self.chart.line.point_at_infinity().expect("affine line");
        let [dx, dy, _] = dir.coords().clone();
        self.params
            .iter()
            .map(|t| match t {
                QParam::Infinity => QPoint {
                    coords: [dx.clone(), dy.clone(), Rat::zero()].map(QuadExt::rational),
                },
                QParam::Finite(t) => {
                    let (ux, uy) = crate::projective::direction(&self.chart.origin, &self.chart.unit)
                        .expect("finite chart");
                    QPoint {
                        coords: [
                            t.scale(&ux).checked_add(&QuadExt::rational(ox.clone())).expect("same radicand"),
                            t.scale(&uy).checked_add(&QuadExt::rational(oy.clone())).expect("same radicand"),
                            QuadExt::one(),
                        ],
                    }
                }
            })
            .collect()
    }
}

/// Intersection in the chart parameter, degenerate conics allowed as long
/// as the line is not a component.
pub(crate) fn chord(c: &Conic, chart: &AffineChart) -> Result<ChordIntersection> {
    let (ox, oy) = chart.origin.affine_or_err("chart origin")?;
    let o = [ox, oy, Rat::one()];
    let (ux, uy) = crate::projective::direction(&chart.origin, &chart.unit)?;
    let v = [ux, uy, Rat::zero()];
    // Q(s·o + t·v) = a·t² + 2b·s·t + k·s²
    let a = c.bilinear(&v, &v);
    let b = c.bilinear(&o, &v);
    let k = c.bilinear(&o, &o);
    if a.is_zero() && b.is_zero() && k.is_zero() {
        return Err(Error::Degenerate("line is a component of the conic".into()));
    }
    let disc = b.square() - &a * &k;
    let mut params = Vec::new();
    if a.is_zero() {
        // s = 0 is a root: the line's point at infinity lies on the conic
        if b.is_zero() {
            params.push(QParam::Infinity);
        } else {
            let t = (-&k).checked_div(&(&b * Rat::int(2)))?;
            let fin = QParam::Finite(QuadExt::rational(t));
            params.push(fin);
            params.push(QParam::Infinity);
        }
    } else if disc.is_zero() {
        params.push(QParam::Finite(QuadExt::rational((-&b).checked_div(&a)?)));
    } else if disc.is_positive() {
        let s = quad_sqrt(&disc)?;
        let nb = QuadExt::rational(-&b);
        let aq = QuadExt::rational(a.clone());
        let lo = nb.checked_sub(&s)?.checked_div(&aq)?;
        let hi = nb.checked_add(&s)?.checked_div(&aq)?;
        params.push(QParam::Finite(lo));
        params.push(QParam::Finite(hi));
    }
    Ok(ChordIntersection {
        discriminant: disc,
        chart: chart.clone(),
        params,
    })
}

/// Intersection of a nondegenerate conic with a line, exact over `Q(√d)`.
pub fn conic_line_intersection(c: &Conic, l: &PLine) -> Result<ChordIntersection> {
    if c.is_degenerate() {
        return Err(Error::Degenerate("conic is a line pair; split it first".into()));
    }
    chord(c, &AffineChart::on_line(l)?)
}

/// Second intersections of the lines through a rational seed point: the
/// line of slope `t` (or the vertical for `t = ∞`) meets the conic again at
/// `Q(v)·S − 2B(S, v)·v`, with `v = (1, t, 0)`.
#[derive(Clone, Debug)]
pub struct RationalParametrization {
    pub conic: Conic,
    pub seed: PPoint,
}

pub fn rational_parametrization(c: &Conic, seed: &PPoint) -> Result<RationalParametrization> {
    if c.is_degenerate() {
        return Err(Error::Degenerate("parametrization needs a nondegenerate conic".into()));
    }
    if !c.contains(seed) {
        return Err(Error::NotOnLine(format!("seed {seed} is not on the conic")));
    }
    Ok(RationalParametrization {
        conic: c.clone(),
        seed: seed.clone(),
    })
}

impl RationalParametrization {
    pub fn point(&self, t: &Param) -> PPoint {
        let v = match t {
            Param::Finite(t) => [Rat::one(), t.clone(), Rat::zero()],
            Param::Infinity => [Rat::zero(), Rat::one(), Rat::zero()],
        };
        let s = self.seed.coords();
        let qv = self.conic.bilinear(&v, &v);
        let b2 = self.conic.bilinear(s, &v) * Rat::int(2);
        let c = std::array::from_fn(|i| &qv * &s[i] - &b2 * &v[i]);
        PPoint::from_coords(c).expect("a nondegenerate conic contains no line")
    }

    pub fn point_at(&self, t: &Rat) -> PPoint {
        self.point(&Param::Finite(t.clone()))
    }

    /// Slope of the line from the seed to `p`; the tangent slope at the seed itself.
    pub fn parameter_of(&self, p: &PPoint) -> Result<Param> {
        if !self.conic.contains(p) {
            return Err(Error::NotOnLine(format!("{p} is not on the conic")));
        }
        let line = if p == &self.seed {
            self.conic.polar(p)?
        } else {
            join(&self.seed, p)?
        };
        let dir = line.point_at_infinity()?;
        let [dx, dy, _] = dir.coords();
        Ok(if dx.is_zero() {
            Param::Infinity
        } else {
            Param::Finite(dy / dx)
        })
    }
}

/// `p·X1 · p·X2` for both chords through `p` of a circle, as Euclidean dot
/// products; equal by the power of the point.
#[derive(Clone, Debug, Serialize)]
pub struct PowerCheck {
    pub chords: [[PPoint; 2]; 2],
    pub lhs: Rat,
    pub rhs: Rat,
    pub power: Rat,
    pub equal: bool,
}

pub fn power_identity_check(circle: &Conic, p: &PPoint, chord1: &PLine, chord2: &PLine) -> Result<PowerCheck> {
    if !circle.is_circle() || circle.is_degenerate() {
        return Err(Error::Precondition("power of a point is checked on circles only".into()));
    }
    if circle.contains(p) {
        return Err(Error::Precondition(format!("{p} lies on the circle")));
    }
    if !p.lies_on(chord1) || !p.lies_on(chord2) {
        return Err(Error::NotOnLine("both chords must pass through the point".into()));
    }
    let p_aff = p.affine_or_err("power point")?;
    let mut ends = Vec::new();
    let mut products = Vec::new();
    for l in [chord1, chord2] {
        let hit = conic_line_intersection(circle, l)?;
        let pts = hit.rational_points().filter(|v| v.len() == 2).ok_or_else(|| Error::Irrational {
            discriminant: hit.discriminant.to_string(),
            context: format!("chord {l}"),
        })?;
        products.push(crate::menelaus::rectangle(p, &pts[0], &pts[1])?);
        ends.push([pts[0].clone(), pts[1].clone()]);
    }
    let m = circle.matrix();
    let (x, y) = p_aff;
    let v = [x, y, Rat::one()];
    let power = circle.bilinear(&v, &v) / &m[0][0];
    let [c1, c2] = <[[PPoint; 2]; 2]>::try_from(ends).expect("two chords");
    let [lhs, rhs] = <[Rat; 2]>::try_from(products).expect("two chords");
    Ok(PowerCheck {
        chords: [c1, c2],
        equal: lhs == rhs && lhs == power,
        lhs,
        rhs,
        power,
    })
}

/// A projective transformation of the plane, `p ↦ A·p`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Collineation {
    a: Mat3,
    adj: Mat3,
}

impl Collineation {
    pub fn new(a: Mat3) -> Result<Self> {
        if det(&a).is_zero() {
            return Err(Error::Degenerate("singular collineation".into()));
        }
        let adj = adjugate(&a);
        Ok(Collineation { a, adj })
    }

    pub fn apply(&self, p: &PPoint) -> PPoint {
        PPoint::from_coords(mat_vec(&self.a, p.coords())).expect("nonsingular")
    }

    /// Image conic `A⁻ᵀ·M·A⁻¹`, with the adjugate standing in for the inverse.
    pub fn apply_conic(&self, c: &Conic) -> Conic {
        let m = mat_mul(&transpose(&self.adj), &mat_mul(c.matrix(), &self.adj));
        Conic::new(m).expect("congruent to a nonzero matrix")
    }

    pub fn apply_line(&self, l: &PLine) -> PLine {
        PLine::from_coords(mat_vec(&transpose(&self.adj), l.coords())).expect("nonsingular")
    }
}
