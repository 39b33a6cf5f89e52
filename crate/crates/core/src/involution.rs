//! Involutions on a line, in two forms: three couples of points satisfying
//! the rectangle-product identities, and an involutive homography.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::projective::{AffineChart, LineMap, PPoint, Param, QParam};
use crate::report::Claim;
use crate::scalar::{quad_sqrt, QuadExt, Rat};

/// Three couples `(B,H), (C,G), (D,F)` of points on one line.
/// A couple may be double (both members equal): a fixed point offered as a couple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NodeCouples {
    pub chart: AffineChart,
    pub pairs: [(PPoint, PPoint); 3],
}

impl NodeCouples {
    pub fn new(chart: AffineChart, pairs: [(PPoint, PPoint); 3]) -> Result<Self> {
        for (i, (x, y)) in pairs.iter().enumerate() {
            if !x.lies_on(&chart.line) || !y.lies_on(&chart.line) {
                return Err(Error::NotOnLine(format!("couple {} is off the chart line", i + 1)));
            }
        }
        for i in 0..3 {
            for j in i + 1..3 {
                let (a, b) = (&pairs[i], &pairs[j]);
                if [&a.0, &a.1].iter().any(|p| *p == &b.0 || *p == &b.1) {
                    return Err(Error::CoincidentPoints(format!(
                        "couples {} and {} share a point",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        if pairs.iter().all(|(x, y)| x == y) {
            // an involution has at most two fixed points
            return Err(Error::Degenerate("all three couples are double".into()));
        }
        Ok(NodeCouples { chart, pairs })
    }

    pub fn from_params(chart: AffineChart, params: [(Param, Param); 3]) -> Result<Self> {
        let pairs = params.map(|(x, y)| (chart.point(&x), chart.point(&y)));
        NodeCouples::new(chart, pairs)
    }

    pub fn params(&self) -> Result<[(Param, Param); 3]> {
        let c = &self.chart;
        let [a, b, d] = &self.pairs;
        Ok([
            (c.coordinate(&a.0)?, c.coordinate(&a.1)?),
            (c.coordinate(&b.0)?, c.coordinate(&b.1)?),
            (c.coordinate(&d.0)?, c.coordinate(&d.1)?),
        ])
    }
}

/// The three rectangle identities, each side evaluated exactly.
#[derive(Clone, Debug, Serialize)]
pub struct RectangleReport {
    pub identities: [Claim; 3],
    pub holds: bool,
}

/// Rectangle-product form on signed chart lengths (`XY = y − x`):
/// `GF·GD/(CF·CD) = GB·GH/(CB·CH)`, `FC·FG/(DC·DG) = FB·FH/(DB·DH)`,
/// `HC·HG/(BC·BG) = HD·HF/(BD·BF)`.
pub fn rectangle_identity_check(nc: &NodeCouples) -> Result<RectangleReport> {
    let mut t = Vec::with_capacity(6);
    for (x, y) in &nc.pairs {
        t.push(nc.chart.finite_coordinate(x, "rectangle identities need finite points")?);
        t.push(nc.chart.finite_coordinate(y, "rectangle identities need finite points")?);
    }
    let [b, h, c, g, d, f] = <[Rat; 6]>::try_from(t).expect("six points");
    // ratio of rectangles at x over rectangles at y
    let side = |x: &Rat, y: &Rat, p: &Rat, q: &Rat| -> Result<Rat> {
        ((p - x) * (q - x)).checked_div(&((p - y) * (q - y)))
    };
    let identities = [
        Claim::equality("GF·GD/(CF·CD) = GB·GH/(CB·CH)", &side(&g, &c, &f, &d)?, &side(&g, &c, &b, &h)?),
        Claim::equality("FC·FG/(DC·DG) = FB·FH/(DB·DH)", &side(&f, &d, &c, &g)?, &side(&f, &d, &b, &h)?),
        Claim::equality("HC·HG/(BC·BG) = HD·HF/(BD·BF)", &side(&h, &b, &c, &g)?, &side(&h, &b, &d, &f)?),
    ];
    let holds = identities.iter().all(|c| c.equal);
    Ok(RectangleReport { identities, holds })
}

/// An involutive homography of a line: `t ↦ (a·t + b)/(c·t − a)` with `a² + bc ≠ 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Involution {
    map: LineMap,
}

impl Involution {
    pub fn new(map: LineMap) -> Result<Self> {
        if map.src != map.dst {
            return Err(Error::Precondition("an involution maps a line to itself".into()));
        }
        if !map.trace().is_zero() {
            return Err(Error::Degenerate("matrix is not trace-free, so the map is not involutive".into()));
        }
        Ok(Involution { map })
    }

    pub fn map(&self) -> &LineMap {
        &self.map
    }

    pub fn chart(&self) -> &AffineChart {
        &self.map.src
    }

    pub fn apply(&self, t: &Param) -> Param {
        self.map.apply(t)
    }

    /// `−det` of the trace-free representative: positive for two real
    /// fixed points, negative for none.
    pub fn discriminant(&self) -> Rat {
        -self.map.det()
    }

    /// Transport along a homography `pi` whose source is this involution's line:
    /// `pi ∘ self ∘ pi⁻¹`.
    pub fn conjugate(&self, pi: &LineMap) -> Result<Involution> {
        let inner = self.map.after(&pi.inverse())?;
        Involution::new(pi.after(&inner)?)
    }
}

fn swap_row(x: &Param, y: &Param) -> [Rat; 3] {
    // det(M·X, Y) = 0 for M = [[a, b], [c, −a]], linear in (a, b, c)
    let [x0, x1] = x.to_pair();
    let [y0, y1] = y.to_pair();
    [&x0 * &y1 + &x1 * &y0, x1 * y1, -(x0 * y0)]
}

/// The unique involution exchanging the members of each given couple.
pub fn involution_from_params(
    chart: &AffineChart,
    p1: (&Param, &Param),
    p2: (&Param, &Param),
) -> Result<Involution> {
    let same = |a: (&Param, &Param), b: (&Param, &Param)| {
        (a.0 == b.0 && a.1 == b.1) || (a.0 == b.1 && a.1 == b.0)
    };
    if same(p1, p2) {
        return Err(Error::CoincidentPoints("both couples are the same unordered pair".into()));
    }
    if p1.0 == p1.1 && p2.0 == p2.1 {
        return Err(Error::NonGeneric(
            "two double couples leave the involution undetermined".into(),
        ));
    }
    if [p1.0, p1.1].iter().any(|p| *p == p2.0 || *p == p2.1) {
        return Err(Error::CoincidentPoints("a point belongs to both couples".into()));
    }
    let r1 = swap_row(p1.0, p1.1);
    let r2 = swap_row(p2.0, p2.1);
    let [a, b, c] = crate::projective::cross3(&r1, &r2);
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return Err(Error::NonGeneric("couples do not determine a unique involution".into()));
    }
    let m = [[a.clone(), b], [c, -a]];
    let map = LineMap::new(m, chart.clone(), chart.clone())
        .map_err(|_| Error::Degenerate("couples admit no involution".into()))?;
    Involution::new(map)
}

pub fn involution_from_pairs(
    chart: &AffineChart,
    p1: (&PPoint, &PPoint),
    p2: (&PPoint, &PPoint),
) -> Result<Involution> {
    let c = |p: &PPoint| chart.coordinate(p);
    let (a, b, x, y) = (c(p1.0)?, c(p1.1)?, c(p2.0)?, c(p2.1)?);
    involution_from_params(chart, (&a, &b), (&x, &y))
}

/// Image of a point of the involution's line. The partner of the point at
/// infinity is the souche.
pub fn partner(inv: &Involution, p: &PPoint) -> Result<PPoint> {
    inv.map.apply_point(p)
}

pub fn souche(inv: &Involution) -> PPoint {
    inv.chart().point(&inv.apply(&Param::Infinity))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Classification {
    /// Two real fixed points, finite ones ascending, the point at infinity last.
    Hyperbolic { fixed: [QParam; 2] },
    Elliptic,
}

impl Classification {
    pub fn is_hyperbolic(&self) -> bool {
        matches!(self, Classification::Hyperbolic { .. })
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Hyperbolic { fixed: [p, q] } => write!(f, "hyperbolic {{{p}, {q}}}"),
            Classification::Elliptic => write!(f, "elliptic"),
        }
    }
}

/// Solves `c·t² − 2a·t − b = 0` for the fixed points of `[[a, b], [c, −a]]`.
pub fn classify(inv: &Involution) -> Result<Classification> {
    let [[a, b], [c, _]] = inv.map.matrix();
    let disc = inv.discriminant();
    match disc.signum() {
        -1 => return Ok(Classification::Elliptic),
        0 => return Err(Error::Degenerate("zero discriminant: parabolic map".into())),
        _ => {}
    }
    if c.is_zero() {
        let t = (-b).checked_div(&(a * Rat::int(2)))?;
        return Ok(Classification::Hyperbolic {
            fixed: [QParam::Finite(QuadExt::rational(t)), QParam::Infinity],
        });
    }
    let s = quad_sqrt(&disc)?;
    let a = QuadExt::rational(a.clone());
    let c = QuadExt::rational(c.clone());
    let lo = a.checked_sub(&s)?.checked_div(&c)?;
    let hi = a.checked_add(&s)?.checked_div(&c)?;
    let fixed = if hi.checked_sub(&lo)?.signum() > 0 {
        [QParam::Finite(lo), QParam::Finite(hi)]
    } else {
        [QParam::Finite(hi), QParam::Finite(lo)]
    };
    Ok(Classification::Hyperbolic { fixed })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Arrangement {
    #[serde(rename = "mêlés")]
    Meles,
    #[serde(rename = "démêlés")]
    Demeles,
    #[serde(rename = "mixed")]
    Mixed,
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Arrangement::Meles => "mêlés",
            Arrangement::Demeles => "démêlés",
            Arrangement::Mixed => "mixed",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArrangementReport {
    pub arrangement: Arrangement,
    /// Set when one point is at infinity and was ordered after every finite point.
    pub infinity_beyond_both_ends: bool,
}

fn order(a: &Param, b: &Param) -> Ordering {
    match (a, b) {
        (Param::Finite(x), Param::Finite(y)) => x.cmp(y),
        (Param::Infinity, Param::Infinity) => Ordering::Equal,
        (Param::Infinity, _) => Ordering::Greater,
        (_, Param::Infinity) => Ordering::Less,
    }
}

fn strictly_between(x: &Param, lo: &Param, hi: &Param) -> bool {
    let (lo, hi) = if order(lo, hi) == Ordering::Greater { (hi, lo) } else { (lo, hi) };
    order(lo, x) == Ordering::Less && order(x, hi) == Ordering::Less
}

/// Two couples interleave when exactly one end of one lies strictly inside the other.
fn interleaved(p: &(Param, Param), q: &(Param, Param)) -> bool {
    let inside = [&q.0, &q.1]
        .into_iter()
        .filter(|x| strictly_between(x, &p.0, &p.1))
        .count();
    inside == 1
}

pub fn arrangement(nc: &NodeCouples) -> Result<ArrangementReport> {
    let ps = nc.params()?;
    let infinite = ps
        .iter()
        .filter(|(x, y)| x.is_infinite() || y.is_infinite())
        .count();
    let hits = [(0, 1), (0, 2), (1, 2)]
        .into_iter()
        .filter(|&(i, j)| interleaved(&ps[i], &ps[j]))
        .count();
    let arrangement = match hits {
        3 => Arrangement::Meles,
        0 => Arrangement::Demeles,
        _ => Arrangement::Mixed,
    };
    Ok(ArrangementReport {
        arrangement,
        infinity_beyond_both_ends: infinite > 0,
    })
}

/// Both readings of "the three couples are in involution".
#[derive(Clone, Debug, Serialize)]
pub struct Equivalence {
    /// The involution fixed by two couples exchanges the third.
    pub by_homography: bool,
    /// `None` when a point at infinity leaves the rectangle form undefined.
    pub by_rectangles: Option<bool>,
}

impl Equivalence {
    pub fn holds(&self) -> bool {
        self.by_homography && self.by_rectangles.unwrap_or(true)
    }

    pub fn consistent(&self) -> bool {
        self.by_rectangles.is_none_or(|r| r == self.by_homography)
    }
}

/// Builds the involution from couples 1 and 2 (or, when both are double,
/// from a double couple and couple 3) and tests the remaining couple.
pub fn equivalence_check(nc: &NodeCouples) -> Result<Equivalence> {
    let ps = nc.params()?;
    let double = |i: usize| ps[i].0 == ps[i].1;
    let (i, j, k) = if double(0) && double(1) { (0, 2, 1) } else { (0, 1, 2) };
    let inv = involution_from_params(
        &nc.chart,
        (&ps[i].0, &ps[i].1),
        (&ps[j].0, &ps[j].1),
    )?;
    let by_homography = inv.apply(&ps[k].0) == ps[k].1;
    let by_rectangles = match rectangle_identity_check(nc) {
        Ok(r) => Some(r.holds),
        Err(Error::PointAtInfinity(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(Equivalence {
        by_homography,
        by_rectangles,
    })
}

/// The involution of a set of couples, checked to exchange all three.
pub fn involution_of(nc: &NodeCouples) -> Result<Involution> {
    let ps = nc.params()?;
    let (i, j) = if ps[0].0 == ps[0].1 && ps[1].0 == ps[1].1 { (0, 2) } else { (0, 1) };
    involution_from_params(&nc.chart, (&ps[i].0, &ps[i].1), (&ps[j].0, &ps[j].1))
}
