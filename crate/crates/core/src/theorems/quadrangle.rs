//! The complete quadrangle cut by a transversal, and the conics through its
//! four bornes.

use serde::Serialize;
use serde_json::json;

use super::{cut, finite, line};
use crate::conics::{chord, Conic, Pencil};
use crate::error::{Error, Result};
use crate::involution::{classify, equivalence_check, involution_of, Classification, Involution, NodeCouples};
use crate::menelaus::{replay_quadrangle_proof, Figure, Ratio};
use crate::projective::{
    collinear, cross3, direction, perspective_map, AffineChart, LineMap, PPoint, Param, QParam,
};
use crate::report::TheoremReport;
use crate::scalar::{quad_sqrt, QuadExt, Rat};

/// Bornes `B, C, D, E` and a transversal Δ. The bornales pair up as
/// `(BC, ED)`, `(BE, DC)`, `(BD, CE)`, meeting in `N`, `F`, `R`, and cut Δ
/// in the couples `(I, K)`, `(P, Q)`, `(G, H)`.
#[derive(Clone, Debug, Serialize)]
pub struct QuadrangleConfig {
    pub bornes: [PPoint; 4],
    pub transversal: AffineChart,
    pub n: PPoint,
    pub f: PPoint,
    pub r: PPoint,
    pub i: PPoint,
    pub k: PPoint,
    pub p: PPoint,
    pub q: PPoint,
    pub g: PPoint,
    pub h: PPoint,
}

impl QuadrangleConfig {
    /// Generic configuration: Δ parallel to no bornale, so all six cuts
    /// are finite.
    pub fn new(bornes: [PPoint; 4], transversal: AffineChart) -> Result<Self> {
        Self::build(bornes, transversal, true)
    }

    /// Δ may be parallel to bornales; the matching cuts are points at
    /// infinity. Metric replays need [`QuadrangleConfig::new`].
    pub fn projective(bornes: [PPoint; 4], transversal: AffineChart) -> Result<Self> {
        Self::build(bornes, transversal, false)
    }

    fn build(bornes: [PPoint; 4], transversal: AffineChart, strict: bool) -> Result<Self> {
        let names = ["B", "C", "D", "E"];
        for i in 0..4 {
            if !bornes[i].is_finite() {
                return Err(Error::PointAtInfinity(format!("borne {}", names[i])));
            }
            for j in i + 1..4 {
                for k in j + 1..4 {
                    if collinear(&bornes[i], &bornes[j], &bornes[k]) {
                        return Err(Error::Degenerate(format!(
                            "bornes {}, {}, {} are collinear",
                            names[i], names[j], names[k]
                        )));
                    }
                }
            }
        }
        let [b, c, d, e] = &bornes;
        let bornales = [
            ("BC", line(b, c, "BC")?),
            ("ED", line(e, d, "ED")?),
            ("BE", line(b, e, "BE")?),
            ("DC", line(d, c, "DC")?),
            ("BD", line(b, d, "BD")?),
            ("CE", line(c, e, "CE")?),
        ];
        let n = cut(&bornales[0].1, &bornales[1].1, "N")?;
        let f = cut(&bornales[2].1, &bornales[3].1, "F")?;
        let r = cut(&bornales[4].1, &bornales[5].1, "R")?;
        let delta = &transversal.line;
        for (p, name) in bornes.iter().zip(names).chain([(&n, "N"), (&f, "F"), (&r, "R")]) {
            if p.lies_on(delta) {
                return Err(Error::NonGeneric(format!("transversal passes through {name}")));
            }
        }
        let mut cuts = Vec::with_capacity(6);
        for (name, l) in &bornales {
            let x = cut(l, delta, name)?;
            if strict && !x.is_finite() {
                return Err(Error::NonGeneric(format!("transversal is parallel to {name}")));
            }
            cuts.push(x);
        }
        let [i, k, p, q, g, h] = <[PPoint; 6]>::try_from(cuts).expect("six bornales");
        Ok(QuadrangleConfig { bornes, transversal, n, f, r, i, k, p, q, g, h })
    }

    pub fn couples(&self) -> Result<NodeCouples> {
        NodeCouples::new(
            self.transversal.clone(),
            [
                (self.i.clone(), self.k.clone()),
                (self.p.clone(), self.q.clone()),
                (self.g.clone(), self.h.clone()),
            ],
        )
    }

    pub fn pencil(&self) -> Result<Pencil> {
        Pencil::new(self.bornes.clone())
    }

    pub fn figure(&self) -> Figure {
        let mut fig = Figure::new();
        let [b, c, d, e] = &self.bornes;
        let named = [
            ("B", b), ("C", c), ("D", d), ("E", e), ("N", &self.n), ("F", &self.f), ("R", &self.r),
            ("I", &self.i), ("K", &self.k), ("P", &self.p), ("Q", &self.q), ("G", &self.g), ("H", &self.h),
        ];
        for (name, p) in named {
            fig.add(name, p.clone());
        }
        fig
    }

    fn param(&self, p: &PPoint) -> Result<Param> {
        self.transversal.coordinate(p)
    }
}

/// The six cuts are three couples of one involution. The Menelaus replay
/// pivots on `F` and is attached when `F` is finite.
pub fn quadrangle_involution(q: &QuadrangleConfig) -> Result<(Involution, TheoremReport)> {
    let mut r = TheoremReport::new("quadrangle", serde_json::to_value(q).expect("serializable"));
    let nc = q.couples()?;
    let eq = equivalence_check(&nc)?;
    r.fact("(I,K), (P,Q), (G,H) exchanged by one involution", eq.by_homography);
    if let Some(rect) = eq.by_rectangles {
        r.fact("rectangle identities", rect);
    }
    let inv = involution_of(&nc)?;
    if q.f.is_finite() {
        let fig = q.figure();
        let trace = replay_quadrangle_proof(&fig)?;
        r.eq(
            "QI·QK/(PI·PK) = QG·QH/(PG·PH)",
            &fig.rect_ratio(["Q", "I", "K"], ["P", "I", "K"])?,
            &fig.rect_ratio(["Q", "G", "H"], ["P", "G", "H"])?,
        );
        r.attach(trace);
    }
    Ok((inv, r))
}

/// Three perspectives `Δ → CD` from `E`, `CD → BE` from `G`, `BE → Δ` from
/// `C`. Their composite sends `G ↦ H`, `K ↦ I` and swaps `P, Q`; since
/// `P ≠ Q` it is an involution, the quadrangle's.
pub fn desargues_involution_by_perspectives(q: &QuadrangleConfig) -> Result<(Involution, TheoremReport)> {
    let mut r = TheoremReport::new("perspectives", serde_json::to_value(q).expect("serializable"));
    let [b, c, d, e] = &q.bornes;
    let delta = &q.transversal;
    let cd = AffineChart::on_line(&line(c, d, "CD")?)?;
    let be = AffineChart::on_line(&line(b, e, "BE")?)?;
    let first = perspective_map(e, delta, &cd)?;
    let second = perspective_map(&q.g, &cd, &be)?;
    let third = perspective_map(c, &be, delta)?;
    let phi = third.after(&second.after(&first)?)?;
    let twice = phi.after(&phi)?;
    r.fact("composite applied twice is the identity", twice.is_identity());
    for (x, y, label) in [(&q.g, &q.h, "G ↦ H"), (&q.k, &q.i, "K ↦ I"), (&q.p, &q.q, "P ↦ Q"), (&q.q, &q.p, "Q ↦ P")] {
        r.eq(label, &phi.apply_point(x)?, y);
    }
    r.fact("P ≠ Q", q.p != q.q);
    let inv = Involution::new(phi)?;
    let (quad, _) = quadrangle_involution(q)?;
    r.eq("same matrix as the quadrangle involution", inv.map(), quad.map());
    Ok((inv, r))
}

/// Second point where the line through `p` (on the conic) and `x` meets it:
/// `Q(x)·p − 2B(p, x)·x`.
fn second_point(conic: &Conic, p: &PPoint, x: &PPoint) -> Result<PPoint> {
    let (pc, xc) = (p.coords(), x.coords());
    let qx = conic.bilinear(xc, xc);
    let bpx = conic.bilinear(pc, xc) * Rat::int(2);
    PPoint::from_coords(std::array::from_fn(|i| &qx * &pc[i] - &bpx * &xc[i]))
        .map_err(|_| Error::NonGeneric(format!("line through {x} is tangent at the borne or a component")))
}

/// `x ↦ qy ∩ Δ` where `y` is the second point of line `px` on the member,
/// with `p = B`, `q = C`. When `y = q` the tangent at `q` stands in for `qy`.
fn sigma_point(q: &QuadrangleConfig, member: &Conic, x: &PPoint) -> Result<PPoint> {
    let [bp, cq, ..] = &q.bornes;
    let y = second_point(member, bp, x)?;
    let through = if y == *cq { member.polar(cq)? } else { line(cq, &y, "qy")? };
    cut(&through, &q.transversal.line, "σ(x)")
}

/// σ as a homography of Δ, fitted on three rational sample points. Only
/// defined for nondegenerate members.
pub fn sigma_map(q: &QuadrangleConfig, member: &Conic) -> Result<LineMap> {
    if member.is_degenerate() {
        return Err(Error::Degenerate("σ needs a nondegenerate member".into()));
    }
    let chart = &q.transversal;
    let mut from = Vec::new();
    let mut to = Vec::new();
    for t in (0..12).map(|k| Param::Finite(Rat::int(k) - Rat::int(5))) {
        if from.len() == 3 {
            break;
        }
        if let Ok(img) = sigma_point(q, member, &chart.point(&t)).and_then(|p| chart.coordinate(&p)) {
            if !to.contains(&img) {
                from.push(t);
                to.push(img);
            }
        }
    }
    if from.len() < 3 {
        return Err(Error::NonGeneric("σ could not be sampled".into()));
    }
    LineMap::from_three(chart, [&from[0], &from[1], &from[2]], chart, [&to[0], &to[1], &to[2]])
}

fn swap_row_q(x: &QParam, y: &QParam) -> Result<[Rat; 3]> {
    let irr = |what: &str| Error::Irrational {
        discriminant: "0".into(),
        context: format!("{what} of a chord pair is irrational"),
    };
    match (x, y) {
        (QParam::Finite(a), QParam::Finite(b)) => {
            let s = a.checked_add(b)?.to_rat().ok_or_else(|| irr("sum"))?;
            let p = a.checked_mul(b)?.to_rat().ok_or_else(|| irr("product"))?;
            Ok([s, Rat::one(), -p])
        }
        (QParam::Infinity, QParam::Finite(a)) | (QParam::Finite(a), QParam::Infinity) => {
            Ok([Rat::one(), Rat::zero(), -a.to_rat().ok_or_else(|| irr("point"))?])
        }
        (QParam::Infinity, QParam::Infinity) => Ok([Rat::zero(), Rat::zero(), -Rat::one()]),
    }
}

/// The involution exchanging two couples given over `Q(√d)`; each couple is
/// a rational point pair or a conjugate pair, so the result is rational.
fn involution_from_qpairs(chart: &AffineChart, a: (&QParam, &QParam), b: (&QParam, &QParam)) -> Result<Involution> {
    let [x, y, z] = cross3(&swap_row_q(a.0, a.1)?, &swap_row_q(b.0, b.1)?);
    let map = LineMap::new([[x.clone(), y], [z, -x]], chart.clone(), chart.clone())
        .map_err(|_| Error::Degenerate("couples admit no involution".into()))?;
    Involution::new(map)
}

fn pair_matches(pts: &[PPoint], x: &PPoint, y: &PPoint) -> bool {
    pts.len() == 2 && ((pts[0] == *x && pts[1] == *y) || (pts[0] == *y && pts[1] == *x))
}

/// The chord a pencil member cuts on Δ is swapped by the quadrangle
/// involution; a tangency point is one of its fixed points. For a
/// nondegenerate member the involution is rebuilt as `η ∘ σ`, with σ
/// sending `G ↦ Q`, `P ↦ H` and fixing the chord ends.
pub fn pencil_involution_check(q: &QuadrangleConfig, member: &Conic) -> Result<TheoremReport> {
    let inputs = json!({ "quadrangle": q, "member": member });
    let mut r = TheoremReport::new("pencil", inputs);
    for (p, name) in q.bornes.iter().zip(["B", "C", "D", "E"]) {
        if !member.contains(p) {
            return Err(Error::Precondition(format!("member misses borne {name}")));
        }
    }
    let inv = involution_of(&q.couples()?)?;
    let map = inv.map();
    let ch = chord(member, &q.transversal)?;
    match ch.params.as_slice() {
        [] => {
            r.fact("Δ misses the member (no real chord)", ch.discriminant.is_negative());
            return Ok(r);
        }
        [l] => {
            r.eq("tangency point is fixed", &map.apply_quad(l)?, l);
            if let Classification::Hyperbolic { fixed } = classify(&inv)? {
                r.fact("tangency point is one of the fixed points", fixed.contains(l));
            }
        }
        [l, m] => {
            r.eq("partner(L) = M", &map.apply_quad(l)?, m);
            r.eq("partner(M) = L", &map.apply_quad(m)?, l);
        }
        _ => unreachable!("a quadratic has at most two roots"),
    }
    if member.is_degenerate() {
        if let Some(pts) = ch.rational_points() {
            let hit = pair_matches(&pts, &q.i, &q.k) || pair_matches(&pts, &q.p, &q.q) || pair_matches(&pts, &q.g, &q.h);
            r.fact("line pair cuts Δ in a quadrangle couple", hit);
        }
        return Ok(r);
    }

    let sigma = sigma_map(q, member)?;
    let (ga, pc) = (q.param(&q.g)?, q.param(&q.p)?);
    // with c = qs ∩ Δ = Q and c' = pr ∩ Δ = P in the p, q, r, s = B, C, E, D lettering
    r.eq("σ(a) = c: σ(G) = Q", &sigma.apply(&ga), &q.param(&q.q)?);
    r.eq("σ(c') = a': σ(P) = H", &sigma.apply(&pc), &q.param(&q.h)?);
    let ends = ch.params.clone();
    for (x, label) in ends.iter().zip(["σ fixes L", "σ fixes M"]) {
        r.eq(label, &sigma.apply_quad(x)?, x);
    }
    let (l, m) = (&ends[0], ends.last().expect("nonempty"));
    let qq = QParam::from(&q.param(&q.q)?);
    let hh = QParam::from(&q.param(&q.h)?);
    let eta = involution_from_qpairs(&q.transversal, (&qq, &hh), (l, m))?;
    let phi = eta.map().after(&sigma)?;
    r.eq("η∘σ is the quadrangle involution", &phi, map);
    Ok(r)
}

/// Members tangent to Δ: roots `(λ : μ)` of the binary quadratic
/// `A·λ² + 2B·λμ + C·μ²` (the chord discriminant of `λ·gen1 + μ·gen2`).
#[derive(Clone, Debug, Serialize)]
pub struct TangentMembers {
    pub form: [Rat; 3],
    /// `B² − A·C`: positive iff two real tangent members exist.
    pub discriminant: Rat,
    /// Tangency points on Δ, in chart parameters.
    pub points: Vec<QParam>,
}

pub fn tangent_members(q: &QuadrangleConfig) -> Result<TangentMembers> {
    let pencil = q.pencil()?;
    let chart = &q.transversal;
    let (ox, oy) = chart.origin.affine_or_err("chart origin")?;
    let o = [ox, oy, Rat::one()];
    let (ux, uy) = direction(&chart.origin, &chart.unit)?;
    let v = [ux, uy, Rat::zero()];
    let coeffs = |c: &Conic| (c.bilinear(&v, &v), c.bilinear(&o, &v), c.bilinear(&o, &o));
    let (a1, b1, k1) = coeffs(&pencil.gen1);
    let (a2, b2, k2) = coeffs(&pencil.gen2);
    let fa = b1.square() - &a1 * &k1;
    let fc = b2.square() - &a2 * &k2;
    let fb = &b1 * &b2 - (&a1 * &k2 + &a2 * &k1) * Rat::frac(1, 2);
    let disc = fb.square() - &fa * &fc;
    let mut points = Vec::new();
    if disc.is_positive() {
        if fa.is_zero() {
            return Err(Error::NonGeneric("transversal passes through N".into()));
        }
        let s = quad_sqrt(&disc)?;
        let r = |x: &Rat| QuadExt::rational(x.clone());
        for root in [r(&-&fb).checked_sub(&s)?, r(&-&fb).checked_add(&s)?] {
            // λ = root, μ = A; tangency at t = −b(λ, μ)/a(λ, μ)
            let b = root.scale(&b1).checked_add(&r(&(&fa * &b2)))?;
            let a = root.scale(&a1).checked_add(&r(&(&fa * &a2)))?;
            points.push(if a.is_zero() {
                QParam::Infinity
            } else {
                QParam::Finite(b.checked_div(&a)?.scale(&-Rat::one()))
            });
        }
    }
    Ok(TangentMembers { form: [fa, fb, fc], discriminant: disc, points })
}

/// With `BC ∥ ED` the three trapezoid readings hold as Thales identities,
/// in signed rectangles.
pub fn parallel_bornales_identities(q: &QuadrangleConfig) -> Result<TheoremReport> {
    if q.n.is_finite() {
        return Err(Error::Precondition("bornales BC and ED are not parallel".into()));
    }
    finite(&q.f, "F")?;
    let mut r = TheoremReport::new("parallel-bornales", serde_json::to_value(q).expect("serializable"));
    let fig = q.figure();
    let ident = |r: &mut TheoremReport, label: &str, l: ([&str; 3], [&str; 3]), rr: ([&str; 3], [&str; 3])| -> Result<()> {
        r.eq(label, &fig.rect_ratio(l.0, l.1)?, &fig.rect_ratio(rr.0, rr.1)?);
        Ok(())
    };
    ident(
        &mut r,
        "IC·IB/(KD·KE) = IQ·IP/(KQ·KP)",
        (["I", "C", "B"], ["K", "D", "E"]),
        (["I", "Q", "P"], ["K", "Q", "P"]),
    )?;
    ident(
        &mut r,
        "CI·CB/(DK·DE) = CQ·CF/(DQ·DF)",
        (["C", "I", "B"], ["D", "K", "E"]),
        (["C", "Q", "F"], ["D", "Q", "F"]),
    )?;
    ident(
        &mut r,
        "BI·BC/(EK·ED) = BF·BP/(EF·EP)",
        (["B", "I", "C"], ["E", "K", "D"]),
        (["B", "F", "P"], ["E", "F", "P"]),
    )?;
    // IC/KD on parallel lines, as a signed scale factor
    let (ic, kd) = (direction(&q.i, &q.bornes[1])?, direction(&q.k, &q.bornes[2])?);
    let lhs = (&ic.0 * &kd.0 + &ic.1 * &kd.1).checked_div(&(kd.0.square() + kd.1.square()))?;
    r.eq("IC/KD = IQ/KQ", &lhs, &Ratio::new(&q.q, &q.i, &q.k)?.value());
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conics::pencil_member;
    use crate::menelaus::StepKind;

    fn rq(s: &str) -> Rat {
        Rat::parse(s).unwrap()
    }

    fn square() -> QuadrangleConfig {
        // bornes (±1, ±1) in cyclic order, Δ: y = x/3 + 1/5
        let bornes = [PPoint::xy(1, 1), PPoint::xy(-1, 1), PPoint::xy(-1, -1), PPoint::xy(1, -1)];
        let delta = AffineChart::new(PPoint::affine(rq("0"), rq("1/5")), PPoint::affine(rq("3"), rq("6/5"))).unwrap();
        QuadrangleConfig::new(bornes, delta).unwrap()
    }

    #[test]
    fn square_instance_by_hand() {
        let q = square();
        // oracle: y = x/3 + 1/5 against each bornale, solved by hand
        assert_eq!(q.i, PPoint::affine(rq("12/5"), rq("1"))); // BC: y = 1
        assert_eq!(q.k, PPoint::affine(rq("-18/5"), rq("-1"))); // ED: y = −1
        assert_eq!(q.p, PPoint::affine(rq("1"), rq("8/15"))); // BE: x = 1
        assert_eq!(q.q, PPoint::affine(rq("-1"), rq("-2/15"))); // DC: x = −1
        assert_eq!(q.g, PPoint::affine(rq("3/10"), rq("3/10"))); // BD: y = x
        assert_eq!(q.h, PPoint::affine(rq("-3/20"), rq("3/20"))); // CE: y = −x
        // F is at infinity for the square, so no replay
        let (_, r) = quadrangle_involution(&q).unwrap();
        assert!(r.verdict && r.trace.is_none());
        let (_, rp) = desargues_involution_by_perspectives(&q).unwrap();
        assert!(rp.verdict, "{rp:#?}");
    }

    fn kite() -> QuadrangleConfig {
        let bornes = [PPoint::xy(0, 0), PPoint::xy(4, 1), PPoint::xy(5, 5), PPoint::xy(1, 3)];
        let delta = AffineChart::new(PPoint::affine(rq("0"), rq("-7/2")), PPoint::xy(1, -2)).unwrap();
        QuadrangleConfig::new(bornes, delta).unwrap()
    }

    #[test]
    fn replay_attached() {
        let q = kite();
        let (inv, r) = quadrangle_involution(&q).unwrap();
        assert!(r.verdict, "{r:#?}");
        let t = r.trace.unwrap();
        assert_eq!(t.count(StepKind::Menelaus), 4);
        let (inv2, rp) = desargues_involution_by_perspectives(&q).unwrap();
        assert!(rp.verdict);
        assert_eq!(inv.map(), inv2.map());
    }

    #[test]
    fn transversal_through_f_rejected() {
        let bornes = [PPoint::xy(0, 0), PPoint::xy(4, 1), PPoint::xy(5, 5), PPoint::xy(1, 3)];
        let probe = QuadrangleConfig::new(bornes.clone(), kite().transversal).unwrap();
        let through_f = AffineChart::new(probe.f.clone(), PPoint::xy(7, -3)).unwrap();
        assert!(matches!(QuadrangleConfig::new(bornes, through_f), Err(Error::NonGeneric(_))));
    }

    #[test]
    fn unit_circle_pencil() {
        let bornes = [PPoint::xy(1, 0), PPoint::xy(0, 1), PPoint::xy(-1, 0), PPoint::xy(0, -1)];
        let (a, b) = (PPoint::affine(rq("3/5"), rq("4/5")), PPoint::affine(rq("-3/5"), rq("4/5")));
        let delta = AffineChart::new(a, b).unwrap();
        // Δ is parallel to BD, so G is at infinity
        let q = QuadrangleConfig::projective(bornes, delta).unwrap();
        assert!(!q.g.is_finite());
        let r = pencil_involution_check(&q, &Conic::unit_circle()).unwrap();
        assert!(r.verdict, "{r:#?}");
        assert!(r.claim("σ(a) = c: σ(G) = Q").unwrap().equal);
        // the degenerate members reproduce the couples
        for m in q.pencil().unwrap().degenerate_members().unwrap() {
            let r = pencil_involution_check(&q, &m).unwrap();
            assert!(r.verdict);
            assert!(r.claim("line pair cuts Δ in a quadrangle couple").unwrap().equal);
        }
    }

    #[test]
    fn irrational_chord_and_tangent_member() {
        let q = kite();
        let pencil = q.pencil().unwrap();
        let member = pencil_member(&pencil, &PPoint::xy(3, -2)).unwrap();
        let r = pencil_involution_check(&q, &member).unwrap();
        assert!(r.verdict, "{r:#?}");

        // Δ tangent to the member through T
        let t = PPoint::xy(2, 7);
        let member = pencil_member(&pencil, &t).unwrap();
        let tangent = member.polar(&t).unwrap();
        let qt = QuadrangleConfig::new(q.bornes.clone(), AffineChart::on_line(&tangent).unwrap()).unwrap();
        let r = pencil_involution_check(&qt, &member).unwrap();
        assert!(r.verdict, "{r:#?}");
        assert!(r.claim("tangency point is fixed").is_some());
    }

    #[test]
    fn tangent_members_match_classification() {
        let q = kite();
        let tm = tangent_members(&q).unwrap();
        let inv = involution_of(&q.couples().unwrap()).unwrap();
        let c = classify(&inv).unwrap();
        assert_eq!(tm.discriminant.is_positive(), c.is_hyperbolic());
        if let Classification::Hyperbolic { fixed } = c {
            for p in &tm.points {
                assert!(fixed.contains(p));
            }
        }
    }

    #[test]
    fn trapezoid() {
        let bornes = [PPoint::xy(0, 0), PPoint::xy(6, 0), PPoint::xy(4, 3), PPoint::xy(1, 3)];
        let delta = AffineChart::new(PPoint::xy(-2, 1), PPoint::affine(rq("7"), rq("5/2"))).unwrap();
        let q = QuadrangleConfig::new(bornes, delta).unwrap();
        let r = parallel_bornales_identities(&q).unwrap();
        assert!(r.verdict, "{r:#?}");
        assert!(parallel_bornales_identities(&kite()).is_err());
    }
}
